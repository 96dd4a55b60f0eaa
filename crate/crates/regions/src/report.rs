//! Structured report documents and the cross-check report tying together
//! simpliciality, the lattice properties, bounded property-D scans, and the
//! retraction evidence.

use serde::Serialize;

use crate::arrangement::{Arrangement, Mode};
use crate::chambers::{is_simplicial_arrangement, is_simplicial_chamber, ChamberId, Chambers};
use crate::complex::{
    contractibility_report, BoundedCoverComplex, ContractibilityReport, ContractibilityVerdict,
    RetractionStep,
};
use crate::error::Result;
use crate::graph::ArrangementGraph;
use crate::paths::PathSpace;
use crate::poset::{lattice_properties, NonLatticeWitness, RegionPoset};
use crate::property_d::{
    build_counterexample_path, verify_property_d_bounded, BoundedPropertyD, BoundedVerdict,
    Counterexample,
};

fn tope(ch: &Chambers, id: ChamberId) -> String {
    ch.tope(id).to_string()
}

fn topes(ch: &Chambers, ids: &[ChamberId]) -> Vec<String> {
    ids.iter().map(|&c| tope(ch, c)).collect()
}

#[derive(Serialize, Clone, Debug)]
pub struct ChambersDoc {
    pub mode: String,
    pub elements: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    pub count: usize,
    pub chambers: Vec<String>,
}

pub fn chambers_doc(arr: &Arrangement, ch: &Chambers) -> ChambersDoc {
    ChambersDoc {
        mode: match arr.mode() {
            Mode::Geometric => "geometric".into(),
            Mode::TopeOnly => "tope-only".into(),
        },
        elements: arr.n(),
        dimension: arr.dimension(),
        rank: arr.rank(),
        count: ch.len(),
        chambers: ch.tope_strings(),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub directed_edges: usize,
    pub edges: Vec<[String; 2]>,
}

pub fn graph_doc(ch: &Chambers, g: &ArrangementGraph) -> GraphDoc {
    GraphDoc {
        vertices: ch.tope_strings(),
        directed_edges: g.directed_edge_count(),
        edges: g
            .undirected_edges()
            .iter()
            .map(|&(a, b)| [tope(ch, a), tope(ch, b)])
            .collect(),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct PosetDoc {
    pub base: String,
    pub elements: Vec<String>,
    pub ranks: Vec<usize>,
    pub covers: Vec<[String; 2]>,
}

pub fn poset_doc(p: &RegionPoset<'_>) -> PosetDoc {
    let ch = p.chambers();
    PosetDoc {
        base: tope(ch, p.base()),
        elements: ch.tope_strings(),
        ranks: (0..ch.len()).map(|c| p.rank_of(c)).collect(),
        covers: p
            .cover_pairs()
            .iter()
            .map(|&(a, b)| [tope(ch, a), tope(ch, b)])
            .collect(),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct WitnessDoc {
    pub base: String,
    pub c: String,
    pub a: String,
    pub b: String,
    pub minimal_upper_bounds: Vec<String>,
}

pub fn witness_doc(ch: &Chambers, w: &NonLatticeWitness) -> WitnessDoc {
    WitnessDoc {
        base: tope(ch, w.base),
        c: tope(ch, w.c),
        a: tope(ch, w.a),
        b: tope(ch, w.b),
        minimal_upper_bounds: topes(ch, &w.minimal_upper_bounds),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct LatticeBaseDoc {
    pub base: String,
    pub is_lattice: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

#[derive(Serialize, Clone, Debug)]
pub struct LatticeDoc {
    pub strong: bool,
    pub weak: bool,
    pub lattice_bases: Vec<String>,
    pub per_base: Vec<LatticeBaseDoc>,
}

pub fn lattice_doc(ch: &Chambers) -> Result<LatticeDoc> {
    let props = lattice_properties(ch)?;
    let mut per_base = Vec::with_capacity(ch.len());
    for base in 0..ch.len() {
        let p = RegionPoset::build(ch, base)?;
        let witness = p.find_non_lattice_witness()?;
        per_base.push(LatticeBaseDoc {
            base: tope(ch, base),
            is_lattice: witness.is_none(),
            witness: witness.map(|w| witness_doc(ch, &w)),
        });
    }
    Ok(LatticeDoc {
        strong: props.strong,
        weak: props.weak,
        lattice_bases: topes(ch, &props.lattice_bases),
        per_base,
    })
}

#[derive(Serialize, Clone, Debug)]
pub struct ChamberSimplicialityDoc {
    pub tope: String,
    pub walls: usize,
    pub simplicial: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct SimplicialDoc {
    pub rank: usize,
    pub dimension: usize,
    pub simplicial: bool,
    pub chambers: Vec<ChamberSimplicialityDoc>,
}

pub fn simplicial_doc(arr: &Arrangement, ch: &Chambers) -> Result<SimplicialDoc> {
    let simplicial = is_simplicial_arrangement(arr, ch)?;
    let mut chambers = Vec::with_capacity(ch.len());
    for id in 0..ch.len() {
        chambers.push(ChamberSimplicialityDoc {
            tope: tope(ch, id),
            walls: ch.walls(id).len(),
            simplicial: is_simplicial_chamber(arr, ch, id)?,
        });
    }
    Ok(SimplicialDoc {
        rank: arr.rank().unwrap(),
        dimension: arr.dimension().unwrap(),
        simplicial,
        chambers,
    })
}

#[derive(Serialize, Clone, Debug)]
pub struct ViolationDoc {
    pub path: Vec<String>,
    pub e: Vec<String>,
    pub maximal_elements: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct PropertyDDoc {
    pub base: String,
    pub max_length: usize,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<ViolationDoc>,
}

pub fn property_d_doc(ch: &Chambers, report: &BoundedPropertyD) -> PropertyDDoc {
    PropertyDDoc {
        base: tope(ch, report.base),
        max_length: report.max_length,
        verdict: match report.verdict {
            BoundedVerdict::VerifiedToBound => "verified-to-bound".into(),
            BoundedVerdict::Violated => "violated".into(),
        },
        violation: report.violation.as_ref().map(|v| ViolationDoc {
            path: v
                .class
                .representative()
                .iter()
                .map(|&c| tope(ch, c))
                .collect(),
            e: topes(ch, &v.e),
            maximal_elements: topes(ch, &v.maximal_elements),
        }),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct CounterexampleDoc {
    pub witness: WitnessDoc,
    pub minimal_upper_bound: String,
    pub path: Vec<String>,
    pub e: Vec<String>,
    pub maximal_elements: Vec<String>,
    pub a_in_e: bool,
    pub b_in_e: bool,
    pub no_common_dominator: bool,
}

pub fn counterexample_doc(
    ch: &Chambers,
    w: &NonLatticeWitness,
    cex: &Counterexample,
) -> CounterexampleDoc {
    CounterexampleDoc {
        witness: witness_doc(ch, w),
        minimal_upper_bound: tope(ch, cex.m),
        path: cex
            .class
            .representative()
            .iter()
            .map(|&c| tope(ch, c))
            .collect(),
        e: topes(ch, &cex.e),
        maximal_elements: topes(ch, &cex.maximal_elements),
        a_in_e: cex.e.contains(&cex.a),
        b_in_e: cex.e.contains(&cex.b),
        // verified during construction; violations surface as errors there
        no_common_dominator: true,
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ComplexDoc {
    pub base: String,
    pub depth: usize,
    pub vertices: usize,
    pub facet_count: usize,
    pub facets: Vec<Vec<String>>,
    pub euler: i64,
}

pub fn complex_doc(cx: &BoundedCoverComplex<'_, '_>) -> ComplexDoc {
    ComplexDoc {
        base: tope(cx.chambers(), cx.base()),
        depth: cx.depth(),
        vertices: cx.vertex_count(),
        facet_count: cx.facets().len(),
        facets: cx
            .facets()
            .iter()
            .map(|f| f.iter().map(|&v| cx.vertex_label(v)).collect())
            .collect(),
        euler: cx.euler_characteristic(),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct StepDoc {
    pub vertex: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_gamma: Option<String>,
    pub link_matches_interval: bool,
    pub link_is_cone: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

fn step_docs(ch: &Chambers, step: &RetractionStep) -> Vec<StepDoc> {
    step.checks
        .iter()
        .map(|c| StepDoc {
            vertex: c.label.clone(),
            c_gamma: c.c_gamma.map(|g| tope(ch, g)),
            link_matches_interval: c.link_matches_interval,
            link_is_cone: c.link_is_cone,
            pass: c.pass,
            failure: c.failure.clone(),
        })
        .collect()
}

#[derive(Serialize, Clone, Debug)]
pub struct DepthDoc {
    pub depth: usize,
    pub vertices: usize,
    pub facets: usize,
    pub euler: i64,
    pub betti0_reduced: usize,
    pub betti1: usize,
    pub all_pass: bool,
    pub steps: Vec<StepDoc>,
}

#[derive(Serialize, Clone, Debug)]
pub struct BlockedDoc {
    pub depth: usize,
    pub vertex: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct RetractionDoc {
    pub base: String,
    pub max_depth: usize,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocked: Option<BlockedDoc>,
    /// What a green verdict certifies.
    pub scope: String,
    pub depths: Vec<DepthDoc>,
}

pub fn retraction_doc(ch: &Chambers, report: &ContractibilityReport) -> RetractionDoc {
    RetractionDoc {
        base: tope(ch, report.base),
        max_depth: report.m_max,
        verdict: match &report.verdict {
            ContractibilityVerdict::CollapsesToPoint => "collapses-to-a-point".into(),
            ContractibilityVerdict::Blocked { .. } => "blocked".into(),
        },
        blocked: match &report.verdict {
            ContractibilityVerdict::CollapsesToPoint => None,
            ContractibilityVerdict::Blocked {
                depth,
                vertex_label,
            } => Some(BlockedDoc {
                depth: *depth,
                vertex: vertex_label.clone(),
            }),
        },
        scope: "combinatorial collapse certificate for the bounded complex; \
                topological consequences are outside the verifier"
            .into(),
        depths: report
            .depths
            .iter()
            .map(|d| DepthDoc {
                depth: d.depth,
                vertices: d.vertex_count,
                facets: d.facet_count,
                euler: d.euler,
                betti0_reduced: d.betti0_reduced,
                betti1: d.betti1,
                all_pass: d.step.all_pass,
                steps: step_docs(ch, &d.step),
            })
            .collect(),
    }
}

/// A known boolean or an explanation of why the test does not apply.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum TriState {
    Known(bool),
    Unavailable(String),
}

#[derive(Serialize, Clone, Debug)]
pub struct RetractionSummaryDoc {
    pub base: String,
    pub max_depth: usize,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocked: Option<BlockedDoc>,
}

/// The combined report: simpliciality, lattice properties, bounded
/// property-D verdicts per base, the constructed counterexample when the
/// strong lattice property fails, and the retraction summary, with the
/// pairwise consistency of the verdicts checked explicitly.
#[derive(Serialize, Clone, Debug)]
pub struct ConsistencyDoc {
    pub mode: String,
    pub elements: usize,
    pub chamber_count: usize,
    pub simplicial: TriState,
    pub strong_lattice: bool,
    pub weak_lattice: bool,
    pub lattice_bases: Vec<String>,
    pub property_d: Vec<PropertyDDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CounterexampleDoc>,
    pub retraction: Vec<RetractionSummaryDoc>,
    pub consistency: String,
}

impl ConsistencyDoc {
    pub fn is_consistent(&self) -> bool {
        self.consistency == "ok"
    }
}

/// Builds the combined report over the given bases.
pub fn consistency_report(
    arr: &Arrangement,
    ch: &Chambers,
    bases: &[ChamberId],
    max_length: usize,
    depth: usize,
) -> Result<ConsistencyDoc> {
    let simplicial = match (arr.mode(), arr.is_essential()) {
        (Mode::TopeOnly, _) => TriState::Unavailable("n/a (tope mode)".into()),
        (Mode::Geometric, Some(false)) => {
            TriState::Unavailable("n/a (not essential; re-run with --essentialize)".into())
        }
        (Mode::Geometric, _) => TriState::Known(is_simplicial_arrangement(arr, ch)?),
    };
    let props = lattice_properties(ch)?;
    let space = PathSpace::new(ch);

    let mut property_d = Vec::new();
    for &base in bases {
        let scan = verify_property_d_bounded(&space, base, max_length)?;
        property_d.push(property_d_doc(ch, &scan));
    }

    // counterexample from the first non-lattice base, plus a bounded scan
    // from the start of the constructed path, which must rediscover a
    // violation whenever the bound covers it
    let mut witness = None;
    let mut confirmation: Option<BoundedPropertyD> = None;
    if !props.strong {
        let bad_base = (0..ch.len())
            .find(|b| !props.lattice_bases.contains(b))
            .expect("a non-lattice base exists when the strong property fails");
        let poset = RegionPoset::build(ch, bad_base)?;
        let w = poset
            .find_non_lattice_witness()?
            .expect("non-lattice poset yields a witness");
        let cex = build_counterexample_path(&space, &w)?;
        let scan =
            verify_property_d_bounded(&space, cex.class.start(), max_length.max(cex.class.len()))?;
        confirmation = Some(scan);
        witness = Some(counterexample_doc(ch, &w, &cex));
    }

    let mut retraction = Vec::new();
    for &base in bases {
        let report = contractibility_report(&space, base, depth)?;
        let doc = retraction_doc(ch, &report);
        retraction.push(RetractionSummaryDoc {
            base: doc.base,
            max_depth: doc.max_depth,
            verdict: doc.verdict,
            blocked: doc.blocked,
        });
    }

    let mut problems: Vec<String> = Vec::new();
    if let TriState::Known(s) = simplicial {
        if s != props.strong {
            problems.push(format!(
                "simpliciality ({s}) disagrees with the strong lattice property ({})",
                props.strong
            ));
        }
        if s {
            if let Some(bad) = property_d.iter().find(|d| d.verdict != "verified-to-bound") {
                problems.push(format!(
                    "simplicial input but property D violated from base `{}`",
                    bad.base
                ));
            }
        }
    }
    if !props.strong {
        match &confirmation {
            Some(scan) if scan.verdict == BoundedVerdict::Violated => {}
            _ => problems.push(
                "strong lattice property fails but no property-D violation was found within \
                 the bound covering the constructed path"
                    .into(),
            ),
        }
    } else if property_d.iter().any(|d| d.verdict == "violated") {
        problems.push("strong lattice property holds but a property-D violation was found".into());
    }

    Ok(ConsistencyDoc {
        mode: match arr.mode() {
            Mode::Geometric => "geometric".into(),
            Mode::TopeOnly => "tope-only".into(),
        },
        elements: arr.n(),
        chamber_count: ch.len(),
        simplicial,
        strong_lattice: props.strong,
        weak_lattice: props.weak,
        lattice_bases: topes(ch, &props.lattice_bases),
        property_d,
        witness,
        retraction,
        consistency: if problems.is_empty() {
            "ok".into()
        } else {
            format!("INTERNAL INCONSISTENCY: {}", problems.join("; "))
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::chambers::enumerate_chambers;

    #[test]
    fn coordinate_report_is_consistent_and_green() {
        let arr = catalog::coordinate(2);
        let ch = enumerate_chambers(&arr).unwrap();
        let doc = consistency_report(&arr, &ch, &[0], 4, 3).unwrap();
        assert!(doc.is_consistent());
        assert_eq!(doc.simplicial, TriState::Known(true));
        assert!(doc.strong_lattice);
        assert!(doc
            .property_d
            .iter()
            .all(|d| d.verdict == "verified-to-bound"));
        assert!(doc.witness.is_none());
        assert!(doc
            .retraction
            .iter()
            .all(|r| r.verdict == "collapses-to-a-point"));
    }

    #[test]
    fn generic_four_planes_report_carries_the_counterexample() {
        let arr = catalog::generic_four_planes();
        let ch = enumerate_chambers(&arr).unwrap();
        let doc = consistency_report(&arr, &ch, &[0], 4, 2).unwrap();
        assert!(doc.is_consistent(), "{}", doc.consistency);
        assert_eq!(doc.simplicial, TriState::Known(false));
        assert!(!doc.strong_lattice);
        let w = doc.witness.expect("counterexample present");
        assert!(w.a_in_e && w.b_in_e && w.no_common_dominator);
    }

    #[test]
    fn tope_mode_report_marks_simpliciality_unavailable() {
        let arr = catalog::coordinate(2);
        let ch = enumerate_chambers(&arr).unwrap();
        let tope_arr = crate::arrangement::Arrangement::from_topes(
            arr.n(),
            ch.iter().map(|c| c.tope).collect(),
        )
        .unwrap();
        let tope_ch = enumerate_chambers(&tope_arr).unwrap();
        let doc = consistency_report(&tope_arr, &tope_ch, &[0], 4, 3).unwrap();
        assert_eq!(
            doc.simplicial,
            TriState::Unavailable("n/a (tope mode)".into())
        );
        assert!(doc.is_consistent());
    }
}
