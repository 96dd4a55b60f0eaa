//! Order complexes and the bounded positive cover complex.
//!
//! Vertices of the bounded complex are positive path classes from a base
//! chamber, up to a length bound. Two classes are joined when the longer
//! one factors through the shorter one with a positive minimal connector;
//! a set of classes is a simplex exactly when all pairs are joined, because
//! a chain of minimal connectors whose total length equals the separation
//! distance of the extreme endpoints composes to a minimal path. The
//! complex is therefore the flag complex of the pairwise relation, and
//! candidate simplices are exactly the cliques of that relation.

use std::collections::{BTreeSet, HashMap};

use crate::chambers::{ChamberId, Chambers};
use crate::error::Result;
use crate::homology;
use crate::paths::{ClassTable, PathClass, PathSpace};
use crate::poset::{Interval, RegionPoset};
use crate::property_d::{property_d_at, PropertyDOutcome};

/// An abstract simplicial complex with labeled vertices, described by its
/// inclusion-maximal faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplexData {
    pub labels: Vec<String>,
    pub facets: Vec<Vec<usize>>,
}

impl SimplicialComplexData {
    pub fn new(labels: Vec<String>, mut facets: Vec<Vec<usize>>) -> SimplicialComplexData {
        for f in &mut facets {
            f.sort_unstable();
            f.dedup();
        }
        facets.sort();
        facets.dedup();
        let keep: Vec<bool> = facets
            .iter()
            .map(|f| {
                !facets
                    .iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v)))
            })
            .collect();
        let facets = facets
            .into_iter()
            .zip(keep)
            .filter_map(|(f, k)| k.then_some(f))
            .collect();
        SimplicialComplexData { labels, facets }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Every nonempty face of every facet.
    pub fn all_simplices(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for bits in 1u64..(1u64 << f.len()) {
                let face: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &v)| (bits >> i & 1 == 1).then_some(v))
                    .collect();
                out.insert(face);
            }
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler_of(self.all_simplices().iter())
    }

    /// True when every facet contains `v`, i.e. the complex is a cone with
    /// apex `v`.
    pub fn is_cone_with_apex(&self, v: usize) -> bool {
        !self.facets.is_empty() && self.facets.iter().all(|f| f.contains(&v))
    }
}

fn euler_of<'a, I: Iterator<Item = &'a Vec<usize>>>(simplices: I) -> i64 {
    let mut chi = 0i64;
    for s in simplices {
        chi += if (s.len() - 1) % 2 == 0 { 1 } else { -1 };
    }
    chi
}

/// All cliques (as sorted vertex lists) of an undirected graph given by
/// bitset adjacency rows, in lexicographic order.
fn cliques(adj: &[Vec<u64>], vertex_count: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    for v in 0..vertex_count {
        current.push(v);
        out.push(current.clone());
        let cands: Vec<usize> = (v + 1..vertex_count).filter(|&w| bit(adj, v, w)).collect();
        extend_cliques(adj, &mut current, &cands, &mut out);
        current.pop();
    }
    out
}

fn extend_cliques(
    adj: &[Vec<u64>],
    current: &mut Vec<usize>,
    cands: &[usize],
    out: &mut Vec<Vec<usize>>,
) {
    for (i, &w) in cands.iter().enumerate() {
        current.push(w);
        out.push(current.clone());
        let next: Vec<usize> = cands[i + 1..]
            .iter()
            .copied()
            .filter(|&x| bit(adj, w, x))
            .collect();
        if !next.is_empty() {
            extend_cliques(adj, current, &next, out);
        }
        current.pop();
    }
}

fn bit(adj: &[Vec<u64>], i: usize, j: usize) -> bool {
    adj[i][j / 64] >> (j % 64) & 1 == 1
}

fn set_bit(adj: &mut [Vec<u64>], i: usize, j: usize) {
    adj[i][j / 64] |= 1u64 << (j % 64);
}

fn is_maximal_clique(adj: &[Vec<u64>], vertex_count: usize, clique: &[usize]) -> bool {
    'outer: for x in 0..vertex_count {
        if clique.contains(&x) {
            continue;
        }
        for &v in clique {
            if !bit(adj, v, x) {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// The order complex of a poset of regions: simplices are the chains,
/// facets the maximal chains. Vertices keep canonical chamber order.
pub fn order_complex(p: &RegionPoset<'_>) -> SimplicialComplexData {
    let members: Vec<ChamberId> = (0..p.len()).collect();
    order_complex_of(p, &members)
}

/// The order complex of an induced subposet.
pub fn order_complex_of(p: &RegionPoset<'_>, members: &[ChamberId]) -> SimplicialComplexData {
    let words = members.len().div_ceil(64).max(1);
    let mut adj = vec![vec![0u64; words]; members.len()];
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate() {
            if i != j && (p.leq(x, y) || p.leq(y, x)) {
                set_bit(&mut adj, i, j);
            }
        }
    }
    let all = cliques(&adj, members.len());
    let facets: Vec<Vec<usize>> = all
        .into_iter()
        .filter(|c| is_maximal_clique(&adj, members.len(), c))
        .collect();
    let labels = members
        .iter()
        .map(|&c| p.chambers().tope(c).to_string())
        .collect();
    SimplicialComplexData::new(labels, facets)
}

impl Interval<'_, '_> {
    pub fn order_complex(&self) -> SimplicialComplexData {
        order_complex_of(self.poset, &self.members)
    }
}

/// The bounded positive cover complex over a base chamber.
pub struct BoundedCoverComplex<'a, 'b> {
    space: &'b PathSpace<'a>,
    base: ChamberId,
    depth: usize,
    table: ClassTable,
    adj: Vec<Vec<u64>>,
    in_edges: Vec<Vec<usize>>,
    simplices: Vec<Vec<usize>>,
}

impl<'a, 'b> BoundedCoverComplex<'a, 'b> {
    pub fn build(
        space: &'b PathSpace<'a>,
        base: ChamberId,
        depth: usize,
    ) -> Result<BoundedCoverComplex<'a, 'b>> {
        let ch = space.chambers();
        let table = space.enumerate_classes(base, depth)?;
        let count = table.len();
        let words = count.div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; words]; count];
        let mut in_edges: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); count];
        for (v, edges_of_v) in in_edges.iter_mut().enumerate() {
            let longer = table.class(v);
            let end_v = longer.end();
            let len_v = longer.len();
            let mut shorter_ids: BTreeSet<usize> = BTreeSet::new();
            for member in longer.members() {
                for t in 0..member.len() - 1 {
                    let u = table
                        .class_id_of(&member[..=t])
                        .expect("prefix of an enumerated path is enumerated");
                    shorter_ids.insert(u);
                }
            }
            for u in shorter_ids {
                let shorter = table.class(u);
                if len_v - shorter.len() == ch.distance(shorter.end(), end_v) {
                    set_bit(&mut adj, u, v);
                    set_bit(&mut adj, v, u);
                    edges_of_v.insert(u);
                }
            }
        }
        let simplices = cliques(&adj, count);
        Ok(BoundedCoverComplex {
            space,
            base,
            depth,
            table,
            adj,
            in_edges: in_edges
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
            simplices,
        })
    }

    pub fn base(&self) -> ChamberId {
        self.base
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn chambers(&self) -> &Chambers {
        self.space.chambers()
    }

    pub fn class_table(&self) -> &ClassTable {
        &self.table
    }

    pub fn vertex_count(&self) -> usize {
        self.table.len()
    }

    pub fn vertex(&self, id: usize) -> &PathClass {
        self.table.class(id)
    }

    pub fn vertex_label(&self, id: usize) -> String {
        self.table.class(id).label(self.space.chambers())
    }

    /// Every simplex, as sorted vertex-id lists in lexicographic order.
    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.simplices
            .iter()
            .filter(|s| is_maximal_clique(&self.adj, self.table.len(), s))
            .cloned()
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler_of(self.simplices.iter())
    }

    /// Reduced Betti numbers in degrees 0 and 1 over GF(2).
    pub fn reduced_betti_01(&self) -> (usize, usize) {
        let edges: Vec<Vec<usize>> = self
            .simplices
            .iter()
            .filter(|s| s.len() == 2)
            .cloned()
            .collect();
        let triangles: Vec<Vec<usize>> = self
            .simplices
            .iter()
            .filter(|s| s.len() == 3)
            .cloned()
            .collect();
        homology::reduced_betti_01(self.table.len(), &edges, &triangles)
    }

    fn link_simplices(&self, v: usize) -> Vec<Vec<usize>> {
        self.simplices
            .iter()
            .filter(|s| s.len() > 1 && s.contains(&v))
            .map(|s| s.iter().copied().filter(|&x| x != v).collect())
            .collect()
    }

    /// Standard link and star of a vertex as labeled complexes (labels are
    /// vertex ids into this complex, rendered as path labels).
    pub fn link_and_star(&self, v: usize) -> (SimplicialComplexData, SimplicialComplexData) {
        let labels: Vec<String> = (0..self.table.len())
            .map(|i| self.vertex_label(i))
            .collect();
        let link = SimplicialComplexData::new(labels.clone(), self.link_simplices(v));
        let star_facets: Vec<Vec<usize>> = self
            .simplices
            .iter()
            .filter(|s| s.contains(&v))
            .cloned()
            .collect();
        let star = SimplicialComplexData::new(labels, star_facets);
        (link, star)
    }

    /// Link vertex ids of `v` (its graph neighbors of smaller length).
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }
}

/// Per-vertex record of one retraction step check.
#[derive(Clone, Debug)]
pub struct VertexCheck {
    pub vertex: usize,
    pub label: String,
    pub c_gamma: Option<ChamberId>,
    pub link_matches_interval: bool,
    pub link_is_cone: bool,
    pub pass: bool,
    pub failure: Option<String>,
}

/// Result of checking that the depth-`m` complex retracts onto depth
/// `m - 1`: every maximal-depth vertex must satisfy property D, its link
/// must realize the order complex of the interval below its closing
/// chamber, and that link must be a cone with apex the closing chamber.
#[derive(Clone, Debug)]
pub struct RetractionStep {
    pub depth: usize,
    pub checks: Vec<VertexCheck>,
    pub all_pass: bool,
}

pub fn verify_retraction_step(cx: &BoundedCoverComplex<'_, '_>) -> RetractionStep {
    let ch = cx.chambers();
    let depth = cx.depth();
    let mut checks = Vec::new();
    for v in cx.table.ids_of_length(depth) {
        checks.push(check_vertex(cx, ch, v));
    }
    let all_pass = checks.iter().all(|c| c.pass);
    RetractionStep {
        depth,
        checks,
        all_pass,
    }
}

fn check_vertex(cx: &BoundedCoverComplex<'_, '_>, ch: &Chambers, v: usize) -> VertexCheck {
    let class = cx.vertex(v);
    let end = class.end();
    let label = cx.vertex_label(v);
    let c_gamma = match property_d_at(ch, class) {
        PropertyDOutcome::Interval { c_gamma } => c_gamma,
        PropertyDOutcome::Violation { e, .. } => {
            return VertexCheck {
                vertex: v,
                label,
                c_gamma: None,
                link_matches_interval: false,
                link_is_cone: false,
                pass: false,
                failure: Some(format!(
                    "property D violated: end decompositions {{{}}} have no closing chamber",
                    e.iter()
                        .map(|&c| ch.tope(c).to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                )),
            }
        }
    };

    let link = cx.in_neighbors(v);
    let interval: BTreeSet<ChamberId> = (0..ch.len())
        .filter(|&x| x != end && ch.sep_mask(end, x) & !ch.sep_mask(end, c_gamma) == 0)
        .collect();
    let endpoint_of: HashMap<usize, ChamberId> =
        link.iter().map(|&u| (u, cx.vertex(u).end())).collect();
    let endpoints: Vec<ChamberId> = link.iter().map(|&u| endpoint_of[&u]).collect();
    let endpoint_set: BTreeSet<ChamberId> = endpoints.iter().copied().collect();
    let injective = endpoint_set.len() == endpoints.len();

    let mut link_matches = injective && endpoint_set == interval;
    if link_matches {
        // simplices of the link must be exactly the chains of the interval
        let leq = |x: ChamberId, y: ChamberId| ch.sep_mask(end, x) & !ch.sep_mask(end, y) == 0;
        let link_faces: BTreeSet<Vec<ChamberId>> = cx
            .link_simplices(v)
            .into_iter()
            .map(|s| {
                let mut e: Vec<ChamberId> = s.iter().map(|u| endpoint_of[u]).collect();
                e.sort_unstable();
                e
            })
            .collect();
        let members: Vec<ChamberId> = interval.iter().copied().collect();
        let words = members.len().div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; words]; members.len()];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                if i != j && (leq(x, y) || leq(y, x)) {
                    set_bit(&mut adj, i, j);
                }
            }
        }
        let chains: BTreeSet<Vec<ChamberId>> = cliques(&adj, members.len())
            .into_iter()
            .map(|c| {
                let mut e: Vec<ChamberId> = c.iter().map(|&i| members[i]).collect();
                e.sort_unstable();
                e
            })
            .collect();
        link_matches = link_faces == chains;
    }

    // cone with apex the link vertex ending at the closing chamber; the
    // complex is flag, so coneness is apex adjacency to every link vertex
    let apex = link.iter().copied().find(|&u| endpoint_of[&u] == c_gamma);
    let link_is_cone = match apex {
        None => false,
        Some(apex) => !link.is_empty() && link.iter().all(|&u| u == apex || bit(&cx.adj, u, apex)),
    };

    let pass = link_matches && link_is_cone;
    let failure = if pass {
        None
    } else if !injective {
        Some("two link vertices share an end chamber".into())
    } else if !link_matches {
        Some("link does not realize the order complex of the closing interval".into())
    } else {
        Some("link is not a cone with apex the closing chamber".into())
    };
    VertexCheck {
        vertex: v,
        label,
        c_gamma: Some(c_gamma),
        link_matches_interval: link_matches,
        link_is_cone,
        pass,
        failure,
    }
}

/// Evidence gathered per depth while collapsing the bounded complex.
#[derive(Clone, Debug)]
pub struct DepthEvidence {
    pub depth: usize,
    pub vertex_count: usize,
    pub facet_count: usize,
    pub euler: i64,
    pub betti0_reduced: usize,
    pub betti1: usize,
    pub step: RetractionStep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractibilityVerdict {
    CollapsesToPoint,
    Blocked { depth: usize, vertex_label: String },
}

/// Runs the retraction check from `m_max` down to 1 and reports counts,
/// Euler characteristics, and low-degree homology evidence per depth.
#[derive(Clone, Debug)]
pub struct ContractibilityReport {
    pub base: ChamberId,
    pub m_max: usize,
    pub depths: Vec<DepthEvidence>,
    pub verdict: ContractibilityVerdict,
}

pub fn contractibility_report(
    space: &PathSpace<'_>,
    base: ChamberId,
    m_max: usize,
) -> Result<ContractibilityReport> {
    let mut depths = Vec::new();
    let mut blocked: Option<(usize, String)> = None;
    for m in (1..=m_max).rev() {
        let cx = BoundedCoverComplex::build(space, base, m)?;
        let step = verify_retraction_step(&cx);
        if !step.all_pass {
            let first_fail = step.checks.iter().find(|c| !c.pass).unwrap();
            blocked = Some((m, first_fail.label.clone()));
        }
        let (b0, b1) = cx.reduced_betti_01();
        depths.push(DepthEvidence {
            depth: m,
            vertex_count: cx.vertex_count(),
            facet_count: cx.facets().len(),
            euler: cx.euler_characteristic(),
            betti0_reduced: b0,
            betti1: b1,
            step,
        });
    }
    // the collapse proceeds from the top; the blocking depth is the largest
    let verdict = match blocked {
        None => ContractibilityVerdict::CollapsesToPoint,
        Some((depth, vertex_label)) => ContractibilityVerdict::Blocked {
            depth: depths
                .iter()
                .filter(|d| !d.step.all_pass)
                .map(|d| d.depth)
                .max()
                .unwrap_or(depth),
            vertex_label: {
                let top = depths
                    .iter()
                    .filter(|d| !d.step.all_pass)
                    .max_by_key(|d| d.depth)
                    .unwrap();
                top.step
                    .checks
                    .iter()
                    .find(|c| !c.pass)
                    .map(|c| c.label.clone())
                    .unwrap_or(vertex_label)
            },
        },
    };
    Ok(ContractibilityReport {
        base,
        m_max,
        depths,
        verdict,
    })
}
