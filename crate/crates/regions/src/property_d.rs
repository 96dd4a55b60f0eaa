//! Property D: for each positive path class, the chambers reachable by
//! stripping one positive minimal suffix must form a half-open interval
//! `(C, C_gamma]` in the poset of regions based at the end chamber.
//!
//! When the strong lattice property fails, a violating path can be built
//! from a non-lattice witness: one positive minimal path from a minimal
//! upper bound down to the cover point, followed by a single edge into a
//! suitable atom.

use std::collections::BTreeSet;

use crate::chambers::{ChamberId, Chambers};
use crate::error::{Error, Result};
use crate::paths::{PathClass, PathSpace, PositivePath};
use crate::poset::{NonLatticeWitness, RegionPoset};

/// `E(gamma)`: all chambers `C'` distinct from the end chamber `C` such
/// that some member of the class factors as a positive path to `C'`
/// followed by a positive minimal path from `C'` to `C`. Sorted by id.
///
/// A suffix starting at position `t` is minimal iff its edge count equals
/// the separation distance from the suffix start to the end chamber, so the
/// scan needs nothing but distances.
pub fn end_decompositions(ch: &Chambers, class: &PathClass) -> Vec<ChamberId> {
    let end = class.end();
    let mut out: BTreeSet<ChamberId> = BTreeSet::new();
    for member in class.members() {
        let len = member.len() - 1;
        for (t, &c) in member.iter().enumerate().take(len) {
            if ch.distance(c, end) == len - t {
                out.insert(c);
            }
        }
    }
    out.into_iter().collect()
}

/// Result of checking one path class against property D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropertyDOutcome {
    /// `E(gamma) = (C, c_gamma]` in the poset based at the end chamber.
    /// For the constant path `c_gamma` is the end chamber itself.
    Interval { c_gamma: ChamberId },
    /// No chamber closes `E(gamma)` into an interval.
    Violation {
        e: Vec<ChamberId>,
        maximal_elements: Vec<ChamberId>,
    },
}

impl PropertyDOutcome {
    pub fn c_gamma(&self) -> Option<ChamberId> {
        match self {
            PropertyDOutcome::Interval { c_gamma } => Some(*c_gamma),
            PropertyDOutcome::Violation { .. } => None,
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, PropertyDOutcome::Violation { .. })
    }
}

/// Order relation of the poset based at `base`, straight from the masks.
fn leq_based_at(ch: &Chambers, base: ChamberId, x: ChamberId, y: ChamberId) -> bool {
    ch.sep_mask(base, x) & !ch.sep_mask(base, y) == 0
}

/// Decides property D for a single class: returns `c_gamma` with
/// `E(gamma) = (C, c_gamma]` in the poset based at the end chamber, or the
/// violation with the offending set and its maximal elements.
pub fn property_d_at(ch: &Chambers, class: &PathClass) -> PropertyDOutcome {
    let end = class.end();
    let e = end_decompositions(ch, class);
    if e.is_empty() {
        return PropertyDOutcome::Interval { c_gamma: end };
    }
    let maximal: Vec<ChamberId> = e
        .iter()
        .copied()
        .filter(|&x| !e.iter().any(|&y| y != x && leq_based_at(ch, end, x, y)))
        .collect();
    if maximal.len() != 1 {
        return PropertyDOutcome::Violation {
            e,
            maximal_elements: maximal,
        };
    }
    let c_gamma = maximal[0];
    let interval: Vec<ChamberId> = (0..ch.len())
        .filter(|&x| x != end && leq_based_at(ch, end, x, c_gamma))
        .collect();
    if interval == e {
        PropertyDOutcome::Interval { c_gamma }
    } else {
        PropertyDOutcome::Violation {
            e,
            maximal_elements: maximal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundedVerdict {
    VerifiedToBound,
    Violated,
}

/// One violating class with its evidence.
#[derive(Clone, Debug)]
pub struct PropertyDViolation {
    pub class: PathClass,
    pub e: Vec<ChamberId>,
    pub maximal_elements: Vec<ChamberId>,
}

/// Outcome of scanning every class from `base` up to `max_length`.
/// `VerifiedToBound` is evidence, not proof; the exact verdict for the
/// arrangement comes from the simpliciality/lattice equivalences.
#[derive(Clone, Debug)]
pub struct BoundedPropertyD {
    pub base: ChamberId,
    pub max_length: usize,
    pub verdict: BoundedVerdict,
    pub violation: Option<PropertyDViolation>,
}

/// Enumerates all path classes starting at `base` with length at most
/// `max_length` (canonical order) and checks each; stops at the first
/// violation.
pub fn verify_property_d_bounded(
    space: &PathSpace<'_>,
    base: ChamberId,
    max_length: usize,
) -> Result<BoundedPropertyD> {
    let ch = space.chambers();
    let table = space.enumerate_classes(base, max_length)?;
    for class in table.classes() {
        if let PropertyDOutcome::Violation {
            e,
            maximal_elements,
        } = property_d_at(ch, class)
        {
            return Ok(BoundedPropertyD {
                base,
                max_length,
                verdict: BoundedVerdict::Violated,
                violation: Some(PropertyDViolation {
                    class: class.clone(),
                    e,
                    maximal_elements,
                }),
            });
        }
    }
    Ok(BoundedPropertyD {
        base,
        max_length,
        verdict: BoundedVerdict::VerifiedToBound,
        violation: None,
    })
}

/// A constructed property-D counterexample with its verified evidence.
#[derive(Clone, Debug)]
pub struct Counterexample {
    /// The violating class: a minimal path from `m` to `c` followed by the
    /// edge from `c` into the atom the class ends at.
    pub class: PathClass,
    /// Cover point and the two covering chambers from the witness.
    pub c: ChamberId,
    pub a: ChamberId,
    pub b: ChamberId,
    /// The chosen minimal upper bound of `a` and `b` in the poset based at `c`.
    pub m: ChamberId,
    pub e: Vec<ChamberId>,
    pub maximal_elements: Vec<ChamberId>,
}

/// Builds a violating path from a non-lattice witness.
///
/// The witness is first re-based: `a` and `b` are atoms of the poset based
/// at `c`, where their join still fails; `m` is the first minimal upper
/// bound in canonical order. Candidate end atoms of `[c, m]` other than `a`
/// and `b` are tried in canonical order, and the first class that violates
/// property D is returned, with the membership of `a` and `b` in
/// `E(gamma)` and the absence of a common dominator verified.
pub fn build_counterexample_path(
    space: &PathSpace<'_>,
    witness: &NonLatticeWitness,
) -> Result<Counterexample> {
    let ch = space.chambers();
    let home = RegionPoset::build(ch, witness.base)?;
    if !home.covers(witness.c).contains(&witness.a)
        || !home.covers(witness.c).contains(&witness.b)
        || home.join(witness.a, witness.b).unique().is_some()
    {
        return Err(Error::NoWitness);
    }
    let rebased = RegionPoset::build(ch, witness.c)?;
    let mubs = match rebased.join(witness.a, witness.b) {
        crate::poset::BoundOutcome::Multiple(m) => m,
        crate::poset::BoundOutcome::Unique(_) => {
            return Err(Error::Internal(
                "join failure did not transfer to the poset based at the cover point".into(),
            ))
        }
    };
    let m = mubs[0];
    let atoms = rebased.interval_atoms(witness.c, m);
    let descent = space.minimal_paths(m, witness.c);
    let rep = descent[0].chambers().to_vec();
    for atom in atoms {
        if atom == witness.a || atom == witness.b {
            continue;
        }
        let mut seq = rep.clone();
        seq.push(atom);
        let path = PositivePath::new(ch, seq)?;
        let class = space.class_of(&path)?;
        if let PropertyDOutcome::Violation {
            e,
            maximal_elements,
        } = property_d_at(ch, &class)
        {
            if !e.contains(&witness.a) || !e.contains(&witness.b) {
                return Err(Error::Internal(
                    "covering chambers missing from the end decompositions of the counterexample"
                        .into(),
                ));
            }
            if let Some(&k) = e.iter().find(|&&k| {
                leq_based_at(ch, witness.c, witness.a, k)
                    && leq_based_at(ch, witness.c, witness.b, k)
            }) {
                return Err(Error::Internal(format!(
                    "end decomposition `{}` dominates both covering chambers",
                    ch.tope(k)
                )));
            }
            return Ok(Counterexample {
                class,
                c: witness.c,
                a: witness.a,
                b: witness.b,
                m,
                e,
                maximal_elements,
            });
        }
    }
    Err(Error::Internal(
        "no candidate atom produced a property-D violation from the witness".into(),
    ))
}
