//! Central arrangements of linear hyperplanes, and the tope-only variant
//! where the combinatorial data is supplied directly.

use num::BigRational;
use num::Zero;

use crate::error::{Error, Result};
use crate::exact;
use crate::sign::SignVector;

/// Separation sets are stored as u64 bitmasks, one bit per hyperplane.
pub const MAX_HYPERPLANES: usize = 64;

/// A linear hyperplane through the origin, given by a normal vector.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    pub normal: Vec<BigRational>,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Geometric,
    TopeOnly,
}

#[derive(Clone, Debug)]
enum Kind {
    Geometric {
        hyperplanes: Vec<Hyperplane>,
        dimension: usize,
        rank: usize,
    },
    TopeOnly {
        topes: Vec<SignVector>,
    },
}

/// A central arrangement: either geometric (normal vectors over the
/// rationals) or tope-only (an explicit, validated set of zero-free sign
/// vectors closed under negation).
#[derive(Clone, Debug)]
pub struct Arrangement {
    n: usize,
    kind: Kind,
}

impl Arrangement {
    /// Builds a geometric arrangement from normal vectors, validating that
    /// no normal is zero and no two are proportional.
    pub fn from_normals(dimension: usize, normals: Vec<Vec<BigRational>>) -> Result<Arrangement> {
        if normals.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        if normals.len() > MAX_HYPERPLANES {
            return Err(Error::TooManyHyperplanes {
                n: normals.len(),
                max: MAX_HYPERPLANES,
            });
        }
        for (i, nv) in normals.iter().enumerate() {
            if nv.len() != dimension {
                return Err(Error::Parse(format!(
                    "normal {i} has {} coordinates, expected {dimension}",
                    nv.len()
                )));
            }
            if nv.iter().all(|x| x.is_zero()) {
                return Err(Error::ZeroNormal { index: i });
            }
        }
        for i in 0..normals.len() {
            for j in i + 1..normals.len() {
                if proportional(&normals[i], &normals[j]) {
                    return Err(Error::DuplicateHyperplane {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        let rank = exact::rank(&normals);
        let n = normals.len();
        let hyperplanes = normals
            .into_iter()
            .enumerate()
            .map(|(index, normal)| Hyperplane { normal, index })
            .collect();
        Ok(Arrangement {
            n,
            kind: Kind::Geometric {
                hyperplanes,
                dimension,
                rank,
            },
        })
    }

    /// Builds a tope-only arrangement from an explicit tope list.
    ///
    /// Validates: consistent lengths, zero-free entries, no duplicates, no
    /// element constant across all topes, closure under negation, and that
    /// every pair of topes is joined by a step-by-step sign-flip path of
    /// length equal to their Hamming distance (so that minimal paths exist
    /// downstream). Sets failing the last check are rejected as degenerate.
    pub fn from_topes(n: usize, topes: Vec<SignVector>) -> Result<Arrangement> {
        if n == 0 || topes.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        if n > MAX_HYPERPLANES {
            return Err(Error::TooManyHyperplanes {
                n,
                max: MAX_HYPERPLANES,
            });
        }
        for (i, t) in topes.iter().enumerate() {
            if t.len() != n {
                return Err(Error::TopeLength {
                    index: i,
                    found: t.len(),
                    expected: n,
                });
            }
            if !t.is_zero_free() {
                return Err(Error::MalformedTope {
                    index: i,
                    reason: "contains a zero entry; topes use only `+` and `-`".into(),
                });
            }
        }
        let masks: Vec<u64> = topes.iter().map(|t| t.mask().unwrap()).collect();
        for i in 0..masks.len() {
            for j in i + 1..masks.len() {
                if masks[i] == masks[j] {
                    return Err(Error::DuplicateTope {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        for e in 0..n {
            let first = masks[0] >> e & 1;
            if masks.iter().all(|m| m >> e & 1 == first) {
                return Err(Error::DegenerateTopes {
                    reason: format!("element {e} has the same sign in every tope"),
                });
            }
        }
        let full = mask_of_all(n);
        for (i, m) in masks.iter().enumerate() {
            if !masks.contains(&(m ^ full)) {
                return Err(Error::SymmetryViolation {
                    tope: topes[i].to_string(),
                });
            }
        }
        check_gallery_connected(n, &masks)?;
        Ok(Arrangement {
            n,
            kind: Kind::TopeOnly { topes },
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        match self.kind {
            Kind::Geometric { .. } => Mode::Geometric,
            Kind::TopeOnly { .. } => Mode::TopeOnly,
        }
    }

    pub fn dimension(&self) -> Option<usize> {
        match &self.kind {
            Kind::Geometric { dimension, .. } => Some(*dimension),
            Kind::TopeOnly { .. } => None,
        }
    }

    pub fn rank(&self) -> Option<usize> {
        match &self.kind {
            Kind::Geometric { rank, .. } => Some(*rank),
            Kind::TopeOnly { .. } => None,
        }
    }

    pub fn hyperplanes(&self) -> Result<&[Hyperplane]> {
        match &self.kind {
            Kind::Geometric { hyperplanes, .. } => Ok(hyperplanes),
            Kind::TopeOnly { .. } => Err(Error::TopeMode {
                operation: "hyperplanes",
            }),
        }
    }

    pub(crate) fn input_topes(&self) -> Option<&[SignVector]> {
        match &self.kind {
            Kind::TopeOnly { topes } => Some(topes),
            Kind::Geometric { .. } => None,
        }
    }

    pub fn is_essential(&self) -> Option<bool> {
        match &self.kind {
            Kind::Geometric {
                dimension, rank, ..
            } => Some(rank == dimension),
            Kind::TopeOnly { .. } => None,
        }
    }

    /// Projects a geometric arrangement onto the quotient by the common
    /// lineality space (the intersection of all hyperplanes). The result has
    /// ambient dimension equal to the rank, the same hyperplane order, and
    /// the same feasible sign patterns.
    pub fn essentialize(&self) -> Result<Arrangement> {
        let hyperplanes = match &self.kind {
            Kind::Geometric { hyperplanes, .. } => hyperplanes,
            Kind::TopeOnly { .. } => {
                return Err(Error::TopeMode {
                    operation: "essentialize",
                })
            }
        };
        let normals: Vec<Vec<BigRational>> = hyperplanes.iter().map(|h| h.normal.clone()).collect();
        let basis = exact::row_space_basis(&normals);
        let projected: Vec<Vec<BigRational>> = normals
            .iter()
            .map(|a| basis.iter().map(|v| exact::dot(a, v)).collect())
            .collect();
        let arr = Arrangement::from_normals(basis.len(), projected)?;
        debug_assert_eq!(arr.is_essential(), Some(true));
        Ok(arr)
    }
}

fn proportional(a: &[BigRational], b: &[BigRational]) -> bool {
    for p in 0..a.len() {
        for q in p + 1..a.len() {
            if &a[p] * &b[q] != &a[q] * &b[p] {
                return false;
            }
        }
    }
    true
}

pub(crate) fn mask_of_all(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Every ordered pair of topes must admit a path of single sign flips,
/// within the set, whose length equals the Hamming distance.
fn check_gallery_connected(n: usize, masks: &[u64]) -> Result<()> {
    let set: std::collections::HashSet<u64> = masks.iter().copied().collect();
    for &target in masks {
        // process by increasing distance; a tope is good if some flip toward
        // the target lands on a good tope
        let mut order: Vec<u64> = masks.to_vec();
        order.sort_by_key(|m| ((m ^ target).count_ones(), *m));
        let mut good: std::collections::HashSet<u64> = std::collections::HashSet::new();
        good.insert(target);
        for &m in &order {
            if m == target {
                continue;
            }
            let mut bits = m ^ target;
            let mut ok = false;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                bits ^= b;
                let next = m ^ b;
                if set.contains(&next) && good.contains(&next) {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return Err(Error::DegenerateTopes {
                    reason: format!(
                        "no minimal flip path from `{}` to `{}`",
                        SignVector::from_mask(m, n),
                        SignVector::from_mask(target, n)
                    ),
                });
            }
            good.insert(m);
        }
    }
    Ok(())
}

/// Convenience for tests and the catalog: integer normals.
pub fn normals_from_ints(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coord2() -> Arrangement {
        Arrangement::from_normals(2, normals_from_ints(&[&[1, 0], &[0, 1]])).unwrap()
    }

    #[test]
    fn coordinate_arrangement_has_full_rank() {
        let arr = coord2();
        assert_eq!(arr.n(), 2);
        assert_eq!(arr.rank(), Some(2));
        assert_eq!(arr.is_essential(), Some(true));
    }

    #[test]
    fn proportional_normals_rejected() {
        let err = Arrangement::from_normals(2, normals_from_ints(&[&[1, 0], &[2, 0]]));
        assert!(matches!(
            err,
            Err(Error::DuplicateHyperplane {
                first: 0,
                second: 1
            })
        ));
        // negative proportionality names the same hyperplane
        let err = Arrangement::from_normals(2, normals_from_ints(&[&[1, 1], &[-2, -2]]));
        assert!(matches!(err, Err(Error::DuplicateHyperplane { .. })));
    }

    #[test]
    fn zero_normal_rejected() {
        let err = Arrangement::from_normals(2, normals_from_ints(&[&[1, 0], &[0, 0]]));
        assert!(matches!(err, Err(Error::ZeroNormal { index: 1 })));
    }

    #[test]
    fn empty_arrangement_rejected() {
        assert!(matches!(
            Arrangement::from_normals(2, vec![]),
            Err(Error::EmptyArrangement)
        ));
    }

    #[test]
    fn essentialize_braid_on_three_coordinates() {
        let arr = Arrangement::from_normals(
            3,
            normals_from_ints(&[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]]),
        )
        .unwrap();
        assert_eq!(arr.rank(), Some(2));
        assert_eq!(arr.is_essential(), Some(false));
        let ess = arr.essentialize().unwrap();
        assert_eq!(ess.dimension(), Some(2));
        assert_eq!(ess.rank(), Some(2));
        assert_eq!(ess.n(), 3);
    }

    #[test]
    fn topes_must_be_symmetric() {
        let topes = vec![
            SignVector::parse("++").unwrap(),
            SignVector::parse("--").unwrap(),
            SignVector::parse("+-").unwrap(),
        ];
        assert!(matches!(
            Arrangement::from_topes(2, topes),
            Err(Error::SymmetryViolation { .. })
        ));
    }

    #[test]
    fn constant_element_is_degenerate() {
        let topes = vec![
            SignVector::parse("++").unwrap(),
            SignVector::parse("+-").unwrap(),
        ];
        assert!(matches!(
            Arrangement::from_topes(2, topes),
            Err(Error::DegenerateTopes { .. })
        ));
    }

    #[test]
    fn antipodal_pair_without_intermediate_is_degenerate() {
        let topes = vec![
            SignVector::parse("++").unwrap(),
            SignVector::parse("--").unwrap(),
        ];
        assert!(matches!(
            Arrangement::from_topes(2, topes),
            Err(Error::DegenerateTopes { .. })
        ));
    }

    #[test]
    fn inconsistent_tope_lengths_rejected() {
        let topes = vec![
            SignVector::parse("++").unwrap(),
            SignVector::parse("+-+").unwrap(),
        ];
        assert!(matches!(
            Arrangement::from_topes(2, topes),
            Err(Error::TopeLength { index: 1, .. })
        ));
    }

    #[test]
    fn tope_with_zero_rejected() {
        let topes = vec![
            SignVector::parse("+0").unwrap(),
            SignVector::parse("-0").unwrap(),
        ];
        assert!(matches!(
            Arrangement::from_topes(2, topes),
            Err(Error::MalformedTope { .. })
        ));
    }

    #[test]
    fn valid_tope_square_accepted() {
        let topes = ["++", "+-", "-+", "--"]
            .iter()
            .map(|s| SignVector::parse(s).unwrap())
            .collect();
        let arr = Arrangement::from_topes(2, topes).unwrap();
        assert_eq!(arr.mode(), Mode::TopeOnly);
        assert_eq!(arr.n(), 2);
        assert!(arr.dimension().is_none());
    }
}
