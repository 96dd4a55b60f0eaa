//! Chamber enumeration and the combinatorial chamber set: separation sets,
//! adjacency, walls, and simpliciality.
//!
//! After enumeration everything downstream (posets, paths, complexes) works
//! purely on the tope set, so geometric and tope-only inputs share one code
//! path.

use std::collections::HashMap;

use num::BigInt;

use crate::arrangement::{mask_of_all, Arrangement, Mode};
use crate::error::{Error, Result};
use crate::exact;
use crate::feasibility;
use crate::sign::SignVector;

pub type ChamberId = usize;

/// A chamber by value: canonical index plus its zero-free sign vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub id: ChamberId,
    pub tope: SignVector,
}

/// The complete chamber set of an arrangement, in canonical (lexicographic,
/// `+` before `-`) order. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chambers {
    n: usize,
    topes: Vec<SignVector>,
    masks: Vec<u64>,
    by_mask: HashMap<u64, ChamberId>,
}

/// Enumerates all chambers. In geometric mode this inserts hyperplanes one
/// at a time, splitting the surviving sign prefixes that are feasible on
/// both sides; in tope-only mode it canonicalizes the validated input set.
pub fn enumerate_chambers(arr: &Arrangement) -> Result<Chambers> {
    let topes = match arr.mode() {
        Mode::Geometric => enumerate_geometric(arr)?,
        Mode::TopeOnly => arr.input_topes().unwrap().to_vec(),
    };
    Chambers::from_tope_list(arr.n(), topes)
}

fn enumerate_geometric(arr: &Arrangement) -> Result<Vec<SignVector>> {
    let hyperplanes = arr.hyperplanes()?;
    let dim = arr.dimension().unwrap();
    let rows: Vec<Vec<BigInt>> = hyperplanes
        .iter()
        .map(|h| exact::primitive_integer_row(&h.normal))
        .collect();
    let negate = |row: &Vec<BigInt>| -> Vec<BigInt> { row.iter().map(|v| -v).collect() };

    // prefix masks over hyperplanes 0..=k
    let mut prefixes: Vec<u64> = vec![0b0, 0b1];
    for k in 1..rows.len() {
        let mut next = Vec::with_capacity(prefixes.len() * 2);
        for &m in &prefixes {
            let mut children = 0;
            for side in [0u64, 1u64] {
                let cand = m | side << k;
                let system: Vec<Vec<BigInt>> = (0..=k)
                    .map(|i| {
                        if cand >> i & 1 == 1 {
                            negate(&rows[i])
                        } else {
                            rows[i].clone()
                        }
                    })
                    .collect();
                if feasibility::fm_feasible(system, dim) {
                    next.push(cand);
                    children += 1;
                }
            }
            if children == 0 {
                return Err(Error::Internal(format!(
                    "feasible prefix {m:b} lost both extensions at hyperplane {k}"
                )));
            }
        }
        prefixes = next;
    }
    Ok(prefixes
        .into_iter()
        .map(|m| SignVector::from_mask(m, rows.len()))
        .collect())
}

impl Chambers {
    fn from_tope_list(n: usize, mut topes: Vec<SignVector>) -> Result<Chambers> {
        topes.sort();
        let masks: Vec<u64> = topes.iter().map(|t| t.mask().unwrap()).collect();
        let by_mask: HashMap<u64, ChamberId> =
            masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let full = mask_of_all(n);
        for (i, &m) in masks.iter().enumerate() {
            if !by_mask.contains_key(&(m ^ full)) {
                return Err(Error::SymmetryViolation {
                    tope: topes[i].to_string(),
                });
            }
        }
        Ok(Chambers {
            n,
            topes,
            masks,
            by_mask,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.topes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topes.is_empty()
    }

    pub fn tope(&self, id: ChamberId) -> &SignVector {
        &self.topes[id]
    }

    pub fn mask(&self, id: ChamberId) -> u64 {
        self.masks[id]
    }

    pub fn chamber(&self, id: ChamberId) -> Chamber {
        Chamber {
            id,
            tope: self.topes[id].clone(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Chamber> + '_ {
        (0..self.len()).map(|id| self.chamber(id))
    }

    pub fn id_of(&self, tope: &SignVector) -> Option<ChamberId> {
        tope.mask().and_then(|m| self.by_mask.get(&m).copied())
    }

    /// Resolves a chamber value against this set, rejecting chambers that
    /// came from a different arrangement.
    pub fn resolve(&self, chamber: &Chamber) -> Result<ChamberId> {
        match self.topes.get(chamber.id) {
            Some(t) if *t == chamber.tope => Ok(chamber.id),
            _ => Err(Error::ForeignChamber),
        }
    }

    /// The antipodal chamber `-C`.
    pub fn opposite(&self, id: ChamberId) -> ChamberId {
        self.by_mask[&(self.masks[id] ^ mask_of_all(self.n))]
    }

    pub fn sep_mask(&self, a: ChamberId, b: ChamberId) -> u64 {
        self.masks[a] ^ self.masks[b]
    }

    /// The separation set `S(a, b)`: indices of hyperplanes on which the two
    /// topes disagree, in increasing order.
    pub fn separation_set(&self, a: ChamberId, b: ChamberId) -> Vec<usize> {
        let m = self.sep_mask(a, b);
        (0..self.n).filter(|i| m >> i & 1 == 1).collect()
    }

    pub fn distance(&self, a: ChamberId, b: ChamberId) -> usize {
        self.sep_mask(a, b).count_ones() as usize
    }

    /// Chambers at separation distance exactly one, in canonical order.
    pub fn adjacent(&self, id: ChamberId) -> Vec<ChamberId> {
        let mut out: Vec<ChamberId> = (0..self.n)
            .filter_map(|i| self.by_mask.get(&(self.masks[id] ^ (1u64 << i))).copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Hyperplane indices separating `id` from its adjacent chambers.
    pub fn walls(&self, id: ChamberId) -> Vec<usize> {
        (0..self.n)
            .filter(|i| self.by_mask.contains_key(&(self.masks[id] ^ (1u64 << i))))
            .collect()
    }

    pub fn adjacency_and_walls(&self, id: ChamberId) -> (Vec<ChamberId>, Vec<usize>) {
        (self.adjacent(id), self.walls(id))
    }

    pub fn tope_strings(&self) -> Vec<String> {
        self.topes.iter().map(|t| t.to_string()).collect()
    }
}

/// A chamber cone is simplicial iff it has rank-many walls. Requires a
/// geometric, essential arrangement.
pub fn is_simplicial_chamber(arr: &Arrangement, ch: &Chambers, id: ChamberId) -> Result<bool> {
    let (rank, dimension) = match (arr.rank(), arr.dimension()) {
        (Some(r), Some(d)) => (r, d),
        _ => {
            return Err(Error::TopeMode {
                operation: "is_simplicial_chamber",
            })
        }
    };
    if rank != dimension {
        return Err(Error::NotEssential { rank, dimension });
    }
    Ok(ch.walls(id).len() == rank)
}

pub fn is_simplicial_arrangement(arr: &Arrangement, ch: &Chambers) -> Result<bool> {
    for id in 0..ch.len() {
        if !is_simplicial_chamber(arr, ch, id)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::normals_from_ints;

    fn arr(d: usize, rows: &[&[i64]]) -> Arrangement {
        Arrangement::from_normals(d, normals_from_ints(rows)).unwrap()
    }

    fn coord2() -> (Arrangement, Chambers) {
        let a = arr(2, &[&[1, 0], &[0, 1]]);
        let ch = enumerate_chambers(&a).unwrap();
        (a, ch)
    }

    fn generic4() -> (Arrangement, Chambers) {
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let ch = enumerate_chambers(&a).unwrap();
        (a, ch)
    }

    #[test]
    fn coordinate_plane_has_four_chambers_in_canonical_order() {
        let (_, ch) = coord2();
        assert_eq!(ch.tope_strings(), vec!["++", "+-", "-+", "--"]);
    }

    #[test]
    fn three_lines_have_six_chambers() {
        let a = arr(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let ch = enumerate_chambers(&a).unwrap();
        assert_eq!(ch.len(), 6);
        // central symmetry
        for id in 0..ch.len() {
            assert_eq!(ch.tope(ch.opposite(id)), &ch.tope(id).negated());
        }
    }

    #[test]
    fn generic_four_planes_have_fourteen_chambers() {
        let (_, ch) = generic4();
        assert_eq!(ch.len(), 14);
    }

    #[test]
    fn separation_sets() {
        let (_, ch) = coord2();
        let pp = ch.id_of(&SignVector::parse("++").unwrap()).unwrap();
        let mp = ch.id_of(&SignVector::parse("-+").unwrap()).unwrap();
        assert!(ch.separation_set(pp, pp).is_empty());
        assert_eq!(ch.separation_set(pp, mp), vec![0]);
        assert_eq!(ch.separation_set(pp, ch.opposite(pp)), vec![0, 1]);
        assert_eq!(ch.separation_set(mp, pp), ch.separation_set(pp, mp));
    }

    #[test]
    fn adjacency_and_walls_of_the_first_quadrant() {
        let (_, ch) = coord2();
        let pp = ch.id_of(&SignVector::parse("++").unwrap()).unwrap();
        let (adj, walls) = ch.adjacency_and_walls(pp);
        let names: Vec<String> = adj.iter().map(|&c| ch.tope(c).to_string()).collect();
        assert_eq!(names, vec!["+-", "-+"]);
        assert_eq!(walls, vec![0, 1]);
    }

    #[test]
    fn every_planar_chamber_has_two_walls() {
        for n in 2..=5 {
            let mut normals: Vec<Vec<num::BigRational>> = Vec::new();
            for k in 0..n {
                normals.push(
                    [1i64, k as i64]
                        .iter()
                        .map(|&x| num::BigRational::from_integer(x.into()))
                        .collect(),
                );
            }
            let a = Arrangement::from_normals(2, normals).unwrap();
            let ch = enumerate_chambers(&a).unwrap();
            assert_eq!(ch.len(), 2 * n);
            for id in 0..ch.len() {
                assert_eq!(ch.walls(id).len(), 2);
            }
            assert!(is_simplicial_arrangement(&a, &ch).unwrap());
        }
    }

    #[test]
    fn generic_four_planes_are_not_simplicial() {
        let (a, ch) = generic4();
        assert!(!is_simplicial_arrangement(&a, &ch).unwrap());
        let max_walls = (0..ch.len()).map(|id| ch.walls(id).len()).max().unwrap();
        assert_eq!(max_walls, 4);
    }

    #[test]
    fn simpliciality_requires_essential() {
        let a = arr(3, &[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]]);
        let ch = enumerate_chambers(&a).unwrap();
        assert!(matches!(
            is_simplicial_arrangement(&a, &ch),
            Err(Error::NotEssential {
                rank: 2,
                dimension: 3
            })
        ));
        let ess = a.essentialize().unwrap();
        let ch = enumerate_chambers(&ess).unwrap();
        assert!(is_simplicial_arrangement(&ess, &ch).unwrap());
    }

    #[test]
    fn tope_round_trip_reproduces_the_chamber_set() {
        let (a, ch) = coord2();
        let arr2 = Arrangement::from_topes(a.n(), ch.topes.clone()).unwrap();
        let ch2 = enumerate_chambers(&arr2).unwrap();
        assert_eq!(ch, ch2);
    }

    #[test]
    fn foreign_chamber_rejected() {
        let (_, ch) = coord2();
        let fake = Chamber {
            id: 0,
            tope: SignVector::parse("+-").unwrap(),
        };
        assert!(matches!(ch.resolve(&fake), Err(Error::ForeignChamber)));
    }
}
