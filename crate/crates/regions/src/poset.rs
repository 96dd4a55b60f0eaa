//! The poset of regions: chambers ordered by inclusion of separation sets
//! from a base chamber, with rank, covers, joins/meets, lattice checks by
//! two independent routes, and non-lattice witnesses.

use crate::chambers::{ChamberId, Chambers};
use crate::error::{Error, Result};

/// Square bit matrix for O(1) comparability queries.
#[derive(Clone, Debug)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> BitMatrix {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            data: vec![0; n * words],
        }
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1u64 << (j % 64);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }
}

/// The poset of regions for a fixed base chamber. `a <= b` holds iff every
/// hyperplane separating the base from `a` also separates it from `b`.
/// Construction asserts gradedness and boundedness, so a successful build
/// certifies the rank function `|S(base, -)|` and covers that step by one.
#[derive(Clone, Debug)]
pub struct RegionPoset<'a> {
    ch: &'a Chambers,
    base: ChamberId,
    rank: Vec<usize>,
    leq: BitMatrix,
    covers: Vec<Vec<ChamberId>>,
}

/// Outcome of a join or meet: either the unique extremal bound, or the full
/// antichain of minimal upper (maximal lower) bounds when it is not unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundOutcome {
    Unique(ChamberId),
    Multiple(Vec<ChamberId>),
}

impl BoundOutcome {
    pub fn unique(&self) -> Option<ChamberId> {
        match self {
            BoundOutcome::Unique(c) => Some(*c),
            BoundOutcome::Multiple(_) => None,
        }
    }

    pub fn candidates(&self) -> Vec<ChamberId> {
        match self {
            BoundOutcome::Unique(c) => vec![*c],
            BoundOutcome::Multiple(v) => v.clone(),
        }
    }
}

/// Chambers `a`, `b` covering `c` whose join does not exist, together with
/// the (at least two) minimal upper bounds.
#[derive(Clone, Debug)]
pub struct NonLatticeWitness {
    pub base: ChamberId,
    pub c: ChamberId,
    pub a: ChamberId,
    pub b: ChamberId,
    pub minimal_upper_bounds: Vec<ChamberId>,
}

/// A closed interval `[lo, hi]` of a poset of regions.
#[derive(Clone, Debug)]
pub struct Interval<'a, 'b> {
    pub poset: &'b RegionPoset<'a>,
    pub lo: ChamberId,
    pub hi: ChamberId,
    pub members: Vec<ChamberId>,
}

impl<'a> RegionPoset<'a> {
    pub fn build(ch: &'a Chambers, base: ChamberId) -> Result<RegionPoset<'a>> {
        let count = ch.len();
        let sep: Vec<u64> = (0..count).map(|c| ch.sep_mask(base, c)).collect();
        let rank: Vec<usize> = sep.iter().map(|m| m.count_ones() as usize).collect();
        let mut leq = BitMatrix::new(count);
        for i in 0..count {
            for j in 0..count {
                if sep[i] & !sep[j] == 0 {
                    leq.set(i, j);
                }
            }
        }
        let mut covers: Vec<Vec<ChamberId>> = vec![Vec::new(); count];
        for i in 0..count {
            for j in 0..count {
                if i != j && leq.get(i, j) && rank[j] == rank[i] + 1 {
                    covers[i].push(j);
                }
            }
        }
        let poset = RegionPoset {
            ch,
            base,
            rank,
            leq,
            covers,
        };
        poset.assert_graded_and_bounded()?;
        Ok(poset)
    }

    /// Gradedness: every strictly comparable pair is connected through a
    /// cover step; boundedness: unique minimum (the base) and unique
    /// maximum (its opposite).
    fn assert_graded_and_bounded(&self) -> Result<()> {
        let count = self.ch.len();
        let n = self.ch.n();
        for i in 0..count {
            for j in 0..count {
                if i == j || !self.leq.get(i, j) {
                    continue;
                }
                if !self.covers[i].iter().any(|&z| self.leq.get(z, j)) {
                    return Err(Error::Internal(format!(
                        "poset of regions is not graded: no cover of `{}` below `{}`",
                        self.ch.tope(i),
                        self.ch.tope(j)
                    )));
                }
            }
        }
        let minima: Vec<_> = (0..count).filter(|&c| self.rank[c] == 0).collect();
        let maxima: Vec<_> = (0..count).filter(|&c| self.rank[c] == n).collect();
        if minima != vec![self.base] || maxima != vec![self.ch.opposite(self.base)] {
            return Err(Error::Internal(
                "poset of regions is not bounded by the base and its opposite".into(),
            ));
        }
        Ok(())
    }

    pub fn chambers(&self) -> &Chambers {
        self.ch
    }

    pub fn base(&self) -> ChamberId {
        self.base
    }

    pub fn len(&self) -> usize {
        self.ch.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ch.is_empty()
    }

    pub fn leq(&self, a: ChamberId, b: ChamberId) -> bool {
        self.leq.get(a, b)
    }

    pub fn lt(&self, a: ChamberId, b: ChamberId) -> bool {
        a != b && self.leq.get(a, b)
    }

    pub fn rank_of(&self, c: ChamberId) -> usize {
        self.rank[c]
    }

    pub fn covers(&self, c: ChamberId) -> &[ChamberId] {
        &self.covers[c]
    }

    /// All cover relations as ordered pairs (lower, upper).
    pub fn cover_pairs(&self) -> Vec<(ChamberId, ChamberId)> {
        let mut out = Vec::new();
        for (lo, ups) in self.covers.iter().enumerate() {
            for &hi in ups {
                out.push((lo, hi));
            }
        }
        out
    }

    fn minimal_among(&self, set: &[ChamberId]) -> Vec<ChamberId> {
        set.iter()
            .copied()
            .filter(|&x| !set.iter().any(|&y| y != x && self.leq(y, x)))
            .collect()
    }

    fn maximal_among(&self, set: &[ChamberId]) -> Vec<ChamberId> {
        set.iter()
            .copied()
            .filter(|&x| !set.iter().any(|&y| y != x && self.leq(x, y)))
            .collect()
    }

    /// Least upper bound if the minimal upper bounds are a singleton;
    /// otherwise the antichain of minimal upper bounds.
    pub fn join(&self, a: ChamberId, b: ChamberId) -> BoundOutcome {
        let uppers: Vec<ChamberId> = (0..self.len())
            .filter(|&x| self.leq(a, x) && self.leq(b, x))
            .collect();
        let minimal = self.minimal_among(&uppers);
        if minimal.len() == 1 {
            BoundOutcome::Unique(minimal[0])
        } else {
            BoundOutcome::Multiple(minimal)
        }
    }

    pub fn meet(&self, a: ChamberId, b: ChamberId) -> BoundOutcome {
        let lowers: Vec<ChamberId> = (0..self.len())
            .filter(|&x| self.leq(x, a) && self.leq(x, b))
            .collect();
        let maximal = self.maximal_among(&lowers);
        if maximal.len() == 1 {
            BoundOutcome::Unique(maximal[0])
        } else {
            BoundOutcome::Multiple(maximal)
        }
    }

    /// Lattice verdict, decided by two independent routes that must agree:
    /// the full definition (every pair has a join and a meet) and the local
    /// criterion (joins exist for pairs covering a common element). A
    /// disagreement is an internal bug and is surfaced as an error.
    pub fn is_lattice(&self) -> Result<bool> {
        let full = self.is_lattice_full_definition();
        let local = self.is_lattice_local_criterion();
        if full != local {
            return Err(Error::Internal(format!(
                "lattice routes disagree for base `{}`: full definition says {full}, local criterion says {local}",
                self.ch.tope(self.base)
            )));
        }
        Ok(full)
    }

    fn is_lattice_full_definition(&self) -> bool {
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.join(a, b).unique().is_none() || self.meet(a, b).unique().is_none() {
                    return false;
                }
            }
        }
        true
    }

    fn is_lattice_local_criterion(&self) -> bool {
        for w in 0..self.len() {
            let ups = &self.covers[w];
            for (i, &a) in ups.iter().enumerate() {
                for &b in &ups[i + 1..] {
                    if self.join(a, b).unique().is_none() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// First (in canonical order) triple `c; a, b` with `a`, `b` covering
    /// `c` and no join, with the minimal upper bounds. `None` iff lattice.
    pub fn find_non_lattice_witness(&self) -> Result<Option<NonLatticeWitness>> {
        for c in 0..self.len() {
            let ups = &self.covers[c];
            for (i, &a) in ups.iter().enumerate() {
                for &b in &ups[i + 1..] {
                    if let BoundOutcome::Multiple(m) = self.join(a, b) {
                        return Ok(Some(NonLatticeWitness {
                            base: self.base,
                            c,
                            a,
                            b,
                            minimal_upper_bounds: m,
                        }));
                    }
                }
            }
        }
        if !self.is_lattice()? {
            return Err(Error::Internal(
                "non-lattice poset without a cover-pair witness".into(),
            ));
        }
        Ok(None)
    }

    pub fn interval(&self, lo: ChamberId, hi: ChamberId) -> Result<Interval<'a, '_>> {
        if !self.leq(lo, hi) {
            return Err(Error::NotComparable {
                lo: self.ch.tope(lo).to_string(),
                hi: self.ch.tope(hi).to_string(),
            });
        }
        let members: Vec<ChamberId> = (0..self.len())
            .filter(|&x| self.leq(lo, x) && self.leq(x, hi))
            .collect();
        Ok(Interval {
            poset: self,
            lo,
            hi,
            members,
        })
    }

    /// Elements of the half-open interval `(lo, hi]`.
    pub fn open_lower_interval(&self, lo: ChamberId, hi: ChamberId) -> Vec<ChamberId> {
        (0..self.len())
            .filter(|&x| x != lo && self.leq(lo, x) && self.leq(x, hi))
            .collect()
    }

    /// Atoms of the interval `[lo, hi]`: elements covering `lo` inside it.
    pub fn interval_atoms(&self, lo: ChamberId, hi: ChamberId) -> Vec<ChamberId> {
        self.covers[lo]
            .iter()
            .copied()
            .filter(|&x| self.leq(x, hi))
            .collect()
    }
}

/// Rebuilds the poset based at `lo`, restricts it to the elements below
/// `hi`, and checks that the identity map on topes is an order isomorphism
/// onto the interval `[lo, hi]` of `p`.
pub fn interval_isomorphic_to_lower_set(
    ch: &Chambers,
    p: &RegionPoset<'_>,
    lo: ChamberId,
    hi: ChamberId,
) -> Result<bool> {
    let interval = p.interval(lo, hi)?;
    let rebased = RegionPoset::build(ch, lo)?;
    let lower_set: Vec<ChamberId> = (0..ch.len()).filter(|&x| rebased.leq(x, hi)).collect();
    if interval.members != lower_set {
        return Ok(false);
    }
    for &x in &interval.members {
        for &y in &interval.members {
            if p.leq(x, y) != rebased.leq(x, y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Per-arrangement lattice diagnostics across all base chambers.
#[derive(Clone, Debug)]
pub struct LatticeProperties {
    pub strong: bool,
    pub weak: bool,
    pub lattice_bases: Vec<ChamberId>,
}

pub fn lattice_properties(ch: &Chambers) -> Result<LatticeProperties> {
    let mut lattice_bases = Vec::new();
    for base in 0..ch.len() {
        if RegionPoset::build(ch, base)?.is_lattice()? {
            lattice_bases.push(base);
        }
    }
    Ok(LatticeProperties {
        strong: lattice_bases.len() == ch.len(),
        weak: !lattice_bases.is_empty(),
        lattice_bases,
    })
}
