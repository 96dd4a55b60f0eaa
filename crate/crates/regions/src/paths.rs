//! Positive paths on the arrangement graph, crossing vectors, and path
//! equivalence under substitution of positive minimal subpaths.
//!
//! A positive path is minimal iff its edge count equals the separation
//! distance of its endpoints. Two paths are equivalent iff one can be
//! rewritten into the other by repeatedly replacing a minimal subpath with
//! another minimal path between the same endpoints; every rewrite preserves
//! length, so equivalence classes are finite and can be closed exhaustively.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::chambers::{ChamberId, Chambers};
use crate::error::{Error, Result};
use crate::graph::ArrangementGraph;

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// A directed walk on the arrangement graph, stored as its chamber
/// sequence. Length is the edge count; length zero is the constant path.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositivePath {
    chambers: Vec<ChamberId>,
}

impl PositivePath {
    pub fn new(ch: &Chambers, chambers: Vec<ChamberId>) -> Result<PositivePath> {
        assert!(!chambers.is_empty(), "a path visits at least one chamber");
        for w in chambers.windows(2) {
            if ch.distance(w[0], w[1]) != 1 {
                return Err(Error::NotAPath {
                    at: ch.tope(w[0]).to_string(),
                    next: ch.tope(w[1]).to_string(),
                });
            }
        }
        Ok(PositivePath { chambers })
    }

    pub fn constant(c: ChamberId) -> PositivePath {
        PositivePath { chambers: vec![c] }
    }

    pub fn chambers(&self) -> &[ChamberId] {
        &self.chambers
    }

    pub fn len(&self) -> usize {
        self.chambers.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> ChamberId {
        self.chambers[0]
    }

    pub fn end(&self) -> ChamberId {
        *self.chambers.last().unwrap()
    }

    pub fn tope_strings(&self, ch: &Chambers) -> Vec<String> {
        self.chambers
            .iter()
            .map(|&c| ch.tope(c).to_string())
            .collect()
    }
}

/// How many times a path crosses each hyperplane. The entries sum to the
/// path length, and entry `i` is odd exactly when `i` separates the
/// endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingVector(pub Vec<usize>);

impl CrossingVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }
}

/// An equivalence class of positive paths. All members share endpoints,
/// length, and crossing vector; the canonical representative is the
/// lexicographically least chamber-id sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathClass {
    members: Vec<Vec<ChamberId>>,
}

impl PathClass {
    fn from_members(mut members: Vec<Vec<ChamberId>>) -> PathClass {
        members.sort_unstable();
        members.dedup();
        PathClass { members }
    }

    pub fn representative(&self) -> &[ChamberId] {
        &self.members[0]
    }

    pub fn members(&self) -> &[Vec<ChamberId>] {
        &self.members
    }

    pub fn start(&self) -> ChamberId {
        self.members[0][0]
    }

    pub fn end(&self) -> ChamberId {
        *self.members[0].last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.members[0].len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, seq: &[ChamberId]) -> bool {
        self.members
            .binary_search_by(|m| m.as_slice().cmp(seq))
            .is_ok()
    }

    /// Vertex label used in exports: topes joined by `>`.
    pub fn label(&self, ch: &Chambers) -> String {
        self.representative()
            .iter()
            .map(|&c| ch.tope(c).to_string())
            .collect::<Vec<_>>()
            .join(">")
    }
}

/// Path engine for one chamber set: the arrangement graph, all positive
/// minimal paths between every pair of chambers, and the closure cap.
/// Everything here is immutable after construction.
pub struct PathSpace<'a> {
    ch: &'a Chambers,
    graph: ArrangementGraph,
    minimal: HashMap<(ChamberId, ChamberId), Vec<Vec<ChamberId>>>,
    closure_cap: usize,
}

impl<'a> PathSpace<'a> {
    pub fn new(ch: &'a Chambers) -> PathSpace<'a> {
        let graph = ArrangementGraph::build(ch);
        let mut minimal = HashMap::new();
        for a in 0..ch.len() {
            for b in 0..ch.len() {
                minimal.insert((a, b), minimal_sequences(ch, &graph, a, b));
            }
        }
        PathSpace {
            ch,
            graph,
            minimal,
            closure_cap: DEFAULT_CLOSURE_CAP,
        }
    }

    pub fn with_closure_cap(mut self, cap: usize) -> PathSpace<'a> {
        self.closure_cap = cap;
        self
    }

    pub fn chambers(&self) -> &Chambers {
        self.ch
    }

    pub fn graph(&self) -> &ArrangementGraph {
        &self.graph
    }

    /// All positive minimal paths from `a` to `b`, in lexicographic order.
    /// Nonempty for every chamber pair.
    pub fn minimal_paths(&self, a: ChamberId, b: ChamberId) -> Vec<PositivePath> {
        self.minimal[&(a, b)]
            .iter()
            .map(|seq| PositivePath {
                chambers: seq.clone(),
            })
            .collect()
    }

    pub fn crossing_vector(&self, path: &PositivePath) -> CrossingVector {
        let mut counts = vec![0usize; self.ch.n()];
        for w in path.chambers.windows(2) {
            let diff = self.ch.sep_mask(w[0], w[1]);
            counts[diff.trailing_zeros() as usize] += 1;
        }
        CrossingVector(counts)
    }

    /// The full equivalence class of `path`.
    pub fn class_of(&self, path: &PositivePath) -> Result<PathClass> {
        let members = self.closure(path.chambers.clone(), None)?;
        Ok(PathClass::from_members(members))
    }

    /// Equivalence test: same endpoints and length, and reachable in the
    /// substitution rewriting graph.
    pub fn path_equivalent(&self, p: &PositivePath, q: &PositivePath) -> Result<bool> {
        if p.start() != q.start() || p.end() != q.end() || p.len() != q.len() {
            return Ok(false);
        }
        if self.crossing_vector(p) != self.crossing_vector(q) {
            return Ok(false);
        }
        if p.chambers == q.chambers {
            return Ok(true);
        }
        let members = self.closure(p.chambers.clone(), Some(&q.chambers))?;
        Ok(members.contains(&q.chambers))
    }

    /// Breadth-first closure under one-step substitutions. Stops early when
    /// `target` is reached.
    fn closure(
        &self,
        seed: Vec<ChamberId>,
        target: Option<&Vec<ChamberId>>,
    ) -> Result<Vec<Vec<ChamberId>>> {
        let mut seen: HashSet<Vec<ChamberId>> = HashSet::new();
        let mut queue: VecDeque<Vec<ChamberId>> = VecDeque::new();
        seen.insert(seed.clone());
        queue.push_back(seed);
        while let Some(seq) = queue.pop_front() {
            let mut hit_target = false;
            self.for_each_rewrite(&seq, |next| {
                if Some(&next) == target {
                    hit_target = true;
                }
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            });
            if hit_target {
                break;
            }
            if seen.len() > self.closure_cap {
                return Err(Error::ClosureCap {
                    cap: self.closure_cap,
                });
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Applies every one-step substitution of a minimal subpath.
    fn for_each_rewrite<F: FnMut(Vec<ChamberId>)>(&self, seq: &[ChamberId], mut f: F) {
        let n = self.ch.n();
        let last = seq.len() - 1;
        for i in 0..last {
            // windows longer than n can never be minimal
            let j_max = (i + n).min(last);
            for j in (i + 2)..=j_max {
                if self.ch.distance(seq[i], seq[j]) != j - i {
                    continue;
                }
                let window = &seq[i..=j];
                for alt in &self.minimal[&(seq[i], seq[j])] {
                    if alt.as_slice() == window {
                        continue;
                    }
                    let mut next = Vec::with_capacity(seq.len());
                    next.extend_from_slice(&seq[..i]);
                    next.extend_from_slice(alt);
                    next.extend_from_slice(&seq[j + 1..]);
                    f(next);
                }
            }
        }
    }

    /// Enumerates all path classes starting at `base` with length at most
    /// `max_len`, in canonical order (length, then representative).
    pub fn enumerate_classes(&self, base: ChamberId, max_len: usize) -> Result<ClassTable> {
        let mut classes: Vec<PathClass> = Vec::new();
        let mut class_of: HashMap<Vec<ChamberId>, usize> = HashMap::new();
        let mut level_start: Vec<usize> = Vec::new();
        let mut level: Vec<Vec<ChamberId>> = vec![vec![base]];
        for len in 0..=max_len {
            level_start.push(classes.len());
            self.split_level_into_classes(&level, &mut classes, &mut class_of);
            if len == max_len {
                break;
            }
            let mut next = Vec::with_capacity(level.len() * 3);
            for seq in &level {
                for &nb in self.graph.neighbors(*seq.last().unwrap()) {
                    let mut ext = seq.clone();
                    ext.push(nb);
                    next.push(ext);
                }
            }
            if next.len() > self.closure_cap {
                return Err(Error::ClosureCap {
                    cap: self.closure_cap,
                });
            }
            level = next;
        }
        level_start.push(classes.len());
        Ok(ClassTable {
            base,
            max_len,
            classes,
            class_of,
            level_start,
        })
    }

    /// Partitions one level of raw paths into equivalence classes by
    /// union-find over single substitutions, then appends the classes in
    /// canonical order.
    fn split_level_into_classes(
        &self,
        level: &[Vec<ChamberId>],
        classes: &mut Vec<PathClass>,
        class_of: &mut HashMap<Vec<ChamberId>, usize>,
    ) {
        let index: HashMap<&[ChamberId], usize> = level
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let mut uf = UnionFind::new(level.len());
        for (i, seq) in level.iter().enumerate() {
            self.for_each_rewrite(seq, |next| {
                if let Some(&j) = index.get(next.as_slice()) {
                    uf.union(i, j);
                }
            });
        }
        let mut grouped: HashMap<usize, Vec<Vec<ChamberId>>> = HashMap::new();
        for (i, seq) in level.iter().enumerate() {
            grouped.entry(uf.find(i)).or_default().push(seq.clone());
        }
        let mut new_classes: Vec<PathClass> =
            grouped.into_values().map(PathClass::from_members).collect();
        new_classes.sort_by(|a, b| a.representative().cmp(b.representative()));
        for class in new_classes {
            let id = classes.len();
            for m in class.members() {
                class_of.insert(m.clone(), id);
            }
            classes.push(class);
        }
    }
}

/// All classes from a base chamber up to a length bound, with membership
/// lookup for raw paths. Class ids are canonical: sorted by (length,
/// representative).
pub struct ClassTable {
    base: ChamberId,
    max_len: usize,
    classes: Vec<PathClass>,
    class_of: HashMap<Vec<ChamberId>, usize>,
    level_start: Vec<usize>,
}

impl ClassTable {
    pub fn base(&self) -> ChamberId {
        self.base
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn classes(&self) -> &[PathClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &PathClass {
        &self.classes[id]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Ids of the classes of length exactly `len`.
    pub fn ids_of_length(&self, len: usize) -> std::ops::Range<usize> {
        if len > self.max_len {
            return 0..0;
        }
        self.level_start[len]..self.level_start[len + 1]
    }

    /// The class containing a raw path, if the path starts at the base and
    /// fits the length bound.
    pub fn class_id_of(&self, seq: &[ChamberId]) -> Option<usize> {
        self.class_of.get(seq).copied()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// All chamber sequences of minimal paths from `a` to `b`: every step must
/// cross a hyperplane still separating the current chamber from `b`.
fn minimal_sequences(
    ch: &Chambers,
    graph: &ArrangementGraph,
    a: ChamberId,
    b: ChamberId,
) -> Vec<Vec<ChamberId>> {
    let mut out = Vec::new();
    let mut prefix = vec![a];
    descend(ch, graph, b, &mut prefix, &mut out);
    out
}

fn descend(
    ch: &Chambers,
    graph: &ArrangementGraph,
    target: ChamberId,
    prefix: &mut Vec<ChamberId>,
    out: &mut Vec<Vec<ChamberId>>,
) {
    let cur = *prefix.last().unwrap();
    if cur == target {
        out.push(prefix.clone());
        return;
    }
    let d = ch.distance(cur, target);
    for &nb in graph.neighbors(cur) {
        if ch.distance(nb, target) == d - 1 {
            prefix.push(nb);
            descend(ch, graph, target, prefix, out);
            prefix.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{normals_from_ints, Arrangement};
    use crate::chambers::enumerate_chambers;
    use crate::sign::SignVector;

    fn chambers_of(d: usize, rows: &[&[i64]]) -> Chambers {
        let a = Arrangement::from_normals(d, normals_from_ints(rows)).unwrap();
        enumerate_chambers(&a).unwrap()
    }

    fn id(ch: &Chambers, s: &str) -> ChamberId {
        ch.id_of(&SignVector::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn constant_path_is_the_only_minimal_loop() {
        let ch = chambers_of(2, &[&[1, 0], &[0, 1]]);
        let space = PathSpace::new(&ch);
        let paths = space.minimal_paths(0, 0);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].len(), 0);
    }

    #[test]
    fn square_has_two_minimal_diagonal_paths() {
        let ch = chambers_of(2, &[&[1, 0], &[0, 1]]);
        let space = PathSpace::new(&ch);
        let pp = id(&ch, "++");
        let mm = id(&ch, "--");
        let paths = space.minimal_paths(pp, mm);
        assert_eq!(paths.len(), 2);
        assert!(paths.iter().all(|p| p.len() == 2));
        assert!(space.path_equivalent(&paths[0], &paths[1]).unwrap());
    }

    #[test]
    fn three_lines_have_two_antipodal_minimal_paths() {
        let ch = chambers_of(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let space = PathSpace::new(&ch);
        let c = 0;
        let paths = space.minimal_paths(c, ch.opposite(c));
        assert_eq!(paths.len(), 2);
        assert!(paths.iter().all(|p| p.len() == 3));
    }

    #[test]
    fn crossing_vector_of_minimal_path_is_the_separation_indicator() {
        let ch = chambers_of(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let space = PathSpace::new(&ch);
        let constant = PositivePath::constant(0);
        assert_eq!(space.crossing_vector(&constant).counts(), &[0, 0, 0]);
        for a in 0..ch.len() {
            for b in 0..ch.len() {
                for p in space.minimal_paths(a, b) {
                    let cv = space.crossing_vector(&p);
                    let sep = ch.separation_set(a, b);
                    for (i, &count) in cv.counts().iter().enumerate() {
                        assert_eq!(count, usize::from(sep.contains(&i)));
                    }
                }
            }
        }
    }

    #[test]
    fn different_crossing_vectors_are_never_equivalent() {
        let ch = chambers_of(2, &[&[1, 0], &[0, 1]]);
        let space = PathSpace::new(&ch);
        let pp = id(&ch, "++");
        let pm = id(&ch, "+-");
        let mp = id(&ch, "-+");
        // two loops at ++ crossing different hyperplanes
        let p = PositivePath::new(&ch, vec![pp, pm, pp]).unwrap();
        let q = PositivePath::new(&ch, vec![pp, mp, pp]).unwrap();
        assert_ne!(space.crossing_vector(&p), space.crossing_vector(&q));
        assert!(!space.path_equivalent(&p, &q).unwrap());
        assert!(space.path_equivalent(&p, &p).unwrap());
    }

    #[test]
    fn class_members_share_the_crossing_vector() {
        let ch = chambers_of(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let space = PathSpace::new(&ch);
        let table = space.enumerate_classes(0, 4).unwrap();
        for class in table.classes() {
            let cvs: Vec<_> = class
                .members()
                .iter()
                .map(|m| {
                    space.crossing_vector(&PositivePath {
                        chambers: m.clone(),
                    })
                })
                .collect();
            assert!(cvs.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn class_table_levels_are_canonical() {
        let ch = chambers_of(2, &[&[1, 0], &[0, 1]]);
        let space = PathSpace::new(&ch);
        let table = space.enumerate_classes(0, 2).unwrap();
        assert_eq!(table.ids_of_length(0).len(), 1);
        assert_eq!(table.ids_of_length(1).len(), 2);
        // level 2: two loops and one diagonal class
        assert_eq!(table.ids_of_length(2).len(), 3);
        for ids in [table.ids_of_length(1), table.ids_of_length(2)] {
            let reps: Vec<_> = ids
                .map(|i| table.class(i).representative().to_vec())
                .collect();
            assert!(reps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn all_minimal_paths_with_same_endpoints_form_one_class() {
        let ch = chambers_of(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let space = PathSpace::new(&ch);
        for a in 0..ch.len() {
            for b in 0..ch.len() {
                let paths = space.minimal_paths(a, b);
                let class = space.class_of(&paths[0]).unwrap();
                for p in &paths {
                    assert!(class.contains(p.chambers()));
                }
                assert_eq!(class.members().len(), paths.len());
            }
        }
    }

    #[test]
    fn closure_cap_is_enforced() {
        let ch = chambers_of(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let space = PathSpace::new(&ch).with_closure_cap(2);
        let paths = space.minimal_paths(0, ch.opposite(0));
        assert!(matches!(
            space.class_of(&paths[0]),
            Err(Error::ClosureCap { cap: 2 })
        ));
    }

    #[test]
    fn non_adjacent_steps_rejected() {
        let ch = chambers_of(2, &[&[1, 0], &[0, 1]]);
        let err = PositivePath::new(&ch, vec![id(&ch, "++"), id(&ch, "--")]);
        assert!(matches!(err, Err(Error::NotAPath { .. })));
    }
}
