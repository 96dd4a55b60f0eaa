//! The arrangement graph: one vertex per chamber, a pair of opposite
//! directed edges between every two adjacent chambers.

use crate::chambers::{ChamberId, Chambers};

#[derive(Clone, Debug)]
pub struct ArrangementGraph {
    adj: Vec<Vec<ChamberId>>,
}

impl ArrangementGraph {
    pub fn build(ch: &Chambers) -> ArrangementGraph {
        ArrangementGraph {
            adj: (0..ch.len()).map(|c| ch.adjacent(c)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Out-neighbors in canonical chamber order; equals the in-neighbors.
    pub fn neighbors(&self, c: ChamberId) -> &[ChamberId] {
        &self.adj[c]
    }

    pub fn out_degree(&self, c: ChamberId) -> usize {
        self.adj[c].len()
    }

    pub fn directed_edge_count(&self) -> usize {
        self.adj.iter().map(|v| v.len()).sum()
    }

    /// Undirected edges as ordered pairs (low id, high id), sorted.
    pub fn undirected_edges(&self) -> Vec<(ChamberId, ChamberId)> {
        let mut out = Vec::new();
        for (c, nbrs) in self.adj.iter().enumerate() {
            for &d in nbrs {
                if c < d {
                    out.push((c, d));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{normals_from_ints, Arrangement};
    use crate::chambers::enumerate_chambers;

    #[test]
    fn coordinate_graph_is_a_four_cycle() {
        let a = Arrangement::from_normals(2, normals_from_ints(&[&[1, 0], &[0, 1]])).unwrap();
        let ch = enumerate_chambers(&a).unwrap();
        let g = ArrangementGraph::build(&ch);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.directed_edge_count(), 8);
        for c in 0..4 {
            assert_eq!(g.out_degree(c), 2);
        }
    }

    #[test]
    fn planar_lines_give_degree_two_cycles() {
        for n in 2..=5i64 {
            let rows: Vec<Vec<i64>> = (0..n).map(|k| vec![1, k]).collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let a = Arrangement::from_normals(2, normals_from_ints(&refs)).unwrap();
            let ch = enumerate_chambers(&a).unwrap();
            let g = ArrangementGraph::build(&ch);
            assert_eq!(g.vertex_count(), 2 * n as usize);
            assert!((0..g.vertex_count()).all(|c| g.out_degree(c) == 2));
        }
    }

    #[test]
    fn degree_equals_wall_count() {
        let a = Arrangement::from_normals(
            3,
            normals_from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]),
        )
        .unwrap();
        let ch = enumerate_chambers(&a).unwrap();
        let g = ArrangementGraph::build(&ch);
        for c in 0..ch.len() {
            assert_eq!(g.out_degree(c), ch.walls(c).len());
        }
        // every directed edge has its opposite
        for c in 0..ch.len() {
            for &d in g.neighbors(c) {
                assert!(g.neighbors(d).contains(&c));
            }
        }
    }
}
