//! DOT exports: the chamber adjacency graph and rank-layered Hasse
//! diagrams. Output is deterministic for fixed input.

use std::fmt::Write;

use crate::chambers::Chambers;
use crate::graph::ArrangementGraph;
use crate::poset::RegionPoset;

pub fn graph_dot(ch: &Chambers, g: &ArrangementGraph) -> String {
    let mut out = String::from("graph chambers {\n  node [shape=box];\n");
    for id in 0..ch.len() {
        let _ = writeln!(out, "  c{id} [label=\"{}\"];", ch.tope(id));
    }
    for (a, b) in g.undirected_edges() {
        let _ = writeln!(out, "  c{a} -- c{b};");
    }
    out.push_str("}\n");
    out
}

pub fn hasse_dot(p: &RegionPoset<'_>) -> String {
    let ch = p.chambers();
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
    for id in 0..ch.len() {
        let _ = writeln!(out, "  c{id} [label=\"{}\"];", ch.tope(id));
    }
    for rank in 0..=ch.n() {
        let layer: Vec<String> = (0..ch.len())
            .filter(|&c| p.rank_of(c) == rank)
            .map(|c| format!("c{c};"))
            .collect();
        if !layer.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {} }}", layer.join(" "));
        }
    }
    for (lo, hi) in p.cover_pairs() {
        let _ = writeln!(out, "  c{lo} -> c{hi};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::chambers::enumerate_chambers;

    #[test]
    fn exports_are_deterministic() {
        let arr = catalog::coordinate(2);
        let ch = enumerate_chambers(&arr).unwrap();
        let g = ArrangementGraph::build(&ch);
        assert_eq!(graph_dot(&ch, &g), graph_dot(&ch, &g));
        let p = RegionPoset::build(&ch, 0).unwrap();
        let dot = hasse_dot(&p);
        assert_eq!(dot, hasse_dot(&p));
        assert!(dot.contains("rank=same"));
        // 4 nodes, 4 cover edges in the boolean lattice
        assert_eq!(dot.matches(" -> ").count(), 4);
    }
}
