//! Oracle-backed checks for posets of regions: the definitional order
//! relation, gradedness via maximal chains, covers against the arrangement
//! graph, and interval base-independence.

mod common;

use regions::catalog;
use regions::graph::ArrangementGraph;
use regions::poset::BoundOutcome;
use regions::{enumerate_chambers, interval_isomorphic_to_lower_set, Chambers, RegionPoset};

fn sep_subset(ch: &Chambers, base: usize, x: usize, y: usize) -> bool {
    let sx = common::separation_by_signs(ch, base, x);
    let sy = common::separation_by_signs(ch, base, y);
    sx.iter().all(|i| sy.contains(i))
}

#[test]
fn order_relation_is_definitional() {
    for entry in catalog::corpus() {
        let ch = enumerate_chambers(&entry.arrangement).unwrap();
        for base in 0..ch.len() {
            let p = RegionPoset::build(&ch, base).unwrap();
            for x in 0..ch.len() {
                assert_eq!(
                    p.rank_of(x),
                    common::separation_by_signs(&ch, base, x).len()
                );
                for y in 0..ch.len() {
                    assert_eq!(p.leq(x, y), sep_subset(&ch, base, x, y), "{}", entry.name);
                }
            }
        }
    }
}

/// Every maximal chain from the base to a chamber steps through covers, so
/// its length is the rank; checked by exhaustive chain extension.
#[test]
fn maximal_chains_realize_the_rank() {
    for entry in catalog::corpus()
        .into_iter()
        .filter(|e| e.arrangement.n() <= 5)
    {
        let ch = enumerate_chambers(&entry.arrangement).unwrap();
        for base in 0..ch.len() {
            let p = RegionPoset::build(&ch, base).unwrap();
            for target in 0..ch.len() {
                let mut stack = vec![vec![base]];
                while let Some(chain) = stack.pop() {
                    let last = *chain.last().unwrap();
                    if last == target {
                        assert_eq!(chain.len(), p.rank_of(target) + 1, "{}", entry.name);
                        continue;
                    }
                    for &z in p.covers(last) {
                        if p.leq(z, target) {
                            let mut next = chain.clone();
                            next.push(z);
                            stack.push(next);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn hasse_diagram_equals_the_arrangement_graph() {
    for entry in catalog::corpus() {
        let ch = enumerate_chambers(&entry.arrangement).unwrap();
        let g = ArrangementGraph::build(&ch);
        let graph_edges = g.undirected_edges();
        for base in 0..ch.len() {
            let p = RegionPoset::build(&ch, base).unwrap();
            let mut cover_edges: Vec<(usize, usize)> = p
                .cover_pairs()
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            cover_edges.sort_unstable();
            cover_edges.dedup();
            assert_eq!(cover_edges, graph_edges, "{} base {base}", entry.name);
        }
    }
}

#[test]
fn local_join_criterion_agrees_with_the_full_scan_everywhere() {
    // `is_lattice` asserts agreement of the two routes internally and
    // errors on divergence; run it across every poset of the corpus.
    let mut posets = 0;
    for entry in catalog::corpus() {
        let ch = enumerate_chambers(&entry.arrangement).unwrap();
        for base in 0..ch.len() {
            let p = RegionPoset::build(&ch, base).unwrap();
            p.is_lattice().unwrap();
            posets += 1;
        }
    }
    assert!(posets >= 100, "corpus spans {posets} posets");
}

#[test]
fn witnesses_are_valid_and_exist_exactly_on_non_lattices() {
    for entry in catalog::corpus() {
        let ch = enumerate_chambers(&entry.arrangement).unwrap();
        for base in 0..ch.len() {
            let p = RegionPoset::build(&ch, base).unwrap();
            let witness = p.find_non_lattice_witness().unwrap();
            assert_eq!(witness.is_none(), p.is_lattice().unwrap());
            if let Some(w) = witness {
                assert!(p.covers(w.c).contains(&w.a));
                assert!(p.covers(w.c).contains(&w.b));
                assert!(w.minimal_upper_bounds.len() >= 2);
                for &m in &w.minimal_upper_bounds {
                    assert!(p.leq(w.a, m) && p.leq(w.b, m));
                    // minimality: no other upper bound strictly below
                    for x in 0..ch.len() {
                        if p.leq(w.a, x) && p.leq(w.b, x) && p.lt(x, m) {
                            panic!("upper bound below a minimal upper bound");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn joins_and_meets_are_genuine_bounds() {
    let arr = catalog::generic_four_planes();
    let ch = enumerate_chambers(&arr).unwrap();
    for base in 0..ch.len() {
        let p = RegionPoset::build(&ch, base).unwrap();
        for a in 0..ch.len() {
            for b in 0..ch.len() {
                if let BoundOutcome::Unique(j) = p.join(a, b) {
                    assert!(p.leq(a, j) && p.leq(b, j));
                    for x in 0..ch.len() {
                        if p.leq(a, x) && p.leq(b, x) {
                            assert!(p.leq(j, x));
                        }
                    }
                }
                if let BoundOutcome::Unique(m) = p.meet(a, b) {
                    assert!(p.leq(m, a) && p.leq(m, b));
                    for x in 0..ch.len() {
                        if p.leq(x, a) && p.leq(x, b) {
                            assert!(p.leq(x, m));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn intervals_are_base_independent_across_the_small_corpus() {
    for entry in catalog::corpus()
        .into_iter()
        .filter(|e| e.arrangement.n() <= 4)
    {
        let ch = enumerate_chambers(&entry.arrangement).unwrap();
        for base in 0..ch.len() {
            let p = RegionPoset::build(&ch, base).unwrap();
            for lo in 0..ch.len() {
                for hi in 0..ch.len() {
                    if p.leq(lo, hi) {
                        assert!(
                            interval_isomorphic_to_lower_set(&ch, &p, lo, hi).unwrap(),
                            "{} base {base}",
                            entry.name
                        );
                    }
                }
            }
        }
    }
}
