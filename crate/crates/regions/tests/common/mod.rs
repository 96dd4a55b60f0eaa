#![allow(dead_code)] // each suite uses its own subset of the oracles

//! Independent oracles shared by the integration suites. Everything here
//! recomputes results along a different route from the library internals.

use num::{BigInt, BigRational, Zero};
use regions::chambers::ChamberId;
use regions::graph::ArrangementGraph;
use regions::{strict_feasible, Arrangement, Chambers, SignVector};

/// Exhaustive chamber oracle: test all 2^n sign patterns one by one.
pub fn brute_force_chambers(arr: &Arrangement) -> Vec<SignVector> {
    let n = arr.n();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << n) {
        let pattern = SignVector::from_mask(bits, n);
        if strict_feasible(arr, &pattern).unwrap() {
            out.push(pattern);
        }
    }
    out.sort();
    out
}

/// Matrix rank by Bareiss fraction-free elimination over the integers,
/// independent of the library's rational echelon form.
pub fn bareiss_rank(rows: &[Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    // clear denominators row by row
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut lcm = BigInt::from(1);
            for x in r {
                lcm = num::Integer::lcm(&lcm, x.denom());
            }
            r.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    let cols = m[0].len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        for r in 0..m.len() {
            if r == row {
                continue;
            }
            for c in 0..cols {
                if c == col {
                    continue;
                }
                let val = (&m[row][col] * &m[r][c] - &m[r][col] * &m[row][c]) / &prev;
                m[r][c] = val;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
        if row == m.len() {
            break;
        }
    }
    rank
}

/// All directed walks from `a` to `b` with exactly `len` edges, by plain
/// depth-first search over the adjacency lists.
pub fn all_paths_of_length(
    g: &ArrangementGraph,
    a: ChamberId,
    b: ChamberId,
    len: usize,
) -> Vec<Vec<ChamberId>> {
    let mut out = Vec::new();
    let mut prefix = vec![a];
    walk(g, b, len, &mut prefix, &mut out);
    out
}

fn walk(
    g: &ArrangementGraph,
    target: ChamberId,
    len: usize,
    prefix: &mut Vec<ChamberId>,
    out: &mut Vec<Vec<ChamberId>>,
) {
    if prefix.len() == len + 1 {
        if *prefix.last().unwrap() == target {
            out.push(prefix.clone());
        }
        return;
    }
    let cur = *prefix.last().unwrap();
    for &nb in g.neighbors(cur) {
        prefix.push(nb);
        walk(g, target, len, prefix, out);
        prefix.pop();
    }
}

/// Separation set recomputed directly from the sign entries.
pub fn separation_by_signs(ch: &Chambers, a: ChamberId, b: ChamberId) -> Vec<usize> {
    let (ta, tb) = (ch.tope(a), ch.tope(b));
    (0..ch.n()).filter(|&i| ta.get(i) != tb.get(i)).collect()
}
