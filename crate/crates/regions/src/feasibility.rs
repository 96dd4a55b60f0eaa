//! Exact strict feasibility of open sign cones by Fourier-Motzkin
//! elimination, with rational witness points.
//!
//! Every decision here is made over the rationals; no floating point.

use std::collections::BTreeSet;

use num::{BigInt, BigRational, Signed, Zero};

use crate::arrangement::{Arrangement, Mode};
use crate::error::{Error, Result};
use crate::exact;
use crate::sign::{Sign, SignVector};

/// Decides whether the open cone
/// `{ x : sign(<normal_i, x>) = pattern_i for all i }` is nonempty.
pub fn strict_feasible(arr: &Arrangement, pattern: &SignVector) -> Result<bool> {
    let rows = signed_rows(arr, pattern)?;
    Ok(fm_feasible(rows, arr.dimension().unwrap()))
}

/// Like [`strict_feasible`], but on success also produces an interior
/// rational point with exactly the requested sign pattern.
pub fn strict_witness(arr: &Arrangement, pattern: &SignVector) -> Result<Option<Vec<BigRational>>> {
    let rows = signed_rows(arr, pattern)?;
    Ok(fm_witness(rows, arr.dimension().unwrap()))
}

fn signed_rows(arr: &Arrangement, pattern: &SignVector) -> Result<Vec<Vec<BigInt>>> {
    if arr.mode() != Mode::Geometric {
        return Err(Error::TopeMode {
            operation: "strict_feasible",
        });
    }
    let hyperplanes = arr.hyperplanes()?;
    if pattern.len() != arr.n() {
        return Err(Error::Parse(format!(
            "sign pattern has length {}, expected {}",
            pattern.len(),
            arr.n()
        )));
    }
    if !pattern.is_zero_free() {
        return Err(Error::Parse(
            "sign pattern for a chamber must be zero-free".into(),
        ));
    }
    let mut rows = Vec::with_capacity(arr.n());
    for (h, s) in hyperplanes.iter().zip(pattern.signs()) {
        let mut row = exact::primitive_integer_row(&h.normal);
        if *s == Sign::Minus {
            for v in &mut row {
                *v = -std::mem::take(v);
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Rows normalized to primitive integer vectors; the system is
/// `<row, x> > 0` for every row. Used directly by chamber enumeration.
pub(crate) fn fm_feasible(rows: Vec<Vec<BigInt>>, dim: usize) -> bool {
    let mut rows: BTreeSet<Vec<BigInt>> = rows.into_iter().map(normalize).collect();
    if rows.iter().any(|r| is_zero_row(r)) {
        return false;
    }
    let mut remaining: Vec<usize> = (0..dim).collect();
    while !rows.is_empty() && !remaining.is_empty() {
        let col = pick_column(&rows, &remaining);
        match eliminate(&rows, col) {
            Some(next) => rows = next,
            None => return false,
        }
        remaining.retain(|&c| c != col);
    }
    // rows nonzero on remaining columns only, so exhausting the columns
    // exhausts the rows
    rows.is_empty()
}

fn fm_witness(rows: Vec<Vec<BigInt>>, dim: usize) -> Option<Vec<BigRational>> {
    let mut rows: BTreeSet<Vec<BigInt>> = rows.into_iter().map(normalize).collect();
    if rows.iter().any(|r| is_zero_row(r)) {
        return None;
    }
    let mut remaining: Vec<usize> = (0..dim).collect();
    let mut steps: Vec<(usize, Vec<Vec<BigInt>>)> = Vec::new();
    while !rows.is_empty() && !remaining.is_empty() {
        let col = pick_column(&rows, &remaining);
        steps.push((col, rows.iter().cloned().collect()));
        rows = eliminate(&rows, col)?;
        remaining.retain(|&c| c != col);
    }
    if !rows.is_empty() {
        return None;
    }
    let mut point: Vec<BigRational> = vec![BigRational::zero(); dim];
    for (col, system) in steps.into_iter().rev() {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for row in &system {
            if row[col].is_zero() {
                continue;
            }
            let mut rest = BigRational::zero();
            for (j, coeff) in row.iter().enumerate() {
                if j != col && !coeff.is_zero() {
                    rest += BigRational::from_integer(coeff.clone()) * &point[j];
                }
            }
            let bound = -rest / BigRational::from_integer(row[col].clone());
            if row[col].is_positive() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        point[col] = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l < u);
                (l + u) / BigRational::from_integer(2.into())
            }
            (Some(l), None) => l + BigRational::from_integer(1.into()),
            (None, Some(u)) => u - BigRational::from_integer(1.into()),
            (None, None) => BigRational::zero(),
        };
    }
    Some(point)
}

fn pick_column(rows: &BTreeSet<Vec<BigInt>>, remaining: &[usize]) -> usize {
    let mut best = remaining[0];
    let mut best_cost = usize::MAX;
    for &col in remaining {
        let pos = rows.iter().filter(|r| r[col].is_positive()).count();
        let neg = rows.iter().filter(|r| r[col].is_negative()).count();
        if pos + neg == 0 {
            continue;
        }
        let cost = pos * neg;
        if cost < best_cost {
            best_cost = cost;
            best = col;
        }
    }
    if best_cost == usize::MAX {
        // no row touches any remaining column; impossible for nonzero rows,
        // but fall back deterministically
        remaining[0]
    } else {
        best
    }
}

/// One elimination step. Returns `None` when the combination `0 > 0` is
/// derived, i.e. the system is infeasible.
fn eliminate(rows: &BTreeSet<Vec<BigInt>>, col: usize) -> Option<BTreeSet<Vec<BigInt>>> {
    let mut out: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let mut pos: Vec<&Vec<BigInt>> = Vec::new();
    let mut neg: Vec<&Vec<BigInt>> = Vec::new();
    for row in rows {
        if row[col].is_positive() {
            pos.push(row);
        } else if row[col].is_negative() {
            neg.push(row);
        } else {
            out.insert(row.clone());
        }
    }
    for p in &pos {
        for q in &neg {
            let pc = &p[col];
            let qc_abs = -&q[col];
            let combined: Vec<BigInt> = p
                .iter()
                .zip(q.iter())
                .map(|(a, b)| a * &qc_abs + b * pc)
                .collect();
            let combined = normalize(combined);
            if is_zero_row(&combined) {
                return None;
            }
            out.insert(combined);
        }
    }
    Some(out)
}

fn normalize(row: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for v in &row {
        g = num::Integer::gcd(&g, v);
    }
    if g.is_zero() || g == BigInt::from(1) {
        return row;
    }
    row.into_iter().map(|v| v / &g).collect()
}

fn is_zero_row(row: &[BigInt]) -> bool {
    row.iter().all(|v| v.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::normals_from_ints;

    fn arr(d: usize, rows: &[&[i64]]) -> Arrangement {
        Arrangement::from_normals(d, normals_from_ints(rows)).unwrap()
    }

    fn sv(s: &str) -> SignVector {
        SignVector::parse(s).unwrap()
    }

    #[test]
    fn first_quadrant_is_feasible() {
        let a = arr(2, &[&[1, 0], &[0, 1]]);
        assert!(strict_feasible(&a, &sv("++")).unwrap());
        assert!(strict_feasible(&a, &sv("--")).unwrap());
    }

    #[test]
    fn contradictory_signs_on_three_concurrent_lines() {
        // signs of x, y, x+y: x>0 and y>0 force x+y>0
        let a = arr(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(!strict_feasible(&a, &sv("++-")).unwrap());
        assert!(strict_feasible(&a, &sv("+-+")).unwrap());
        assert!(strict_feasible(&a, &sv("+--")).unwrap());
    }

    #[test]
    fn generic_four_planes_have_fourteen_feasible_patterns() {
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let mut feasible = 0;
        for bits in 0u64..16 {
            let pattern = SignVector::from_mask(bits, 4);
            if strict_feasible(&a, &pattern).unwrap() {
                feasible += 1;
            }
        }
        assert_eq!(feasible, 14);
    }

    #[test]
    fn witness_points_match_their_pattern() {
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        for bits in 0u64..16 {
            let pattern = SignVector::from_mask(bits, 4);
            let w = strict_witness(&a, &pattern).unwrap();
            match w {
                None => assert!(!strict_feasible(&a, &pattern).unwrap()),
                Some(point) => {
                    for (h, s) in a.hyperplanes().unwrap().iter().zip(pattern.signs()) {
                        let val = exact::dot(&h.normal, &point);
                        let expect = if *s == Sign::Plus { 1 } else { -1 };
                        assert_eq!(exact::sign_of(&val), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn tope_mode_is_rejected() {
        let topes = ["++", "+-", "-+", "--"].iter().map(|s| sv(s)).collect();
        let a = Arrangement::from_topes(2, topes).unwrap();
        assert!(matches!(
            strict_feasible(&a, &sv("++")),
            Err(Error::TopeMode { .. })
        ));
    }
}
