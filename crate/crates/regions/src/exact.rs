//! Exact rational arithmetic helpers: parsing, primitive integer rows, and
//! Gaussian elimination over the rationals.

use num::{BigInt, BigRational, Integer, Signed, Zero};

use crate::error::{Error, Result};

/// Parses `p`, `-p`, or `p/q` into a reduced rational with positive
/// denominator. Rejects zero denominators and anything non-numeric.
pub fn parse_rational(token: &str) -> Result<BigRational> {
    let t = token.trim();
    t.parse::<BigRational>()
        .map_err(|_| Error::MalformedRational {
            token: token.to_string(),
        })
}

/// Clears denominators and divides by the gcd, preserving signs.
/// The zero row maps to the zero row.
pub fn primitive_integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for r in row {
        lcm = lcm.lcm(r.denom());
    }
    let mut ints: Vec<BigInt> = row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if !g.is_zero() {
        for v in &mut ints {
            *v /= &g;
        }
    }
    ints
}

/// Row echelon form over the rationals (in place). Returns the rank.
/// The first `rank` rows of the output are a basis of the row space.
pub fn row_echelon(rows: &mut [Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let pivot_vals = rows[pivot_row].clone();
        for row in rows.iter_mut().skip(pivot_row + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_vals[col];
            for (value, pivot_val) in row.iter_mut().zip(&pivot_vals).skip(col) {
                let sub = &factor * pivot_val;
                *value = &*value - sub;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    pivot_row
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut work = rows.to_vec();
    row_echelon(&mut work)
}

/// A basis of the row space of `rows` (echelon rows).
pub fn row_space_basis(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut work = rows.to_vec();
    let r = row_echelon(&mut work);
    work.truncate(r);
    work
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigRational::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign_of(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
