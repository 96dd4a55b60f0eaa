//! Sign vectors over `{+, -, 0}`, the combinatorial coordinates of the engine.

use std::fmt;

use crate::error::{Error, Result};

/// One coordinate of a sign vector. The derived order gives `+ < - < 0`,
/// which makes the derived lexicographic order on sign vectors the canonical
/// chamber order (`+` before `-`; chamber topes never contain `0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            _ => None,
        }
    }
}

/// A fixed-length sequence over `{+, -, 0}`, one entry per hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> SignVector {
        SignVector(signs)
    }

    /// Parses a string of `+`, `-`, `0` characters.
    pub fn parse(s: &str) -> Result<SignVector> {
        let mut signs = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match Sign::from_char(c) {
                Some(sig) => signs.push(sig),
                None => {
                    return Err(Error::Parse(format!(
                        "invalid sign character `{c}` at position {i} in `{s}`"
                    )))
                }
            }
        }
        Ok(SignVector(signs))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn is_zero_free(&self) -> bool {
        self.0.iter().all(|s| *s != Sign::Zero)
    }

    pub fn negated(&self) -> SignVector {
        SignVector(self.0.iter().map(|s| s.flipped()).collect())
    }

    pub fn with_flipped(&self, i: usize) -> SignVector {
        let mut v = self.0.clone();
        v[i] = v[i].flipped();
        SignVector(v)
    }

    /// Bitmask encoding of a zero-free sign vector: bit `i` set iff entry `i`
    /// is `-`. Returns `None` if any entry is zero.
    pub fn mask(&self) -> Option<u64> {
        let mut m = 0u64;
        for (i, s) in self.0.iter().enumerate() {
            match s {
                Sign::Plus => {}
                Sign::Minus => m |= 1u64 << i,
                Sign::Zero => return None,
            }
        }
        Some(m)
    }

    /// Reconstructs a zero-free sign vector of length `n` from a bitmask.
    pub fn from_mask(mask: u64, n: usize) -> SignVector {
        SignVector(
            (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect(),
        )
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let v = SignVector::parse("+-0+").unwrap();
        assert_eq!(v.to_string(), "+-0+");
        assert!(!v.is_zero_free());
        assert!(SignVector::parse("+-+").unwrap().is_zero_free());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(SignVector::parse("+*-").is_err());
    }

    #[test]
    fn lexicographic_order_puts_plus_first() {
        let a = SignVector::parse("++").unwrap();
        let b = SignVector::parse("+-").unwrap();
        let c = SignVector::parse("-+").unwrap();
        assert!(a < b && b < c);
    }

    #[test]
    fn mask_round_trip() {
        let v = SignVector::parse("+--+").unwrap();
        let m = v.mask().unwrap();
        assert_eq!(m, 0b0110);
        assert_eq!(SignVector::from_mask(m, 4), v);
        assert_eq!(v.negated().mask().unwrap(), 0b1001);
    }
}
