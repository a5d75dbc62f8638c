use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Coefficient ring used when combining chains.
///
/// `Signed` works in the three-element group `{-1, 0, +1}` (integers mod 3),
/// which keeps every sum of signed chains inside the allowed coefficients.
/// `Mod2` forgets orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arithmetic {
    Signed,
    Mod2,
}

impl Arithmetic {
    pub fn reduce(self, x: i64) -> i8 {
        match self {
            Arithmetic::Signed => match x.rem_euclid(3) {
                0 => 0,
                1 => 1,
                _ => -1,
            },
            Arithmetic::Mod2 => x.rem_euclid(2) as i8,
        }
    }
}

/// A sparse p-chain: cell index to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Chain {
    dim: usize,
    entries: BTreeMap<usize, i8>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a chain from `(cell, coefficient)` pairs. Zero coefficients are
    /// dropped; anything outside `{-1, 0, +1}` or a repeated cell is an error.
    pub fn from_pairs(dim: usize, pairs: impl IntoIterator<Item = (usize, i64)>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, c) in pairs {
            if !(-1..=1).contains(&c) {
                return Err(Error::InvalidCoefficient(c));
            }
            if entries.contains_key(&i) {
                return Err(Error::malformed(format!("cell {i} appears twice in chain")));
            }
            if c != 0 {
                entries.insert(i, c as i8);
            }
        }
        Ok(Self { dim, entries })
    }

    /// Chain from a dense coefficient vector.
    pub fn from_dense(dim: usize, coefs: &[i64]) -> Result<Self> {
        Self::from_pairs(dim, coefs.iter().copied().enumerate())
    }

    pub fn unit(dim: usize, cell: usize, sign: i8) -> Self {
        let mut c = Self::zero(dim);
        c.set(cell, sign);
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, cell: usize) -> i8 {
        self.entries.get(&cell).copied().unwrap_or(0)
    }

    pub fn set(&mut self, cell: usize, coef: i8) {
        if coef == 0 {
            self.entries.remove(&cell);
        } else {
            self.entries.insert(cell, coef);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in ascending cell order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.entries.iter().map(|(&i, &c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn to_dense(&self, len: usize) -> Vec<i64> {
        let mut out = vec![0; len];
        for (i, c) in self.iter() {
            out[i] = c as i64;
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|(&i, &c)| (i, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Chain, arith: Arithmetic) -> Result<Chain> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = self.clone();
        for (i, c) in other.iter() {
            let v = arith.reduce(out.get(i) as i64 + c as i64);
            out.set(i, v);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64, arith: Arithmetic) -> Chain {
        let mut out = Chain::zero(self.dim);
        for (i, c) in self.iter() {
            out.set(i, arith.reduce(k * c as i64));
        }
        out
    }

    pub fn reduce(&self, arith: Arithmetic) -> Chain {
        self.scale(1, arith)
    }
}

impl fmt::Display for Chain {
    /// Signed tokens in ascending order, e.g. `-0 +4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}{}", if c < 0 { '-' } else { '+' }, i)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_sum_stays_in_range() {
        let a = Chain::from_dense(1, &[1, 1, -1]).unwrap();
        let s = a.add(&a, Arithmetic::Signed).unwrap();
        assert_eq!(s.to_dense(3), vec![-1, -1, 1]);
        let z = s.add(&a, Arithmetic::Signed).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn mod2_sum_cancels() {
        let a = Chain::from_dense(1, &[1, 0, 1]).unwrap();
        assert!(a.add(&a, Arithmetic::Mod2).unwrap().is_zero());
    }

    #[test]
    fn rejects_large_coefficient() {
        assert!(matches!(
            Chain::from_dense(0, &[0, 2]),
            Err(Error::InvalidCoefficient(2))
        ));
    }

    #[test]
    fn display_tokens() {
        let a = Chain::from_dense(1, &[-1, 0, 0, 0, 1]).unwrap();
        assert_eq!(a.to_string(), "-0 +4");
    }
}
