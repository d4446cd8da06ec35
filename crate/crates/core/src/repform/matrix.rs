use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::{Rational, Ring, SurdSum, Zero};

/// Sparse square matrix with `SurdSum` entries.
///
/// Column `j` is the image of the `j`-th basis vector, so products compose
/// like operators: `(A·B)v = A(Bv)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMatrix {
    dim: usize,
    rows: Vec<BTreeMap<usize, SurdSum>>,
}

/// Dense rows of `SurdSum` entries.
impl serde::Serialize for RepMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_dense().serialize(s)
    }
}

impl RepMatrix {
    pub fn zero(dim: usize) -> Self {
        RepMatrix { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![Rational::from_integer(1.into()); dim])
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut m = Self::zero(d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, SurdSum::rational(x.clone()));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> SurdSum {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, v: SurdSum) {
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    /// Nonzero entries `(i, j, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &SurdSum)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix size mismatch");
        let mut out = Self::zero(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, SurdSum> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    let e = acc.entry(*j).or_default();
                    *e = e.add_ref(&a.mul_ref(b));
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.rows[i] = acc;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix size mismatch");
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            let s = out.get(i, j).add_ref(v);
            out.set(i, j, s);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let c = SurdSum::rational(c.clone());
        let mut out = Self::zero(self.dim);
        for (i, j, v) in self.entries() {
            out.set(i, j, v.mul_ref(&c));
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (i, j, v) in self.entries() {
            out.set(j, i, v.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries().all(|(i, j, v)| &self.get(j, i) == v)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, _)| i == j)
    }

    /// The scalar `c` if the matrix equals `c·I`.
    pub fn as_scalar(&self) -> Option<SurdSum> {
        if !self.is_diagonal() {
            return None;
        }
        let c = self.get(0, 0);
        (1..self.dim).all(|i| self.get(i, i) == c).then_some(c)
    }

    pub fn trace(&self) -> SurdSum {
        (0..self.dim).fold(SurdSum::zero(), |acc, i| acc.add_ref(&self.get(i, i)))
    }

    /// Principal submatrix on the given indices.
    pub fn block(&self, idx: &[usize]) -> Self {
        let mut out = Self::zero(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<SurdSum>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j)).collect()).collect()
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepMatrix({})\n{self}", self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;

    #[test]
    fn products_and_scalars() {
        let mut a = RepMatrix::zero(2);
        a.set(0, 1, SurdSum::term(2, rat(1, 1)));
        a.set(1, 0, SurdSum::term(2, rat(1, 1)));
        let sq = a.mul(&a);
        assert_eq!(sq.as_scalar(), Some(SurdSum::rational(rat(2, 1))));
        assert!(a.is_symmetric());
        assert!(!a.is_diagonal());
        assert_eq!(a.sub(&a), RepMatrix::zero(2));
        assert_eq!(RepMatrix::identity(3).trace(), SurdSum::rational(rat(3, 1)));
    }
}
