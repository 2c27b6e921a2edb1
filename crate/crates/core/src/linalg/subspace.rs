use num_traits::Zero;

use super::rational::Rational;
use super::sparse::{RowEchelon, SparseRow};
use crate::error::{Error, Result};

/// A linear subspace of `Q^n`, stored by its canonical reduced row-echelon
/// basis. Two subspaces are equal iff their stored bases are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(
            ambient_dim,
            (0..ambient_dim).map(|i| {
                let mut v = vec![Rational::zero(); ambient_dim];
                v[i] = super::rational::one();
                v
            }),
        )
    }

    /// The span of arbitrary (possibly dependent) vectors.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        Self::span_sparse(
            ambient_dim,
            vectors.into_iter().map(|v| {
                assert_eq!(v.len(), ambient_dim, "spanning vector of wrong length");
                SparseRow::from_dense(&v)
            }),
        )
    }

    pub(crate) fn span_sparse<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SparseRow>,
    {
        let mut ech = RowEchelon::new(ambient_dim);
        for v in vectors {
            ech.insert(v);
        }
        Self::from_echelon(ech)
    }

    pub(crate) fn from_echelon(ech: RowEchelon) -> Self {
        let ambient_dim = ech.cols();
        let (rows, pivots) = ech.into_rref();
        Subspace {
            ambient_dim,
            basis: rows.iter().map(|r| r.to_dense(ambient_dim)).collect(),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating against the basis.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &f * r;
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(self.reduce(v).iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace. With an RREF basis these are just the pivot entries.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if !self.contains_vector(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// `true` iff `inner ⊆ self`.
    pub fn contains(&self, inner: &Subspace) -> Result<bool> {
        self.check_len(inner.ambient_dim)?;
        Ok(inner
            .basis
            .iter()
            .all(|v| self.reduce(v).iter().all(Zero::is_zero)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        Ok(Self::span(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        ))
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }
}

pub fn subspace_contains(outer: &Subspace, inner: &Subspace) -> Result<bool> {
    outer.contains(inner)
}

pub fn subspace_equal(s1: &Subspace, s2: &Subspace) -> Result<bool> {
    s1.check_len(s2.ambient_dim)?;
    Ok(s1 == s2)
}
