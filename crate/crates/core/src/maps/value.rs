//! Values a map identity can be evaluated in: concrete bimodule elements
//! (for checking a given map) or linear expressions in the unknown map
//! entries (for assembling the constraint system of all solutions).

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{Bimodule, Element};
use crate::linalg::{Rational, SparseRow};

pub(crate) trait MapValue: Clone {
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn scale(&self, s: &Rational) -> Self;
    /// `x · v`
    fn act_left(&self, module: &Bimodule, x: &Element) -> Self;
    /// `v · x`
    fn act_right(&self, module: &Bimodule, x: &Element) -> Self;
}

/// Something that yields `B(x, y)` for algebra elements `x`, `y`.
pub(crate) trait BilinearSource {
    type Value: MapValue;
    fn at(&self, x: &Element, y: &Element) -> Self::Value;
}

/// Something that yields `D(x)`.
pub(crate) trait LinearSource {
    type Value: MapValue;
    fn at(&self, x: &Element) -> Self::Value;
}

impl MapValue for Element {
    fn zero_like(&self) -> Self {
        Element::zero(self.dim())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn scale(&self, s: &Rational) -> Self {
        Element::scale(self, s)
    }
    fn act_left(&self, module: &Bimodule, x: &Element) -> Self {
        module.act_left(x, self)
    }
    fn act_right(&self, module: &Bimodule, x: &Element) -> Self {
        module.act_right(self, x)
    }
}

/// A bimodule-valued linear form in the unknowns: one sparse row per
/// target component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LinExpr(pub Vec<SparseRow>);

fn accumulate(acc: &mut BTreeMap<usize, Rational>, s: &Rational, row: &SparseRow) {
    for (c, v) in &row.0 {
        let entry = acc.entry(*c).or_insert_with(Rational::zero);
        *entry += s * v;
    }
}

impl LinExpr {
    pub fn zero(dim: usize) -> Self {
        LinExpr(vec![SparseRow::new(); dim])
    }

    fn combine(&self, other: &Self, sign: &Rational) -> Self {
        LinExpr(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.sub_scaled(sign, b))
                .collect(),
        )
    }

    fn act(&self, entries: impl Fn(usize) -> Vec<(usize, usize, Rational)>, x: &Element) -> Self {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); self.0.len()];
        for (i, xi) in x.support() {
            for (r, c, v) in entries(i) {
                if !self.0[c].is_zero() {
                    accumulate(&mut acc[r], &(xi * &v), &self.0[c]);
                }
            }
        }
        LinExpr(acc.into_iter().map(SparseRow::from_map).collect())
    }
}

impl MapValue for LinExpr {
    fn zero_like(&self) -> Self {
        LinExpr::zero(self.0.len())
    }
    fn add(&self, other: &Self) -> Self {
        self.combine(other, &-crate::linalg::one())
    }
    fn sub(&self, other: &Self) -> Self {
        self.combine(other, &crate::linalg::one())
    }
    fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return self.zero_like();
        }
        let mut out = self.clone();
        for r in &mut out.0 {
            r.scale(s);
        }
        out
    }
    fn act_left(&self, module: &Bimodule, x: &Element) -> Self {
        self.act(|i| module.left_entries(i).to_vec(), x)
    }
    fn act_right(&self, module: &Bimodule, x: &Element) -> Self {
        self.act(|i| module.right_entries(i).to_vec(), x)
    }
}

/// The unknown bilinear map `A × A → M`, vectorized row-major over
/// `(i, j, component)`.
pub(crate) struct SymbolicBilinear {
    pub d: usize,
    pub mdim: usize,
}

impl SymbolicBilinear {
    pub fn var(&self, i: usize, j: usize, c: usize) -> usize {
        (i * self.d + j) * self.mdim + c
    }
}

impl BilinearSource for SymbolicBilinear {
    type Value = LinExpr;
    fn at(&self, x: &Element, y: &Element) -> LinExpr {
        let mut rows = vec![Vec::new(); self.mdim];
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let s = xi * yj;
                for (c, row) in rows.iter_mut().enumerate() {
                    row.push((self.var(i, j, c), s.clone()));
                }
            }
        }
        // (i, j) ascending gives ascending variable indices per component
        LinExpr(rows.into_iter().map(SparseRow).collect())
    }
}

/// The unknown linear map `A → M`, vectorized row-major over `(i, component)`.
pub(crate) struct SymbolicLinear {
    pub mdim: usize,
}

impl LinearSource for SymbolicLinear {
    type Value = LinExpr;
    fn at(&self, x: &Element) -> LinExpr {
        LinExpr(
            (0..self.mdim)
                .map(|c| {
                    SparseRow(
                        x.support()
                            .map(|(i, xi)| (i * self.mdim + c, xi.clone()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}
