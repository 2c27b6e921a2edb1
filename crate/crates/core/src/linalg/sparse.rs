//! Sparse rows and an incremental row-echelon accumulator.
//!
//! Constraint systems coming from structure constants are very sparse and
//! heavily redundant (tens of thousands of rows, rank at most the column
//! count), so rows are reduced one at a time against the pivots collected
//! so far and only independent rows are kept.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;

/// A sparse vector: `(column, value)` pairs, strictly increasing columns,
/// no stored zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseRow(pub Vec<(usize, Rational)>);

impl SparseRow {
    pub fn new() -> Self {
        SparseRow(Vec::new())
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseRow(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        )
    }

    pub fn from_map(m: BTreeMap<usize, Rational>) -> Self {
        SparseRow(m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, v) in &self.0 {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lead(&self) -> Option<usize> {
        self.0.first().map(|(c, _)| *c)
    }

    pub fn get(&self, col: usize) -> Option<&Rational> {
        self.0
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.0[i].1)
    }

    /// `self - factor * other`, merged.
    pub fn sub_scaled(&self, factor: &Rational, other: &SparseRow) -> SparseRow {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, -(factor * &b[j].1)));
                j += 1;
            } else {
                let v = &a[i].1 - factor * &b[j].1;
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseRow(out)
    }

    pub fn scale(&mut self, factor: &Rational) {
        for (_, v) in &mut self.0 {
            *v *= factor;
        }
    }

    pub fn dot(&self, dense: &[Rational]) -> Rational {
        self.0
            .iter()
            .fold(Rational::zero(), |acc, (c, v)| acc + v * &dense[*c])
    }
}

/// Rows kept in echelon form: each stored row has a distinct leading
/// column whose entry is 1.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    cols: usize,
    rows: Vec<SparseRow>,
    pivot_of_col: BTreeMap<usize, usize>,
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        RowEchelon {
            cols,
            rows: Vec::new(),
            pivot_of_col: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored pivots; the remainder is zero iff
    /// `row` lies in the span of the rows inserted so far.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut start = 0;
        loop {
            let next = row.0[start..]
                .iter()
                .position(|(c, _)| self.pivot_of_col.contains_key(c));
            let Some(offset) = next else { return row };
            let pos = start + offset;
            let (col, factor) = row.0[pos].clone();
            let pivot = &self.rows[self.pivot_of_col[&col]];
            row = row.sub_scaled(&factor, pivot);
            // entries before `pos` are untouched: the pivot row starts at `col`
            start = pos;
        }
    }

    /// Inserts a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.0.iter().all(|(c, _)| *c < self.cols));
        let mut row = self.reduce(row);
        let Some(lead) = row.lead() else { return false };
        let inv = row.0[0].1.recip();
        row.scale(&inv);
        self.pivot_of_col.insert(lead, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Back-substitutes to the unique reduced row-echelon form. Rows are
    /// returned sorted by pivot column.
    pub fn into_rref(self) -> (Vec<SparseRow>, Vec<usize>) {
        let RowEchelon {
            mut rows,
            pivot_of_col,
            ..
        } = self;
        let pivots: Vec<usize> = pivot_of_col.keys().copied().collect();
        // highest pivot first, so every row used for elimination is already reduced
        for &p in pivots.iter().rev() {
            let idx = pivot_of_col[&p];
            let mut row = std::mem::take(&mut rows[idx]);
            let targets: Vec<(usize, Rational)> = row.0[1..]
                .iter()
                .filter(|(c, _)| pivot_of_col.contains_key(c))
                .cloned()
                .collect();
            for (c, factor) in targets {
                let other = &rows[pivot_of_col[&c]];
                row = row.sub_scaled(&factor, other);
            }
            rows[idx] = row;
        }
        let ordered = pivots
            .iter()
            .map(|p| std::mem::take(&mut rows[pivot_of_col[p]]))
            .collect();
        (ordered, pivots)
    }
}

/// Kernel vectors read off a reduced row-echelon form, one per free column.
pub(crate) fn kernel_from_rref(
    rref: &[SparseRow],
    pivots: &[usize],
    cols: usize,
) -> Vec<SparseRow> {
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &p in pivots {
            v[p] = true;
        }
        v
    };
    let mut by_free: BTreeMap<usize, BTreeMap<usize, Rational>> = (0..cols)
        .filter(|c| !is_pivot[*c])
        .map(|c| (c, BTreeMap::from([(c, Rational::one())])))
        .collect();
    for (row, &p) in rref.iter().zip(pivots) {
        for (c, v) in &row.0[1..] {
            if let Some(vec) = by_free.get_mut(c) {
                vec.insert(p, -v.clone());
            }
        }
    }
    by_free.into_values().map(SparseRow::from_map).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn row(v: &[i64]) -> SparseRow {
        SparseRow::from_dense(&v.iter().map(|x| int(*x)).collect::<Vec<_>>())
    }

    #[test]
    fn sub_scaled_cancels() {
        let a = row(&[1, 2, 0, 3]);
        let b = row(&[1, 0, 5, 3]);
        assert_eq!(a.sub_scaled(&int(1), &b), row(&[0, 2, -5, 0]));
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let mut e = RowEchelon::new(3);
        assert!(e.insert(row(&[1, 1, 0])));
        assert!(e.insert(row(&[0, 1, 1])));
        assert!(!e.insert(row(&[1, 2, 1])));
        assert_eq!(e.rank(), 2);
        let (rref, pivots) = e.into_rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rref[0], row(&[1, 0, -1]));
        assert_eq!(rref[1], row(&[0, 1, 1]));
    }
}
