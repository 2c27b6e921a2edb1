use num_traits::Zero;

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{MatrixQ, Rational};

/// A finite-dimensional bimodule given by the action matrices of basis
/// elements: `left[i]` is `m ↦ u_i · m`, `right[i]` is `m ↦ m · u_i`, both as
/// `dim × dim` matrices acting on column coordinate vectors.
///
/// The left and right acting algebras may differ (an `(A, B)`-bimodule);
/// biderivation work uses `A = B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    dim: usize,
    left: Vec<MatrixQ>,
    right: Vec<MatrixQ>,
    left_nz: Vec<Vec<(usize, usize, Rational)>>,
    right_nz: Vec<Vec<(usize, usize, Rational)>>,
}

fn nonzeros(m: &MatrixQ) -> Vec<(usize, usize, Rational)> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if !v.is_zero() {
                out.push((r, c, v.clone()));
            }
        }
    }
    out
}

impl Bimodule {
    pub fn new(dim: usize, left: Vec<MatrixQ>, right: Vec<MatrixQ>) -> Result<Self> {
        for m in left.iter().chain(&right) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::InvalidBimodule(format!(
                    "action matrix is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let left_nz = left.iter().map(nonzeros).collect();
        let right_nz = right.iter().map(nonzeros).collect();
        Ok(Bimodule {
            dim,
            left,
            right,
            left_nz,
            right_nz,
        })
    }

    /// The algebra acting on itself by multiplication.
    pub fn regular(alg: &Algebra) -> Self {
        let d = alg.dim();
        let mut left = vec![MatrixQ::zeros(d, d); d];
        let mut right = vec![MatrixQ::zeros(d, d); d];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in alg.basis_product(i, j).support() {
                    // u_i u_j: column j of left[i], column i of right[j]
                    left[i].set(k, j, c.clone());
                    right[j].set(k, i, c.clone());
                }
            }
        }
        Self::new(d, left, right).expect("regular bimodule has consistent shape")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_matrix(&self, i: usize) -> &MatrixQ {
        &self.left[i]
    }

    pub fn right_matrix(&self, i: usize) -> &MatrixQ {
        &self.right[i]
    }

    /// Nonzero `(row, col, value)` entries of the left action of basis `i`.
    pub(crate) fn left_entries(&self, i: usize) -> &[(usize, usize, Rational)] {
        &self.left_nz[i]
    }

    pub(crate) fn right_entries(&self, i: usize) -> &[(usize, usize, Rational)] {
        &self.right_nz[i]
    }

    /// `x · m`.
    pub fn act_left(&self, x: &Element, m: &Element) -> Element {
        assert_eq!(
            x.dim(),
            self.left.len(),
            "acting element dimension mismatch"
        );
        Self::act(&self.left_nz, x, m, self.dim)
    }

    /// `m · x`.
    pub fn act_right(&self, m: &Element, x: &Element) -> Element {
        assert_eq!(
            x.dim(),
            self.right.len(),
            "acting element dimension mismatch"
        );
        Self::act(&self.right_nz, x, m, self.dim)
    }

    fn act(nz: &[Vec<(usize, usize, Rational)>], x: &Element, m: &Element, dim: usize) -> Element {
        assert_eq!(m.dim(), dim, "bimodule element dimension mismatch");
        let mut out = Element::zero(dim);
        for (i, xi) in x.support() {
            for (r, c, v) in &nz[i] {
                if !m.0[*c].is_zero() {
                    out.0[*r] += xi * v * &m.0[*c];
                }
            }
        }
        out
    }

    /// Checks the unital bimodule axioms: unity acts as the identity on both
    /// sides, `x·(y·m) = (xy)·m`, `(m·x)·y = m·(xy)` and `(x·m)·y = x·(m·y)`
    /// on all basis elements.
    pub fn validate(&self, left_alg: &Algebra, right_alg: &Algebra) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidBimodule(msg));
        if self.left.len() != left_alg.dim() {
            return fail(format!(
                "{} left action matrices for a {}-dimensional algebra",
                self.left.len(),
                left_alg.dim()
            ));
        }
        if self.right.len() != right_alg.dim() {
            return fail(format!(
                "{} right action matrices for a {}-dimensional algebra",
                self.right.len(),
                right_alg.dim()
            ));
        }
        let ms: Vec<Element> = (0..self.dim).map(|k| Element::basis(self.dim, k)).collect();
        for (k, m) in ms.iter().enumerate() {
            if &self.act_left(left_alg.unity(), m) != m {
                return fail(format!(
                    "left unity action is not the identity on m{}",
                    k + 1
                ));
            }
            if &self.act_right(m, right_alg.unity()) != m {
                return fail(format!(
                    "right unity action is not the identity on m{}",
                    k + 1
                ));
            }
        }
        for i in 0..left_alg.dim() {
            for j in 0..left_alg.dim() {
                let (x, y) = (left_alg.basis(i), left_alg.basis(j));
                let xy = left_alg.basis_product(i, j);
                for (k, m) in ms.iter().enumerate() {
                    if self.act_left(&x, &self.act_left(&y, m)) != self.act_left(xy, m) {
                        return fail(format!(
                            "left action not associative at (u{}, u{}, m{})",
                            i + 1,
                            j + 1,
                            k + 1
                        ));
                    }
                }
            }
        }
        for i in 0..right_alg.dim() {
            for j in 0..right_alg.dim() {
                let (x, y) = (right_alg.basis(i), right_alg.basis(j));
                let xy = right_alg.basis_product(i, j);
                for (k, m) in ms.iter().enumerate() {
                    if self.act_right(&self.act_right(m, &x), &y) != self.act_right(m, xy) {
                        return fail(format!(
                            "right action not associative at (m{}, u{}, u{})",
                            k + 1,
                            i + 1,
                            j + 1
                        ));
                    }
                }
            }
        }
        for i in 0..left_alg.dim() {
            for j in 0..right_alg.dim() {
                let (x, y) = (left_alg.basis(i), right_alg.basis(j));
                for (k, m) in ms.iter().enumerate() {
                    if self.act_right(&self.act_left(&x, m), &y)
                        != self.act_left(&x, &self.act_right(m, &y))
                    {
                        return fail(format!(
                            "actions do not commute at (u{}, m{}, u{})",
                            i + 1,
                            k + 1,
                            j + 1
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, Preset};

    #[test]
    fn regular_bimodule_matches_multiplication() {
        let a = build_algebra(&Preset::Matrix(2)).unwrap();
        let m = Bimodule::regular(&a);
        m.validate(&a, &a).unwrap();
        let x = Element::from_ints(&[1, 2, -1, 3]);
        let y = Element::from_ints(&[0, 1, 5, -2]);
        assert_eq!(m.act_left(&x, &y), a.mul(&x, &y));
        assert_eq!(m.act_right(&y, &x), a.mul(&y, &x));
    }

    #[test]
    fn non_unital_action_rejected() {
        let a = build_algebra(&Preset::OneDim).unwrap();
        let m = Bimodule::new(
            1,
            vec![MatrixQ::from_ints(&[&[2]])],
            vec![MatrixQ::identity(1)],
        )
        .unwrap();
        assert!(matches!(m.validate(&a, &a), Err(Error::InvalidBimodule(_))));
    }
}
