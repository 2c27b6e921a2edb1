//! Exact linear algebra over the rationals.

mod matrix;
mod rational;
mod sparse;
mod subspace;

pub use matrix::MatrixQ;
pub use rational::{
    format_rational, format_vector, frac, int, one, parse_rational, parse_vector, zero, Rational,
};
pub use sparse::{RowEchelon, SparseRow};
pub use subspace::{subspace_contains, subspace_equal, Subspace};

pub(crate) use sparse::kernel_from_rref;

/// Unique reduced row-echelon form and the pivot columns.
pub fn rref(m: &MatrixQ) -> (MatrixQ, Vec<usize>) {
    let mut ech = RowEchelon::new(m.cols());
    for r in 0..m.rows() {
        ech.insert(SparseRow::from_dense(m.row(r)));
    }
    let (rows, pivots) = ech.into_rref();
    let mut out = MatrixQ::zeros(m.rows(), m.cols());
    for (i, row) in rows.iter().enumerate() {
        for (c, v) in &row.0 {
            out.set(i, *c, v.clone());
        }
    }
    (out, pivots)
}

/// Kernel of an echelon accumulator as a canonical subspace.
pub fn kernel_of(ech: RowEchelon) -> Subspace {
    let cols = ech.cols();
    let (rows, pivots) = ech.into_rref();
    Subspace::span_sparse(cols, kernel_from_rref(&rows, &pivots, cols))
}

/// Canonical basis of `{v : m v = 0}`.
pub fn kernel_basis(m: &MatrixQ) -> Subspace {
    let mut ech = RowEchelon::new(m.cols());
    for r in 0..m.rows() {
        ech.insert(SparseRow::from_dense(m.row(r)));
    }
    kernel_of(ech)
}

/// Solutions of `m x = rhs`: a particular solution (free variables set to
/// zero) together with the kernel, or `None` if the system is inconsistent.
pub fn solve_affine(m: &MatrixQ, rhs: &[Rational]) -> Option<(Vec<Rational>, Subspace)> {
    assert_eq!(rhs.len(), m.rows(), "rhs length must match row count");
    let cols = m.cols();
    let mut ech = RowEchelon::new(cols + 1);
    for r in 0..m.rows() {
        let mut row = m.row(r).to_vec();
        row.push(rhs[r].clone());
        ech.insert(SparseRow::from_dense(&row));
    }
    let (rows, pivots) = ech.into_rref();
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![zero(); cols];
    for (row, &p) in rows.iter().zip(&pivots) {
        if let Some(v) = row.get(cols) {
            x[p] = v.clone();
        }
    }
    Some((x, kernel_basis(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_zero_matrix_is_fixed() {
        let m = MatrixQ::from_ints(&[&[0, 0], &[0, 0]]);
        let (r, p) = rref(&m);
        assert_eq!(r, m);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = rref(&MatrixQ::from_ints(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, MatrixQ::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_invertible_is_identity() {
        let (r, p) = rref(&MatrixQ::from_ints(&[&[1, 2], &[3, 4]]));
        assert_eq!(r, MatrixQ::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_moves_zero_rows_down() {
        let (r, p) = rref(&MatrixQ::from_ints(&[&[0, 0, 0], &[0, 3, 6], &[1, 0, 1]]));
        assert_eq!(r, MatrixQ::from_ints(&[&[1, 0, 1], &[0, 1, 2], &[0, 0, 0]]));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&MatrixQ::identity(3)).dim(), 0);
        assert_eq!(kernel_basis(&MatrixQ::zeros(2, 3)), Subspace::full(3));

        let k = kernel_basis(&MatrixQ::from_ints(&[&[1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        assert!(k.contains_vector(&[int(1), int(-1), int(0)]).unwrap());
        assert!(k.contains_vector(&[int(0), int(0), int(1)]).unwrap());
        assert!(!k.contains_vector(&[int(1), int(0), int(0)]).unwrap());
    }

    #[test]
    fn subspace_examples() {
        let x = Subspace::span(2, [vec![int(1), int(0)]]);
        let y = Subspace::span(2, [vec![int(0), int(1)]]);
        let diag = Subspace::span(2, [vec![int(1), int(1)], vec![int(1), int(-1)]]);
        assert!(subspace_contains(&x, &x).unwrap());
        assert!(subspace_contains(&Subspace::full(2), &x).unwrap());
        assert!(!subspace_contains(&x, &y).unwrap());
        assert!(subspace_equal(&Subspace::zero(2), &Subspace::zero(2)).unwrap());
        assert!(subspace_equal(&diag, &Subspace::full(2)).unwrap());
        assert!(!subspace_equal(&x, &Subspace::full(2)).unwrap());
        assert!(subspace_equal(&x, &Subspace::full(3)).is_err());
        assert!(subspace_contains(&x, &Subspace::zero(3)).is_err());
    }

    #[test]
    fn affine_solve() {
        let m = MatrixQ::from_ints(&[&[1, 1], &[1, -1]]);
        let (x, k) = solve_affine(&m, &[int(3), int(1)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        assert_eq!(k.dim(), 0);
        let m = MatrixQ::from_ints(&[&[1, 1], &[2, 2]]);
        assert!(solve_affine(&m, &[int(1), int(3)]).is_none());
    }

    #[test]
    fn coordinates_in_rref_basis() {
        let s = Subspace::span(
            3,
            [vec![int(2), int(0), int(2)], vec![int(0), int(1), int(0)]],
        );
        let c = s.coordinates(&[int(3), int(5), int(3)]).unwrap().unwrap();
        assert_eq!(c, vec![int(3), int(5)]);
        assert!(s.coordinates(&[int(1), int(0), int(0)]).unwrap().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = MatrixQ> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                let rows = v
                    .chunks(c)
                    .map(|ch| ch.iter().map(|x| int(*x)).collect())
                    .collect();
                MatrixQ::from_rows(rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn kernel_vectors_annihilate(m in small_matrix()) {
            let k = kernel_basis(&m);
            for v in k.basis() {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| x == &zero()));
            }
            let (_, pivots) = rref(&m);
            prop_assert_eq!(pivots.len() + k.dim(), m.cols());
        }

        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let (r, p) = rref(&m);
            let (r2, p2) = rref(&r);
            prop_assert_eq!(r, r2);
            prop_assert_eq!(p, p2);
        }

        #[test]
        fn equality_is_mutual_containment(a in small_matrix(), b in small_matrix()) {
            let n = a.cols().min(b.cols());
            let s1 = Subspace::span(n, a.row_vecs().into_iter().map(|r| r[..n].to_vec()));
            let s2 = Subspace::span(n, b.row_vecs().into_iter().map(|r| r[..n].to_vec()));
            let both = s1.contains(&s2).unwrap() && s2.contains(&s1).unwrap();
            prop_assert_eq!(subspace_equal(&s1, &s2).unwrap(), both);
        }
    }
}
