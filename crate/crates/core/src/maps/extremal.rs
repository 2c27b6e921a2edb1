use super::BilinearMap;
use crate::algebra::{center, Algebra, Element};
use crate::linalg::{solve_affine, MatrixQ, Rational};

/// Whether a map into the algebra is an extremal biderivation
/// `(x, y) ↦ [x, [y, a]]` with `[[A, A], a] = 0` and `a` non-central.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalWitness {
    Extremal(Element),
    Zero,
    NotExtremal,
}

impl ExtremalWitness {
    pub fn is_extremal_or_zero(&self) -> bool {
        !matches!(self, ExtremalWitness::NotExtremal)
    }
}

/// Solves `[u_i, [u_j, a]] = B(u_i, u_j)` together with `[[u_i, u_j], a] = 0`
/// for `a`. The particular solution with free coordinates zero is returned.
pub fn find_extremal_witness(alg: &Algebra, b: &BilinearMap) -> ExtremalWitness {
    assert!(
        b.dim() == alg.dim() && b.target_dim() == alg.dim(),
        "extremal witness needs a map A × A → A"
    );
    if b.is_zero() {
        return ExtremalWitness::Zero;
    }
    let d = alg.dim();
    let basis = alg.basis_elements();
    // column l of each block is the image of u_l
    let nested: Vec<Vec<Element>> = basis
        .iter()
        .map(|ul| {
            let mut out = Vec::with_capacity(2 * d * d);
            for ui in &basis {
                for uj in &basis {
                    out.push(alg.commutator(ui, &alg.commutator(uj, ul)));
                }
            }
            for ui in &basis {
                for uj in &basis {
                    out.push(alg.commutator(&alg.commutator(ui, uj), ul));
                }
            }
            out
        })
        .collect();
    let rows = 2 * d * d * d;
    let mut m = MatrixQ::zeros(rows, d);
    for (l, col) in nested.iter().enumerate() {
        for (r, v) in col.iter().flat_map(|e| e.0.iter()).enumerate() {
            m.set(r, l, v.clone());
        }
    }
    let mut rhs: Vec<Rational> = Vec::with_capacity(rows);
    for i in 0..d {
        for j in 0..d {
            rhs.extend(b.value(i, j).0.iter().cloned());
        }
    }
    rhs.resize(rows, crate::linalg::zero());
    let Some((particular, kernel)) = solve_affine(&m, &rhs) else {
        return ExtremalWitness::NotExtremal;
    };
    // B ≠ 0 forces any solution to be non-central; guard anyway
    let z = center(alg);
    let a = Element(particular);
    if !z.contains_vector(a.coords()).unwrap_or(true) {
        return ExtremalWitness::Extremal(a);
    }
    kernel
        .basis()
        .iter()
        .map(|k| &a + &Element(k.clone()))
        .find(|c| !z.contains_vector(c.coords()).unwrap_or(true))
        .map_or(ExtremalWitness::NotExtremal, ExtremalWitness::Extremal)
}
