//! Finite-dimensional unital associative algebras by structure constants.

mod bimodule;
mod element;
mod hypotheses;
mod peirce;
mod presets;

pub use bimodule::Bimodule;
pub use element::Element;
pub use hypotheses::{check_hypothesis, Hypothesis, HypothesisVerdict};
pub use peirce::{peirce_context, peirce_split, Corner, PeirceComponents, PeirceContext};
pub use presets::{build_algebra, Preset, TriangularData};

use crate::error::{Error, Result};
use crate::linalg::{kernel_of, Rational, RowEchelon, SparseRow, Subspace};

/// A unital associative algebra over the rationals, given by its
/// structure constants: `u_i * u_j = sum_k table[i][j][k] u_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    basis_names: Vec<String>,
    products: Vec<Element>,
    unity: Element,
}

/// Outcome of [`validate_algebra`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// First basis triple `(i, j, k)` (0-based) with `(u_i u_j) u_k != u_i (u_j u_k)`.
    NotAssociative(usize, usize, usize),
    /// First basis index where `1 * u_i = u_i = u_i * 1` fails.
    UnityFails(usize),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

impl Algebra {
    /// Builds and validates an algebra. `table[i][j]` holds the coordinates
    /// of `u_i * u_j`.
    pub fn new(
        name: impl Into<String>,
        basis_names: Vec<String>,
        table: Vec<Vec<Element>>,
        unity: Element,
    ) -> Result<Self> {
        let alg = Self::new_unchecked(name, basis_names, table, unity)?;
        match alg.validate() {
            Validity::Valid => Ok(alg),
            Validity::NotAssociative(i, j, k) => Err(Error::NotAssociative {
                triple: (i, j, k),
                names: format!(
                    "{}, {}, {}",
                    alg.basis_names[i], alg.basis_names[j], alg.basis_names[k]
                ),
            }),
            Validity::UnityFails(i) => Err(Error::UnityLaw {
                index: i,
                name: alg.basis_names[i].clone(),
            }),
        }
    }

    /// Shape checks only; associativity and the unity law are not verified.
    pub fn new_unchecked(
        name: impl Into<String>,
        basis_names: Vec<String>,
        table: Vec<Vec<Element>>,
        unity: Element,
    ) -> Result<Self> {
        let d = basis_names.len();
        let field_err = |field: String, found: usize| Error::FieldLength {
            field,
            expected: d,
            found,
        };
        if table.len() != d {
            return Err(field_err("table".into(), table.len()));
        }
        if unity.dim() != d {
            return Err(field_err("unity".into(), unity.dim()));
        }
        let mut products = Vec::with_capacity(d * d);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != d {
                return Err(field_err(format!("table[{i}]"), row.len()));
            }
            for (j, p) in row.into_iter().enumerate() {
                if p.dim() != d {
                    return Err(field_err(format!("table[{i}][{j}]"), p.dim()));
                }
                products.push(p);
            }
        }
        Ok(Algebra {
            name: name.into(),
            basis_names,
            products,
            unity,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unity(&self) -> &Element {
        &self.unity
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis(i)).collect()
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    /// `u_i * u_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &Element {
        &self.products[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.basis_product(i, j).0[k]
    }

    /// Structure constants as nested vectors, `table[i][j]` = `u_i * u_j`.
    pub fn table(&self) -> Vec<Vec<Element>> {
        let d = self.dim();
        (0..d)
            .map(|i| (0..d).map(|j| self.basis_product(i, j).clone()).collect())
            .collect()
    }

    /// Bilinear extension of the structure constants.
    ///
    /// Panics on a dimension mismatch; see [`multiply`] for the checked form.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let d = self.dim();
        assert!(x.dim() == d && y.dim() == d, "element dimension mismatch");
        let mut out = self.zero();
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                out.add_scaled(&(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn mul3(&self, x: &Element, y: &Element, z: &Element) -> Element {
        self.mul(&self.mul(x, y), z)
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        &self.mul(x, y) - &self.mul(y, x)
    }

    /// `x ∘ y = xy + yx`.
    pub fn jordan(&self, x: &Element, y: &Element) -> Element {
        &self.mul(x, y) + &self.mul(y, x)
    }

    pub fn validate(&self) -> Validity {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.mul(ij, &self.basis(k));
                    let right = self.mul(&self.basis(i), self.basis_product(j, k));
                    if left != right {
                        return Validity::NotAssociative(i, j, k);
                    }
                }
            }
        }
        for i in 0..d {
            let u = self.basis(i);
            if self.mul(&self.unity, &u) != u || self.mul(&u, &self.unity) != u {
                return Validity::UnityFails(i);
            }
        }
        Validity::Valid
    }

    /// Whether the span of `sub` is closed under multiplication.
    pub fn is_closed(&self, sub: &Subspace) -> bool {
        let basis: Vec<Element> = sub.basis().iter().cloned().map(Element).collect();
        basis.iter().all(|x| {
            basis.iter().all(|y| {
                sub.contains_vector(self.mul(x, y).coords())
                    .unwrap_or(false)
            })
        })
    }
}

/// Associativity on all basis triples, then the unity law.
pub fn validate_algebra(alg: &Algebra) -> Validity {
    alg.validate()
}

pub fn multiply(alg: &Algebra, x: &Element, y: &Element) -> Result<Element> {
    for v in [x, y] {
        if v.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: v.dim(),
            });
        }
    }
    Ok(alg.mul(x, y))
}

/// The center `{x : x u_i = u_i x for all i}`.
pub fn center(alg: &Algebra) -> Subspace {
    let d = alg.dim();
    let mut ech = RowEchelon::new(d);
    // row (i, k): sum_j x_j (c_{j i k} - c_{i j k}) = 0
    for i in 0..d {
        for k in 0..d {
            let row: Vec<Rational> = (0..d)
                .map(|j| alg.structure_constant(j, i, k) - alg.structure_constant(i, j, k))
                .collect();
            ech.insert(SparseRow::from_dense(&row));
        }
    }
    kernel_of(ech)
}

/// The ideal of the corner algebra `corner` generated by commutators of its
/// elements, closed under left and right multiplication by the corner until
/// the dimension stabilizes.
pub fn commutator_ideal(alg: &Algebra, corner: &Subspace) -> Result<Subspace> {
    if corner.ambient_dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: corner.ambient_dim(),
        });
    }
    if !alg.is_closed(corner) {
        return Err(Error::NotSubalgebra);
    }
    let gens: Vec<Element> = corner.basis().iter().cloned().map(Element).collect();
    let mut ideal = Subspace::span(
        alg.dim(),
        gens.iter()
            .flat_map(|x| gens.iter().map(move |y| (x, y)))
            .map(|(x, y)| alg.commutator(x, y).0),
    );
    loop {
        let current: Vec<Element> = ideal.basis().iter().cloned().map(Element).collect();
        let mut products = Vec::new();
        for c in &gens {
            for s in &current {
                products.push(alg.mul(c, s).0);
                products.push(alg.mul(s, c).0);
            }
        }
        let grown = ideal.sum(&Subspace::span(alg.dim(), products))?;
        if grown.dim() == ideal.dim() {
            return Ok(ideal);
        }
        ideal = grown;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn t2() -> Algebra {
        build_algebra(&Preset::UpperTriangular(2)).unwrap()
    }

    fn m2() -> Algebra {
        build_algebra(&Preset::Matrix(2)).unwrap()
    }

    #[test]
    fn t2_products() {
        let a = t2();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.basis_names(), ["E11", "E12", "E22"]);
        let (e11, e12, e22) = (a.basis(0), a.basis(1), a.basis(2));
        assert_eq!(a.mul(&e11, &e12), e12);
        assert_eq!(a.mul(&e12, &e22), e12);
        assert!(a.mul(&e12, &e12).is_zero());
        assert_eq!(a.unity(), &Element::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn m2_products() {
        let a = m2();
        assert_eq!(a.dim(), 4);
        // E11, E12, E21, E22
        assert_eq!(a.mul(&a.basis(1), &a.basis(2)), a.basis(0));
        assert_eq!(a.mul(&a.basis(2), &a.basis(1)), a.basis(3));
    }

    #[test]
    fn one_dim() {
        let a = build_algebra(&Preset::OneDim).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.mul(&a.basis(0), &a.basis(0)), a.basis(0));
        assert_eq!(a.unity(), &a.basis(0));
    }

    #[test]
    fn validation_examples() {
        assert!(validate_algebra(&build_algebra(&Preset::UpperTriangular(3)).unwrap()).is_valid());
        assert!(validate_algebra(&m2()).is_valid());

        let mut table = t2().table();
        table[0][0] = Element::from_ints(&[1, 1, 0]);
        let bad = Algebra::new_unchecked(
            "bad",
            t2().basis_names().to_vec(),
            table,
            t2().unity().clone(),
        )
        .unwrap();
        assert_eq!(validate_algebra(&bad), Validity::NotAssociative(0, 0, 0));
    }

    #[test]
    fn unity_failure_is_reported() {
        let a = t2();
        let err = Algebra::new(
            "t2",
            a.basis_names().to_vec(),
            a.table(),
            Element::from_ints(&[1, 0, 0]),
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::UnityLaw {
                index: 1,
                name: "E12".into()
            }
        );
    }

    #[test]
    fn multiply_examples() {
        let a = t2();
        let x = Element::from_ints(&[1, 2, 0]);
        let y = Element::from_ints(&[0, 0, 3]);
        assert_eq!(
            multiply(&a, &x, &y).unwrap(),
            Element::from_ints(&[0, 6, 0])
        );
        assert_eq!(a.commutator(&a.basis(0), &a.basis(1)), a.basis(1));
        assert_eq!(a.jordan(&a.basis(0), &a.basis(1)), a.basis(1));
        assert!(multiply(&a, &Element::from_ints(&[1, 0]), &y).is_err());
    }

    #[test]
    fn center_examples() {
        let one = build_algebra(&Preset::OneDim).unwrap();
        assert_eq!(center(&one), Subspace::full(1));

        let z = center(&t2());
        assert_eq!(z, Subspace::span(3, [vec![int(1), int(0), int(1)]]));

        let z = center(&m2());
        assert_eq!(z, Subspace::span(4, [vec![int(1), int(0), int(0), int(1)]]));
    }

    #[test]
    fn commutator_ideal_examples() {
        let a = t2();
        let ctx = peirce_context(&a, &a.basis(0)).unwrap();
        assert!(commutator_ideal(&a, ctx.corner(Corner::A11))
            .unwrap()
            .is_zero());

        let m = m2();
        assert_eq!(
            commutator_ideal(&m, &Subspace::full(4)).unwrap(),
            Subspace::full(4)
        );

        let one = build_algebra(&Preset::OneDim).unwrap();
        assert!(commutator_ideal(&one, &Subspace::full(1))
            .unwrap()
            .is_zero());

        // span{E12} is not a unital corner but is closed; span{E12, E21} is not closed
        let not_closed = Subspace::span(4, [m.basis(1).0, m.basis(2).0]);
        assert_eq!(commutator_ideal(&m, &not_closed), Err(Error::NotSubalgebra));
    }

    #[test]
    fn center_contains_unity() {
        for p in [
            Preset::OneDim,
            Preset::Matrix(3),
            Preset::UpperTriangular(3),
            Preset::BlockUpperTriangular(vec![2, 1]),
        ] {
            let a = build_algebra(&p).unwrap();
            assert!(center(&a).contains_vector(a.unity().coords()).unwrap());
        }
    }
}
