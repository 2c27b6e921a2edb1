//! Peirce decomposition with respect to a nontrivial idempotent.

use std::fmt;

use serde::Serialize;

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::Subspace;

/// The four Peirce corners `eAe`, `eAe'`, `e'Ae`, `e'Ae'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Corner {
    A11,
    A12,
    A21,
    A22,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::A11, Corner::A12, Corner::A21, Corner::A22];

    /// Conventional letter for elements of the corner: a, m, n, b.
    pub fn letter(self) -> char {
        match self {
            Corner::A11 => 'a',
            Corner::A12 => 'm',
            Corner::A21 => 'n',
            Corner::A22 => 'b',
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Corner::A11 => "A11",
            Corner::A12 => "A12",
            Corner::A21 => "A21",
            Corner::A22 => "A22",
        };
        f.write_str(s)
    }
}

/// A verified nontrivial idempotent `e`, its complement `e' = 1 - e`, and
/// the four corner subspaces, kept in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeirceContext {
    e: Element,
    e_prime: Element,
    corners: [Subspace; 4],
    corner_bases: [Vec<Element>; 4],
}

/// `x = a + m + n + b` with `a = exe`, `m = exe'`, `n = e'xe`, `b = e'xe'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeirceComponents {
    pub a: Element,
    pub m: Element,
    pub n: Element,
    pub b: Element,
}

impl PeirceComponents {
    pub fn get(&self, c: Corner) -> &Element {
        match c {
            Corner::A11 => &self.a,
            Corner::A12 => &self.m,
            Corner::A21 => &self.n,
            Corner::A22 => &self.b,
        }
    }

    pub fn sum(&self) -> Element {
        &(&(&self.a + &self.m) + &self.n) + &self.b
    }
}

impl PeirceContext {
    pub fn new(alg: &Algebra, e: &Element) -> Result<Self> {
        if e.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: e.dim(),
            });
        }
        if &alg.mul(e, e) != e {
            return Err(Error::NotIdempotent);
        }
        if e.is_zero() {
            return Err(Error::TrivialIdempotent("e = 0"));
        }
        if e == alg.unity() {
            return Err(Error::TrivialIdempotent("e equals the unity"));
        }
        let e_prime = alg.unity() - e;
        let sides = |c: Corner| match c {
            Corner::A11 => (e, e),
            Corner::A12 => (e, &e_prime),
            Corner::A21 => (&e_prime, e),
            Corner::A22 => (&e_prime, &e_prime),
        };
        let corners = Corner::ALL.map(|c| {
            let (l, r) = sides(c);
            Subspace::span(
                alg.dim(),
                alg.basis_elements().iter().map(|x| alg.mul3(l, x, r).0),
            )
        });
        let total: usize = corners.iter().map(Subspace::dim).sum();
        if total != alg.dim() {
            return Err(Error::Precondition(format!(
                "corner dimensions sum to {total}, algebra has dimension {}",
                alg.dim()
            )));
        }
        let corner_bases = corners
            .clone()
            .map(|s| s.basis().iter().cloned().map(Element).collect());
        Ok(PeirceContext {
            e: e.clone(),
            e_prime,
            corners,
            corner_bases,
        })
    }

    pub fn e(&self) -> &Element {
        &self.e
    }

    pub fn e_prime(&self) -> &Element {
        &self.e_prime
    }

    pub fn corner(&self, c: Corner) -> &Subspace {
        &self.corners[c.index()]
    }

    /// Canonical basis of a corner, as ambient elements.
    pub fn corner_basis(&self, c: Corner) -> &[Element] {
        &self.corner_bases[c.index()]
    }

    pub fn corner_dims(&self) -> [usize; 4] {
        Corner::ALL.map(|c| self.corner(c).dim())
    }

    /// The idempotent sandwiching a corner: `(left, right)` with the corner
    /// equal to `left · A · right`.
    pub fn sides(&self, c: Corner) -> (&Element, &Element) {
        match c {
            Corner::A11 => (&self.e, &self.e),
            Corner::A12 => (&self.e, &self.e_prime),
            Corner::A21 => (&self.e_prime, &self.e),
            Corner::A22 => (&self.e_prime, &self.e_prime),
        }
    }

    /// `left · x · right` for the corner's sandwich.
    pub fn project(&self, alg: &Algebra, c: Corner, x: &Element) -> Element {
        let (l, r) = self.sides(c);
        alg.mul3(l, x, r)
    }

    pub fn split(&self, alg: &Algebra, x: &Element) -> PeirceComponents {
        PeirceComponents {
            a: self.project(alg, Corner::A11, x),
            m: self.project(alg, Corner::A12, x),
            n: self.project(alg, Corner::A21, x),
            b: self.project(alg, Corner::A22, x),
        }
    }
}

pub fn peirce_context(alg: &Algebra, e: &Element) -> Result<PeirceContext> {
    PeirceContext::new(alg, e)
}

pub fn peirce_split(alg: &Algebra, ctx: &PeirceContext, x: &Element) -> PeirceComponents {
    ctx.split(alg, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, Preset};

    fn ctx(p: Preset, e: &[i64]) -> (Algebra, Result<PeirceContext>) {
        let a = build_algebra(&p).unwrap();
        let c = peirce_context(&a, &Element::from_ints(e));
        (a, c)
    }

    #[test]
    fn corner_dims() {
        assert_eq!(
            ctx(Preset::UpperTriangular(2), &[1, 0, 0])
                .1
                .unwrap()
                .corner_dims(),
            [1, 1, 0, 1]
        );
        assert_eq!(
            ctx(Preset::Matrix(2), &[1, 0, 0, 0])
                .1
                .unwrap()
                .corner_dims(),
            [1, 1, 1, 1]
        );
    }

    #[test]
    fn rejects_trivial_and_non_idempotents() {
        assert_eq!(
            ctx(Preset::UpperTriangular(2), &[1, 0, 1]).1,
            Err(Error::TrivialIdempotent("e equals the unity"))
        );
        assert_eq!(
            ctx(Preset::UpperTriangular(2), &[0, 0, 0]).1,
            Err(Error::TrivialIdempotent("e = 0"))
        );
        assert_eq!(
            ctx(Preset::UpperTriangular(2), &[2, 0, 0]).1,
            Err(Error::NotIdempotent)
        );
        assert!(ctx(Preset::UpperTriangular(2), &[1, 0]).1.is_err());
    }

    #[test]
    fn split_examples() {
        let (a, c) = ctx(Preset::UpperTriangular(2), &[1, 0, 0]);
        let c = c.unwrap();
        let s = peirce_split(&a, &c, &Element::from_ints(&[1, 2, 3]));
        assert_eq!(s.a, Element::from_ints(&[1, 0, 0]));
        assert_eq!(s.m, Element::from_ints(&[0, 2, 0]));
        assert!(s.n.is_zero());
        assert_eq!(s.b, Element::from_ints(&[0, 0, 3]));

        let s = peirce_split(&a, &c, a.unity());
        assert_eq!(&s.a, c.e());
        assert!(s.m.is_zero() && s.n.is_zero());
        assert_eq!(&s.b, c.e_prime());

        let (m, c) = ctx(Preset::Matrix(2), &[1, 0, 0, 0]);
        let s = peirce_split(&m, &c.unwrap(), &m.basis(2));
        assert!(s.a.is_zero() && s.m.is_zero() && s.b.is_zero());
        assert_eq!(s.n, m.basis(2));
    }

    #[test]
    fn split_resums_and_corner_rules() {
        let cases = [
            (Preset::Matrix(3), vec![1, 0, 0, 0, 1, 0, 0, 0, 0]),
            (Preset::UpperTriangular(3), vec![1, 0, 0, 0, 0, 0]),
            (
                Preset::BlockUpperTriangular(vec![2, 1]),
                vec![1, 0, 0, 0, 1, 0, 0],
            ),
        ];
        for (p, e) in cases {
            let (a, c) = ctx(p, &e);
            let c = c.unwrap();
            for x in a.basis_elements() {
                assert_eq!(c.split(&a, &x).sum(), x);
            }
            let zero_products = [(Corner::A12, Corner::A12), (Corner::A21, Corner::A21)];
            for (p, q) in zero_products {
                for x in c.corner_basis(p) {
                    for y in c.corner_basis(q) {
                        assert!(a.mul(x, y).is_zero());
                    }
                }
            }
            let into = [
                (Corner::A12, Corner::A21, Corner::A11),
                (Corner::A21, Corner::A12, Corner::A22),
            ];
            for (p, q, r) in into {
                for x in c.corner_basis(p) {
                    for y in c.corner_basis(q) {
                        assert!(c.corner(r).contains_vector(a.mul(x, y).coords()).unwrap());
                    }
                }
            }
        }
    }
}
