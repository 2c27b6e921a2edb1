//! Multilinear polynomials `f = Σ_π α_π x_{π(1)} ⋯ x_{π(n)}` in
//! noncommuting variables.
//!
//! Permutations are stored in one-line notation `[π(1), …, π(n)]`, 0-based
//! here and 1-based in files: the term for `[2, 0, 1]` is `x3 x1 x2`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearPolynomial {
    arity: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

/// Polynomials with names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedPoly {
    /// `x1 x2`
    Product,
    /// `x1 ∘ x2 = x1 x2 + x2 x1`
    Jordan,
    /// `[x1, x2] = x1 x2 - x2 x1`
    Lie,
    /// `x1 x2 x3 + x3 x2 x1`
    JordanTriple,
    /// `[[x1, x2], x3]`
    LieTriple,
}

impl FromStr for NamedPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace('-', "_").as_str() {
            "product" => Ok(NamedPoly::Product),
            "jordan" => Ok(NamedPoly::Jordan),
            "lie" => Ok(NamedPoly::Lie),
            "jordan_triple" => Ok(NamedPoly::JordanTriple),
            "lie_triple" => Ok(NamedPoly::LieTriple),
            _ => Err(Error::InvalidPolynomial(format!(
                "unknown polynomial name {s:?}"
            ))),
        }
    }
}

/// The coefficient sums `α = Σ α_π`, `β` over permutations placing `x1`
/// before `x2`, `γ` over those placing `x2` before `x1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyStats {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl MultilinearPolynomial {
    /// `terms` maps 0-based one-line permutations to coefficients; zero
    /// coefficients are dropped, repeated permutations are summed.
    pub fn new<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Rational)>,
    {
        if arity < 2 {
            return Err(Error::InvalidPolynomial(format!(
                "arity must be at least 2, got {arity}"
            )));
        }
        let mut map: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        for (perm, c) in terms {
            if !is_permutation(&perm, arity) {
                return Err(Error::InvalidPolynomial(format!(
                    "{perm:?} is not a permutation of 0..{arity}"
                )));
            }
            *map.entry(perm).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(Error::InvalidPolynomial("polynomial is zero".into()));
        }
        Ok(MultilinearPolynomial { arity, terms: map })
    }

    pub fn named(name: NamedPoly) -> Self {
        let t = |p: &[usize], c: i64| (p.to_vec(), int(c));
        let (n, terms) = match name {
            NamedPoly::Product => (2, vec![t(&[0, 1], 1)]),
            NamedPoly::Jordan => (2, vec![t(&[0, 1], 1), t(&[1, 0], 1)]),
            NamedPoly::Lie => (2, vec![t(&[0, 1], 1), t(&[1, 0], -1)]),
            NamedPoly::JordanTriple => (3, vec![t(&[0, 1, 2], 1), t(&[2, 1, 0], 1)]),
            // (x1x2 - x2x1)x3 - x3(x1x2 - x2x1)
            NamedPoly::LieTriple => (
                3,
                vec![
                    t(&[0, 1, 2], 1),
                    t(&[1, 0, 2], -1),
                    t(&[2, 0, 1], -1),
                    t(&[2, 1, 0], 1),
                ],
            ),
        };
        Self::new(n, terms).expect("named polynomials are valid")
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Nonzero terms in lexicographic permutation order, 0-based.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rational)> {
        self.terms.iter().map(|(p, c)| (p.as_slice(), c))
    }

    pub fn stats(&self) -> PolyStats {
        let mut beta = Rational::zero();
        let mut gamma = Rational::zero();
        for (perm, c) in &self.terms {
            let pos1 = perm
                .iter()
                .position(|&v| v == 0)
                .expect("valid permutation");
            let pos2 = perm
                .iter()
                .position(|&v| v == 1)
                .expect("valid permutation");
            if pos1 < pos2 {
                beta += c;
            } else {
                gamma += c;
            }
        }
        PolyStats {
            alpha: &beta + &gamma,
            beta,
            gamma,
        }
    }

    /// `Σ_π α_π x_{π(1)} ⋯ x_{π(n)}`, multiplying left to right.
    pub fn evaluate(&self, alg: &Algebra, args: &[Element]) -> Result<Element> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        let mut out = alg.zero();
        for (perm, c) in &self.terms {
            let mut prod = args[perm[0]].clone();
            for &k in &perm[1..] {
                prod = alg.mul(&prod, &args[k]);
            }
            out.add_scaled(c, &prod);
        }
        Ok(out)
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n
        && p.iter()
            .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

pub fn build_named_poly(name: &str) -> Result<MultilinearPolynomial> {
    Ok(MultilinearPolynomial::named(name.parse()?))
}

pub fn evaluate_poly(
    f: &MultilinearPolynomial,
    alg: &Algebra,
    args: &[Element],
) -> Result<Element> {
    f.evaluate(alg, args)
}

pub fn poly_stats(f: &MultilinearPolynomial) -> PolyStats {
    f.stats()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, Preset};
    use crate::linalg::frac;
    use proptest::prelude::*;

    fn terms_1based(f: &MultilinearPolynomial) -> Vec<(Vec<usize>, i64)> {
        f.terms()
            .map(|(p, c)| {
                (
                    p.iter().map(|v| v + 1).collect(),
                    c.to_integer().try_into().unwrap(),
                )
            })
            .collect()
    }

    #[test]
    fn named_terms() {
        let jordan = build_named_poly("jordan").unwrap();
        assert_eq!(
            terms_1based(&jordan),
            vec![(vec![1, 2], 1), (vec![2, 1], 1)]
        );
        let jt = build_named_poly("jordan_triple").unwrap();
        assert_eq!(
            terms_1based(&jt),
            vec![(vec![1, 2, 3], 1), (vec![3, 2, 1], 1)]
        );
        let lt = build_named_poly("lie-triple").unwrap();
        assert_eq!(
            terms_1based(&lt),
            vec![
                (vec![1, 2, 3], 1),
                (vec![2, 1, 3], -1),
                (vec![3, 1, 2], -1),
                (vec![3, 2, 1], 1)
            ]
        );
        assert!(build_named_poly("cubic").is_err());
    }

    #[test]
    fn lie_triple_matches_nested_bracket() {
        let a = build_algebra(&Preset::Matrix(2)).unwrap();
        let x = Element::from_ints(&[1, 2, 0, -1]);
        let y = Element::from_ints(&[0, 1, 3, 2]);
        let z = Element::from_ints(&[2, 0, 1, 1]);
        let f = MultilinearPolynomial::named(NamedPoly::LieTriple);
        let expect = a.commutator(&a.commutator(&x, &y), &z);
        assert_eq!(f.evaluate(&a, &[x, y, z]).unwrap(), expect);
    }

    #[test]
    fn evaluation_examples() {
        let t2 = build_algebra(&Preset::UpperTriangular(2)).unwrap();
        let jordan = MultilinearPolynomial::named(NamedPoly::Jordan);
        assert_eq!(
            jordan.evaluate(&t2, &[t2.basis(0), t2.basis(1)]).unwrap(),
            t2.basis(1)
        );

        let lie = MultilinearPolynomial::named(NamedPoly::Lie);
        let x = Element::from_ints(&[3, -1, 2]);
        assert!(lie.evaluate(&t2, &[x.clone(), x]).unwrap().is_zero());

        let m2 = build_algebra(&Preset::Matrix(2)).unwrap();
        let jt = MultilinearPolynomial::named(NamedPoly::JordanTriple);
        let (e12, e21) = (m2.basis(1), m2.basis(2));
        assert_eq!(
            jt.evaluate(&m2, &[e12.clone(), e21, e12]).unwrap(),
            Element::from_ints(&[0, 2, 0, 0])
        );
        assert_eq!(
            jt.evaluate(&m2, &[m2.basis(0)]),
            Err(Error::ArityMismatch {
                expected: 3,
                found: 1
            })
        );
    }

    #[test]
    fn stats_examples() {
        let s = MultilinearPolynomial::named(NamedPoly::Lie).stats();
        assert_eq!((s.alpha, s.beta, s.gamma), (int(0), int(1), int(-1)));
        let s = MultilinearPolynomial::named(NamedPoly::Jordan).stats();
        assert_eq!((s.alpha, s.beta, s.gamma), (int(2), int(1), int(1)));
        let s = MultilinearPolynomial::named(NamedPoly::JordanTriple).stats();
        assert_eq!((s.alpha, s.beta, s.gamma), (int(2), int(1), int(1)));
    }

    #[test]
    fn rejects_invalid() {
        assert!(MultilinearPolynomial::new(2, vec![(vec![0, 0], int(1))]).is_err());
        assert!(MultilinearPolynomial::new(1, vec![(vec![0], int(1))]).is_err());
        assert!(
            MultilinearPolynomial::new(2, vec![(vec![0, 1], int(1)), (vec![0, 1], int(-1))])
                .is_err()
        );
        assert!(MultilinearPolynomial::new(3, vec![(vec![0, 1], int(1))]).is_err());
    }

    /// Permutations of 0..n in lexicographic order.
    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out.sort();
        out
    }

    fn arb_poly() -> impl Strategy<Value = MultilinearPolynomial> {
        (2usize..=4)
            .prop_flat_map(|n| {
                let perms = all_perms(n);
                let k = perms.len();
                (Just(perms), proptest::collection::vec(-3i64..=3, k))
            })
            .prop_filter_map("nonzero", |(perms, coeffs)| {
                let n = perms[0].len();
                MultilinearPolynomial::new(n, perms.into_iter().zip(coeffs.into_iter().map(int)))
                    .ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn alpha_is_beta_plus_gamma(f in arb_poly()) {
            let s = f.stats();
            let total = f.terms().fold(Rational::zero(), |acc, (_, c)| acc + c);
            prop_assert_eq!(&s.alpha, &(&s.beta + &s.gamma));
            prop_assert_eq!(s.alpha, total);
        }

        #[test]
        fn substituting_unity_leaves_beta_gamma_form(f in arb_poly()) {
            let a = build_algebra(&Preset::Matrix(2)).unwrap();
            let s = f.stats();
            for x1 in a.basis_elements() {
                for x2 in a.basis_elements() {
                    let mut args = vec![x1.clone(), x2.clone()];
                    args.resize(f.arity(), a.unity().clone());
                    let lhs = f.evaluate(&a, &args).unwrap();
                    let rhs = &a.mul(&x1, &x2).scale(&s.beta) + &a.mul(&x2, &x1).scale(&s.gamma);
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }

        #[test]
        fn evaluation_is_multilinear(
            f in arb_poly(),
            slot in 0usize..4,
            coeffs in proptest::collection::vec(-5i64..=5, 4 * 6),
            (p, q) in (-4i64..=4, 1i64..=4),
        ) {
            let a = build_algebra(&Preset::UpperTriangular(3)).unwrap();
            let slot = slot % f.arity();
            let elems: Vec<Element> = coeffs.chunks(6).map(Element::from_ints).collect();
            let args: Vec<Element> = elems[..f.arity()].to_vec();
            let extra = &elems[3];
            let s = frac(p, q);

            let mut combined = args.clone();
            combined[slot] = &args[slot] + &extra.scale(&s);
            let mut swapped = args.clone();
            swapped[slot] = extra.clone();

            let lhs = f.evaluate(&a, &combined).unwrap();
            let rhs = &f.evaluate(&a, &args).unwrap() + &f.evaluate(&a, &swapped).unwrap().scale(&s);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
