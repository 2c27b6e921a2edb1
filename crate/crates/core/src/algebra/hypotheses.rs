//! Structural hypotheses on an algebra with a fixed idempotent.

use std::fmt;
use std::str::FromStr;

use super::{commutator_ideal, Algebra, Corner, Element, PeirceContext};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, MatrixQ, Rational, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hypothesis {
    /// `exe·A12 = 0 = A21·exe ⇒ exe = 0`, and the `A22` twin.
    Star,
    /// `e'Ae = 0`.
    Triangular,
    /// The commutator ideal of `eAe` is all of `eAe`.
    Ideal11,
    /// The commutator ideal of `e'Ae'` is all of `e'Ae'`.
    Ideal22,
    /// The only `(A11, A22)`-bimodule map `f: A12 → A12` with
    /// `e[A,A]e · f(A12) = 0 = f(A12) · e'[A,A]e'` is zero.
    ZeroMorphism,
    /// `eAe'Ae = 0 = e'AeAe'`.
    Orthogonality,
    /// `A12` is faithful as a left `A11`-module and a right `A22`-module.
    Faithful,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 7] = [
        Hypothesis::Star,
        Hypothesis::Triangular,
        Hypothesis::Ideal11,
        Hypothesis::Ideal22,
        Hypothesis::ZeroMorphism,
        Hypothesis::Orthogonality,
        Hypothesis::Faithful,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::Star => "star",
            Hypothesis::Triangular => "triangular",
            Hypothesis::Ideal11 => "ideal11",
            Hypothesis::Ideal22 => "ideal22",
            Hypothesis::ZeroMorphism => "zero_morphism",
            Hypothesis::Orthogonality => "orthogonality",
            Hypothesis::Faithful => "faithful",
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Hypothesis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('-', "_");
        Hypothesis::ALL
            .into_iter()
            .find(|h| h.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown hypothesis {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisVerdict {
    pub hypothesis: Hypothesis,
    pub holds: bool,
    /// Counterexample description when the hypothesis fails.
    pub witness: Option<String>,
}

impl HypothesisVerdict {
    fn pass(h: Hypothesis) -> Self {
        HypothesisVerdict {
            hypothesis: h,
            holds: true,
            witness: None,
        }
    }

    fn fail(h: Hypothesis, witness: String) -> Self {
        HypothesisVerdict {
            hypothesis: h,
            holds: false,
            witness: Some(witness),
        }
    }
}

pub fn check_hypothesis(
    alg: &Algebra,
    ctx: &PeirceContext,
    which: Hypothesis,
) -> HypothesisVerdict {
    let names = alg.basis_names();
    let show = |x: &Element| x.display_with(names);
    match which {
        Hypothesis::Star => {
            let m = ctx.corner_basis(Corner::A12);
            let n = ctx.corner_basis(Corner::A21);
            // a with a·m = 0 for all m and n·a = 0 for all n
            let bad_a = solve_in_span(ctx.corner_basis(Corner::A11), |a| {
                m.iter()
                    .map(|m| alg.mul(a, m))
                    .chain(n.iter().map(|n| alg.mul(n, a)))
                    .collect()
            });
            if let Some(a) = bad_a.first() {
                return HypothesisVerdict::fail(
                    which,
                    format!("nonzero a = {} in A11 with a·A12 = 0 = A21·a", show(a)),
                );
            }
            let bad_b = solve_in_span(ctx.corner_basis(Corner::A22), |b| {
                m.iter()
                    .map(|m| alg.mul(m, b))
                    .chain(n.iter().map(|n| alg.mul(b, n)))
                    .collect()
            });
            match bad_b.first() {
                Some(b) => HypothesisVerdict::fail(
                    which,
                    format!("nonzero b = {} in A22 with A12·b = 0 = b·A21", show(b)),
                ),
                None => HypothesisVerdict::pass(which),
            }
        }
        Hypothesis::Triangular => match ctx.corner_basis(Corner::A21).first() {
            Some(n) => HypothesisVerdict::fail(which, format!("A21 contains {}", show(n))),
            None => HypothesisVerdict::pass(which),
        },
        Hypothesis::Ideal11 | Hypothesis::Ideal22 => {
            let corner = if which == Hypothesis::Ideal11 {
                Corner::A11
            } else {
                Corner::A22
            };
            let sub = ctx.corner(corner);
            match commutator_ideal(alg, sub) {
                Ok(ideal) if &ideal == sub => HypothesisVerdict::pass(which),
                Ok(ideal) => HypothesisVerdict::fail(
                    which,
                    format!(
                        "commutator ideal of {corner} has dimension {}, corner has dimension {}",
                        ideal.dim(),
                        sub.dim()
                    ),
                ),
                Err(e) => HypothesisVerdict::fail(which, e.to_string()),
            }
        }
        Hypothesis::ZeroMorphism => match nonzero_corner_morphism(alg, ctx) {
            None => HypothesisVerdict::pass(which),
            Some(images) => {
                let desc: Vec<String> = ctx
                    .corner_basis(Corner::A12)
                    .iter()
                    .zip(&images)
                    .map(|(m, fm)| format!("f({}) = {}", show(m), show(fm)))
                    .collect();
                HypothesisVerdict::fail(which, format!("nonzero morphism: {}", desc.join(", ")))
            }
        },
        Hypothesis::Orthogonality => {
            let m = ctx.corner_basis(Corner::A12);
            let n = ctx.corner_basis(Corner::A21);
            for x in m {
                for y in n {
                    for (p, q) in [(x, y), (y, x)] {
                        let prod = alg.mul(p, q);
                        if !prod.is_zero() {
                            return HypothesisVerdict::fail(
                                which,
                                format!("({})·({}) = {}", show(p), show(q), show(&prod)),
                            );
                        }
                    }
                }
            }
            HypothesisVerdict::pass(which)
        }
        Hypothesis::Faithful => {
            let m = ctx.corner_basis(Corner::A12);
            let left = solve_in_span(ctx.corner_basis(Corner::A11), |a| {
                m.iter().map(|m| alg.mul(a, m)).collect()
            });
            if let Some(a) = left.first() {
                return HypothesisVerdict::fail(
                    which,
                    format!("A12 is not left-faithful: {}·A12 = 0", show(a)),
                );
            }
            let right = solve_in_span(ctx.corner_basis(Corner::A22), |b| {
                m.iter().map(|m| alg.mul(m, b)).collect()
            });
            match right.first() {
                Some(b) => HypothesisVerdict::fail(
                    which,
                    format!("A12 is not right-faithful: A12·{} = 0", show(b)),
                ),
                None => HypothesisVerdict::pass(which),
            }
        }
    }
}

/// Basis of `{x in span(gens) : constraints(x) = 0}` for a linear
/// `constraints`, as elements.
fn solve_in_span<F>(gens: &[Element], constraints: F) -> Vec<Element>
where
    F: Fn(&Element) -> Vec<Element>,
{
    if gens.is_empty() {
        return Vec::new();
    }
    let columns: Vec<Vec<Rational>> = gens
        .iter()
        .map(|g| constraints(g).into_iter().flat_map(|e| e.0).collect())
        .collect();
    let kernel = kernel_basis(&transpose(&columns, gens.len()));
    let d = gens[0].dim();
    kernel
        .basis()
        .iter()
        .map(|c| {
            let mut x = Element::zero(d);
            for (ck, g) in c.iter().zip(gens) {
                x.add_scaled(ck, g);
            }
            x
        })
        .collect()
}

fn transpose(columns: &[Vec<Rational>], ncols: usize) -> MatrixQ {
    let nrows = columns.first().map_or(0, Vec::len);
    let mut m = MatrixQ::zeros(nrows, ncols);
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            m.set(r, c, v.clone());
        }
    }
    m
}

/// A nonzero `(A11, A22)`-bimodule endomorphism of `A12` killed by
/// `e[A,A]e` on the left and `e'[A,A]e'` on the right, given by its images
/// of the `A12` basis, or `None` if only the zero map qualifies.
fn nonzero_corner_morphism(alg: &Algebra, ctx: &PeirceContext) -> Option<Vec<Element>> {
    let ms = ctx.corner_basis(Corner::A12);
    let p = ms.len();
    if p == 0 {
        return None;
    }
    let a12 = ctx.corner(Corner::A12);
    let commutators: Vec<Element> = {
        let basis = alg.basis_elements();
        basis
            .iter()
            .flat_map(|x| basis.iter().map(move |y| (x, y)))
            .map(|(x, y)| alg.commutator(x, y))
            .collect()
    };
    let sandwich = |c: Corner| {
        let s = Subspace::span(
            alg.dim(),
            commutators.iter().map(|x| ctx.project(alg, c, x).0),
        );
        s.basis().iter().cloned().map(Element).collect::<Vec<_>>()
    };
    let left_comm = sandwich(Corner::A11);
    let right_comm = sandwich(Corner::A22);
    let a11 = ctx.corner_basis(Corner::A11);
    let a22 = ctx.corner_basis(Corner::A22);

    // f is the p×p matrix F with f(m_k) = sum_l F[l][k] m_l; variable (l, k) ↦ l*p + k
    let apply = |f: &[Rational], x: &Element| -> Element {
        let coords = a12
            .coordinates(x.coords())
            .expect("dimension checked")
            .expect("argument lies in A12");
        let mut out = alg.zero();
        for (k, ck) in coords.iter().enumerate() {
            for (l, m) in ms.iter().enumerate() {
                out.add_scaled(&(ck * &f[l * p + k]), m);
            }
        }
        out
    };
    let residual = |f: &[Rational]| -> Vec<Element> {
        let mut out = Vec::new();
        for m in ms {
            let fm = apply(f, m);
            for a in a11 {
                out.push(&apply(f, &alg.mul(a, m)) - &alg.mul(a, &fm));
            }
            for b in a22 {
                out.push(&apply(f, &alg.mul(m, b)) - &alg.mul(&fm, b));
            }
            for c in &left_comm {
                out.push(alg.mul(c, &fm));
            }
            for c in &right_comm {
                out.push(alg.mul(&fm, c));
            }
        }
        out
    };
    let units: Vec<Vec<Rational>> = (0..p * p)
        .map(|v| {
            let mut f = vec![crate::linalg::zero(); p * p];
            f[v] = crate::linalg::one();
            residual(&f).into_iter().flat_map(|e| e.0).collect()
        })
        .collect();
    let kernel = kernel_basis(&transpose(&units, p * p));
    let f = kernel.basis().first()?;
    Some(ms.iter().map(|m| apply(f, m)).collect())
}
