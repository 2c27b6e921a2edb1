//! Corner identities satisfied by a Jordan biderivation with `J(e, e) = 0`,
//! checked on corner bases.

use serde::Serialize;

use super::blocks::Blocks;
use crate::algebra::{Algebra, Corner, Element, PeirceContext};
use crate::error::Result;
use crate::maps::BilinearMap;

/// Outcome of one exhaustively checked identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub statement: &'static str,
    pub holds: bool,
    pub witness: Option<String>,
}

impl IdentityCheck {
    pub(crate) fn new(statement: &'static str, witness: Option<String>) -> Self {
        IdentityCheck {
            statement,
            holds: witness.is_none(),
            witness,
        }
    }
}

/// The corner identities and the auxiliary identities used to build `Δ` and `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeirceIdentityReport {
    pub items: Vec<IdentityCheck>,
    pub auxiliaries: Vec<IdentityCheck>,
}

impl PeirceIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().chain(&self.auxiliaries).all(|c| c.holds)
    }
}

struct Checker<'a> {
    b: Blocks<'a>,
}

impl Checker<'_> {
    fn basis(&self, c: Corner) -> &[Element] {
        self.b.ctx.corner_basis(c)
    }

    fn show(&self, x: &Element) -> String {
        x.display_with(self.b.alg.basis_names())
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        self.b.alg.mul(x, y)
    }

    fn bracket(&self, x: &Element, y: &Element) -> Element {
        self.b.alg.commutator(x, y)
    }

    fn j(&self, x: &Element, y: &Element) -> Element {
        self.b.jv(x, y)
    }

    /// `eve' + e've`
    fn off_diagonal(&self, v: &Element) -> Element {
        let (e, f) = (self.b.ctx.e(), self.b.ctx.e_prime());
        let alg = self.b.alg;
        &alg.mul3(e, v, f) + &alg.mul3(f, v, e)
    }

    fn pairs(
        &self,
        statement: &'static str,
        left: Corner,
        right: Corner,
        sides: impl Fn(&Element, &Element) -> (Element, Element),
    ) -> IdentityCheck {
        for x in self.basis(left) {
            for y in self.basis(right) {
                let (lhs, rhs) = sides(x, y);
                if lhs != rhs {
                    let w = format!(
                        "{} = {}, {} = {}: lhs {}, rhs {}",
                        left.letter(),
                        self.show(x),
                        right.letter(),
                        self.show(y),
                        self.show(&lhs),
                        self.show(&rhs)
                    );
                    return IdentityCheck::new(statement, Some(w));
                }
            }
        }
        IdentityCheck::new(statement, None)
    }

    fn singles(
        &self,
        statement: &'static str,
        corner: Corner,
        sides: impl Fn(&Element) -> (Element, Element),
    ) -> IdentityCheck {
        for x in self.basis(corner) {
            let (lhs, rhs) = sides(x);
            if lhs != rhs {
                let w = format!(
                    "{} = {}: lhs {}, rhs {}",
                    corner.letter(),
                    self.show(x),
                    self.show(&lhs),
                    self.show(&rhs)
                );
                return IdentityCheck::new(statement, Some(w));
            }
        }
        IdentityCheck::new(statement, None)
    }

    fn triples(
        &self,
        statement: &'static str,
        corners: [Corner; 3],
        sides: impl Fn(&Element, &Element, &Element) -> (Element, Element),
    ) -> IdentityCheck {
        for x in self.basis(corners[0]) {
            for y in self.basis(corners[1]) {
                for z in self.basis(corners[2]) {
                    let (lhs, rhs) = sides(x, y, z);
                    if lhs != rhs {
                        let w = format!(
                            "({}, {}, {}): lhs {}, rhs {}",
                            self.show(x),
                            self.show(y),
                            self.show(z),
                            self.show(&lhs),
                            self.show(&rhs)
                        );
                        return IdentityCheck::new(statement, Some(w));
                    }
                }
            }
        }
        IdentityCheck::new(statement, None)
    }
}

/// Checks the corner identities of `j2` exhaustively on corner bases. Every
/// identity is bilinear (the auxiliaries trilinear), so basis checks are complete.
pub fn verify_peirce_identities(
    alg: &Algebra,
    j2: &BilinearMap,
    ctx: &PeirceContext,
) -> Result<PeirceIdentityReport> {
    super::blocks::check_split_precondition(alg, ctx, j2)?;
    Ok(peirce_identities_unchecked(alg, j2, ctx))
}

pub(crate) fn peirce_identities_unchecked(
    alg: &Algebra,
    j2: &BilinearMap,
    ctx: &PeirceContext,
) -> PeirceIdentityReport {
    use Corner::*;
    let c = Checker {
        b: Blocks { alg, ctx, j: j2 },
    };
    let e = ctx.e();
    let f = ctx.e_prime();
    let sum = |x: Element, y: Element| &x + &y;
    let zero = alg.zero();

    let items = vec![
        c.pairs("J(a,a') = eJ(a,a')e", A11, A11, |x, y| {
            let v = c.j(x, y);
            (v.clone(), alg.mul3(e, &v, e))
        }),
        c.pairs("J(b,b') = e'J(b,b')e'", A22, A22, |x, y| {
            let v = c.j(x, y);
            (v.clone(), alg.mul3(f, &v, f))
        }),
        c.pairs("J(a,m) = aJ(e,m) + J(e,m)a", A11, A12, |a, m| {
            let t = c.j(e, m);
            (c.j(a, m), sum(c.mul(a, &t), c.mul(&t, a)))
        }),
        c.pairs("J(m,a) = aJ(m,e) + J(m,e)a", A12, A11, |m, a| {
            let t = c.j(m, e);
            (c.j(m, a), sum(c.mul(a, &t), c.mul(&t, a)))
        }),
        c.pairs("J(b,m) = bJ(e',m) + J(e',m)b", A22, A12, |b, m| {
            let t = c.j(f, m);
            (c.j(b, m), sum(c.mul(b, &t), c.mul(&t, b)))
        }),
        c.pairs("J(m,b) = bJ(m,e') + J(m,e')b", A12, A22, |m, b| {
            let t = c.j(m, f);
            (c.j(m, b), sum(c.mul(b, &t), c.mul(&t, b)))
        }),
        c.pairs("J(a,n) = aJ(e,n) + J(e,n)a", A11, A21, |a, n| {
            let t = c.j(e, n);
            (c.j(a, n), sum(c.mul(a, &t), c.mul(&t, a)))
        }),
        c.pairs("J(n,a) = aJ(n,e) + J(n,e)a", A21, A11, |n, a| {
            let t = c.j(n, e);
            (c.j(n, a), sum(c.mul(a, &t), c.mul(&t, a)))
        }),
        c.pairs("J(b,n) = bJ(e',n) + J(e',n)b", A22, A21, |b, n| {
            let t = c.j(f, n);
            (c.j(b, n), sum(c.mul(b, &t), c.mul(&t, b)))
        }),
        c.pairs("J(n,b) = bJ(n,e') + J(n,e')b", A21, A22, |n, b| {
            let t = c.j(n, f);
            (c.j(n, b), sum(c.mul(b, &t), c.mul(&t, b)))
        }),
        c.pairs(
            "J(m,n) = eJ(m,n)e' + e'J(m,n)e + [J(e,n),m]",
            A12,
            A21,
            |m, n| {
                let v = c.j(m, n);
                (v.clone(), sum(c.off_diagonal(&v), c.bracket(&c.j(e, n), m)))
            },
        ),
        c.pairs(
            "J(m,n) = eJ(m,n)e' + e'J(m,n)e + [n,J(m,e)]",
            A12,
            A21,
            |m, n| {
                let v = c.j(m, n);
                (v.clone(), sum(c.off_diagonal(&v), c.bracket(n, &c.j(m, e))))
            },
        ),
        c.pairs(
            "J(n,m) = eJ(n,m)e' + e'J(n,m)e + [J(n,e),m]",
            A21,
            A12,
            |n, m| {
                let v = c.j(n, m);
                (v.clone(), sum(c.off_diagonal(&v), c.bracket(&c.j(n, e), m)))
            },
        ),
        c.pairs(
            "J(n,m) = eJ(n,m)e' + e'J(n,m)e + [n,J(e,m)]",
            A21,
            A12,
            |n, m| {
                let v = c.j(n, m);
                (v.clone(), sum(c.off_diagonal(&v), c.bracket(n, &c.j(e, m))))
            },
        ),
        c.pairs(
            "J(n,n') = eJ(n,n')e' + e'J(n,n')e + [n',J(n,e)]",
            A21,
            A21,
            |n, n2| {
                let v = c.j(n, n2);
                (
                    v.clone(),
                    sum(c.off_diagonal(&v), c.bracket(n2, &c.j(n, e))),
                )
            },
        ),
        c.pairs(
            "J(n,n') = eJ(n,n')e' + e'J(n,n')e + [n,J(e,n')]",
            A21,
            A21,
            |n, n2| {
                let v = c.j(n, n2);
                (
                    v.clone(),
                    sum(c.off_diagonal(&v), c.bracket(n, &c.j(e, n2))),
                )
            },
        ),
        c.pairs(
            "J(m,m') = eJ(m,m')e' + e'J(m,m')e + [J(e,m'),m]",
            A12,
            A12,
            |m, m2| {
                let v = c.j(m, m2);
                (
                    v.clone(),
                    sum(c.off_diagonal(&v), c.bracket(&c.j(e, m2), m)),
                )
            },
        ),
        c.pairs(
            "J(m,m') = eJ(m,m')e' + e'J(m,m')e + [J(m,e),m']",
            A12,
            A12,
            |m, m2| {
                let v = c.j(m, m2);
                (
                    v.clone(),
                    sum(c.off_diagonal(&v), c.bracket(&c.j(m, e), m2)),
                )
            },
        ),
        c.pairs("J(a,b) = 0", A11, A22, |a, b| (c.j(a, b), zero.clone())),
        c.pairs("J(b,a) = 0", A22, A11, |b, a| (c.j(b, a), zero.clone())),
    ];

    let auxiliaries = vec![
        c.singles("eJ(m,e)e = 0", A12, |m| {
            (alg.mul3(e, &c.j(m, e), e), zero.clone())
        }),
        c.triples("J(m,e)[a,a'] = 0", [A12, A11, A11], |m, a, a2| {
            (c.mul(&c.j(m, e), &c.bracket(a, a2)), zero.clone())
        }),
        c.triples("J(a,a')m = [a',a]J(m,e)", [A11, A11, A12], |a, a2, m| {
            (c.mul(&c.j(a, a2), m), c.mul(&c.bracket(a2, a), &c.j(m, e)))
        }),
    ];
    PeirceIdentityReport { items, auxiliaries }
}
