//! Blockwise construction of the antibiderivation part `Δ` and the
//! biderivation part `D` from a Jordan biderivation with `J(e, e) = 0`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Algebra, Corner, Element, PeirceContext};
use crate::error::{Error, Result};
use crate::maps::BilinearMap;

/// Which idempotent enters the `(b, m)`, `(m, b)`, `(b, n)`, `(n, b)` blocks of `Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaMode {
    /// `Δ(b,m) = bJ(e,m)`, `Δ(m,b) = bJ(m,e)`, `Δ(b,n) = J(e,n)b`, `Δ(n,b) = J(n,e)b`.
    #[default]
    Literal,
    /// The same blocks with `e` replaced by `e' = 1 - e`.
    Adjusted,
}

impl DeltaMode {
    pub const ALL: [DeltaMode; 2] = [DeltaMode::Literal, DeltaMode::Adjusted];

    pub fn name(self) -> &'static str {
        match self {
            DeltaMode::Literal => "literal",
            DeltaMode::Adjusted => "adjusted",
        }
    }
}

impl fmt::Display for DeltaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DeltaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "literal" | "paper_literal" => Ok(DeltaMode::Literal),
            "adjusted" | "sign_adjusted" => Ok(DeltaMode::Adjusted),
            _ => Err(Error::Parse(format!(
                "unknown mode {s:?}: expected literal or adjusted"
            ))),
        }
    }
}

/// Evaluation context for block formulas.
pub(crate) struct Blocks<'a> {
    pub alg: &'a Algebra,
    pub ctx: &'a PeirceContext,
    pub j: &'a BilinearMap,
}

impl Blocks<'_> {
    pub fn jv(&self, x: &Element, y: &Element) -> Element {
        self.j.eval(x, y)
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        self.alg.mul(x, y)
    }

    fn sandwich(&self, l: &Element, x: &Element, r: &Element) -> Element {
        self.alg.mul3(l, x, r)
    }

    fn delta(
        &self,
        mode: DeltaMode,
        c1: Corner,
        c2: Corner,
        x: &Element,
        y: &Element,
    ) -> Option<Element> {
        use Corner::*;
        let e = self.ctx.e();
        let f = self.ctx.e_prime();
        let g = match mode {
            DeltaMode::Literal => e,
            DeltaMode::Adjusted => f,
        };
        let v = match (c1, c2) {
            (A12, A12) => self.sandwich(f, &self.jv(x, y), e),
            (A21, A21) => self.sandwich(e, &self.jv(x, y), f),
            (A11, A12) => self.mul(&self.jv(e, y), x),
            (A12, A11) => self.mul(&self.jv(x, e), y),
            (A22, A12) => self.mul(x, &self.jv(g, y)),
            (A12, A22) => self.mul(y, &self.jv(x, g)),
            (A11, A21) => self.mul(x, &self.jv(e, y)),
            (A21, A11) => self.mul(y, &self.jv(x, e)),
            (A22, A21) => self.mul(&self.jv(g, y), x),
            (A21, A22) => self.mul(&self.jv(x, g), y),
            _ => return None,
        };
        Some(v)
    }

    fn biderivation(&self, c1: Corner, c2: Corner, x: &Element, y: &Element) -> Option<Element> {
        use Corner::*;
        let e = self.ctx.e();
        let f = self.ctx.e_prime();
        let v = match (c1, c2) {
            (A11, A11) | (A22, A22) => self.jv(x, y),
            (A11, A12) => self.mul(x, &self.jv(e, y)),
            (A12, A11) => self.mul(y, &self.jv(x, e)),
            (A22, A12) => self.mul(&self.jv(f, y), x),
            (A12, A22) => self.mul(&self.jv(x, f), y),
            (A11, A21) => self.mul(&self.jv(e, y), x),
            (A21, A11) => self.mul(&self.jv(x, e), y),
            (A22, A21) => self.mul(x, &self.jv(f, y)),
            (A21, A22) => self.mul(y, &self.jv(x, f)),
            (A12, A12) => self.sandwich(e, &self.jv(x, y), f),
            (A21, A21) => self.sandwich(f, &self.jv(x, y), e),
            _ => return None,
        };
        Some(v)
    }

    /// Extends a block formula bilinearly: splits both basis arguments into
    /// Peirce components and sums the block values.
    fn assemble(
        &self,
        block: impl Fn(Corner, Corner, &Element, &Element) -> Option<Element>,
    ) -> BilinearMap {
        let splits: Vec<_> = self
            .alg
            .basis_elements()
            .iter()
            .map(|u| self.ctx.split(self.alg, u))
            .collect();
        let d = self.alg.dim();
        BilinearMap::from_index_fn(d, d, |i, j| {
            let mut acc = self.alg.zero();
            for c1 in Corner::ALL {
                let x = splits[i].get(c1);
                if x.is_zero() {
                    continue;
                }
                for c2 in Corner::ALL {
                    let y = splits[j].get(c2);
                    if y.is_zero() {
                        continue;
                    }
                    if let Some(v) = block(c1, c2, x, y) {
                        acc = &acc + &v;
                    }
                }
            }
            acc
        })
    }
}

pub(crate) fn check_split_precondition(
    alg: &Algebra,
    ctx: &PeirceContext,
    j2: &BilinearMap,
) -> Result<()> {
    if j2.dim() != alg.dim() || j2.target_dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: j2.dim(),
        });
    }
    let v = j2.eval(ctx.e(), ctx.e());
    if !v.is_zero() {
        return Err(Error::Precondition(format!("J(e, e) = {v} is not zero")));
    }
    let reg = crate::algebra::Bimodule::regular(alg);
    if let crate::maps::CheckVerdict::Violated(v) =
        crate::maps::check_bilinear(alg, &reg, j2, &crate::maps::MapKind::JordanBiderivation)?
    {
        return Err(Error::Precondition(format!(
            "not a Jordan biderivation: {}",
            v.describe(alg)
        )));
    }
    Ok(())
}

/// The antibiderivation candidate `Δ` built blockwise from `j2`.
pub fn build_delta(
    alg: &Algebra,
    j2: &BilinearMap,
    ctx: &PeirceContext,
    mode: DeltaMode,
) -> Result<BilinearMap> {
    check_split_precondition(alg, ctx, j2)?;
    Ok(delta_unchecked(alg, j2, ctx, mode))
}

/// The biderivation candidate `D` built blockwise from `j2`.
pub fn build_d(alg: &Algebra, j2: &BilinearMap, ctx: &PeirceContext) -> Result<BilinearMap> {
    check_split_precondition(alg, ctx, j2)?;
    Ok(d_unchecked(alg, j2, ctx))
}

pub(crate) fn delta_unchecked(
    alg: &Algebra,
    j2: &BilinearMap,
    ctx: &PeirceContext,
    mode: DeltaMode,
) -> BilinearMap {
    let b = Blocks { alg, ctx, j: j2 };
    b.assemble(|c1, c2, x, y| b.delta(mode, c1, c2, x, y))
}

pub(crate) fn d_unchecked(alg: &Algebra, j2: &BilinearMap, ctx: &PeirceContext) -> BilinearMap {
    let b = Blocks { alg, ctx, j: j2 };
    b.assemble(|c1, c2, x, y| b.biderivation(c1, c2, x, y))
}
