//! Splitting a Jordan biderivation into an extremal part, an
//! antibiderivation part `Δ`, a biderivation part `D` and an exact residual.

mod blocks;
mod corollary;
mod identities;
#[cfg(test)]
mod tests;

use rayon::prelude::*;
use serde::Serialize;

pub use blocks::{build_d, build_delta, DeltaMode};
pub use corollary::{corollary_check, Corollary, CorollaryVerdict};
pub use identities::{verify_peirce_identities, IdentityCheck, PeirceIdentityReport};

use crate::algebra::{
    check_hypothesis, Algebra, Bimodule, Corner, Element, Hypothesis, HypothesisVerdict,
    PeirceContext,
};
use crate::error::{Error, Result};
use crate::maps::{
    check_bilinear, find_extremal_witness, BilinearMap, CheckVerdict, ExtremalWitness, MapKind,
};
use crate::verdict::Outcome;

/// `J = j1 + j2` with `j1(x, y) = [x, [y, J(e, e)]]` and `j2(e, e) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalSplit {
    pub j1: BilinearMap,
    pub j2: BilinearMap,
    /// `J(e, e)`
    pub j_ee: Element,
    pub checks: Vec<IdentityCheck>,
}

fn jordan_violation(alg: &Algebra, j: &BilinearMap) -> Result<Option<String>> {
    let reg = Bimodule::regular(alg);
    Ok(
        match check_bilinear(alg, &reg, j, &MapKind::JordanBiderivation)? {
            CheckVerdict::Holds => None,
            CheckVerdict::Violated(v) => Some(v.describe(alg)),
        },
    )
}

/// Splits off the extremal part determined by `J(e, e)`.
pub fn split_extremal(
    alg: &Algebra,
    j: &BilinearMap,
    ctx: &PeirceContext,
) -> Result<ExtremalSplit> {
    if j.dim() != alg.dim() || j.target_dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: j.dim(),
        });
    }
    if let Some(v) = jordan_violation(alg, j)? {
        return Err(Error::Precondition(format!(
            "not a Jordan biderivation: {v}"
        )));
    }
    let e = ctx.e();
    let f = ctx.e_prime();
    let c = j.eval(e, e);
    let j1 = BilinearMap::extremal(alg, &c);
    let j2 = j.sub(&j1);
    let show = |x: &Element| x.display_with(alg.basis_names());

    let mut checks = Vec::new();
    let r = j2.eval(e, e);
    checks.push(IdentityCheck::new(
        "j2(e,e) = 0",
        (!r.is_zero()).then(|| show(&r)),
    ));
    checks.push(IdentityCheck::new(
        "j2 is a Jordan biderivation",
        jordan_violation(alg, &j2)?,
    ));
    for (statement, side) in [
        ("[[exe,eye],J(e,e)] = 0", e),
        ("[[e'xe',e'ye'],J(e,e)] = 0", f),
    ] {
        let basis = alg.basis_elements();
        let witness = basis.iter().enumerate().find_map(|(i, x)| {
            basis.iter().enumerate().find_map(|(k, y)| {
                let x = alg.mul3(side, x, side);
                let y = alg.mul3(side, y, side);
                let v = alg.commutator(&alg.commutator(&x, &y), &c);
                let names = alg.basis_names();
                (!v.is_zero()).then(|| format!("x = {}, y = {}: {}", names[i], names[k], show(&v)))
            })
        });
        checks.push(IdentityCheck::new(statement, witness));
    }
    Ok(ExtremalSplit {
        j1,
        j2,
        j_ee: c,
        checks,
    })
}

/// Residual behaviour on one Peirce block `(left, right)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub block: String,
    #[serde(skip)]
    pub left: Corner,
    #[serde(skip)]
    pub right: Corner,
    pub vanishes: bool,
    /// For `(m,n)` and `(n,m)`: whether the residual equals `eJe' + e'Je`.
    pub off_diagonal_form: Option<bool>,
    /// For `(m,n)`: whether it equals `eJe' + e'Je + [J(e,n),m]`;
    /// for `(n,m)`: `eJe' + e'Je + [J(n,e),m]`.
    pub bracket_form: Option<bool>,
    /// First basis pair where the residual is nonzero, with its value.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualAnalysis {
    pub residual: BilinearMap,
    pub blocks: Vec<BlockReport>,
}

impl ResidualAnalysis {
    pub fn is_zero(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn nonzero_blocks(&self) -> Vec<(Corner, Corner)> {
        self.blocks
            .iter()
            .filter(|b| !b.vanishes)
            .map(|b| (b.left, b.right))
            .collect()
    }
}

/// `residual = j2 − Δ − D`, with its support on the 16 Peirce blocks.
pub fn residual_analysis(
    alg: &Algebra,
    ctx: &PeirceContext,
    j2: &BilinearMap,
    delta: &BilinearMap,
    d_part: &BilinearMap,
) -> ResidualAnalysis {
    let residual = j2.sub(delta).sub(d_part);
    let (e, f) = (ctx.e(), ctx.e_prime());
    let show = |x: &Element| x.display_with(alg.basis_names());
    let mut blocks = Vec::with_capacity(16);
    for left in Corner::ALL {
        for right in Corner::ALL {
            let mixed = matches!(
                (left, right),
                (Corner::A12, Corner::A21) | (Corner::A21, Corner::A12)
            );
            let mut vanishes = true;
            let mut off_diag = true;
            let mut bracket = true;
            let mut witness = None;
            for x in ctx.corner_basis(left) {
                for y in ctx.corner_basis(right) {
                    let r = residual.eval(x, y);
                    if r.is_zero() {
                        continue;
                    }
                    vanishes = false;
                    let mut note = format!("R({}, {}) = {}", show(x), show(y), show(&r));
                    if mixed {
                        let v = j2.eval(x, y);
                        let claimed = &alg.mul3(e, &v, f) + &alg.mul3(f, &v, e);
                        let br = if left == Corner::A12 {
                            alg.commutator(&j2.eval(e, y), x)
                        } else {
                            alg.commutator(&j2.eval(x, e), y)
                        };
                        off_diag &= r == claimed;
                        bracket &= r == &claimed + &br;
                        note.push_str(&format!(
                            "; eJe' + e'Je = {}; bracket term = {}",
                            show(&claimed),
                            show(&br)
                        ));
                    }
                    witness.get_or_insert(note);
                }
            }
            blocks.push(BlockReport {
                block: format!("({},{})", left.letter(), right.letter()),
                left,
                right,
                vanishes,
                off_diagonal_form: mixed.then_some(vanishes || off_diag),
                bracket_form: mixed.then_some(vanishes || bracket),
                witness,
            });
        }
    }
    ResidualAnalysis { residual, blocks }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionVerdicts {
    pub split: Vec<IdentityCheck>,
    pub extremal: ExtremalWitness,
    pub delta_antibiderivation: CheckVerdict,
    /// Antibiderivation check of `Δ` under each mode.
    pub antibiderivation_by_mode: Vec<(DeltaMode, bool)>,
    pub d_part_biderivation: CheckVerdict,
    pub residual_zero: bool,
    pub reconstruction_exact: bool,
    pub blocks: Vec<BlockReport>,
    pub identities: PeirceIdentityReport,
    pub star: HypothesisVerdict,
    pub zero_morphism: HypothesisVerdict,
    /// Whether "both hypotheses hold ⇒ residual = 0" is confirmed here.
    pub hypotheses_imply_zero_residual: Outcome,
}

impl DecompositionVerdicts {
    /// Every structural check passes: split facts, extremal-or-zero `j1`,
    /// `Δ` antibiderivation, `D` biderivation, corner identities, exact
    /// reconstruction. The residual is reported separately.
    pub fn components_pass(&self) -> bool {
        self.split.iter().all(|c| c.holds)
            && self.extremal.is_extremal_or_zero()
            && self.delta_antibiderivation.holds()
            && self.d_part_biderivation.holds()
            && self.identities.all_hold()
            && self.reconstruction_exact
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionResult {
    pub mode: DeltaMode,
    /// `J(e, e)`, the element defining `j1`.
    pub j_ee: Element,
    pub j1: BilinearMap,
    pub j2: BilinearMap,
    pub delta: BilinearMap,
    pub d_part: BilinearMap,
    pub residual: BilinearMap,
    pub verdicts: DecompositionVerdicts,
}

impl DecompositionResult {
    pub fn reconstruct(&self) -> BilinearMap {
        self.j1
            .add(&self.delta)
            .add(&self.d_part)
            .add(&self.residual)
    }
}

/// Runs the full pipeline on a Jordan biderivation and records every verdict.
pub fn decompose(
    alg: &Algebra,
    j: &BilinearMap,
    ctx: &PeirceContext,
    mode: DeltaMode,
) -> Result<DecompositionResult> {
    let split = split_extremal(alg, j, ctx)?;
    let j2 = split.j2;
    let reg = Bimodule::regular(alg);
    let mut by_mode = Vec::new();
    let mut delta = None;
    let mut delta_verdict = CheckVerdict::Holds;
    for m in DeltaMode::ALL {
        let dm = blocks::delta_unchecked(alg, &j2, ctx, m);
        let v = check_bilinear(alg, &reg, &dm, &MapKind::Antibiderivation)?;
        by_mode.push((m, v.holds()));
        if m == mode {
            delta = Some(dm);
            delta_verdict = v;
        }
    }
    let delta = delta.expect("every mode is evaluated");
    let d_part = blocks::d_unchecked(alg, &j2, ctx);
    let d_verdict = check_bilinear(alg, &reg, &d_part, &MapKind::Biderivation)?;
    let analysis = residual_analysis(alg, ctx, &j2, &delta, &d_part);
    let identities = identities::peirce_identities_unchecked(alg, &j2, ctx);
    let extremal = find_extremal_witness(alg, &split.j1);
    let star = check_hypothesis(alg, ctx, Hypothesis::Star);
    let zero_morphism = check_hypothesis(alg, ctx, Hypothesis::ZeroMorphism);
    let residual_zero = analysis.is_zero();
    let implication = if star.holds && zero_morphism.holds {
        Outcome::from_bool(residual_zero)
    } else {
        Outcome::NotApplicable
    };
    let residual = analysis.residual;
    let reconstruction_exact = &split.j1.add(&delta).add(&d_part).add(&residual) == j
        && delta.add(&d_part).add(&residual) == j2;
    Ok(DecompositionResult {
        mode,
        j_ee: split.j_ee,
        j1: split.j1,
        j2,
        delta,
        d_part,
        residual,
        verdicts: DecompositionVerdicts {
            split: split.checks,
            extremal,
            delta_antibiderivation: delta_verdict,
            antibiderivation_by_mode: by_mode,
            d_part_biderivation: d_verdict,
            residual_zero,
            reconstruction_exact,
            blocks: analysis.blocks,
            identities,
            star,
            zero_morphism,
            hypotheses_imply_zero_residual: implication,
        },
    })
}

/// Decomposes independent maps in parallel; results keep input order.
pub fn decompose_all(
    alg: &Algebra,
    maps: &[BilinearMap],
    ctx: &PeirceContext,
    mode: DeltaMode,
) -> Result<Vec<DecompositionResult>> {
    maps.par_iter()
        .map(|j| decompose(alg, j, ctx, mode))
        .collect()
}
