//! Hypothesis-gated consequences of the decomposition, checked on an instance.

use std::fmt;
use std::str::FromStr;

use super::{decompose_all, DeltaMode};
use crate::algebra::{
    check_hypothesis, Algebra, Bimodule, Hypothesis, HypothesisVerdict, PeirceContext,
};
use crate::error::{Error, Result};
use crate::linalg::subspace_equal;
use crate::maps::{solve_space, MapKind, SolveLimits};
use crate::verdict::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corollary {
    /// Under `star` and a corner equal to its commutator ideal, every Jordan
    /// biderivation is a biderivation plus an antibiderivation.
    IdealSplit,
    /// The same conclusion under orthogonality, faithfulness of `A12`, and a
    /// corner equal to its commutator ideal.
    FaithfulSplit,
    /// On a triangular context every Jordan biderivation is a biderivation.
    TriangularJordan,
}

impl Corollary {
    pub const ALL: [Corollary; 3] = [
        Corollary::IdealSplit,
        Corollary::FaithfulSplit,
        Corollary::TriangularJordan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Corollary::IdealSplit => "ideal-split",
            Corollary::FaithfulSplit => "faithful-split",
            Corollary::TriangularJordan => "triangular-jordan",
        }
    }
}

impl fmt::Display for Corollary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Corollary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Corollary::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown corollary {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryVerdict {
    pub corollary: Corollary,
    pub hypotheses: Vec<HypothesisVerdict>,
    pub outcome: Outcome,
    pub detail: String,
}

/// Checks the corollary's hypotheses, then its conclusion on this instance.
/// Failing hypotheses give `NotApplicable`.
pub fn corollary_check(
    alg: &Algebra,
    ctx: &PeirceContext,
    which: Corollary,
    limits: &SolveLimits,
) -> Result<CorollaryVerdict> {
    let h = |x| check_hypothesis(alg, ctx, x);
    let (hypotheses, applicable) = match which {
        Corollary::IdealSplit => {
            let v = vec![
                h(Hypothesis::Star),
                h(Hypothesis::Ideal11),
                h(Hypothesis::Ideal22),
            ];
            let ok = v[0].holds && (v[1].holds || v[2].holds);
            (v, ok)
        }
        Corollary::FaithfulSplit => {
            let v = vec![
                h(Hypothesis::Orthogonality),
                h(Hypothesis::Faithful),
                h(Hypothesis::Ideal11),
                h(Hypothesis::Ideal22),
            ];
            let ok = v[0].holds && v[1].holds && (v[2].holds || v[3].holds);
            (v, ok)
        }
        Corollary::TriangularJordan => {
            let v = vec![h(Hypothesis::Triangular), h(Hypothesis::Faithful)];
            let ok = v.iter().all(|x| x.holds);
            (v, ok)
        }
    };
    if !applicable {
        let failed: Vec<&str> = hypotheses
            .iter()
            .filter(|v| !v.holds)
            .map(|v| v.hypothesis.name())
            .collect();
        return Ok(CorollaryVerdict {
            corollary: which,
            hypotheses,
            outcome: Outcome::NotApplicable,
            detail: format!("hypotheses fail: {}", failed.join(", ")),
        });
    }
    let reg = Bimodule::regular(alg);
    let jordan = solve_space(alg, &reg, &MapKind::JordanBiderivation, limits)?;
    let (ok, detail) = match which {
        Corollary::TriangularJordan => {
            let bider = solve_space(alg, &reg, &MapKind::Biderivation, limits)?;
            let eq = subspace_equal(&jordan.space, &bider.space)?;
            (
                eq,
                format!(
                    "jordan-bider dim {}, bider dim {}",
                    jordan.dim(),
                    bider.dim()
                ),
            )
        }
        Corollary::IdealSplit | Corollary::FaithfulSplit => {
            let results = decompose_all(alg, &jordan.bilinear_basis(), ctx, DeltaMode::Literal)?;
            let bad = results.iter().position(|r| {
                !(r.j1.is_zero() && r.verdicts.residual_zero && r.verdicts.components_pass())
            });
            match bad {
                None => (
                    true,
                    format!(
                        "{} basis maps split with zero extremal part and zero residual",
                        results.len()
                    ),
                ),
                Some(k) => (false, format!("basis map {} does not split", k + 1)),
            }
        }
    };
    Ok(CorollaryVerdict {
        corollary: which,
        hypotheses,
        outcome: Outcome::from_bool(ok),
        detail,
    })
}
