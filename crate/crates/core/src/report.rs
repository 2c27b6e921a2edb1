//! Machine-readable verification reports.
//!
//! Keys appear in declaration order. Rationals are strings. Wall-clock
//! timings are only present when requested, so that reruns with the same
//! inputs and seed are byte-identical by default.

use std::path::Path;

use serde::Serialize;

use crate::algebra::{center, Algebra, Element, HypothesisVerdict, PeirceContext};
use crate::decomposition::{BlockReport, CorollaryVerdict, DecompositionResult};
use crate::linalg::format_vector;
use crate::maps::{CheckVerdict, ExtremalWitness, MapSpace};
use crate::verdict::Outcome;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub dim: usize,
    pub center_dim: usize,
    pub basis: Vec<String>,
}

impl AlgebraSummary {
    pub fn new(alg: &Algebra) -> Self {
        AlgebraSummary {
            name: alg.name().to_string(),
            dim: alg.dim(),
            center_dim: center(alg).dim(),
            basis: alg.basis_names().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerDims {
    pub a11: usize,
    pub a12: usize,
    pub a21: usize,
    pub a22: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisEntry {
    pub name: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl From<&HypothesisVerdict> for HypothesisEntry {
    fn from(v: &HypothesisVerdict) -> Self {
        HypothesisEntry {
            name: v.hypothesis.name(),
            holds: v.holds,
            witness: v.witness.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContextSummary {
    pub idempotent: Vec<String>,
    pub corner_dims: CornerDims,
    pub hypotheses: Vec<HypothesisEntry>,
}

impl ContextSummary {
    pub fn new(ctx: &PeirceContext, hypotheses: &[HypothesisVerdict]) -> Self {
        let [a11, a12, a21, a22] = ctx.corner_dims();
        ContextSummary {
            idempotent: strings(ctx.e()),
            corner_dims: CornerDims { a11, a12, a21, a22 },
            hypotheses: hypotheses.iter().map(HypothesisEntry::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceSummary {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    pub rows: usize,
    pub cols: usize,
    pub dim: usize,
}

impl SpaceSummary {
    pub fn new(space: &MapSpace, polynomial: Option<String>, size: (usize, usize)) -> Self {
        SpaceSummary {
            kind: space.kind.label(),
            polynomial,
            rows: size.0,
            cols: size.1,
            dim: space.dim(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModeCheck {
    pub mode: &'static str,
    pub delta_antibiderivation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionSummary {
    pub label: String,
    pub mode: &'static str,
    pub j_ee: Vec<String>,
    pub extremal: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal_element: Option<Vec<String>>,
    pub delta_zero: bool,
    pub d_part_zero: bool,
    pub residual_zero: bool,
    pub modes: Vec<ModeCheck>,
    pub star: bool,
    pub zero_morphism: bool,
    pub residual_blocks: Vec<BlockReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub cases: usize,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictEntry {
    pub name: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageTiming {
    pub stage: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<ContextSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub spaces: Vec<SpaceSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub decompositions: Vec<DecompositionSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<SuiteSummary>,
    pub verdicts: Vec<VerdictEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<StageTiming>>,
}

fn strings(x: &Element) -> Vec<String> {
    format_vector(x.coords())
}

fn check_detail(alg: &Algebra, v: &CheckVerdict) -> Option<String> {
    match v {
        CheckVerdict::Holds => None,
        CheckVerdict::Violated(v) => Some(v.describe(alg)),
    }
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            tool: "biderlab",
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            inputs: Vec::new(),
            seed: None,
            algebra: None,
            context: None,
            spaces: Vec::new(),
            decompositions: Vec::new(),
            suites: Vec::new(),
            verdicts: Vec::new(),
            timings: None,
        }
    }

    pub fn verdict(&mut self, name: impl Into<String>, outcome: Outcome, detail: Option<String>) {
        self.verdicts.push(VerdictEntry {
            name: name.into(),
            outcome,
            detail,
        });
    }

    pub fn suite(
        &mut self,
        map: &str,
        seed: Option<u64>,
        outcome: &crate::maps::suites::SuiteOutcome,
    ) {
        let name = format!("{map}: {}", outcome.name);
        let result = Outcome::from_bool(outcome.passed());
        self.suites.push(SuiteSummary {
            name: name.clone(),
            seed,
            cases: outcome.cases,
            outcome: result,
            witness: outcome.failure.clone(),
        });
        self.verdict(name, result, outcome.failure.clone());
    }

    pub fn corollary(&mut self, v: &CorollaryVerdict) {
        self.verdict(
            format!("corollary {}", v.corollary),
            v.outcome,
            Some(v.detail.clone()),
        );
    }

    /// Records a decomposition and its verdicts under `label`.
    pub fn decomposition(&mut self, label: &str, alg: &Algebra, r: &DecompositionResult) {
        let v = &r.verdicts;
        let (extremal, extremal_element) = match &v.extremal {
            ExtremalWitness::Zero => ("zero", None),
            ExtremalWitness::Extremal(a) => ("extremal", Some(strings(a))),
            ExtremalWitness::NotExtremal => ("not-extremal", None),
        };
        let show = |x: &Element| x.display_with(alg.basis_names());
        self.decompositions.push(DecompositionSummary {
            label: label.to_string(),
            mode: r.mode.name(),
            j_ee: strings(&r.j_ee),
            extremal,
            extremal_element,
            delta_zero: r.delta.is_zero(),
            d_part_zero: r.d_part.is_zero(),
            residual_zero: v.residual_zero,
            modes: v
                .antibiderivation_by_mode
                .iter()
                .map(|(m, ok)| ModeCheck {
                    mode: m.name(),
                    delta_antibiderivation: *ok,
                })
                .collect(),
            star: v.star.holds,
            zero_morphism: v.zero_morphism.holds,
            residual_blocks: v.blocks.clone(),
        });

        let failed_split: Vec<String> = v
            .split
            .iter()
            .filter(|c| !c.holds)
            .map(|c| format!("{}: {}", c.statement, c.witness.clone().unwrap_or_default()))
            .collect();
        self.verdict(
            format!("{label}: extremal split"),
            Outcome::from_bool(failed_split.is_empty()),
            (!failed_split.is_empty()).then(|| failed_split.join("; ")),
        );
        self.verdict(
            format!("{label}: j1 extremal or zero"),
            Outcome::from_bool(v.extremal.is_extremal_or_zero()),
            match &v.extremal {
                ExtremalWitness::Extremal(a) => Some(format!("a = {}", show(a))),
                _ => None,
            },
        );
        self.verdict(
            format!("{label}: delta antibiderivation"),
            Outcome::from_bool(v.delta_antibiderivation.holds()),
            check_detail(alg, &v.delta_antibiderivation),
        );
        self.verdict(
            format!("{label}: d_part biderivation"),
            Outcome::from_bool(v.d_part_biderivation.holds()),
            check_detail(alg, &v.d_part_biderivation),
        );
        let failed_ids: Vec<String> = v
            .identities
            .items
            .iter()
            .chain(&v.identities.auxiliaries)
            .filter(|c| !c.holds)
            .map(|c| format!("{}: {}", c.statement, c.witness.clone().unwrap_or_default()))
            .collect();
        self.verdict(
            format!("{label}: corner identities"),
            Outcome::from_bool(failed_ids.is_empty()),
            (!failed_ids.is_empty()).then(|| failed_ids.join("; ")),
        );
        self.verdict(
            format!("{label}: reconstruction"),
            Outcome::from_bool(v.reconstruction_exact),
            None,
        );
        let nonzero: Vec<String> = v
            .blocks
            .iter()
            .filter(|b| !b.vanishes)
            .map(|b| format!("{} {}", b.block, b.witness.clone().unwrap_or_default()))
            .collect();
        self.verdict(
            format!("{label}: residual zero"),
            Outcome::from_bool(nonzero.is_empty()),
            (!nonzero.is_empty()).then(|| nonzero.join("; ")),
        );
        self.verdict(
            format!("{label}: star and zero_morphism imply zero residual"),
            v.hypotheses_imply_zero_residual,
            None,
        );
    }

    /// 0 when no verdict failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.verdicts.iter().any(|v| v.outcome.is_fail()) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn write_report(report: &Report, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, report.to_json())
}
