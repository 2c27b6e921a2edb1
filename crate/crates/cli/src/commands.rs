use std::fmt;
use std::fs;
use std::time::Instant;

use biderlab::algebra::{check_hypothesis, Algebra, Bimodule, Hypothesis, PeirceContext, Validity};
use biderlab::decomposition::{corollary_check, decompose_all, Corollary, DeltaMode};
use biderlab::format;
use biderlab::linalg::subspace_contains;
use biderlab::maps::{
    check_bilinear, check_linear, solve_space, suites, system_size, BilinearMap, MapKind, MapSpace,
    SolveLimits,
};
use biderlab::poly::{MultilinearPolynomial, NamedPoly};
use biderlab::report::{
    write_report, AlgebraSummary, ContextSummary, Report, SpaceSummary, StageTiming,
};
use biderlab::verdict::Outcome;

use crate::{input, AlgebraArg, Cli, Command, KindArg, ModeArg, SuiteArg};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Lib(biderlab::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Io(s) => f.write_str(s),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<biderlab::Error> for CliError {
    fn from(e: biderlab::Error) -> Self {
        CliError::Lib(e)
    }
}

struct Stopwatch {
    enabled: bool,
    stages: Vec<StageTiming>,
}

impl Stopwatch {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.stages.push(StageTiming {
                stage: stage.to_string(),
                seconds: start.elapsed().as_secs_f64(),
            });
        }
        out
    }
}

fn mode(m: ModeArg) -> DeltaMode {
    match m {
        ModeArg::Literal => DeltaMode::Literal,
        ModeArg::Adjusted => DeltaMode::Adjusted,
    }
}

fn load(arg: &AlgebraArg, report: &mut Report) -> Result<Algebra, CliError> {
    let (alg, digest) = input::algebra(arg.source(), true)?;
    report.inputs.push(digest);
    report.algebra = Some(AlgebraSummary::new(&alg));
    Ok(alg)
}

fn context(alg: &Algebra, coords: &str, report: &mut Report) -> Result<PeirceContext, CliError> {
    let e = input::coordinates(coords, alg.dim())?;
    let ctx = PeirceContext::new(alg, &e)?;
    let all: Vec<_> = Hypothesis::ALL
        .iter()
        .map(|&h| check_hypothesis(alg, &ctx, h))
        .collect();
    report.context = Some(ContextSummary::new(&ctx, &all));
    Ok(ctx)
}

fn jordan_space(alg: &Algebra) -> Result<MapSpace, CliError> {
    Ok(solve_space(
        alg,
        &Bimodule::regular(alg),
        &MapKind::JordanBiderivation,
        &SolveLimits::from_env(),
    )?)
}

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    if let Command::Export { preset } = &cli.command {
        let (alg, _) = input::algebra(&format!("preset:{preset}"), true)?;
        let text = format::algebra_to_json(&alg);
        match &cli.out {
            Some(path) => fs::write(path, text)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        return Ok(0);
    }

    let mut watch = Stopwatch {
        enabled: cli.timings,
        stages: Vec::new(),
    };
    let mut report = match &cli.command {
        Command::Validate { algebra } => validate(algebra)?,
        Command::Info { algebra } => {
            let mut r = Report::new("info");
            watch.time("load", || load(algebra, &mut r))?;
            r.verdict("algebra laws", Outcome::Pass, None);
            r
        }
        Command::Spaces {
            algebra,
            kind,
            poly,
            export_basis,
        } => spaces(
            algebra,
            *kind,
            poly.as_deref(),
            export_basis.as_deref(),
            &mut watch,
        )?,
        Command::Check {
            algebra,
            idempotent,
            hypotheses,
        } => check(algebra, idempotent, hypotheses)?,
        Command::Decompose {
            algebra,
            idempotent,
            map,
            all_basis: _,
            mode: m,
        } => {
            let mut r = Report::new("decompose");
            let alg = load(algebra, &mut r)?;
            let ctx = context(&alg, idempotent, &mut r)?;
            let maps = match map {
                Some(path) => {
                    let (text, digest) = input::read(path)?;
                    r.inputs.push(digest);
                    let j = format::parse_map(&text, &alg)?;
                    let ok = check_bilinear(
                        &alg,
                        &Bimodule::regular(&alg),
                        &j,
                        &MapKind::JordanBiderivation,
                    )?;
                    if let biderlab::maps::CheckVerdict::Violated(v) = ok {
                        r.verdict(
                            "input is a Jordan biderivation",
                            Outcome::Fail,
                            Some(v.describe(&alg)),
                        );
                        return finish(cli, r, watch);
                    }
                    vec![(path.display().to_string(), j)]
                }
                None => {
                    let space = watch.time("solve", || jordan_space(&alg))?;
                    labelled_basis(&space)
                }
            };
            run_decompositions(&mut r, &alg, &ctx, &maps, mode(*m), &mut watch)?;
            r
        }
        Command::Verify {
            algebra,
            idempotent,
            suite,
            samples,
            seed,
            mode: m,
        } => {
            let mut r = Report::new("verify");
            r.seed = Some(*seed);
            let alg = load(algebra, &mut r)?;
            let ctx = context(&alg, idempotent, &mut r)?;
            let space = watch.time("solve", || jordan_space(&alg))?;
            r.spaces.push(SpaceSummary::new(
                &space,
                None,
                system_size(&alg, &Bimodule::regular(&alg), &MapKind::JordanBiderivation),
            ));
            let maps = labelled_basis(&space);
            if matches!(suite, SuiteArg::Identities | SuiteArg::All) {
                identity_suites(&mut r, &alg, &space, &maps, *samples, *seed, &mut watch)?;
            }
            if matches!(suite, SuiteArg::Decomposition | SuiteArg::All) {
                run_decompositions(&mut r, &alg, &ctx, &maps, mode(*m), &mut watch)?;
                let limits = SolveLimits::from_env();
                for c in Corollary::ALL {
                    let v =
                        watch.time("corollaries", || corollary_check(&alg, &ctx, c, &limits))?;
                    r.corollary(&v);
                }
            }
            r
        }
        Command::Export { .. } => unreachable!("handled above"),
    };
    if cli.timings {
        report.timings = Some(std::mem::take(&mut watch.stages));
    }
    finish(cli, report, watch)
}

fn finish(cli: &Cli, mut report: Report, watch: Stopwatch) -> Result<u8, CliError> {
    if cli.timings && report.timings.is_none() {
        report.timings = Some(watch.stages);
    }
    match &cli.out {
        Some(path) => {
            write_report(&report, path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let failed = report
                .verdicts
                .iter()
                .filter(|v| v.outcome.is_fail())
                .count();
            println!(
                "{}: {} verdicts, {failed} failed; report written to {}",
                report.command,
                report.verdicts.len(),
                path.display()
            );
        }
        None => print!("{}", report.to_json()),
    }
    Ok(report.exit_code() as u8)
}

fn validate(arg: &AlgebraArg) -> Result<Report, CliError> {
    let mut r = Report::new("validate");
    let (alg, digest) = input::algebra(arg.source(), false)?;
    r.inputs.push(digest);
    let names = alg.basis_names();
    match alg.validate() {
        Validity::Valid => {
            r.algebra = Some(AlgebraSummary::new(&alg));
            r.verdict("algebra laws", Outcome::Pass, None);
        }
        Validity::NotAssociative(i, j, k) => r.verdict(
            "algebra laws",
            Outcome::Fail,
            Some(format!(
                "not associative at ({}, {}, {})",
                names[i], names[j], names[k]
            )),
        ),
        Validity::UnityFails(i) => r.verdict(
            "algebra laws",
            Outcome::Fail,
            Some(format!(
                "unity law fails at basis element {} ({})",
                i + 1,
                names[i]
            )),
        ),
    }
    Ok(r)
}

fn spaces(
    arg: &AlgebraArg,
    kind: KindArg,
    poly: Option<&str>,
    export: Option<&std::path::Path>,
    watch: &mut Stopwatch,
) -> Result<Report, CliError> {
    let mut r = Report::new("spaces");
    let alg = load(arg, &mut r)?;
    let needs_poly = matches!(kind, KindArg::FBider | KindArg::FDer);
    let poly = match (poly, needs_poly) {
        (Some(p), true) => {
            let (f, digest) = input::polynomial(p)?;
            r.inputs.push(digest);
            Some((p.to_string(), f))
        }
        (None, true) => {
            return Err(CliError::Usage(
                "--poly is required for f-bider and f-der".into(),
            ))
        }
        (Some(_), false) => {
            return Err(CliError::Usage(
                "--poly only applies to f-bider and f-der".into(),
            ))
        }
        (None, false) => None,
    };
    let kind = match (kind, poly.as_ref().map(|p| p.1.clone())) {
        (KindArg::Bider, _) => MapKind::Biderivation,
        (KindArg::Antibider, _) => MapKind::Antibiderivation,
        (KindArg::JordanBider, _) => MapKind::JordanBiderivation,
        (KindArg::FBider, Some(f)) => MapKind::FBiderivation(f),
        (KindArg::FDer, Some(f)) => MapKind::FDerivation(f),
        _ => unreachable!("polynomial presence checked above"),
    };
    let reg = Bimodule::regular(&alg);
    let space = watch.time("solve", || {
        solve_space(&alg, &reg, &kind, &SolveLimits::from_env())
    })?;
    r.spaces.push(SpaceSummary::new(
        &space,
        poly.as_ref().map(|p| p.0.clone()),
        system_size(&alg, &reg, &kind),
    ));
    let failure = watch.time("check", || -> Result<Option<String>, CliError> {
        if let MapKind::FDerivation(f) = &kind {
            for (k, d) in space.linear_basis().iter().enumerate() {
                if let biderlab::maps::CheckVerdict::Violated(_) = check_linear(&alg, &reg, d, f)? {
                    return Ok(Some(format!("basis map {}", k + 1)));
                }
            }
        } else {
            for (k, b) in space.bilinear_basis().iter().enumerate() {
                if let biderlab::maps::CheckVerdict::Violated(v) =
                    check_bilinear(&alg, &reg, b, &kind)?
                {
                    return Ok(Some(format!("basis map {}: {}", k + 1, v.describe(&alg))));
                }
            }
        }
        Ok(None)
    })?;
    r.verdict(
        format!("{} basis satisfies its identities", kind.label()),
        Outcome::from_bool(failure.is_none()),
        failure,
    );
    if let Some(dir) = export {
        if kind.is_linear() {
            return Err(CliError::Usage(
                "--export-basis applies to bilinear kinds".into(),
            ));
        }
        fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        for (k, b) in space.bilinear_basis().iter().enumerate() {
            let path = dir.join(format!("basis-{}.json", k + 1));
            fs::write(&path, format::map_to_json(b, Some(alg.name())))
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(r)
}

fn check(arg: &AlgebraArg, idempotent: &str, list: &str) -> Result<Report, CliError> {
    let mut r = Report::new("check");
    let alg = load(arg, &mut r)?;
    let e = input::coordinates(idempotent, alg.dim())?;
    let ctx = PeirceContext::new(&alg, &e)?;
    let which: Vec<Hypothesis> = if list.trim() == "all" {
        Hypothesis::ALL.to_vec()
    } else {
        list.split(',').map(str::parse).collect::<Result<_, _>>()?
    };
    let verdicts: Vec<_> = which
        .iter()
        .map(|&h| check_hypothesis(&alg, &ctx, h))
        .collect();
    for v in &verdicts {
        r.verdict(
            v.hypothesis.name(),
            Outcome::from_bool(v.holds),
            v.witness.clone(),
        );
    }
    r.context = Some(ContextSummary::new(&ctx, &verdicts));
    Ok(r)
}

fn labelled_basis(space: &MapSpace) -> Vec<(String, BilinearMap)> {
    space
        .bilinear_basis()
        .into_iter()
        .enumerate()
        .map(|(k, b)| (format!("jordan basis {}", k + 1), b))
        .collect()
}

fn run_decompositions(
    r: &mut Report,
    alg: &Algebra,
    ctx: &PeirceContext,
    maps: &[(String, BilinearMap)],
    mode: DeltaMode,
    watch: &mut Stopwatch,
) -> Result<(), CliError> {
    let only: Vec<BilinearMap> = maps.iter().map(|(_, b)| b.clone()).collect();
    let results = watch.time("decompose", || decompose_all(alg, &only, ctx, mode))?;
    for ((label, _), res) in maps.iter().zip(&results) {
        r.decomposition(label, alg, res);
    }
    Ok(())
}

fn identity_suites(
    r: &mut Report,
    alg: &Algebra,
    jordan: &MapSpace,
    maps: &[(String, BilinearMap)],
    samples: usize,
    seed: u64,
    watch: &mut Stopwatch,
) -> Result<(), CliError> {
    watch.time("identities", || {
        for (label, j) in maps {
            r.suite(
                label,
                Some(seed),
                &suites::commutes_with_bracket(alg, j, seed, samples),
            );
            r.suite(label, None, &suites::jordan_triple_rule(alg, j));
            r.suite(
                label,
                Some(seed),
                &suites::jordan_sandwich_rule(alg, j, seed, samples),
            );
        }
    });
    let reg = Bimodule::regular(alg);
    let limits = SolveLimits::from_env();
    let polys = [
        (NamedPoly::Product, "product"),
        (NamedPoly::Jordan, "jordan"),
        (NamedPoly::JordanTriple, "jordan-triple"),
    ];
    for (name, label) in polys {
        let f = MultilinearPolynomial::named(name);
        let label = label.to_string();
        let kind = MapKind::FBiderivation(f);
        let space = watch.time("f-spaces", || solve_space(alg, &reg, &kind, &limits))?;
        r.spaces.push(SpaceSummary::new(
            &space,
            Some(label.clone()),
            system_size(alg, &reg, &kind),
        ));
        let contained = subspace_contains(&jordan.space, &space.space)?;
        r.verdict(
            format!("f-bider ({label}) space inside jordan-bider space"),
            Outcome::from_bool(contained),
            None,
        );
        for (k, b) in space.bilinear_basis().iter().enumerate() {
            r.suite(
                &format!("f-bider ({label}) basis {}", k + 1),
                None,
                &suites::unity_annihilates(alg, b),
            );
        }
    }
    Ok(())
}
