use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nonassoc::algebra::Algebra;
use nonassoc::analysis::{find_associative_symmetric_forms, FormOptions};
use nonassoc::biedenharn::biedenharn_demo;
use nonassoc::builtin::{builtin, builtin_dim, BUILTIN_NAMES};
use nonassoc::elementary::elementary_algebra_report;
use nonassoc::fl::{fl_demo, DEFAULT_TRUNCATION};
use nonassoc::identities::{catalog, check_all, Mode, PROFILES};
use nonassoc::io::load_algebra;
use nonassoc::near::haehl::haehl_demo_with;
use nonassoc::near::kalscheuer::kalscheuer_demo_with;
use nonassoc::near::pnr::pnr_demo;
use nonassoc::near::twisted::twisted_demo_with;
use nonassoc::near::{HaehlParams, NearFieldParams, Rho, Tolerances};
use nonassoc::octmatrix::ruhaak_counterexample;
use nonassoc::qform::qform_demo;
use nonassoc::report::Check;

/// Exact nonassociative algebra toolkit.
#[derive(Parser)]
#[command(name = "nonassoc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Random trials.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, env = "NONASSOC_SEED", default_value_t = 1)]
    seed: u64,
    /// Write report lines here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List built-in algebras and the identity catalog.
    Catalog {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an identity profile on a built-in or file algebra.
    Check {
        /// Built-in name or `file:PATH`.
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "all")]
        profile: String,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a nondegenerate symmetric associative bilinear form.
    Forms {
        #[arg(long)]
        algebra: String,
        /// Allow algebras above dimension 27.
        #[arg(long)]
        slow: bool,
        /// Use the unit-functional ansatz instead of full elimination.
        #[arg(long)]
        functional: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one of the reproductions.
    Demo {
        name: DemoName,
        #[command(flatten)]
        common: Common,
        /// Overrides both near-structure tolerances.
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        w: f64,
        /// Read `--w` as Kalscheuer's parameter, so the twist uses `1/w`.
        #[arg(long)]
        kalscheuer_convention: bool,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value = "t3")]
        rho: String,
        /// Truncation degree of the fundamental-length algebra.
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        degree: u32,
        /// Total degree of the exponential check.
        #[arg(long, default_value_t = 12)]
        exp_check: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    Ruhaak,
    Kalscheuer,
    Twisted,
    Haehl,
    Pnr,
    Fl,
    Biedenharn,
    Qform,
    Elementary,
}

struct InputError(String);

fn writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>, InputError> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| InputError(format!("cannot create {}: {e}", p.display())))?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn resolve_algebra(source: &str) -> Result<Algebra, InputError> {
    if let Some(path) = source.strip_prefix("file:") {
        return load_algebra(path.as_ref()).map_err(|e| InputError(format!("{path}: {e}")));
    }
    builtin(source).ok_or_else(|| InputError(format!("unknown algebra `{source}`; see `nonassoc catalog`")))
}

fn catalog_lines() -> Vec<String> {
    let mut lines: Vec<String> = BUILTIN_NAMES
        .iter()
        .map(|n| format!("algebra {n} dim={}", builtin_dim(n).expect("registered")))
        .collect();
    lines.extend(catalog().into_iter().map(|d| format!("identity {} ↦ {}", d.id, d.anchor)));
    lines.push(format!("identity power-assoc(n) ↦ x^a x^b = x^(a+b), a + b <= n"));
    lines.push(format!("profiles {}", PROFILES.join(" ")));
    lines
}

fn emit(w: &mut dyn Write, v: &Value) -> io::Result<()> {
    writeln!(w, "{v}")
}

/// Header, report, one line per check, summary. Exit 0 iff every check passed.
fn emit_demo(w: &mut dyn Write, name: &str, seed: u64, report: Value, checks: &[Check]) -> io::Result<bool> {
    let names: Vec<&str> = checks.iter().map(|c| c.name.as_str()).collect();
    emit(w, &json!({"record": "header", "demo": name, "seed": seed, "assertions": names}))?;
    emit(w, &json!({"record": "report", "demo": name, "report": report}))?;
    for c in checks {
        emit(w, &json!({"record": "check", "demo": name, "name": c.name, "passed": c.passed, "detail": c.detail}))?;
    }
    let passed = checks.iter().all(|c| c.passed);
    emit(w, &json!({"record": "summary", "demo": name, "passed": passed, "failed": checks.iter().filter(|c| !c.passed).count()}))?;
    Ok(passed)
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report serializes")
}

#[allow(clippy::too_many_arguments)]
fn run_demo(
    name: DemoName,
    common: &Common,
    tolerance: Option<f64>,
    w: f64,
    kalscheuer_convention: bool,
    alpha: f64,
    rho: &str,
    degree: u32,
    exp_check: u32,
) -> Result<bool, InputError> {
    let tol = match tolerance {
        Some(t) if t > 0.0 && t.is_finite() => Tolerances::uniform(t),
        Some(t) => return Err(InputError(format!("tolerance must be positive, got {t}"))),
        None => Tolerances::default(),
    };
    let seed = common.seed;
    let trials = common.trials;
    let (label, report, checks): (&str, Value, Vec<Check>) = match name {
        DemoName::Ruhaak => {
            let r = ruhaak_counterexample();
            let checks = vec![
                Check::new("d12 = 2 i3", r.faithful.d12 == r.claimed_d12, r.faithful.d12.join(" ")),
                Check::new("d12* = i3", r.faithful.d12_star == r.claimed_d12_star, r.faithful.d12_star.join(" ")),
            ];
            ("ruhaak", to_value(&r), checks)
        }
        DemoName::Kalscheuer => {
            let p = if kalscheuer_convention {
                NearFieldParams::kalscheuer_convention(w, [1.0, 0.0, 0.0])
            } else {
                NearFieldParams::new(w, [1.0, 0.0, 0.0])
            }
            .map_err(|e| InputError(e.to_string()))?;
            let r = kalscheuer_demo_with(&p, trials.unwrap_or(10_000), seed, &tol);
            let c = r.checks.clone();
            ("kalscheuer", to_value(&r), c)
        }
        DemoName::Twisted => {
            if !w.is_finite() {
                return Err(InputError(format!("w must be finite, got {w}")));
            }
            let r = twisted_demo_with(w, trials.unwrap_or(2000), seed, &tol);
            let c = r.checks.clone();
            ("twisted", to_value(&r), c)
        }
        DemoName::Haehl => {
            let rho: Rho = rho.parse().map_err(InputError)?;
            let p = HaehlParams::new(alpha, rho).map_err(|e| InputError(e.to_string()))?;
            let r = haehl_demo_with(&p, trials.unwrap_or(10_000), seed, &tol);
            let c = r.checks.clone();
            ("haehl", to_value(&r), c)
        }
        DemoName::Pnr => {
            let r = pnr_demo(trials.unwrap_or(1000), seed);
            let c = r.checks.clone();
            ("pnr", to_value(&r), c)
        }
        DemoName::Fl => {
            if exp_check < 4 {
                return Err(InputError(format!("--exp-check must be at least 4, got {exp_check}")));
            }
            if degree < 12 {
                return Err(InputError(format!("--degree must be at least 12, got {degree}")));
            }
            let r = fl_demo(degree, exp_check, seed);
            let c = r.checks.clone();
            ("fl", to_value(&r), c)
        }
        DemoName::Biedenharn => {
            let r = biedenharn_demo(seed, trials.unwrap_or(100));
            let o = &r.operator;
            let checks = vec![
                Check::new("A+ A- = A^2 1", o.factorization_exact == o.trials, format!("{} of {}", o.factorization_exact, o.trials)),
                Check::new("H(HH) differs from (HH)H", o.power.associator_nonzero, o.power.entry.clone().unwrap_or_default()),
            ];
            ("biedenharn", to_value(&r), checks)
        }
        DemoName::Qform => {
            let t = trials.unwrap_or(1000);
            let r = qform_demo(seed, t, t.div_ceil(2));
            let checks = vec![
                Check::new("0 <= Q <= N(r) N(n) on quaternions", r.bound_violations == 0, format!("{} violations in {}", r.bound_violations, r.quaternionic_trials)),
                Check::new("three-component quaternionic form is non-negative", r.hasse_negative == 0, format!("{} trials", r.hasse_trials)),
                Check::new("octonionic Q < 0", r.negative_witness.is_some(), r.negative_witness.as_ref().map(|w| w.q.clone()).unwrap_or_default()),
            ];
            ("qform", to_value(&r), checks)
        }
        DemoName::Elementary => {
            let r = elementary_algebra_report();
            let checks = vec![Check::new("U3, U4 hold, U5 fails, S^2 S^2 != S^4 in U4", r.matches_expectations(), "")];
            ("elementary", to_value(&r), checks)
        }
    };
    let mut out = writer(&common.out)?;
    let passed = emit_demo(&mut *out, label, seed, report, &checks).map_err(|e| InputError(e.to_string()))?;
    out.flush().map_err(|e| InputError(e.to_string()))?;
    Ok(passed)
}

fn run_check(algebra: &str, profile: &str, common: &Common) -> Result<bool, InputError> {
    let alg = resolve_algebra(algebra)?;
    let mode = match common.trials {
        Some(t) => Mode::Both { trials: t, seed: common.seed },
        None => Mode::Seeded { seed: common.seed },
    };
    let reports = check_all(&alg, profile, mode).map_err(|e| InputError(e.to_string()))?;
    let mut out = writer(&common.out)?;
    let mut surprises = 0;
    let io = |e: io::Error| InputError(e.to_string());
    for r in &reports {
        let mut v = to_value(r);
        v["record"] = json!("identity");
        v["surprise"] = json!(r.surprise());
        emit(&mut *out, &v).map_err(io)?;
        surprises += r.surprise() as usize;
    }
    emit(&mut *out, &json!({"record": "summary", "algebra": alg.name(), "profile": profile, "seed": common.seed, "checked": reports.len(), "surprises": surprises}))
        .map_err(io)?;
    out.flush().map_err(io)?;
    Ok(surprises == 0)
}

fn run_forms(algebra: &str, slow: bool, functional: bool, out: &Option<PathBuf>) -> Result<bool, InputError> {
    let alg = resolve_algebra(algebra)?;
    if alg.dim() > 27 && !slow {
        return Err(InputError(format!("{} has dimension {}; pass --slow to solve it", alg.name(), alg.dim())));
    }
    let opts = FormOptions { force_elimination: !functional, max_unknowns: usize::MAX, ..FormOptions::default() };
    let space = find_associative_symmetric_forms(&alg, &opts).map_err(|e| InputError(e.to_string()))?;
    let mut w = writer(out)?;
    let found = space.has_nondegenerate();
    emit(
        &mut *w,
        &json!({"record": "forms", "algebra": alg.name(), "dim": alg.dim(), "method": space.method, "space_dim": space.basis.len(), "nondegenerate": found}),
    )
    .and_then(|_| w.flush())
    .map_err(|e| InputError(e.to_string()))?;
    Ok(found)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Catalog { out } => writer(out).and_then(|mut w| {
            for l in catalog_lines() {
                writeln!(w, "{l}").map_err(|e| InputError(e.to_string()))?;
            }
            w.flush().map_err(|e| InputError(e.to_string()))?;
            Ok(true)
        }),
        Command::Check { algebra, profile, common } => run_check(algebra, profile, common),
        Command::Forms { algebra, slow, functional, out } => run_forms(algebra, *slow, *functional, out),
        Command::Demo { name, common, tolerance, w, kalscheuer_convention, alpha, rho, degree, exp_check } => {
            run_demo(*name, common, *tolerance, *w, *kalscheuer_convention, *alpha, rho, *degree, *exp_check)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
