//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//!
//! Run with `cargo test --test acceptance` (add `--release` for speed).

mod common;

use std::process::ExitCode;
use std::time::Instant;

use dunkl_clifford::constants::{Constants, Perturbation};
use dunkl_clifford::dunkl::OperatorContext;
use dunkl_clifford::integration::{check_normalization, Verdict};
use dunkl_clifford::monogenic::{expected_monogenic_dim, monogenic_basis};
use dunkl_clifford::rational::{qf, show_q};
use dunkl_clifford::rootsys::{Preset, RootSystem};
use dunkl_clifford::suite::{default_systems, run_suite, Suite, SuiteConfig, SuiteReport};

/// Tolerance for the floating-point oracles.
const ORACLE_TOL: f64 = common::REL_TOL;

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures.iter().map(move |f| format!("{}: {} [{}] {}", r.suite, f.identity, f.case, f.residual)))
        .collect();
    Outcome {
        pass: failures.is_empty(),
        detail: format!("{cases} exact checks, {} nonzero residuals", failures.len()),
        notes: failures.into_iter().take(10).chain(reports.iter().flat_map(|r| r.findings.clone())).collect(),
    }
}

fn operators() -> Outcome {
    from_reports(&[run_suite(Suite::Operators, &SuiteConfig::default())])
}

fn monogenics() -> Outcome {
    let mut out = from_reports(&[run_suite(Suite::Monogenics, &SuiteConfig::default())]);
    // Z2^3 adds a second m = 3 system to the dimension count
    let ctx = OperatorContext::new(RootSystem::preset(Preset::Z2, 3, &[qf(1, 2), qf(1, 3), qf(1, 4)]).unwrap());
    for k in 0..=5 {
        let got = monogenic_basis(&ctx, k).basis.len();
        let want = expected_monogenic_dim(3, k);
        if got != want {
            out.pass = false;
            out.notes.push(format!("Z2^3 k={k}: dim {got} != {want}"));
        }
    }
    out.detail.push_str(", plus Z2^3 dimensions k <= 5");
    out
}

fn gegenbauer() -> Outcome {
    let config = SuiteConfig::default();
    from_reports(&[run_suite(Suite::GegenbauerBall, &config), run_suite(Suite::GegenbauerEuclid, &config)])
}

fn orthogonality() -> Outcome {
    let mut out = from_reports(&[run_suite(Suite::Orthogonality, &SuiteConfig::default())]);
    // the normalization comparison belongs to the next criterion
    out.notes.retain(|n| !n.contains("normalization"));
    out
}

fn normalization() -> Outcome {
    let ctx = OperatorContext::new(default_systems().remove(0));
    let alpha = qf(1, 2);
    let mut pass = true;
    let mut notes = Vec::new();
    let mut parts = Vec::new();
    for k in 0..=2 {
        let mk = monogenic_basis(&ctx, k).basis.remove(0);
        for t in [1, 2] {
            match check_normalization(&ctx, t, &alpha, &mk) {
                Ok(c) => {
                    parts.push(format!("k={k} t={t} {}", c.verdict));
                    match c.verdict {
                        Verdict::Agree => {}
                        Verdict::SignFlip => notes.push(format!(
                            "finding: k={k} t={t}: exact norm {} is positive, stated constant gives {}",
                            show_q(&c.computed),
                            show_q(&c.predicted)
                        )),
                        Verdict::Mismatch => {
                            pass = false;
                            notes.push(format!(
                                "k={k} t={t}: computed {} predicted {}",
                                show_q(&c.computed),
                                show_q(&c.predicted)
                            ));
                        }
                    }
                }
                Err(e) => {
                    pass = false;
                    notes.push(format!("k={k} t={t}: {e}"));
                }
            }
        }
    }
    Outcome { pass, detail: parts.join(", "), notes }
}

fn oracles() -> Outcome {
    let (sphere, cases) = common::sphere_moment_max_error();
    let beta = common::beta_errors();
    let beta_max = beta.iter().cloned().fold(0.0, f64::max);
    Outcome {
        pass: sphere <= ORACLE_TOL && beta_max <= ORACLE_TOL && beta.len() == 5,
        detail: format!(
            "sphere moments: {cases} cases, max rel err {sphere:.2e}; Beta ratios: {} points, max rel err {beta_max:.2e} (tol {ORACLE_TOL:.0e})",
            beta.len()
        ),
        notes: Vec::new(),
    }
}

/// The suite each perturbed constant must break.
fn target(p: Perturbation) -> Suite {
    match p {
        Perturbation::AnnihilationEven
        | Perturbation::AnnihilationOdd
        | Perturbation::ThreeTermD
        | Perturbation::ThreeTermE => Suite::GegenbauerBall,
        Perturbation::EuclidClosedFormSign => Suite::GegenbauerEuclid,
        Perturbation::DiracPowerOdd | Perturbation::GammaEigenvalueOdd => Suite::Operators,
        Perturbation::SphereMoment | Perturbation::BallRadial | Perturbation::BilinearSign => Suite::Orthogonality,
    }
}

fn negative_controls() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for p in Perturbation::ALL {
        let config = SuiteConfig {
            max_degree: 3,
            t_max: 4,
            constants: Constants::with_fault(p),
            ..SuiteConfig::default()
        };
        let suite = target(p);
        let report = run_suite(suite, &config);
        if report.passed() {
            pass = false;
            notes.push(format!("{p}: {suite} still passes"));
        } else {
            notes.push(format!("{p}: {suite} fails on {}", report.failing_identities().join("; ")));
        }
    }
    Outcome {
        pass,
        detail: format!("{} single-constant perturbations", Perturbation::ALL.len()),
        notes,
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("operator identities on Z2^2 and A2, degree <= 5", operators),
        ("monogenic dimensions, Fischer projectors, inversion", monogenics),
        ("Gegenbauer closed forms and identities, t <= 6", gegenbauer),
        ("Gram matrices and monogenic orthogonality", orthogonality),
        ("normalization constants for t in {1, 2}", normalization),
        ("quadrature and Beta oracles", oracles),
        ("negative controls", negative_controls),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = check();
        all &= out.pass;
        let status = if out.pass { "PASS" } else { "FAIL" };
        println!("[{status}] {}. {name}: {} ({:.2?})", i + 1, out.detail, start.elapsed());
        for note in &out.notes {
            println!("       {note}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
