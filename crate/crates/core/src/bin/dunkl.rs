use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dunkl_clifford::constants::{Constants, Perturbation};
use dunkl_clifford::dunkl::OperatorContext;
use dunkl_clifford::error::Error;
use dunkl_clifford::gegenbauer::{gegenbauer, Family};
use dunkl_clifford::integration::gram;
use dunkl_clifford::json;
use dunkl_clifford::monogenic::monogenic_basis;
use dunkl_clifford::rational::{parse_q, Q};
use dunkl_clifford::rootsys::RootSystem;
use dunkl_clifford::suite::{run, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "dunkl", version, about = "Exact Dunkl monogenics and Clifford-Gegenbauer polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print a basis of the inner monogenics of degree K as JSON.
    Monogenic {
        #[arg(long)]
        roots: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// Run verification suites; exits 1 if any identity fails.
    Verify {
        /// operators, monogenics, gegenbauer-ball, gegenbauer-euclid, orthogonality or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
        /// Highest Gegenbauer degree t.
        #[arg(long, default_value_t = 6)]
        t_max: u32,
        /// Root system file; defaults to Z2^2 with k = (1/2, 1/3) and A2 with k = 1/2.
        #[arg(long)]
        roots: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Coefficients of C_t (ball) or G_t (euclid) applied to the first monogenic of degree K.
    Gegenbauer {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        t: u32,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        alpha: Q,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        roots: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Gram matrix of the family built on the first monogenics of degree 0..=2 (ball) or degree K (euclid).
    Gram {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        alpha: Q,
        #[arg(long)]
        tmax: u32,
        #[arg(long)]
        roots: PathBuf,
        /// Monogenic degree for the euclid family.
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, value_enum, default_value = "csv")]
        emit: Emit,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Q, String> {
    parse_q(s).map_err(|e| e.to_string())
}

enum Outcome {
    Ok,
    Failed,
}

/// Writes to stdout, ignoring a closed pipe (e.g. `| head`).
fn write_out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn load_roots(path: &Path) -> Result<RootSystem, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    json::roots_from_json(&text)
}

fn first_monogenic(ctx: &OperatorContext, k: u32) -> Result<dunkl_clifford::poly::MVPoly, Error> {
    monogenic_basis(ctx, k).basis.into_iter().next().ok_or(Error::NotMonogenic)
}

fn execute(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Monogenic { roots, degree } => {
            let ctx = OperatorContext::new(load_roots(&roots)?);
            let basis = monogenic_basis(&ctx, degree);
            write_out(&format!("{}\n", json::basis_to_json(ctx.dim(), degree, ctx.mu(), &basis.basis)));
            Ok(Outcome::Ok)
        }
        Command::Verify { suite, max_degree, t_max, roots, inject_fault } => {
            let suites = Suite::parse_selection(&suite)?;
            let mut config = SuiteConfig { max_degree, t_max, ..SuiteConfig::default() };
            if let Some(path) = roots {
                config.systems = vec![load_roots(&path)?];
            }
            if let Some(name) = inject_fault {
                let p: Perturbation = name.parse()?;
                config.constants = Constants::with_fault(p);
            }
            let reports = run(&suites, &config);
            for r in &reports {
                write_out(&r.to_string());
            }
            let ok = reports.iter().all(|r| r.passed());
            Ok(if ok { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Gegenbauer { family, t, alpha, k, roots, emit } => {
            family.check_alpha(&alpha)?;
            let ctx = OperatorContext::new(load_roots(&roots)?);
            let mk = first_monogenic(&ctx, k)?;
            let g = gegenbauer(&ctx, family, t, &alpha, &mk)?;
            match emit {
                Emit::Json => write_out(&format!("{}\n", json::gegenbauer_to_json(&g, &mk))),
                Emit::Csv => write_out(&json::gegenbauer_to_csv(&g)),
            }
            Ok(Outcome::Ok)
        }
        Command::Gram { family, alpha, tmax, roots, k, emit } => {
            family.check_alpha(&alpha)?;
            let ctx = OperatorContext::new(load_roots(&roots)?);
            let monogenics = match family {
                Family::Ball => (0..=2).map(|d| first_monogenic(&ctx, d)).collect::<Result<Vec<_>, _>>()?,
                Family::Euclid => vec![first_monogenic(&ctx, k)?],
            };
            let g = gram(&ctx, family, &alpha, tmax, &monogenics)?;
            match emit {
                Emit::Json => write_out(&format!("{}\n", json::gram_to_json(&g))),
                Emit::Csv => write_out(&g.to_csv()),
            }
            Ok(Outcome::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
