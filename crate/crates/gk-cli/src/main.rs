//! `gk` — check multivector identities and export matrix
//! representations.
//!
//! Exit codes: 0 all checks pass, 1 at least one check fails,
//! 2 parse or usage error.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gk_core::{
    build_clifford_generators, build_fermion_rep, q_number, rotor, rotor_to_rotation, QContext,
    Signature,
};
use gk_cli::eval::{check, EvalContext};
use gk_cli::jsonio::{self, MatrixJson, RotorJson};
use gk_cli::suite::{parse_check, run_suite};

#[derive(Parser)]
#[command(
    name = "gk",
    version,
    about = "Grassmann/Clifford algebra workbench: identity checks, fermionic matrix representations, q-calculus tables and rotors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a single identity, e.g. `gk check "e1*e2 + e2*e1 == 0" --sig 3,0`
    Check {
        /// The identity, written as `<lhs> == <rhs>`
        expr: String,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Run a suite file: one `lhs == rhs` per line, `#` comments
    Suite {
        file: PathBuf,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Export matrix representations as JSON
    Rep {
        #[command(subcommand)]
        what: RepCommand,
    },
    /// q-deformed calculus tables
    Qcalc {
        #[command(subcommand)]
        what: QcalcCommand,
    },
    /// Rotors and the rotations they generate
    Spin {
        #[command(subcommand)]
        what: SpinCommand,
    },
}

#[derive(Args)]
struct ContextArgs {
    /// Signature `p,q` (defaults to `2N,0` on the matrix backend)
    #[arg(long, value_parser = parse_sig)]
    sig: Option<Signature>,
    /// Evaluation backend
    #[arg(long, value_enum, default_value_t = BackendArg::Blades)]
    backend: BackendArg,
    /// Fermionic mode count N (matrix backend)
    #[arg(long)]
    modes: Option<usize>,
    /// Maximum residual accepted as a pass
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Blades,
    Matrix,
}

#[derive(Subcommand)]
enum RepCommand {
    /// All θ_i, ∂_i for N modes, keyed `theta1..thetaN`, `del1..delN`
    Fermion {
        #[arg(long)]
        modes: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// The 2N Euclidean Clifford generator images, keyed `e1..e2N`
    Clifford {
        #[arg(long)]
        modes: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum QcalcCommand {
    /// Print n and [n]_q for n = 0..K-1, twelve significant digits
    Table {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum SpinCommand {
    /// Rotor cos(θ/2) + e_ie_j sin(θ/2) and its rotation matrix (JSON)
    Rotor {
        /// Plane `i,j`
        #[arg(long, value_parser = parse_plane)]
        plane: (usize, usize),
        /// Angle in radians
        #[arg(long)]
        angle: f64,
        /// Euclidean signature `n,0`
        #[arg(long, value_parser = parse_sig)]
        sig: Signature,
    },
}

fn parse_sig(s: &str) -> Result<Signature, String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected 'p,q', got '{s}'"))?;
    let p: usize = p.trim().parse().map_err(|_| format!("invalid p in '{s}'"))?;
    let q: usize = q.trim().parse().map_err(|_| format!("invalid q in '{s}'"))?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

fn parse_plane(s: &str) -> Result<(usize, usize), String> {
    let (i, j) = s
        .split_once(',')
        .ok_or_else(|| format!("expected 'i,j', got '{s}'"))?;
    let i: usize = i.trim().parse().map_err(|_| format!("invalid index in '{s}'"))?;
    let j: usize = j.trim().parse().map_err(|_| format!("invalid index in '{s}'"))?;
    Ok((i, j))
}

/// Errors that should terminate with exit code 2.
fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn build_context(args: &ContextArgs) -> Result<EvalContext, String> {
    match args.backend {
        BackendArg::Blades => {
            if args.modes.is_some() {
                return Err("--modes applies to the matrix backend only".into());
            }
            let sig = args
                .sig
                .ok_or("--sig p,q is required with the blades backend")?;
            Ok(EvalContext::blades(sig))
        }
        BackendArg::Matrix => {
            let modes = args
                .modes
                .ok_or("--modes N is required with the matrix backend")?;
            EvalContext::matrix(modes, args.sig).map_err(|e| e.to_string())
        }
    }
}

fn run_check(expr: &str, args: &ContextArgs) -> ExitCode {
    let ctx = match build_context(args) {
        Ok(ctx) => ctx,
        Err(e) => return usage_error(e),
    };
    let parsed = match parse_check(expr) {
        Ok(Some(pair)) => pair,
        Ok(None) => return usage_error("expected '<lhs> == <rhs>'"),
        Err(e) => return usage_error(e),
    };
    match check(&parsed.0, &parsed.1, &ctx, args.tol) {
        Ok(verdict) if verdict.pass => {
            println!("PASS (residual {:e}, tol {:e})", verdict.residual, args.tol);
            ExitCode::SUCCESS
        }
        Ok(verdict) => {
            println!("FAIL (residual {:e}, tol {:e})", verdict.residual, args.tol);
            ExitCode::from(1)
        }
        Err(e) => usage_error(e),
    }
}

fn run_suite_file(file: &PathBuf, args: &ContextArgs) -> ExitCode {
    let ctx = match build_context(args) {
        Ok(ctx) => ctx,
        Err(e) => return usage_error(e),
    };
    let content = match fs::read_to_string(file) {
        Ok(content) => content,
        Err(e) => return usage_error(format!("{}: {e}", file.display())),
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run_suite(&content, &ctx, args.tol, &mut lock) {
        Ok(outcome) if outcome.all_passed() => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => usage_error(e),
    }
}

fn write_rep(path: &PathBuf, map: BTreeMap<String, MatrixJson>) -> ExitCode {
    match jsonio::to_json_string(&map) {
        Ok(json) => match fs::write(path, json) {
            Ok(()) => {
                println!("wrote {}", path.display());
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(format!("{}: {e}", path.display())),
        },
        Err(e) => usage_error(e),
    }
}

fn run_rep(what: &RepCommand) -> ExitCode {
    match what {
        RepCommand::Fermion { modes, out } => {
            let rep = match build_fermion_rep(*modes) {
                Ok(rep) => rep,
                Err(e) => return usage_error(e),
            };
            let mut map = BTreeMap::new();
            for (i, m) in rep.theta.iter().enumerate() {
                map.insert(format!("theta{}", i + 1), MatrixJson::from_matrix(m));
            }
            for (i, m) in rep.del.iter().enumerate() {
                map.insert(format!("del{}", i + 1), MatrixJson::from_matrix(m));
            }
            write_rep(out, map)
        }
        RepCommand::Clifford { modes, out } => {
            let rep = match build_fermion_rep(*modes) {
                Ok(rep) => rep,
                Err(e) => return usage_error(e),
            };
            let sig = match Signature::euclidean(2 * modes) {
                Ok(sig) => sig,
                Err(e) => return usage_error(e),
            };
            let gens = match build_clifford_generators(&rep, sig) {
                Ok(gens) => gens,
                Err(e) => return usage_error(e),
            };
            let mut map = BTreeMap::new();
            for (i, m) in gens.iter().enumerate() {
                map.insert(format!("e{}", i + 1), MatrixJson::from_matrix(m));
            }
            write_rep(out, map)
        }
    }
}

fn run_qcalc(what: &QcalcCommand) -> ExitCode {
    match what {
        QcalcCommand::Table { k } => {
            let ctx = match QContext::new(*k) {
                Ok(ctx) => ctx,
                Err(e) => return usage_error(e),
            };
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            for n in 0..*k {
                let qn = q_number(n as f64, &ctx);
                // twelve significant digits per component
                if writeln!(lock, "{n} ({:.11e}, {:.11e})", qn.re, qn.im).is_err() {
                    return ExitCode::from(2);
                }
            }
            ExitCode::SUCCESS
        }
    }
}

fn run_spin(what: &SpinCommand) -> ExitCode {
    match what {
        SpinCommand::Rotor { plane, angle, sig } => {
            let (i, j) = *plane;
            let r = match rotor(i, j, *angle, *sig) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let rotation = match rotor_to_rotation(&r, sig.n()) {
                Ok(m) => m,
                Err(e) => return usage_error(e),
            };
            let payload = RotorJson {
                plane: [i, j],
                angle: *angle,
                rotor: jsonio::element_coefficients(r.element()),
                rotation: MatrixJson::from_matrix(&rotation),
            };
            match jsonio::to_json_string(&payload) {
                Ok(json) => {
                    println!("{json}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Check { expr, ctx } => run_check(expr, ctx),
        Command::Suite { file, ctx } => run_suite_file(file, ctx),
        Command::Rep { what } => run_rep(what),
        Command::Qcalc { what } => run_qcalc(what),
        Command::Spin { what } => run_spin(what),
    }
}
