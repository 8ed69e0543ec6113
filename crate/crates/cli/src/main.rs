//! `dhl`: double Hall-Littlewood functions and the derived Hall algebra of
//! the Jordan quiver from the command line.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! output (terms are kept in the canonical bipartition order). Exit code 0
//! means success (and, for checks, a pass); 1 means a verification failed;
//! 2 is a usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use dhl_core::combinat::Bipartition;
use dhl_core::dhall::{generic_multiply, structure_constants, vhat_basis_element, vhat_multiply};
use dhl_core::dlambda::{double_hl_bipartition, AlgebraElement, Basis, Side};
use dhl_core::genfun::{verify_identity, Identity};
use dhl_core::hall;
use dhl_core::pieri::{pieri_horizontal, pieri_schur, pieri_vertical};
use dhl_core::ratfun::{parse_rational, RatFun, Variable};
use dhl_core::schur::{schur_laurent, verify_t0};
use dhl_core::verify::{run_suite, SuiteOptions, SUITE_NAMES};
use dhl_core::Partition;
use num::{BigRational, One};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dhl", version, about = "Double Hall-Littlewood symmetric functions and the derived Hall algebra of the Jordan quiver", long_about = None)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Plus,
    Minus,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Plus => Side::Plus,
            SideArg::Minus => Side::Minus,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PieriKindArg {
    Horizontal,
    Vertical,
    Schur,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HallBasis {
    U,
    Vhat,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a double Hall-Littlewood element V_{lambda,mu} in v-monomials
    Expand(ExpandArgs),
    /// Pieri expansion of V_{rho,nu} times a row/column generator
    Pieri(PieriArgs),
    /// Multiply two basis elements of the derived Hall algebra
    HallMult(HallMultArgs),
    /// Schur-Laurent determinant expansion (optionally check it against
    /// the t=0 specialization)
    Schur(SchurArgs),
    /// Check a generating-function identity coefficientwise
    Genfun(GenfunArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
    /// Dump the table of Hall polynomials as JSON
    DumpHallTable(DumpArgs),
}

#[derive(Args)]
struct ExpandArgs {
    /// Bipartition `lambda|mu`, e.g. `2,1|1` (`-` for an empty side)
    #[arg(long, allow_hyphen_values = true)]
    bip: String,
}

#[derive(Args)]
struct PieriArgs {
    /// Bipartition `rho|nu`
    #[arg(long, allow_hyphen_values = true)]
    bip: String,
    /// Generator degree r >= 1
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=30))]
    r: u32,
    #[arg(long, value_enum)]
    side: SideArg,
    #[arg(long, value_enum)]
    kind: PieriKindArg,
}

#[derive(Args)]
struct HallMultArgs {
    /// Left factor `lambda|mu`
    #[arg(long, allow_hyphen_values = true)]
    m: String,
    /// Right factor `nu|nu~`
    #[arg(long, allow_hyphen_values = true)]
    n: String,
    /// Basis of the factors and the result
    #[arg(long, value_enum, default_value_t = HallBasis::U)]
    basis: HallBasis,
    /// `formal` keeps symbolic coefficients; an integer evaluates them
    #[arg(long, default_value = "formal")]
    q: String,
}

#[derive(Args)]
struct SchurArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, default_value = "-", allow_hyphen_values = true)]
    mu: String,
    /// Also verify the determinant equals V_{lambda,mu} at t=0
    #[arg(long)]
    check_t0: bool,
}

#[derive(Args)]
struct GenfunArgs {
    /// One of: e_h, theta_e, theta_h, transition_theta, transition_E,
    /// transition_H, T_P, theta_p, EP, HP, PE_derivative, euler
    #[arg(long)]
    identity: String,
    /// Total-degree truncation
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(0..=12))]
    deg: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`
    #[arg(long)]
    suite: String,
    /// Size bound override for the suite
    #[arg(long)]
    max_size: Option<u32>,
    /// Degree bound override (generating-function suites)
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=12))]
    max_degree: Option<u32>,
    /// Seed for the randomized suites
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct DumpArgs {
    /// Largest |lambda| to include
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(0..=8))]
    max_size: u32,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn parse_bipartition(s: &str) -> Bipartition {
    match s.parse() {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn parse_partition(s: &str) -> Partition {
    match s.parse() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn print_element(el: &AlgebraElement, format: Format) {
    match format {
        Format::Plain => println!("{el}"),
        Format::Json => println!("{}", el.to_json()),
        Format::Latex => println!("{}", el.to_latex()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Expand(args) => {
            let bip = parse_bipartition(&args.bip);
            let el = double_hl_bipartition(&bip);
            print_element(&el, cli.format);
            ExitCode::SUCCESS
        }
        Command::Pieri(args) => {
            let bip = parse_bipartition(&args.bip);
            let el = match args.kind {
                PieriKindArg::Horizontal => {
                    pieri_horizontal(&bip.plus, &bip.minus, args.r, args.side.into())
                }
                PieriKindArg::Vertical => {
                    pieri_vertical(&bip.plus, &bip.minus, args.r, args.side.into())
                }
                PieriKindArg::Schur => pieri_schur(&bip.plus, &bip.minus, args.r, args.side.into()),
            };
            print_element(&el, cli.format);
            ExitCode::SUCCESS
        }
        Command::HallMult(args) => {
            let m = parse_bipartition(&args.m);
            let n = parse_bipartition(&args.n);
            let q_value = match args.q.as_str() {
                "formal" => None,
                s => match parse_rational(s) {
                    Some(v) => Some(v),
                    None => {
                        eprintln!("error: --q must be `formal` or a rational number");
                        return ExitCode::from(2);
                    }
                },
            };
            let el = match (args.basis, &q_value) {
                (HallBasis::U, None) => {
                    let a = AlgebraElement::term(Basis::HallU, m, RatFun::one(Variable::T));
                    let b = AlgebraElement::term(Basis::HallU, n, RatFun::one(Variable::T));
                    generic_multiply(&a, &b)
                }
                (HallBasis::U, Some(q)) => {
                    let mut out = AlgebraElement::zero(Basis::HallU);
                    for (l, g) in structure_constants(&m, &n).iter() {
                        match g.eval(q) {
                            Ok(v) => out.add_term(l.clone(), RatFun::from_rational(Variable::Q, v)),
                            Err(e) => {
                                eprintln!("error: {e}");
                                return ExitCode::from(2);
                            }
                        }
                    }
                    out
                }
                (HallBasis::Vhat, None) => {
                    vhat_multiply(&vhat_basis_element(&m), &vhat_basis_element(&n))
                }
                (HallBasis::Vhat, Some(q)) => {
                    let product = vhat_multiply(&vhat_basis_element(&m), &vhat_basis_element(&n));
                    let t = BigRational::one() / q;
                    let mut out = AlgebraElement::zero(Basis::HallVhat);
                    for (l, c) in product.terms() {
                        match c.eval(&t) {
                            Ok(v) => out.add_term(l.clone(), RatFun::from_rational(Variable::T, v)),
                            Err(e) => {
                                eprintln!("error: {e}");
                                return ExitCode::from(2);
                            }
                        }
                    }
                    out
                }
            };
            print_element(&el, cli.format);
            ExitCode::SUCCESS
        }
        Command::Schur(args) => {
            let la = parse_partition(&args.lambda);
            let mu = parse_partition(&args.mu);
            let el = schur_laurent(&la, &mu);
            print_element(&el, cli.format);
            if args.check_t0 {
                if verify_t0(&la, &mu) {
                    println!("t=0 check: pass");
                } else {
                    println!("t=0 check: FAIL");
                    return ExitCode::from(1);
                }
            }
            ExitCode::SUCCESS
        }
        Command::Genfun(args) => {
            let identity: Identity = match args.identity.parse() {
                Ok(id) => id,
                Err(e) => {
                    eprintln!(
                        "error: {e}; known identities: {}",
                        Identity::ALL.map(|i| i.name()).join(", ")
                    );
                    return ExitCode::from(2);
                }
            };
            let report = verify_identity(identity, args.deg);
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                _ => {
                    print!(
                        "identity {} at total degree {}: {}",
                        report.identity.name(),
                        report.degree,
                        if report.pass() { "pass" } else { "FAIL" }
                    );
                    match &report.first_mismatch {
                        None => println!(),
                        Some(m) => {
                            println!(" (first mismatch at y^{} z^{})", m.i, m.j);
                            println!("  lhs: {}", m.lhs);
                            println!("  rhs: {}", m.rhs);
                        }
                    }
                }
            }
            if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Verify(args) => {
            let opts = SuiteOptions {
                max_size: args.max_size,
                max_degree: args.max_degree,
                seed: args.seed,
            };
            let Some(report) = run_suite(&args.suite, &opts) else {
                eprintln!(
                    "error: unknown suite `{}`; known suites: all, {}",
                    args.suite,
                    SUITE_NAMES.join(", ")
                );
                return ExitCode::from(2);
            };
            match cli.format {
                Format::Json => {
                    let j = serde_json::json!({
                        "suite": report.suite,
                        "checks": report.checks,
                        "status": if report.passed() { "pass" } else { "fail" },
                        "failures": report.failures,
                    });
                    println!("{j}");
                }
                _ => {
                    for f in &report.failures {
                        println!("FAIL {f}");
                    }
                    println!(
                        "suite {}: {} ({} checks)",
                        report.suite,
                        if report.passed() { "pass" } else { "FAIL" },
                        report.checks
                    );
                }
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::DumpHallTable(args) => {
            let json = hall::table().dump_json(args.max_size);
            let text = serde_json::to_string_pretty(&json).expect("serializable");
            match args.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text + "\n") {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => println!("{text}"),
            }
            ExitCode::SUCCESS
        }
    }
}
