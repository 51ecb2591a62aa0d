//! Command line surface for the f1geom library.
//!
//! Every command prints a stable machine-readable report as `key: value`
//! lines (polynomials as coefficient lists, low degree first; zeta functions
//! as `[index, multiplicity]` factor lists) followed by a human-readable
//! summary on `#`-prefixed lines.
//!
//! Exit codes: 0 on success, 1 on flag misuse, 2 on validation or math
//! errors (a formula/enumeration mismatch prints both values).

use std::fmt::{self, Display};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use f1geom::document::{parse_fan, parse_phi};
use f1geom::fan::Fan;
use f1geom::hermitian::{count_points_formula, count_poly, zeta_rank1, PhiSystem};
use f1geom::imj::{w_bernoulli, w_gcd_stable};
use f1geom::oracle::{compare_counts, quadric_count_fq, toric_count_fq, PrimeField};
use f1geom::points::{glued_points, CyclotomicIndex};
use f1geom::quadric::{quadric_count_poly, quadric_f1_count};
use f1geom::zeta::{fan_count_poly, zeta, CountPolynomial, ZetaFunction};

#[derive(Parser)]
#[command(
    name = "f1geom",
    version,
    about = "Point counts and zeta functions of toric and related varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect or validate a fan document
    Fan {
        #[command(subcommand)]
        action: FanAction,
    },
    /// Count points of a variety
    Count {
        #[command(subcommand)]
        target: CountTarget,
    },
    /// Print a zeta function as its list of linear factors
    Zeta {
        #[command(subcommand)]
        target: ZetaTarget,
    },
    /// Cross-check closed forms against brute-force enumeration
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
    /// Image-of-J order w_i by two independent methods
    Imj {
        /// Even degree parameter i >= 2
        #[arg(long)]
        i: u32,
    },
}

#[derive(Subcommand)]
enum FanAction {
    /// Summarize a fan: rays, cones, completeness, counting polynomial
    Info { file: PathBuf },
    /// Check the document and the fan axioms, reporting the first violation
    Validate { file: PathBuf },
}

#[derive(Subcommand)]
enum CountTarget {
    /// Count points of the toric variety of a fan document
    Fan {
        file: PathBuf,
        /// Enumerate points over the prime field F_p
        #[arg(long, value_name = "P")]
        fq: Option<u64>,
        /// Enumerate points with coefficients in the degree-n cyclotomic extension
        #[arg(long, value_name = "N")]
        f1n: Option<u32>,
        /// Print the counting polynomial N(x)
        #[arg(long)]
        poly: bool,
    },
    /// Count points of the four-dimensional quadric xy - zt + uv = 0
    Quadric {
        #[arg(long, value_name = "P")]
        fq: Option<u64>,
        #[arg(long, value_name = "N")]
        f1n: Option<u32>,
        #[arg(long)]
        poly: bool,
    },
    /// Count points of the variety attached to a hermitian vector system
    Lattice {
        /// Vector system document {"rank": m, "vectors": [[..], ..]}
        #[arg(long, value_name = "FILE")]
        phi: PathBuf,
        #[arg(long, value_name = "N")]
        f1n: Option<u32>,
        #[arg(long)]
        poly: bool,
    },
}

#[derive(Subcommand)]
enum ZetaTarget {
    /// Zeta function of the toric variety of a fan document
    Fan { file: PathBuf },
    /// Zeta function of the four-dimensional quadric
    Quadric,
    /// Zeta function of the rank-1 hermitian lattice with t ball vectors
    Rank1 {
        #[arg(long)]
        t: u32,
    },
}

#[derive(Subcommand)]
enum OracleAction {
    /// Compare a closed-form count against enumeration at several primes
    Compare {
        #[command(subcommand)]
        target: CompareTarget,
    },
}

#[derive(Subcommand)]
enum CompareTarget {
    /// Check a fan's counting polynomial against F_p enumeration
    Fan {
        file: PathBuf,
        /// Comma-separated primes to test
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
        primes: Vec<u64>,
    },
}

enum CliError {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Math(f1geom::Error),
}

impl Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(path, e) => write!(f, "cannot read {}: {e}", path.display()),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl From<f1geom::Error> for CliError {
    fn from(e: f1geom::Error) -> Self {
        CliError::Math(e)
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(1),
            _ => ExitCode::from(2),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            // clap renders help to stdout and errors to stderr on its own.
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Fan { action } => match action {
            FanAction::Info { file } => fan_info(&file),
            FanAction::Validate { file } => fan_validate(&file),
        },
        Command::Count { target } => match target {
            CountTarget::Fan {
                file,
                fq,
                f1n,
                poly,
            } => {
                let fan = load_fan(&file)?;
                match count_mode(fq, f1n, poly)? {
                    CountMode::Fq(p) => {
                        let field = PrimeField::new(p)?;
                        let count = toric_count_fq(&fan, field)?;
                        println!("mode: fq");
                        println!("p: {p}");
                        println!("count: {count}");
                        println!("# {count} points over the field with {p} elements");
                    }
                    CountMode::F1n(n) => {
                        let points = glued_points(&fan, cyc(n)?)?;
                        println!("mode: f1n");
                        println!("n: {n}");
                        println!("count: {}", points.len());
                        println!(
                            "# {} points with degree-{n} cyclotomic coefficients",
                            points.len()
                        );
                    }
                    CountMode::Poly => print_poly(&fan_count_poly(&fan)),
                }
                Ok(())
            }
            CountTarget::Quadric { fq, f1n, poly } => {
                match count_mode(fq, f1n, poly)? {
                    CountMode::Fq(p) => {
                        let count = quadric_count_fq(PrimeField::new(p)?)?;
                        println!("mode: fq");
                        println!("p: {p}");
                        println!("count: {count}");
                        println!("# {count} points counted by direct enumeration over F_{p}");
                    }
                    CountMode::F1n(n) => {
                        let count = quadric_f1_count(cyc(n)?);
                        println!("mode: f1n");
                        println!("n: {n}");
                        println!("count: {count}");
                        println!("# {count} points with degree-{n} cyclotomic coefficients");
                    }
                    CountMode::Poly => print_poly(&quadric_count_poly()),
                }
                Ok(())
            }
            CountTarget::Lattice { phi, f1n, poly } => {
                let system = load_phi(&phi)?;
                match (f1n, poly) {
                    (Some(n), false) => {
                        let count = count_points_formula(&system, cyc(n)?);
                        println!("mode: f1n");
                        println!("n: {n}");
                        println!("count: {count}");
                        println!("# {count} points with degree-{n} cyclotomic coefficients");
                    }
                    (None, true) => {
                        let p = count_poly(&system)?;
                        let coeffs: Vec<String> =
                            p.coeffs().iter().map(|c| c.to_string()).collect();
                        println!("mode: poly");
                        println!("coeffs: [{}]", coeffs.join(", "));
                        println!("integral: {}", p.is_integral());
                        println!("# N(x) = {p}");
                    }
                    _ => {
                        return Err(CliError::Usage(
                            "exactly one of --f1n, --poly is required".into(),
                        ))
                    }
                }
                Ok(())
            }
        },
        Command::Zeta { target } => {
            let z = match target {
                ZetaTarget::Fan { file } => zeta(&fan_count_poly(&load_fan(&file)?)),
                ZetaTarget::Quadric => zeta(&quadric_count_poly()),
                ZetaTarget::Rank1 { t } => zeta_rank1(t)?,
            };
            print_zeta(&z);
            Ok(())
        }
        Command::Oracle { action } => match action {
            OracleAction::Compare { target } => match target {
                CompareTarget::Fan { file, primes } => {
                    let fan = load_fan(&file)?;
                    let poly = fan_count_poly(&fan);
                    compare_counts(&poly, &fan, &primes)?;
                    let shown: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
                    println!("primes: [{}]", shown.join(", "));
                    println!("match: true");
                    println!("# counting polynomial agrees with enumeration at every tested prime");
                    Ok(())
                }
            },
        },
        Command::Imj { i } => {
            let (gcd, window) = w_gcd_stable(i, 200)?;
            let bern = w_bernoulli(i)?;
            println!("i: {i}");
            println!("w_gcd: {gcd}");
            println!("w_bernoulli: {bern}");
            println!("agree: {}", gcd == bern);
            if gcd != bern {
                println!(
                    "# stabilized gcd (window j = {window}) and Bernoulli denominator disagree"
                );
                return Err(CliError::Math(f1geom::Error::InconsistentSamples));
            }
            println!("# w_{i} = {gcd}: gcd stabilized at window j = {window}, Bernoulli denominator agrees");
            Ok(())
        }
    }
}

enum CountMode {
    Fq(u64),
    F1n(u32),
    Poly,
}

fn count_mode(fq: Option<u64>, f1n: Option<u32>, poly: bool) -> Result<CountMode, CliError> {
    match (fq, f1n, poly) {
        (Some(p), None, false) => Ok(CountMode::Fq(p)),
        (None, Some(n), false) => Ok(CountMode::F1n(n)),
        (None, None, true) => Ok(CountMode::Poly),
        _ => Err(CliError::Usage(
            "exactly one of --fq, --f1n, --poly is required".into(),
        )),
    }
}

fn cyc(n: u32) -> Result<CyclotomicIndex, CliError> {
    Ok(CyclotomicIndex::new(n)?)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load_fan(path: &Path) -> Result<Fan, CliError> {
    Ok(parse_fan(&read_file(path)?)?)
}

fn load_phi(path: &Path) -> Result<PhiSystem, CliError> {
    Ok(parse_phi(&read_file(path)?)?)
}

fn print_poly(p: &CountPolynomial) {
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    println!("mode: poly");
    println!("coeffs: [{}]", coeffs.join(", "));
    println!("# N(x) = {p}");
}

fn print_zeta(z: &ZetaFunction) {
    let factors: Vec<String> = z
        .factors()
        .iter()
        .map(|(i, a)| format!("[{i}, {a}]"))
        .collect();
    println!("factors: [{}]", factors.join(", "));
    println!("# zeta(s) = {z}");
}

fn fan_info(file: &Path) -> Result<(), CliError> {
    let fan = load_fan(file)?;
    let poly = fan_count_poly(&fan);
    let rays: Vec<String> = fan
        .rays()
        .iter()
        .map(|r| {
            let coords: Vec<String> = r.coords().iter().map(|c| c.to_string()).collect();
            format!("[{}]", coords.join(", "))
        })
        .collect();
    let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    println!("rank: {}", fan.rank());
    println!("rays: [{}]", rays.join(", "));
    println!("cones: {}", fan.cones().len());
    println!("maximal: {}", fan.maximal_cones().len());
    println!("complete: {}", fan.is_complete());
    println!("coeffs: [{}]", coeffs.join(", "));
    println!("euler: {}", f1geom::zeta::euler_char(&poly));
    println!(
        "# rank-{} fan, {} cones ({} maximal), N(x) = {}",
        fan.rank(),
        fan.cones().len(),
        fan.maximal_cones().len(),
        poly
    );
    Ok(())
}

fn fan_validate(file: &Path) -> Result<(), CliError> {
    let fan = load_fan(file)?;
    println!("valid: true");
    println!(
        "# document describes a regular fan: {} cones, {} maximal",
        fan.cones().len(),
        fan.maximal_cones().len()
    );
    Ok(())
}
