//! Command-line surface: characteristic polynomials of arrangements, the
//! counting-oracle verifications, and Weyl alcove Ehrhart data, with
//! machine-readable JSON output.
//!
//! Exit codes: 0 success, 1 verification counterexample or comparison
//! mismatch, 2 usage error, 3 enumeration guardrail.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use chi_core::arith::{to_basis, FactorialBasis, IntPolynomial};
use chi_core::arrangement::{ArrangementSpec, NamedParams};
use chi_core::counting::{count_cube_limited, count_ffield_limited, CubeSpec, DEFAULT_POINT_LIMIT};
use chi_core::expansions::{check_divisibility, keq_charpoly_expansion};
use chi_core::lattice::{build_poset, char_poly};
use chi_core::weyl::{coincidence_even_d, root_system, RootSystem, WeylType};
use chi_core::{Arrangement, Error};

#[derive(Parser)]
#[command(
    name = "chi",
    about = "Exact characteristic polynomials of subspace arrangements and Ehrhart data of Weyl alcoves",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the characteristic polynomial of an arrangement.
    Charpoly(CharpolyArgs),
    /// Run one of the verification identities over a parameter grid.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Ehrhart quasi-polynomial of the fundamental alcove of a Weyl type.
    Ehrhart(EhrhartArgs),
}

#[derive(Args)]
struct ArrangementArgs {
    /// Named family: A, B, D, Ank, Dnk, or Bnkh.
    #[arg(long)]
    named: Option<String>,
    /// Ambient dimension n for a named family.
    #[arg(long)]
    n: Option<usize>,
    /// Block size k for Ank/Dnk/Bnkh.
    #[arg(long)]
    k: Option<usize>,
    /// Zero-set size h for Bnkh.
    #[arg(long)]
    h: Option<usize>,
    /// JSON file describing the arrangement instead of --named.
    #[arg(long, conflicts_with_all = ["named", "n", "k", "h"])]
    file: Option<PathBuf>,
}

impl ArrangementArgs {
    fn spec(&self) -> Result<ArrangementSpec, CliError> {
        match (&self.named, &self.file) {
            (Some(name), None) => {
                let n = self
                    .n
                    .ok_or_else(|| CliError::usage("--named requires --n"))?;
                Ok(ArrangementSpec {
                    ambient_dim: None,
                    named: Some(name.clone()),
                    params: Some(NamedParams {
                        n,
                        k: self.k,
                        h: self.h,
                    }),
                    subspaces: None,
                })
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
                ArrangementSpec::from_json(&text).map_err(CliError::from)
            }
            _ => Err(CliError::usage("give exactly one of --named or --file")),
        }
    }

    fn build(&self) -> Result<Arrangement, CliError> {
        Ok(self.spec()?.build()?)
    }
}

#[derive(Args)]
struct CharpolyArgs {
    #[command(flatten)]
    arrangement: ArrangementArgs,
    /// Also print the falling and shifted-double-falling basis expansions.
    #[arg(long)]
    basis: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write the intersection poset (elements, covers, Möbius) to a file.
    #[arg(long)]
    poset: Option<PathBuf>,
    /// Compare against a previously written JSON output; exit 1 on mismatch.
    #[arg(long)]
    check_against: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Cube counts against the characteristic polynomial at odd arguments.
    Cube(CubeArgs),
    /// Finite-field counts against the characteristic polynomial at primes.
    Ffield(FfieldArgs),
    /// Alcove quasi-polynomial identity for a Weyl type, symbolically.
    Weyl(WeylArgs),
    /// Even-argument identity relating type-B alcove counts to type D.
    Coincidence(CoincidenceArgs),
    /// Bounded-Stirling expansion of k-equal characteristic polynomials.
    Seq(SeqArgs),
    /// Falling-factorial divisibility of k-equal characteristic polynomials.
    Div(SeqArgs),
}

#[derive(Args)]
struct CubeArgs {
    #[command(flatten)]
    arrangement: ArrangementArgs,
    /// Largest half-side; all s = 0..=S are checked.
    #[arg(long, default_value_t = 3)]
    s: u64,
    #[arg(long)]
    json: bool,
    /// Override the candidate-point guardrail.
    #[arg(long, default_value_t = DEFAULT_POINT_LIMIT)]
    max_points: u128,
}

#[derive(Args)]
struct FfieldArgs {
    #[command(flatten)]
    arrangement: ArrangementArgs,
    /// Primes to check (repeatable); defaults to 5, 7, 11, 13.
    #[arg(long = "p")]
    primes: Vec<u64>,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = DEFAULT_POINT_LIMIT)]
    max_points: u128,
}

#[derive(Args)]
struct WeylArgs {
    /// Root-system type: A, B, C, D, E6, E7, E8, F4, G2.
    #[arg(long = "type")]
    weyl_type: String,
    /// Rank for the infinite families.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 600)]
    tmax: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CoincidenceArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 100)]
    tmax: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SeqArgs {
    #[arg(long)]
    n: usize,
    /// Single k; all 2..=n when omitted.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EhrhartArgs {
    #[arg(long = "type")]
    weyl_type: String,
    #[arg(long)]
    n: Option<usize>,
    /// Evaluate the quasi-polynomial at a single argument.
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    json: bool,
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            message: msg.into(),
            code: 2,
        }
    }

    fn mismatch(msg: impl Into<String>) -> Self {
        Self {
            message: msg.into(),
            code: 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::ScaleError { .. } | Error::RankTooLarge { .. } => 3,
            Error::VerificationFailure { .. } => 1,
            _ => 2,
        };
        Self {
            message: e.to_string(),
            code,
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct CharpolyOutput {
    degree: usize,
    /// Coefficients by ascending degree, as decimal strings.
    coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<BasisOutput>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct BasisOutput {
    falling: Vec<String>,
    shifted_double_falling: Vec<String>,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    checks: Vec<CheckEntry>,
}

#[derive(Debug, Serialize)]
struct CheckEntry {
    instance: String,
    lhs: String,
    rhs: String,
    ok: bool,
}

fn poly_output(chi: &IntPolynomial, with_basis: bool) -> CharpolyOutput {
    let basis = with_basis.then(|| BasisOutput {
        falling: to_basis(chi, FactorialBasis::Falling)
            .iter()
            .map(ToString::to_string)
            .collect(),
        shifted_double_falling: to_basis(chi, FactorialBasis::ShiftedDoubleFalling)
            .iter()
            .map(ToString::to_string)
            .collect(),
    });
    CharpolyOutput {
        degree: chi.degree().unwrap_or(0),
        coeffs: chi.coeffs().iter().map(ToString::to_string).collect(),
        basis,
    }
}

fn cmd_charpoly(args: &CharpolyArgs) -> Result<(), CliError> {
    let arrangement = args.arrangement.build()?;
    let poset = build_poset(&arrangement)?;
    let chi = poset.characteristic_polynomial();
    let output = poly_output(&chi, args.basis);

    if let Some(path) = &args.poset {
        let text = serde_json::to_string_pretty(&poset.to_json()).expect("serializable");
        fs::write(path, text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    }

    if let Some(path) = &args.check_against {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
        let reference: CharpolyOutput = serde_json::from_str(&text)
            .map_err(|e| CliError::usage(format!("bad reference JSON: {e}")))?;
        if reference.degree != output.degree || reference.coeffs != output.coeffs {
            return Err(CliError::mismatch(format!(
                "computed {} but reference file has degree {} with coeffs {:?}",
                chi, reference.degree, reference.coeffs
            )));
        }
        println!("check-against: match");
        return Ok(());
    }

    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&output).expect("serializable")
        );
    } else {
        println!("{chi}");
        if let Some(basis) = &output.basis {
            println!("falling basis: {:?}", basis.falling);
            println!(
                "shifted double falling basis: {:?}",
                basis.shifted_double_falling
            );
        }
    }
    Ok(())
}

fn finish_report(report: VerifyReport, json: bool) -> Result<(), CliError> {
    let all_ok = report.checks.iter().all(|c| c.ok);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        for c in &report.checks {
            let status = if c.ok { "OK" } else { "MISMATCH" };
            println!("{}: lhs = {}, rhs = {}, {status}", c.instance, c.lhs, c.rhs);
        }
    }
    if all_ok {
        Ok(())
    } else {
        let first = report.checks.iter().find(|c| !c.ok).expect("some failure");
        Err(CliError::mismatch(format!(
            "counterexample at {}: {} != {}",
            first.instance, first.lhs, first.rhs
        )))
    }
}

fn cmd_verify_cube(args: &CubeArgs) -> Result<(), CliError> {
    let arrangement = args.arrangement.build()?;
    let chi = char_poly(&arrangement)?;
    let label = arrangement.name().unwrap_or("custom").to_string();
    let mut checks = Vec::new();
    for s in 0..=args.s {
        let spec = CubeSpec::new(s);
        let count = count_cube_limited(&arrangement, &spec, args.max_points)?;
        let value = chi.eval_i64(spec.t() as i64);
        checks.push(CheckEntry {
            instance: format!("{label}, s = {s}, t = {}", spec.t()),
            lhs: count.to_string(),
            rhs: value.to_string(),
            ok: count == value,
        });
    }
    finish_report(VerifyReport { checks }, args.json)
}

fn cmd_verify_ffield(args: &FfieldArgs) -> Result<(), CliError> {
    let arrangement = args.arrangement.build()?;
    let chi = char_poly(&arrangement)?;
    let label = arrangement.name().unwrap_or("custom").to_string();
    let primes = if args.primes.is_empty() {
        vec![5, 7, 11, 13]
    } else {
        args.primes.clone()
    };
    let mut checks = Vec::new();
    for p in primes {
        let count = count_ffield_limited(&arrangement, p, args.max_points)?;
        let value = chi.eval_i64(p as i64);
        checks.push(CheckEntry {
            instance: format!("{label}, p = {p}"),
            lhs: count.to_string(),
            rhs: value.to_string(),
            ok: count == value,
        });
    }
    finish_report(VerifyReport { checks }, args.json)
}

fn parse_system(type_name: &str, rank: Option<usize>) -> Result<RootSystem, CliError> {
    let ty = WeylType::parse(type_name)
        .ok_or_else(|| CliError::usage(format!("unknown root-system type {type_name}")))?;
    let rank = match (ty.fixed_rank(), rank) {
        (Some(fixed), None) => fixed,
        (Some(fixed), Some(given)) if fixed == given => fixed,
        (Some(fixed), Some(given)) => {
            return Err(CliError::usage(format!(
                "{type_name} has rank {fixed}, not {given}"
            )))
        }
        (None, Some(given)) => given,
        (None, None) => return Err(CliError::usage(format!("{type_name} needs a rank via --n"))),
    };
    Ok(root_system(ty, rank)?)
}

fn cmd_verify_weyl(args: &WeylArgs) -> Result<(), CliError> {
    let system = parse_system(&args.weyl_type, args.n)?;
    match system.verify_theorem(args.tmax) {
        Ok(report) => {
            let checks = report
                .classes
                .iter()
                .map(|c| CheckEntry {
                    instance: format!(
                        "{}, t = {} (mod {})",
                        report.label, c.residue, report.period
                    ),
                    lhs: format!("n! (prod c_i) psi(t) for {} arguments", c.count),
                    rhs: "prod (t - e_i)".to_string(),
                    ok: true,
                })
                .collect();
            finish_report(VerifyReport { checks }, args.json)
        }
        Err(Error::VerificationFailure { instance, lhs, rhs }) => finish_report(
            VerifyReport {
                checks: vec![CheckEntry {
                    instance,
                    lhs,
                    rhs,
                    ok: false,
                }],
            },
            args.json,
        ),
        Err(e) => Err(e.into()),
    }
}

fn cmd_verify_coincidence(args: &CoincidenceArgs) -> Result<(), CliError> {
    let mut checks = Vec::new();
    for t in (2..=args.tmax).step_by(2) {
        let ok = coincidence_even_d(args.n, t)?;
        checks.push(CheckEntry {
            instance: format!("n = {}, t = {t}", args.n),
            lhs: format!("2^(n-1) n! psi_B({t})"),
            rhs: format!("chi_D({})", t - 1),
            ok,
        });
    }
    finish_report(VerifyReport { checks }, args.json)
}

fn seq_pairs(args: &SeqArgs) -> Result<Vec<(usize, usize)>, CliError> {
    if args.n < 2 {
        return Err(CliError::usage("need --n at least 2"));
    }
    match args.k {
        Some(k) => Ok(vec![(args.n, k)]),
        None => Ok((2..=args.n).map(|k| (args.n, k)).collect()),
    }
}

fn cmd_verify_seq(args: &SeqArgs) -> Result<(), CliError> {
    let mut checks = Vec::new();
    for (n, k) in seq_pairs(args)? {
        let expansion = keq_charpoly_expansion(n, k)?;
        let lattice = char_poly(&chi_core::arrangement::build_k_equal(n, k)?)?;
        checks.push(CheckEntry {
            instance: format!("n = {n}, k = {k}"),
            lhs: expansion.to_string(),
            rhs: lattice.to_string(),
            ok: expansion == lattice,
        });
    }
    finish_report(VerifyReport { checks }, args.json)
}

fn cmd_verify_div(args: &SeqArgs) -> Result<(), CliError> {
    let mut checks = Vec::new();
    for (n, k) in seq_pairs(args)? {
        let chi = char_poly(&chi_core::arrangement::build_k_equal(n, k)?)?;
        let floor = n.div_ceil(k - 1);
        let divisor = chi_core::arith::falling_factorial(floor);
        let ok = check_divisibility(&chi, &divisor);
        checks.push(CheckEntry {
            instance: format!("n = {n}, k = {k}"),
            lhs: format!("({divisor}) | ({chi})"),
            rhs: "zero remainder".to_string(),
            ok,
        });
    }
    finish_report(VerifyReport { checks }, args.json)
}

#[derive(Debug, Serialize)]
struct EhrhartOutput {
    label: String,
    period: usize,
    degree: usize,
    gamma: String,
    parts: Vec<EhrhartPart>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<EhrhartValue>,
}

#[derive(Debug, Serialize)]
struct EhrhartPart {
    residue: usize,
    /// Rational coefficients by ascending degree.
    coeffs: Vec<String>,
    display: String,
}

#[derive(Debug, Serialize)]
struct EhrhartValue {
    t: u64,
    psi: String,
}

fn cmd_ehrhart(args: &EhrhartArgs) -> Result<(), CliError> {
    if args.t == Some(0) {
        return Err(CliError::usage("quasi-polynomial arguments start at 1"));
    }
    let system = parse_system(&args.weyl_type, args.n)?;
    let psi = system.ehrhart_psi()?;
    let value = args.t.map(|t| EhrhartValue {
        t,
        psi: psi.eval_integer(t).to_string(),
    });
    let output = EhrhartOutput {
        label: system.label(),
        period: psi.period(),
        degree: psi.degree(),
        gamma: system.gamma_gf().to_string(),
        parts: psi
            .parts()
            .iter()
            .enumerate()
            .map(|(residue, part)| EhrhartPart {
                residue,
                coeffs: part.coeffs().iter().map(ToString::to_string).collect(),
                display: part.to_string(),
            })
            .collect(),
        value,
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&output).expect("serializable")
        );
    } else {
        println!(
            "{}: gamma(z) = {}, period {}, degree {}",
            output.label, output.gamma, output.period, output.degree
        );
        for part in &output.parts {
            println!(
                "t = {} (mod {}): {}",
                part.residue, output.period, part.display
            );
        }
        if let Some(v) = &output.value {
            println!("psi({}) = {}", v.t, v.psi);
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Charpoly(args) => cmd_charpoly(args),
        Command::Verify(v) => match v {
            VerifyCommand::Cube(args) => cmd_verify_cube(args),
            VerifyCommand::Ffield(args) => cmd_verify_ffield(args),
            VerifyCommand::Weyl(args) => cmd_verify_weyl(args),
            VerifyCommand::Coincidence(args) => cmd_verify_coincidence(args),
            VerifyCommand::Seq(args) => cmd_verify_seq(args),
            VerifyCommand::Div(args) => cmd_verify_div(args),
        },
        Command::Ehrhart(args) => cmd_ehrhart(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
