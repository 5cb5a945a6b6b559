use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use genalg::algebra::{is_generating, Multialgebra};
use genalg::exactmath::{Field, Scalar};
use genalg::format::{
    parse_algebra, parse_field_tuple, parse_integral_tuple, verify_certificate, AlgebraFile, CertificateFile,
    LoadedAlgebra, ReplayLimits,
};
use genalg::forster::{bad_primes, forster_lift, verify_global_generation, BadPrimes, IntegralAlgebra, LiftOptions};
use genalg::search::{min_generators, SearchBudget};
use genalg::zoo;
use genalg::Error;

/// Exit codes shared by every command.
const POSITIVE: u8 = 0;
const NEGATIVE: u8 = 1;
const INCONCLUSIVE: u8 = 2;
const INVALID: u8 = 3;

#[derive(Parser)]
#[command(
    name = "genalg",
    version,
    about = "Generators of finite algebras over fields and over Z"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Largest candidate space searched exhaustively
    #[arg(long, default_value_t = 1_000_000)]
    max_exhaustive: u64,
    /// Random trials when the space is too large
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Random coordinates are drawn from [-height, height]
    #[arg(long, default_value_t = 10)]
    height: u64,
    /// Trial-division bound for factoring
    #[arg(long, default_value_t = genalg::forster::DEFAULT_FACTOR_BOUND)]
    factor_bound: u64,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_exhaustive: self.max_exhaustive,
            random_trials: self.trials,
            seed: self.seed,
            coeff_height: self.height,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Zero,
    Matrix,
    SplitEtale,
    FieldExtension,
    CayleyDickson,
    Quaternion,
    SplitQuaternion,
    SplitOctonion,
    Albert,
}

#[derive(Subcommand)]
enum Command {
    /// Print an algebra file for a standard family
    Zoo {
        family: Family,
        /// F<p>, Q, or Z for integer structure constants
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Comma-separated Cayley-Dickson parameters
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mus: Vec<String>,
        /// Quaternion parameters
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        b: String,
        /// Monic polynomial coefficients, constant term first
        #[arg(long, value_delimiter = ',')]
        poly: Vec<u64>,
        /// Invariant factors of a zero module over Z (0 for a free summand)
        #[arg(long, value_delimiter = ',')]
        factors: Vec<String>,
    },
    /// Decide whether a tuple generates
    Check {
        algebra: PathBuf,
        /// JSON list of coordinate vectors
        #[arg(long)]
        tuple: String,
        #[arg(long)]
        unital: bool,
        #[arg(long, default_value_t = genalg::forster::DEFAULT_FACTOR_BOUND)]
        factor_bound: u64,
    },
    /// Minimal number of generators over a finite field
    Mingen {
        algebra: PathBuf,
        #[arg(long)]
        unital: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Primes at which a tuple fails to generate the fiber
    BadPrimes {
        algebra: PathBuf,
        #[arg(long)]
        tuple: String,
        #[arg(long)]
        unital: bool,
        #[arg(long, default_value_t = genalg::forster::DEFAULT_FACTOR_BOUND)]
        factor_bound: u64,
    },
    /// Lift n local generators to n + 1 global ones
    ForsterLift {
        algebra: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        unital: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Replay a certificate against an algebra
    VerifyCert {
        algebra: PathBuf,
        certificate: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        max_exhaustive: u64,
        #[arg(long, default_value_t = genalg::forster::DEFAULT_FACTOR_BOUND)]
        factor_bound: u64,
    },
}

/// Writes to standard output, ignoring a closed pipe.
fn emit(text: impl std::fmt::Display) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CounterexamplePrime(_) | Error::InvariantViolation(_) => NEGATIVE,
        Error::BudgetExhausted(_) | Error::IncompleteFactorization { .. } => INCONCLUSIVE,
        _ => INVALID,
    }
}

fn load(path: &PathBuf) -> Result<LoadedAlgebra, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_algebra(&text)
}

fn field_algebra(a: LoadedAlgebra) -> Result<Multialgebra, Error> {
    match a {
        LoadedAlgebra::Field(a) => Ok(a),
        LoadedAlgebra::Integral(..) => Err(Error::Input("this command needs an algebra over a field".into())),
    }
}

fn zoo_file(
    family: Family,
    field: &str,
    n: usize,
    mus: &[String],
    (a, b): (&str, &str),
    poly: &[u64],
    factors: &[String],
) -> Result<AlgebraFile, Error> {
    if field == "Z" {
        if let Family::Zero = family {
            let factors = if factors.is_empty() {
                vec![BigInt::from(0); n]
            } else {
                factors
                    .iter()
                    .map(|s| s.trim().parse().map_err(|_| Error::Input(format!("bad factor {s:?}"))))
                    .collect::<Result<_, _>>()?
            };
            return Ok(AlgebraFile::from_integral(&IntegralAlgebra::zero_module(factors)?));
        }
        let rational = zoo_algebra(family, Field::Rational, n, mus, (a, b), poly)?;
        return Ok(AlgebraFile::from_integral(&IntegralAlgebra::from_rational(&rational)?));
    }
    if !factors.is_empty() {
        return Err(Error::Input("--factors applies to zero modules over Z".into()));
    }
    let field: Field = field.parse()?;
    Ok(AlgebraFile::from_multialgebra(&zoo_algebra(
        family,
        field,
        n,
        mus,
        (a, b),
        poly,
    )?))
}

fn zoo_algebra(
    family: Family,
    field: Field,
    n: usize,
    mus: &[String],
    (a, b): (&str, &str),
    poly: &[u64],
) -> Result<Multialgebra, Error> {
    let scalar = |s: &str| -> Result<Scalar, Error> { field.parse_scalar(s) };
    match family {
        Family::Zero => zoo::zero_algebra(field, n),
        Family::Matrix => zoo::matrix_algebra(field, n),
        Family::SplitEtale => zoo::split_etale(field, n),
        Family::FieldExtension => match field {
            Field::Prime(p) => zoo::field_extension_etale(p, poly),
            Field::Rational => Err(Error::Input("field-extension needs a prime field".into())),
        },
        Family::CayleyDickson => {
            let mut alg = zoo::split_etale(field, 1)?;
            for mu in mus {
                alg = zoo::cayley_dickson(&alg, &scalar(mu)?)?;
            }
            Ok(alg)
        }
        Family::Quaternion => zoo::quaternion_algebra(field, &scalar(a)?, &scalar(b)?),
        Family::SplitQuaternion => zoo::split_quaternion(field),
        Family::SplitOctonion => zoo::split_octonion(field),
        Family::Albert => zoo::albert(field),
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Zoo {
            family,
            field,
            n,
            mus,
            a,
            b,
            poly,
            factors,
        } => {
            let file = zoo_file(family, &field, n, &mus, (&a, &b), &poly, &factors)?;
            let loaded = file.load()?;
            eprintln!("{} algebra, hash {}", file.base, loaded.hash());
            emit(file.to_json());
            Ok(POSITIVE)
        }
        Command::Check {
            algebra,
            tuple,
            unital,
            factor_bound,
        } => match load(&algebra)? {
            LoadedAlgebra::Field(alg) => {
                let t = parse_field_tuple(&alg, &tuple)?;
                let cert = is_generating(&alg, &t, unital)?;
                eprintln!("closure dimension {} of {}", cert.closure_dim, cert.algebra_dim);
                emit(CertificateFile::generation(&alg, &cert, None).to_json());
                Ok(if cert.generates() { POSITIVE } else { NEGATIVE })
            }
            LoadedAlgebra::Integral(alg, raw) => {
                let t = parse_integral_tuple(&alg, raw.as_ref(), &tuple)?;
                let report = verify_global_generation(&alg, &t, unital, factor_bound)?;
                eprintln!("generates: {}", report.generates);
                emit(serde_json::to_string_pretty(&report)?);
                Ok(if report.generates { POSITIVE } else { NEGATIVE })
            }
        },
        Command::Mingen {
            algebra,
            unital,
            budget,
        } => {
            let alg = field_algebra(load(&algebra)?)?;
            let report = min_generators(&alg, &budget.budget(), unital)?;
            match report.n_upper {
                Some(n) if report.lower_bound_certified => eprintln!("minimum {n} (certified)"),
                Some(n) => eprintln!("at most {n}; smaller sizes not exhausted"),
                None => eprintln!("no generating tuple found within budget"),
            }
            emit(CertificateFile::mingen(&alg, &report, budget.height).to_json());
            Ok(if report.n_upper.is_some() && report.lower_bound_certified {
                POSITIVE
            } else {
                INCONCLUSIVE
            })
        }
        Command::BadPrimes {
            algebra,
            tuple,
            unital,
            factor_bound,
        } => {
            let LoadedAlgebra::Integral(alg, raw) = load(&algebra)? else {
                return Err(Error::Input("bad-primes needs an algebra over Z".into()));
            };
            let t = parse_integral_tuple(&alg, raw.as_ref(), &tuple)?;
            let out = match bad_primes(&alg, &t, unital, factor_bound)? {
                BadPrimes::GenericFail => json!("generic-fail"),
                BadPrimes::Primes(v) => json!(v.iter().map(u64::to_string).collect::<Vec<_>>()),
            };
            emit(out);
            Ok(POSITIVE)
        }
        Command::ForsterLift {
            algebra,
            n,
            unital,
            budget,
        } => {
            let LoadedAlgebra::Integral(alg, _) = load(&algebra)? else {
                return Err(Error::Input("forster-lift needs an algebra over Z".into()));
            };
            let opts = LiftOptions {
                budget: budget.budget(),
                unital,
                factor_bound: budget.factor_bound,
            };
            let cert = forster_lift(&alg, n, &opts)?;
            eprintln!("{} generators after {} steps", cert.generators.len(), cert.steps.len());
            emit(CertificateFile::lift(&alg, &cert).to_json());
            Ok(POSITIVE)
        }
        Command::VerifyCert {
            algebra,
            certificate,
            max_exhaustive,
            factor_bound,
        } => {
            let alg = load(&algebra)?;
            let text = fs::read_to_string(&certificate)
                .map_err(|e| Error::Input(format!("{}: {e}", certificate.display())))?;
            let cert = CertificateFile::parse(&text)?;
            match verify_certificate(
                &alg,
                &cert,
                ReplayLimits {
                    max_exhaustive,
                    factor_bound,
                },
            ) {
                Ok(()) => {
                    eprintln!("certificate replays");
                    Ok(POSITIVE)
                }
                Err(Error::InvariantViolation(msg)) | Err(Error::Input(msg)) => {
                    eprintln!("rejected: {msg}");
                    Ok(NEGATIVE)
                }
                Err(Error::Json(e)) => {
                    eprintln!("rejected: {e}");
                    Ok(NEGATIVE)
                }
                Err(e) => Err(e),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INVALID } else { POSITIVE });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
