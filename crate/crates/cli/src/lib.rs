//! Command-line front end for `pleth-core`. Every command writes one JSON
//! document to standard output.

pub mod reproduce;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use pleth_core::hwv::{
    certified_rank, evaluation_matrix, parse_tableaux, random_points, PointKind, PrimeField, Tableau, DEFAULT_PRIME,
    DEFAULT_RETRIES,
};
use pleth_core::obstructions::{multiplicity_obstruction_check, occurrence_obstruction_check, EvalOptions};
use pleth_core::plethysm::{closed_form_pleth_lr2, foulkes_delta_case, monomial_coefficient, plethysm, plethysm_bruteforce};
use pleth_core::semigroup::{load_family, verify_generators, Decomposer};
use pleth_core::combinatorics::q_binomial;
use pleth_core::{Error, Partition};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "pleth", version, about = "Plethysm coefficients, semigroups and highest weight vector evaluation")]
pub struct Cli {
    /// Worker threads for parallel evaluation (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RandomArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
    #[arg(long, default_value_t = DEFAULT_RETRIES)]
    pub retries: u32,
}

impl RandomArgs {
    fn options(&self) -> EvalOptions {
        EvalOptions {
            prime: self.prime,
            seed: self.seed,
            retries: self.retries,
            ..EvalOptions::default()
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Jt,
    Brute,
    Closed,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Chow,
    Pow,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Plethysm coefficient a_lambda(d[n]).
    Pleth {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Route::Jt)]
        route: Route,
    },
    /// Coefficient of the monomial x^nu in h_d[h_n].
    Cnu {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
    },
    /// Gaussian binomial [a+b choose b]_q, or one coefficient of it.
    Qbinom {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        coeff: Option<i64>,
    },
    /// Case of a_(L,r,2)(n+1[n]) - a_(L,r,2)(n[n+1]).
    FoulkesDelta {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
    },
    #[command(subcommand)]
    Semigroup(SemigroupCommand),
    #[command(subcommand)]
    Hwv(HwvCommand),
    #[command(subcommand)]
    Obstruct(ObstructCommand),
    Reproduce {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(reproduce::TARGETS))]
        target: String,
        /// pipeline-3x6: largest generator degree evaluated.
        #[arg(long, default_value_t = 4)]
        dmax: u32,
        /// pipeline-3x6: evaluate every generator.
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        random: RandomArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum SemigroupCommand {
    /// Checks a_mu(d[n]) > 0 for the generators.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 8)]
        dmax: u32,
    },
    /// Writes lambda as a sum of generators.
    Decompose {
        #[arg(long)]
        family: String,
        #[arg(long)]
        lambda: Partition,
    },
}

#[derive(Args, Debug)]
pub struct HwvArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Compact or JSON tableau list.
    #[arg(long)]
    pub tableaux: PathBuf,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: u32,
    /// Number of summands for power-sum points.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub points: usize,
    #[command(flatten)]
    pub random: RandomArgs,
}

#[derive(Subcommand, Debug)]
pub enum HwvCommand {
    /// Evaluation matrix, one row per tableau.
    Eval(HwvArgs),
    /// Rank of the evaluation matrix with retries.
    Rank(HwvArgs),
}

#[derive(Subcommand, Debug)]
pub enum ObstructCommand {
    Multiplicity {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        lambda: Partition,
        /// Tableaux for the rank bound when k < d.
        #[arg(long)]
        tableaux: Option<PathBuf>,
        #[command(flatten)]
        random: RandomArgs,
    },
    Occurrence {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        lambda: Partition,
        /// Defaults to d.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        random: RandomArgs,
    },
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn render<T: Serialize>(value: &T, ok: bool) -> Outcome {
    let mut stdout = serde_json::to_string_pretty(value).expect("reports serialize");
    stdout.push('\n');
    Outcome {
        code: if ok { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

fn failure(message: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: message,
    }
}

fn read_tableaux(path: &PathBuf) -> pleth_core::Result<Vec<Tableau>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_tableaux(&text)
}

fn point_kind(kind: Kind, k: Option<usize>) -> pleth_core::Result<PointKind> {
    match (kind, k) {
        (Kind::Chow, _) => Ok(PointKind::Chow),
        (Kind::Pow, Some(k)) => Ok(PointKind::Pow { k }),
        (Kind::Pow, None) => Err(Error::InvalidParameters("--kind pow needs --k".into())),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                failure(text)
            };
        }
    };
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| execute(cli.command)),
            Err(e) => return failure(format!("error: {e}\n")),
        },
        None => execute(cli.command),
    };
    result.unwrap_or_else(|e| failure(format!("error: {e}\n")))
}

fn execute(command: Command) -> pleth_core::Result<Outcome> {
    let out = match command {
        Command::Pleth { lambda, d, n, route } => {
            let value = match route {
                Route::Jt => plethysm(&lambda, d, n)?,
                Route::Brute => plethysm_bruteforce(&lambda, d, n, lambda.length().max(1))?,
                Route::Closed => match *lambda.parts() {
                    [l, r, 2] => closed_form_pleth_lr2(l, r, d, n)?,
                    _ => return Err(Error::InvalidParameters(format!("closed route needs (L,r,2), got {lambda}"))),
                },
            };
            let route = match route {
                Route::Jt => "jt",
                Route::Brute => "brute",
                Route::Closed => "closed",
            };
            render(
                &json!({"schema": "1", "lambda": lambda.parts(), "d": d, "n": n, "route": route, "value": value.to_string()}),
                true,
            )
        }
        Command::Cnu { nu, d, n } => {
            let value = monomial_coefficient(&nu, d, n)?;
            render(&json!({"schema": "1", "nu": nu.parts(), "d": d, "n": n, "value": value.to_string()}), true)
        }
        Command::Qbinom { a, b, coeff } => {
            let poly = q_binomial(a, b);
            let value = match coeff {
                Some(r) => json!({"schema": "1", "a": a, "b": b, "coeff": r, "value": poly.coeff(r).to_string()}),
                None => {
                    let coeffs: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
                    json!({"schema": "1", "a": a, "b": b, "coeffs": coeffs})
                }
            };
            render(&value, true)
        }
        Command::FoulkesDelta { n, r } => {
            let case = foulkes_delta_case(n, r)?;
            render(
                &json!({"schema": "1", "n": n, "r": r, "case": case.label(), "value": case.value().to_string()}),
                true,
            )
        }
        Command::Semigroup(SemigroupCommand::Verify { family, dmax }) => {
            let fam = load_family(&family)?;
            let report = verify_generators(&fam, dmax)?;
            let zero = BigUint::from(0u32);
            let vanishing: Vec<&[u32]> =
                report.checked.iter().filter(|(_, v)| *v == zero).map(|(g, _)| g.parts()).collect();
            let checked: Vec<Value> = report
                .checked
                .iter()
                .map(|(g, v)| json!({"generator": g.parts(), "value": v.to_string()}))
                .collect();
            let skipped: Vec<&[u32]> = report.skipped.iter().map(Partition::parts).collect();
            let ok = vanishing.is_empty();
            render(
                &json!({"schema": "1", "family": family, "dmax": dmax, "checked": checked, "skipped": skipped, "vanishing": vanishing}),
                ok,
            )
        }
        Command::Semigroup(SemigroupCommand::Decompose { family, lambda }) => {
            let fam = load_family(&family)?;
            let excluded = fam.is_excluded(&lambda);
            let parts = Decomposer::new(&fam).decompose(&lambda)?;
            let ok = parts.is_some();
            let parts: Option<Vec<&[u32]>> = parts.as_ref().map(|p| p.iter().map(Partition::parts).collect());
            render(
                &json!({"schema": "1", "family": family, "lambda": lambda.parts(), "excluded": excluded, "decomposition": parts}),
                ok,
            )
        }
        Command::Hwv(HwvCommand::Eval(args)) => {
            let field = PrimeField::for_dimension(args.random.prime, args.m)?;
            let kind = point_kind(args.kind, args.k)?;
            let tableaux = read_tableaux(&args.tableaux)?;
            let points = random_points(&field, kind, args.m, args.n, args.points, args.random.seed);
            let matrix = evaluation_matrix(&field, &tableaux, &points, args.n)?;
            let rows: Vec<Value> = tableaux
                .iter()
                .zip(&matrix)
                .map(|(t, row)| json!({"tableau": t.to_compact(), "values": row}))
                .collect();
            render(
                &json!({"schema": "1", "point_kind": kind, "m": args.m, "n": args.n, "points": args.points,
                        "seed": args.random.seed, "prime": args.random.prime, "retries": 0, "rows": rows}),
                true,
            )
        }
        Command::Hwv(HwvCommand::Rank(args)) => {
            let field = PrimeField::for_dimension(args.random.prime, args.m)?;
            let kind = point_kind(args.kind, args.k)?;
            let tableaux = read_tableaux(&args.tableaux)?;
            let cert = certified_rank(
                &field,
                &tableaux,
                kind,
                args.m,
                args.n,
                args.points,
                args.random.seed,
                args.random.retries,
            )?;
            let ok = cert.is_full();
            render(&json!({"schema": "1", "m": args.m, "n": args.n, "certificate": cert}), ok)
        }
        Command::Obstruct(ObstructCommand::Multiplicity {
            m,
            n,
            k,
            d,
            lambda,
            tableaux,
            random,
        }) => {
            let basis = tableaux.as_ref().map(read_tableaux).transpose()?;
            let report = multiplicity_obstruction_check(m, n, k, d, &lambda, basis.as_deref(), &random.options())?;
            let ok = report.verdict.is_obstruction();
            render(&report, ok)
        }
        Command::Obstruct(ObstructCommand::Occurrence {
            m,
            n,
            d,
            lambda,
            k,
            random,
        }) => {
            let report = occurrence_obstruction_check(m, n, d, &lambda, k.unwrap_or(d as usize), &random.options())?;
            let ok = report.verdict == pleth_core::obstructions::Verdict::OccurrenceObstruction;
            render(&report, ok)
        }
        Command::Reproduce {
            target,
            dmax,
            full,
            random,
        } => {
            let opts = random.options();
            match target.as_str() {
                "thm-main-2a" => {
                    let (r, ok) = reproduce::thm_main_2a(&opts)?;
                    render(&r, ok)
                }
                "thm-main-2b" => {
                    let (r, ok) = reproduce::thm_main_2b(&opts)?;
                    render(&r, ok)
                }
                "occurrence-table" => {
                    let (r, ok) = reproduce::occurrence_table(&opts)?;
                    render(&r, ok)
                }
                "cor-key" => {
                    let (r, ok) = reproduce::cor_key(7, 9)?;
                    render(&r, ok)
                }
                "pipeline-3x6" => {
                    let (r, ok) = reproduce::pipeline_3x6((!full).then_some(dmax), &opts)?;
                    render(&r, ok)
                }
                other => return Err(Error::InvalidParameters(format!("unknown target {other}"))),
            }
        }
    };
    Ok(out)
}
