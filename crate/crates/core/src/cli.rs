//! Command-line front end: `power`, `formal`, `verify` and `bench`.
//!
//! Exit status is 0 on success, 1 when arguments fail to parse or validate,
//! and 2 when `verify` (or the agreement check inside `bench`) finds a
//! mismatch.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::formal::{render, FormalEntry};
use crate::ring::{Counting, RingSpec};
use crate::{Integers, Modular, RCirculant, Ring, Semicirculant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "circpow",
    version,
    about = "Exact powers of semicirculant and r-circulant matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Print the first row (or strips) of the k-th power.
    Power(JobArgs),
    /// Print the formal entries Σ L(m,p)·a0^(k-p)·C(k,p).
    Formal(JobArgs),
    /// Recompute with every applicable oracle and compare.
    Verify(JobArgs),
    /// Time the folding route against dense repeated squaring (CSV).
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct JobArgs {
    /// Ring: "Z" or "Z/<m>".
    #[arg(long, default_value = "Z")]
    ring: String,
    /// Treat the row as the strips of an r-circulant matrix.
    #[arg(long)]
    rcirculant: bool,
    /// The r parameter (r-circulant only).
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    /// Comma-separated first row, e.g. 5,4,3,2,1.
    #[arg(long, allow_hyphen_values = true)]
    row: Option<String>,
    /// Matrix order; defaults to the row length (semicirculant rows are zero-padded).
    #[arg(long)]
    n: Option<String>,
    /// Exponent, or "symbolic" for `formal`.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value = "Z")]
    ring: String,
    /// Comma-separated orders to sweep.
    #[arg(long, default_value = "2,3,4,6")]
    ns: String,
    /// Comma-separated exponents to sweep.
    #[arg(long, default_value = "4,8,16,32")]
    ks: String,
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    r: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Timed runs per cell; the fastest is reported.
    #[arg(long, default_value_t = 3)]
    repeats: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Power,
    Formal,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Semicirculant,
    Rcirculant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exponent {
    Value(u64),
    Symbolic,
}

/// A validated job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub ring: RingSpec,
    pub kind: Kind,
    pub row: Vec<BigInt>,
    pub n: usize,
    pub r: Option<BigInt>,
    pub k: Exponent,
    pub format: Format,
}

/// Validation failure, naming the offending flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub field: &'static str,
    pub message: String,
}

impl CliError {
    fn new(field: &'static str, message: impl Display) -> Self {
        Self {
            field,
            message: message.to_string(),
        }
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid --{}: {}", self.field, self.message)
    }
}

impl std::error::Error for CliError {}

fn parse_int(field: &'static str, s: &str) -> Result<BigInt, CliError> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| CliError::new(field, format!("{s:?} is not an integer")))
}

fn parse_list<T>(
    field: &'static str,
    s: &str,
    parse: impl Fn(&str) -> Option<T>,
) -> Result<Vec<T>, CliError> {
    if s.trim().is_empty() {
        return Err(CliError::new(field, "empty list"));
    }
    s.split(',')
        .map(|item| {
            parse(item.trim()).ok_or_else(|| CliError::new(field, format!("{item:?} is not valid")))
        })
        .collect()
}

fn parse_exponent(s: &str) -> Result<u64, CliError> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| CliError::new("k", format!("{s:?} is not a nonnegative integer")))
}

impl JobSpec {
    fn from_args(command: Command, args: JobArgs) -> Result<Self, CliError> {
        let ring: RingSpec = args.ring.parse().map_err(|e| CliError::new("ring", e))?;
        let kind = if args.rcirculant {
            Kind::Rcirculant
        } else {
            Kind::Semicirculant
        };
        let row_text = args
            .row
            .ok_or_else(|| CliError::new("row", "is required"))?;
        let row = parse_list("row", &row_text, |s| s.parse::<BigInt>().ok())?;

        let n = match &args.n {
            Some(s) => s
                .trim()
                .parse::<usize>()
                .map_err(|_| CliError::new("n", format!("{s:?} is not a positive integer")))?,
            None => row.len(),
        };
        if n == 0 {
            return Err(CliError::new("n", "order must be at least 1"));
        }

        let r = match (kind, &args.r) {
            (Kind::Rcirculant, Some(s)) => Some(parse_int("r", s)?),
            (Kind::Rcirculant, None) => {
                return Err(CliError::new("r", "is required with --rcirculant"))
            }
            (Kind::Semicirculant, Some(_)) => {
                return Err(CliError::new("r", "only applies with --rcirculant"))
            }
            (Kind::Semicirculant, None) => None,
        };
        match kind {
            Kind::Rcirculant if n != row.len() => {
                return Err(CliError::new(
                    "n",
                    format!("order {n} does not match row length {}", row.len()),
                ))
            }
            Kind::Semicirculant if n < row.len() => {
                return Err(CliError::new(
                    "n",
                    format!("order {n} is shorter than the row ({})", row.len()),
                ))
            }
            _ => {}
        }

        let k = match (command, args.k.as_deref()) {
            (Command::Formal, None) => Exponent::Symbolic,
            (Command::Formal, Some("symbolic")) if kind == Kind::Semicirculant => {
                Exponent::Symbolic
            }
            (Command::Formal, Some("symbolic")) => {
                return Err(CliError::new(
                    "k",
                    "formal entries of an r-circulant power need a numeric exponent",
                ))
            }
            (_, None) => return Err(CliError::new("k", "is required")),
            (_, Some(s)) => Exponent::Value(parse_exponent(s)?),
        };
        if kind == Kind::Rcirculant && command == Command::Formal && k == Exponent::Symbolic {
            return Err(CliError::new(
                "k",
                "formal entries of an r-circulant power need a numeric exponent",
            ));
        }

        Ok(Self {
            command,
            ring,
            kind,
            row,
            n,
            r,
            k,
            format: args.format,
        })
    }
}

/// Parses `args` (including the program name), runs the job and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        CommandArgs::Power(a) => {
            JobSpec::from_args(Command::Power, a).map(|job| run_job(&job, out))
        }
        CommandArgs::Formal(a) => {
            JobSpec::from_args(Command::Formal, a).map(|job| run_job(&job, out))
        }
        CommandArgs::Verify(a) => {
            JobSpec::from_args(Command::Verify, a).map(|job| run_job(&job, out))
        }
        CommandArgs::Bench(a) => run_bench(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

/// Runs a validated job.
pub fn run_job(job: &JobSpec, out: &mut dyn Write) -> i32 {
    match job.ring {
        RingSpec::Integers => execute(Integers, job, out),
        RingSpec::Modular(m) => execute(Modular::new(m).expect("validated modulus"), job, out),
    }
}

fn strings<E: Display>(xs: &[E]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn bracketed<E: Display>(xs: &[E]) -> String {
    format!("[{}]", strings(xs).join(","))
}

#[derive(Serialize)]
struct PowerJson {
    command: Command,
    kind: Kind,
    ring: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<String>,
    k: u64,
    row: Vec<String>,
}

#[derive(Serialize)]
struct TermJson {
    p: usize,
    coeff: String,
}

#[derive(Serialize)]
struct EntryJson {
    m: usize,
    terms: Vec<TermJson>,
    text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

#[derive(Serialize)]
struct FormalJson {
    command: Command,
    kind: Kind,
    ring: String,
    a0: String,
    k: Option<u64>,
    entries: Vec<EntryJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Agree,
    Skipped,
    Mismatch,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Serialize)]
struct VerifyJson {
    command: Command,
    kind: Kind,
    ring: String,
    k: u64,
    ok: bool,
    checks: Vec<CheckReport>,
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) {
    let text = serde_json::to_string(value).expect("serializable output");
    let _ = writeln!(out, "{text}");
}

fn execute<R: Ring + 'static>(ring: R, job: &JobSpec, out: &mut dyn Write) -> i32 {
    let row: Vec<R::Elem> = job.row.iter().map(|c| ring.from_integer(c)).collect();
    let r = job.r.as_ref().map(|r| ring.from_integer(r));
    match job.command {
        Command::Power => {
            let Exponent::Value(k) = job.k else {
                unreachable!("validated")
            };
            let (text, values) = match job.kind {
                Kind::Semicirculant => {
                    let a = Semicirculant::with_order(ring.clone(), row, job.n)
                        .expect("validated order");
                    let p = a.power(k);
                    (bracketed(&p.row), strings(&p.row))
                }
                Kind::Rcirculant => {
                    let c = RCirculant::new(ring.clone(), r.clone().expect("validated"), row)
                        .expect("validated order");
                    match c.power_via_fold(k) {
                        Ok(p) => (p.to_string(), strings(p.row())),
                        Err(e) => {
                            let _ = writeln!(out, "error: {e}");
                            return EXIT_INVALID;
                        }
                    }
                }
            };
            match job.format {
                Format::Text => {
                    let _ = writeln!(out, "{text}");
                }
                Format::Json => emit_json(
                    out,
                    &PowerJson {
                        command: job.command,
                        kind: job.kind,
                        ring: ring.name(),
                        n: job.n,
                        r: r.as_ref().map(ToString::to_string),
                        k,
                        row: values,
                    },
                ),
            }
            EXIT_OK
        }
        Command::Formal => {
            let k = match job.k {
                Exponent::Value(k) => Some(k),
                Exponent::Symbolic => None,
            };
            let order = match (job.kind, k) {
                (Kind::Semicirculant, _) => job.n,
                (Kind::Rcirculant, Some(k)) => match ((job.n - 1) as u64).checked_mul(k) {
                    Some(d) if d < 1 << 20 => d as usize + 1,
                    _ => {
                        let _ = writeln!(out, "error: exponent too large to list formal entries");
                        return EXIT_INVALID;
                    }
                },
                (Kind::Rcirculant, None) => unreachable!("validated"),
            };
            let a = Semicirculant::with_order(ring.clone(), row, order).expect("validated order");
            let seq = a.formal_sequence();
            let values = k.map(|k| seq.evaluate_all(&ring, k));
            let a0 = seq.a0().clone();
            let entries: Vec<EntryJson> = seq
                .entries()
                .iter()
                .enumerate()
                .map(|(m, e)| EntryJson {
                    m,
                    terms: terms_json(e),
                    text: render(&ring, e, &a0),
                    value: values.as_ref().map(|v| v[m].to_string()),
                })
                .collect();
            match job.format {
                Format::Text => {
                    for e in &entries {
                        match &e.value {
                            Some(v) => {
                                let _ = writeln!(
                                    out,
                                    "a_{} = {}  [k={}: {}]",
                                    e.m,
                                    e.text,
                                    k.unwrap(),
                                    v
                                );
                            }
                            None => {
                                let _ = writeln!(out, "a_{} = {}", e.m, e.text);
                            }
                        }
                    }
                }
                Format::Json => emit_json(
                    out,
                    &FormalJson {
                        command: job.command,
                        kind: job.kind,
                        ring: ring.name(),
                        a0: a0.to_string(),
                        k,
                        entries,
                    },
                ),
            }
            EXIT_OK
        }
        Command::Verify => {
            let Exponent::Value(k) = job.k else {
                unreachable!("validated")
            };
            let checks = match job.kind {
                Kind::Semicirculant => {
                    let a = Semicirculant::with_order(ring.clone(), row, job.n)
                        .expect("validated order");
                    semicirculant_checks(a)
                }
                Kind::Rcirculant => {
                    let c = RCirculant::new(ring.clone(), r.expect("validated"), row)
                        .expect("validated order");
                    rcirculant_checks(c)
                }
            };
            let reports = run_checks(&checks, k);
            let ok = reports.iter().all(|c| c.status != CheckStatus::Mismatch);
            match job.format {
                Format::Text => {
                    for c in &reports {
                        let status = match c.status {
                            CheckStatus::Agree => "agree",
                            CheckStatus::Skipped => "skipped",
                            CheckStatus::Mismatch => "MISMATCH",
                        };
                        if c.detail.is_empty() {
                            let _ = writeln!(out, "{}: {status}", c.name);
                        } else {
                            let _ = writeln!(out, "{}: {status} ({})", c.name, c.detail);
                        }
                    }
                    let _ = writeln!(
                        out,
                        "{}",
                        if ok {
                            "verified"
                        } else {
                            "verification failed"
                        }
                    );
                }
                Format::Json => emit_json(
                    out,
                    &VerifyJson {
                        command: job.command,
                        kind: job.kind,
                        ring: ring.name(),
                        k,
                        ok,
                        checks: reports,
                    },
                ),
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
    }
}

fn terms_json<E: Clone + Display>(e: &FormalEntry<E>) -> Vec<TermJson> {
    e.terms()
        .rev()
        .map(|(p, c)| TermJson {
            p,
            coeff: c.to_string(),
        })
        .collect()
}

/// Result of one oracle comparison at a fixed exponent.
pub enum Outcome<E> {
    Compared { expected: Vec<E>, actual: Vec<E> },
    NotApplicable(String),
}

type CheckFn<E> = Box<dyn Fn(u64) -> Outcome<E> + Send + Sync>;

/// A named comparison between the main route and an oracle.
pub struct Check<E> {
    pub name: &'static str,
    pub run: CheckFn<E>,
}

fn semicirculant_checks<R: Ring + 'static>(a: Semicirculant<R>) -> Vec<Check<R::Elem>> {
    let a = std::sync::Arc::new(a);
    let (a1, a2, a3) = (a.clone(), a.clone(), a);
    vec![
        Check {
            name: "formal vs dense multiplication",
            run: Box::new(move |k| Outcome::Compared {
                expected: a1.naive_power(k).row,
                actual: a1.power(k).row,
            }),
        },
        Check {
            name: "formal vs left-shift route",
            run: Box::new(move |k| {
                let ring = a2.ring();
                match a2.row().iter().position(|x| !ring.is_zero(x)) {
                    Some(0) => Outcome::NotApplicable("no leading zeros".to_string()),
                    _ => Outcome::Compared {
                        expected: a2.power_by_shift(k).row,
                        actual: a2.power(k).row,
                    },
                }
            }),
        },
        Check {
            name: "formal vs division recursion",
            run: Box::new(move |k| match a3.division_recursion_power(k) {
                Some(p) => Outcome::Compared {
                    expected: p.row,
                    actual: a3.power(k).row,
                },
                None => Outcome::NotApplicable(
                    "a0 or an index below the order is not a unit".to_string(),
                ),
            }),
        },
    ]
}

fn flatten<E: Clone>(d: &crate::dense::DenseMatrix<E>) -> Vec<E> {
    (0..d.order()).flat_map(|i| d.row(i).to_vec()).collect()
}

fn rcirculant_checks<R: Ring + 'static>(c: RCirculant<R>) -> Vec<Check<R::Elem>> {
    let c = std::sync::Arc::new(c);
    let (c1, c2) = (c.clone(), c);
    vec![
        Check {
            name: "fold vs dense multiplication",
            run: Box::new(move |k| match c1.power_via_fold(k) {
                Ok(p) => Outcome::Compared {
                    expected: flatten(&c1.naive_power(k)),
                    actual: flatten(&p.to_dense()),
                },
                Err(e) => Outcome::NotApplicable(e.to_string()),
            }),
        },
        Check {
            name: "two-strip closed form vs fold",
            run: Box::new(move |k| {
                let ring = c2.ring();
                let n = c2.order();
                let support: Vec<usize> = (0..n).filter(|&i| !ring.is_zero(&c2.row()[i])).collect();
                let (p, q) = match support.as_slice() {
                    [p, q] => (*p, *q),
                    [p] if n >= 2 => {
                        if *p + 1 < n {
                            (*p, *p + 1)
                        } else {
                            (*p - 1, *p)
                        }
                    }
                    [] if n >= 2 => (0, 1),
                    _ => {
                        return Outcome::NotApplicable(
                            "more than two nonzero strips or n < 2".to_string(),
                        )
                    }
                };
                let row = c2.row();
                let closed = RCirculant::two_strip_power(
                    ring.clone(),
                    n,
                    c2.r().clone(),
                    p,
                    q,
                    row[p].clone(),
                    row[q].clone(),
                    k,
                );
                match (closed, c2.power_via_fold(k)) {
                    (Ok(closed), Ok(fold)) => Outcome::Compared {
                        expected: closed.row().to_vec(),
                        actual: fold.row().to_vec(),
                    },
                    (Err(e), _) | (_, Err(e)) => Outcome::NotApplicable(e.to_string()),
                }
            }),
        },
    ]
}

/// Index of the first position where `expected` and `actual` differ.
pub fn first_mismatch<E: PartialEq>(expected: &[E], actual: &[E]) -> Option<usize> {
    if expected.len() != actual.len() {
        return Some(expected.len().min(actual.len()));
    }
    expected.iter().zip(actual).position(|(a, b)| a != b)
}

/// Runs every check at `k` concurrently. A failing check is re-run at
/// smaller exponents to report the smallest one that disagrees.
pub fn run_checks<E>(checks: &[Check<E>], k: u64) -> Vec<CheckReport>
where
    E: Clone + PartialEq + Display + Send + Sync,
{
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|check| scope.spawn(move || report(check, k)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("oracle thread panicked"))
            .collect()
    })
}

fn report<E: Clone + PartialEq + Display>(check: &Check<E>, k: u64) -> CheckReport {
    let name = check.name.to_string();
    match (check.run)(k) {
        Outcome::NotApplicable(reason) => CheckReport {
            name,
            status: CheckStatus::Skipped,
            detail: reason,
        },
        Outcome::Compared { expected, actual } => {
            if first_mismatch(&expected, &actual).is_none() {
                return CheckReport {
                    name,
                    status: CheckStatus::Agree,
                    detail: String::new(),
                };
            }
            let detail = (0..=k)
                .find_map(|kk| match (check.run)(kk) {
                    Outcome::Compared { expected, actual } => first_mismatch(&expected, &actual)
                        .map(|i| describe_mismatch(kk, i, &expected, &actual)),
                    Outcome::NotApplicable(_) => None,
                })
                .expect("mismatch at k is found by the scan");
            CheckReport {
                name,
                status: CheckStatus::Mismatch,
                detail,
            }
        }
    }
}

fn describe_mismatch<E: Display>(k: u64, index: usize, expected: &[E], actual: &[E]) -> String {
    let show = |xs: &[E]| {
        xs.get(index)
            .map_or("<missing>".to_string(), ToString::to_string)
    };
    format!(
        "smallest failing k={k}, index {index}: oracle {} vs computed {}",
        show(expected),
        show(actual)
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub k: u64,
    pub ring: String,
    pub method: &'static str,
    pub nanoseconds: u128,
    pub ops: u64,
}

pub const BENCH_HEADER: &str = "n,k,ring,method,nanoseconds,ops";

impl Display for BenchRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{}",
            self.n, self.k, self.ring, self.method, self.nanoseconds, self.ops
        )
    }
}

fn run_bench(args: BenchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let ring: RingSpec = args.ring.parse().map_err(|e| CliError::new("ring", e))?;
    let ns = parse_list("ns", &args.ns, |s| {
        s.parse::<usize>().ok().filter(|&n| n >= 1)
    })?;
    let ks = parse_list("ks", &args.ks, |s| s.parse::<u64>().ok())?;
    let r = parse_int("r", &args.r)?;
    if args.repeats == 0 {
        return Err(CliError::new("repeats", "must be at least 1"));
    }
    let rows = match ring {
        RingSpec::Integers => bench_sweep(Integers, &ns, &ks, &r, args.seed, args.repeats),
        RingSpec::Modular(m) => bench_sweep(
            Modular::new(m).expect("validated modulus"),
            &ns,
            &ks,
            &r,
            args.seed,
            args.repeats,
        ),
    };
    let _ = writeln!(out, "{BENCH_HEADER}");
    match rows {
        Ok(rows) => {
            for row in rows {
                let _ = writeln!(out, "{row}");
            }
            Ok(EXIT_OK)
        }
        Err(msg) => {
            let _ = writeln!(out, "# {msg}");
            Ok(EXIT_MISMATCH)
        }
    }
}

/// Times `power_via_fold` and dense repeated squaring on random rows with
/// entries in `-9..=9`. `ops` counts ring multiplications.
pub fn bench_sweep<R: Ring>(
    ring: R,
    ns: &[usize],
    ks: &[u64],
    r: &BigInt,
    seed: u64,
    repeats: u32,
) -> Result<Vec<BenchRow>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counting = Counting::new(ring.clone());
    let mut rows = Vec::new();
    for &n in ns {
        let raw: Vec<BigInt> = (0..n)
            .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
            .collect();
        let plain = RCirculant::from_integers(ring.clone(), r, &raw).map_err(|e| e.to_string())?;
        let counted =
            RCirculant::from_integers(counting.clone(), r, &raw).map_err(|e| e.to_string())?;
        for &k in ks {
            let mut fold_ns = u128::MAX;
            let mut dense_ns = u128::MAX;
            let mut fold = None;
            let mut dense = None;
            for _ in 0..repeats {
                let t = Instant::now();
                fold = Some(plain.power_via_fold(k).map_err(|e| e.to_string())?);
                fold_ns = fold_ns.min(t.elapsed().as_nanos());
                let t = Instant::now();
                dense = Some(plain.to_dense().pow_squaring(plain.ring(), k));
                dense_ns = dense_ns.min(t.elapsed().as_nanos());
            }
            let (fold, dense) = (fold.expect("repeats >= 1"), dense.expect("repeats >= 1"));
            if fold.to_dense() != dense {
                return Err(format!("fold and dense squaring disagree at n={n}, k={k}"));
            }
            counting.reset();
            counted.power_via_fold(k).map_err(|e| e.to_string())?;
            let fold_ops = counting.multiplications();
            let counted_dense = counted.to_dense();
            counting.reset();
            counted_dense.pow_squaring(&counting, k);
            let dense_ops = counting.multiplications();
            let name = ring.name();
            rows.push(BenchRow {
                n,
                k,
                ring: name.clone(),
                method: "fold",
                nanoseconds: fold_ns,
                ops: fold_ops,
            });
            rows.push(BenchRow {
                n,
                k,
                ring: name,
                method: "dense-squaring",
                nanoseconds: dense_ns,
                ops: dense_ops,
            });
        }
    }
    Ok(rows)
}
