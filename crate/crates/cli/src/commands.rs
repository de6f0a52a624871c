use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::Context;
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

use fdpi_core::{
    combine, combine_divisors, decompose, divides_biquad, scan, BiquadraticField, Decomposition,
    Error, Prime, PrincipalIdeal, QuadraticField, Ring,
};

use crate::format::{Format, RowWriter};

/// First-degree prime ideals of quadratic orders Z[α], Z[β] and their
/// biquadratic compositum Z[γ], γ = α + β.
#[derive(Debug, Parser)]
#[command(name = "fdpi", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the roots r of the first-degree prime ideals (r, p)
    #[command(allow_negative_numbers = true)]
    Ideals(IdealsArgs),
    /// Combine (r, p) over α and (s, p) over β into (r + s, p) over γ
    #[command(allow_negative_numbers = true)]
    Combine(CombineArgs),
    /// Recover the source pair of (t, p) over γ
    #[command(allow_negative_numbers = true)]
    Decompose(DecomposeArgs),
    /// Test divisibility of ⟨n + mγ⟩ by (t, p), or by the combination of (r, p) and (s, p)
    #[command(allow_negative_numbers = true)]
    Divides(DividesArgs),
    /// Enumerate all ideals of norm p <= pmax
    #[command(allow_negative_numbers = true)]
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// α² = a
    #[arg(short = 'a', long = "a")]
    a: i64,
    /// β² = b
    #[arg(short = 'b', long = "b")]
    b: i64,
}

impl FieldArgs {
    fn field(&self) -> anyhow::Result<BiquadraticField> {
        Ok(BiquadraticField::new(self.a, self.b)?)
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

impl OutputArgs {
    fn open(&self) -> anyhow::Result<Box<dyn Write + Send>> {
        Ok(match &self.output {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).with_context(|| format!("creating {}", path.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout())),
        })
    }

    fn emit<T: Serialize>(&self, value: &T) -> anyhow::Result<()> {
        let mut out = self.open()?;
        serde_json::to_writer(&mut out, value)?;
        out.write_all(b"\n")?;
        out.flush()?;
        Ok(())
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("ring").required(true).args(["quad", "biquad"])))]
struct IdealsArgs {
    /// Ideals of Z[α], α² = a
    #[arg(long)]
    quad: bool,
    /// Ideals of Z[γ], γ = α + β
    #[arg(long)]
    biquad: bool,
    #[arg(short = 'a', long = "a")]
    a: i64,
    #[arg(short = 'b', long = "b", required_if_eq("biquad", "true"))]
    b: Option<i64>,
    #[arg(short = 'p', long = "p")]
    p: i64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct CombineArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(short = 'p', long = "p")]
    p: i64,
    #[arg(short = 'r', long = "r")]
    r: i64,
    #[arg(short = 's', long = "s")]
    s: i64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(short = 'p', long = "p")]
    p: i64,
    #[arg(short = 't', long = "t")]
    t: i64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("target").required(true).args(["t", "r"])))]
struct DividesArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(short = 'n', long = "n")]
    n: i64,
    #[arg(short = 'm', long = "m")]
    m: i64,
    #[arg(short = 'p', long = "p")]
    p: i64,
    /// Root of an ideal of Z[γ]
    #[arg(short = 't', long = "t")]
    t: Option<i64>,
    /// Root of a divisor of ⟨n + mγ⟩ ∩ Z[α]
    #[arg(short = 'r', long = "r", requires = "s")]
    r: Option<i64>,
    /// Root of a divisor of ⟨n + mγ⟩ ∩ Z[β]
    #[arg(short = 's', long = "s", requires = "r")]
    s: Option<i64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Largest norm to scan (at most 2^40)
    #[arg(long)]
    pmax: u64,
    /// Annotate with divisibility of ⟨n + mγ⟩
    #[arg(short = 'n', long = "n", requires = "m")]
    n: Option<i64>,
    #[arg(short = 'm', long = "m", requires = "n")]
    m: Option<i64>,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: Format,
    /// Worker threads; 0 or unset uses every core
    #[arg(long, env = "FDPI_JOBS")]
    jobs: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

/// A usage problem detected after argument parsing.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct Usage(pub String);

/// Process exit status for an error returned by [`run`].
pub fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::OutOfRange { .. } | Error::InvalidField(_) | Error::InvalidPrincipal(_)) => 2,
        Some(Error::NotPrime(_)) => 3,
        Some(
            Error::NotAnIdeal { .. }
            | Error::NotADivisor { .. }
            | Error::NormMismatch(..)
            | Error::RingMismatch { .. }
            | Error::NotZeroCase { .. }
            | Error::NotInvertible { .. },
        ) => 4,
        Some(Error::Invariant(_)) | None => 1,
    }
}

fn prime(p: i64) -> anyhow::Result<Prime> {
    let p = u64::try_from(p).map_err(|_| Error::NotPrime(p.unsigned_abs()))?;
    match Prime::new(p) {
        Err(Error::OutOfRange { .. }) => Err(Error::NotPrime(p).into()),
        other => Ok(other?),
    }
}

pub fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Ideals(args) => ideals(args),
        Command::Combine(args) => cmd_combine(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Divides(args) => divides(args),
        Command::Scan(args) => cmd_scan(args),
    }
}

fn ideals(args: IdealsArgs) -> anyhow::Result<()> {
    let roots = if args.quad {
        let field = QuadraticField::new(args.a)?;
        field.roots(prime(args.p)?)
    } else {
        let b = args.b.ok_or_else(|| Usage("--biquad needs -b".into()))?;
        let field = BiquadraticField::new(args.a, b)?;
        field.roots(Ring::Gamma, prime(args.p)?)
    };
    args.output.emit(&roots)
}

#[derive(Serialize)]
struct CombineRecord {
    t: u64,
}

fn cmd_combine(args: CombineArgs) -> anyhow::Result<()> {
    let field = args.field.field()?;
    let p = prime(args.p)?.get();
    let ra = field.ideal(Ring::Alpha, args.r, p)?;
    let sb = field.ideal(Ring::Beta, args.s, p)?;
    let tc = combine(&field, &ra, &sb)?;
    args.output.emit(&CombineRecord { t: tc.r() })
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum DecomposeRecord {
    Unique { r: u64, s: u64 },
    Zero { nu: u8, pairs: Vec<[u64; 2]> },
}

fn cmd_decompose(args: DecomposeArgs) -> anyhow::Result<()> {
    let field = args.field.field()?;
    let p = prime(args.p)?.get();
    let tc = field.ideal(Ring::Gamma, args.t, p)?;
    let record = match decompose(&field, &tc)? {
        Decomposition::Unique((r, s)) => DecomposeRecord::Unique { r: r.r(), s: s.r() },
        Decomposition::Zero(z) => DecomposeRecord::Zero {
            nu: z.nu,
            pairs: z.pairs.iter().map(|(r, s)| [r.r(), s.r()]).collect(),
        },
    };
    args.output.emit(&record)
}

#[derive(Serialize)]
struct DividesRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<u64>,
    divides: bool,
    exceptional: bool,
}

fn divides(args: DividesArgs) -> anyhow::Result<()> {
    let field = args.field.field()?;
    let principal = PrincipalIdeal::new(field, args.n, args.m)?;
    let p = prime(args.p)?;
    let record = match (args.t, args.r, args.s) {
        (Some(t), None, None) => {
            let tc = field.ideal(Ring::Gamma, t, p.get())?;
            DividesRecord {
                t: None,
                divides: divides_biquad(&principal, &tc)?,
                exceptional: principal.is_exceptional(tc.r(), p),
            }
        }
        (None, Some(r), Some(s)) => {
            let ra = field.ideal(Ring::Alpha, r, p.get())?;
            let sb = field.ideal(Ring::Beta, s, p.get())?;
            let outcome = combine_divisors(&principal, &ra, &sb)?;
            DividesRecord {
                t: Some(outcome.ideal.r()),
                divides: outcome.divides,
                exceptional: outcome.exceptional,
            }
        }
        _ => return Err(Usage("give either -t, or both -r and -s".into()).into()),
    };
    args.output.emit(&record)
}

fn cmd_scan(args: ScanArgs) -> anyhow::Result<()> {
    let field = args.field.field()?;
    let principal = match (args.n, args.m) {
        (Some(n), Some(m)) => Some(PrincipalIdeal::new(field, n, m)?),
        _ => None,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .context("starting worker pool")?;

    let mut writer = RowWriter::new(args.format, args.output.open()?)?;
    pool.install(|| scan(&field, principal.as_ref(), args.pmax, |row| writer.write(row)))?;
    writer.finish()
}
