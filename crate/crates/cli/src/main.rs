use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use piseries::report::{compare, estimate, render_table, write_csv};
use piseries::verify::{self, Suite};
use piseries::{BigReal, ConvergenceRecordBig, CorrectionRule, ExactRational, Method, MethodOptions, Precision};

const USAGE_ERROR: u8 = 2;
const VERIFY_FAILURE: u8 = 1;

#[derive(Parser)]
#[command(name = "piseries", version, about = "Estimate pi/4 and related series to a chosen number of digits")]
struct Cli {
    /// Decimal digits after the point
    #[arg(long, global = true, env = "PI_DIGITS", default_value_t = piseries::DEFAULT_DIGITS,
          value_parser = clap::value_parser!(u32).range(10..=200))]
    digits: u32,

    /// Output format (estimate defaults to table, compare to csv)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one method at one parameter
    Estimate {
        /// arcbit, series, corrected, transformed, leibniz, sine or versine
        method: String,
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        opts: OptionArgs,
    },
    /// Evaluate every method at every parameter and emit one row each
    Compare {
        /// Comma-separated methods; `corrected:<rule>` picks a rule inline
        #[arg(long, value_delimiter = ',', required = true)]
        methods: Vec<String>,
        /// Comma-separated parameters
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<u64>,
        #[command(flatten)]
        opts: OptionArgs,
    },
    /// Run property checks and report each as PASS or FAIL
    Verify {
        /// all, precision, arcbit, powersum, series, correction, trig or leibniz
        suite: String,
        /// Seed for randomized samples
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Number of series terms (series, corrected, transformed)
    #[arg(long)]
    terms: Option<u64>,
    /// Grid size (arcbit)
    #[arg(long)]
    n: Option<u64>,
    /// Quadrature panels (leibniz)
    #[arg(long)]
    panels: Option<u64>,
    /// Refinement passes (sine, versine)
    #[arg(long)]
    iterations: Option<u64>,
}

#[derive(Args)]
struct OptionArgs {
    /// Correction rule for `corrected`: none, a2p, a2p_plus_2, cf1, cf2, cf3
    #[arg(long)]
    rule: Option<String>,
    /// Angle in radians for sine and versine
    #[arg(long)]
    angle: Option<String>,
    /// Upper limit in [0, 1] for arcbit, series and leibniz
    #[arg(long)]
    x: Option<String>,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn decimal(flag: &str, s: &str) -> Result<ExactRational, UsageError> {
    s.parse::<BigReal>()
        .map(|v| v.to_rational())
        .map_err(|_| UsageError(format!("--{flag}: `{s}` is not a decimal number")))
}

impl OptionArgs {
    fn rule(&self) -> Result<Option<CorrectionRule>, UsageError> {
        Ok(self.rule.as_deref().map(str::parse).transpose()?)
    }

    fn to_options(&self) -> Result<MethodOptions, UsageError> {
        let mut opts = MethodOptions::default();
        if let Some(a) = &self.angle {
            opts.angle = decimal("angle", a)?;
        }
        if let Some(x) = &self.x {
            opts.x = decimal("x", x)?;
        }
        Ok(opts)
    }
}

impl ParamArgs {
    fn single(&self) -> Result<u64, UsageError> {
        let given: Vec<u64> = [self.terms, self.n, self.panels, self.iterations]
            .into_iter()
            .flatten()
            .collect();
        match given.as_slice() {
            [p] => Ok(*p),
            [] => Err(UsageError("one of --terms, --n, --panels, --iterations is required".into())),
            _ => Err(UsageError("give only one of --terms, --n, --panels, --iterations".into())),
        }
    }
}

fn emit(records: &[ConvergenceRecordBig], format: Format) -> Result<(), UsageError> {
    let stdout = std::io::stdout();
    match format {
        Format::Csv => write_csv(records, stdout.lock())?,
        Format::Table => stdout.lock().write_all(render_table(records).as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, UsageError> {
    let ctx = Precision::new(cli.digits);
    match cli.command {
        Command::Estimate { method, param, opts } => {
            let method = Method::resolve(&method, opts.rule()?)?;
            if matches!(method, Method::Sine | Method::Versine) && opts.angle.is_none() {
                return Err(UsageError(format!("{method} needs --angle")));
            }
            let record = estimate(method, param.single()?, &opts.to_options()?, &ctx)?;
            emit(&[record], cli.format.unwrap_or(Format::Table))?;
            Ok(0)
        }
        Command::Compare { methods, params, opts } => {
            let rule = opts.rule()?;
            let methods = methods
                .iter()
                .map(|m| Method::resolve(m, rule))
                .collect::<Result<Vec<_>, _>>()?;
            let records = compare(&methods, &params, &opts.to_options()?, &ctx)?;
            emit(&records, cli.format.unwrap_or(Format::Csv))?;
            Ok(0)
        }
        Command::Verify { suite, seed } => {
            let suite: Suite = suite.parse()?;
            let checks = verify::run(suite, cli.digits, seed);
            let mut out = std::io::stdout().lock();
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} checks, {failed} failed", checks.len())?;
            Ok(if failed == 0 { 0 } else { VERIFY_FAILURE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `piseries --help` for usage");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
