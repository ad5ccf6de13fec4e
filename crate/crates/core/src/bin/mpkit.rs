use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mpkit::programs::{self, ConstantName, Level};
use mpkit::{convio, Context, MpError, RoundingRule};

#[derive(Parser, Debug)]
#[command(name = "mpkit", version, about = "Multiple-precision arithmetic from the command line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Decimal places to print (and to size the precision from).
    #[arg(long, global = true, default_value_t = 40)]
    decimals: u32,
    /// Override the radix B.
    #[arg(long, global = true)]
    base: Option<u64>,
    /// Override the number of base-B digits T.
    #[arg(long, global = true)]
    digits: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Round::Trunc)]
    round: Round,
    /// Output radix, 2 to 16.
    #[arg(long, global = true, default_value_t = 10)]
    obase: u32,
    #[arg(long, global = true, hide = true)]
    corrupt_mul: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a constant: pi, ramanujan, ramanujan3, euler, eps, maxr, minr.
    Constants { name: String },
    /// Evaluate an expression such as "16*atan1(5)-4*atan1(239)".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check FN(x) = FN(1/x) for each x (read from standard input when none given,
    /// stopping at the first nonpositive value).
    Jacobi { x: Vec<String> },
    /// Run the built-in checks.
    Selftest {
        #[arg(value_enum, default_value_t = Suite::Quick)]
        level: Suite,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Round {
    Trunc,
    Nearest,
    Down,
    Up,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Quick,
    Full,
}

impl From<Round> for RoundingRule {
    fn from(r: Round) -> Self {
        match r {
            Round::Trunc => RoundingRule::Truncate,
            Round::Nearest => RoundingRule::NearestEven,
            Round::Down => RoundingRule::Down,
            Round::Up => RoundingRule::Up,
        }
    }
}

/// Apply the command-line overrides to a starting configuration.
fn configure(cli: &Cli, mut ctx: Context) -> Result<Context, MpError> {
    if let Some(b) = cli.base {
        if ctx.word_bits() < 64 {
            ctx = Context::init(ctx.decimal_places().max(1), 64)?;
        }
        ctx.set_param("BASE", b as i64)?;
        let t = match cli.digits {
            Some(t) => t,
            None => convio::digits_for(&ctx.with_io_bases(10, 10)?, ctx.decimal_places() as usize)?,
        };
        ctx.set_param("NUMDIG", t as i64)?;
    } else if let Some(t) = cli.digits {
        ctx.set_param("NUMDIG", t as i64)?;
    }
    ctx.set_param("RNDRL", RoundingRule::from(cli.round).code())?;
    ctx.set_param("OUTBAS", cli.obase as i64)?;
    Ok(ctx.with_faulty_mul(cli.corrupt_mul))
}

fn usage(e: &MpError) -> bool {
    matches!(e, MpError::Config(_) | MpError::Parse(_))
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<ExitCode, MpError> {
    let places = cli.decimals as usize;
    match &cli.command {
        Command::Constants { name } => {
            let name: ConstantName = name.parse()?;
            let ctx = configure(cli, programs::constant_context(name, cli.decimals, 32)?)?;
            writeln!(out, "{}", programs::constant_text(&ctx, name, places)?).map_err(io_error)?;
        }
        Command::Eval { expr } => {
            let ctx = configure(cli, Context::init(cli.decimals + 10, 32)?)?;
            let v = programs::evaluate(&ctx, expr)?;
            writeln!(out, "{}", programs::render(&ctx, &v, places)?).map_err(io_error)?;
        }
        Command::Jacobi { x } => {
            let ctx = configure(cli, Context::init(cli.decimals, 32)?)?;
            let mut inputs = Vec::new();
            if x.is_empty() {
                for line in io::stdin().lock().lines() {
                    let v = convio::parse_record(&ctx.with_io_bases(10, ctx.out_base())?, &line.map_err(io_error)?)?;
                    if v.sign() <= 0 {
                        break;
                    }
                    inputs.push(v);
                }
            } else {
                for s in x {
                    let v = convio::parse(&ctx.with_io_bases(10, ctx.out_base())?, s)?;
                    if v.sign() <= 0 {
                        return Err(MpError::Domain(format!("jacobi needs x > 0, got {s}")));
                    }
                    inputs.push(v);
                }
            }
            for (i, v) in inputs.iter().enumerate() {
                if i > 0 {
                    writeln!(out).map_err(io_error)?;
                }
                write!(out, "{}", programs::jacobi(&ctx, v)?.render(&ctx)?).map_err(io_error)?;
            }
        }
        Command::Selftest { level } => {
            let ctx = configure(cli, Context::init(cli.decimals, 32)?)?;
            let level = match level {
                Suite::Quick => Level::Quick,
                Suite::Full => Level::Full,
            };
            let report = programs::selftest(&ctx, level);
            write!(out, "{}", report.render()).map_err(io_error)?;
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn io_error(e: io::Error) -> MpError {
    MpError::Format(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("mpkit: {e}");
            ExitCode::from(if usage(&e) { 2 } else { 1 })
        }
    }
}
