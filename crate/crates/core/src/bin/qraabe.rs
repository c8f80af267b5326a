use clap::{Args, Parser, Subcommand};
use qraabe::cli::{self, OutputFormat, RunConfig, EXIT_USAGE};
use qraabe::{Method, SeriesConfig, TheoremId};
use std::path::PathBuf;
use std::process::ExitCode;

/// Evaluate q-special functions and check the q-Raabe and theta integral identities.
#[derive(Parser)]
#[command(name = "qraabe", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Pass threshold on |lhs - rhs| (per-theorem default when omitted).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Quadrature tolerance (defaults to min(theorem default, tol/10)).
    #[arg(long, global = true)]
    quad_tol: Option<f64>,
    /// Tail-bound target for series and products.
    #[arg(long, global = true, default_value_t = 1e-15)]
    eps: f64,
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_terms: usize,
    /// table, csv or json
    #[arg(long, global = true, default_value = "table")]
    format: OutputFormat,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// tanh-sinh, gk or auto
    #[arg(long, global = true, default_value = "auto")]
    quadrature: Method,
    /// Significant digits printed by `eval`.
    #[arg(long, global = true, default_value_t = 15)]
    digits: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function, e.g. `eval dilog z=1`.
    Eval { function: String, args: Vec<String> },
    /// Check one identity instance.
    Verify {
        theorem: TheoremId,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        t: Option<f64>,
    },
    /// Check an identity over a q × t grid (comma lists or start:stop:count).
    Sweep {
        theorem: TheoremId,
        #[arg(long)]
        q: String,
        #[arg(long)]
        t: Option<String>,
    },
    /// Tabulate ∫₀¹ log Γ_q(x+t) dx against the classical value as q → 1.
    Limits {
        #[arg(long, default_value = "0.9,0.99,0.999")]
        q: String,
        #[arg(long)]
        t: Option<f64>,
    },
}

fn run(cli: Cli) -> qraabe::Result<cli::CommandOutput> {
    let g = cli.global;
    let run = RunConfig {
        series: SeriesConfig::new(g.eps, g.max_terms)?,
        tol: g.tol,
        quad_tol: g.quad_tol,
        method: g.quadrature,
        format: g.format,
        out: g.out,
        digits: g.digits,
    };
    match cli.command {
        Command::Eval { function, args } => cli::cmd_eval(&function, &args, &run),
        Command::Verify { theorem, q, t } => cli::cmd_verify(theorem, q, t, &run),
        Command::Sweep { theorem, q, t } => cli::cmd_sweep(theorem, &q, t.as_deref(), &run),
        Command::Limits { q, t } => cli::cmd_limits(&q, t, &run),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
