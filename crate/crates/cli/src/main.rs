use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyperrat::heights::HeightMode;
use hyperrat_cli::{run_suite, write_output, Command, CountFamily, DumpFamily, Format, Outcome, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "hyperrat", version, about = "Families, verification, point counts and heights for odd-degree rational hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 8)]
    shards: usize,
    /// Maximum number of enumerated points for counts.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Largest n and d expanded symbolically before switching to sampling.
    #[arg(long, global = true, value_names = ["N", "D"], num_args = 2)]
    symbolic_budget: Option<Vec<u64>>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the polynomials of a family.
    Families {
        #[command(subcommand)]
        action: FamiliesCmd,
    },
    /// Run verification checks.
    Verify {
        /// Check name, or `all`; may be repeated.
        #[arg(long = "check", required = true)]
        checks: Vec<String>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: u32,
        /// 2 selects the char-2 checks; a prime p = 1 mod 6 sets the sampling field.
        #[arg(long = "char")]
        char_p: Option<u64>,
    },
    /// Count points over a finite field.
    Count {
        #[arg(long, value_enum)]
        family: CountFamily,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        delta: u32,
        #[arg(long)]
        q: u64,
        /// Homogeneous polynomial in x0, x1, … for the custom family; may be repeated.
        #[arg(long = "poly")]
        polys: Vec<String>,
    },
    /// Count rational points of bounded height on the surface.
    Heights {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: u32,
        /// Single bound.
        #[arg(long, conflicts_with = "up_to")]
        bound: Option<u64>,
        /// Every bound from 1 to this value.
        #[arg(long)]
        up_to: Option<u64>,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        #[arg(long)]
        max_bound: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum FamiliesCmd {
    Dump {
        #[arg(long, value_enum)]
        family: DumpFamily,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        delta: u32,
        /// Field size q; omitted means the rationals.
        #[arg(long = "char")]
        char_q: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum ModeArg {
    Direct,
    Param,
    Both,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Outcome::Invalid.code() as u8 } else { 0 });
        }
    };
    let mut max_bound = None;
    let command = match cli.command {
        Cmd::Families { action: FamiliesCmd::Dump { family, n, d, delta, char_q } } => Command::FamiliesDump { family, n, d, delta, char_q },
        Cmd::Verify { checks, n, d, char_p } => Command::Verify { checks, n, d, char_p },
        Cmd::Count { family, n, d, delta, q, polys } => Command::Count { family, n, d, delta, q, polys },
        Cmd::Heights { n, d, bound, up_to, mode, max_bound: mb } => {
            max_bound = mb;
            let bounds = match (bound, up_to) {
                (Some(b), _) => vec![b],
                (None, Some(u)) => (1..=u).collect(),
                (None, None) => Vec::new(),
            };
            let mode = match mode {
                ModeArg::Direct => HeightMode::Direct,
                ModeArg::Param => HeightMode::Param,
                ModeArg::Both => HeightMode::Both,
            };
            Command::Heights { n, d, bounds, mode }
        }
    };
    let mut cfg = RunConfig::new(command);
    cfg.seed = cli.global.seed;
    cfg.shards = cli.global.shards;
    cfg.out = cli.global.out;
    cfg.format = cli.global.format;
    if let Some(b) = cli.global.budget {
        cfg.budget = b;
    }
    if let Some(v) = cli.global.symbolic_budget {
        cfg.symbolic.max_n = v[0] as usize;
        cfg.symbolic.max_d = v[1] as u32;
    }
    if let Some(b) = max_bound {
        cfg.heights.max_direct_bound = b;
    }
    let out = run_suite(&cfg);
    if out.outcome == Outcome::Invalid {
        if let Some(msg) = out.report["results"]["error"].as_str() {
            eprintln!("{msg}");
        }
    }
    ExitCode::from(write_output(&cfg, &out).code() as u8)
}
