//! Report-producing runner behind the `hyperrat` binary.

mod dump;

use std::fmt::Write as _;
use std::path::PathBuf;

use hyperrat::count::{
    count_custom, count_x, count_x_delta, count_y, CountConfig, CountError, CountReport, DEFAULT_BUDGET,
};
use hyperrat::exactalg::FiniteField;
use hyperrat::heights::{height_report, reports_to_csv, HeightConfig, HeightError, HeightMode, HeightReport};
use hyperrat::mpoly::{parse_poly, VarContext};
use hyperrat::verify::{run_checks, Status, SymbolicBudget, VerificationResult, VerifyConfig, CHECKS};
use serde::Serialize;
use serde_json::{json, Value};

pub use dump::{dump, DumpFamily, Dumped};

/// Checks that run in characteristic 2.
pub const CHAR2_CHECKS: &[&str] = &["membership_char2", "composition_char2_numeric"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid configuration: {0}")]
pub struct ConfigError(pub String);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum CountFamily {
    #[value(alias = "X")]
    X,
    #[value(alias = "Y")]
    Y,
    #[value(alias = "Xdelta")]
    Xdelta,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "subcommand", rename_all = "snake_case")]
pub enum Command {
    FamiliesDump { family: DumpFamily, n: usize, d: u32, delta: u32, char_q: Option<u64> },
    Verify { checks: Vec<String>, n: usize, d: u32, char_p: Option<u64> },
    Count { family: CountFamily, n: usize, d: u32, delta: u32, q: u64, polys: Vec<String> },
    Heights { n: usize, d: u32, bounds: Vec<u64>, mode: HeightMode },
}

/// Fully resolved run; validated before anything is computed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub seed: u64,
    pub shards: usize,
    /// Ceiling on enumerated points for counts.
    pub budget: u64,
    pub symbolic: SymbolicBudget,
    pub heights: HeightConfig,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            seed: 42,
            shards: 8,
            budget: DEFAULT_BUDGET,
            symbolic: SymbolicBudget::default(),
            heights: HeightConfig::default(),
            out: None,
            format: Format::Json,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.shards == 0 {
            return Err(ConfigError("--shards must be at least 1".into()));
        }
        match &self.command {
            Command::FamiliesDump { n, d, delta, .. } | Command::Count { n, d, delta, .. } if *n == 0 || *d == 0 || *delta == 0 => {
                Err(ConfigError("n, d and delta must be at least 1".into()))
            }
            Command::Verify { checks, n, d, char_p } => {
                if *n == 0 || *d == 0 {
                    return Err(ConfigError("n and d must be at least 1".into()));
                }
                for c in checks {
                    if c != "all" && !CHECKS.contains(&c.as_str()) {
                        return Err(ConfigError(format!("unknown check {c:?}")));
                    }
                }
                match char_p {
                    None | Some(0) => Ok(()),
                    Some(2) => match checks.iter().find(|c| c.as_str() != "all" && !CHAR2_CHECKS.contains(&c.as_str())) {
                        Some(c) => Err(ConfigError(format!("char-2 family requested with generic constructor ({c})"))),
                        None => Ok(()),
                    },
                    Some(p) => {
                        let ok = hyperrat::exactalg::arith::is_prime(*p) && p % 6 == 1;
                        if ok {
                            Ok(())
                        } else {
                            Err(ConfigError(format!("--char {p}: numeric checks need a prime p = 1 mod 6 so that xi exists")))
                        }
                    }
                }
            }
            Command::Count { family, q, polys, .. } => {
                hyperrat::exactalg::arith::prime_power(*q).ok_or_else(|| ConfigError(format!("{q} is not a prime power")))?;
                if *family == CountFamily::Custom && polys.is_empty() {
                    return Err(ConfigError("custom family needs at least one --poly".into()));
                }
                if *family == CountFamily::Y && q % 2 == 0 {
                    return Err(ConfigError("char-2 field requested with generic constructor".into()));
                }
                Ok(())
            }
            Command::Heights { n, d, bounds, .. } => {
                if *n != 1 {
                    Err(ConfigError(format!("height search supports n = 1 only, got {n}")))
                } else if *d == 0 || bounds.is_empty() {
                    Err(ConfigError("d must be at least 1 and a bound is required".into()))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    fn verify_config(&self, char_p: Option<u64>) -> VerifyConfig {
        let mut cfg = VerifyConfig { seed: self.seed, budget: self.symbolic, ..VerifyConfig::default() };
        if let Some(p) = char_p.filter(|&p| p > 2) {
            cfg.numeric_prime = p;
        }
        cfg
    }
}

/// Process exit status of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Pass = 0,
    Invalid = 1,
    Fail = 2,
    /// Nothing applicable was checked.
    Inapplicable = 3,
    Budget = 4,
    Io = 5,
}

impl Outcome {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// Failures dominate budget overruns, which dominate gates. A run is
    /// inapplicable only when every item was gated.
    fn combine(statuses: &[Status]) -> Outcome {
        if statuses.contains(&Status::Fail) {
            Outcome::Fail
        } else if statuses.contains(&Status::BudgetExceeded) {
            Outcome::Budget
        } else if !statuses.is_empty() && statuses.iter().all(|s| *s == Status::Inapplicable) {
            Outcome::Inapplicable
        } else {
            Outcome::Pass
        }
    }
}

/// A finished run: the report to write and its exit status.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutput {
    pub outcome: Outcome,
    pub report: Value,
    pub rendered: String,
}

fn envelope(cfg: &RunConfig, results: Value) -> Value {
    json!({
        "tool": "hyperrat",
        "version": env!("CARGO_PKG_VERSION"),
        "config": cfg,
        "results": results,
    })
}

fn count_status(r: &CountReport) -> Status {
    match r.formula {
        Some(_) if r.matches => Status::Pass,
        Some(_) => Status::Fail,
        // nothing is asserted for a custom system
        None if r.family == "custom" => Status::Pass,
        None => Status::Inapplicable,
    }
}

fn run_verify(cfg: &RunConfig, checks: &[String], n: usize, d: u32, char_p: Option<u64>) -> (Vec<Status>, Value, String) {
    let names: Vec<&str> = if checks.iter().any(|c| c == "all") {
        if char_p == Some(2) { CHAR2_CHECKS.to_vec() } else { CHECKS.to_vec() }
    } else {
        checks.iter().map(String::as_str).collect()
    };
    let results: Vec<VerificationResult> = run_checks(&names, n, d, &cfg.verify_config(char_p)).expect("validated names");
    let statuses = results.iter().map(|r| r.status).collect();
    let rendered = match cfg.format {
        Format::Text => results.iter().fold(String::new(), |mut s, r| {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inapplicable => "N/A ",
                Status::BudgetExceeded => "BUDG",
            };
            let _ = writeln!(s, "{tag} {:<26} n={} d={} {:?}{}", r.check, r.params.n, r.params.d, r.mode, r.witness.as_ref().map_or(String::new(), |w| format!("  {w}")));
            s
        }),
        Format::Csv => results.iter().fold(String::from("check,n,d,status,mode,elapsed_ms\n"), |mut s, r| {
            let _ = writeln!(s, "{},{},{},{:?},{:?},{}", r.check, r.params.n, r.params.d, r.status, r.mode, r.elapsed_ms);
            s
        }),
        Format::Json => String::new(),
    };
    (statuses, serde_json::to_value(&results).expect("serializable"), rendered)
}

fn run_count(cfg: &RunConfig, family: CountFamily, n: usize, d: u32, delta: u32, q: u64, polys: &[String]) -> Result<(Vec<Status>, Value, String), CountError> {
    let k = FiniteField::from_q(q)?;
    let ccfg = CountConfig { shards: cfg.shards, budget: cfg.budget };
    let report = match family {
        CountFamily::X => count_x(n, d, &k, &ccfg)?,
        CountFamily::Y => count_y(n, d, &k, &ccfg)?,
        CountFamily::Xdelta => count_x_delta(n, d, delta, &k, &ccfg)?,
        CountFamily::Custom => {
            let nvars = polys
                .iter()
                .flat_map(|p| variable_indices(p))
                .max()
                .map_or(1, |m| m + 1)
                .max(2);
            let ctx = VarContext::indexed("x", nvars);
            let parsed = polys
                .iter()
                .map(|s| parse_poly(&ctx, &k, s))
                .collect::<Result<Vec<_>, _>>()?;
            count_custom(&parsed, &ccfg)?
        }
    };
    let status = count_status(&report);
    let rendered = match cfg.format {
        Format::Text => format!(
            "{} {} n={} d={} over {}: brute {} formula {}{}\n",
            match status {
                Status::Pass => "MATCH",
                Status::Fail => "MISMATCH",
                _ => "GATED",
            },
            report.family,
            report.params.n,
            report.params.d,
            k.spec(),
            report.brute,
            report.formula.map_or("-".into(), |f| f.to_string()),
            report.branch.as_ref().map_or(String::new(), |b| format!(" ({b})")),
        ),
        Format::Csv => format!(
            "family,n,d,q,brute,formula,match\n{},{},{},{},{},{},{}\n",
            report.family,
            report.params.n,
            report.params.d,
            q,
            report.brute,
            report.formula.map_or(String::new(), |f| f.to_string()),
            report.matches
        ),
        Format::Json => String::new(),
    };
    Ok((vec![status], serde_json::to_value(&report).expect("serializable"), rendered))
}

/// Indices `i` of the tokens `x<i>` in a polynomial string.
fn variable_indices(src: &str) -> Vec<usize> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' && (i == 0 || !b[i - 1].is_ascii_alphanumeric()) {
            let j = (i + 1..b.len()).find(|&j| !b[j].is_ascii_digit()).unwrap_or(b.len());
            if let Ok(v) = src[i + 1..j].parse() {
                out.push(v);
            }
            i = j.max(i + 1);
        } else {
            i += 1;
        }
    }
    out
}

fn run_heights(cfg: &RunConfig, d: u32, bounds: &[u64], mode: HeightMode) -> Result<(Vec<Status>, Value, String), HeightError> {
    let reports: Vec<HeightReport> = bounds.iter().map(|&b| height_report(d, b, mode, &cfg.heights)).collect::<Result<_, _>>()?;
    // the parametrized images are points of X of bounded height
    let statuses = reports
        .iter()
        .map(|r| match (r.direct, r.parametrized) {
            (Some(a), Some(b)) if b > a => Status::Fail,
            _ => Status::Pass,
        })
        .collect();
    let rendered = match cfg.format {
        Format::Csv => reports_to_csv(&reports),
        Format::Text => reports.iter().fold(String::new(), |mut s, r| {
            let opt = |v: Option<u64>| v.map_or("-".into(), |v| v.to_string());
            let _ = writeln!(s, "B={:<4} direct={:<8} param={:<8} B^(3/(2d+1))={:.2}", r.bound, opt(r.direct), opt(r.parametrized), r.lower_ref_surface);
            s
        }),
        Format::Json => String::new(),
    };
    Ok((statuses, serde_json::to_value(&reports).expect("serializable"), rendered))
}

fn error_output(cfg: &RunConfig, outcome: Outcome, msg: String) -> RunOutput {
    let report = envelope(cfg, json!({ "error": msg }));
    let rendered = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable"),
        _ => format!("error: {msg}\n"),
    };
    RunOutput { outcome, report, rendered }
}

/// Executes the run and renders its report. Nothing is written here.
pub fn run_suite(cfg: &RunConfig) -> RunOutput {
    if let Err(e) = cfg.validate() {
        return error_output(cfg, Outcome::Invalid, e.to_string());
    }
    let result: Result<(Vec<Status>, Value, String), (Outcome, String)> = match &cfg.command {
        Command::FamiliesDump { family, n, d, delta, char_q } => match dump(*family, *n, *d, *delta, *char_q) {
            Ok(items) => {
                let rendered = match cfg.format {
                    Format::Text => items.iter().map(|i| format!("{} = {}\n", i.label, i.poly)).collect(),
                    Format::Csv => items.iter().fold(String::from("label,poly\n"), |mut s, i| {
                        let _ = writeln!(s, "{},\"{}\"", i.label, i.poly);
                        s
                    }),
                    Format::Json => String::new(),
                };
                Ok((vec![Status::Pass], serde_json::to_value(&items).expect("serializable"), rendered))
            }
            Err(e) => Err((Outcome::Invalid, e.to_string())),
        },
        Command::Verify { checks, n, d, char_p } => Ok(run_verify(cfg, checks, *n, *d, *char_p)),
        Command::Count { family, n, d, delta, q, polys } => {
            run_count(cfg, *family, *n, *d, *delta, *q, polys).map_err(|e| match e {
                CountError::Budget { .. } => (Outcome::Budget, e.to_string()),
                _ => (Outcome::Invalid, e.to_string()),
            })
        }
        Command::Heights { d, bounds, mode, .. } => run_heights(cfg, *d, bounds, *mode).map_err(|e| match e {
            HeightError::Budget { .. } | HeightError::Overflow(_) => (Outcome::Budget, e.to_string()),
            _ => (Outcome::Invalid, e.to_string()),
        }),
    };
    match result {
        Ok((statuses, results, rendered)) => {
            let report = envelope(cfg, results);
            let rendered = if cfg.format == Format::Json { serde_json::to_string_pretty(&report).expect("serializable") } else { rendered };
            RunOutput { outcome: Outcome::combine(&statuses), report, rendered }
        }
        Err((outcome, msg)) => error_output(cfg, outcome, msg),
    }
}

/// Removes every `elapsed_ms` field, for comparing reports across runs.
pub fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("elapsed_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

/// Writes the rendered report to `cfg.out` or stdout.
pub fn write_output(cfg: &RunConfig, out: &RunOutput) -> Outcome {
    let text = if out.rendered.ends_with('\n') { out.rendered.clone() } else { format!("{}\n", out.rendered) };
    match &cfg.out {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => out.outcome,
            Err(e) => {
                eprintln!("cannot write {}: {e}", path.display());
                Outcome::Io
            }
        },
        None => {
            print!("{text}");
            out.outcome
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_precedence() {
        use Status::*;
        assert_eq!(Outcome::combine(&[Pass, Inapplicable]), Outcome::Pass);
        assert_eq!(Outcome::combine(&[Inapplicable]), Outcome::Inapplicable);
        assert_eq!(Outcome::combine(&[Inapplicable, BudgetExceeded]), Outcome::Budget);
        assert_eq!(Outcome::combine(&[BudgetExceeded, Fail]), Outcome::Fail);
    }

    #[test]
    fn custom_variables() {
        assert_eq!(variable_indices("x0^3 + 2*x11*x2 - xi*x1"), vec![0, 11, 2, 1]);
    }

    #[test]
    fn timing_is_stripped() {
        let mut v = json!({"a": {"elapsed_ms": 3, "b": [{"elapsed_ms": 1, "c": 2}]}});
        strip_timing(&mut v);
        assert_eq!(v, json!({"a": {"b": [{"c": 2}]}}));
    }
}
