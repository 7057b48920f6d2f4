//! Exact and randomized verification of the identities behind the families.

mod checks;
mod linear_system;
mod numeric;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactalg::Domain;
use crate::mpoly::MPoly;

pub use checks::{
    verify_composition, verify_composition_mod, verify_cox_grading, verify_galois_symmetry, verify_line_factorization,
    verify_membership,
};
pub use linear_system::{linear_system_rank, verify_linear_system_dim, LinearSystemReport};
pub use numeric::{sample_projective, verify_composition_numeric, verify_singular_locus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A precondition of the checked statement does not hold for these inputs.
    Inapplicable,
    BudgetExceeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Symbolic,
    Numeric,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckParams {
    pub n: usize,
    pub d: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Outcome of one check. `pass` holds exactly when `witness` is absent; a
/// failing or gated check explains itself in the witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationResult {
    pub check: String,
    pub params: CheckParams,
    pub pass: bool,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub mode: Mode,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
    pub elapsed_ms: u64,
}

impl VerificationResult {
    pub fn new(check: &str, params: CheckParams, mode: Mode) -> Self {
        VerificationResult {
            check: check.into(),
            params,
            pass: true,
            status: Status::Pass,
            witness: None,
            mode,
            details: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.pass = false;
        self.status = Status::Fail;
        self.witness = Some(witness.into());
        self
    }

    pub fn inapplicable(mut self, reason: impl Into<String>) -> Self {
        self.pass = false;
        self.status = Status::Inapplicable;
        self.witness = Some(reason.into());
        self
    }

    pub fn budget_exceeded(mut self, reason: impl Into<String>) -> Self {
        self.pass = false;
        self.status = Status::BudgetExceeded;
        self.witness = Some(reason.into());
        self
    }

    pub fn detail(mut self, key: &str, value: impl Serialize) -> Self {
        self.details.insert(key.into(), serde_json::to_value(value).expect("serializable detail"));
        self
    }

    /// Folds the failure of `other` into `self`, keeping the first witness.
    pub fn and(self, other: Result<(), String>) -> Self {
        match other {
            Ok(()) => self,
            Err(w) if self.pass => self.fail(w),
            Err(_) => self,
        }
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }
}

/// Largest `n`, `d` for which full symbolic expansions are attempted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicBudget {
    pub max_n: usize,
    pub max_d: u32,
}

impl Default for SymbolicBudget {
    fn default() -> Self {
        SymbolicBudget { max_n: 2, max_d: 2 }
    }
}

impl SymbolicBudget {
    pub fn allows(&self, n: usize, d: u32) -> bool {
        n <= self.max_n && d <= self.max_d
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub samples: usize,
    pub budget: SymbolicBudget,
    /// Prime used for the numeric fallback.
    pub numeric_prime: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 42, trials: 100, samples: 50, budget: SymbolicBudget::default(), numeric_prime: 1009 }
    }
}

impl VerifyConfig {
    /// Generator private to one check, independent of scheduling order.
    pub fn rng_for(&self, check: &str) -> ChaCha8Rng {
        // FNV-1a over the check name
        let mut h: u64 = 0xcbf29ce484222325;
        for b in check.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

/// Every check runnable by name, in report order.
pub const CHECKS: &[&str] = &[
    "line_factorization",
    "membership",
    "membership_char2",
    "composition_cremona",
    "composition_alpha_beta",
    "composition_theta",
    "composition_numeric",
    "composition_char2_numeric",
    "linear_system_dim",
    "galois_symmetry",
    "cox_grading",
    "coordinate_change",
    "dnm_identity",
    "phi_tilde",
    "homogeneity",
    "singular_locus",
    "multiplicity",
    "negative_controls",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown check {0:?}")]
pub struct UnknownCheck(pub String);

pub fn run_check(name: &str, n: usize, d: u32, cfg: &VerifyConfig) -> Result<VerificationResult, UnknownCheck> {
    let start = Instant::now();
    let r = checks::dispatch(name, n, d, cfg).ok_or_else(|| UnknownCheck(name.into()))?;
    Ok(r.timed(start))
}

/// Runs the named checks (or all of [`CHECKS`] for `"all"`) in parallel,
/// returning results in request order.
pub fn run_checks(names: &[&str], n: usize, d: u32, cfg: &VerifyConfig) -> Result<Vec<VerificationResult>, UnknownCheck> {
    let list: Vec<&str> = if names == ["all"] { CHECKS.to_vec() } else { names.to_vec() };
    list.par_iter().map(|name| run_check(name, n, d, cfg)).collect()
}

/// Compact rendering of a polynomial for witnesses.
pub(crate) fn witness_poly<D: Domain>(p: &MPoly<D>) -> String {
    let s = p.to_string();
    if s.len() <= 240 {
        s
    } else {
        format!("{}… ({} terms)", &s[..s.char_indices().take_while(|(i, _)| *i < 240).last().map_or(0, |(i, _)| i)], p.num_terms())
    }
}

pub(crate) fn witness_point<D: Domain>(k: &D, pt: &[D::Elem]) -> String {
    let parts: Vec<String> = pt.iter().map(|c| k.display(c).to_string()).collect();
    format!("[{}]", parts.join(" : "))
}
