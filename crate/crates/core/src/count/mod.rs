//! Brute-force point counts over finite fields and the closed-form counts
//! they are compared against.

mod campaigns;
mod enumerate;
mod formulas;

use serde::Serialize;

use crate::exactalg::{FieldError, FiniteField, QuadraticRationals, Rationals};
use crate::families::FamilyError;
use crate::mpoly::{MPoly, PolyError};

pub use campaigns::{
    check_projection_bijection, count_custom, count_x, count_x_delta, count_y, count_y0_structure, hyperplane_slices,
    SliceReport, Y0Point, Y0Structure,
};
pub use enumerate::{count_zeros, enumerate_projective, projective_count, zero_points, ProjectivePoint};
pub use formulas::{formula_high_dim, formula_x2d, formula_y, X2dFormula};

/// Default ceiling on enumerated points.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountError {
    #[error("enumeration exceeds the budget of {budget} points")]
    Budget { budget: u64 },
    #[error("{0} is not a prime power")]
    InvalidQ(u64),
    #[error("coefficient not reducible to {field}: {reason}")]
    NotReducible { field: String, reason: String },
    #[error("no polynomials given")]
    EmptySystem,
    #[error("polynomials live in different rings")]
    ContextMismatch,
    #[error("polynomial {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("the field has no square root of -3")]
    MissingXi,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountConfig {
    pub shards: usize,
    pub budget: u64,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig { shards: 8, budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CountParams {
    pub n: usize,
    pub d: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub family: String,
    pub params: CountParams,
    pub field: crate::exactalg::FieldSpec,
    pub brute: u64,
    pub formula: Option<u64>,
    /// Which closed-form case produced `formula`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alt_formula: Option<u64>,
    /// Why no formula applies, when none does.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gate: Option<String>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub shards: usize,
    pub elapsed_ms: u64,
}

/// Reduces a polynomial over ℚ into `k`.
pub fn reduce_rational(p: &MPoly<Rationals>, k: &FiniteField) -> Result<MPoly<FiniteField>, CountError> {
    p.map_coeffs(k, |c| k.from_rational(c)).ok_or_else(|| CountError::NotReducible {
        field: k.spec().to_string(),
        reason: "a denominator is divisible by the characteristic".into(),
    })
}

/// Reduces a polynomial over ℚ(ξ) into `k`, sending ξ to the fixed square
/// root of −3 in `k`.
pub fn reduce_quadratic(p: &MPoly<QuadraticRationals>, k: &FiniteField) -> Result<MPoly<FiniteField>, CountError> {
    use crate::exactalg::Domain;
    use num_traits::Zero;
    let xi = k.sqrt_minus_three();
    let needs_xi = p.terms().any(|(_, c)| !c.xi.is_zero());
    if needs_xi && xi.is_none() {
        return Err(CountError::NotReducible { field: k.spec().to_string(), reason: "-3 is not a square".into() });
    }
    let xi = xi.unwrap_or(0);
    p.map_coeffs(k, |c| Some(k.add(&k.from_rational(&c.re)?, &k.mul(&k.from_rational(&c.xi)?, &xi))))
        .ok_or_else(|| CountError::NotReducible {
            field: k.spec().to_string(),
            reason: "a denominator is divisible by the characteristic".into(),
        })
}
