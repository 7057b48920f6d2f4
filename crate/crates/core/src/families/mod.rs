//! Constructors for the hypersurface families, their parametrizations,
//! inverse maps, ideals and Cox-ring models.

mod cox;
mod hypersurface;
mod ideals;
mod maps;
mod pencil;

use serde::{Deserialize, Serialize};

use crate::exactalg::Domain;
use crate::mpoly::{Ctx, MPoly, PolyError, VarContext};

pub use cox::{build_cox_model, build_phi_change, build_s_d, build_s_d_general, galois_swap, CoxModel, SdPair};
pub use hypersurface::{
    build_ab, build_affine_ab, build_char_two_maps, build_phi_bar, build_x, build_x_delta, phi_bar_from, CharTwoMaps,
};
pub use ideals::{build_ideals, IdealGens, IdealKind};
pub use maps::{
    alpha_plus_sign, build_alpha_beta, build_cremona, build_dnm, build_h, build_h_inverse, build_phi_tilde, build_theta,
    dnm_closed_form_n2, Dnm,
};
pub use pencil::{build_line_pencil, LinePencil};

/// Which sign pattern of the norm form the constructor should use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CharMode {
    /// `x² − xy + y²`; requires characteristic ≠ 2.
    #[default]
    Generic,
    /// `x² + xy + y²` over a field of characteristic 2.
    Char2,
    /// Generic formulas over a field of characteristic 3.
    Char3,
}

impl CharMode {
    /// The mode matching a coefficient domain of characteristic `p`.
    pub fn for_characteristic(p: u64) -> Self {
        match p {
            2 => CharMode::Char2,
            3 => CharMode::Char3,
            _ => CharMode::Generic,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: usize,
    pub d: u32,
    pub delta: u32,
    pub char_mode: CharMode,
}

impl FamilyParams {
    pub fn new(n: usize, d: u32) -> Self {
        FamilyParams { n, d, delta: 1, char_mode: CharMode::Generic }
    }

    pub fn with_delta(mut self, delta: u32) -> Self {
        self.delta = delta;
        self
    }

    pub fn with_char_mode(mut self, mode: CharMode) -> Self {
        self.char_mode = mode;
        self
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.n == 0 || self.d == 0 || self.delta == 0 {
            return Err(FamilyError::InvalidParams(format!(
                "n, d and delta must be at least 1 (got n={}, d={}, delta={})",
                self.n, self.d, self.delta
            )));
        }
        Ok(())
    }

    /// Checks that the mode agrees with the characteristic of `k`.
    pub fn check_domain<D: Domain>(&self, k: &D) -> Result<(), FamilyError> {
        self.validate()?;
        let p = k.characteristic();
        let ok = match self.char_mode {
            CharMode::Generic => p != 2 && p != 3,
            CharMode::Char2 => p == 2,
            CharMode::Char3 => p == 3,
        };
        if ok {
            Ok(())
        } else {
            Err(FamilyError::CharModeMismatch { mode: self.char_mode, characteristic: p })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("char mode {mode:?} does not match a domain of characteristic {characteristic}")]
    CharModeMismatch { mode: CharMode, characteristic: u64 },
    #[error("generic constructor requires characteristic other than {0}; use the char-2 constructors")]
    BadCharacteristic(u64),
    #[error("char-2 family requested with generic constructor")]
    Char2WithGeneric,
    #[error("the coefficient domain has no square root of -3")]
    MissingXi,
    #[error("d = {0} is not an odd prime")]
    NotOddPrime(u32),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub fn x_ctx(n: usize) -> Ctx {
    VarContext::indexed("x", 2 * n + 2)
}

pub fn u_ctx(n: usize) -> Ctx {
    VarContext::indexed("u", 2 * n + 1)
}

pub fn t_ctx(n: usize) -> Ctx {
    VarContext::indexed("t", 2 * n + 1)
}

pub fn y_ctx(n: usize) -> Ctx {
    VarContext::indexed("y", 2 * n + 2)
}

/// `z0, …, z{2n+1}, wp, wm`; `wp`/`wm` are the exceptional-divisor variables.
pub fn cox_ctx(n: usize) -> Ctx {
    VarContext::indexed("z", 2 * n + 2).extended(["wp", "wm"]).expect("fresh names")
}

/// Variables of a context plus integer constants, to keep constructors terse.
pub(crate) struct Ring<D: Domain> {
    pub ctx: Ctx,
    pub k: D,
    vars: Vec<MPoly<D>>,
}

impl<D: Domain> Ring<D> {
    pub fn new(ctx: &Ctx, k: &D) -> Self {
        Ring { ctx: ctx.clone(), k: k.clone(), vars: MPoly::vars(ctx, k) }
    }

    pub fn v(&self, i: usize) -> &MPoly<D> {
        &self.vars[i]
    }

    pub fn int(&self, c: i64) -> MPoly<D> {
        MPoly::from_int(&self.ctx, &self.k, c)
    }

    pub fn elem(&self, c: D::Elem) -> MPoly<D> {
        MPoly::constant(&self.ctx, &self.k, c)
    }

    pub fn zero(&self) -> MPoly<D> {
        MPoly::zero(&self.ctx, &self.k)
    }

    pub fn half(&self, p: &MPoly<D>) -> Result<MPoly<D>, FamilyError> {
        let h = self.k.half().ok_or(FamilyError::BadCharacteristic(2))?;
        Ok(p.scale(&h))
    }

    pub fn xi(&self) -> Result<D::Elem, FamilyError> {
        self.k.sqrt_minus_three().ok_or(FamilyError::MissingXi)
    }
}

pub(crate) fn require_char_not<D: Domain>(k: &D, bad: &[u64]) -> Result<(), FamilyError> {
    let p = k.characteristic();
    if bad.contains(&p) {
        Err(FamilyError::BadCharacteristic(p))
    } else {
        Ok(())
    }
}

/// `a² + s·ab + b²` with `s = ±1`.
pub(crate) fn norm_form<D: Domain>(a: &MPoly<D>, b: &MPoly<D>, s: i64) -> MPoly<D> {
    &(&a.pow(2) + &(a * b).scale_int(s)) + &b.pow(2)
}
