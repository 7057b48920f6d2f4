use crate::exactalg::Domain;
use crate::mpoly::{sum, Ctx, MPoly, MultiDegree, RationalMap};

use super::{cox_ctx, require_char_not, x_ctx, y_ctx, CharMode, FamilyError, FamilyParams, Ring};

/// Strict transforms `Ŝ`, `D̂` in the Cox ring of the blow-up along the two
/// conjugate planes, with the ℤ³-grading of its variables.
#[derive(Clone, Debug)]
pub struct CoxModel<D: Domain> {
    pub ctx: Ctx,
    pub s_hat: MPoly<D>,
    pub d_hat: MPoly<D>,
    /// `3D̂ − ξŜ`, when ξ is available.
    pub f_hat: Option<MPoly<D>>,
    /// One entry per variable of `ctx`.
    pub grading: Vec<MultiDegree>,
    /// Generating sets of the components of the irrelevant ideal.
    pub irrelevant: Vec<Vec<usize>>,
}

impl<D: Domain> CoxModel<D> {
    pub fn wp(&self) -> usize {
        self.ctx.len() - 2
    }

    pub fn wm(&self) -> usize {
        self.ctx.len() - 1
    }
}

pub fn build_cox_model<D: Domain>(params: &FamilyParams, k: &D) -> Result<CoxModel<D>, FamilyError> {
    params.validate()?;
    if params.char_mode == CharMode::Char2 {
        return Err(FamilyError::Char2WithGeneric);
    }
    let n = params.n;
    let ctx = cox_ctx(n);
    let r = Ring::new(&ctx, k);
    let (wp, wm) = (r.v(2 * n + 2), r.v(2 * n + 3));
    let (mut s, mut dd) = (Vec::new(), Vec::new());
    for i in 0..=n {
        let (z0, z1) = (r.v(2 * i), r.v(2 * i + 1));
        let mono = &z0.pow(params.d) * &z1.pow(params.d);
        let (a, b) = (wp * z0, wm * z1);
        s.push(&mono * &(&a + &b));
        dd.push(&mono * &(&a - &b));
    }
    let s_hat = sum(&ctx, k, s);
    let d_hat = sum(&ctx, k, dd);
    let f_hat = k.sqrt_minus_three().map(|xi| &d_hat.scale_int(3) - &s_hat.scale(&xi));
    let mut grading = Vec::with_capacity(ctx.len());
    for _ in 0..=n {
        grading.push(MultiDegree(1, -1, 0));
        grading.push(MultiDegree(1, 0, -1));
    }
    grading.push(MultiDegree(0, 1, 0));
    grading.push(MultiDegree(0, 0, 1));
    let all_z: Vec<usize> = (0..2 * n + 2).collect();
    let mut with_wp = vec![2 * n + 2];
    with_wp.extend((0..=n).map(|i| 2 * i + 1));
    let mut with_wm = vec![2 * n + 3];
    with_wm.extend((0..=n).map(|i| 2 * i));
    Ok(CoxModel { ctx, s_hat, d_hat, f_hat, grading, irrelevant: vec![all_z, with_wp, with_wm] })
}

/// `S` and `D` in the coordinates `y` where the conjugate planes become
/// coordinate planes.
#[derive(Clone, Debug, PartialEq)]
pub struct SdPair<D: Domain> {
    pub s: MPoly<D>,
    pub d: MPoly<D>,
}

/// `S = Σ y_{2i}^d y_{2i+1}^d (y_{2i}+y_{2i+1})` and `D` with `y_{2i}−y_{2i+1}`.
pub fn build_s_d<D: Domain>(params: &FamilyParams, k: &D) -> Result<SdPair<D>, FamilyError> {
    params.validate()?;
    let r = Ring::new(&y_ctx(params.n), k);
    let (mut s, mut dd) = (Vec::new(), Vec::new());
    for i in 0..=params.n {
        let (a, b) = (r.v(2 * i), r.v(2 * i + 1));
        let mono = &a.pow(params.d) * &b.pow(params.d);
        s.push(&mono * &(a + b));
        dd.push(&mono * &(a - b));
    }
    Ok(SdPair { s: sum(&r.ctx, k, s), d: sum(&r.ctx, k, dd) })
}

/// `S`, `D` for the hypersurface `Σ (a_{2i}x_{2i} + a_{2i+1}x_{2i+1})(…)^d`
/// with the `a_j` kept as formal variables after the `y` variables.
pub fn build_s_d_general<D: Domain>(params: &FamilyParams, k: &D) -> Result<SdPair<D>, FamilyError> {
    params.validate()?;
    require_char_not(k, &[2])?;
    let n = params.n;
    let ctx = y_ctx(n).extended((0..2 * n + 2).map(|j| format!("a{j}")))?;
    let r = Ring::new(&ctx, k);
    let coef = |j: usize| r.v(2 * n + 2 + j);
    let (mut s, mut dd) = (Vec::new(), Vec::new());
    for i in 0..=n {
        let (a, b) = (r.v(2 * i), r.v(2 * i + 1));
        let mono = &a.pow(params.d) * &b.pow(params.d);
        let half_even = r.half(coef(2 * i))?;
        s.push(&(&mono * &half_even) * &(a + b));
        let dc = &half_even.neg() - coef(2 * i + 1);
        dd.push(&(&mono * &dc) * &(a - b));
    }
    Ok(SdPair { s: sum(&ctx, k, s), d: sum(&ctx, k, dd) })
}

/// The Galois involution on coordinates: swaps variables `2i` and `2i+1`
/// for `i < pairs`, leaving the rest fixed.
pub fn galois_swap<D: Domain>(p: &MPoly<D>, pairs: usize) -> Result<MPoly<D>, FamilyError> {
    let ctx = p.ctx().clone();
    let mut images = MPoly::vars(&ctx, p.domain());
    for i in 0..pairs {
        images.swap(2 * i, 2 * i + 1);
    }
    Ok(p.compose(&images)?)
}

/// The coordinate change `Φ: x ↦ y` with `y_{2j} = x_{2j} − a₊x_{2j+1}`,
/// `y_{2j+1} = x_{2j} − a₋x_{2j+1}`, `a± = (1±ξ)/2`, and its inverse.
pub fn build_phi_change<D: Domain>(n: usize, k: &D) -> Result<(RationalMap<D>, RationalMap<D>), FamilyError> {
    FamilyParams::new(n, 1).validate()?;
    require_char_not(k, &[2, 3])?;
    let rx = Ring::new(&x_ctx(n), k);
    let xi = rx.xi()?;
    let half = k.half().ok_or(FamilyError::BadCharacteristic(2))?;
    let a_plus = k.mul(&k.add(&k.one(), &xi), &half);
    let a_minus = k.mul(&k.sub(&k.one(), &xi), &half);
    let mut fwd = Vec::new();
    for j in 0..=n {
        let (x0, x1) = (rx.v(2 * j), rx.v(2 * j + 1));
        fwd.push(x0 - &x1.scale(&a_plus));
        fwd.push(x0 - &x1.scale(&a_minus));
    }
    let ry = Ring::new(&y_ctx(n), k);
    let xi_inv = k.inv(&xi).ok_or(FamilyError::MissingXi)?;
    let mut back = Vec::new();
    for j in 0..=n {
        let (y0, y1) = (ry.v(2 * j), ry.v(2 * j + 1));
        back.push((&y1.scale(&a_plus) - &y0.scale(&a_minus)).scale(&xi_inv));
        back.push((y1 - y0).scale(&xi_inv));
    }
    Ok((RationalMap::from_components(fwd)?, RationalMap::from_components(back)?))
}

