use crate::exactalg::arith::is_prime;
use crate::exactalg::Domain;
use crate::mpoly::{sum, MPoly, RationalMap};

use super::{norm_form, require_char_not, u_ctx, x_ctx, CharMode, FamilyError, FamilyParams, Ring};

/// `Σ_{i=0}^{n} (x_{2i}+x_{2i+1})(x_{2i}² ∓ x_{2i}x_{2i+1} + x_{2i+1}²)^d`, with
/// the plus sign in char-2 mode.
pub fn build_x<D: Domain>(params: &FamilyParams, k: &D) -> Result<MPoly<D>, FamilyError> {
    params.check_domain(k)?;
    let r = Ring::new(&x_ctx(params.n), k);
    let s = if params.char_mode == CharMode::Char2 { 1 } else { -1 };
    let terms = (0..=params.n).map(|i| {
        let (a, b) = (r.v(2 * i), r.v(2 * i + 1));
        &(a + b) * &norm_form(a, b, s).pow(params.d)
    });
    Ok(sum(&r.ctx, k, terms))
}

/// `Σ (x_{2i}+x_{2i+1}) (Σ_j (−1)^j x_{2i}^{d−1−j} x_{2i+1}^j)^δ` for an odd
/// prime `d`; the Fermat hypersurface of degree `d` when `δ = 1`.
pub fn build_x_delta<D: Domain>(n: usize, d: u32, delta: u32, k: &D) -> Result<MPoly<D>, FamilyError> {
    if d < 3 || !is_prime(d as u64) {
        return Err(FamilyError::NotOddPrime(d));
    }
    FamilyParams::new(n, d).with_delta(delta).validate()?;
    let r = Ring::new(&x_ctx(n), k);
    let terms = (0..=n).map(|i| {
        let (a, b) = (r.v(2 * i), r.v(2 * i + 1));
        let inner = sum(
            &r.ctx,
            k,
            (0..d).map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                (&a.pow(d - 1 - j) * &b.pow(j)).scale_int(sign)
            }),
        );
        &(a + b) * &inner.pow(delta)
    });
    Ok(sum(&r.ctx, k, terms))
}

fn ab_parts<D: Domain>(r: &Ring<D>, n: usize, d: u32) -> (MPoly<D>, MPoly<D>) {
    let mut a = r.zero();
    let mut b = r.zero();
    for i in 0..n {
        let (u, v) = (r.v(2 * i + 1), r.v(2 * i + 2));
        let q = (&u.pow(2) + &v.pow(2).scale_int(3)).pow(d);
        a = &a + &(&(u + &v.scale_int(3)) * &q);
        b = &b + &(&(u - v) * &q);
    }
    (a, b)
}

/// The pair `(A̅, B̅)` in `u0, …, u_{2n}`: `u0^{2d+1} + Σ (u_{2i+1}+3u_{2i+2})(u_{2i+1}²+3u_{2i+2}²)^d`
/// and the same with `u_{2i+1}−u_{2i+2}`.
pub fn build_ab<D: Domain>(params: &FamilyParams, k: &D) -> Result<(MPoly<D>, MPoly<D>), FamilyError> {
    params.validate()?;
    if params.char_mode == CharMode::Char2 {
        return Err(FamilyError::Char2WithGeneric);
    }
    require_char_not(k, &[2])?;
    let r = Ring::new(&u_ctx(params.n), k);
    let (a, b) = ab_parts(&r, params.n, params.d);
    let lead = r.v(0).pow(2 * params.d + 1);
    Ok((&a + &lead, &b + &lead))
}

/// The affine pair before homogenization: as [`build_ab`] with `u0 = 1`, still
/// in the `u0, …, u_{2n}` context.
pub fn build_affine_ab<D: Domain>(params: &FamilyParams, k: &D) -> Result<(MPoly<D>, MPoly<D>), FamilyError> {
    params.validate()?;
    require_char_not(k, &[2])?;
    let r = Ring::new(&u_ctx(params.n), k);
    let (a, b) = ab_parts(&r, params.n, params.d);
    Ok((&a + &r.int(1), &b + &r.int(1)))
}

/// The parametrization `φ̄: ℙ^{2n} ⇢ X`, components of degree `2d+2`.
pub fn build_phi_bar<D: Domain>(params: &FamilyParams, k: &D) -> Result<RationalMap<D>, FamilyError> {
    require_char_not(k, &[2, 3])?;
    let (a, b) = build_ab(params, k)?;
    phi_bar_from(&a, &b, params.n)
}

/// `φ̄` assembled from an arbitrary pair in place of `(A̅, B̅)`.
pub fn phi_bar_from<D: Domain>(a: &MPoly<D>, b: &MPoly<D>, n: usize) -> Result<RationalMap<D>, FamilyError> {
    let k = a.domain();
    let r = Ring::new(a.ctx(), k);
    let (a, b) = (a.clone(), b.clone());
    let mut comps = Vec::with_capacity(2 * n + 2);
    for i in 0..n {
        let (u, v) = (r.v(2 * i + 1), r.v(2 * i + 2));
        let even = &(&(u - &v.scale_int(3)) * &a) - &(&(u + v).scale_int(3) * &b);
        comps.push(r.half(&even)?);
        comps.push(&(u * &a) - &(&v.scale_int(3) * &b));
    }
    comps.push(r.half(&(r.v(0) * &(&a - &b.scale_int(3))))?);
    comps.push(r.v(0) * &a);
    Ok(RationalMap::from_components(comps)?)
}

#[derive(Clone, Debug)]
pub struct CharTwoMaps<D: Domain> {
    pub p: MPoly<D>,
    pub q: MPoly<D>,
    pub g: RationalMap<D>,
}

/// `P`, `Q` and the parametrization `g` used in characteristic 2.
pub fn build_char_two_maps<D: Domain>(params: &FamilyParams, k: &D) -> Result<CharTwoMaps<D>, FamilyError> {
    if params.char_mode != CharMode::Char2 {
        return Err(FamilyError::CharModeMismatch { mode: params.char_mode, characteristic: 2 });
    }
    params.check_domain(k)?;
    let n = params.n;
    let r = Ring::new(&u_ctx(n), k);
    let mut p = r.v(2 * n).pow(2 * params.d + 1);
    let mut q = r.zero();
    for i in 0..n {
        let (a, b) = (r.v(2 * i), r.v(2 * i + 1));
        let nf = norm_form(a, b, 1).pow(params.d);
        p = &p + &(&(a + b) * &nf);
        q = &q + &(b * &nf);
    }
    let mut comps = Vec::with_capacity(2 * n + 2);
    for i in 0..n {
        let (a, b) = (r.v(2 * i), r.v(2 * i + 1));
        comps.push(&(&(a + b) * &p) + &(a * &q));
        comps.push(&(a * &p) + &(b * &q));
    }
    comps.push(r.v(2 * n) * &(&p + &q));
    comps.push(r.v(2 * n) * &p);
    let g = RationalMap::from_components(comps)?;
    Ok(CharTwoMaps { p, q, g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{FiniteField, Rationals};
    use crate::mpoly::parse_poly;

    #[test]
    fn fermat_cubic() {
        let x = build_x(&FamilyParams::new(1, 1), &Rationals).unwrap();
        assert_eq!(x, parse_poly(x.ctx(), &Rationals, "x0^3 + x1^3 + x2^3 + x3^3").unwrap());
        let f2 = FiniteField::prime(2).unwrap();
        let x2 = build_x(&FamilyParams::new(1, 1).with_char_mode(CharMode::Char2), &f2).unwrap();
        assert_eq!(x2, parse_poly(x2.ctx(), &f2, "x0^3 + x1^3 + x2^3 + x3^3").unwrap());
        assert!(build_x(&FamilyParams::new(1, 1), &f2).is_err());
    }

    #[test]
    fn ab_small_case() {
        let (a, b) = build_ab(&FamilyParams::new(1, 1), &Rationals).unwrap();
        let ctx = a.ctx();
        assert_eq!(a, parse_poly(ctx, &Rationals, "u0^3 + (u1+3*u2)*(u1^2+3*u2^2)").unwrap());
        assert_eq!(b, parse_poly(ctx, &Rationals, "u0^3 + (u1-u2)*(u1^2+3*u2^2)").unwrap());
        assert_eq!(&a - &b, parse_poly(ctx, &Rationals, "4*u2*(u1^2+3*u2^2)").unwrap());
    }

    #[test]
    fn char_two_p_expands() {
        let f2 = FiniteField::prime(2).unwrap();
        let m = build_char_two_maps(&FamilyParams::new(1, 1).with_char_mode(CharMode::Char2), &f2).unwrap();
        assert_eq!(m.p, parse_poly(m.p.ctx(), &f2, "u2^3 + u0^3 + u1^3").unwrap());
        assert_eq!(m.g.total_degree(), Some(4));
    }

    #[test]
    fn x_delta_rejects_non_primes() {
        assert_eq!(build_x_delta(1, 9, 1, &Rationals), Err(FamilyError::NotOddPrime(9)));
        assert_eq!(build_x_delta(1, 2, 1, &Rationals), Err(FamilyError::NotOddPrime(2)));
        let f = build_x_delta(1, 3, 2, &Rationals).unwrap();
        assert_eq!(f.homogeneous_degree(), Some(5));
    }
}
