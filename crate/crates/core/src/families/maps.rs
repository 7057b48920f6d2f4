use crate::exactalg::Domain;
use crate::mpoly::{MPoly, RationalMap, VarContext};

use super::{require_char_not, t_ctx, u_ctx, x_ctx, FamilyError, FamilyParams, Ring};

/// The quadrics `Θ: ℙ^{2n+1} ⇢ ℙ^{2n}` inverting `φ̄` up to the automorphism `h`.
pub fn build_theta<D: Domain>(n: usize, k: &D) -> Result<RationalMap<D>, FamilyError> {
    FamilyParams::new(n, 1).validate()?;
    let r = Ring::new(&x_ctx(n), k);
    let (a, b) = (r.v(2 * n), r.v(2 * n + 1));
    let mut comps = Vec::with_capacity(2 * n + 1);
    for i in 0..n {
        let (x, y) = (r.v(2 * i), r.v(2 * i + 1));
        comps.push(&(&(x * a) - &(x * b)) + &(y * b));
        comps.push(&(y * a) - &(x * b));
    }
    comps.push(&(&a.pow(2) - &(a * b)) + &b.pow(2));
    Ok(RationalMap::from_components(comps)?)
}

/// The linear automorphism `[2u_{2n} : 2u_0−u_1 : u_1 : 2u_2−u_3 : u_3 : …]` of ℙ^{2n}.
pub fn build_h<D: Domain>(n: usize, k: &D) -> Result<RationalMap<D>, FamilyError> {
    FamilyParams::new(n, 1).validate()?;
    require_char_not(k, &[2])?;
    let r = Ring::new(&u_ctx(n), k);
    let mut comps = vec![r.v(2 * n).scale_int(2)];
    for i in 0..n {
        comps.push(&r.v(2 * i).scale_int(2) - r.v(2 * i + 1));
        comps.push(r.v(2 * i + 1).clone());
    }
    Ok(RationalMap::from_components(comps)?)
}

/// Inverse of [`build_h`] scaled by 2, so that `h ∘ h⁻¹ = 2·id`.
pub fn build_h_inverse<D: Domain>(n: usize, k: &D) -> Result<RationalMap<D>, FamilyError> {
    FamilyParams::new(n, 1).validate()?;
    require_char_not(k, &[2])?;
    let r = Ring::new(&u_ctx(n), k);
    let mut comps = vec![r.zero(); 2 * n + 1];
    comps[2 * n] = r.v(0).clone();
    for i in 0..n {
        comps[2 * i] = r.v(2 * i + 1) + r.v(2 * i + 2);
        comps[2 * i + 1] = r.v(2 * i + 2).scale_int(2);
    }
    Ok(RationalMap::from_components(comps)?)
}

/// The plane Cremona map `cr` on `u0,u1,u2` and its inverse on `v0,v1,v2`.
pub fn build_cremona<D: Domain>(k: &D) -> Result<(RationalMap<D>, RationalMap<D>), FamilyError> {
    require_char_not(k, &[2, 3])?;
    let u = Ring::new(&u_ctx(1), k);
    let (u0, u1, u2) = (u.v(0), u.v(1), u.v(2));
    let cr = RationalMap::from_components(vec![
        &(&(&u0.pow(2).scale_int(3) + &(u0 * u1).scale_int(4)) + &u1.pow(2)) + &u2.pow(2).scale_int(3),
        &u0.pow(2).neg() - &(u0 * u1),
        u0 * u2,
    ])?;
    let v = Ring::new(&VarContext::indexed("v", 3), k);
    let (v0, v1, v2) = (v.v(0), v.v(1), v.v(2));
    let cr_inv = RationalMap::from_components(vec![
        &v1.pow(2) + &v2.pow(2).scale_int(3),
        &(&(v0 * v1).neg() - &v1.pow(2).scale_int(3)) - &v2.pow(2).scale_int(3),
        v2 * &(v0 + &v1.scale_int(2)),
    ])?;
    Ok((cr, cr_inv))
}

fn alpha_with_sign<D: Domain>(n: usize, k: &D, sign_t1: i64) -> Result<RationalMap<D>, FamilyError> {
    FamilyParams::new(n, 1).validate()?;
    let r = Ring::new(&t_ctx(n), k);
    let (t0, t1, t2) = (r.v(0), r.v(1), r.v(2));
    let qt = &(&t0.pow(2) + &(t0 * t1)) + &t1.pow(2);
    let t0t2 = t0 * t2;
    let mut comps = vec![r.zero(); 2 * n + 1];
    comps[0] = (t0 * &qt).scale_int(-2);
    comps[1] = &t0t2 * &(&t0.scale_int(2) + t1);
    for i in 1..=n {
        comps[2 * i] = &t0t2 * r.v(2 * i - 1);
    }
    for j in 1..n {
        let a = r.v(2 * j + 1);
        let lin = &t0.neg() + &t1.scale_int(2 * sign_t1);
        comps[2 * j + 1] = &(&(t2 * &lin) * a) + &(&r.v(2 * j + 2).scale_int(2) * &qt);
    }
    Ok(RationalMap::from_components(comps)?)
}

/// The cubic map `α` and quadratic map `β` between `ℙ^{2n}_t` and `ℙ^{2n}_u`.
///
/// The odd components `α_{2j+1}` carry `−2 t1 t2 t_{2j+1}`; with `+2` the
/// composite `β ∘ α` fails to be a multiple of the identity once `n ≥ 2`
/// (see [`alpha_plus_sign`]).
pub fn build_alpha_beta<D: Domain>(n: usize, k: &D) -> Result<(RationalMap<D>, RationalMap<D>), FamilyError> {
    require_char_not(k, &[2])?;
    let alpha = alpha_with_sign(n, k, -1)?;
    let r = Ring::new(&u_ctx(n), k);
    let (u0, u1, u2) = (r.v(0), r.v(1), r.v(2));
    let mut comps = vec![r.zero(); 2 * n + 1];
    comps[0] = u0 * &(u2 - u1);
    for i in 0..n {
        comps[2 * i + 1] = (u0 * r.v(2 * i + 2)).scale_int(-2);
    }
    comps[2] = &u1.pow(2) + &u2.pow(2).scale_int(3);
    for j in 0..n.saturating_sub(1) {
        let (a, b) = (r.v(2 * j + 3), r.v(2 * j + 4));
        comps[2 * j + 4] = &(&(&(u1 * a) - &(u2 * a)) + &(u1 * b)) + &(u2 * b).scale_int(3);
    }
    Ok((alpha, RationalMap::from_components(comps)?))
}

/// `α` with `+2 t1 t2 t_{2j+1}` in the odd components.
pub fn alpha_plus_sign<D: Domain>(n: usize, k: &D) -> Result<RationalMap<D>, FamilyError> {
    alpha_with_sign(n, k, 1)
}

/// The polynomials `D_{2n}`, `N_{2n}`, `M_{2n}` in `t1, …, t_{2n}` whose
/// ratio gives the third root of the line pencil.
#[derive(Clone, Debug, PartialEq)]
pub struct Dnm<D: Domain> {
    pub d: MPoly<D>,
    pub n: MPoly<D>,
    pub m: MPoly<D>,
}

fn dnm_base<D: Domain>(r: &Ring<D>, d: u32) -> (MPoly<D>, Dnm<D>) {
    let (t1, t2) = (r.v(1), r.v(2));
    let tt = &(&t1.pow(2) + t1) + &r.int(1);
    let ttd = tt.pow(d + 1);
    let lin = &t1.scale_int(2) + &r.int(1);
    let t2p = t2.pow(2 * d + 1);
    let base = Dnm {
        d: (&(&lin * &t2p) - &ttd).scale_int(2),
        n: &ttd - &t2p,
        m: &(&lin * &t2p) - &ttd,
    };
    (tt, base)
}

/// `D'`, `N'`, `M'` for the pair `(t_{2i−1}, t_{2i})`.
fn dnm_step<D: Domain>(r: &Ring<D>, tt: &MPoly<D>, i: usize, d: u32) -> Dnm<D> {
    let (t1, t2) = (r.v(1), r.v(2));
    let (a, b) = (r.v(2 * i - 1), r.v(2 * i));
    let t2a = t2 * a;
    let lin = &(&(b * tt) - &(t1 * &t2a)) + &t2a;
    let quad = &(&(&(&b.pow(2) * tt) - &(&(t1 * &t2a) * b).scale_int(2)) - &(&t2a * b)) + &t2a.pow(2);
    let qd = quad.pow(d);
    Dnm {
        d: (&lin * &qd).scale_int(2),
        n: &(&(&(t1 * &t2a) + &t2a) - &(b * tt)) * &qd,
        m: &lin * &qd,
    }
}

/// `D_{2n}, N_{2n}, M_{2n}` via the recurrence `X_{2i} = X'_{2i} + X_{2(i−1)}`.
pub fn build_dnm<D: Domain>(params: &FamilyParams, k: &D) -> Result<Dnm<D>, FamilyError> {
    params.validate()?;
    let r = Ring::new(&t_ctx(params.n), k);
    let (tt, mut acc) = dnm_base(&r, params.d);
    for i in 2..=params.n {
        let step = dnm_step(&r, &tt, i, params.d);
        acc = Dnm { d: &acc.d + &step.d, n: &acc.n + &step.n, m: &acc.m + &step.m };
    }
    Ok(acc)
}

/// Alternate closed forms of `D_4, N_4, M_4` with the
/// exponent `1+2d` on `t1²+t1+1` in `D_4`.
pub fn dnm_closed_form_n2<D: Domain>(d: u32, k: &D) -> Dnm<D> {
    let r = Ring::new(&t_ctx(2), k);
    let (tt, _) = dnm_base(&r, d);
    let step = dnm_step(&r, &tt, 2, d);
    let (t1, t2) = (r.v(1), r.v(2));
    let lin = &t1.scale_int(2) + &r.int(1);
    let t2p = t2.pow(2 * d + 1);
    Dnm {
        d: &step.d + &(&(&lin * &t2p) - &tt.pow(2 * d + 1)).scale_int(2),
        n: &step.n + &(&tt.pow(d + 1) - &t2p),
        m: &step.m + &(&(&lin * &t2p) - &tt.pow(d + 1)),
    }
}

/// The map `ℙ^{2n}_t ⇢ X` induced by the affine parametrization through the
/// third root of the line pencil, after clearing `2(t1²+t1+1)` and
/// homogenizing with `t0`.
pub fn build_phi_tilde<D: Domain>(params: &FamilyParams, k: &D) -> Result<RationalMap<D>, FamilyError> {
    require_char_not(k, &[2, 3])?;
    let dnm = build_dnm(params, k)?;
    let n = params.n;
    let r = Ring::new(&t_ctx(n), k);
    let (t1, t2) = (r.v(1), r.v(2));
    let tt = &(&t1.pow(2) + t1) + &r.int(1);
    let mut real = vec![t2 * &(t1 - &r.int(1)), (t2 * &(t1 + &r.int(2))).neg()];
    let mut diff = vec![t2 * &(t1 + &r.int(1)), t1 * t2];
    for i in 0..n - 1 {
        let (a, b) = (r.v(2 * i + 3), r.v(2 * i + 4));
        let t2a = t2 * a;
        real.push(&(&t2a * &(t1 + &r.int(2))) - &(b * &tt));
        real.push(&(&t2a * &(&t1.scale_int(2) + &r.int(1))) - &(b * &tt).scale_int(2));
        diff.push(&(b * &tt) - &(t1 * &t2a));
        diff.push(t2a);
    }
    let mut affine = Vec::with_capacity(2 * n + 2);
    for (re, e) in real.iter().zip(&diff) {
        let num = &(re * &dnm.m) - &(&dnm.n * e).scale_int(3);
        let q = num.div_exact(&tt).ok_or(FamilyError::InvalidParams("numerator not divisible by t1^2+t1+1".into()))?;
        affine.push(r.half(&q)?);
    }
    affine.push(r.half(&(&dnm.m + &dnm.n.scale_int(3)))?);
    affine.push(dnm.m.clone());
    let deg = affine.iter().filter_map(MPoly::total_degree).max().unwrap_or(0);
    let comps = affine.iter().map(|p| p.homogenize(0, deg)).collect::<Result<Vec<_>, _>>()?;
    Ok(RationalMap::from_components(comps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rationals;
    use crate::mpoly::parse_poly;

    #[test]
    fn theta_last_component() {
        let th = build_theta(2, &Rationals).unwrap();
        let x = th.component(4);
        assert_eq!(x, &parse_poly(x.ctx(), &Rationals, "x4^2 - x4*x5 + x5^2").unwrap());
        assert_eq!(th.eval(&[0, 0, 0, 0, 1, 1].map(|c| Rationals.from_int(c))).unwrap()[4], Rationals.one());
    }

    #[test]
    fn h_small_case() {
        let h = build_h(1, &Rationals).unwrap();
        let ctx = h.source().clone();
        let expect = ["2*u2", "2*u0 - u1", "u1"].map(|s| parse_poly(&ctx, &Rationals, s).unwrap());
        assert_eq!(h.components(), &expect);
    }

    #[test]
    fn n1_alpha_is_t0_times_conics() {
        let (alpha, _) = build_alpha_beta(1, &Rationals).unwrap();
        let ctx = alpha.source().clone();
        let conics = ["-2*(t0^2+t0*t1+t1^2)", "t2*(2*t0+t1)", "t1*t2"];
        for (c, s) in alpha.components().iter().zip(conics) {
            assert_eq!(c, &(&MPoly::var(&ctx, &Rationals, 0) * &parse_poly(&ctx, &Rationals, s).unwrap()));
        }
    }

    #[test]
    fn n2_closed_forms() {
        let k = Rationals;
        let rec = build_dnm(&FamilyParams::new(2, 1), &k).unwrap();
        let closed = dnm_closed_form_n2(1, &k);
        assert_eq!(rec.n, closed.n);
        assert_eq!(rec.m, closed.m);
        assert_ne!(rec.d, closed.d);
    }
}
