use crate::exactalg::{Domain, FiniteField, QuadRational, QuadraticRationals, Rationals};
use crate::families::{
    alpha_plus_sign, build_ab, build_alpha_beta, build_char_two_maps, build_cox_model, build_cremona, build_dnm, build_h,
    build_line_pencil, build_phi_bar, build_phi_change, build_phi_tilde, build_s_d, build_s_d_general, build_theta,
    build_x, build_x_delta, galois_swap, phi_bar_from, CharMode, FamilyParams, LinePencil,
};
use crate::mpoly::{multiplicity_at, MPoly, MultiDegree, RationalMap};

use super::linear_system::verify_linear_system_dim;
use super::numeric::{numeric_membership, sample_projective, verify_composition_numeric, verify_singular_locus};
use super::{witness_point, witness_poly, CheckParams, Mode, VerificationResult, VerifyConfig};

/// Substitutes the components of `map` into `hyper` and checks for zero.
pub fn verify_membership<D: Domain>(map: &RationalMap<D>, hyper: &MPoly<D>) -> Result<(), String> {
    let pulled = map.pullback(hyper).map_err(|e| e.to_string())?;
    if pulled.is_zero() {
        Ok(())
    } else {
        Err(format!("pullback is nonzero: {}", witness_poly(&pulled)))
    }
}

/// Checks `outer ∘ inner = s · id` for one polynomial `s`, which is returned.
pub fn verify_composition<D: Domain>(outer: &RationalMap<D>, inner: &RationalMap<D>) -> Result<MPoly<D>, String> {
    if inner.source_len() != outer.target_len() {
        return Err(format!(
            "dimension mismatch: composite has {} components on {} coordinates",
            outer.target_len(),
            inner.source_len()
        ));
    }
    let comp = outer.compose(inner).map_err(|e| e.to_string())?;
    let ctx = inner.source().clone();
    let k = inner.domain();
    let vars = MPoly::vars(&ctx, k);
    let pivot = comp.components().iter().position(|c| !c.is_zero()).ok_or("composite is zero")?;
    let s = comp
        .component(pivot)
        .div_exact(&vars[pivot])
        .ok_or_else(|| format!("component {pivot} is not divisible by {}", ctx.name(pivot)))?;
    for (j, c) in comp.components().iter().enumerate() {
        let expect = &s * &vars[j];
        if *c != expect {
            return Err(format!("component {j} differs from s*{}: {}", ctx.name(j), witness_poly(&(c - &expect))));
        }
    }
    Ok(s)
}

/// Checks that `outer ∘ inner` agrees with the identity on the hypersurface
/// `hyper`: every minor `c_i x_j − c_j x_i` is divisible by `hyper`.
pub fn verify_composition_mod<D: Domain>(outer: &RationalMap<D>, inner: &RationalMap<D>, hyper: &MPoly<D>) -> Result<(), String> {
    let comp = outer.compose(inner).map_err(|e| e.to_string())?;
    let vars = MPoly::vars(inner.source(), inner.domain());
    let c = comp.components();
    if c.len() != vars.len() {
        return Err("dimension mismatch".into());
    }
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let minor = &(&c[i] * &vars[j]) - &(&c[j] * &vars[i]);
            if minor.div_exact(hyper).is_none() {
                return Err(format!("minor ({i},{j}) is not in the ideal: {}", witness_poly(&minor)));
            }
        }
    }
    Ok(())
}

fn line_factorization_holds<D: Domain>(p: &LinePencil<D>) -> Result<(), String> {
    let lhs = p.f_u().map_err(|e| e.to_string())?;
    let diff = &lhs - &p.factored();
    if diff.is_zero() {
        Ok(())
    } else {
        Err(format!("F_u - factored form = {}", witness_poly(&diff)))
    }
}

fn line_factorization_numeric(p: &LinePencil<FiniteField>, cfg: &VerifyConfig, check: &str) -> Result<(), String> {
    let k = p.a.domain();
    let mut rng = cfg.rng_for(check);
    for _ in 0..cfg.trials {
        let pt = sample_projective(k, p.ctx.len(), &mut rng);
        let (lhs, rhs) = p.values_at(&pt).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("sides differ at {}", witness_point(k, &pt)));
        }
    }
    Ok(())
}

/// `F_u(λ) = ξ(−3)^d λ^d (λ−1)^d ((A−ξB)/2 − λA)` on the pencil of lines
/// through conjugate points of the two planes.
pub fn verify_line_factorization(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let params = FamilyParams::new(n, d);
    let name = "line_factorization";
    if cfg.budget.allows(n, d) {
        let res = VerificationResult::new(name, cp(n, d, Some("Q(xi)")), Mode::Symbolic);
        match build_line_pencil(&params, &QuadraticRationals) {
            Ok(p) => res.and(line_factorization_holds(&p)),
            Err(e) => res.fail(e.to_string()),
        }
    } else {
        let k = FiniteField::prime(cfg.numeric_prime).expect("prime");
        let res = VerificationResult::new(name, cp_field(n, d, &k, cfg), Mode::Numeric);
        match build_line_pencil(&params, &k) {
            Ok(p) => res.and(line_factorization_numeric(&p, cfg, name)),
            Err(e) => res.fail(e.to_string()),
        }
    }
}

/// `σ(S) = S`, `σ(D) = −D`, also with formal coefficients `a_j`.
pub fn verify_galois_symmetry(n: usize, d: u32) -> VerificationResult {
    let params = FamilyParams::new(n, d);
    let res = VerificationResult::new("galois_symmetry", cp(n, d, Some("Q")), Mode::Symbolic);
    let run = || -> Result<(), String> {
        let e = |x: crate::families::FamilyError| x.to_string();
        for (label, sd) in [
            ("plain", build_s_d(&params, &Rationals).map_err(e)?),
            ("general", build_s_d_general(&params, &Rationals).map_err(e)?),
        ] {
            let s = galois_swap(&sd.s, n + 1).map_err(e)?;
            if s != sd.s {
                return Err(format!("{label}: sigma(S) - S = {}", witness_poly(&(&s - &sd.s))));
            }
            let dd = galois_swap(&sd.d, n + 1).map_err(e)?;
            if dd != sd.d.neg() {
                return Err(format!("{label}: sigma(D) + D = {}", witness_poly(&(&dd + &sd.d))));
            }
        }
        Ok(())
    };
    res.and(run())
}

/// Multidegrees of `Ŝ`, `D̂` and the relation `S(w·z) = w₊^d w₋^d Ŝ`.
pub fn verify_cox_grading(n: usize, d: u32) -> VerificationResult {
    let res = VerificationResult::new("cox_grading", cp(n, d, Some("Q(xi)")), Mode::Symbolic);
    let model = match build_cox_model(&FamilyParams::new(n, d), &QuadraticRationals) {
        Ok(m) => m,
        Err(e) => return res.fail(e.to_string()),
    };
    let di = d as i64;
    let h = MultiDegree(1, 0, 0);
    let e1 = MultiDegree(0, 1, 0);
    let e2 = MultiDegree(0, 0, 1);
    let class = h.scaled(2 * di + 1) + e1.scaled(-di) + e2.scaled(-di);
    let expected = MultiDegree(2 * di + 1, -di, -di);
    let s_deg = model.s_hat.multi_degree(&model.grading);
    let d_deg = model.d_hat.multi_degree(&model.grading);
    let run = || -> Result<(), String> {
        if class != expected {
            return Err(format!("divisor class {class} != {expected}"));
        }
        if s_deg != Some(expected) || d_deg != Some(expected) {
            return Err(format!("multidegrees {s_deg:?}, {d_deg:?} != {expected}"));
        }
        // S(y) pulled back along y_{2i} = w+ z_{2i}, y_{2i+1} = w- z_{2i+1}
        let sd = build_s_d(&FamilyParams::new(n, d), &QuadraticRationals).map_err(|e| e.to_string())?;
        let k = QuadraticRationals;
        let z = MPoly::vars(&model.ctx, &k);
        let (wp, wm) = (&z[model.wp()], &z[model.wm()]);
        let images: Vec<_> = (0..2 * n + 2).map(|i| if i % 2 == 0 { wp * &z[i] } else { wm * &z[i] }).collect();
        let w = &wp.pow(d) * &wm.pow(d);
        let s_pull = sd.s.compose(&images).map_err(|e| e.to_string())?;
        let d_pull = sd.d.compose(&images).map_err(|e| e.to_string())?;
        if s_pull.multi_degree(&model.grading) != Some(MultiDegree(2 * di + 1, 0, 0)) {
            return Err("pulled-back S is not of class (2d+1)H".into());
        }
        if s_pull != &w * &model.s_hat || d_pull != &w * &model.d_hat {
            return Err("S or D is not w+^d w-^d times its strict transform".into());
        }
        let wrong = wp * &model.s_hat;
        if wrong.multi_degree(&model.grading) == Some(expected) {
            return Err("grading does not separate w+ * S-hat".into());
        }
        Ok(())
    };
    res.detail("multidegree", expected).and(run())
}

fn cp(n: usize, d: u32, field: Option<&str>) -> CheckParams {
    CheckParams { n, d, field: field.map(str::to_string), seed: None }
}

fn cp_field(n: usize, d: u32, k: &FiniteField, cfg: &VerifyConfig) -> CheckParams {
    CheckParams { n, d, field: Some(k.spec().to_string()), seed: Some(cfg.seed) }
}

fn membership(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let params = FamilyParams::new(n, d);
    if cfg.budget.allows(n, d) {
        let res = VerificationResult::new("membership", cp(n, d, Some("Q")), Mode::Symbolic);
        let run = || -> Result<(), String> {
            let phi = build_phi_bar(&params, &Rationals).map_err(|e| e.to_string())?;
            let x = build_x(&params, &Rationals).map_err(|e| e.to_string())?;
            verify_membership(&phi, &x)
        };
        res.and(run())
    } else {
        let k = FiniteField::prime(cfg.numeric_prime).expect("prime");
        let res = VerificationResult::new("membership", cp_field(n, d, &k, cfg), Mode::Numeric);
        let run = || -> Result<(), String> {
            let phi = build_phi_bar(&params, &k).map_err(|e| e.to_string())?;
            let x = build_x(&params, &k).map_err(|e| e.to_string())?;
            numeric_membership(&phi, &x, cfg, "membership")
        };
        res.and(run())
    }
}

fn membership_char2(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let params = FamilyParams::new(n, d).with_char_mode(CharMode::Char2);
    let symbolic = cfg.budget.allows(n, d);
    let k = if symbolic { FiniteField::prime(2) } else { FiniteField::new(2, 5) }.expect("field");
    let mode = if symbolic { Mode::Symbolic } else { Mode::Numeric };
    let res = VerificationResult::new("membership_char2", cp_field(n, d, &k, cfg), mode);
    let run = || -> Result<(), String> {
        let maps = build_char_two_maps(&params, &k).map_err(|e| e.to_string())?;
        let x = build_x(&params, &k).map_err(|e| e.to_string())?;
        if symbolic {
            verify_membership(&maps.g, &x)
        } else {
            numeric_membership(&maps.g, &x, cfg, "membership_char2")
        }
    };
    res.and(run())
}

fn composition_cremona() -> VerificationResult {
    let res = VerificationResult::new("composition_cremona", cp(1, 1, Some("Q")), Mode::Symbolic);
    let (cr, cr_inv) = match build_cremona(&Rationals) {
        Ok(p) => p,
        Err(e) => return res.fail(e.to_string()),
    };
    match (verify_composition(&cr_inv, &cr), verify_composition(&cr, &cr_inv)) {
        (Ok(s), Ok(t)) => res
            .detail("scalar", witness_poly(&s))
            .detail("scalar_degree", s.total_degree())
            .detail("reverse_scalar_degree", t.total_degree())
            .and(if s.homogeneous_degree() == Some(3) { Ok(()) } else { Err("scalar factor is not a cubic".into()) }),
        (Err(w), _) | (_, Err(w)) => res.fail(w),
    }
}

fn composition_alpha_beta(n: usize, cfg: &VerifyConfig) -> VerificationResult {
    if n <= cfg.budget.max_n.max(4) {
        let res = VerificationResult::new("composition_alpha_beta", cp(n, 1, Some("Q")), Mode::Symbolic);
        let (alpha, beta) = match build_alpha_beta(n, &Rationals) {
            Ok(p) => p,
            Err(e) => return res.fail(e.to_string()),
        };
        let plus = alpha_plus_sign(n, &Rationals).ok().map(|a| verify_composition(&beta, &a).is_ok());
        match (verify_composition(&beta, &alpha), verify_composition(&alpha, &beta)) {
            (Ok(s), Ok(t)) => res
                .detail("scalar", witness_poly(&s))
                .detail("reverse_scalar", witness_poly(&t))
                .detail("plus_sign_composes", plus),
            (Err(w), _) | (_, Err(w)) => res.fail(w),
        }
    } else {
        let k = FiniteField::prime(cfg.numeric_prime).expect("prime");
        let res = VerificationResult::new("composition_alpha_beta", cp_field(n, 1, &k, cfg), Mode::Numeric);
        let (alpha, beta) = match build_alpha_beta(n, &k) {
            Ok(p) => p,
            Err(e) => return res.fail(e.to_string()),
        };
        let mut rng = cfg.rng_for("composition_alpha_beta");
        let out = verify_composition_numeric(&alpha, &beta, cfg.trials, &mut rng);
        res.detail("skips", out.skips).and(out.result)
    }
}

fn h_theta<D: Domain>(n: usize, k: &D) -> Result<RationalMap<D>, String> {
    let h = build_h(n, k).map_err(|e| e.to_string())?;
    let theta = build_theta(n, k).map_err(|e| e.to_string())?;
    h.compose(&theta).map_err(|e| e.to_string())
}

fn composition_theta(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let params = FamilyParams::new(n, d);
    if cfg.budget.allows(n, d) {
        let res = VerificationResult::new("composition_theta", cp(n, d, Some("Q")), Mode::Symbolic);
        let run = || -> Result<(MPoly<Rationals>, bool), String> {
            let phi = build_phi_bar(&params, &Rationals).map_err(|e| e.to_string())?;
            let ht = h_theta(n, &Rationals)?;
            let s = verify_composition(&ht, &phi)?;
            // the reverse composite is only the identity on X; its minors are checked
            // by exact division, affordable on the smallest cases
            let reverse = n == 1 && d == 1;
            if reverse {
                let x = build_x(&params, &Rationals).map_err(|e| e.to_string())?;
                verify_composition_mod(&phi, &ht, &x)?;
            }
            Ok((s, reverse))
        };
        match run() {
            Ok((s, reverse)) => res.detail("scalar_degree", s.total_degree()).detail("reverse_checked_mod_x", reverse),
            Err(w) => res.fail(w),
        }
    } else {
        composition_numeric(n, d, cfg, "composition_theta")
    }
}

fn composition_numeric(n: usize, d: u32, cfg: &VerifyConfig, name: &str) -> VerificationResult {
    let k = FiniteField::prime(cfg.numeric_prime).expect("prime");
    let res = VerificationResult::new(name, cp_field(n, d, &k, cfg), Mode::Numeric);
    let run = || -> Result<(RationalMap<FiniteField>, RationalMap<FiniteField>), String> {
        let phi = build_phi_bar(&FamilyParams::new(n, d), &k).map_err(|e| e.to_string())?;
        Ok((phi, h_theta(n, &k)?))
    };
    match run() {
        Ok((phi, ht)) => {
            let mut rng = cfg.rng_for(name);
            let out = verify_composition_numeric(&phi, &ht, cfg.trials, &mut rng);
            let res = res.detail("skips", out.skips).detail("trials", cfg.trials).and(out.result);
            let skip_ok = if out.skips * 10 < cfg.trials { Ok(()) } else { Err(format!("{} of {} samples skipped", out.skips, cfg.trials)) };
            res.and(skip_ok)
        }
        Err(w) => res.fail(w),
    }
}

fn composition_char2_numeric(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let k = FiniteField::new(2, 5).expect("F_32");
    let res = VerificationResult::new("composition_char2_numeric", cp_field(n, d, &k, cfg), Mode::Numeric);
    let run = || -> Result<(RationalMap<FiniteField>, RationalMap<FiniteField>), String> {
        let maps = build_char_two_maps(&FamilyParams::new(n, d).with_char_mode(CharMode::Char2), &k).map_err(|e| e.to_string())?;
        let theta = build_theta(n, &k).map_err(|e| e.to_string())?;
        Ok((maps.g, theta))
    };
    match run() {
        Ok((g, theta)) => {
            let mut rng = cfg.rng_for("composition_char2_numeric");
            let out = verify_composition_numeric(&g, &theta, cfg.trials, &mut rng);
            let skip_ok = if out.skips * 10 < cfg.trials { Ok(()) } else { Err(format!("{} of {} samples skipped", out.skips, cfg.trials)) };
            res.detail("skips", out.skips).detail("trials", cfg.trials).and(out.result).and(skip_ok)
        }
        Err(w) => res.fail(w),
    }
}

fn coordinate_change(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let params = FamilyParams::new(n, d);
    let k = QuadraticRationals;
    let symbolic = cfg.budget.allows(n, d) || n + d as usize <= 5;
    if !symbolic {
        return coordinate_change_numeric(n, d, cfg);
    }
    let res = VerificationResult::new("coordinate_change", cp(n, d, Some("Q(xi)")), Mode::Symbolic);
    let run = || -> Result<(), String> {
        let e = |x: crate::families::FamilyError| x.to_string();
        let x = build_x(&params, &k).map_err(e)?;
        let (fwd, back) = build_phi_change(n, &k).map_err(e)?;
        let sd = build_s_d(&params, &k).map_err(e)?;
        let xi = QuadRational::from_ints(0, 1);
        let target = (&sd.d.scale_int(3) - &sd.s.scale(&xi)).scale(&k.div(&xi, &k.from_int(6)).unwrap());
        let pulled = back.pullback(&x).map_err(|e| e.to_string())?;
        if pulled != target {
            return Err(format!("X(Phi^-1 y) - (xi/6)(3D - xi S) = {}", witness_poly(&(&pulled - &target))));
        }
        let ident = back.compose(&fwd).map_err(|e| e.to_string())?;
        let vars = MPoly::vars(fwd.source(), &k);
        if ident.components() != vars.as_slice() {
            return Err("Phi^-1 o Phi is not the identity".into());
        }
        // F-hat specializes to 3D - xi S at w+ = w- = 1
        let model = build_cox_model(&params, &k).map_err(e)?;
        let f_hat = model.f_hat.ok_or("xi missing")?;
        let y = MPoly::vars(sd.s.ctx(), &k);
        let mut images = y.clone();
        images.push(MPoly::one(sd.s.ctx(), &k));
        images.push(MPoly::one(sd.s.ctx(), &k));
        let spec = f_hat.compose(&images).map_err(|e| e.to_string())?;
        if spec != &sd.d.scale_int(3) - &sd.s.scale(&xi) {
            return Err("F-hat does not specialize to 3D - xi S".into());
        }
        Ok(())
    };
    res.and(run())
}

fn coordinate_change_numeric(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let k = FiniteField::prime(cfg.numeric_prime).expect("prime");
    let res = VerificationResult::new("coordinate_change", cp_field(n, d, &k, cfg), Mode::Numeric);
    let params = FamilyParams::new(n, d);
    let run = || -> Result<(), String> {
        let e = |x: crate::families::FamilyError| x.to_string();
        let x = build_x(&params, &k).map_err(e)?;
        let (_, back) = build_phi_change(n, &k).map_err(e)?;
        let sd = build_s_d(&params, &k).map_err(e)?;
        let xi = k.sqrt_minus_three().ok_or("xi missing")?;
        let c = k.div(&xi, &k.from_int(6)).ok_or("6 not invertible")?;
        let mut rng = cfg.rng_for("coordinate_change");
        for _ in 0..cfg.trials {
            let y = sample_projective(&k, 2 * n + 2, &mut rng);
            let lhs = x.evaluate(&back.eval(&y).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let s = sd.s.evaluate(&y).map_err(|e| e.to_string())?;
            let dv = sd.d.evaluate(&y).map_err(|e| e.to_string())?;
            let rhs = k.mul(&c, &k.sub(&k.mul(&k.from_int(3), &dv), &k.mul(&xi, &s)));
            if lhs != rhs {
                return Err(format!("mismatch at {}", witness_point(&k, &y)));
            }
        }
        Ok(())
    };
    res.and(run())
}

fn dnm_identity(n: usize, d: u32) -> VerificationResult {
    let res = VerificationResult::new("dnm_identity", cp(n, d, Some("Q")), Mode::Symbolic);
    match build_dnm(&FamilyParams::new(n, d), &Rationals) {
        Ok(dnm) => {
            let diff = &dnm.d - &dnm.m.scale_int(2);
            res.detail("terms_d", dnm.d.num_terms())
                .and(if diff.is_zero() { Ok(()) } else { Err(format!("D - 2M = {}", witness_poly(&diff))) })
        }
        Err(e) => res.fail(e.to_string()),
    }
}

fn phi_tilde(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let k = FiniteField::prime(cfg.numeric_prime).expect("prime");
    let res = VerificationResult::new("phi_tilde", cp_field(n, d, &k, cfg), Mode::Numeric);
    let params = FamilyParams::new(n, d);
    let expected = if n == 1 { 2 * d + 2 } else { 4 * d + 4 };
    let run = || -> Result<u32, String> {
        let map = build_phi_tilde(&params, &k).map_err(|e| e.to_string())?;
        let deg = map.total_degree().ok_or("no total degree")?;
        if deg != expected {
            return Err(format!("degree {deg}, expected {expected}"));
        }
        let x = build_x(&params, &k).map_err(|e| e.to_string())?;
        numeric_membership(&map, &x, cfg, "phi_tilde")?;
        Ok(deg)
    };
    match run() {
        Ok(deg) => res.detail("degree", deg),
        Err(w) => res.fail(w),
    }
}

fn homogeneity(n: usize, d: u32) -> VerificationResult {
    let res = VerificationResult::new("homogeneity", cp(n, d, Some("Q")), Mode::Symbolic);
    let params = FamilyParams::new(n, d);
    let run = || -> Result<Vec<(String, u32)>, String> {
        let e = |x: crate::families::FamilyError| x.to_string();
        let q = Rationals;
        let f2 = FiniteField::prime(2).expect("F_2");
        let mut seen = Vec::new();
        let mut expect = |label: &str, got: Option<u32>, want: u32| -> Result<(), String> {
            seen.push((label.to_string(), want));
            if got == Some(want) {
                Ok(())
            } else {
                Err(format!("{label}: degree {got:?}, expected {want}"))
            }
        };
        expect("X", build_x(&params, &q).map_err(e)?.homogeneous_degree(), 2 * d + 1)?;
        for delta in 1..=2 {
            expect("X_delta(d=5)", build_x_delta(n, 5, delta, &q).map_err(e)?.homogeneous_degree(), 1 + 4 * delta)?;
        }
        let (a, b) = build_ab(&params, &q).map_err(e)?;
        expect("A", a.homogeneous_degree(), 2 * d + 1)?;
        expect("B", b.homogeneous_degree(), 2 * d + 1)?;
        expect("phi_bar", build_phi_bar(&params, &q).map_err(e)?.total_degree(), 2 * d + 2)?;
        expect("theta", build_theta(n, &q).map_err(e)?.total_degree(), 2)?;
        expect("h", build_h(n, &q).map_err(e)?.total_degree(), 1)?;
        let (cr, cr_inv) = build_cremona(&q).map_err(e)?;
        expect("cr", cr.total_degree(), 2)?;
        expect("cr_inv", cr_inv.total_degree(), 2)?;
        let (alpha, beta) = build_alpha_beta(n, &q).map_err(e)?;
        expect("alpha", alpha.total_degree(), 3)?;
        expect("beta", beta.total_degree(), 2)?;
        let g = build_char_two_maps(&params.with_char_mode(CharMode::Char2), &f2).map_err(e)?.g;
        expect("g", g.total_degree(), 2 * d + 2)?;
        Ok(seen)
    };
    match run() {
        Ok(seen) => res.detail("degrees", seen),
        Err(w) => res.fail(w),
    }
}

/// `mult = d(2d+1)` at `[0 : … : 0 : ±ξ : 1]` on `{A̅ = B̅ = 0}`.
fn multiplicity(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let expected = d * (2 * d + 1);
    if cfg.budget.allows(n, d) {
        let k = QuadraticRationals;
        let res = VerificationResult::new("multiplicity", cp(n, d, Some("Q(xi)")), Mode::Symbolic);
        let pts: Vec<Vec<QuadRational>> = [1, -1]
            .iter()
            .map(|&s| {
                let mut p = vec![k.zero(); 2 * n + 1];
                p[2 * n - 1] = QuadRational::from_ints(0, s);
                p[2 * n] = k.one();
                p
            })
            .collect();
        multiplicity_points(res, &FamilyParams::new(n, d), &k, &pts, expected)
    } else {
        let k = FiniteField::prime(cfg.numeric_prime).expect("prime");
        let res = VerificationResult::new("multiplicity", cp_field(n, d, &k, cfg), Mode::Numeric);
        let xi = k.sqrt_minus_three().expect("xi in F_p");
        let pts: Vec<Vec<u32>> = [xi, k.neg(&xi)]
            .iter()
            .map(|x| {
                let mut p = vec![0; 2 * n + 1];
                p[2 * n - 1] = *x;
                p[2 * n] = 1;
                p
            })
            .collect();
        multiplicity_points(res, &FamilyParams::new(n, d), &k, &pts, expected)
    }
}

fn multiplicity_points<D: Domain>(
    res: VerificationResult,
    params: &FamilyParams,
    k: &D,
    pts: &[Vec<D::Elem>],
    expected: u32,
) -> VerificationResult {
    let (a, b) = match build_ab(params, k) {
        Ok(p) => p,
        Err(e) => return res.fail(e.to_string()),
    };
    let mut values = Vec::new();
    let mut certified = true;
    for p in pts {
        match multiplicity_at(&[a.clone(), b.clone()], p) {
            Ok(m) => {
                values.push(m.value);
                certified &= m.certified;
                if m.value != expected {
                    return res.fail(format!("multiplicity {} at {}, expected {expected}", m.value, witness_point(k, p)));
                }
            }
            Err(e) => return res.fail(format!("{e} at {}", witness_point(k, p))),
        }
    }
    res.detail("values", values).detail("certified", certified).detail("expected", expected)
}

/// Single-coefficient corruptions must be detected.
fn negative_controls(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let (n, d) = if cfg.budget.allows(n, d) { (n, d) } else { (1, 1) };
    let params = FamilyParams::new(n, d);
    let res = VerificationResult::new("negative_controls", cp(n, d, Some("Q")), Mode::Symbolic);
    let run = || -> Result<Vec<&'static str>, String> {
        let e = |x: crate::families::FamilyError| x.to_string();
        let q = Rationals;
        let mut detected = Vec::new();
        let (a, b) = build_ab(&params, &q).map_err(e)?;
        let bump = MPoly::from_terms(a.ctx(), &q, [(a.leading_term().unwrap().0.clone(), q.one())]);
        let x = build_x(&params, &q).map_err(e)?;
        let corrupted = phi_bar_from(&(&a + &bump), &b, n).map_err(e)?;
        if verify_membership(&corrupted, &x).is_ok() {
            return Err("membership accepted a corrupted A".into());
        }
        detected.push("membership");
        let mut pencil = build_line_pencil(&params, &QuadraticRationals).map_err(e)?;
        let lead = pencil.a.leading_term().unwrap().0.clone();
        pencil.a = &pencil.a + &MPoly::from_terms(&pencil.ctx, &QuadraticRationals, [(lead, QuadraticRationals.one())]);
        if line_factorization_holds(&pencil).is_ok() {
            return Err("line factorization accepted a corrupted A".into());
        }
        detected.push("line_factorization");
        let phi = build_phi_bar(&params, &q).map_err(e)?;
        let mut comps = phi.components().to_vec();
        comps.swap(0, 1);
        let swapped = RationalMap::from_components(comps).map_err(|e| e.to_string())?;
        if verify_composition(&h_theta(n, &q)?, &swapped).is_ok() {
            return Err("composition accepted phi_bar with two components swapped".into());
        }
        detected.push("composition_theta");
        if n >= 2 {
            let (_, beta) = build_alpha_beta(n, &q).map_err(e)?;
            let plus = alpha_plus_sign(n, &q).map_err(e)?;
            if verify_composition(&beta, &plus).is_ok() {
                return Err("alpha with the plus sign composes to the identity".into());
            }
            detected.push("alpha_sign");
        }
        Ok(detected)
    };
    match run() {
        Ok(det) => res.detail("detected", det),
        Err(w) => res.fail(w),
    }
}

pub(super) fn dispatch(name: &str, n: usize, d: u32, cfg: &VerifyConfig) -> Option<VerificationResult> {
    if n == 0 || d == 0 {
        let res = VerificationResult::new(name, cp(n, d, None), Mode::Symbolic);
        return Some(res.inapplicable("n and d must be at least 1"));
    }
    Some(match name {
        "line_factorization" => verify_line_factorization(n, d, cfg),
        "membership" => membership(n, d, cfg),
        "membership_char2" => membership_char2(n, d, cfg),
        "composition_cremona" => composition_cremona(),
        "composition_alpha_beta" => composition_alpha_beta(n, cfg),
        "composition_theta" => composition_theta(n, d, cfg),
        "composition_numeric" => composition_numeric(n, d, cfg, "composition_numeric"),
        "composition_char2_numeric" => composition_char2_numeric(n, d, cfg),
        "linear_system_dim" => verify_linear_system_dim(n, d, cfg),
        "galois_symmetry" => verify_galois_symmetry(n, d),
        "cox_grading" => verify_cox_grading(n, d),
        "coordinate_change" => coordinate_change(n, d, cfg),
        "dnm_identity" => dnm_identity(n, d),
        "phi_tilde" => phi_tilde(n, d, cfg),
        "homogeneity" => homogeneity(n, d),
        "singular_locus" => verify_singular_locus(n, d, cfg),
        "multiplicity" => multiplicity(n, d, cfg),
        "negative_controls" => negative_controls(n, d, cfg),
        _ => return None,
    })
}
