use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{Domain, FiniteField, QuadRational, QuadraticRationals};
use crate::families::{build_ab, FamilyParams};
use crate::mpoly::{MPoly, RationalMap};

use super::{witness_point, CheckParams, Mode, VerificationResult, VerifyConfig};

/// Uniform nonzero vector of length `len` over `k`.
pub fn sample_projective(k: &FiniteField, len: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let q = k.q() as u32;
    loop {
        let v: Vec<u32> = (0..len).map(|_| rng.gen_range(0..q)).collect();
        if v.iter().any(|&c| c != 0) {
            return v;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericOutcome {
    pub skips: usize,
    pub result: Result<(), String>,
}

fn proportional(k: &FiniteField, a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (i + 1..a.len()).all(|j| k.mul(&a[i], &b[j]) == k.mul(&a[j], &b[i])))
}

/// Applies `first` and then `second` to random points and checks the result
/// is projectively equal to the input. Points where either map has all
/// components zero are skipped.
pub fn verify_composition_numeric(
    first: &RationalMap<FiniteField>,
    second: &RationalMap<FiniteField>,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> NumericOutcome {
    let k = first.domain();
    let mut skips = 0;
    for _ in 0..trials {
        let p = sample_projective(k, first.source_len(), rng);
        let step = |m: &RationalMap<FiniteField>, x: &[u32]| m.eval(x).map_err(|e| e.to_string());
        let y = match step(first, &p) {
            Ok(y) => y,
            Err(e) => return NumericOutcome { skips, result: Err(e) },
        };
        if y.iter().all(|c| *c == 0) {
            skips += 1;
            continue;
        }
        let z = match step(second, &y) {
            Ok(z) => z,
            Err(e) => return NumericOutcome { skips, result: Err(e) },
        };
        if z.iter().all(|c| *c == 0) {
            skips += 1;
            continue;
        }
        if !proportional(k, &p, &z) {
            return NumericOutcome { skips, result: Err(format!("roundtrip moves {}", witness_point(k, &p))) };
        }
    }
    let result = if skips == trials && trials > 0 { Err("all samples degenerate".into()) } else { Ok(()) };
    NumericOutcome { skips, result }
}

/// `hyper ∘ map` vanishes at `cfg.trials` random points.
pub(super) fn numeric_membership(
    map: &RationalMap<FiniteField>,
    hyper: &MPoly<FiniteField>,
    cfg: &VerifyConfig,
    check: &str,
) -> Result<(), String> {
    let k = map.domain();
    let mut rng = cfg.rng_for(check);
    for _ in 0..cfg.trials {
        let p = sample_projective(k, map.source_len(), &mut rng);
        let img = map.eval(&p).map_err(|e| e.to_string())?;
        if hyper.evaluate(&img).map_err(|e| e.to_string())? != 0 {
            return Err(format!("image of {} is off the hypersurface", witness_point(k, &p)));
        }
    }
    Ok(())
}

/// All 2×2 minors of the Jacobian of `(a, b)` at `pt`.
fn jacobian_minors<D: Domain>(grads: &[[MPoly<D>; 2]], pt: &[D::Elem]) -> Result<Vec<D::Elem>, String> {
    let k = grads[0][0].domain().clone();
    let vals: Vec<[D::Elem; 2]> = grads
        .iter()
        .map(|[ga, gb]| Ok([ga.evaluate(pt)?, gb.evaluate(pt)?]))
        .collect::<Result<_, crate::mpoly::PolyError>>()
        .map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            out.push(k.sub(&k.mul(&vals[i][0], &vals[j][1]), &k.mul(&vals[j][0], &vals[i][1])));
        }
    }
    Ok(out)
}

fn gradients<D: Domain>(a: &MPoly<D>, b: &MPoly<D>) -> Vec<[MPoly<D>; 2]> {
    (0..a.ctx().len()).map(|i| [a.partial_derivative(i), b.partial_derivative(i)]).collect()
}

/// Points of the singular locus: `u0 = 0` and `u_{2i+1} = ε_i ξ u_{2i+2}`.
/// For `d = 1` all signs agree (one of the two conjugate planes); otherwise
/// they are drawn independently.
fn sample_z_point(n: usize, d: u32, rng: &mut ChaCha8Rng) -> Vec<QuadRational> {
    let mut pt = vec![QuadRational::from_ints(0, 0); 2 * n + 1];
    let common = if rng.gen_bool(0.5) { 1 } else { -1 };
    for i in 0..n {
        let v = loop {
            let v: i64 = rng.gen_range(-9..=9);
            if v != 0 || i > 0 {
                break v;
            }
        };
        let eps = if d == 1 { common } else if rng.gen_bool(0.5) { 1 } else { -1 };
        pt[2 * i + 1] = QuadRational::from_ints(0, eps * v);
        pt[2 * i + 2] = QuadRational::from_ints(v, 0);
    }
    pt
}

/// A point of `{A̅ = B̅ = 0}` over 𝔽_p with random `u1 … u_{2n−1}`. Returns
/// `None` when the random slice has no rational point.
fn sample_y_point(k: &FiniteField, a: &MPoly<FiniteField>, b: &MPoly<FiniteField>, n: usize, d: u32, rng: &mut ChaCha8Rng) -> Option<Vec<u32>> {
    let q = k.q() as u32;
    let mut pt: Vec<u32> = (0..2 * n + 1).map(|_| rng.gen_range(0..q)).collect();
    // A − B does not involve u0, so solve it for u_{2n} first
    let diff = a - b;
    pt[0] = 0;
    let start = rng.gen_range(0..q);
    let last = (0..q).map(|t| (start + t) % q).find(|&t| {
        pt[2 * n] = t;
        diff.evaluate(&pt).ok() == Some(0)
    })?;
    pt[2 * n] = last;
    let rest = k.neg(&a.evaluate(&pt).ok()?);
    let e = 2 * d as u64 + 1;
    let start = rng.gen_range(0..q);
    let u0 = (0..q).map(|t| (start + t) % q).find(|t| k.pow(t, e) == rest)?;
    pt[0] = u0;
    Some(pt)
}

fn on_z(k: &FiniteField, n: usize, pt: &[u32]) -> bool {
    pt[0] == 0
        && (0..n).all(|i| {
            let (u, v) = (pt[2 * i + 1], pt[2 * i + 2]);
            k.add(&k.mul(&u, &u), &k.mul(&k.from_int(3), &k.mul(&v, &v))) == 0
        })
}

/// Jacobian minors of `(A̅, B̅)` vanish on sampled singular points over ℚ(ξ)
/// and not all of them vanish on sampled points of `Y` over 𝔽_p off the locus.
pub fn verify_singular_locus(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let params = CheckParams { n, d, field: Some("Q(xi)".into()), seed: Some(cfg.seed) };
    let res = VerificationResult::new("singular_locus", params, Mode::Numeric);
    if n < 2 {
        return res.inapplicable("the singular locus is empty of positive-dimensional components for n = 1");
    }
    let fp = FamilyParams::new(n, d);
    let mut rng = cfg.rng_for("singular_locus");
    let run = |rng: &mut ChaCha8Rng| -> Result<(usize, usize, usize), String> {
        let qk = QuadraticRationals;
        let (a, b) = build_ab(&fp, &qk).map_err(|e| e.to_string())?;
        let grads = gradients(&a, &b);
        for _ in 0..cfg.samples {
            let pt = sample_z_point(n, d, rng);
            if a.evaluate(&pt).map_err(|e| e.to_string())? != qk.zero() || b.evaluate(&pt).map_err(|e| e.to_string())? != qk.zero() {
                return Err(format!("sampled point {} is not on Y", witness_point(&qk, &pt)));
            }
            if jacobian_minors(&grads, &pt)?.iter().any(|m| !qk.is_zero(m)) {
                return Err(format!("a Jacobian minor is nonzero at {}", witness_point(&qk, &pt)));
            }
        }
        let k = FiniteField::prime(cfg.numeric_prime).map_err(|e| e.to_string())?;
        let (a, b) = build_ab(&fp, &k).map_err(|e| e.to_string())?;
        let grads = gradients(&a, &b);
        let (mut found, mut attempts, mut on_locus) = (0, 0, 0);
        while found < cfg.samples {
            attempts += 1;
            if attempts > 100 * cfg.samples.max(1) {
                return Err(format!("sampling failure: {found} points of Y after {attempts} attempts"));
            }
            let Some(pt) = sample_y_point(&k, &a, &b, n, d, rng) else { continue };
            if on_z(&k, n, &pt) {
                on_locus += 1;
                continue;
            }
            found += 1;
            if jacobian_minors(&grads, &pt)?.iter().all(|m| *m == 0) {
                return Err(format!("all Jacobian minors vanish at {} over F_{}", witness_point(&k, &pt), k.q()));
            }
        }
        Ok((found, attempts, on_locus))
    };
    match run(&mut rng) {
        Ok((found, attempts, on_locus)) => res
            .detail("locus_samples", cfg.samples)
            .detail("generic_samples", found)
            .detail("generic_attempts", attempts)
            .detail("generic_on_locus", on_locus)
            .detail("generic_field", format!("F_{}", cfg.numeric_prime)),
        Err(w) => res.fail(w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn samples_are_nonzero_and_in_range() {
        let k = FiniteField::new(2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let v = sample_projective(&k, 2, &mut rng);
            assert!(v.iter().any(|&c| c != 0));
            assert!(v.iter().all(|&c| (c as u64) < k.q()));
        }
    }

    #[test]
    fn proportionality_is_projective() {
        let k = FiniteField::prime(7).unwrap();
        assert!(proportional(&k, &[1, 2, 3], &[3, 6, 2]));
        assert!(!proportional(&k, &[1, 2, 3], &[1, 2, 4]));
    }
}
