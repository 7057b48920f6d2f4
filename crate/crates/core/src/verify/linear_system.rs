use serde::Serialize;

use crate::exactalg::linalg::{mat_vec, rank};
use crate::exactalg::{Domain, FiniteField, QuadraticRationals};
use crate::families::{build_ab, build_phi_bar, FamilyParams};
use crate::mpoly::{MPoly, Monomial, VarContext};

use super::{witness_poly, CheckParams, Mode, VerificationResult, VerifyConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearSystemReport {
    /// Rank of the vanishing conditions on the `4n+2` coefficients.
    pub rank: usize,
    /// Dimension of the solution space.
    pub dimension: usize,
    pub phi_in_space: bool,
    /// Rank of the coefficient vectors of the `φ̄` components.
    pub phi_rank: usize,
}

/// Polynomial in `s0 … sn, v1 … vn` obtained by writing `u` in coordinates
/// adapted to the plane `u0 = 0, u_{2i+1} = −εξ u_{2i+2}`, which is `s = 0`.
fn adapted_images<D: Domain>(n: usize, eps: i64, k: &D) -> Result<Vec<MPoly<D>>, String> {
    let names: Vec<String> = (0..=n).map(|i| format!("s{i}")).chain((1..=n).map(|i| format!("v{i}"))).collect();
    let ctx = VarContext::new(names).map_err(|e| e.to_string())?;
    let xi = k.sqrt_minus_three().ok_or("no square root of -3")?;
    let exi = if eps > 0 { xi } else { k.neg(&xi) };
    let var = |i| MPoly::var(&ctx, k, i);
    let mut out = vec![var(0)];
    for i in 0..n {
        out.push(&var(i + 1) - &var(n + 1 + i).scale(&exi));
        out.push(var(n + 1 + i));
    }
    Ok(out)
}

fn truncate_s<D: Domain>(p: &MPoly<D>, n: usize, max: u32) -> MPoly<D> {
    p.filter_terms(|m| m.exps()[..=n].iter().sum::<u32>() <= max)
}

/// Coefficient vector of the linear form `l` in `u0 … u_{2n}`.
fn linear_coeffs<D: Domain>(l: &MPoly<D>) -> Vec<D::Elem> {
    let len = l.ctx().len();
    (0..len).map(|i| l.coeff(&Monomial::var(len, i))).collect()
}

/// The pairs `(L_A, L_B)` with `φ̄_j = L_A A̅ + L_B B̅`, as stacked coefficient vectors.
fn phi_vectors<D: Domain>(n: usize, k: &D) -> Result<Vec<Vec<D::Elem>>, String> {
    let ctx = crate::families::u_ctx(n);
    let half = k.half().ok_or("2 is not invertible")?;
    let v = |i| MPoly::var(&ctx, k, i);
    let mut pairs: Vec<(MPoly<D>, MPoly<D>)> = Vec::new();
    for i in 0..n {
        let (u, w) = (v(2 * i + 1), v(2 * i + 2));
        pairs.push(((&u - &w.scale_int(3)).scale(&half), (&u + &w).scale_int(-3).scale(&half)));
        pairs.push((u.clone(), w.scale_int(-3)));
    }
    pairs.push((v(0).scale(&half), v(0).scale_int(-3).scale(&half)));
    pairs.push((v(0), MPoly::zero(&ctx, k)));
    Ok(pairs
        .iter()
        .map(|(la, lb)| {
            let mut row = linear_coeffs(la);
            row.extend(linear_coeffs(lb));
            row
        })
        .collect())
}

/// Builds the conditions for `L_A A̅ + L_B B̅` to vanish to order `d+1` along
/// both conjugate planes and reports the solution space.
pub fn linear_system_rank<D: Domain>(n: usize, d: u32, k: &D) -> Result<LinearSystemReport, String> {
    let params = FamilyParams::new(n, d);
    let (a, b) = build_ab(&params, k).map_err(|e| e.to_string())?;
    let m = 2 * n + 1;
    let mut rows: Vec<Vec<D::Elem>> = Vec::new();
    for eps in [1, -1] {
        let images = adapted_images(n, eps, k)?;
        let sub = |p: &MPoly<D>| -> Result<MPoly<D>, String> {
            Ok(truncate_s(&p.compose(&images).map_err(|e| e.to_string())?, n, d))
        };
        let (a_s, b_s) = (sub(&a)?, sub(&b)?);
        let columns: Vec<MPoly<D>> = [&a_s, &b_s]
            .iter()
            .flat_map(|f| images.iter().map(move |u| truncate_s(&(u * *f), n, d)))
            .collect();
        let mut monos: Vec<&Monomial> = columns.iter().flat_map(|c| c.terms().map(|(mono, _)| mono)).collect();
        monos.sort();
        monos.dedup();
        for mono in monos {
            rows.push(columns.iter().map(|c| c.coeff(mono)).collect());
        }
    }
    let r = rank(k, &rows);
    let phi = phi_vectors(n, k)?;
    let phi_bar = build_phi_bar(&params, k).map_err(|e| e.to_string())?;
    for (j, vec) in phi.iter().enumerate() {
        let (la, lb) = vec.split_at(m);
        let combo = (0..m).fold(MPoly::zero(a.ctx(), k), |acc, i| {
            let ui = MPoly::var(a.ctx(), k, i);
            &acc + &(&(&ui * &a).scale(&la[i]) + &(&ui * &b).scale(&lb[i]))
        });
        if combo != *phi_bar.component(j) {
            return Err(format!("component {j} is not L_A A + L_B B as expected: {}", witness_poly(&(&combo - phi_bar.component(j)))));
        }
    }
    let phi_in_space = phi.iter().all(|v| mat_vec(k, &rows, v).iter().all(|c| k.is_zero(c)));
    Ok(LinearSystemReport { rank: r, dimension: 2 * m - r, phi_in_space, phi_rank: rank(k, &phi) })
}

pub fn verify_linear_system_dim(n: usize, d: u32, cfg: &VerifyConfig) -> VerificationResult {
    let (report, res) = if cfg.budget.allows(n, d) {
        let res = VerificationResult::new("linear_system_dim", CheckParams { n, d, field: Some("Q(xi)".into()), seed: None }, Mode::Symbolic);
        (linear_system_rank(n, d, &QuadraticRationals), res)
    } else {
        let k = FiniteField::prime(cfg.numeric_prime).expect("prime");
        let field = Some(k.spec().to_string());
        let res = VerificationResult::new("linear_system_dim", CheckParams { n, d, field, seed: None }, Mode::Numeric);
        (linear_system_rank(n, d, &k), res)
    };
    let report = match report {
        Ok(r) => r,
        Err(w) => return res.fail(w),
    };
    let want = 2 * n + 2;
    let res = res.detail("report", &report);
    let outcome = if report.dimension != want {
        Err(format!("solution space has dimension {}, expected {want}", report.dimension))
    } else if !report.phi_in_space {
        Err("a component of phi_bar violates the vanishing conditions".into())
    } else if report.phi_rank != want {
        Err(format!("phi_bar components span {} dimensions", report.phi_rank))
    } else {
        Ok(())
    };
    res.and(outcome)
}
