use std::time::Instant;

use serde::Serialize;

use crate::exactalg::arith::gcd;
use crate::exactalg::{Domain, FieldSpec, FiniteField};
use crate::families::{build_ab, build_x, build_x_delta, CharMode, FamilyError, FamilyParams};
use crate::mpoly::{multiplicity_at, MPoly, VarContext};
use crate::verify::{CheckParams, Mode, VerificationResult};

use super::{
    count_zeros, formula_high_dim, formula_x2d, formula_y, projective_count, zero_points, CountConfig, CountError,
    CountParams, CountReport,
};

fn report(family: &str, params: CountParams, k: &FiniteField, brute: u64, cfg: &CountConfig, start: Instant) -> CountReport {
    CountReport {
        family: family.into(),
        params,
        field: k.spec(),
        brute,
        formula: None,
        branch: None,
        alt_formula: None,
        gate: None,
        matches: false,
        shards: cfg.shards,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

impl CountReport {
    fn with_formula(mut self, formula: Option<u64>, gate: &str) -> Self {
        self.formula = formula;
        self.matches = formula == Some(self.brute);
        if formula.is_none() {
            self.gate = Some(gate.into());
        }
        self
    }
}

fn generic_params(n: usize, d: u32, k: &FiniteField) -> FamilyParams {
    FamilyParams::new(n, d).with_char_mode(CharMode::for_characteristic(k.p()))
}

/// Points of `X^{2n}_d` over `k`, against the closed form for its case.
pub fn count_x(n: usize, d: u32, k: &FiniteField, cfg: &CountConfig) -> Result<CountReport, CountError> {
    let start = Instant::now();
    let x = build_x(&generic_params(n, d, k), k)?;
    let brute = count_zeros(&[x], cfg.shards, cfg.budget)?;
    let rep = report("X", CountParams { n, d, delta: None }, k, brute, cfg, start);
    if n == 1 {
        let f = formula_x2d(k.q(), d)?;
        let mut rep = rep.with_formula(Some(f.value), "");
        rep.branch = Some(f.branch.into());
        rep.alt_formula = f.alt_value;
        Ok(rep)
    } else {
        Ok(rep.with_formula(formula_high_dim(k.q(), n, d), "needs q = 5 mod 6 and gcd(2d+1, q-1) = 1"))
    }
}

/// Points of the base locus `{A̅ = B̅ = 0} ⊂ ℙ^{2n}`.
pub fn count_y(n: usize, d: u32, k: &FiniteField, cfg: &CountConfig) -> Result<CountReport, CountError> {
    let start = Instant::now();
    let (a, b) = build_ab(&generic_params(n, d, k), k)?;
    let brute = count_zeros(&[a, b], cfg.shards, cfg.budget)?;
    Ok(report("Y", CountParams { n, d, delta: None }, k, brute, cfg, start)
        .with_formula(formula_y(k.q(), n, d), "needs n >= 2, q = 5 mod 6 and gcd(2d+1, q-1) = 1"))
}

/// Points of `X^{2n}_{d,δ}`; compared with `|ℙ^{2n}|` when
/// `gcd(d, q−1) = gcd(δ(d−1)+1, q−1) = 1`.
pub fn count_x_delta(n: usize, d: u32, delta: u32, k: &FiniteField, cfg: &CountConfig) -> Result<CountReport, CountError> {
    let start = Instant::now();
    let x = build_x_delta(n, d, delta, k)?;
    let brute = count_zeros(&[x], cfg.shards, cfg.budget)?;
    let q1 = k.q() - 1;
    let applies = gcd(d as u64, q1) == 1 && gcd(delta as u64 * (d as u64 - 1) + 1, q1) == 1;
    Ok(report("Xdelta", CountParams { n, d, delta: Some(delta) }, k, brute, cfg, start).with_formula(
        applies.then(|| projective_count(k.q(), 2 * n)).flatten(),
        "needs gcd(d, q-1) = gcd(delta(d-1)+1, q-1) = 1",
    ))
}

/// Points of an arbitrary homogeneous system, without a formula.
pub fn count_custom(polys: &[MPoly<FiniteField>], cfg: &CountConfig) -> Result<CountReport, CountError> {
    let start = Instant::now();
    let k = polys.first().ok_or(CountError::EmptySystem)?.domain().clone();
    let brute = count_zeros(polys, cfg.shards, cfg.budget)?;
    Ok(report("custom", CountParams::default(), &k, brute, cfg, start).with_formula(None, "no closed form"))
}

/// `{f + a·x_{N+1}^D = 0} ⊂ ℙ^{N+1}` has `|ℙ^N|` points whenever
/// `gcd(D, q−1) = 1`; otherwise the result is inapplicable.
pub fn check_projection_bijection(f: &MPoly<FiniteField>, a: u32, big_d: u32, cfg: &CountConfig) -> VerificationResult {
    let k = f.domain().clone();
    let n = f.ctx().len().saturating_sub(1);
    let params = CheckParams { n, d: big_d, field: Some(k.spec().to_string()), seed: None };
    let res = VerificationResult::new("projection_bijection", params, Mode::Symbolic);
    if gcd(big_d as u64, k.q() - 1) != 1 {
        return res.inapplicable(format!("gcd({big_d}, {}) != 1", k.q() - 1));
    }
    if a == 0 || f.homogeneous_degree().is_some_and(|e| e != big_d) {
        return res.inapplicable("needs a != 0 and f homogeneous of degree D");
    }
    let run = || -> Result<(u64, u64), CountError> {
        let fresh = (0..).map(|i| format!("x{i}")).find(|s| f.ctx().index_of(s).is_none()).expect("a free name");
        let ctx = f.ctx().extended([fresh])?;
        let lifted = f.with_context(&ctx)?;
        let last = MPoly::var(&ctx, &k, n + 1).pow(big_d).scale(&a);
        let brute = count_zeros(&[&lifted + &last], cfg.shards, cfg.budget)?;
        let expected = projective_count(k.q(), n).ok_or(CountError::Budget { budget: cfg.budget })?;
        Ok((brute, expected))
    };
    match run() {
        Ok((brute, expected)) => {
            let res = res.detail("brute", brute).detail("expected", expected);
            if brute == expected {
                res
            } else {
                res.fail(format!("{brute} points, expected {expected}"))
            }
        }
        Err(e) => res.fail(e.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Y0Point {
    pub coords: Vec<u32>,
    pub multiplicity: u32,
    pub certified: bool,
}

/// The points of `{A̅ = B̅ = 0} ⊂ ℙ²` with their intersection multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Y0Structure {
    pub d: u32,
    pub field: FieldSpec,
    pub points: Vec<Y0Point>,
    /// Multiplicity at `[0 : ±ξ : 1]`.
    pub special_multiplicities: [u32; 2],
    pub simple_points: usize,
    pub weighted_total: u32,
    /// `(2d+1)²`, the Bézout number.
    pub expected_total: u32,
}

pub fn count_y0_structure(d: u32, k: &FiniteField, cfg: &CountConfig) -> Result<Y0Structure, CountError> {
    let xi = k.sqrt_minus_three().ok_or(CountError::MissingXi)?;
    let (a, b) = build_ab(&generic_params(1, d, k), k)?;
    let pts = zero_points(&[a.clone(), b.clone()], cfg.budget)?;
    let mut points = Vec::new();
    for p in pts {
        let m = multiplicity_at(&[a.clone(), b.clone()], &p.coords)?;
        points.push(Y0Point { coords: p.coords, multiplicity: m.value, certified: m.certified });
    }
    // [0 : s : 1] normalizes to [0 : 1 : 1/s]
    let special = |s: u32| {
        let target = [0, 1, k.inv(&s).expect("xi is nonzero")];
        points.iter().find(|p| p.coords == target).map_or(0, |p| p.multiplicity)
    };
    let special_multiplicities = [special(xi), special(k.neg(&xi))];
    let simple_points = points.iter().filter(|p| p.multiplicity == 1).count();
    let weighted_total = points.iter().map(|p| p.multiplicity).sum();
    Ok(Y0Structure {
        d,
        field: k.spec(),
        points,
        special_multiplicities,
        simple_points,
        weighted_total,
        expected_total: (2 * d + 1).pow(2),
    })
}

/// Counts of `X^{2n}_d` sliced by the pencil of hyperplanes
/// `a1·x_{2n} = a0·x_{2n+1}`, whose common part is `X^{2n−2}_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceReport {
    pub total: u64,
    /// `([a0 : a1], |X ∩ H|)` for every point of ℙ¹.
    pub slices: Vec<([u32; 2], u64)>,
    pub axis: u64,
    /// `Σ slices − q·axis = total`.
    pub consistent: bool,
}

pub fn hyperplane_slices(n: usize, d: u32, k: &FiniteField, cfg: &CountConfig) -> Result<SliceReport, CountError> {
    if n < 2 {
        return Err(FamilyError::InvalidParams(format!("slicing needs n >= 2, got {n}")).into());
    }
    let params = generic_params(n, d, k);
    let x = build_x(&params, k)?;
    let total = count_zeros(&[x.clone()], cfg.shards, cfg.budget)?;
    let axis = count_zeros(&[build_x(&generic_params(n - 1, d, k), k)?], cfg.shards, cfg.budget)?;
    // H ≅ ℙ^{2n} with coordinates x0 … x_{2n−1}, t and x_{2n} = a0 t, x_{2n+1} = a1 t
    let ctx = VarContext::indexed("x", 2 * n).extended(["t"])?;
    let vars = MPoly::vars(&ctx, k);
    let t = &vars[2 * n];
    let mut slices = Vec::new();
    for line in super::enumerate_projective(k, 1, cfg.budget)? {
        let [a0, a1] = [line.coords[0], line.coords[1]];
        let mut images: Vec<MPoly<FiniteField>> = vars[..2 * n].to_vec();
        images.push(t.scale(&a0));
        images.push(t.scale(&a1));
        let restricted = x.compose(&images)?;
        slices.push(([a0, a1], count_zeros(&[restricted], cfg.shards, cfg.budget)?));
    }
    let sum: u64 = slices.iter().map(|s| s.1).sum();
    Ok(SliceReport { total, slices, axis, consistent: sum == total + k.q() * axis })
}
