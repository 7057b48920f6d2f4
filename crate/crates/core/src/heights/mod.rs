//! Rational points of bounded height on `X²_d`, found directly and through
//! the parametrization.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::exactalg::Rationals;
use crate::families::{build_phi_bar, build_x, FamilyParams};
use crate::mpoly::MPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeightError {
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("bound {bound} exceeds the budget {max}")]
    Budget { bound: u64, max: u64 },
    #[error("only n = 1 is supported, got n = {0}")]
    Dimension(usize),
    #[error("d must be at least 1")]
    Degree,
    #[error("integer overflow while evaluating at height {0}")]
    Overflow(u64),
    #[error("{0}")]
    Family(String),
}

/// Integer coordinates with gcd 1 and first nonzero coordinate positive.
pub fn reduced_representative(coords: &[BigRational]) -> Result<Vec<BigInt>, HeightError> {
    if coords.iter().all(Zero::is_zero) {
        return Err(HeightError::ZeroVector);
    }
    let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coords.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    Ok(normalize_ints(ints))
}

fn normalize_ints(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let lead_neg = ints.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    for c in ints.iter_mut() {
        *c = &*c / &g;
        if lead_neg {
            *c = -&*c;
        }
    }
    ints
}

/// Maximum absolute coordinate of the reduced representative.
pub fn height_of(coords: &[BigRational]) -> Result<BigInt, HeightError> {
    Ok(reduced_representative(coords)?.into_iter().map(|c| c.abs()).max().expect("nonempty"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeightConfig {
    /// Largest bound accepted by the direct search.
    pub max_direct_bound: u64,
    /// Largest `u`-height accepted by the parametrized search.
    pub max_param_height: u64,
}

impl Default for HeightConfig {
    fn default() -> Self {
        HeightConfig { max_direct_bound: 60, max_param_height: 60 }
    }
}

/// `(a+b)(a²−ab+b²)^d`.
fn half_form(a: i128, b: i128, d: u32) -> Option<i128> {
    let q = a.checked_mul(a)?.checked_sub(a.checked_mul(b)?)?.checked_add(b.checked_mul(b)?)?;
    q.checked_pow(d)?.checked_mul(a + b)
}

fn gcd4(v: [i64; 4]) -> i64 {
    v.iter().fold(0i64, |acc, &c| acc.gcd(&c))
}

/// Points of `X²_d(ℚ)` of height at most `bound`. The equation splits as
/// `f(x0, x1) + f(x2, x3) = 0`, so the pairs are joined on the value of `f`.
pub fn direct_height_count(d: u32, bound: u64, cfg: &HeightConfig) -> Result<u64, HeightError> {
    if d == 0 {
        return Err(HeightError::Degree);
    }
    if bound > cfg.max_direct_bound {
        return Err(HeightError::Budget { bound, max: cfg.max_direct_bound });
    }
    let b = bound as i64;
    let range = || -b..=b;
    let mut by_value: HashMap<i128, Vec<(i64, i64)>> = HashMap::new();
    for x2 in range() {
        for x3 in range() {
            let v = half_form(x2 as i128, x3 as i128, d).ok_or(HeightError::Overflow(bound))?;
            by_value.entry(v).or_default().push((x2, x3));
        }
    }
    // shards by leading coordinate x0
    let count = range()
        .into_par_iter()
        .map(|x0| {
            let mut c = 0u64;
            for x1 in range() {
                let v = half_form(x0 as i128, x1 as i128, d).expect("checked above");
                let Some(partners) = by_value.get(&-v) else { continue };
                for &(x2, x3) in partners {
                    let pt = [x0, x1, x2, x3];
                    let lead = pt.iter().find(|&&c| c != 0);
                    if lead.is_some_and(|&l| l > 0) && gcd4(pt) == 1 {
                        c += 1;
                    }
                }
            }
            c
        })
        .sum();
    Ok(count)
}

/// Largest `h` with `h^e ≤ bound`.
fn integer_root(bound: u64, e: u32) -> u64 {
    let mut h = 0u64;
    while (h + 1).checked_pow(e).is_some_and(|v| v <= bound) {
        h += 1;
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamCount {
    pub count: u64,
    /// Parameters at which every component of the map vanishes.
    pub skipped: u64,
    pub u_height: u64,
    /// Reduced images of height at most the bound, sorted.
    #[serde(skip)]
    pub points: Vec<Vec<BigInt>>,
}

/// Images under `φ̄` of the points of `ℙ²(ℚ)` of height at most
/// `⌊bound^{1/(2d+2)}⌋`, reduced, filtered to height `≤ bound` and deduplicated.
pub fn parametrized_height_count(d: u32, bound: u64, cfg: &HeightConfig) -> Result<ParamCount, HeightError> {
    if d == 0 {
        return Err(HeightError::Degree);
    }
    let h = integer_root(bound, 2 * d + 2);
    if h > cfg.max_param_height {
        return Err(HeightError::Budget { bound: h, max: cfg.max_param_height });
    }
    let phi = build_phi_bar(&FamilyParams::new(1, d), &Rationals).map_err(|e| HeightError::Family(e.to_string()))?;
    let hi = h as i64;
    let mut params = Vec::new();
    for u0 in -hi..=hi {
        for u1 in -hi..=hi {
            for u2 in -hi..=hi {
                let pt = [u0, u1, u2];
                let lead = pt.iter().find(|&&c| c != 0);
                if lead.is_some_and(|&l| l > 0) && pt.iter().fold(0i64, |a, &c| a.gcd(&c)) == 1 {
                    params.push(pt);
                }
            }
        }
    }
    let limit = BigInt::from(bound);
    let images: Vec<Option<Vec<BigInt>>> = params
        .par_iter()
        .map(|u| {
            let pt: Vec<BigRational> = u.iter().map(|&c| BigRational::from_integer(c.into())).collect();
            let img = phi.eval(&pt).expect("arity");
            reduced_representative(&img).ok()
        })
        .collect();
    let skipped = images.iter().filter(|i| i.is_none()).count() as u64;
    let mut seen = HashSet::new();
    for img in images.into_iter().flatten() {
        if img.iter().all(|c| c.abs() <= limit) {
            seen.insert(img);
        }
    }
    let mut points: Vec<Vec<BigInt>> = seen.into_iter().collect();
    points.sort();
    Ok(ParamCount { count: points.len() as u64, skipped, u_height: h, points })
}

/// `X²_d` evaluated at an integer point.
pub fn on_surface(d: u32, pt: &[BigInt]) -> bool {
    let x: MPoly<Rationals> = build_x(&FamilyParams::new(1, d), &Rationals).expect("valid params");
    let vals: Vec<BigRational> = pt.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    x.evaluate(&vals).is_ok_and(|v| v.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HeightMode {
    Direct,
    Param,
    Both,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeightReport {
    pub n: usize,
    pub d: u32,
    pub bound: u64,
    pub direct: Option<u64>,
    pub parametrized: Option<u64>,
    pub skipped: Option<u64>,
    /// `B^{(2n+1)/(2d+2)}`.
    pub lower_ref: f64,
    /// `B^{3/(2d+1)}`, the sharper surface reference.
    pub lower_ref_surface: f64,
    /// `B^{4n+2}`.
    pub upper_ref: f64,
    pub elapsed_ms: u64,
}

pub fn height_report(d: u32, bound: u64, mode: HeightMode, cfg: &HeightConfig) -> Result<HeightReport, HeightError> {
    let start = Instant::now();
    let n = 1;
    let direct = match mode {
        HeightMode::Direct | HeightMode::Both => Some(direct_height_count(d, bound, cfg)?),
        HeightMode::Param => None,
    };
    let param = match mode {
        HeightMode::Param | HeightMode::Both => Some(parametrized_height_count(d, bound, cfg)?),
        HeightMode::Direct => None,
    };
    let b = bound as f64;
    Ok(HeightReport {
        n,
        d,
        bound,
        direct,
        parametrized: param.as_ref().map(|p| p.count),
        skipped: param.as_ref().map(|p| p.skipped),
        lower_ref: b.powf((2 * n + 1) as f64 / (2 * d + 2) as f64),
        lower_ref_surface: b.powf(3.0 / (2 * d + 1) as f64),
        upper_ref: b.powf((4 * n + 2) as f64),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// CSV rows `B,direct,param,lower_ref,lower_ref_surface,upper_ref`.
pub fn reports_to_csv(reports: &[HeightReport]) -> String {
    let opt = |v: Option<u64>| v.map_or(String::new(), |v| v.to_string());
    let mut out = String::from("bound,direct,param,lower_ref,lower_ref_surface,upper_ref\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.bound,
            opt(r.direct),
            opt(r.parametrized),
            r.lower_ref,
            r.lower_ref_surface,
            r.upper_ref
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn reduction_examples() {
        let p = [rat(2, 1), rat(-4, 1), rat(6, 1)];
        assert_eq!(reduced_representative(&p).unwrap(), [1, -2, 3].map(BigInt::from));
        assert_eq!(height_of(&p).unwrap(), BigInt::from(3));
        let p = [rat(1, 2), rat(1, 3), rat(1, 1)];
        assert_eq!(height_of(&p).unwrap(), BigInt::from(6));
        assert_eq!(height_of(&[rat(0, 1), rat(0, 1)]), Err(HeightError::ZeroVector));
    }

    #[test]
    fn roots() {
        assert_eq!(integer_root(16, 4), 2);
        assert_eq!(integer_root(15, 4), 1);
        assert_eq!(integer_root(0, 4), 0);
    }

    #[test]
    fn zero_bound_is_empty() {
        assert_eq!(direct_height_count(1, 0, &HeightConfig::default()).unwrap(), 0);
    }
}
