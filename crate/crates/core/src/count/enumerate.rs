use rayon::prelude::*;
use serde::Serialize;

use crate::exactalg::{Domain, FieldSpec, FiniteField};
use crate::mpoly::MPoly;

use super::CountError;

/// A point of ℙ^N over a finite field, normalized so that its first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectivePoint {
    pub field: FieldSpec,
    pub coords: Vec<u32>,
}

impl ProjectivePoint {
    /// Scales `coords` so the first nonzero entry is 1.
    pub fn normalize(k: &FiniteField, coords: &[u32]) -> Result<Self, CountError> {
        let lead = coords.iter().find(|&&c| c != 0).ok_or(CountError::ZeroVector)?;
        let inv = k.inv(lead).expect("nonzero");
        Ok(ProjectivePoint { field: k.spec(), coords: coords.iter().map(|c| k.mul(c, &inv)).collect() })
    }

    /// Index of the first nonzero coordinate.
    pub fn chart(&self) -> usize {
        self.coords.iter().position(|&c| c != 0).expect("normalized point")
    }
}

/// Sizes of the affine charts of ℙ^N, chart `c` holding the points whose
/// first nonzero coordinate is `c`.
fn chart_sizes(q: u64, n: usize) -> Option<Vec<u64>> {
    (0..=n).map(|c| q.checked_pow((n - c) as u32)).collect()
}

/// `|ℙ^N(𝔽_q)|`, or `None` on overflow.
pub fn projective_count(q: u64, n: usize) -> Option<u64> {
    chart_sizes(q, n)?.iter().try_fold(0u64, |a, &b| a.checked_add(b))
}

/// Walks the normalized points with global indices `start..end`. Charts come
/// in ascending order, and inside a chart the free coordinates run
/// lexicographically with the leftmost most significant.
struct Walker {
    q: u32,
    coords: Vec<u32>,
    chart: usize,
    remaining: u64,
}

impl Walker {
    fn new(q: u64, n: usize, start: u64, end: u64) -> Self {
        let sizes = chart_sizes(q, n).expect("checked by caller");
        let mut chart = 0;
        let mut offset = start;
        while chart <= n && offset >= sizes[chart] {
            offset -= sizes[chart];
            chart += 1;
        }
        let mut coords = vec![0u32; n + 1];
        if chart <= n {
            coords[chart] = 1;
            for i in (chart + 1..=n).rev() {
                coords[i] = (offset % q) as u32;
                offset /= q;
            }
        }
        Walker { q: q as u32, coords, chart, remaining: end - start }
    }

    /// Current point, then advance. `None` once the range is exhausted.
    fn next_point(&mut self) -> Option<&[u32]> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        Some(&self.coords)
    }

    fn advance(&mut self) {
        let n = self.coords.len() - 1;
        for i in (self.chart + 1..=n).rev() {
            self.coords[i] += 1;
            if self.coords[i] < self.q {
                return;
            }
            self.coords[i] = 0;
        }
        // chart exhausted
        if self.chart < n {
            self.coords[self.chart] = 0;
            self.chart += 1;
            self.coords[self.chart] = 1;
        }
    }
}

/// All points of ℙ^N(𝔽_q) in the canonical order, refusing enumerations
/// above `budget` points.
pub fn enumerate_projective(k: &FiniteField, n: usize, budget: u64) -> Result<impl Iterator<Item = ProjectivePoint>, CountError> {
    let total = projective_count(k.q(), n).filter(|&t| t <= budget).ok_or(CountError::Budget { budget })?;
    let spec = k.spec();
    let mut w = Walker::new(k.q(), n, 0, total);
    Ok(std::iter::from_fn(move || {
        let p = w.next_point()?.to_vec();
        w.advance();
        Some(ProjectivePoint { field: spec, coords: p })
    }))
}

/// Polynomial flattened for repeated evaluation over one field.
struct Compiled {
    terms: Vec<(u32, Vec<(usize, u32)>)>,
}

impl Compiled {
    fn new(p: &MPoly<FiniteField>) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| (*c, m.exps().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e)).collect()))
            .collect();
        Compiled { terms }
    }

    fn vanishes(&self, k: &FiniteField, pt: &[u32]) -> bool {
        let mut acc = 0u32;
        for (c, vars) in &self.terms {
            let mut t = *c;
            for &(i, e) in vars {
                if pt[i] == 0 {
                    t = 0;
                    break;
                }
                t = k.mul(&t, &k.pow(&pt[i], e as u64));
            }
            acc = k.add(&acc, &t);
        }
        acc == 0
    }
}

/// Number of points of ℙ^N(𝔽_q), `N + 1` being the common number of
/// variables, where every polynomial vanishes. The index range is cut into
/// `shards` contiguous pieces counted in parallel.
pub fn count_zeros(polys: &[MPoly<FiniteField>], shards: usize, budget: u64) -> Result<u64, CountError> {
    let first = polys.first().ok_or(CountError::EmptySystem)?;
    let k = first.domain().clone();
    let nvars = first.ctx().len();
    if nvars == 0 {
        return Err(CountError::EmptySystem);
    }
    if polys.iter().any(|p| p.ctx().names() != first.ctx().names() || *p.domain() != k) {
        return Err(CountError::ContextMismatch);
    }
    if let Some(i) = polys.iter().position(|p| !p.is_homogeneous()) {
        return Err(CountError::NotHomogeneous(i));
    }
    let n = nvars - 1;
    let total = projective_count(k.q(), n).filter(|&t| t <= budget).ok_or(CountError::Budget { budget })?;
    let compiled: Vec<Compiled> = polys.iter().map(Compiled::new).collect();
    let shards = shards.max(1) as u64;
    let count = (0..shards)
        .into_par_iter()
        .map(|s| {
            let (start, end) = (total * s / shards, total * (s + 1) / shards);
            let mut w = Walker::new(k.q(), n, start, end);
            let mut c = 0u64;
            while let Some(pt) = w.next_point() {
                if compiled.iter().all(|f| f.vanishes(&k, pt)) {
                    c += 1;
                }
                w.advance();
            }
            c
        })
        .sum();
    Ok(count)
}

/// The zero points themselves, in canonical order.
pub fn zero_points(polys: &[MPoly<FiniteField>], budget: u64) -> Result<Vec<ProjectivePoint>, CountError> {
    let first = polys.first().ok_or(CountError::EmptySystem)?;
    let k = first.domain().clone();
    let compiled: Vec<Compiled> = polys.iter().map(Compiled::new).collect();
    Ok(enumerate_projective(&k, first.ctx().len() - 1, budget)?
        .filter(|p| compiled.iter().all(|f| f.vanishes(&k, &p.coords)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::VarContext;

    #[test]
    fn p1_over_f2() {
        let k = FiniteField::prime(2).unwrap();
        let pts: Vec<Vec<u32>> = enumerate_projective(&k, 1, 1000).unwrap().map(|p| p.coords).collect();
        assert_eq!(pts, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn sizes() {
        let f5 = FiniteField::prime(5).unwrap();
        assert_eq!(enumerate_projective(&f5, 2, 1000).unwrap().count(), 31);
        let f3 = FiniteField::prime(3).unwrap();
        assert_eq!(enumerate_projective(&f3, 3, 1000).unwrap().count(), 40);
    }

    #[test]
    fn budget_is_enforced() {
        let f5 = FiniteField::prime(5).unwrap();
        assert!(matches!(enumerate_projective(&f5, 2, 30), Err(CountError::Budget { .. })));
    }

    #[test]
    fn hyperplane_and_zero_polynomial() {
        let k = FiniteField::prime(5).unwrap();
        let ctx = VarContext::indexed("x", 3);
        let x0 = MPoly::var(&ctx, &k, 0);
        assert_eq!(count_zeros(&[x0], 3, 1 << 20).unwrap(), 6);
        assert_eq!(count_zeros(&[MPoly::zero(&ctx, &k)], 2, 1 << 20).unwrap(), 31);
    }
}
