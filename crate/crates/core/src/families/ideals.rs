use serde::{Deserialize, Serialize};

use crate::exactalg::Domain;
use crate::mpoly::{Ctx, MPoly};

use super::{build_ab, t_ctx, u_ctx, x_ctx, FamilyError, FamilyParams, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdealKind {
    /// The two conjugate n-planes in ℙ^{2n+1}.
    Hpm,
    /// The singular locus of the base locus for `d > 1`.
    Z,
    /// The pair of conjugate (n−1)-planes in ℙ^{2n}.
    Zpm,
    /// The base locus `{A̅ = B̅ = 0}`.
    Y,
    /// `T1, …, T4` in ℙ^{2n}_t.
    T,
    /// `U1, U2` in ℙ^{2n}_u.
    U,
}

impl IdealKind {
    pub const ALL: [IdealKind; 6] = [IdealKind::Hpm, IdealKind::Z, IdealKind::Zpm, IdealKind::Y, IdealKind::T, IdealKind::U];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Hpm => "Hpm",
            IdealKind::Z => "Z",
            IdealKind::Zpm => "Zpm",
            IdealKind::Y => "Y",
            IdealKind::T => "T",
            IdealKind::U => "U",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdealGens<D: Domain> {
    pub label: String,
    pub ctx: Ctx,
    pub gens: Vec<MPoly<D>>,
}

impl<D: Domain> IdealGens<D> {
    fn new(label: impl Into<String>, ctx: &Ctx, gens: Vec<MPoly<D>>) -> Self {
        debug_assert!(!gens.is_empty());
        debug_assert!(gens.iter().all(MPoly::is_homogeneous));
        IdealGens { label: label.into(), ctx: ctx.clone(), gens }
    }

    /// Whether every generator vanishes at `point`.
    pub fn vanishes_at(&self, point: &[D::Elem]) -> Result<bool, FamilyError> {
        for g in &self.gens {
            if !g.domain().is_zero(&g.evaluate(point)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Generator lists of the named ideals; kinds that denote several
/// subschemes (`T`, `U`) return one entry per subscheme.
pub fn build_ideals<D: Domain>(params: &FamilyParams, k: &D, which: IdealKind) -> Result<Vec<IdealGens<D>>, FamilyError> {
    params.validate()?;
    let n = params.n;
    Ok(match which {
        IdealKind::Hpm => vec![h_pm(n, k)],
        IdealKind::Z => {
            let r = Ring::new(&u_ctx(n), k);
            vec![IdealGens::new("Z", &r.ctx, z_gens(&r, n))]
        }
        IdealKind::Zpm => {
            let r = Ring::new(&u_ctx(n), k);
            let mut gens = z_gens(&r, n);
            gens.extend(cross_gens(&r, n));
            vec![IdealGens::new("Zpm", &r.ctx, gens)]
        }
        IdealKind::Y => {
            let (a, b) = build_ab(params, k)?;
            let ctx = a.ctx().clone();
            vec![IdealGens::new("Y", &ctx, vec![a, b])]
        }
        IdealKind::T => t_ideals(n, k),
        IdealKind::U => u_ideals(n, k),
    })
}

fn h_pm<D: Domain>(n: usize, k: &D) -> IdealGens<D> {
    let r = Ring::new(&x_ctx(n), k);
    let x = |i: usize| r.v(i);
    let mut gens = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        gens.push(&(&x(2 * i).pow(2) - &(x(2 * i) * x(2 * i + 1))) + &x(2 * i + 1).pow(2));
    }
    for i in 0..n {
        for j in i..n {
            gens.push(&(&(x(2 * i) * x(2 * j + 2)) - &(x(2 * i) * x(2 * j + 3))) + &(x(2 * i + 1) * x(2 * j + 3)));
        }
    }
    for i in 1..=n {
        for j in i..=n {
            gens.push(&(x(2 * i - 1) * x(2 * j)) - &(x(2 * i - 2) * x(2 * j + 1)));
        }
    }
    IdealGens::new("Hpm", &r.ctx, gens)
}

/// `u0` and `u_{2i+1}² + 3u_{2i+2}²` for `i < n`.
fn z_gens<D: Domain>(r: &Ring<D>, n: usize) -> Vec<MPoly<D>> {
    let mut gens = vec![r.v(0).clone()];
    for i in 0..n {
        gens.push(&r.v(2 * i + 1).pow(2) + &r.v(2 * i + 2).pow(2).scale_int(3));
    }
    gens
}

/// Relations tying the pairs `(u_{2s+1}, u_{2s+2})` and `(u_{2t+3}, u_{2t+4})`
/// to the same conjugate plane, `0 ≤ s ≤ t ≤ n−2`.
fn cross_gens<D: Domain>(r: &Ring<D>, n: usize) -> Vec<MPoly<D>> {
    let mut gens = Vec::new();
    for s in 0..n.saturating_sub(1) {
        for t in s..n - 1 {
            let (a, b) = (r.v(2 * s + 1), r.v(2 * s + 2));
            let (c, e) = (r.v(2 * t + 3), r.v(2 * t + 4));
            gens.push(&(a * c) + &(b * e).scale_int(3));
            gens.push(&(a * e) - &(b * c));
        }
    }
    gens
}

fn t_ideals<D: Domain>(n: usize, k: &D) -> Vec<IdealGens<D>> {
    let r = Ring::new(&t_ctx(n), k);
    let t = |i: usize| r.v(i);
    let mut out = vec![
        IdealGens::new("T1", &r.ctx, vec![&(&t(0).pow(2) + &(t(0) * t(1))) + &t(1).pow(2)]),
        IdealGens::new("T2", &r.ctx, vec![t(0).clone(), t(1).clone()]),
    ];
    for i in 0..n {
        out.push(IdealGens::new(format!("T3[{i}]"), &r.ctx, vec![t(0).clone(), t(2 * i + 1).clone()]));
    }
    for i in 1..n {
        for j in i..n {
            let g = &(t(2 * i) * t(2 * j + 1)) - &(t(2 * i - 1) * t(2 * j + 2));
            out.push(IdealGens::new(format!("T4[{i},{j}]"), &r.ctx, vec![t(0).clone(), g]));
        }
    }
    out
}

fn u_ideals<D: Domain>(n: usize, k: &D) -> Vec<IdealGens<D>> {
    let r = Ring::new(&u_ctx(n), k);
    let u = |i: usize| r.v(i);
    let u1 = IdealGens::new("U1", &r.ctx, vec![u(1).clone(), u(2).clone()]);
    let mut gens = z_gens(&r, n);
    for i in 0..n.saturating_sub(1) {
        for j in i + 1..n {
            gens.push(&(u(2 * i + 1) * u(2 * j + 1)) + &(u(2 * i + 2) * u(2 * j + 2)).scale_int(3));
        }
    }
    // the second family is read with j ≤ n−2 so that every index exists
    for i in 0..n.saturating_sub(1) {
        for j in i..n - 1 {
            gens.push(&(u(2 * i + 2) * u(2 * j + 3)) - &(u(2 * i + 1) * u(2 * j + 4)));
        }
    }
    vec![u1, IdealGens::new("U2", &r.ctx, gens)]
}
