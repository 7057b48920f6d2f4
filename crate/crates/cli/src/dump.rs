use hyperrat::exactalg::{Domain, FiniteField, QuadraticRationals, Rationals};
use hyperrat::families::{
    build_ab, build_alpha_beta, build_char_two_maps, build_cox_model, build_cremona, build_dnm, build_h, build_ideals,
    build_line_pencil, build_phi_bar, build_phi_change, build_phi_tilde, build_s_d, build_theta, build_x, build_x_delta,
    CharMode, FamilyError, FamilyParams, IdealKind,
};
use hyperrat::mpoly::{MPoly, RationalMap};
use serde::Serialize;

use crate::ConfigError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum DumpFamily {
    #[value(alias = "X")]
    X,
    #[value(alias = "Xdelta")]
    Xdelta,
    Ab,
    PhiBar,
    Theta,
    H,
    Cremona,
    AlphaBeta,
    G,
    Dnm,
    PhiTilde,
    Cox,
    Sd,
    PhiChange,
    Pencil,
    Ideals,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dumped {
    pub label: String,
    pub poly: String,
}

fn polys<D: Domain>(label: &str, ps: &[MPoly<D>]) -> Vec<Dumped> {
    ps.iter().enumerate().map(|(i, p)| Dumped { label: format!("{label}[{i}]"), poly: p.to_string() }).collect()
}

fn map<D: Domain>(label: &str, m: &RationalMap<D>) -> Vec<Dumped> {
    polys(label, m.components())
}

fn one<D: Domain>(label: &str, p: &MPoly<D>) -> Vec<Dumped> {
    vec![Dumped { label: label.into(), poly: p.to_string() }]
}

/// Families whose coefficients need ξ over ℚ.
fn needs_xi(f: DumpFamily) -> bool {
    matches!(f, DumpFamily::Cox | DumpFamily::PhiChange | DumpFamily::Pencil | DumpFamily::Ideals)
}

fn dump_over<D: Domain>(family: DumpFamily, params: &FamilyParams, k: &D) -> Result<Vec<Dumped>, FamilyError> {
    let n = params.n;
    Ok(match family {
        DumpFamily::X => one("X", &build_x(params, k)?),
        DumpFamily::Xdelta => one("X_delta", &build_x_delta(n, params.d, params.delta, k)?),
        DumpFamily::Ab => {
            let (a, b) = build_ab(params, k)?;
            [one("A", &a), one("B", &b)].concat()
        }
        DumpFamily::PhiBar => map("phi_bar", &build_phi_bar(params, k)?),
        DumpFamily::Theta => map("theta", &build_theta(n, k)?),
        DumpFamily::H => map("h", &build_h(n, k)?),
        DumpFamily::Cremona => {
            let (cr, inv) = build_cremona(k)?;
            [map("cr", &cr), map("cr_inv", &inv)].concat()
        }
        DumpFamily::AlphaBeta => {
            let (a, b) = build_alpha_beta(n, k)?;
            [map("alpha", &a), map("beta", &b)].concat()
        }
        DumpFamily::G => {
            let m = build_char_two_maps(params, k)?;
            [one("P", &m.p), one("Q", &m.q), map("g", &m.g)].concat()
        }
        DumpFamily::Dnm => {
            let m = build_dnm(params, k)?;
            [one("D", &m.d), one("N", &m.n), one("M", &m.m)].concat()
        }
        DumpFamily::PhiTilde => map("phi_tilde", &build_phi_tilde(params, k)?),
        DumpFamily::Cox => {
            let m = build_cox_model(params, k)?;
            let mut out = [one("S_hat", &m.s_hat), one("D_hat", &m.d_hat)].concat();
            if let Some(f) = &m.f_hat {
                out.extend(one("F_hat", f));
            }
            out
        }
        DumpFamily::Sd => {
            let sd = build_s_d(params, k)?;
            [one("S", &sd.s), one("D", &sd.d)].concat()
        }
        DumpFamily::PhiChange => {
            let (f, b) = build_phi_change(n, k)?;
            [map("Phi", &f), map("Phi_inv", &b)].concat()
        }
        DumpFamily::Pencil => {
            let p = build_line_pencil(params, k)?;
            [polys("L", &p.lines), one("F_u", &p.f_u()?), one("factored", &p.factored())].concat()
        }
        DumpFamily::Ideals => {
            let mut out = Vec::new();
            for kind in IdealKind::ALL {
                for ideal in build_ideals(params, k, kind)? {
                    out.extend(polys(&ideal.label, &ideal.gens));
                }
            }
            out
        }
    })
}

/// Dumps over ℚ (or ℚ(ξ) when needed) for `q = None`, else over 𝔽_q.
pub fn dump(family: DumpFamily, n: usize, d: u32, delta: u32, q: Option<u64>) -> Result<Vec<Dumped>, ConfigError> {
    let base = FamilyParams::new(n, d).with_delta(delta);
    base.validate().map_err(|e| ConfigError(e.to_string()))?;
    let res = match q {
        None if family == DumpFamily::G => {
            return Err(ConfigError("char-2 family requested with generic constructor; pass --char 2^m".into()))
        }
        None if needs_xi(family) => dump_over(family, &base, &QuadraticRationals),
        None => dump_over(family, &base, &Rationals),
        Some(q) => {
            let k = FiniteField::from_q(q).map_err(|e| ConfigError(e.to_string()))?;
            let mode = CharMode::for_characteristic(k.p());
            if family == DumpFamily::G && mode != CharMode::Char2 {
                return Err(ConfigError("the map g needs characteristic 2".into()));
            }
            if mode == CharMode::Char2 && family != DumpFamily::G && family != DumpFamily::X {
                return Err(ConfigError("char-2 field requested for a generic family".into()));
            }
            dump_over(family, &base.with_char_mode(mode), &k)
        }
    };
    res.map_err(|e| ConfigError(e.to_string()))
}
