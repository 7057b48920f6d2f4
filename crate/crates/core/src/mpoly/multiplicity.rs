use serde::Serialize;

use crate::exactalg::Domain;

use super::monomial::Monomial;
use super::poly::MPoly;
use super::PolyError;

/// Local multiplicity of a zero locus at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplicity {
    pub value: u32,
    /// False when the lowest forms of the two generators could not be shown
    /// to have no common factor; `value` is then only the product of orders.
    pub certified: bool,
}

/// Multiplicity at a projective point of the locus cut out by one
/// hypersurface or by two hypersurfaces meeting properly.
///
/// The point is moved to the origin of the affine chart of its first nonzero
/// coordinate. With two generators `f, g`, `g` is first reduced by multiples
/// of `f` so that the lowest forms lose their common factor, then the product
/// of orders is returned.
pub fn multiplicity_at<D: Domain>(polys: &[MPoly<D>], point: &[D::Elem]) -> Result<Multiplicity, PolyError> {
    if polys.is_empty() || polys.len() > 2 {
        return Err(PolyError::GeneratorCount(polys.len()));
    }
    let ctx = polys[0].ctx().clone();
    let domain = polys[0].domain().clone();
    if point.len() != ctx.len() {
        return Err(PolyError::LengthMismatch { expected: ctx.len(), got: point.len() });
    }
    let chart = point.iter().position(|c| !domain.is_zero(c)).ok_or(PolyError::ZeroPoint)?;
    let lead_inv = domain.inv(&point[chart]).ok_or(PolyError::ZeroPoint)?;
    let affine_point: Vec<D::Elem> = point.iter().map(|c| domain.mul(c, &lead_inv)).collect();

    let images: Vec<MPoly<D>> = (0..ctx.len())
        .map(|i| {
            if i == chart {
                MPoly::one(&ctx, &domain)
            } else {
                let shift = MPoly::constant(&ctx, &domain, affine_point[i].clone());
                &MPoly::var(&ctx, &domain, i) + &shift
            }
        })
        .collect();
    let local = polys.iter().map(|p| p.compose(&images)).collect::<Result<Vec<_>, _>>()?;
    if local.iter().any(|p| !domain.is_zero(&p.constant_term())) {
        return Err(PolyError::PointNotOnLocus);
    }
    // a generator vanishing identically near the point leaves no proper intersection
    if local.iter().any(MPoly::is_zero) {
        return Ok(Multiplicity { value: 0, certified: false });
    }
    if local.len() == 1 {
        return Ok(Multiplicity { value: local[0].order().unwrap(), certified: true });
    }

    let (mut f, mut g) = (local[0].clone(), local[1].clone());
    if g.order() < f.order() {
        std::mem::swap(&mut f, &mut g);
    }
    let f_low = f.lowest_form();
    let ord_f = f.order().unwrap();
    let (lt_m, lt_c) = f_low.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let lt_inv = domain.inv(&lt_c).expect("nonzero leading coefficient");
    let bound = f.total_degree().unwrap() * g.total_degree().unwrap() / ord_f.max(1);
    let pure_var = single_variable_power(&f_low);

    loop {
        let Some(ord_g) = g.order() else {
            return Ok(Multiplicity { value: 0, certified: false });
        };
        let g_low = g.lowest_form();
        if let Some(v) = pure_var {
            if !g_low.specialize(v, &domain.zero()).is_zero() {
                return Ok(Multiplicity { value: ord_f * ord_g, certified: true });
            }
        }
        if ord_g > bound {
            return Ok(Multiplicity { value: ord_f * ord_g, certified: false });
        }
        let Some((m, c)) = g_low.terms().rev().find(|(m, _)| lt_m.divides(m)) else {
            return Ok(Multiplicity { value: ord_f * ord_g, certified: false });
        };
        let q: Monomial = lt_m.quotient_of(m);
        let coeff = domain.mul(c, &lt_inv);
        g = &g - &f.mul_term(&q, &coeff);
    }
}

/// The variable `v` when `p` is `c·v^a`.
fn single_variable_power<D: Domain>(p: &MPoly<D>) -> Option<usize> {
    if p.num_terms() != 1 {
        return None;
    }
    let (m, _) = p.leading_term()?;
    let nonzero: Vec<usize> = (0..m.len()).filter(|&i| m.exp(i) > 0).collect();
    match nonzero.as_slice() {
        [v] => Some(*v),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{FiniteField, Rationals};
    use crate::mpoly::{parse_poly, VarContext};

    #[test]
    fn smooth_point_of_a_conic() {
        let ctx = VarContext::indexed("x", 3);
        let k = Rationals;
        let f = parse_poly(&ctx, &k, "x0^2 + x1^2 - x2^2").unwrap();
        let m = multiplicity_at(&[f], &[k.from_int(0), k.from_int(1), k.from_int(1)]).unwrap();
        assert_eq!(m, Multiplicity { value: 1, certified: true });
    }

    #[test]
    fn cusp_and_node() {
        let ctx = VarContext::indexed("x", 3);
        let k = Rationals;
        let cusp = parse_poly(&ctx, &k, "x1^2*x2 - x0^3").unwrap();
        let p = [k.from_int(0), k.from_int(0), k.from_int(1)];
        assert_eq!(multiplicity_at(&[cusp.clone()], &p).unwrap().value, 2);
        let node = parse_poly(&ctx, &k, "x1^2*x2 - x0^2*x2 - x0^3").unwrap();
        assert_eq!(multiplicity_at(&[node], &p).unwrap().value, 2);
        assert_eq!(multiplicity_at(&[cusp], &[k.from_int(1), k.from_int(0), k.from_int(0)]), Err(PolyError::PointNotOnLocus));
    }

    #[test]
    fn tangent_curves_need_reduction() {
        // y = x^2 against y = 0 meet with multiplicity 2 at the origin
        let ctx = VarContext::new(["x", "y", "z"]).unwrap();
        let f7 = FiniteField::prime(7).unwrap();
        let f = parse_poly(&ctx, &f7, "y*z - x^2").unwrap();
        let g = parse_poly(&ctx, &f7, "y").unwrap();
        let m = multiplicity_at(&[f, g], &[0, 0, 1]).unwrap();
        assert_eq!(m, Multiplicity { value: 2, certified: true });
    }
}
