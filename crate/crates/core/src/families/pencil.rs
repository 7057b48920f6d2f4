use crate::exactalg::Domain;
use crate::mpoly::{MPoly, PolyError, VarContext};

use super::{build_x, require_char_not, CharMode, FamilyError, FamilyParams, Ring};

/// The restriction of `X` to the line through conjugate points of the two
/// planes, parametrized by `λ`, in the affine chart `x_{2n+1} = 1`.
#[derive(Clone, Debug)]
pub struct LinePencil<D: Domain> {
    /// Context `u1, …, u_{2n}, lam`.
    pub ctx: crate::mpoly::Ctx,
    pub lambda: usize,
    /// `L_0, …, L_{2n+1}` with `L_{2n+1} = 1`.
    pub lines: Vec<MPoly<D>>,
    /// The hypersurface in `x0, …, x_{2n+1}`.
    pub x: MPoly<D>,
    /// Affine `A`, `B` in `u1, …, u_{2n}` (constant term 1).
    pub a: MPoly<D>,
    pub b: MPoly<D>,
    pub d: u32,
}

impl<D: Domain> LinePencil<D> {
    /// `F(L(u, λ))`.
    pub fn f_u(&self) -> Result<MPoly<D>, PolyError> {
        self.x.compose(&self.lines)
    }

    /// `ξ (−3)^d λ^d (λ−1)^d ((A − ξB)/2 − λA)`.
    pub fn factored(&self) -> MPoly<D> {
        let r = Ring::new(&self.ctx, self.a.domain());
        let xi = r.elem(r.xi().expect("pencil domain contains xi"));
        let lam = r.v(self.lambda);
        let minus3d = r.int(-3).pow(self.d);
        let roots = &lam.pow(self.d) * &(lam - &r.int(1)).pow(self.d);
        let linear = &r.half(&(&self.a - &(&xi * &self.b))).expect("odd characteristic") - &(lam * &self.a);
        &(&(&xi * &minus3d) * &roots) * &linear
    }

    /// Both sides evaluated at a point of `(u1, …, u_{2n}, λ)`.
    pub fn values_at(&self, point: &[D::Elem]) -> Result<(D::Elem, D::Elem), PolyError> {
        let k = self.a.domain();
        let xs = self.lines.iter().map(|l| l.evaluate(point)).collect::<Result<Vec<_>, _>>()?;
        let lhs = self.x.evaluate(&xs)?;
        let (a, b) = (self.a.evaluate(point)?, self.b.evaluate(point)?);
        let lam = &point[self.lambda];
        let xi = k.sqrt_minus_three().expect("pencil domain contains xi");
        let half = k.half().expect("odd characteristic");
        let roots = k.mul(&k.pow(lam, self.d as u64), &k.pow(&k.sub(lam, &k.one()), self.d as u64));
        let linear = k.sub(&k.mul(&k.sub(&a, &k.mul(&xi, &b)), &half), &k.mul(lam, &a));
        let scalar = k.mul(&xi, &k.pow(&k.from_int(-3), self.d as u64));
        Ok((lhs, k.mul(&k.mul(&scalar, &roots), &linear)))
    }
}

pub fn build_line_pencil<D: Domain>(params: &FamilyParams, k: &D) -> Result<LinePencil<D>, FamilyError> {
    params.validate()?;
    if params.char_mode != CharMode::Generic {
        return Err(FamilyError::CharModeMismatch { mode: params.char_mode, characteristic: k.characteristic() });
    }
    require_char_not(k, &[2, 3])?;
    let n = params.n;
    let d = params.d;
    let ctx = VarContext::indexed_from("u", 1, 2 * n).extended(["lam"])?;
    let r = Ring::new(&ctx, k);
    let xi = r.elem(r.xi()?);
    let lam = r.v(2 * n);
    let lam_xi = lam * &xi;

    let mut lines = Vec::with_capacity(2 * n + 2);
    for i in 0..n {
        let (u, v) = (r.v(2 * i), r.v(2 * i + 1));
        let even = &r.half(&(&(u - &v.scale_int(3)) + &(&xi * &(u + v))))? - &(&lam_xi * &(u + v));
        let odd = &(u + &(&xi * v)) - &(&lam_xi * v).scale_int(2);
        lines.push(even);
        lines.push(odd);
    }
    lines.push(&r.half(&(&r.int(1) + &xi))? - &lam_xi);
    lines.push(r.int(1));

    let x = build_x(params, k)?;

    let mut a = r.int(1);
    let mut b = r.int(1);
    for i in 0..n {
        let (u, v) = (r.v(2 * i), r.v(2 * i + 1));
        let q = (&u.pow(2) + &v.pow(2).scale_int(3)).pow(d);
        a = &a + &(&(u + &v.scale_int(3)) * &q);
        b = &b + &(&(u - v) * &q);
    }
    Ok(LinePencil { ctx, lambda: 2 * n, lines, x, a, b, d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::QuadraticRationals;

    #[test]
    fn norm_form_of_lines() {
        let k = QuadraticRationals;
        let p = build_line_pencil(&FamilyParams::new(1, 1), &k).unwrap();
        let r = Ring::new(&p.ctx, &k);
        let (l0, l1) = (&p.lines[0], &p.lines[1]);
        let nf = &(&l0.pow(2) - &(l0 * l1)) + &l1.pow(2);
        let lam = r.v(2);
        let expect = &(&(&lam.pow(2) - lam) * &(&r.v(0).pow(2) + &r.v(1).pow(2).scale_int(3))).scale_int(-3);
        assert_eq!(nf, *expect);
        assert_eq!(p.f_u().unwrap(), p.factored());
    }
}
