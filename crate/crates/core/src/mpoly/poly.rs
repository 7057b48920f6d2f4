use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactalg::Domain;

use super::context::{same_ctx, Ctx};
use super::grading::MultiDegree;
use super::monomial::Monomial;
use super::PolyError;

/// Sparse multivariate polynomial: nonzero coefficients keyed by exponent
/// vectors in graded lexicographic order.
#[derive(Clone)]
pub struct MPoly<D: Domain> {
    ctx: Ctx,
    domain: D,
    terms: BTreeMap<Monomial, D::Elem>,
}

impl<D: Domain> PartialEq for MPoly<D> {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl<D: Domain> fmt::Debug for MPoly<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.domain.name(), self)
    }
}

fn accumulate<D: Domain>(d: &D, acc: &mut HashMap<Monomial, D::Elem>, m: Monomial, c: D::Elem) {
    match acc.get_mut(&m) {
        Some(slot) => *slot = d.add(slot, &c),
        None => {
            acc.insert(m, c);
        }
    }
}

impl<D: Domain> MPoly<D> {
    pub fn zero(ctx: &Ctx, domain: &D) -> Self {
        MPoly { ctx: ctx.clone(), domain: domain.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &Ctx, domain: &D, c: D::Elem) -> Self {
        let mut p = Self::zero(ctx, domain);
        if !domain.is_zero(&c) {
            p.terms.insert(Monomial::one(ctx.len()), c);
        }
        p
    }

    pub fn from_int(ctx: &Ctx, domain: &D, c: i64) -> Self {
        Self::constant(ctx, domain, domain.from_int(c))
    }

    pub fn one(ctx: &Ctx, domain: &D) -> Self {
        Self::constant(ctx, domain, domain.one())
    }

    pub fn var(ctx: &Ctx, domain: &D, i: usize) -> Self {
        assert!(i < ctx.len(), "variable index {i} out of range");
        let mut p = Self::zero(ctx, domain);
        p.terms.insert(Monomial::var(ctx.len(), i), domain.one());
        p
    }

    pub fn var_named(ctx: &Ctx, domain: &D, name: &str) -> Result<Self, PolyError> {
        let i = ctx.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.into()))?;
        Ok(Self::var(ctx, domain, i))
    }

    /// All variables of `ctx` in order.
    pub fn vars(ctx: &Ctx, domain: &D) -> Vec<Self> {
        (0..ctx.len()).map(|i| Self::var(ctx, domain, i)).collect()
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms(ctx: &Ctx, domain: &D, terms: impl IntoIterator<Item = (Monomial, D::Elem)>) -> Self {
        let mut acc = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ctx.len(), "exponent vector length");
            accumulate(domain, &mut acc, m, c);
        }
        Self::from_map(ctx, domain, acc)
    }

    fn from_map(ctx: &Ctx, domain: &D, acc: HashMap<Monomial, D::Elem>) -> Self {
        let terms = acc.into_iter().filter(|(_, c)| !domain.is_zero(c)).collect();
        MPoly { ctx: ctx.clone(), domain: domain.clone(), terms }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &D::Elem)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> D::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.domain.zero())
    }

    pub fn constant_term(&self) -> D::Elem {
        self.coeff(&Monomial::one(self.ctx.len()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Smallest degree of a term; `None` for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.order() == self.total_degree()
    }

    /// Common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.total_degree()
        } else {
            None
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &D::Elem)> {
        self.terms.iter().next_back()
    }

    /// Terms of minimal total degree.
    pub fn lowest_form(&self) -> Self {
        let Some(ord) = self.order() else { return self.clone() };
        self.filter_terms(|m| m.degree() == ord)
    }

    /// Terms of total degree exactly `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> Self {
        self.filter_terms(|m| m.degree() == deg)
    }

    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        MPoly {
            ctx: self.ctx.clone(),
            domain: self.domain.clone(),
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    fn check_ctx(&self, other: &Self) -> Result<(), PolyError> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        let d = &self.domain;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(slot) => {
                    let s = d.add(slot, c);
                    if d.is_zero(&s) {
                        terms.remove(m);
                    } else {
                        *slot = s;
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(MPoly { ctx: self.ctx.clone(), domain: d.clone(), terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        let d = &self.domain;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx, d));
        }
        let mut acc = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(d, &mut acc, ma.mul(mb), d.mul(ca, cb));
            }
        }
        Ok(Self::from_map(&self.ctx, d, acc))
    }

    pub fn neg(&self) -> Self {
        let d = &self.domain;
        MPoly {
            ctx: self.ctx.clone(),
            domain: d.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), d.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &D::Elem) -> Self {
        let d = &self.domain;
        if d.is_zero(c) {
            return Self::zero(&self.ctx, d);
        }
        MPoly {
            ctx: self.ctx.clone(),
            domain: d.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), d.mul(a, c))).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&self.domain.from_int(c))
    }

    /// Multiplies by the monomial `m` with coefficient `c`.
    pub fn mul_term(&self, m: &Monomial, c: &D::Elem) -> Self {
        let d = &self.domain;
        if d.is_zero(c) {
            return Self::zero(&self.ctx, d);
        }
        MPoly {
            ctx: self.ctx.clone(),
            domain: d.clone(),
            terms: self.terms.iter().map(|(mm, a)| (mm.mul(m), d.mul(a, c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ctx, &self.domain);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[D::Elem]) -> Result<D::Elem, PolyError> {
        if point.len() != self.ctx.len() {
            return Err(PolyError::LengthMismatch { expected: self.ctx.len(), got: point.len() });
        }
        let d = &self.domain;
        let mut powers: Vec<Vec<D::Elem>> = point.iter().map(|x| vec![d.one(), x.clone()]).collect();
        let mut acc = d.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = d.mul(pw.last().unwrap(), &point[i]);
                    pw.push(next);
                }
                t = d.mul(&t, &pw[e as usize]);
            }
            acc = d.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for variable `i`. All images share one context,
    /// which becomes the context of the result.
    pub fn compose(&self, images: &[Self]) -> Result<Self, PolyError> {
        if images.len() != self.ctx.len() {
            return Err(PolyError::LengthMismatch { expected: self.ctx.len(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ctx.clone(),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| !same_ctx(&p.ctx, &target)) {
            return Err(PolyError::ContextMismatch);
        }
        let d = &self.domain;
        let mut powers: Vec<Vec<Self>> = images.iter().map(|p| vec![Self::one(&target, d), p.clone()]).collect();
        let mut acc: HashMap<Monomial, D::Elem> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, d, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &images[i];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
                if t.is_zero() {
                    break;
                }
            }
            for (mm, cc) in t.terms {
                accumulate(d, &mut acc, mm, cc);
            }
        }
        Ok(Self::from_map(&target, d, acc))
    }

    /// Substitutes the assigned variables; every unassigned variable is
    /// carried over by name into the context of the assignment values.
    pub fn substitute(&self, assignment: &BTreeMap<usize, Self>) -> Result<Self, PolyError> {
        let target = match assignment.values().next() {
            Some(p) => p.ctx.clone(),
            None => return Ok(self.clone()),
        };
        let images = (0..self.ctx.len())
            .map(|i| match assignment.get(&i) {
                Some(p) if same_ctx(&p.ctx, &target) => Ok(p.clone()),
                Some(_) => Err(PolyError::ContextMismatch),
                None => Self::var_named(&target, &self.domain, self.ctx.name(i)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.compose(&images)
    }

    /// Substitutes by variable name, each value given in the result context.
    pub fn substitute_named(&self, assignment: &[(&str, Self)]) -> Result<Self, PolyError> {
        let mut map = BTreeMap::new();
        for (name, p) in assignment {
            let i = self.ctx.index_of(name).ok_or_else(|| PolyError::UnknownVariable((*name).into()))?;
            map.insert(i, p.clone());
        }
        self.substitute(&map)
    }

    /// Re-expresses the polynomial in a context that contains every variable
    /// it uses, matching variables by name.
    pub fn with_context(&self, ctx: &Ctx) -> Result<Self, PolyError> {
        if same_ctx(&self.ctx, ctx) {
            return Ok(self.clone());
        }
        let mut index = Vec::with_capacity(self.ctx.len());
        for i in 0..self.ctx.len() {
            index.push(ctx.index_of(self.ctx.name(i)));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = smallvec::SmallVec::from_elem(0u32, ctx.len());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = index[i].ok_or_else(|| PolyError::UnknownVariable(self.ctx.name(i).into()))?;
                exps[j] = e;
            }
            terms.insert(Monomial::new(exps), c.clone());
        }
        Ok(MPoly { ctx: ctx.clone(), domain: self.domain.clone(), terms })
    }

    /// Multiplies each term by the power of `var` that lifts it to `degree`.
    pub fn homogenize(&self, var: usize, degree: u32) -> Result<Self, PolyError> {
        if var >= self.ctx.len() {
            return Err(PolyError::VariableOutOfRange(var));
        }
        if let Some(top) = self.total_degree() {
            if top > degree {
                return Err(PolyError::DegreeTooSmall { degree: top, target: degree });
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_exp(var, m.exp(var) + degree - m.degree()), c.clone()))
            .collect();
        Ok(MPoly { ctx: self.ctx.clone(), domain: self.domain.clone(), terms })
    }

    /// Sets `var = value` without leaving the context.
    pub fn specialize(&self, var: usize, value: &D::Elem) -> Self {
        let d = &self.domain;
        let mut acc = HashMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let coeff = if e == 0 { c.clone() } else { d.mul(c, &d.pow(value, e as u64)) };
            accumulate(d, &mut acc, m.with_exp(var, 0), coeff);
        }
        Self::from_map(&self.ctx, d, acc)
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let d = &self.domain;
        let mut acc = HashMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            accumulate(d, &mut acc, m.with_exp(var, e - 1), d.mul(c, &d.from_int(e as i64)));
        }
        Self::from_map(&self.ctx, d, acc)
    }

    /// Common multidegree of all terms under `grading` (one entry per
    /// variable); `None` when terms disagree or the polynomial is zero.
    pub fn multi_degree(&self, grading: &[MultiDegree]) -> Option<MultiDegree> {
        assert_eq!(grading.len(), self.ctx.len(), "grading must cover every variable");
        let mut common = None;
        for m in self.terms.keys() {
            let md = m
                .exps()
                .iter()
                .zip(grading)
                .fold(MultiDegree::ZERO, |acc, (&e, g)| acc + g.scaled(e as i64));
            match common {
                None => common = Some(md),
                Some(c) if c == md => {}
                Some(_) => return None,
            }
        }
        common
    }

    /// Coefficients mapped into another domain; `None` if any coefficient
    /// has no image.
    pub fn map_coeffs<E: Domain>(&self, target: &E, f: impl Fn(&D::Elem) -> Option<E::Elem>) -> Option<MPoly<E>> {
        let mut acc = HashMap::new();
        for (m, c) in &self.terms {
            accumulate(target, &mut acc, m.clone(), f(c)?);
        }
        Some(MPoly::<E>::from_map(&self.ctx, target, acc))
    }

    /// Multivariate division by a single divisor in graded lex order.
    /// Returns `(quotient, remainder)` with no remainder term divisible by the
    /// leading monomial of `g`.
    pub fn div_rem(&self, g: &Self) -> Result<(Self, Self), PolyError> {
        self.check_ctx(g)?;
        let d = &self.domain;
        let (lm, lc) = g.leading_term().ok_or(PolyError::DivisionByZero)?;
        let (lm, lc_inv) = (lm.clone(), d.inv(lc).ok_or(PolyError::DivisionByZero)?);
        let mut rest = self.clone();
        let mut quotient: HashMap<Monomial, D::Elem> = HashMap::new();
        let mut remainder: BTreeMap<Monomial, D::Elem> = BTreeMap::new();
        while let Some((m, c)) = rest.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = d.mul(&c, &lc_inv);
                rest = &rest - &g.mul_term(&qm, &qc);
                accumulate(d, &mut quotient, qm, qc);
            } else {
                rest.terms.remove(&m);
                remainder.insert(m, c);
            }
        }
        let q = Self::from_map(&self.ctx, d, quotient);
        let r = MPoly { ctx: self.ctx.clone(), domain: d.clone(), terms: remainder };
        Ok((q, r))
    }

    /// `self / g` when the division is exact.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(g).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn display(&self) -> String {
        self.to_string()
    }
}

impl<D: Domain> fmt::Display for MPoly<D> {
    /// `coeff*var^e*…` terms joined by ` + `, highest term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            self.domain.fmt_elem(c, f)?;
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", self.ctx.name(i))?,
                    _ => write!(f, "*{}^{}", self.ctx.name(i), e)?,
                }
            }
        }
        Ok(())
    }
}

impl<D: Domain> Add for &MPoly<D> {
    type Output = MPoly<D>;
    fn add(self, rhs: Self) -> MPoly<D> {
        self.checked_add(rhs).expect("polynomial context mismatch")
    }
}

impl<D: Domain> Sub for &MPoly<D> {
    type Output = MPoly<D>;
    fn sub(self, rhs: Self) -> MPoly<D> {
        self.checked_sub(rhs).expect("polynomial context mismatch")
    }
}

impl<D: Domain> Mul for &MPoly<D> {
    type Output = MPoly<D>;
    fn mul(self, rhs: Self) -> MPoly<D> {
        self.checked_mul(rhs).expect("polynomial context mismatch")
    }
}

impl<D: Domain> Neg for &MPoly<D> {
    type Output = MPoly<D>;
    fn neg(self) -> MPoly<D> {
        MPoly::neg(self)
    }
}

impl<D: Domain> Add for MPoly<D> {
    type Output = MPoly<D>;
    fn add(self, rhs: Self) -> MPoly<D> {
        &self + &rhs
    }
}

impl<D: Domain> Sub for MPoly<D> {
    type Output = MPoly<D>;
    fn sub(self, rhs: Self) -> MPoly<D> {
        &self - &rhs
    }
}

impl<D: Domain> Mul for MPoly<D> {
    type Output = MPoly<D>;
    fn mul(self, rhs: Self) -> MPoly<D> {
        &self * &rhs
    }
}

impl<D: Domain> Neg for MPoly<D> {
    type Output = MPoly<D>;
    fn neg(self) -> MPoly<D> {
        MPoly::neg(&self)
    }
}

/// Sum of an iterator of polynomials in `ctx`.
pub fn sum<D: Domain>(ctx: &Ctx, domain: &D, items: impl IntoIterator<Item = MPoly<D>>) -> MPoly<D> {
    let mut acc = HashMap::new();
    for p in items {
        assert!(same_ctx(&p.ctx, ctx), "polynomial context mismatch");
        for (m, c) in p.terms {
            accumulate(domain, &mut acc, m, c);
        }
    }
    MPoly::from_map(ctx, domain, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{FiniteField, QuadRational, QuadraticRationals, Rationals};
    use crate::mpoly::VarContext;

    fn xs(n: usize) -> (Ctx, Vec<MPoly<Rationals>>) {
        let ctx = VarContext::indexed("x", n);
        let v = MPoly::vars(&ctx, &Rationals);
        (ctx, v)
    }

    #[test]
    fn square_of_binomial() {
        let (_, x) = xs(2);
        let s = (&x[0] + &x[1]).pow(2);
        assert_eq!(s.to_string(), "1*x0^2 + 2*x0*x1 + 1*x1^2");
        assert_eq!((&x[0] + &x[1]).pow(0), MPoly::one(x[0].ctx(), &Rationals));
    }

    #[test]
    fn expansion_of_norm_form_squared() {
        let ctx = VarContext::new(["u1", "u2"]).unwrap();
        let u = MPoly::vars(&ctx, &Rationals);
        let q = &u[0].pow(2) + &u[1].pow(2).scale_int(3);
        assert_eq!(q.pow(2).to_string(), "1*u1^4 + 6*u1^2*u2^2 + 9*u2^4");
    }

    #[test]
    fn evaluation_examples() {
        let (_, x) = xs(2);
        let k = Rationals;
        let f = &x[0].pow(3) + &x[1].pow(3);
        assert_eq!(f.evaluate(&[k.from_int(1), k.from_int(-1)]).unwrap(), k.zero());

        let kq = QuadraticRationals;
        let ctx = VarContext::new(["u1", "u2"]).unwrap();
        let u = MPoly::vars(&ctx, &kq);
        let q = &u[0].pow(2) + &u[1].pow(2).scale_int(3);
        assert_eq!(q.evaluate(&[QuadRational::from_ints(0, 1), kq.one()]).unwrap(), kq.zero());

        let f7 = FiniteField::prime(7).unwrap();
        let ctx = VarContext::indexed("x", 2);
        let y = MPoly::vars(&ctx, &f7);
        let h = &(&y[0].pow(2) - &(&y[0] * &y[1])) + &y[1].pow(2);
        assert_eq!(h.evaluate(&[2, 3]).unwrap(), 0);
        assert!(h.evaluate(&[2]).is_err());
    }

    #[test]
    fn homogenize_examples() {
        let ctx = VarContext::new(["u0", "u1"]).unwrap();
        let k = Rationals;
        let one = MPoly::one(&ctx, &k);
        let u = MPoly::vars(&ctx, &k);
        assert_eq!(one.homogenize(0, 3).unwrap(), u[0].pow(3));
        let f = &u[1] + &one;
        assert!(matches!(f.homogenize(0, 0), Err(PolyError::DegreeTooSmall { .. })));
        assert_eq!(f.homogenize(0, 1).unwrap(), &u[1] + &u[0]);
    }

    #[test]
    fn derivative_examples() {
        let ctx = VarContext::new(["x"]).unwrap();
        let f3 = FiniteField::prime(3).unwrap();
        let x = MPoly::var(&ctx, &f3, 0);
        assert!(x.pow(3).partial_derivative(0).is_zero());
        let k = Rationals;
        let c = MPoly::from_int(&ctx, &k, 5);
        assert!(c.partial_derivative(0).is_zero());
    }

    #[test]
    fn division() {
        let (_, x) = xs(2);
        let g = &x[0] - &x[1];
        let f = &x[0].pow(3) - &x[1].pow(3);
        let q = f.div_exact(&g).unwrap();
        assert_eq!(&q * &g, f);
        assert!((&f + &x[0]).div_exact(&g).is_none());
    }

    #[test]
    fn substitute_passes_unassigned_through() {
        let (ctx, x) = xs(2);
        let f = &x[0] + &x[1];
        let mut a = BTreeMap::new();
        a.insert(0, MPoly::zero(&ctx, &Rationals));
        assert_eq!(f.substitute(&a).unwrap(), x[1]);
        let mut id = BTreeMap::new();
        id.insert(0, x[0].clone());
        id.insert(1, x[1].clone());
        assert_eq!(f.substitute(&id).unwrap(), f);
    }

    #[test]
    fn context_mismatch_is_reported() {
        let (_, x) = xs(2);
        let other = VarContext::indexed("y", 2);
        let y = MPoly::var(&other, &Rationals, 0);
        assert_eq!(x[0].checked_add(&y), Err(PolyError::ContextMismatch));
    }
}
