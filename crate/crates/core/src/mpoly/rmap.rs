use crate::exactalg::Domain;

use super::context::{same_ctx, Ctx};
use super::grading::MultiDegree;
use super::poly::MPoly;
use super::PolyError;

/// Declared common degree of the components of a [`RationalMap`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapDegree {
    Total(u32),
    /// Multidegree together with the grading of the source variables.
    Multi(MultiDegree, Vec<MultiDegree>),
}

/// A rational map between projective spaces given by homogeneous components
/// of one common degree.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap<D: Domain> {
    source: Ctx,
    components: Vec<MPoly<D>>,
    degree: MapDegree,
}

impl<D: Domain> RationalMap<D> {
    pub fn new(components: Vec<MPoly<D>>, degree: MapDegree) -> Result<Self, PolyError> {
        let source = components.first().ok_or(PolyError::AllZero)?.ctx().clone();
        for (i, c) in components.iter().enumerate() {
            if !same_ctx(c.ctx(), &source) {
                return Err(PolyError::ContextMismatch);
            }
            if c.is_zero() {
                continue;
            }
            let ok = match &degree {
                MapDegree::Total(t) => c.homogeneous_degree() == Some(*t),
                MapDegree::Multi(md, grading) => c.multi_degree(grading) == Some(*md),
            };
            if !ok {
                return Err(PolyError::NotHomogeneous(i));
            }
        }
        if components.iter().all(MPoly::is_zero) {
            return Err(PolyError::AllZero);
        }
        Ok(RationalMap { source, components, degree })
    }

    /// Infers the total degree from the first nonzero component.
    pub fn from_components(components: Vec<MPoly<D>>) -> Result<Self, PolyError> {
        let deg = components
            .iter()
            .find_map(MPoly::total_degree)
            .ok_or(PolyError::AllZero)?;
        Self::new(components, MapDegree::Total(deg))
    }

    pub fn source(&self) -> &Ctx {
        &self.source
    }

    /// Number of homogeneous source coordinates.
    pub fn source_len(&self) -> usize {
        self.source.len()
    }

    /// Number of components, i.e. homogeneous target coordinates.
    pub fn target_len(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MPoly<D>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &MPoly<D> {
        &self.components[i]
    }

    pub fn degree(&self) -> &MapDegree {
        &self.degree
    }

    pub fn total_degree(&self) -> Option<u32> {
        match self.degree {
            MapDegree::Total(t) => Some(t),
            MapDegree::Multi(..) => None,
        }
    }

    pub fn domain(&self) -> &D {
        self.components[0].domain()
    }

    pub fn eval(&self, point: &[D::Elem]) -> Result<Vec<D::Elem>, PolyError> {
        self.components.iter().map(|c| c.evaluate(point)).collect()
    }

    /// `self ∘ inner`: substitutes the components of `inner` into `self`.
    pub fn compose(&self, inner: &RationalMap<D>) -> Result<RationalMap<D>, PolyError> {
        if self.source_len() != inner.target_len() {
            return Err(PolyError::LengthMismatch { expected: self.source_len(), got: inner.target_len() });
        }
        let comps = self
            .components
            .iter()
            .map(|c| c.compose(&inner.components))
            .collect::<Result<Vec<_>, _>>()?;
        match (self.total_degree(), inner.total_degree()) {
            (Some(a), Some(b)) => Self::new(comps, MapDegree::Total(a * b)),
            _ => Self::from_components(comps),
        }
    }

    /// `f ∘ self` for a polynomial `f` on the target space.
    pub fn pullback(&self, f: &MPoly<D>) -> Result<MPoly<D>, PolyError> {
        f.compose(&self.components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rationals;
    use crate::mpoly::VarContext;

    #[test]
    fn validation() {
        let ctx = VarContext::indexed("x", 2);
        let x = MPoly::vars(&ctx, &Rationals);
        let zero = MPoly::zero(&ctx, &Rationals);
        assert!(RationalMap::from_components(vec![x[0].pow(2), &x[0] * &x[1]]).is_ok());
        assert_eq!(
            RationalMap::new(vec![x[0].pow(2), x[1].clone()], MapDegree::Total(2)),
            Err(PolyError::NotHomogeneous(1))
        );
        assert_eq!(RationalMap::from_components(vec![zero.clone(), zero]), Err(PolyError::AllZero));
    }

    #[test]
    fn squaring_map_composes() {
        let ctx = VarContext::indexed("x", 2);
        let x = MPoly::vars(&ctx, &Rationals);
        let sq = RationalMap::from_components(vec![x[0].pow(2), x[1].pow(2)]).unwrap();
        let four = sq.compose(&sq).unwrap();
        assert_eq!(four.total_degree(), Some(4));
        assert_eq!(four.component(1), &x[1].pow(4));
    }
}
