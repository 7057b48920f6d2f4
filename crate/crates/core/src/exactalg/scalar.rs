use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Domain, FiniteField, QuadRational, QuadraticRationals, Rationals};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DomainTag {
    Rational,
    QuadraticRational,
    PrimeResidue,
    ExtensionVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("domain mismatch: {0:?} vs {1:?}")]
    DomainMismatch(DomainTag, DomainTag),
    #[error("fields differ: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid payload: {0}")]
    InvalidPayload(String),
}

/// A dynamically tagged element of one of the supported domains.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    Quadratic(QuadRational),
    Residue { p: u64, value: u64 },
    Extension { field: FiniteField, value: u32 },
}

impl Scalar {
    pub fn residue(p: u64, value: i64) -> Self {
        Scalar::Residue { p, value: value.rem_euclid(p as i64) as u64 }
    }

    /// Builds an extension element from its coefficient vector.
    pub fn extension(field: &FiniteField, coeffs: &[u64]) -> Result<Self, ArithError> {
        let value = field
            .from_digits(coeffs)
            .ok_or_else(|| ArithError::InvalidPayload(format!("expected {} digits below {}", field.m(), field.p())))?;
        Ok(Scalar::Extension { field: field.clone(), value })
    }

    pub fn tag(&self) -> DomainTag {
        match self {
            Scalar::Rational(_) => DomainTag::Rational,
            Scalar::Quadratic(_) => DomainTag::QuadraticRational,
            Scalar::Residue { .. } => DomainTag::PrimeResidue,
            Scalar::Extension { .. } => DomainTag::ExtensionVector,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Quadratic(a) => QuadraticRationals.is_zero(a),
            Scalar::Residue { value, .. } => *value == 0,
            Scalar::Extension { value, .. } => *value == 0,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => Rationals.fmt_elem(r, f),
            Scalar::Quadratic(a) => QuadraticRationals.fmt_elem(a, f),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
            Scalar::Extension { field, value } => field.fmt_elem(value, f),
        }
    }
}

fn apply<D: Domain>(d: &D, a: &D::Elem, b: &D::Elem, op: ArithOp) -> Result<D::Elem, ArithError> {
    Ok(match op {
        ArithOp::Add => d.add(a, b),
        ArithOp::Sub => d.sub(a, b),
        ArithOp::Mul => d.mul(a, b),
        ArithOp::Div => d.div(a, b).ok_or(ArithError::DivisionByZero)?,
    })
}

/// Field arithmetic on two scalars of the same domain.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ArithError> {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Ok(Scalar::Rational(apply(&Rationals, x, y, op)?)),
        (Scalar::Quadratic(x), Scalar::Quadratic(y)) => {
            Ok(Scalar::Quadratic(apply(&QuadraticRationals, x, y, op)?))
        }
        (Scalar::Residue { p, value: x }, Scalar::Residue { p: p2, value: y }) => {
            if p != p2 {
                return Err(ArithError::FieldMismatch(format!("F_{p}"), format!("F_{p2}")));
            }
            let f = FiniteField::prime(*p).map_err(|e| ArithError::InvalidPayload(e.to_string()))?;
            let v = apply(&f, &(*x as u32), &(*y as u32), op)?;
            Ok(Scalar::Residue { p: *p, value: v as u64 })
        }
        (Scalar::Extension { field, value: x }, Scalar::Extension { field: f2, value: y }) => {
            if field != f2 {
                return Err(ArithError::FieldMismatch(field.name(), f2.name()));
            }
            Ok(Scalar::Extension { field: field.clone(), value: apply(field, x, y, op)? })
        }
        _ => Err(ArithError::DomainMismatch(a.tag(), b.tag())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        let r = scalar_arith(&Scalar::residue(5, 2), &Scalar::residue(5, 3), ArithOp::Add).unwrap();
        assert_eq!(r, Scalar::residue(5, 0));
        let r = scalar_arith(&Scalar::residue(7, 3), &Scalar::residue(7, 5), ArithOp::Div).unwrap();
        assert_eq!(r, Scalar::residue(7, 2));
    }

    #[test]
    fn quadratic_product() {
        let a = Scalar::Quadratic(QuadRational::from_ints(1, 1));
        let b = Scalar::Quadratic(QuadRational::from_ints(1, -1));
        let r = scalar_arith(&a, &b, ArithOp::Mul).unwrap();
        assert_eq!(r, Scalar::Quadratic(QuadRational::from_ints(4, 0)));
    }

    #[test]
    fn errors() {
        let a = Scalar::residue(5, 1);
        let q = Scalar::Rational(BigRational::zero());
        assert!(matches!(scalar_arith(&a, &q, ArithOp::Add), Err(ArithError::DomainMismatch(..))));
        assert_eq!(
            scalar_arith(&a, &Scalar::residue(5, 0), ArithOp::Div),
            Err(ArithError::DivisionByZero)
        );
        assert!(matches!(
            scalar_arith(&a, &Scalar::residue(7, 1), ArithOp::Add),
            Err(ArithError::FieldMismatch(..))
        ));
    }

    #[test]
    fn extension_payload_validation() {
        let f = FiniteField::new(3, 2).unwrap();
        assert!(Scalar::extension(&f, &[1, 2]).is_ok());
        assert!(Scalar::extension(&f, &[1, 3]).is_err());
        assert!(Scalar::extension(&f, &[1]).is_err());
    }
}
