//! Exact coefficient domains: ℚ, ℚ(ξ) with ξ² = −3, and finite fields 𝔽_{p^m}.

pub mod arith;
mod domain;
mod finite;
pub mod linalg;
mod quadratic;
mod rational;
mod scalar;
mod upoly;

pub use domain::{Domain, ElemDisplay};
pub use finite::{FieldSpec, FiniteField, IrreduciblePoly};
pub use quadratic::{QuadRational, QuadraticRationals};
pub use rational::{common_denominator, rat, Rationals};
pub use scalar::{scalar_arith, ArithError, ArithOp, DomainTag, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("characteristic 0 admits only m = 1, got m = {0}")]
    ZeroCharacteristicExtension(u32),
    #[error("{p}^{m} exceeds the supported field size 2^31")]
    Overflow { p: u64, m: u32 },
    #[error("a finite field was required")]
    NotFinite,
}

/// Builds 𝔽_{p^m}; for `m > 1` the smallest monic irreducible of degree `m`
/// is attached, so repeated calls give identical realizations.
pub fn field_create(p: u64, m: u32) -> Result<FiniteField, FieldError> {
    FiniteField::new(p, m)
}

/// A square root of −3 in `field`, the one with smaller encoding when there
/// are two.
pub fn sqrt_of_minus_three(field: &FiniteField) -> Option<u32> {
    field.sqrt_minus_three()
}

/// Whether −3 is a square in 𝔽_{p^m}: `m` even, `p ≡ 1 (mod 6)`, or `p ∈ {2, 3}`.
pub fn minus_three_is_square(spec: FieldSpec) -> bool {
    spec.m % 2 == 0 || spec.p % 6 == 1 || spec.p == 2 || spec.p == 3
}

/// Number of roots of `x^D + 1` in the field, by exhaustive evaluation.
pub fn root_count_unity(field: &FiniteField, degree: u64) -> u64 {
    let minus_one = field.neg(&field.one());
    let count = field.elements().filter(|x| field.pow(x, degree) == minus_one).count() as u64;
    if degree % 2 == 1 {
        debug_assert_eq!(count, arith::gcd(field.q() - 1, degree));
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_minus_three_examples() {
        assert_eq!(sqrt_of_minus_three(&field_create(5, 1).unwrap()), None);
        assert_eq!(sqrt_of_minus_three(&field_create(7, 1).unwrap()), Some(2));
        let f25 = field_create(5, 2).unwrap();
        let r = sqrt_of_minus_three(&f25).unwrap();
        assert_eq!(f25.mul(&r, &r), f25.from_int(-3));
    }

    #[test]
    fn root_counts() {
        assert_eq!(root_count_unity(&field_create(7, 1).unwrap(), 3), 3);
        assert_eq!(root_count_unity(&field_create(5, 1).unwrap(), 3), 1);
        assert_eq!(root_count_unity(&field_create(2, 1).unwrap(), 1), 1);
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(field_create(4, 1).unwrap_err(), FieldError::NotPrime(4));
    }
}
