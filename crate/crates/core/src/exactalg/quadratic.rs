use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::fmt_rational;
use super::Domain;

/// `re + xi·ξ` with `ξ² = −3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRational {
    pub re: BigRational,
    pub xi: BigRational,
}

impl QuadRational {
    pub fn new(re: BigRational, xi: BigRational) -> Self {
        QuadRational { re, xi }
    }

    pub fn from_ints(re: i64, xi: i64) -> Self {
        QuadRational {
            re: BigRational::from_integer(BigInt::from(re)),
            xi: BigRational::from_integer(BigInt::from(xi)),
        }
    }

    pub fn rational(re: BigRational) -> Self {
        QuadRational { re, xi: BigRational::zero() }
    }

    /// Image under the Galois involution `ξ ↦ −ξ`.
    pub fn conj(&self) -> Self {
        QuadRational { re: self.re.clone(), xi: -&self.xi }
    }

    /// `a² + 3b²`, the field norm down to ℚ.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + BigRational::from_integer(BigInt::from(3)) * &self.xi * &self.xi
    }
}

/// The quadratic field ℚ(ξ), ξ² = −3.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuadraticRationals;

impl Domain for QuadraticRationals {
    type Elem = QuadRational;

    fn zero(&self) -> QuadRational {
        QuadRational::from_ints(0, 0)
    }

    fn one(&self) -> QuadRational {
        QuadRational::from_ints(1, 0)
    }

    fn from_int(&self, n: i64) -> QuadRational {
        QuadRational::from_ints(n, 0)
    }

    fn add(&self, a: &QuadRational, b: &QuadRational) -> QuadRational {
        QuadRational { re: &a.re + &b.re, xi: &a.xi + &b.xi }
    }

    fn neg(&self, a: &QuadRational) -> QuadRational {
        QuadRational { re: -&a.re, xi: -&a.xi }
    }

    fn sub(&self, a: &QuadRational, b: &QuadRational) -> QuadRational {
        QuadRational { re: &a.re - &b.re, xi: &a.xi - &b.xi }
    }

    fn mul(&self, a: &QuadRational, b: &QuadRational) -> QuadRational {
        let three = BigRational::from_integer(BigInt::from(3));
        QuadRational {
            re: &a.re * &b.re - three * &a.xi * &b.xi,
            xi: &a.re * &b.xi + &a.xi * &b.re,
        }
    }

    fn is_zero(&self, a: &QuadRational) -> bool {
        a.re.is_zero() && a.xi.is_zero()
    }

    fn inv(&self, a: &QuadRational) -> Option<QuadRational> {
        if self.is_zero(a) {
            return None;
        }
        let n = a.norm();
        Some(QuadRational { re: &a.re / &n, xi: -&a.xi / &n })
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn sqrt_minus_three(&self) -> Option<QuadRational> {
        Some(QuadRational::from_ints(0, 1))
    }

    fn fmt_elem(&self, a: &QuadRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (a.re.is_zero(), a.xi.is_zero()) {
            (_, true) => fmt_rational(&a.re, f),
            (true, false) => {
                fmt_rational(&a.xi, f)?;
                write!(f, "*xi")
            }
            (false, false) => {
                write!(f, "(")?;
                fmt_rational(&a.re, f)?;
                if a.xi.is_negative() {
                    write!(f, "-")?;
                    fmt_rational(&-&a.xi, f)?;
                } else {
                    write!(f, "+")?;
                    fmt_rational(&a.xi, f)?;
                }
                write!(f, "*xi)")
            }
        }
    }

    fn name(&self) -> String {
        "Q(xi)".into()
    }

    fn is_one(&self, a: &QuadRational) -> bool {
        a.re.is_one() && a.xi.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_squared_is_minus_three() {
        let k = QuadraticRationals;
        let xi = k.sqrt_minus_three().unwrap();
        assert_eq!(k.mul(&xi, &xi), k.from_int(-3));
    }

    #[test]
    fn one_plus_xi_times_one_minus_xi() {
        let k = QuadraticRationals;
        let a = QuadRational::from_ints(1, 1);
        let b = QuadRational::from_ints(1, -1);
        assert_eq!(k.mul(&a, &b), k.from_int(4));
    }

    #[test]
    fn inverse_roundtrip() {
        let k = QuadraticRationals;
        let a = QuadRational::from_ints(2, -5);
        let ai = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &ai), k.one());
        assert!(k.inv(&k.zero()).is_none());
    }
}
