use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::arith::{checked_pow, is_prime, pow_mod, prime_factors, prime_power};
use super::upoly;
use super::{Domain, FieldError};

/// Characteristic, extension degree and cardinality of a coefficient field.
/// `p = 0` marks ℚ (and ℚ(ξ)), in which case `m = 1` and `q = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    pub q: u64,
}

impl FieldSpec {
    /// Largest supported cardinality (exclusive).
    pub const MAX_Q: u64 = 1 << 31;

    pub fn new(p: u64, m: u32) -> Result<Self, FieldError> {
        if p == 0 {
            return if m == 1 {
                Ok(Self::rationals())
            } else {
                Err(FieldError::ZeroCharacteristicExtension(m))
            };
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        match checked_pow(p, m) {
            Some(q) if q < Self::MAX_Q => Ok(FieldSpec { p, m, q }),
            _ => Err(FieldError::Overflow { p, m }),
        }
    }

    pub fn rationals() -> Self {
        FieldSpec { p: 0, m: 1, q: 0 }
    }

    /// Parses a cardinality given as a prime power.
    pub fn from_q(q: u64) -> Result<Self, FieldError> {
        let (p, m) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Self::new(p, m)
    }

    pub fn is_finite(&self) -> bool {
        self.p != 0
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "Q")
        } else if self.m == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}", self.p, self.m)
        }
    }
}

/// Monic irreducible polynomial of degree `m` over 𝔽_p, coefficients from
/// the constant term up to the leading 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IrreduciblePoly {
    pub p: u64,
    pub m: u32,
    pub coeffs: Vec<u64>,
}

impl IrreduciblePoly {
    /// The smallest monic irreducible of degree `m`, ordering candidates by
    /// their coefficient vector read from degree `m − 1` down to the constant.
    pub fn smallest(p: u64, m: u32) -> Self {
        let count = p.pow(m);
        for enc in 0..count {
            let mut coeffs = digits(enc, p, m as usize);
            coeffs.push(1);
            if upoly::is_irreducible(&coeffs, p) {
                return IrreduciblePoly { p, m, coeffs };
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn is_irreducible(&self) -> bool {
        upoly::is_irreducible(&self.coeffs, self.p)
    }
}

impl fmt::Display for IrreduciblePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*a")?,
                _ => write!(f, "{c}*a^{i}")?,
            }
        }
        Ok(())
    }
}

fn digits(mut enc: u64, p: u64, m: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(m + 1);
    for _ in 0..m {
        out.push(enc % p);
        enc /= p;
    }
    out
}

fn encode(ds: &[u64], p: u64) -> u32 {
    ds.iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32
}

const TABLE_LIMIT: u64 = 1 << 20;

struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

struct Inner {
    spec: FieldSpec,
    modulus: Option<IrreduciblePoly>,
    tables: Option<Tables>,
}

/// A realized finite field 𝔽_q. Elements are encoded as integers in `[0, q)`:
/// residues for prime fields, `Σ c_i p^i` for the coefficient vector
/// `(c_0, …, c_{m−1})` of extension elements.
#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteField({})", self.0.spec)
    }
}

impl FiniteField {
    pub fn new(p: u64, m: u32) -> Result<Self, FieldError> {
        let spec = FieldSpec::new(p, m)?;
        Self::from_spec(spec)
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::new(p, 1)
    }

    pub fn from_q(q: u64) -> Result<Self, FieldError> {
        Self::from_spec(FieldSpec::from_q(q)?)
    }

    pub fn from_spec(spec: FieldSpec) -> Result<Self, FieldError> {
        if !spec.is_finite() {
            return Err(FieldError::NotFinite);
        }
        if spec.m == 1 {
            return Ok(FiniteField(Arc::new(Inner { spec, modulus: None, tables: None })));
        }
        let modulus = IrreduciblePoly::smallest(spec.p, spec.m);
        let mut field = FiniteField(Arc::new(Inner { spec, modulus: Some(modulus), tables: None }));
        if spec.q <= TABLE_LIMIT {
            let tables = field.build_tables();
            let inner = Arc::get_mut(&mut field.0).expect("freshly built field is unshared");
            inner.tables = Some(tables);
        }
        Ok(field)
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec
    }

    pub fn p(&self) -> u64 {
        self.0.spec.p
    }

    pub fn m(&self) -> u32 {
        self.0.spec.m
    }

    pub fn q(&self) -> u64 {
        self.0.spec.q
    }

    pub fn modulus(&self) -> Option<&IrreduciblePoly> {
        self.0.modulus.as_ref()
    }

    /// Coefficient vector of an element, length `m`.
    pub fn digits(&self, a: u32) -> Vec<u64> {
        digits(a as u64, self.p(), self.m() as usize)
    }

    pub fn from_digits(&self, ds: &[u64]) -> Option<u32> {
        if ds.len() != self.m() as usize || ds.iter().any(|&d| d >= self.p()) {
            return None;
        }
        Some(encode(ds, self.p()))
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q() as u32
    }

    /// Reduces a rational number; `None` when `p` divides the denominator.
    pub fn from_rational(&self, r: &BigRational) -> Option<u32> {
        let p = BigInt::from(self.p());
        let num = r.numer().mod_floor(&p).to_u64()?;
        let den = r.denom().mod_floor(&p).to_u64()?;
        if den == 0 {
            return None;
        }
        let v = num * pow_mod(den, self.p() - 2, self.p()) % self.p();
        Some(v as u32)
    }

    fn poly_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p();
        let m = self.m() as usize;
        let modulus = &self.0.modulus.as_ref().expect("extension field").coeffs;
        let da = digits(a as u64, p, m);
        let db = digits(b as u64, p, m);
        let prod = upoly::mulmod(&da, &db, modulus, p);
        let mut out = prod;
        out.resize(m, 0);
        encode(&out, p)
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul(acc, base);
            }
            base = self.poly_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&self) -> Tables {
        let q = self.q();
        let order = q - 1;
        let factors = prime_factors(order);
        let gen = (1..q as u32)
            .find(|&g| factors.iter().all(|&r| self.slow_pow(g, order / r) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for k in 0..order {
            exp.push(cur);
            log[cur as usize] = k as u32;
            cur = self.poly_mul(cur, gen);
        }
        Tables { log, exp }
    }

    /// A square root of `a`, if one exists.
    pub fn sqrt(&self, a: &u32) -> Option<u32> {
        let a = *a;
        if a == 0 {
            return Some(0);
        }
        let q = self.q();
        if self.p() == 2 {
            return Some(self.pow(&a, q / 2));
        }
        let minus_one = self.neg(&1);
        if self.pow(&a, (q - 1) / 2) != 1 {
            return None;
        }
        let mut s = 0u32;
        let mut t = q - 1;
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        let z = (2..q as u32)
            .find(|z| self.pow(z, (q - 1) / 2) == minus_one)
            .expect("odd fields contain non-squares");
        let mut big_m = s;
        let mut c = self.pow(&z, t);
        let mut tt = self.pow(&a, t);
        let mut r = self.pow(&a, (t + 1) / 2);
        while tt != 1 {
            let mut i = 0u32;
            let mut probe = tt;
            while probe != 1 {
                probe = self.mul(&probe, &probe);
                i += 1;
            }
            let b = self.pow(&c, 1u64 << (big_m - i - 1));
            big_m = i;
            c = self.mul(&b, &b);
            tt = self.mul(&tt, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }
}

impl Domain for FiniteField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p() as i64) as u32
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let p = self.p();
        if self.m() == 1 {
            return ((*a as u64 + *b as u64) % p) as u32;
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut x, mut y) = (*a as u64, *b as u64);
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.m() {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        out as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        let p = self.p();
        if self.m() == 1 {
            return ((p - *a as u64) % p) as u32;
        }
        if p == 2 {
            return *a;
        }
        let mut x = *a as u64;
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.m() {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        out as u32
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if self.m() == 1 {
            return ((*a as u64 * *b as u64) % self.p()) as u32;
        }
        if *a == 0 || *b == 0 {
            return 0;
        }
        match &self.0.tables {
            Some(t) => {
                let order = t.exp.len();
                let k = t.log[*a as usize] as usize + t.log[*b as usize] as usize;
                t.exp[if k >= order { k - order } else { k }]
            }
            None => self.poly_mul(*a, *b),
        }
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        if self.m() == 1 {
            return Some(pow_mod(*a as u64, self.p() - 2, self.p()) as u32);
        }
        match &self.0.tables {
            Some(t) => {
                let order = t.exp.len();
                let k = t.log[*a as usize] as usize;
                Some(t.exp[(order - k) % order])
            }
            None => Some(self.slow_pow(*a, self.q() - 2)),
        }
    }

    fn characteristic(&self) -> u64 {
        self.p()
    }

    fn sqrt_minus_three(&self) -> Option<u32> {
        let r = self.sqrt(&self.from_int(-3))?;
        Some(r.min(self.neg(&r)))
    }

    fn fmt_elem(&self, a: &u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            return write!(f, "{a}");
        }
        let ds = self.digits(*a);
        let terms: Vec<String> = ds
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*a"),
                _ => format!("{c}*a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else if terms.len() == 1 {
            write!(f, "{}", terms[0])
        } else {
            write!(f, "({})", terms.join("+"))
        }
    }

    fn name(&self) -> String {
        self.spec().to_string()
    }

    fn pow(&self, a: &u32, e: u64) -> u32 {
        if self.m() == 1 {
            return pow_mod(*a as u64, e, self.p()) as u32;
        }
        if let Some(t) = &self.0.tables {
            if *a == 0 {
                return if e == 0 { 1 } else { 0 };
            }
            let order = t.exp.len() as u64;
            let k = (t.log[*a as usize] as u64 * (e % order)) % order;
            return t.exp[k as usize];
        }
        self.slow_pow(*a, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(FieldSpec::new(4, 1).is_err());
        assert!(FieldSpec::new(0, 2).is_err());
        assert!(FieldSpec::new(2, 40).is_err());
        assert_eq!(FieldSpec::from_q(25).unwrap(), FieldSpec { p: 5, m: 2, q: 25 });
    }

    #[test]
    fn prime_field_division() {
        let f = FiniteField::prime(7).unwrap();
        assert_eq!(f.div(&3, &5), Some(2));
        assert_eq!(f.add(&2, &5), 0);
    }

    #[test]
    fn f9_uses_x_squared_plus_one() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus().unwrap().coeffs, vec![1, 0, 1]);
        // a = encoding 3, a^2 = -1
        assert_eq!(f.mul(&3, &3), f.neg(&1));
    }

    #[test]
    fn table_and_polynomial_multiplication_agree() {
        let f = FiniteField::new(5, 2).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(&a, &b), if a == 0 || b == 0 { 0 } else { f.poly_mul(a, b) });
            }
        }
    }

    #[test]
    fn reduce_rationals() {
        let f = FiniteField::prime(7).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half), Some(4));
        let sevenths = BigRational::new(1.into(), 7.into());
        assert_eq!(f.from_rational(&sevenths), None);
    }
}
