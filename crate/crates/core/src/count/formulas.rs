use serde::Serialize;

use crate::exactalg::arith::{gcd, prime_power};

use super::{projective_count, CountError};

/// Closed-form point count of the surface `X²_d` over 𝔽_q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct X2dFormula {
    pub value: u64,
    /// Name of the case that produced `value`.
    pub branch: &'static str,
    /// For `p = 2` the parity may also be read off the dimension index
    /// (`n = 1`, odd); this is that count when it differs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alt_value: Option<u64>,
}

pub fn formula_x2d(q: u64, d: u32) -> Result<X2dFormula, CountError> {
    let (p, m) = prime_power(q).ok_or(CountError::InvalidQ(q))?;
    let e = 2 * d as u64 + 1;
    let s = gcd(q - 1, e);
    let plain = q * q + s * q + 1;
    let split = q * q + (4 + s) * q + 1;
    let out = if p == 3 {
        let mut g = e;
        while g % 3 == 0 {
            g /= 3;
        }
        X2dFormula { value: gcd(g, q - 1) * q * q + q + 1, branch: "p = 3", alt_value: None }
    } else if p == 2 {
        if m % 2 == 1 {
            X2dFormula { value: plain, branch: "p = 2, m odd", alt_value: None }
        } else {
            X2dFormula { value: split, branch: "p = 2, m even", alt_value: (plain != split).then_some(plain) }
        }
    } else if q % 6 == 5 {
        X2dFormula { value: plain, branch: "q = 5 mod 6", alt_value: None }
    } else {
        X2dFormula { value: split, branch: "q = 1 mod 6", alt_value: None }
    };
    Ok(out)
}

fn split_free(q: u64, d: u32) -> bool {
    q % 6 == 5 && gcd(2 * d as u64 + 1, q - 1) == 1
}

/// `|ℙ^{2n}(𝔽_q)|` when `q ≡ 5 mod 6` and `gcd(2d+1, q−1) = 1`.
pub fn formula_high_dim(q: u64, n: usize, d: u32) -> Option<u64> {
    prime_power(q)?;
    split_free(q, d).then(|| projective_count(q, 2 * n)).flatten()
}

/// `|ℙ^{2n−2}(𝔽_q)|` for the base locus, under the same conditions and `n ≥ 2`.
pub fn formula_y(q: u64, n: usize, d: u32) -> Option<u64> {
    prime_power(q)?;
    (n >= 2 && split_free(q, d)).then(|| projective_count(q, 2 * n - 2)).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branches() {
        assert_eq!(formula_x2d(5, 1).unwrap().value, 31);
        assert_eq!(formula_x2d(7, 1).unwrap().value, 99);
        assert_eq!(formula_x2d(3, 1).unwrap().value, 13);
        assert_eq!(formula_x2d(9, 2).unwrap().value, 91);
        assert_eq!(formula_x2d(4, 1).unwrap().branch, "p = 2, m even");
        assert!(matches!(formula_x2d(12, 1), Err(CountError::InvalidQ(12))));
    }

    #[test]
    fn gated_formulas() {
        assert_eq!(formula_high_dim(5, 2, 1), Some(781));
        assert_eq!(formula_high_dim(11, 2, 1), Some(16105));
        assert_eq!(formula_high_dim(11, 2, 2), None);
        assert_eq!(formula_high_dim(7, 2, 1), None);
        assert_eq!(formula_y(5, 2, 1), Some(31));
        assert_eq!(formula_y(11, 2, 1), Some(133));
        assert_eq!(formula_y(5, 1, 1), None);
    }
}
