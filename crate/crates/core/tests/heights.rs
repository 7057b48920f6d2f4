use hyperrat::heights::{
    direct_height_count, height_of, height_report, parametrized_height_count, reduced_representative, HeightConfig,
    HeightError, HeightMode,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

/// Four nested loops over the box, no join.
fn brute_count(d: u32, b: i64) -> u64 {
    let f = |a: i64, c: i64| (a + c) * (a * a - a * c + c * c).pow(d);
    let mut n = 0;
    for x0 in -b..=b {
        for x1 in -b..=b {
            for x2 in -b..=b {
                for x3 in -b..=b {
                    let pt = [x0, x1, x2, x3];
                    let lead = pt.iter().find(|&&c| c != 0);
                    let g = pt.iter().fold(0i64, |acc, &c| acc.gcd(&c));
                    if lead.is_some_and(|&l| l > 0) && g == 1 && f(x0, x1) + f(x2, x3) == 0 {
                        n += 1;
                    }
                }
            }
        }
    }
    n
}

fn surface_value(d: u32, p: &[BigInt]) -> BigInt {
    p.chunks(2)
        .map(|c| (&c[0] + &c[1]) * num_traits::pow(&c[0] * &c[0] - &c[0] * &c[1] + &c[1] * &c[1], d as usize))
        .sum()
}

fn q(n: i64, den: i64) -> BigRational {
    BigRational::new(n.into(), den.into())
}

#[test]
fn direct_count_matches_brute_force() {
    let cfg = HeightConfig::default();
    for d in 1..=2 {
        for b in 1..=6 {
            assert_eq!(direct_height_count(d, b, &cfg).unwrap(), brute_count(d, b as i64), "d={d} B={b}");
        }
    }
}

#[test]
fn direct_counts_are_monotone() {
    let cfg = HeightConfig::default();
    let counts: Vec<u64> = (1..=20).map(|b| direct_height_count(1, b, &cfg).unwrap()).collect();
    assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(&counts[..5], &[9, 21, 45, 69, 117]);
}

#[test]
fn parametrized_points_lie_on_the_surface() {
    let cfg = HeightConfig::default();
    for d in 1..=2 {
        let pc = parametrized_height_count(d, 5000, &cfg).unwrap();
        assert!(pc.count > 0);
        for p in &pc.points {
            assert_eq!(surface_value(d, p), BigInt::from(0), "{p:?}");
            assert!(p.iter().all(|c| c.abs() <= BigInt::from(5000)));
        }
    }
}

#[test]
fn parametrized_count_is_bounded_by_direct() {
    let cfg = HeightConfig::default();
    for b in [1u64, 16, 20, 60] {
        let r = height_report(1, b, HeightMode::Both, &cfg).unwrap();
        assert!(r.parametrized.unwrap() <= r.direct.unwrap(), "B={b}");
    }
}

#[test]
fn height_errors() {
    let cfg = HeightConfig::default();
    assert!(matches!(direct_height_count(1, 61, &cfg), Err(HeightError::Budget { .. })));
    assert_eq!(direct_height_count(0, 1, &cfg), Err(HeightError::Degree));
    assert_eq!(reduced_representative(&[q(0, 1), q(0, 3)]), Err(HeightError::ZeroVector));
    assert_eq!(height_of(&[q(-1, 2), q(2, 3), q(0, 1)]).unwrap(), BigInt::from(4));
}

proptest! {
    #[test]
    fn reduction_is_idempotent_and_scale_invariant(
        coords in prop::collection::vec((-50i64..=50, 1i64..=30), 1..5),
        scale in (-9i64..=9, 1i64..=9),
    ) {
        let pt: Vec<BigRational> = coords.iter().map(|&(n, d)| q(n, d)).collect();
        prop_assume!(pt.iter().any(|c| *c != q(0, 1)));
        let r = reduced_representative(&pt).unwrap();
        let again: Vec<BigRational> = r.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        prop_assert_eq!(&reduced_representative(&again).unwrap(), &r);
        prop_assume!(scale.0 != 0);
        let s = q(scale.0, scale.1);
        let scaled: Vec<BigRational> = pt.iter().map(|c| c * &s).collect();
        prop_assert_eq!(reduced_representative(&scaled).unwrap(), r);
    }
}
