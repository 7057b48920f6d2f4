use std::collections::HashSet;

use hyperrat::count::{
    check_projection_bijection, count_x, count_x_delta, count_y, count_y0_structure, count_zeros, enumerate_projective,
    formula_x2d, hyperplane_slices, reduce_quadratic, reduce_rational, CountConfig, CountError,
};
use hyperrat::exactalg::{FiniteField, QuadraticRationals, Rationals};
use hyperrat::families::{build_ab, build_x, FamilyParams};
use hyperrat::mpoly::{parse_poly, VarContext};
use hyperrat::verify::Status;
use proptest::prelude::*;

/// Affine-cone count over a prime field: nonzero vectors on which `f`
/// vanishes, divided by `p − 1`.
fn cone_count(p: u64, nvars: usize, f: impl Fn(&[u64]) -> u64) -> u64 {
    let total = p.pow(nvars as u32);
    let mut v = vec![0u64; nvars];
    let mut zeros = 0;
    for idx in 1..total {
        let mut r = idx;
        for c in v.iter_mut() {
            *c = r % p;
            r /= p;
        }
        if f(&v) % p == 0 {
            zeros += 1;
        }
    }
    zeros / (p - 1)
}

fn x_cone(p: u64, d: u32) -> impl Fn(&[u64]) -> u64 {
    move |v: &[u64]| {
        v.chunks(2)
            .map(|c| {
                let (a, b) = (c[0], c[1]);
                let q = (a * a + p * p - a * b + b * b) % p;
                (a + b) % p * modpow(q, d, p) % p
            })
            .sum::<u64>()
    }
}

fn modpow(b: u64, e: u32, p: u64) -> u64 {
    (0..e).fold(1, |acc, _| acc * b % p)
}

fn cfg() -> CountConfig {
    CountConfig::default()
}

#[test]
fn surface_counts_match_cone_oracle() {
    for p in [5u64, 7, 11, 13] {
        for d in 1..=3 {
            let k = FiniteField::prime(p).unwrap();
            let r = count_x(1, d, &k, &cfg()).unwrap();
            assert_eq!(r.brute, cone_count(p, 4, x_cone(p, d)), "p={p} d={d}");
            assert!(r.matches);
        }
    }
}

#[test]
fn fourfold_count_matches_cone_oracle() {
    let k = FiniteField::prime(5).unwrap();
    assert_eq!(count_x(2, 1, &k, &cfg()).unwrap().brute, cone_count(5, 6, x_cone(5, 1)));
}

#[test]
fn base_locus_counts() {
    for q in [5u64, 11] {
        let r = count_y(2, 1, &FiniteField::prime(q).unwrap(), &cfg()).unwrap();
        assert!(r.matches, "{r:?}");
    }
    let r = count_y(1, 1, &FiniteField::prime(5).unwrap(), &cfg()).unwrap();
    assert_eq!(r.formula, None);
    assert!(!r.matches && r.gate.is_some());
}

#[test]
fn enumeration_is_canonical() {
    for (q, n) in [(2u64, 1usize), (4, 2), (5, 2), (3, 3), (9, 2)] {
        let k = FiniteField::from_q(q).unwrap();
        let pts: Vec<_> = enumerate_projective(&k, n, 1 << 30).unwrap().collect();
        assert_eq!(pts.len() as u64, (q.pow(n as u32 + 1) - 1) / (q - 1));
        let distinct: HashSet<_> = pts.iter().map(|p| p.coords.clone()).collect();
        assert_eq!(distinct.len(), pts.len());
        assert!(pts.iter().all(|p| p.coords[p.chart()] == 1));
        // charts appear in ascending order
        assert!(pts.windows(2).all(|w| w[0].chart() <= w[1].chart()));
    }
}

#[test]
fn formula_examples() {
    assert_eq!(formula_x2d(5, 1).unwrap().value, 31);
    assert_eq!(formula_x2d(7, 1).unwrap().value, 99);
    assert_eq!(formula_x2d(3, 1).unwrap().value, 13);
    assert_eq!(formula_x2d(9, 2).unwrap().value, 91);
    let f4 = formula_x2d(4, 1).unwrap();
    assert_eq!((f4.value, f4.alt_value), (45, Some(29)));
    let k = FiniteField::from_q(4).unwrap();
    assert_eq!(count_x(1, 1, &k, &cfg()).unwrap().brute, 45);
}

#[test]
fn projection_bijection_examples() {
    let ccfg = cfg();
    let f5 = FiniteField::prime(5).unwrap();
    let ctx = VarContext::indexed("x", 3);
    let f = parse_poly(&ctx, &f5, "x0^3 + x1^3 + x2^3").unwrap();
    let r = check_projection_bijection(&f, 1, 3, &ccfg);
    assert!(r.pass);
    assert_eq!(r.details["brute"], 31);
    let f7 = FiniteField::prime(7).unwrap();
    let f = parse_poly(&ctx, &f7, "x0^3 + x1^3 + x2^3").unwrap();
    assert_eq!(check_projection_bijection(&f, 1, 3, &ccfg).status, Status::Inapplicable);
    let ctx2 = VarContext::indexed("x", 2);
    let f = parse_poly(&ctx2, &f7, "x0^5 + x1^5").unwrap();
    let r = check_projection_bijection(&f, 2, 5, &ccfg);
    assert!(r.pass);
    assert_eq!(r.details["brute"], 8);
}

#[test]
fn delta_family_counts() {
    let f5 = FiniteField::prime(5).unwrap();
    let r = count_x_delta(1, 3, 1, &f5, &cfg()).unwrap();
    assert_eq!((r.brute, r.matches), (31, true));
    let f7 = FiniteField::prime(7).unwrap();
    assert_eq!(count_x_delta(1, 3, 2, &f7, &cfg()).unwrap().formula, None);
    let f13 = FiniteField::prime(13).unwrap();
    let r = count_x_delta(1, 5, 1, &f13, &cfg()).unwrap();
    assert_eq!((r.brute, r.matches), (183, true));
}

#[test]
fn y0_structure() {
    for (q, d) in [(7u64, 1u32), (49, 1), (31, 2)] {
        let k = FiniteField::from_q(q).unwrap();
        let s = count_y0_structure(d, &k, &cfg()).unwrap();
        assert_eq!(s.special_multiplicities, [2 * d * d + d; 2]);
        assert_eq!(s.weighted_total, 4 * d * d + 4 * d + 1, "q={q}");
        assert_eq!(s.simple_points, 2 * d as usize + 1);
    }
    // 13 has a single fifth root of -1, so only one simple point is rational
    let s = count_y0_structure(2, &FiniteField::prime(13).unwrap(), &cfg()).unwrap();
    assert_eq!((s.simple_points, s.weighted_total), (1, 21));
    assert!(matches!(count_y0_structure(1, &FiniteField::prime(5).unwrap(), &cfg()), Err(CountError::MissingXi)));
}

#[test]
fn hyperplane_slices_add_up() {
    let r = hyperplane_slices(2, 1, &FiniteField::prime(5).unwrap(), &cfg()).unwrap();
    assert!(r.consistent);
    assert_eq!(r.slices.len(), 6);
    assert_eq!(r.total, 781);
}

#[test]
fn reduction_into_finite_fields() {
    let f7 = FiniteField::prime(7).unwrap();
    let (a, b) = build_ab(&FamilyParams::new(2, 1), &Rationals).unwrap();
    let (ra, rb) = (reduce_rational(&a, &f7).unwrap(), reduce_rational(&b, &f7).unwrap());
    assert_eq!((ra, rb), build_ab(&FamilyParams::new(2, 1), &f7).unwrap());
    let ctx = VarContext::indexed("x", 2);
    let p = parse_poly(&ctx, &QuadraticRationals, "x0 - xi*x1").unwrap();
    assert!(reduce_quadratic(&p, &f7).is_ok());
    assert!(matches!(reduce_quadratic(&p, &FiniteField::prime(5).unwrap()), Err(CountError::NotReducible { .. })));
}

#[test]
fn zero_polynomial_counts_projective_space() {
    let k = FiniteField::prime(3).unwrap();
    let ctx = VarContext::indexed("x", 4);
    let zero = hyperrat::mpoly::MPoly::zero(&ctx, &k);
    assert_eq!(count_zeros(&[zero], 4, 1 << 20).unwrap(), 40);
    let x = build_x(&FamilyParams::new(1, 1), &FiniteField::prime(5).unwrap()).unwrap();
    assert!(matches!(count_zeros(&[x], 1, 100), Err(CountError::Budget { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn shard_count_does_not_change_totals(shards in 1usize..40, qi in 0usize..4, d in 1u32..=3) {
        let q = [5u64, 7, 8, 9][qi];
        let k = FiniteField::from_q(q).unwrap();
        let x = build_x(&FamilyParams::new(1, d).with_char_mode(hyperrat::families::CharMode::for_characteristic(k.p())), &k).unwrap();
        let one = count_zeros(std::slice::from_ref(&x), 1, 1 << 30).unwrap();
        prop_assert_eq!(count_zeros(&[x], shards, 1 << 30).unwrap(), one);
    }
}
