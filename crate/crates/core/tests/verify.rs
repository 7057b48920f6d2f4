use hyperrat::exactalg::{FiniteField, Rationals};
use hyperrat::families::{build_alpha_beta, build_cremona, build_phi_bar, build_theta, build_x, FamilyParams};
use hyperrat::verify::{
    linear_system_rank, run_check, run_checks, verify_composition, verify_composition_numeric, verify_cox_grading,
    verify_galois_symmetry, verify_line_factorization, verify_linear_system_dim, verify_membership,
    verify_singular_locus, Mode, Status, VerifyConfig, CHECKS,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cfg() -> VerifyConfig {
    VerifyConfig::default()
}

#[test]
fn cremona_pair_composes_with_cubic_factor() {
    let (cr, inv) = build_cremona(&Rationals).unwrap();
    let s = verify_composition(&inv, &cr).unwrap();
    assert_eq!(s.homogeneous_degree(), Some(3));
    // the composite itself has degree 4 = 3 + 1
    assert_eq!(inv.compose(&cr).unwrap().total_degree(), Some(4));
}

#[test]
fn alpha_beta_inverse_up_to_scalar() {
    for n in 1..=3 {
        let (alpha, beta) = build_alpha_beta(n, &Rationals).unwrap();
        assert!(verify_composition(&beta, &alpha).is_ok(), "n = {n}");
        assert!(verify_composition(&alpha, &beta).is_ok(), "n = {n}");
    }
}

#[test]
fn numeric_roundtrips_over_small_fields() {
    let f101 = FiniteField::prime(101).unwrap();
    let (cr, inv) = build_cremona(&f101).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let out = verify_composition_numeric(&cr, &inv, 100, &mut rng);
    assert_eq!(out.result, Ok(()));
    let (alpha, beta) = build_alpha_beta(3, &f101).unwrap();
    let out = verify_composition_numeric(&alpha, &beta, 100, &mut rng);
    assert_eq!(out.result, Ok(()));
}

#[test]
fn numeric_roundtrip_detects_a_wrong_inverse() {
    let f101 = FiniteField::prime(101).unwrap();
    let (cr, _) = build_cremona(&f101).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    assert!(verify_composition_numeric(&cr, &cr, 50, &mut rng).result.is_err());
}

#[test]
fn theta_is_not_a_map_into_x() {
    let params = FamilyParams::new(1, 1);
    let theta = build_theta(1, &Rationals).unwrap();
    let x = build_x(&params, &Rationals).unwrap();
    assert!(verify_membership(&theta, &x).is_err());
    let phi = build_phi_bar(&params, &Rationals).unwrap();
    assert!(verify_membership(&phi, &x).is_ok());
}

#[test]
fn line_factorization_grid() {
    for (n, d) in [(1, 1), (1, 2), (2, 1)] {
        let r = verify_line_factorization(n, d, &cfg());
        assert!(r.pass, "{n} {d}: {:?}", r.witness);
        assert_eq!(r.mode, Mode::Symbolic);
    }
    // beyond the symbolic budget the same identity is sampled
    let r = verify_line_factorization(3, 2, &cfg());
    assert!(r.pass && r.mode == Mode::Numeric);
}

#[test]
fn linear_system_dimension() {
    for (n, d) in [(1, 1), (1, 2), (2, 1)] {
        let r = verify_linear_system_dim(n, d, &cfg());
        assert!(r.pass, "{n} {d}: {:?}", r.witness);
    }
    let report = linear_system_rank(2, 1, &hyperrat::exactalg::QuadraticRationals).unwrap();
    assert_eq!((report.rank, report.dimension, report.phi_rank), (4, 6, 6));
}

#[test]
fn galois_and_grading() {
    assert!(verify_galois_symmetry(1, 1).pass);
    assert!(verify_galois_symmetry(3, 2).pass);
    let r = verify_cox_grading(2, 3);
    assert!(r.pass);
    assert_eq!(r.details["multidegree"], serde_json::json!([7, -3, -3]));
}

#[test]
fn singular_locus_sampling() {
    for (n, d) in [(2, 1), (2, 2)] {
        let r = verify_singular_locus(n, d, &cfg());
        assert!(r.pass, "{n} {d}: {:?}", r.witness);
        assert_eq!(r.details["generic_samples"], 50);
    }
    assert_eq!(verify_singular_locus(1, 1, &cfg()).status, Status::Inapplicable);
}

#[test]
fn every_check_passes_on_small_parameters() {
    for (n, d) in [(1, 1), (2, 1), (1, 2)] {
        for r in run_checks(&["all"], n, d, &cfg()).unwrap() {
            assert!(r.pass || r.status == Status::Inapplicable, "{} at ({n},{d}): {:?}", r.check, r.witness);
            assert_eq!(r.pass, r.witness.is_none());
        }
    }
}

#[test]
fn negative_controls_detect_corruption() {
    let r = run_check("negative_controls", 2, 1, &cfg()).unwrap();
    assert!(r.pass, "{:?}", r.witness);
    let detected = r.details["detected"].as_array().unwrap();
    for name in ["membership", "line_factorization", "alpha_sign"] {
        assert!(detected.iter().any(|v| v == name), "{name} not detected");
    }
}

#[test]
fn seeded_runs_are_reproducible() {
    let strip = |mut v: Vec<hyperrat::verify::VerificationResult>| {
        v.iter_mut().for_each(|r| r.elapsed_ms = 0);
        serde_json::to_string(&v).unwrap()
    };
    let a = strip(run_checks(&["all"], 3, 1, &cfg()).unwrap());
    let b = strip(run_checks(&["all"], 3, 1, &cfg()).unwrap());
    assert_eq!(a, b);
}

#[test]
fn unknown_check_is_rejected() {
    assert!(run_check("nonexistent", 1, 1, &cfg()).is_err());
    assert_eq!(CHECKS.len(), 18);
}
