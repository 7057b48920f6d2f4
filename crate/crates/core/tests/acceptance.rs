//! One line per acceptance criterion. Run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use hyperrat::count::{
    check_projection_bijection, count_x, count_x_delta, count_y, count_y0_structure, formula_x2d, CountConfig,
};
use hyperrat::exactalg::{FiniteField, Rationals};
use hyperrat::families::{build_alpha_beta, build_cremona};
use hyperrat::heights::{direct_height_count, parametrized_height_count, reduced_representative, HeightConfig};
use hyperrat::mpoly::{parse_poly, VarContext};
use hyperrat::verify::{
    run_check, run_checks, verify_composition, verify_cox_grading, verify_galois_symmetry,
    verify_line_factorization, verify_linear_system_dim, verify_singular_locus, Mode, Status, VerificationResult,
    VerifyConfig,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CASE_LIMIT: Duration = Duration::from_secs(1);
const FOURFOLD_LIMIT: Duration = Duration::from_secs(30);
const SYMBOLIC_LIMIT: Duration = Duration::from_secs(60);
const MAX_SKIP_FRACTION: f64 = 0.1;
const SAMPLES: u64 = 50;
const IDEMPOTENCE_POINTS: usize = 10_000;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn passed(r: &VerificationResult) -> Result<(), String> {
    ensure(r.pass, format!("{} ({}, {}): {}", r.check, r.params.n, r.params.d, r.witness.clone().unwrap_or_default()))
}

fn formula_grid() -> Outcome {
    let cfg = CountConfig::default();
    let mut slowest = Duration::ZERO;
    let mut cases = 0;
    for q in [5u64, 7, 11, 13, 17, 23, 25, 9, 3, 2, 4, 8] {
        let k = FiniteField::from_q(q).map_err(|e| e.to_string())?;
        for d in 1..=3 {
            let t = Instant::now();
            let r = count_x(1, d, &k, &cfg).map_err(|e| e.to_string())?;
            slowest = slowest.max(t.elapsed());
            let f = formula_x2d(q, d).map_err(|e| e.to_string())?;
            ensure(r.brute == f.value, format!("q={q} d={d}: brute {} formula {}", r.brute, f.value))?;
            cases += 1;
        }
    }
    ensure(slowest <= CASE_LIMIT, format!("slowest case took {slowest:?}"))?;
    Ok(format!("{cases} cases, slowest {} ms", slowest.as_millis()))
}

fn high_dimension() -> Outcome {
    let cfg = CountConfig::default();
    let mut out = Vec::new();
    for (q, want) in [(5u64, 781u64), (11, 16105)] {
        let t = Instant::now();
        let r = count_x(2, 1, &FiniteField::prime(q).unwrap(), &cfg).map_err(|e| e.to_string())?;
        let took = t.elapsed();
        ensure(r.brute == want, format!("q={q}: {} != {want}", r.brute))?;
        ensure(took <= FOURFOLD_LIMIT, format!("q={q} took {took:?}"))?;
        out.push(format!("q={q}: {want}"));
    }
    Ok(out.join(", "))
}

fn y_counts() -> Outcome {
    let cfg = CountConfig::default();
    for (q, want) in [(5u64, 31u64), (11, 133)] {
        let r = count_y(2, 1, &FiniteField::prime(q).unwrap(), &cfg).map_err(|e| e.to_string())?;
        ensure(r.brute == want && r.formula == Some(want), format!("q={q}: {} != {want}", r.brute))?;
    }
    Ok("31 over F_5, 133 over F_11".into())
}

fn y0_structure() -> Outcome {
    let cfg = CountConfig::default();
    let mut out = Vec::new();
    for (q, d) in [(7u64, 1u32), (31, 2)] {
        let s = count_y0_structure(d, &FiniteField::prime(q).unwrap(), &cfg).map_err(|e| e.to_string())?;
        let special = 2 * d * d + d;
        ensure(s.special_multiplicities == [special; 2], format!("d={d}: special {:?}", s.special_multiplicities))?;
        ensure(s.weighted_total == 4 * d * d + 4 * d + 1, format!("d={d}: total {}", s.weighted_total))?;
        out.push(format!("d={d} over F_{q}: {}", s.weighted_total));
    }
    Ok(out.join(", "))
}

fn symbolic_identities() -> Outcome {
    let cfg = VerifyConfig::default();
    let t = Instant::now();
    let mut n_checks = 0;
    for (n, d) in [(1, 1), (1, 2), (2, 1)] {
        let r = verify_line_factorization(n, d, &cfg);
        passed(&r)?;
        ensure(r.mode == Mode::Symbolic, "line factorization was not symbolic")?;
        let r = run_check("membership", n, d, &cfg).map_err(|e| e.to_string())?;
        passed(&r)?;
        ensure(r.mode == Mode::Symbolic, "membership was not symbolic")?;
        n_checks += 2;
    }
    for n in 1..=3 {
        for d in 1..=3 {
            passed(&verify_galois_symmetry(n, d))?;
            passed(&verify_cox_grading(n, d))?;
            n_checks += 2;
            if d <= 2 {
                passed(&run_check("dnm_identity", n, d, &cfg).map_err(|e| e.to_string())?)?;
                n_checks += 1;
            }
        }
    }
    let took = t.elapsed();
    ensure(took <= SYMBOLIC_LIMIT, format!("took {took:?}"))?;
    Ok(format!("{n_checks} identities in {} ms", took.as_millis()))
}

fn numeric_summary(cfg: &VerifyConfig, name: &str) -> Result<String, String> {
    let r = run_check(name, 1, 1, cfg).map_err(|e| e.to_string())?;
    passed(&r)?;
    ensure(r.mode == Mode::Numeric, format!("{name} was not numeric"))?;
    let skips = r.details["skips"].as_u64().unwrap_or(u64::MAX);
    ensure((skips as f64) < MAX_SKIP_FRACTION * cfg.trials as f64, format!("{name}: {skips} skips"))?;
    Ok(serde_json::to_string(&r.details).unwrap())
}

fn composition_roundtrips() -> Outcome {
    let (cr, inv) = build_cremona(&Rationals).map_err(|e| e.to_string())?;
    verify_composition(&inv, &cr)?;
    verify_composition(&cr, &inv)?;
    for n in 1..=3 {
        let (alpha, beta) = build_alpha_beta(n, &Rationals).map_err(|e| e.to_string())?;
        verify_composition(&beta, &alpha)?;
    }
    let cfg = VerifyConfig::default();
    ensure(cfg.numeric_prime == 1009 && cfg.trials == 100, "unexpected numeric defaults")?;
    let first = numeric_summary(&cfg, "composition_numeric")?;
    let char2 = numeric_summary(&cfg, "composition_char2_numeric")?;
    ensure(first == numeric_summary(&cfg, "composition_numeric")?, "F_1009 run is not deterministic")?;
    ensure(char2 == numeric_summary(&cfg, "composition_char2_numeric")?, "F_32 run is not deterministic")?;
    Ok(format!("F_1009 {first}, F_32 {char2}"))
}

fn linear_system() -> Outcome {
    let cfg = VerifyConfig::default();
    let mut dims = Vec::new();
    for (n, d) in [(1, 1), (1, 2), (2, 1)] {
        let r = verify_linear_system_dim(n, d, &cfg);
        passed(&r)?;
        ensure(r.mode == Mode::Symbolic, "rank was not computed over Q(xi)")?;
        dims.push(format!("({n},{d}) -> {}", r.details["report"]["dimension"]));
    }
    Ok(dims.join(", "))
}

fn singular_locus() -> Outcome {
    let cfg = VerifyConfig::default();
    ensure(cfg.samples as u64 == SAMPLES, "sample count changed")?;
    for (n, d) in [(2, 1), (2, 2)] {
        let r = verify_singular_locus(n, d, &cfg);
        passed(&r)?;
        ensure(r.details["locus_samples"] == SAMPLES && r.details["generic_samples"] == SAMPLES, "short of samples")?;
    }
    Ok(format!("{SAMPLES} locus and {SAMPLES} generic points at (2,1) and (2,2)"))
}

fn projection_bijection() -> Outcome {
    let cfg = CountConfig::default();
    // (field, variables, polynomial, a, D)
    let valid = [
        (5u64, 3, "x0^3 + x1^3 + x2^3", 1, 3),
        (7, 2, "x0^5 + x1^5", 2, 5),
        (11, 3, "x0^3 + x1^3 + x1*x2^2", 1, 3),
        (8, 3, "x0^5 + x1^5 + x2^5", 1, 5),
        (13, 4, "x0^5 + x1^5 + x2^5 + x3^5", 3, 5),
    ];
    let invalid = [(7u64, 3, "x0^3 + x1^3 + x2^3", 1, 3), (11, 2, "x0^5 + x1^5", 1, 5)];
    let mut passes = 0;
    for (q, vars, src, a, big_d) in valid {
        let k = FiniteField::from_q(q).unwrap();
        let f = parse_poly(&VarContext::indexed("x", vars), &k, src).map_err(|e| e.to_string())?;
        let r = check_projection_bijection(&f, a, big_d, &cfg);
        passed(&r)?;
        passes += 1;
    }
    for (q, vars, src, a, big_d) in invalid {
        let k = FiniteField::from_q(q).unwrap();
        let f = parse_poly(&VarContext::indexed("x", vars), &k, src).map_err(|e| e.to_string())?;
        let r = check_projection_bijection(&f, a, big_d, &cfg);
        ensure(r.status == Status::Inapplicable, format!("{src} over F_{q} was not gated"))?;
    }
    Ok(format!("{passes} pass, {} gated", invalid.len()))
}

fn delta_family() -> Outcome {
    let cfg = CountConfig::default();
    let cases = [(1usize, 3u32, 1u32, 5u64), (1, 3, 2, 5), (1, 5, 1, 13), (2, 3, 1, 5)];
    for (n, d, delta, q) in cases {
        let r = count_x_delta(n, d, delta, &FiniteField::from_q(q).unwrap(), &cfg).map_err(|e| e.to_string())?;
        let want = (q.pow(2 * n as u32 + 1) - 1) / (q - 1);
        ensure(r.brute == want && r.matches, format!("n={n} d={d} delta={delta} q={q}: {} != {want}", r.brute))?;
    }
    Ok(format!("{} instances", cases.len()))
}

fn heights() -> Outcome {
    let cfg = HeightConfig::default();
    let mut prev = 0;
    for b in 1..=20 {
        let direct = direct_height_count(1, b, &cfg).map_err(|e| e.to_string())?;
        ensure(direct >= prev, format!("count drops at B={b}"))?;
        prev = direct;
        let param = parametrized_height_count(1, b, &cfg).map_err(|e| e.to_string())?;
        ensure(param.count <= direct, format!("B={b}: parametrized {} > direct {direct}", param.count))?;
    }
    let param = parametrized_height_count(1, 5000, &cfg).map_err(|e| e.to_string())?;
    for p in &param.points {
        let v: BigInt = p
            .chunks(2)
            .map(|c| (&c[0] + &c[1]) * (&c[0] * &c[0] - &c[0] * &c[1] + &c[1] * &c[1]))
            .sum();
        ensure(v == BigInt::from(0), format!("{p:?} is off the surface"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..IDEMPOTENCE_POINTS {
        let pt: Vec<BigRational> = (0..4)
            .map(|_| BigRational::new(rng.gen_range(-1000i64..=1000).into(), rng.gen_range(1i64..=1000).into()))
            .collect();
        let Ok(r) = reduced_representative(&pt) else { continue };
        let again: Vec<BigRational> = r.iter().cloned().map(BigRational::from_integer).collect();
        ensure(reduced_representative(&again).as_ref() == Ok(&r), format!("{pt:?} not idempotent"))?;
    }
    Ok(format!("B<=20 monotone (N(20)={prev}), {} images on X, {IDEMPOTENCE_POINTS} reductions", param.points.len()))
}

fn suite_report() -> String {
    let cfg = VerifyConfig::default();
    let mut results = Vec::new();
    for (n, d) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
        results.extend(run_checks(&["all"], n, d, &cfg).unwrap());
    }
    for r in results.iter_mut() {
        r.elapsed_ms = 0;
    }
    let ccfg = CountConfig::default();
    let mut counts = vec![count_x(1, 2, &FiniteField::from_q(9).unwrap(), &ccfg).unwrap()];
    counts.push(count_y(2, 1, &FiniteField::prime(5).unwrap(), &ccfg).unwrap());
    for c in counts.iter_mut() {
        c.elapsed_ms = 0;
    }
    serde_json::to_string(&(results, counts)).unwrap()
}

fn determinism() -> Outcome {
    let (a, b) = (suite_report(), suite_report());
    ensure(a == b, "reports differ")?;
    Ok(format!("{} identical bytes", a.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("formula grid over 36 (q, d) cases", formula_grid),
        ("fourfold counts", high_dimension),
        ("base locus counts", y_counts),
        ("weighted Y0 structure", y0_structure),
        ("symbolic identities", symbolic_identities),
        ("composition roundtrips", composition_roundtrips),
        ("linear system dimension", linear_system),
        ("singular locus sampling", singular_locus),
        ("projection bijection", projection_bijection),
        ("X_delta counts", delta_family),
        ("height properties", heights),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("PASS criterion {}: {name}: {msg}", i + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL criterion {}: {name}: {msg}", i + 1);
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
