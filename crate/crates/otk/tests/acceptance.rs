//! Acceptance gate: the eight top-level criteria, one pass/fail line
//! each (run with `--nocapture` to see them).  Time tolerances are
//! enforced with a slack factor in debug builds.

use std::time::Instant;

use num_bigint::BigInt;
use otk::algebras::{build_aot, build_ot, build_oth, build_sr};
use otk::groebner::{
    all_s_polynomials_reduce, hilbert_series_quotient, ideal_equal, kernel_by_elimination,
    saturation, HilbertSeries,
};
use otk::matroid::{ComplexKind, VectorConfig};
use otk::polyring::{MonomialOrder, Polynomial};
use otk::verify::{
    build_psi, default_orders, kernel_dimensions, square_config, tp1_config, triangle_config,
    verify_flatness, verify_kernel_equals_w, verify_toric_dimension, verify_tp1,
};

fn corpus() -> Vec<(&'static str, VectorConfig)> {
    vec![
        ("line", tp1_config()),
        ("triangle", triangle_config()),
        ("square", square_config()),
        (
            "basis",
            VectorConfig::new(2, vec![vec![1, 0], vec![0, 1]], Some(vec![0, 0])).unwrap(),
        ),
        (
            "prism",
            VectorConfig::new(
                3,
                vec![
                    vec![1, 0, 0],
                    vec![0, 1, 0],
                    vec![0, 0, 1],
                    vec![1, 1, 0],
                    vec![0, 1, 1],
                ],
                None,
            )
            .unwrap(),
        ),
    ]
}

/// Debug builds get a generous slack factor on the stated tolerances.
fn budget_ms(stated: u128) -> u128 {
    if cfg!(debug_assertions) {
        stated * 30
    } else {
        stated
    }
}

fn report(criterion: &str, elapsed_ms: u128, ok: bool) {
    println!(
        "criterion {criterion}: {} ({elapsed_ms} ms)",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed");
}

#[test]
fn criterion_1_golden_example() {
    let start = Instant::now();
    let rep = verify_tp1().unwrap();
    let ok = rep.all_pass();
    let ms = start.elapsed().as_millis();
    report("1 (golden example)", ms, ok && ms < budget_ms(1000));
}

#[test]
fn criterion_2_kernel_identification() {
    let start = Instant::now();
    let map = build_psi(&tp1_config(), 3).unwrap();
    let mut ok = kernel_dimensions(&map) == vec![0, 1, 2, 3];
    for config in [triangle_config(), square_config()] {
        let run = Instant::now();
        let rep = verify_kernel_equals_w(&config, 6).unwrap();
        ok = ok && rep.all_pass() && run.elapsed().as_millis() < budget_ms(10_000);
    }
    report("2 (kernel = W)", start.elapsed().as_millis(), ok);
}

#[test]
fn criterion_3_hilbert_identities() {
    let start = Instant::now();
    let mut ok = true;
    for (_, config) in corpus() {
        let run = Instant::now();
        let d = config.d();
        let h_bc = config.complex_summary(ComplexKind::BrokenCircuit).h_vector;
        let expected = HilbertSeries::new(h_bc.iter().map(|&x| BigInt::from(x)).collect(), d);
        let ot = build_ot(&config).unwrap();
        let hs_ot =
            hilbert_series_quotient(&ot.ideal, &MonomialOrder::deglex(config.n())).unwrap();
        let oth = build_oth(&config).unwrap();
        let hs_oth =
            hilbert_series_quotient(&oth.ideal, &MonomialOrder::deglex(config.n() + 1)).unwrap();
        ok = ok
            && hs_ot == expected
            && hs_oth == hs_ot.shift_denominator()
            && run.elapsed().as_millis() < budget_ms(5000);
    }
    report("3 (Hilbert identities)", start.elapsed().as_millis(), ok);
}

#[test]
fn criterion_4_universal_groebner() {
    let start = Instant::now();
    let mut ok = true;
    for (_, config) in corpus() {
        if config.n() > 5 {
            continue;
        }
        let gens = build_ot(&config).unwrap().ideal.generators().to_vec();
        for order in default_orders(config.n(), 20, 0) {
            ok = ok && all_s_polynomials_reduce(&gens, &order).is_none();
        }
        let (oracle, _) = kernel_by_elimination(&config).unwrap();
        ok = ok && ideal_equal(&build_ot(&config).unwrap().ideal, &oracle);
    }
    let ms = start.elapsed().as_millis();
    report("4 (universal Groebner)", ms, ok && ms < budget_ms(60_000));
}

#[test]
fn criterion_5_flatness() {
    let start = Instant::now();
    let mut ok = true;
    for (_, config) in corpus() {
        let run = Instant::now();
        let rep = verify_flatness(&config).unwrap();
        ok = ok && rep.all_pass();
        // Artinian variant: the deformed ideal is h-saturated and its
        // series is the finite Hilbert polynomial over 1-t
        let aoth = build_aot(&config, true).unwrap();
        let h = Polynomial::var_named(&aoth.ring, "h").unwrap();
        ok = ok && ideal_equal(&saturation(&aoth.ideal, &h), &aoth.ideal);
        ok = ok && run.elapsed().as_millis() < budget_ms(10_000);
    }
    report("5 (flatness)", start.elapsed().as_millis(), ok);
}

#[test]
fn criterion_6_toric_dimension() {
    let start = Instant::now();
    let mut ok = true;
    for (_, config) in corpus() {
        let run = Instant::now();
        let rep = verify_toric_dimension(&config).unwrap();
        ok = ok && rep.all_pass() && run.elapsed().as_millis() < budget_ms(5000);
    }
    report("6 (toric dimension)", start.elapsed().as_millis(), ok);
}

#[test]
fn criterion_7_property_suites() {
    // the randomized suites live in tests/properties.rs (>= 1000 seeded
    // cases); here we assert a deterministic cross-section so that the
    // acceptance target itself exercises each law
    let start = Instant::now();
    let mut ok = true;
    // Hilbert order-independence on the corpus
    for (_, config) in corpus() {
        let sr = build_sr(&config, false);
        let a = hilbert_series_quotient(&sr.ideal, &MonomialOrder::deglex(config.n())).unwrap();
        let b =
            hilbert_series_quotient(&sr.ideal, &MonomialOrder::degrevlex(config.n())).unwrap();
        ok = ok && a == b;
    }
    // h <-> f round trip
    for (_, config) in corpus() {
        for kind in [ComplexKind::Independence, ComplexKind::BrokenCircuit] {
            let s = config.complex_summary(kind);
            ok = ok && otk::matroid::h_to_f(&s.h_vector, config.d()) == s.f_vector;
        }
    }
    report("7 (property suites)", start.elapsed().as_millis(), ok);
}

#[test]
fn criterion_8_determinism() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_otk");
    let run = || {
        std::process::Command::new(bin)
            .args(["verify-all", "--input", "triangle", "--json", "-"])
            .output()
            .unwrap()
    };
    let a = run();
    let b = run();
    let ok = a.status.success() && a.stdout == b.stdout;
    report("8 (determinism)", start.elapsed().as_millis(), ok);
}
