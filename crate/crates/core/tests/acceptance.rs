//! Acceptance suite. Each test prints one PASS/FAIL line (visible with
//! `cargo test --test acceptance -- --nocapture`) and asserts zero failures.

use std::time::Instant;

use twelve_points::polygon::cycles_equal;
use twelve_points::*;

fn classes16() -> Vec<EquivalenceClass> {
    let classes = enumerate_reflexive(4).expect("census");
    assert_eq!(classes.len(), 16);
    classes
}

fn report(id: u32, name: &str, failures: usize, details: &str) {
    let verdict = if failures == 0 { "PASS" } else { "FAIL" };
    println!("criterion {id} ({name}): {verdict} — {details}");
    assert_eq!(failures, 0, "criterion {id} ({name}): {failures} failures");
}

/// All 16 classes and 1,000 seeded unimodular images have m + m* = 12,
/// exactly, in under 5 seconds.
#[test]
fn criterion_1_theorem_reproduction() {
    let start = Instant::now();
    let mut failures = 0usize;
    let mut checked = 0usize;
    for class in &classes16() {
        let rep = verify_twelve(&class.representative).expect("verify");
        if !(rep.ok && rep.sum == 12) {
            failures += 1;
        }
        checked += 1;
    }
    for seed in 0..1000u64 {
        let poly = random_reflexive(seed, (seed % 24) as u32).expect("random instance");
        let rep = verify_twelve(&poly).expect("verify");
        if !(rep.ok && rep.sum == 12) {
            failures += 1;
        }
        checked += 1;
    }
    let elapsed = start.elapsed();
    report(
        1,
        "theorem reproduction",
        failures,
        &format!("{checked} polygons, every m + m* == 12, in {elapsed:.2?}"),
    );
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "expected under 5 s, took {elapsed:.2?}"
    );
}

/// The census has exactly 16 classes at box 4, and box 5 finds the same 16.
#[test]
fn criterion_2_classification_count() {
    let start = Instant::now();
    let at4 = enumerate_reflexive(4).expect("census at 4");
    let at5 = enumerate_reflexive(5).expect("census at 5");
    let mut failures = 0usize;
    if at4.len() != 16 {
        failures += 1;
    }
    if at5.len() != 16 {
        failures += 1;
    }
    let reps4: Vec<_> = at4
        .iter()
        .map(|c| c.representative.strict().vertices().to_vec())
        .collect();
    let reps5: Vec<_> = at5
        .iter()
        .map(|c| c.representative.strict().vertices().to_vec())
        .collect();
    if reps4 != reps5 {
        failures += 1;
    }
    let elapsed = start.elapsed();
    report(
        2,
        "classification count",
        failures,
        &format!(
            "box 4: {} classes, box 5: {} classes, identical representatives, in {elapsed:.2?}",
            at4.len(),
            at5.len()
        ),
    );
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "expected under 60 s, took {elapsed:.2?}"
    );
}

/// Every removable ear of every class's subdivided cycle moves (m, m*) by
/// exactly (-1, +1), glues a simple triangle onto the dual, and places both
/// displaced dual points on the new dual boundary.
#[test]
fn criterion_3_dual_transition_suite() {
    let mut failures = 0usize;
    let mut ears = 0usize;
    for class in &classes16() {
        let m = &class.representative;
        for index in 0..m.subdivided().len() {
            if !ear_removable(m, index).expect("ear test") {
                continue;
            }
            ears += 1;
            let rep = check_dual_transition(m, index).expect("transition");
            if !(rep.deltas_ok() && rep.simple_ok && rep.collinearity_ok) {
                failures += 1;
            }
        }
    }
    report(
        3,
        "dual transition of every ear",
        failures,
        &format!("{ears} removable ears across 16 classes, all checks true"),
    );
}

/// Reduction terminates on the 16 classes and 200 random images; every step
/// conserves m + m* = 12; every final polygon is an origin-centered
/// parallelogram with m = 4; independent replay is consistent.
#[test]
fn criterion_4_reduction_suite() {
    let mut inputs: Vec<ReflexivePolygon> = classes16()
        .into_iter()
        .map(|c| c.representative)
        .collect();
    for seed in 0..200u64 {
        inputs.push(random_reflexive(seed, (seed % 16) as u32).expect("random instance"));
    }
    let mut failures = 0usize;
    let mut steps_total = 0usize;
    for m in &inputs {
        let trace = match reduce_to_parallelogram(m) {
            Ok(t) => t,
            Err(_) => {
                failures += 1;
                continue;
            }
        };
        steps_total += trace.steps.len();
        if trace.steps.iter().any(|s| s.m_after + s.m_star_after != 12) {
            failures += 1;
        }
        if !(twelve_points::reduction::is_centered_parallelogram(&trace.final_polygon)
            && trace.final_polygon.boundary_count() == 4)
        {
            failures += 1;
        }
        if trace.replay().is_err() {
            failures += 1;
        }
    }
    report(
        4,
        "reduction to parallelogram",
        failures,
        &format!(
            "{} inputs reduced ({steps_total} elementary operations), all replays consistent",
            inputs.len()
        ),
    );
}

/// Over the full box-3 corpus, the gcd boundary formula and Pick's interior
/// formula agree exactly with bounding-box enumeration.
#[test]
fn criterion_5_oracle_equivalence() {
    let corpus = enumerate_polygons(3).expect("box-3 corpus");
    let mut failures = 0usize;
    for poly in &corpus {
        let strict = poly.strict();
        if strict.boundary_count().expect("gcd count")
            != strict.boundary_count_scan().expect("scan count")
        {
            failures += 1;
        }
        if strict.interior_count().expect("pick count")
            != strict.interior_count_scan().expect("scan count")
        {
            failures += 1;
        }
    }
    report(
        5,
        "oracle equivalence",
        failures,
        &format!("{} polygons at box 3, zero discrepancies", corpus.len()),
    );
}

/// Dualizing twice reflects the polygon through the origin. Confirmed by
/// brute force over all 16 classes before being frozen here.
#[test]
fn criterion_6_double_dual() {
    let mut failures = 0usize;
    for class in &classes16() {
        let first = dual_polygon(&class.representative).expect("dual");
        // The dual is itself reflexive around the origin.
        if !(first.dual.interior_count().expect("count") == 1
            && first.dual.contains_interior(ORIGIN))
        {
            failures += 1;
        }
        let as_reflexive = ReflexivePolygon::from_polygon(first.dual).expect("dual is reflexive");
        let second = dual_polygon(&as_reflexive).expect("double dual");
        let reflected = class
            .representative
            .reflect_through_origin()
            .expect("reflection");
        if !cycles_equal(second.dual.vertices(), reflected.strict().vertices()) {
            failures += 1;
        }
    }
    report(
        6,
        "double dual is reflection through O",
        failures,
        "dual(dual(M)) == -M as cycles for all 16 classes",
    );
}

/// 10,000 seeded (polygon, ear) samples: inserting the removed vertex back
/// into its slot restores the polygon exactly.
#[test]
fn criterion_7_inverse_operation() {
    let mut failures = 0usize;
    let mut samples = 0usize;
    let mut seed = 0u64;
    while samples < 10_000 {
        let m = random_reflexive(seed, (seed % 12) as u32).expect("random instance");
        seed += 1;
        let n = m.subdivided().len();
        for i in 0..n {
            if samples >= 10_000 {
                break;
            }
            if !ear_removable(&m, i).expect("ear test") {
                continue;
            }
            samples += 1;
            let v = m.subdivided().vertices()[i];
            let removed = remove_ear(&m, i).expect("remove");
            let slot = (i + n - 2) % (n - 1);
            match insert_vertex(&removed, slot, v) {
                Ok(back) if back == m => {}
                _ => failures += 1,
            }
        }
    }
    report(
        7,
        "insert undoes remove",
        failures,
        &format!("{samples} (polygon, ear) samples across {seed} seeds"),
    );
}
