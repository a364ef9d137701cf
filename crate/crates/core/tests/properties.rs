//! Property tests over seeded random reflexive polygons.

use proptest::prelude::*;

use twelve_points::text::{format_polygon_text, format_trace, parse_polygon_text, parse_trace};
use twelve_points::*;

/// A random reflexive polygon; `steps` bounds coordinate growth.
fn polygon_with_steps(max_steps: u32) -> impl Strategy<Value = ReflexivePolygon> {
    (any::<u64>(), 0..=max_steps)
        .prop_map(|(seed, steps)| random_reflexive(seed, steps).expect("seeded instance"))
}

/// A random unimodular map with a small translation part, as a composition
/// of the generator shears and flips.
fn unimodular_map() -> impl Strategy<Value = UnimodularMap> {
    (
        proptest::collection::vec(0..6u8, 0..8),
        -5i64..=5,
        -5i64..=5,
    )
        .prop_map(|(gens, tx, ty)| {
            let (mut a, mut b, mut c, mut d) = (1i64, 0i64, 0i64, 1i64);
            for g in gens {
                let (ga, gb, gc, gd) = match g {
                    0 => (1, 1, 0, 1),
                    1 => (1, -1, 0, 1),
                    2 => (1, 0, 1, 1),
                    3 => (1, 0, -1, 1),
                    4 => (-1, 0, 0, -1),
                    _ => (-1, 0, 0, 1),
                };
                (a, b, c, d) = (
                    ga * a + gb * c,
                    ga * b + gb * d,
                    gc * a + gd * c,
                    gc * b + gd * d,
                );
            }
            UnimodularMap::new(a, b, c, d, LatticePoint::new(tx, ty)).expect("composed generators")
        })
}

proptest! {
    #[test]
    fn twelve_holds_everywhere(m in polygon_with_steps(20)) {
        let rep = verify_twelve(&m).unwrap();
        prop_assert!(rep.ok);
        prop_assert_eq!(rep.m + rep.m_star, 12);
    }

    #[test]
    fn counts_are_unimodular_invariants(m in polygon_with_steps(10), u in unimodular_map()) {
        let image = apply_unimodular(&u, &m).unwrap();
        prop_assert_eq!(image.boundary_count(), m.boundary_count());
        prop_assert_eq!(image.area2(), m.area2());
        let (d1, d2) = (dual_polygon(&m).unwrap(), dual_polygon(&image).unwrap());
        prop_assert_eq!(d1.m_star, d2.m_star);
    }

    #[test]
    fn subdivide_and_strict_are_inverse(m in polygon_with_steps(15)) {
        let strict = m.strict();
        let sub = m.subdivided();
        prop_assert_eq!(&sub.strict_form().unwrap(), strict);
        prop_assert_eq!(&strict.subdivide().unwrap(), sub);
        prop_assert_eq!(sub.len() as i64, strict.boundary_count().unwrap());
        prop_assert!(is_strictly_convex(strict.vertices()));
    }

    #[test]
    fn dual_ignores_subdivision(m in polygon_with_steps(12)) {
        let a = dual_of_polygon(m.strict()).unwrap();
        let b = dual_of_polygon(m.subdivided()).unwrap();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    // Scans walk the bounding box, so keep coordinates small.
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn formulas_match_scans(m in polygon_with_steps(4)) {
        let strict = m.strict();
        prop_assert_eq!(
            strict.boundary_count().unwrap(),
            strict.boundary_count_scan().unwrap()
        );
        prop_assert_eq!(
            strict.interior_count().unwrap(),
            strict.interior_count_scan().unwrap()
        );
    }
}

proptest! {
    #[test]
    fn every_removable_ear_inverts(m in polygon_with_steps(12), pick in any::<prop::sample::Index>()) {
        let n = m.subdivided().len();
        let removable: Vec<usize> =
            (0..n).filter(|&i| ear_removable(&m, i).unwrap()).collect();
        if removable.is_empty() {
            return Ok(());
        }
        let i = removable[pick.index(removable.len())];
        let v = m.subdivided().vertices()[i];
        let removed = remove_ear(&m, i).unwrap();
        prop_assert_eq!(removed.boundary_count(), m.boundary_count() - 1);
        let back = insert_vertex(&removed, (i + n - 2) % (n - 1), v).unwrap();
        prop_assert_eq!(back, m.clone());

        // The dual moves the opposite way by exactly one.
        let rep = check_dual_transition(&m, i).unwrap();
        prop_assert!(rep.deltas_ok());
        prop_assert!(rep.simple_ok);
        prop_assert!(rep.collinearity_ok);
    }

    #[test]
    fn equivalence_is_detected_by_normal_form(
        m in polygon_with_steps(8),
        other in polygon_with_steps(8),
        u in unimodular_map(),
    ) {
        let image = apply_unimodular(&u, &m).unwrap();
        prop_assert!(are_equivalent(&m, &image).unwrap());
        let nf = normal_form(&m).unwrap();
        let nf_image = normal_form(&image).unwrap();
        let nf_twice = normal_form(&nf).unwrap();
        prop_assert_eq!(nf_image.strict().vertices(), nf.strict().vertices());
        prop_assert_eq!(nf_twice.strict().vertices(), nf.strict().vertices());

        // Arbitrary pair: the normal forms agree exactly when equivalent.
        let same_class = are_equivalent(&m, &other).unwrap();
        let nf_other = normal_form(&other).unwrap();
        let same_nf = nf_other.strict().vertices() == nf.strict().vertices();
        prop_assert_eq!(same_class, same_nf);
    }

    #[test]
    fn equivalence_is_symmetric(m in polygon_with_steps(8), other in polygon_with_steps(8)) {
        prop_assert!(are_equivalent(&m, &m).unwrap());
        prop_assert_eq!(
            are_equivalent(&m, &other).unwrap(),
            are_equivalent(&other, &m).unwrap()
        );
    }
}

/// Exhaustive over the box-3 corpus: normal forms agree exactly for
/// equivalent pairs. Invariant-mismatched pairs short-circuit inside
/// `are_equivalent`, so the quadratic sweep stays cheap.
#[test]
fn normal_form_separates_the_box3_corpus() {
    let polys = enumerate_polygons(3).unwrap();
    let forms: Vec<Vec<LatticePoint>> = polys
        .iter()
        .map(|p| normal_form(p).unwrap().strict().vertices().to_vec())
        .collect();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let eq = are_equivalent(&polys[i], &polys[j]).unwrap();
            assert_eq!(
                eq,
                forms[i] == forms[j],
                "pair {:?} / {:?}",
                polys[i].strict().vertices(),
                polys[j].strict().vertices()
            );
        }
    }
}

/// Shear steps push vertices outside the enumeration box while the counts
/// stay pinned to the source class.
#[test]
fn random_instances_escape_the_box() {
    let escaped = (0..20u64).any(|seed| {
        let m = random_reflexive(seed, 20).unwrap();
        m.strict()
            .vertices()
            .iter()
            .any(|v| v.x.abs() > 4 || v.y.abs() > 4)
    });
    assert!(escaped);
    for seed in 0..20u64 {
        let m = random_reflexive(seed, 20).unwrap();
        assert!(verify_twelve(&m).unwrap().ok);
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<LatticePoint>();
    assert_send_sync::<Polygon>();
    assert_send_sync::<ReflexivePolygon>();
    assert_send_sync::<ReductionTrace>();
    assert_send_sync::<UnimodularMap>();
    assert_send_sync::<EquivalenceClass>();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn traces_replay_and_roundtrip(m in polygon_with_steps(10)) {
        let trace = reduce_to_parallelogram(&m).unwrap();
        prop_assert!(trace.replay().is_ok());
        for step in &trace.steps {
            prop_assert_eq!(step.m_after + step.m_star_after, 12);
        }
        let text = format_trace(&trace);
        let parsed = parse_trace(&text).unwrap();
        prop_assert_eq!(&parsed, &trace);
        prop_assert_eq!(format_trace(&parsed), text);
    }

    #[test]
    fn polygon_text_roundtrips(m in polygon_with_steps(14)) {
        let text = format_polygon_text(m.strict().vertices());
        let verts = parse_polygon_text(&text).unwrap();
        prop_assert_eq!(verts.as_slice(), m.strict().vertices());
    }
}
