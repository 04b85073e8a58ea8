use cutnet::guarding::{
    candidate_points, find_bad_polygon, find_bad_polygon_with, solve_guarding, threshold, verify_guarding, DagMode,
    GuardingConfig,
};
use cutnet::instance::PointSet;
use cutnet::oracle::{brute_max_empty_convex, gen_instance, GeneratorKind, GeneratorSpec};
use cutnet::scalar::{int, ratio, Rational};
use cutnet::{Instance, Point};
use proptest::prelude::*;

fn points(max: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::btree_set((-5i64..6, -5i64..6), 1..=max)
        .prop_map(|s| s.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect())
}

fn guards() -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec((-10i64..11, 1i64..3, -10i64..11, 1i64..3), 0..=4)
        .prop_map(|v| v.into_iter().map(|(a, b, c, d)| Point::new(ratio(a, b), ratio(c, d))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn dp_matches_enumeration(p in points(9), w in guards()) {
        let brute = brute_max_empty_convex(&p, &w).map_or(0, |b| b.0);
        let dp = find_bad_polygon(&p, 1, &w);
        prop_assert_eq!(dp.as_ref().map_or(0, |b| b.count), brute);
        if let Some(b) = dp {
            prop_assert!(w.iter().all(|g| !b.polygon.contains(g)));
            prop_assert_eq!(p.iter().filter(|q| b.polygon.contains(q)).count(), b.count);
        }
    }

    #[test]
    fn both_dp_modes_agree(p in points(10), w in guards()) {
        let a = find_bad_polygon_with(&p, 1, &w, DagMode::Chained).map(|b| b.count);
        let b = find_bad_polygon_with(&p, 1, &w, DagMode::Naive).map(|b| b.count);
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn guard_sets_verify(p in points(8), d in 1i64..4, seed in 0u64..20) {
        let m = p.len() as i64;
        let inst = Instance::new(vec![PointSet { points: p, fraction: ratio::<Rational>(1, d).max(ratio(1, m)) }]).unwrap();
        let set = solve_guarding(&inst, &GuardingConfig { seed, ..Default::default() }).unwrap();
        prop_assert!(verify_guarding(&inst, &set.guards).valid);
        for c in &set.stats.constraints {
            prop_assert!(c.value < ratio(1, 2));
        }
    }
}

#[test]
fn fixed_examples() {
    let tri = vec![Point::from_ints(0, 0), Point::from_ints(4, 0), Point::from_ints(0, 4)];
    let one = Instance::new(vec![PointSet { points: tri.clone(), fraction: int(1) }]).unwrap();
    assert_eq!(solve_guarding(&one, &GuardingConfig::default()).unwrap().guards.len(), 1);
    let third = Instance::new(vec![PointSet { points: tri, fraction: ratio(1, 3) }]).unwrap();
    assert_eq!(threshold(&third, 0), 1);
    assert_eq!(solve_guarding(&third, &GuardingConfig::default()).unwrap().guards.len(), 3);
}

#[test]
fn candidates_include_crossings() {
    // Square: four corners and the crossing of its diagonals.
    let sq = [Point::from_ints(0, 0), Point::from_ints(2, 0), Point::from_ints(2, 2), Point::from_ints(0, 2)];
    let c = candidate_points(&sq);
    assert_eq!(c.points.len(), 5);
    assert!(c.points.contains(&Point::from_ints(1, 1)));
}

#[test]
fn generated_instances() {
    for (kind, n, k) in [(GeneratorKind::Parabola, 8, 1), (GeneratorKind::Grid, 12, 2), (GeneratorKind::UniformRandom, 12, 2)] {
        let inst = gen_instance(&GeneratorSpec::new(kind, n, 1), k, ratio(1, 2)).unwrap();
        let set = solve_guarding(&inst, &GuardingConfig::default()).unwrap();
        assert!(verify_guarding(&inst, &set.guards).valid, "{kind:?}");
    }
}
