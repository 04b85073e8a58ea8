use cutnet::instance::PointSet;
use cutnet::oracle::{brute_optimal_halving, gen_instance, GeneratorKind, GeneratorSpec};
use cutnet::reduction::{solve_reduction, splits, verify_halving, ReductionConfig};
use cutnet::scalar::{half, int, ratio, Rational};
use cutnet::{Instance, Point};
use proptest::prelude::*;

fn small_instance() -> impl Strategy<Value = Instance> {
    (prop::collection::btree_set((-6i64..7, -6i64..7), 2..10), 1i64..4).prop_map(|(pts, d)| {
        let points: Vec<Point> = pts.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect();
        let m = points.len() as i64;
        // Keep fr * m >= 1.
        let fraction = ratio::<Rational>(1, d).max(ratio(1, m));
        Instance::new(vec![PointSet { points, fraction }]).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solutions_verify_and_respect_the_lower_bound(inst in small_instance(), seed in 0u64..50) {
        let sol = solve_reduction(&inst, &ReductionConfig { seed, ..Default::default() }).unwrap();
        prop_assert!(verify_halving(&inst, &sol.lines).valid);
        if let Some((opt, _)) = brute_optimal_halving(&inst, 3) {
            prop_assert!(sol.stats.t_lower <= opt as u64);
        }
        for c in &sol.constraints {
            let value = c.support.iter().filter(|(l, _)| splits(l, &c.points)).fold(int::<Rational>(0), |a, (_, v)| a + v);
            prop_assert!(value < half());
            prop_assert!(inst.exceeds(c.witness_set_index, c.witness_count));
        }
    }
}

#[test]
fn grid_needs_one_line() {
    let inst = gen_instance(&GeneratorSpec::new(GeneratorKind::Grid, 16, 0), 1, ratio(1, 2)).unwrap();
    let sol = solve_reduction(&inst, &ReductionConfig::default()).unwrap();
    assert!(verify_halving(&inst, &sol.lines).valid);
    assert_eq!(brute_optimal_halving(&inst, 2).unwrap().0, 1);
    assert!(sol.stats.t_lower <= 1);
}

#[test]
fn convex_hexagon_against_enumeration() {
    let inst = gen_instance(&GeneratorSpec::new(GeneratorKind::ConvexPosition, 6, 2), 1, ratio(1, 3)).unwrap();
    let (opt, lines) = brute_optimal_halving(&inst, 4).unwrap();
    assert!(verify_halving(&inst, &lines).valid);
    let sol = solve_reduction(&inst, &ReductionConfig::default()).unwrap();
    assert!(verify_halving(&inst, &sol.lines).valid);
    assert!(sol.stats.t_lower <= opt as u64);
    assert!(sol.lines.len() >= opt);
}

#[test]
fn several_sets() {
    let inst = gen_instance(&GeneratorSpec::new(GeneratorKind::UniformRandom, 30, 5), 3, ratio(1, 2)).unwrap();
    let sol = solve_reduction(&inst, &ReductionConfig { seed: 5, ..Default::default() }).unwrap();
    assert!(verify_halving(&inst, &sol.lines).valid);
    let again = solve_reduction(&inst, &ReductionConfig { seed: 5, ..Default::default() }).unwrap();
    assert_eq!(sol, again);
}

#[test]
fn tiny_fraction_is_rejected() {
    let inst = Instance::new(vec![PointSet { points: vec![Point::from_ints(0, 0), Point::from_ints(1, 0)], fraction: ratio(1, 3) }]).unwrap();
    assert!(solve_reduction(&inst, &ReductionConfig::default()).is_err());
}
