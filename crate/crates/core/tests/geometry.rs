use cutnet::geom::{dual_line, dual_point, orient};
use cutnet::scalar::{int, ratio};
use cutnet::{Arrangement, Line, Point, Rational};
use proptest::prelude::*;

fn q() -> impl Strategy<Value = Rational> {
    (-500i64..500, 1i64..40).prop_map(|(n, d)| ratio(n, d))
}

fn point() -> impl Strategy<Value = Point> {
    (q(), q()).prop_map(|(x, y)| Point::new(x, y))
}

fn line() -> impl Strategy<Value = Line> {
    (q(), q()).prop_map(|(m, k)| Line::from_slope_intercept(m, k))
}

proptest! {
    #[test]
    fn duality_is_an_involution(p in point(), l in line()) {
        prop_assert_eq!(dual_line(&dual_point(&p)).unwrap(), p.clone());
        prop_assert_eq!(dual_point(&dual_line(&l).unwrap()), l.clone());
    }

    #[test]
    fn duality_keeps_incidence(p in point(), l in line()) {
        let d = dual_line(&l).unwrap();
        prop_assert_eq!(l.side(&p), dual_point(&p).side(&d));
    }

    #[test]
    fn line_through_two_points(p in point(), r in point()) {
        prop_assume!(p != r);
        let l = Line::through(&p, &r).unwrap();
        prop_assert!(l.contains(&p) && l.contains(&r));
    }

    #[test]
    fn orientation_is_antisymmetric(a in point(), b in point(), c in point()) {
        prop_assert_eq!(orient(&a, &b, &c), orient(&b, &a, &c).reverse());
        prop_assert_eq!(orient(&a, &b, &c), orient(&b, &c, &a));
    }

    #[test]
    fn euler_holds(ls in prop::collection::vec((-4i64..5, -4i64..5), 0..7)) {
        let lines: Vec<Line> = ls.iter().map(|&(m, k)| Line::from_slope_intercept(int(m), int(k))).collect();
        let arr = Arrangement::build(&lines);
        let (v, e, f) = arr.counts();
        prop_assert_eq!(v as i64 - e as i64 + f as i64, 1);
        let mut profile = arr.complexity_profile();
        profile.sort_unstable();
        prop_assert_eq!(profile.len(), f);
    }
}

#[test]
fn generic_counts() {
    for n in 1..=8i64 {
        // Distinct slopes, and intercepts chosen so no three lines meet.
        let lines: Vec<Line> = (0..n).map(|i| Line::from_slope_intercept(int(i), int(i * i * i))).collect();
        let (v, e, f) = Arrangement::build(&lines).counts();
        let n = n as usize;
        assert_eq!((v, e, f), (n * (n - 1) / 2, n * n, 1 + n + n * (n - 1) / 2));
    }
}

#[test]
fn located_points_land_in_their_face() {
    let lines = vec![
        Line::from_slope_intercept(int(1), int(0)),
        Line::from_slope_intercept(int(-1), int(2)),
        Line::vertical(int(3)),
    ];
    let arr = Arrangement::build(&lines);
    for f in arr.faces().collect::<Vec<_>>() {
        let s = arr.sample(f);
        assert_eq!(arr.locate(&s), f);
    }
}
