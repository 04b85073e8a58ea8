use cutnet::lp::{min_cover, CoverLp};
use cutnet::scalar::{int, ratio};
use cutnet::Rational;
use proptest::prelude::*;

fn rows(nvars: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::btree_set(0..nvars, 1..=nvars.min(4)), 1..14)
        .prop_map(|v| v.into_iter().map(|s| s.into_iter().collect()).collect())
}

/// Primal and dual feasibility with equal objectives certify optimality.
fn certify(nvars: usize, cons: &[Vec<usize>]) -> Rational {
    let s = min_cover::<Rational>(nvars, cons).unwrap();
    let zero = int::<Rational>(0);
    assert!(s.x.iter().all(|v| *v >= zero));
    assert!(s.y.iter().all(|v| *v >= zero));
    for c in cons {
        assert!(c.iter().fold(zero.clone(), |a, &j| a + &s.x[j]) >= int(1));
    }
    for j in 0..nvars {
        let load = cons.iter().zip(&s.y).filter(|(c, _)| c.contains(&j)).fold(zero.clone(), |a, (_, y)| a + y);
        assert!(load <= int(1));
    }
    let px = s.x.iter().fold(zero.clone(), |a, v| a + v);
    let dy = s.y.iter().fold(zero, |a, v| a + v);
    assert_eq!(px, dy);
    assert_eq!(px, s.value);
    s.value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn optimal_with_certificate((n, cons) in (1usize..9).prop_flat_map(|n| (Just(n), rows(n)))) {
        certify(n, &cons);
    }

    #[test]
    fn incremental_equals_fresh((n, cons) in (1usize..9).prop_flat_map(|n| (Just(n), rows(n)))) {
        let mut lp = CoverLp::<Rational>::new(n);
        for (i, c) in cons.iter().enumerate() {
            lp.add_row(c.clone());
            let inc = lp.solve().unwrap().value;
            prop_assert_eq!(inc, min_cover::<Rational>(n, &cons[..=i]).unwrap().value);
        }
    }
}

#[test]
fn odd_cycle_is_fractional() {
    // Edges of a 5-cycle: the cover LP optimum is 5/2.
    let cons: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
    assert_eq!(certify(5, &cons), ratio(5, 2));
}

#[test]
fn empty_row_is_infeasible() {
    assert!(min_cover::<Rational>(3, &[vec![0], vec![]]).is_none());
}
