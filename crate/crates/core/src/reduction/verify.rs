use std::collections::{HashMap, HashSet};

use crate::arrangement::{point_key, Zobrist};
use crate::geom::{Line, Point};
use crate::instance::Instance;
use crate::scalar::{from_usize, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalvingReport<T> {
    pub valid: bool,
    /// The face (named by one of its points) and set with the largest excess
    /// `count - fr_i * m_i`, and that count.
    pub worst: Option<(Point<T>, usize, usize)>,
}

/// Checks every face of `A(lines)`, of every dimension, against every set.
pub fn verify_halving<T: Scalar>(inst: &Instance<T>, lines: &[Line<T>]) -> HalvingReport<T> {
    let mut dedup = Vec::new();
    let mut seen = HashSet::new();
    for l in lines {
        if seen.insert(l.clone()) {
            dedup.push(l.clone());
        }
    }
    let z = Zobrist::new(dedup.len(), 23);
    let mut worst: Option<(T, Point<T>, usize, usize)> = None;
    for (i, set) in inst.sets().iter().enumerate() {
        let mut counts: HashMap<u128, (usize, &Point<T>)> = HashMap::new();
        let mut order = Vec::new();
        for p in &set.points {
            let key = point_key(&dedup, &z, p);
            let e = counts.entry(key).or_insert_with(|| {
                order.push(key);
                (0, p)
            });
            e.0 += 1;
        }
        for key in order {
            let (count, p) = counts[&key];
            let excess = from_usize::<T>(count) - inst.capacity(i);
            if worst.as_ref().is_none_or(|w| excess > w.0) {
                worst = Some((excess, p.clone(), i, count));
            }
        }
    }
    let valid = worst.as_ref().is_none_or(|w| w.0 <= T::zero());
    HalvingReport { valid, worst: worst.map(|(_, p, i, c)| (p, i, c)) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::PointSet;
    use crate::scalar::{int, ratio, Rational};

    #[test]
    fn empty_line_sets() {
        let pts = vec![Point::<Rational>::from_ints(0, 0), Point::from_ints(1, 1)];
        let whole = Instance::new(vec![PointSet { points: pts.clone(), fraction: int(1) }]).unwrap();
        assert!(verify_halving(&whole, &[]).valid);
        let half = Instance::new(vec![PointSet { points: pts, fraction: ratio(1, 2) }]).unwrap();
        let rep = verify_halving(&half, &[]);
        assert!(!rep.valid);
        assert_eq!(rep.worst.unwrap().2, 2);
        // A line through both points keeps them on one edge.
        let through = Line::from_slope_intercept(int(1), int(0));
        assert!(!verify_halving(&half, &[through]).valid);
        let between = Line::from_slope_intercept(int(-1), int(1));
        assert!(verify_halving(&half, &[between]).valid);
    }
}
