use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cutting::NET_CONSTANT;
use crate::geom::{Line, Point};
use crate::instance::Instance;
use crate::scalar::{half, to_f64, Scalar};

/// Number of draws for the `(fr_i / 2)`-net of one set.
pub fn net_draws(k: usize, fraction: f64) -> usize {
    (NET_CONSTANT * (2.0 / fraction) * ((k as f64) / fraction + 2.0).ln()).ceil() as usize
}

/// Lines through pairs of points of `N`, the union over all sets of a random
/// `(fr_i / 2)`-net of `P_i`. Sorted and deduplicated.
pub fn candidate_lines<T: Scalar>(inst: &Instance<T>, seed: u64) -> Vec<Line<T>> {
    lines_through_pairs(&net(inst, seed))
}

/// The candidates the solver uses: [`candidate_lines`], plus separators
/// when the net is collinear. Such a net spans a single line that splits
/// none of its points, so the perpendiculars through midpoints of
/// consecutive net points (and through the point itself for a one-point
/// net) are added.
pub fn solver_candidates<T: Scalar>(inst: &Instance<T>, seed: u64) -> Vec<Line<T>> {
    let net = net(inst, seed);
    let mut lines = lines_through_pairs(&net);
    if lines.len() <= 1 {
        lines.extend(separators(&net));
        lines.sort();
        lines.dedup();
    }
    lines
}

fn net<T: Scalar>(inst: &Instance<T>, seed: u64) -> Vec<Point<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut net: BTreeSet<Point<T>> = BTreeSet::new();
    for set in inst.sets() {
        let draws = net_draws(inst.k(), to_f64(&set.fraction));
        for _ in 0..draws {
            net.insert(set.points.choose(&mut rng).expect("nonempty set").clone());
        }
    }
    net.into_iter().collect()
}

fn separators<T: Scalar>(net: &[Point<T>]) -> Vec<Line<T>> {
    match net {
        [] => Vec::new(),
        [p] => vec![Line::vertical(p.x.clone()), Line::from_slope_intercept(T::zero(), p.y.clone())],
        _ => net
            .windows(2)
            .filter_map(|w| {
                // Normal along p->q, through the midpoint: the points of
                // the sorted net fall on both sides.
                let (dx, dy) = w[1].sub(&w[0]);
                let mx = (w[0].x.clone() + &w[1].x) * half::<T>();
                let my = (w[0].y.clone() + &w[1].y) * half::<T>();
                let c = dx.clone() * &mx + dy.clone() * &my;
                Line::new(dx, dy, c).ok()
            })
            .collect(),
    }
}

pub fn lines_through_pairs<T: Scalar>(pts: &[Point<T>]) -> Vec<Line<T>> {
    let mut out = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if let Ok(l) = Line::through(&pts[i], &pts[j]) {
                out.insert(l);
            }
        }
    }
    out.into_iter().collect()
}

/// One line for every way a line can meet the point set `pts`: every sign
/// pattern (up to negation) a line can induce on `pts` is induced by one of
/// the returned lines. Built from the line through each pair, shifted off
/// it to either side, and turned slightly about the pair's midpoint and
/// about each endpoint.
pub fn canonical_lines<T: Scalar>(pts: &[Point<T>]) -> Vec<Line<T>> {
    let mut pts = pts.to_vec();
    pts.sort();
    pts.dedup();
    let mut seen: HashSet<Vec<i8>> = HashSet::new();
    let mut out = Vec::new();
    let mut keep = |l: Line<T>, out: &mut Vec<Line<T>>| {
        let mut pattern: Vec<i8> = pts
            .iter()
            .map(|p| match l.side(p) {
                Ordering::Greater => 1,
                Ordering::Equal => 0,
                Ordering::Less => -1,
            })
            .collect();
        if pattern.iter().find(|&&s| s != 0).is_some_and(|&s| s < 0) {
            pattern.iter_mut().for_each(|s| *s = -*s);
        }
        if seen.insert(pattern) {
            out.push(l);
        }
    };
    if pts.len() == 1 {
        keep(Line::vertical(pts[0].x.clone()), &mut out);
        keep(Line::vertical(pts[0].x.clone() + T::one()), &mut out);
        return out;
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let l = Line::through(&pts[i], &pts[j]).expect("distinct points");
            let (a, b, c) = (l.a().clone(), l.b().clone(), l.c().clone());
            let evals: Vec<T> = pts.iter().map(|p| l.eval(p)).collect();
            let shift = evals.iter().filter(|e| !e.is_zero()).map(|e| e.abs()).min().unwrap_or_else(T::one) * half::<T>();
            keep(l.clone(), &mut out);
            for s in [shift.clone(), -shift] {
                keep(Line::new(a.clone(), b.clone(), c.clone() + s).expect("same normal"), &mut out);
            }
            let midpoint = Point::new(
                (pts[i].x.clone() + &pts[j].x) * half::<T>(),
                (pts[i].y.clone() + &pts[j].y) * half::<T>(),
            );
            for center in [midpoint, pts[i].clone(), pts[j].clone()] {
                // Turning the normal (a, b) by a small amount d moves the
                // value at r by d * F(r); keep |d F| below every nonzero |E|.
                let along: Vec<T> = pts
                    .iter()
                    .map(|p| -b.clone() * (p.x.clone() - &center.x) + a.clone() * (p.y.clone() - &center.y))
                    .collect();
                let mut d = T::one();
                for (e, f) in evals.iter().zip(&along) {
                    if !e.is_zero() && !f.is_zero() {
                        d = d.min(e.abs() / f.abs());
                    }
                }
                d = d * half::<T>();
                for turn in [d.clone(), -d] {
                    let na = a.clone() - turn.clone() * &b;
                    let nb = b.clone() + turn * &a;
                    let nc = na.clone() * &center.x + nb.clone() * &center.y;
                    if let Ok(t) = Line::new(na, nb, nc) {
                        keep(t, &mut out);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::PointSet;
    use crate::scalar::{int, Rational};

    fn pts(v: &[(i64, i64)]) -> Vec<Point<Rational>> {
        v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    #[test]
    fn four_generic_points() {
        let inst = Instance::new(vec![PointSet { points: pts(&[(0, 0), (5, 1), (2, 7), (9, 4)]), fraction: int(1) }]).unwrap();
        let c = candidate_lines(&inst, 1);
        assert!(c.len() <= 6);
        let two = Instance::new(vec![PointSet { points: pts(&[(0, 0), (5, 1)]), fraction: int(1) }]).unwrap();
        assert!(candidate_lines(&two, 1).len() <= 1);
        assert_eq!(solver_candidates(&two, 1).len(), 2);
    }

    #[test]
    fn canonical_lines_cover_single_point_cuts() {
        // Three collinear points: a transversal through the middle one
        // isolates all three.
        let p = pts(&[(0, 0), (1, 0), (2, 0)]);
        let lines = canonical_lines(&p);
        let isolates = lines.iter().any(|l| {
            l.side(&p[1]) == Ordering::Equal && l.side(&p[0]) != Ordering::Equal && l.side(&p[0]) != l.side(&p[2])
        });
        assert!(isolates);
    }
}
