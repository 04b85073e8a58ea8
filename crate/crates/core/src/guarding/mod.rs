//! The guarding problem: a small point set `W` meeting every closed convex
//! region that holds at least `fr_i * m_i` points of some `P_i`.
//!
//! Round-and-cut over the candidate guards `Q`. The rounding step is a
//! greedy net driven by the bad-polygon oracle: it keeps adding the
//! heaviest fractional guard of an unstabbed heavy polygon, and reports the
//! polygon as a new covering constraint when its fractional mass is below
//! one half.

mod dag;

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use dag::{BadPolygon, DagMode, TrapDag};

use crate::error::{Error, Result};
use crate::geom::{convex_hull, orient, Point, Polygon, Segment, Shear};
use crate::instance::Instance;
use crate::lp::CoverLp;
use crate::scalar::{ceil_to_u64, half, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GuardSource<T> {
    Original,
    /// Proper crossing of segments `(a, b)` and `(c, d)`.
    SegmentPair([Point<T>; 2], [Point<T>; 2]),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardCandidates<T> {
    /// Sorted and distinct.
    pub points: Vec<Point<T>>,
    pub provenance: Vec<GuardSource<T>>,
}

/// The input points together with every proper crossing of two segments
/// spanned by input points.
pub fn candidate_points<T: Scalar>(pts: &[Point<T>]) -> GuardCandidates<T> {
    let mut p = pts.to_vec();
    p.sort();
    p.dedup();
    let mut found: BTreeMap<Point<T>, GuardSource<T>> = p.iter().map(|q| (q.clone(), GuardSource::Original)).collect();
    let mut segs = Vec::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            segs.push(Segment::new(p[i].clone(), p[j].clone()).expect("distinct"));
        }
    }
    for a in 0..segs.len() {
        for b in a + 1..segs.len() {
            if let Some(x) = segs[a].proper_crossing(&segs[b]) {
                found.entry(x).or_insert_with(|| {
                    GuardSource::SegmentPair(
                        [segs[a].p().clone(), segs[a].q().clone()],
                        [segs[b].p().clone(), segs[b].q().clone()],
                    )
                });
            }
        }
    }
    let (points, provenance) = found.into_iter().unzip();
    GuardCandidates { points, provenance }
}

/// The guard-free closed convex polygon spanned by `p` with the most points
/// of `p`, returned when it holds at least `threshold` of them.
pub fn find_bad_polygon(p: &[Point<Rational>], threshold: usize, w: &[Point<Rational>]) -> Option<BadPolygon<Rational>> {
    find_bad_polygon_with(p, threshold, w, DagMode::Chained)
}

pub fn find_bad_polygon_with(
    p: &[Point<Rational>],
    threshold: usize,
    w: &[Point<Rational>],
    mode: DagMode,
) -> Option<BadPolygon<Rational>> {
    let shear = Shear::x_distinct(p, true, &mut ChaCha8Rng::seed_from_u64(0));
    let sp: Vec<Point<Rational>> = p.iter().map(|q| shear.apply(q)).collect();
    let sw: Vec<Point<Rational>> = w.iter().map(|q| shear.apply(q)).collect();
    let dag = TrapDag::new(&sp).expect("sheared points are x-distinct");
    let found = dag.best(&sw, mode)?;
    (found.count >= threshold).then(|| unshear(&shear, found))
}

fn unshear(shear: &Shear<Rational>, b: BadPolygon<Rational>) -> BadPolygon<Rational> {
    if shear.is_identity() {
        return b;
    }
    let v: Vec<Point<Rational>> = b.polygon.vertices().iter().map(|q| shear.invert(q)).collect();
    BadPolygon { polygon: convex_hull(&v).expect("nonempty"), count: b.count }
}

/// Indices of the points of `q` in the closed polygon. Orientation tests
/// are settled in floating point only when the determinant clears a bound
/// well above its rounding error, so the answer always equals the exact
/// one; otherwise they are redone exactly. `qf` holds the rounded
/// coordinates of `q`.
pub fn points_in(poly: &Polygon<Rational>, q: &[Point<Rational>], qf: &[(f64, f64)]) -> Vec<usize> {
    let v = poly.vertices();
    if v.len() < 3 {
        return (0..q.len()).filter(|&i| poly.contains(&q[i])).collect();
    }
    let vf: Vec<(f64, f64)> = v.iter().map(|p| p.to_f64()).collect();
    let n = v.len();
    (0..q.len())
        .filter(|&i| {
            (0..n).all(|e| {
                let (a, b, c) = (vf[e], vf[(e + 1) % n], qf[i]);
                let det = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
                let scale = (a.0.abs() + b.0.abs()) * (a.1.abs() + c.1.abs()) + (a.1.abs() + b.1.abs()) * (a.0.abs() + c.0.abs());
                let err = 1e-10 * scale;
                if det.is_finite() && err.is_finite() && err > 1e-280 && det.abs() > err {
                    det > 0.0
                } else {
                    orient(&v[e], &v[(e + 1) % n], &q[i]) != std::cmp::Ordering::Less
                }
            })
        })
        .collect()
}

/// `ceil(fr_i * m_i)`: the point count that makes a polygon bad for set `i`.
pub fn threshold(inst: &Instance<Rational>, i: usize) -> usize {
    ceil_to_u64(&inst.capacity(i)) as usize
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardingReport {
    pub valid: bool,
    /// A set index and an unguarded polygon that is bad for it.
    pub witness: Option<(usize, BadPolygon<Rational>)>,
}

/// Checks every set with the bad-polygon oracle.
pub fn verify_guarding(inst: &Instance<Rational>, w: &[Point<Rational>]) -> GuardingReport {
    for (i, set) in inst.sets().iter().enumerate() {
        if let Some(b) = find_bad_polygon(&set.points, threshold(inst, i), w) {
            return GuardingReport { valid: false, witness: Some((i, b)) };
        }
    }
    GuardingReport { valid: true, witness: None }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardingConfig {
    pub seed: u64,
    /// Constant of the greedy budget `ceil(C * t^2 * (1 + log2(m + 1)))`.
    pub budget_constant: u64,
    pub mode: DagMode,
}

impl Default for GuardingConfig {
    fn default() -> Self {
        GuardingConfig { seed: 0, budget_constant: 8, mode: DagMode::Chained }
    }
}

/// A heavy polygon whose candidate guards carried fractional mass below 1/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardConstraint {
    pub set_index: usize,
    /// In sheared coordinates, like `guards`.
    pub polygon: BadPolygon<Rational>,
    pub guards: Vec<usize>,
    pub value: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GuardStats {
    pub t_used: u64,
    /// `ceil` of the covering LP over the constraints found.
    pub t_lower: u64,
    pub dp_calls: usize,
    pub lp_iterations: usize,
    pub rounding_failures: usize,
    pub candidates: usize,
    pub constraints: Vec<GuardConstraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardSet {
    /// In input coordinates.
    pub guards: Vec<Point<Rational>>,
    pub stats: GuardStats,
    pub shear: Rational,
    /// Candidate guards in sheared coordinates.
    pub candidates: Vec<Point<Rational>>,
}

fn budget(c: u64, t: u64, m: usize) -> usize {
    (c as f64 * (t * t) as f64 * (1.0 + ((m + 1) as f64).log2())).ceil() as usize
}

pub fn solve_guarding(inst: &Instance<Rational>, config: &GuardingConfig) -> Result<GuardSet> {
    for (i, set) in inst.sets().iter().enumerate() {
        if inst.capacity(i) < Rational::ONE {
            return Err(Error::InvalidInstance(format!("set {i} has fraction below 1/m")));
        }
        debug_assert!(!set.points.is_empty());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let shear = Shear::x_distinct(&inst.all_points(), true, &mut rng);
    let sheared = inst.map_points(|p| shear.apply(p));
    let dags: Vec<TrapDag<Rational>> =
        sheared.sets().iter().map(|s| TrapDag::new(&s.points)).collect::<Result<_>>()?;
    let thresholds: Vec<usize> = (0..inst.k()).map(|i| threshold(inst, i)).collect();
    let q = candidate_points(&sheared.all_points()).points;
    let qf: Vec<(f64, f64)> = q.iter().map(|p| p.to_f64()).collect();
    let m = inst.m();
    let cap = (m as u64).next_power_of_two();

    let mut stats = GuardStats { candidates: q.len(), ..Default::default() };
    let mut cover = CoverLp::<Rational>::new(q.len());
    let mut t = 1u64;
    loop {
        let lp = cover.solve().expect("constraints hold at least one candidate");
        stats.lp_iterations += 1;
        if lp.value > Rational::from(t) {
            t *= 2;
            if t > cap {
                return Err(Error::BudgetExhausted { t });
            }
            continue;
        }
        let limit = budget(config.budget_constant, t, m);
        let mut w: Vec<Point<Rational>> = Vec::new();
        let outcome = loop {
            let mut bad = None;
            for (j, dag) in dags.iter().enumerate() {
                stats.dp_calls += 1;
                if let Some(b) = dag.best(&w, config.mode).filter(|b| b.count >= thresholds[j]) {
                    bad = Some((j, b));
                    break;
                }
            }
            let Some((j, b)) = bad else { break Ok(w) };
            let inside = points_in(&b.polygon, &q, &qf);
            let value = inside.iter().fold(Rational::ZERO, |a, &i| a + &lp.x[i]);
            if value < half::<Rational>() {
                break Err(Some(GuardConstraint { set_index: j, polygon: b, guards: inside, value }));
            }
            let mut pick = inside[0];
            for &i in &inside[1..] {
                if lp.x[i] > lp.x[pick] {
                    pick = i;
                }
            }
            w.push(q[pick].clone());
            if w.len() > limit {
                break Err(None);
            }
        };
        match outcome {
            Ok(w) => {
                stats.t_used = t;
                stats.t_lower = ceil_to_u64(&lp.value);
                let mut guards: Vec<Point<Rational>> = w.iter().map(|p| shear.invert(p)).collect();
                guards.sort();
                return Ok(GuardSet { guards, stats, shear: shear.factor().clone(), candidates: q });
            }
            Err(Some(c)) => {
                cover.add_row(c.guards.clone());
                stats.constraints.push(c);
            }
            Err(None) => {
                stats.rounding_failures += 1;
                t *= 2;
                if t > cap {
                    return Err(Error::BudgetExhausted { t });
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::PointSet;
    use crate::scalar::{int, ratio};

    fn pts(v: &[(i64, i64)]) -> Vec<Point<Rational>> {
        v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    #[test]
    fn candidates() {
        assert_eq!(candidate_points(&pts(&[(0, 0), (1, 0), (0, 1)])).points.len(), 3);
        let sq = candidate_points(&pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]));
        assert_eq!(sq.points.len(), 5);
        assert!(sq.points.contains(&Point::from_ints(1, 1)));
    }

    #[test]
    fn triangle_needs_one_guard() {
        let inst = Instance::new(vec![PointSet { points: pts(&[(0, 0), (4, 1), (1, 3)]), fraction: int(1) }]).unwrap();
        let g = solve_guarding(&inst, &GuardingConfig::default()).unwrap();
        assert_eq!(g.guards.len(), 1);
        assert!(convex_hull(&inst.sets()[0].points).unwrap().contains(&g.guards[0]));
        assert!(verify_guarding(&inst, &g.guards).valid);
    }

    #[test]
    fn singletons_need_every_point() {
        let inst = Instance::new(vec![PointSet { points: pts(&[(0, 0), (4, 1), (1, 3)]), fraction: ratio(1, 3) }]).unwrap();
        let g = solve_guarding(&inst, &GuardingConfig::default()).unwrap();
        assert_eq!(g.guards.len(), 3);
        assert!(!verify_guarding(&inst, &[]).valid);
    }

    #[test]
    fn filtered_containment_matches_exact() {
        let p = pts(&[(0, 0), (7, 1), (9, 6), (3, 8), (-2, 4)]);
        let q = candidate_points(&p).points;
        let qf: Vec<(f64, f64)> = q.iter().map(|x| x.to_f64()).collect();
        for poly in [convex_hull(&p).unwrap(), convex_hull(&p[..3]).unwrap(), convex_hull(&p[1..3]).unwrap()] {
            let want: Vec<usize> = (0..q.len()).filter(|&i| poly.contains(&q[i])).collect();
            assert_eq!(points_in(&poly, &q, &qf), want);
        }
    }

    #[test]
    fn pentagon_with_center_guard() {
        let p = pts(&[(0, 10), (10, 3), (6, -8), (-6, -8), (-10, 3)]);
        let b = find_bad_polygon(&p, 3, &[Point::from_ints(0, 0)]).unwrap();
        assert_eq!(b.count, 3);
        assert!(!b.polygon.contains(&Point::from_ints(0, 0)));
        assert!(find_bad_polygon(&p, 4, &[Point::from_ints(0, 0)]).is_none());
    }
}
