//! The reduction problem: few lines such that no face of their arrangement
//! holds more than `fr_i * m_i` points of any set `P_i`.
//!
//! Round-and-cut over candidate lines: the covering LP is solved exactly
//! over the constraints found so far, its solution is rounded by a weak
//! cutting of the weighted support, and a face of the cutting that is still
//! too heavy becomes a new constraint.

mod candidates;
mod verify;

use std::collections::{HashMap, HashSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{point_key, Zobrist};
use crate::cutting::{weak_cutting, CuttingParams, WeightedLineSet};
use crate::error::{Error, Result};
use crate::geom::{convex_hull, Line, Point, Polygon, Shear};
use crate::instance::Instance;
use crate::lp::{min_cover, CoverLp};
use crate::scalar::{ceil_to_u64, from_u64, from_usize, half, Rational, Scalar};

pub use candidates::{candidate_lines, canonical_lines, lines_through_pairs, net_draws, solver_candidates};
pub use verify::{verify_halving, HalvingReport};

/// A region holding too many points of one set, with the lines that split
/// those points. Every solution needs one of `lines_crossing`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolatedConstraint<T> {
    /// Hull of the offending points.
    pub region: Polygon<T>,
    /// The offending points: all points of the witness set in one face.
    pub points: Vec<Point<T>>,
    /// Candidate lines meeting the closed region without containing all of
    /// `points`; sorted.
    pub lines_crossing: Vec<Line<T>>,
    pub witness_set_index: usize,
    pub witness_count: usize,
    /// Sum of `x` over `lines_crossing` when the constraint was found.
    pub fractional_value: T,
    /// The lines with positive `x` at that moment, with their values.
    pub support: Vec<(Line<T>, T)>,
}

/// Whether `l` puts the points of `xs` into more than one face of `A({l})`.
pub fn splits<T: Scalar>(l: &Line<T>, xs: &[Point<T>]) -> bool {
    let mut sides = xs.iter().map(|p| l.side(p));
    let first = sides.next();
    first.is_some_and(|f| sides.any(|s| s != f))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalSolution<T> {
    pub lines: Vec<Line<T>>,
    /// One value in `[0, 1]` per line.
    pub x: Vec<T>,
    pub t: T,
    pub value: T,
}

impl<T: Scalar> FractionalSolution<T> {
    pub fn weight_of(&self, lines: &[Line<T>]) -> T {
        let index: HashMap<&Line<T>, usize> = self.lines.iter().enumerate().map(|(i, l)| (l, i)).collect();
        lines.iter().filter_map(|l| index.get(l)).fold(T::zero(), |a, &i| a + &self.x[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome<T> {
    Feasible(FractionalSolution<T>),
    /// Dual multipliers `y >= 0` on the constraints with `sum y > t` and, for
    /// every candidate, at most 1 summed over the constraints containing it.
    Infeasible { certificate: Vec<T> },
}

/// Exact feasibility of `0 <= x <= 1`, `sum x <= t` and `sum x >= 1` over
/// each constraint's crossing lines. Returns the cheapest feasible point.
pub fn lp_feasible<T: Scalar>(candidates: &[Line<T>], constraints: &[ViolatedConstraint<T>], t: &T) -> LpOutcome<T> {
    let index: HashMap<&Line<T>, usize> = candidates.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let sets: Vec<Vec<usize>> = constraints
        .iter()
        .map(|c| c.lines_crossing.iter().filter_map(|l| index.get(l).copied()).collect())
        .collect();
    let Some(sol) = min_cover::<T>(candidates.len(), &sets) else {
        let mut certificate = vec![T::zero(); constraints.len()];
        let empty = sets.iter().position(|s| s.is_empty()).expect("an empty constraint");
        certificate[empty] = t.clone().max(T::zero()) + T::one();
        return LpOutcome::Infeasible { certificate };
    };
    if sol.value <= *t {
        LpOutcome::Feasible(FractionalSolution { lines: candidates.to_vec(), x: sol.x, t: t.clone(), value: sol.value })
    } else {
        LpOutcome::Infeasible { certificate: sol.y }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rounding<T> {
    /// A valid line set (faces of every dimension checked).
    Solution { lines: Vec<Line<T>>, attempts: u32 },
    /// Heavy faces of the cutting, each with fractional value below 1/2.
    Violated { constraints: Vec<ViolatedConstraint<T>>, cutting_size: usize, attempts: u32 },
}

/// Rounds `x` by a weak `1/(2 max(value, 1))`-cutting of its support and
/// inspects every face of the cutting. A heavy face whose splitting lines
/// carry fractional weight `>= 1/2` means the cutting was bad; it is then
/// rebuilt from a fresh seed.
pub fn round_fractional<T: Scalar>(
    inst: &Instance<T>,
    candidates: &[Line<T>],
    x: &FractionalSolution<T>,
    seed: u64,
    max_retries: u32,
) -> Result<Rounding<T>> {
    let support = WeightedLineSet::new(x.lines.iter().cloned().zip(x.x.iter().cloned()));
    let eps = T::one() / (x.value.clone().max(T::one()) * from_u64::<T>(2));
    let mut worst = T::zero();
    for attempt in 0..=max_retries {
        let params = CuttingParams::new(eps.clone(), seed.wrapping_add(attempt as u64 * 0x1000_0001))?;
        let cut = weak_cutting(&support, &eps, &params)?;
        let bad = heavy_faces(inst, &cut.lines);
        if bad.is_empty() {
            return Ok(Rounding::Solution { lines: cut.lines, attempts: attempt + 1 });
        }
        let mut constraints = Vec::new();
        let mut ok = true;
        for (j, pts) in bad {
            let c = make_constraint(candidates, x, j, pts);
            if c.fractional_value >= half::<T>() {
                worst = worst.max(c.fractional_value.clone());
                ok = false;
                break;
            }
            constraints.push(c);
        }
        if ok {
            return Ok(Rounding::Violated { constraints, cutting_size: cut.lines.len(), attempts: attempt + 1 });
        }
    }
    Err(Error::CuttingFailed { retries: max_retries, worst_weight: worst.to_string() })
}

fn make_constraint<T: Scalar>(candidates: &[Line<T>], x: &FractionalSolution<T>, j: usize, pts: Vec<Point<T>>) -> ViolatedConstraint<T> {
    let region = convex_hull(&pts).expect("nonempty group");
    let mut lines_crossing: Vec<Line<T>> = candidates.iter().filter(|l| splits(l, &pts)).cloned().collect();
    lines_crossing.sort();
    let fractional_value = x.weight_of(&lines_crossing);
    let support = x.lines.iter().zip(&x.x).filter(|(_, v)| v.is_positive()).map(|(l, v)| (l.clone(), v.clone())).collect();
    ViolatedConstraint { region, witness_count: pts.len(), points: pts, lines_crossing, witness_set_index: j, fractional_value, support }
}

/// Groups of points of one set sharing a face of `A(lines)` that exceed the
/// set's capacity, in a deterministic order.
pub fn heavy_faces<T: Scalar>(inst: &Instance<T>, lines: &[Line<T>]) -> Vec<(usize, Vec<Point<T>>)> {
    let mut dedup = Vec::new();
    let mut seen = HashSet::new();
    for l in lines {
        if seen.insert(l.clone()) {
            dedup.push(l.clone());
        }
    }
    let z = Zobrist::new(dedup.len(), 17);
    let mut out = Vec::new();
    for (j, set) in inst.sets().iter().enumerate() {
        let mut groups: Vec<Vec<Point<T>>> = Vec::new();
        let mut by_key: HashMap<u128, usize> = HashMap::new();
        for p in &set.points {
            let key = point_key(&dedup, &z, p);
            let g = *by_key.entry(key).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(p.clone());
        }
        for g in groups {
            if inst.exceeds(j, g.len()) {
                out.push((j, g));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionConfig {
    pub seed: u64,
    /// Retries of a rounding attempt whose cutting turned out bad.
    pub max_rounding_retries: u32,
}

impl Default for ReductionConfig {
    fn default() -> Self {
        ReductionConfig { seed: 0, max_rounding_retries: 20 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionStats {
    /// Budget at which rounding succeeded.
    pub t_used: u64,
    /// Certified lower bound on the optimum over all lines of the plane.
    pub t_lower: u64,
    pub lp_iterations: usize,
    pub rounding_attempts: u32,
    pub cutting_sizes: Vec<usize>,
    pub candidates: usize,
    pub constraints: usize,
    /// Returned size divided by `max(t_lower, 1)`.
    pub c_round: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<T> {
    /// In the input coordinates.
    pub lines: Vec<Line<T>>,
    pub stats: ReductionStats,
    pub shear: T,
    /// Constraints found on the way, in sheared coordinates.
    pub constraints: Vec<ViolatedConstraint<T>>,
}

/// Largest budget tried: a power of two above four times the trivial
/// solution size `sum ceil(1/fr_i)`.
fn budget_cap<T: Scalar>(inst: &Instance<T>) -> u64 {
    let naive: u64 = inst.sets().iter().map(|s| ceil_to_u64(&(T::one() / &s.fraction))).sum();
    (4 * naive).max(1).next_power_of_two()
}

/// Round-and-cut with exponential search over the budget `t`.
pub fn solve_reduction(inst: &Instance<Rational>, config: &ReductionConfig) -> Result<Solution<Rational>> {
    for (i, set) in inst.sets().iter().enumerate() {
        if set.fraction.clone() * from_usize::<Rational>(set.points.len()) < Rational::ONE {
            return Err(Error::InvalidInstance(format!("set {i} has fr * m < 1 and can never be split finely enough")));
        }
    }
    if verify_halving(inst, &[]).valid {
        return Ok(Solution { lines: Vec::new(), stats: ReductionStats::default(), shear: Rational::ZERO, constraints: Vec::new() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let shear = Shear::x_distinct(&inst.all_points(), false, &mut rng);
    let sheared = inst.map_points(|p| shear.apply(p));
    let candidates = solver_candidates(&sheared, config.seed);

    let mut stats = ReductionStats { candidates: candidates.len(), ..Default::default() };
    let mut constraints: Vec<ViolatedConstraint<Rational>> = Vec::new();
    let mut keys: HashSet<Vec<Line<Rational>>> = HashSet::new();
    let limit = 50 * candidates.len().max(1);
    let cap = budget_cap(inst);
    let index: HashMap<&Line<Rational>, usize> = candidates.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut cover = CoverLp::<Rational>::new(candidates.len());
    let mut t = 1u64;
    let mut round = 0u64;
    loop {
        let mut iterations = 0;
        loop {
            let sol = cover.solve().ok_or(Error::UnsplittableRegion)?;
            if sol.value > from_u64(t) {
                break;
            }
            let x = FractionalSolution { lines: candidates.clone(), x: sol.x, t: from_u64(t), value: sol.value };
            stats.lp_iterations += 1;
            iterations += 1;
            if iterations > limit {
                return Err(Error::IterationLimit { t, limit });
            }
            round += 1;
            let seed = config.seed ^ round.wrapping_mul(0x2545_f491_4f6c_dd1d);
            match round_fractional(&sheared, &candidates, &x, seed, config.max_rounding_retries)? {
                Rounding::Solution { lines, attempts } => {
                    stats.rounding_attempts += attempts;
                    stats.cutting_sizes.push(lines.len());
                    let mut out: Vec<Line<Rational>> = lines.iter().map(|l| shear.invert_line(l)).collect();
                    out.sort();
                    out.dedup();
                    let report = verify_halving(inst, &out);
                    if !report.valid {
                        return Err(Error::Internal("rounded solution failed verification".into()));
                    }
                    stats.t_used = t;
                    stats.constraints = constraints.len();
                    stats.t_lower = certified_lower_bound(&sheared, &constraints);
                    stats.c_round = Rational::from(out.len() as u64) / Rational::from(stats.t_lower.max(1));
                    return Ok(Solution { lines: out, stats, shear: shear.factor().clone(), constraints });
                }
                Rounding::Violated { constraints: found, cutting_size, attempts } => {
                    stats.rounding_attempts += attempts;
                    stats.cutting_sizes.push(cutting_size);
                    for c in found {
                        if c.lines_crossing.is_empty() {
                            return Err(Error::UnsplittableRegion);
                        }
                        if keys.insert(c.lines_crossing.clone()) {
                            cover.add_row(c.lines_crossing.iter().map(|l| index[l]).collect());
                            constraints.push(c);
                        }
                    }
                }
            }
        }
        t *= 2;
        if t > cap {
            return Err(Error::BudgetExhausted { t });
        }
    }
}

/// `ceil` of the covering LP optimum over the accumulated constraints with
/// every line of the plane allowed. Each line acts on the points like one
/// of the canonical lines, so this LP bounds the optimum from below.
pub fn certified_lower_bound<T: Scalar>(inst: &Instance<T>, constraints: &[ViolatedConstraint<T>]) -> u64 {
    if constraints.is_empty() {
        return 0;
    }
    let lines = canonical_lines(&inst.all_points());
    let sets: Vec<Vec<usize>> = constraints
        .iter()
        .map(|c| (0..lines.len()).filter(|&i| splits(&lines[i], &c.points)).collect())
        .collect();
    match min_cover::<T>(lines.len(), &sets) {
        Some(sol) => ceil_to_u64(&sol.value),
        None => u64::MAX,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::PointSet;
    use crate::scalar::{int, ratio};

    fn grid(n: i64) -> Vec<Point<Rational>> {
        (0..n).flat_map(|x| (0..n).map(move |y| Point::from_ints(x, y))).collect()
    }

    #[test]
    fn lp_examples() {
        let l = Line::from_slope_intercept(int::<Rational>(0), int(0));
        let none: Vec<ViolatedConstraint<Rational>> = Vec::new();
        match lp_feasible(std::slice::from_ref(&l), &none, &int(0)) {
            LpOutcome::Feasible(x) => assert!(x.x.iter().all(|v| *v == int(0))),
            _ => panic!(),
        }
        let pts = vec![Point::from_ints(0, 1), Point::from_ints(0, -1)];
        let c = ViolatedConstraint {
            region: convex_hull(&pts).unwrap(),
            points: pts,
            lines_crossing: vec![l.clone()],
            witness_set_index: 0,
            witness_count: 2,
            fractional_value: int(0),
            support: Vec::new(),
        };
        match lp_feasible(std::slice::from_ref(&l), std::slice::from_ref(&c), &int(1)) {
            LpOutcome::Feasible(x) => assert_eq!(x.x, vec![int(1)]),
            _ => panic!(),
        }
        assert!(matches!(lp_feasible(&[l], &[c], &int(0)), LpOutcome::Infeasible { .. }));
    }

    #[test]
    fn fraction_one_needs_nothing() {
        let inst = Instance::new(vec![PointSet { points: grid(3), fraction: int(1) }]).unwrap();
        let sol = solve_reduction(&inst, &ReductionConfig::default()).unwrap();
        assert!(sol.lines.is_empty());
    }

    #[test]
    fn zero_solution_gives_the_whole_plane() {
        let inst = Instance::new(vec![PointSet { points: grid(2), fraction: ratio(1, 2) }]).unwrap();
        let cands = lines_through_pairs(&inst.all_points());
        let x = FractionalSolution { x: vec![int(0); cands.len()], lines: cands.clone(), t: int(1), value: int(0) };
        match round_fractional(&inst, &cands, &x, 1, 5).unwrap() {
            Rounding::Violated { constraints, .. } => {
                assert_eq!(constraints.len(), 1);
                assert_eq!(constraints[0].fractional_value, int(0));
                assert_eq!(constraints[0].witness_count, 4);
            }
            _ => panic!("expected a violated constraint"),
        }
    }

    #[test]
    fn grid_is_halved() {
        let inst = Instance::new(vec![PointSet { points: grid(4), fraction: ratio(1, 2) }]).unwrap();
        let sol = solve_reduction(&inst, &ReductionConfig { seed: 5, ..Default::default() }).unwrap();
        assert!(verify_halving(&inst, &sol.lines).valid);
        assert!(sol.stats.t_lower <= 1);
    }
}
