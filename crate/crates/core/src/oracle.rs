//! Seeded instance generators and brute-force references for small inputs.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::cutting::{simple_weak_cutting, weak_cutting, CuttingParams, WeightedLineSet};
use crate::error::{Error, Result};
use crate::geom::{convex_hull, Line, Point, Polygon};
use crate::instance::{Instance, PointSet};
use crate::reduction::{canonical_lines, verify_halving};
use crate::scalar::{int, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    Grid,
    ConvexPosition,
    Parabola,
    UniformRandom,
}

impl std::str::FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grid" => Ok(Self::Grid),
            "convex" | "convex_position" => Ok(Self::ConvexPosition),
            "parabola" => Ok(Self::Parabola),
            "random" | "uniform_random" => Ok(Self::UniformRandom),
            _ => Err(Error::InvalidParameter(format!("unknown generator kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub seed: u64,
    /// Coordinates of random points lie in `[-bound, bound]`; convex points on
    /// the circle of this radius.
    pub bound: i64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: usize, seed: u64) -> Self {
        GeneratorSpec { kind, n, seed, bound: 100 }
    }
}

/// Grid: the first `n` points of the `ceil(sqrt n)`-wide integer grid in
/// row order. Parabola: `(i, i^2)` for `i = 1..=n`. Convex position: points
/// on a circle from random rational angles. Uniform: distinct integer points.
pub fn gen_points(spec: &GeneratorSpec) -> Result<Vec<Point<Rational>>> {
    if spec.n == 0 || spec.bound < 1 {
        return Err(Error::InvalidParameter("generator needs n >= 1 and bound >= 1".into()));
    }
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let out = match spec.kind {
        GeneratorKind::Grid => {
            let w = (1..).find(|w| w * w >= n).expect("finite");
            (0..n).map(|i| Point::from_ints((i % w) as i64, (i / w) as i64)).collect()
        }
        GeneratorKind::Parabola => (1..=n as i64).map(|i| Point::from_ints(i, i * i)).collect(),
        GeneratorKind::ConvexPosition => {
            // (1 - t^2, 2t) / (1 + t^2) runs over the unit circle.
            let mut ts = BTreeSet::new();
            while ts.len() < n {
                ts.insert(rng.gen_range(-4000i64..=4000));
            }
            let r = int::<Rational>(spec.bound);
            ts.into_iter()
                .map(|k| {
                    let t = ratio::<Rational>(k, 1000);
                    let d = Rational::ONE + t.clone() * &t;
                    let x = (Rational::ONE - t.clone() * &t) / &d * &r;
                    let y = int::<Rational>(2) * t / d * &r;
                    Point::new(x, y)
                })
                .collect()
        }
        GeneratorKind::UniformRandom => {
            let side = (2 * spec.bound + 1) as u128;
            if side * side < n as u128 {
                return Err(Error::InvalidParameter("box too small for n distinct points".into()));
            }
            let mut seen = BTreeSet::new();
            let mut out = Vec::with_capacity(n);
            while out.len() < n {
                let p = Point::from_ints(rng.gen_range(-spec.bound..=spec.bound), rng.gen_range(-spec.bound..=spec.bound));
                if seen.insert(p.clone()) {
                    out.push(p);
                }
            }
            out
        }
    };
    Ok(out)
}

/// Splits the generated points round-robin into `k` sets sharing one
/// fraction.
pub fn gen_instance(spec: &GeneratorSpec, k: usize, fraction: Rational) -> Result<Instance<Rational>> {
    if k == 0 || k > spec.n {
        return Err(Error::InvalidParameter("need 1 <= k <= n".into()));
    }
    let pts = gen_points(spec)?;
    let mut sets: Vec<Vec<Point<Rational>>> = vec![Vec::new(); k];
    for (i, p) in pts.into_iter().enumerate() {
        sets[i % k].push(p);
    }
    Instance::new(sets.into_iter().map(|points| PointSet { points, fraction: fraction.clone() }).collect())
}

/// `n` distinct non-vertical lines with small random rational coefficients.
pub fn random_lines(n: usize, seed: u64) -> Vec<Line<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let slope = ratio::<Rational>(rng.gen_range(-60..=60), rng.gen_range(1..=9));
        let icpt = ratio::<Rational>(rng.gen_range(-200..=200), rng.gen_range(1..=5));
        let l = Line::from_slope_intercept(slope, icpt);
        if seen.insert(l.clone()) {
            out.push(l);
        }
    }
    out
}

/// Smallest valid subset of the canonical lines with at most `max_size`
/// lines, by exhaustive enumeration. `None` when there is none that small.
pub fn brute_optimal_halving(inst: &Instance<Rational>, max_size: usize) -> Option<(usize, Vec<Line<Rational>>)> {
    brute_optimal_halving_over(inst, &canonical_lines(&inst.all_points()), max_size)
}

/// Smallest valid subset of `lines` with at most `max_size` lines.
pub fn brute_optimal_halving_over(
    inst: &Instance<Rational>,
    lines: &[Line<Rational>],
    max_size: usize,
) -> Option<(usize, Vec<Line<Rational>>)> {
    if verify_halving(inst, &[]).valid {
        return Some((0, Vec::new()));
    }
    // sides[l][s][p]: side of point p of set s, as 0, 1, 2.
    let sides: Vec<Vec<Vec<u8>>> = lines
        .iter()
        .map(|l| inst.sets().iter().map(|s| s.points.iter().map(|p| (l.side(p) as i8 + 1) as u8).collect()).collect())
        .collect();
    let caps: Vec<usize> = (0..inst.k()).map(|i| (0..=inst.sets()[i].points.len()).rev().find(|&c| !inst.exceeds(i, c)).unwrap_or(0)).collect();
    let valid = |pick: &[usize]| {
        inst.sets().iter().enumerate().all(|(s, set)| {
            let mut keys: Vec<u64> = (0..set.points.len())
                .map(|p| pick.iter().fold(0u64, |acc, &l| acc * 3 + sides[l][s][p] as u64))
                .collect();
            keys.sort_unstable();
            keys.chunk_by(|a, b| a == b).all(|g| g.len() <= caps[s])
        })
    };
    for size in 1..=max_size.min(lines.len()) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            if valid(&pick) {
                return Some((size, pick.iter().map(|&i| lines[i].clone()).collect()));
            }
            // Next combination in lexicographic order.
            let mut i = size;
            while i > 0 && pick[i - 1] == lines.len() - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            pick[i - 1] += 1;
            for j in i..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    None
}

/// Largest `|P ∩ CH(S)|` over subsets `S` of `P` whose closed hull avoids
/// every point of `W`, by enumerating all subsets.
pub fn brute_max_empty_convex(p: &[Point<Rational>], w: &[Point<Rational>]) -> Option<(usize, Polygon<Rational>)> {
    let mut p = p.to_vec();
    p.sort();
    p.dedup();
    assert!(p.len() <= 16, "brute force over at most 16 points");
    let mut best: Option<(usize, Polygon<Rational>)> = None;
    for mask in 1u32..(1 << p.len()) {
        let s: Vec<Point<Rational>> = (0..p.len()).filter(|i| mask >> i & 1 == 1).map(|i| p[i].clone()).collect();
        let hull = convex_hull(&s).expect("nonempty");
        if w.iter().any(|q| hull.contains(q)) {
            continue;
        }
        let count = p.iter().filter(|q| hull.contains(q)).count();
        if best.as_ref().is_none_or(|b| count > b.0) {
            best = Some((count, hull));
        }
    }
    best
}

pub const CALIBRATION_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CuttingFit {
    /// As `"p/q"`.
    pub eps: String,
    pub lines: usize,
    pub weak_median: usize,
    pub simple_median: usize,
    /// Largest `|R| / (eps^-1.5 * log2(1/eps)^1.5)` seen for the weak cutting.
    pub weak_constant: f64,
    /// Largest `|R| / eps^-2` seen for the simple cutting.
    pub simple_constant: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalibrationReport {
    pub version: u32,
    pub seed: u64,
    pub trials: usize,
    /// Lines per arrangement in the complexity fit.
    pub nu: usize,
    /// Largest `c_i / (nu^(2/3) / i^(1/3) + nu / i + 1)` seen, times the margin.
    pub complexity_constant: f64,
    pub complexity_margin: f64,
    pub cutting: Vec<CuttingFit>,
}

/// Right-hand side of the face-complexity bound for the `i`-th largest cell
/// (1-based) of an arrangement of `nu` lines.
pub fn complexity_shape(nu: usize, i: usize) -> f64 {
    let nu = nu as f64;
    let i = i as f64;
    nu.powf(2.0 / 3.0) / i.powf(1.0 / 3.0) + nu / i + 1.0
}

/// Largest `c_i / complexity_shape(nu, i)` over the sorted cell complexities
/// of `A(lines)`.
pub fn complexity_ratio(lines: &[Line<Rational>]) -> f64 {
    let arr = Arrangement::build(lines);
    let mut prof = arr.complexity_profile();
    prof.sort_unstable_by(|a, b| b.cmp(a));
    prof.iter().enumerate().map(|(i, &c)| c as f64 / complexity_shape(lines.len(), i + 1)).fold(0.0, f64::max)
}

fn median(v: &mut [usize]) -> usize {
    v.sort_unstable();
    v[v.len() / 2]
}

/// Fits the constants used by the soft checks. Deterministic in `seed`.
pub fn calibrate_constants(trials: usize, seed: u64) -> Result<CalibrationReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("need at least one trial".into()));
    }
    let nu = 64;
    let margin = 1.5;
    let mut worst = 0.0f64;
    for t in 0..trials {
        worst = worst.max(complexity_ratio(&random_lines(nu, seed ^ (t as u64) << 8)));
    }
    let cutting_trials = trials.clamp(1, 5);
    let n = 40;
    let mut cutting = Vec::new();
    for den in [5i64, 10, 20] {
        let eps = ratio::<Rational>(1, den);
        let mut weak = Vec::new();
        let mut simple = Vec::new();
        for t in 0..cutting_trials {
            let s = seed.wrapping_add(1000 * den as u64 + t as u64);
            let l = WeightedLineSet::uniform(&random_lines(n, s));
            weak.push(weak_cutting(&l, &eps, &CuttingParams::new(eps.clone(), s)?)?.len());
            simple.push(simple_weak_cutting(&l, &eps, s)?.len());
        }
        let e = den as f64;
        let weak_shape = e.powf(1.5) * e.log2().powf(1.5);
        cutting.push(CuttingFit {
            eps: format!("1/{den}"),
            lines: n,
            weak_constant: *weak.iter().max().expect("trials") as f64 / weak_shape,
            simple_constant: *simple.iter().max().expect("trials") as f64 / (e * e),
            weak_median: median(&mut weak),
            simple_median: median(&mut simple),
        });
    }
    Ok(CalibrationReport {
        version: CALIBRATION_VERSION,
        seed,
        trials,
        nu,
        complexity_constant: worst * margin,
        complexity_margin: margin,
        cutting,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guarding::find_bad_polygon;

    #[test]
    fn generators() {
        let g = gen_points(&GeneratorSpec::new(GeneratorKind::Grid, 9, 0)).unwrap();
        assert_eq!(g.len(), 9);
        assert!(g.contains(&Point::from_ints(2, 2)));
        let p = gen_points(&GeneratorSpec::new(GeneratorKind::Parabola, 4, 0)).unwrap();
        assert_eq!(p, vec![Point::from_ints(1, 1), Point::from_ints(2, 4), Point::from_ints(3, 9), Point::from_ints(4, 16)]);
        let c = gen_points(&GeneratorSpec::new(GeneratorKind::ConvexPosition, 6, 3)).unwrap();
        assert_eq!(convex_hull(&c).unwrap().len(), 6);
        let r1 = gen_points(&GeneratorSpec::new(GeneratorKind::UniformRandom, 20, 7)).unwrap();
        let r2 = gen_points(&GeneratorSpec::new(GeneratorKind::UniformRandom, 20, 7)).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn brute_halving_examples() {
        let grid = gen_instance(&GeneratorSpec::new(GeneratorKind::Grid, 16, 0), 1, ratio(1, 2)).unwrap();
        assert_eq!(brute_optimal_halving(&grid, 2).unwrap().0, 1);
        let whole = gen_instance(&GeneratorSpec::new(GeneratorKind::Grid, 16, 0), 1, int(1)).unwrap();
        assert_eq!(brute_optimal_halving(&whole, 2).unwrap().0, 0);
    }

    #[test]
    fn brute_empty_convex_agrees_with_dag() {
        let p = vec![Point::from_ints(0, 10), Point::from_ints(10, 3), Point::from_ints(6, -8), Point::from_ints(-6, -8), Point::from_ints(-10, 3)];
        let w = vec![Point::from_ints(0, 0)];
        let (count, _) = brute_max_empty_convex(&p, &w).unwrap();
        assert_eq!(count, 3);
        assert_eq!(find_bad_polygon(&p, 1, &w).unwrap().count, count);
        assert_eq!(brute_max_empty_convex(&p, &[]).unwrap().0, 5);
    }
}
