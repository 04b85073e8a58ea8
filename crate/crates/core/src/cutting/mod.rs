//! Weak cuttings: line sets `R` such that every open cell of `A(R)` is
//! crossed by lines of at most an `eps` fraction of the input weight.

mod verify;
mod weighted;

use std::collections::{BTreeSet, HashSet};

use rand::distributions::WeightedIndex;
use rand::prelude::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::geom::{meet, Line};
use crate::scalar::{ceil_to_u64, from_u64, to_f64, Scalar};

pub use verify::{max_trapezoid_weight, verify_cutting, CuttingReport};
pub use weighted::WeightedLineSet;

/// Leading constant of the sample size of [`sample_net`].
pub const NET_CONSTANT: f64 = 4.0;
/// Weight of the `log(1/delta)` term of [`sample_net`].
pub const NET_DIMENSION: f64 = 8.0;

/// Parameters of [`weak_cutting`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuttingParams<T> {
    pub eps: T,
    /// `ceil(10 / eps)`.
    pub r: u64,
    /// Faces with more than this many edges get vertical walls.
    pub oversample_alpha: u64,
    pub net_constant_c: u64,
    pub seed: u64,
    pub max_retries: u32,
}

fn log2_clamped(v: u64) -> f64 {
    if v < 2 {
        1.0
    } else {
        (v as f64).log2().max(1.0)
    }
}

impl<T: Scalar> CuttingParams<T> {
    /// Defaults: `alpha = ceil(sqrt(r log r))`, `c = 2`, 20 retries.
    pub fn new(eps: T, seed: u64) -> Result<Self> {
        if eps <= T::zero() || eps > T::one() {
            return Err(Error::InvalidParameter("eps must lie in (0, 1]".into()));
        }
        let r = ceil_to_u64(&(from_u64::<T>(10) / &eps));
        let alpha = ((r as f64) * log2_clamped(r)).sqrt().ceil() as u64;
        Ok(CuttingParams {
            eps,
            r,
            oversample_alpha: alpha.clamp(1, r.saturating_pow(3)),
            net_constant_c: 2,
            seed,
            max_retries: 20,
        })
    }

    /// Sample size `c * alpha * r * ceil(log2 r)`.
    pub fn nu(&self) -> u64 {
        self.nu_with(self.net_constant_c)
    }

    fn nu_with(&self, c: u64) -> u64 {
        let log = log2_clamped(self.r).ceil() as u64;
        c * self.oversample_alpha * self.r * log
    }

    /// `1 / (2 alpha r)`.
    pub fn delta(&self) -> T {
        T::one() / from_u64::<T>(2 * self.oversample_alpha * self.r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Sampled,
    VerticalRefinement,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CuttingStats {
    /// Draws of the last attempt (with repetition).
    pub draws: u64,
    pub sampled: usize,
    pub large_faces: usize,
    /// Summed complexity of the refined faces.
    pub refined_complexity: usize,
    pub refinement_lines: usize,
    pub attempts: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cutting<T> {
    pub lines: Vec<Line<T>>,
    pub provenance: Vec<Provenance>,
    pub stats: CuttingStats,
}

impl<T: Scalar> Cutting<T> {
    pub fn empty() -> Self {
        Cutting { lines: Vec::new(), provenance: Vec::new(), stats: CuttingStats::default() }
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

fn draw<T: Scalar>(l: &WeightedLineSet<T>, count: u64, rng: &mut ChaCha8Rng) -> Vec<Line<T>> {
    let items: Vec<&(Line<T>, T)> = l.iter().collect();
    let dist = WeightedIndex::new(items.iter().map(|(_, w)| to_f64(w).max(f64::MIN_POSITIVE)))
        .expect("positive weights");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..count {
        let i = dist.sample(rng);
        if seen.insert(i) {
            out.push(items[i].0.clone());
        }
        if seen.len() == items.len() {
            break;
        }
    }
    out
}

/// Number of draws [`sample_net`] makes.
pub fn net_sample_size(delta: f64, phi: f64) -> u64 {
    let inv = 1.0 / delta;
    (NET_CONSTANT * inv * ((1.0 / phi).ln() + NET_DIMENSION * inv.ln())).ceil() as u64
}

/// Draws lines with probability proportional to weight, with replacement,
/// and returns the distinct ones: a `delta`-net for vertical trapezoids with
/// probability at least `1 - phi`.
pub fn sample_net<T: Scalar>(l: &WeightedLineSet<T>, delta: &T, phi: &T, seed: u64) -> Result<Vec<Line<T>>> {
    if l.is_empty() {
        return Err(Error::EmptyInput);
    }
    if *delta <= T::zero() || *delta > T::one() {
        return Err(Error::InvalidParameter("delta must lie in (0, 1]".into()));
    }
    if *phi <= T::zero() || *phi >= T::one() {
        return Err(Error::InvalidParameter("phi must lie in (0, 1)".into()));
    }
    let m = net_sample_size(to_f64(delta), to_f64(phi));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(draw(l, m, &mut rng))
}

fn attempt_seed(seed: u64, attempt: u32) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(attempt as u64)
}

/// The simple construction: a sampled `(1/r)`-cutting `S` with `r = ceil(1/eps)`,
/// whose vertical decomposition walls are extended to full lines. The output
/// is `S` plus a vertical line through every vertex of `A(S)`, verified
/// before return and resampled on failure.
pub fn simple_weak_cutting<T: Scalar>(l: &WeightedLineSet<T>, eps: &T, seed: u64) -> Result<Cutting<T>> {
    if *eps <= T::zero() || *eps > T::one() {
        return Err(Error::InvalidParameter("eps must lie in (0, 1]".into()));
    }
    if l.is_empty() || *eps == T::one() {
        return Ok(Cutting::empty());
    }
    let r = ceil_to_u64(&(T::one() / eps));
    let delta = T::one() / from_u64::<T>(r);
    let phi = T::one() / from_u64::<T>(10);
    let retries = 20;
    let mut worst = T::zero();
    for attempt in 0..=retries {
        let s = sample_net(l, &delta, &phi, attempt_seed(seed, attempt))?;
        let mut walls = BTreeSet::new();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if let Some(p) = meet(&s[i], &s[j]) {
                    walls.insert(p.x);
                }
            }
        }
        let sample_walls: HashSet<&Line<T>> = s.iter().filter(|x| x.is_vertical()).collect();
        let mut cut = Cutting::empty();
        cut.stats.draws = net_sample_size(to_f64(&delta), to_f64(&phi));
        cut.stats.sampled = s.len();
        cut.stats.attempts = attempt + 1;
        for line in &s {
            cut.lines.push(line.clone());
            cut.provenance.push(Provenance::Sampled);
        }
        for x in walls {
            let wall = Line::vertical(x);
            if !sample_walls.contains(&wall) {
                cut.lines.push(wall);
                cut.provenance.push(Provenance::VerticalRefinement);
            }
        }
        cut.stats.refinement_lines = cut.lines.len() - s.len();
        let report = verify_cutting(l, &cut.lines, eps);
        if report.valid {
            return Ok(cut);
        }
        worst = report.worst_weight;
    }
    Err(Error::CuttingFailed { retries, worst_weight: worst.to_string() })
}

/// The oversampling construction: `R1` is `nu` weighted draws, and every
/// cell of `A(R1)` with more than `alpha` edges gets a vertical line through
/// every `alpha`-th of its vertices in x-order. The result is verified and
/// `R1` resampled (with the sample constant doubled) on failure.
pub fn weak_cutting<T: Scalar>(l: &WeightedLineSet<T>, eps: &T, params: &CuttingParams<T>) -> Result<Cutting<T>> {
    if *eps <= T::zero() || *eps > T::one() {
        return Err(Error::InvalidParameter("eps must lie in (0, 1]".into()));
    }
    if l.is_empty() || *eps == T::one() {
        return Ok(Cutting::empty());
    }
    let alpha = params.oversample_alpha as usize;
    let mut c = params.net_constant_c;
    let mut worst = T::zero();
    for attempt in 0..=params.max_retries {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt_seed(params.seed, attempt));
        let draws = params.nu_with(c);
        let r1 = draw(l, draws, &mut rng);
        let arr = Arrangement::build(&r1);
        let mut cut = Cutting::empty();
        cut.stats.draws = draws;
        cut.stats.sampled = r1.len();
        cut.stats.attempts = attempt + 1;
        let mut walls = BTreeSet::new();
        for cell in 0..arr.cells().len() {
            let k = arr.complexity(cell);
            if k <= alpha {
                continue;
            }
            cut.stats.large_faces += 1;
            cut.stats.refined_complexity += k;
            let mut vs: Vec<_> = arr.cell_vertices(cell).into_iter().map(|v| &arr.vertices()[v].point).collect();
            vs.sort();
            for idx in (alpha..=vs.len()).step_by(alpha) {
                walls.insert(vs[idx - 1].x.clone());
            }
        }
        let present: HashSet<&Line<T>> = r1.iter().collect();
        for line in &r1 {
            cut.lines.push(line.clone());
            cut.provenance.push(Provenance::Sampled);
        }
        for x in walls {
            let wall = Line::vertical(x);
            if !present.contains(&wall) {
                cut.lines.push(wall);
                cut.provenance.push(Provenance::VerticalRefinement);
                cut.stats.refinement_lines += 1;
            }
        }
        let report = verify_cutting(l, &cut.lines, eps);
        if report.valid {
            return Ok(cut);
        }
        worst = report.worst_weight;
        c = c.saturating_mul(2);
    }
    Err(Error::CuttingFailed { retries: params.max_retries, worst_weight: worst.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Rational};

    #[test]
    fn params_follow_formulas() {
        let p = CuttingParams::new(ratio::<Rational>(1, 10), 0).unwrap();
        assert_eq!(p.r, 100);
        // sqrt(100 * log2 100) = 25.77...
        assert_eq!(p.oversample_alpha, 26);
        assert_eq!(p.nu(), 2 * 26 * 100 * 7);
        assert_eq!(p.delta(), ratio(1, 5200));
        assert!(CuttingParams::new(int::<Rational>(0), 0).is_err());
        let one = CuttingParams::new(int::<Rational>(1), 0).unwrap();
        assert_eq!(one.r, 10);
    }

    #[test]
    fn sample_sizes() {
        // delta = 1: only the log(1/phi) term is left.
        assert_eq!(net_sample_size(1.0, 0.1), (4.0 * 10f64.ln()).ceil() as u64);
        assert_eq!(net_sample_size(0.5, 0.1), (8.0 * (10f64.ln() + 8.0 * 2f64.ln())).ceil() as u64);
        let l = WeightedLineSet::<Rational>::new(vec![]);
        assert_eq!(sample_net(&l, &int(1), &ratio(1, 10), 0), Err(Error::EmptyInput));
    }

    #[test]
    fn trivial_eps() {
        let l = WeightedLineSet::uniform(&[Line::from_slope_intercept(int::<Rational>(1), int(0))]);
        assert!(weak_cutting(&l, &int(1), &CuttingParams::new(int(1), 0).unwrap()).unwrap().is_empty());
        assert!(simple_weak_cutting(&l, &int(1), 0).unwrap().is_empty());
    }

    #[test]
    fn two_crossing_lines() {
        let l = WeightedLineSet::uniform(&[
            Line::from_slope_intercept(int::<Rational>(1), int(0)),
            Line::from_slope_intercept(int(-1), int(0)),
        ]);
        let eps = ratio::<Rational>(1, 2);
        let s = simple_weak_cutting(&l, &eps, 3).unwrap();
        assert!(verify_cutting(&l, &s.lines, &eps).valid);
        let w = weak_cutting(&l, &eps, &CuttingParams::new(eps.clone(), 3).unwrap()).unwrap();
        assert!(verify_cutting(&l, &w.lines, &eps).valid);
    }
}
