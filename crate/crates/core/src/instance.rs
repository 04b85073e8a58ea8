//! Problem input shared by the reduction and guarding solvers.

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::scalar::{from_usize, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet<T> {
    pub points: Vec<Point<T>>,
    pub fraction: T,
}

/// `k` point sets, each with the fraction of its points any single face (or
/// convex region) is allowed to hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance<T> {
    sets: Vec<PointSet<T>>,
}

impl<T: Scalar> Instance<T> {
    /// Validates fractions in `(0, 1]` and nonempty sets, and deduplicates
    /// points within each set (order of first appearance kept).
    pub fn new(sets: Vec<PointSet<T>>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidInstance("no point sets".into()));
        }
        let mut out = Vec::with_capacity(sets.len());
        for (i, set) in sets.into_iter().enumerate() {
            if set.points.is_empty() {
                return Err(Error::InvalidInstance(format!("set {i} is empty")));
            }
            if set.fraction <= T::zero() || set.fraction > T::one() {
                return Err(Error::InvalidInstance(format!("set {i} has fraction outside (0, 1]")));
            }
            let mut seen = std::collections::HashSet::new();
            let points = set.points.into_iter().filter(|p| seen.insert(p.clone())).collect();
            out.push(PointSet { points, fraction: set.fraction });
        }
        Ok(Instance { sets: out })
    }

    pub fn sets(&self) -> &[PointSet<T>] {
        &self.sets
    }

    pub fn k(&self) -> usize {
        self.sets.len()
    }

    pub fn m(&self) -> usize {
        self.sets.iter().map(|s| s.points.len()).sum()
    }

    /// `fr_i * m_i`: the most points of set `i` a face may hold.
    pub fn capacity(&self, i: usize) -> T {
        self.sets[i].fraction.clone() * from_usize::<T>(self.sets[i].points.len())
    }

    pub fn exceeds(&self, i: usize, count: usize) -> bool {
        from_usize::<T>(count) > self.capacity(i)
    }

    /// Smallest fraction over all sets.
    pub fn min_fraction(&self) -> T {
        self.sets.iter().map(|s| s.fraction.clone()).min().expect("nonempty")
    }

    /// Distinct points of all sets, sorted.
    pub fn all_points(&self) -> Vec<Point<T>> {
        let mut pts: Vec<Point<T>> = self.sets.iter().flat_map(|s| s.points.iter().cloned()).collect();
        pts.sort();
        pts.dedup();
        pts
    }

    pub fn map_points(&self, f: impl Fn(&Point<T>) -> Point<T>) -> Self {
        Instance {
            sets: self
                .sets
                .iter()
                .map(|s| PointSet {
                    points: s.points.iter().map(&f).collect(),
                    fraction: s.fraction.clone(),
                })
                .collect(),
        }
    }
}
