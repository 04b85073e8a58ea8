use std::collections::HashMap;

use crate::geom::Line;
use crate::scalar::Scalar;

/// Lines with non-negative weights. Zero weights are dropped and repeated
/// lines merged, keeping the order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedLineSet<T> {
    entries: Vec<(Line<T>, T)>,
    total: T,
}

impl<T: Scalar> WeightedLineSet<T> {
    /// Panics on a negative weight.
    pub fn new(items: impl IntoIterator<Item = (Line<T>, T)>) -> Self {
        let mut entries: Vec<(Line<T>, T)> = Vec::new();
        let mut index: HashMap<Line<T>, usize> = HashMap::new();
        for (l, w) in items {
            assert!(!w.is_negative(), "negative line weight");
            if w.is_zero() {
                continue;
            }
            match index.get(&l) {
                Some(&i) => entries[i].1 = entries[i].1.clone() + w,
                None => {
                    index.insert(l.clone(), entries.len());
                    entries.push((l, w));
                }
            }
        }
        let total = entries.iter().fold(T::zero(), |acc, (_, w)| acc + w);
        WeightedLineSet { entries, total }
    }

    pub fn uniform(lines: &[Line<T>]) -> Self {
        Self::new(lines.iter().map(|l| (l.clone(), T::one())))
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Line<T>, T)> {
        self.entries.iter()
    }

    pub fn lines(&self) -> Vec<Line<T>> {
        self.entries.iter().map(|(l, _)| l.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_weight(&self) -> &T {
        &self.total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    #[test]
    fn merges_and_drops() {
        let a = Line::from_slope_intercept(int::<Rational>(1), int(0));
        let b = Line::vertical(int::<Rational>(2));
        let w = WeightedLineSet::new(vec![(a.clone(), int(1)), (b, int(0)), (a, int(3))]);
        assert_eq!(w.len(), 1);
        assert_eq!(w.total_weight(), &int(4));
    }
}
