use std::collections::{HashMap, HashSet};

use super::WeightedLineSet;
use crate::arrangement::{cells_along, Arrangement, Zobrist};
use crate::geom::{Line, Point};
use crate::scalar::{mid, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuttingReport<T> {
    pub valid: bool,
    /// A point inside the heaviest open cell of `A(R)`.
    pub worst_face: Option<Point<T>>,
    pub worst_weight: T,
    pub total_weight: T,
}

fn interval_point<T: Scalar>(l: &Line<T>, lo: &Option<T>, hi: &Option<T>) -> Point<T> {
    let t = match (lo, hi) {
        (Some(a), Some(b)) => mid(a, b),
        (Some(a), None) => a.clone() + T::one(),
        (None, Some(b)) => b.clone() - T::one(),
        (None, None) => T::zero(),
    };
    l.point_at(&t)
}

/// Weighs every open cell of `A(r)` by the lines of `l` crossing it and
/// reports the heaviest. Valid iff no cell exceeds `eps` times the total.
pub fn verify_cutting<T: Scalar>(l: &WeightedLineSet<T>, r: &[Line<T>], eps: &T) -> CuttingReport<T> {
    let total = l.total_weight().clone();
    let limit = eps.clone() * &total;
    let mut dedup: Vec<Line<T>> = Vec::with_capacity(r.len());
    let mut present = HashSet::new();
    for line in r {
        if present.insert(line.clone()) {
            dedup.push(line.clone());
        }
    }
    if dedup.is_empty() {
        let worst_face = (!l.is_empty()).then(|| Point::new(T::zero(), T::zero()));
        return CuttingReport { valid: total <= limit, worst_face, worst_weight: total.clone(), total_weight: total };
    }
    let z = Zobrist::new(dedup.len(), dedup.len() as u64);
    let mut weights: HashMap<u128, T> = HashMap::new();
    let mut worst = T::zero();
    let mut worst_face = None;
    for (line, w) in l.iter() {
        if present.contains(line) {
            continue;
        }
        for (key, lo, hi) in cells_along(&dedup, &z, line) {
            let acc = weights.entry(key).or_insert_with(T::zero);
            *acc = acc.clone() + w;
            if *acc > worst {
                worst = acc.clone();
                worst_face = Some(interval_point(line, &lo, &hi));
            }
        }
    }
    CuttingReport { valid: worst <= limit, worst_face, worst_weight: worst, total_weight: total }
}

/// Largest weight of lines of `l` crossing one open trapezoid of the
/// vertical decomposition of `A(s)`.
pub fn max_trapezoid_weight<T: Scalar>(l: &WeightedLineSet<T>, s: &[Line<T>]) -> T {
    let arr = Arrangement::build(s);
    let lines = arr.lines();
    if lines.is_empty() {
        return l.total_weight().clone();
    }
    let z = Zobrist::new(lines.len(), 11);
    let mut by_key: HashMap<u128, usize> = HashMap::new();
    let mut walls: Vec<Vec<T>> = Vec::with_capacity(arr.cells().len());
    for (c, cell) in arr.cells().iter().enumerate() {
        by_key.insert(crate::arrangement::point_key(lines, &z, &cell.sample), c);
        let mut xs: Vec<T> = arr
            .cell_vertices(c)
            .into_iter()
            .map(|v| arr.vertices()[v].point.x.clone())
            .chain(cell.edges.iter().map(|&e| &lines[arr.edges()[e].line]).filter(|l| l.is_vertical()).map(|l| l.c().clone()))
            .collect();
        xs.sort();
        xs.dedup();
        walls.push(xs);
    }
    let present: HashSet<&Line<T>> = lines.iter().collect();
    let mut weights: HashMap<(usize, usize), T> = HashMap::new();
    let mut worst = T::zero();
    for (line, w) in l.iter() {
        if present.contains(line) {
            continue;
        }
        for (key, lo, hi) in cells_along(lines, &z, line) {
            let c = by_key[&key];
            let xs = &walls[c];
            // Slab k is the open x-range between xs[k-1] and xs[k].
            let slabs: Vec<usize> = if line.is_vertical() {
                let x = line.c();
                match xs.binary_search(x) {
                    Ok(_) => Vec::new(),
                    Err(k) => vec![k],
                }
            } else {
                let first = lo.as_ref().map_or(0, |a| xs.partition_point(|x| x <= a));
                let last = hi.as_ref().map_or(xs.len(), |b| xs.partition_point(|x| x < b));
                (first..=last).collect()
            };
            for k in slabs {
                let acc = weights.entry((c, k)).or_insert_with(T::zero);
                *acc = acc.clone() + w;
                if *acc > worst {
                    worst = acc.clone();
                }
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::crossing_weight;
    use crate::scalar::{int, ratio, Rational};

    fn sl(m: i64, k: i64) -> Line<Rational> {
        Line::from_slope_intercept(int(m), int(k))
    }

    #[test]
    fn containing_all_lines_is_valid() {
        let lines = vec![sl(1, 0), sl(-1, 2), sl(3, 1)];
        let l = WeightedLineSet::uniform(&lines);
        let rep = verify_cutting(&l, &lines, &ratio(1, 100));
        assert!(rep.valid);
        assert_eq!(rep.worst_weight, int(0));
    }

    #[test]
    fn empty_cutting_is_invalid() {
        let l = WeightedLineSet::uniform(&[sl(1, 0), sl(2, 0)]);
        let rep = verify_cutting(&l, &[], &ratio(1, 2));
        assert!(!rep.valid);
        assert_eq!(rep.worst_weight, int(2));
    }

    #[test]
    fn matches_face_scan() {
        let l = WeightedLineSet::new(vec![(sl(1, 0), int(1)), (sl(-1, 0), int(3)), (sl(0, 1), int(2)), (Line::vertical(int(3)), int(1))]);
        let r = vec![sl(0, 0), Line::vertical(int(1)), sl(2, -5)];
        let rep = verify_cutting(&l, &r, &ratio(1, 2));
        let arr = Arrangement::build(&r);
        let brute = (0..arr.cells().len())
            .map(|c| crossing_weight(&arr.cell_region(c), &l))
            .max()
            .unwrap();
        assert_eq!(rep.worst_weight, brute);
        let p = rep.worst_face.unwrap();
        let c = match arr.locate(&p) {
            crate::arrangement::FaceId::Cell(c) => c,
            _ => unreachable!(),
        };
        assert_eq!(crossing_weight(&arr.cell_region(c), &l), brute);
    }

    #[test]
    fn trapezoid_weight_matches_decomposition() {
        let l = WeightedLineSet::new(vec![(sl(1, 0), int(1)), (sl(-1, 0), int(3)), (sl(0, 1), int(2)), (Line::vertical(int(3)), int(1)), (sl(5, -2), int(2))]);
        let s = vec![sl(0, 0), sl(2, -5), sl(-1, 4)];
        let arr = Arrangement::build(&s);
        let mut brute = int::<Rational>(0);
        for c in 0..arr.cells().len() {
            for t in arr.vertical_decompose(c) {
                brute = brute.max(crossing_weight(&t.half_planes(true), &l));
            }
        }
        assert_eq!(max_trapezoid_weight(&l, &s), brute);
    }
}
