//! Corridors: the closed region between the lower and upper envelopes of a
//! set of non-vertical lines. Under duality a corridor is the convex hull of
//! the dual points of its generators, and every query is a hull query.

use crate::error::{Error, Result};
use crate::geom::{convex_hull, dual_line, dual_point, orient, Line, Point, Polygon};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corridor<T> {
    generators: Vec<Line<T>>,
    dual_hull: Polygon<T>,
}

impl<T: Scalar> Corridor<T> {
    pub fn new(generators: Vec<Line<T>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyInput);
        }
        let duals = generators.iter().map(dual_line).collect::<Result<Vec<_>>>().map_err(|_| Error::VerticalGenerator)?;
        let dual_hull = convex_hull(&duals)?;
        Ok(Corridor { generators, dual_hull })
    }

    pub fn generators(&self) -> &[Line<T>] {
        &self.generators
    }

    pub fn dual_hull(&self) -> &Polygon<T> {
        &self.dual_hull
    }

    /// Closed membership: the dual line of `p` meets the dual hull.
    pub fn contains_point(&self, p: &Point<T>) -> bool {
        self.dual_hull.meets_line(&dual_point(p))
    }

    /// Whether `g` lies inside the corridor, boundary included.
    pub fn contains_line(&self, g: &Line<T>) -> Result<bool> {
        let q = dual_line(g).map_err(|_| Error::VerticalGenerator)?;
        Ok(self.dual_hull.contains(&q))
    }

    /// At most three generators whose own corridor already contains `g`,
    /// found by fanning the dual hull from its first vertex.
    pub fn caratheodory_triple(&self, g: &Line<T>) -> Result<Vec<Line<T>>> {
        if !self.contains_line(g)? {
            return Err(Error::NotInCorridor);
        }
        if self.generators.contains(g) {
            return Ok(vec![g.clone()]);
        }
        let q = dual_line(g)?;
        let v = self.dual_hull.vertices();
        let pick: Vec<&Point<T>> = match v.len() {
            1 => vec![&v[0]],
            2 => vec![&v[0], &v[1]],
            n => {
                // Triangles (v0, v_i, v_{i+1}) cover the hull; find the one
                // holding q by binary search on the fan.
                let (mut lo, mut hi) = (1, n - 1);
                while hi - lo > 1 {
                    let m = (lo + hi) / 2;
                    if orient(&v[0], &v[m], &q) != std::cmp::Ordering::Less {
                        lo = m;
                    } else {
                        hi = m;
                    }
                }
                vec![&v[0], &v[lo], &v[lo + 1]]
            }
        };
        Ok(minimal_support(&pick, &q).into_iter().map(dual_point).collect())
    }
}

/// Drops vertices not needed to keep `q` in the hull of `pts`.
fn minimal_support<'a, T: Scalar>(pts: &[&'a Point<T>], q: &Point<T>) -> Vec<&'a Point<T>> {
    if let Some(p) = pts.iter().find(|p| **p == q) {
        return vec![p];
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let seg = Polygon::new(vec![pts[i].clone(), pts[j].clone()]);
            if seg.is_ok_and(|s| s.contains(q)) {
                return vec![pts[i], pts[j]];
            }
        }
    }
    pts.to_vec()
}

/// The line `sum coeffs[i] * lines[i]`: slope and intercept averaged with the
/// given weights.
pub fn combine<T: Scalar>(lines: &[Line<T>], coeffs: &[T]) -> Result<Line<T>> {
    if lines.is_empty() {
        return Err(Error::EmptyInput);
    }
    if lines.len() != coeffs.len() || coeffs.iter().any(|c| c.is_negative()) {
        return Err(Error::BadCoefficients);
    }
    let sum = coeffs.iter().fold(T::zero(), |a, c| a + c);
    if !sum.is_one() {
        return Err(Error::BadCoefficients);
    }
    let mut slope = T::zero();
    let mut intercept = T::zero();
    for (l, c) in lines.iter().zip(coeffs) {
        let (Some(m), Some(k)) = (l.slope(), l.intercept()) else {
            return Err(Error::VerticalGenerator);
        };
        slope = slope + m * c;
        intercept = intercept + k * c;
    }
    Ok(Line::from_slope_intercept(slope, intercept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::meet;
    use crate::scalar::{int, ratio, Rational};

    fn sl(m: i64, k: i64) -> Line<Rational> {
        Line::from_slope_intercept(int(m), int(k))
    }

    #[test]
    fn combinations() {
        let half = ratio::<Rational>(1, 2);
        assert_eq!(combine(&[sl(0, 0), sl(0, 2)], &[half.clone(), half.clone()]).unwrap(), sl(0, 1));
        assert_eq!(combine(&[sl(3, 1), sl(0, 2)], &[int(1), int(0)]).unwrap(), sl(3, 1));
        let mid = combine(&[sl(1, 0), sl(-1, 0)], &[half.clone(), half.clone()]).unwrap();
        assert_eq!(mid, sl(0, 0));
        assert!(mid.contains(&meet(&sl(1, 0), &sl(-1, 0)).unwrap()));
        assert_eq!(combine(&[sl(0, 0), sl(0, 2)], &[half.clone(), int(1)]), Err(Error::BadCoefficients));
        assert_eq!(
            combine(&[sl(0, 0), Line::vertical(int(1))], &[half.clone(), half]),
            Err(Error::VerticalGenerator)
        );
    }

    #[test]
    fn strip_membership() {
        let c = Corridor::new(vec![sl(0, 0), sl(0, 1)]).unwrap();
        assert!(c.contains_point(&Point::new(int(5), ratio(1, 2))));
        assert!(!c.contains_point(&Point::from_ints(0, 2)));
        assert!(c.contains_point(&Point::from_ints(7, 1)));
        let wide = Corridor::new(vec![sl(0, 0), sl(0, 2)]).unwrap();
        assert!(wide.contains_line(&sl(0, 1)).unwrap());
        assert!(!wide.contains_line(&sl(1, 0)).unwrap());
        assert!(wide.contains_line(&sl(0, 2)).unwrap());
        assert!(wide.contains_line(&Line::vertical(int(0))).is_err());
        assert_eq!(Corridor::new(vec![Line::vertical(int::<Rational>(0))]), Err(Error::VerticalGenerator));
    }

    #[test]
    fn triples() {
        let c = Corridor::new(vec![sl(0, 0), sl(0, 1), sl(0, 2), sl(0, 3)]).unwrap();
        let g = Line::from_slope_intercept(int(0), ratio(3, 2));
        let h = c.caratheodory_triple(&g).unwrap();
        assert!(h.len() <= 3);
        assert!(Corridor::new(h).unwrap().contains_line(&g).unwrap());
        assert_eq!(c.caratheodory_triple(&sl(0, 2)).unwrap(), vec![sl(0, 2)]);
        assert_eq!(c.caratheodory_triple(&sl(1, 2)), Err(Error::NotInCorridor));

        // Dual points (0,0), (4,0), (0,4): lines y=0, y=4x, y=-4.
        let tri = Corridor::new(vec![sl(0, 0), sl(4, 0), sl(0, -4)]).unwrap();
        let inner = sl(1, -1);
        let mut h = tri.caratheodory_triple(&inner).unwrap();
        h.sort();
        let mut want = tri.generators().to_vec();
        want.sort();
        assert_eq!(h, want);
    }
}
