use std::cmp::Ordering;

use super::{orient, HalfPlane, HalfPlanes, Line, Point, Segment};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A convex polygon with vertices in counterclockwise, strictly convex
/// position. One- and two-vertex polygons stand for a point and a segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon<T> {
    vertices: Vec<Point<T>>,
}

impl<T: Scalar> Polygon<T> {
    pub fn new(vertices: Vec<Point<T>>) -> Result<Self> {
        match vertices.len() {
            0 => return Err(Error::EmptyInput),
            1 => {}
            2 => {
                if vertices[0] == vertices[1] {
                    return Err(Error::NotConvex);
                }
            }
            n => {
                // The vertices must be exactly the hull, in hull order.
                let hull = convex_hull(&vertices)?;
                let lowest = (0..n).min_by(|&i, &j| vertices[i].cmp(&vertices[j])).unwrap();
                let in_order = hull.len() == n
                    && (0..n).all(|i| vertices[(lowest + i) % n] == hull.vertices[i]);
                if !in_order {
                    return Err(Error::NotConvex);
                }
            }
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Whether the polygon has no interior (a point or a segment).
    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    pub fn edges(&self) -> Vec<Segment<T>> {
        let n = self.vertices.len();
        match n {
            1 => Vec::new(),
            2 => vec![Segment::new(self.vertices[0].clone(), self.vertices[1].clone()).unwrap()],
            _ => (0..n)
                .map(|i| Segment::new(self.vertices[i].clone(), self.vertices[(i + 1) % n].clone()).unwrap())
                .collect(),
        }
    }

    /// Closed containment.
    pub fn contains(&self, p: &Point<T>) -> bool {
        let v = &self.vertices;
        match v.len() {
            1 => v[0] == *p,
            2 => Segment::new(v[0].clone(), v[1].clone()).unwrap().contains(p),
            n => (0..n).all(|i| orient(&v[i], &v[(i + 1) % n], p) != Ordering::Less),
        }
    }

    /// Containment in the interior; always false for degenerate polygons.
    pub fn contains_strictly(&self, p: &Point<T>) -> bool {
        let v = &self.vertices;
        let n = v.len();
        n >= 3 && (0..n).all(|i| orient(&v[i], &v[(i + 1) % n], p) == Ordering::Greater)
    }

    /// Whether `l` meets the closed polygon.
    pub fn meets_line(&self, l: &Line<T>) -> bool {
        let mut above = false;
        let mut below = false;
        for v in &self.vertices {
            match l.side(v) {
                Ordering::Equal => return true,
                Ordering::Greater => above = true,
                Ordering::Less => below = true,
            }
        }
        above && below
    }

    /// Whether `l` meets the interior.
    pub fn meets_line_strictly(&self, l: &Line<T>) -> bool {
        self.vertices.len() >= 3
            && self.vertices.iter().any(|v| l.side(v) == Ordering::Greater)
            && self.vertices.iter().any(|v| l.side(v) == Ordering::Less)
    }

    /// The closed polygon as an intersection of closed half-planes.
    pub fn half_planes(&self) -> HalfPlanes<T> {
        let v = &self.vertices;
        let mut hp = HalfPlanes::default();
        match v.len() {
            1 => {
                hp.push_equality(Line::vertical(v[0].x.clone()));
                hp.push_equality(Line::from_slope_intercept(T::zero(), v[0].y.clone()));
            }
            2 => {
                let l = Line::through(&v[0], &v[1]).unwrap();
                hp.push_equality(l);
                for (end, other) in [(&v[0], &v[1]), (&v[1], &v[0])] {
                    let cap = perpendicular_through(end, other);
                    let side = cap.side(other);
                    hp.push(HalfPlane::new(cap, side, false));
                }
            }
            n => {
                for i in 0..n {
                    let l = Line::through(&v[i], &v[(i + 1) % n]).unwrap();
                    let side = l.side(&v[(i + 2) % n]);
                    hp.push(HalfPlane::new(l, side, false));
                }
            }
        }
        hp
    }

    pub fn twice_area(&self) -> T {
        super::halfplane::twice_signed_area(&self.vertices)
    }
}


/// The line through `p` perpendicular to `pq`.
fn perpendicular_through<T: Scalar>(p: &Point<T>, q: &Point<T>) -> Line<T> {
    let (dx, dy) = q.sub(p);
    let c = dx.clone() * &p.x + dy.clone() * &p.y;
    Line::new(dx, dy, c).expect("distinct points")
}

/// Convex hull by Andrew's monotone chain. Collinear boundary points are
/// dropped; all-collinear input yields its two extreme points.
pub fn convex_hull<T: Scalar>(pts: &[Point<T>]) -> Result<Polygon<T>> {
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut sorted: Vec<Point<T>> = pts.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() <= 2 {
        return Ok(Polygon { vertices: sorted });
    }
    let mut lower: Vec<Point<T>> = Vec::new();
    for p in &sorted {
        while lower.len() >= 2 && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Ordering::Greater {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point<T>> = Vec::new();
    for p in sorted.iter().rev() {
        while upper.len() >= 2 && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Ordering::Greater {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(Polygon { vertices: lower })
}

/// The two inner common tangents of two strictly separated convex polygons.
/// Each line has `a` in one closed side and `b` in the other.
pub fn cross_tangents<T: Scalar>(a: &Polygon<T>, b: &Polygon<T>) -> Result<(Line<T>, Line<T>)> {
    let touching = a.vertices.iter().any(|v| b.contains(v))
        || b.vertices.iter().any(|v| a.contains(v))
        || a.edges().iter().any(|e| b.edges().iter().any(|f| e.intersects(f)));
    if touching {
        return Err(Error::NotSeparable);
    }
    let mut found: Vec<Line<T>> = Vec::new();
    for p in &a.vertices {
        for q in &b.vertices {
            let l = Line::through(p, q)?;
            if found.contains(&l) {
                continue;
            }
            let sa = closed_side(&l, &a.vertices);
            let sb = closed_side(&l, &b.vertices);
            if let (Some(sa), Some(sb)) = (sa, sb) {
                if sa == Ordering::Equal || sb == Ordering::Equal || sa != sb {
                    found.push(l);
                }
            }
        }
    }
    match found.len() {
        0 => Err(Error::NotSeparable),
        1 => Ok((found[0].clone(), found[0].clone())),
        _ => Ok((found[0].clone(), found[1].clone())),
    }
}

/// The closed side of `l` holding all of `pts` (`Equal` if all lie on it).
fn closed_side<T: Scalar>(l: &Line<T>, pts: &[Point<T>]) -> Option<Ordering> {
    let mut side = Ordering::Equal;
    for p in pts {
        match l.side(p) {
            Ordering::Equal => {}
            s if side == Ordering::Equal => side = s,
            s if s != side => return None,
            _ => {}
        }
    }
    Some(side)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn pt(x: i64, y: i64) -> Point<Rational> {
        Point::from_ints(x, y)
    }

    fn square(x0: i64) -> Polygon<Rational> {
        Polygon::new(vec![pt(x0, 0), pt(x0 + 1, 0), pt(x0 + 1, 1), pt(x0, 1)]).unwrap()
    }

    #[test]
    fn hull_drops_center_and_collinear() {
        let h = convex_hull(&[pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1), pt(1, 0)]).unwrap();
        assert_eq!(h.vertices(), &[pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)]);
        let seg = convex_hull(&[pt(0, 0), pt(1, 1), pt(2, 2)]).unwrap();
        assert_eq!(seg.vertices(), &[pt(0, 0), pt(2, 2)]);
        assert_eq!(convex_hull::<Rational>(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn rejects_clockwise() {
        assert_eq!(
            Polygon::new(vec![pt(0, 0), pt(0, 1), pt(1, 0)]),
            Err(Error::NotConvex)
        );
    }

    #[test]
    fn tangents_of_squares() {
        let (a, b) = (square(0), square(3));
        let (l1, l2) = cross_tangents(&a, &b).unwrap();
        assert_ne!(l1, l2);
        for l in [l1, l2] {
            let sa = closed_side(&l, a.vertices()).unwrap();
            let sb = closed_side(&l, b.vertices()).unwrap();
            assert_ne!(sa, Ordering::Equal);
            assert_eq!(sb, sa.reverse());
        }
    }

    #[test]
    fn tangents_degenerate() {
        let a = Polygon::new(vec![pt(0, 0)]).unwrap();
        let b = Polygon::new(vec![pt(1, 2)]).unwrap();
        let (l1, l2) = cross_tangents(&a, &b).unwrap();
        assert_eq!(l1, l2);
        assert_eq!(l1, Line::through(&pt(0, 0), &pt(1, 2)).unwrap());
        let tri = Polygon::new(vec![pt(3, 0), pt(5, 0), pt(4, 2)]).unwrap();
        let (l1, l2) = cross_tangents(&a, &tri).unwrap();
        assert_ne!(l1, l2);
        for l in [l1, l2] {
            assert!(l.contains(&pt(0, 0)));
            assert!(tri.meets_line(&l) && !tri.meets_line_strictly(&l));
        }
        assert_eq!(cross_tangents(&square(0), &square(1)), Err(Error::NotSeparable));
    }

    #[test]
    fn segment_half_planes() {
        let seg = Polygon::new(vec![pt(0, 0), pt(2, 2)]).unwrap();
        let hp = seg.half_planes();
        assert!(hp.contains(&pt(1, 1)));
        assert!(!hp.contains(&pt(3, 3)));
        assert!(hp.meets_line(&Line::vertical(crate::scalar::int(2))));
        assert!(!hp.meets_line(&Line::vertical(crate::scalar::int(3))));
    }
}
