//! Exact planar primitives.

mod duality;
mod halfplane;
mod polygon;
mod shear;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{sign, Scalar};

pub use duality::{dual_line, dual_point};
pub use halfplane::{twice_signed_area, Bound, HalfPlane, HalfPlanes, ParamInterval};
pub use polygon::{convex_hull, cross_tangents, Polygon};
pub use shear::Shear;

/// A convex set that can be asked whether a line meets it.
pub trait Region<T: Scalar> {
    fn meets_line(&self, l: &Line<T>) -> bool;
}

impl<T: Scalar> Region<T> for Polygon<T> {
    fn meets_line(&self, l: &Line<T>) -> bool {
        Polygon::meets_line(self, l)
    }
}

impl<T: Scalar> Region<T> for HalfPlanes<T> {
    fn meets_line(&self, l: &Line<T>) -> bool {
        HalfPlanes::meets_line(self, l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(crate::scalar::int(x), crate::scalar::int(y))
    }

    pub fn sub(&self, other: &Self) -> (T, T) {
        (self.x.clone() - &other.x, self.y.clone() - &other.y)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (crate::scalar::to_f64(&self.x), crate::scalar::to_f64(&self.y))
    }
}

/// Sign of the cross product `(q - p) x (r - p)`: `Greater` for a left turn,
/// `Less` for a right turn, `Equal` when collinear.
pub fn orient<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Ordering {
    let (ux, uy) = q.sub(p);
    let (vx, vy) = r.sub(p);
    (ux * vy).cmp(&(uy * vx))
}

/// The line `a*x + b*y = c`, stored in canonical form: `b = 1` for
/// non-vertical lines and `(a, b) = (1, 0)` for vertical ones. Equal lines
/// therefore compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line<T> {
    a: T,
    b: T,
    c: T,
}

impl<T: Scalar> Line<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        if !b.is_zero() {
            Ok(Line {
                a: a / &b,
                c: c / &b,
                b: T::one(),
            })
        } else if !a.is_zero() {
            Ok(Line {
                c: c / &a,
                a: T::one(),
                b: T::zero(),
            })
        } else {
            Err(Error::DegenerateLine)
        }
    }

    /// `y = slope * x + intercept`.
    pub fn from_slope_intercept(slope: T, intercept: T) -> Self {
        Line {
            a: -slope,
            b: T::one(),
            c: intercept,
        }
    }

    /// `x = x0`.
    pub fn vertical(x0: T) -> Self {
        Line {
            a: T::one(),
            b: T::zero(),
            c: x0,
        }
    }

    pub fn through(p: &Point<T>, q: &Point<T>) -> Result<Self> {
        if p == q {
            return Err(Error::DegenerateSegment);
        }
        let (dx, dy) = q.sub(p);
        // Normal (dy, -dx).
        let c = dy.clone() * &p.x - dx.clone() * &p.y;
        Line::new(dy, -dx, c)
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    pub fn slope(&self) -> Option<T> {
        (!self.is_vertical()).then(|| -self.a.clone())
    }

    pub fn intercept(&self) -> Option<T> {
        (!self.is_vertical()).then(|| self.c.clone())
    }

    /// `a*x + b*y - c`; positive above (or right of a vertical line).
    pub fn eval(&self, p: &Point<T>) -> T {
        self.a.clone() * &p.x + self.b.clone() * &p.y - &self.c
    }

    pub fn side(&self, p: &Point<T>) -> Ordering {
        sign(&self.eval(p))
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        self.eval(p).is_zero()
    }

    pub fn y_at(&self, x: &T) -> Option<T> {
        (!self.is_vertical()).then(|| self.c.clone() - self.a.clone() * x)
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }

    /// Parameter of `p` along the line: `x` for non-vertical lines, `y` for
    /// vertical ones. Increasing parameter moves in [`Line::direction`].
    pub fn param_of(&self, p: &Point<T>) -> T {
        if self.is_vertical() {
            p.y.clone()
        } else {
            p.x.clone()
        }
    }

    pub fn point_at(&self, t: &T) -> Point<T> {
        if self.is_vertical() {
            Point::new(self.c.clone(), t.clone())
        } else {
            Point::new(t.clone(), self.c.clone() - self.a.clone() * t)
        }
    }

    /// Direction vector of increasing parameter: `(1, slope)` or `(0, 1)`.
    pub fn direction(&self) -> (T, T) {
        if self.is_vertical() {
            (T::zero(), T::one())
        } else {
            (T::one(), -self.a.clone())
        }
    }

    /// Coefficients `(alpha, beta)` with `other.eval(self.point_at(t)) = alpha*t + beta`.
    pub fn eval_along(&self, other: &Self) -> (T, T) {
        if self.is_vertical() {
            (
                other.b.clone(),
                other.a.clone() * &self.c - &other.c,
            )
        } else {
            (
                other.a.clone() - other.b.clone() * &self.a,
                other.b.clone() * &self.c - &other.c,
            )
        }
    }

    /// Parameter along `self` where `other` crosses it, if they meet in one point.
    pub fn crossing_param(&self, other: &Self) -> Option<T> {
        let (alpha, beta) = self.eval_along(other);
        (!alpha.is_zero()).then(|| -beta / alpha)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Result<Line<U>> {
        Line::new(f(&self.a), f(&self.b), f(&self.c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineIntersection<T> {
    Point(Point<T>),
    Parallel,
    Coincident,
}

pub fn line_intersection<T: Scalar>(l1: &Line<T>, l2: &Line<T>) -> LineIntersection<T> {
    let det = l1.a.clone() * &l2.b - l2.a.clone() * &l1.b;
    if det.is_zero() {
        return if l1 == l2 {
            LineIntersection::Coincident
        } else {
            LineIntersection::Parallel
        };
    }
    let x = (l1.c.clone() * &l2.b - l2.c.clone() * &l1.b) / &det;
    let y = (l1.a.clone() * &l2.c - l2.a.clone() * &l1.c) / det;
    LineIntersection::Point(Point::new(x, y))
}

/// Intersection point of two lines when it is unique.
pub fn meet<T: Scalar>(l1: &Line<T>, l2: &Line<T>) -> Option<Point<T>> {
    match line_intersection(l1, l2) {
        LineIntersection::Point(p) => Some(p),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment<T> {
    p: Point<T>,
    q: Point<T>,
}

impl<T: Scalar> Segment<T> {
    pub fn new(p: Point<T>, q: Point<T>) -> Result<Self> {
        if p == q {
            return Err(Error::DegenerateSegment);
        }
        Ok(Segment { p, q })
    }

    pub fn p(&self) -> &Point<T> {
        &self.p
    }

    pub fn q(&self) -> &Point<T> {
        &self.q
    }

    pub fn line(&self) -> Line<T> {
        Line::through(&self.p, &self.q).expect("segment endpoints are distinct")
    }

    /// Closed containment.
    pub fn contains(&self, r: &Point<T>) -> bool {
        orient(&self.p, &self.q, r) == Ordering::Equal && in_box(&self.p, &self.q, r)
    }

    /// Crossing point of the two relative interiors, when they cross
    /// transversally at a point that is not an endpoint of either segment.
    pub fn proper_crossing(&self, other: &Self) -> Option<Point<T>> {
        let o1 = orient(&self.p, &self.q, &other.p);
        let o2 = orient(&self.p, &self.q, &other.q);
        let o3 = orient(&other.p, &other.q, &self.p);
        let o4 = orient(&other.p, &other.q, &self.q);
        let strict = [o1, o2, o3, o4].iter().all(|o| *o != Ordering::Equal);
        if strict && o1 != o2 && o3 != o4 {
            meet(&self.line(), &other.line())
        } else {
            None
        }
    }

    /// Closed intersection test, collinear overlaps included.
    pub fn intersects(&self, other: &Self) -> bool {
        let o1 = orient(&self.p, &self.q, &other.p);
        let o2 = orient(&self.p, &self.q, &other.q);
        let o3 = orient(&other.p, &other.q, &self.p);
        let o4 = orient(&other.p, &other.q, &self.q);
        if o1 != o2 && o3 != o4 {
            return true;
        }
        self.contains(&other.p)
            || self.contains(&other.q)
            || other.contains(&self.p)
            || other.contains(&self.q)
    }
}

fn in_box<T: Scalar>(a: &Point<T>, b: &Point<T>, r: &Point<T>) -> bool {
    let (xlo, xhi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    *xlo <= r.x && r.x <= *xhi && *ylo <= r.y && r.y <= *yhi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Float, Rational};

    fn pt(x: i64, y: i64) -> Point<Rational> {
        Point::from_ints(x, y)
    }

    #[test]
    fn orientation_cases() {
        assert_eq!(orient(&pt(0, 0), &pt(1, 0), &pt(0, 1)), Ordering::Greater);
        assert_eq!(orient(&pt(0, 0), &pt(1, 1), &pt(2, 2)), Ordering::Equal);
        assert_eq!(orient(&pt(0, 0), &pt(0, 1), &pt(1, 1)), Ordering::Less);
    }

    #[test]
    fn orientation_in_floats() {
        let p = Point::new(Float::from(0.0), Float::from(0.0));
        let q = Point::new(Float::from(1.0), Float::from(0.0));
        let r = Point::new(Float::from(0.0), Float::from(1.0));
        assert_eq!(orient(&p, &q, &r), Ordering::Greater);
    }

    #[test]
    fn lines_are_canonical() {
        let l1 = Line::<Rational>::new(int(2), int(4), int(6)).unwrap();
        let l2 = Line::through(&pt(1, 1), &pt(3, 0)).unwrap();
        assert_eq!(l1, l2);
        let v1 = Line::<Rational>::new(int(-3), int(0), int(6)).unwrap();
        assert_eq!(v1, Line::vertical(int(-2)));
        assert!(Line::<Rational>::new(int(0), int(0), int(1)).is_err());
    }

    #[test]
    fn intersections() {
        let diag = Line::from_slope_intercept(int::<Rational>(1), int(0));
        let anti = Line::from_slope_intercept(int(-1), int(0));
        assert_eq!(line_intersection(&diag, &anti), LineIntersection::Point(pt(0, 0)));
        let y0 = Line::from_slope_intercept(int::<Rational>(0), int(0));
        let y1 = Line::from_slope_intercept(int(0), int(1));
        assert_eq!(line_intersection(&y0, &y1), LineIntersection::Parallel);
        assert_eq!(line_intersection(&y0, &y0.clone()), LineIntersection::Coincident);
        let steep = Line::from_slope_intercept(int(2), int(1));
        assert_eq!(
            line_intersection(&steep, &y0),
            LineIntersection::Point(Point::new(ratio(-1, 2), int(0)))
        );
    }

    #[test]
    fn crossing_param_matches_meet() {
        let l = Line::from_slope_intercept(ratio::<Rational>(1, 3), int(2));
        let m = Line::vertical(int(5));
        let t = l.crossing_param(&m).unwrap();
        assert_eq!(l.point_at(&t), meet(&l, &m).unwrap());
        let t2 = m.crossing_param(&l).unwrap();
        assert_eq!(m.point_at(&t2), meet(&l, &m).unwrap());
    }

    #[test]
    fn segment_crossings() {
        let s = Segment::new(pt(0, 0), pt(2, 2)).unwrap();
        let t = Segment::new(pt(0, 2), pt(2, 0)).unwrap();
        assert_eq!(s.proper_crossing(&t), Some(pt(1, 1)));
        let u = Segment::new(pt(2, 2), pt(3, 0)).unwrap();
        assert_eq!(s.proper_crossing(&u), None);
        assert!(s.intersects(&u));
        let far = Segment::new(pt(5, 5), pt(6, 6)).unwrap();
        assert!(!s.intersects(&far));
        let overlap = Segment::new(pt(1, 1), pt(5, 5)).unwrap();
        assert!(s.intersects(&overlap));
    }
}
