use std::cmp::Ordering;

use super::{Line, Point};
use crate::scalar::{mid, sign, Scalar};

/// `{p : side(line, p) = side}`, or its closure when `strict` is false.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfPlane<T> {
    pub line: Line<T>,
    pub side: Ordering,
    pub strict: bool,
}

impl<T: Scalar> HalfPlane<T> {
    pub fn new(line: Line<T>, side: Ordering, strict: bool) -> Self {
        debug_assert!(side != Ordering::Equal);
        HalfPlane { line, side, strict }
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        match self.line.side(p) {
            Ordering::Equal => !self.strict,
            s => s == self.side,
        }
    }
}

/// Bound of an interval of line parameters; `strict` excludes the endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound<T> {
    pub value: T,
    pub strict: bool,
}

/// Nonempty interval of parameters along a line, possibly unbounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamInterval<T> {
    pub lo: Option<Bound<T>>,
    pub hi: Option<Bound<T>>,
}

impl<T: Scalar> ParamInterval<T> {
    pub fn everything() -> Self {
        ParamInterval { lo: None, hi: None }
    }

    fn raise(&mut self, value: T, strict: bool) {
        let replace = match &self.lo {
            None => true,
            Some(b) => value > b.value || (value == b.value && strict),
        };
        if replace {
            self.lo = Some(Bound { value, strict });
        }
    }

    fn lower(&mut self, value: T, strict: bool) {
        let replace = match &self.hi {
            None => true,
            Some(b) => value < b.value || (value == b.value && strict),
        };
        if replace {
            self.hi = Some(Bound { value, strict });
        }
    }

    fn is_empty(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Some(lo), Some(hi)) => match lo.value.cmp(&hi.value) {
                Ordering::Less => false,
                Ordering::Equal => lo.strict || hi.strict,
                Ordering::Greater => true,
            },
            _ => false,
        }
    }

    /// Some parameter inside the interval.
    pub fn sample(&self) -> T {
        match (&self.lo, &self.hi) {
            (Some(lo), Some(hi)) => mid(&lo.value, &hi.value),
            (Some(lo), None) => lo.value.clone() + T::one(),
            (None, Some(hi)) => hi.value.clone() - T::one(),
            (None, None) => T::zero(),
        }
    }

    pub fn contains(&self, t: &T) -> bool {
        let above = match &self.lo {
            None => true,
            Some(b) => *t > b.value || (!b.strict && *t == b.value),
        };
        let below = match &self.hi {
            None => true,
            Some(b) => *t < b.value || (!b.strict && *t == b.value),
        };
        above && below
    }
}

/// Intersection of finitely many half-planes; convex, possibly unbounded,
/// possibly mixing open and closed sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlanes<T> {
    pub planes: Vec<HalfPlane<T>>,
}

impl<T> Default for HalfPlanes<T> {
    fn default() -> Self {
        HalfPlanes { planes: Vec::new() }
    }
}

impl<T: Scalar> HalfPlanes<T> {
    pub fn new(planes: Vec<HalfPlane<T>>) -> Self {
        HalfPlanes { planes }
    }

    pub fn push(&mut self, plane: HalfPlane<T>) {
        self.planes.push(plane);
    }

    /// Adds the closed constraint `line = 0`.
    pub fn push_equality(&mut self, line: Line<T>) {
        self.planes.push(HalfPlane::new(line.clone(), Ordering::Greater, false));
        self.planes.push(HalfPlane::new(line, Ordering::Less, false));
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        self.planes.iter().all(|h| h.contains(p))
    }

    /// Parameters `t` with `l.point_at(t)` in the region, or `None` if the
    /// line misses it.
    pub fn line_interval(&self, l: &Line<T>) -> Option<ParamInterval<T>> {
        let mut iv = ParamInterval::everything();
        for h in &self.planes {
            // side * (alpha t + beta) must be positive (or non-negative).
            let (mut alpha, mut beta) = l.eval_along(&h.line);
            if h.side == Ordering::Less {
                alpha = -alpha;
                beta = -beta;
            }
            match sign(&alpha) {
                Ordering::Equal => {
                    let ok = match sign(&beta) {
                        Ordering::Greater => true,
                        Ordering::Equal => !h.strict,
                        Ordering::Less => false,
                    };
                    if !ok {
                        return None;
                    }
                }
                Ordering::Greater => iv.raise(-beta / alpha, h.strict),
                Ordering::Less => iv.lower(-beta / alpha, h.strict),
            }
            if iv.is_empty() {
                return None;
            }
        }
        Some(iv)
    }

    pub fn meets_line(&self, l: &Line<T>) -> bool {
        self.line_interval(l).is_some()
    }

    /// Vertices of the closure clipped to the box `[-m, m]^2`, in
    /// counterclockwise order. May contain repeated or collinear vertices.
    pub fn clip_to_box(&self, m: &T) -> Vec<Point<T>> {
        let lo = -m.clone();
        let mut poly = vec![
            Point::new(lo.clone(), lo.clone()),
            Point::new(m.clone(), lo.clone()),
            Point::new(m.clone(), m.clone()),
            Point::new(lo, m.clone()),
        ];
        for h in &self.planes {
            poly = clip(&poly, h);
            if poly.is_empty() {
                break;
            }
        }
        poly
    }
}

/// One Sutherland-Hodgman step against a closed half-plane.
fn clip<T: Scalar>(poly: &[Point<T>], h: &HalfPlane<T>) -> Vec<Point<T>> {
    let inside = |p: &Point<T>| {
        let s = h.line.side(p);
        s == Ordering::Equal || s == h.side
    };
    let mut out = Vec::new();
    let n = poly.len();
    for i in 0..n {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        let (pin, qin) = (inside(p), inside(q));
        if pin {
            out.push(p.clone());
        }
        if pin != qin {
            let (ep, eq) = (h.line.eval(p), h.line.eval(q));
            if !ep.is_zero() && !eq.is_zero() {
                let t = ep.clone() / (ep - eq);
                let (dx, dy) = q.sub(p);
                out.push(Point::new(p.x.clone() + t.clone() * dx, p.y.clone() + t * dy));
            }
        }
    }
    out
}

/// Twice the signed area of a polygon given by its vertex cycle.
pub fn twice_signed_area<T: Scalar>(v: &[Point<T>]) -> T {
    let n = v.len();
    let mut acc = T::zero();
    for i in 0..n {
        let (p, q) = (&v[i], &v[(i + 1) % n]);
        acc = acc + p.x.clone() * &q.y - q.x.clone() * &p.y;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Rational};

    fn unit_square(strict: bool) -> HalfPlanes<Rational> {
        let mut hp = HalfPlanes::default();
        hp.push(HalfPlane::new(Line::vertical(int(0)), Ordering::Greater, strict));
        hp.push(HalfPlane::new(Line::vertical(int(1)), Ordering::Less, strict));
        hp.push(HalfPlane::new(Line::from_slope_intercept(int(0), int(0)), Ordering::Greater, strict));
        hp.push(HalfPlane::new(Line::from_slope_intercept(int(0), int(1)), Ordering::Less, strict));
        hp
    }

    #[test]
    fn tangent_lines_touch_closed_not_open() {
        let tangent = Line::from_slope_intercept(int::<Rational>(-1), int(2));
        assert!(unit_square(false).meets_line(&tangent));
        assert!(!unit_square(true).meets_line(&tangent));
        let inside = Line::from_slope_intercept(int::<Rational>(0), ratio(1, 2));
        assert!(unit_square(true).meets_line(&inside));
        let edge = Line::from_slope_intercept(int::<Rational>(0), int(1));
        assert!(unit_square(false).meets_line(&edge));
        assert!(!unit_square(true).meets_line(&edge));
        let wall = Line::vertical(int::<Rational>(1));
        assert!(!unit_square(true).meets_line(&wall));
        assert!(unit_square(false).meets_line(&wall));
    }

    #[test]
    fn clipping_a_half_plane() {
        let mut hp = HalfPlanes::default();
        hp.push(HalfPlane::new(Line::from_slope_intercept(int::<Rational>(1), int(0)), Ordering::Greater, true));
        let poly = hp.clip_to_box(&int(2));
        assert_eq!(twice_signed_area(&poly), int(16));
    }

    #[test]
    fn unbounded_wedge() {
        let mut hp = HalfPlanes::default();
        hp.push(HalfPlane::new(Line::from_slope_intercept(int::<Rational>(1), int(0)), Ordering::Greater, true));
        hp.push(HalfPlane::new(Line::from_slope_intercept(int(-1), int(0)), Ordering::Greater, true));
        assert!(hp.meets_line(&Line::from_slope_intercept(int(0), int(5))));
        assert!(!hp.meets_line(&Line::from_slope_intercept(int(0), int(-5))));
        let iv = hp.line_interval(&Line::vertical(int(3))).unwrap();
        assert!(iv.hi.is_none());
        assert_eq!(iv.lo.unwrap().value, int(3));
    }
}
