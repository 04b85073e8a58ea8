use super::{Line, Point};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The line `y = p.x * x - p.y`.
pub fn dual_point<T: Scalar>(p: &Point<T>) -> Line<T> {
    Line::from_slope_intercept(p.x.clone(), -p.y.clone())
}

/// The point `(m, -k)` of the line `y = m*x + k`.
pub fn dual_line<T: Scalar>(l: &Line<T>) -> Result<Point<T>> {
    match (l.slope(), l.intercept()) {
        (Some(m), Some(k)) => Ok(Point::new(m, -k)),
        _ => Err(Error::NoDual),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    #[test]
    fn examples() {
        let p = Point::<Rational>::from_ints(1, 2);
        assert_eq!(dual_point(&p), Line::from_slope_intercept(int(1), int(-2)));
        let q = Point::<Rational>::from_ints(3, -5);
        assert_eq!(dual_line(&dual_point(&q)).unwrap(), q);
        let o = Point::<Rational>::from_ints(0, 0);
        assert_eq!(dual_point(&o), Line::from_slope_intercept(int(0), int(0)));
        assert_eq!(dual_line(&Line::<Rational>::vertical(int(1))), Err(Error::NoDual));
    }
}
