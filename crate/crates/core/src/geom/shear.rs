use rand::Rng;

use super::{Line, Point};
use crate::scalar::{Rational, Scalar};

/// The horizontal shear `(x, y) -> (x + s*y, y)`.
///
/// It keeps horizontal lines horizontal, so orientation, above/below and
/// every incidence survive, while a generic `s` makes any finite point set
/// x-distinct and turns vertical lines into non-vertical ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shear<T> {
    s: T,
}

impl<T: Scalar> Shear<T> {
    pub fn new(s: T) -> Self {
        Shear { s }
    }

    pub fn identity() -> Self {
        Shear { s: T::zero() }
    }

    pub fn factor(&self) -> &T {
        &self.s
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_zero()
    }

    pub fn apply(&self, p: &Point<T>) -> Point<T> {
        Point::new(p.x.clone() + self.s.clone() * &p.y, p.y.clone())
    }

    pub fn invert(&self, p: &Point<T>) -> Point<T> {
        Point::new(p.x.clone() - self.s.clone() * &p.y, p.y.clone())
    }

    /// Image of a line: `a x + b y = c` becomes `a x' + (b - a s) y' = c`.
    pub fn apply_line(&self, l: &Line<T>) -> Line<T> {
        let b = l.b().clone() - l.a().clone() * &self.s;
        Line::new(l.a().clone(), b, l.c().clone()).expect("shear is invertible")
    }

    pub fn invert_line(&self, l: &Line<T>) -> Line<T> {
        let b = l.b().clone() + l.a().clone() * &self.s;
        Line::new(l.a().clone(), b, l.c().clone()).expect("shear is invertible")
    }
}

impl Shear<Rational> {
    /// Draws a small nonzero rational factor for which every point of `pts`
    /// gets a distinct x-coordinate. Returns the identity when the points
    /// already are x-distinct and no vertical line needs removing.
    pub fn x_distinct<R: Rng>(pts: &[Point<Rational>], keep_identity: bool, rng: &mut R) -> Self {
        if keep_identity && Self::identity().separates(pts) {
            return Self::identity();
        }
        loop {
            let num: i64 = rng.gen_range(1..=997);
            let den: i64 = rng.gen_range(1000..=9973);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            let shear = Shear::new(Rational::from_parts(
                (sign * num).into(),
                (den as u64).into(),
            ));
            if shear.separates(pts) {
                return shear;
            }
        }
    }

    fn separates(&self, pts: &[Point<Rational>]) -> bool {
        let mut xs: Vec<Rational> = pts.iter().map(|p| self.apply(p).x).collect();
        xs.sort();
        xs.dedup();
        let mut distinct: Vec<&Point<Rational>> = pts.iter().collect();
        distinct.sort();
        distinct.dedup();
        xs.len() == distinct.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::orient;
    use crate::scalar::{int, ratio};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn lines_follow_points() {
        let sh = Shear::new(ratio::<Rational>(3, 7));
        let p = Point::from_ints(2, 5);
        let q = Point::from_ints(-1, 4);
        let l = Line::through(&p, &q).unwrap();
        let img = sh.apply_line(&l);
        assert!(img.contains(&sh.apply(&p)));
        assert!(img.contains(&sh.apply(&q)));
        assert_eq!(sh.invert_line(&img), l);
        assert_eq!(sh.invert(&sh.apply(&p)), p);
        let v = Line::vertical(int::<Rational>(1));
        assert!(!sh.apply_line(&v).is_vertical());
    }

    #[test]
    fn preserves_orientation_and_sides() {
        let sh = Shear::new(ratio::<Rational>(-5, 3));
        let a = Point::from_ints(0, 0);
        let b = Point::from_ints(4, 1);
        let c = Point::from_ints(1, 3);
        assert_eq!(orient(&a, &b, &c), orient(&sh.apply(&a), &sh.apply(&b), &sh.apply(&c)));
        // Sides may swap as a whole when the line tips past vertical, but
        // which points share a side never changes.
        let l = Line::from_slope_intercept(int(2), int(-1));
        let img = sh.apply_line(&l);
        for p in [&a, &b] {
            assert_eq!(
                l.side(&c) == l.side(p),
                img.side(&sh.apply(&c)) == img.side(&sh.apply(p))
            );
        }
    }

    #[test]
    fn separates_grid_columns() {
        let pts: Vec<_> = (0..4)
            .flat_map(|x| (0..4).map(move |y| Point::from_ints(x, y)))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let sh = Shear::x_distinct(&pts, true, &mut rng);
        assert!(!sh.is_identity());
        let mut xs: Vec<_> = pts.iter().map(|p| sh.apply(p).x).collect();
        xs.sort();
        xs.dedup();
        assert_eq!(xs.len(), 16);
    }
}
