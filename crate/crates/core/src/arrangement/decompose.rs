use std::cmp::Ordering;

use super::Arrangement;
use crate::geom::{HalfPlane, HalfPlanes, Line, Region};
use crate::scalar::{mid, Scalar};

/// The region strictly between `floor` and `ceiling` over the open slab
/// `left_x < x < right_x`. Missing parts are unbounded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trapezoid<T> {
    pub floor: Option<Line<T>>,
    pub ceiling: Option<Line<T>>,
    pub left_x: Option<T>,
    pub right_x: Option<T>,
}

impl<T: Scalar> Trapezoid<T> {
    /// The trapezoid as half-planes; `strict` selects the open or closed set.
    pub fn half_planes(&self, strict: bool) -> HalfPlanes<T> {
        let mut hp = HalfPlanes::default();
        if let Some(f) = &self.floor {
            hp.push(HalfPlane::new(f.clone(), Ordering::Greater, strict));
        }
        if let Some(c) = &self.ceiling {
            hp.push(HalfPlane::new(c.clone(), Ordering::Less, strict));
        }
        if let Some(x) = &self.left_x {
            hp.push(HalfPlane::new(Line::vertical(x.clone()), Ordering::Greater, strict));
        }
        if let Some(x) = &self.right_x {
            hp.push(HalfPlane::new(Line::vertical(x.clone()), Ordering::Less, strict));
        }
        hp
    }
}

/// Closed-set semantics.
impl<T: Scalar> Region<T> for Trapezoid<T> {
    fn meets_line(&self, l: &Line<T>) -> bool {
        self.half_planes(false).meets_line(l)
    }
}

impl<T: Scalar> Arrangement<T> {
    /// Splits cell `c` by vertical walls through its vertices into open
    /// trapezoids. Bounded cells of complexity `k` give at most `k - 1`
    /// pieces, unbounded ones at most `k`.
    pub fn vertical_decompose(&self, c: usize) -> Vec<Trapezoid<T>> {
        let boundary: Vec<(Line<T>, Ordering)> = self.cells[c]
            .edges
            .iter()
            .map(|&e| {
                let i = self.edges[e].line;
                (self.lines[i].clone(), self.cell_side(c, i))
            })
            .collect();
        let mut xs: Vec<T> = self
            .cell_vertices(c)
            .into_iter()
            .map(|v| self.vertices[v].point.x.clone())
            .chain(boundary.iter().filter(|(l, _)| l.is_vertical()).map(|(l, _)| l.c().clone()))
            .collect();
        xs.sort();
        xs.dedup();

        let mut slabs: Vec<(Option<T>, Option<T>)> = Vec::new();
        if xs.is_empty() {
            slabs.push((None, None));
        } else {
            slabs.push((None, Some(xs[0].clone())));
            for w in xs.windows(2) {
                slabs.push((Some(w[0].clone()), Some(w[1].clone())));
            }
            slabs.push((Some(xs[xs.len() - 1].clone()), None));
        }

        let region = self.cell_region(c);
        let mut out = Vec::new();
        for (left, right) in slabs {
            let probe_x = match (&left, &right) {
                (Some(a), Some(b)) => mid(a, b),
                (Some(a), None) => a.clone() + T::one(),
                (None, Some(b)) => b.clone() - T::one(),
                (None, None) => T::zero(),
            };
            let probe = Line::vertical(probe_x.clone());
            if !region.meets_line(&probe) {
                continue;
            }
            let mut floor: Option<(T, &Line<T>)> = None;
            let mut ceiling: Option<(T, &Line<T>)> = None;
            for (l, side) in &boundary {
                let Some(y) = l.y_at(&probe_x) else { continue };
                if *side == Ordering::Greater {
                    if floor.as_ref().is_none_or(|(fy, _)| y > *fy) {
                        floor = Some((y, l));
                    }
                } else if ceiling.as_ref().is_none_or(|(cy, _)| y < *cy) {
                    ceiling = Some((y, l));
                }
            }
            out.push(Trapezoid {
                floor: floor.map(|(_, l)| l.clone()),
                ceiling: ceiling.map(|(_, l)| l.clone()),
                left_x: left,
                right_x: right,
            });
        }
        out
    }
}
