//! Plain SVG drawings of instances with their lines or guards.

use std::fmt::Write;

use cutnet::geom::{Line, Point};
use cutnet::instance::Instance;
use cutnet::Rational;

const SIZE: f64 = 600.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

struct Frame {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl Frame {
    /// Bounding box of the points, grown by 20% (and made non-degenerate).
    fn around(pts: &[(f64, f64)]) -> Self {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in pts {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        if pts.is_empty() {
            (x0, y0, x1, y1) = (-1.0, -1.0, 1.0, 1.0);
        }
        let w = (x1 - x0).max(1e-9);
        let h = (y1 - y0).max(1e-9);
        let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        let half = 0.6 * w.max(h);
        Frame { x0: cx - half, y0: cy - half, x1: cx + half, y1: cy + half }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        let sx = (x - self.x0) / (self.x1 - self.x0) * SIZE;
        let sy = SIZE - (y - self.y0) / (self.y1 - self.y0) * SIZE;
        (sx, sy)
    }

    /// The part of `l` inside the frame, as two endpoints.
    fn clip(&self, l: &Line<Rational>) -> Option<((f64, f64), (f64, f64))> {
        let a = cutnet::scalar::to_f64(l.a());
        let b = cutnet::scalar::to_f64(l.b());
        let c = cutnet::scalar::to_f64(l.c());
        let mut hits: Vec<(f64, f64)> = Vec::new();
        if b != 0.0 {
            for x in [self.x0, self.x1] {
                let y = (c - a * x) / b;
                if y >= self.y0 && y <= self.y1 {
                    hits.push((x, y));
                }
            }
        }
        if a != 0.0 {
            for y in [self.y0, self.y1] {
                let x = (c - b * y) / a;
                if x >= self.x0 && x <= self.x1 {
                    hits.push((x, y));
                }
            }
        }
        hits.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
        match (hits.first(), hits.last()) {
            (Some(&p), Some(&q)) if p != q => Some((p, q)),
            _ => None,
        }
    }
}

/// Draws the points of every set, the lines clipped to the frame, and the
/// guards as crosses.
pub fn draw(inst: &Instance<Rational>, lines: &[Line<Rational>], guards: &[Point<Rational>]) -> String {
    let all: Vec<(f64, f64)> = inst.all_points().iter().map(|p| p.to_f64()).collect();
    let frame = Frame::around(&all);
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#).unwrap();
    writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();
    for l in lines {
        if let Some((p, q)) = frame.clip(l) {
            let (x1, y1) = frame.map(p.0, p.1);
            let (x2, y2) = frame.map(q.0, q.1);
            writeln!(out, r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#555555" stroke-width="1"/>"##).unwrap();
        }
    }
    for (i, set) in inst.sets().iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        for p in &set.points {
            let (x, y) = p.to_f64();
            let (cx, cy) = frame.map(x, y);
            writeln!(out, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="3.5" fill="{color}"/>"#).unwrap();
        }
    }
    for g in guards {
        let (x, y) = g.to_f64();
        let (cx, cy) = frame.map(x, y);
        let d = 5.0;
        writeln!(
            out,
            r##"<path d="M{:.2} {:.2} L{:.2} {:.2} M{:.2} {:.2} L{:.2} {:.2}" stroke="#000000" stroke-width="2"/>"##,
            cx - d,
            cy - d,
            cx + d,
            cy + d,
            cx - d,
            cy + d,
            cx + d,
            cy - d
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cutnet::instance::PointSet;
    use cutnet::scalar::int;

    #[test]
    fn draws_everything() {
        let inst = Instance::new(vec![PointSet { points: vec![Point::from_ints(0, 0), Point::from_ints(4, 2)], fraction: int(1) }]).unwrap();
        let l = Line::from_slope_intercept(int(0), int(1));
        let svg = draw(&inst, &[l, Line::from_slope_intercept(int(0), int(1000))], &[Point::from_ints(1, 1)]);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(svg.ends_with("</svg>\n"));
    }
}
