//! Largest guard-free convex polygon over an x-distinct point set.
//!
//! A convex polygon with vertices in `P` is cut by vertical lines through its
//! vertices into trapezoids, each bounded by one lower-chain segment (floor)
//! and one upper-chain segment (ceiling). Trapezoids are DAG nodes; moving
//! right replaces whichever of the two segments ends first, subject to the
//! chain turning the right way. A trapezoid counts the points in its slab
//! except those on its right wall, so weights add up along a path.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geom::{convex_hull, orient, Line, Point, Polygon};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DagMode {
    /// Successors found through slope-sorted suffix tables.
    #[default]
    Chained,
    /// Every successor enumerated directly.
    Naive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadPolygon<T> {
    pub polygon: Polygon<T>,
    /// Points of the set in the closed polygon.
    pub count: usize,
}

type Best = Option<(i64, usize)>;

fn better(a: &Best, b: &Best) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x.0 > y.0,
        (Some(_), None) => true,
        _ => false,
    }
}

/// Guard-independent tables for one point set.
#[derive(Clone, Debug)]
pub struct TrapDag<T> {
    pts: Vec<Point<T>>,
    seg_id: Vec<usize>,
    segs: Vec<(usize, usize)>,
    lines: Vec<Line<T>>,
    /// Per segment `(i, j)`: points with index in `[i, t)` strictly below
    /// (resp. above) its line, for `t` in `0..=n`.
    below: Vec<Vec<i64>>,
    above: Vec<Vec<i64>>,
    /// Per vertex `j`: the later vertices by increasing slope from `j`.
    order: Vec<Vec<usize>>,
    /// Per segment `(k, l)`: how many of `order[l]` turn right (resp. do not
    /// turn left) from it.
    neg: Vec<usize>,
    nonpos: Vec<usize>,
}

impl<T: Scalar> TrapDag<T> {
    /// Points are deduplicated; their x-coordinates must be distinct.
    pub fn new(points: &[Point<T>]) -> Result<Self> {
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.windows(2).any(|w| w[0].x == w[1].x) {
            return Err(Error::NotXDistinct);
        }
        let n = pts.len();
        let mut seg_id = vec![usize::MAX; n * n];
        let mut segs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                seg_id[i * n + j] = segs.len();
                segs.push((i, j));
            }
        }
        let lines: Vec<Line<T>> = segs.iter().map(|&(i, j)| Line::through(&pts[i], &pts[j]).expect("distinct points")).collect();
        let mut below = Vec::with_capacity(segs.len());
        let mut above = Vec::with_capacity(segs.len());
        for (s, &(i, j)) in segs.iter().enumerate() {
            let mut b = vec![0i64; n + 1];
            let mut a = vec![0i64; n + 1];
            for t in i..j {
                let side = lines[s].side(&pts[t]);
                b[t + 1] = b[t] + (side == Ordering::Less) as i64;
                a[t + 1] = a[t] + (side == Ordering::Greater) as i64;
            }
            for t in j + 1..=n {
                b[t] = b[j];
                a[t] = a[j];
            }
            below.push(b);
            above.push(a);
        }
        let order: Vec<Vec<usize>> = (0..n)
            .map(|j| {
                let mut v: Vec<usize> = (j + 1..n).collect();
                v.sort_by(|&e1, &e2| orient(&pts[j], &pts[e2], &pts[e1]).then(e1.cmp(&e2)));
                v
            })
            .collect();
        let mut neg = Vec::with_capacity(segs.len());
        let mut nonpos = Vec::with_capacity(segs.len());
        for &(k, l) in &segs {
            let o = &order[l];
            neg.push(o.partition_point(|&e| orient(&pts[k], &pts[l], &pts[e]) == Ordering::Less));
            nonpos.push(o.partition_point(|&e| orient(&pts[k], &pts[l], &pts[e]) != Ordering::Greater));
        }
        Ok(TrapDag { pts, seg_id, segs, lines, below, above, order, neg, nonpos })
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.pts
    }

    fn seg(&self, i: usize, j: usize) -> usize {
        self.seg_id[i * self.pts.len() + j]
    }

    /// Points in the slab `[s, e)` on or between floor `f` and ceiling `c`.
    fn weight(&self, f: usize, c: usize, s: usize, e: usize) -> i64 {
        (e - s) as i64 - (self.below[f][e] - self.below[f][s]) - (self.above[c][e] - self.above[c][s])
    }

    /// The guard-free closed convex polygon with vertices in the set that
    /// holds the most points of the set, or `None` when every point is a
    /// guard.
    pub fn best(&self, guards: &[Point<T>], mode: DagMode) -> Option<BadPolygon<T>> {
        let n = self.pts.len();
        let ns = self.segs.len();
        let mut gs: Vec<&Point<T>> = guards.iter().collect();
        gs.sort_by(|a, b| a.x.cmp(&b.x));
        // side[s][g]: guard g relative to the line of segment s.
        let side: Vec<Vec<Ordering>> = self.lines.iter().map(|l| gs.iter().map(|g| l.side(g)).collect()).collect();
        // Guards with x in [x_s, x_e] are gs[lo[s]..hi[e]].
        let lo: Vec<usize> = self.pts.iter().map(|p| gs.partition_point(|g| g.x < p.x)).collect();
        let hi: Vec<usize> = self.pts.iter().map(|p| gs.partition_point(|g| g.x <= p.x)).collect();
        let guard_free = |f: usize, c: usize, s: usize, e: usize| {
            (lo[s]..hi[e]).all(|g| side[f][g] == Ordering::Less || side[c][g] == Ordering::Greater)
        };

        let mut h: Vec<Best> = vec![None; ns * ns];
        let mut ftab: HashMap<(usize, usize), Vec<Best>> = HashMap::new();
        let mut ctab: HashMap<(usize, usize), Vec<Best>> = HashMap::new();
        let mut best: Option<(i64, Vec<usize>)> = None;
        let mut start_best: Best = None;

        for s in (0..n).rev() {
            // Nodes whose left wall is at vertex s.
            let mut nodes = Vec::new();
            for j in s + 1..n {
                for k in 0..=s {
                    for l in (s + 1).max(k + 1)..n {
                        if k == s && j == l {
                            continue;
                        }
                        nodes.push((s, j, k, l));
                    }
                }
            }
            for i in 0..s {
                for j in s + 1..n {
                    for l in s + 1..n {
                        nodes.push((i, j, s, l));
                    }
                }
            }
            for (i, j, k, l) in nodes {
                let f = self.seg(i, j);
                let c = self.seg(k, l);
                let start = i == k;
                if start && orient(&self.pts[i], &self.pts[j], &self.pts[l]) != Ordering::Greater {
                    continue;
                }
                let e = j.min(l);
                if !guard_free(f, c, s, e) {
                    continue;
                }
                let w = self.weight(f, c, s, e);
                let tail: Best = if j == l {
                    Some((1, usize::MAX))
                } else if j < l {
                    match mode {
                        DagMode::Chained => ftab.get(&(j, c)).and_then(|t| t.get(self.nonpos[f]).copied().flatten()),
                        DagMode::Naive => {
                            let mut b = None;
                            for m in j + 1..n {
                                if orient(&self.pts[i], &self.pts[j], &self.pts[m]) == Ordering::Greater {
                                    let id = self.seg(j, m) * ns + c;
                                    let cand = h[id].map(|(v, _)| (v, id));
                                    if better(&cand, &b) {
                                        b = cand;
                                    }
                                }
                            }
                            b
                        }
                    }
                } else {
                    match mode {
                        DagMode::Chained => {
                            let k2 = self.neg[c];
                            ctab.get(&(l, f)).and_then(|t| if k2 == 0 { None } else { t[k2 - 1] })
                        }
                        DagMode::Naive => {
                            let mut b = None;
                            for m in l + 1..n {
                                if orient(&self.pts[k], &self.pts[l], &self.pts[m]) == Ordering::Less {
                                    let id = f * ns + self.seg(l, m);
                                    let cand = h[id].map(|(v, _)| (v, id));
                                    if better(&cand, &b) {
                                        b = cand;
                                    }
                                }
                            }
                            b
                        }
                    }
                };
                let id = f * ns + c;
                h[id] = tail.map(|(v, next)| (w + v, next));
                if start {
                    let cand = h[id].map(|(v, _)| (v, id));
                    if better(&cand, &start_best) {
                        start_best = cand;
                    }
                }
            }
            if mode == DagMode::Chained {
                // Floor-advance tables into vertex s: suffix maxima.
                for k in 0..s {
                    for l in s + 1..n {
                        let c = self.seg(k, l);
                        let o = &self.order[s];
                        let mut t: Vec<Best> = vec![None; o.len() + 1];
                        for (p, &m) in o.iter().enumerate().rev() {
                            let id = self.seg(s, m) * ns + c;
                            let cand = h[id].map(|(v, _)| (v, id));
                            t[p] = if better(&cand, &t[p + 1]) { cand } else { t[p + 1] };
                        }
                        ftab.insert((s, c), t);
                    }
                }
                // Ceiling-advance tables into vertex s: prefix maxima.
                for i in 0..s {
                    for j in s + 1..n {
                        let f = self.seg(i, j);
                        let o = &self.order[s];
                        let mut t: Vec<Best> = Vec::with_capacity(o.len());
                        let mut acc: Best = None;
                        for &m in o {
                            let id = f * ns + self.seg(s, m);
                            let cand = h[id].map(|(v, _)| (v, id));
                            if better(&cand, &acc) {
                                acc = cand;
                            }
                            t.push(acc);
                        }
                        ctab.insert((s, f), t);
                    }
                }
            }
        }

        if let Some((v, mut id)) = start_best {
            let mut verts = Vec::new();
            while id != usize::MAX {
                let (f, c) = (id / ns, id % ns);
                let (i, j) = self.segs[f];
                let (k, l) = self.segs[c];
                verts.extend([i, j, k, l]);
                id = h[id].expect("path node").1;
            }
            best = Some((v, verts));
        }
        // Segments and single points.
        for (f, &(i, j)) in self.segs.iter().enumerate() {
            let v = self.weight(f, f, i, j) + 1;
            if best.as_ref().is_some_and(|b| b.0 >= v) {
                continue;
            }
            if (lo[i]..hi[j]).all(|g| side[f][g] != Ordering::Equal) {
                best = Some((v, vec![i, j]));
            }
        }
        if best.is_none() {
            if let Some(i) = (0..n).find(|&i| !guards.contains(&self.pts[i])) {
                best = Some((1, vec![i]));
            }
        }
        best.map(|(v, verts)| {
            let pts: Vec<Point<T>> = verts.into_iter().map(|i| self.pts[i].clone()).collect();
            BadPolygon { polygon: convex_hull(&pts).expect("nonempty"), count: v as usize }
        })
    }
}
