//! Arrangements of lines: faces of every dimension, point location, per-face
//! counts, face complexities and vertical decomposition.
//!
//! Faces are identified combinatorially. Every line gets its crossings sorted
//! along it, which splits it into edges; the sign vector of an edge (the side
//! of every other line it lies on) determines the two cells it bounds. Cells
//! are then exactly the distinct sign vectors seen from the edges.

mod decompose;
mod walk;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::cutting::WeightedLineSet;
use crate::geom::{HalfPlane, HalfPlanes, Line, Point, Region};
use crate::instance::Instance;
use crate::scalar::{int, mid, Scalar};

pub use decompose::Trapezoid;
pub use walk::{cells_along, point_key, Zobrist};

/// A face of an arrangement: a vertex, a relatively open edge, or an open
/// cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceId {
    Vertex(usize),
    Edge(usize),
    Cell(usize),
}

impl FaceId {
    pub fn dimension(&self) -> usize {
        match self {
            FaceId::Vertex(_) => 0,
            FaceId::Edge(_) => 1,
            FaceId::Cell(_) => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Vertex<T> {
    pub point: Point<T>,
    /// Indices of the lines through the vertex, increasing.
    pub lines: Vec<usize>,
}

/// A relatively open piece of one line between consecutive vertices; `from`
/// and `to` are `None` at infinity.
#[derive(Clone, Debug)]
pub struct Edge {
    pub line: usize,
    pub from: Option<usize>,
    pub to: Option<usize>,
    /// Cells on the negative and positive side of the line.
    pub cells: [usize; 2],
}

#[derive(Clone, Debug)]
pub struct Cell<T> {
    /// Bit `j` is set when the cell lies on the positive side of line `j`.
    pub signs: Box<[u64]>,
    /// Boundary edges; at most one per line.
    pub edges: Vec<usize>,
    /// A point of the open cell.
    pub sample: Point<T>,
}

#[derive(Clone, Debug)]
pub struct Arrangement<T> {
    lines: Vec<Line<T>>,
    vertices: Vec<Vertex<T>>,
    vertex_index: HashMap<Point<T>, usize>,
    /// Per line: the vertices on it, sorted by parameter.
    along: Vec<Vec<(T, usize)>>,
    /// Per line: id of its first edge; the line has `along[i].len() + 1` edges.
    first_edge: Vec<usize>,
    edges: Vec<Edge>,
    cells: Vec<Cell<T>>,
    cell_index: HashMap<Box<[u64]>, usize>,
    bound: T,
}

fn words(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

fn set_bit(bits: &mut [u64], j: usize, on: bool) {
    if on {
        bits[j / 64] |= 1 << (j % 64);
    } else {
        bits[j / 64] &= !(1 << (j % 64));
    }
}

pub(crate) fn get_bit(bits: &[u64], j: usize) -> bool {
    bits[j / 64] >> (j % 64) & 1 == 1
}

impl<T: Scalar> Arrangement<T> {
    /// Builds the arrangement; repeated lines are ignored.
    pub fn build(input: &[Line<T>]) -> Self {
        let mut lines: Vec<Line<T>> = Vec::with_capacity(input.len());
        {
            let mut seen = std::collections::HashSet::new();
            for l in input {
                if seen.insert(l.clone()) {
                    lines.push(l.clone());
                }
            }
        }
        let n = lines.len();
        let w = words(n);

        // Crossings along every line.
        let mut vertices: Vec<Vertex<T>> = Vec::new();
        let mut vertex_index: HashMap<Point<T>, usize> = HashMap::new();
        let mut crossings: Vec<Vec<(T, usize)>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if let Some(t) = lines[i].crossing_param(&lines[j]) {
                    let p = lines[i].point_at(&t);
                    let tj = lines[j].param_of(&p);
                    let id = *vertex_index.entry(p.clone()).or_insert_with(|| {
                        vertices.push(Vertex { point: p, lines: Vec::new() });
                        vertices.len() - 1
                    });
                    crossings[i].push((t, j));
                    crossings[j].push((tj, i));
                    let vl = &mut vertices[id].lines;
                    for k in [i, j] {
                        if !vl.contains(&k) {
                            vl.push(k);
                        }
                    }
                }
            }
        }
        for v in &mut vertices {
            v.lines.sort_unstable();
        }

        let mut along: Vec<Vec<(T, usize)>> = Vec::with_capacity(n);
        let mut first_edge = Vec::with_capacity(n);
        let mut edges: Vec<Edge> = Vec::new();
        let mut edge_signs: Vec<Box<[u64]>> = Vec::new();
        for i in 0..n {
            let mut cr = std::mem::take(&mut crossings[i]);
            cr.sort_by(|a, b| a.0.cmp(&b.0));
            // Sign vector far out in the negative direction.
            let mut bits = vec![0u64; w].into_boxed_slice();
            for (j, other) in lines.iter().enumerate() {
                if j == i {
                    continue;
                }
                let (alpha, beta) = lines[i].eval_along(other);
                let positive = match alpha.cmp(&T::zero()) {
                    Ordering::Equal => beta > T::zero(),
                    o => o == Ordering::Less,
                };
                set_bit(&mut bits, j, positive);
            }
            first_edge.push(edges.len());
            let mut verts: Vec<(T, usize)> = Vec::new();
            let mut from = None;
            let mut k = 0;
            while k < cr.len() {
                let t = cr[k].0.clone();
                edges.push(Edge { line: i, from, to: None, cells: [0, 0] });
                edge_signs.push(bits.clone());
                let p = lines[i].point_at(&t);
                let vid = vertex_index[&p];
                let last = edges.len() - 1;
                edges[last].to = Some(vid);
                while k < cr.len() && cr[k].0 == t {
                    let j = cr[k].1;
                    let cur = get_bit(&bits, j);
                    set_bit(&mut bits, j, !cur);
                    k += 1;
                }
                verts.push((t, vid));
                from = Some(vid);
            }
            edges.push(Edge { line: i, from, to: None, cells: [0, 0] });
            edge_signs.push(bits);
            along.push(verts);
        }

        // Cells from edge sign vectors.
        let mut cells: Vec<Cell<T>> = Vec::new();
        let mut cell_index: HashMap<Box<[u64]>, usize> = HashMap::new();
        if n == 0 {
            let signs = vec![0u64; w].into_boxed_slice();
            cell_index.insert(signs.clone(), 0);
            cells.push(Cell { signs, edges: Vec::new(), sample: Point::new(T::zero(), T::zero()) });
        }
        for (e, bits) in edge_signs.iter().enumerate() {
            let i = edges[e].line;
            for (slot, on) in [(0, false), (1, true)] {
                let mut key = bits.clone();
                set_bit(&mut key, i, on);
                let id = *cell_index.entry(key.clone()).or_insert_with(|| {
                    cells.push(Cell { signs: key, edges: Vec::new(), sample: Point::new(T::zero(), T::zero()) });
                    cells.len() - 1
                });
                cells[id].edges.push(e);
                edges[e].cells[slot] = id;
            }
        }

        let bound = {
            let mut b = lines.iter().map(|l| l.c().abs()).max().unwrap_or_else(T::zero);
            for v in &vertices {
                b = b.max(v.point.x.abs()).max(v.point.y.abs());
            }
            b + T::one()
        };

        let mut arr = Arrangement { lines, vertices, vertex_index, along, first_edge, edges, cells, cell_index, bound };
        for c in 0..arr.cells.len() {
            if let Some(&e) = arr.cells[c].edges.first() {
                arr.cells[c].sample = arr.cell_sample(c, e);
            }
        }
        arr
    }

    /// A point of cell `c`, found on the line crossing edge `e` of its boundary.
    fn cell_sample(&self, c: usize, e: usize) -> Point<T> {
        let q = self.edge_point(e);
        let probe = if self.lines[self.edges[e].line].is_vertical() {
            Line::from_slope_intercept(T::zero(), q.y.clone())
        } else {
            Line::vertical(q.x.clone())
        };
        let iv = self
            .cell_region(c)
            .line_interval(&probe)
            .expect("a transversal through a boundary edge enters the cell");
        probe.point_at(&iv.sample())
    }

    pub fn lines(&self) -> &[Line<T>] {
        &self.lines
    }

    pub fn vertices(&self) -> &[Vertex<T>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn cells(&self) -> &[Cell<T>] {
        &self.cells
    }

    /// `(V, E, F)`: vertices, edges (rays and whole lines included) and cells.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.cells.len())
    }

    /// All faces, vertices first, then edges, then cells.
    pub fn faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.vertices.len())
            .map(FaceId::Vertex)
            .chain((0..self.edges.len()).map(FaceId::Edge))
            .chain((0..self.cells.len()).map(FaceId::Cell))
    }

    /// A box half-width strictly exceeding every vertex coordinate, and large
    /// enough that every line meets the box.
    pub fn bound(&self) -> &T {
        &self.bound
    }

    /// A point in the relative interior of edge `e`.
    pub fn edge_point(&self, e: usize) -> Point<T> {
        let edge = &self.edges[e];
        let line = &self.lines[edge.line];
        let param = |v: usize| line.param_of(&self.vertices[v].point);
        let t = match (edge.from, edge.to) {
            (Some(a), Some(b)) => mid(&param(a), &param(b)),
            (Some(a), None) => param(a) + T::one(),
            (None, Some(b)) => param(b) - T::one(),
            (None, None) => T::zero(),
        };
        line.point_at(&t)
    }

    /// A point in the relative interior of any face.
    pub fn sample(&self, f: FaceId) -> Point<T> {
        match f {
            FaceId::Vertex(v) => self.vertices[v].point.clone(),
            FaceId::Edge(e) => self.edge_point(e),
            FaceId::Cell(c) => self.cells[c].sample.clone(),
        }
    }

    /// Which side of `line` the open cell `c` lies on.
    pub fn cell_side(&self, c: usize, line: usize) -> Ordering {
        if get_bit(&self.cells[c].signs, line) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// The open cell as an intersection of open half-planes of its boundary lines.
    pub fn cell_region(&self, c: usize) -> HalfPlanes<T> {
        let mut hp = HalfPlanes::default();
        for &e in &self.cells[c].edges {
            let i = self.edges[e].line;
            hp.push(HalfPlane::new(self.lines[i].clone(), self.cell_side(c, i), true));
        }
        hp
    }

    /// The relative interior of a face as a set of half-planes.
    pub fn face_region(&self, f: FaceId) -> HalfPlanes<T> {
        match f {
            FaceId::Cell(c) => self.cell_region(c),
            FaceId::Vertex(v) => {
                let p = &self.vertices[v].point;
                let mut hp = HalfPlanes::default();
                hp.push_equality(Line::vertical(p.x.clone()));
                hp.push_equality(Line::from_slope_intercept(T::zero(), p.y.clone()));
                hp
            }
            FaceId::Edge(e) => {
                let edge = &self.edges[e];
                let line = &self.lines[edge.line];
                let inner = self.edge_point(e);
                let mut hp = HalfPlanes::default();
                hp.push_equality(line.clone());
                for v in [edge.from, edge.to].into_iter().flatten() {
                    let other = self.vertices[v].lines.iter().find(|&&j| j != edge.line).copied().expect("vertex on two lines");
                    let cap = self.lines[other].clone();
                    let side = cap.side(&inner);
                    hp.push(HalfPlane::new(cap, side, true));
                }
                hp
            }
        }
    }

    /// Boundary vertices of cell `c`, sorted.
    pub fn cell_vertices(&self, c: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.cells[c]
            .edges
            .iter()
            .flat_map(|&e| [self.edges[e].from, self.edges[e].to])
            .flatten()
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Number of boundary edges (segments and rays) of cell `c`.
    pub fn complexity(&self, c: usize) -> usize {
        self.cells[c].edges.len()
    }

    /// Cell complexities sorted non-increasing.
    pub fn complexity_profile(&self) -> Vec<usize> {
        let mut c: Vec<usize> = (0..self.cells.len()).map(|c| self.complexity(c)).collect();
        c.sort_unstable_by(|a, b| b.cmp(a));
        c
    }

    /// The face whose relative interior contains `p`.
    pub fn locate(&self, p: &Point<T>) -> FaceId {
        let n = self.lines.len();
        let mut bits = vec![0u64; words(n)].into_boxed_slice();
        let mut zeros = Vec::new();
        for (j, l) in self.lines.iter().enumerate() {
            match l.side(p) {
                Ordering::Greater => set_bit(&mut bits, j, true),
                Ordering::Equal => zeros.push(j),
                Ordering::Less => {}
            }
        }
        match zeros.len() {
            0 => FaceId::Cell(self.cell_index[&bits]),
            1 => {
                let i = zeros[0];
                let t = self.lines[i].param_of(p);
                let k = self.along[i].partition_point(|(s, _)| *s < t);
                FaceId::Edge(self.first_edge[i] + k)
            }
            _ => FaceId::Vertex(self.vertex_index[p]),
        }
    }

    /// Per face, how many points of each set its relative interior holds.
    /// Faces holding no points are omitted.
    pub fn face_counts(&self, inst: &Instance<T>) -> BTreeMap<FaceId, Vec<usize>> {
        let mut out: BTreeMap<FaceId, Vec<usize>> = BTreeMap::new();
        for (i, set) in inst.sets().iter().enumerate() {
            for p in &set.points {
                out.entry(self.locate(p)).or_insert_with(|| vec![0; inst.k()])[i] += 1;
            }
        }
        out
    }

    /// Total weight of the lines of `w` meeting the relative interior of `f`.
    pub fn face_crossing_weight(&self, f: FaceId, w: &WeightedLineSet<T>) -> T {
        crossing_weight(&self.face_region(f), w)
    }

    /// Twice the area of cell `c` clipped to the box `[-m, m]^2`.
    pub fn clipped_twice_area(&self, c: usize, m: &T) -> T {
        crate::geom::twice_signed_area(&self.cell_region(c).clip_to_box(m))
    }

    pub fn default_clip(&self) -> T {
        self.bound.clone() * int::<T>(2)
    }
}

/// Total weight of the lines of `w` meeting `region`.
pub fn crossing_weight<T: Scalar, R: Region<T>>(region: &R, w: &WeightedLineSet<T>) -> T {
    w.iter()
        .filter(|(l, _)| region.meets_line(l))
        .fold(T::zero(), |acc, (_, x)| acc + x)
}
