//! Exact covering LP: minimize `sum x` subject to `sum_{j in S_i} x_j >= 1`
//! for every constraint set `S_i`, and `x >= 0`.
//!
//! Revised dual simplex over `[A, -I] (x, s) = 1`. The all-surplus basis is
//! dual feasible from the start, and stays dual feasible when a row is
//! added, so [`CoverLp`] re-optimizes incrementally as constraints arrive.
//!
//! Variables that lie in exactly the same constraints are interchangeable,
//! so the simplex works on one column per class of them. A new row splits
//! the classes it cuts; the split-off part starts nonbasic at zero with the
//! reduced cost of the class it came from.
//!
//! Covering LPs are badly dual degenerate, so ties in the ratio test are
//! broken lexicographically, as if every cost were perturbed by a distinct
//! infinitesimal. That rules out cycling. A new class takes the most
//! significant perturbation and a new surplus the least, which keeps every
//! nonbasic column lexicographically positive when rows arrive.

use std::cmp::Ordering;

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution<T> {
    /// Optimal value of both programs.
    pub value: T,
    /// Optimal primal point, one entry per variable; entries lie in `[0, 1]`.
    pub x: Vec<T>,
    /// Optimal dual point, one entry per constraint: `y >= 0` and
    /// `sum_{i : j in S_i} y_i <= 1` for every variable `j`.
    pub y: Vec<T>,
}

/// Solves the covering LP over `nvars` variables. Returns `None` when some
/// constraint set is empty (the LP is infeasible).
pub fn min_cover<T: Scalar>(nvars: usize, constraints: &[Vec<usize>]) -> Option<CoverSolution<T>> {
    let mut lp = CoverLp::new(nvars);
    for c in constraints {
        lp.add_row(c.clone());
    }
    lp.solve()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    /// A class of interchangeable variables.
    Class(usize),
    /// The surplus of a row.
    Surplus(usize),
}

/// Covering LP that keeps its optimal basis between solves.
#[derive(Clone, Debug)]
pub struct CoverLp<T> {
    nvars: usize,
    rows: Vec<Vec<usize>>,
    empty_row: bool,
    /// Class of every variable, and the members of every class (sorted).
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    /// Simplex variable of every class and of every row's surplus.
    class_var: Vec<usize>,
    surplus_var: Vec<usize>,
    vars: Vec<Var>,
    /// Significance of every simplex variable's perturbation; smaller is
    /// more significant.
    rank: Vec<i64>,
    next_class_rank: i64,
    next_surplus_rank: i64,
    /// Per simplex variable: the rows its column meets, increasing.
    col_rows: Vec<Vec<usize>>,
    /// Per row: the class variables in it.
    row_cols: Vec<Vec<usize>>,
    basis: Vec<usize>,
    position: Vec<Option<usize>>,
    /// Inverse basis, indexed [basis position][row].
    binv: Vec<Vec<T>>,
    xb: Vec<T>,
    /// Reduced costs; zero on basic variables.
    d: Vec<T>,
    pivots: usize,
}

impl<T: Scalar> CoverLp<T> {
    pub fn new(nvars: usize) -> Self {
        let mut lp = CoverLp {
            nvars,
            rows: Vec::new(),
            empty_row: false,
            class_of: vec![0; nvars],
            members: Vec::new(),
            class_var: Vec::new(),
            surplus_var: Vec::new(),
            vars: Vec::new(),
            rank: Vec::new(),
            next_class_rank: 0,
            next_surplus_rank: 1,
            col_rows: Vec::new(),
            row_cols: Vec::new(),
            basis: Vec::new(),
            position: Vec::new(),
            binv: Vec::new(),
            xb: Vec::new(),
            d: Vec::new(),
            pivots: 0,
        };
        if nvars > 0 {
            lp.new_class((0..nvars).collect(), Vec::new(), T::one());
        }
        lp
    }

    fn new_var(&mut self, v: Var, rows: Vec<usize>, d: T) -> usize {
        self.vars.push(v);
        let rank = match v {
            Var::Class(_) => {
                self.next_class_rank -= 1;
                self.next_class_rank
            }
            Var::Surplus(_) => {
                self.next_surplus_rank += 1;
                self.next_surplus_rank
            }
        };
        self.rank.push(rank);
        self.col_rows.push(rows);
        self.position.push(None);
        self.d.push(d);
        self.vars.len() - 1
    }

    fn new_class(&mut self, members: Vec<usize>, rows: Vec<usize>, d: T) -> usize {
        let c = self.members.len();
        for &j in &members {
            self.class_of[j] = c;
        }
        self.members.push(members);
        for &r in &rows {
            self.row_cols[r].push(self.vars.len());
        }
        let id = self.new_var(Var::Class(c), rows, d);
        self.class_var.push(id);
        id
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Simplex pivots done so far.
    pub fn pivots(&self) -> usize {
        self.pivots
    }

    /// Number of classes of interchangeable variables.
    pub fn classes(&self) -> usize {
        self.members.len()
    }

    /// Adds the constraint `sum_{j in vars} x_j >= 1`. Duplicate indices are
    /// ignored.
    pub fn add_row(&mut self, mut vars: Vec<usize>) {
        vars.sort_unstable();
        vars.dedup();
        assert!(vars.iter().all(|&j| j < self.nvars), "variable out of range");
        let i = self.rows.len();
        if vars.is_empty() {
            self.empty_row = true;
        }

        // Split every class the row cuts; the part holding the class's
        // smallest member keeps the simplex column.
        let mut hit: Vec<usize> = vars.iter().map(|&j| self.class_of[j]).collect();
        hit.sort_unstable();
        hit.dedup();
        let mut inside = Vec::with_capacity(hit.len());
        for c in hit {
            let (ins, outs): (Vec<usize>, Vec<usize>) = self.members[c].iter().partition(|j| vars.binary_search(j).is_ok());
            if outs.is_empty() {
                inside.push(self.class_var[c]);
                continue;
            }
            let old = self.class_var[c];
            let rows = self.col_rows[old].clone();
            let d = self.d[old].clone();
            let keep_in = ins[0] < outs[0];
            let (keep, split) = if keep_in { (ins, outs) } else { (outs, ins) };
            self.members[c] = keep;
            let new = self.new_class(split, rows, d);
            inside.push(if keep_in { old } else { new });
        }
        inside.sort_unstable();
        for &v in &inside {
            self.col_rows[v].push(i);
        }

        // The new surplus enters the basis. With a_B the new row restricted to
        // the basic columns, the new inverse row is a_B B^-1 followed by -1.
        let mut new_row = vec![T::zero(); i + 1];
        let mut xs = -T::one();
        for (p, &v) in self.basis.iter().enumerate() {
            if inside.binary_search(&v).is_ok() {
                for (c, e) in self.binv[p].iter().enumerate() {
                    if !e.is_zero() {
                        new_row[c] = new_row[c].clone() + e;
                    }
                }
                xs = xs + &self.xb[p];
            }
        }
        new_row[i] = -T::one();
        for r in self.binv.iter_mut() {
            r.push(T::zero());
        }
        self.binv.push(new_row);
        self.xb.push(xs);
        let s = self.new_var(Var::Surplus(i), vec![i], T::zero());
        self.surplus_var.push(s);
        self.basis.push(s);
        self.position[s] = Some(self.basis.len() - 1);
        self.row_cols.push(inside);
        self.rows.push(vars);
    }

    /// Column `B^-1 a_j`.
    fn column(&self, j: usize) -> Vec<T> {
        match self.vars[j] {
            Var::Class(_) => self.binv.iter().map(|b| self.col_rows[j].iter().fold(T::zero(), |acc, &i| acc + &b[i])).collect(),
            Var::Surplus(i) => self.binv.iter().map(|b| -b[i].clone()).collect(),
        }
    }

    /// `(B^-1 a_j)_p`.
    fn entry(&self, p: usize, j: usize) -> T {
        match self.vars[j] {
            Var::Class(_) => self.col_rows[j].iter().fold(T::zero(), |acc, &i| acc + &self.binv[p][i]),
            Var::Surplus(i) => -self.binv[p][i].clone(),
        }
    }

    /// Among entering candidates with equal ratio, the one whose perturbed
    /// reduced cost over `-alpha_j` is lexicographically least, with its
    /// column. The perturbed reduced cost of `j` has `+1` at `j` and
    /// `-(B^-1 a_j)_p` at each basic variable; components are visited in
    /// rank order until one candidate is left.
    fn lex_min(&self, mut tied: Vec<usize>, alpha: &[T]) -> Option<(usize, Vec<T>)> {
        if tied.len() > 1 {
            let mut order: Vec<(i64, Option<usize>)> = (0..self.basis.len()).map(|p| (self.rank[self.basis[p]], Some(p))).collect();
            order.extend(tied.iter().map(|&j| (self.rank[j], None)));
            order.sort_by_key(|e| e.0);
            for (rank, p) in order {
                let vals: Vec<T> = tied
                    .iter()
                    .map(|&j| match p {
                        Some(p) => self.entry(p, j) / &alpha[j],
                        None if self.rank[j] == rank => T::one() / -alpha[j].clone(),
                        None => T::zero(),
                    })
                    .collect();
                let Some(low) = vals.iter().min().cloned() else { break };
                tied = tied.into_iter().zip(&vals).filter(|(_, v)| **v == low).map(|(j, _)| j).collect();
                if tied.len() == 1 {
                    break;
                }
            }
        }
        let q = *tied.first()?;
        Some((q, self.column(q)))
    }

    /// Re-optimizes and returns the optimum, or `None` if a row is empty.
    pub fn solve(&mut self) -> Option<CoverSolution<T>> {
        if self.empty_row {
            return None;
        }
        let nrows = self.rows.len();
        let nall = self.vars.len();
        loop {
            // Most negative basic value leaves.
            let mut leave: Option<usize> = None;
            for p in 0..self.basis.len() {
                if self.xb[p].is_negative() && leave.is_none_or(|q| self.xb[p] < self.xb[q]) {
                    leave = Some(p);
                }
            }
            let Some(r) = leave else { break };

            // Row r of B^-1 [A, -I].
            let mut alpha = vec![T::zero(); nall];
            for (i, e) in self.binv[r].iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                for &j in &self.row_cols[i] {
                    alpha[j] = alpha[j].clone() + e;
                }
                alpha[self.surplus_var[i]] = -e.clone();
            }
            let mut best: Option<T> = None;
            let mut tied: Vec<usize> = Vec::new();
            for (j, a) in alpha.iter().enumerate() {
                if !a.is_negative() || self.position[j].is_some() {
                    continue;
                }
                let ratio = self.d[j].clone() / -a.clone();
                match best.as_ref().map(|b| ratio.cmp(b)) {
                    Some(Ordering::Greater) => {}
                    Some(Ordering::Equal) => tied.push(j),
                    _ => {
                        best = Some(ratio);
                        tied = vec![j];
                    }
                }
            }
            // With nonempty rows the LP is feasible, so a candidate exists.
            let (q, col) = self.lex_min(tied, &alpha)?;
            let pivot = alpha[q].clone();
            let theta_d = self.d[q].clone() / &pivot;
            if !theta_d.is_zero() {
                for (j, a) in alpha.iter().enumerate() {
                    if !a.is_zero() && self.position[j].is_none() {
                        self.d[j] = self.d[j].clone() - theta_d.clone() * a;
                    }
                }
            }
            let out = self.basis[r];
            self.d[out] = -theta_d;
            self.d[q] = T::zero();

            let theta_p = self.xb[r].clone() / &pivot;
            for (p, c) in col.iter().enumerate() {
                if p != r && !c.is_zero() {
                    self.xb[p] = self.xb[p].clone() - theta_p.clone() * c;
                }
            }
            self.xb[r] = theta_p;

            let inv = T::one() / &pivot;
            let prow: Vec<T> = self.binv[r].iter().map(|e| if e.is_zero() { T::zero() } else { e.clone() * &inv }).collect();
            let nz: Vec<usize> = (0..prow.len()).filter(|&c| !prow[c].is_zero()).collect();
            for (p, c) in col.iter().enumerate() {
                if p == r || c.is_zero() {
                    continue;
                }
                let b = &mut self.binv[p];
                for &k in &nz {
                    b[k] = b[k].clone() - c.clone() * &prow[k];
                }
            }
            self.binv[r] = prow;
            self.basis[r] = q;
            self.position[out] = None;
            self.position[q] = Some(r);
            self.pivots += 1;
        }

        let mut x = vec![T::zero(); self.nvars];
        let mut value = T::zero();
        for (p, &v) in self.basis.iter().enumerate() {
            if let Var::Class(c) = self.vars[v] {
                x[self.members[c][0]] = self.xb[p].clone();
                value = value + &self.xb[p];
            }
        }
        let y = (0..nrows)
            .map(|i| {
                let s = self.surplus_var[i];
                if self.position[s].is_some() {
                    T::zero()
                } else {
                    self.d[s].clone()
                }
            })
            .collect();
        Some(CoverSolution { value, x, y })
    }
}
