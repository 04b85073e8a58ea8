//! Face identification without building an arrangement: a face of `A(R)` is
//! named by a random 128-bit key of its sign vector, so two faces collide
//! only with negligible probability. Collisions could only merge faces,
//! which makes every check built on these keys conservative.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{Line, Point};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Zobrist {
    positive: Vec<u128>,
    on_line: Vec<u128>,
}

impl Zobrist {
    pub fn new(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a0b_c0de);
        let positive = (0..n).map(|_| rng.gen()).collect();
        let on_line = (0..n).map(|_| rng.gen()).collect();
        Zobrist { positive, on_line }
    }
}

/// Key of the face of `A(lines)` containing `p` (faces of every dimension).
pub fn point_key<T: Scalar>(lines: &[Line<T>], z: &Zobrist, p: &Point<T>) -> u128 {
    let mut key = 0;
    for (j, l) in lines.iter().enumerate() {
        match l.side(p) {
            Ordering::Greater => key ^= z.positive[j],
            Ordering::Equal => key ^= z.on_line[j],
            Ordering::Less => {}
        }
    }
    key
}

/// The open cells of `A(lines)` met by `l`, in order along `l`, each with
/// its key and the open parameter interval `(lo, hi)` of `l` inside it.
/// Empty when `l` is one of `lines`.
pub fn cells_along<T: Scalar>(lines: &[Line<T>], z: &Zobrist, l: &Line<T>) -> Vec<(u128, Option<T>, Option<T>)> {
    let mut key = 0u128;
    let mut params: Vec<(T, usize)> = Vec::new();
    for (j, other) in lines.iter().enumerate() {
        let (alpha, beta) = l.eval_along(other);
        match alpha.cmp(&T::zero()) {
            Ordering::Equal => match beta.cmp(&T::zero()) {
                Ordering::Equal => return Vec::new(),
                Ordering::Greater => key ^= z.positive[j],
                Ordering::Less => {}
            },
            o => {
                if o == Ordering::Less {
                    key ^= z.positive[j];
                }
                params.push((-beta / alpha, j));
            }
        }
    }
    params.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut out = Vec::new();
    let mut lo: Option<T> = None;
    let mut k = 0;
    while k < params.len() {
        let t = params[k].0.clone();
        out.push((key, lo, Some(t.clone())));
        while k < params.len() && params[k].0 == t {
            key ^= z.positive[params[k].1];
            k += 1;
        }
        lo = Some(t);
    }
    out.push((key, lo, None));
    out
}
