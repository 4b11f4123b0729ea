//! Transitions at a vertex, grouped by how many pairs join each pair of
//! neighbours.

use num_bigint::BigUint;
use num_traits::One;

use super::Multigraph;
use crate::error::{Error, Result};

/// Pair counts of a class of transitions at a vertex `v`.
///
/// `get(i, j)` is the number of pairs matching an edge `v w_i` with an edge
/// `v w_j`, where `w_0 < w_1 < ...` are the distinct neighbours of `v`.
/// The diagonal counts pairs of parallel edges; it is zero for every matrix
/// produced by [`transition_matrices`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransitionMatrix {
    pivot: usize,
    neighbors: Vec<usize>,
    counts: Vec<u32>,
}

impl TransitionMatrix {
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn neighbors(&self) -> &[usize] {
        &self.neighbors
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.counts[i * self.neighbors.len() + j]
    }

    pub fn has_diagonal(&self) -> bool {
        (0..self.neighbors.len()).any(|i| self.get(i, i) > 0)
    }

    /// Number of transitions in this class:
    /// `prod d_i! / (prod_{i<j} D_ij! * prod_i D_ii! 2^D_ii)`.
    pub fn coefficient(&self, multiplicities: &[u32]) -> BigUint {
        let m = self.neighbors.len();
        let mut num = BigUint::one();
        for &d in multiplicities {
            num *= factorial(d);
        }
        let mut den = BigUint::one();
        for i in 0..m {
            let dii = self.get(i, i);
            den *= factorial(dii);
            den <<= dii as usize;
            for j in i + 1..m {
                den *= factorial(self.get(i, j));
            }
        }
        num / den
    }
}

pub(crate) fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn pivot_data(g: &Multigraph, v: usize) -> Result<(Vec<usize>, Vec<u32>)> {
    g.check(v)?;
    if g.loops(v) > 0 {
        return Err(Error::SelfLoop(v));
    }
    let nb = g.neighbors(v);
    Ok((nb.iter().map(|p| p.0).collect(), nb.iter().map(|p| p.1).collect()))
}

/// Backtracking over the upper triangle of a symmetric matrix with row sums
/// `d` (diagonal entries count twice when allowed).
fn enumerate(d: &[u32], diagonal: bool, mut emit: impl FnMut(&[u32])) {
    let m = d.len();
    let mut counts = vec![0u32; m * m];
    let mut rem = d.to_vec();
    fn rec(
        i: usize,
        j: usize,
        m: usize,
        diagonal: bool,
        counts: &mut Vec<u32>,
        rem: &mut Vec<u32>,
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if i == m {
            emit(counts);
            return;
        }
        if j >= m {
            if rem[i] == 0 {
                let next = if diagonal { i + 1 } else { i + 2 };
                rec(i + 1, next, m, diagonal, counts, rem, emit);
            }
            return;
        }
        if j == i {
            for x in 0..=rem[i] / 2 {
                let left = rem[i] - 2 * x;
                if left > rem[i + 1..].iter().sum::<u32>() {
                    continue;
                }
                counts[i * m + i] = x;
                rem[i] -= 2 * x;
                rec(i, j + 1, m, diagonal, counts, rem, emit);
                rem[i] += 2 * x;
            }
            counts[i * m + i] = 0;
            return;
        }
        // what is left of row i must fit into the rows still ahead
        if rem[i] > rem[j..].iter().sum::<u32>() {
            return;
        }
        let lo = if j + 1 == m { rem[i] } else { 0 };
        let hi = rem[i].min(rem[j]);
        if lo > hi {
            return;
        }
        for x in lo..=hi {
            counts[i * m + j] = x;
            counts[j * m + i] = x;
            rem[i] -= x;
            rem[j] -= x;
            rec(i, j + 1, m, diagonal, counts, rem, emit);
            rem[i] += x;
            rem[j] += x;
        }
        counts[i * m + j] = 0;
        counts[j * m + i] = 0;
    }
    if m == 0 {
        emit(&counts);
        return;
    }
    let start_j = if diagonal { 0 } else { 1 };
    rec(0, start_j, m, diagonal, &mut counts, &mut rem, &mut emit);
}

fn collect(g: &Multigraph, v: usize, diagonal: bool) -> Result<Vec<(TransitionMatrix, BigUint)>> {
    let (neighbors, d) = pivot_data(g, v)?;
    let mut out = Vec::new();
    enumerate(&d, diagonal, |counts| {
        let t = TransitionMatrix { pivot: v, neighbors: neighbors.clone(), counts: counts.to_vec() };
        let c = t.coefficient(&d);
        out.push((t, c));
    });
    Ok(out)
}

/// Classes of transitions at `v` that pair no two parallel edges, each with
/// the number of transitions it stands for.
pub fn transition_matrices(g: &Multigraph, v: usize) -> Result<Vec<(TransitionMatrix, BigUint)>> {
    collect(g, v, false)
}

/// All classes of transitions at `v`, including those that pair parallel
/// edges into self-loops. The coefficients sum to `(deg v - 1)!!`.
pub fn loop_transition_classes(
    g: &Multigraph,
    v: usize,
) -> Result<Vec<(TransitionMatrix, BigUint)>> {
    collect(g, v, true)
}

/// Number of loop-free transition classes at `v`, without building them.
pub fn transition_count(g: &Multigraph, v: usize) -> Result<usize> {
    let (_, d) = pivot_data(g, v)?;
    let mut count = 0usize;
    enumerate(&d, false, |_| count += 1);
    Ok(count)
}

/// Removes `v` and joins its neighbours as prescribed by `t`. Labels above
/// `v` shift down by one.
pub fn apply_transition(g: &Multigraph, v: usize, t: &TransitionMatrix) -> Result<Multigraph> {
    let (neighbors, d) = pivot_data(g, v)?;
    if neighbors != t.neighbors || t.pivot != v {
        return Err(Error::InvalidArgument("transition does not belong to this vertex".into()));
    }
    let m = neighbors.len();
    for i in 0..m {
        let row: u32 = (0..m).map(|j| if i == j { 2 * t.get(i, i) } else { t.get(i, j) }).sum();
        if row != d[i] {
            return Err(Error::InvalidArgument("transition row sums do not match".into()));
        }
    }
    let mut h = g.clone();
    for i in 0..m {
        for j in i..m {
            let c = t.get(i, j);
            if c > 0 {
                h.add_edges(neighbors[i], neighbors[j], c)?;
            }
        }
    }
    h.delete_vertex(v)
}
