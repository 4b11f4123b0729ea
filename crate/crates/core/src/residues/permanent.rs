//! Graph permanents: the permanent of `k` stacked copies of the incidence
//! matrix reduced at `v0` (rows) and `vinf` (columns through it removed).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::{Choices, Method, ResidueReport};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::oracle::linalg::is_prime;

/// Columns are limited so that a sweep over column subsets stays feasible.
pub const MAX_PERMANENT_COLUMNS: usize = 30;

/// Stacked incidence matrix. `orientation[e]` (over [`Multigraph::edges`])
/// true points edge `(u, v)`, `u < v`, from `u` to `v`; the head gets +1.
pub fn stacked_incidence(
    g: &Multigraph,
    v0: usize,
    vinf: usize,
    orientation: &[bool],
) -> Result<Vec<Vec<i8>>> {
    let n = g.vertex_count();
    for v in [v0, vinf] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if v0 == vinf {
        return Err(Error::InvalidArgument("0 and infinity must differ".into()));
    }
    if g.loops(vinf) > 0 {
        return Err(Error::SelfLoop(vinf));
    }
    let k = g.half_degree()? as usize;
    let edges = g.edges();
    if orientation.len() != edges.len() {
        return Err(Error::InvalidArgument(format!(
            "{} directions for {} edges",
            orientation.len(),
            edges.len()
        )));
    }
    let rows: Vec<usize> = (0..n).filter(|&v| v != v0 && v != vinf).collect();
    let cols: Vec<usize> = (0..edges.len()).filter(|&e| edges[e].0 != vinf && edges[e].1 != vinf).collect();
    if rows.len() * k != cols.len() {
        return Err(Error::InvalidArgument("stacked matrix is not square".into()));
    }
    let mut a = vec![vec![0i8; cols.len()]; rows.len() * k];
    for (ri, &v) in rows.iter().enumerate() {
        for (ci, &e) in cols.iter().enumerate() {
            let (x, y) = edges[e];
            if x == y {
                continue;
            }
            let (tail, head) = if orientation[e] { (x, y) } else { (y, x) };
            let entry = if v == head {
                1
            } else if v == tail {
                -1
            } else {
                0
            };
            for copy in 0..k {
                a[copy * rows.len() + ri][ci] = entry;
            }
        }
    }
    Ok(a)
}

/// Ryser's formula with a Gray-code walk over column subsets; the top
/// columns are split off into independent chunks.
pub fn permanent(a: &[Vec<i8>]) -> Result<BigInt> {
    let n = a.len();
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("permanent of a non-square matrix".into()));
    }
    if n > MAX_PERMANENT_COLUMNS {
        return Err(Error::TooLarge(format!("{n} columns")));
    }
    let split = n.saturating_sub(12).min(8);
    let low = n - split;
    let cols: Vec<Vec<i64>> = (0..n).map(|j| a.iter().map(|r| r[j] as i64).collect()).collect();
    let total: BigInt = (0..1usize << split)
        .into_par_iter()
        .map(|high| {
            let mut sums = vec![0i64; n];
            let mut size = 0u32;
            for b in 0..split {
                if high >> b & 1 == 1 {
                    size += 1;
                    for (s, c) in sums.iter_mut().zip(&cols[low + b]) {
                        *s += c;
                    }
                }
            }
            let mut acc = Accumulator::default();
            if size > 0 {
                acc.add(&sums, size);
            }
            let mut gray = 0usize;
            for i in 1..1usize << low {
                let bit = i.trailing_zeros() as usize;
                gray ^= 1 << bit;
                let col = &cols[bit];
                if gray >> bit & 1 == 1 {
                    size += 1;
                    for (s, c) in sums.iter_mut().zip(col) {
                        *s += c;
                    }
                } else {
                    size -= 1;
                    for (s, c) in sums.iter_mut().zip(col) {
                        *s -= c;
                    }
                }
                acc.add(&sums, size);
            }
            acc.finish()
        })
        .sum();
    Ok(if n.is_multiple_of(2) { total } else { -total })
}

/// Signed sum of row-sum products, in `i128` until it would overflow.
#[derive(Default)]
struct Accumulator {
    small: i128,
    big: BigInt,
}

impl Accumulator {
    fn add(&mut self, sums: &[i64], size: u32) {
        let mut prod: i128 = 1;
        let mut overflow = None;
        for (i, &s) in sums.iter().enumerate() {
            if s == 0 {
                return;
            }
            match prod.checked_mul(s as i128) {
                Some(p) => prod = p,
                None => {
                    overflow = Some(i);
                    break;
                }
            }
        }
        let negative = size % 2 == 1;
        if let Some(i) = overflow {
            let mut p = BigInt::from(prod);
            for &s in &sums[i..] {
                p *= s;
            }
            if negative {
                self.big -= p;
            } else {
                self.big += p;
            }
            return;
        }
        let term = if negative { prod.checked_neg() } else { Some(prod) };
        match term.and_then(|t| self.small.checked_add(t)) {
            Some(v) => self.small = v,
            None => {
                self.big += BigInt::from(self.small);
                self.small = 0;
                if negative {
                    self.big -= BigInt::from(prod);
                } else {
                    self.big += BigInt::from(prod);
                }
            }
        }
    }

    fn finish(self) -> BigInt {
        self.big + BigInt::from(self.small)
    }
}

/// `perm(A^[k])` for a `2k`-regular graph with the given choices.
pub fn graph_permanent(g: &Multigraph, v0: usize, vinf: usize, orientation: &[bool]) -> Result<BigInt> {
    let a = stacked_incidence(g, v0, vinf, orientation)?;
    if a.iter().all(|r| r.iter().any(|&x| x != 0)) && (0..a.len()).all(|j| a.iter().any(|r| r[j] != 0)) {
        permanent(&a)
    } else {
        // a zero row or column, e.g. from a self-loop away from infinity
        Ok(BigInt::zero())
    }
}

fn residue(v: &BigInt, m: u64) -> u64 {
    let r = v % BigInt::from(m);
    let r = r.to_i128().expect("residue fits");
    r.rem_euclid(m as i128) as u64
}

/// Infinity at the last loop-free vertex, 0 at the first other vertex.
fn default_choices(g: &Multigraph) -> (usize, usize) {
    let n = g.vertex_count();
    let vinf = (0..n).rev().find(|&v| g.loops(v) == 0).unwrap_or(n - 1);
    (if vinf == 0 { 1 } else { 0 }, vinf)
}

/// `Perm(G)^2 mod (k + 1)` with the given choices.
pub fn permanent_square_residue_with(
    g: &Multigraph,
    v0: usize,
    vinf: usize,
    orientation: &[bool],
) -> Result<ResidueReport> {
    let k = g.half_degree()?;
    let modulus = k as u64 + 1;
    let choices = Choices::Permanent { v0, vinf, orientation: orientation.to_vec() };
    if !is_prime(modulus) {
        return Ok(ResidueReport { modulus, residue: 0, method: Method::CompositeModulus, choices });
    }
    let p = graph_permanent(g, v0, vinf, orientation)?;
    let r = residue(&p, modulus);
    Ok(ResidueReport {
        modulus,
        residue: r * r % modulus,
        method: Method::PermanentSquare,
        choices,
    })
}

/// `Perm(G)^2 mod (k + 1)`. For composite `k + 1` the residue is zero and the
/// report says so.
pub fn permanent_square_residue(g: &Multigraph) -> Result<ResidueReport> {
    if g.vertex_count() < 3 {
        return Err(Error::InvalidArgument("the permanent needs at least three vertices".into()));
    }
    let (v0, vinf) = default_choices(g);
    permanent_square_residue_with(g, v0, vinf, &vec![true; g.edge_count()])
}

/// `Perm(G^[r])^2 mod (kr + 1)` for each `r`; every modulus must be prime.
pub fn extended_permanent(g: &Multigraph, r_list: &[u32]) -> Result<Vec<ResidueReport>> {
    let k = g.half_degree()?;
    r_list
        .iter()
        .map(|&r| {
            if r == 0 {
                return Err(Error::InvalidArgument("r must be positive".into()));
            }
            let modulus = (k * r) as u64 + 1;
            if !is_prime(modulus) {
                return Err(Error::NotPrime(modulus));
            }
            permanent_square_residue(&g.duplicate(r))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::families;
    use num_traits::One;

    fn brute_permanent(a: &[Vec<i8>]) -> BigInt {
        fn rec(a: &[Vec<i8>], row: usize, used: &mut Vec<bool>) -> BigInt {
            if row == a.len() {
                return BigInt::one();
            }
            let mut s = BigInt::zero();
            for j in 0..a.len() {
                if !used[j] && a[row][j] != 0 {
                    used[j] = true;
                    s += rec(a, row + 1, used) * a[row][j] as i64;
                    used[j] = false;
                }
            }
            s
        }
        rec(a, 0, &mut vec![false; a.len()])
    }

    /// Octahedron with 0 and 5 opposite, 1 2 3 4 the equator.
    pub(crate) fn fig5_octahedron() -> (Multigraph, Vec<bool>) {
        let g = Multigraph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)],
        )
        .unwrap();
        let dir = |u: usize, v: usize| -> bool {
            !matches!((u, v), (1, 2) | (2, 3) | (3, 4))
        };
        let orientation = g.edges().iter().map(|&(u, v)| dir(u, v)).collect();
        (g, orientation)
    }

    #[test]
    fn octahedron_example_is_32() {
        let (g, o) = fig5_octahedron();
        assert_eq!(graph_permanent(&g, 0, 5, &o).unwrap().magnitude(), &num_bigint::BigUint::from(32u32));
    }

    #[test]
    fn ryser_matches_expansion() {
        let (g, o) = fig5_octahedron();
        let a = stacked_incidence(&g, 0, 5, &o).unwrap();
        assert_eq!(permanent(&a).unwrap(), brute_permanent(&a));
        let k5 = families::complete(5);
        let a = stacked_incidence(&k5, 0, 4, &[true; 10]).unwrap();
        let p = permanent(&a).unwrap();
        assert_eq!(p, brute_permanent(&a));
        assert!((&p % BigInt::from(8)).is_zero());
    }

    #[test]
    fn loops_away_from_infinity_give_zero() {
        let g = Multigraph::from_edges(
            4,
            &[(0, 0), (0, 1), (0, 3), (1, 2), (2, 3), (2, 2), (1, 3), (1, 3)],
        )
        .unwrap();
        assert_eq!(g.regular_degree(), Some(4));
        let o = vec![true; g.edge_count()];
        assert_eq!(graph_permanent(&g, 1, 3, &o).unwrap(), BigInt::zero());
        assert_eq!(graph_permanent(&g, 1, 0, &o), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn square_residue_examples() {
        let oct = permanent_square_residue(&families::octahedron()).unwrap();
        assert_eq!((oct.modulus, oct.residue), (3, 1));
        assert_eq!(permanent_square_residue(&families::complete(5)).unwrap().residue, 0);
        let k52 = permanent_square_residue(&families::complete(5).duplicate(2)).unwrap();
        assert_eq!((k52.modulus, k52.residue), (5, 1));
        let k7 = permanent_square_residue(&families::complete(7)).unwrap();
        assert_eq!((k7.modulus, k7.residue, k7.method), (4, 0, Method::CompositeModulus));
    }

    #[test]
    fn extended_examples() {
        let r = extended_permanent(&families::octahedron(), &[1, 2]).unwrap();
        assert_eq!((r[0].modulus, r[0].residue), (3, 1));
        assert_eq!((r[1].modulus, r[1].residue), (5, 4));
        assert_eq!(extended_permanent(&families::octahedron(), &[4]), Err(Error::NotPrime(9)));
    }

    #[test]
    fn accumulator_spills_to_bignum() {
        let mut acc = Accumulator::default();
        let sums = vec![1i64 << 40; 3];
        acc.add(&sums, 2);
        acc.add(&sums, 2);
        let want = BigInt::from(2) * (BigInt::one() << 120usize);
        assert_eq!(acc.finish(), want);
    }
}
