//! Point evaluation of the Kirchhoff polynomial `sum_T prod_{e in T} x_e`
//! and the Symanzik polynomial `sum_T prod_{e not in T} x_e`.
//!
//! Variables are indexed by edge instance in the order of
//! [`Multigraph::edges`].

use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::{det_bigint, det_mod};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

fn check_len(g: &Multigraph, len: usize) -> Result<Vec<(usize, usize)>> {
    let edges = g.edges();
    if edges.len() != len {
        return Err(Error::InvalidArgument(format!(
            "{} values for {} edges",
            len,
            edges.len()
        )));
    }
    Ok(edges)
}

/// Determinant of the Laplacian with the row and column of vertex 0 removed.
/// Zero for disconnected graphs.
pub fn kirchhoff_evaluate(g: &Multigraph, x: &[BigInt]) -> Result<BigInt> {
    let edges = check_len(g, x.len())?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidArgument("empty graph".into()));
    }
    let mut l = vec![vec![BigInt::zero(); n]; n];
    for (&(u, v), w) in edges.iter().zip(x) {
        if u == v {
            continue;
        }
        l[u][u] += w;
        l[v][v] += w;
        l[u][v] -= w;
        l[v][u] -= w;
    }
    let reduced = l.into_iter().skip(1).map(|row| row.into_iter().skip(1).collect()).collect();
    Ok(det_bigint(reduced))
}

pub fn kirchhoff_evaluate_mod(g: &Multigraph, x: &[u64], p: u64) -> Result<u64> {
    let edges = check_len(g, x.len())?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidArgument("empty graph".into()));
    }
    let mut l = vec![vec![0u64; n]; n];
    for (&(u, v), &w) in edges.iter().zip(x) {
        if u == v {
            continue;
        }
        let w = w % p;
        let neg = (p - w) % p;
        l[u][u] = (l[u][u] + w) % p;
        l[v][v] = (l[v][v] + w) % p;
        l[u][v] = (l[u][v] + neg) % p;
        l[v][u] = (l[v][u] + neg) % p;
    }
    let mut reduced: Vec<Vec<u64>> = l.into_iter().skip(1).map(|row| row[1..].to_vec()).collect();
    Ok(det_mod(&mut reduced, p))
}

/// Symanzik polynomial as `det [[diag(x), A^T], [-A, 0]]` with `A` the
/// incidence matrix reduced at vertex 0.
pub fn symanzik_evaluate(g: &Multigraph, x: &[BigInt]) -> Result<BigInt> {
    let edges = check_len(g, x.len())?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidArgument("empty graph".into()));
    }
    let m = edges.len();
    let size = m + n - 1;
    let mut a = vec![vec![BigInt::zero(); size]; size];
    for (e, (&(u, v), w)) in edges.iter().zip(x).enumerate() {
        a[e][e] = w.clone();
        if u == v {
            continue;
        }
        for (vert, s) in [(u, -1i32), (v, 1)] {
            if vert == 0 {
                continue;
            }
            let row = m + vert - 1;
            a[e][row] = BigInt::from(s);
            a[row][e] = BigInt::from(-s);
        }
    }
    Ok(det_bigint(a))
}

/// Reusable evaluator of the Symanzik polynomial over `F_p`.
#[derive(Clone, Debug)]
pub struct SymanzikMod {
    p: u64,
    m: usize,
    template: Vec<Vec<u64>>,
}

impl SymanzikMod {
    pub fn new(g: &Multigraph, p: u64) -> Result<Self> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::InvalidArgument("empty graph".into()));
        }
        let edges = g.edges();
        let m = edges.len();
        let size = m + n - 1;
        let mut t = vec![vec![0u64; size]; size];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                continue;
            }
            for (vert, head) in [(u, false), (v, true)] {
                if vert == 0 {
                    continue;
                }
                let row = m + vert - 1;
                let (plus, minus) = (1 % p, (p - 1) % p);
                t[e][row] = if head { plus } else { minus };
                t[row][e] = if head { minus } else { plus };
            }
        }
        Ok(SymanzikMod { p, m, template: t })
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn eval(&self, x: &[u64]) -> u64 {
        debug_assert_eq!(x.len(), self.m);
        let mut a = self.template.clone();
        for (e, &w) in x.iter().enumerate() {
            a[e][e] = w % self.p;
        }
        det_mod(&mut a, self.p)
    }
}

pub fn symanzik_evaluate_mod(g: &Multigraph, x: &[u64], p: u64) -> Result<u64> {
    check_len(g, x.len())?;
    Ok(SymanzikMod::new(g, p)?.eval(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::families;
    use crate::oracle::trees::spanning_trees;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn all_ones_counts_trees() {
        let k4 = families::complete(4);
        assert_eq!(kirchhoff_evaluate(&k4, &ints(&[1; 6])).unwrap(), BigInt::from(16));
        assert_eq!(symanzik_evaluate(&k4, &ints(&[1; 6])).unwrap(), BigInt::from(16));
        assert_eq!(kirchhoff_evaluate_mod(&k4, &[1; 6], 7).unwrap(), 2);
    }

    #[test]
    fn dunce_cap_symanzik() {
        // edges in order: (0,1), (0,1), (0,2), (1,2)
        let g = families::dunce_cap();
        for x in [[2i64, 3, 5, 7], [0, 1, 4, 9], [-1, 2, 0, 3]] {
            let want = x[0] * x[1] + (x[0] + x[1]) * (x[2] + x[3]);
            assert_eq!(symanzik_evaluate(&g, &ints(&x)).unwrap(), BigInt::from(want));
        }
    }

    #[test]
    fn disconnected_is_zero() {
        let g = families::cycle(3).disjoint_union(&families::cycle(3));
        assert_eq!(kirchhoff_evaluate(&g, &ints(&[1; 6])).unwrap(), BigInt::zero());
        assert_eq!(symanzik_evaluate(&g, &ints(&[1; 6])).unwrap(), BigInt::zero());
    }

    #[test]
    fn wrong_length_rejected() {
        assert!(kirchhoff_evaluate(&families::cycle(3), &ints(&[1, 1])).is_err());
    }

    fn by_trees(g: &Multigraph, x: &[i64], complement: bool) -> BigInt {
        let m = g.edge_count();
        spanning_trees(g)
            .unwrap()
            .iter()
            .map(|t| {
                let mut inside = vec![false; m];
                for &e in t.edges() {
                    inside[e] = true;
                }
                (0..m)
                    .filter(|&e| inside[e] != complement)
                    .fold(BigInt::from(1), |acc, e| acc * x[e])
            })
            .sum()
    }

    proptest! {
        #[test]
        fn determinants_match_tree_sums(
            choice in 0usize..4,
            x in proptest::collection::vec(-4i64..5, 12),
            p in prop_oneof![Just(2u64), Just(3), Just(5), Just(7)],
        ) {
            let g = [families::complete(4), families::dunce_cap(), families::cycle(4).duplicate(2),
                     Multigraph::from_edges(4, &[(0, 1), (1, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap()][choice].clone();
            let x = &x[..g.edge_count()];
            let big = ints(x);
            let psi_t = by_trees(&g, x, false);
            let psi = by_trees(&g, x, true);
            prop_assert_eq!(kirchhoff_evaluate(&g, &big).unwrap(), psi_t.clone());
            prop_assert_eq!(symanzik_evaluate(&g, &big).unwrap(), psi.clone());
            let red: Vec<u64> = x.iter().map(|&a| a.rem_euclid(p as i64) as u64).collect();
            let modp = |v: &BigInt| -> u64 {
                let r = v % BigInt::from(p);
                let r: i64 = r.try_into().unwrap();
                r.rem_euclid(p as i64) as u64
            };
            prop_assert_eq!(kirchhoff_evaluate_mod(&g, &red, p).unwrap(), modp(&psi_t));
            prop_assert_eq!(symanzik_evaluate_mod(&g, &red, p).unwrap(), modp(&psi));
        }
    }
}
