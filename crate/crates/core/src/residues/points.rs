//! Zeros of the Symanzik polynomial over `F_p` and the c2 invariant.

use rayon::prelude::*;

use super::{Choices, Method, ResidueReport};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::oracle::linalg::is_prime;
use crate::oracle::{SymanzikMod, DEFAULT_BUDGET};

/// Number of points of `F_p^m` where the Symanzik polynomial vanishes.
pub fn point_count(g: &Multigraph, p: u64) -> Result<u128> {
    point_count_with_budget(g, p, DEFAULT_BUDGET)
}

pub fn point_count_with_budget(g: &Multigraph, p: u64, budget: u128) -> Result<u128> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let m = g.edge_count();
    if g.vertex_count() < 3 || m < 2 {
        return Err(Error::InvalidArgument("point counts need at least three vertices and two edges".into()));
    }
    // the polynomial is linear in the first variable, so each point of the
    // remaining coordinates costs two determinants
    let rest = m as u32 - 1;
    let steps = (p as u128).checked_pow(rest).unwrap_or(u128::MAX);
    if steps > budget {
        return Err(Error::BudgetExceeded { needed: steps, budget });
    }
    if !g.is_connected() {
        return Ok((p as u128).pow(m as u32));
    }
    let eval = SymanzikMod::new(g, p)?;
    // shard on the second coordinate
    let shards: Vec<u64> = (0..p).collect();
    let count: u128 = shards
        .into_par_iter()
        .map(|head| {
            let mut x = vec![0u64; m];
            if m > 1 {
                x[1] = head;
            }
            let mut total = 0u128;
            loop {
                x[0] = 0;
                let b = eval.eval(&x);
                x[0] = 1;
                let ab = eval.eval(&x);
                let a = (ab + p - b) % p;
                total += if a != 0 {
                    1
                } else if b == 0 {
                    p as u128
                } else {
                    0
                };
                // odometer over coordinates 2..m
                let mut i = 2;
                while i < m {
                    x[i] += 1;
                    if x[i] < p {
                        break;
                    }
                    x[i] = 0;
                    i += 1;
                }
                if i >= m {
                    break;
                }
            }
            total
        })
        .sum();
    Ok(count)
}

/// `(point_count / p^2) mod p`.
pub fn c2(g: &Multigraph, p: u64) -> Result<ResidueReport> {
    c2_with_budget(g, p, DEFAULT_BUDGET)
}

pub fn c2_with_budget(g: &Multigraph, p: u64, budget: u128) -> Result<ResidueReport> {
    let count = point_count_with_budget(g, p, budget)?;
    let p2 = (p * p) as u128;
    if count % p2 != 0 {
        return Err(Error::Divisibility(format!("point count {count} is not divisible by {p}^2")));
    }
    Ok(ResidueReport {
        modulus: p,
        residue: (count / p2 % p as u128) as u64,
        method: Method::PointCount,
        choices: Choices::None,
    })
}
