//! c2 residues of decompletions computed from the Martin invariant of a
//! duplicated completion, or from tree/forest partitions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{Choices, Method, ResidueReport};
use crate::error::{Error, Result};
use crate::martin::martin_integer;
use crate::multigraph::Multigraph;
use crate::oracle::linalg::{inv_mod, is_prime};
use crate::oracle::{count_tree_forest_partitions, MarkedGraph};

fn check_four_regular(g: &Multigraph) -> Result<()> {
    match g.regular_degree() {
        Some(4) => Ok(()),
        Some(d) => Err(Error::WrongDegree { expected: 4, found: d }),
        None => Err(Error::NotRegular),
    }
}

/// `M / (3p) mod p` for `M = M(G^[p-1])`. For `p = 3` the division by 9 is
/// exact; otherwise `M / p` is multiplied by the inverse of 3.
pub fn residue_from_martin_value(m: &BigInt, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pb = BigInt::from(p);
    let reduce = |v: &BigInt| -> u64 { v.mod_floor(&pb).to_u64().expect("residue fits") };
    if p == 3 {
        let (q, r) = m.div_rem(&BigInt::from(9));
        if !r.is_zero() {
            return Err(Error::Divisibility(format!("{m} is not divisible by 9")));
        }
        return Ok(reduce(&q));
    }
    let (q, r) = m.div_rem(&pb);
    if !r.is_zero() {
        return Err(Error::Divisibility(format!("{m} is not divisible by {p}")));
    }
    Ok(reduce(&q) * inv_mod(3, p) % p)
}

/// c2 of any decompletion of the 4-regular graph `g` from `M(G^[p-1])`.
/// Needs at least six vertices.
pub fn c2_from_martin(g: &Multigraph, p: u64) -> Result<ResidueReport> {
    check_four_regular(g)?;
    if g.vertex_count() < 6 {
        return Err(Error::InvalidArgument("the Martin bridge needs at least six vertices".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let m = martin_integer(&g.duplicate(p as u32 - 1))?;
    Ok(ResidueReport {
        modulus: p,
        residue: residue_from_martin_value(&m, p)?,
        method: Method::MartinBridge,
        choices: Choices::None,
    })
}

/// The three neighbours of `w` other than `v`, for a 4-regular `g` with a
/// single edge `vw`.
pub fn forest_marks(g: &Multigraph, v: usize, w: usize) -> Result<[usize; 3]> {
    check_four_regular(g)?;
    let n = g.vertex_count();
    for x in [v, w] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
        if g.loops(x) > 0 {
            return Err(Error::SelfLoop(x));
        }
    }
    if v == w || g.multiplicity(v, w) == 0 {
        return Err(Error::NotAdjacent(v, w));
    }
    if g.multiplicity(v, w) != 1 {
        return Err(Error::InvalidArgument(format!("{v} and {w} are joined by a multiple edge")));
    }
    let others: Vec<(usize, u32)> = g.neighbors(w).into_iter().filter(|&(x, _)| x != v).collect();
    if others.len() != 3 {
        return Err(Error::InvalidArgument(format!("the other neighbours of {w} are not distinct")));
    }
    Ok([others[0].0, others[1].0, others[2].0])
}

/// c2 of `G \ v` at `p` as `N_{r,r}(G^[r] \ {v, w}) mod p`, `r = p - 1`,
/// with `blue` one of the three other neighbours of `w`.
pub fn c2_from_trees_forests_with_blue(
    g: &Multigraph,
    v: usize,
    w: usize,
    blue: usize,
    p: u64,
) -> Result<ResidueReport> {
    let marks = forest_marks(g, v, w)?;
    if g.vertex_count() < 5 {
        return Err(Error::InvalidArgument("the forest bridge needs at least five vertices".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !marks.contains(&blue) {
        return Err(Error::InvalidArgument(format!("{blue} is not a neighbour of {w}")));
    }
    let r = p as u32 - 1;
    let (h, old) = g.duplicate(r).remove_vertices(&[v, w])?;
    let new = |x: usize| old.iter().position(|&o| o == x).expect("kept vertex");
    let red: Vec<usize> = marks.iter().filter(|&&x| x != blue).map(|&x| new(x)).collect();
    let marked = MarkedGraph::new(h, [red[0], red[1]], new(blue))?;
    let count = count_tree_forest_partitions(&marked, r)?;
    Ok(ResidueReport {
        modulus: p,
        residue: (count % p as u128) as u64,
        method: Method::TreeForestBridge,
        choices: Choices::Marks { v, w, red: [marks[0], marks[1], marks[2]].into_iter().filter(|&x| x != blue).collect(), blue },
    })
}

/// As [`c2_from_trees_forests_with_blue`] with the largest mark blue.
pub fn c2_from_trees_forests(g: &Multigraph, v: usize, w: usize, p: u64) -> Result<ResidueReport> {
    let marks = forest_marks(g, v, w)?;
    c2_from_trees_forests_with_blue(g, v, w, marks[2], p)
}
