//! The Martin polynomial by self-loop stripping and vertex expansion.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::multigraph::{
    apply_transition, canonical_form, loop_transition_classes, CanonicalKey, Multigraph,
};

fn cache() -> &'static RwLock<HashMap<CanonicalKey, Polynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<CanonicalKey, Polynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `m(G, x)`, summing `(x - 2)^(c(P) - 1)` over transition systems `P`.
///
/// Every vertex must have even positive degree.
pub fn martin_polynomial(g: &Multigraph) -> Result<Polynomial> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidArgument("empty graph".into()));
    }
    for v in 0..g.vertex_count() {
        let d = g.degree(v);
        if d == 0 {
            return Err(Error::EdgelessComponent);
        }
        if d % 2 == 1 {
            return Err(Error::OddDegree(d));
        }
    }
    Ok(poly(g))
}

fn poly(g: &Multigraph) -> Polynomial {
    let comps = g.components();
    if comps.len() > 1 {
        let mut out = Polynomial::linear(-2).pow(comps.len() as u32 - 1);
        for c in comps {
            out = &out * &poly(&g.induced(&c));
        }
        return out;
    }
    let mut h = g.clone();
    let mut factor = Polynomial::one();
    for v in 0..h.vertex_count() {
        let l = h.loops(v);
        if l == 0 {
            continue;
        }
        let d = h.degree(v) as i64;
        if d == 2 * l as i64 {
            // a rose: x (x + 2) ... (x + 2l - 4)
            for j in 0..l as i64 - 1 {
                factor = &factor * &Polynomial::linear(2 * j);
            }
            return factor;
        }
        for j in 0..l as i64 {
            factor = &factor * &Polynomial::linear(d - 4 - 2 * j);
        }
        h.remove_edges(v, v, l).unwrap();
    }
    &factor * &expand(&h)
}

/// Connected, loopless, at least two vertices.
fn expand(h: &Multigraph) -> Polynomial {
    let form = canonical_form(h);
    if let Some(p) = cache().read().unwrap().get(&form.key) {
        return p.clone();
    }
    let g = &form.graph;
    let pivot = (0..g.vertex_count())
        .min_by_key(|&v| (g.neighbors(v).len(), v))
        .expect("nonempty graph");
    let mut out = Polynomial::zero();
    for (t, c) in loop_transition_classes(g, pivot).expect("pivot has no loops") {
        let child = apply_transition(g, pivot, &t).expect("transition of this pivot");
        out = &out + &poly(&child).scale(&BigInt::from(c));
    }
    cache().write().unwrap().insert(form.key, out.clone());
    out
}

/// `J(G, x) = x m(G, x + 2)`.
pub fn circuit_partition_polynomial(g: &Multigraph) -> Result<Polynomial> {
    let m = martin_polynomial(g)?;
    Ok(&Polynomial::from_i64(&[0, 1]) * &m.shift(2))
}

/// `4 (-1)^k / ((k-2)! (2k)!) * m'(G, 4 - 2k)` for a `2k`-regular graph,
/// defined for `k >= 2`.
pub fn invariant_from_polynomial(m: &Polynomial, k: u32) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::InvalidArgument(
            "the derivative normalisation needs degree at least 4".into(),
        ));
    }
    let fact = |n: u32| (2..=n).fold(BigInt::one(), |a, i| a * i);
    let at = BigInt::from(4 - 2 * k as i64);
    let slope = m.derivative().eval_int(&at);
    let sign = if k.is_multiple_of(2) { 4 } else { -4 };
    Ok(BigRational::new(slope * sign, fact(k - 2) * fact(2 * k)))
}
