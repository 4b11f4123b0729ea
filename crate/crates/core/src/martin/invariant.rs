//! The Martin invariant by vertex expansion over transition classes, with a
//! shared cache keyed by canonical form.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::closed_forms::closed_form_k4;
use crate::error::{Error, Result};
use crate::multigraph::{
    apply_transition, canonical_form, transition_count, transition_matrices, CanonicalKey,
    Multigraph,
};
use crate::structure::{edge_connectivity, least_nontrivial_cut, split_edge_cut, EXHAUSTIVE_CUT_LIMIT};

/// Exact value of a Martin invariant. Graphs with at least three vertices
/// have integer values; one and two vertices give reciprocals.
pub type MartinValue = BigRational;

/// How the expansion vertex is picked. The invariant does not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotPolicy {
    /// Fewest transition classes, ties to the lowest canonical label.
    FewestTransitions,
    /// Lowest canonical label.
    FirstVertex,
    /// Highest canonical label.
    LastVertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MartinOptions {
    pub pivot: PivotPolicy,
    /// Use the zero test for weak edge connectivity, the four-vertex closed
    /// form and the product rule over minimal edge cuts.
    pub shortcuts: bool,
}

impl Default for MartinOptions {
    fn default() -> Self {
        MartinOptions { pivot: PivotPolicy::FewestTransitions, shortcuts: true }
    }
}

/// Values of graphs with at least three vertices, by canonical key.
#[derive(Default)]
pub struct MartinCache {
    map: RwLock<HashMap<CanonicalKey, BigInt>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl MartinCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<BigInt> {
        let v = self.map.read().unwrap().get(key).cloned();
        match v {
            Some(_) => self.hits.fetch_add(1, Ordering::Relaxed),
            None => self.misses.fetch_add(1, Ordering::Relaxed),
        };
        v
    }

    pub fn insert(&self, key: CanonicalKey, value: BigInt) {
        self.map.write().unwrap().insert(key, value);
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(hits, misses)` of lookups so far.
    pub fn stats(&self) -> (u64, u64) {
        (self.hits.load(Ordering::Relaxed), self.misses.load(Ordering::Relaxed))
    }
}

pub struct MartinEngine {
    cache: Arc<MartinCache>,
    options: MartinOptions,
}

impl MartinEngine {
    pub fn new(options: MartinOptions) -> Self {
        Self::with_cache(Arc::new(MartinCache::new()), options)
    }

    pub fn with_cache(cache: Arc<MartinCache>, options: MartinOptions) -> Self {
        MartinEngine { cache, options }
    }

    /// Process-wide engine with default options.
    pub fn global() -> &'static MartinEngine {
        static ENGINE: OnceLock<MartinEngine> = OnceLock::new();
        ENGINE.get_or_init(|| MartinEngine::new(MartinOptions::default()))
    }

    pub fn cache(&self) -> &Arc<MartinCache> {
        &self.cache
    }

    pub fn invariant(&self, g: &Multigraph) -> Result<MartinValue> {
        let k = g.half_degree()?;
        let fact = |n: u32| (2..=n).fold(BigInt::one(), |a, i| a * i);
        match g.vertex_count() {
            1 => Ok(BigRational::new(BigInt::one() << k as usize, fact(2 * k))),
            2 if g.has_loops() => Ok(BigRational::zero()),
            2 => Ok(BigRational::new(BigInt::one(), fact(k))),
            _ => Ok(BigRational::from_integer(self.value(g, k)?)),
        }
    }

    /// `M(G^[r])` for `r = 1..=r_max`; for odd degree the entries are
    /// `r = 2, 4, ..., 2 r_max`.
    pub fn sequence(&self, g: &Multigraph, r_max: u32) -> Result<Vec<MartinValue>> {
        if r_max == 0 {
            return Err(Error::InvalidArgument("r_max must be positive".into()));
        }
        let d = g.regular_degree().ok_or(Error::NotRegular)?;
        let step = if d % 2 == 1 { 2 } else { 1 };
        (1..=r_max).map(|i| self.invariant(&g.duplicate(i * step))).collect()
    }

    fn value(&self, g: &Multigraph, k: u32) -> Result<BigInt> {
        if g.has_loops() {
            return Ok(BigInt::zero());
        }
        if g.vertex_count() == 3 {
            return Ok(BigInt::one());
        }
        let form = canonical_form(g);
        if let Some(v) = self.cache.get(&form.key) {
            return Ok(v);
        }
        let v = self.compute(&form.graph, k)?;
        self.cache.insert(form.key, v.clone());
        Ok(v)
    }

    fn compute(&self, g: &Multigraph, k: u32) -> Result<BigInt> {
        let n = g.vertex_count();
        if self.options.shortcuts {
            if edge_connectivity(g)? < 2 * k {
                return Ok(BigInt::zero());
            }
            if n == 4 {
                let (a, b, c) = (g.multiplicity(0, 1), g.multiplicity(0, 2), g.multiplicity(0, 3));
                return Ok(closed_form_k4(a, b, c));
            }
            if n <= EXHAUSTIVE_CUT_LIMIT {
                if let Some(cut) = least_nontrivial_cut(g, 2 * k)? {
                    let (a, b) = split_edge_cut(g, &cut)?;
                    let kf = (2..=k).fold(BigInt::one(), |acc, i| acc * i);
                    let va = self.value(&a, k)?;
                    if va.is_zero() {
                        return Ok(va);
                    }
                    return Ok(kf * va * self.value(&b, k)?);
                }
            }
        }
        let pivot = self.pivot(g)?;
        let mut sum = BigInt::zero();
        for (t, c) in transition_matrices(g, pivot)? {
            let child = apply_transition(g, pivot, &t)?;
            let v = self.value(&child, k)?;
            if !v.is_zero() {
                sum += v * BigInt::from(c);
            }
        }
        Ok(sum)
    }

    fn pivot(&self, g: &Multigraph) -> Result<usize> {
        let n = g.vertex_count();
        Ok(match self.options.pivot {
            PivotPolicy::FirstVertex => 0,
            PivotPolicy::LastVertex => n - 1,
            PivotPolicy::FewestTransitions => {
                let mut best = (usize::MAX, 0);
                for v in 0..n {
                    let c = transition_count(g, v)?;
                    if c < best.0 {
                        best = (c, v);
                    }
                }
                best.1
            }
        })
    }
}

/// `M(G)` using the process-wide engine.
pub fn martin_invariant(g: &Multigraph) -> Result<MartinValue> {
    MartinEngine::global().invariant(g)
}

/// `M(G^[r])` for `r = 1..=r_max` (even `r` only for odd degree) using the
/// process-wide engine.
pub fn martin_sequence(g: &Multigraph, r_max: u32) -> Result<Vec<MartinValue>> {
    MartinEngine::global().sequence(g, r_max)
}

/// Integer value of `M(G)` for graphs with at least three vertices.
pub fn martin_integer(g: &Multigraph) -> Result<BigInt> {
    let v = martin_invariant(g)?;
    if !v.is_integer() {
        return Err(Error::InvalidArgument(format!("M(G) = {v} is not an integer")));
    }
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::families;

    fn int(v: i64) -> MartinValue {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn reference_values() {
        assert_eq!(martin_invariant(&families::complete(5)).unwrap(), int(6));
        assert_eq!(martin_invariant(&families::octahedron()).unwrap(), int(14));
        assert_eq!(martin_invariant(&families::complete(5).duplicate(2)).unwrap(), int(2016));
        assert_eq!(martin_invariant(&families::octahedron().duplicate(2)).unwrap(), int(84096));
        assert_eq!(martin_invariant(&families::cycle(3).duplicate(3)).unwrap(), int(1));
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(martin_invariant(&families::rose(2)).unwrap(), BigRational::new(4.into(), 24.into()));
        assert_eq!(martin_invariant(&families::dipole(6)).unwrap(), BigRational::new(1.into(), 6.into()));
        let mut looped = families::dipole(2);
        looped.add_edge(0, 0).unwrap();
        looped.add_edge(1, 1).unwrap();
        assert_eq!(martin_invariant(&looped).unwrap(), int(0));
    }

    #[test]
    fn zero_for_loops_and_weak_connectivity() {
        let two = families::complete(5).disjoint_union(&families::complete(5));
        assert_eq!(martin_invariant(&two).unwrap(), int(0));
        let mut bridge = families::cycle(3).duplicate(2).disjoint_union(&families::cycle(3).duplicate(2));
        bridge.remove_edges(0, 1, 1).unwrap();
        bridge.remove_edges(3, 4, 1).unwrap();
        bridge.add_edge(0, 3).unwrap();
        bridge.add_edge(1, 4).unwrap();
        assert_eq!(edge_connectivity(&bridge).unwrap(), 2);
        assert_eq!(martin_invariant(&bridge).unwrap(), int(0));
    }

    #[test]
    fn pivot_and_shortcuts_do_not_change_values() {
        let graphs = [
            families::complete(7),
            families::circulant(7, &[1, 2]),
            families::prism(3).duplicate(2),
            families::cycle(5).duplicate(2),
            families::k4_abc(1, 1, 2),
        ];
        for g in &graphs {
            let base = martin_invariant(g).unwrap();
            for pivot in [PivotPolicy::FirstVertex, PivotPolicy::LastVertex] {
                for shortcuts in [false, true] {
                    let e = MartinEngine::new(MartinOptions { pivot, shortcuts });
                    assert_eq!(e.invariant(g).unwrap(), base, "{g:?} {pivot:?} {shortcuts}");
                }
            }
        }
    }

    #[test]
    fn sequence_of_prism_uses_even_multiplicities() {
        let s = martin_sequence(&families::prism(3), 1).unwrap();
        assert_eq!(s, vec![int(384)]);
        let s = martin_sequence(&families::complete(5), 2).unwrap();
        assert_eq!(s, vec![int(6), int(2016)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(martin_invariant(&families::prism(3)), Err(Error::OddDegree(3)));
        assert_eq!(martin_invariant(&Multigraph::new(3)), Err(Error::EdgelessComponent));
        let irregular = Multigraph::from_edges(3, &[(0, 1), (1, 2), (1, 2)]).unwrap();
        assert_eq!(martin_invariant(&irregular), Err(Error::NotRegular));
    }
}
