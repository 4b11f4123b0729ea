//! Batch computation of invariants over graph records.

use rayon::prelude::*;

use super::cache::InvariantCache;
use super::parse::GraphRecord;
use crate::error::{Error, Result};
use crate::martin::{martin_invariant, martin_polynomial};
use crate::multigraph::{canonical_key, Multigraph};
use crate::oracle::DEFAULT_BUDGET;
use crate::residues::{c2_from_martin, c2_with_budget, permanent_square_residue};

/// Which invariants to compute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskSet {
    pub martin: bool,
    /// `M(G^[r])` for `r = 1..=rmax` (`r = 2, 4, ...` for odd degree).
    pub sequence: Option<u32>,
    pub polynomial: bool,
    pub permanent: bool,
    pub c2: Vec<u64>,
    /// Largest number of points swept by a c2 point count.
    pub point_budget: u128,
}

impl Default for TaskSet {
    fn default() -> Self {
        TaskSet {
            martin: false,
            sequence: None,
            polynomial: false,
            permanent: false,
            c2: Vec::new(),
            point_budget: DEFAULT_BUDGET,
        }
    }
}

impl TaskSet {
    /// From a comma-separated list of `martin`, `sequence`, `polynomial`,
    /// `permanent`, `c2`.
    pub fn parse(list: &str, rmax: u32, primes: &[u64]) -> Result<Self> {
        let mut t = TaskSet::default();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match name {
                "martin" => t.martin = true,
                "sequence" => {
                    if rmax == 0 {
                        return Err(Error::InvalidArgument("rmax must be positive".into()));
                    }
                    t.sequence = Some(rmax)
                }
                "polynomial" => t.polynomial = true,
                "permanent" => t.permanent = true,
                "c2" => t.c2 = primes.to_vec(),
                _ => return Err(Error::InvalidArgument(format!("unknown task `{name}`"))),
            }
        }
        Ok(t)
    }
}

/// Results for one graph. Values are decimal strings; failures of single
/// tasks are kept in `errors` while the others still run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvariantRecord {
    pub name: String,
    pub key: String,
    pub vertices: usize,
    pub degree: Option<u32>,
    pub martin: Option<String>,
    pub sequence: Vec<String>,
    pub polynomial: Option<String>,
    pub permanent: Option<String>,
    pub c2: Vec<(u64, String)>,
    pub errors: Vec<String>,
}

impl InvariantRecord {
    /// The Martin invariant followed by the rest of the sequence.
    pub fn martin_data(&self) -> Vec<String> {
        if !self.sequence.is_empty() {
            return self.sequence.clone();
        }
        self.martin.iter().cloned().collect()
    }
}

fn martin_value(g: &Multigraph, cache: &InvariantCache) -> Result<String> {
    let key = canonical_key(g).to_hex();
    cache.get_or_compute(&key, "martin", || Ok(martin_invariant(g)?.to_string()))
}

/// c2 at `p`: for 4-regular graphs with at least six vertices through the
/// Martin invariant of `G^[p-1]`, for smaller 4-regular graphs by counting
/// points of `G \ 0`, and for every other graph by counting points of `G`.
pub fn c2_task(g: &Multigraph, p: u64, point_budget: u128) -> Result<u64> {
    if g.regular_degree() == Some(4) {
        if g.vertex_count() >= 6 {
            return Ok(c2_from_martin(g, p)?.residue);
        }
        return Ok(c2_with_budget(&g.delete_vertex(0)?, p, point_budget)?.residue);
    }
    Ok(c2_with_budget(g, p, point_budget)?.residue)
}

fn compute_one(rec: &GraphRecord, tasks: &TaskSet, cache: &InvariantCache) -> InvariantRecord {
    let mut out = InvariantRecord { name: rec.name.clone(), ..Default::default() };
    let g = match rec.graph() {
        Ok(g) => g,
        Err(e) => {
            out.errors.push(format!("graph: {e}"));
            return out;
        }
    };
    let key = canonical_key(&g).to_hex();
    out.key = key.clone();
    out.vertices = g.vertex_count();
    out.degree = g.regular_degree();
    let mut note = |task: &str, e: Error| out.errors.push(format!("{task}: {e}"));
    let mut martin = None;
    if tasks.martin {
        match martin_value(&g, cache) {
            Ok(v) => martin = Some(v),
            Err(e) => note("martin", e),
        }
    }
    let mut sequence = Vec::new();
    if let Some(rmax) = tasks.sequence {
        let step = if out.degree.is_some_and(|d| d % 2 == 1) { 2 } else { 1 };
        match (1..=rmax).map(|r| martin_value(&g.duplicate(r * step), cache)).collect() {
            Ok(seq) => sequence = seq,
            Err(e) => note("sequence", e),
        }
    }
    let mut polynomial = None;
    if tasks.polynomial {
        match cache.get_or_compute(&key, "polynomial", || Ok(martin_polynomial(&g)?.to_string())) {
            Ok(v) => polynomial = Some(v),
            Err(e) => note("polynomial", e),
        }
    }
    let mut permanent = None;
    if tasks.permanent {
        match cache.get_or_compute(&key, "permanent", || Ok(permanent_square_residue(&g)?.to_string())) {
            Ok(v) => permanent = Some(v),
            Err(e) => note("permanent", e),
        }
    }
    let mut residues = Vec::new();
    for &p in &tasks.c2 {
        match cache.get_or_compute(&key, &format!("c2:{p}"), || Ok(c2_task(&g, p, tasks.point_budget)?.to_string())) {
            Ok(v) => residues.push((p, v)),
            Err(e) => note(&format!("c2:{p}"), e),
        }
    }
    out.martin = martin;
    out.sequence = sequence;
    out.polynomial = polynomial;
    out.permanent = permanent;
    out.c2 = residues;
    out
}

/// Computes `tasks` for every record, in input order. A failing record or
/// task does not stop the batch.
pub fn compute_batch(records: &[GraphRecord], tasks: &TaskSet, cache: &InvariantCache) -> Vec<InvariantRecord> {
    records.par_iter().map(|r| compute_one(r, tasks, cache)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::families;

    fn rec(name: &str, g: &Multigraph) -> GraphRecord {
        GraphRecord::new(name, g)
    }

    #[test]
    fn k5_sequence() {
        let cache = InvariantCache::in_memory();
        let t = TaskSet::parse("sequence", 2, &[]).unwrap();
        let out = compute_batch(&[rec("K5", &families::complete(5))], &t, &cache);
        assert_eq!(out[0].sequence, vec!["6", "2016"]);
        assert_eq!(out[0].martin_data(), vec!["6", "2016"]);
    }

    #[test]
    fn circulants() {
        let cache = InvariantCache::in_memory();
        let recs: Vec<_> = (5..=9).map(|n| rec(&format!("C{n}"), &families::circulant(n, &[1, 2]))).collect();
        let out = compute_batch(&recs, &TaskSet::parse("martin", 1, &[]).unwrap(), &cache);
        let m: Vec<_> = out.iter().map(|r| r.martin.clone().unwrap()).collect();
        assert_eq!(m, vec!["6", "14", "34", "78", "178"]);
    }

    #[test]
    fn rerun_hits_the_cache() {
        let cache = InvariantCache::in_memory();
        let t = TaskSet::parse("martin,sequence,polynomial,permanent,c2", 2, &[2, 3]).unwrap();
        let recs = [rec("K5", &families::complete(5)), rec("oct", &families::octahedron())];
        let first = compute_batch(&recs, &t, &cache);
        let (_, misses) = cache.stats();
        let second = compute_batch(&recs, &t, &cache);
        assert_eq!(first, second);
        assert_eq!(cache.stats().1, misses);
        assert_eq!(first[1].c2, vec![(2, "1".to_string()), (3, "2".to_string())]);
        assert_eq!(first[0].c2, vec![(2, "1".to_string()), (3, "2".to_string())]);
        assert_eq!(first[1].permanent.as_deref(), Some("1 mod 3"));
    }

    #[test]
    fn failures_are_isolated() {
        let cache = InvariantCache::in_memory();
        let t = TaskSet::parse("martin,polynomial", 1, &[]).unwrap();
        let recs = [rec("prism", &families::prism(3)), rec("K5", &families::complete(5))];
        let out = compute_batch(&recs, &t, &cache);
        assert_eq!(out[0].errors.len(), 2);
        assert_eq!(out[1].martin.as_deref(), Some("6"));
        assert_eq!(out[1].polynomial.as_deref(), Some("15x^2 + 36x"));
    }

    #[test]
    fn odd_degree_sequence_uses_even_duplicates() {
        let cache = InvariantCache::in_memory();
        let t = TaskSet::parse("sequence", 1, &[]).unwrap();
        let out = compute_batch(&[rec("prism", &families::prism(3))], &t, &cache);
        assert_eq!(out[0].sequence, vec!["384"]);
    }

    #[test]
    fn point_budget_applies() {
        let cache = InvariantCache::in_memory();
        let mut t = TaskSet::parse("c2", 1, &[2]).unwrap();
        t.point_budget = 10;
        let out = compute_batch(&[rec("K4", &families::complete(4))], &t, &cache);
        assert!(out[0].errors[0].contains("budget"));
    }

    #[test]
    fn unknown_task() {
        assert!(TaskSet::parse("martin,foo", 1, &[]).is_err());
    }
}
