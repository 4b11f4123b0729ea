//! Undirected multigraphs with self-loops, stored as a dense symmetric
//! multiplicity matrix whose diagonal holds loop counts.

mod canon;
pub mod families;
mod generate;
mod transition;

use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_key, is_isomorphic, CanonicalForm, CanonicalKey};
pub use generate::{regular_multigraphs, regular_multigraphs_bounded, LoopPolicy};
pub use transition::{
    apply_transition, loop_transition_classes, transition_count, transition_matrices,
    TransitionMatrix,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    adj: Vec<u32>,
}

impl Multigraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Multigraph { n, adj: vec![0; n * n] }
    }

    /// Builds a graph from edge instances; `(v, v)` is a self-loop and
    /// repeated pairs add multiplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.add_edges(u, v, 1)
    }

    pub fn add_edges(&mut self, u: usize, v: usize, count: u32) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        self.adj[u * self.n + v] += count;
        if u != v {
            self.adj[v * self.n + u] += count;
        }
        Ok(())
    }

    /// Removes `count` copies of the edge `uv` (a loop when `u == v`).
    pub fn remove_edges(&mut self, u: usize, v: usize, count: u32) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        let have = self.adj[u * self.n + v];
        if have < count {
            return Err(Error::InvalidArgument(format!(
                "cannot remove {count} copies of edge {u}-{v}, only {have} present"
            )));
        }
        self.adj[u * self.n + v] -= count;
        if u != v {
            self.adj[v * self.n + u] -= count;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edge instances, loops included.
    pub fn edge_count(&self) -> usize {
        let mut total = 0u64;
        for u in 0..self.n {
            for v in u..self.n {
                total += self.adj[u * self.n + v] as u64;
            }
        }
        total as usize
    }

    /// Number of edges between distinct vertices `u` and `v`; the loop
    /// count when `u == v`.
    #[inline]
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.adj[u * self.n + v]
    }

    #[inline]
    pub fn loops(&self, v: usize) -> u32 {
        self.adj[v * self.n + v]
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.loops(v) > 0)
    }

    /// Degree with each loop counted twice.
    pub fn degree(&self, v: usize) -> u32 {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter().sum::<u32>() + row[v]
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// The common degree, or `None` for irregular or empty graphs.
    pub fn regular_degree(&self) -> Option<u32> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        if (1..self.n).any(|v| self.degree(v) != d) {
            None
        } else {
            Some(d)
        }
    }

    /// Half the common degree of an even-regular graph.
    pub fn half_degree(&self) -> Result<u32> {
        let d = self.regular_degree().ok_or(Error::NotRegular)?;
        if d % 2 == 1 {
            return Err(Error::OddDegree(d));
        }
        if d == 0 {
            return Err(Error::EdgelessComponent);
        }
        Ok(d / 2)
    }

    /// Distinct neighbours of `v` other than `v`, with multiplicities.
    pub fn neighbors(&self, v: usize) -> Vec<(usize, u32)> {
        (0..self.n)
            .filter(|&u| u != v && self.multiplicity(v, u) > 0)
            .map(|u| (u, self.multiplicity(v, u)))
            .collect()
    }

    /// All edge instances as `(u, v)` with `u <= v`, sorted, each repeated
    /// by its multiplicity.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u..self.n {
                for _ in 0..self.multiplicity(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `G^[r]`: every edge replaced by `r` parallel copies.
    pub fn duplicate(&self, r: u32) -> Self {
        Multigraph { n: self.n, adj: self.adj.iter().map(|&m| m * r).collect() }
    }

    /// Deletes `v` and its incident edges; labels above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        Ok(self.remove_vertices(&[v])?.0)
    }

    /// Deletes a set of vertices. Returns the remaining graph and, for each
    /// new label, the old label it came from.
    pub fn remove_vertices(&self, gone: &[usize]) -> Result<(Self, Vec<usize>)> {
        for &v in gone {
            self.check(v)?;
        }
        let keep: Vec<usize> = (0..self.n).filter(|v| !gone.contains(v)).collect();
        Ok((self.induced(&keep), keep))
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let m = vertices.len();
        let mut g = Multigraph::new(m);
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                g.adj[i * m + j] = self.multiplicity(u, v);
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut g = Multigraph::new(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[perm[u] * self.n + perm[v]] = self.adj[u * self.n + v];
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Self {
        let n = self.n + other.n;
        let mut g = Multigraph::new(n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[u * n + v] = self.multiplicity(u, v);
            }
        }
        for u in 0..other.n {
            for v in 0..other.n {
                g.adj[(u + self.n) * n + v + self.n] = other.multiplicity(u, v);
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in 0..self.n {
                    if !seen[v] && v != u && self.multiplicity(u, v) > 0 {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// True if some vertex has neither loops nor neighbours.
    pub fn has_edgeless_component(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    /// Row-major copy of the multiplicity matrix.
    pub fn matrix(&self) -> &[u32] {
        &self.adj
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}; {})", self.n, self)
    }
}

/// Space-separated endpoint list, the same shape as the graph-file format.
impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{u} {v}")?;
        }
        Ok(())
    }
}
