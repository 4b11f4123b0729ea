//! Canonical labelling by colour refinement and individualisation, with
//! automorphism pruning of the search tree.
//!
//! Edge multiplicities act as edge colours and loop counts as vertex
//! colours. The canonical form is the smallest multiplicity matrix (upper
//! triangle, row-major) among the leaves of the search tree.

use std::cmp::Ordering;
use std::fmt;

use super::Multigraph;
use crate::error::{Error, Result};

/// Byte string identifying a multigraph up to isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        hex::decode(s)
            .map(CanonicalKey)
            .map_err(|e| Error::InvalidArgument(format!("bad canonical key `{s}`: {e}")))
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> Result<Multigraph> {
        let mut vals = Vec::new();
        let mut cur: u64 = 0;
        let mut shift = 0;
        for &b in &self.0 {
            cur |= ((b & 0x7f) as u64) << shift;
            if b & 0x80 == 0 {
                vals.push(cur);
                cur = 0;
                shift = 0;
            } else {
                shift += 7;
                if shift > 56 {
                    return Err(Error::InvalidArgument("malformed canonical key".into()));
                }
            }
        }
        let bad = || Error::InvalidArgument("malformed canonical key".into());
        let (&n, rest) = vals.split_first().ok_or_else(bad)?;
        let n = n as usize;
        if rest.len() != n * (n + 1) / 2 {
            return Err(bad());
        }
        let mut g = Multigraph::new(n);
        let mut it = rest.iter();
        for i in 0..n {
            for j in i..n {
                g.add_edges(i, j, *it.next().unwrap() as u32)?;
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
    /// The graph relabelled canonically.
    pub graph: Multigraph,
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    let n = g.vertex_count();
    if n == 0 {
        return CanonicalForm { key: encode(0, &[]), labeling: vec![], graph: g.clone() };
    }
    let mut s = Search { g, n, first: None, best: None, autos: Vec::new() };
    let init: Vec<u32> = {
        let sig: Vec<Vec<u32>> = (0..n).map(|v| vec![g.loops(v), g.degree(v)]).collect();
        rank(&sig)
    };
    let mut colors = init;
    s.refine(&mut colors);
    let mut path = Vec::new();
    s.search(colors, &mut path);
    let best = s.best.expect("search visits at least one leaf");
    let mut labeling = vec![0; n];
    for (i, &v) in best.order.iter().enumerate() {
        labeling[v] = i;
    }
    CanonicalForm { key: encode(n, &best.code), graph: g.permute(&labeling), labeling }
}

pub fn canonical_key(g: &Multigraph) -> CanonicalKey {
    canonical_form(g).key
}

pub fn is_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_key(a) == canonical_key(b)
}

fn encode(n: usize, code: &[u32]) -> CanonicalKey {
    let mut out = Vec::with_capacity(code.len() + 2);
    let mut push = |mut x: u64| loop {
        let b = (x & 0x7f) as u8;
        x >>= 7;
        if x == 0 {
            out.push(b);
            break;
        }
        out.push(b | 0x80);
    };
    push(n as u64);
    for &c in code {
        push(c as u64);
    }
    CanonicalKey(out)
}

/// Dense ranks of the signatures in sorted order.
fn rank<T: Ord>(sigs: &[T]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..sigs.len()).collect();
    idx.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
    let mut out = vec![0u32; sigs.len()];
    let mut r = 0u32;
    for w in 0..idx.len() {
        if w > 0 && sigs[idx[w]] != sigs[idx[w - 1]] {
            r += 1;
        }
        out[idx[w]] = r;
    }
    out
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

struct Leaf {
    code: Vec<u32>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Multigraph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn refine(&self, colors: &mut Vec<u32>) {
        let n = self.n;
        let mut cells = cell_count(colors);
        let mut sigs: Vec<Vec<u32>> = vec![Vec::new(); n];
        while cells < n {
            for v in 0..n {
                let sig = &mut sigs[v];
                sig.clear();
                let mut nb: Vec<(u32, u32)> = (0..n)
                    .filter(|&u| u != v && self.g.multiplicity(v, u) > 0)
                    .map(|u| (colors[u], self.g.multiplicity(v, u)))
                    .collect();
                nb.sort_unstable();
                sig.push(colors[v]);
                for (c, m) in nb {
                    sig.push(c);
                    sig.push(m);
                }
            }
            let next = rank(&sigs);
            let c = cell_count(&next);
            *colors = next;
            if c == cells {
                break;
            }
            cells = c;
        }
    }

    fn leaf_code(&self, order: &[usize]) -> Vec<u32> {
        let n = self.n;
        let mut code = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                code.push(self.g.multiplicity(order[i], order[j]));
            }
        }
        code
    }

    /// True when `x` lies in the orbit of an explored sibling under the
    /// known automorphisms that fix the current path pointwise.
    fn pruned(&self, x: usize, explored: &[usize], path: &[usize]) -> bool {
        if explored.is_empty() || self.autos.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        for gamma in &self.autos {
            if path.iter().all(|&v| gamma[v] == v) {
                for v in 0..self.n {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let rx = find(&mut parent, x);
        explored.iter().any(|&y| find(&mut parent, y) == rx)
    }

    fn record_auto(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; self.n];
        for i in 0..self.n {
            gamma[from[i]] = to[i];
        }
        if gamma.iter().enumerate().any(|(i, &g)| i != g) {
            self.autos.push(gamma);
        }
    }

    /// Returns `Some(level)` when the caller should abandon everything below
    /// depth `level`.
    fn search(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        let n = self.n;
        let cells = cell_count(&colors);
        if cells == n {
            let mut order = vec![0; n];
            for v in 0..n {
                order[colors[v] as usize] = v;
            }
            return self.leaf(order, path);
        }
        let mut size = vec![0usize; cells];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..cells).find(|&c| size[c] > 1).unwrap() as u32;
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let depth = path.len();
        let mut explored = Vec::new();
        for x in members {
            if self.pruned(x, &explored, path) {
                continue;
            }
            explored.push(x);
            let sig: Vec<(u32, bool)> = (0..n).map(|v| (colors[v], v != x)).collect();
            let mut next = rank(&sig);
            self.refine(&mut next);
            path.push(x);
            let r = self.search(next, path);
            path.pop();
            if let Some(level) = r {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, order: Vec<usize>, path: &[usize]) -> Option<usize> {
        let code = self.leaf_code(&order);
        let lcp = |other: &[usize]| path.iter().zip(other).take_while(|(a, b)| a == b).count();
        let Some(first) = &self.first else {
            let leaf = Leaf { code: code.clone(), order: order.clone(), path: path.to_vec() };
            self.first = Some(leaf);
            self.best = Some(Leaf { code, order, path: path.to_vec() });
            return None;
        };
        if code == first.code {
            let (to, level) = (first.order.clone(), lcp(&first.path));
            self.record_auto(&order, &to);
            return Some(level);
        }
        let best = self.best.as_ref().unwrap();
        match code.cmp(&best.code) {
            Ordering::Less => {
                self.best = Some(Leaf { code, order, path: path.to_vec() });
                None
            }
            Ordering::Equal => {
                let (to, level) = (best.order.clone(), lcp(&best.path));
                self.record_auto(&order, &to);
                Some(level)
            }
            Ordering::Greater => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::families;

    fn shuffled(g: &Multigraph, seed: u64) -> Multigraph {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        g.permute(&perm)
    }

    #[test]
    fn relabelling_preserves_key() {
        let graphs = [
            families::complete(6),
            families::octahedron(),
            families::prism(5),
            families::circulant(9, &[1, 2]),
            families::k4_abc(1, 1, 2),
            families::complete(5).duplicate(3),
            Multigraph::from_edges(4, &[(0, 0), (0, 1), (1, 2), (2, 3), (3, 3), (1, 2)]).unwrap(),
        ];
        for g in &graphs {
            let k = canonical_key(g);
            for seed in 0..8 {
                assert_eq!(canonical_key(&shuffled(g, seed)), k);
            }
        }
    }

    #[test]
    fn key_round_trips_to_canonical_graph() {
        let g = families::prism(4).duplicate(2);
        let f = canonical_form(&g);
        assert_eq!(f.key.to_graph().unwrap(), f.graph);
        assert_eq!(CanonicalKey::from_hex(&f.key.to_hex()).unwrap(), f.key);
        assert_eq!(g.permute(&f.labeling), f.graph);
    }

    #[test]
    fn distinguishes_non_isomorphic_graphs() {
        // C6 versus two triangles, and the two 3-regular graphs on 6 vertices
        let c6 = families::cycle(6);
        let two_triangles = families::cycle(3).disjoint_union(&families::cycle(3));
        assert!(!is_isomorphic(&c6, &two_triangles));
        let k33 = Multigraph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(!is_isomorphic(&k33, &families::prism(3)));
        // multiplicity placement matters
        assert!(!is_isomorphic(&families::k4_abc(1, 1, 2), &families::k4_abc(0, 2, 2)));
        assert!(is_isomorphic(&families::k4_abc(1, 2, 1), &families::k4_abc(2, 1, 1)));
    }

    #[test]
    fn large_symmetric_graph_is_fast() {
        let g = families::complete(12).duplicate(2);
        let k = canonical_key(&g);
        assert_eq!(canonical_key(&shuffled(&g, 3)), k);
    }
}
