//! Spanning trees, partitions of edge sets into spanning trees, and
//! tree/forest partitions of marked graphs.
//!
//! Edge instances are indexed as in [`Multigraph::edges`]; parallel copies
//! are distinct objects throughout.

use std::collections::HashMap;

use super::{Budget, Oracle};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Edge-instance indices of a spanning tree, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningTree(Vec<usize>);

impl SpanningTree {
    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A multigraph with two red vertices `a`, `b` and one blue vertex `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedGraph {
    pub graph: Multigraph,
    pub red: [usize; 2],
    pub blue: usize,
}

impl MarkedGraph {
    pub fn new(graph: Multigraph, red: [usize; 2], blue: usize) -> Result<Self> {
        let n = graph.vertex_count();
        for v in [red[0], red[1], blue] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if red[0] == red[1] || red[0] == blue || red[1] == blue {
            return Err(Error::InvalidArgument("marked vertices must be distinct".into()));
        }
        Ok(MarkedGraph { graph, red, blue })
    }
}

/// Union-find with undo, no path compression.
#[derive(Clone)]
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n], log: Vec::new() }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Joins the roots `a != b`.
    fn link(&mut self, a: usize, b: usize) {
        let (a, b) = if self.size[a] < self.size[b] { (b, a) } else { (a, b) };
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.log.push(b);
    }

    fn undo(&mut self) {
        let b = self.log.pop().expect("undo without link");
        let a = self.parent[b];
        self.size[a] -= self.size[b];
        self.parent[b] = b;
    }
}

/// Non-loop edges in breadth-first order from vertex 0 so that trees close
/// early; pairs are `(instance index, u, v)`.
fn search_order(g: &Multigraph) -> Vec<(usize, usize, usize)> {
    let edges = g.edges();
    let n = g.vertex_count();
    let mut rank = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    let mut next = 0;
    for s in 0..n {
        if rank[s] != usize::MAX {
            continue;
        }
        rank[s] = next;
        next += 1;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for (w, _) in g.neighbors(u) {
                if rank[w] == usize::MAX {
                    rank[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut out: Vec<_> = edges
        .iter()
        .enumerate()
        .filter(|(_, (u, v))| u != v)
        .map(|(i, &(u, v))| (i, u, v))
        .collect();
    out.sort_by_key(|&(i, u, v)| (rank[u].max(rank[v]), rank[u].min(rank[v]), i));
    out
}

fn factorial_u128(n: u32) -> Result<u128> {
    (2..=n as u128).try_fold(1u128, |a, i| a.checked_mul(i)).ok_or_else(|| Error::TooLarge(format!("{n}!")))
}

impl Oracle {
    pub fn spanning_trees(&self, g: &Multigraph) -> Result<Vec<SpanningTree>> {
        if g.vertex_count() == 0 {
            return Err(Error::InvalidArgument("empty graph".into()));
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let order = search_order(g);
        let need = g.vertex_count() - 1;
        let mut budget = Budget::new(self.budget);
        let mut dsu = Dsu::new(g.vertex_count());
        let mut chosen = Vec::new();
        let mut out = Vec::new();
        fn rec(
            i: usize,
            order: &[(usize, usize, usize)],
            need: usize,
            dsu: &mut Dsu,
            chosen: &mut Vec<usize>,
            out: &mut Vec<SpanningTree>,
            budget: &mut Budget,
        ) -> Result<()> {
            budget.tick()?;
            if chosen.len() == need {
                let mut t = chosen.clone();
                t.sort_unstable();
                out.push(SpanningTree(t));
                return Ok(());
            }
            if order.len() - i < need - chosen.len() {
                return Ok(());
            }
            let (e, u, v) = order[i];
            let (ru, rv) = (dsu.find(u), dsu.find(v));
            if ru != rv {
                dsu.link(ru, rv);
                chosen.push(e);
                rec(i + 1, order, need, dsu, chosen, out, budget)?;
                chosen.pop();
                dsu.undo();
            }
            rec(i + 1, order, need, dsu, chosen, out, budget)
        }
        rec(0, &order, need, &mut dsu, &mut chosen, &mut out, &mut budget)?;
        out.sort();
        Ok(out)
    }

    /// Partitions of all edge instances into `k` spanning trees.
    pub fn count_tree_partitions(&self, g: &Multigraph, k: u32, ordered: bool) -> Result<u128> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be positive".into()));
        }
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::InvalidArgument("empty graph".into()));
        }
        let m = g.edge_count();
        if g.has_loops() || m != k as usize * (n - 1) {
            return Ok(0);
        }
        if n == 1 {
            return Ok(1);
        }
        let order = search_order(g);
        let mut state = PartState {
            parts: vec![Dsu::new(n); k as usize],
            fill: vec![0; k as usize],
            caps: vec![n - 1; k as usize],
            groups: vec![(0, k as usize)],
            used: vec![0],
            forbidden: None,
            budget: Budget::new(self.budget),
        };
        let unordered = state.count(&order, 0)?;
        if ordered {
            unordered.checked_mul(factorial_u128(k)?).ok_or_else(|| Error::TooLarge("ordered count".into()))
        } else {
            Ok(unordered)
        }
    }

    /// `N_{r,r}(H)`: ordered partitions of the edge instances into `r`
    /// spanning trees followed by `r` spanning forests with two components,
    /// each separating the red vertices from the blue one.
    pub fn count_tree_forest_partitions(&self, h: &MarkedGraph, r: u32) -> Result<u128> {
        if r == 0 {
            return Err(Error::InvalidArgument("r must be positive".into()));
        }
        let g = &h.graph;
        let n = g.vertex_count();
        let r = r as usize;
        if g.has_loops() || g.edge_count() != r * (2 * n - 3) {
            return Ok(0);
        }
        let order = search_order(g);
        let mut caps = vec![n - 1; r];
        caps.extend(vec![n - 2; r]);
        let mut state = PartState {
            parts: vec![Dsu::new(n); 2 * r],
            fill: vec![0; 2 * r],
            caps,
            groups: vec![(0, r), (r, 2 * r)],
            used: vec![0, 0],
            forbidden: Some((r, h.red, h.blue)),
            budget: Budget::new(self.budget),
        };
        let unordered = state.count(&order, 0)?;
        let rf = factorial_u128(r as u32)?;
        unordered
            .checked_mul(rf * rf)
            .ok_or_else(|| Error::TooLarge("ordered count".into()))
    }

    /// Coefficient of `prod_e x_e^r` in the `kr`-th power of the Kirchhoff
    /// polynomial: ordered lists of `kr` spanning trees covering every edge
    /// instance exactly `r` times.
    pub fn diagonal_coefficient(&self, g: &Multigraph, k: u32, r: u32) -> Result<u128> {
        if k == 0 || r == 0 {
            return Err(Error::InvalidArgument("k and r must be positive".into()));
        }
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::InvalidArgument("empty graph".into()));
        }
        let m = g.edge_count();
        if g.has_loops() || m != k as usize * (n - 1) || !g.is_connected() {
            return Ok(0);
        }
        if m > 128 {
            return Err(Error::TooLarge(format!("{m} edges")));
        }
        if n == 1 {
            return Ok(1);
        }
        let trees: Vec<u128> = self
            .spanning_trees(g)?
            .iter()
            .map(|t| t.edges().iter().fold(0u128, |acc, &e| acc | 1 << e))
            .collect();
        if r > 255 {
            return Err(Error::TooLarge(format!("r = {r}")));
        }
        let mut memo: HashMap<Vec<u8>, u128> = HashMap::new();
        let mut budget = Budget::new(self.budget);
        fn rec(
            caps: &mut Vec<u8>,
            trees: &[u128],
            memo: &mut HashMap<Vec<u8>, u128>,
            budget: &mut Budget,
        ) -> Result<u128> {
            let support = caps
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .fold(0u128, |acc, (e, _)| acc | 1 << e);
            if support == 0 {
                return Ok(1);
            }
            if let Some(&v) = memo.get(caps.as_slice()) {
                return Ok(v);
            }
            let mut total = 0u128;
            for &t in trees {
                budget.tick()?;
                if t & !support != 0 {
                    continue;
                }
                for e in 0..caps.len() {
                    if t >> e & 1 == 1 {
                        caps[e] -= 1;
                    }
                }
                let sub = rec(caps, trees, memo, budget);
                for e in 0..caps.len() {
                    if t >> e & 1 == 1 {
                        caps[e] += 1;
                    }
                }
                total = total
                    .checked_add(sub?)
                    .ok_or_else(|| Error::TooLarge("diagonal coefficient".into()))?;
            }
            memo.insert(caps.clone(), total);
            Ok(total)
        }
        let mut caps = vec![r as u8; m];
        rec(&mut caps, &trees, &mut memo, &mut budget)
    }
}

/// Backtracking state shared by the partition counters. Parts in one group
/// are interchangeable; a new part of a group is opened only after the
/// previous ones, so each unordered assignment is visited once.
struct PartState {
    parts: Vec<Dsu>,
    fill: Vec<usize>,
    caps: Vec<usize>,
    groups: Vec<(usize, usize)>,
    used: Vec<usize>,
    /// Parts from this index on are forests that must keep the blue vertex
    /// apart from both red vertices.
    forbidden: Option<(usize, [usize; 2], usize)>,
    budget: Budget,
}

impl PartState {
    fn count(&mut self, order: &[(usize, usize, usize)], i: usize) -> Result<u128> {
        self.budget.tick()?;
        if i == order.len() {
            return Ok(1);
        }
        let (_, u, v) = order[i];
        let mut total = 0u128;
        for g in 0..self.groups.len() {
            let (lo, hi) = self.groups[g];
            let open = self.used[g];
            for j in lo..(lo + open + 1).min(hi) {
                if self.fill[j] == self.caps[j] {
                    continue;
                }
                let d = &self.parts[j];
                let (ru, rv) = (d.find(u), d.find(v));
                if ru == rv {
                    continue;
                }
                if let Some((start, red, blue)) = self.forbidden {
                    if j >= start {
                        let rb = d.find(blue);
                        let touches_blue = ru == rb || rv == rb;
                        let touches_red = red.iter().any(|&x| {
                            let rx = d.find(x);
                            rx == ru || rx == rv
                        });
                        if touches_blue && touches_red {
                            continue;
                        }
                    }
                }
                self.parts[j].link(ru, rv);
                self.fill[j] += 1;
                let opened = j == lo + open;
                if opened {
                    self.used[g] += 1;
                }
                let sub = self.count(order, i + 1);
                if opened {
                    self.used[g] -= 1;
                }
                self.fill[j] -= 1;
                self.parts[j].undo();
                total += sub?;
            }
        }
        Ok(total)
    }
}

pub fn spanning_trees(g: &Multigraph) -> Result<Vec<SpanningTree>> {
    Oracle::default().spanning_trees(g)
}

pub fn count_tree_partitions(g: &Multigraph, k: u32, ordered: bool) -> Result<u128> {
    Oracle::default().count_tree_partitions(g, k, ordered)
}

pub fn count_tree_forest_partitions(h: &MarkedGraph, r: u32) -> Result<u128> {
    Oracle::default().count_tree_forest_partitions(h, r)
}

pub fn diagonal_coefficient(g: &Multigraph, k: u32, r: u32) -> Result<u128> {
    Oracle::default().diagonal_coefficient(g, k, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::martin::martin_integer;
    use crate::multigraph::{families, regular_multigraphs, LoopPolicy};

    #[test]
    fn tree_counts() {
        assert_eq!(spanning_trees(&families::cycle(3)).unwrap().len(), 3);
        assert_eq!(spanning_trees(&families::complete(4)).unwrap().len(), 16);
        assert_eq!(spanning_trees(&families::complete(5)).unwrap().len(), 125);
        assert_eq!(spanning_trees(&families::dipole(5)).unwrap().len(), 5);
        assert_eq!(spanning_trees(&Multigraph::new(1)).unwrap().len(), 1);
        let two = families::cycle(3).disjoint_union(&families::cycle(3));
        assert_eq!(spanning_trees(&two), Err(Error::Disconnected));
    }

    #[test]
    fn trees_are_trees() {
        let g = families::cycle(4).duplicate(2);
        let trees = spanning_trees(&g).unwrap();
        assert_eq!(trees.len(), 4 * 8);
        let edges = g.edges();
        for t in &trees {
            assert_eq!(t.len(), 3);
            let sub = Multigraph::from_edges(4, &t.edges().iter().map(|&e| edges[e]).collect::<Vec<_>>()).unwrap();
            assert!(sub.is_connected());
        }
    }

    #[test]
    fn tree_partition_examples() {
        assert_eq!(count_tree_partitions(&families::complete(4), 2, false).unwrap(), 6);
        assert_eq!(count_tree_partitions(&families::complete(4), 2, true).unwrap(), 12);
        for k in 1..5 {
            assert_eq!(count_tree_partitions(&families::dipole(k), k, false).unwrap(), 1);
        }
        assert_eq!(count_tree_partitions(&Multigraph::new(1), 3, true).unwrap(), 1);
        assert_eq!(count_tree_partitions(&families::complete(4), 3, true).unwrap(), 0);
    }

    #[test]
    fn ordered_partitions_match_martin_six_regular() {
        for g in regular_multigraphs(5, 6, LoopPolicy::Forbid) {
            if !g.is_connected() {
                continue;
            }
            let m = martin_integer(&g).unwrap();
            let n = count_tree_partitions(&g.delete_vertex(0).unwrap(), 3, true).unwrap();
            assert_eq!(num_bigint::BigInt::from(n), m * 6, "{g}");
        }
    }

    #[test]
    fn diagonal_examples() {
        for k in 1..=3u32 {
            for r in 1..=3u32 {
                let want = factorial_u128(k * r).unwrap() / factorial_u128(r).unwrap().pow(k);
                assert_eq!(diagonal_coefficient(&families::dipole(k), k, r).unwrap(), want);
            }
        }
        assert_eq!(diagonal_coefficient(&families::complete(4), 2, 1).unwrap(), 12);
        assert_eq!(diagonal_coefficient(&families::complete(4), 2, 2).unwrap(), 756);
        assert_eq!(diagonal_coefficient(&families::complete(4), 3, 1).unwrap(), 0);
    }

    #[test]
    fn tree_forest_examples() {
        let tri = MarkedGraph::new(families::cycle(3), [0, 1], 2).unwrap();
        assert_eq!(count_tree_forest_partitions(&tri, 1).unwrap(), 1);
        let mut looped = families::dunce_cap();
        looped.add_edge(2, 2).unwrap();
        let h = MarkedGraph::new(looped, [0, 1], 2).unwrap();
        assert_eq!(count_tree_forest_partitions(&h, 1).unwrap(), 0);
        // K3^[2] at r = 2: tree pairs cover every edge once, forests likewise
        let h = MarkedGraph::new(families::cycle(3).duplicate(2), [0, 1], 2).unwrap();
        assert_eq!(count_tree_forest_partitions(&h, 2).unwrap(), 8);
        assert!(MarkedGraph::new(families::cycle(3), [0, 0], 2).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Oracle { budget: 10 };
        assert!(matches!(
            tight.spanning_trees(&families::complete(5)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
