//! Edge cuts, cyclic connectivity, decomposition along minimal edge cuts,
//! and the vertex-cut operations that preserve the Martin invariant.

use crate::error::{Error, Result};
use crate::multigraph::{canonical_form, CanonicalKey, Multigraph};

/// Largest vertex count for which cuts are enumerated exhaustively.
pub const EXHAUSTIVE_CUT_LIMIT: usize = 22;

/// A bipartition of the vertices. `side` is sorted and contains vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub side: Vec<usize>,
    pub size: u32,
}

impl EdgeCut {
    pub fn other_side(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|v| !self.side.contains(v)).collect()
    }

    pub fn is_trivial(&self, n: usize) -> bool {
        self.side.len() < 2 || n - self.side.len() < 2
    }
}

/// Minimum number of edges whose removal disconnects the graph
/// (Stoer-Wagner). Loops never count.
pub fn edge_connectivity(g: &Multigraph) -> Result<u32> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidArgument("edge connectivity needs two vertices".into()));
    }
    let mut w: Vec<Vec<u64>> = (0..n)
        .map(|u| (0..n).map(|v| if u == v { 0 } else { g.multiplicity(u, v) as u64 }).collect())
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    while alive.len() > 1 {
        let m = alive.len();
        let mut added = vec![false; m];
        let mut conn = vec![0u64; m];
        let mut prev = 0;
        let mut last = 0;
        for step in 0..m {
            let mut sel = usize::MAX;
            for i in 0..m {
                if !added[i] && (sel == usize::MAX || conn[i] > conn[sel]) {
                    sel = i;
                }
            }
            if step == m - 1 {
                best = best.min(conn[sel]);
            }
            added[sel] = true;
            prev = last;
            last = sel;
            for i in 0..m {
                if !added[i] {
                    conn[i] += w[alive[sel]][alive[i]];
                }
            }
        }
        let (s, t) = (alive[prev], alive[last]);
        for &x in &alive {
            if x != s && x != t {
                w[s][x] += w[t][x];
                w[x][s] = w[s][x];
            }
        }
        alive.remove(last);
    }
    Ok(best as u32)
}

/// Crossing-edge counts for every vertex subset, indexed by bitmask.
fn cut_table(g: &Multigraph) -> Result<Vec<u32>> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_CUT_LIMIT {
        return Err(Error::TooLarge(format!(
            "exhaustive cut enumeration is limited to {EXHAUSTIVE_CUT_LIMIT} vertices, got {n}"
        )));
    }
    let outer: Vec<u32> = (0..n).map(|v| g.degree(v) - 2 * g.loops(v)).collect();
    let mut cut = vec![0u32; 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let mut inner = 0;
        let mut r = rest;
        while r != 0 {
            let u = r.trailing_zeros() as usize;
            inner += g.multiplicity(low, u);
            r &= r - 1;
        }
        cut[mask] = cut[rest] + outer[low] - 2 * inner;
    }
    Ok(cut)
}

fn mask_vertices(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// All cuts with at least two vertices on each side and at most `max_size`
/// crossing edges, ordered by size and then by the side containing vertex 0.
pub fn nontrivial_cuts(g: &Multigraph, max_size: u32) -> Result<Vec<EdgeCut>> {
    let n = g.vertex_count();
    if n < 4 {
        return Ok(Vec::new());
    }
    let cut = cut_table(g)?;
    let full = (1usize << n) - 1;
    let mut out = Vec::new();
    for mask in (1..full).step_by(2) {
        let k = mask.count_ones() as usize;
        if k >= 2 && n - k >= 2 && cut[mask] <= max_size {
            out.push((cut[mask], mask));
        }
    }
    out.sort_unstable();
    Ok(out.into_iter().map(|(size, m)| EdgeCut { side: mask_vertices(m, n), size }).collect())
}

/// Lexicographically least nontrivial cut of exactly `size` edges.
pub fn least_nontrivial_cut(g: &Multigraph, size: u32) -> Result<Option<EdgeCut>> {
    let n = g.vertex_count();
    if n < 4 {
        return Ok(None);
    }
    let cut = cut_table(g)?;
    let full = (1usize << n) - 1;
    for mask in (1..full).step_by(2) {
        let k = mask.count_ones() as usize;
        if k >= 2 && n - k >= 2 && cut[mask] == size {
            return Ok(Some(EdgeCut { side: mask_vertices(mask, n), size }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCheck {
    pub connected: bool,
    /// A smallest nontrivial cut when `connected` is false.
    pub witness: Option<EdgeCut>,
}

/// Whether every nontrivial cut of a regular graph has at least
/// `threshold` edges.
pub fn cyclic_connectivity_check(g: &Multigraph, threshold: u32) -> Result<CyclicCheck> {
    g.regular_degree().ok_or(Error::NotRegular)?;
    let witness = nontrivial_cuts(g, threshold.saturating_sub(1))?.into_iter().next();
    Ok(CyclicCheck { connected: witness.is_none(), witness })
}

/// Splits along a cut: each side keeps its vertices (in label order) and
/// gains one new last vertex that absorbs the crossing edges.
/// The first graph keeps `cut.side`.
pub fn split_edge_cut(g: &Multigraph, cut: &EdgeCut) -> Result<(Multigraph, Multigraph)> {
    let n = g.vertex_count();
    if cut.side.is_empty() || cut.side.len() >= n || cut.side.iter().any(|&v| v >= n) {
        return Err(Error::InvalidArgument("cut side must be a proper nonempty vertex subset".into()));
    }
    let other = cut.other_side(n);
    Ok((contract_side(g, &cut.side, &other), contract_side(g, &other, &cut.side)))
}

fn contract_side(g: &Multigraph, keep: &[usize], gone: &[usize]) -> Multigraph {
    let mut h = Multigraph::new(keep.len() + 1);
    let x = keep.len();
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i) {
            let m = g.multiplicity(u, v);
            if m > 0 {
                h.add_edges(i, j, m).unwrap();
            }
        }
        let out: u32 = gone.iter().map(|&v| g.multiplicity(u, v)).sum();
        if out > 0 {
            h.add_edges(i, x, out).unwrap();
        }
    }
    h
}

/// Factors of the decomposition along nontrivial cuts of size `2k`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Canonical forms of the factors, sorted by key.
    pub factors: Vec<Multigraph>,
    pub keys: Vec<CanonicalKey>,
}

/// Decomposes a `2k`-edge-connected `2k`-regular graph, always splitting
/// along the least nontrivial `2k`-cut.
pub fn decompose(g: &Multigraph) -> Result<Decomposition> {
    decompose_with(g, &mut |_| 0)
}

/// Like [`decompose`], with `choose` picking which of the available
/// nontrivial `2k`-cuts to split next.
pub fn decompose_with(
    g: &Multigraph,
    choose: &mut dyn FnMut(&[EdgeCut]) -> usize,
) -> Result<Decomposition> {
    let k = g.half_degree()?;
    if g.vertex_count() >= 2 && edge_connectivity(g)? < 2 * k {
        return Err(Error::InvalidArgument(format!("graph is not {}-edge-connected", 2 * k)));
    }
    let mut pending = vec![g.clone()];
    let mut done = Vec::new();
    while let Some(h) = pending.pop() {
        let cuts = nontrivial_cuts(&h, 2 * k)?;
        if cuts.is_empty() {
            done.push(canonical_form(&h));
            continue;
        }
        let pick = choose(&cuts).min(cuts.len() - 1);
        let (a, b) = split_edge_cut(&h, &cuts[pick])?;
        pending.push(a);
        pending.push(b);
    }
    done.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(Decomposition {
        keys: done.iter().map(|f| f.key.clone()).collect(),
        factors: done.into_iter().map(|f| f.graph).collect(),
    })
}

/// True when every factor of the decomposition has three vertices.
pub fn is_totally_decomposable(g: &Multigraph) -> Result<bool> {
    Ok(decompose(g)?.factors.iter().all(|f| f.vertex_count() == 3))
}

/// Edges of `g` with at least one endpoint in `vertices`; the usual way to
/// describe one side of a vertex cut.
pub fn side_edges(g: &Multigraph, vertices: &[usize]) -> Multigraph {
    let n = g.vertex_count();
    let mut e = Multigraph::new(n);
    for u in 0..n {
        for v in u..n {
            if vertices.contains(&u) || vertices.contains(&v) {
                let m = g.multiplicity(u, v);
                if m > 0 {
                    e.add_edges(u, v, m).unwrap();
                }
            }
        }
    }
    e
}

/// Checks that `side_one` is a sub-multigraph of `g` whose complement meets
/// it only at `cut`, and returns the complement.
fn complement_side(g: &Multigraph, cut: &[usize], side_one: &Multigraph) -> Result<Multigraph> {
    let n = g.vertex_count();
    if side_one.vertex_count() != n {
        return Err(Error::InvalidArgument("edge side must live on the same vertex set".into()));
    }
    for &c in cut {
        if c >= n {
            return Err(Error::VertexOutOfRange { vertex: c, n });
        }
    }
    for (i, &a) in cut.iter().enumerate() {
        if cut[i + 1..].contains(&a) {
            return Err(Error::InvalidArgument("cut vertices must be distinct".into()));
        }
    }
    let mut rest = g.clone();
    for u in 0..n {
        for v in u..n {
            let m = side_one.multiplicity(u, v);
            if m > 0 {
                rest.remove_edges(u, v, m).map_err(|_| {
                    Error::InvalidArgument("edge side is not a subgraph of the graph".into())
                })?;
            }
        }
    }
    for v in 0..n {
        if !cut.contains(&v) && side_one.degree(v) > 0 && rest.degree(v) > 0 {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is outside the cut but meets both edge sides"
            )));
        }
    }
    Ok(rest)
}

fn close_triangle(e: &Multigraph, cut: [usize; 3], total: u32) -> Result<Multigraph> {
    let d: Vec<i64> = cut.iter().map(|&c| e.degree(c) as i64).collect();
    let pair = |i: usize, j: usize, l: usize| -> Result<u32> {
        let twice = d[i] + d[j] - d[l];
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::InvalidArgument(
                "cut-vertex degrees admit no closing triangle".into(),
            ));
        }
        Ok((twice / 2) as u32)
    };
    let (n01, n02, n12) = (pair(0, 1, 2)?, pair(0, 2, 1)?, pair(1, 2, 0)?);
    let n = e.vertex_count();
    let keep: Vec<usize> = (0..n).filter(|&v| cut.contains(&v) || e.degree(v) > 0).collect();
    let mut h = e.induced(&keep);
    let at = |v: usize| keep.iter().position(|&x| x == v).unwrap();
    for (a, b, m) in [(0, 1, n01), (0, 2, n02), (1, 2, n12)] {
        if m > 0 {
            h.add_edges(at(cut[a]), at(cut[b]), m)?;
        }
    }
    if h.regular_degree() != Some(total) {
        return Err(Error::InvalidArgument("closing the triangle does not give a regular graph".into()));
    }
    Ok(h)
}

/// Splits a regular graph at a 3-vertex cut. `side_one` holds the edges of
/// one side; each side is closed by edges among the cut vertices so that it
/// becomes regular again. Vertices of each output keep their label order.
pub fn split_three_vertex_cut(
    g: &Multigraph,
    cut: [usize; 3],
    side_one: &Multigraph,
) -> Result<(Multigraph, Multigraph)> {
    let degree = g.regular_degree().ok_or(Error::NotRegular)?;
    let side_two = complement_side(g, &cut, side_one)?;
    Ok((close_triangle(side_one, cut, degree)?, close_triangle(&side_two, cut, degree)?))
}

/// Reattaches the edges of `side_one` at a 4-vertex cut by a fixed-point-free
/// involution `sigma` of the cut positions: an endpoint `cut[i]` of such an
/// edge becomes `cut[sigma[i]]`.
pub fn twist(
    g: &Multigraph,
    cut: [usize; 4],
    side_one: &Multigraph,
    sigma: [usize; 4],
) -> Result<Multigraph> {
    if (0..4).any(|i| sigma[i] >= 4 || sigma[i] == i || sigma[sigma[i]] != i) {
        return Err(Error::InvalidArgument("sigma must be a double transposition".into()));
    }
    let side_two = complement_side(g, &cut, side_one)?;
    for i in 0..4 {
        if side_one.degree(cut[i]) != side_one.degree(cut[sigma[i]]) {
            return Err(Error::InvalidArgument(
                "twisted cut vertices must have equal degree into the side".into(),
            ));
        }
    }
    let n = g.vertex_count();
    let mut map: Vec<usize> = (0..n).collect();
    for i in 0..4 {
        map[cut[i]] = cut[sigma[i]];
    }
    let mut out = side_two;
    for u in 0..n {
        for v in u..n {
            let m = side_one.multiplicity(u, v);
            if m > 0 {
                out.add_edges(map[u], map[v], m)?;
            }
        }
    }
    Ok(out)
}

/// A 3-vertex cut together with one component left after deleting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeVertexCut {
    pub cut: [usize; 3],
    pub component: Vec<usize>,
}

/// A 4-vertex cut together with one component left after deleting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourVertexCut {
    pub cut: [usize; 4],
    pub component: Vec<usize>,
}

/// Calls `found` with every `k`-set of vertices whose removal disconnects
/// the graph, once per remaining component.
fn vertex_cuts(g: &Multigraph, k: usize, found: &mut dyn FnMut(&[usize], Vec<usize>)) {
    fn rec(g: &Multigraph, k: usize, start: usize, cut: &mut Vec<usize>, found: &mut dyn FnMut(&[usize], Vec<usize>)) {
        if cut.len() == k {
            let (h, map) = g.remove_vertices(cut).unwrap();
            let comps = h.components();
            if comps.len() >= 2 {
                for comp in comps {
                    found(cut, comp.iter().map(|&v| map[v]).collect());
                }
            }
            return;
        }
        for v in start..g.vertex_count() {
            cut.push(v);
            rec(g, k, v + 1, cut, found);
            cut.pop();
        }
    }
    rec(g, k, 0, &mut Vec::with_capacity(k), found);
}

/// Every 3-vertex set whose removal disconnects the graph, paired with each
/// resulting component.
pub fn three_vertex_cuts(g: &Multigraph) -> Vec<ThreeVertexCut> {
    let mut out = Vec::new();
    vertex_cuts(g, 3, &mut |c, component| out.push(ThreeVertexCut { cut: [c[0], c[1], c[2]], component }));
    out
}

/// Every 4-vertex set whose removal disconnects the graph, paired with each
/// resulting component.
pub fn four_vertex_cuts(g: &Multigraph) -> Vec<FourVertexCut> {
    let mut out = Vec::new();
    vertex_cuts(g, 4, &mut |c, component| out.push(FourVertexCut { cut: [c[0], c[1], c[2], c[3]], component }));
    out
}
