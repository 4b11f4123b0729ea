//! Named graph constructions.

use super::Multigraph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Multigraph {
    let mut g = Multigraph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v).expect("family edges are in range");
    }
    g
}

pub fn complete(n: usize) -> Multigraph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Multigraph {
    circulant(n, &[1])
}

/// `C^n_{s1,s2,...}`: vertex `i` joined to `i + s` for every step `s`.
/// A step of `n/2` yields a double edge.
pub fn circulant(n: usize, steps: &[usize]) -> Multigraph {
    build(n, steps.iter().flat_map(|&s| (0..n).map(move |i| (i, (i + s) % n))))
}

/// `C_m x K_2`: vertices `0..m` and `m..2m` form two cycles, `i` joined to `i+m`.
pub fn prism(m: usize) -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((m + i, m + (i + 1) % m));
        edges.push((i, m + i));
    }
    build(2 * m, edges)
}

pub fn octahedron() -> Multigraph {
    circulant(6, &[1, 2])
}

/// One vertex with `k` self-loops.
pub fn rose(k: u32) -> Multigraph {
    let mut g = Multigraph::new(1);
    g.add_edges(0, 0, k).unwrap();
    g
}

/// Two vertices joined by `m` parallel edges.
pub fn dipole(m: u32) -> Multigraph {
    let mut g = Multigraph::new(2);
    g.add_edges(0, 1, m).unwrap();
    g
}

/// `K_4` with multiplicities `n01 = n23 = a`, `n02 = n13 = b`, `n03 = n12 = c`.
pub fn k4_abc(a: u32, b: u32, c: u32) -> Multigraph {
    let mut g = Multigraph::new(4);
    for (u, v, m) in [(0, 1, a), (2, 3, a), (0, 2, b), (1, 3, b), (0, 3, c), (1, 2, c)] {
        if m > 0 {
            g.add_edges(u, v, m).unwrap();
        }
    }
    g
}

/// Triangle with one doubled side.
pub fn dunce_cap() -> Multigraph {
    build(3, [(0, 1), (0, 1), (0, 2), (1, 2)])
}
