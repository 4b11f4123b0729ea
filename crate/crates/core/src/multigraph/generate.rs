//! Exhaustive generation of regular multigraphs up to isomorphism.

use std::collections::BTreeMap;

use super::{canonical_form, Multigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopPolicy {
    Allow,
    Forbid,
}

/// All `degree`-regular multigraphs on `n` vertices, one per isomorphism
/// class, in canonical-key order. Disconnected graphs are included.
pub fn regular_multigraphs(n: usize, degree: u32, loops: LoopPolicy) -> Vec<Multigraph> {
    regular_multigraphs_bounded(n, degree, loops, degree)
}

/// As [`regular_multigraphs`], with at most `max_multiplicity` parallel
/// edges between two distinct vertices. `1` gives simple graphs, plus loops
/// when allowed.
pub fn regular_multigraphs_bounded(
    n: usize,
    degree: u32,
    loops: LoopPolicy,
    max_multiplicity: u32,
) -> Vec<Multigraph> {
    let mut found = BTreeMap::new();
    if n == 0 {
        return Vec::new();
    }
    let mut g = Multigraph::new(n);
    let mut rem = vec![degree; n];
    let allow = loops == LoopPolicy::Allow;
    // vertex 0 carries the most loops and its row is non-increasing, which
    // every isomorphism class can be relabelled to satisfy
    rec(&mut g, &mut rem, 0, 0, allow, max_multiplicity, &mut |g| {
        let f = canonical_form(g);
        found.entry(f.key).or_insert(f.graph);
    });
    found.into_values().collect()
}

fn rec(
    g: &mut Multigraph,
    rem: &mut Vec<u32>,
    i: usize,
    j: usize,
    loops: bool,
    cap: u32,
    emit: &mut dyn FnMut(&Multigraph),
) {
    let n = g.vertex_count();
    if i == n {
        emit(g);
        return;
    }
    if j == n {
        if rem[i] == 0 {
            rec(g, rem, i + 1, i + 1, loops, cap, emit);
        }
        return;
    }
    if j == i {
        let max = if loops { rem[i] / 2 } else { 0 };
        let loop_cap = if i > 0 { g.loops(0) } else { max };
        for l in 0..=max.min(loop_cap) {
            if rem[i] - 2 * l > rem[i + 1..].iter().sum::<u32>() {
                continue;
            }
            if l > 0 {
                g.add_edges(i, i, l).unwrap();
            }
            rem[i] -= 2 * l;
            rec(g, rem, i, j + 1, loops, cap, emit);
            rem[i] += 2 * l;
            if l > 0 {
                g.remove_edges(i, i, l).unwrap();
            }
        }
        return;
    }
    if rem[i] > rem[j..].iter().sum::<u32>() {
        return;
    }
    let lo = if j + 1 == n { rem[i] } else { 0 };
    let mut hi = rem[i].min(rem[j]).min(cap);
    if i == 0 && j > 1 {
        hi = hi.min(g.multiplicity(0, j - 1));
    }
    if lo > hi {
        return;
    }
    for x in lo..=hi {
        if x > 0 {
            g.add_edges(i, j, x).unwrap();
        }
        rem[i] -= x;
        rem[j] -= x;
        rec(g, rem, i, j + 1, loops, cap, emit);
        rem[i] += x;
        rem[j] += x;
        if x > 0 {
            g.remove_edges(i, j, x).unwrap();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // C4 and two digons
        assert_eq!(regular_multigraphs(4, 2, LoopPolicy::Forbid).len(), 2);
        // digon and two one-loop vertices
        assert_eq!(regular_multigraphs(2, 2, LoopPolicy::Allow).len(), 2);
        assert_eq!(regular_multigraphs(3, 4, LoopPolicy::Forbid).len(), 1);
        // K4, the 4-cycle with two opposite doubled edges, two triple bonds
        assert_eq!(regular_multigraphs(4, 3, LoopPolicy::Forbid).len(), 3);
    }

    #[test]
    fn bounded_multiplicity() {
        // K5 is the only simple 4-regular graph on five vertices
        assert_eq!(regular_multigraphs_bounded(5, 4, LoopPolicy::Forbid, 1).len(), 1);
        let all = regular_multigraphs(6, 4, LoopPolicy::Forbid);
        let simple = regular_multigraphs_bounded(6, 4, LoopPolicy::Forbid, 1);
        assert_eq!(simple.len(), all.iter().filter(|g| g.edges().windows(2).all(|w| w[0] != w[1])).count());
    }

    #[test]
    fn every_output_is_regular() {
        for g in regular_multigraphs(5, 4, LoopPolicy::Allow) {
            assert_eq!(g.regular_degree(), Some(4));
        }
    }
}
