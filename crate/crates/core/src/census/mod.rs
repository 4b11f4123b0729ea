//! Graph files, a persistent invariant cache, batch computation and
//! TSV reports.

mod batch;
mod cache;
mod parse;
mod report;

pub use batch::{c2_task, compute_batch, InvariantRecord, TaskSet};
pub use cache::InvariantCache;
pub use parse::{parse_graph_file, parse_graphs, parse_graphs_lenient, GraphRecord};
pub use report::{group_by_invariant, render_groups, render_table};

use crate::multigraph::{families, regular_multigraphs_bounded, LoopPolicy, Multigraph};
use crate::structure::{cyclic_connectivity_check, three_vertex_cuts};

/// Largest vertex count for which [`builtin_records`] generates primitives.
pub const BUILTIN_PRIMITIVE_VERTICES: usize = 9;

/// Connected 4-regular graphs on `n` vertices that are cyclically
/// 6-connected and have no 3-vertex cut, in canonical-key order. Such
/// graphs are simple, so only simple graphs are generated.
pub fn primitive_graphs(n: usize) -> Vec<Multigraph> {
    regular_multigraphs_bounded(n, 4, LoopPolicy::Forbid, 1)
        .into_iter()
        .filter(|g| g.is_connected())
        .filter(|g| cyclic_connectivity_check(g, 6).is_ok_and(|c| c.connected))
        .filter(|g| three_vertex_cuts(g).is_empty())
        .collect()
}

/// Families that can be built without external census files: primitives
/// with up to [`BUILTIN_PRIMITIVE_VERTICES`] vertices named `L{loops}_{i}`,
/// zigzag circulants, complete graphs, doubled prisms and triangles.
pub fn builtin_records() -> Vec<GraphRecord> {
    let mut out = Vec::new();
    for n in 5..=BUILTIN_PRIMITIVE_VERTICES {
        for (i, g) in primitive_graphs(n).iter().enumerate() {
            out.push(GraphRecord::new(format!("L{}_{}", n - 2, i + 1), g));
        }
    }
    for n in 5..=12 {
        out.push(GraphRecord::new(format!("C{n}_12"), &families::circulant(n, &[1, 2])));
    }
    out.push(GraphRecord::new("K5", &families::complete(5)));
    out.push(GraphRecord::new("K7", &families::complete(7)));
    out.push(GraphRecord::new("K3x2", &families::cycle(3).duplicate(2)));
    out.push(GraphRecord::new("K5x2", &families::complete(5).duplicate(2)));
    for m in 3..=4 {
        out.push(GraphRecord::new(format!("Y{m}x2"), &families::prism(m).duplicate(2)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_counts() {
        let counts: Vec<usize> = (5..=8).map(|n| primitive_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 4]);
    }
}
