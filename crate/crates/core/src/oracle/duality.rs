//! Planar duals from a rotation system.

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Dual of a connected plane multigraph. `rotation[v]` lists the edge
/// instances at `v` (indices into [`Multigraph::edges`]) in cyclic order,
/// loops twice. Vertices of the dual are faces, numbered by first
/// appearance; each edge instance becomes one dual edge.
pub fn planar_dual(g: &Multigraph, rotation: &[Vec<usize>]) -> Result<Multigraph> {
    Ok(planar_dual_with_rotation(g, rotation)?.0)
}

/// [`planar_dual`] together with the rotation of the dual: the edges met
/// while walking around each face.
pub fn planar_dual_with_rotation(g: &Multigraph, rotation: &[Vec<usize>]) -> Result<(Multigraph, Vec<Vec<usize>>)> {
    let n = g.vertex_count();
    if rotation.len() != n {
        return Err(Error::InvalidArgument("one rotation per vertex".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = g.edges();
    let m = edges.len();
    // dart 2e sits at the smaller endpoint, 2e + 1 at the other
    let mut seen = vec![0u8; m];
    let mut next_at = vec![usize::MAX; 2 * m];
    for (v, rot) in rotation.iter().enumerate() {
        let mut darts = Vec::with_capacity(rot.len());
        for &e in rot {
            let &(a, b) = edges.get(e).ok_or_else(|| Error::InvalidArgument(format!("edge {e}")))?;
            let dart = if a == b {
                seen[e] += 1;
                2 * e + (seen[e] as usize - 1)
            } else if v == a {
                2 * e
            } else if v == b {
                2 * e + 1
            } else {
                return Err(Error::InvalidArgument(format!("edge {e} is not at vertex {v}")));
            };
            darts.push(dart);
        }
        if darts.len() != g.degree(v) as usize {
            return Err(Error::InvalidArgument(format!("rotation at {v} has the wrong length")));
        }
        for i in 0..darts.len() {
            next_at[darts[i]] = darts[(i + 1) % darts.len()];
        }
    }
    if next_at.contains(&usize::MAX) {
        return Err(Error::InvalidArgument("rotation misses a half-edge".into()));
    }
    let mut face = vec![usize::MAX; 2 * m];
    let mut walks: Vec<Vec<usize>> = Vec::new();
    for start in 0..2 * m {
        if face[start] != usize::MAX {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        while face[d] == usize::MAX {
            face[d] = walks.len();
            walk.push(d / 2);
            d = next_at[d ^ 1];
        }
        walks.push(walk);
    }
    let faces = walks.len();
    if n + faces != m + 2 {
        return Err(Error::InvalidArgument("rotation system is not planar".into()));
    }
    let mut dual = Multigraph::new(faces);
    for e in 0..m {
        dual.add_edge(face[2 * e], face[2 * e + 1])?;
    }
    // parallel dual edges take consecutive instances in edge order
    let dual_edges = dual.edges();
    let mut used = vec![0usize; dual_edges.len()];
    let mut instance = vec![0; m];
    for (e, slot) in instance.iter_mut().enumerate() {
        let (a, b) = (face[2 * e].min(face[2 * e + 1]), face[2 * e].max(face[2 * e + 1]));
        let first = dual_edges.partition_point(|&x| x < (a, b));
        *slot = first + used[first];
        used[first] += 1;
    }
    let dual_rotation = walks.into_iter().map(|w| w.into_iter().map(|e| instance[e]).collect()).collect();
    Ok((dual, dual_rotation))
}
