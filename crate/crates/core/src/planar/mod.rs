//! Planar arrangement of segment soups: fragmentation, cleanup and the
//! angular order of edges around each vertex.

mod biconnected;
mod fragment;
mod intersect;

pub use biconnected::edge_blocks;
pub use fragment::fragment;
pub use intersect::{intersect_pair, Crossing};

use crate::chain::{CellArray, VertexBuffer};

/// Planar straight-line graph: 2D vertices and canonical edges.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearGraph {
    pub vertices: VertexBuffer,
    pub edges: CellArray,
}

impl LinearGraph {
    /// Drops unused vertices, keeping the relative order of the others.
    pub fn compacted(vertices: &VertexBuffer, edges: CellArray) -> Self {
        let mut used = vec![false; vertices.len()];
        for &v in edges.cells().iter().flatten() {
            used[v] = true;
        }
        let mut remap = vec![usize::MAX; vertices.len()];
        let mut coords = Vec::new();
        for (i, &u) in used.iter().enumerate() {
            if u {
                remap[i] = coords.len() / vertices.dim();
                coords.extend_from_slice(vertices.point(i));
            }
        }
        let edges = CellArray::new(
            1,
            edges
                .cells()
                .iter()
                .map(|e| {
                    let (a, b) = (remap[e[0]], remap[e[1]]);
                    vec![a.min(b), a.max(b)]
                })
                .collect(),
        );
        Self {
            vertices: VertexBuffer::new(vertices.dim(), coords).expect("subset of a valid buffer"),
            edges,
        }
    }
}

/// Removes edges outside every biconnected block with at least two edges
/// (bridges and dangling trees). Returns the reduced graph and the indices
/// of the removed input edges.
pub fn biconnected_filter(graph: &LinearGraph) -> (LinearGraph, Vec<usize>) {
    let blocks = edge_blocks(graph.vertices.len(), &graph.edges);
    let mut size = vec![0usize; blocks.iter().copied().max().map_or(0, |m| m + 1)];
    for &b in &blocks {
        size[b] += 1;
    }
    let mut kept = Vec::new();
    let mut removed = Vec::new();
    for (e, &b) in blocks.iter().enumerate() {
        if size[b] >= 2 {
            kept.push(graph.edges.cell(e).to_vec());
        } else {
            removed.push(e);
        }
    }
    (
        LinearGraph::compacted(&graph.vertices, CellArray::new(1, kept)),
        removed,
    )
}

/// For every vertex, its incident edges sorted by the angle of the outgoing
/// direction, counter-clockwise from `+x`.
pub fn edge_rotation(graph: &LinearGraph) -> Vec<Vec<usize>> {
    let pts = graph.vertices.points2();
    let mut rot: Vec<Vec<(f64, usize)>> = vec![Vec::new(); pts.len()];
    for (e, c) in graph.edges.cells().iter().enumerate() {
        for (v, w) in [(c[0], c[1]), (c[1], c[0])] {
            let d = pts[w] - pts[v];
            rot[v].push((d.y.atan2(d.x), e));
        }
    }
    rot.into_iter()
        .map(|mut r| {
            r.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            r.into_iter().map(|x| x.1).collect()
        })
        .collect()
}

/// Cyclic counter-clockwise vertex neighbour order around every vertex.
pub fn vertex_cycles(graph: &LinearGraph) -> Vec<Vec<usize>> {
    edge_rotation(graph)
        .into_iter()
        .enumerate()
        .map(|(v, r)| {
            r.into_iter()
                .map(|e| {
                    let c = graph.edges.cell(e);
                    if c[0] == v {
                        c[1]
                    } else {
                        c[0]
                    }
                })
                .collect()
        })
        .collect()
}
