//! Adjacency relations from products of characteristic matrices: vertices
//! joined by an edge, and tetrahedra sharing a triangle.

use lar_arrange::chain::{adjacency, vertex_adjacency, CellArray, Filter};

fn main() {
    // Two triangles sharing edge 1-2.
    let ev = CellArray::new(1, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![1, 3], vec![2, 3]]);
    for (v, row) in vertex_adjacency(&ev, 4).iter().enumerate() {
        println!("vertex {v}: {row:?}");
    }

    // A unit cube cut into six tetrahedra around the diagonal 0-7.
    let tv = CellArray::new(
        3,
        vec![
            vec![0, 1, 3, 7],
            vec![0, 1, 5, 7],
            vec![0, 2, 3, 7],
            vec![0, 2, 6, 7],
            vec![0, 4, 5, 7],
            vec![0, 4, 6, 7],
        ],
    );
    let faces = adjacency(&tv, &tv, Filter::Exactly(3));
    let edges = adjacency(&tv, &tv, Filter::Exactly(2));
    for t in 0..tv.len() {
        println!("tet {t}: shares a face with {:?}, only an edge with {:?}", faces[t], edges[t]);
    }
}
