//! Cuts one square face by two faces crossing it and prints the planar
//! pieces, then merges the pieces of all faces into one skeleton.

use lar_arrange::chain::{CellArray, VertexBuffer};
use lar_arrange::lar::{boundary2, convex_face_edges};
use lar_arrange::pipeline::{merge_pieces, subdivide_facet};
use lar_arrange::spatial::IntervalIndex;

fn main() -> lar_arrange::Result<()> {
    let v = VertexBuffer::from_rows(&[
        // horizontal square z = 0
        [0.0, 0.0, 0.0],
        [2.0, 0.0, 0.0],
        [2.0, 2.0, 0.0],
        [0.0, 2.0, 0.0],
        // vertical square x = 1
        [1.0, -1.0, -1.0],
        [1.0, 3.0, -1.0],
        [1.0, 3.0, 1.0],
        [1.0, -1.0, 1.0],
        // vertical square y = 1
        [-1.0, 1.0, -1.0],
        [3.0, 1.0, -1.0],
        [3.0, 1.0, 1.0],
        [-1.0, 1.0, 1.0],
    ])?;
    let fv = CellArray::new(2, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![8, 9, 10, 11]]);
    let ev = convex_face_edges(&v, &fv)?;
    let d2 = boundary2(&v, &ev, &fv)?;
    let eps = 1e-9;
    let index = IntervalIndex::of_cells(&v, &fv, eps)?;

    let pieces = (0..fv.len())
        .map(|f| subdivide_facet(&v, &ev, &d2, f, &index.candidates(f), eps))
        .collect::<lar_arrange::Result<Vec<_>>>()?;
    for (k, region) in pieces[0].pieces.iter().enumerate() {
        let outer: Vec<String> = region[0].iter().map(|p| format!("({}, {})", p.x, p.y)).collect();
        println!("face 0, piece {k}: {}", outer.join(" "));
    }
    let merged = merge_pieces(&pieces, eps)?;
    println!(
        "merged skeleton: {} vertices, {} edges, {} faces",
        merged.vertices.len(),
        merged.edges.len(),
        merged.faces.len()
    );
    Ok(())
}
