//! Box-overlap candidates from per-axis interval trees, and welding of
//! nearly coincident vertices.

use lar_arrange::chain::{CellArray, VertexBuffer};
use lar_arrange::spatial::{quotient_vertices, IntervalIndex};

fn main() -> lar_arrange::Result<()> {
    let v = VertexBuffer::from_rows(&[
        [0.0, 0.0],
        [4.0, 4.0],
        [0.0, 4.0],
        [4.0, 0.0],
        [5.0, 5.0],
        [6.0, 5.0],
        [4.0 + 1e-10, 4.0],
        [2.0, -1.0],
    ])?;
    let ev = CellArray::new(1, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]]);
    let index = IntervalIndex::of_cells(&v, &ev, 1e-9)?;
    for i in 0..ev.len() {
        println!("segment {i} may meet {:?}", index.candidates(i));
    }
    println!("x in [4.5, 7]: {:?}", index.query_axis(0, 4.5, 7.0));

    let (merged, map) = quotient_vertices(&v, 1e-8);
    println!("{} vertices -> {}; map {map:?}", v.len(), merged.len());
    Ok(())
}
