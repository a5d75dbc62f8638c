//! Extracting faces of a planar graph one at a time, starting from a chosen
//! edge and orientation.

use lar_arrange::chain::{CellArray, VertexBuffer};
use lar_arrange::giftwrap::{extract_cell, extract_cells, Skeleton};

fn main() -> lar_arrange::Result<()> {
    // A square split by a diagonal, with a pendant triangle on one corner.
    let v = VertexBuffer::from_rows(&[[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0], [3.0, 3.0], [2.0, 3.0]])?;
    let ev = CellArray::new(
        1,
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3], vec![0, 2], vec![2, 4], vec![4, 5], vec![2, 5]],
    );
    let sk = Skeleton::planar(v, ev)?;
    let order = sk.hinge_order()?;
    for h in 0..sk.n_hinges() {
        println!("vertex {h}: edges by angle {:?}", order.cycle(h));
    }

    for sign in [1, -1] {
        let cell = extract_cell(sk.facet_boundary(), &order, 4, sign, 1)?;
        println!("seed {sign:+}e4 -> {cell} (area {})", sk.signed_volume(&cell)?);
    }

    println!("all cells:");
    for cell in extract_cells(sk.facet_boundary(), &order, 1)? {
        println!("  {cell:<24} area {:+}", sk.signed_volume(&cell)?);
    }
    Ok(())
}
