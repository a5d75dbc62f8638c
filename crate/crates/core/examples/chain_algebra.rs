//! Boundary and coboundary of chains on a small planar complex, in signed
//! and mod-2 arithmetic.

use lar_arrange::chain::{apply, apply_coboundary, boundary1, Arithmetic, CellArray, Chain, VertexBuffer};
use lar_arrange::lar::boundary2;

fn main() -> lar_arrange::Result<()> {
    let v = VertexBuffer::from_rows(&[[1.0, 1.0], [0.5, 0.5], [1.0, 0.5], [0.0, 0.0], [0.5, 0.0], [1.0, 0.0]])?;
    let ev = CellArray::new(
        1,
        vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 5], vec![3, 4], vec![4, 5]],
    );
    let fv = CellArray::new(2, vec![vec![0, 1, 2], vec![1, 3, 4], vec![1, 2, 4, 5]]);

    let d1 = boundary1(&ev, v.len(), true)?;
    let d2 = boundary2(&v, &ev, &fv)?;
    println!("∂1 =");
    for row in d1.to_dense() {
        println!("  {row:?}");
    }
    println!("∂2 =");
    for row in d2.to_dense() {
        println!("  {row:?}");
    }

    // A path from vertex 0 to vertex 4.
    let path = Chain::from_pairs(1, [(1, 1), (2, -1), (4, 1)])?;
    println!("∂ ({path}) = {}", apply(&d1, &path, Arithmetic::Signed)?);
    let unsigned = path.reduce(Arithmetic::Mod2);
    println!("mod 2: ∂ ({unsigned}) = {}", apply(&d1.unsigned(), &unsigned, Arithmetic::Mod2)?);

    // The whole complex: its boundary is the outer loop, whose boundary vanishes.
    let all = Chain::from_pairs(2, [(0, 1), (1, 1), (2, 1)])?;
    let outer = apply(&d2, &all, Arithmetic::Signed)?;
    println!("∂ (all faces) = {outer}");
    println!("∂∂ (all faces) is zero: {}", apply(&d1, &outer, Arithmetic::Signed)?.is_zero());

    // Faces on either side of edge 4.
    let e4 = Chain::unit(1, 4, 1);
    println!("δ ({e4}) = {}", apply_coboundary(&d2, &e4, Arithmetic::Signed)?);
    Ok(())
}
