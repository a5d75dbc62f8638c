//! Merges two overlapping cubes into three solid cells and writes them as an
//! exploded OBJ.
//!
//! `cargo run --example cube_merge -- cubes.obj`

use lar_arrange::chain::{CellArray, VertexBuffer};
use lar_arrange::io::arrangement_to_obj;
use lar_arrange::lar::convex_face_edges;
use lar_arrange::pipeline::{arrange3d, Config};

fn cube(rows: &mut Vec<Vec<f64>>, fv: &mut Vec<Vec<usize>>, lo: [f64; 3], size: f64) {
    let b = rows.len();
    for k in 0..8 {
        rows.push((0..3).map(|a| lo[a] + if k >> a & 1 == 1 { size } else { 0.0 }).collect());
    }
    for f in [[0, 1, 2, 3], [4, 5, 6, 7], [0, 1, 4, 5], [2, 3, 6, 7], [0, 2, 4, 6], [1, 3, 5, 7]] {
        fv.push(f.iter().map(|&i| b + i).collect());
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "cubes.obj".into());
    let mut rows = Vec::new();
    let mut fv = Vec::new();
    cube(&mut rows, &mut fv, [0.0; 3], 1.0);
    cube(&mut rows, &mut fv, [0.5; 3], 1.0);
    let v = VertexBuffer::from_rows(&rows)?;
    let fv = CellArray::new(2, fv);
    let ev = convex_face_edges(&v, &fv)?;

    let arr = arrange3d(&v, &ev, &fv, &Config::default())?;
    let counts: Vec<usize> = (0..=3).map(|p| arr.complex.count(p)).collect();
    println!("cells per dimension {counts:?}, Euler characteristic {}", arr.complex.euler_characteristic());
    for (i, vol) in arr.volumes()?.iter().enumerate() {
        println!("cell {i}: volume {vol}");
    }
    println!("∂∂ = 0: {}", arr.complex.is_closed()?);
    std::fs::write(&out, arrangement_to_obj(&arr, Some(0.4))?)?;
    println!("wrote {out}");
    Ok(())
}
