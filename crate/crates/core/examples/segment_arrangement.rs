//! Arranges a random segment soup and writes the cells as SVG.
//!
//! `cargo run --example segment_arrangement -- 80 out.svg`

use lar_arrange::chain::{CellArray, VertexBuffer};
use lar_arrange::io::arrangement_to_svg;
use lar_arrange::pipeline::{arrange2d, Config};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(60), |s| s.parse())?;
    let out = args.next().unwrap_or_else(|| "segments.svg".into());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut rows = Vec::new();
    let mut ev = Vec::new();
    for i in 0..n {
        rows.push(vec![rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)]);
        rows.push(vec![rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)]);
        ev.push(vec![2 * i, 2 * i + 1]);
    }
    let v = VertexBuffer::from_rows(&rows)?;
    let arr = arrange2d(&v, &CellArray::new(1, ev), &Config::default())?;

    let areas = arr.volumes()?;
    println!(
        "{n} segments -> {} vertices, {} edges, {} faces ({} dangling edges dropped)",
        arr.complex.count(0),
        arr.complex.count(1),
        arr.complex.count(2),
        arr.dropped
    );
    println!("total area {:.6}", areas.iter().sum::<f64>());
    std::fs::write(&out, arrangement_to_svg(&arr)?)?;
    println!("wrote {out}");
    Ok(())
}
