//! Disconnected, nested squares: the containment relation between their
//! outer shells and the two ways of combining them into cells.

use lar_arrange::chain::{CellArray, VertexBuffer};
use lar_arrange::pipeline::{arrange2d, Config};
use lar_arrange::shells::{NestingRule, ShellReport};

fn squares(specs: &[(f64, f64, f64)]) -> lar_arrange::Result<(VertexBuffer, CellArray)> {
    let mut rows = Vec::new();
    let mut ev = Vec::new();
    for &(x, y, s) in specs {
        let b = rows.len();
        rows.extend([vec![x, y], vec![x + s, y], vec![x + s, y + s], vec![x, y + s]]);
        ev.extend((0..4).map(|k| vec![b + k, b + (k + 1) % 4]));
    }
    Ok((VertexBuffer::from_rows(&rows)?, CellArray::new(1, ev)))
}

fn main() -> lar_arrange::Result<()> {
    let (v, ev) = squares(&[
        (0.0, 0.0, 100.0),
        (5.0, 5.0, 20.0),
        (30.0, 5.0, 60.0),
        (35.0, 10.0, 50.0),
        (40.0, 15.0, 10.0),
        (70.0, 70.0, 25.0),
        (75.0, 75.0, 10.0),
    ])?;
    for rule in [NestingRule::Arrangement, NestingRule::Parity] {
        let arr = arrange2d(&v, &ev, &Config { epsilon: None, nesting: rule })?;
        println!("{rule:?}:");
        println!("  depth  {:?}", arr.shells.depth);
        println!("  parent {:?}", arr.shells.parent);
        println!("  cells  {}, areas {:?}", arr.top_boundary().cols(), arr.volumes()?);
        if rule == NestingRule::Arrangement {
            println!("  reduced containment:");
            for line in ShellReport::format_matrix(&arr.shells.reduced).lines() {
                println!("    {line}");
            }
        }
    }
    Ok(())
}
