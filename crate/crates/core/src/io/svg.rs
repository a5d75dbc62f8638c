use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geom::loops;
use crate::pipeline::Arrangement;

const PALETTE: [&str; 8] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
];

/// Filled cells (holes cut out) and the edges of a planar arrangement.
pub fn arrangement_to_svg(arr: &Arrangement) -> Result<String> {
    if arr.dim() != 2 {
        return Err(Error::UnsupportedFormat(format!(
            "SVG export needs a 2D arrangement, got dimension {}",
            arr.dim()
        )));
    }
    let cx = &arr.complex;
    let pts = cx.vertices.points2();
    let (lo, hi) = cx
        .vertices
        .bounds()
        .ok_or_else(|| Error::EmptyInput("no vertices".into()))?;
    let size = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-12);
    let scale = 800.0 / size;
    let margin = 10.0;
    let x = |v: f64| margin + (v - lo[0]) * scale;
    let y = |v: f64| margin + (hi[1] - v) * scale;
    let w = (hi[0] - lo[0]) * scale + 2.0 * margin;
    let h = (hi[1] - lo[1]) * scale + 2.0 * margin;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    )
    .unwrap();
    let edges = &cx.skeletons[1];
    let d2 = cx.boundary(2);
    for c in 0..d2.cols() {
        let mut d = String::new();
        for lp in loops(edges, &d2.column_chain(c, 1))? {
            for (k, &v) in lp.iter().enumerate() {
                let cmd = if k == 0 { 'M' } else { 'L' };
                write!(d, "{cmd}{:.3},{:.3} ", x(pts[v].x), y(pts[v].y)).unwrap();
            }
            d.push_str("Z ");
        }
        writeln!(
            out,
            r#"  <path d="{}" fill="{}" fill-rule="evenodd" fill-opacity="0.8"/>"#,
            d.trim_end(),
            PALETTE[c % PALETTE.len()]
        )
        .unwrap();
    }
    for e in edges.cells() {
        let (a, b) = (pts[e[0]], pts[e[1]]);
        writeln!(
            out,
            r#"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="1"/>"#,
            x(a.x),
            y(a.y),
            x(b.x),
            y(b.y)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
