use std::fmt::Write;

use crate::chain::{CellArray, VertexBuffer};
use crate::error::{Error, Result};
use crate::geom::{triangulate_face, P3};
use crate::pipeline::Arrangement;

/// Polygons and polylines read from a Wavefront OBJ file.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjMesh {
    pub vertices: VertexBuffer,
    /// Faces as ordered vertex loops.
    pub faces: Vec<Vec<usize>>,
    pub lines: Vec<Vec<usize>>,
}

impl ObjMesh {
    /// Distinct polygon sides and polyline segments.
    pub fn edges(&self) -> CellArray {
        let mut ev: Vec<Vec<usize>> = Vec::new();
        for f in &self.faces {
            for k in 0..f.len() {
                let (a, b) = (f[k], f[(k + 1) % f.len()]);
                ev.push(vec![a.min(b), a.max(b)]);
            }
        }
        for l in &self.lines {
            for w in l.windows(2) {
                ev.push(vec![w[0].min(w[1]), w[0].max(w[1])]);
            }
        }
        ev.sort();
        ev.dedup();
        ev.retain(|e| e[0] != e[1]);
        CellArray::new(1, ev)
    }

    /// Vertex sets of the faces.
    pub fn face_cells(&self) -> CellArray {
        CellArray::new(
            2,
            self.faces
                .iter()
                .map(|f| {
                    let mut c = f.clone();
                    c.sort_unstable();
                    c.dedup();
                    c
                })
                .collect(),
        )
    }
}

pub fn parse_obj(text: &str) -> Result<ObjMesh> {
    let mut coords = Vec::new();
    let mut faces = Vec::new();
    let mut lines = Vec::new();
    let mut n = 0usize;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        let mut it = line.split_whitespace();
        let bad = |col: usize, msg: &str| Error::Parse {
            line: k + 1,
            column: col,
            message: msg.to_string(),
        };
        match it.next() {
            Some("v") => {
                let xs: Vec<f64> = it
                    .take(3)
                    .map(|t| t.parse::<f64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| bad(1, "bad vertex coordinate"))?;
                if xs.len() != 3 {
                    return Err(bad(1, "vertex needs three coordinates"));
                }
                coords.extend(xs);
                n += 1;
            }
            Some(tag @ ("f" | "l")) => {
                let mut idx = Vec::new();
                for tok in it {
                    let first = tok.split('/').next().unwrap_or("");
                    let i: i64 = first.parse().map_err(|_| bad(1, "bad index"))?;
                    let resolved = if i < 0 { n as i64 + i } else { i - 1 };
                    if resolved < 0 || resolved as usize >= n {
                        return Err(bad(1, "index out of range"));
                    }
                    idx.push(resolved as usize);
                }
                if tag == "f" {
                    if idx.len() < 3 {
                        return Err(bad(1, "face needs three vertices"));
                    }
                    faces.push(idx);
                } else {
                    lines.push(idx);
                }
            }
            _ => {}
        }
    }
    if n == 0 {
        return Err(Error::EmptyInput("no vertices".into()));
    }
    Ok(ObjMesh {
        vertices: VertexBuffer::new(3, coords)?,
        faces,
        lines,
    })
}

/// One group per 3-cell, faces triangulated and oriented outward. With
/// `exploded = Some(s)`, each cell is pushed away from the common centroid
/// by the factor `s`.
pub fn arrangement_to_obj(arr: &Arrangement, exploded: Option<f64>) -> Result<String> {
    if arr.dim() != 3 {
        return Err(Error::UnsupportedFormat(format!(
            "OBJ export needs a 3D arrangement, got dimension {}",
            arr.dim()
        )));
    }
    let cx = &arr.complex;
    let points = cx.vertices.points3();
    let center = points.iter().sum::<P3>() / points.len().max(1) as f64;
    let edges = &cx.skeletons[1];
    let d2 = cx.boundary(2);
    let d3 = cx.boundary(3);
    let mut out = String::new();
    let mut base = 1;
    for c in 0..d3.cols() {
        let cell = &cx.skeletons[3].cells()[c];
        let cc = cell.iter().map(|&v| points[v]).sum::<P3>() / cell.len() as f64;
        let shift = exploded.map_or(P3::zeros(), |s| (cc - center) * (s - 1.0));
        writeln!(out, "g cell_{c}").unwrap();
        let mut local = std::collections::BTreeMap::new();
        for &v in cell {
            let p = points[v] + shift;
            writeln!(out, "v {} {} {}", p.x, p.y, p.z).unwrap();
            local.insert(v, base + local.len());
        }
        let (fs, signs) = d3.column(c);
        for (&f, &s) in fs.iter().zip(signs) {
            let chain = d2.column_chain(f, 1);
            let chain = if s < 0 { chain.neg() } else { chain };
            for t in triangulate_face(&points, edges, &chain)? {
                writeln!(out, "f {} {} {}", local[&t[0]], local[&t[1]], local[&t[2]]).unwrap();
            }
        }
        base += local.len();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_faces_and_negative_indices() {
        let m = parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1/1 2/2 -1\nl 1 2\n").unwrap();
        assert_eq!(m.faces, vec![vec![0, 1, 2]]);
        assert_eq!(m.lines, vec![vec![0, 1]]);
        assert_eq!(m.edges().len(), 3);
    }

    #[test]
    fn bad_index_reports_line() {
        let err = parse_obj("v 0 0 0\nf 1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
