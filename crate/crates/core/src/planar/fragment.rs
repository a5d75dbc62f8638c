use rayon::prelude::*;

use crate::chain::{canonicalize, CellArray, VertexBuffer};
use crate::error::{Error, Result};
use crate::planar::intersect::intersect_pair;
use crate::planar::LinearGraph;
use crate::spatial::{quotient_vertices, IntervalIndex};

/// Splits every segment at all its intersections with the others, then
/// merges vertices closer than `eps`.
///
/// Input vertices keep their relative order at the front of the output;
/// new intersection points follow. Edges come out sorted and unique, and
/// zero-length pieces are dropped.
pub fn fragment(vertices: &VertexBuffer, edges: &CellArray, eps: f64) -> Result<LinearGraph> {
    if vertices.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: vertices.dim(),
        });
    }
    if edges.is_empty() {
        return Err(Error::EmptyInput("no segments".into()));
    }
    let (edges, _) = canonicalize(edges, vertices.len())?;
    let pts = vertices.points2();
    let seg = |i: usize| [pts[edges.cell(i)[0]], pts[edges.cell(i)[1]]];
    let index = IntervalIndex::of_cells(vertices, &edges, eps)?;

    let params: Vec<Vec<f64>> = (0..edges.len())
        .into_par_iter()
        .map(|i| {
            let a = seg(i);
            let len = (a[1] - a[0]).norm();
            let mut ts = Vec::new();
            for j in index.candidates(i) {
                ts.extend(intersect_pair(a, seg(j), eps).into_iter().map(|c| c.t_a));
            }
            ts.sort_by(f64::total_cmp);
            let mut kept = vec![0.0];
            for t in ts {
                if (t - kept[kept.len() - 1]) * len > eps && (1.0 - t) * len > eps {
                    kept.push(t);
                }
            }
            kept.push(1.0);
            kept
        })
        .collect();

    let mut coords = vertices.coords().to_vec();
    let mut raw_edges = Vec::new();
    let mut next = vertices.len();
    for (i, ts) in params.iter().enumerate() {
        let [a, b] = seg(i);
        let (va, vb) = (edges.cell(i)[0], edges.cell(i)[1]);
        let mut prev = va;
        for &t in &ts[1..ts.len() - 1] {
            let p = a + (b - a) * t;
            coords.extend_from_slice(&[p.x, p.y]);
            raw_edges.push(vec![prev, next]);
            prev = next;
            next += 1;
        }
        raw_edges.push(vec![prev, vb]);
    }
    let raw = VertexBuffer::new(2, coords)?;
    let (merged, map) = quotient_vertices(&raw, eps);
    let welded: Vec<Vec<usize>> = raw_edges
        .iter()
        .map(|e| vec![map[e[0]], map[e[1]]])
        .filter(|e| e[0] != e[1])
        .collect();
    if welded.is_empty() {
        return Err(Error::degenerate("every segment collapsed to a point"));
    }
    let (unique, _) = canonicalize(&CellArray::new(1, welded), merged.len())?;
    let (sorted, _) = unique.sorted();
    Ok(LinearGraph::compacted(&merged, sorted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn soup(segs: &[[f64; 4]]) -> (VertexBuffer, CellArray) {
        let mut rows = Vec::new();
        let mut ev = Vec::new();
        for s in segs {
            rows.push(vec![s[0], s[1]]);
            rows.push(vec![s[2], s[3]]);
            ev.push(vec![rows.len() - 2, rows.len() - 1]);
        }
        (VertexBuffer::from_rows(&rows).unwrap(), CellArray::new(1, ev))
    }

    #[test]
    fn two_crossing_segments() {
        let (v, e) = soup(&[[0.0, 0.0, 1.0, 1.0], [0.0, 1.0, 1.0, 0.0]]);
        let g = fragment(&v, &e, 1e-9).unwrap();
        assert_eq!(g.vertices.len(), 5);
        assert_eq!(g.vertices.point(4), &[0.5, 0.5]);
        assert_eq!(
            g.edges.cells(),
            &[vec![0, 4], vec![1, 4], vec![2, 4], vec![3, 4]]
        );
    }

    #[test]
    fn overlap_is_split_once() {
        let (v, e) = soup(&[[0.0, 0.0, 2.0, 0.0], [1.0, 0.0, 3.0, 0.0]]);
        let g = fragment(&v, &e, 1e-9).unwrap();
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(g.edges.len(), 3);
    }

    #[test]
    fn shared_endpoints_weld() {
        let (v, e) = soup(&[[0.0, 0.0, 1.0, 0.0], [1.0, 0.0, 1.0, 1.0], [1.0, 1.0, 0.0, 0.0]]);
        let g = fragment(&v, &e, 1e-9).unwrap();
        assert_eq!(g.vertices.len(), 3);
        assert_eq!(g.edges.cells(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn empty_soup_errors() {
        let v = VertexBuffer::from_rows(&[vec![0.0, 0.0]]).unwrap();
        assert!(matches!(
            fragment(&v, &CellArray::new(1, vec![]), 1e-9),
            Err(Error::EmptyInput(_))
        ));
    }
}
