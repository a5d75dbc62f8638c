use std::collections::HashMap;

use nalgebra::{Vector2, Vector3};

use crate::error::{Error, Result};

/// Dense vertex coordinates, stored flat as `n * dim` values.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexBuffer {
    dim: usize,
    coords: Vec<f64>,
}

impl VertexBuffer {
    pub fn new(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::malformed("vertex dimension must be positive"));
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::malformed(format!(
                "{} coordinates do not split into points of dimension {dim}",
                coords.len()
            )));
        }
        if let Some(bad) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::malformed(format!(
                "non-finite coordinate in vertex {}",
                bad / dim
            )));
        }
        Ok(Self { dim, coords })
    }

    /// Builds a buffer from rows, which must all have the same length.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows
            .first()
            .map(|r| r.as_ref().len())
            .ok_or_else(|| Error::EmptyInput("no vertices".into()))?;
        let mut coords = Vec::with_capacity(rows.len() * dim);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != dim {
                return Err(Error::malformed(format!(
                    "vertex {i} has {} coordinates, expected {dim}",
                    r.len()
                )));
            }
            coords.extend_from_slice(r);
        }
        Self::new(dim, coords)
    }

    pub fn from_points2(points: &[Vector2<f64>]) -> Self {
        Self {
            dim: 2,
            coords: points.iter().flat_map(|p| [p.x, p.y]).collect(),
        }
    }

    pub fn from_points3(points: &[Vector3<f64>]) -> Self {
        Self {
            dim: 3,
            coords: points.iter().flat_map(|p| [p.x, p.y, p.z]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn point2(&self, i: usize) -> Vector2<f64> {
        let p = self.point(i);
        Vector2::new(p[0], p[1])
    }

    /// Point `i` padded with zeros to three coordinates.
    pub fn point3(&self, i: usize) -> Vector3<f64> {
        let p = self.point(i);
        Vector3::new(p[0], p.get(1).copied().unwrap_or(0.0), p.get(2).copied().unwrap_or(0.0))
    }

    pub fn points2(&self) -> Vec<Vector2<f64>> {
        (0..self.len()).map(|i| self.point2(i)).collect()
    }

    pub fn points3(&self) -> Vec<Vector3<f64>> {
        (0..self.len()).map(|i| self.point3(i)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.coords.chunks(self.dim).map(|c| c.to_vec()).collect()
    }

    /// Lower and upper corners of the axis-aligned bounding box.
    pub fn bounds(&self) -> Option<(Vec<f64>, Vec<f64>)> {
        if self.is_empty() {
            return None;
        }
        let mut lo = self.point(0).to_vec();
        let mut hi = lo.clone();
        for i in 1..self.len() {
            for (k, &c) in self.point(i).iter().enumerate() {
                lo[k] = lo[k].min(c);
                hi[k] = hi[k].max(c);
            }
        }
        Some((lo, hi))
    }

    pub fn diagonal(&self) -> f64 {
        self.bounds()
            .map(|(lo, hi)| {
                lo.iter()
                    .zip(&hi)
                    .map(|(a, b)| (b - a) * (b - a))
                    .sum::<f64>()
                    .sqrt()
            })
            .unwrap_or(0.0)
    }
}

/// Cells of one dimension, each given by its sorted vertex indices.
///
/// The vertex lists of all cells form the characteristic matrix `M_p`,
/// one row per cell and one column per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CellArray {
    dim: usize,
    cells: Vec<Vec<usize>>,
}

impl CellArray {
    /// Wraps cells without any checks. Use [`canonicalize`] on untrusted data.
    pub fn new(dim: usize, cells: Vec<Vec<usize>>) -> Self {
        Self { dim, cells }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &[usize] {
        &self.cells[i]
    }

    pub fn into_cells(self) -> Vec<Vec<usize>> {
        self.cells
    }

    pub fn push(&mut self, cell: Vec<usize>) {
        self.cells.push(cell);
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.cells.iter().flatten().copied().max()
    }

    /// Columns of `M_pᵗ`: for every vertex, the cells that contain it.
    pub fn vertex_stars(&self, n_vertices: usize) -> CellArray {
        let mut stars = vec![Vec::new(); n_vertices];
        for (c, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                stars[v].push(c);
            }
        }
        CellArray::new(0, stars)
    }

    /// Reorders cells lexicographically. Returns the sorted array and the
    /// old-to-new index map.
    pub fn sorted(&self) -> (CellArray, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.cells.len()).collect();
        order.sort_by(|&a, &b| self.cells[a].cmp(&self.cells[b]));
        let mut old_to_new = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            old_to_new[old] = new;
        }
        let cells = order.iter().map(|&i| self.cells[i].clone()).collect();
        (CellArray::new(self.dim, cells), old_to_new)
    }
}

/// Sorts the vertex list of every cell, removes repeated cells and checks
/// that indices are in range. Cell order follows first occurrence.
///
/// Returns the canonical array and a map from each input position to its
/// index in the output.
pub fn canonicalize(cells: &CellArray, n_vertices: usize) -> Result<(CellArray, Vec<usize>)> {
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut out = Vec::new();
    let mut old_to_new = Vec::with_capacity(cells.len());
    for (i, cell) in cells.cells().iter().enumerate() {
        let mut c = cell.clone();
        c.sort_unstable();
        c.dedup();
        if let Some(&v) = c.iter().find(|&&v| v >= n_vertices) {
            return Err(Error::malformed(format!(
                "cell {i} references vertex {v}, but only {n_vertices} vertices exist"
            )));
        }
        if c.is_empty() {
            return Err(Error::DegenerateCell {
                cell: i,
                detail: "empty vertex list".into(),
            });
        }
        if cells.dim() == 1 && c.len() != 2 {
            return Err(Error::DegenerateCell {
                cell: i,
                detail: format!("an edge needs two distinct vertices, got {cell:?}"),
            });
        }
        if cells.dim() >= 1 && c.len() < cells.dim() + 1 {
            return Err(Error::DegenerateCell {
                cell: i,
                detail: format!("a {}-cell needs at least {} vertices", cells.dim(), cells.dim() + 1),
            });
        }
        let next = out.len();
        let idx = *seen.entry(c.clone()).or_insert_with(|| {
            out.push(c);
            next
        });
        old_to_new.push(idx);
    }
    Ok((CellArray::new(cells.dim(), out), old_to_new))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalize_merges_reversed_edges() {
        let ev = CellArray::new(1, vec![vec![2, 1], vec![1, 2]]);
        let (c, map) = canonicalize(&ev, 3).unwrap();
        assert_eq!(c.cells(), &[vec![1, 2]]);
        assert_eq!(map, vec![0, 0]);
    }

    #[test]
    fn canonicalize_keeps_canonical_faces() {
        let fv = CellArray::new(2, vec![vec![0, 1, 2], vec![1, 3, 4], vec![1, 2, 4, 5]]);
        let (c, map) = canonicalize(&fv, 6).unwrap();
        assert_eq!(c, fv);
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn canonicalize_rejects_out_of_range() {
        let ev = CellArray::new(1, vec![vec![0, 7]]);
        assert!(matches!(canonicalize(&ev, 3), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn canonicalize_rejects_loop_edge() {
        let ev = CellArray::new(1, vec![vec![3, 3]]);
        assert!(matches!(
            canonicalize(&ev, 4),
            Err(Error::DegenerateCell { cell: 0, .. })
        ));
    }

    #[test]
    fn vertex_buffer_checks_arity() {
        assert!(VertexBuffer::from_rows(&[vec![0.0, 1.0], vec![2.0]]).is_err());
        let v = VertexBuffer::from_rows(&[vec![0.0, 1.0], vec![2.0, 4.0]]).unwrap();
        assert_eq!(v.len(), 2);
        assert!((v.diagonal() - 13f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn sorted_reports_permutation() {
        let ev = CellArray::new(1, vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
        let (s, map) = ev.sorted();
        assert_eq!(s.cells(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(map, vec![2, 1, 0]);
    }
}
