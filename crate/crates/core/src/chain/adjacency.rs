use std::collections::BTreeMap;

use crate::chain::cells::CellArray;

/// Which entries of `M_a · M_bᵗ` count as adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    /// Exactly `k` shared vertices.
    Exactly(usize),
    /// At least `k` shared vertices.
    AtLeast(usize),
}

impl Filter {
    fn accepts(self, n: usize) -> bool {
        match self {
            Filter::Exactly(k) => n == k,
            Filter::AtLeast(k) => n >= k,
        }
    }
}

/// Sparse product `M_rows · M_colsᵗ`, filtered. Entry `(i, j)` counts the
/// vertices shared by row cell `i` and column cell `j`. When both arguments
/// are the same array the diagonal is skipped.
///
/// Returns, for every row cell, the ascending list of accepted columns.
pub fn adjacency(rows: &CellArray, cols: &CellArray, filter: Filter) -> Vec<Vec<usize>> {
    let same = std::ptr::eq(rows, cols) || rows == cols;
    let n_vertices = rows
        .max_vertex()
        .max(cols.max_vertex())
        .map_or(0, |m| m + 1);
    let stars = cols.vertex_stars(n_vertices);
    rows.cells()
        .iter()
        .enumerate()
        .map(|(i, cell)| {
            let mut count: BTreeMap<usize, usize> = BTreeMap::new();
            for &v in cell {
                for &j in stars.cell(v) {
                    *count.entry(j).or_default() += 1;
                }
            }
            count
                .into_iter()
                .filter(|&(j, n)| !(same && i == j) && filter.accepts(n))
                .map(|(j, _)| j)
                .collect()
        })
        .collect()
}

/// Vertex-to-vertex adjacency through shared edges.
pub fn vertex_adjacency(edges: &CellArray, n_vertices: usize) -> Vec<Vec<usize>> {
    let stars = edges.vertex_stars(n_vertices);
    adjacency(&stars, &stars, Filter::AtLeast(1))
}
