use crate::chain::cells::CellArray;
use crate::chain::value::{Arithmetic, Chain};
use crate::error::{Error, Result};

/// Sparse integer matrix with entries in `{-1, +1}`, stored by columns.
///
/// Column `j` is the boundary of the j-th p-cell written in the basis of
/// (p-1)-cells. Unsigned operators hold only `+1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedOperator {
    rows: usize,
    cols: usize,
    col_ptr: Vec<usize>,
    row_idx: Vec<usize>,
    values: Vec<i8>,
}

impl SignedOperator {
    pub fn empty(rows: usize) -> Self {
        Self {
            rows,
            cols: 0,
            col_ptr: vec![0],
            row_idx: Vec::new(),
            values: Vec::new(),
        }
    }

    /// Builds from `(row, col, coefficient)` triples in any order.
    /// Zero coefficients are dropped; duplicates are an error.
    pub fn from_triples(
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self> {
        let mut t: Vec<(usize, usize, i8)> = Vec::new();
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(Error::malformed(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} operator"
                )));
            }
            if !(-1..=1).contains(&v) {
                return Err(Error::InvalidCoefficient(v));
            }
            if v != 0 {
                t.push((c, r, v as i8));
            }
        }
        t.sort_unstable();
        if let Some(w) = t.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1) {
            return Err(Error::malformed(format!(
                "duplicate entry ({}, {})",
                w[0].1, w[0].0
            )));
        }
        let mut col_ptr = vec![0; cols + 1];
        for &(c, _, _) in &t {
            col_ptr[c + 1] += 1;
        }
        for j in 0..cols {
            col_ptr[j + 1] += col_ptr[j];
        }
        Ok(Self {
            rows,
            cols,
            col_ptr,
            row_idx: t.iter().map(|x| x.1).collect(),
            values: t.iter().map(|x| x.2).collect(),
        })
    }

    /// Builds from column chains.
    pub fn from_columns(rows: usize, columns: &[Chain]) -> Result<Self> {
        let mut op = Self::empty(rows);
        for c in columns {
            op.push_column(c)?;
        }
        Ok(op)
    }

    pub fn push_column(&mut self, column: &Chain) -> Result<()> {
        for (r, v) in column.iter() {
            if r >= self.rows {
                return Err(Error::malformed(format!(
                    "row {r} outside an operator with {} rows",
                    self.rows
                )));
            }
            self.row_idx.push(r);
            self.values.push(v);
        }
        self.cols += 1;
        self.col_ptr.push(self.row_idx.len());
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn is_signed(&self) -> bool {
        self.values.iter().any(|&v| v < 0)
    }

    /// Row indices and values of column `j`, rows ascending.
    pub fn column(&self, j: usize) -> (&[usize], &[i8]) {
        let (a, b) = (self.col_ptr[j], self.col_ptr[j + 1]);
        (&self.row_idx[a..b], &self.values[a..b])
    }

    pub fn column_chain(&self, j: usize, dim: usize) -> Chain {
        let (r, v) = self.column(j);
        let mut c = Chain::zero(dim);
        for (&i, &x) in r.iter().zip(v) {
            c.set(i, x);
        }
        c
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        let (r, v) = self.column(j);
        r.binary_search(&i).map(|k| v[k]).unwrap_or(0)
    }

    /// All nonzeros as `(row, col, value)`, column-major.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, i8)> + '_ {
        (0..self.cols).flat_map(move |j| {
            let (r, v) = self.column(j);
            r.iter().zip(v).map(move |(&i, &x)| (i, j, x))
        })
    }

    pub fn transpose(&self) -> SignedOperator {
        let mut col_ptr = vec![0; self.rows + 1];
        for &r in &self.row_idx {
            col_ptr[r + 1] += 1;
        }
        for i in 0..self.rows {
            col_ptr[i + 1] += col_ptr[i];
        }
        let mut next = col_ptr.clone();
        let mut row_idx = vec![0; self.nnz()];
        let mut values = vec![0; self.nnz()];
        for (i, j, v) in self.triples() {
            let k = next[i];
            row_idx[k] = j;
            values[k] = v;
            next[i] += 1;
        }
        SignedOperator {
            rows: self.cols,
            cols: self.rows,
            col_ptr,
            row_idx,
            values,
        }
    }

    /// Same sparsity with every coefficient replaced by `+1`.
    pub fn unsigned(&self) -> SignedOperator {
        let mut u = self.clone();
        u.values.iter_mut().for_each(|v| *v = 1);
        u
    }

    pub fn with_column_signs(&self, signs: &[i8]) -> SignedOperator {
        let mut out = self.clone();
        for (j, &s) in signs.iter().enumerate() {
            let (a, b) = (self.col_ptr[j], self.col_ptr[j + 1]);
            out.values[a..b].iter_mut().for_each(|v| *v *= s);
        }
        out
    }

    /// Drops or reorders columns: column `k` of the result is `cols[k]`.
    pub fn select_columns(&self, cols: &[usize]) -> SignedOperator {
        let mut out = Self::empty(self.rows);
        for &j in cols {
            let (r, v) = self.column(j);
            out.row_idx.extend_from_slice(r);
            out.values.extend_from_slice(v);
            out.cols += 1;
            out.col_ptr.push(out.row_idx.len());
        }
        out
    }

    /// Integer product `self * chain` before any reduction.
    pub fn apply_int(&self, chain: &Chain) -> Result<Vec<(usize, i64)>> {
        let mut acc = std::collections::BTreeMap::new();
        for (j, c) in chain.iter() {
            if j >= self.cols {
                return Err(Error::malformed(format!(
                    "chain references cell {j}, operator has {} columns",
                    self.cols
                )));
            }
            let (r, v) = self.column(j);
            for (&i, &x) in r.iter().zip(v) {
                *acc.entry(i).or_insert(0i64) += x as i64 * c as i64;
            }
        }
        Ok(acc.into_iter().filter(|&(_, v)| v != 0).collect())
    }

    /// `self * other` in integer arithmetic, as nonzero triples.
    pub fn compose(&self, other: &SignedOperator) -> Result<Vec<(usize, usize, i64)>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Vec::new();
        for j in 0..other.cols {
            let c = other.column_chain(j, 0);
            for (i, v) in self.apply_int(&c)? {
                out.push((i, j, v));
            }
        }
        Ok(out)
    }

    /// Dense row-major copy, for small operators and tests.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (i, j, v) in self.triples() {
            d[i][j] = v as i64;
        }
        d
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        Self::from_triples(
            n,
            m,
            rows.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v))),
        )
    }
}

/// Applies `op` to a chain. Signed operators reduce in `{-1,0,+1}`
/// (mod 3), `Mod2` reduces modulo 2.
pub fn apply(op: &SignedOperator, chain: &Chain, arith: Arithmetic) -> Result<Chain> {
    let dim = chain.dim().saturating_sub(1);
    let mut out = Chain::zero(dim);
    for (i, v) in op.apply_int(chain)? {
        out.set(i, arith.reduce(v));
    }
    Ok(out)
}

/// Coboundary `δ_{p-1} = ∂_pᵗ`.
pub fn coboundary(op: &SignedOperator) -> SignedOperator {
    op.transpose()
}

/// Applies the coboundary of `op` to a (p-1)-cochain.
pub fn apply_coboundary(op: &SignedOperator, cochain: &Chain, arith: Arithmetic) -> Result<Chain> {
    let t = op.transpose();
    let mut out = Chain::zero(cochain.dim() + 1);
    for (i, v) in t.apply_int(cochain)? {
        out.set(i, arith.reduce(v));
    }
    Ok(out)
}

/// Boundary of 1-cells: column for edge `(h, k)`, `h < k`, has `-1` at `h`
/// and `+1` at `k`. The unsigned variant has `+1` at both.
pub fn boundary1(edges: &CellArray, n_vertices: usize, signed: bool) -> Result<SignedOperator> {
    let mut triples = Vec::with_capacity(edges.len() * 2);
    for (j, e) in edges.cells().iter().enumerate() {
        if e.len() != 2 {
            return Err(Error::DegenerateCell {
                cell: j,
                detail: format!("edge has {} vertices", e.len()),
            });
        }
        let (h, k) = (e[0].min(e[1]), e[0].max(e[1]));
        if h == k {
            return Err(Error::DegenerateCell {
                cell: j,
                detail: "edge endpoints coincide".into(),
            });
        }
        if k >= n_vertices {
            return Err(Error::malformed(format!(
                "edge {j} references vertex {k}, only {n_vertices} exist"
            )));
        }
        triples.push((h, j, if signed { -1 } else { 1 }));
        triples.push((k, j, 1));
    }
    SignedOperator::from_triples(n_vertices, edges.len(), triples)
}

/// True when `a * b` is the zero matrix in integer arithmetic.
pub fn product_is_zero(a: &SignedOperator, b: &SignedOperator) -> Result<bool> {
    Ok(a.compose(b)?.is_empty())
}
