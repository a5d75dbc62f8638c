//! Cells, chains and signed sparse boundary operators.

mod adjacency;
mod cells;
mod operator;
mod value;

pub use adjacency::{adjacency, vertex_adjacency, Filter};
pub use cells::{canonicalize, CellArray, VertexBuffer};
pub use operator::{
    apply, apply_coboundary, boundary1, coboundary, product_is_zero, SignedOperator,
};
pub use value::{Arithmetic, Chain};

use crate::error::{Error, Result};

/// Vertex geometry, the skeletons `X_0 .. X_d` and the operators `∂_1 .. ∂_d`.
///
/// `skeletons[p]` lists p-cells by vertex indices (`skeletons[0]` is the
/// trivial `[[0], [1], ...]`). `operators[p - 1]` is `∂_p`, mapping p-chains
/// to (p-1)-chains.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainComplex {
    pub vertices: VertexBuffer,
    pub skeletons: Vec<CellArray>,
    pub operators: Vec<SignedOperator>,
}

impl ChainComplex {
    pub fn new(
        vertices: VertexBuffer,
        skeletons: Vec<CellArray>,
        operators: Vec<SignedOperator>,
    ) -> Result<Self> {
        let cx = Self {
            vertices,
            skeletons,
            operators,
        };
        cx.validate()?;
        Ok(cx)
    }

    pub fn dim(&self) -> usize {
        self.operators.len()
    }

    pub fn boundary(&self, p: usize) -> &SignedOperator {
        &self.operators[p - 1]
    }

    pub fn count(&self, p: usize) -> usize {
        if p == 0 {
            self.vertices.len()
        } else {
            self.operators[p - 1].cols()
        }
    }

    /// Checks operator shapes against the cell counts.
    pub fn validate(&self) -> Result<()> {
        for (k, op) in self.operators.iter().enumerate() {
            let p = k + 1;
            let expected_rows = self.count(p - 1);
            if op.rows() != expected_rows {
                return Err(Error::DimensionMismatch {
                    expected: expected_rows,
                    found: op.rows(),
                });
            }
            if let Some(s) = self.skeletons.get(p) {
                if s.len() != op.cols() {
                    return Err(Error::DimensionMismatch {
                        expected: s.len(),
                        found: op.cols(),
                    });
                }
            }
        }
        Ok(())
    }

    /// `∂_{p-1} ∂_p = 0` for every consecutive pair, in integer arithmetic.
    pub fn is_closed(&self) -> Result<bool> {
        for w in self.operators.windows(2) {
            if !product_is_zero(&w[0], &w[1])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Euler characteristic `Σ (-1)^p |X_p|` of the stored skeletons.
    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.dim())
            .map(|p| if p % 2 == 0 { 1 } else { -1 } * self.count(p) as i64)
            .sum()
    }
}
