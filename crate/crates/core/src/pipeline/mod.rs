//! End-to-end arrangement of planar segment soups and of collections of
//! polygonal faces in space.

mod facet;
mod merge;
mod section;

pub use facet::{subdivide_facet, FacetPieces};
pub use merge::{merge_pieces, regularize, SpatialSkeleton};
pub use section::{plane_section, SubmanifoldMap};

use rayon::prelude::*;

use crate::chain::{CellArray, Chain, ChainComplex, SignedOperator, VertexBuffer};
use crate::error::{Error, Result};
use crate::giftwrap::{extract_cells, Skeleton};
use crate::lar::boundary2;
use crate::planar::{biconnected_filter, fragment};
use crate::shells::{assemble, Assembly, NestingRule, ShellReport};
use crate::spatial::{default_epsilon, IntervalIndex};

/// Options shared by both pipelines.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Config {
    /// Merge tolerance; defaults to `1e-8` times the bounding-box diagonal.
    pub epsilon: Option<f64>,
    pub nesting: NestingRule,
}

impl Config {
    pub fn epsilon_for(&self, vertices: &VertexBuffer) -> f64 {
        self.epsilon.unwrap_or_else(|| default_epsilon(vertices))
    }
}

/// A regularized arrangement: the chain complex of its cells plus the
/// outer boundary and the component nesting.
#[derive(Debug, Clone)]
pub struct Arrangement {
    pub complex: ChainComplex,
    /// Outer boundary of everything, as a chain of (d-1)-cells.
    pub exterior: Chain,
    pub shells: ShellReport,
    /// Input pieces dropped because they bound no region (bridges and
    /// dangling edges in the plane, faces with free edges in space).
    pub dropped: usize,
    pub epsilon: f64,
}

impl Arrangement {
    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    pub fn top_boundary(&self) -> &SignedOperator {
        self.complex.boundary(self.dim())
    }

    /// Top operator with the outer boundary appended as a last column.
    /// Every (d-1)-cell of the arrangement appears in exactly two columns.
    pub fn boundary_plus(&self) -> SignedOperator {
        let mut op = self.top_boundary().clone();
        op.push_column(&self.exterior)
            .expect("exterior lives in the same basis");
        op
    }

    /// Signed area or volume of every top cell.
    pub fn volumes(&self) -> Result<Vec<f64>> {
        let sk = self.skeleton()?;
        (0..self.top_boundary().cols())
            .map(|j| sk.signed_volume(&self.top_boundary().column_chain(j, self.dim() - 1)))
            .collect()
    }

    /// The (d-1)-skeleton the cells were wrapped from.
    pub fn skeleton(&self) -> Result<Skeleton> {
        let cx = &self.complex;
        if self.dim() == 2 {
            Skeleton::planar(cx.vertices.clone(), cx.skeletons[1].clone())
        } else {
            Skeleton::spatial(
                cx.vertices.clone(),
                cx.skeletons[1].clone(),
                cx.skeletons[2].clone(),
                cx.operators[1].clone(),
            )
        }
    }
}

fn top_cells(skeleton: &Skeleton, assembly: &Assembly) -> CellArray {
    CellArray::new(
        skeleton.dim(),
        assembly
            .cells
            .iter()
            .map(|c| skeleton.facet_vertices(c.support()))
            .collect(),
    )
}

fn wrap(skeleton: Skeleton, config: &Config, eps: f64, dropped: usize) -> Result<Arrangement> {
    let d = skeleton.dim();
    let assembly = if skeleton.n_facets() == 0 {
        None
    } else {
        let order = skeleton.hinge_order()?;
        let cells = extract_cells(skeleton.facet_boundary(), &order, d - 1)?;
        Some(assemble(&skeleton, &cells, config.nesting, eps)?)
    };
    let n_vertices = skeleton.vertices.len();
    let vertex_cells = CellArray::new(0, (0..n_vertices).map(|v| vec![v]).collect());
    let (top, top_op, exterior, report) = match assembly {
        Some(a) => {
            let top = top_cells(&skeleton, &a);
            let op = SignedOperator::from_columns(skeleton.n_facets(), &a.cells)?;
            (top, op, a.exterior, a.report)
        }
        None => (
            CellArray::new(d, Vec::new()),
            SignedOperator::empty(0),
            Chain::zero(d - 1),
            ShellReport::default(),
        ),
    };
    let Skeleton {
        vertices,
        edges,
        d1,
        faces,
    } = skeleton;
    let (skeletons, operators) = match faces {
        None => (vec![vertex_cells, edges, top], vec![d1, top_op]),
        Some((fv, d2)) => (vec![vertex_cells, edges, fv, top], vec![d1, d2, top_op]),
    };
    Ok(Arrangement {
        complex: ChainComplex::new(vertices, skeletons, operators)?,
        exterior,
        shells: report,
        dropped,
        epsilon: eps,
    })
}

/// Arrangement of a planar segment soup.
pub fn arrange2d(vertices: &VertexBuffer, edges: &CellArray, config: &Config) -> Result<Arrangement> {
    let eps = config.epsilon_for(vertices);
    let graph = fragment(vertices, edges, eps)?;
    let (graph, removed) = biconnected_filter(&graph);
    let skeleton = Skeleton::planar(graph.vertices, graph.edges)?;
    wrap(skeleton, config, eps, removed.len())
}

/// Arrangement of polygonal faces in space. Each face is given by the
/// vertex set in `faces`; its boundary is made of the `edges` joining two
/// of its vertices.
pub fn arrange3d(
    vertices: &VertexBuffer,
    edges: &CellArray,
    faces: &CellArray,
    config: &Config,
) -> Result<Arrangement> {
    if vertices.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: vertices.dim(),
        });
    }
    if faces.is_empty() {
        return Err(Error::EmptyInput("no faces".into()));
    }
    let eps = config.epsilon_for(vertices);
    let d2 = boundary2(vertices, edges, faces)?;
    let index = IntervalIndex::of_cells(vertices, faces, eps)?;
    let pieces: Vec<FacetPieces> = (0..faces.len())
        .into_par_iter()
        .map(|f| subdivide_facet(vertices, edges, &d2, f, &index.candidates(f), eps))
        .collect::<Result<_>>()?;
    let merged = merge_pieces(&pieces, eps)?;
    let (merged, dropped) = regularize(merged);
    let skeleton = Skeleton::spatial(merged.vertices, merged.edges, merged.faces, merged.d2)?;
    wrap(skeleton, config, eps, dropped)
}
