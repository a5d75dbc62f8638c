//! Arrangements of cellular complexes in the plane and in space, computed
//! and returned as sparse signed boundary operators.
//!
//! A complex is stored the LAR way: a vertex buffer plus, for every
//! dimension, the cells as sorted vertex lists ([`chain::CellArray`]) and the
//! signed operators [`chain::SignedOperator`] between consecutive
//! dimensions. Arranging a segment soup ([`pipeline::arrange2d`]) or a set of
//! polygons in space ([`pipeline::arrange3d`]) fragments the input, welds
//! close vertices, drops dangling parts, and recovers the top cells from the
//! skeleton by topological gift wrapping ([`giftwrap`]). Disconnected
//! components are nested with [`shells`].
//!
//! Runnable examples live in `examples/`:
//!
//! - `chain_algebra`: boundary and coboundary of chains
//! - `adjacency_queries`: vertex and tetrahedron adjacency
//! - `spatial_index`: interval-tree candidates and vertex welding
//! - `gift_wrap_walkthrough`: faces of a planar graph one by one
//! - `segment_arrangement`: random segments to SVG
//! - `nested_shells`: containment of disconnected components
//! - `facet_subdivision`: cutting one face by its neighbours
//! - `cube_merge`: two overlapping cubes to OBJ

pub mod chain;
pub mod error;
pub mod geom;
pub mod giftwrap;
pub mod io;
pub mod lar;
pub mod pipeline;
pub mod planar;
pub mod shells;
pub mod spatial;

pub use error::{Error, Result};
