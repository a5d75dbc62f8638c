use crate::chain::{apply, boundary1, Arithmetic, CellArray, Chain, SignedOperator, VertexBuffer};
use crate::error::{Error, Result};
use crate::geom::{area_vector, cross2, P3};
use crate::giftwrap::{facet_components, HingeOrder};
use crate::planar::edge_blocks;

/// The (d-1)-skeleton of a d-dimensional arrangement (d = 2 or 3) with the
/// operators needed to wrap it into d-cells.
///
/// Facets are edges in the plane and faces in space; hinges are vertices in
/// the plane and edges in space.
#[derive(Debug, Clone)]
pub struct Skeleton {
    pub vertices: VertexBuffer,
    pub edges: CellArray,
    pub d1: SignedOperator,
    pub faces: Option<(CellArray, SignedOperator)>,
}

impl Skeleton {
    pub fn planar(vertices: VertexBuffer, edges: CellArray) -> Result<Self> {
        if vertices.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: vertices.dim(),
            });
        }
        let d1 = boundary1(&edges, vertices.len(), true)?;
        Ok(Self {
            vertices,
            edges,
            d1,
            faces: None,
        })
    }

    /// `d2` columns must be closed edge cycles.
    pub fn spatial(
        vertices: VertexBuffer,
        edges: CellArray,
        faces: CellArray,
        d2: SignedOperator,
    ) -> Result<Self> {
        if vertices.dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: vertices.dim(),
            });
        }
        let d1 = boundary1(&edges, vertices.len(), true)?;
        if d2.rows() != edges.len() || d2.cols() != faces.len() {
            return Err(Error::DimensionMismatch {
                expected: edges.len(),
                found: d2.rows(),
            });
        }
        Ok(Self {
            vertices,
            edges,
            d1,
            faces: Some((faces, d2)),
        })
    }

    pub fn dim(&self) -> usize {
        if self.faces.is_some() {
            3
        } else {
            2
        }
    }

    /// Operator from facets to hinges.
    pub fn facet_boundary(&self) -> &SignedOperator {
        match &self.faces {
            Some((_, d2)) => d2,
            None => &self.d1,
        }
    }

    pub fn n_facets(&self) -> usize {
        self.facet_boundary().cols()
    }

    pub fn n_hinges(&self) -> usize {
        self.facet_boundary().rows()
    }

    pub fn points(&self) -> Vec<P3> {
        self.vertices.points3()
    }

    /// Vertices touched by a set of facets.
    pub fn facet_vertices(&self, facets: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut vs = Vec::new();
        for f in facets {
            match &self.faces {
                Some((fv, _)) => vs.extend_from_slice(fv.cell(f)),
                None => vs.extend_from_slice(self.edges.cell(f)),
            }
        }
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Area vector of each face from its oriented boundary cycle.
    pub fn face_normals(&self) -> Vec<P3> {
        let Some((_, d2)) = &self.faces else {
            return Vec::new();
        };
        let pts = self.points();
        (0..d2.cols())
            .map(|f| area_vector(&pts, &self.edges, &d2.column_chain(f, 1)))
            .collect()
    }

    /// Component of every facet. In the plane these are the biconnected
    /// blocks of the edge graph, so loops touching at a single vertex are
    /// separate; in space, faces are connected through shared edges.
    /// Components are numbered by their smallest facet.
    pub fn components(&self) -> Vec<usize> {
        let raw = match &self.faces {
            None => edge_blocks(self.vertices.len(), &self.edges),
            Some((_, d2)) => return facet_components(d2),
        };
        let mut renumber = vec![usize::MAX; raw.len()];
        let mut k = 0;
        raw.iter()
            .map(|&b| {
                if renumber[b] == usize::MAX {
                    renumber[b] = k;
                    k += 1;
                }
                renumber[b]
            })
            .collect()
    }

    /// Angular order of facets around every hinge, restricted to the
    /// facet's own component.
    pub fn hinge_order(&self) -> Result<HingeOrder> {
        Ok(self.full_hinge_order()?.with_components(self.components()))
    }

    fn full_hinge_order(&self) -> Result<HingeOrder> {
        match &self.faces {
            None => {
                let pts = self.vertices.points2();
                let dt = self.d1.transpose();
                let cycles = (0..self.d1.rows())
                    .map(|v| {
                        let (es, _) = dt.column(v);
                        let mut keyed: Vec<(f64, usize)> = es
                            .iter()
                            .map(|&e| {
                                let c = self.edges.cell(e);
                                let w = if c[0] == v { c[1] } else { c[0] };
                                let d = pts[w] - pts[v];
                                (d.y.atan2(d.x), e)
                            })
                            .collect();
                        sort_angles(&mut keyed, v)?;
                        Ok(keyed.into_iter().map(|x| x.1).collect())
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(HingeOrder::new(cycles))
            }
            Some((_, d2)) => {
                let pts = self.points();
                let normals = self.face_normals();
                let dt = d2.transpose();
                let cycles = (0..d2.rows())
                    .map(|e| {
                        let c = self.edges.cell(e);
                        let t = (pts[c[1]] - pts[c[0]]).normalize();
                        let (u, v) = crate::geom::plane_frame(t);
                        let (fs, signs) = dt.column(e);
                        let mut keyed: Vec<(f64, usize)> = fs
                            .iter()
                            .zip(signs)
                            .map(|(&f, &s)| {
                                let w = normals[f].cross(&t) * s as f64;
                                (w.dot(&v).atan2(w.dot(&u)), f)
                            })
                            .collect();
                        sort_angles(&mut keyed, e)?;
                        Ok(keyed.into_iter().map(|x| x.1).collect())
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(HingeOrder::new(cycles))
            }
        }
    }

    /// Signed area (plane) or volume (space) enclosed by a d-chain; positive
    /// when the chain is oriented outward.
    pub fn signed_volume(&self, cell: &Chain) -> Result<f64> {
        let b = apply(self.facet_boundary(), cell, Arithmetic::Signed)?;
        let ib = self.facet_boundary().apply_int(cell)?;
        if !b.is_zero() || !ib.is_empty() {
            return Err(Error::NotACycle(format!("cell boundary {b} is not zero")));
        }
        match &self.faces {
            None => {
                let p = |i: usize| self.vertices.point2(i);
                Ok(cell
                    .iter()
                    .map(|(e, s)| {
                        let c = self.edges.cell(e);
                        s as f64 * cross2(p(c[0]), p(c[1]))
                    })
                    .sum::<f64>()
                    / 2.0)
            }
            Some((_, d2)) => {
                let p = |i: usize| self.vertices.point3(i);
                let mut vol = 0.0;
                for (f, s) in cell.iter() {
                    let (es, signs) = d2.column(f);
                    let base = p(self.edges.cell(es[0])[0]);
                    let mut acc = 0.0;
                    for (&e, &c) in es.iter().zip(signs) {
                        let ev = self.edges.cell(e);
                        acc += c as f64 * base.dot(&p(ev[0]).cross(&p(ev[1])));
                    }
                    vol += s as f64 * acc;
                }
                Ok(vol / 6.0)
            }
        }
    }
}

fn sort_angles(keyed: &mut [(f64, usize)], hinge: usize) -> Result<()> {
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let n = keyed.len();
    for i in 0..n {
        if n < 2 {
            break;
        }
        let j = (i + 1) % n;
        let mut gap = keyed[j].0 - keyed[i].0;
        if j == 0 {
            gap += std::f64::consts::TAU;
        }
        if gap.abs() < 1e-12 {
            return Err(Error::DegenerateGeometry(format!(
                "facets {} and {} coincide around hinge {hinge}",
                keyed[i].1, keyed[j].1
            )));
        }
    }
    Ok(())
}
