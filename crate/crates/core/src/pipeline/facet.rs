use crate::chain::{CellArray, SignedOperator, VertexBuffer};
use crate::error::Result;
use crate::geom::{loops, point_in_loops, triangulate_loops, cross2, P2, P3};
use crate::pipeline::section::{plane_section, SubmanifoldMap};
use crate::pipeline::{arrange2d, Config};
use crate::shells::NestingRule;

/// The pieces a face is cut into by the faces around it. Each piece is a
/// list of closed loops in space (outer loop first in no particular order),
/// oriented counter-clockwise about the face normal for the outer boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct FacetPieces {
    pub facet: usize,
    pub normal: P3,
    pub pieces: Vec<Vec<Vec<P3>>>,
}

/// Cuts face `facet` by every face in `candidates`: all of them are mapped
/// to the plane of the face, sectioned by it, arranged in the plane, and the
/// resulting regions inside the face are mapped back.
pub fn subdivide_facet(
    vertices: &VertexBuffer,
    edges: &CellArray,
    d2: &SignedOperator,
    facet: usize,
    candidates: &[usize],
    eps: f64,
) -> Result<FacetPieces> {
    let points = vertices.points3();
    let own = d2.column_chain(facet, 1);
    let map = SubmanifoldMap::for_face(&points, edges, &own, facet)?;
    let local_edges = |f: usize| -> Vec<(P3, P3)> {
        d2.column(f)
            .0
            .iter()
            .map(|&e| {
                let c = edges.cell(e);
                (map.apply(points[c[0]]), map.apply(points[c[1]]))
            })
            .collect()
    };

    let mut segments: Vec<[P2; 2]> = local_edges(facet)
        .into_iter()
        .map(|(a, b)| [a.xy(), b.xy()])
        .collect();
    for &t in candidates {
        if t == facet {
            continue;
        }
        let le = local_edges(t);
        let above = le.iter().all(|(a, b)| a.z > eps && b.z > eps);
        let below = le.iter().all(|(a, b)| a.z < -eps && b.z < -eps);
        if above || below {
            continue;
        }
        segments.extend(plane_section(&le, eps, t)?);
    }

    let mut coords = Vec::with_capacity(segments.len() * 4);
    let mut ev = Vec::with_capacity(segments.len());
    for s in &segments {
        if (s[1] - s[0]).norm() <= eps {
            continue;
        }
        let k = coords.len() / 2;
        coords.extend_from_slice(&[s[0].x, s[0].y, s[1].x, s[1].y]);
        ev.push(vec![k, k + 1]);
    }
    let soup = VertexBuffer::new(2, coords)?;
    let config = Config {
        epsilon: Some(eps),
        nesting: NestingRule::Arrangement,
    };
    let arr = arrange2d(&soup, &CellArray::new(1, ev), &config)?;

    let own_loops: Vec<Vec<usize>> = loops(edges, &own)?;
    let mut own_pts: Vec<P2> = vec![P2::zeros(); points.len()];
    for &v in own_loops.iter().flatten() {
        own_pts[v] = map.apply(points[v]).xy();
    }

    let arr_pts = arr.complex.vertices.points2();
    let arr_edges = &arr.complex.skeletons[1];
    let top = arr.top_boundary();
    let mut pieces = Vec::new();
    for j in 0..top.cols() {
        let lps = loops(arr_edges, &top.column_chain(j, 1))?;
        let tris = triangulate_loops(&arr_pts, &lps);
        let Some(best) = tris.iter().max_by(|a, b| {
            tri_area(&arr_pts, a).total_cmp(&tri_area(&arr_pts, b))
        }) else {
            continue;
        };
        let sample = (arr_pts[best[0]] + arr_pts[best[1]] + arr_pts[best[2]]) / 3.0;
        if !point_in_loops(&own_pts, &own_loops, sample) {
            continue;
        }
        pieces.push(
            lps.iter()
                .map(|l| l.iter().map(|&i| map.invert(arr_pts[i])).collect())
                .collect(),
        );
    }
    Ok(FacetPieces {
        facet,
        normal: map.normal(),
        pieces,
    })
}

fn tri_area(p: &[P2], t: &[usize; 3]) -> f64 {
    cross2(p[t[1]] - p[t[0]], p[t[2]] - p[t[0]]).abs()
}
