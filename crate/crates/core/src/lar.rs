//! Oriented boundary operators assembled from characteristic matrices.
//!
//! A face is given only by its vertex set; its boundary edges are the input
//! edges with both ends in that set. A 3-cell is likewise given by its
//! vertex set and bounded by the faces inside it.

use std::collections::{BTreeMap, VecDeque};

use crate::chain::{CellArray, Chain, SignedOperator, VertexBuffer};
use crate::error::{Error, Result};
use crate::geom::{plane_frame, P3};
use crate::giftwrap::Skeleton;

/// Edges whose two vertices both belong to `cell`, ascending.
fn edges_within(edge_stars: &CellArray, edges: &CellArray, cell: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for &v in cell {
        for &e in edge_stars.cell(v) {
            let c = edges.cell(e);
            let other = if c[0] == v { c[1] } else { c[0] };
            if other > v && cell.binary_search(&other).is_ok() {
                out.push(e);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Splits an undirected set of edges into closed loops. Each loop is the
/// list of `(edge, +1 if walked from low to high vertex)`.
fn undirected_loops(edges: &CellArray, face_edges: &[usize], face: usize) -> Result<Vec<Vec<(usize, i8)>>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &e in face_edges {
        let c = edges.cell(e);
        adj.entry(c[0]).or_default().push(e);
        adj.entry(c[1]).or_default().push(e);
    }
    if let Some((v, _)) = adj.iter().find(|(_, es)| es.len() % 2 == 1) {
        return Err(Error::DegenerateCell {
            cell: face,
            detail: format!("boundary is open at vertex {v}"),
        });
    }
    let mut used = vec![false; edges.len()];
    let mut loops = Vec::new();
    for &e0 in face_edges {
        if used[e0] {
            continue;
        }
        let start = edges.cell(e0)[0];
        let mut lp = Vec::new();
        let mut cur = start;
        let mut e = e0;
        loop {
            used[e] = true;
            let c = edges.cell(e);
            let (next, sign) = if c[0] == cur { (c[1], 1) } else { (c[0], -1) };
            lp.push((e, sign));
            cur = next;
            if cur == start {
                break;
            }
            match adj[&cur].iter().find(|&&f| !used[f]) {
                Some(&f) => e = f,
                None => {
                    return Err(Error::DegenerateCell {
                        cell: face,
                        detail: "boundary walk got stuck".into(),
                    })
                }
            }
        }
        loops.push(lp);
    }
    Ok(loops)
}

fn loop_area(points: &[P3], edges: &CellArray, lp: &[(usize, i8)]) -> P3 {
    lp.iter()
        .map(|&(e, s)| {
            let c = edges.cell(e);
            let (a, b) = if s > 0 { (c[0], c[1]) } else { (c[1], c[0]) };
            points[a].cross(&points[b])
        })
        .sum::<P3>()
        / 2.0
}

/// Signed `∂_2` from vertex sets of faces.
///
/// Plane faces are oriented counter-clockwise. A face in space is oriented
/// so that the lowest-index edge of its outer loop gets `+1`. Inner loops
/// (holes) take the opposite orientation of the outer loop.
pub fn boundary2(vertices: &VertexBuffer, edges: &CellArray, faces: &CellArray) -> Result<SignedOperator> {
    let points = vertices.points3();
    let stars = edges.vertex_stars(vertices.len());
    let mut columns = Vec::with_capacity(faces.len());
    for (f, cell) in faces.cells().iter().enumerate() {
        let mut cell = cell.clone();
        cell.sort_unstable();
        let fe = edges_within(&stars, edges, &cell);
        if fe.len() < 3 {
            return Err(Error::DegenerateCell {
                cell: f,
                detail: format!("only {} boundary edges", fe.len()),
            });
        }
        let loops = undirected_loops(edges, &fe, f)?;
        let areas: Vec<P3> = loops.iter().map(|l| loop_area(&points, edges, l)).collect();
        let outer = (0..loops.len())
            .max_by(|&a, &b| areas[a].norm().total_cmp(&areas[b].norm()))
            .unwrap_or(0);
        if areas[outer].norm() == 0.0 {
            return Err(Error::DegenerateCell {
                cell: f,
                detail: "zero area".into(),
            });
        }
        let reference = if vertices.dim() == 2 {
            P3::z()
        } else {
            let lowest = loops[outer].iter().min_by_key(|x| x.0).unwrap();
            areas[outer] * lowest.1 as f64
        };
        let mut col = Chain::zero(1);
        for (k, lp) in loops.iter().enumerate() {
            let aligned = areas[k].dot(&reference) > 0.0;
            let want = if k == outer { aligned } else { !aligned };
            let flip: i8 = if want { 1 } else { -1 };
            for &(e, s) in lp {
                col.set(e, s * flip);
            }
        }
        columns.push(col);
    }
    SignedOperator::from_columns(edges.len(), &columns)
}

/// Signed `∂_3` from vertex sets of 3-cells, each oriented outward.
pub fn boundary3(
    vertices: &VertexBuffer,
    edges: &CellArray,
    faces: &CellArray,
    d2: &SignedOperator,
    cells: &CellArray,
) -> Result<SignedOperator> {
    let skeleton = Skeleton::spatial(vertices.clone(), edges.clone(), faces.clone(), d2.clone())?;
    let face_stars = faces.vertex_stars(vertices.len());
    let mut columns = Vec::with_capacity(cells.len());
    for (c, cell) in cells.cells().iter().enumerate() {
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for &v in cell {
            for &f in face_stars.cell(v) {
                *count.entry(f).or_default() += 1;
            }
        }
        let cf: Vec<usize> = count
            .into_iter()
            .filter(|&(f, n)| n == faces.cell(f).len())
            .map(|(f, _)| f)
            .collect();
        if cf.len() < 4 {
            return Err(Error::DegenerateCell {
                cell: c,
                detail: format!("only {} boundary faces", cf.len()),
            });
        }
        // Faces of this cell around every edge.
        let mut around: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &f in &cf {
            for &e in d2.column(f).0 {
                around.entry(e).or_default().push(f);
            }
        }
        if let Some((e, _)) = around.iter().find(|(_, fs)| fs.len() != 2) {
            return Err(Error::DegenerateCell {
                cell: c,
                detail: format!("edge {e} is not shared by exactly two faces"),
            });
        }
        let mut sign: BTreeMap<usize, i8> = BTreeMap::from([(cf[0], 1)]);
        let mut queue = VecDeque::from([cf[0]]);
        while let Some(f) = queue.pop_front() {
            let (es, vs) = d2.column(f);
            for (&e, &v) in es.iter().zip(vs) {
                let g = around[&e].iter().copied().find(|&g| g != f).unwrap();
                let want = -(sign[&f] * v) * d2.get(e, g);
                match sign.get(&g) {
                    Some(&s) if s != want => {
                        return Err(Error::DegenerateCell {
                            cell: c,
                            detail: "boundary is not orientable".into(),
                        })
                    }
                    Some(_) => {}
                    None => {
                        sign.insert(g, want);
                        queue.push_back(g);
                    }
                }
            }
        }
        if sign.len() != cf.len() {
            return Err(Error::DegenerateCell {
                cell: c,
                detail: "boundary is not connected".into(),
            });
        }
        let mut col = Chain::zero(2);
        for (f, s) in sign {
            col.set(f, s);
        }
        if skeleton.signed_volume(&col)? < 0.0 {
            col = col.neg();
        }
        columns.push(col);
    }
    SignedOperator::from_columns(faces.len(), &columns)
}

/// Boundary edges of convex faces given only by vertex sets: face vertices
/// are sorted by angle around their centroid in the face plane.
pub fn convex_face_edges(vertices: &VertexBuffer, faces: &CellArray) -> Result<CellArray> {
    let points = vertices.points3();
    let mut edges = Vec::new();
    for (f, cell) in faces.cells().iter().enumerate() {
        if cell.len() < 3 {
            return Err(Error::DegenerateCell {
                cell: f,
                detail: "fewer than three vertices".into(),
            });
        }
        let centroid = cell.iter().map(|&v| points[v]).sum::<P3>() / cell.len() as f64;
        let mut normal = P3::zeros();
        for i in 0..cell.len() {
            let a = points[cell[i]] - centroid;
            let b = points[cell[(i + 1) % cell.len()]] - centroid;
            let n = a.cross(&b);
            normal += if n.dot(&normal) < 0.0 { -n } else { n };
        }
        if normal.norm() == 0.0 {
            return Err(Error::DegenerateCell {
                cell: f,
                detail: "collinear vertices".into(),
            });
        }
        let (u, v) = plane_frame(normal);
        let mut order: Vec<(f64, usize)> = cell
            .iter()
            .map(|&i| {
                let d = points[i] - centroid;
                (d.dot(&v).atan2(d.dot(&u)), i)
            })
            .collect();
        order.sort_by(|a, b| a.0.total_cmp(&b.0));
        for k in 0..order.len() {
            let (a, b) = (order[k].1, order[(k + 1) % order.len()].1);
            edges.push(vec![a.min(b), a.max(b)]);
        }
    }
    let (edges, _) = crate::chain::canonicalize(&CellArray::new(1, edges), vertices.len())?;
    Ok(edges.sorted().0)
}
