//! Small geometric helpers shared by the planar and spatial pipelines.

use std::collections::BTreeMap;

use nalgebra::{Vector2, Vector3};

use crate::chain::{CellArray, Chain};
use crate::error::{Error, Result};

pub type P2 = Vector2<f64>;
pub type P3 = Vector3<f64>;

pub fn cross2(a: P2, b: P2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Oriented edges `(tail, head)` of an edge chain: coefficient `+1` runs from
/// the lower to the higher vertex index.
pub fn oriented_edges(edges: &CellArray, chain: &Chain) -> Vec<(usize, usize)> {
    chain
        .iter()
        .map(|(e, c)| {
            let (a, b) = (edges.cell(e)[0], edges.cell(e)[1]);
            if c > 0 {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

/// Splits a 1-cycle into closed vertex loops. Fails when some vertex has
/// unequal in and out degree.
pub fn loops(edges: &CellArray, chain: &Chain) -> Result<Vec<Vec<usize>>> {
    let oriented = oriented_edges(edges, chain);
    let mut out_edges: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut balance: BTreeMap<usize, i64> = BTreeMap::new();
    for &(a, b) in &oriented {
        out_edges.entry(a).or_default().push(b);
        *balance.entry(a).or_default() += 1;
        *balance.entry(b).or_default() -= 1;
    }
    if balance.values().any(|&b| b != 0) {
        return Err(Error::NotACycle("edge chain has open ends".into()));
    }
    for heads in out_edges.values_mut() {
        heads.reverse();
    }
    let mut result = Vec::new();
    while let Some((&start, _)) = out_edges.iter().find(|(_, v)| !v.is_empty()) {
        let mut lp = vec![start];
        let mut cur = start;
        loop {
            let next = out_edges
                .get_mut(&cur)
                .and_then(|v| v.pop())
                .ok_or_else(|| Error::NotACycle("loop walk got stuck".into()))?;
            if next == start {
                break;
            }
            lp.push(next);
            cur = next;
        }
        result.push(lp);
    }
    Ok(result)
}

pub fn polygon_area2(points: &[P2], lp: &[usize]) -> f64 {
    let n = lp.len();
    (0..n)
        .map(|i| cross2(points[lp[i]], points[lp[(i + 1) % n]]))
        .sum::<f64>()
        / 2.0
}

/// Area vector `½ Σ a × b` over the oriented edges of a 1-cycle in space.
pub fn area_vector(points: &[P3], edges: &CellArray, chain: &Chain) -> P3 {
    oriented_edges(edges, chain)
        .iter()
        .map(|&(a, b)| points[a].cross(&points[b]))
        .sum::<P3>()
        / 2.0
}

/// Even-odd point-in-polygon test over any number of loops.
pub fn point_in_loops(points: &[P2], loops: &[Vec<usize>], q: P2) -> bool {
    let mut inside = false;
    for lp in loops {
        let n = lp.len();
        for i in 0..n {
            let a = points[lp[i]];
            let b = points[lp[(i + 1) % n]];
            if (a.y > q.y) != (b.y > q.y) {
                let x = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if x > q.x {
                    inside = !inside;
                }
            }
        }
    }
    inside
}

/// Triangulates planar loops (one outer boundary plus holes) with ear
/// clipping. Loops are in vertex indices into `points`; the result is a list
/// of index triples with the orientation of the largest loop.
pub fn triangulate_loops(points: &[P2], loops: &[Vec<usize>]) -> Vec<[usize; 3]> {
    if loops.is_empty() {
        return Vec::new();
    }
    let areas: Vec<f64> = loops.iter().map(|l| polygon_area2(points, l)).collect();
    let outer = (0..loops.len())
        .max_by(|&a, &b| areas[a].abs().total_cmp(&areas[b].abs()))
        .unwrap_or(0);
    let outer_ccw = areas[outer] >= 0.0;
    // Group holes under the outer loop that contains them; loops not inside
    // any other start a new polygon.
    let mut order: Vec<usize> = (0..loops.len()).collect();
    order.sort_by(|&a, &b| areas[b].abs().total_cmp(&areas[a].abs()));
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for &l in &order {
        let probe = points[loops[l][0]];
        let host = groups
            .iter()
            .position(|(o, _)| point_in_loops(points, &[loops[*o].clone()], probe));
        match host {
            Some(g) if (areas[l] >= 0.0) != (areas[groups[g].0] >= 0.0) => groups[g].1.push(l),
            _ => groups.push((l, Vec::new())),
        }
    }
    let mut tris = Vec::new();
    let mut ec = earcut::Earcut::new();
    for (o, holes) in groups {
        let mut ids: Vec<usize> = loops[o].clone();
        let mut hole_starts = Vec::new();
        for &h in &holes {
            hole_starts.push(ids.len() as u32);
            ids.extend_from_slice(&loops[h]);
        }
        let mut out: Vec<u32> = Vec::new();
        ec.earcut(
            ids.iter().map(|&i| [points[i].x, points[i].y]),
            &hole_starts,
            &mut out,
        );
        for t in out.chunks(3) {
            let (a, b, c) = (ids[t[0] as usize], ids[t[1] as usize], ids[t[2] as usize]);
            let area = cross2(points[b] - points[a], points[c] - points[a]);
            if (area >= 0.0) == outer_ccw {
                tris.push([a, b, c]);
            } else {
                tris.push([a, c, b]);
            }
        }
    }
    tris
}

/// Orthonormal frame `(u, v)` of the plane with normal `n`.
pub fn plane_frame(n: P3) -> (P3, P3) {
    let n = n.normalize();
    let helper = if n.x.abs() < 0.9 { P3::x() } else { P3::y() };
    let u = n.cross(&helper).normalize();
    let v = n.cross(&u);
    (u, v)
}

/// Triangulates a planar face in space given as an edge cycle.
pub fn triangulate_face(points: &[P3], edges: &CellArray, chain: &Chain) -> Result<Vec<[usize; 3]>> {
    let lps = loops(edges, chain)?;
    let n = area_vector(points, edges, chain);
    if n.norm() == 0.0 {
        return Err(Error::degenerate("face with zero area"));
    }
    let (u, v) = plane_frame(n);
    let mut local = vec![P2::zeros(); points.len()];
    for &i in lps.iter().flatten() {
        local[i] = P2::new(points[i].dot(&u), points[i].dot(&v));
    }
    Ok(triangulate_loops(&local, &lps))
}

/// Result of intersecting a ray with a primitive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RayHit {
    Miss,
    Hit(f64),
    /// Too close to an edge or vertex of the primitive to decide.
    Ambiguous,
}

/// Ray `o + t d` against segment `[a, b]`, `t > 0`.
pub fn ray_segment(o: P2, d: P2, a: P2, b: P2, tol: f64) -> RayHit {
    let e = b - a;
    let denom = cross2(d, e);
    let w = a - o;
    if denom.abs() <= 1e-14 * d.norm() * e.norm() {
        let dist = cross2(d.normalize(), w).abs();
        if dist <= tol {
            return RayHit::Ambiguous;
        }
        return RayHit::Miss;
    }
    let t = cross2(w, e) / denom;
    let s = cross2(w, d) / denom;
    let len = e.norm();
    if t <= tol / d.norm() {
        if t >= -tol / d.norm() && s >= -tol / len && s <= 1.0 + tol / len {
            return RayHit::Ambiguous;
        }
        return RayHit::Miss;
    }
    if s < -tol / len || s > 1.0 + tol / len {
        return RayHit::Miss;
    }
    if s <= tol / len || s >= 1.0 - tol / len {
        return RayHit::Ambiguous;
    }
    RayHit::Hit(t)
}

/// Ray `o + t d` against triangle `(a, b, c)` by barycentric coordinates.
pub fn ray_triangle(o: P3, d: P3, tri: [P3; 3], tol: f64) -> RayHit {
    let [a, b, c] = tri;
    let e1 = b - a;
    let e2 = c - a;
    let p = d.cross(&e2);
    let det = e1.dot(&p);
    let scale = d.norm() * e1.norm() * e2.norm();
    if det.abs() <= 1e-12 * scale {
        return RayHit::Miss;
    }
    let inv = 1.0 / det;
    let s = o - a;
    let u = s.dot(&p) * inv;
    let q = s.cross(&e1);
    let v = d.dot(&q) * inv;
    let t = e2.dot(&q) * inv;
    let w = 1.0 - u - v;
    let rel = tol / e1.norm().max(e2.norm()).max(1e-300);
    if u < -rel || v < -rel || w < -rel {
        return RayHit::Miss;
    }
    if t <= tol / d.norm() {
        if t >= -tol / d.norm() {
            return RayHit::Ambiguous;
        }
        return RayHit::Miss;
    }
    if u <= rel || v <= rel || w <= rel {
        // On a triangle edge: may be an internal diagonal, so the caller
        // must retry with another direction.
        return RayHit::Ambiguous;
    }
    RayHit::Hit(t)
}

/// Deterministic sequence of ray directions: `+x` first, then well spread.
pub fn ray_direction2(k: usize) -> P2 {
    if k == 0 {
        return P2::new(1.0, 0.0);
    }
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let a = 0.1234 + k as f64 * golden;
    P2::new(a.cos(), a.sin())
}

pub fn ray_direction3(k: usize) -> P3 {
    if k == 0 {
        return P3::new(1.0, 0.0, 0.0);
    }
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let z = 1.0 - 2.0 * ((k as f64 * 0.618_033_988_749_895 + 0.137) % 1.0);
    let r = (1.0 - z * z).sqrt();
    let a = 0.3 + k as f64 * golden;
    P3::new(r * a.cos() + 0.05, r * a.sin(), z).normalize()
}
