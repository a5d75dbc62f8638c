use std::collections::{BTreeMap, BTreeSet};

use crate::chain::{CellArray, Chain, SignedOperator, VertexBuffer};
use crate::error::{Error, Result};
use crate::pipeline::FacetPieces;
use crate::spatial::{quotient_vertices, Aabb, IntervalIndex};

/// Vertices, edges and oriented faces of a 2-complex in space.
#[derive(Debug, Clone, PartialEq)]
pub struct SpatialSkeleton {
    pub vertices: VertexBuffer,
    pub edges: CellArray,
    pub faces: CellArray,
    pub d2: SignedOperator,
}

/// Welds the pieces of all faces into one complex.
///
/// Points closer than `eps` are identified, edges are split at vertices
/// lying on them, and pieces bounded by the same edges collapse into one
/// face. Each face is oriented so that its lowest-index edge gets `+1`.
pub fn merge_pieces(pieces: &[FacetPieces], eps: f64) -> Result<SpatialSkeleton> {
    let mut coords = Vec::new();
    let mut raw: Vec<Vec<Vec<usize>>> = Vec::new();
    for fp in pieces {
        for piece in &fp.pieces {
            let mut lps = Vec::new();
            for lp in piece {
                let mut ids = Vec::with_capacity(lp.len());
                for p in lp {
                    ids.push(coords.len() / 3);
                    coords.extend_from_slice(&[p.x, p.y, p.z]);
                }
                lps.push(ids);
            }
            raw.push(lps);
        }
    }
    if raw.is_empty() {
        return Err(Error::EmptyInput("no face pieces".into()));
    }
    let (vertices, map) = quotient_vertices(&VertexBuffer::new(3, coords)?, eps);
    let points = vertices.points3();

    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    for lps in raw {
        let mut kept = Vec::new();
        for lp in lps {
            let mut ids: Vec<usize> = lp.iter().map(|&i| map[i]).collect();
            ids.dedup();
            while ids.len() > 1 && ids.first() == ids.last() {
                ids.pop();
            }
            if ids.len() >= 3 {
                kept.push(ids);
            }
        }
        if !kept.is_empty() {
            faces.push(kept);
        }
    }

    // Split edges at vertices lying in their interior.
    let mut edge_set: BTreeSet<(usize, usize)> = BTreeSet::new();
    for lp in faces.iter().flatten() {
        for k in 0..lp.len() {
            let (a, b) = (lp[k], lp[(k + 1) % lp.len()]);
            edge_set.insert((a.min(b), a.max(b)));
        }
    }
    let edge_list: Vec<(usize, usize)> = edge_set.into_iter().collect();
    let index = IntervalIndex::new(
        edge_list
            .iter()
            .map(|&(a, b)| Aabb::of_cell(&vertices, &[a, b]).expanded(eps))
            .collect(),
    )?;
    let mut splits: BTreeMap<(usize, usize), Vec<(f64, usize)>> = BTreeMap::new();
    for (v, p) in points.iter().enumerate() {
        let q = Aabb {
            lo: vec![p.x, p.y, p.z],
            hi: vec![p.x, p.y, p.z],
        };
        for e in index.query(&q) {
            let (a, b) = edge_list[e];
            if v == a || v == b {
                continue;
            }
            let d = points[b] - points[a];
            let t = (p - points[a]).dot(&d) / d.norm_squared();
            let len = d.norm();
            if t * len <= eps || (1.0 - t) * len <= eps {
                continue;
            }
            if (points[a] + d * t - p).norm() <= eps {
                splits.entry((a, b)).or_default().push((t, v));
            }
        }
    }
    for s in splits.values_mut() {
        s.sort_by(|x, y| x.0.total_cmp(&y.0));
    }
    let expand = |lp: &[usize]| -> Vec<usize> {
        let mut out = Vec::new();
        for k in 0..lp.len() {
            let (a, b) = (lp[k], lp[(k + 1) % lp.len()]);
            out.push(a);
            if let Some(s) = splits.get(&(a.min(b), a.max(b))) {
                if a < b {
                    out.extend(s.iter().map(|x| x.1));
                } else {
                    out.extend(s.iter().rev().map(|x| x.1));
                }
            }
        }
        out
    };
    let faces: Vec<Vec<Vec<usize>>> = faces
        .iter()
        .map(|lps| lps.iter().map(|l| expand(l)).collect())
        .collect();

    let mut edge_set: BTreeSet<(usize, usize)> = BTreeSet::new();
    for lp in faces.iter().flatten() {
        for k in 0..lp.len() {
            let (a, b) = (lp[k], lp[(k + 1) % lp.len()]);
            edge_set.insert((a.min(b), a.max(b)));
        }
    }
    let edge_index: BTreeMap<(usize, usize), usize> =
        edge_set.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let edges = CellArray::new(1, edge_set.iter().map(|&(a, b)| vec![a, b]).collect());

    let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut columns: Vec<Chain> = Vec::new();
    for (fi, lps) in faces.iter().enumerate() {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for lp in lps {
            for k in 0..lp.len() {
                let (a, b) = (lp[k], lp[(k + 1) % lp.len()]);
                let e = edge_index[&(a.min(b), a.max(b))];
                *acc.entry(e).or_default() += if a < b { 1 } else { -1 };
            }
        }
        if acc.values().any(|v| v.abs() > 1) {
            return Err(Error::InconsistentFacet {
                facet: fi,
                detail: "piece boundary runs over an edge twice".into(),
            });
        }
        let mut chain = Chain::from_pairs(1, acc.into_iter().filter(|&(_, v)| v != 0))?;
        let Some((_, first)) = chain.iter().next() else {
            continue;
        };
        if first < 0 {
            chain = chain.neg();
        }
        let key: Vec<usize> = chain.support().collect();
        if let std::collections::btree_map::Entry::Vacant(slot) = seen.entry(key) {
            slot.insert(columns.len());
            columns.push(chain);
        }
    }
    let d2 = SignedOperator::from_columns(edges.len(), &columns)?;
    let fv = face_vertices(&edges, &columns);
    Ok(SpatialSkeleton {
        vertices,
        edges,
        faces: fv,
        d2,
    })
}

fn face_vertices(edges: &CellArray, columns: &[Chain]) -> CellArray {
    CellArray::new(
        2,
        columns
            .iter()
            .map(|c| {
                let mut vs: Vec<usize> = c.support().flat_map(|e| edges.cell(e).to_vec()).collect();
                vs.sort_unstable();
                vs.dedup();
                vs
            })
            .collect(),
    )
}

/// Repeatedly removes faces having an edge that no other face shares, then
/// drops unused edges and vertices. Returns the cleaned complex and the
/// number of faces removed.
pub fn regularize(sk: SpatialSkeleton) -> (SpatialSkeleton, usize) {
    let n_faces = sk.d2.cols();
    let mut alive = vec![true; n_faces];
    let mut count = vec![0usize; sk.edges.len()];
    for (e, _, _) in sk.d2.triples() {
        count[e] += 1;
    }
    loop {
        let mut changed = false;
        for (f, live) in alive.iter_mut().enumerate() {
            if *live && sk.d2.column(f).0.iter().any(|&e| count[e] < 2) {
                *live = false;
                for &e in sk.d2.column(f).0 {
                    count[e] -= 1;
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let dropped = alive.iter().filter(|&&a| !a).count();
    if dropped == 0 {
        return (sk, 0);
    }
    let mut used = vec![false; sk.vertices.len()];
    for (e, c) in sk.edges.cells().iter().enumerate() {
        if count[e] > 0 {
            used[c[0]] = true;
            used[c[1]] = true;
        }
    }
    let mut vmap = vec![usize::MAX; sk.vertices.len()];
    let mut coords = Vec::new();
    for v in (0..sk.vertices.len()).filter(|&v| used[v]) {
        vmap[v] = coords.len() / 3;
        coords.extend_from_slice(sk.vertices.point(v));
    }
    let mut emap = vec![usize::MAX; sk.edges.len()];
    let mut edges = Vec::new();
    for (e, c) in sk.edges.cells().iter().enumerate() {
        if count[e] > 0 {
            emap[e] = edges.len();
            edges.push(vec![vmap[c[0]], vmap[c[1]]]);
        }
    }
    let columns: Vec<Chain> = (0..n_faces)
        .filter(|&f| alive[f])
        .map(|f| {
            let mut c = Chain::zero(1);
            for (e, s) in sk.d2.column_chain(f, 1).iter() {
                c.set(emap[e], s);
            }
            c
        })
        .collect();
    let edges = CellArray::new(1, edges);
    let d2 = SignedOperator::from_columns(edges.len(), &columns).expect("rows in range");
    let faces = face_vertices(&edges, &columns);
    (
        SpatialSkeleton {
            vertices: VertexBuffer::new(3, coords).expect("subset of a valid buffer"),
            edges,
            faces,
            d2,
        },
        dropped,
    )
}
