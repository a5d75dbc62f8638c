//! Topological gift wrapping: recovering the d-cells of an arrangement from
//! its (d-1)-skeleton, one boundary cycle at a time.

mod skeleton;

pub use skeleton::Skeleton;

use std::collections::{BTreeMap, BTreeSet};

use crate::chain::{Chain, SignedOperator};
use crate::error::{Error, Result};

/// Facets around each hinge in increasing angle (counter-clockwise about
/// the hinge direction).
///
/// With component labels, stepping around a hinge skips facets of other
/// components, so a cell never leaves the component of its seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HingeOrder {
    cycles: Vec<Vec<usize>>,
    components: Option<Vec<usize>>,
}

impl HingeOrder {
    pub fn new(cycles: Vec<Vec<usize>>) -> Self {
        Self {
            cycles,
            components: None,
        }
    }

    pub fn with_components(mut self, labels: Vec<usize>) -> Self {
        self.components = Some(labels);
        self
    }

    pub fn cycle(&self, hinge: usize) -> &[usize] {
        &self.cycles[hinge]
    }

    fn step(&self, hinge: usize, facet: usize, forward: bool) -> Option<usize> {
        let c = &self.cycles[hinge];
        let i = c.iter().position(|&f| f == facet)?;
        let n = c.len();
        (1..=n)
            .map(|k| if forward { c[(i + k) % n] } else { c[(i + n - k) % n] })
            .find(|&g| match &self.components {
                Some(labels) => labels[g] == labels[facet],
                None => true,
            })
    }

    /// The facet met first when turning clockwise from `facet`.
    pub fn next(&self, hinge: usize, facet: usize) -> Option<usize> {
        self.step(hinge, facet, false)
    }

    /// The facet met first when turning counter-clockwise from `facet`.
    pub fn prev(&self, hinge: usize, facet: usize) -> Option<usize> {
        self.step(hinge, facet, true)
    }
}

/// Extracts every d-cell boundary as a signed chain of facets.
///
/// `boundary` maps facets to hinges. Each facet is used once with each
/// orientation. A cell grows from a seed facet by adding, at every hinge of
/// every facet already in the cell, the angularly adjacent facet with the
/// sign that cancels that facet's contribution to the hinge.
///
/// Cells come out oriented so that their signed volume is positive for
/// bounded cells and negative for the outer boundary of each component.
pub fn extract_cells(
    boundary: &SignedOperator,
    order: &HingeOrder,
    facet_dim: usize,
) -> Result<Vec<Chain>> {
    let n = boundary.cols();
    // used[f] = [positive orientation used, negative orientation used]
    let mut used = vec![[false; 2]; n];
    let mut half_used: BTreeSet<usize> = BTreeSet::new();
    let mut cursor = 0;
    let mut cells = Vec::new();
    loop {
        let seed = match half_used.first() {
            Some(&f) => f,
            None => {
                while cursor < n && used[cursor] != [false, false] {
                    cursor += 1;
                }
                if cursor == n {
                    break;
                }
                cursor
            }
        };
        let sign: i8 = if used[seed][0] { -1 } else { 1 };
        let cell = wrap_one(boundary, order, seed, sign, facet_dim)?;
        for (f, s) in cell.iter() {
            let slot = usize::from(s < 0);
            if used[f][slot] {
                return Err(Error::MalformedSkeleton(format!(
                    "facet {f} used twice with the same orientation"
                )));
            }
            used[f][slot] = true;
            if used[f] == [true, true] {
                half_used.remove(&f);
            } else {
                half_used.insert(f);
            }
        }
        cells.push(cell);
    }
    Ok(cells)
}

/// Extracts the single cell reached from facet `seed` taken with `sign`.
pub fn extract_cell(
    boundary: &SignedOperator,
    order: &HingeOrder,
    seed: usize,
    sign: i8,
    facet_dim: usize,
) -> Result<Chain> {
    wrap_one(boundary, order, seed, sign, facet_dim)
}

fn wrap_one(
    boundary: &SignedOperator,
    order: &HingeOrder,
    seed: usize,
    sign: i8,
    facet_dim: usize,
) -> Result<Chain> {
    let mut c: BTreeMap<usize, i8> = BTreeMap::from([(seed, sign)]);
    let mut pending = vec![seed];
    // Every facet of the cell pulls in its angular neighbour at each of its
    // hinges. Closing only the open hinges is not enough: where a cell's
    // boundary is pinched, two arms can meet and cancel while the angular
    // neighbours across the pinch are still missing.
    while let Some(f) = pending.pop() {
        let cf = c[&f];
        let (hs, vs) = boundary.column(f);
        for (&hinge, &d_f) in hs.iter().zip(vs) {
            let turn = d_f * cf;
            let adj = if turn > 0 {
                order.next(hinge, f)
            } else {
                order.prev(hinge, f)
            }
            .ok_or_else(|| Error::MalformedSkeleton(format!("facet {f} missing at hinge {hinge}")))?;
            if adj == f {
                return Err(Error::DanglingFacet { hinge, facet: f });
            }
            let value = if boundary.get(hinge, adj) != d_f { cf } else { -cf };
            match c.get(&adj) {
                Some(&x) if x == value => {}
                Some(_) => {
                    return Err(Error::MalformedSkeleton(format!(
                        "facet {adj} would enter a cell with both orientations"
                    )))
                }
                None => {
                    c.insert(adj, value);
                    pending.push(adj);
                }
            }
        }
    }
    let mut out = Chain::zero(facet_dim);
    for (f, v) in c {
        out.set(f, v);
    }
    let open = boundary.apply_int(&out)?;
    if let Some(&(hinge, k)) = open.iter().find(|x| x.1 != 0) {
        return Err(Error::MalformedSkeleton(format!(
            "cell grown from facet {seed} is open at hinge {hinge} ({k})"
        )));
    }
    Ok(out)
}

/// Groups facets into connected components, two facets being connected when
/// they share a hinge. Components are numbered by their smallest facet.
pub fn facet_components(boundary: &SignedOperator) -> Vec<usize> {
    let n = boundary.cols();
    let rows = boundary.transpose();
    let mut comp = vec![usize::MAX; n];
    let mut k = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = k;
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            for &h in boundary.column(f).0 {
                for &g in rows.column(h).0 {
                    if comp[g] == usize::MAX {
                        comp[g] = k;
                        stack.push(g);
                    }
                }
            }
        }
        k += 1;
    }
    comp
}

/// Index of the outer cell among `cells`: the one with the most negative
/// signed volume.
pub fn identify_exterior(skeleton: &Skeleton, cells: &[Chain]) -> Result<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (i, c) in cells.iter().enumerate() {
        let v = skeleton.signed_volume(c)?;
        if best.is_none_or(|(_, b)| v < b) {
            best = Some((i, v));
        }
    }
    best.map(|b| b.0)
        .ok_or_else(|| Error::EmptyInput("no cells".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{CellArray, VertexBuffer};

    fn small_complex() -> Skeleton {
        let v = VertexBuffer::from_rows(&[
            [1.0, 1.0],
            [0.5, 0.5],
            [1.0, 0.5],
            [0.0, 0.0],
            [0.5, 0.0],
            [1.0, 0.0],
        ])
        .unwrap();
        let ev = CellArray::new(
            1,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 5],
                vec![3, 4],
                vec![4, 5],
            ],
        );
        Skeleton::planar(v, ev).unwrap()
    }

    #[test]
    fn planar_faces_of_small_complex() {
        let sk = small_complex();
        let order = sk.hinge_order().unwrap();
        let cells = extract_cells(sk.facet_boundary(), &order, 1).unwrap();
        assert_eq!(cells.len(), 4);
        let ext = identify_exterior(&sk, &cells).unwrap();
        let mut areas: Vec<f64> = cells.iter().map(|c| sk.signed_volume(c).unwrap()).collect();
        assert!((areas[ext] + 0.5).abs() < 1e-12);
        areas.remove(ext);
        areas.sort_by(f64::total_cmp);
        assert_eq!(areas, vec![0.125, 0.125, 0.25]);
        for c in &cells {
            assert!(c.iter().all(|(f, _)| f < 8));
        }
        // every edge used once with each sign
        for e in 0..8 {
            let s: i64 = cells.iter().map(|c| c.get(e) as i64).sum();
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn dangling_edge_is_reported() {
        let v = VertexBuffer::from_rows(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [2.0, 2.0]]).unwrap();
        let ev = CellArray::new(1, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![2, 3]]);
        let sk = Skeleton::planar(v, ev).unwrap();
        let order = sk.hinge_order().unwrap();
        assert!(matches!(
            extract_cells(sk.facet_boundary(), &order, 1),
            Err(Error::DanglingFacet { .. })
        ));
    }

    #[test]
    fn next_and_prev_are_inverse() {
        let o = HingeOrder::new(vec![vec![3, 1, 2]]);
        assert_eq!(o.next(0, 1), Some(3));
        assert_eq!(o.prev(0, 3), Some(1));
        assert_eq!(o.prev(0, 2), Some(3));
    }
}
