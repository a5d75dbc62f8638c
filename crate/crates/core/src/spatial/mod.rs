//! Box-overlap and near-point queries.

mod interval;
mod kdtree;

pub use interval::IntervalTree;
pub use kdtree::KdTree;

use crate::chain::{CellArray, VertexBuffer};
use crate::error::{Error, Result};

/// Closed axis-aligned box.
#[derive(Debug, Clone, PartialEq)]
pub struct Aabb {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl Aabb {
    pub fn of_cell(vertices: &VertexBuffer, cell: &[usize]) -> Aabb {
        let mut lo = vertices.point(cell[0]).to_vec();
        let mut hi = lo.clone();
        for &v in &cell[1..] {
            for (k, &c) in vertices.point(v).iter().enumerate() {
                lo[k] = lo[k].min(c);
                hi[k] = hi[k].max(c);
            }
        }
        Aabb { lo, hi }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn expanded(&self, eps: f64) -> Aabb {
        Aabb {
            lo: self.lo.iter().map(|x| x - eps).collect(),
            hi: self.hi.iter().map(|x| x + eps).collect(),
        }
    }

    pub fn overlaps(&self, other: &Aabb) -> bool {
        (0..self.dim()).all(|k| self.lo[k] <= other.hi[k] && other.lo[k] <= self.hi[k])
    }
}

/// One interval tree per coordinate axis over a set of boxes. A box query
/// returns the intersection of the per-axis answers.
#[derive(Debug, Clone)]
pub struct IntervalIndex {
    boxes: Vec<Aabb>,
    trees: Vec<IntervalTree>,
}

impl IntervalIndex {
    pub fn new(boxes: Vec<Aabb>) -> Result<Self> {
        let dim = boxes.first().map_or(0, Aabb::dim);
        if let Some(b) = boxes.iter().find(|b| b.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: b.dim(),
            });
        }
        let trees = (0..dim)
            .map(|k| {
                let ivs: Vec<(f64, f64)> = boxes.iter().map(|b| (b.lo[k], b.hi[k])).collect();
                IntervalTree::new(&ivs)
            })
            .collect();
        Ok(Self { boxes, trees })
    }

    /// Index over the bounding boxes of `cells`, grown by `eps`.
    pub fn of_cells(vertices: &VertexBuffer, cells: &CellArray, eps: f64) -> Result<Self> {
        Self::new(
            cells
                .cells()
                .iter()
                .map(|c| Aabb::of_cell(vertices, c).expanded(eps))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn boxes(&self) -> &[Aabb] {
        &self.boxes
    }

    /// Boxes whose interval on `axis` meets `[lo, hi]`, ascending.
    pub fn query_axis(&self, axis: usize, lo: f64, hi: f64) -> Vec<usize> {
        self.trees[axis].query(lo, hi)
    }

    /// Boxes overlapping `q`, ascending. The tree of the first axis yields
    /// candidates and the other axes are checked on the stored boxes, which
    /// gives the same set as intersecting every per-axis answer.
    pub fn query(&self, q: &Aabb) -> Vec<usize> {
        let Some(first) = self.trees.first() else {
            return Vec::new();
        };
        let mut hits = first.query(q.lo[0], q.hi[0]);
        hits.retain(|&j| self.boxes[j].overlaps(q));
        hits
    }

    /// Boxes overlapping box `i`, excluding `i`.
    pub fn candidates(&self, i: usize) -> Vec<usize> {
        let mut c = self.query(&self.boxes[i]);
        c.retain(|&j| j != i);
        c
    }
}

/// Merges vertices closer than `eps`.
///
/// Points are visited in index order; an unassigned point becomes the
/// representative of every unassigned point within `eps` of it and keeps its
/// own coordinates. Returns the merged buffer and the old-to-new map.
pub fn quotient_vertices(vertices: &VertexBuffer, eps: f64) -> (VertexBuffer, Vec<usize>) {
    let n = vertices.len();
    let tree = KdTree::new(vertices.dim(), vertices.coords());
    let mut map = vec![usize::MAX; n];
    let mut coords = Vec::new();
    let mut next = 0;
    for i in 0..n {
        if map[i] != usize::MAX {
            continue;
        }
        for j in tree.within(vertices.point(i), eps) {
            if map[j] == usize::MAX {
                map[j] = next;
            }
        }
        coords.extend_from_slice(vertices.point(i));
        next += 1;
    }
    let merged = VertexBuffer::new(vertices.dim(), coords).expect("subset of a valid buffer");
    (merged, map)
}

/// Default merge tolerance relative to the size of the data.
pub fn default_epsilon(vertices: &VertexBuffer) -> f64 {
    let d = vertices.diagonal();
    if d > 0.0 {
        1e-8 * d
    } else {
        1e-8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg_boxes(segs: &[[f64; 4]]) -> Vec<Aabb> {
        segs.iter()
            .map(|s| Aabb {
                lo: vec![s[0].min(s[2]), s[1].min(s[3])],
                hi: vec![s[0].max(s[2]), s[1].max(s[3])],
            })
            .collect()
    }

    #[test]
    fn crossing_and_disjoint_segments() {
        let idx = IntervalIndex::new(seg_boxes(&[
            [0.0, 0.0, 1.0, 1.0],
            [0.0, 1.0, 1.0, 0.0],
            [5.0, 5.0, 6.0, 6.0],
        ]))
        .unwrap();
        assert_eq!(idx.candidates(0), vec![1]);
        assert_eq!(idx.candidates(2), Vec::<usize>::new());
    }

    #[test]
    fn shared_endpoint_is_candidate() {
        let idx = IntervalIndex::new(seg_boxes(&[[0.0, 0.0, 1.0, 0.0], [1.0, 0.0, 2.0, 0.0]])).unwrap();
        assert_eq!(idx.candidates(0), vec![1]);
    }

    #[test]
    fn quotient_merges_close_points() {
        let v = VertexBuffer::from_rows(&[
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1e-12, 0.0],
            vec![1.0, 1e-12],
        ])
        .unwrap();
        let (m, map) = quotient_vertices(&v, 1e-9);
        assert_eq!(m.len(), 2);
        assert_eq!(map, vec![0, 1, 0, 1]);
        assert_eq!(m.point(0), &[0.0, 0.0]);
    }

    #[test]
    fn quotient_is_identity_on_separated_points() {
        let v = VertexBuffer::from_rows(&[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let (m, map) = quotient_vertices(&v, 1e-9);
        assert_eq!(m, v);
        assert_eq!(map, vec![0, 1, 2]);
    }

    use proptest::prelude::*;

    fn box_strategy() -> impl Strategy<Value = Aabb> {
        proptest::collection::vec((0.0..10.0f64, 0.0..3.0f64), 3).prop_map(|axes| Aabb {
            lo: axes.iter().map(|a| a.0).collect(),
            hi: axes.iter().map(|a| a.0 + a.1).collect(),
        })
    }

    proptest! {
        #[test]
        fn query_matches_axis_intersection_and_brute_force(
            boxes in proptest::collection::vec(box_strategy(), 1..60),
            q in box_strategy(),
        ) {
            let idx = IntervalIndex::new(boxes.clone()).unwrap();
            let brute: Vec<usize> = (0..boxes.len()).filter(|&i| boxes[i].overlaps(&q)).collect();
            let mut axes: Vec<usize> = idx.query_axis(0, q.lo[0], q.hi[0]);
            for k in 1..3 {
                let other = idx.query_axis(k, q.lo[k], q.hi[k]);
                axes.retain(|i| other.contains(i));
            }
            prop_assert_eq!(idx.query(&q), brute.clone());
            prop_assert_eq!(axes, brute);
        }
    }
}
