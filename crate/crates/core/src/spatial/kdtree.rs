/// Static kd-tree over points of fixed dimension, for radius queries.
#[derive(Debug, Clone)]
pub struct KdTree {
    dim: usize,
    coords: Vec<f64>,
    // Permutation of point ids; each subrange is split at its midpoint.
    perm: Vec<usize>,
    axis: Vec<u8>,
}

impl KdTree {
    /// `coords` holds `n * dim` values.
    pub fn new(dim: usize, coords: &[f64]) -> Self {
        let n = coords.len() / dim;
        let mut tree = Self {
            dim,
            coords: coords.to_vec(),
            perm: (0..n).collect(),
            axis: vec![0; n],
        };
        tree.build(0, n);
        tree
    }

    fn at(&self, id: usize, k: usize) -> f64 {
        self.coords[id * self.dim + k]
    }

    fn build(&mut self, start: usize, end: usize) {
        if end - start <= 1 {
            return;
        }
        let mut best = (0, f64::NEG_INFINITY);
        for k in 0..self.dim {
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for &id in &self.perm[start..end] {
                let c = self.at(id, k);
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if hi - lo > best.1 {
                best = (k, hi - lo);
            }
        }
        let k = best.0;
        let mid = start + (end - start) / 2;
        let coords = &self.coords;
        let dim = self.dim;
        self.perm[start..end].select_nth_unstable_by(mid - start, |&a, &b| {
            coords[a * dim + k].total_cmp(&coords[b * dim + k])
        });
        self.axis[mid] = k as u8;
        self.build(start, mid);
        self.build(mid + 1, end);
    }

    /// Ids of points within Euclidean distance `r` (inclusive) of `q`.
    pub fn within(&self, q: &[f64], r: f64) -> Vec<usize> {
        let mut out = Vec::new();
        self.search(q, r, 0, self.perm.len(), &mut out);
        out.sort_unstable();
        out
    }

    fn search(&self, q: &[f64], r: f64, start: usize, end: usize, out: &mut Vec<usize>) {
        if start >= end {
            return;
        }
        let mid = start + (end - start) / 2;
        let id = self.perm[mid];
        let d2: f64 = (0..self.dim)
            .map(|k| (self.at(id, k) - q[k]).powi(2))
            .sum();
        if d2 <= r * r {
            out.push(id);
        }
        if end - start == 1 {
            return;
        }
        let k = self.axis[mid] as usize;
        let diff = q[k] - self.at(id, k);
        if diff <= r {
            self.search(q, r, start, mid, out);
        }
        if diff >= -r {
            self.search(q, r, mid + 1, end, out);
        }
    }
}
