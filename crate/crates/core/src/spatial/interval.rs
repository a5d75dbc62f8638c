/// Static interval tree over closed intervals `[lo, hi]`.
///
/// Intervals are sorted by `lo` and laid out as an implicit balanced tree
/// (the node of a range is its midpoint); each node keeps the largest `hi`
/// of its subtree, which prunes the stabbing search.
#[derive(Debug, Clone, Default)]
pub struct IntervalTree {
    lo: Vec<f64>,
    hi: Vec<f64>,
    id: Vec<usize>,
    max_hi: Vec<f64>,
}

impl IntervalTree {
    pub fn new(intervals: &[(f64, f64)]) -> Self {
        let mut order: Vec<usize> = (0..intervals.len()).collect();
        order.sort_by(|&a, &b| intervals[a].0.total_cmp(&intervals[b].0).then(a.cmp(&b)));
        let lo: Vec<f64> = order.iter().map(|&i| intervals[i].0).collect();
        let hi: Vec<f64> = order.iter().map(|&i| intervals[i].1).collect();
        let mut max_hi = hi.clone();
        fill_max(&mut max_hi, &hi, 0, hi.len());
        Self {
            lo,
            hi,
            id: order,
            max_hi,
        }
    }

    pub fn len(&self) -> usize {
        self.id.len()
    }

    pub fn is_empty(&self) -> bool {
        self.id.is_empty()
    }

    /// Ids of all intervals meeting `[a, b]`, ascending.
    pub fn query(&self, a: f64, b: f64) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(a, b, 0, self.len(), &mut out);
        out.sort_unstable();
        out
    }

    fn collect(&self, a: f64, b: f64, start: usize, end: usize, out: &mut Vec<usize>) {
        if start >= end {
            return;
        }
        let mid = start + (end - start) / 2;
        if self.max_hi[mid] < a {
            return;
        }
        self.collect(a, b, start, mid, out);
        if self.lo[mid] <= b {
            if self.hi[mid] >= a {
                out.push(self.id[mid]);
            }
            self.collect(a, b, mid + 1, end, out);
        }
    }
}

fn fill_max(max_hi: &mut [f64], hi: &[f64], start: usize, end: usize) -> f64 {
    if start >= end {
        return f64::NEG_INFINITY;
    }
    let mid = start + (end - start) / 2;
    let l = fill_max(max_hi, hi, start, mid);
    let r = fill_max(max_hi, hi, mid + 1, end);
    max_hi[mid] = hi[mid].max(l).max(r);
    max_hi[mid]
}
