#![allow(dead_code)]

use lar_arrange::chain::{CellArray, Chain, SignedOperator, VertexBuffer};
use lar_arrange::geom::{cross2, P2, P3};
use lar_arrange::lar::convex_face_edges;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn cells(dim: usize, rows: &[&[usize]]) -> CellArray {
    CellArray::new(dim, rows.iter().map(|r| r.to_vec()).collect())
}

// Small planar complex: three faces around vertex 1.
pub const SMALL_V: [[f64; 2]; 6] = [[1.0, 1.0], [0.5, 0.5], [1.0, 0.5], [0.0, 0.0], [0.5, 0.0], [1.0, 0.0]];
pub const SMALL_EV: [[usize; 2]; 8] = [[0, 1], [0, 2], [1, 2], [1, 3], [1, 4], [2, 5], [3, 4], [4, 5]];
pub const SMALL_FV: [&[usize]; 3] = [&[0, 1, 2], &[1, 3, 4], &[1, 2, 4, 5]];

pub const SMALL_D1_UNSIGNED: [[i64; 8]; 6] = [
    [1, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 1, 1],
    [0, 0, 0, 0, 0, 1, 0, 1],
];
pub const SMALL_D1_SIGNED: [[i64; 8]; 6] = [
    [-1, -1, 0, 0, 0, 0, 0, 0],
    [1, 0, -1, -1, -1, 0, 0, 0],
    [0, 1, 1, 0, 0, -1, 0, 0],
    [0, 0, 0, 1, 0, 0, -1, 0],
    [0, 0, 0, 0, 1, 0, 1, -1],
    [0, 0, 0, 0, 0, 1, 0, 1],
];
pub const SMALL_D2_UNSIGNED: [[i64; 3]; 8] = [
    [1, 0, 0],
    [1, 0, 0],
    [1, 0, 1],
    [0, 1, 0],
    [0, 1, 1],
    [0, 0, 1],
    [0, 1, 0],
    [0, 0, 1],
];
pub const SMALL_D2_SIGNED: [[i64; 3]; 8] = [
    [1, 0, 0],
    [-1, 0, 0],
    [1, 0, -1],
    [0, 1, 0],
    [0, -1, 1],
    [0, 0, -1],
    [0, 1, 0],
    [0, 0, 1],
];

pub fn small_complex() -> (VertexBuffer, CellArray, CellArray) {
    (
        VertexBuffer::from_rows(&SMALL_V).unwrap(),
        CellArray::new(1, SMALL_EV.iter().map(|e| e.to_vec()).collect()),
        cells(2, &SMALL_FV),
    )
}

pub fn dense<const N: usize>(rows: &[[i64; N]]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

// 22-vertex planar complex with 13 faces.
pub const PLANE_V: [[f64; 2]; 22] = [
    [0.5, 0.2475], [0.5, 0.0], [0.5, 0.7525], [0.7525, 0.0], [0.0, 0.0], [0.7525, 0.7475],
    [0.8787, 0.5], [0.0, 0.5], [0.2475, 0.7525], [0.5, 0.5], [0.2475, 0.0], [0.8787, 0.2475],
    [0.2475, 0.5], [0.2475, 0.2475], [0.7525, 0.2475], [1.0, 0.5], [0.0, 1.0], [0.7525, 0.5],
    [0.5, 1.0], [1.0, 0.0], [1.0, 0.2475], [0.2475, 1.0],
];
pub const PLANE_EV: [[usize; 2]; 34] = [
    [5, 15], [5, 17], [5, 18], [6, 15], [15, 20], [6, 17], [11, 20], [11, 14], [6, 11], [3, 19],
    [19, 20], [3, 14], [1, 3], [14, 17], [0, 14], [9, 17], [2, 18], [18, 21], [2, 9], [8, 21],
    [8, 12], [2, 8], [16, 21], [7, 16], [0, 1], [1, 10], [0, 9], [12, 13], [10, 13], [0, 13],
    [7, 12], [4, 10], [4, 7], [9, 12],
];
pub const PLANE_FV: [&[usize]; 13] = [
    &[5, 6, 15, 17], &[2, 5, 9, 17, 18], &[6, 11, 15, 20], &[6, 11, 14, 17], &[3, 11, 14, 19, 20],
    &[0, 1, 3, 14], &[0, 9, 14, 17], &[2, 8, 18, 21], &[2, 8, 9, 12], &[7, 8, 12, 16, 21],
    &[0, 1, 10, 13], &[0, 9, 12, 13], &[4, 7, 10, 12, 13],
];
/// Rows of the transposed ∂2 (one per face), as (edge, coefficient).
pub const PLANE_D2T: [&[(usize, i64)]; 13] = [
    &[(0, -1), (1, 1), (3, 1), (5, -1)],
    &[(1, -1), (2, 1), (15, 1), (16, -1), (18, 1)],
    &[(3, 1), (4, 1), (6, -1), (8, -1)],
    &[(5, -1), (7, 1), (8, 1), (13, 1)],
    &[(6, 1), (7, -1), (9, -1), (10, -1), (11, 1)],
    &[(11, 1), (12, 1), (14, -1), (24, 1)],
    &[(13, 1), (14, 1), (15, -1), (26, -1)],
    &[(16, 1), (17, 1), (19, -1), (21, -1)],
    &[(18, -1), (20, 1), (21, 1), (33, -1)],
    &[(19, 1), (20, -1), (22, -1), (23, -1), (30, 1)],
    &[(24, -1), (25, -1), (28, -1), (29, 1)],
    &[(26, 1), (27, 1), (29, -1), (33, 1)],
    &[(27, -1), (28, 1), (30, -1), (31, 1), (32, -1)],
];
pub const PLANE_G: [usize; 5] = [0, 1, 8, 11, 12];
/// Faces whose boundary, under the reference operator, is the reference cycle
/// [`PLANE_DG`].
pub const PLANE_G_CONSISTENT: [usize; 5] = [0, 1, 8, 10, 11];
pub const PLANE_DG: [(usize, i64); 13] = [
    (0, -1), (2, 1), (3, 1), (5, -1), (15, 1), (16, -1), (20, 1), (21, 1), (24, -1), (25, -1),
    (26, 1), (27, 1), (28, -1),
];
pub const PLANE_VV: [&[usize]; 22] = [
    &[1, 9, 13, 14], &[0, 3, 10], &[8, 9, 18], &[1, 14, 19], &[7, 10], &[15, 17, 18],
    &[11, 15, 17], &[4, 12, 16], &[2, 12, 21], &[0, 2, 12, 17], &[1, 4, 13], &[6, 14, 20],
    &[7, 8, 9, 13], &[0, 10, 12], &[0, 3, 11, 17], &[5, 6, 20], &[7, 21], &[5, 6, 9, 14],
    &[2, 5, 21], &[3, 20], &[11, 15, 19], &[8, 16, 18],
];

pub fn plane_complex() -> (VertexBuffer, CellArray, CellArray) {
    (
        VertexBuffer::from_rows(&PLANE_V).unwrap(),
        CellArray::new(1, PLANE_EV.iter().map(|e| e.to_vec()).collect()),
        cells(2, &PLANE_FV),
    )
}

// 3 x 2 x 1 grid of unit cubes split into 36 tetrahedra.
pub fn grid_vertices() -> VertexBuffer {
    let mut rows = Vec::new();
    for z in 0..2 {
        for y in 0..3 {
            for x in 0..4 {
                rows.push(vec![x as f64, y as f64, z as f64]);
            }
        }
    }
    VertexBuffer::from_rows(&rows).unwrap()
}
pub const TV: [[usize; 4]; 36] = [
    [0, 1, 4, 12], [1, 4, 12, 13], [4, 12, 13, 16], [1, 4, 5, 13], [4, 5, 13, 16], [5, 13, 16, 17],
    [1, 2, 5, 13], [2, 5, 13, 14], [5, 13, 14, 17], [2, 5, 6, 14], [5, 6, 14, 17], [6, 14, 17, 18],
    [2, 3, 6, 14], [3, 6, 14, 15], [6, 14, 15, 18], [3, 6, 7, 15], [6, 7, 15, 18], [7, 15, 18, 19],
    [4, 5, 8, 16], [5, 8, 16, 17], [8, 16, 17, 20], [5, 8, 9, 17], [8, 9, 17, 20], [9, 17, 20, 21],
    [5, 6, 9, 17], [6, 9, 17, 18], [9, 17, 18, 21], [6, 9, 10, 18], [9, 10, 18, 21], [10, 18, 21, 22],
    [6, 7, 10, 18], [7, 10, 18, 19], [10, 18, 19, 22], [7, 10, 11, 19], [10, 11, 19, 22], [11, 19, 22, 23],
];
pub const TT: [&[usize]; 36] = [
    &[1], &[0, 2, 3], &[1, 4], &[1, 4, 6], &[2, 3, 5, 18], &[4, 8, 19], &[3, 7], &[6, 8, 9],
    &[5, 7, 10], &[7, 10, 12], &[8, 9, 11, 24], &[10, 14, 25], &[9, 13], &[12, 14, 15],
    &[11, 13, 16], &[13, 16], &[14, 15, 17, 30], &[16, 31], &[4, 19], &[5, 18, 20, 21], &[19, 22],
    &[19, 22, 24], &[20, 21, 23], &[22, 26], &[10, 21, 25], &[11, 24, 26, 27], &[23, 25, 28],
    &[25, 28, 30], &[26, 27, 29], &[28, 32], &[16, 27, 31], &[17, 30, 32, 33], &[29, 31, 34],
    &[31, 34], &[32, 33, 35], &[34],
];

/// Planar complex realizing the incidences of the gift-wrapping walkthrough:
/// seeding at edge 12 walks the pentagon 11 -> 12 -> 15 -> 13 -> 14.
pub fn walkthrough() -> (VertexBuffer, CellArray) {
    let v: [[f64; 2]; 16] = [
        [-1.0, 1.0], [0.0, -1.0], [-1.0, -1.0], [2.0, -1.0], [3.0, 0.0], [5.0, 5.0],
        [0.0, 3.5], [6.0, 5.0], [7.0, 5.0], [8.0, 5.0], [9.0, 5.0], [0.0, 0.0],
        [2.0, 0.0], [1.5, 3.5], [0.0, 2.0], [3.0, 2.0],
    ];
    let ev: [[usize; 2]; 18] = [
        [0, 2], [0, 14], [1, 2], [1, 3], [3, 4], [4, 15], [6, 13], [13, 15], [13, 14],
        [6, 14], [12, 15], [3, 12], [11, 12], [4, 12], [0, 11], [1, 11], [2, 11], [11, 14],
    ];
    (
        VertexBuffer::from_rows(&v).unwrap(),
        CellArray::new(1, ev.iter().map(|e| e.to_vec()).collect()),
    )
}

/// Axis-aligned squares `(x, y, side)` as a segment soup.
pub fn squares(specs: &[(f64, f64, f64)]) -> (VertexBuffer, CellArray) {
    let mut rows = Vec::new();
    let mut ev = Vec::new();
    for &(x, y, s) in specs {
        let b = rows.len();
        rows.extend([vec![x, y], vec![x + s, y], vec![x + s, y + s], vec![x, y + s]]);
        for k in 0..4 {
            ev.push(vec![b + k, b + (k + 1) % 4]);
        }
    }
    (VertexBuffer::from_rows(&rows).unwrap(), CellArray::new(1, ev))
}

/// Eight squares: one outer square holding four, one of which holds a fifth,
/// another holding a chain of two.
pub fn nested_squares() -> (VertexBuffer, CellArray) {
    squares(&[
        (5.0, 5.0, 20.0),
        (30.0, 5.0, 60.0),
        (0.0, 0.0, 100.0),
        (5.0, 70.0, 20.0),
        (70.0, 70.0, 25.0),
        (75.0, 75.0, 10.0),
        (40.0, 15.0, 10.0),
        (35.0, 10.0, 50.0),
    ])
}

/// Transitively reduced nesting of [`nested_squares`]: row i has a 1 in
/// column j when shell i lies directly inside shell j.
pub const NESTED_R: [[u8; 8]; 8] = [
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 1, 0, 0, 0, 0, 0, 0],
];

/// Axis-aligned boxes as quad faces.
pub fn boxes(specs: &[([f64; 3], [f64; 3])]) -> (VertexBuffer, CellArray, CellArray) {
    let mut rows = Vec::new();
    let mut fv = Vec::new();
    for (lo, hi) in specs {
        let b = rows.len();
        for k in 0..8 {
            rows.push(vec![
                if k & 1 == 0 { lo[0] } else { hi[0] },
                if k & 2 == 0 { lo[1] } else { hi[1] },
                if k & 4 == 0 { lo[2] } else { hi[2] },
            ]);
        }
        for f in [[0, 1, 2, 3], [4, 5, 6, 7], [0, 1, 4, 5], [2, 3, 6, 7], [0, 2, 4, 6], [1, 3, 5, 7]] {
            fv.push(f.iter().map(|&i| b + i).collect());
        }
    }
    let v = VertexBuffer::from_rows(&rows).unwrap();
    let fv = CellArray::new(2, fv);
    let ev = convex_face_edges(&v, &fv).unwrap();
    (v, ev, fv)
}

/// `n` random segments of length `len` with midpoints uniform in
/// `[0, side]^2`.
pub fn random_segments(seed: u64, n: usize, side: f64, len: f64) -> (VertexBuffer, CellArray) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(2 * n);
    let mut ev = Vec::with_capacity(n);
    for i in 0..n {
        let (cx, cy) = (rng.gen_range(0.0..side), rng.gen_range(0.0..side));
        let a: f64 = rng.gen_range(0.0..std::f64::consts::PI);
        let (dx, dy) = (a.cos() * len / 2.0, a.sin() * len / 2.0);
        rows.push(vec![cx - dx, cy - dy]);
        rows.push(vec![cx + dx, cy + dy]);
        ev.push(vec![2 * i, 2 * i + 1]);
    }
    (VertexBuffer::from_rows(&rows).unwrap(), CellArray::new(1, ev))
}

/// Random axis-aligned boxes with corners on a coarse grid.
pub fn random_boxes(seed: u64, n: usize) -> Vec<([f64; 3], [f64; 3])> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let lo = [0, 1, 2].map(|_| rng.gen_range(0..6) as f64 * 0.25);
            let size = [0, 1, 2].map(|_| rng.gen_range(2..7) as f64 * 0.25 + 0.125);
            (lo, [lo[0] + size[0], lo[1] + size[1], lo[2] + size[2]])
        })
        .collect()
}

pub fn point_segment_distance(p: P2, a: P2, b: P2) -> f64 {
    let d = b - a;
    let t = ((p - a).dot(&d) / d.norm_squared()).clamp(0.0, 1.0);
    (a + d * t - p).norm()
}

/// Whether two segments cross or touch, with a small tolerance so that
/// collinear neighbours are not reported.
pub fn segments_meet(a: P2, b: P2, c: P2, d: P2) -> bool {
    let tol = 1e-9;
    let side = |o: f64| if o > tol { 1 } else if o < -tol { -1 } else { 0 };
    let o1 = side(cross2(b - a, c - a));
    let o2 = side(cross2(b - a, d - a));
    let o3 = side(cross2(d - c, a - c));
    let o4 = side(cross2(d - c, b - c));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    let eps = 1e-9;
    point_segment_distance(c, a, b) < eps
        || point_segment_distance(d, a, b) < eps
        || point_segment_distance(a, c, d) < eps
        || point_segment_distance(b, c, d) < eps
}

/// Directed edges `(tail, head)` of a signed 1-chain.
pub fn directed_edges(d1: &SignedOperator, chain: &Chain) -> Vec<(usize, usize)> {
    chain
        .iter()
        .map(|(e, s)| {
            let (vs, cs) = d1.column(e);
            let (tail, head) = if cs[0] < 0 { (vs[0], vs[1]) } else { (vs[1], vs[0]) };
            if s > 0 { (tail, head) } else { (head, tail) }
        })
        .collect()
}

/// Even-odd point location against the edges of a 1-chain in the plane.
pub fn inside_chain(points: &[P2], d1: &SignedOperator, chain: &Chain, p: P2) -> bool {
    let mut odd = false;
    for (a, b) in directed_edges(d1, chain) {
        let (a, b) = (points[a], points[b]);
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if x > p.x {
                odd = !odd;
            }
        }
    }
    odd
}

fn solid_angle(a: P3, b: P3, c: P3) -> f64 {
    let (la, lb, lc) = (a.norm(), b.norm(), c.norm());
    let num = a.dot(&b.cross(&c));
    let den = la * lb * lc + a.dot(&b) * lc + a.dot(&c) * lb + b.dot(&c) * la;
    2.0 * num.atan2(den)
}

/// Winding number of a closed, signed 2-chain of faces around `p`: the sum
/// of solid angles of a fan over every oriented face boundary, over 4π.
pub fn winding_number(
    points: &[P3],
    d1: &SignedOperator,
    d2: &SignedOperator,
    chain: &Chain,
    p: P3,
) -> f64 {
    let mut total = 0.0;
    for (f, s) in chain.iter() {
        let face = d2.column_chain(f, 1);
        let edges = directed_edges(d1, &face);
        let r = points[edges[0].0] - p;
        for (a, b) in edges {
            total += s as f64 * solid_angle(r, points[a] - p, points[b] - p);
        }
    }
    total / (4.0 * std::f64::consts::PI)
}
