use crate::error::{Error, Result};
use crate::geom::{
    loops, plane_frame, point_in_loops, ray_direction2, ray_direction3, ray_segment, RayHit, P2,
    P3,
};
use crate::giftwrap::Skeleton;

const MAX_TRIES: usize = 24;

struct Face {
    normal: P3,
    origin: P3,
    u: P3,
    v: P3,
    points: Vec<P2>,
    loops: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Ray hits as `(distance, facet)`, nearest first.
pub type Hits = Vec<(f64, usize)>;

/// Ray queries against the facets of a skeleton.
pub struct RayCaster {
    dim: usize,
    tol: f64,
    segments: Vec<[P2; 2]>,
    faces: Vec<Face>,
    // Outward direction of each facet as oriented in the skeleton: right of
    // the edge in the plane, the area vector in space.
    facet_normals: Vec<Vec<f64>>,
}

impl RayCaster {
    pub fn new(skeleton: &Skeleton, tol: f64) -> Result<Self> {
        let mut rc = RayCaster {
            dim: skeleton.dim(),
            tol,
            segments: Vec::new(),
            faces: Vec::new(),
            facet_normals: Vec::new(),
        };
        match &skeleton.faces {
            None => {
                let pts = skeleton.vertices.points2();
                for c in skeleton.edges.cells() {
                    let (a, b) = (pts[c[0]], pts[c[1]]);
                    rc.segments.push([a, b]);
                    let d = b - a;
                    rc.facet_normals.push(vec![d.y, -d.x]);
                }
            }
            Some((_, d2)) => {
                let pts = skeleton.points();
                for (f, n) in skeleton.face_normals().into_iter().enumerate() {
                    if n.norm() == 0.0 {
                        return Err(Error::InconsistentFacet {
                            facet: f,
                            detail: "zero area".into(),
                        });
                    }
                    let lps = loops(&skeleton.edges, &d2.column_chain(f, 1))?;
                    let (u, v) = plane_frame(n);
                    let origin = pts[lps[0][0]];
                    let mut points = Vec::new();
                    let mut idx = Vec::new();
                    for l in &lps {
                        let start = points.len();
                        for &i in l {
                            let q = pts[i] - origin;
                            points.push(P2::new(q.dot(&u), q.dot(&v)));
                        }
                        idx.push((start..points.len()).collect());
                    }
                    rc.faces.push(Face {
                        normal: n.normalize(),
                        origin,
                        u,
                        v,
                        points,
                        loops: idx,
                    });
                    rc.facet_normals.push(vec![n.x, n.y, n.z]);
                }
            }
        }
        Ok(rc)
    }

    fn hit(&self, facet: usize, o: &[f64], d: &[f64]) -> RayHit {
        if self.dim == 2 {
            let [a, b] = self.segments[facet];
            return ray_segment(P2::new(o[0], o[1]), P2::new(d[0], d[1]), a, b, self.tol);
        }
        let f = &self.faces[facet];
        let o = P3::new(o[0], o[1], o[2]);
        let d = P3::new(d[0], d[1], d[2]);
        let h = f.normal.dot(&(o - f.origin));
        let denom = f.normal.dot(&d);
        if denom.abs() < 1e-9 {
            // A ray inside the plane of the face is left to another direction.
            return if h.abs() <= self.tol {
                RayHit::Ambiguous
            } else {
                RayHit::Miss
            };
        }
        let t = -h / denom;
        let loc = self.locate(f, o + d * t);
        if t.abs() <= self.tol {
            return if loc == Location::Outside {
                RayHit::Miss
            } else {
                RayHit::Ambiguous
            };
        }
        if t < 0.0 {
            return RayHit::Miss;
        }
        match loc {
            Location::Inside => RayHit::Hit(t),
            Location::Boundary => RayHit::Ambiguous,
            Location::Outside => RayHit::Miss,
        }
    }

    fn locate(&self, f: &Face, q: P3) -> Location {
        let r = q - f.origin;
        let p = P2::new(r.dot(&f.u), r.dot(&f.v));
        for l in &f.loops {
            for i in 0..l.len() {
                let (a, b) = (f.points[l[i]], f.points[l[(i + 1) % l.len()]]);
                let e = b - a;
                let t = ((p - a).dot(&e) / e.norm_squared()).clamp(0.0, 1.0);
                if (a + e * t - p).norm() <= self.tol {
                    return Location::Boundary;
                }
            }
        }
        if point_in_loops(&f.points, &f.loops, p) {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    fn direction(&self, k: usize) -> Vec<f64> {
        if self.dim == 2 {
            let d = ray_direction2(k);
            vec![d.x, d.y]
        } else {
            let d = ray_direction3(k);
            vec![d.x, d.y, d.z]
        }
    }

    /// Casts rays from `o` against `facets` until one direction gives an
    /// unambiguous answer. Returns that direction and the hits by distance.
    pub fn cast(&self, o: &[f64], facets: &[usize]) -> Result<(Vec<f64>, Hits)> {
        'dirs: for k in 0..MAX_TRIES {
            let d = self.direction(k);
            let mut hits = Vec::new();
            for &f in facets {
                match self.hit(f, o, &d) {
                    RayHit::Miss => {}
                    RayHit::Hit(t) => hits.push((t, f)),
                    RayHit::Ambiguous => continue 'dirs,
                }
            }
            hits.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            if hits.windows(2).any(|w| w[1].0 - w[0].0 <= self.tol) {
                continue;
            }
            return Ok((d, hits));
        }
        Err(Error::DegenerateGeometry(format!(
            "no unambiguous ray from point {o:?}"
        )))
    }

    /// Even-odd containment of `o` in the region bounded by `facets`.
    pub fn inside(&self, o: &[f64], facets: &[usize]) -> Result<bool> {
        Ok(self.cast(o, facets)?.1.len() % 2 == 1)
    }

    /// Whether a ray along `d` leaves through `facet` when the facet carries
    /// sign `s` in an outward-oriented cell.
    pub fn exits_through(&self, facet: usize, s: i8, d: &[f64]) -> bool {
        let n = &self.facet_normals[facet];
        let dot: f64 = n.iter().zip(d).map(|(a, b)| a * b).sum();
        dot * s as f64 > 0.0
    }
}
