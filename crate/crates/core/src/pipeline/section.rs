use crate::chain::{CellArray, Chain};
use crate::error::{Error, Result};
use crate::geom::{area_vector, loops, plane_frame, P2, P3};

/// Rigid map taking the plane of a face to `z = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubmanifoldMap {
    origin: P3,
    u: P3,
    v: P3,
    n: P3,
}

impl SubmanifoldMap {
    /// Frame of the face bounded by `chain`, with `+z` along its area vector.
    pub fn for_face(points: &[P3], edges: &CellArray, chain: &Chain, facet: usize) -> Result<Self> {
        let area = area_vector(points, edges, chain);
        if area.norm() == 0.0 {
            return Err(Error::InconsistentFacet {
                facet,
                detail: "zero area".into(),
            });
        }
        let origin = loops(edges, chain)?[0][0];
        let (u, v) = plane_frame(area);
        Ok(Self {
            origin: points[origin],
            u,
            v,
            n: area.normalize(),
        })
    }

    pub fn apply(&self, p: P3) -> P3 {
        let d = p - self.origin;
        P3::new(d.dot(&self.u), d.dot(&self.v), d.dot(&self.n))
    }

    pub fn invert(&self, q: P2) -> P3 {
        self.origin + self.u * q.x + self.v * q.y
    }

    pub fn normal(&self) -> P3 {
        self.n
    }
}

/// Intersection of a planar face with the plane `z = 0`, given the face's
/// boundary edges in local coordinates.
///
/// `|z| <= eps` counts as on the plane. An edge crosses when exactly one
/// end is strictly above; crossing points along the section line alternate
/// between entering and leaving the face, so consecutive pairs are the
/// pieces of the section. Edges lying in the plane are returned as well.
pub fn plane_section(edges: &[(P3, P3)], eps: f64, facet: usize) -> Result<Vec<[P2; 2]>> {
    let snap = |z: f64| if z.abs() <= eps { 0.0 } else { z };
    let mut crossings: Vec<P2> = Vec::new();
    let mut out = Vec::new();
    for &(a, b) in edges {
        let (za, zb) = (snap(a.z), snap(b.z));
        if za == 0.0 && zb == 0.0 {
            out.push([a.xy(), b.xy()]);
            continue;
        }
        if (za > 0.0) == (zb > 0.0) {
            continue;
        }
        let p = if za == 0.0 {
            a.xy()
        } else if zb == 0.0 {
            b.xy()
        } else {
            let t = za / (za - zb);
            a.xy() + (b.xy() - a.xy()) * t
        };
        crossings.push(p);
    }
    if crossings.len() % 2 == 1 {
        return Err(Error::InconsistentFacet {
            facet,
            detail: format!("{} plane crossings", crossings.len()),
        });
    }
    if !crossings.is_empty() {
        let (mut lo, mut hi) = (crossings[0], crossings[0]);
        for p in &crossings {
            lo = lo.inf(p);
            hi = hi.sup(p);
        }
        let axis = if hi.x - lo.x >= hi.y - lo.y { 0 } else { 1 };
        crossings.sort_by(|a, b| a[axis].total_cmp(&b[axis]).then(a[1 - axis].total_cmp(&b[1 - axis])));
        for pair in crossings.chunks(2) {
            if (pair[1] - pair[0]).norm() > eps {
                out.push([pair[0], pair[1]]);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(z0: f64, z1: f64) -> Vec<(P3, P3)> {
        // Vertical square in the plane x = 0 spanning z0..z1.
        let p = [
            P3::new(0.0, 0.0, z0),
            P3::new(0.0, 1.0, z0),
            P3::new(0.0, 1.0, z1),
            P3::new(0.0, 0.0, z1),
        ];
        (0..4).map(|i| (p[i], p[(i + 1) % 4])).collect()
    }

    #[test]
    fn crossing_square() {
        let s = plane_section(&square(-1.0, 1.0), 1e-9, 0).unwrap();
        assert_eq!(s, vec![[P2::new(0.0, 0.0), P2::new(0.0, 1.0)]]);
    }

    #[test]
    fn touching_from_above_gives_edge() {
        let s = plane_section(&square(0.0, 1.0), 1e-9, 0).unwrap();
        assert!(!s.is_empty());
        for seg in &s {
            assert_eq!(seg[0].x, 0.0);
        }
    }

    #[test]
    fn missing_the_plane() {
        assert!(plane_section(&square(1.0, 2.0), 1e-9, 0).unwrap().is_empty());
    }

    #[test]
    fn map_roundtrip() {
        let pts = vec![
            P3::new(1.0, 0.0, 0.0),
            P3::new(1.0, 1.0, 0.0),
            P3::new(1.0, 0.0, 1.0),
        ];
        let ev = CellArray::new(1, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let c = Chain::from_dense(1, &[1, -1, 1]).unwrap();
        let m = SubmanifoldMap::for_face(&pts, &ev, &c, 0).unwrap();
        for p in &pts {
            let q = m.apply(*p);
            assert!(q.z.abs() < 1e-15);
            assert!((m.invert(q.xy()) - p).norm() < 1e-15);
        }
        assert!((m.normal() - P3::x()).norm() < 1e-15);
    }
}
