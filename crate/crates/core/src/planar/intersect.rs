use crate::geom::{cross2, P2};

/// A point shared by two segments, as parameters along each of them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub t_a: f64,
    pub t_b: f64,
}

fn closest_param(p: P2, a0: P2, a1: P2) -> (f64, f64) {
    let d = a1 - a0;
    let t = ((p - a0).dot(&d) / d.norm_squared()).clamp(0.0, 1.0);
    (t, (a0 + d * t - p).norm())
}

/// Points where segments `a` and `b` meet, within distance `eps`.
///
/// Transversal segments yield at most one crossing, collinear overlapping
/// segments yield the two ends of the overlap, and segments that only come
/// within `eps` of each other at an endpoint yield that endpoint.
/// Parameters are clamped to `[0, 1]` and sorted along `a`.
pub fn intersect_pair(a: [P2; 2], b: [P2; 2], eps: f64) -> Vec<Crossing> {
    let (a0, a1) = (a[0], a[1]);
    let (b0, b1) = (b[0], b[1]);
    let da = a1 - a0;
    let db = b1 - b0;
    let (la, lb) = (da.norm(), db.norm());
    if la == 0.0 || lb == 0.0 {
        return Vec::new();
    }
    let mut out: Vec<Crossing> = Vec::new();
    // Endpoints lying on the other segment (covers touching and overlap).
    for (p, tb) in [(b0, 0.0), (b1, 1.0)] {
        let (t, dist) = closest_param(p, a0, a1);
        if dist <= eps {
            out.push(Crossing { t_a: t, t_b: tb });
        }
    }
    for (p, ta) in [(a0, 0.0), (a1, 1.0)] {
        let (t, dist) = closest_param(p, b0, b1);
        if dist <= eps {
            out.push(Crossing { t_a: ta, t_b: t });
        }
    }
    let denom = cross2(da, db);
    if denom.abs() > 1e-12 * la * lb {
        let w = b0 - a0;
        let t = cross2(w, db) / denom;
        let s = cross2(w, da) / denom;
        if t >= -eps / la && t <= 1.0 + eps / la && s >= -eps / lb && s <= 1.0 + eps / lb {
            out.push(Crossing {
                t_a: t.clamp(0.0, 1.0),
                t_b: s.clamp(0.0, 1.0),
            });
        }
    }
    out.sort_by(|x, y| x.t_a.total_cmp(&y.t_a));
    // Collapse points closer than eps along a.
    let mut dedup: Vec<Crossing> = Vec::new();
    for c in out {
        match dedup.last() {
            Some(l) if (c.t_a - l.t_a).abs() * la <= eps && (c.t_b - l.t_b).abs() * lb <= eps => {
                // Prefer exact endpoint parameters.
                let l = dedup.last_mut().unwrap();
                if c.t_a == 0.0 || c.t_a == 1.0 {
                    l.t_a = c.t_a;
                }
                if c.t_b == 0.0 || c.t_b == 1.0 {
                    l.t_b = c.t_b;
                }
            }
            _ => dedup.push(c),
        }
    }
    dedup
}
