mod common;

use common::*;
use lar_arrange::chain::{apply, product_is_zero, Arithmetic, Chain, SignedOperator};
use lar_arrange::pipeline::{arrange2d, arrange3d, Arrangement, Config};
use lar_arrange::planar::fragment;
use proptest::prelude::*;

fn check_minimal(a: &Arrangement) -> Result<(), TestCaseError> {
    let bp = a.boundary_plus();
    let n_facets = a.complex.count(a.dim() - 1);
    let rows = bp.transpose();
    for r in 0..rows.cols() {
        let (_, vs) = rows.column(r);
        prop_assert_eq!(vs.len(), 2, "facet {}", r);
        prop_assert_eq!(vs[0], -vs[1]);
    }
    let total: usize = bp.triples().map(|(_, _, v)| v.unsigned_abs() as usize).sum();
    prop_assert_eq!(total, 2 * n_facets);
    Ok(())
}

fn check_complex(a: &Arrangement) -> Result<(), TestCaseError> {
    prop_assert!(a.complex.is_closed().unwrap());
    prop_assert!(product_is_zero(a.complex.boundary(a.dim() - 1), &a.boundary_plus()).unwrap());
    Ok(())
}

fn chain_strategy(len: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-1i64..=1, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn planar_arrangements_are_sound(seed in any::<u64>(), n in 2usize..60) {
        let (v, ev) = random_segments(seed, n, 10.0, 4.0);
        let a = arrange2d(&v, &ev, &Config::default()).unwrap();
        if a.top_boundary().cols() > 0 {
            check_complex(&a)?;
            check_minimal(&a)?;
            for area in a.volumes().unwrap() {
                prop_assert!(area > 0.0);
            }
        }
    }

    #[test]
    fn planar_euler_relation(seed in any::<u64>(), n in 2usize..40) {
        let (v, ev) = random_segments(seed, n, 10.0, 4.0);
        let g = fragment(&v, &ev, 1e-9).unwrap();
        let comps = {
            let mut parent: Vec<usize> = (0..g.vertices.len()).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut x = x;
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for e in g.edges.cells() {
                let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
                parent[a] = b;
            }
            (0..g.vertices.len()).filter(|&x| find(&mut parent, x) == x).count()
        };
        let a = arrange2d(&v, &ev, &Config::default()).unwrap();
        let faces = a.top_boundary().cols() as i64;
        let (e, vn) = (g.edges.len() as i64, g.vertices.len() as i64);
        prop_assert_eq!(faces, e - vn + comps as i64);
    }

    #[test]
    fn fragments_lie_on_inputs_and_do_not_cross(seed in any::<u64>(), n in 2usize..40) {
        let (v, ev) = random_segments(seed, n, 10.0, 4.0);
        let g = fragment(&v, &ev, 1e-9).unwrap();
        let p = g.vertices.points2();
        let q = v.points2();
        for e in g.edges.cells() {
            let mid = (p[e[0]] + p[e[1]]) / 2.0;
            let on_input = ev.cells().iter().any(|s| {
                point_segment_distance(p[e[0]], q[s[0]], q[s[1]]) < 1e-7
                    && point_segment_distance(p[e[1]], q[s[0]], q[s[1]]) < 1e-7
                    && point_segment_distance(mid, q[s[0]], q[s[1]]) < 1e-7
            });
            prop_assert!(on_input);
        }
        let edges = g.edges.cells();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = (&edges[i], &edges[j]);
                if a.iter().any(|x| b.contains(x)) {
                    continue;
                }
                prop_assert!(!segments_meet(p[a[0]], p[a[1]], p[b[0]], p[b[1]]), "{:?} {:?}", a, b);
            }
        }
    }

    #[test]
    fn boundary_is_linear(a in chain_strategy(34), b in chain_strategy(34)) {
        let (v, ev, fv) = plane_complex();
        let d2 = lar_arrange::lar::boundary2(&v, &ev, &fv).unwrap();
        let d1 = lar_arrange::chain::boundary1(&ev, v.len(), true).unwrap();
        let ca = Chain::from_dense(1, &a).unwrap();
        let cb = Chain::from_dense(1, &b).unwrap();
        let lhs = apply(&d1, &ca.add(&cb, Arithmetic::Signed).unwrap(), Arithmetic::Signed).unwrap();
        let rhs = apply(&d1, &ca, Arithmetic::Signed).unwrap()
            .add(&apply(&d1, &cb, Arithmetic::Signed).unwrap(), Arithmetic::Signed).unwrap();
        prop_assert_eq!(lhs, rhs);
        let g = Chain::from_dense(2, &a[..13]).unwrap();
        prop_assert!(apply(&d1, &apply(&d2, &g, Arithmetic::Signed).unwrap(), Arithmetic::Signed).unwrap().is_zero());
    }

    #[test]
    fn transpose_is_an_involution(rows in proptest::collection::vec(chain_strategy(7), 1..9)) {
        let op = SignedOperator::from_dense(&rows).unwrap();
        prop_assert_eq!(op.transpose().transpose(), op.clone());
        let t = op.transpose();
        for (i, j, v) in op.triples() {
            prop_assert_eq!(t.get(j, i), v);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn box_merges_are_sound(seed in any::<u64>(), n in 1usize..=4) {
        let (v, ev, fv) = boxes(&random_boxes(seed, n));
        let a = arrange3d(&v, &ev, &fv, &Config::default()).unwrap();
        check_complex(&a)?;
        check_minimal(&a)?;
        prop_assert!(product_is_zero(a.complex.boundary(1), a.complex.boundary(2)).unwrap());
        prop_assert!(product_is_zero(a.complex.boundary(2), a.complex.boundary(3)).unwrap());
        for vol in a.volumes().unwrap() {
            prop_assert!(vol > 0.0);
        }
    }
}
