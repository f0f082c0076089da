//! Invariances of u(inf) and the shape of traced level curves.

mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use quadpot::cases::{example_two, TABLE1};
use quadpot::potential::{trace_level, u_infinity};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn square_level_half_is_the_symmetry_line() {
    let sol = u_infinity(&TABLE1[8].quadrilateral()).unwrap();
    let curve = trace_level(&sol, 0.5, 101).unwrap();
    assert!(curve.is_split());
    for p in curve.points() {
        assert!((p.w.re - 0.5).abs() < 1e-6 + 1e-10 * p.w.norm(), "{}", p.w);
    }
}

#[test]
fn square_level_is_mirror_symmetric() {
    // reflection in the line y = 1/2 swaps the two sides where curves end
    let sol = u_infinity(&TABLE1[8].quadrilateral()).unwrap();
    let curve = trace_level(&sol, 0.3, 101).unwrap();
    let pts = &curve.branches[0];
    for (p, q) in pts.iter().zip(pts.iter().rev()) {
        let mirrored = c(p.w.re, 1.0 - p.w.im);
        assert!((mirrored - q.w).norm() < 1e-6, "{} vs {}", p.w, q.w);
    }
}

#[test]
fn example_two_levels_do_not_cross() {
    let sol = u_infinity(&example_two()).unwrap();
    let levels = [0.1, 0.2, 0.3, sol.u_inf, 0.5, 0.7, 0.9];
    let curves: Vec<_> = levels
        .iter()
        .map(|&l| trace_level(&sol, l, 120).unwrap())
        .collect();
    let v = sol.quadrilateral().vertices();
    for curve in &curves {
        assert!(common::dist_to_segment(curve.first().unwrap().w, v[0], v[1]) < 1e-6);
        assert!(common::dist_to_segment(curve.last().unwrap().w, v[2], v[3]) < 1e-6);
    }
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let mut d = f64::INFINITY;
            for p in curves[i].points() {
                for q in curves[j].points() {
                    d = d.min((p.w - q.w).norm());
                }
            }
            assert!(d > 0.0);
        }
    }
}

#[test]
fn conjugate_quadrilateral_swaps_roles() {
    // shifting the vertices by one turns v/h into the potential, so h -> 1/h
    let q = TABLE1[0].quadrilateral();
    let v = *q.vertices();
    let shifted = quadpot::quad_geometry::Quadrilateral::new([v[1], v[2], v[3], v[0]]);
    let a = u_infinity(&q).unwrap();
    let b = u_infinity(&shifted).unwrap();
    assert!((a.modulus() * b.modulus() - 1.0).abs() < 1e-10);
    assert!((b.u_inf - a.v_inf / a.modulus()).abs() < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn similarity_invariance(row in 0usize..9, re in -3.0f64..3.0, im in -3.0f64..3.0, bx in -10.0f64..10.0, by in -10.0f64..10.0) {
        let a = c(re, im);
        prop_assume!(a.norm() > 0.05);
        let q = TABLE1[row].quadrilateral();
        let u = u_infinity(&q).unwrap().u_inf;
        let moved = u_infinity(&q.similarity(a, c(bx, by))).unwrap().u_inf;
        prop_assert!((u - moved).abs() < 1e-9);
        prop_assert!(u > 0.0 && u < 1.0);
    }
}
