//! Independent reference computations for the integration tests. Nothing
//! here shares code with the library: plain adaptive Simpson quadrature on
//! the defining integrals.
#![allow(dead_code, clippy::too_many_arguments)]

use num_complex::Complex64;

fn simpson<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    fa: Complex64,
    fm: Complex64,
    fb: Complex64,
    whole: Complex64,
    tol: f64,
    depth: u32,
) -> Complex64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.norm() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Adaptive Simpson on `[a, b]` for a smooth complex integrand.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64) -> Complex64 {
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson(&f, a, b, fa, fm, fb, whole, tol, 50)
}

/// `F(r, z) = int_0^1 z / sqrt((1 - z^2 s^2)(1 - r^2 z^2 s^2)) ds` for `z`
/// off the real axis; each square root stays on its principal branch along
/// the ray.
pub fn reference_f(r: f64, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    integrate(
        |s| {
            let w = z * s;
            z / ((one - w * w).sqrt() * (one - r * r * w * w).sqrt())
        },
        0.0,
        1.0,
        1e-14,
    )
}

/// `K(r)` as `int_0^{pi/2} dphi / sqrt(1 - r^2 sin^2 phi)`.
pub fn reference_k(r: f64) -> f64 {
    integrate(
        |phi| Complex64::new(1.0 / (1.0 - (r * phi.sin()).powi(2)).sqrt(), 0.0),
        0.0,
        std::f64::consts::FRAC_PI_2,
        1e-15,
    )
    .re
}

pub fn dist_to_segment(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let d = b - a;
    let s = (((p - a) * d.conj()).re / d.norm_sqr()).clamp(0.0, 1.0);
    (p - (a + d * s)).norm()
}
