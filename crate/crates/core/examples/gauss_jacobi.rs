//! Gauss-Jacobi rules for integrals with an algebraic endpoint power, and
//! the adaptive Gauss-Kronrod integrator used away from the endpoints.

use num_complex::Complex64;
use quadpot::quadrature::{integrate_segment, GaussJacobi};

fn main() -> quadpot::Result<()> {
    // int_{-1}^{1} (1+x)^{-0.4} cos(x) dx
    let e = -0.4;
    for n in [4, 8, 16, 32] {
        let rule = GaussJacobi::new(n, 0.0, e);
        let v = rule.apply(|x| Ok(Complex64::new(x.cos(), 0.0)))?;
        println!("n = {n:>2}: {:.16}", v.re);
    }

    // plain Gauss-Legendre on the same integrand loses most digits
    let leg = GaussJacobi::new(32, 0.0, 0.0);
    let v = leg.apply(|x| Ok(Complex64::new((1.0 + x).powf(e) * x.cos(), 0.0)))?;
    println!("Legendre 32: {:.16}", v.re);

    // a complex segment passing near a simple pole at 0.5 + 0.01i
    let pole = Complex64::new(0.5, 0.01);
    let a = Complex64::new(0.0, 0.0);
    let b = Complex64::new(1.0, 0.0);
    let v = integrate_segment(|z| Ok(1.0 / (z - pole)), a, b, 0.0, 1e-13)?;
    let exact = ((b - pole) / (a - pole)).ln();
    println!("near-pole segment error {:.1e}", (v - exact).norm());
    Ok(())
}
