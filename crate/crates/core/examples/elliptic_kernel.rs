//! The elliptic building blocks: complete integrals via the AGM, the
//! incomplete integral at complex argument via Carlson's R_F, the Jacobi
//! sine at complex argument, and the Grotzsch ring function.

use std::f64::consts::PI;

use num_complex::Complex64;
use quadpot::elliptic::{complete_k, mu_groetzsch, EllipticModulus};

fn main() -> quadpot::Result<()> {
    for r in [0.1, 0.5, 1.0 / 2f64.sqrt(), 0.9, 0.999] {
        println!("K({r:.4}) = {:.16}", complete_k(r)?);
    }

    let m = EllipticModulus::new(0.6)?;
    let u = Complex64::new(0.7, 0.4);
    let s = m.sn(u)?;
    let back = m.incomplete_f(s)?;
    println!("sn({u}) = {s}");
    println!("F(sn(u)) - u = {:.2e}", (back - u).norm());

    // sn(K) = 1 and sn(K + iK') = 1/r
    println!("sn(K)       = {}", m.sn(Complex64::new(m.k(), 0.0))?);
    println!(
        "sn(K + iK') = {}",
        m.sn(Complex64::new(m.k(), m.k_prime()))?
    );

    let r = 0.3;
    let prod = mu_groetzsch(r)? * mu_groetzsch((1.0 - r * r).sqrt())?;
    println!("mu(r) mu(r') - pi^2/4 = {:.2e}", prod - PI * PI / 4.0);
    Ok(())
}
