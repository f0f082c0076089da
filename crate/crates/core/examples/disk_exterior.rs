//! The disk exterior with vertices `e^{+-0.5i}, e^{+-1.7i}`: closed-form
//! u(inf), its modulus two ways, and the nine default level curves.

use quadpot::disk_exterior::{default_levels, disk_setup, disk_trace_level, disk_u_infinity};
use quadpot::quad_geometry::cross_ratio_modulus;

fn main() -> quadpot::Result<()> {
    let d = disk_setup(0.5, 1.7)?;
    let u0 = disk_u_infinity(&d)?;
    println!("a = {}, gamma = {}, lambda = {}", d.a, d.gamma, d.lambda);
    println!("u(inf)             = {u0:.16}");
    println!("h (elliptic chain) = {:.16}", d.h);
    println!(
        "h (cross-ratio)    = {:.16}",
        cross_ratio_modulus(d.vertices())?
    );

    for c in default_levels(u0) {
        let curve = disk_trace_level(&d, c, 100)?;
        let r = curve.points().map(|p| p.w.norm()).fold(0.0, f64::max);
        println!("level {c:.4}: {} points, max radius {r:.3}", curve.len());
    }
    Ok(())
}
