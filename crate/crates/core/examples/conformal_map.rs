//! Solves the exterior map for the first benchmark quadrilateral and
//! pushes a few half-plane points through it. The prevertices 0, 1, t and
//! infinity land on the four vertices; points near the pole z0 go far out.

use num_complex::Complex64;
use quadpot::cases::TABLE1;
use quadpot::scmap::ScMap;

fn main() -> quadpot::Result<()> {
    let q = TABLE1[0].quadrilateral();
    let map = ScMap::solve(&q)?;
    let p = map.params();
    println!("t = {}, z0 = {}, C = {}", p.t, p.z0(), p.c);

    for (k, (img, z)) in map.vertex_images().iter().zip(q.vertices()).enumerate() {
        println!(
            "vertex {}: image {img:.12}, error {:.1e}",
            k + 1,
            (img - z).norm()
        );
    }
    println!("closure residual {:.1e}", map.closure_residual());

    let z0 = p.z0();
    for z in [
        Complex64::new(0.5, 0.5),
        Complex64::new(-2.0, 1.0),
        Complex64::new(5.0, 0.0),
        z0 + Complex64::new(0.0, 0.01),
        Complex64::new(0.0, 100.0),
    ] {
        println!("f({z:.3}) = {:.6}", map.forward_map(z)?);
    }
    Ok(())
}
