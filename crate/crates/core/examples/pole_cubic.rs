//! The pole of the map for given angles and prevertex t: the real roots of
//! the cubic, the one that survives the `x^2 < rho(x)` test, and the
//! residue condition at the resulting z0.

use quadpot::accessory::{cubic_coefficients, eqz0_residual, real_roots, rho, solve_pole};
use quadpot::quad_geometry::ExteriorAngles;

fn main() -> quadpot::Result<()> {
    let angles = ExteriorAngles::from_three(0.3, 0.45, 0.6)?;
    for t in [1.2, 2.0, 5.0, 40.0] {
        let cubic = cubic_coefficients(&angles, t);
        let roots = real_roots(&cubic);
        print!("t = {t:>5}: roots");
        for x in &roots {
            let ok = rho(&angles, t, *x).is_some_and(|r| x * x < r);
            print!(" {x:.6}{}", if ok { "*" } else { "" });
        }
        let pole = solve_pole(&angles, t)?;
        println!(
            "  -> z0 = {:.10}, residual {:.1e}",
            pole.z0(),
            eqz0_residual(&angles, t, pole.z0())?
        );
    }
    Ok(())
}
