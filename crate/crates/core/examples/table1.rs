//! Recomputes u(inf) for the nine benchmark quadrilaterals with vertices
//! `1, 0, B, A` and prints the difference from the published values.

use quadpot::cases::TABLE1;
use quadpot::potential::u_infinity;

fn main() -> quadpot::Result<()> {
    println!("{:>10} {:>10} {:>20} {:>10}", "A", "B", "u(inf)", "|diff|");
    for row in TABLE1 {
        let sol = u_infinity(&row.quadrilateral())?;
        println!(
            "{:>10} {:>10} {:>20.16} {:>10.1e}",
            row.a.to_string(),
            row.b.to_string(),
            sol.u_inf,
            (sol.u_inf - row.u_inf).abs()
        );
    }
    Ok(())
}
