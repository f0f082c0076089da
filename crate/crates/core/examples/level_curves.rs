//! Level curves of the potential for the first worked example, written as
//! CSV (`level,eta,re,im`) to stdout. The level nearest u(inf) is replaced
//! by u(inf) itself; that curve is unbounded and comes in two branches.

use quadpot::cases::example_one;
use quadpot::cli::{auto_levels, curves_to_csv};
use quadpot::potential::u_infinity;

fn main() -> quadpot::Result<()> {
    let sol = u_infinity(&example_one())?;
    let curves = auto_levels(sol.u_inf)
        .into_iter()
        .map(|c| sol.trace_level(c, 200))
        .collect::<quadpot::Result<Vec<_>>>()?;

    for c in &curves {
        let far = c.points().map(|p| p.w.norm()).fold(0.0, f64::max);
        eprintln!(
            "level {:.6}: {} branch(es), max |w| = {far:.3e}",
            c.level,
            c.branches.len()
        );
    }
    print!("{}", curves_to_csv(&curves));
    Ok(())
}
