//! u(inf) for a quadrilateral given on the command line (four clockwise
//! vertices such as `1 0 -1+2i 7+5i`), or for the first worked example.
//!
//! ```text
//! cargo run --example u_infinity -- 1 0 -3/25+21/25i 42/25+4i
//! ```

use quadpot::cases::example_one;
use quadpot::cli::parse_quadrilateral;
use quadpot::potential::u_infinity;

fn main() -> quadpot::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let q = if args.is_empty() {
        example_one()
    } else {
        parse_quadrilateral(&args)?
    };

    let sol = u_infinity(&q)?;
    let p = sol.params();
    println!("vertices  {:?}", q.vertices());
    println!("angles    {:?}", p.angles.as_array());
    println!("t         {}", p.t);
    println!("z0        {}", p.z0());
    println!("h         {}", p.h);
    println!("u(inf)    {:.16}", sol.u_inf);
    println!("v(inf)/h  {:.16}", sol.v_inf / p.h);
    Ok(())
}
