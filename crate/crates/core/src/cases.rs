//! Reference configurations: the nine published benchmark quadrilaterals
//! and the two worked examples used for the level-curve figures.

use num_complex::Complex64;

use crate::quad_geometry::Quadrilateral;

/// One benchmark row: vertices `1, 0, b, a` and the published `u(inf)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchmarkRow {
    pub a: Complex64,
    pub b: Complex64,
    pub u_inf: f64,
}

impl BenchmarkRow {
    pub fn quadrilateral(&self) -> Quadrilateral {
        Quadrilateral::new([
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            self.b,
            self.a,
        ])
    }
}

const fn row(a: (f64, f64), b: (f64, f64), u_inf: f64) -> BenchmarkRow {
    BenchmarkRow {
        a: Complex64::new(a.0, a.1),
        b: Complex64::new(b.0, b.1),
        u_inf,
    }
}

/// Published values of `u(inf)` for nine quadrilaterals.
pub const TABLE1: [BenchmarkRow; 9] = [
    row((7.0, 5.0), (-1.0, 2.0), 0.3782951219491777),
    row((8.0, 3.0), (-1.0, 1.0), 0.3507184214435048),
    row((5.0, 5.0), (-3.0, 1.0), 0.4209495357540314),
    row((7.0, 4.0), (-3.0, 3.0), 0.4473431220217027),
    row((5.0, 5.0), (-1.0, 2.0), 0.3916188047098933),
    row((7.0, 5.0), (0.0, 1.0), 0.3172197705784933),
    row((7.0, 3.0), (1.0, 2.0), 0.3917841755037506),
    row((4.0, 5.0), (-2.0, 1.0), 0.3960930352825737),
    row((1.0, 1.0), (0.0, 1.0), 0.5),
];

/// First worked example; its `u(inf)` is quoted as `0.471813...`.
pub fn example_one() -> Quadrilateral {
    Quadrilateral::new([
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(-19.0 / 25.0, 21.0 / 25.0),
        Complex64::new(28.0 / 25.0, 69.0 / 50.0),
    ])
}

/// Second worked example; its `u(inf)` is quoted as `0.334052...`.
pub fn example_two() -> Quadrilateral {
    Quadrilateral::new([
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(-3.0 / 25.0, 21.0 / 25.0),
        Complex64::new(42.0 / 25.0, 4.0),
    ])
}

pub const EXAMPLE_ONE_U_INF: f64 = 0.471813;
pub const EXAMPLE_TWO_U_INF: f64 = 0.334052;
