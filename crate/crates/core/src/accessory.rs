//! The pole `z0` of the exterior Schwarz-Christoffel map.
//!
//! Given the angle parameters and the prevertex `t`, the real part of the
//! pole is the unique root of a cubic with `x^2 < rho(x)`, and
//! `Im z0 = sqrt(rho(x0) - x0^2)`. The residue-free condition
//! `alpha/z0 + beta/(z0-1) + gamma/(z0-t) = 1/(i Im z0)` is the ground
//! truth and is checked after every solve.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad_geometry::ExteriorAngles;

/// Largest acceptable residue-condition residual for a solved pole.
pub const POLE_RESIDUAL_TOL: f64 = 1e-10;

/// Roots whose `rho` denominator is smaller than this are skipped.
const RHO_DENOMINATOR_FLOOR: f64 = 1e-13;

/// Coefficients of `A x^3 + B x^2 + C x + D = 0` and the shorthand
/// `E = alpha + beta + gamma - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CubicCoefficients {
    pub e: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub t: f64,
}

impl CubicCoefficients {
    pub fn eval(&self, x: f64) -> f64 {
        ((self.a * x + self.b) * x + self.c) * x + self.d
    }

    fn derivative(&self, x: f64) -> f64 {
        (3.0 * self.a * x + 2.0 * self.b) * x + self.c
    }
}

/// The pole `z0 = x0 + i y0` in the upper half plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pole {
    pub x0: f64,
    pub y0: f64,
}

impl Pole {
    pub fn z0(&self) -> Complex64 {
        Complex64::new(self.x0, self.y0)
    }
}

pub fn cubic_coefficients(angles: &ExteriorAngles, t: f64) -> CubicCoefficients {
    let ExteriorAngles {
        alpha: al,
        beta: be,
        gamma: ga,
        ..
    } = *angles;
    let e = al + be + ga - 1.0;
    let a = 2.0 * (e - 1.0) * (e - 1.0);
    let b = (e - 1.0) * (4.0 - 3.0 * (al + ga) + (4.0 - 3.0 * (al + be)) * t);
    let c = 2.0 - 3.0 * (al + ga)
        + (al + ga).powi(2)
        + 2.0
            * (3.0 - 5.0 * al - 2.0 * be - 2.0 * ga
                + 2.0 * al * al
                + 2.0 * al * be
                + 2.0 * al * ga
                + be * ga)
            * t
        + (2.0 - 3.0 * (al + be) + (al + be).powi(2)) * t * t;
    let d = (1.0 - al) * (al + ga - 1.0 + (al + be - 1.0) * t) * t;
    CubicCoefficients { e, a, b, c, d, t }
}

/// `rho(x) = alpha t x / ((1 - E) x + E (t + 1) - gamma t - beta)`, or
/// `None` where the denominator vanishes.
pub fn rho(angles: &ExteriorAngles, t: f64, x: f64) -> Option<f64> {
    let e = angles.alpha + angles.beta + angles.gamma - 1.0;
    let den = (1.0 - e) * x + e * (t + 1.0) - angles.gamma * t - angles.beta;
    let scale = 1.0 + x.abs() + t;
    if den.abs() < RHO_DENOMINATOR_FLOOR * scale {
        None
    } else {
        Some(angles.alpha * t * x / den)
    }
}

/// All real roots of the cubic, ascending, each polished by Newton steps.
pub fn real_roots(cubic: &CubicCoefficients) -> Vec<f64> {
    let scale = cubic
        .a
        .abs()
        .max(cubic.b.abs())
        .max(cubic.c.abs())
        .max(cubic.d.abs());
    let mut roots = if cubic.a.abs() <= 1e-14 * scale {
        quadratic_roots(cubic.b, cubic.c, cubic.d)
    } else {
        cubic_roots_closed_form(cubic.b / cubic.a, cubic.c / cubic.a, cubic.d / cubic.a)
    };
    for x in roots.iter_mut() {
        for _ in 0..2 {
            let dp = cubic.derivative(*x);
            if dp != 0.0 {
                let step = cubic.eval(*x) / dp;
                if step.is_finite() {
                    *x -= step;
                }
            }
        }
    }
    roots.sort_by(|x, y| x.total_cmp(y));
    roots
}

fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a == 0.0 {
        return if b == 0.0 { vec![] } else { vec![-c / b] };
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return vec![];
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    let mut out = vec![q / a];
    if q != 0.0 {
        out.push(c / q);
    }
    out
}

/// Real roots of the monic cubic `x^3 + b x^2 + c x + d`.
fn cubic_roots_closed_form(b: f64, c: f64, d: f64) -> Vec<f64> {
    let shift = b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    if p == 0.0 && q == 0.0 {
        return vec![-shift];
    }
    if disc > 0.0 {
        let s = disc.sqrt();
        let u = (-q / 2.0 + s).cbrt();
        let v = (-q / 2.0 - s).cbrt();
        vec![u + v - shift]
    } else {
        // three real roots (possibly repeated)
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - shift)
            .collect()
    }
}

/// Roots of the cubic that satisfy `x^2 < rho(x)`, paired with `y0`.
pub fn admissible_roots(angles: &ExteriorAngles, t: f64) -> Vec<Pole> {
    let cubic = cubic_coefficients(angles, t);
    real_roots(&cubic)
        .into_iter()
        .filter_map(|x| {
            let r = rho(angles, t, x)?;
            (x * x < r).then(|| Pole {
                x0: x,
                y0: (r - x * x).sqrt(),
            })
        })
        .collect()
}

/// Solves for the pole; fails if the selection does not single out one root
/// or the residue condition is not met.
pub fn solve_pole(angles: &ExteriorAngles, t: f64) -> Result<Pole> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(Error::Domain(format!(
            "prevertex must satisfy t > 1, got {t}"
        )));
    }
    let mut roots = admissible_roots(angles, t);
    // near-double roots can produce two copies of the same admissible root
    roots.dedup_by(|a, b| (a.x0 - b.x0).abs() <= 1e-12 * (1.0 + b.x0.abs()));
    let pole = match roots.len() {
        0 => return Err(Error::NoAdmissibleRoot { t }),
        1 => roots[0],
        count => return Err(Error::AmbiguousRoot { t, count }),
    };
    if !(pole.y0 > 0.0) {
        return Err(Error::NoAdmissibleRoot { t });
    }
    let residual = eqz0_residual(angles, t, pole.z0())?;
    let scale = 1.0 / pole.y0;
    if !(residual <= POLE_RESIDUAL_TOL * scale.max(1.0)) {
        return Err(Error::NoAdmissibleRoot { t });
    }
    Ok(pole)
}

/// `|alpha/z0 + beta/(z0-1) + gamma/(z0-t) - 1/(i Im z0)|`.
pub fn eqz0_residual(angles: &ExteriorAngles, t: f64, z0: Complex64) -> Result<f64> {
    if !(z0.im > 0.0) {
        return Err(Error::Domain(format!(
            "z0 = {z0} must lie in the upper half plane"
        )));
    }
    let lhs = angles.alpha / z0 + angles.beta / (z0 - 1.0) + angles.gamma / (z0 - t);
    let rhs = Complex64::new(0.0, -1.0 / z0.im);
    Ok((lhs - rhs).norm())
}
