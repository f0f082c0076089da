//! Exterior of the unit disk with vertices `e^{i alpha}, e^{-i alpha},
//! e^{-i beta}, e^{i beta}`, solved in closed form.
//!
//! The Mobius map `T(z) = (z - a)/(1 - a z)` makes the configuration
//! symmetric about the imaginary axis, a second Mobius map `S` sends the
//! exterior to the upper half plane with vertices `-1/lambda, -1, 1,
//! 1/lambda`, and `g(s) = F(lambda, s) / (2 K(lambda)) + 1/2` finishes onto
//! the rectangle `[0,1] x [0,h]`. The composite inverse is
//!
//! ```text
//! z = (sqrt(l)(a-i) s + (1-ia)) / (sqrt(l)(1-ia) s + (a-i)),  s = sn((2u-1)K + i xi, lambda).
//! ```
//!
//! All elliptic calls use the modulus `lambda` (not the parameter `lambda^2`).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::elliptic::EllipticModulus;
use crate::error::{Error, Result};
use crate::potential::{
    CurvePoint, LevelCurve, APPROACH_DECADES, MAX_POINTS, SPLIT_GAP, SPLIT_LEVEL_TOL,
};

/// Vertex angles closer than this are treated as collapsed.
pub const MIN_ANGLE_GAP: f64 = 1e-8;

const APPROACH_STEPS_PER_DECADE: i32 = 4;

/// Derived constants of the disk configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskQuadrilateral {
    pub alpha: f64,
    pub beta: f64,
    /// Mobius parameter of `T`.
    pub a: f64,
    pub gamma: f64,
    /// Elliptic modulus, in `(0, 1)`.
    pub lambda: f64,
    /// Conformal modulus `K'(lambda) / (2 K(lambda))`.
    pub h: f64,
}

impl DiskQuadrilateral {
    fn modulus(&self) -> EllipticModulus {
        EllipticModulus::new(self.lambda).expect("lambda checked at setup")
    }

    /// The four vertices in the order `e^{i beta}, e^{i alpha}, e^{-i alpha}, e^{-i beta}`.
    pub fn vertices(&self) -> [Complex64; 4] {
        [self.beta, self.alpha, -self.alpha, -self.beta].map(|th| Complex64::from_polar(1.0, th))
    }

    fn mobius(&self) -> [Complex64; 4] {
        let sl = self.lambda.sqrt();
        let i = Complex64::new(0.0, 1.0);
        let a = Complex64::new(self.a, 0.0);
        [sl * (a - i), 1.0 - i * a, sl * (1.0 - i * a), a - i]
    }

    /// `z` for a half-plane point `s`.
    pub fn from_half_plane(&self, s: Complex64) -> Complex64 {
        let [p, q, r, t] = self.mobius();
        (p * s + q) / (r * s + t)
    }

    /// Image of `s = infinity`.
    pub fn from_half_plane_infinity(&self) -> Complex64 {
        let [p, _, r, _] = self.mobius();
        p / r
    }

    /// Half-plane point `S(T(z))` of a physical point.
    pub fn to_half_plane(&self, z: Complex64) -> Complex64 {
        let [p, q, r, t] = self.mobius();
        (t * z - q) / (p - r * z)
    }

    /// Half-plane preimage of the point at infinity,
    /// `-(1/sqrt(lambda)) (1 + i a) / (a + i)`.
    pub fn omega0(&self) -> Complex64 {
        let i = Complex64::new(0.0, 1.0);
        -(1.0 + i * self.a) / ((self.a + i) * self.lambda.sqrt())
    }

    /// `g(s) = F(lambda, s) / (2K) + 1/2`.
    pub fn g(&self, s: Complex64) -> Result<Complex64> {
        let m = self.modulus();
        Ok(m.incomplete_f(s)? / (2.0 * m.k()) + 0.5)
    }
}

/// Computes `a, gamma, lambda, h` for `0 < alpha < beta < pi`.
pub fn disk_setup(alpha: f64, beta: f64) -> Result<DiskQuadrilateral> {
    if !(alpha > 0.0 && alpha < beta && beta < PI) {
        return Err(Error::Domain(format!(
            "need 0 < alpha < beta < pi, got alpha = {alpha}, beta = {beta}"
        )));
    }
    if beta - alpha < MIN_ANGLE_GAP {
        return Err(Error::DegeneratePolygon(format!(
            "vertices collapse: beta - alpha = {}",
            beta - alpha
        )));
    }
    let p = ((0.5 * alpha).tan() * (0.5 * beta).tan()).sqrt();
    let a = (1.0 - p) / (1.0 + p);
    let gamma = ((0.5 * (beta - alpha)).sin() / (0.5 * (beta + alpha)).sin()).acos();
    let tg = gamma.tan();
    // 1 + 2 tan^2 - 2 tan sqrt(1 + tan^2) = (sqrt(1 + tan^2) - tan)^2
    let lambda = (tg.hypot(1.0) - tg).powi(2);
    let m = EllipticModulus::new(lambda)
        .map_err(|_| Error::DegeneratePolygon(format!("modulus lambda = {lambda} left (0,1)")))?;
    Ok(DiskQuadrilateral {
        alpha,
        beta,
        a,
        gamma,
        lambda,
        h: m.k_prime() / (2.0 * m.k()),
    })
}

/// `u(inf) = Re g(omega0)`.
pub fn disk_u_infinity(d: &DiskQuadrilateral) -> Result<f64> {
    Ok(d.g(d.omega0())?.re)
}

/// Level curve `u = u0`, sampled uniformly in `xi` over `[0, K'(lambda)]`.
///
/// This range already covers the whole level set (both halves, which are
/// mirror images across the real axis). For `u0 = u(inf)` the curve is
/// split around the parameter of the point at infinity.
pub fn disk_trace_level(d: &DiskQuadrilateral, u0: f64, n: usize) -> Result<LevelCurve> {
    if !(u0 > 0.0 && u0 < 1.0) {
        return Err(Error::Domain(format!("level must lie in (0,1), got {u0}")));
    }
    if !(2..=MAX_POINTS).contains(&n) {
        return Err(Error::Domain(format!(
            "point count must lie in [2, {MAX_POINTS}], got {n}"
        )));
    }
    let m = d.modulus();
    let (kk, kkp) = (m.k(), m.k_prime());
    let point = |xi: f64| -> Result<CurvePoint> {
        // at u0 = 1/2 the end xi = K' is a pole of sn, which maps to a finite point
        let w = match m.sn(Complex64::new((2.0 * u0 - 1.0) * kk, xi)) {
            Ok(s) => d.from_half_plane(s),
            Err(Error::Pole(_)) => d.from_half_plane_infinity(),
            Err(e) => return Err(e),
        };
        Ok(CurvePoint { eta: xi, w })
    };
    let xis = (0..n).map(|j| {
        if j + 1 == n {
            kkp
        } else {
            kkp * j as f64 / (n - 1) as f64
        }
    });

    let at_infinity = d.g(d.omega0())?;
    if (u0 - at_infinity.re).abs() >= SPLIT_LEVEL_TOL {
        return Ok(LevelCurve {
            level: u0,
            branches: vec![xis.map(point).collect::<Result<Vec<_>>>()?],
        });
    }

    // Im g = xi / (2K) along the curve
    let xi_inf = 2.0 * kk * at_infinity.im;
    let half_gap = 0.5 * SPLIT_GAP * kkp;
    let mut below = Vec::new();
    let mut above = Vec::new();
    for xi in xis {
        if xi < xi_inf - half_gap {
            below.push(point(xi)?);
        } else if xi > xi_inf + half_gap {
            above.push(point(xi)?);
        }
    }
    let steps = APPROACH_DECADES * APPROACH_STEPS_PER_DECADE;
    let mut approach = Vec::new();
    for k in 0..=steps {
        let offset = half_gap * 10f64.powf(-(k as f64) / APPROACH_STEPS_PER_DECADE as f64);
        below.push(point(xi_inf - offset)?);
        approach.push(point(xi_inf + offset)?);
    }
    approach.reverse();
    approach.extend(above);
    Ok(LevelCurve {
        level: u0,
        branches: vec![below, approach],
    })
}

/// The nine default levels: `0.2 j u0` for `j = 1..5` and
/// `u0 + 0.2 k (1 - u0)` for `k = 1..4`.
pub fn default_levels(u0: f64) -> Vec<f64> {
    let low = (1..=5).map(|j| 0.2 * j as f64 * u0);
    let high = (1..=4).map(|k| u0 + 0.2 * k as f64 * (1.0 - u0));
    low.chain(high).collect()
}
