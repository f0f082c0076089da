//! The potential function `u = Re psi(f^-1(w))`.
//!
//! `psi(z) = F(r, sqrt z) / K(r)` with `r = 1/sqrt(t)` maps the upper half
//! plane onto the rectangle `[0,1] x [0,h]` with `0, 1, t, inf` going to
//! the corners `0, 1, 1+ih, ih`. So `u(inf) = Re psi(z0)` and the level set
//! `u = c` is the image under `f` of `z = sn^2(K (c + i eta), r)`,
//! `0 <= eta <= h`.
//!
//! `psi` uses the principal branch of `sqrt z`. On the real axis the
//! boundary values are taken from above; the cuts `x > 1` get explicit
//! formulas so no branch is chosen by rounding.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::elliptic::EllipticModulus;
use crate::error::{Error, Result};
use crate::quad_geometry::Quadrilateral;
use crate::scmap::{AccessoryParams, ScMap};

/// Level values closer than this to `u(inf)` are traced as a split curve.
pub const SPLIT_LEVEL_TOL: f64 = 1e-9;

/// Width of the parameter gap around the point at infinity, relative to `h`.
pub const SPLIT_GAP: f64 = 1e-3;

/// Each split branch ends with a geometric run of points from the gap edge
/// in to `10^-APPROACH_DECADES` of the half gap, so the curve visibly heads
/// off to infinity.
pub const APPROACH_DECADES: i32 = 2;
const APPROACH_STEPS_PER_DECADE: i32 = 4;

/// Most points a single level curve may request.
pub const MAX_POINTS: usize = 1_000_000;

/// `psi(z) = F(r, sqrt z) / K(r)` for `z` in the closed upper half plane.
pub fn psi(params: &AccessoryParams, z: Complex64) -> Result<Complex64> {
    psi_with(&params.modulus(), params.t, z)
}

fn psi_with(m: &EllipticModulus, t: f64, z: Complex64) -> Result<Complex64> {
    if !(z.im >= 0.0) || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("psi needs Im z >= 0, got {z}")));
    }
    let kk = m.k();
    if z.im > 0.0 || z.re <= 1.0 {
        let f = m.incomplete_f(Complex64::new(z.re, z.im + 0.0).sqrt())?;
        return Ok(f / kk);
    }
    let x = z.re;
    let i = Complex64::new(0.0, 1.0);
    if x <= t {
        // F(r, s) = K + i F(r', sqrt(x-1) / (r' sqrt x)) for 1 < s^2 <= 1/r^2
        let s = ((x - 1.0) / x).sqrt() / m.rprime();
        let f = m
            .complement()
            .incomplete_f(Complex64::new(s.min(1.0), 0.0))?;
        Ok((kk + i * f) / kk)
    } else {
        // F(r, s) = F(r, 1/(r s)) + i K' for s^2 > 1/r^2
        let s = 1.0 / (m.r() * x.sqrt());
        let f = m.incomplete_f(Complex64::new(s, 0.0))?;
        Ok((f + i * m.k_prime()) / kk)
    }
}

/// `psi^-1(w) = sn^2(K w, r)`: the half-plane point on the rectangle
/// coordinate `w = u + i v`.
pub fn psi_inverse(params: &AccessoryParams, w: Complex64) -> Result<Complex64> {
    let m = params.modulus();
    let s = m.sn(w * m.k())?;
    Ok(s * s)
}

/// A solved quadrilateral together with `psi(z0) = u(inf) + i v(inf)`.
#[derive(Debug, Clone)]
pub struct PotentialSolution {
    map: ScMap,
    pub u_inf: f64,
    pub v_inf: f64,
}

impl PotentialSolution {
    pub fn params(&self) -> &AccessoryParams {
        self.map.params()
    }

    pub fn quadrilateral(&self) -> &Quadrilateral {
        self.map.quadrilateral()
    }

    pub fn map(&self) -> &ScMap {
        &self.map
    }

    /// Conformal modulus `h`.
    pub fn modulus(&self) -> f64 {
        self.params().h
    }

    /// Potential at a point given by its half-plane preimage.
    pub fn potential_at_preimage(&self, z: Complex64) -> Result<f64> {
        Ok(psi(self.params(), z)?.re)
    }

    /// Level curve `u = level` with `n` samples; see [`trace_level`].
    pub fn trace_level(&self, level: f64, n: usize) -> Result<LevelCurve> {
        trace_level(self, level, n)
    }
}

/// Solves the map and evaluates `u(inf)`.
pub fn u_infinity(q: &Quadrilateral) -> Result<PotentialSolution> {
    solution_from_map(ScMap::solve(q)?)
}

/// Wraps an already solved map.
pub fn solution_from_map(map: ScMap) -> Result<PotentialSolution> {
    let w = psi(map.params(), map.params().z0())?;
    let h = map.params().h;
    if !(w.re > 0.0 && w.re < 1.0 && w.im > 0.0 && w.im < h) {
        return Err(Error::Domain(format!(
            "psi(z0) = {w} lies outside the rectangle of height {h}"
        )));
    }
    Ok(PotentialSolution {
        map,
        u_inf: w.re,
        v_inf: w.im,
    })
}

/// One sample of a level curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    /// Rectangle coordinate along the curve, in `[0, h]`.
    pub eta: f64,
    /// Physical point.
    pub w: Complex64,
}

/// A traced level set. The `u(inf)` level is unbounded and comes as two
/// branches, one on each side of the point at infinity; other levels have a
/// single branch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelCurve {
    pub level: f64,
    pub branches: Vec<Vec<CurvePoint>>,
}

impl LevelCurve {
    pub fn is_split(&self) -> bool {
        self.branches.len() > 1
    }

    pub fn points(&self) -> impl Iterator<Item = &CurvePoint> {
        self.branches.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.branches.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> Option<&CurvePoint> {
        self.branches.first().and_then(|b| b.first())
    }

    pub fn last(&self) -> Option<&CurvePoint> {
        self.branches.last().and_then(|b| b.last())
    }
}

/// Traces `u = level` by sampling `eta` uniformly on `[0, h]` (`n` points,
/// endpoints included) and mapping `sn^2(K (level + i eta), r)` through `f`.
///
/// The first point lies on side `[z1, z2]` and the last on `[z3, z4]`. When
/// `level` is within [`SPLIT_LEVEL_TOL`] of `u(inf)` the samples inside a gap
/// of width `h * SPLIT_GAP` around `v(inf)` are dropped and each branch is
/// extended by a geometric run of points toward `v(inf)`, leaving two
/// branches.
pub fn trace_level(sol: &PotentialSolution, level: f64, n: usize) -> Result<LevelCurve> {
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::Domain(format!(
            "level must lie in (0,1), got {level}"
        )));
    }
    if !(2..=MAX_POINTS).contains(&n) {
        return Err(Error::Domain(format!(
            "point count must lie in [2, {MAX_POINTS}], got {n}"
        )));
    }
    let p = sol.params();
    let m = p.modulus();
    let (kk, kkp) = (m.k(), m.k_prime());
    let h = p.h;
    let map = sol.map();

    let point = |eta: f64| -> Result<CurvePoint> {
        // eta = h lands exactly on the line Im = K'
        let arg = Complex64::new(kk * level, if eta == h { kkp } else { kk * eta });
        let s = m.sn(arg)?;
        let mut z = s * s;
        if z.im < 0.0 {
            z.im = 0.0;
        }
        Ok(CurvePoint {
            eta,
            w: map.forward_map(z)?,
        })
    };
    let etas = (0..n).map(|j| {
        if j + 1 == n {
            h
        } else {
            h * j as f64 / (n - 1) as f64
        }
    });

    if (level - sol.u_inf).abs() >= SPLIT_LEVEL_TOL {
        let branch = etas.map(point).collect::<Result<Vec<_>>>()?;
        return Ok(LevelCurve {
            level,
            branches: vec![branch],
        });
    }

    let half_gap = 0.5 * SPLIT_GAP * h;
    let (gap_lo, gap_hi) = (sol.v_inf - half_gap, sol.v_inf + half_gap);
    let mut below = Vec::new();
    let mut above = Vec::new();
    for eta in etas {
        if eta < gap_lo {
            below.push(point(eta)?);
        } else if eta > gap_hi {
            above.push(point(eta)?);
        }
    }
    let steps = APPROACH_DECADES * APPROACH_STEPS_PER_DECADE;
    let mut approach = Vec::new();
    for k in 0..=steps {
        let offset = half_gap * 10f64.powf(-(k as f64) / APPROACH_STEPS_PER_DECADE as f64);
        below.push(point(sol.v_inf - offset)?);
        approach.push(point(sol.v_inf + offset)?);
    }
    approach.reverse();
    approach.extend(above);
    let above = approach;
    Ok(LevelCurve {
        level,
        branches: vec![below, above],
    })
}
