//! The exterior Schwarz-Christoffel map of the upper half plane onto the
//! complement of a convex quadrilateral,
//!
//! ```text
//! f(z) = C int_0^z zeta^alpha (zeta-1)^beta (zeta-t)^gamma
//!                  / ((zeta-z0)^2 (zeta-conj z0)^2) dzeta + z1,
//! ```
//!
//! with prevertices `0, 1, t, inf` for `z1, z2, z3, z4` and a double pole
//! at `z0` whose image is infinity.
//!
//! Integrals start at the nearest prevertex (or at infinity for far
//! points). The first piece next to a prevertex uses a Gauss-Jacobi rule
//! matched to the local power; the rest is adaptive Gauss-Kronrod. Near the
//! pole the double-pole part `phi(z0)/(zeta-z0)^2` is integrated in closed
//! form; the residue condition makes what remains analytic there.

use std::sync::{Arc, OnceLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::accessory::{eqz0_residual, solve_pole, Pole};
use crate::elliptic::EllipticModulus;
use crate::error::{Error, Result};
use crate::quad_geometry::{exterior_angles, ExteriorAngles, Quadrilateral};
use crate::quadrature::{integrate_segment, GaussJacobi};

/// Relative accuracy requested from every quadrature.
const QUAD_REL_TOL: f64 = 1e-13;

/// Node counts tried, in order, by the endpoint Gauss-Jacobi rules.
const JACOBI_LEVELS: [usize; 5] = [16, 32, 64, 128, 256];

/// Paths keep at least this multiple of `Im z0` away from the pole.
pub const POLE_STANDOFF: f64 = 0.1;

/// Targets closer than this multiple of `Im z0` use a radial leg from the
/// circle of the same radius.
const NEAR_POLE_RADIUS: f64 = 0.5;

/// Targets closer than this multiple of `Im z0` are rejected.
pub const POLE_GUARD: f64 = 1e-12;

/// Largest prevertex the parameter solve will consider.
pub const T_MAX: f64 = 1e8;

/// Upper bound for the relative closure error `|f(inf) - z4| / diam`.
pub const CLOSURE_TOL: f64 = 1e-8;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Principal power; a signed zero imaginary part is read as `+0` so that
/// points on the real axis take their boundary values from above.
fn cpow(base: Complex64, e: f64) -> Complex64 {
    let base = Complex64::new(base.re, base.im + 0.0);
    if base.re == 0.0 && base.im == 0.0 {
        return zero();
    }
    (base.ln() * e).exp()
}

/// `ln(1 + w)` without cancellation for small `w`.
fn ln_1p(w: Complex64) -> Complex64 {
    let (x, y) = (w.re, w.im);
    Complex64::new(0.5 * (2.0 * x + x * x + y * y).ln_1p(), y.atan2(1.0 + x))
}

/// `exp(w) - 1` without cancellation for small `w`.
fn exp_m1(w: Complex64) -> Complex64 {
    let half = (0.5 * w.im).sin();
    Complex64::new(
        w.re.exp_m1() * w.im.cos() - 2.0 * half * half,
        w.re.exp() * w.im.sin(),
    )
}

/// Cached Gauss-Jacobi rules with weight `(1 + x)^e`, one per node count.
#[derive(Debug)]
struct JacobiFamily {
    exponent: f64,
    rules: [OnceLock<GaussJacobi>; JACOBI_LEVELS.len()],
}

impl JacobiFamily {
    fn new(exponent: f64) -> Self {
        Self {
            exponent,
            rules: Default::default(),
        }
    }

    fn rule(&self, level: usize) -> &GaussJacobi {
        self.rules[level].get_or_init(|| GaussJacobi::new(JACOBI_LEVELS[level], 0.0, self.exponent))
    }
}

/// Endpoint rules for the four exponents `alpha, beta, gamma, delta`.
#[derive(Debug)]
pub struct RuleCache {
    families: [JacobiFamily; 4],
}

impl RuleCache {
    pub fn new(angles: &ExteriorAngles) -> Self {
        Self {
            families: angles.as_array().map(JacobiFamily::new),
        }
    }
}

/// Which real side of the half plane to integrate over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `[0, 1]`, the preimage of `[z1, z2]`.
    Lower,
    /// `[1, t]`, the preimage of `[z2, z3]`.
    Upper,
}

/// The integrand `zeta^alpha (zeta-1)^beta (zeta-t)^gamma / ((zeta-z0)^2 (zeta-conj z0)^2)`.
#[derive(Debug, Clone)]
pub struct ScIntegrand {
    angles: ExteriorAngles,
    t: f64,
    z0: Complex64,
    phi0: Complex64,
    rules: Arc<RuleCache>,
}

impl ScIntegrand {
    pub fn new(angles: ExteriorAngles, t: f64, z0: Complex64) -> Result<Self> {
        Self::with_rules(angles, t, z0, Arc::new(RuleCache::new(&angles)))
    }

    fn with_rules(
        angles: ExteriorAngles,
        t: f64,
        z0: Complex64,
        rules: Arc<RuleCache>,
    ) -> Result<Self> {
        if !(t > 1.0) {
            return Err(Error::Domain(format!(
                "prevertex must satisfy t > 1, got {t}"
            )));
        }
        if !(z0.im > 0.0) {
            return Err(Error::Domain(format!(
                "pole {z0} must lie in the upper half plane"
            )));
        }
        let mut me = Self {
            angles,
            t,
            z0,
            phi0: zero(),
            rules,
        };
        me.phi0 = me.regular_factor(z0);
        Ok(me)
    }

    pub fn angles(&self) -> &ExteriorAngles {
        &self.angles
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn z0(&self) -> Complex64 {
        self.z0
    }

    fn prevertex(&self, k: usize) -> f64 {
        [0.0, 1.0, self.t][k]
    }

    fn exponent(&self, k: usize) -> f64 {
        self.angles.as_array()[k]
    }

    fn y0(&self) -> f64 {
        self.z0.im
    }

    /// Value at `zeta` (principal branches, boundary values from above).
    pub fn eval(&self, zeta: Complex64) -> Complex64 {
        self.eval_without(zeta, None)
    }

    /// The integrand with the power factor of prevertex `skip` left out.
    fn eval_without(&self, zeta: Complex64, skip: Option<usize>) -> Complex64 {
        let mut num = Complex64::new(1.0, 0.0);
        for k in 0..3 {
            if skip != Some(k) {
                num *= cpow(zeta - self.prevertex(k), self.exponent(k));
            }
        }
        let d1 = zeta - self.z0;
        let d2 = zeta - self.z0.conj();
        num / (d1 * d1 * d2 * d2)
    }

    /// `phi(zeta) = g(zeta) (zeta - z0)^2`, analytic near the pole.
    fn regular_factor(&self, zeta: Complex64) -> Complex64 {
        let mut num = Complex64::new(1.0, 0.0);
        for k in 0..3 {
            num *= cpow(zeta - self.prevertex(k), self.exponent(k));
        }
        let d2 = zeta - self.z0.conj();
        num / (d2 * d2)
    }

    /// `g(zeta) - phi(z0) / (zeta - z0)^2`; analytic at `z0` because the
    /// residue vanishes there.
    fn eval_subtracted(&self, zeta: Complex64) -> Result<Complex64> {
        let dz = zeta - self.z0;
        let dist = dz.norm();
        if dist == 0.0 {
            return Err(Error::Quadrature("quadrature node hit the pole".into()));
        }
        if dist > 0.25 * self.y0() {
            return Ok(self.eval(zeta) - self.phi0 / (dz * dz));
        }
        let mut log_ratio = zero();
        for k in 0..3 {
            log_ratio += self.exponent(k) * ln_1p(dz / (self.z0 - self.prevertex(k)));
        }
        log_ratio -= 2.0 * ln_1p(dz / (self.z0 - self.z0.conj()));
        Ok(self.phi0 * exp_m1(log_ratio) / (dz * dz))
    }

    /// Distance from `p` to the nearest singular point other than `exclude`.
    fn clearance(&self, p: Complex64, exclude: Option<usize>) -> f64 {
        let mut d = (p - self.z0).norm().min((p - self.z0.conj()).norm());
        for k in 0..3 {
            if exclude != Some(k) {
                d = d.min((p - self.prevertex(k)).norm());
            }
        }
        d
    }

    /// `int` of `s^e h(s)` over `[0, len]` by doubling Gauss-Jacobi rules;
    /// `min_level` fixes the first node count tried.
    fn jacobi_integral<H>(
        &self,
        family: usize,
        len: f64,
        min_level: usize,
        h: H,
    ) -> Result<Complex64>
    where
        H: Fn(f64) -> Complex64,
    {
        let fam = &self.rules.families[family];
        let e = fam.exponent;
        let prefactor = (0.5 * len).powf(1.0 + e);
        let apply = |level: usize| -> Result<Complex64> {
            let rule = fam.rule(level);
            Ok(prefactor * rule.apply(|x| Ok(h(0.5 * len * (1.0 + x))))?)
        };
        let mut prev = apply(min_level)?;
        for level in min_level + 1..JACOBI_LEVELS.len() {
            let cur = apply(level)?;
            if (cur - prev).norm() <= QUAD_REL_TOL * cur.norm() {
                return Ok(cur);
            }
            prev = cur;
        }
        Err(Error::Quadrature(format!(
            "endpoint rule with exponent {e} did not stabilize at {} nodes",
            JACOBI_LEVELS[JACOBI_LEVELS.len() - 1]
        )))
    }

    /// `int` from prevertex `k` along the ray `dir` (unit) for length `len`.
    fn endpoint_piece(
        &self,
        k: usize,
        dir: Complex64,
        len: f64,
        min_level: usize,
    ) -> Result<Complex64> {
        let w = Complex64::new(self.prevertex(k), 0.0);
        let e = self.exponent(k);
        // (zeta - w)^e = s^e dir^e on the principal branch, s > 0
        let phase = cpow(dir, e) * dir;
        let body = self.jacobi_integral(k, len, min_level, |s| {
            self.eval_without(w + dir * s, Some(k))
        })?;
        Ok(phase * body)
    }

    /// Smooth-part integral along `a -> b`, detouring around the pole.
    fn integrate_regular(&self, a: Complex64, b: Complex64, abs_tol: f64) -> Result<Complex64> {
        if a == b {
            return Ok(zero());
        }
        let y0 = self.y0();
        let seg = b - a;
        let s = ((self.z0 - a) * seg.conj()).re / seg.norm_sqr();
        let s = s.clamp(0.0, 1.0);
        let closest = a + seg * s;
        let dmin = (closest - self.z0).norm();

        if dmin < POLE_STANDOFF * y0 && s > 0.0 && s < 1.0 {
            let normal = if dmin > 0.0 {
                (closest - self.z0) / dmin
            } else {
                let n = Complex64::new(0.0, 1.0) * seg / seg.norm();
                if n.im >= 0.0 {
                    n
                } else {
                    -n
                }
            };
            let waypoint = self.z0 + normal * (NEAR_POLE_RADIUS * y0);
            return Ok(self.integrate_regular(a, waypoint, abs_tol)?
                + self.integrate_regular(waypoint, b, abs_tol)?);
        }

        if dmin > 2.0 * y0 {
            return integrate_segment(|z| Ok(self.eval(z)), a, b, abs_tol, QUAD_REL_TOL);
        }
        let smooth = integrate_segment(|z| self.eval_subtracted(z), a, b, abs_tol, QUAD_REL_TOL)?;
        let pole_part = self.phi0 * (1.0 / (a - self.z0) - 1.0 / (b - self.z0));
        Ok(smooth + pole_part)
    }

    /// `int` along the straight segment from prevertex `k` to `z`.
    fn integrate_from_prevertex(&self, k: usize, z: Complex64, abs_tol: f64) -> Result<Complex64> {
        let w = Complex64::new(self.prevertex(k), 0.0);
        let v = z - w;
        let len = v.norm();
        if len == 0.0 {
            return Ok(zero());
        }
        let dir = v / len;
        let piece = len.min(0.5 * self.clearance(w, Some(k)));
        let mut total = self.endpoint_piece(k, dir, piece, 0)?;
        if piece < len {
            total += self.integrate_regular(w + dir * piece, z, abs_tol)?;
        }
        Ok(total)
    }

    /// `int` over a real side between two prevertices.
    fn side(&self, side: Side, min_level: usize) -> Result<Complex64> {
        let (i, j) = match side {
            Side::Lower => (0, 1),
            Side::Upper => (1, 2),
        };
        let (wi, wj) = (self.prevertex(i), self.prevertex(j));
        let len = wj - wi;
        let left = (0.5 * len).min(0.5 * self.clearance(Complex64::new(wi, 0.0), Some(i)));
        let right = (0.5 * len).min(0.5 * self.clearance(Complex64::new(wj, 0.0), Some(j)));
        let one = Complex64::new(1.0, 0.0);
        let mut total = self.endpoint_piece(i, one, left, min_level)?;
        // reversed orientation: int_{wj-right}^{wj} = -int_{wj}^{wj-right}
        total -= self.endpoint_piece(j, -one, right, min_level)?;
        let (a, b) = (
            Complex64::new(wi + left, 0.0),
            Complex64::new(wj - right, 0.0),
        );
        if b.re > a.re {
            total += self.integrate_regular(a, b, 0.0)?;
        }
        Ok(total)
    }

    /// `int_z^inf` via `zeta = z / s`; the transformed integrand behaves
    /// like `s^delta` at `s = 0`.
    fn tail(&self, z: Complex64) -> Result<Complex64> {
        let ExteriorAngles {
            alpha, beta, gamma, ..
        } = self.angles;
        let lead = cpow(z, alpha) * z;
        let h = |s: f64| {
            let d1 = z - self.z0 * s;
            let d2 = z - self.z0.conj() * s;
            lead * cpow(z - s, beta) * cpow(z - self.t * s, gamma) / (d1 * d1 * d2 * d2)
        };
        self.jacobi_integral(3, 1.0, 0, h)
    }
}

/// Side integral over `[0, 1]` or `[1, t]`.
pub fn side_integral(integrand: &ScIntegrand, side: Side) -> Result<Complex64> {
    integrand.side(side, 0)
}

/// Side integral whose endpoint rules start at (at least) `nodes` points;
/// used to check that refining the rules does not move the result.
pub fn side_integral_with_nodes(
    integrand: &ScIntegrand,
    side: Side,
    nodes: usize,
) -> Result<Complex64> {
    let level = JACOBI_LEVELS
        .iter()
        .position(|&n| n >= nodes)
        .unwrap_or(JACOBI_LEVELS.len() - 2)
        .min(JACOBI_LEVELS.len() - 2);
    integrand.side(side, level)
}

/// Solved accessory parameters of the map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AccessoryParams {
    pub angles: ExteriorAngles,
    /// Prevertex of `z3`.
    pub t: f64,
    /// `r = 1/sqrt(t)`.
    pub r: f64,
    /// `r' = sqrt(1 - r^2)`, kept separately for precision.
    pub rprime: f64,
    pub pole: Pole,
    /// Multiplicative constant `C`.
    pub c: Complex64,
    /// Conformal modulus `K(r')/K(r)`.
    pub h: f64,
}

impl AccessoryParams {
    pub fn z0(&self) -> Complex64 {
        self.pole.z0()
    }

    pub fn modulus(&self) -> EllipticModulus {
        EllipticModulus::from_prevertex(self.t).expect("solved prevertex exceeds one")
    }

    pub fn eqz0_residual(&self) -> f64 {
        eqz0_residual(&self.angles, self.t, self.z0()).unwrap_or(f64::INFINITY)
    }
}

struct SideRatio<'a> {
    angles: ExteriorAngles,
    rules: Arc<RuleCache>,
    log_target: f64,
    _q: &'a Quadrilateral,
}

impl SideRatio<'_> {
    fn integrand(&self, t: f64) -> Result<ScIntegrand> {
        let pole = solve_pole(&self.angles, t)?;
        ScIntegrand::with_rules(self.angles, t, pole.z0(), self.rules.clone())
    }

    /// `ln |I_[1,t]| - ln |I_[0,1]| - ln(target)` at `t = 1 + exp(x)`.
    fn residual(&self, x: f64) -> Result<f64> {
        let t = 1.0 + x.exp();
        let g = self.integrand(t)?;
        let lower = g.side(Side::Lower, 0)?;
        let upper = g.side(Side::Upper, 0)?;
        Ok(upper.norm().ln() - lower.norm().ln() - self.log_target)
    }
}

/// Finds `t` so that the images of `[0,1]` and `[1,t]` have the side ratio
/// `|z3 - z2| / |z2 - z1|`, then fixes `C` and the modulus.
///
/// The unknown is `x = ln(t - 1)`; it is bracketed by unit steps from
/// `t = 1 + |z3-z2|/|z2-z1|` and refined with Brent's method.
pub fn solve_parameters(q: &Quadrilateral) -> Result<AccessoryParams> {
    let q = q.validate()?;
    let angles = exterior_angles(&q)?;
    let [z1, z2, z3, _] = *q.vertices();
    let ratio = (z3 - z2).norm() / (z2 - z1).norm();
    let problem = SideRatio {
        angles,
        rules: Arc::new(RuleCache::new(&angles)),
        log_target: ratio.ln(),
        _q: &q,
    };

    let x_max = (T_MAX - 1.0).ln();
    let x_min = (1e-8f64).ln();
    let eval = |x: f64| {
        problem.residual(x).map_err(|e| {
            Error::Bracketing(format!("side ratio failed at t = {}: {e}", 1.0 + x.exp()))
        })
    };

    let mut x0 = ratio.ln().clamp(x_min + 1.0, x_max - 1.0);
    let mut f0 = eval(x0)?;
    let step = if f0 < 0.0 { 1.0 } else { -1.0 };
    let (lo, hi, flo, fhi);
    loop {
        let x1 = x0 + step;
        if x1 > x_max || x1 < x_min {
            return Err(Error::Bracketing(format!(
                "no sign change of the side-ratio equation for t in (1 + 1e-8, {T_MAX:e}]"
            )));
        }
        let f1 = eval(x1)?;
        // the side ratio must grow with t
        if (f1 - f0) * step <= 0.0 {
            return Err(Error::Bracketing(format!(
                "side ratio is not monotone near t = {}",
                1.0 + x1.exp()
            )));
        }
        if f1.signum() != f0.signum() || f1 == 0.0 {
            if step > 0.0 {
                (lo, hi, flo, fhi) = (x0, x1, f0, f1);
            } else {
                (lo, hi, flo, fhi) = (x1, x0, f1, f0);
            }
            break;
        }
        x0 = x1;
        f0 = f1;
    }

    let x = brent(|x| problem.residual(x), lo, hi, flo, fhi)?;
    let t = 1.0 + x.exp();
    let g = problem.integrand(t)?;
    let lower = side_integral(&g, Side::Lower)?;
    let c = (z2 - z1) / lower;
    let modulus = EllipticModulus::from_prevertex(t)?;
    let pole = Pole {
        x0: g.z0.re,
        y0: g.z0.im,
    };
    Ok(AccessoryParams {
        angles,
        t,
        r: modulus.r(),
        rprime: modulus.rprime(),
        pole,
        c,
        h: modulus.k_prime() / modulus.k(),
    })
}

/// Brent's method on a sign-changing bracket `[a, b]`.
fn brent<F>(mut f: F, mut a: f64, mut b: f64, mut fa: f64, mut fb: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    const MAX_ITER: usize = 200;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    let (mut c, mut fc) = (a, fa);
    let (mut d, mut e) = (b - a, b - a);
    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 1e-15;
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b)?;
    }
    Err(Error::Convergence(MAX_ITER))
}

/// A solved map together with the images of its four prevertices.
#[derive(Debug, Clone)]
pub struct ScMap {
    params: AccessoryParams,
    quad: Quadrilateral,
    integrand: ScIntegrand,
    images: [Complex64; 4],
    far_radius: f64,
    abs_tol: f64,
}

impl ScMap {
    /// Computes the vertex images `f(0), f(1), f(t), f(inf)` by integration.
    pub fn new(params: AccessoryParams, quad: Quadrilateral) -> Result<Self> {
        let integrand = ScIntegrand::new(params.angles, params.t, params.z0())?;
        let lower = side_integral(&integrand, Side::Lower)?;
        let upper = side_integral(&integrand, Side::Upper)?;
        let abs_tol = 1e-15 * lower.norm();
        let far_radius = 2.0 * params.t.max(params.z0().norm()) + 1.0;

        let z1 = quad.vertex(0);
        let w2 = z1 + params.c * lower;
        let w3 = w2 + params.c * upper;
        let to_far =
            integrand.integrate_from_prevertex(2, Complex64::new(far_radius, 0.0), abs_tol)?;
        let tail = integrand.tail(Complex64::new(far_radius, 0.0))?;
        let w4 = w3 + params.c * (to_far + tail);
        Ok(Self {
            params,
            quad,
            integrand,
            images: [z1, w2, w3, w4],
            far_radius,
            abs_tol,
        })
    }

    /// Solves the parameter problem and builds the map.
    pub fn solve(q: &Quadrilateral) -> Result<Self> {
        let params = solve_parameters(q)?;
        Self::new(params, *q)
    }

    pub fn params(&self) -> &AccessoryParams {
        &self.params
    }

    pub fn quadrilateral(&self) -> &Quadrilateral {
        &self.quad
    }

    pub fn integrand(&self) -> &ScIntegrand {
        &self.integrand
    }

    /// Computed images of `0, 1, t, inf`.
    pub fn vertex_images(&self) -> &[Complex64; 4] {
        &self.images
    }

    /// `lim f(z)` as `z -> inf`; should reproduce `z4`.
    pub fn map_at_infinity(&self) -> Complex64 {
        self.images[3]
    }

    /// `|f(inf) - z4| / diam`.
    pub fn closure_residual(&self) -> f64 {
        (self.images[3] - self.quad.vertex(3)).norm() / self.quad.diameter()
    }

    /// `f(z)` for `z` in the closed upper half plane.
    pub fn forward_map(&self, z: Complex64) -> Result<Complex64> {
        if !(z.im >= 0.0) || !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::Domain(format!(
                "{z} is not in the closed upper half plane"
            )));
        }
        let z0 = self.params.z0();
        let y0 = z0.im;
        let dz = z - z0;
        let dist = dz.norm();
        if dist < POLE_GUARD * y0 {
            return Err(Error::PoleProximity(format!("{z}")));
        }
        if dist < NEAR_POLE_RADIUS * y0 {
            let anchor = z0 + dz / dist * (NEAR_POLE_RADIUS * y0);
            let leg = self.integrand.integrate_regular(anchor, z, self.abs_tol)?;
            return Ok(self.map_far_from_pole(anchor)? + self.params.c * leg);
        }
        self.map_far_from_pole(z)
    }

    fn map_far_from_pole(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() >= self.far_radius {
            return Ok(self.images[3] - self.params.c * self.integrand.tail(z)?);
        }
        let k = (0..3)
            .min_by(|&i, &j| {
                let di = (z - self.integrand.prevertex(i)).norm();
                let dj = (z - self.integrand.prevertex(j)).norm();
                di.total_cmp(&dj)
            })
            .unwrap_or(0);
        let integral = self
            .integrand
            .integrate_from_prevertex(k, z, self.abs_tol)?;
        Ok(self.images[k] + self.params.c * integral)
    }

    /// `f(z)` along a caller-chosen polyline from prevertex `0`; used to
    /// check path independence.
    pub fn forward_map_via(&self, waypoints: &[Complex64], z: Complex64) -> Result<Complex64> {
        let mut points: Vec<Complex64> = waypoints.to_vec();
        points.push(z);
        let first = points[0];
        let mut acc = self
            .integrand
            .integrate_from_prevertex(0, first, self.abs_tol)?;
        for pair in points.windows(2) {
            acc += self
                .integrand
                .integrate_regular(pair[0], pair[1], self.abs_tol)?;
        }
        Ok(self.images[0] + self.params.c * acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn ln_1p_and_exp_m1_small_arguments() {
        let w = c(1e-12, -3e-12);
        assert!((ln_1p(w) - w).norm() < 1e-23);
        assert!((exp_m1(w) - w).norm() < 1e-23);
        let big = c(0.3, 0.4);
        assert!((ln_1p(big) - (big + 1.0).ln()).norm() < 1e-15);
        assert!((exp_m1(big) - (big.exp() - 1.0)).norm() < 1e-15);
    }

    #[test]
    fn cpow_takes_upper_boundary_values() {
        let v = cpow(c(-4.0, -0.0), 0.5);
        assert!((v - c(0.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn square_sides_have_equal_length() {
        let ang = ExteriorAngles::new(0.5, 0.5, 0.5, 0.5).unwrap();
        let g = ScIntegrand::new(ang, 2.0, c(1.0, 1.0)).unwrap();
        let lower = side_integral(&g, Side::Lower).unwrap();
        let upper = side_integral(&g, Side::Upper).unwrap();
        assert!((lower.norm() - upper.norm()).abs() < 1e-13 * lower.norm());
    }

    #[test]
    fn subtracted_integrand_is_continuous_through_the_switch() {
        let ang = ExteriorAngles::from_three(0.3, 0.4, 0.6).unwrap();
        let pole = solve_pole(&ang, 2.5).unwrap();
        let g = ScIntegrand::new(ang, 2.5, pole.z0()).unwrap();
        let r = 0.25 * pole.y0;
        let inside = g
            .eval_subtracted(pole.z0() + c(r * (1.0 - 1e-9), 0.0))
            .unwrap();
        let outside = g
            .eval_subtracted(pole.z0() + c(r * (1.0 + 1e-9), 0.0))
            .unwrap();
        assert!((inside - outside).norm() < 1e-7 * inside.norm());
    }

    #[test]
    fn brent_finds_cubic_root() {
        let f = |x: f64| Ok(x * x * x - 2.0);
        let r = brent(f, 0.0, 2.0, -2.0, 6.0).unwrap();
        assert!((r - 2f64.cbrt()).abs() < 1e-14);
    }
}
