//! Elliptic integrals of the first kind and the Jacobi sine.
//!
//! Everything uses the modulus convention: `K(r)` integrates
//! `1/sqrt((1-x^2)(1-r^2 x^2))`, so callers holding a parameter `m = r^2`
//! must take its square root first.
//!
//! * complete integrals come from the arithmetic-geometric mean,
//! * incomplete integrals at complex argument come from Carlson's `R_F`
//!   (duplication algorithm, principal branch),
//! * `sn` at complex argument is assembled from real-argument `sn, cn, dn`
//!   with moduli `k` and `k'`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Arguments of `sn` closer than this to a lattice pole are rejected.
pub const SN_POLE_GUARD: f64 = 1e-10;

/// A modulus `r` in `(0, 1)` together with its complement `r' = sqrt(1 - r^2)`.
///
/// Both are stored so that values near either end of the interval keep full
/// relative precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    r: f64,
    rprime: f64,
}

impl EllipticModulus {
    pub fn new(r: f64) -> Result<Self> {
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::Domain(format!("modulus must lie in (0,1), got {r}")));
        }
        Ok(Self {
            r,
            rprime: ((1.0 - r) * (1.0 + r)).sqrt(),
        })
    }

    /// The modulus `r = 1/sqrt(t)` attached to a prevertex `t > 1`.
    pub fn from_prevertex(t: f64) -> Result<Self> {
        if !(t > 1.0) || !t.is_finite() {
            return Err(Error::Domain(format!(
                "prevertex must satisfy t > 1, got {t}"
            )));
        }
        Ok(Self {
            r: t.sqrt().recip(),
            rprime: ((t - 1.0) / t).sqrt(),
        })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn rprime(&self) -> f64 {
        self.rprime
    }

    /// The modulus with the roles of `r` and `r'` exchanged.
    pub fn complement(&self) -> Self {
        Self {
            r: self.rprime,
            rprime: self.r,
        }
    }

    /// `K(r)`.
    pub fn k(&self) -> f64 {
        FRAC_PI_2 / agm(1.0, self.rprime)
    }

    /// `K'(r) = K(r')`.
    pub fn k_prime(&self) -> f64 {
        FRAC_PI_2 / agm(1.0, self.r)
    }

    /// `F` with upper limit `z = sin(phi)`, see [`incomplete_f`].
    pub fn incomplete_f(&self, z: Complex64) -> Result<Complex64> {
        incomplete_f(self.r, z)
    }

    /// Real-argument `(sn, cn, dn)`.
    pub fn sn_cn_dn(&self, u: f64) -> (f64, f64, f64) {
        sn_cn_dn_real(u, self.r, self.rprime)
    }

    /// Jacobi sine at complex argument.
    pub fn sn(&self, u: Complex64) -> Result<Complex64> {
        let kk = self.k();
        let kkp = self.k_prime();

        let dx = u.re - 2.0 * kk * (u.re / (2.0 * kk)).round();
        let shifted = u.im - kkp;
        let dy = shifted - 2.0 * kkp * (shifted / (2.0 * kkp)).round();
        if dx.hypot(dy) < SN_POLE_GUARD {
            return Err(Error::Pole(format!("{u}")));
        }

        // sn(x + 2K) = -sn(x), sn(u + 2iK') = sn(u)
        let half_periods = (u.re / (2.0 * kk)).round();
        let x = u.re - 2.0 * kk * half_periods;
        let sign = if half_periods.rem_euclid(2.0) == 0.0 {
            1.0
        } else {
            -1.0
        };
        let y = u.im - 2.0 * kkp * (u.im / (2.0 * kkp)).round();

        let (s, c, d) = sn_cn_dn_real(x, self.r, self.rprime);
        let (s1, c1, d1) = sn_cn_dn_real(y, self.rprime, self.r);
        let den = c1 * c1 + self.r * self.r * s * s * s1 * s1;
        Ok(Complex64::new(
            sign * s * d1 / den,
            sign * c * d * s1 * c1 / den,
        ))
    }
}

/// Arithmetic-geometric mean of two positive reals.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    0.5 * (a + b)
}

/// Complete elliptic integral of the first kind, `K(r)` for `0 <= r < 1`.
pub fn complete_k(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("K(r) requires 0 <= r < 1, got {r}")));
    }
    if r == 0.0 {
        return Ok(FRAC_PI_2);
    }
    Ok(FRAC_PI_2 / agm(1.0, ((1.0 - r) * (1.0 + r)).sqrt()))
}

fn on_negative_axis(v: Complex64) -> bool {
    v.im == 0.0 && v.re < 0.0
}

/// Carlson's symmetric integral `R_F(x, y, z)` for complex arguments.
///
/// Arguments must avoid the closed negative real axis and at most one of
/// them may vanish.
pub fn carlson_rf(x: Complex64, y: Complex64, z: Complex64) -> Result<Complex64> {
    let args = [x, y, z];
    if args.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::Domain("R_F argument is not finite".into()));
    }
    if args.iter().any(|&v| on_negative_axis(v)) {
        return Err(Error::Domain(format!(
            "R_F argument on the negative real axis: ({x}, {y}, {z})"
        )));
    }
    if args.iter().filter(|v| v.re == 0.0 && v.im == 0.0).count() > 1 {
        return Err(Error::Domain(
            "R_F needs at least two nonzero arguments".into(),
        ));
    }

    const TOL: f64 = 1e-17;
    let a0 = (x + y + z) / 3.0;
    let spread = [(a0 - x).norm(), (a0 - y).norm(), (a0 - z).norm()]
        .into_iter()
        .fold(0.0, f64::max);
    let q = (3.0 * TOL).powf(-1.0 / 6.0) * spread;

    let (mut xm, mut ym, mut zm) = (x, y, z);
    let mut am = a0;
    let mut scale = 1.0;
    for _ in 0..200 {
        if q * scale < am.norm() {
            break;
        }
        let (sx, sy, sz) = (xm.sqrt(), ym.sqrt(), zm.sqrt());
        let lambda = sx * sy + sx * sz + sy * sz;
        xm = (xm + lambda) * 0.25;
        ym = (ym + lambda) * 0.25;
        zm = (zm + lambda) * 0.25;
        am = (am + lambda) * 0.25;
        scale *= 0.25;
    }

    let big_x = (a0 - x) * scale / am;
    let big_y = (a0 - y) * scale / am;
    let big_z = -big_x - big_y;
    let e2 = big_x * big_y - big_z * big_z;
    let e3 = big_x * big_y * big_z;
    let series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - e2 * e3 * (3.0 / 44.0);
    Ok(series / am.sqrt())
}

/// Incomplete elliptic integral of the first kind with upper limit
/// `z = sin(phi)`: `int_0^z dt / sqrt((1 - t^2)(1 - r^2 t^2))` on the
/// principal branch.
///
/// Real `z` with `|z| > 1` lies on a branch cut and is rejected.
pub fn incomplete_f(r: f64, z: Complex64) -> Result<Complex64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!(
            "F(r, .) requires 0 <= r < 1, got {r}"
        )));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if z.im == 0.0 && z.re.abs() > 1.0 {
        return Err(Error::Domain(format!(
            "F(r, z) with z = {z} on a branch cut"
        )));
    }
    let z2 = z * z;
    let one = Complex64::new(1.0, 0.0);
    Ok(z * carlson_rf(one - z2, one - r * r * z2, one)?)
}

/// Real-argument Jacobi functions by the descending AGM (Gauss) transformation.
fn sn_cn_dn_real(u: f64, k: f64, kprime: f64) -> (f64, f64, f64) {
    if k == 0.0 {
        return (u.sin(), u.cos(), 1.0);
    }
    const LEN: usize = 32;
    let mut a = [0.0; LEN];
    let mut c = [0.0; LEN];
    a[0] = 1.0;
    c[0] = k;
    let mut b = kprime;
    let mut n = 0;
    while c[n].abs() > f64::EPSILON * a[n] && n + 1 < LEN {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }
    let mut phi = 2f64.powi(n as i32) * a[n] * u;
    for j in (1..=n).rev() {
        phi = 0.5 * (phi + (c[j] / a[j] * phi.sin()).asin());
    }
    let sn = phi.sin();
    let cn = phi.cos();
    let dn = (kprime * kprime + k * k * cn * cn).sqrt();
    (sn, cn, dn)
}

/// Jacobi sine `sn(u, lambda)` at complex argument.
pub fn jacobi_sn(u: Complex64, lambda: f64) -> Result<Complex64> {
    EllipticModulus::new(lambda)?.sn(u)
}

/// The Grötzsch ring function `mu(r) = pi K(r') / (2 K(r))`.
pub fn mu_groetzsch(r: f64) -> Result<f64> {
    let m = EllipticModulus::new(r)?;
    Ok(PI * m.k_prime() / (2.0 * m.k()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn k_at_zero_is_half_pi() {
        assert_eq!(complete_k(0.0).unwrap(), FRAC_PI_2);
    }

    #[test]
    fn k_symmetric_point() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let m = EllipticModulus::new(r).unwrap();
        assert!((m.k() - m.k_prime()).abs() < 1e-15);
        // K(1/sqrt 2) = Gamma(1/4)^2 / (4 sqrt(pi))
        assert!((m.k() - 1.854_074_677_301_372).abs() < 1e-14);
    }

    #[test]
    fn k_rejects_out_of_range() {
        assert!(complete_k(1.0).is_err());
        assert!(complete_k(-0.1).is_err());
        assert!(EllipticModulus::new(0.0).is_err());
    }

    #[test]
    fn rf_trivial_values() {
        let one = c(1.0, 0.0);
        assert!((carlson_rf(one, one, one).unwrap() - one).norm() < 1e-15);
        let v = carlson_rf(c(0.0, 0.0), one, one).unwrap();
        assert!((v - c(FRAC_PI_2, 0.0)).norm() < 1e-15);
        let four = c(4.0, 0.0);
        assert!((carlson_rf(four, four, four).unwrap() - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn rf_rejects_branch_and_double_zero() {
        let one = c(1.0, 0.0);
        assert!(carlson_rf(c(-1.0, 0.0), one, one).is_err());
        assert!(carlson_rf(c(0.0, 0.0), c(0.0, 0.0), one).is_err());
    }

    #[test]
    fn f_at_one_is_complete() {
        let r = 0.37;
        let f = incomplete_f(r, c(1.0, 0.0)).unwrap();
        assert!((f.re - complete_k(r).unwrap()).abs() < 1e-14);
        assert_eq!(f.im, 0.0);
        assert_eq!(incomplete_f(r, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn f_rejects_cut() {
        assert!(incomplete_f(0.5, c(1.5, 0.0)).is_err());
        assert!(incomplete_f(0.5, c(-3.0, 0.0)).is_err());
    }

    #[test]
    fn f_symmetries() {
        let r = 0.6;
        for z in [c(0.4, 0.2), c(-1.3, 0.7), c(2.5, 0.01), c(0.1, -3.0)] {
            let f = incomplete_f(r, z).unwrap();
            let fneg = incomplete_f(r, -z).unwrap();
            let fconj = incomplete_f(r, z.conj()).unwrap();
            assert!((f + fneg).norm() < 1e-14 * f.norm());
            assert!((f.conj() - fconj).norm() < 1e-14 * f.norm());
        }
    }

    #[test]
    fn sn_trivial_values() {
        let m = EllipticModulus::new(0.45).unwrap();
        assert_eq!(m.sn(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        let at_k = m.sn(c(m.k(), 0.0)).unwrap();
        assert!((at_k - c(1.0, 0.0)).norm() < 1e-15);
        let phi = 0.7f64;
        let u = m.incomplete_f(c(phi.sin(), 0.0)).unwrap();
        assert!((m.sn(u).unwrap() - c(phi.sin(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn sn_quarter_period_shift() {
        // sn(u + iK') = 1 / (k sn u)
        let m = EllipticModulus::new(0.3).unwrap();
        let u = c(0.4, 0.1);
        let lhs = m.sn(u + c(0.0, m.k_prime())).unwrap();
        let rhs = 1.0 / (m.r() * m.sn(u).unwrap());
        assert!((lhs - rhs).norm() < 1e-12 * rhs.norm());
    }

    #[test]
    fn sn_periodicity() {
        let m = EllipticModulus::new(0.8).unwrap();
        let u = c(0.3, 0.45);
        let base = m.sn(u).unwrap();
        let p1 = m.sn(u + c(4.0 * m.k(), 0.0)).unwrap();
        let p2 = m.sn(u + c(0.0, 2.0 * m.k_prime())).unwrap();
        let half = m.sn(u + c(2.0 * m.k(), 0.0)).unwrap();
        assert!((base - p1).norm() < 1e-13);
        assert!((base - p2).norm() < 1e-13);
        assert!((base + half).norm() < 1e-13);
    }

    #[test]
    fn sn_pole_is_rejected() {
        let m = EllipticModulus::new(0.5).unwrap();
        let pole = c(2.0 * m.k(), m.k_prime());
        assert!(matches!(m.sn(pole), Err(Error::Pole(_))));
        assert!(m.sn(pole + c(1e-6, 0.0)).is_ok());
    }

    #[test]
    fn sn_zero_modulus_limit_is_sine() {
        let (s, cc, d) = sn_cn_dn_real(0.9, 0.0, 1.0);
        assert_eq!((s, cc, d), (0.9f64.sin(), 0.9f64.cos(), 1.0));
    }

    #[test]
    fn mu_values() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((mu_groetzsch(r).unwrap() - FRAC_PI_2).abs() < 1e-14);
        let a = mu_groetzsch(0.3).unwrap();
        let b = mu_groetzsch((1.0f64 - 0.09).sqrt()).unwrap();
        assert!((a * b - PI * PI / 4.0).abs() < 1e-12);
        assert!(mu_groetzsch(1.0).is_err());
    }

    #[test]
    fn prevertex_modulus_keeps_complement_precision() {
        let t = 1.0 + 1e-12;
        let m = EllipticModulus::from_prevertex(t).unwrap();
        assert!((m.rprime() - ((t - 1.0) / t).sqrt()).abs() < 1e-25);
        assert!(EllipticModulus::from_prevertex(1.0).is_err());
    }
}
