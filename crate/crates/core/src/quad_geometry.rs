//! Vertex-level geometry of convex quadrilaterals and of four points on
//! the unit circle.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::elliptic::EllipticModulus;
use crate::error::{Error, Result};

/// Four ordered vertices `z1, z2, z3, z4` of a bounded convex polygon.
///
/// The unbounded complement is the domain of interest, so the vertices are
/// listed clockwise: walking `z1 -> z2 -> z3 -> z4` keeps the exterior on
/// the left.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quadrilateral {
    vertices: [Complex64; 4],
}

impl Quadrilateral {
    /// Wraps the vertices without checking them; see [`Quadrilateral::validate`].
    pub fn new(vertices: [Complex64; 4]) -> Self {
        Self { vertices }
    }

    /// Builds and validates in one step.
    pub fn try_new(vertices: [Complex64; 4]) -> Result<Self> {
        Self::new(vertices).validate()
    }

    pub fn vertices(&self) -> &[Complex64; 4] {
        &self.vertices
    }

    /// Vertex `k` for `k` in `0..4` (zero-based, so `vertex(0)` is `z1`).
    pub fn vertex(&self, k: usize) -> Complex64 {
        self.vertices[k % 4]
    }

    /// Applies `z -> a z + b` to every vertex.
    pub fn similarity(&self, a: Complex64, b: Complex64) -> Self {
        Self {
            vertices: self.vertices.map(|z| a * z + b),
        }
    }

    /// The same polygon traversed in the opposite direction.
    pub fn reversed(&self) -> Self {
        let [a, b, c, d] = self.vertices;
        Self {
            vertices: [d, c, b, a],
        }
    }

    /// Twice the signed area (shoelace); negative for clockwise order.
    pub fn signed_double_area(&self) -> f64 {
        (0..4)
            .map(|k| {
                let (p, q) = (self.vertex(k), self.vertex(k + 1));
                p.re * q.im - q.re * p.im
            })
            .sum()
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in i + 1..4 {
                d = d.max((self.vertices[i] - self.vertices[j]).norm());
            }
        }
        d
    }

    /// Returns the quadrilateral unchanged if it is strictly convex and
    /// clockwise.
    pub fn validate(self) -> Result<Self> {
        if self
            .vertices
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::DegeneratePolygon("vertex is not finite".into()));
        }
        let mut turns = [0.0; 4];
        for (k, turn) in turns.iter_mut().enumerate() {
            let e1 = self.vertex(k + 1) - self.vertex(k);
            let e2 = self.vertex(k + 2) - self.vertex(k + 1);
            let cross = e1.re * e2.im - e1.im * e2.re;
            if e1.norm() == 0.0 || e2.norm() == 0.0 || cross.abs() <= 1e-12 * e1.norm() * e2.norm()
            {
                return Err(Error::DegeneratePolygon(format!(
                    "vertices {}, {}, {} are collinear",
                    k + 1,
                    (k + 1) % 4 + 1,
                    (k + 2) % 4 + 1
                )));
            }
            *turn = cross;
        }
        let all_right = turns.iter().all(|&c| c < 0.0);
        let all_left = turns.iter().all(|&c| c > 0.0);
        if all_left {
            return Err(Error::Orientation);
        }
        if !all_right {
            return Err(Error::DegeneratePolygon("polygon is not convex".into()));
        }
        Ok(self)
    }

    /// Interior angle `theta_k` of the bounded polygon at each vertex.
    pub fn interior_angles(&self) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (k, theta) in out.iter_mut().enumerate() {
            let prev = self.vertex(k + 3) - self.vertex(k);
            let next = self.vertex(k + 1) - self.vertex(k);
            let cross = prev.re * next.im - prev.im * next.re;
            let dot = prev.re * next.re + prev.im * next.im;
            *theta = cross.abs().atan2(dot);
        }
        out
    }
}

/// Angle parameters of the exterior domain: its angle at `z_k` is
/// `pi (1 + alpha_k)`, so `alpha_k = 1 - theta_k / pi` for the polygon's
/// interior angle `theta_k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExteriorAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl ExteriorAngles {
    /// Checks the range and the sum rule `alpha + beta + gamma + delta = 2`.
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<Self> {
        let a = Self {
            alpha,
            beta,
            gamma,
            delta,
        };
        if a.as_array().iter().any(|&x| !(x > 0.0 && x < 1.0)) {
            return Err(Error::Domain(format!(
                "angle parameters must lie in (0,1): {a:?}"
            )));
        }
        if (a.as_array().iter().sum::<f64>() - 2.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "angle parameters must sum to 2: {a:?}"
            )));
        }
        Ok(a)
    }

    /// Builds from the first three parameters, with `delta = 2 - alpha - beta - gamma`.
    pub fn from_three(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        Self::new(alpha, beta, gamma, 2.0 - alpha - beta - gamma)
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }
}

/// Angle parameters of a validated quadrilateral.
pub fn exterior_angles(q: &Quadrilateral) -> Result<ExteriorAngles> {
    let q = q.validate()?;
    let theta = q.interior_angles();
    let [a, b, c, d] = theta.map(|th| 1.0 - th / PI);
    ExteriorAngles::new(a, b, c, d)
}

/// Conformal modulus of the unit disk with four marked boundary points,
/// `h = (2/pi) mu(1/sqrt(k))` with the cross-ratio
/// `k = |p1-p3||p2-p4| / (|p1-p2||p3-p4|)`.
///
/// The points must be distinct and in cyclic order around the circle. Both
/// directions are accepted because `k` only depends on distances, so the
/// same value serves the disk and its exterior.
pub fn cross_ratio_modulus(p: [Complex64; 4]) -> Result<f64> {
    if p.iter().any(|z| (z.norm() - 1.0).abs() > 1e-9) {
        return Err(Error::Domain(
            "cross-ratio points must lie on the unit circle".into(),
        ));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if (p[i] - p[j]).norm() < 1e-14 {
                return Err(Error::Domain(format!(
                    "points {} and {} coincide",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let winding = |sign: f64| -> f64 {
        (0..4)
            .map(|i| (sign * (p[(i + 1) % 4].arg() - p[i].arg())).rem_euclid(TAU))
            .sum()
    };
    let cyclic = (winding(1.0) - TAU).abs() < 1e-9 || (winding(-1.0) - TAU).abs() < 1e-9;
    if !cyclic {
        return Err(Error::Domain("points are not in cyclic order".into()));
    }

    let d = |i: usize, j: usize| (p[i] - p[j]).norm();
    let k = d(0, 2) * d(1, 3) / (d(0, 1) * d(2, 3));
    if !(k > 1.0) {
        return Err(Error::Domain(format!("cross-ratio k = {k} must exceed 1")));
    }
    // r = 1/sqrt(k) and r' = sqrt((k-1)/k); (2/pi) mu(r) = K'(r)/K(r)
    let m = EllipticModulus::from_prevertex(k)?;
    Ok(m.k_prime() / m.k())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn square() -> Quadrilateral {
        Quadrilateral::new([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0), c(1.0, 1.0)])
    }

    #[test]
    fn accepts_clockwise_convex() {
        assert!(square().validate().is_ok());
        let row1 = Quadrilateral::new([c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 2.0), c(7.0, 5.0)]);
        assert!(row1.validate().is_ok());
    }

    #[test]
    fn rejects_collinear() {
        let q = Quadrilateral::new([c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.0, 1.0)]);
        assert!(matches!(q.validate(), Err(Error::DegeneratePolygon(_))));
    }

    #[test]
    fn rejects_counterclockwise() {
        assert_eq!(square().reversed().validate(), Err(Error::Orientation));
    }

    #[test]
    fn rejects_reflex_vertex() {
        let q = Quadrilateral::new([c(1.0, 0.0), c(0.0, 0.0), c(0.4, 0.4), c(0.0, 1.0)]);
        assert!(q.validate().is_err());
    }

    #[test]
    fn square_angles() {
        let a = exterior_angles(&square()).unwrap();
        for x in a.as_array() {
            assert!((x - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn symmetric_points_give_unit_modulus() {
        let p = [45.0f64, 135.0, 225.0, 315.0].map(|d| Complex64::from_polar(1.0, d.to_radians()));
        assert!((cross_ratio_modulus(p).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn cross_ratio_errors() {
        let mut p =
            [30.0f64, 150.0, 210.0, 330.0].map(|d| Complex64::from_polar(1.0, d.to_radians()));
        p[1] = p[0];
        assert!(cross_ratio_modulus(p).is_err());
        let shuffled =
            [10.0f64, 200.0, 100.0, 300.0].map(|d| Complex64::from_polar(1.0, d.to_radians()));
        assert!(cross_ratio_modulus(shuffled).is_err());
    }

    #[test]
    fn conjugate_reciprocity() {
        let p = [30.0f64, 150.0, 210.0, 330.0].map(|d| Complex64::from_polar(1.0, d.to_radians()));
        let h = cross_ratio_modulus(p).unwrap();
        let h2 = cross_ratio_modulus([p[1], p[2], p[3], p[0]]).unwrap();
        assert!((h * h2 - 1.0).abs() < 1e-12);
    }
}
