//! Quadrature rules for complex-valued integrands along straight segments.
//!
//! Gauss-Jacobi rules absorb algebraic endpoint singularities; an adaptive
//! Gauss-Kronrod (7/15) scheme handles the smooth remainder.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Gauss-Jacobi rule for the weight `(1 - x)^a (1 + x)^b` on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussJacobi {
    a: f64,
    b: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussJacobi {
    /// Builds the `n`-point rule (Golub-Welsch, then one Newton sweep on the
    /// three-term recurrence to polish nodes and Christoffel weights).
    pub fn new(n: usize, a: f64, b: f64) -> Self {
        assert!(n >= 1, "Gauss-Jacobi rule needs at least one node");
        assert!(a > -1.0 && b > -1.0, "Jacobi exponents must exceed -1");

        let diag: Vec<f64> = (0..n).map(|k| recurrence_diag(k, a, b)).collect();
        // off[k] couples p_k and p_{k+1}; one extra entry for the Newton step
        let off: Vec<f64> = (1..=n).map(|k| recurrence_offdiag(k, a, b)).collect();

        let mut jacobi = DMatrix::<f64>::zeros(n, n);
        for k in 0..n {
            jacobi[(k, k)] = diag[k];
            if k + 1 < n {
                jacobi[(k, k + 1)] = off[k];
                jacobi[(k + 1, k)] = off[k];
            }
        }
        let mut nodes: Vec<f64> = SymmetricEigen::new(jacobi)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        nodes.sort_by(|x, y| x.total_cmp(y));

        let ln_mu0 =
            (a + b + 1.0) * std::f64::consts::LN_2 + libm::lgamma(a + 1.0) + libm::lgamma(b + 1.0)
                - libm::lgamma(a + b + 2.0);
        let p0 = (-0.5 * ln_mu0).exp();

        let mut weights = Vec::with_capacity(n);
        for x in nodes.iter_mut() {
            for _ in 0..2 {
                let (pn, dpn, _) = orthonormal_eval(*x, n, p0, &diag, &off);
                if dpn != 0.0 {
                    let step = pn / dpn;
                    if step.abs() < 1e-6 {
                        *x -= step;
                    }
                }
            }
            let (_, _, sum_sq) = orthonormal_eval(*x, n, p0, &diag, &off);
            weights.push(sum_sq.recip());
        }
        Self {
            a,
            b,
            nodes,
            weights,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn exponents(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `sum_i w_i f(x_i)`, i.e. `int_{-1}^{1} (1-x)^a (1+x)^b f(x) dx`.
    pub fn apply<F>(&self, mut f: F) -> Result<Complex64>
    where
        F: FnMut(f64) -> Result<Complex64>,
    {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(x)?;
        }
        Ok(acc)
    }
}

fn recurrence_diag(k: usize, a: f64, b: f64) -> f64 {
    if k == 0 {
        return (b - a) / (a + b + 2.0);
    }
    let s = 2.0 * k as f64 + a + b;
    (b * b - a * a) / (s * (s + 2.0))
}

fn recurrence_offdiag(k: usize, a: f64, b: f64) -> f64 {
    let kf = k as f64;
    let s = 2.0 * kf + a + b;
    let beta = if k == 1 {
        4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b).powi(2) * (3.0 + a + b))
    } else {
        4.0 * kf * (kf + a) * (kf + b) * (kf + a + b) / (s * s * (s + 1.0) * (s - 1.0))
    };
    beta.sqrt()
}

/// Returns `(p_n(x), p_n'(x), sum_{k<n} p_k(x)^2)` for the orthonormal family.
fn orthonormal_eval(x: f64, n: usize, p0: f64, diag: &[f64], off: &[f64]) -> (f64, f64, f64) {
    let (mut prev, mut cur) = (0.0, p0);
    let (mut dprev, mut dcur) = (0.0, 0.0);
    let mut sum_sq = 0.0;
    for k in 0..n {
        sum_sq += cur * cur;
        let back = if k == 0 { 0.0 } else { off[k - 1] };
        let next = ((x - diag[k]) * cur - back * prev) / off[k];
        let dnext = (cur + (x - diag[k]) * dcur - back * dprev) / off[k];
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
    }
    (cur, dcur, sum_sq)
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// One 15-point Kronrod evaluation on `[lo, hi]` in the segment parameter.
fn kronrod15<F>(f: &mut F, a: Complex64, b: Complex64, lo: f64, hi: f64) -> Result<(Complex64, f64)>
where
    F: FnMut(Complex64) -> Result<Complex64>,
{
    let dir = b - a;
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let at = |s: f64| a + dir * s;

    let fc = f(at(center))?;
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let fsum = f(at(center - dx))? + f(at(center + dx))?;
        kron += fsum * WGK[j];
        if j % 2 == 1 {
            gauss += fsum * WG[j / 2];
        }
    }
    let scale = dir * half;
    let kron = kron * scale;
    let gauss = gauss * scale;
    Ok((kron, (kron - gauss).norm()))
}

/// Adaptive Gauss-Kronrod integral of `f` along the straight segment `a -> b`.
///
/// Stops once the summed error estimate drops below
/// `max(abs_tol, rel_tol * |I|)`.
pub fn integrate_segment<F>(
    mut f: F,
    a: Complex64,
    b: Complex64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<Complex64>
where
    F: FnMut(Complex64) -> Result<Complex64>,
{
    const MAX_INTERVALS: usize = 4000;
    if a == b {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let (v, e) = kronrod15(&mut f, a, b, 0.0, 1.0)?;
    let mut pieces = vec![(0.0, 1.0, v, e)];
    loop {
        let total: Complex64 = pieces.iter().map(|p| p.2).sum();
        let err: f64 = pieces.iter().map(|p| p.3).sum();
        if err <= abs_tol.max(rel_tol * total.norm()) {
            return Ok(total);
        }
        if pieces.len() >= MAX_INTERVALS {
            return Err(Error::Quadrature(format!(
                "adaptive rule on {a} -> {b} stalled at error {err:e}"
            )));
        }
        let worst = pieces
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let (lo, hi, _, _) = pieces.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Err(Error::Quadrature(format!(
                "adaptive rule on {a} -> {b} cannot bisect further"
            )));
        }
        let (v1, e1) = kronrod15(&mut f, a, b, lo, mid)?;
        let (v2, e2) = kronrod15(&mut f, a, b, mid, hi)?;
        pieces.push((lo, mid, v1, e1));
        pieces.push((mid, hi, v2, e2));
    }
}
