//! Vertex energy by numerical quadrature of the Coulson-type integral
//!
//!   E_G(v) = (1/pi) integral over R of 1 - i x phi(G-v; ix) / phi(G; ix) dx,
//!
//! an independent route used to cross-check the spectral one. The integrand
//! is assembled from exact integer polynomials and evaluated by complex
//! Horner; the change of variable x = tan(theta) compactifies the line, and
//! even symmetry halves the work.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::charpoly::char_poly;
use crate::graph::Graph;
use crate::poly::{coeffs_fit_f64, IntPolynomial};

#[derive(Debug, Error, PartialEq)]
pub enum CoulsonError {
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),
    #[error("quadrature did not converge within depth {max_depth}")]
    NonConvergence { max_depth: u32 },
    #[error("integrand imaginary residual {magnitude:e} at x = {x} exceeds 1e-9")]
    ImaginaryResidual { x: f64, magnitude: f64 },
    #[error("polynomial coefficients exceed double-precision range")]
    CoefficientOverflow,
}

/// Adaptive-quadrature settings. The transform is fixed: x = tan(theta)
/// maps the real line onto (-pi/2, pi/2).
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { rel_tol: 1e-8, max_depth: 40 }
    }
}

const IMAGINARY_TOL: f64 = 1e-9;

/// The integrand 1 - i x phi(G-v; ix)/phi(G; ix), prepared for stable
/// evaluation on both ends of the line.
struct Integrand {
    /// Shared power of x stripped from both polynomials plus the explicit
    /// factor: i x phi'/phi = (ix)^gap psi'(ix)/psi(ix) with psi(0) != 0.
    zero_gap: u32,
    stripped_num: Vec<f64>,
    stripped_den: Vec<f64>,
    /// For |x| > 1 the same ratio in w = 1/(ix): 1 - P'(w)/P(w) collapses to
    /// w * Q(w) / P(w) where Q is (P - P') shifted down one power. P and P'
    /// are the coefficient-reversed polynomials; the subtraction is exact in
    /// the integers, so no cancellation survives to floating point.
    diff_shifted: Vec<f64>,
    reversed_den: Vec<f64>,
}

fn to_f64_coeffs(p: &IntPolynomial) -> Result<Vec<f64>, CoulsonError> {
    if !coeffs_fit_f64(p) {
        return Err(CoulsonError::CoefficientOverflow);
    }
    Ok(p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect())
}

impl Integrand {
    fn build(phi: &IntPolynomial, phi_minus: &IntPolynomial) -> Result<Integrand, CoulsonError> {
        let n = phi.degree().expect("charpoly of a nonempty graph");
        debug_assert_eq!(phi_minus.degree(), Some(n - 1));

        let den_zeros = phi.trailing_zero_count().expect("charpoly is nonzero");
        let num_zeros = phi_minus.trailing_zero_count().expect("charpoly is nonzero");
        // Eigenvalue interlacing keeps the zero multiplicity of G - v within
        // one of G's, so the x factor always clears the shared zero.
        assert!(
            num_zeros + 1 >= den_zeros,
            "zero eigenvalue multiplicity dropped by more than one"
        );
        let zero_gap = (num_zeros + 1 - den_zeros) as u32;

        let phi_coeffs = to_f64_coeffs(phi)?;
        let minus_coeffs = to_f64_coeffs(phi_minus)?;
        let stripped_den = phi_coeffs[den_zeros..].to_vec();
        let stripped_num = minus_coeffs[num_zeros..].to_vec();

        // Reversed coefficients: index k holds the coefficient of x^(n-k).
        let reversed_den: Vec<f64> = (0..=n).map(|k| phi.coeff(n - k)).map(|c| c.to_f64().unwrap()).collect();
        let diff_shifted: Vec<f64> = (1..=n)
            .map(|k| {
                let a = phi.coeff(n - k);
                let b = if k < n { phi_minus.coeff(n - 1 - k) } else { 0.into() };
                (a - b).to_f64().unwrap_or(f64::NAN)
            })
            .collect();

        Ok(Integrand { zero_gap, stripped_num, stripped_den, diff_shifted, reversed_den })
    }

    /// Re(1 - i x phi(G-v; ix)/phi(G; ix)), erroring if the imaginary part
    /// survives beyond tolerance.
    fn eval(&self, x: f64) -> Result<f64, CoulsonError> {
        let f = if x.abs() <= 1.0 {
            let z = Complex64::new(0.0, x);
            let ratio = z.powu(self.zero_gap) * horner(&self.stripped_num, z) / horner(&self.stripped_den, z);
            Complex64::new(1.0, 0.0) - ratio
        } else {
            let w = Complex64::new(0.0, -1.0 / x);
            w * horner(&self.diff_shifted, w) / horner(&self.reversed_den, w)
        };
        if f.im.abs() > IMAGINARY_TOL {
            return Err(CoulsonError::ImaginaryResidual { x, magnitude: f.im.abs() });
        }
        Ok(f.re)
    }

    /// Integrand after the tangent substitution, with the Jacobian 1 + x^2.
    fn eval_transformed(&self, theta: f64) -> Result<f64, CoulsonError> {
        let x = theta.tan();
        Ok(self.eval(x)? * (1.0 + x * x))
    }
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Energy of vertex `i` through the Coulson-type integral.
pub fn coulson_vertex_energy(g: &Graph, i: usize, cfg: &QuadratureConfig) -> Result<f64, CoulsonError> {
    if cfg.rel_tol.is_nan() || cfg.rel_tol <= 0.0 {
        return Err(CoulsonError::InvalidConfig("rel_tol must be positive".into()));
    }
    if cfg.max_depth < 1 {
        return Err(CoulsonError::InvalidConfig("max_depth must be at least 1".into()));
    }
    assert!(i < g.order(), "vertex out of range");

    let phi = char_poly(g);
    let phi_minus = char_poly(&g.delete_vertices(&[i]).expect("index checked").graph);
    let integrand = Integrand::build(&phi, &phi_minus)?;

    // Even symmetry: integrate theta over (0, pi/2) and double.
    let half = integrate_adaptive(&integrand, cfg)?;
    Ok(2.0 / PI * half)
}

/// The raw (untransformed) integrand value at a real point; exposed for
/// symmetry and decay diagnostics.
pub fn coulson_integrand(g: &Graph, i: usize, x: f64) -> Result<f64, CoulsonError> {
    assert!(i < g.order(), "vertex out of range");
    let phi = char_poly(g);
    let phi_minus = char_poly(&g.delete_vertices(&[i]).expect("index checked").graph);
    Integrand::build(&phi, &phi_minus)?.eval(x)
}

fn integrate_adaptive(f: &Integrand, cfg: &QuadratureConfig) -> Result<f64, CoulsonError> {
    let (a, b) = (0.0, FRAC_PI_2);
    let m = 0.5 * (a + b);
    let fa = f.eval_transformed(a)?;
    let fm = f.eval_transformed(m)?;
    let fb = f.eval_transformed(b)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let tol = cfg.rel_tol * whole.abs().max(1.0);
    simpson_step(f, a, fa, m, fm, b, fb, whole, tol, cfg.max_depth)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &Integrand,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64, CoulsonError> {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f.eval_transformed(lm)?;
    let frm = f.eval_transformed(rm)?;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let refined = left + right;
    let disagreement = refined - whole;
    if disagreement.abs() <= 15.0 * tol {
        return Ok(refined + disagreement / 15.0);
    }
    if depth == 0 {
        return Err(CoulsonError::NonConvergence { max_depth: 0 });
    }
    let lhs = simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1);
    let rhs = simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => Ok(l + r),
        (Err(CoulsonError::NonConvergence { .. }), _) | (_, Err(CoulsonError::NonConvergence { .. })) => {
            Err(CoulsonError::NonConvergence { max_depth: depth })
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}
