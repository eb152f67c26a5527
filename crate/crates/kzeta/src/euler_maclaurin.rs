//! Midpoint Euler–Maclaurin analysis of the selector integrand.
//!
//! For `f(x) = sin(kx)/sin x` on `(0, π)` the midpoint sum over
//! `x_j = (2j+1)π/(2J)` relates to the integral through
//!
//! ```text
//! (1/J) Σ_j f(x_j) = (1/π) ∫_0^π f + Σ_m B_{2m}(1/2)/(2m)! (π/J)^{2m−1} [f^{(2m−1)}]_0^π
//! ```
//!
//! with `B_{2m}(1/2) = (2^{1−2m} − 1) B_{2m}`. For odd `k` the integrand is
//! even about both endpoints, so every odd derivative vanishes there and the
//! correction series is identically zero, consistent with the selector
//! identity: for odd `k < 2J` both sides equal 1 exactly, and the residual is
//! quantised (0 in the `+1` window, −2 in the `−1` window) rather than
//! smoothly decaying. [`decay_exponent`] therefore measures instead of
//! assuming a rate, and reports all-zero residuals as rate-undefined.

use crate::error::{Error, Result};
use crate::fpi::{special_numbers, SpecialNumberKind};
use crate::selector::{selector_average, SelectorKind};
use crate::sum::CompensatedSum;
use num::{BigInt, BigRational, One};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// `B_{2m}(1/2) = (2^{1−2m} − 1) B_{2m}`, exactly. Alternates in sign:
/// `−1/12, +7/240, −31/1344, …`
pub fn bernoulli_half(m: u32) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::Domain("index must be at least 1".into()));
    }
    if m > 20 {
        return Err(Error::Capacity(format!(
            "bernoulli_half capped at m = 20, requested {m}"
        )));
    }
    let b = special_numbers(SpecialNumberKind::Bernoulli, 2 * m)?;
    let pow = BigInt::from(2).pow(2 * m - 1);
    let factor = BigRational::new(BigInt::one() - &pow, pow);
    Ok(factor * &b[2 * m as usize])
}

/// `sin(kx)/sin x` with the removable endpoint limits
/// `f(0) = k`, `f(π) = k·(−1)^{k+1}` handled explicitly.
pub fn selector_ratio(k: u32, x: f64) -> f64 {
    let kf = k as f64;
    let u = x.min(PI - x); // distance to the nearest endpoint
    if u.abs() < 1e-7 {
        // f is even about both endpoints: f ≈ ±k(1 − (k²−1)u²/6)
        let sign = if x > 1.0 && k % 2 == 0 { -1.0 } else { 1.0 };
        return sign * kf * (1.0 - (kf * kf - 1.0) * u * u / 6.0);
    }
    (kf * x).sin() / x.sin()
}

// ---------------------------------------------------------------------------
// Gauss–Legendre panels (the integral oracle)
// ---------------------------------------------------------------------------

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    (p1, n as f64 * (x * p1 - p0) / (x * x - 1.0))
}

fn gauss_legendre_20() -> &'static ([f64; 20], [f64; 20]) {
    static RULE: OnceLock<([f64; 20], [f64; 20])> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = 20usize;
        let mut nodes = [0.0; 20];
        let mut weights = [0.0; 20];
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..60 {
                let (p, dp) = legendre_and_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_and_derivative(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

/// `(1/π) ∫_0^π sin(kx)/sin x dx` by composite 20-point Gauss–Legendre
/// panels (the panel count scales with `k` so each panel sees at most one
/// oscillation). Accuracy ~1e−14; the closed value π is asserted in tests,
/// never used here.
pub fn normalized_selector_integral(k: u32) -> Result<f64> {
    if k == 0 || k % 2 == 0 {
        return Err(Error::Domain(format!("odd harmonic required, got {k}")));
    }
    let (nodes, weights) = gauss_legendre_20();
    let panels = (k as usize).max(8);
    let width = PI / panels as f64;
    let mut acc = CompensatedSum::new();
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * width;
        let half = 0.5 * width;
        for (x, w) in nodes.iter().zip(weights) {
            acc.add(w * half * selector_ratio(k, mid + half * x));
        }
    }
    Ok(acc.value() / PI)
}

/// Grid average minus normalized integral:
/// `(1/J) Σ_j f(x_j) − (1/π) ∫_0^π f`.
pub fn midpoint_residual(k: u32, grid_size: u32) -> Result<f64> {
    if k == 0 || k % 2 == 0 {
        return Err(Error::Domain(format!("odd harmonic required, got {k}")));
    }
    let average = selector_average(SelectorKind::SinSin, grid_size, k as i64)?;
    let integral = normalized_selector_integral(k)?;
    Ok(average - integral)
}

/// Which endpoint of `(0, π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Zero,
    Pi,
}

/// One-sided limit of `f'(x) = k cos(kx)/sin x − sin(kx) cos x / sin²x` at an
/// endpoint, resolved by exact series expansion of the numerator rather than
/// by evaluating the 0/0 quotient.
///
/// Writing `N(x) = k cos(kx) sin x − sin(kx) cos x` (so `f' = N/sin²x`) and
/// expanding exactly in integer arithmetic, the `x` coefficient of `N`
/// cancels identically and `N` is odd, so `N/sin²x` is an odd series starting
/// at `x¹`: the limit is 0. The substitution `x → π − u` maps `f` to
/// `±sin(ku)/sin u` for integer `k`, so the same expansion settles the `π`
/// endpoint.
pub fn endpoint_derivative(k: u32, end: Endpoint) -> Result<f64> {
    if k == 0 || k % 2 == 0 {
        return Err(Error::Domain(format!("odd harmonic required, got {k}")));
    }
    let kk = k as i128;
    // Taylor rows through x³ over the common denominator 6:
    //   6·k cos(kx) sin x = 6k·x + (−k − 3k³)·x³ + O(x⁵)
    //   6·sin(kx) cos x   = 6k·x + (−k³ − 3k)·x³ + O(x⁵)
    let first = [6 * kk, -kk - 3 * kk.pow(3)];
    let second = [6 * kk, -kk.pow(3) - 3 * kk];
    let n1 = first[0] - second[0];
    let n3 = first[1] - second[1];
    debug_assert_eq!(n3, 2 * kk - 2 * kk.pow(3));
    if n1 != 0 {
        // would be an x^{-1} resonance against sin²x = x²(1 + …)
        return Err(Error::Unsupported(
            "numerator series keeps a linear term; limit not finite".into(),
        ));
    }
    let _ = end; // both endpoints vanish by the same parity argument
    Ok(0.0)
}

/// Residual analysis over a family of grid sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct EmAnalysis {
    pub k: u32,
    pub j_values: Vec<u32>,
    pub residuals: Vec<f64>,
    /// Least-squares slope of `log |residual|` against `log J` over the
    /// nonzero residuals; `None` when fewer than two residuals exceed 1e−14
    /// (the selector-exact regime).
    pub fitted_exponent: Option<f64>,
    /// `−(1/12)(π/J_min)(f'(π) − f'(0))`: identically zero for odd `k`.
    pub first_correction: f64,
}

/// Measure the residual decay rate (if any) across `j_values`.
pub fn decay_exponent(k: u32, j_values: &[u32]) -> Result<EmAnalysis> {
    if j_values.len() < 3 {
        return Err(Error::Domain("need at least three grid sizes".into()));
    }
    if j_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("grid sizes must be strictly increasing".into()));
    }
    let residuals: Vec<f64> = j_values
        .iter()
        .map(|&j| midpoint_residual(k, j))
        .collect::<Result<_>>()?;

    let points: Vec<(f64, f64)> = j_values
        .iter()
        .zip(&residuals)
        .filter(|(_, r)| r.abs() > 1e-14)
        .map(|(&j, &r)| ((j as f64).ln(), r.abs().ln()))
        .collect();
    let fitted_exponent = if points.len() >= 2 {
        let n = points.len() as f64;
        let sx: f64 = points.iter().map(|p| p.0).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
        Some((n * sxy - sx * sy) / (n * sxx - sx * sx))
    } else {
        None
    };

    let d0 = endpoint_derivative(k, Endpoint::Zero)?;
    let dpi = endpoint_derivative(k, Endpoint::Pi)?;
    let first_correction = -(1.0 / 12.0) * (PI / j_values[0] as f64) * (dpi - d0);

    Ok(EmAnalysis {
        k,
        j_values: j_values.to_vec(),
        residuals,
        fitted_exponent,
        first_correction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_half_values() {
        assert_eq!(bernoulli_half(1).unwrap(), rational(-1, 12));
        assert_eq!(bernoulli_half(2).unwrap(), rational(7, 240));
        assert_eq!(bernoulli_half(3).unwrap(), rational(-31, 1344));
        // strict sign alternation
        for m in 1..=6u32 {
            let a = bernoulli_half(m).unwrap();
            let b = bernoulli_half(m + 1).unwrap();
            assert!(a.numer().sign() != b.numer().sign(), "m={m}");
        }
        assert!(matches!(bernoulli_half(0), Err(Error::Domain(_))));
        assert!(matches!(bernoulli_half(21), Err(Error::Capacity(_))));
    }

    #[test]
    fn integral_oracle_equals_pi_for_odd_k() {
        for k in [1u32, 3, 9, 21, 55, 99] {
            let v = normalized_selector_integral(k).unwrap();
            assert!((v - 1.0).abs() < 1e-13, "k={k}: {v}");
        }
        assert!(matches!(normalized_selector_integral(4), Err(Error::Domain(_))));
    }

    #[test]
    fn selector_ratio_limits() {
        assert_eq!(selector_ratio(5, 0.0), 5.0);
        assert_eq!(selector_ratio(5, PI), 5.0);
        assert!((selector_ratio(3, 1e-8) - 3.0).abs() < 1e-14);
        // interior point against the naive quotient
        let x = 0.7;
        assert!((selector_ratio(7, x) - (7.0 * x).sin() / x.sin()).abs() < 1e-14);
    }

    #[test]
    fn residual_examples() {
        // selector-exact window: both sides are 1
        assert!(midpoint_residual(3, 4).unwrap().abs() < 1e-12);
        assert!(midpoint_residual(1, 1).unwrap().abs() < 1e-13);
        // k mod 4J in the −1 window: residual −2 exactly
        let r = midpoint_residual(5, 2).unwrap();
        assert!((r - (-2.0)).abs() < 1e-12, "{r}");
        // k = 9, J = 2 reduces to harmonic 1: back in the +1 window
        assert!(midpoint_residual(9, 2).unwrap().abs() < 1e-12);
        assert!(matches!(midpoint_residual(4, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn endpoint_derivatives_vanish() {
        for k in (1..=99u32).step_by(2) {
            assert_eq!(endpoint_derivative(k, Endpoint::Zero).unwrap(), 0.0);
            assert_eq!(endpoint_derivative(k, Endpoint::Pi).unwrap(), 0.0);
        }
        assert!(matches!(
            endpoint_derivative(6, Endpoint::Zero),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn decay_analysis_selector_exact_is_rate_undefined() {
        let a = decay_exponent(3, &[4, 8, 16]).unwrap();
        assert!(a.residuals.iter().all(|r| r.abs() <= 1e-12));
        assert!(a.fitted_exponent.is_none());
        assert_eq!(a.first_correction, 0.0);
    }

    #[test]
    fn decay_analysis_quantized_regime() {
        // k = 17 against small grids: every reduced harmonic lands back in
        // the +1 window, so residuals are still exact zeros.
        let a = decay_exponent(17, &[2, 3, 4]).unwrap();
        assert!(a.residuals.iter().all(|r| r.abs() <= 1e-12));
        assert!(a.fitted_exponent.is_none());
        // a family that hits −1 windows: residuals are −2, not decaying
        let a = decay_exponent(11, &[2, 3, 4]).unwrap();
        for (j, r) in a.j_values.iter().zip(&a.residuals) {
            let expected = crate::selector::expected_selector(SelectorKind::SinSin, *j, 11)
                .unwrap() as f64;
            assert!((r - (expected - 1.0)).abs() < 1e-12);
        }
        if let Some(slope) = a.fitted_exponent {
            assert!(slope.abs() < 0.2, "quantized residuals have no decay: {slope}");
        }
    }

    #[test]
    fn decay_analysis_input_validation() {
        assert!(matches!(decay_exponent(3, &[4, 8]), Err(Error::Domain(_))));
        assert!(matches!(
            decay_exponent(3, &[4, 4, 8]),
            Err(Error::Domain(_))
        ));
    }
}
