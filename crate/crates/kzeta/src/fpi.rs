//! Hadamard finite-part integration of power-divergent hyperbolic kernels.
//!
//! For `p ≤ −1` the integral `∫_0^∞ x^p K(x) dx` (K = csch or sech) diverges
//! at the origin. The finite part subtracts the divergent Laurent monomials
//! of `x^p K(x)` on `(0, c]`, adds back their power-rule antiderivatives
//! evaluated at the split point, and integrates the tail normally:
//!
//! ```text
//! FP = ∫_0^c [x^p K(x) − Σ_{α≤−1} c_α x^α] dx
//!      + Σ_{α≤−1} c_α c^{α+1}/(α+1)
//!      + ∫_c^∞ x^p K(x) dx .
//! ```
//!
//! The value is independent of `c` and equals the analytic continuation of
//! the closed Mellin transform to `s = p + 1` whenever no exponent `α = −1`
//! appears in the subtraction, which the kernel parities guarantee: csch
//! expands in odd powers (so `p` must be odd), sech in even powers (`p`
//! even). A mismatched parity would put a logarithm into the finite part and
//! is rejected.
//!
//! [`ac_reference`] provides the independent ground truth: the closed forms
//! `2(1−2^{−s})Γ(s)ζ(s)` and `2Γ(s)β(s)` continued through the removable
//! 0·∞ points at the nonpositive integers by symmetric Richardson
//! extrapolation. [`paper_claim_audit`] computes both sides of every
//! asserted identity in scope and reports matches and mismatches without
//! treating either side as ground truth.

use crate::error::{Error, Result};
use crate::quadrature::{
    self, ck_kernel_integral, integrate_finite, integrate_from, zeta_via_sinh, Integrand,
    RegularizedPowerKernel,
};
use crate::report::{CheckEntry, Provenance, VerificationReport};
use crate::series::{dirichlet_value, gamma, DirichletKind};
use crate::sum::CompensatedSum;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};

pub use crate::quadrature::HyperbolicKernel;

/// Exact integer sequences backing the kernel expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialNumberKind {
    Bernoulli,
    Euler,
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from((n - k) as u64) / BigInt::from((k + 1) as u64);
        row.push(next);
    }
    row
}

fn factorial(n: u32) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

/// Exact `B_0..B_{n_max}` (convention `B_1 = −1/2`) or `E_0..E_{n_max}` via
/// the standard recurrences
///
/// ```text
/// Σ_{k=0}^{n} C(n+1, k) B_k = 0   (n ≥ 1)
/// Σ_{k even ≤ n} C(n, k) E_k = 0  (n ≥ 2 even)
/// ```
pub fn special_numbers(kind: SpecialNumberKind, n_max: u32) -> Result<Vec<BigRational>> {
    if n_max > 60 {
        return Err(Error::Capacity(format!(
            "special number tables capped at index 60, requested {n_max}"
        )));
    }
    let n = n_max as usize;
    match kind {
        SpecialNumberKind::Bernoulli => {
            let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
            b.push(BigRational::one());
            for m in 1..=n {
                let row = binomial_row(m + 1);
                let mut acc = BigRational::zero();
                for (k, bk) in b.iter().enumerate() {
                    acc += BigRational::from_integer(row[k].clone()) * bk;
                }
                b.push(-acc / BigRational::from_integer(BigInt::from(m as u64 + 1)));
            }
            Ok(b)
        }
        SpecialNumberKind::Euler => {
            let mut e = vec![BigRational::zero(); n + 1];
            e[0] = BigRational::one();
            let mut m = 2;
            while m <= n {
                let row = binomial_row(m);
                let mut acc = BigRational::zero();
                let mut k = 0;
                while k < m {
                    acc += BigRational::from_integer(row[k].clone()) * &e[k];
                    k += 2;
                }
                e[m] = -acc;
                m += 2;
            }
            Ok(e)
        }
    }
}

/// Truncated Laurent expansion of `1/sinh x` or `1/cosh x`:
///
/// ```text
/// 1/sinh x = Σ_{n≥0} (2 − 2^{2n}) B_{2n} x^{2n−1}/(2n)! = 1/x − x/6 + 7x³/360 − …
/// 1/cosh x = Σ_{n≥0} E_{2n} x^{2n}/(2n)!              = 1 − x²/2 + 5x⁴/24 − …
/// ```
///
/// Coefficients are generated exactly and stored correctly rounded.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelExpansion {
    pub kernel: HyperbolicKernel,
    pub exponents: Vec<i32>,
    pub coefficients: Vec<f64>,
    /// Highest retained exponent.
    pub order: i32,
}

pub fn kernel_expansion(kernel: HyperbolicKernel, order: i32) -> Result<KernelExpansion> {
    if order > 40 {
        return Err(Error::Capacity(format!(
            "expansion order capped at 40, requested {order}"
        )));
    }
    let min_order = match kernel {
        HyperbolicKernel::Csch => -1,
        HyperbolicKernel::Sech => 0,
    };
    if order < min_order {
        return Err(Error::Domain(format!(
            "expansion order {order} retains no terms of the {kernel:?} series"
        )));
    }
    let mut exponents = Vec::new();
    let mut coefficients = Vec::new();
    match kernel {
        HyperbolicKernel::Csch => {
            let terms = ((order + 1) / 2 + 1) as u32; // exponents 2n−1 ≤ order
            let bern = special_numbers(SpecialNumberKind::Bernoulli, 2 * (terms - 1))?;
            for n in 0..terms {
                let two_n = 2 * n;
                let factor = BigRational::from_integer(
                    BigInt::from(2) - BigInt::from(2).pow(two_n),
                ) / BigRational::from_integer(factorial(two_n));
                let coef = factor * &bern[two_n as usize];
                exponents.push(two_n as i32 - 1);
                coefficients.push(coef.to_f64().expect("coefficient fits in f64"));
            }
        }
        HyperbolicKernel::Sech => {
            let terms = (order / 2 + 1) as u32; // exponents 2n ≤ order
            let euler = special_numbers(SpecialNumberKind::Euler, 2 * (terms - 1))?;
            for n in 0..terms {
                let two_n = 2 * n;
                let coef = &euler[two_n as usize]
                    / BigRational::from_integer(factorial(two_n));
                exponents.push(two_n as i32);
                coefficients.push(coef.to_f64().expect("coefficient fits in f64"));
            }
        }
    }
    Ok(KernelExpansion {
        kernel,
        exponents,
        coefficients,
        order,
    })
}

/// A finite-part value with every piece of its split-point decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct FinitePartResult {
    pub value: f64,
    pub split_point: f64,
    /// The divergent monomials removed on `(0, c]`: `(exponent, coefficient)`.
    pub subtracted_terms: Vec<(i32, f64)>,
    /// `Σ c_α c^{α+1}/(α+1)`: the power-rule finite parts added back.
    pub compensation: f64,
    /// `∫_0^c` of the subtracted integrand.
    pub regular_part: f64,
    /// `∫_c^∞` of the raw integrand.
    pub tail: f64,
}

/// Default subtraction order: keeps the subtracted integrand `O(x²)` at the
/// origin with headroom.
pub fn default_expansion_order(power: i32) -> i32 {
    power.abs() + 6
}

fn first_omitted_exponent(kernel: HyperbolicKernel, order: i32) -> i32 {
    // next exponent of the kernel's parity class strictly above `order`
    let parity = match kernel {
        HyperbolicKernel::Csch => 1, // odd exponents
        HyperbolicKernel::Sech => 0, // even exponents
    };
    let mut e = order + 1;
    if e.rem_euclid(2) != parity {
        e += 1;
    }
    e
}

/// Validate a (kernel, power, order) combination and build the subtracted
/// integrand. The evaluation series below the switch point carries extra
/// terms so its truncation sits under 1e−14 at x = 0.25 regardless of the
/// requested subtraction order.
fn build_regularized(
    kernel: HyperbolicKernel,
    power: i32,
    expansion_order: i32,
) -> Result<RegularizedPowerKernel> {
    if power > -1 {
        return Err(Error::Domain(format!(
            "finite part applies to divergent powers p <= -1, got {power}"
        )));
    }
    let resonant = match kernel {
        HyperbolicKernel::Csch => power.rem_euclid(2) == 0,
        HyperbolicKernel::Sech => power.rem_euclid(2) == 1,
    };
    if resonant {
        return Err(Error::Unsupported(format!(
            "{kernel:?} with power {power} puts the exponent -1 into the subtraction \
             (logarithmic finite part); the parity-admissible cases never do"
        )));
    }
    if power + first_omitted_exponent(kernel, expansion_order) < 2 {
        return Err(Error::Domain(format!(
            "expansion order {expansion_order} too small for power {power}: \
             first omitted integrand exponent must be >= 2"
        )));
    }

    let subtraction_basis = kernel_expansion(kernel, expansion_order)?;
    let subtracted: Vec<(i32, f64)> = subtraction_basis
        .exponents
        .iter()
        .zip(&subtraction_basis.coefficients)
        .map(|(&e, &c)| (power + e, c))
        .filter(|&(a, _)| a <= -1)
        .collect();
    debug_assert!(subtracted.iter().all(|&(a, _)| a != -1));

    let eval_order = expansion_order.max(power.abs() + 16).min(40);
    let eval_basis = kernel_expansion(kernel, eval_order)?;
    let regular: Vec<(i32, f64)> = eval_basis
        .exponents
        .iter()
        .zip(&eval_basis.coefficients)
        .map(|(&e, &c)| (power + e, c))
        .filter(|&(a, _)| a >= 0)
        .collect();

    Ok(RegularizedPowerKernel::new(
        kernel, power, subtracted, regular, 0.25,
    ))
}

/// Hadamard finite part of `∫_0^∞ x^power K(x) dx` at the origin.
pub fn finite_part(
    kernel: HyperbolicKernel,
    power: i32,
    split_point: f64,
    expansion_order: i32,
) -> Result<FinitePartResult> {
    if !(split_point > 0.0 && split_point.is_finite()) {
        return Err(Error::Domain(format!(
            "split point must be positive and finite, got {split_point}"
        )));
    }
    let rk = build_regularized(kernel, power, expansion_order)?;
    let subtracted = rk.subtracted.clone();
    let regular_part = integrate_finite(&|x| rk.eval(x), 0.0, split_point, 1e-12)?.value;

    let mut comp = CompensatedSum::new();
    for &(a, c) in &subtracted {
        comp.add(c * split_point.powi(a + 1) / (a + 1) as f64);
    }
    let compensation = comp.value();

    let tail = integrate_from(&|x| x.powi(power) * kernel.eval(x), split_point, 1e-12)?.value;

    let mut total = CompensatedSum::new();
    total.add(regular_part);
    total.add(compensation);
    total.add(tail);
    Ok(FinitePartResult {
        value: total.value(),
        split_point,
        subtracted_terms: subtracted,
        compensation,
        regular_part,
        tail,
    })
}

/// The globally subtracted integrand `x^p K(x) − Σ_{α≤−1} c_α x^α` packaged
/// as a quadrature [`Integrand`].
///
/// Because every subtracted monomial has exponent `α ≤ −2`, its antiderivative
/// `x^{α+1}/(α+1)` vanishes at infinity, and splitting `∫_0^∞` at any `c`
/// shows the ordinary (convergent) integral of this integrand equals the
/// finite part. It is the one-shot cross-route for [`finite_part`].
pub fn regularized_integrand(
    kernel: HyperbolicKernel,
    power: i32,
    expansion_order: i32,
) -> Result<Integrand> {
    Ok(Integrand::PowerKernelRegularized(build_regularized(
        kernel,
        power,
        expansion_order,
    )?))
}

fn mellin_closed(kernel: HyperbolicKernel, s: f64) -> Result<f64> {
    Ok(match kernel {
        HyperbolicKernel::Csch => {
            2.0 * (1.0 - (-s).exp2()) * gamma(s) * dirichlet_value(DirichletKind::Zeta, s)?
        }
        HyperbolicKernel::Sech => 2.0 * gamma(s) * dirichlet_value(DirichletKind::Beta, s)?,
    })
}

/// Analytic continuation of the closed Mellin transform `M(s)`
/// (`2(1−2^{−s})Γ(s)ζ(s)` for csch, `2Γ(s)β(s)` for sech).
///
/// At the nonpositive integers `Γ` has poles; where the accompanying zeta or
/// beta zero cancels them the limit is recovered by Richardson extrapolation
/// of the symmetric averages `(M(s+ε)+M(s−ε))/2` over `ε ∈ {1e−3, 5e−4,
/// 2.5e−4}`. A surviving pole is detected through the antisymmetric part and
/// reported as an error.
pub fn ac_reference(kernel: HyperbolicKernel, s: f64) -> Result<f64> {
    let near = s.round();
    if near <= 0.0 && (s - near).abs() <= 1e-6 {
        let sample = |offset: f64| -> Result<f64> { mellin_closed(kernel, near + offset) };
        let eps = [1e-3, 5e-4, 2.5e-4];
        let mut avg = [0.0; 3];
        let mut dif = [0.0; 3];
        for (i, &e) in eps.iter().enumerate() {
            let hi = sample(e)?;
            let lo = sample(-e)?;
            avg[i] = 0.5 * (hi + lo);
            dif[i] = 0.5 * (hi - lo);
        }
        // A simple pole leaves a residue/ε term in the antisymmetric part,
        // which grows as ε shrinks; a removable point shrinks with ε.
        if dif[2].abs() > 50.0 * avg[2].abs().max(1.0) && dif[2].abs() > dif[1].abs() {
            return Err(Error::Pole {
                argument: near,
                context: format!("{kernel:?} Mellin transform keeps a pole at s = {near}"),
            });
        }
        let r1 = (4.0 * avg[1] - avg[0]) / 3.0;
        let r1b = (4.0 * avg[2] - avg[1]) / 3.0;
        Ok((16.0 * r1b - r1) / 15.0)
    } else {
        mellin_closed(kernel, s)
    }
}

fn audit_entry(
    name: &str,
    expected: f64,
    computed: Result<f64>,
    note: String,
) -> CheckEntry {
    match computed {
        Ok(v) => {
            let ratio = if expected != 0.0 { v / expected } else { f64::NAN };
            CheckEntry::evaluate(
                name,
                expected,
                v,
                1e-8,
                Provenance::Paper,
                format!("{note}; ratio computed/asserted = {ratio:.9e}"),
            )
        }
        Err(e) => CheckEntry::evaluate(
            name,
            expected,
            0.0,
            1e-8,
            Provenance::Paper,
            format!("{note}; computation failed: {e}"),
        ),
    }
}

/// Compute both sides of every asserted identity in scope and report the
/// agreement or the measured discrepancy. Entries are informational: the
/// mismatching constants are findings, not failures, and never gate a run.
pub fn paper_claim_audit() -> VerificationReport {
    let mut report = VerificationReport::new("audit", 1e-8);

    let z2 = dirichlet_value(DirichletKind::Zeta, 2.0).unwrap();
    let z3 = dirichlet_value(DirichletKind::Zeta, 3.0).unwrap();
    let z5 = dirichlet_value(DirichletKind::Zeta, 5.0).unwrap();
    let b2 = dirichlet_value(DirichletKind::Beta, 2.0).unwrap();
    let b4 = dirichlet_value(DirichletKind::Beta, 4.0).unwrap();

    let fp = |kernel, power: i32| -> Result<f64> {
        Ok(finite_part(kernel, power, 1.0, default_expansion_order(power))?.value)
    };

    report.entries.push(audit_entry(
        "zeta3_fpi",
        z3,
        fp(HyperbolicKernel::Csch, -3).map(|v| -0.5 * v),
        "asserted: zeta(3) = -(1/2) FPI x^-3/sinh x".into(),
    ));
    report.entries.push(audit_entry(
        "zeta5_fpi",
        z5,
        fp(HyperbolicKernel::Csch, -5).map(|v| v / 24.0),
        "asserted: zeta(5) = (1/4!) FPI x^-5/sinh x".into(),
    ));
    report.entries.push(audit_entry(
        "beta2_fpi",
        b2,
        fp(HyperbolicKernel::Sech, -2),
        "asserted: beta(2) = FPI x^-2/cosh x".into(),
    ));
    report.entries.push(audit_entry(
        "beta4_fpi",
        b4,
        fp(HyperbolicKernel::Sech, -4).map(|v| -v / 6.0),
        "asserted: beta(4) = -(1/3!) FPI x^-4/cosh x".into(),
    ));
    report.entries.push(audit_entry(
        "ck_formula_n1",
        z3,
        ck_kernel_integral(1).map(|v| -0.5 * v),
        "asserted: zeta(3) = -(1/2!) int t^2/sinh(pi t)".into(),
    ));
    report.entries.push(audit_entry(
        "ck_formula_n2",
        z5,
        ck_kernel_integral(2).map(|v| v / 24.0),
        "asserted: zeta(5) = (1/4!) int t^4/sinh(pi t)".into(),
    ));
    report.entries.push(audit_entry(
        "xi2_limit",
        std::f64::consts::PI.powi(2) / 6.0,
        Ok(0.75 * z2),
        "asserted large-block limit of xi_2 is zeta(2); the odd-integer sum forces (1-2^-2) zeta(2)"
            .into(),
    ));
    report.entries.push(audit_entry(
        "mellin_s3",
        z3,
        zeta_via_sinh(3.0),
        "asserted: zeta(3) = (2/7) int x^2/sinh x".into(),
    ));
    report.entries.push(audit_entry(
        "mellin_s5",
        z5,
        zeta_via_sinh(5.0),
        "asserted: zeta(5) = (2/93) int x^4/sinh x".into(),
    ));
    report.entries.push(audit_entry(
        "beta_cosh_s2",
        b2,
        quadrature::beta_via_cosh(2.0),
        "asserted: beta(2) = (1/2) int x/cosh x".into(),
    ));
    report.entries.push(audit_entry(
        "beta_cosh_s4",
        b4,
        quadrature::beta_via_cosh(4.0),
        "asserted: beta(4) = (1/12) int x^3/cosh x".into(),
    ));

    report.sort_entries();
    report
}
