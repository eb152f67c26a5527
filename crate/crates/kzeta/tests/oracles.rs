#![allow(clippy::excessive_precision)] // frozen 17-digit reference decimals

//! Independent oracles for every frozen expected value.
//!
//! Each oracle here re-derives a quantity by a route disjoint from the
//! implementation it checks: naive trigonometric summation against the
//! exact-phase selector sums, Euler–Maclaurin Hurwitz tails against the
//! accelerated Dirichlet values, series division in exact rationals against
//! the Bernoulli/Euler-number expansions, and summation-by-parts partial sums
//! against the Mellin-integral Clausen evaluator.

use kzeta::fpi::{self, HyperbolicKernel, SpecialNumberKind};
use kzeta::quadrature::{self, Integrand};
use kzeta::selector::{self, SelectorKind};
use kzeta::series::{self, DirichletKind, XiVariant};
use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use std::f64::consts::PI;

// ---------------------------------------------------------------------------
// Hurwitz-zeta oracle (direct summation + Euler–Maclaurin tail)
// ---------------------------------------------------------------------------

/// ζ(s, a) for s > 1, a > 0 by direct summation with tail correction.
fn hurwitz_oracle(s: f64, a: f64) -> f64 {
    let n = 20_000u64;
    let mut head = 0.0f64;
    // backward summation keeps the small terms from drowning
    for k in (0..n).rev() {
        head += (k as f64 + a).powf(-s);
    }
    let x = n as f64 + a;
    let tail = x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s) + s / 12.0 * x.powf(-s - 1.0)
        - s * (s + 1.0) * (s + 2.0) / 720.0 * x.powf(-s - 3.0);
    head + tail
}

fn zeta_oracle(s: f64) -> f64 {
    hurwitz_oracle(s, 1.0)
}

fn beta_oracle(s: f64) -> f64 {
    4.0f64.powf(-s) * (hurwitz_oracle(s, 0.25) - hurwitz_oracle(s, 0.75))
}

#[test]
fn hurwitz_oracle_selfcheck() {
    // the oracle must stand on classical closed forms before it judges anything
    assert!((zeta_oracle(2.0) - PI * PI / 6.0).abs() < 1e-13);
    assert!((zeta_oracle(4.0) - PI.powi(4) / 90.0).abs() < 1e-13);
    assert!((beta_oracle(3.0) - PI.powi(3) / 32.0).abs() < 1e-13);
}

#[test]
fn dirichlet_values_match_summation_oracle() {
    for s in [1.5, 2.0, 3.0, 5.0, 8.0] {
        let accelerated = series::dirichlet_value(DirichletKind::Zeta, s).unwrap();
        assert!(
            (accelerated - zeta_oracle(s)).abs() < 1e-13,
            "zeta({s}): {accelerated} vs {}",
            zeta_oracle(s)
        );
    }
    for s in [1.5, 2.0, 3.0, 4.0] {
        let accelerated = series::dirichlet_value(DirichletKind::Beta, s).unwrap();
        assert!(
            (accelerated - beta_oracle(s)).abs() < 1e-13,
            "beta({s}): {accelerated} vs {}",
            beta_oracle(s)
        );
    }
    // the frozen decimals
    assert!((zeta_oracle(3.0) - 1.202_056_903_159_594_3).abs() < 1e-14);
    assert!((beta_oracle(2.0) - series::CATALAN).abs() < 1e-14);
}

// ---------------------------------------------------------------------------
// Selector sums: naive trigonometric oracle
// ---------------------------------------------------------------------------

fn naive_average(kind: SelectorKind, size: u32, k: i64) -> f64 {
    let mut total = 0.0;
    for j in 0..size {
        let theta = (2 * j + 1) as f64 * PI / (2.0 * size as f64);
        total += match kind {
            SelectorKind::SinSin => (k as f64 * theta).sin() / theta.sin(),
            SelectorKind::CosCos => (k as f64 * theta).cos() / theta.cos(),
        };
    }
    total / size as f64
}

#[test]
fn selector_average_matches_naive_oracle() {
    for size in [1u32, 2, 3, 5, 8, 12, 24] {
        for k in 0..4 * size as i64 {
            let exact = selector::selector_average(SelectorKind::SinSin, size, k).unwrap();
            let naive = naive_average(SelectorKind::SinSin, size, k);
            assert!(
                (exact - naive).abs() < 1e-11,
                "ss J={size} k={k}: {exact} vs {naive}"
            );
            if size % 2 == 0 {
                let exact = selector::selector_average(SelectorKind::CosCos, size, k).unwrap();
                let naive = naive_average(SelectorKind::CosCos, size, k);
                assert!((exact - naive).abs() < 1e-11, "cc J={size} k={k}");
            }
        }
    }
}

#[test]
fn dst_gram_matches_naive_oracle() {
    for size in [2u32, 4, 8, 16] {
        let gram = selector::dst2_gram(size).unwrap();
        for m in 1..=size as usize {
            for n in 1..=size as usize {
                let mut naive = 0.0;
                for j in 0..size as usize {
                    let phase = (2 * j + 1) as f64 * PI / (2.0 * size as f64);
                    naive += (phase * m as f64).sin() * (phase * n as f64).sin();
                }
                assert!(
                    (gram[m - 1][n - 1] - naive).abs() < 1e-11,
                    "J={size} m={m} n={n}"
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Block sums: brute-force paired summation
// ---------------------------------------------------------------------------

fn xi_brute(s: f64, block: u32, alternating: bool) -> f64 {
    let b = block as u64;
    let mut total = 0.0f64;
    // pair outer terms (m even + m odd) so the partial sums are monotone
    for m in (0..400_000u64).step_by(2) {
        let mut pair = 0.0;
        for (mm, outer_sign) in [(m, 1.0), (m + 1, -1.0)] {
            let mut blk = 0.0;
            for j in 0..b {
                let n = (2 * b * mm + 2 * j + 1) as f64;
                let t = n.powf(-s);
                blk += if alternating && j % 2 == 1 { -t } else { t };
            }
            pair += outer_sign * blk;
        }
        total += pair;
    }
    total
}

#[test]
fn xi_matches_brute_force() {
    for (s, j) in [(3.0, 2u32), (3.0, 4), (2.0, 4)] {
        let accelerated = series::xi(s, j, XiVariant::Plain).unwrap().value;
        let brute = xi_brute(s, j, false);
        // the brute tail is O((2 J M)^{-s}); at M = 4e5 that is ~1e-12 for s = 2
        assert!(
            (accelerated - brute).abs() < 5e-12,
            "xi({s},{j}): {accelerated} vs {brute}"
        );
    }
}

#[test]
fn paper_checkpoint_decimals() {
    // frozen decimals verified against the independent closed forms
    let c34 = series::xi_checkpoint(3.0, 4).unwrap();
    assert!((c34 - 1.045_485_761_359_007_8).abs() < 2e-16);
    let c38 = series::xi_checkpoint(3.0, 8).unwrap();
    assert!((c38 - 1.050_200_567_258_320_0).abs() < 2e-16);
    let c32 = series::xi_checkpoint(3.0, 2).unwrap();
    assert!((c32 - 1.027_722_585_936_858_6).abs() < 2e-16);
}

// ---------------------------------------------------------------------------
// Clausen: summation-by-parts partial-sum oracle
// ---------------------------------------------------------------------------

/// Σ_{k≥1} sin(kθ)/k^s by direct summation to N with the leading
/// by-parts tail correction Im[z^N N^{-s}/(1−z)].
fn clausen_oracle(s: f64, theta: f64) -> f64 {
    let n = 3_000_000u64;
    let mut total = 0.0f64;
    for k in (1..n).rev() {
        total += (k as f64 * theta).sin() * (k as f64).powf(-s);
    }
    // z^N f(N)/(1-z) with z = e^{iθ}
    let (zn_re, zn_im) = ((n as f64 * theta).cos(), (n as f64 * theta).sin());
    let (d_re, d_im) = (1.0 - theta.cos(), -theta.sin());
    let denom = d_re * d_re + d_im * d_im;
    let corr_im = (zn_im * d_re - zn_re * d_im) / denom * (n as f64).powf(-s);
    total + corr_im
}

#[test]
fn clausen_matches_partial_sum_oracle() {
    for (s, theta) in [(2.0, PI / 2.0), (2.0, 1.0), (3.0, 2.5), (2.5, 0.7)] {
        let integral_route = series::clausen_sl(s, theta).unwrap().value;
        let sum_route = clausen_oracle(s, theta);
        assert!(
            (integral_route - sum_route).abs() < 1e-11,
            "Sl_{s}({theta}): {integral_route} vs {sum_route}"
        );
    }
}

// ---------------------------------------------------------------------------
// Kernel expansions: series-division oracle in exact rationals
// ---------------------------------------------------------------------------

fn factorial_big(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Coefficients of the reciprocal of Σ_n a_n x^{2n} with a_0 = 1.
fn reciprocal_series(a: &[BigRational], terms: usize) -> Vec<BigRational> {
    let mut c = vec![BigRational::zero(); terms];
    c[0] = BigRational::one();
    for n in 1..terms {
        let mut acc = BigRational::zero();
        for j in 1..=n {
            if j < a.len() {
                acc += &a[j] * &c[n - j];
            }
        }
        c[n] = -acc;
    }
    c
}

#[test]
fn kernel_expansions_match_series_division() {
    let terms = 12usize;
    // sinh x / x = Σ x^{2n}/(2n+1)!
    let sinh_over_x: Vec<BigRational> = (0..terms)
        .map(|n| BigRational::new(BigInt::one(), factorial_big(2 * n as u64 + 1)))
        .collect();
    let csch_coeffs = reciprocal_series(&sinh_over_x, terms); // x/sinh x
    let expansion = fpi::kernel_expansion(HyperbolicKernel::Csch, 21).unwrap();
    for (i, &e) in expansion.exponents.iter().enumerate() {
        assert_eq!(e, 2 * i as i32 - 1);
        let oracle = csch_coeffs[i].to_f64().unwrap();
        assert_eq!(
            expansion.coefficients[i], oracle,
            "csch coefficient at exponent {e}"
        );
    }

    // cosh x = Σ x^{2n}/(2n)!
    let cosh: Vec<BigRational> = (0..terms)
        .map(|n| BigRational::new(BigInt::one(), factorial_big(2 * n as u64)))
        .collect();
    let sech_coeffs = reciprocal_series(&cosh, terms);
    let expansion = fpi::kernel_expansion(HyperbolicKernel::Sech, 20).unwrap();
    for (i, &e) in expansion.exponents.iter().enumerate() {
        assert_eq!(e, 2 * i as i32);
        let oracle = sech_coeffs[i].to_f64().unwrap();
        assert_eq!(
            expansion.coefficients[i], oracle,
            "sech coefficient at exponent {e}"
        );
    }
}

#[test]
fn euler_numbers_match_reciprocal_cosh() {
    // E_{2n} = (2n)! * [x^{2n}] (1/cosh x)
    let terms = 10usize;
    let cosh: Vec<BigRational> = (0..terms)
        .map(|n| BigRational::new(BigInt::one(), factorial_big(2 * n as u64)))
        .collect();
    let sech = reciprocal_series(&cosh, terms);
    let euler = fpi::special_numbers(SpecialNumberKind::Euler, 2 * (terms as u32 - 1)).unwrap();
    for n in 0..terms {
        let expected = &sech[n] * BigRational::from_integer(factorial_big(2 * n as u64));
        assert_eq!(euler[2 * n], expected, "E_{}", 2 * n);
    }
}

// ---------------------------------------------------------------------------
// Finite part: one-shot globally-subtracted route
// ---------------------------------------------------------------------------

#[test]
fn finite_part_matches_one_shot_integral() {
    for (kernel, power) in [
        (HyperbolicKernel::Csch, -3),
        (HyperbolicKernel::Sech, -2),
        (HyperbolicKernel::Csch, -5),
        (HyperbolicKernel::Sech, -4),
    ] {
        let order = fpi::default_expansion_order(power);
        let split = fpi::finite_part(kernel, power, 1.0, order).unwrap().value;
        let integrand = fpi::regularized_integrand(kernel, power, order).unwrap();
        let one_shot = quadrature::integrate_semi_infinite(&integrand, 1e-9)
            .unwrap()
            .value;
        assert!(
            (split - one_shot).abs() < 1e-8,
            "{kernel:?} p={power}: split {split} vs one-shot {one_shot}"
        );
    }
}

// ---------------------------------------------------------------------------
// Quadrature spot values against the summation oracle
// ---------------------------------------------------------------------------

#[test]
fn mellin_values_against_summation_oracle() {
    let q = quadrature::zeta_via_sinh(3.0).unwrap();
    assert!((q - zeta_oracle(3.0)).abs() < 1e-11);
    let q = quadrature::beta_via_cosh(2.0).unwrap();
    assert!((q - beta_oracle(2.0)).abs() < 1e-11);
    // frozen integral decimals
    let i1 = quadrature::ck_kernel_integral(1).unwrap();
    let want = 2.0 * (1.0 - 0.125) * 2.0 * zeta_oracle(3.0) / PI.powi(3);
    assert!((i1 - want).abs() < 1e-12, "{i1} vs {want}");
    let i2 = quadrature::ck_kernel_integral(2).unwrap();
    let want = 2.0 * (1.0 - 0.03125) * 24.0 * zeta_oracle(5.0) / PI.powi(5);
    assert!((i2 - want).abs() < 1e-12, "{i2} vs {want}");
    let csch3 = quadrature::integrate_semi_infinite(&Integrand::CschMellin { s: 3.0 }, 1e-12)
        .unwrap()
        .value;
    assert!((csch3 - 3.5 * zeta_oracle(3.0)).abs() < 1e-11);
}
