//! Half-period-exact trigonometric helpers.
//!
//! `sin(πx)` and `cos(πx)` are evaluated after splitting off the nearest
//! integer of `x` exactly, so integer phases come out as exact zeros and
//! near-integer arguments keep full relative accuracy. The `_ratio` variants
//! take the phase as an integer fraction `num/den` and reduce it in integer
//! arithmetic first; grid sums built on them lose nothing to argument
//! reduction even when the raw angle `k·θ_j` is hundreds of radians.

use std::f64::consts::PI;

/// sin(π x), exact at integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Reduce `num/den` modulo 2 and split off the nearest integer, returning
/// `(parity_is_odd, remainder_num)` with `|remainder_num| <= den/2` and the
/// identity `num/den ≡ parity + remainder_num/den (mod 2)`.
fn reduce_ratio(num: i128, den: i128) -> (bool, i128) {
    debug_assert!(den > 0);
    let m = num.rem_euclid(2 * den); // phase in [0, 2den)
    let n = (2 * m + den) / (2 * den); // nearest integer of m/den
    (n % 2 != 0, m - n * den)
}

/// sin(π num/den) with the phase reduced exactly in integer arithmetic.
pub(crate) fn sin_pi_ratio(num: i128, den: i128) -> f64 {
    let (odd, r) = reduce_ratio(num, den);
    let s = (PI * (r as f64 / den as f64)).sin();
    if odd {
        -s
    } else {
        s
    }
}

/// cos(π num/den) with the phase reduced exactly in integer arithmetic.
pub(crate) fn cos_pi_ratio(num: i128, den: i128) -> f64 {
    let (odd, r) = reduce_ratio(num, den);
    if 2 * r.abs() == den {
        return 0.0;
    }
    let c = (PI * (r as f64 / den as f64)).cos();
    if odd {
        -c
    } else {
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_zeros_and_ones() {
        assert_eq!(sin_pi(0.0), 0.0);
        assert_eq!(sin_pi(1.0), 0.0);
        assert_eq!(sin_pi(-3.0), 0.0);
        assert_eq!(sin_pi(0.5), 1.0);
        assert_eq!(sin_pi(2.5), 1.0);
        assert_eq!(sin_pi(1.5), -1.0);
        assert_eq!(cos_pi_ratio(1, 2), 0.0);
        assert_eq!(cos_pi_ratio(-3, 2), 0.0);
        assert_eq!(cos_pi_ratio(1, 1), -1.0);
        assert_eq!(cos_pi_ratio(2, 1), 1.0);
    }

    #[test]
    fn ratio_matches_direct_small_phase() {
        for den in [2i128, 3, 7, 16, 128] {
            for num in -40..=40i128 {
                let direct = (PI * num as f64 / den as f64).sin();
                let exact = sin_pi_ratio(num, den);
                assert!(
                    (direct - exact).abs() < 1e-13,
                    "num={num} den={den}: {direct} vs {exact}"
                );
                let directc = (PI * num as f64 / den as f64).cos();
                let exactc = cos_pi_ratio(num, den);
                assert!((directc - exactc).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn ratio_periodicity_is_exact() {
        for k in 0..50i128 {
            assert_eq!(sin_pi_ratio(k, 7), sin_pi_ratio(k + 14, 7));
            assert_eq!(cos_pi_ratio(k, 9), cos_pi_ratio(k + 18, 9));
        }
    }

    #[test]
    fn near_integer_relative_accuracy() {
        // sin(π(1 − 1/1024)) = sin(π/1024); both routes must agree to ~1 ulp.
        let a = sin_pi_ratio(1023, 1024);
        let b = (PI / 1024.0).sin();
        assert!(((a - b) / b).abs() < 1e-15);
    }
}
