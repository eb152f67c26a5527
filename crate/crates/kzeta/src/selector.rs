//! Trigonometric selector kernels on the midpoint grid.
//!
//! For a grid size `J ≥ 1` the angles are `θ_j = (2j+1)π/(2J)`, `j = 0..J−1`.
//! The sin/sin average
//!
//! ```text
//! f_ss(J, k) = (1/J) Σ_j sin(k θ_j) / sin(θ_j)
//! ```
//!
//! is 4J-periodic in `k` and acts as an arithmetic filter:
//!
//! ```text
//! f_ss(J, k) =  0   k even
//!              +1   k odd, 0 < k < 2J      (mod 4J)
//!              −1   k odd, 2J < k < 4J     (mod 4J)
//! ```
//!
//! The cos/cos average obeys the analogous table with an extra factor
//! `(−1)^{(k−1)/2}`; it is only defined on even grids, because an odd grid
//! contains `θ = π/2` where `cos θ = 0`.
//!
//! Sums are evaluated with the phase `k(2j+1)/(2J)` reduced exactly in
//! integer arithmetic before any trigonometric call, so the case table is
//! reproduced to well below 1e−12 even at `J = 64`, and shifting `k` by a
//! multiple of `4J` gives bit-identical values.

use crate::error::{Error, Result};
use crate::sum::CompensatedSum;
use crate::trig::{cos_pi_ratio, sin_pi_ratio};

/// Midpoint angle grid `θ_j = (2j+1)π/(2J)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SelectorGrid {
    size: u32,
    thetas: Vec<f64>,
}

impl SelectorGrid {
    /// Grid size `J`.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// The angles, all strictly inside `(0, π)`.
    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }
}

/// Which selector kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectorKind {
    /// `sin(kθ)/sin(θ)`, any grid size.
    SinSin,
    /// `cos(kθ)/cos(θ)`, even grid sizes only.
    CosCos,
}

/// A selector average together with the indices that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelectorValue {
    pub value: f64,
    pub harmonic: i64,
    pub size: u32,
}

pub fn make_grid(size: u32) -> Result<SelectorGrid> {
    if size == 0 {
        return Err(Error::Domain("grid size must be at least 1".into()));
    }
    let den = 2.0 * size as f64;
    let thetas = (0..size)
        .map(|j| (2 * j + 1) as f64 * std::f64::consts::PI / den)
        .collect();
    Ok(SelectorGrid { size, thetas })
}

fn check_kind(kind: SelectorKind, size: u32) -> Result<()> {
    if size == 0 {
        return Err(Error::Domain("grid size must be at least 1".into()));
    }
    if kind == SelectorKind::CosCos && size % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "cos/cos selector needs an even grid: J = {size} puts cos θ_j = 0 on the grid"
        )));
    }
    Ok(())
}

/// The grid average `(1/J) Σ_j trig(k θ_j)/trig(θ_j)` with compensated
/// summation. `k` may be any integer (negative included).
pub fn selector_average(kind: SelectorKind, size: u32, k: i64) -> Result<f64> {
    check_kind(kind, size)?;
    let den = 2 * size as i128;
    // 4J-periodicity is exact, so reduce the harmonic first; this also keeps
    // every phase numerator small.
    let k_red = (k as i128).rem_euclid(2 * den);
    let mut acc = CompensatedSum::new();
    for j in 0..size as i128 {
        let odd = 2 * j + 1;
        let term = match kind {
            SelectorKind::SinSin => sin_pi_ratio(k_red * odd, den) / sin_pi_ratio(odd, den),
            SelectorKind::CosCos => cos_pi_ratio(k_red * odd, den) / cos_pi_ratio(odd, den),
        };
        acc.add(term);
    }
    Ok(acc.value() / size as f64)
}

/// [`selector_average`] packaged with its indices.
pub fn selector_value(kind: SelectorKind, size: u32, k: i64) -> Result<SelectorValue> {
    Ok(SelectorValue {
        value: selector_average(kind, size, k)?,
        harmonic: k,
        size,
    })
}

/// The exact case-table value in `{−1, 0, +1}`. `k` is reduced modulo `4J`
/// first; the boundary residues `0` and `2J` are even and fall in the zero
/// case, so odd harmonics always land strictly inside a sign window.
pub fn expected_selector(kind: SelectorKind, size: u32, k: i64) -> Result<i8> {
    check_kind(kind, size)?;
    let period = 4 * size as i64;
    let r = k.rem_euclid(period);
    if r % 2 == 0 {
        return Ok(0);
    }
    let window = if r < 2 * size as i64 { 1i8 } else { -1i8 };
    Ok(match kind {
        SelectorKind::SinSin => window,
        SelectorKind::CosCos => {
            let twist = if ((r - 1) / 2) % 2 == 0 { 1 } else { -1 };
            window * twist
        }
    })
}

/// Gram matrix of the DST-II columns: `G[m−1][n−1] = Σ_j sin((2j+1)πm/(2J))
/// sin((2j+1)πn/(2J))` for `m, n ∈ 1..=J`.
///
/// The measured diagonal is `J/2` for `n < J` but `J` at `n = J` (that column
/// samples `sin((2j+1)π/2) = ±1`), and the matrix is reported as measured.
pub fn dst2_gram(size: u32) -> Result<Vec<Vec<f64>>> {
    if size == 0 {
        return Err(Error::Domain("grid size must be at least 1".into()));
    }
    let den = 2 * size as i128;
    let j_max = size as i128;
    let mut gram = vec![vec![0.0; size as usize]; size as usize];
    for m in 1..=j_max {
        for n in 1..=j_max {
            let mut acc = CompensatedSum::new();
            for j in 0..j_max {
                let odd = 2 * j + 1;
                acc.add(sin_pi_ratio(odd * m, den) * sin_pi_ratio(odd * n, den));
            }
            gram[(m - 1) as usize][(n - 1) as usize] = acc.value();
        }
    }
    Ok(gram)
}

/// Selector value for odd `k` rebuilt from the Fourier side.
///
/// `sin(kθ)/sin θ = 1 + 2 Σ_{m=1}^{(k−1)/2} cos(2mθ)` (Dirichlet kernel), so
/// the spectrum sits on the even exponents `q = k−1−2r`. Averaging
/// `e^{iqθ_j}` over the grid kills every exponent except those aliased onto
/// the lattice `q ≡ 0 (mod 2J)`, which survive with weight `(−1)^{q/(2J)}`.
/// Summing the surviving weights reproduces the selector exactly.
pub fn poisson_reconstruction(size: u32, k: i64) -> Result<f64> {
    if size == 0 {
        return Err(Error::Domain("grid size must be at least 1".into()));
    }
    if k < 1 || k % 2 == 0 {
        return Err(Error::Domain(format!(
            "Fourier reconstruction needs odd k >= 1, got {k}"
        )));
    }
    let lattice = 2 * size as i64;
    let mut total: i64 = 0;
    for r in 0..k {
        let q = k - 1 - 2 * r; // even exponent
        if q % lattice == 0 {
            total += if (q / lattice).rem_euclid(2) == 0 { 1 } else { -1 };
        }
    }
    Ok(total as f64)
}
