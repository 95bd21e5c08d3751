//! Truncated infinite product `φ̂(ξ) ≈ ∏_{j=1}^{J} m₀(ξ/2ʲ)` and the Mallat
//! preconditions for it to define a refinement function in `L₂(ℝ)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::mask::{evaluate_mask, MaskCoefficients};
use crate::trig::sub_qmf_check;
use crate::verdict::Verdict;

pub const DEFAULT_DEPTH: usize = 24;
pub const DEFAULT_GRID: usize = 1024;
pub const DEFAULT_RANGE: (f64, f64) = (-8.0, 8.0);

/// Samples of the truncated product on a frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiHatSamples {
    pub xi: Vec<f64>,
    pub values: Vec<Complex<f64>>,
    pub depth: usize,
    /// `C = 2π·Σ|k·cₖ|`: `|m₀(ξ) - 1| ≤ C·|ξ|`, so raising the depth from
    /// `J` to `J + 1` moves a sample by at most `|φ̂_J(ξ)|·C·|ξ|·2^{-J-1}`.
    pub lipschitz: f64,
}

/// `count` equispaced points from `lo` to `hi` inclusive; a single point
/// when `count == 1` or the range is degenerate.
pub fn uniform_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count <= 1 || lo == hi {
        return alloc::vec![lo];
    }
    let step = (hi - lo) / (count - 1) as f64;
    (0..count).map(|i| if i + 1 == count { hi } else { lo + step * i as f64 }).collect()
}

/// `2π·Σ|k·cₖ|` over the exponents of `m₀`, including the offset shift.
pub fn mask_lipschitz(mask: &MaskCoefficients<f64>) -> f64 {
    let shift = (-mask.offset()).max(0) as f64;
    2.0 * PI
        * mask
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (k as f64 + shift) * c.norm())
            .sum::<f64>()
}

/// `∏_{j=1}^{J} m₀(ξ/2ʲ)` at every grid point.
///
/// Requires `P(1) = 1` (within tolerance) and `J ≥ 1`.
pub fn phi_hat(mask: &MaskCoefficients<f64>, xi: &[f64], depth: usize) -> Result<PhiHatSamples> {
    if depth == 0 {
        return Err(Error::ZeroDepth);
    }
    if !mask.is_normalized() {
        let p1 = mask.value_at_one();
        return Err(Error::NotNormalized { re: p1.re, im: p1.im });
    }
    let values = xi
        .iter()
        .map(|&x| {
            let mut acc = Complex::new(1.0, 0.0);
            let mut scaled = x;
            for _ in 0..depth {
                scaled *= 0.5;
                acc *= evaluate_mask(mask, scaled);
            }
            acc
        })
        .collect();
    Ok(PhiHatSamples { xi: xi.to_vec(), values, depth, lipschitz: mask_lipschitz(mask) })
}

/// The three hypotheses under which the infinite product is the Fourier
/// transform of an `L₂` refinement function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MallatReport {
    /// `m₀(0) = P(1) = 1`.
    pub normalized: bool,
    /// `cₖ = O(|k|^{-2-ε})`; always true for a trigonometric polynomial.
    pub coefficient_decay: bool,
    pub sub_qmf: Verdict,
}

impl MallatReport {
    pub fn passes(&self) -> bool {
        self.normalized && self.coefficient_decay && self.sub_qmf.holds()
    }
}

pub fn mallat_preconditions(mask: &MaskCoefficients<f64>, tol: f64) -> Result<MallatReport> {
    Ok(MallatReport {
        normalized: mask.is_normalized(),
        coefficient_decay: true,
        sub_qmf: sub_qmf_check(mask, tol)?,
    })
}
