use thiserror::Error;

/// Errors raised by mask construction, the criteria and the oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("root #{index} equals 1; P(z) cannot be normalized to P(1) = 1")]
    RootAtOne { index: usize },

    #[error("root #{index} is too close to 1 (|1 - z| = {distance:e}); normalization is ill-conditioned")]
    IllConditioned { index: usize, distance: f64 },

    #[error("root #{index} is not real")]
    NonRealRoot { index: usize },

    #[error("no root at z = -1")]
    MissingMinusOne,

    #[error("expected {expected} roots, found {found}")]
    WrongRootCount { expected: usize, found: usize },

    #[error("input value #{index} is not finite")]
    NonFinite { index: usize },

    #[error("mask has no coefficients")]
    EmptyMask,

    #[error("leading coefficient of the mask polynomial is zero")]
    ZeroLeadingCoefficient,

    #[error("mask is not normalized: P(1) = {re} + {im}i")]
    NotNormalized { re: f64, im: f64 },

    #[error("root recovery failed: residual {residual:e} exceeds bound {bound:e}")]
    RootRecovery { residual: f64, bound: f64 },

    #[error("odd-frequency residue {magnitude:e} in T; autocorrelation is inconsistent")]
    OddResidue { magnitude: f64 },

    #[error("grid of {grid} points is below the minimum {minimum}")]
    GridTooSmall { grid: usize, minimum: usize },

    #[error("truncation depth must be at least 1")]
    ZeroDepth,
}

pub type Result<T> = core::result::Result<T, Error>;
