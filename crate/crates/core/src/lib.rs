//! Root-based criteria for the sub-QMF inequality
//! `|m₀(ξ)|² + |m₀(ξ + 1/2)|² ≤ 1` of a refinement mask, the condition a
//! mask must meet before the unitary extension principle yields a tight
//! wavelet frame with two generators.
//!
//! The mask is described by the roots `z₁…zₙ` of its associated algebraic
//! polynomial `P(z) = ∏ (z - zᵢ)/(1 - zᵢ)`. The crate provides
//!
//! * exact criteria for degrees 2 and 3 ([`criteria`]),
//! * the sufficient conditions for real roots of any degree: all roots
//!   nonpositive, or nonnegative even differences `Δ²ᵏρ_{n-2k}` of the
//!   symmetric means of `aᵢ = F₁(zᵢ, 0)` ([`criteria`], [`symmetric`]),
//! * an independent oracle that builds `T(φ) = |P(z)|² + |P(-z)|²` from
//!   the coefficients and certifies its maximum ([`trig`]),
//! * the truncated product `φ̂(ξ) = ∏ m₀(ξ/2ʲ)` and the Mallat
//!   preconditions ([`cascade`]).
//!
//! Criteria are generic over [`Scalar`]: `f64` decides with tolerance
//! `1e-9`, [`Rational`] decides exactly.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cascade;
pub mod criteria;
mod error;
pub mod mask;
pub mod roots;
pub mod scalar;
pub mod symmetric;
pub mod trig;
mod verdict;

pub use error::{Error, Result};
pub use mask::{evaluate_mask, factor_coefficients, polynomial_from_roots, FactorCoefficients, MaskCoefficients, RootSet};
pub use scalar::{Rational, Scalar};
pub use verdict::{Method, Status, Verdict, Witness};
