//! Arithmetic backends for the closed-form criteria.
//!
//! Every criterion is generic over [`Scalar`]. Two backends are provided:
//! `f64`, which decides with an absolute tolerance, and [`Rational`], which
//! decides with zero tolerance. Boundary instances (B-spline masks, roots at
//! zero) sit exactly on `Δ²ᵏρ = 0` or `1 - A₁A₂ = 0`, and only the exact
//! backend classifies them without a tolerance band.

use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Arbitrary precision rational number.
pub type Rational = Ratio<BigInt>;

/// Absolute tolerance on criterion margins in floating-point mode.
pub const FLOAT_DECISION_TOL: f64 = 1e-9;

/// Tolerance used to recognise special roots (`-1`, real axis) in
/// floating-point mode.
pub const FLOAT_ROOT_TOL: f64 = 1e-8;

/// Field elements the criteria can be evaluated over.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive {
    /// `true` when arithmetic is exact and decisions use zero tolerance.
    const EXACT: bool;

    /// Absolute tolerance applied to criterion margins.
    fn decision_tol() -> Self;

    /// Tolerance for classifying a root as `-1`, or as real.
    fn root_tol() -> Self;

    fn to_f64(&self) -> f64;

    /// Converts an `f64`; `None` for NaN or infinities.
    fn from_f64(value: f64) -> Option<Self>;

    /// The exact value of `self`.
    fn to_rational(&self) -> Rational;

    /// Nearest representable value.
    fn from_rational(value: &Rational) -> Self;

    fn from_count(value: usize) -> Self {
        <Self as FromPrimitive>::from_usize(value).expect("usize fits every scalar")
    }

    /// `|value| <= tol·(1 + |scale|)`.
    fn is_negligible(value: &Self, scale: &Self) -> bool {
        value.abs() <= Self::root_tol() * (Self::one() + scale.abs())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn decision_tol() -> Self {
        FLOAT_DECISION_TOL
    }

    fn root_tol() -> Self {
        FLOAT_ROOT_TOL
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_f64(value: f64) -> Option<Self> {
        value.is_finite().then_some(value)
    }

    fn to_rational(&self) -> Rational {
        Rational::from_float(*self).expect("finite value")
    }

    fn from_rational(value: &Rational) -> Self {
        Scalar::to_f64(value)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn decision_tol() -> Self {
        Rational::from_integer(BigInt::from(0))
    }

    fn root_tol() -> Self {
        Rational::from_integer(BigInt::from(0))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // numerator or denominator beyond f64 range: scale both down
            let (n, d) = (self.numer(), self.denom());
            let shift = n.bits().max(d.bits()).saturating_sub(1000);
            let n = ToPrimitive::to_f64(&(n >> shift)).unwrap_or(f64::NAN);
            let d = ToPrimitive::to_f64(&(d >> shift)).unwrap_or(f64::NAN);
            n / d
        })
    }

    fn from_f64(value: f64) -> Option<Self> {
        Rational::from_float(value)
    }

    fn to_rational(&self) -> Rational {
        self.clone()
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }
}

/// Runs `f` in exact arithmetic on the exact values of `input` and rounds
/// the results back once.
pub fn exactly<T: Scalar>(input: &[T], f: impl FnOnce(&[Rational]) -> Vec<Rational>) -> Vec<T> {
    let lifted: Vec<Rational> = input.iter().map(Scalar::to_rational).collect();
    f(&lifted).iter().map(T::from_rational).collect()
}

/// Binomial coefficient `C(n, k)` in the scalar field; zero when `k > n`.
pub fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_count(n - i) / T::from_count(i + 1);
    }
    acc
}
