//! Masks described by their roots or by the coefficients of the associated
//! algebraic polynomial `P`, normalized so that `P(1) = 1`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Multiset of roots of `P`. Multiplicity is expressed by repetition.
///
/// No root equals 1. In floating-point mode roots numerically
/// indistinguishable from 1 are rejected as ill-conditioned.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet<T> {
    roots: Vec<Complex<T>>,
}

impl<T: Scalar> RootSet<T> {
    pub fn new(roots: Vec<Complex<T>>) -> Result<Self> {
        let one = T::one();
        let mut log_product = 0.0f64;
        for (index, z) in roots.iter().enumerate() {
            let (re, im) = (z.re.to_f64(), z.im.to_f64());
            if !re.is_finite() || !im.is_finite() {
                return Err(Error::NonFinite { index });
            }
            if z.re == one && z.im.is_zero() {
                return Err(Error::RootAtOne { index });
            }
            if !T::EXACT {
                let distance = libm::hypot(1.0 - re, im);
                if distance <= 4.0 * f64::EPSILON {
                    return Err(Error::IllConditioned { index, distance });
                }
                log_product += libm::log(distance);
                if log_product < libm::log(f64::MIN_POSITIVE) {
                    return Err(Error::IllConditioned { index, distance });
                }
            }
        }
        Ok(RootSet { roots })
    }

    /// Builds a root set from real roots.
    pub fn from_real<I: IntoIterator<Item = T>>(roots: I) -> Result<Self> {
        Self::new(roots.into_iter().map(|x| Complex::new(x, T::zero())).collect())
    }

    pub fn roots(&self) -> &[Complex<T>] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn is_real_root(z: &Complex<T>) -> bool {
        T::is_negligible(&z.im, &z.re.abs())
    }

    pub fn is_minus_one(z: &Complex<T>) -> bool {
        if T::EXACT {
            z.re == -T::one() && z.im.is_zero()
        } else {
            let (re, im) = (z.re.to_f64(), z.im.to_f64());
            libm::hypot(re + 1.0, im) <= T::root_tol().to_f64()
        }
    }

    pub fn all_real(&self) -> bool {
        self.roots.iter().all(Self::is_real_root)
    }

    pub fn has_minus_one(&self) -> bool {
        self.roots.iter().any(Self::is_minus_one)
    }

    /// Real parts of all roots; fails on the first non-real root.
    pub fn real_roots(&self) -> Result<Vec<T>> {
        self.roots
            .iter()
            .enumerate()
            .map(|(index, z)| {
                if Self::is_real_root(z) {
                    Ok(z.re.clone())
                } else {
                    Err(Error::NonRealRoot { index })
                }
            })
            .collect()
    }

    /// The remaining roots after removing one root at `-1`.
    pub fn without_minus_one(&self) -> Option<Vec<Complex<T>>> {
        let at = self.roots.iter().position(Self::is_minus_one)?;
        let mut rest = self.roots.clone();
        rest.remove(at);
        Some(rest)
    }

    /// Appends a root, keeping multiplicities.
    pub fn with_root(&self, z: Complex<T>) -> Result<Self> {
        let mut roots = self.roots.clone();
        roots.push(z);
        Self::new(roots)
    }

    pub fn to_f64(&self) -> RootSet<f64> {
        RootSet {
            roots: self.roots.iter().map(|z| Complex::new(z.re.to_f64(), z.im.to_f64())).collect(),
        }
    }
}

/// Coefficients `c₀…cₙ` of `P` in ascending powers together with the
/// exponent shift `N` of `m₀(ξ) = P(e^{2πiξ})·e^{2πiξ·max(-N, 0)}`.
///
/// Construction only rejects empty or degenerate polynomials. Whether
/// `P(1) = 1` holds is checked by consumers through [`is_normalized`],
/// since the Mallat precondition report must describe unnormalized masks.
///
/// [`is_normalized`]: MaskCoefficients::is_normalized
#[derive(Debug, Clone, PartialEq)]
pub struct MaskCoefficients<T> {
    coeffs: Vec<Complex<T>>,
    offset: i64,
}

impl<T: Scalar> MaskCoefficients<T> {
    pub fn new(coeffs: Vec<Complex<T>>, offset: i64) -> Result<Self> {
        let last = coeffs.last().ok_or(Error::EmptyMask)?;
        if last.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        for (index, c) in coeffs.iter().enumerate() {
            if !c.re.to_f64().is_finite() || !c.im.to_f64().is_finite() {
                return Err(Error::NonFinite { index });
            }
        }
        Ok(MaskCoefficients { coeffs, offset })
    }

    pub fn from_real<I: IntoIterator<Item = T>>(coeffs: I, offset: i64) -> Result<Self> {
        Self::new(coeffs.into_iter().map(|c| Complex::new(c, T::zero())).collect(), offset)
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `P(1) = Σ cₖ`.
    pub fn value_at_one(&self) -> Complex<T> {
        self.coeffs.iter().fold(Complex::zero(), |acc, c| acc + c.clone())
    }

    /// `P(1) = 1` exactly in exact mode, otherwise within
    /// `1e-9·max(1, Σ|cₖ|)`.
    pub fn is_normalized(&self) -> bool {
        let defect = self.value_at_one() - Complex::one();
        if T::EXACT {
            return defect.is_zero();
        }
        let scale = self.coeffs.iter().map(|c| complex_abs(c)).sum::<f64>().max(1.0);
        complex_abs(&defect) <= T::decision_tol().to_f64() * scale
    }

    pub fn to_f64(&self) -> MaskCoefficients<f64> {
        MaskCoefficients {
            coeffs: self.coeffs.iter().map(|c| Complex::new(c.re.to_f64(), c.im.to_f64())).collect(),
            offset: self.offset,
        }
    }
}

impl MaskCoefficients<f64> {
    /// Horner evaluation of `P(z)`.
    pub fn eval_poly(&self, z: Complex<f64>) -> Complex<f64> {
        self.coeffs.iter().rev().fold(Complex::zero(), |acc, c| acc * z + c)
    }

    /// `Σ|cₖ|`.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }
}

fn complex_abs<T: Scalar>(z: &Complex<T>) -> f64 {
    libm::hypot(z.re.to_f64(), z.im.to_f64())
}

/// Coefficients of `ψ_{z₀}(e^{iφ}) = f1 + f2·cos φ + f3·sin φ`, the squared
/// modulus of the normalized linear factor `(z - z₀)/(1 - z₀)` on the circle.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorCoefficients<T> {
    pub f1: T,
    pub f2: T,
    pub f3: T,
}

impl<T: Scalar> FactorCoefficients<T> {
    /// Evaluates the factor given `cos φ` and `sin φ`.
    pub fn eval(&self, cos: &T, sin: &T) -> T {
        self.f1.clone() + self.f2.clone() * cos.clone() + self.f3.clone() * sin.clone()
    }
}

impl FactorCoefficients<f64> {
    pub fn at_angle(&self, phi: f64) -> f64 {
        self.eval(&libm::cos(phi), &libm::sin(phi))
    }
}

/// `F₁`, `F₂`, `F₃` for the root `z0 = x + iy`:
///
/// ```text
/// F₁ = 1 + 2x/((x-1)² + y²),  F₂ = -2x/((x-1)² + y²),  F₃ = -2y/((x-1)² + y²)
/// ```
pub fn factor_coefficients<T: Scalar>(z0: &Complex<T>) -> Result<FactorCoefficients<T>> {
    let one = T::one();
    let two = one.clone() + one.clone();
    let dx = z0.re.clone() - one.clone();
    let denom = dx.clone() * dx + z0.im.clone() * z0.im.clone();
    if denom.is_zero() {
        return Err(Error::RootAtOne { index: 0 });
    }
    let f2 = -(two.clone() * z0.re.clone()) / denom.clone();
    let f3 = -(two * z0.im.clone()) / denom;
    let f1 = one - f2.clone();
    Ok(FactorCoefficients { f1, f2, f3 })
}

/// Expands `P(z) = ∏ (z - zᵢ)/(1 - zᵢ)`.
///
/// The result has degree `n = roots.len()`, zero offset, and `P(1) = 1`
/// (exactly for rational roots).
pub fn polynomial_from_roots<T: Scalar>(roots: &RootSet<T>) -> MaskCoefficients<T> {
    let mut coeffs: Vec<Complex<T>> = alloc::vec![Complex::one()];
    for z in roots.roots() {
        let scale = Complex::<T>::one() / (Complex::<T>::one() - z.clone());
        let constant = -(z.clone() * scale.clone());
        let mut next = alloc::vec![Complex::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k] = next[k].clone() + c.clone() * constant.clone();
            next[k + 1] = next[k + 1].clone() + c.clone() * scale.clone();
        }
        coeffs = next;
    }
    MaskCoefficients { coeffs, offset: 0 }
}

/// `m₀(ξ) = P(e^{2πiξ})·e^{2πiξ·max(-N, 0)}`.
pub fn evaluate_mask(mask: &MaskCoefficients<f64>, xi: f64) -> Complex<f64> {
    let z = Complex::from_polar(1.0, 2.0 * PI * xi);
    let shift = (-mask.offset()).max(0) as f64;
    let phase = Complex::from_polar(1.0, 2.0 * PI * xi * shift);
    mask.eval_poly(z) * phase
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn qc(n: i64, d: i64) -> Complex<Rational> {
        Complex::new(q(n, d), q(0, 1))
    }

    #[test]
    fn factor_at_minus_one_is_half_half_zero() {
        let f = factor_coefficients(&qc(-1, 1)).unwrap();
        assert_eq!(f, FactorCoefficients { f1: q(1, 2), f2: q(1, 2), f3: q(0, 1) });
    }

    #[test]
    fn factor_at_zero_is_identity() {
        let f = factor_coefficients(&qc(0, 1)).unwrap();
        assert_eq!(f, FactorCoefficients { f1: q(1, 1), f2: q(0, 1), f3: q(0, 1) });
    }

    #[test]
    fn factor_at_half() {
        let f = factor_coefficients(&qc(1, 2)).unwrap();
        assert_eq!(f, FactorCoefficients { f1: q(5, 1), f2: q(-4, 1), f3: q(0, 1) });
        // |e^{iφ} - 1/2|² / |1/2|² at φ = 0, π/2, π
        let ff = factor_coefficients(&Complex::new(0.5, 0.0)).unwrap();
        for (phi, expected) in [(0.0, 1.0), (PI / 2.0, 5.0), (PI, 9.0)] {
            assert!((ff.at_angle(phi) - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn factor_at_one_is_domain_error() {
        assert!(factor_coefficients(&Complex::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn real_root_factor_sums_to_one() {
        for x in [-7.5, -1.0, -0.25, 0.0, 0.3, 2.0, 40.0] {
            let f = factor_coefficients(&Complex::new(x, 0.0)).unwrap();
            assert!((f.f1 + f.f2 - 1.0).abs() < 1e-12);
            assert_eq!(f.f3, 0.0);
        }
    }

    #[test]
    fn root_set_rejects_one() {
        assert_eq!(RootSet::from_real([q(-1, 1), q(1, 1)]), Err(Error::RootAtOne { index: 1 }));
        assert_eq!(RootSet::from_real([1.0]), Err(Error::RootAtOne { index: 0 }));
        assert!(matches!(
            RootSet::from_real([1.0 + f64::EPSILON]),
            Err(Error::IllConditioned { index: 0, .. })
        ));
        assert!(RootSet::from_real([1.0 + 1e-6]).is_ok());
    }

    #[test]
    fn root_set_rejects_underflowing_normalization() {
        let roots = alloc::vec![1.0 - 1e-10; 40];
        assert!(matches!(RootSet::from_real(roots), Err(Error::IllConditioned { .. })));
    }

    #[test]
    fn minus_one_detection() {
        assert!(RootSet::from_real([0.5, -1.0 + 5e-9]).unwrap().has_minus_one());
        assert!(!RootSet::from_real([0.5, -1.0 + 5e-7]).unwrap().has_minus_one());
        assert!(RootSet::from_real([q(-1, 1)]).unwrap().has_minus_one());
        assert!(!RootSet::from_real([q(-100_000_001, 100_000_000)]).unwrap().has_minus_one());
    }

    #[test]
    fn haar_polynomial() {
        let p = polynomial_from_roots(&RootSet::from_real([q(-1, 1)]).unwrap());
        assert_eq!(p.coeffs(), &[qc(1, 2), qc(1, 2)]);
    }

    #[test]
    fn bspline2_polynomial() {
        let p = polynomial_from_roots(&RootSet::from_real([q(-1, 1), q(-1, 1)]).unwrap());
        assert_eq!(p.coeffs(), &[qc(1, 4), qc(1, 2), qc(1, 4)]);
        assert!(p.is_normalized());
    }

    #[test]
    fn minus_one_and_half() {
        // (z + 1)/2 · (z - 1/2)/(1/2) = (z + 1)(z - 1/2)
        let p = polynomial_from_roots(&RootSet::from_real([q(-1, 1), q(1, 2)]).unwrap());
        assert_eq!(p.coeffs(), &[qc(-1, 2), qc(1, 2), qc(1, 1)]);
        assert_eq!(p.value_at_one(), Complex::one());
    }

    #[test]
    fn float_expansion_is_normalized() {
        let roots = RootSet::new(alloc::vec![
            Complex::new(-1.0, 0.0),
            Complex::new(-0.3, 0.7),
            Complex::new(-0.3, -0.7),
            Complex::new(2.5, 0.0),
        ])
        .unwrap();
        let p = polynomial_from_roots(&roots);
        assert_eq!(p.degree(), 4);
        assert!(p.is_normalized());
        for z in roots.roots() {
            assert!(p.eval_poly(*z).norm() < 1e-12);
        }
    }

    #[test]
    fn bspline2_mask_values() {
        let p = polynomial_from_roots(&RootSet::from_real([-1.0, -1.0]).unwrap());
        assert!((evaluate_mask(&p, 0.0) - Complex::one()).norm() < 1e-15);
        assert!(evaluate_mask(&p, 0.5).norm() < 1e-15);
        assert!((evaluate_mask(&p, 0.25).norm_sqr() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn mask_modulus_is_periodic() {
        let p = MaskCoefficients::from_real([0.1, -0.3, 0.7, 0.5], 2).unwrap();
        for xi in [-0.8, 0.13, 0.5, 2.71] {
            let a = evaluate_mask(&p, xi).norm();
            let b = evaluate_mask(&p, xi + 1.0).norm();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn negative_offset_shifts_phase() {
        let plain = MaskCoefficients::from_real([0.5, 0.5], 0).unwrap();
        let shifted = MaskCoefficients::from_real([0.5, 0.5], -1).unwrap();
        let xi = 0.2;
        let expected = evaluate_mask(&plain, xi) * Complex::from_polar(1.0, 2.0 * PI * xi);
        assert!((evaluate_mask(&shifted, xi) - expected).norm() < 1e-15);
    }

    #[test]
    fn mask_construction_errors() {
        assert_eq!(MaskCoefficients::<f64>::new(alloc::vec![], 0), Err(Error::EmptyMask));
        assert_eq!(
            MaskCoefficients::from_real([1.0, 0.0], 0),
            Err(Error::ZeroLeadingCoefficient)
        );
        assert!(!MaskCoefficients::from_real([1.0, 1.0], 0).unwrap().is_normalized());
    }
}
