//! Independent verifier of `|P(z)|² + |P(-z)|² ≤ 1` on the unit circle.
//!
//! `T(φ) = |P(e^{iφ})|² + |P(-e^{iφ})|²` is assembled from the
//! autocorrelation of the mask coefficients, so it never looks at the roots.
//! Its maximum over `[0, π)` is bracketed by sampling plus a derivative
//! bound on the gaps between samples.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::mask::MaskCoefficients;
use crate::scalar::{binomial, exactly, Rational, Scalar};
use crate::symmetric::{difference_table, newton_sigmas, symmetric_means};
use crate::verdict::{Method, Status, Verdict, Witness};

/// Hard cap on the number of evaluations spent certifying one mask.
pub const MAX_EVALUATIONS: usize = 1 << 20;

const ODD_RESIDUE_TOL: f64 = 1e-12;

/// Laurent coefficients `r_{-n}…r_n` of `|P(e^{iθ})|² = Σ r_k e^{ikθ}`,
/// `r_k = Σⱼ c_{j+k}·conj(cⱼ)`. Entry `i` holds `r_{i-n}`.
pub fn autocorrelation(mask: &MaskCoefficients<f64>) -> Vec<Complex<f64>> {
    let c = mask.coeffs();
    let n = c.len() - 1;
    let mut r = alloc::vec![Complex::new(0.0, 0.0); 2 * n + 1];
    for k in 0..=n {
        let mut acc = Complex::new(0.0, 0.0);
        for j in 0..=n - k {
            acc += c[j + k] * c[j].conj();
        }
        r[n + k] = acc;
        r[n - k] = acc.conj();
    }
    r
}

/// The π-periodic trigonometric polynomial
/// `T(φ) = c₀ + Σ_{l≥1} (c_l cos 2lφ + s_l sin 2lφ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubQmfPolynomial {
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl SubQmfPolynomial {
    /// From cosine and sine coefficients indexed by `l`; `sin[0]` is ignored.
    pub fn new(mut cos: Vec<f64>, mut sin: Vec<f64>) -> Self {
        let len = cos.len().max(sin.len()).max(1);
        cos.resize(len, 0.0);
        sin.resize(len, 0.0);
        sin[0] = 0.0;
        SubQmfPolynomial { cos, sin }
    }

    pub fn from_cosines(cos: Vec<f64>) -> Self {
        Self::new(cos, Vec::new())
    }

    /// Highest `l` carried (frequency `2l` in `φ`).
    pub fn half_degree(&self) -> usize {
        self.cos.len() - 1
    }

    /// `c_l`, the coefficient of `cos 2lφ` (`c₀` is the constant term).
    pub fn cosines(&self) -> &[f64] {
        &self.cos
    }

    /// `s_l`, the coefficient of `sin 2lφ`.
    pub fn sines(&self) -> &[f64] {
        &self.sin
    }

    pub fn eval(&self, phi: f64) -> f64 {
        let step = Complex::from_polar(1.0, 2.0 * phi);
        let mut rot = Complex::new(1.0, 0.0);
        let mut acc = self.cos[0];
        for (c, s) in self.cos.iter().zip(&self.sin).skip(1) {
            rot *= step;
            acc += c * rot.re + s * rot.im;
        }
        acc
    }

    /// `Σ 2l(|c_l| + |s_l|)`, a bound on `|T'|`.
    pub fn lipschitz_bound(&self) -> f64 {
        self.weighted_abs_sum(1)
    }

    /// `Σ (2l)²(|c_l| + |s_l|)`, a bound on `|T''|`.
    pub fn curvature_bound(&self) -> f64 {
        self.weighted_abs_sum(2)
    }

    fn weighted_abs_sum(&self, power: i32) -> f64 {
        self.cos
            .iter()
            .zip(&self.sin)
            .enumerate()
            .map(|(l, (c, s))| libm::pow(2.0 * l as f64, f64::from(power)) * (c.abs() + s.abs()))
            .sum()
    }

    /// Bound on the floating-point error of one call to [`eval`](Self::eval).
    pub fn rounding_slack(&self) -> f64 {
        let abs: f64 = self.cos.iter().chain(&self.sin).map(|v| v.abs()).sum();
        8.0 * (self.cos.len() as f64 + 2.0) * f64::EPSILON * abs.max(1.0)
    }
}

/// `T = |P(z)|² + |P(-z)|²` from the autocorrelation: odd Laurent terms
/// cancel and even ones double.
///
/// Fails with [`Error::OddResidue`] if an odd-frequency coefficient
/// survives the cancellation.
pub fn build_t(mask: &MaskCoefficients<f64>) -> Result<SubQmfPolynomial> {
    let r = autocorrelation(mask);
    let n = mask.degree();
    let scale = r[n].re.abs().max(1.0);
    let mut cos = alloc::vec![0.0; n / 2 + 1];
    let mut sin = alloc::vec![0.0; n / 2 + 1];
    for k in 0..=n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let q = r[n + k] + r[n + k] * sign;
        if k % 2 == 1 {
            if q.norm() > ODD_RESIDUE_TOL * scale {
                return Err(Error::OddResidue { magnitude: q.norm() });
            }
            continue;
        }
        let l = k / 2;
        if l == 0 {
            cos[0] = q.re;
        } else {
            // q e^{ikφ} + conj(q) e^{-ikφ} = 2Re(q) cos kφ - 2Im(q) sin kφ
            cos[l] = 2.0 * q.re;
            sin[l] = -2.0 * q.im;
        }
    }
    Ok(SubQmfPolynomial::new(cos, sin))
}

/// Cosine coefficients `[d₀/2, d₁, …, d_{⌊n/2⌋}]` of `T` for real roots,
/// given their values `aᵢ = F₁(xᵢ, 0)`:
///
/// ```text
/// d_l = 4 Σ_{k=l}^{⌊n/2⌋} 2^{-2k} · n!/((n-2k)!(k-l)!(k+l)!) · Δ²ᵏρ_{n-2k}
/// ```
pub fn expanded_t_real_roots<T: Scalar>(a: &[T]) -> Vec<T> {
    exactly(a, expansion)
}

fn expansion(a: &[Rational]) -> Vec<Rational> {
    use num_traits::{One, Zero};
    type T = Rational;
    let n = a.len();
    let half = n / 2;
    let table = difference_table(&symmetric_means(&newton_sigmas(a)));
    let four = T::from_count(4);
    let mut quarter_pow = alloc::vec![T::one(); half + 1];
    for k in 1..=half {
        quarter_pow[k] = quarter_pow[k - 1].clone() / four.clone();
    }
    let mut d = Vec::with_capacity(half + 1);
    for l in 0..=half {
        let mut acc = T::zero();
        for k in l..=half {
            let multinomial = binomial::<T>(n, 2 * k) * binomial::<T>(2 * k, k - l);
            acc = acc + quarter_pow[k].clone() * multinomial * table[2 * k][n].clone();
        }
        d.push(four.clone() * acc);
    }
    d[0] = d[0].clone() / T::from_count(2);
    d
}

/// Grid maximum of `T` with a rigorous upper bound.
///
/// `certified_upper_bound` adds to `max_estimate` the smaller of the
/// Lipschitz gap `π·L/grid` and the curvature gap `π²·M/(8·grid²)`, plus
/// the evaluation rounding slack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleMaxCertificate {
    pub max_estimate: f64,
    /// In `[0, π)`.
    pub argmax: f64,
    pub lipschitz_bound: f64,
    pub curvature_bound: f64,
    pub grid_size: usize,
    pub certified_upper_bound: f64,
}

/// Smallest admissible grid for `T`: eight samples per unit of trig degree.
pub fn minimum_grid(t: &SubQmfPolynomial) -> usize {
    8 * (2 * t.half_degree() + 1)
}

fn wrap_angle(phi: f64) -> f64 {
    let w = libm::fmod(phi, PI);
    let w = if w < 0.0 { w + PI } else { w };
    if w >= PI {
        0.0
    } else {
        w
    }
}

/// Golden-section ascent of `T` on `[lo, hi]`.
fn refine_max(t: &SubQmfPolynomial, lo: f64, hi: f64, best: (f64, f64)) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let (mut f1, mut f2) = (t.eval(x1), t.eval(x2));
    for _ in 0..80 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = t.eval(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = t.eval(x1);
        }
        if b - a < 1e-15 {
            break;
        }
    }
    let (phi, value) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    if value > best.1 {
        (wrap_angle(phi), value)
    } else {
        best
    }
}

/// Samples `T` on `grid` equispaced angles of `[0, π)`, refines the best
/// sample by local ascent and certifies an upper bound on `max T`.
pub fn max_on_circle(t: &SubQmfPolynomial, grid: usize) -> Result<CircleMaxCertificate> {
    let minimum = minimum_grid(t);
    if grid < minimum {
        return Err(Error::GridTooSmall { grid, minimum });
    }
    let h = PI / grid as f64;
    let (mut best_i, mut best_v) = (0, f64::NEG_INFINITY);
    for i in 0..grid {
        let v = t.eval(i as f64 * h);
        if v > best_v {
            best_i = i;
            best_v = v;
        }
    }
    let center = best_i as f64 * h;
    let (argmax, max_estimate) = refine_max(t, center - h, center + h, (center, best_v));

    let lipschitz_bound = t.lipschitz_bound();
    let curvature_bound = t.curvature_bound();
    let gap = (PI * lipschitz_bound / grid as f64).min(curvature_bound * h * h / 8.0);
    Ok(CircleMaxCertificate {
        max_estimate,
        argmax,
        lipschitz_bound,
        curvature_bound,
        grid_size: grid,
        certified_upper_bound: max_estimate + gap + t.rounding_slack(),
    })
}

/// Outcome of certifying `max T ≤ 1 + tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certification {
    pub status: Status,
    /// `grid_size` counts every evaluation of `T`, including adaptive ones;
    /// `certified_upper_bound` is the bound actually proven.
    pub certificate: CircleMaxCertificate,
}

/// Decides `max T ≤ 1 + tol`.
///
/// A coarse grid either exposes a sample above the threshold (`Fails`) or
/// certifies the bound outright. Otherwise the intervals whose curvature
/// bound still reaches the threshold are bisected until every interval is
/// certified, a sample above the threshold is found, or
/// [`MAX_EVALUATIONS`] is exhausted (`Inconclusive`).
pub fn certify_sub_qmf(t: &SubQmfPolynomial, tol: f64) -> Certification {
    certify_sub_qmf_on(t, tol, default_grid(t)).expect("default grid is admissible")
}

/// Starting grid used by [`certify_sub_qmf`].
pub fn default_grid(t: &SubQmfPolynomial) -> usize {
    minimum_grid(t).max(64).next_power_of_two()
}

/// [`certify_sub_qmf`] starting from `grid` samples.
///
/// Fails with [`Error::GridTooSmall`] below [`minimum_grid`].
pub fn certify_sub_qmf_on(t: &SubQmfPolynomial, tol: f64, grid: usize) -> Result<Certification> {
    let threshold = 1.0 + tol;
    let mut cert = max_on_circle(t, grid)?;
    if cert.max_estimate > threshold {
        return Ok(Certification { status: Status::Fails, certificate: cert });
    }
    if cert.certified_upper_bound <= threshold {
        return Ok(Certification { status: Status::Holds, certificate: cert });
    }

    let curvature = t.curvature_bound();
    let lipschitz = t.lipschitz_bound();
    let slack = t.rounding_slack();
    let interval_bound = |fa: f64, fb: f64, width: f64| {
        fa.max(fb) + (curvature * width * width / 8.0).min(lipschitz * width / 2.0) + slack
    };

    let h = PI / grid as f64;
    let samples: Vec<f64> = (0..=grid).map(|i| t.eval(i as f64 * h)).collect();
    let mut evaluations = 2 * grid + 1;
    let mut stack: Vec<(f64, f64, f64, f64)> =
        (0..grid).map(|i| (i as f64 * h, (i + 1) as f64 * h, samples[i], samples[i + 1])).collect();
    let mut proven: f64 = f64::NEG_INFINITY;

    while let Some((a, b, fa, fb)) = stack.pop() {
        let bound = interval_bound(fa, fb, b - a);
        if bound <= threshold {
            proven = proven.max(bound);
            continue;
        }
        if evaluations >= MAX_EVALUATIONS {
            cert.grid_size = evaluations;
            cert.certified_upper_bound = bound.max(proven);
            return Ok(Certification { status: Status::Inconclusive, certificate: cert });
        }
        let m = 0.5 * (a + b);
        let fm = t.eval(m);
        evaluations += 1;
        if fm > threshold {
            let (argmax, max_estimate) = refine_max(t, a, b, (wrap_angle(m), fm));
            cert.argmax = argmax;
            cert.max_estimate = max_estimate;
            cert.grid_size = evaluations;
            return Ok(Certification { status: Status::Fails, certificate: cert });
        }
        if fm > cert.max_estimate {
            cert.max_estimate = fm;
            cert.argmax = wrap_angle(m);
        }
        stack.push((a, m, fa, fm));
        stack.push((m, b, fm, fb));
    }
    cert.grid_size = evaluations;
    cert.certified_upper_bound = proven.max(cert.max_estimate);
    Ok(Certification { status: Status::Holds, certificate: cert })
}

/// Default oracle tolerance on `max T - 1`.
pub const DEFAULT_ORACLE_TOL: f64 = 1e-9;

/// Verdict of the oracle for a mask: `Holds` when `max T ≤ 1 + tol` is
/// certified, `Fails` when a sample exceeds `1 + tol`.
///
/// The margin is `1 - max_estimate`; the witness is the best angle found.
pub fn sub_qmf_check(mask: &MaskCoefficients<f64>, tol: f64) -> Result<Verdict> {
    let t = build_t(mask)?;
    Ok(certification_verdict(&certify_sub_qmf(&t, tol), tol))
}

pub fn certification_verdict(c: &Certification, tol: f64) -> Verdict {
    let margin = 1.0 - c.certificate.max_estimate;
    Verdict {
        status: c.status,
        margin,
        witness: (c.status != Status::Holds).then_some(Witness::Angle(c.certificate.argmax)),
        method: Method::Oracle,
        boundary: margin.abs() <= tol,
    }
}
