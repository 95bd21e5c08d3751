//! Elementary symmetric polynomials of the per-root values `aᵢ = F₁(xᵢ, 0)`,
//! their symmetric means, and the backward-difference triangle.

use alloc::vec::Vec;

use crate::error::Result;
use crate::mask::RootSet;
use crate::scalar::{binomial, exactly, Rational, Scalar};

/// `F₁(x, 0) = (x² + 1)/(x - 1)²`, strictly positive for real `x ≠ 1`.
pub fn alpha<T: Scalar>(x: &T) -> T {
    let dx = x.clone() - T::one();
    (x.clone() * x.clone() + T::one()) / (dx.clone() * dx)
}

/// `aᵢ = F₁(xᵢ, 0)` for every root, with multiplicity.
///
/// Fails with [`Error::NonRealRoot`](crate::Error::NonRealRoot) if a root
/// is not real.
pub fn alpha_values<T: Scalar>(roots: &RootSet<T>) -> Result<Vec<T>> {
    Ok(roots.real_roots()?.iter().map(alpha).collect())
}

/// `σ₀…σₙ` of `a` through Newton's identities on the power sums
/// `pⱼ = Σ aᵢʲ`:
///
/// ```text
/// σₖ = (1/k) Σ_{i=0}^{k-1} (-1)^{k-i-1} σᵢ p_{k-i}
/// ```
///
/// The recursion is carried out exactly; in `f64` mode each `σₖ` is then
/// rounded once.
pub fn newton_sigmas<T: Scalar>(a: &[T]) -> Vec<T> {
    exactly(a, newton_recursion)
}

fn newton_recursion<T: Scalar>(a: &[T]) -> Vec<T> {
    let n = a.len();
    let mut power_sums = Vec::with_capacity(n + 1);
    power_sums.push(T::from_count(n));
    let mut powers: Vec<T> = a.to_vec();
    for _ in 1..=n {
        power_sums.push(powers.iter().cloned().fold(T::zero(), |acc, v| acc + v));
        for (p, x) in powers.iter_mut().zip(a) {
            *p = p.clone() * x.clone();
        }
    }

    let mut sigma = Vec::with_capacity(n + 1);
    sigma.push(T::one());
    for k in 1..=n {
        let mut sum = T::zero();
        for (i, s) in sigma.iter().enumerate() {
            let term = s.clone() * power_sums[k - i].clone();
            if (k - i - 1) % 2 == 0 {
                sum = sum + term;
            } else {
                sum = sum - term;
            }
        }
        sigma.push(sum / T::from_count(k));
    }
    sigma
}

/// `ρₖ = σₖ / C(n, k)`.
pub fn symmetric_means<T: Scalar>(sigma: &[T]) -> Vec<T> {
    let n = sigma.len().saturating_sub(1);
    sigma.iter().enumerate().map(|(k, s)| s.clone() / binomial::<T>(n, k)).collect()
}

/// Backward-difference triangle of `rho`.
///
/// Row 0 is `rho`; `table[i][j] = table[i-1][j] - table[i-1][j-1]` for
/// `j >= i` and zero below the diagonal, so that `table[i][j]` is `Δⁱρ_{j-i}`.
pub fn difference_table<T: Scalar>(rho: &[T]) -> Vec<Vec<T>> {
    let width = rho.len();
    let mut table: Vec<Vec<T>> = Vec::with_capacity(width);
    table.push(rho.to_vec());
    for i in 1..width {
        let prev = &table[i - 1];
        let row = (0..width)
            .map(|j| if j >= i { prev[j].clone() - prev[j - 1].clone() } else { T::zero() })
            .collect();
        table.push(row);
    }
    table
}

/// Everything the sufficient condition inspects, computed once per root set.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTable<T> {
    pub a: Vec<T>,
    pub sigma: Vec<T>,
    pub rho: Vec<T>,
    pub diff: Vec<Vec<T>>,
}

impl<T: Scalar> SymmetricTable<T> {
    /// Computed exactly from the exact values of `a`; every entry is
    /// rounded once in `f64` mode.
    pub fn from_alphas(a: Vec<T>) -> Self {
        let exact: Vec<Rational> = a.iter().map(Scalar::to_rational).collect();
        let sigma = newton_recursion(&exact);
        let rho = symmetric_means(&sigma);
        let diff = difference_table(&rho);
        let round = |v: &[Rational]| v.iter().map(T::from_rational).collect::<Vec<T>>();
        SymmetricTable { sigma: round(&sigma), rho: round(&rho), diff: diff.iter().map(|r| round(r)).collect(), a }
    }

    pub fn from_roots(roots: &RootSet<T>) -> Result<Self> {
        Ok(Self::from_alphas(alpha_values(roots)?))
    }

    pub fn degree(&self) -> usize {
        self.a.len()
    }

    /// `Δ²ᵏρ_{n-2k}` for `k = 0..=⌊n/2⌋`, read from the last column.
    pub fn even_differences(&self) -> Vec<T> {
        let n = self.degree();
        (0..=n / 2).map(|k| self.diff[2 * k][n].clone()).collect()
    }
}
