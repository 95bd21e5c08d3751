//! Closed-form criteria on the roots of `P`.
//!
//! The degree-2 and degree-3 criteria are exact: they decide the inequality
//! `T(φ) ≤ 1`. The nonpositive-root and even-difference criteria are
//! sufficient only and answer `Inconclusive` when their hypothesis fails.
//!
//! For degrees 2 and 3 with a root at `-1`, `T` reduces to
//!
//! ```text
//! T(φ) = 1 - c/2 + (c/2)·cos 2φ + (s/2)·sin 2φ
//! ```
//!
//! so `max T - 1 = (√(c² + s²) - c)/2`, which vanishes iff `c ≥ 0` and
//! `s = 0`. Exact mode tests those two conditions directly. Float mode
//! compares the excess with the decision tolerance, which keeps the verdict
//! consistent with the oracle near the boundary.

use core::f64::consts::PI;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::mask::{factor_coefficients, RootSet};
use crate::scalar::Scalar;
use crate::symmetric::SymmetricTable;
use crate::verdict::{Method, Status, Verdict, Witness};

fn check_real_with_minus_one<T: Scalar>(roots: &RootSet<T>) -> Result<()> {
    roots.real_roots()?;
    if !roots.has_minus_one() {
        return Err(Error::MissingMinusOne);
    }
    Ok(())
}

fn boundary_flag<T: Scalar>(margin: f64) -> bool {
    margin.abs() <= T::decision_tol().to_f64()
}

/// Sufficient condition on the symmetric means: `T ≤ 1` whenever
/// `Δ²ᵏρ_{n-2k} ≥ 0` for every `k = 0..=⌊n/2⌋`.
///
/// Never returns `Fails`. The witness of an `Inconclusive` verdict is the
/// first violated `k`. The margin is `min_k Δ²ᵏρ_{n-2k}`.
pub fn theorem_criterion<T: Scalar>(roots: &RootSet<T>) -> Result<Verdict> {
    check_real_with_minus_one(roots)?;
    let table = SymmetricTable::from_roots(roots)?;
    Ok(even_difference_verdict::<T>(&table.even_differences()))
}

/// Verdict of the even-difference condition for precomputed `Δ²ᵏρ_{n-2k}`.
pub fn even_difference_verdict<T: Scalar>(deltas: &[T]) -> Verdict {
    let tol = T::decision_tol();
    let violated = deltas.iter().position(|d| *d < -tol.clone());
    let margin = deltas
        .iter()
        .min_by(|a, b| a.partial_cmp(b).expect("criterion values are ordered"))
        .map(Scalar::to_f64)
        .unwrap_or(0.0);
    Verdict {
        status: if violated.is_some() { Status::Inconclusive } else { Status::Holds },
        margin,
        witness: violated.map(Witness::Index),
        method: Method::EvenDifferences,
        boundary: boundary_flag::<T>(margin),
    }
}

/// Sufficient condition: every root real and nonpositive, one of them `-1`.
///
/// The margin is `-max xᵢ`; the witness of `Inconclusive` is the index of
/// the first positive root.
pub fn corollary_nonpositive<T: Scalar>(roots: &RootSet<T>) -> Result<Verdict> {
    check_real_with_minus_one(roots)?;
    let xs = roots.real_roots()?;
    let tol = T::decision_tol();
    let positive = xs.iter().position(|x| *x > tol);
    let margin = xs.iter().map(|x| -x.to_f64()).fold(f64::INFINITY, f64::min);
    Ok(Verdict {
        status: if positive.is_some() { Status::Inconclusive } else { Status::Holds },
        margin,
        witness: positive.map(Witness::Index),
        method: Method::Nonpositive,
        boundary: boundary_flag::<T>(margin),
    })
}

/// `(√(c² + s²) - c)/2` without cancellation.
fn quadratic_excess(c: f64, s: f64) -> f64 {
    let r = libm::hypot(c, s);
    if c > 0.0 {
        0.5 * s * s / (r + c)
    } else {
        0.5 * (r - c)
    }
}

/// Angle in `[0, π)` maximizing `c·cos 2φ + s·sin 2φ`.
fn half_angle(s: f64, c: f64) -> f64 {
    let theta = libm::atan2(s, c);
    let theta = if theta < 0.0 { theta + 2.0 * PI } else { theta };
    (theta / 2.0).min(PI - f64::EPSILON)
}

fn quadratic_form_verdict<T: Scalar>(c: T, s: T, method: Method) -> Verdict {
    let (cf, sf) = (c.to_f64(), s.to_f64());
    let excess = quadratic_excess(cf, sf);
    let tol = T::decision_tol().to_f64();
    let holds = if T::EXACT { c >= T::zero() && s.is_zero() } else { excess <= tol };
    let mut margin = if excess > 0.0 { -excess } else { 0.5 * cf };
    if !holds && margin >= 0.0 {
        // exact failure whose excess underflows in f64
        margin = -f64::MIN_POSITIVE;
    }
    let witness = (!holds).then(|| Witness::Angle(half_angle(sf, cf)));
    Verdict {
        status: if holds { Status::Holds } else { Status::Fails },
        margin,
        witness,
        method,
        boundary: !T::EXACT && margin.abs() <= tol,
    }
}

/// Exact criterion for `P` with roots `{-1, z₂}`: holds iff `z₂` is real
/// and nonpositive.
pub fn prop1_degree2<T: Scalar>(z2: &Complex<T>) -> Result<Verdict> {
    let f = factor_coefficients(z2)?;
    let c = T::one() - f.f1;
    Ok(quadratic_form_verdict(c, f.f3, Method::Degree2))
}

/// Exact criterion for `P` with roots `{-1, z₁, z₂}`: holds iff
/// `1 - A₁A₂ - B₁B₂ ≥ 0` and `B₁ + B₂ = 0`, where `Aᵢ = F₁(zᵢ)` and
/// `Bᵢ = F₃(zᵢ)`.
pub fn prop2_degree3<T: Scalar>(z1: &Complex<T>, z2: &Complex<T>) -> Result<Verdict> {
    let f1 = factor_coefficients(z1).map_err(|_| Error::RootAtOne { index: 0 })?;
    let f2 = factor_coefficients(z2).map_err(|_| Error::RootAtOne { index: 1 })?;
    let c = T::one() - f1.f1 * f2.f1 - f1.f3.clone() * f2.f3.clone();
    let s = f1.f3 + f2.f3;
    Ok(quadratic_form_verdict(c, s, Method::Degree3))
}

/// `x₁x₂(x₁ + x₂ - 2) + x₁ + x₂`; the real degree-3 mask satisfies the
/// inequality iff this is `≤ 0`.
pub fn degree3_cubic<T: Scalar>(x1: &T, x2: &T) -> T {
    let two = T::one() + T::one();
    let sum = x1.clone() + x2.clone();
    x1.clone() * x2.clone() * (sum.clone() - two) + sum
}

/// Exact criterion for real roots `{-1, x₁, x₂}`.
///
/// Exact mode decides on the sign of [`degree3_cubic`]. Float mode decides
/// on `1 - A₁A₂ = -2·cubic/((x₁-1)²(x₂-1)²)`, the same quantity in the
/// units of `T`, against the decision tolerance.
pub fn corollary1_degree3_real<T: Scalar>(x1: &T, x2: &T) -> Result<Verdict> {
    let one = T::one();
    if *x1 == one {
        return Err(Error::RootAtOne { index: 0 });
    }
    if *x2 == one {
        return Err(Error::RootAtOne { index: 1 });
    }
    let d1 = x1.clone() - one.clone();
    let d2 = x2.clone() - one.clone();
    let scale = d1.clone() * d1 * d2.clone() * d2;
    let cubic = degree3_cubic(x1, x2);
    let c = -(cubic.clone() + cubic.clone()) / scale;
    let verdict = quadratic_form_verdict(c, T::zero(), Method::Degree3Real);
    if T::EXACT {
        debug_assert_eq!(verdict.holds(), cubic <= T::zero());
    }
    Ok(verdict)
}

/// Necessary condition: with `P(1) = 1`, the inequality forces `P(-1) = 0`
/// because `T(0) = 1 + |P(-1)|²`.
///
/// Returns `Fails` when `|P(-1)|²` exceeds the decision tolerance (zero in
/// exact mode) and `Inconclusive` otherwise. The margin is `-|P(-1)|²`.
pub fn minus_one_necessity<T: Scalar>(roots: &RootSet<T>) -> Result<Verdict> {
    // |P(-1)|² = ∏ ψ_{zᵢ}(-1) = ∏ (F₁ - F₂)
    let mut at_minus_one = T::one();
    for (index, z) in roots.roots().iter().enumerate() {
        let f = factor_coefficients(z).map_err(|_| Error::RootAtOne { index })?;
        at_minus_one = at_minus_one * (f.f1 - f.f2);
    }
    let fails = at_minus_one > T::decision_tol();
    let margin = -at_minus_one.to_f64();
    Ok(Verdict {
        status: if fails { Status::Fails } else { Status::Inconclusive },
        margin,
        witness: fails.then_some(Witness::Angle(0.0)),
        method: Method::MinusOneNecessity,
        boundary: boundary_flag::<T>(margin),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn real(x: Rational) -> Complex<Rational> {
        Complex::new(x, q(0, 1))
    }

    #[test]
    fn theorem_holds_on_bsplines() {
        for n in 1..=6 {
            let roots = RootSet::from_real(core::iter::repeat_n(q(-1, 1), n)).unwrap();
            let v = theorem_criterion(&roots).unwrap();
            assert_eq!(v.status, Status::Holds);
            assert_eq!(v.margin, 1.0 / f64::from(1u32 << n));
        }
    }

    #[test]
    fn theorem_holds_for_minus_one_zero_minus_two() {
        let roots = RootSet::from_real([q(-1, 1), q(0, 1), q(-2, 1)]).unwrap();
        assert_eq!(theorem_criterion(&roots).unwrap().status, Status::Holds);
    }

    #[test]
    fn theorem_inconclusive_for_positive_root() {
        let roots = RootSet::from_real([q(-1, 1), q(3, 1)]).unwrap();
        let v = theorem_criterion(&roots).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(v.witness, Some(Witness::Index(1)));
        assert_eq!(v.margin, -0.75);
    }

    #[test]
    fn theorem_preconditions() {
        let no_minus_one = RootSet::from_real([q(-2, 1), q(0, 1)]).unwrap();
        assert_eq!(theorem_criterion(&no_minus_one), Err(Error::MissingMinusOne));
        let complex = RootSet::new(alloc::vec![real(q(-1, 1)), Complex::new(q(0, 1), q(1, 1))]).unwrap();
        assert_eq!(theorem_criterion(&complex), Err(Error::NonRealRoot { index: 1 }));
        assert_eq!(corollary_nonpositive(&no_minus_one), Err(Error::MissingMinusOne));
    }

    #[test]
    fn nonpositive_examples() {
        let holds = RootSet::from_real([q(-1, 1), q(0, 1), q(-5, 1)]).unwrap();
        assert_eq!(corollary_nonpositive(&holds).unwrap().status, Status::Holds);
        let pos = RootSet::from_real([q(-1, 1), q(1, 1000)]).unwrap();
        let v = corollary_nonpositive(&pos).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(v.witness, Some(Witness::Index(1)));
        let haar = RootSet::from_real([q(-1, 1)]).unwrap();
        assert_eq!(corollary_nonpositive(&haar).unwrap().status, Status::Holds);
    }

    #[test]
    fn degree2_examples() {
        assert_eq!(prop1_degree2(&real(q(-3, 1))).unwrap().status, Status::Holds);
        assert_eq!(prop1_degree2(&real(q(1, 2))).unwrap().status, Status::Fails);
        let v = prop1_degree2(&Complex::new(q(0, 1), q(1, 1))).unwrap();
        assert_eq!(v.status, Status::Fails);
        assert!(v.margin < 0.0);
        assert!(prop1_degree2(&real(q(1, 1))).is_err());
        // float agrees on clear cases
        assert!(prop1_degree2(&Complex::new(-3.0, 0.0)).unwrap().holds());
        assert!(!prop1_degree2(&Complex::new(0.5, 0.0)).unwrap().holds());
        assert!(!prop1_degree2(&Complex::new(0.0, 1.0)).unwrap().holds());
    }

    #[test]
    fn degree2_boundary_at_zero() {
        let v = prop1_degree2(&real(q(0, 1))).unwrap();
        assert_eq!((v.status, v.margin), (Status::Holds, 0.0));
        let v = prop1_degree2(&Complex::new(1e-12, 0.0)).unwrap();
        assert!(v.holds() && v.boundary);
    }

    #[test]
    fn degree2_witness_is_argmax() {
        // z₂ = 1/2: A = 5, c = -4, s = 0, max of -2cos 2φ at φ = π/2
        let v = prop1_degree2(&Complex::new(0.5, 0.0)).unwrap();
        match v.witness {
            Some(Witness::Angle(phi)) => assert!((phi - PI / 2.0).abs() < 1e-12),
            other => panic!("unexpected witness {other:?}"),
        }
        assert!((v.margin + 4.0).abs() < 1e-12);
    }

    #[test]
    fn degree3_examples() {
        let v = prop2_degree3(&real(q(0, 1)), &real(q(0, 1))).unwrap();
        assert_eq!((v.status, v.margin), (Status::Holds, 0.0));
        let v = prop2_degree3(&real(q(-2, 1)), &real(q(3, 1))).unwrap();
        assert_eq!(v.status, Status::Fails);
        // conjugate pair: B₁ + B₂ = 0 exactly
        let z = Complex::new(q(-1, 1), q(1, 1));
        let v = prop2_degree3(&z, &z.conj()).unwrap();
        // A = 1 + 2(-1)/5 = 3/5, B = -2/5: 1 - 9/25 + 4/25 = 4/5
        assert_eq!(v.status, Status::Holds);
        assert!((v.margin - 0.4).abs() < 1e-15);
        let v = prop2_degree3(&z, &z).unwrap();
        assert_eq!(v.status, Status::Fails);
    }

    #[test]
    fn degree3_real_examples() {
        let v = corollary1_degree3_real(&q(0, 1), &q(0, 1)).unwrap();
        assert_eq!((v.status, v.margin), (Status::Holds, 0.0));
        assert_eq!(degree3_cubic(&q(-2, 1), &q(-3, 1)), q(-47, 1));
        assert_eq!(corollary1_degree3_real(&q(-2, 1), &q(-3, 1)).unwrap().status, Status::Holds);
        assert_eq!(degree3_cubic(&q(1, 2), &q(1, 2)), q(3, 4));
        assert_eq!(corollary1_degree3_real(&q(1, 2), &q(1, 2)).unwrap().status, Status::Fails);
        assert_eq!(degree3_cubic(&q(3, 10), &q(4, 10)), q(544, 1000));
        assert_eq!(corollary1_degree3_real(&0.3, &0.4).unwrap().status, Status::Fails);
        assert!(corollary1_degree3_real(&1.0, &0.0).is_err());
    }

    #[test]
    fn degree3_real_agrees_with_degree3() {
        for i in -12..=12 {
            for j in -12..=12 {
                let (x1, x2) = (q(i, 3), q(j, 4));
                if x1 == q(1, 1) || x2 == q(1, 1) {
                    continue;
                }
                let a = corollary1_degree3_real(&x1, &x2).unwrap();
                let b = prop2_degree3(&real(x1.clone()), &real(x2.clone())).unwrap();
                assert_eq!(a.status, b.status, "x1={x1} x2={x2}");
            }
        }
    }

    #[test]
    fn necessity_without_minus_one() {
        let roots = RootSet::from_real([q(-2, 1), q(0, 1)]).unwrap();
        let v = minus_one_necessity(&roots).unwrap();
        assert_eq!(v.status, Status::Fails);
        // |P(-1)|² = |(-1+2)/3|² · |-1/1|² = 1/9
        assert!((v.margin + 1.0 / 9.0).abs() < 1e-15);
        let with = RootSet::from_real([q(-1, 1), q(5, 1)]).unwrap();
        assert_eq!(minus_one_necessity(&with).unwrap().status, Status::Inconclusive);
    }
}
