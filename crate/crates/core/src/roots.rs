//! Recovery of the roots of `P` from its coefficients.
//!
//! Exact zero roots and roots at `-1` are split off by synthetic division
//! first, since both are common in practice and multiple roots lose half or
//! more of their digits in any simultaneous iteration. The remaining factor
//! goes through Aberth–Ehrlich iteration; near-coincident results are merged
//! into their centroid, polished as a multiple root, and every root is
//! checked against the original coefficients.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::mask::{MaskCoefficients, RootSet};
use crate::scalar::FLOAT_ROOT_TOL;

type C64 = Complex<f64>;

/// Residual bound relative to `Σ|cₖ|`.
pub const RESIDUAL_TOL: f64 = 1e-8;

const MAX_ITERATIONS: usize = 1000;
const CLUSTER_RADIUS: f64 = 1e-4;

fn horner(coeffs: &[C64], z: C64) -> C64 {
    coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * z + c)
}

fn derivative(coeffs: &[C64]) -> Vec<C64> {
    coeffs.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect()
}

/// Divides by `(z - root)`; returns quotient and remainder.
fn deflate(coeffs: &[C64], root: C64) -> (Vec<C64>, C64) {
    let n = coeffs.len() - 1;
    let mut quotient = alloc::vec![C64::new(0.0, 0.0); n];
    let mut carry = C64::new(0.0, 0.0);
    for k in (0..=n).rev() {
        let value = coeffs[k] + carry * root;
        if k == 0 {
            return (quotient, value);
        }
        quotient[k - 1] = value;
        carry = value;
    }
    unreachable!()
}

fn aberth(coeffs: &[C64]) -> Vec<C64> {
    let m = coeffs.len() - 1;
    match m {
        0 => return Vec::new(),
        1 => return alloc::vec![-coeffs[0] / coeffs[1]],
        _ => {}
    }
    let deriv = derivative(coeffs);
    let lead = coeffs[m].norm();
    let radius = libm::pow(coeffs[0].norm() / lead, 1.0 / m as f64).max(1e-3);
    let mut z: Vec<C64> =
        (0..m).map(|k| C64::from_polar(radius, 2.0 * PI * k as f64 / m as f64 + 0.4)).collect();

    for _ in 0..MAX_ITERATIONS {
        let mut largest_step: f64 = 0.0;
        for k in 0..m {
            let p = horner(coeffs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / horner(&deriv, z[k]);
            let repulsion: C64 =
                (0..m).filter(|&j| j != k).map(|j| C64::new(1.0, 0.0) / (z[k] - z[j])).sum();
            let step = ratio / (C64::new(1.0, 0.0) - ratio * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[k] -= step;
                largest_step = largest_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if largest_step < 4.0 * f64::EPSILON {
            break;
        }
    }
    z
}

/// Replaces each group of roots closer than the cluster radius by copies of
/// one point: the centroid, polished by Newton steps on `P^{(m-1)}`, of
/// which an `m`-fold root of `P` is a simple root.
fn merge_clusters(coeffs: &[C64], roots: &mut [C64]) {
    let mut assigned = alloc::vec![false; roots.len()];
    for i in 0..roots.len() {
        if assigned[i] {
            continue;
        }
        let members: Vec<usize> = (i..roots.len())
            .filter(|&j| !assigned[j] && (roots[j] - roots[i]).norm() <= CLUSTER_RADIUS * (1.0 + roots[i].norm()))
            .collect();
        let mut centroid = members.iter().map(|&j| roots[j]).sum::<C64>() / members.len() as f64;
        if members.len() > 1 {
            centroid = polish_multiple(coeffs, centroid, members.len());
        }
        for &j in &members {
            assigned[j] = true;
            roots[j] = centroid;
        }
    }
}

fn polish_multiple(coeffs: &[C64], start: C64, multiplicity: usize) -> C64 {
    let mut target = coeffs.to_vec();
    for _ in 1..multiplicity {
        target = derivative(&target);
    }
    let slope = derivative(&target);
    let mut z = start;
    for _ in 0..8 {
        let step = horner(&target, z) / horner(&slope, z);
        if !(step.re.is_finite() && step.im.is_finite()) || step.norm() > CLUSTER_RADIUS * (1.0 + z.norm()) {
            break;
        }
        z -= step;
    }
    z
}

/// Roots of the polynomial with coefficients `mask.coeffs()`, with
/// multiplicity.
///
/// A root is classified real when `|Im z| ≤ 1e-8·(1 + |Re z|)` and snapped
/// to `-1` when `|z + 1| ≤ 1e-8`. Fails with [`Error::RootRecovery`] when
/// some `|P(z)|` exceeds `1e-8·Σ|cₖ|`.
pub fn roots_from_coefficients(mask: &MaskCoefficients<f64>) -> Result<RootSet<f64>> {
    let original = mask.coeffs();
    let scale = mask.l1_norm();
    let mut roots: Vec<C64> = Vec::with_capacity(mask.degree());

    let zeros = original.iter().take_while(|c| c.norm() == 0.0).count();
    roots.extend(core::iter::repeat_n(C64::new(0.0, 0.0), zeros));
    let mut rest: Vec<C64> = original[zeros..].to_vec();

    let minus_one = C64::new(-1.0, 0.0);
    while rest.len() > 1 {
        let rest_scale: f64 = rest.iter().map(|c| c.norm()).sum();
        let (quotient, remainder) = deflate(&rest, minus_one);
        if remainder.norm() > 64.0 * f64::EPSILON * rest_scale {
            break;
        }
        roots.push(minus_one);
        rest = quotient;
    }

    let mut found = aberth(&rest);
    merge_clusters(&rest, &mut found);
    roots.extend(found);

    let bound = RESIDUAL_TOL * scale;
    for z in roots.iter_mut() {
        let residual = mask.eval_poly(*z).norm();
        if !(residual <= bound) {
            return Err(Error::RootRecovery { residual, bound });
        }
        if z.im.abs() <= FLOAT_ROOT_TOL * (1.0 + z.re.abs()) {
            z.im = 0.0;
        }
        if (*z - minus_one).norm() <= FLOAT_ROOT_TOL {
            *z = minus_one;
        }
    }
    RootSet::new(roots)
}
