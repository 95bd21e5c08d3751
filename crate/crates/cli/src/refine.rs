//! `refine`: samples of `φ̂` as CSV, guarded by the Mallat preconditions.

use std::io::Write;

use maskcheck_core::cascade::{mallat_preconditions, phi_hat, uniform_grid, MallatReport, PhiHatSamples};
use maskcheck_core::MaskCoefficients;

use crate::error::CliError;

pub const HEADER: &str = "xi,re,im,abs";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefineConfig {
    pub depth: usize,
    pub grid: usize,
    pub range: (f64, f64),
    pub tol: f64,
    pub force: bool,
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn summary(report: &MallatReport) -> String {
    let o = &report.sub_qmf;
    format!(
        "m0(0) = 1: {}\ncoefficient decay: {}\nsub-QMF inequality: {} (oracle {}, margin {})\noverall: {}\n",
        pass(report.normalized),
        pass(report.coefficient_decay),
        pass(o.holds()),
        o.status,
        o.margin,
        pass(report.passes())
    )
}

pub fn write_csv(samples: &PhiHatSamples, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{HEADER}")?;
    for (xi, v) in samples.xi.iter().zip(&samples.values) {
        writeln!(out, "{xi:.16e},{:.16e},{:.16e},{:.16e}", v.re, v.im, v.norm())?;
    }
    Ok(())
}

/// Checks the preconditions and, when they pass or `force` is set, samples
/// `φ̂`. Returns `None` when refusing.
pub fn refine(
    mask: &MaskCoefficients<f64>,
    config: &RefineConfig,
) -> Result<(MallatReport, Option<PhiHatSamples>), CliError> {
    let (lo, hi) = config.range;
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(CliError::Usage("--range needs finite bounds with lo <= hi".into()));
    }
    if config.grid == 0 {
        return Err(CliError::Usage("--grid must be at least 1".into()));
    }
    let report = mallat_preconditions(mask, config.tol)?;
    if !report.passes() && !config.force {
        return Ok((report, None));
    }
    let xi = uniform_grid(lo, hi, config.grid);
    Ok((report, Some(phi_hat(mask, &xi, config.depth)?)))
}
