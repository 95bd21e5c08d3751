//! `sweep`: the even-difference theorem against the oracle on random real
//! root sets.

use std::io::Write;

use maskcheck_core::criteria::theorem_criterion;
use maskcheck_core::{polynomial_from_roots, Rational, RootSet, Scalar, Status, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::check::{run_oracle, OracleRun};
use crate::error::CliError;
use crate::input::Arithmetic;

pub const HEADER: &str = "seed,row,roots,criterion,criterion_margin,oracle,oracle_margin";

/// Positive roots, when requested, are drawn from `(0, POSITIVE_LIMIT)`.
pub const POSITIVE_LIMIT: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub seed: u64,
    pub count: usize,
    pub degree: usize,
    /// Range of the free roots.
    pub range: (f64, f64),
    /// Replace one free root by a positive one.
    pub positive: bool,
    pub tol: f64,
    pub arithmetic: Arithmetic,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub holds_holds: usize,
    pub inconclusive_holds: usize,
    pub inconclusive_fails: usize,
    /// Rows where the oracle itself was inconclusive.
    pub oracle_inconclusive: usize,
}

impl SweepSummary {
    pub fn line(&self, config: &SweepConfig) -> String {
        format!(
            "seed={} count={} holds_holds={} inconclusive_holds={} inconclusive_fails={} oracle_inconclusive={}",
            config.seed,
            config.count,
            self.holds_holds,
            self.inconclusive_holds,
            self.inconclusive_fails,
            self.oracle_inconclusive
        )
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |m: &str| Err(CliError::Usage(m.into()));
        if self.count == 0 {
            return usage("--count must be at least 1");
        }
        if self.degree == 0 {
            return usage("--degree must be at least 1");
        }
        if self.positive && self.degree < 2 {
            return usage("--positive needs --degree 2 or more");
        }
        let (lo, hi) = self.range;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return usage("--range needs finite bounds with lo < hi");
        }
        Ok(())
    }
}

/// Root `-1` followed by `degree - 1` draws from the range; with `positive`
/// the first draw comes from `(0, 5)` instead.
pub fn draw_roots(rng: &mut ChaCha20Rng, config: &SweepConfig) -> Vec<f64> {
    let mut roots = vec![-1.0];
    for i in 1..config.degree {
        let x = if config.positive && i == 1 {
            loop {
                let x = rng.random_range(0.0..POSITIVE_LIMIT);
                if x > 0.0 && x != 1.0 {
                    break x;
                }
            }
        } else {
            loop {
                let x = rng.random_range(config.range.0..config.range.1);
                if x != 1.0 {
                    break x;
                }
            }
        };
        roots.push(x);
    }
    roots
}

fn evaluate<T: Scalar>(roots: &RootSet<T>, tol: f64) -> Result<(Verdict, OracleRun), CliError> {
    let criterion = theorem_criterion(roots)?;
    let oracle = run_oracle(&polynomial_from_roots(roots).to_f64(), tol, None)?;
    Ok((criterion, oracle))
}

/// Writes the CSV to `out` row by row. A row where the theorem holds and
/// the oracle fails is written, then reported as an error.
pub fn run_sweep(config: &SweepConfig, out: &mut dyn Write) -> Result<SweepSummary, CliError> {
    config.validate()?;
    let mut rng = ChaCha20Rng::seed_from_u64(config.seed);
    let mut summary = SweepSummary::default();
    writeln!(out, "{HEADER}")?;
    for row in 0..config.count {
        let roots = draw_roots(&mut rng, config);
        let (criterion, oracle) = match config.arithmetic {
            Arithmetic::Float => evaluate(&RootSet::from_real(roots.iter().copied())?, config.tol)?,
            Arithmetic::Exact => {
                let exact: Vec<Rational> = roots.iter().map(Scalar::to_rational).collect();
                evaluate(&RootSet::from_real(exact)?, config.tol)?
            }
        };
        let rendered: Vec<String> = roots.iter().map(|x| format!("{x:.16e}")).collect();
        writeln!(
            out,
            "{},{},{},{},{:.16e},{},{:.16e}",
            config.seed,
            row,
            rendered.join(";"),
            criterion.status,
            criterion.margin,
            oracle.verdict.status,
            oracle.verdict.margin
        )?;
        match (criterion.status, oracle.verdict.status) {
            (Status::Holds, Status::Fails) => {
                out.flush()?;
                return Err(CliError::Consistency(format!(
                    "row {row}: even-difference criterion holds but the oracle found max T = {}",
                    oracle.certificate.max_estimate
                )));
            }
            (_, Status::Inconclusive) => summary.oracle_inconclusive += 1,
            (Status::Holds, _) => summary.holds_holds += 1,
            (_, Status::Holds) => summary.inconclusive_holds += 1,
            _ => summary.inconclusive_fails += 1,
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(positive: bool) -> SweepConfig {
        SweepConfig {
            seed: 7,
            count: 20,
            degree: 5,
            range: (-5.0, 0.0),
            positive,
            tol: 1e-9,
            arithmetic: Arithmetic::Float,
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        run_sweep(&config(true), &mut a).unwrap();
        run_sweep(&config(true), &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert_eq!(text.lines().count(), 21);
        assert!(text.lines().skip(1).all(|l| l.starts_with("7,")));
    }

    #[test]
    fn nonpositive_rows_never_fail() {
        let summary = run_sweep(&config(false), &mut Vec::new()).unwrap();
        assert_eq!(summary.inconclusive_fails, 0);
        assert_eq!(summary.holds_holds + summary.inconclusive_holds, 20);
    }

    #[test]
    fn rejects_bad_configs() {
        let mut c = config(false);
        c.count = 0;
        assert!(run_sweep(&c, &mut Vec::new()).is_err());
        let mut c = config(true);
        c.degree = 1;
        assert!(c.validate().is_err());
        let mut c = config(false);
        c.range = (1.0, -1.0);
        assert!(c.validate().is_err());
    }
}
