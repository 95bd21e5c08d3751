//! Mask input and the choice of arithmetic.

use std::fmt;

use clap::ValueEnum;
use maskcheck_core::roots::roots_from_coefficients;
use maskcheck_core::{polynomial_from_roots, MaskCoefficients, Rational, RootSet, Scalar};
use num_complex::Complex;

use crate::error::CliError;
use crate::parse::parse_list;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Exact for root input, float for coefficient input.
    Auto,
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arithmetic {
    Exact,
    Float,
}

impl fmt::Display for Arithmetic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arithmetic::Exact => "exact",
            Arithmetic::Float => "float",
        })
    }
}

/// A mask as given on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum MaskSpec {
    Roots(Vec<Complex<Rational>>),
    Coefficients { coeffs: Vec<Complex<Rational>>, offset: i64 },
}

fn to_f64(z: &Complex<Rational>) -> Complex<f64> {
    Complex::new(Scalar::to_f64(&z.re), Scalar::to_f64(&z.im))
}

impl MaskSpec {
    pub fn from_args(roots: Option<&str>, coeffs: Option<&str>, offset: i64) -> Result<Self, CliError> {
        match (roots, coeffs) {
            (Some(r), None) => {
                if offset != 0 {
                    return Err(CliError::Usage("--offset applies to --coeffs only".into()));
                }
                Ok(MaskSpec::Roots(parse_list(r)?))
            }
            (None, Some(c)) => Ok(MaskSpec::Coefficients { coeffs: parse_list(c)?, offset }),
            _ => Err(CliError::Usage("give exactly one of --roots and --coeffs".into())),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MaskSpec::Roots(_) => "roots",
            MaskSpec::Coefficients { .. } => "coeffs",
        }
    }

    pub fn arithmetic(&self, mode: Mode) -> Result<Arithmetic, CliError> {
        match (mode, self) {
            (Mode::Float, _) | (Mode::Auto, MaskSpec::Coefficients { .. }) => Ok(Arithmetic::Float),
            (Mode::Exact | Mode::Auto, MaskSpec::Roots(_)) => Ok(Arithmetic::Exact),
            (Mode::Exact, MaskSpec::Coefficients { .. }) => Err(CliError::Usage(
                "exact mode needs root input; roots recovered from coefficients are approximate".into(),
            )),
        }
    }

    /// The coefficients as given, or `P` expanded exactly from the roots,
    /// rounded to `f64`.
    pub fn mask(&self) -> Result<MaskCoefficients<f64>, CliError> {
        match self {
            MaskSpec::Roots(_) => Ok(polynomial_from_roots(&self.exact_roots()?).to_f64()),
            MaskSpec::Coefficients { coeffs, offset } => {
                Ok(MaskCoefficients::new(coeffs.iter().map(to_f64).collect(), *offset)?)
            }
        }
    }

    pub fn exact_roots(&self) -> Result<RootSet<Rational>, CliError> {
        match self {
            MaskSpec::Roots(roots) => Ok(RootSet::new(roots.clone())?),
            MaskSpec::Coefficients { .. } => {
                Err(CliError::Usage("exact roots are unavailable for coefficient input".into()))
            }
        }
    }

    /// Roots in `f64`; for coefficient input they are recovered
    /// numerically, which requires `P(1) = 1`.
    pub fn float_roots(&self) -> Result<RootSet<f64>, CliError> {
        match self {
            MaskSpec::Roots(roots) => Ok(RootSet::new(roots.iter().map(to_f64).collect())?),
            MaskSpec::Coefficients { .. } => {
                let mask = self.mask()?;
                if !mask.is_normalized() {
                    let p1 = mask.value_at_one();
                    return Err(maskcheck_core::Error::NotNormalized { re: p1.re, im: p1.im }.into());
                }
                Ok(roots_from_coefficients(&mask)?)
            }
        }
    }
}
