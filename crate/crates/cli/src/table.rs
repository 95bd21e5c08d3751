//! `table`: the difference triangle of the symmetric means and the verdict
//! of the even-difference condition.

use std::fmt::Display;

use maskcheck_core::criteria::even_difference_verdict;
use maskcheck_core::symmetric::{alpha, SymmetricTable};
use maskcheck_core::{Rational, Scalar};

use crate::error::CliError;
use crate::parse::parse_rational;

pub const HOLDS_LINE: &str = "[TRUE] The inequality holds";
pub const UNDECIDED_LINE: &str = "[FALSE] The criteria doesn't answer";

/// Splits `n` followed by `n` roots.
pub fn read_input(text: &str) -> Result<Vec<&str>, CliError> {
    let mut tokens = text.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| CliError::Usage("empty input; expected n followed by n roots".into()))?
        .parse()
        .map_err(|_| CliError::Usage("the first token must be a nonnegative integer n".into()))?;
    let roots: Vec<&str> = tokens.collect();
    if roots.len() != n {
        return Err(CliError::Usage(format!("expected {n} roots, found {}", roots.len())));
    }
    Ok(roots)
}

/// The table computed exactly as the reference listing does it, in plain
/// double arithmetic. Returns the printed text and whether it answered.
pub fn compat_table(x: &[f64]) -> (String, bool) {
    let n = x.len();
    let a: Vec<f64> = x.iter().map(|&x| 1.0 + 2.0 * x / ((x - 1.0) * (x - 1.0))).collect();

    let mut sigma = vec![1.0; n + 1];
    for k in 1..=n {
        let mut sum_j = 0.0;
        for j in 0..k {
            let mut pkj = 0.0;
            for al in &a {
                pkj += al.powf((k - j) as f64);
            }
            sum_j += (-1.0f64).powf((k - j - 1) as f64) * sigma[j] * pkj;
        }
        sigma[k] = sum_j / k as f64;
    }

    let mut c = vec![vec![1.0f64; n + 1]; n + 1];
    for i in 0..=n {
        for j in 1..i {
            c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
    }
    let ro: Vec<f64> = (0..=n).map(|k| sigma[k] / c[n][k]).collect();

    let mut delta = vec![vec![0.0f64; n + 1]; n + 1];
    delta[0].copy_from_slice(&ro);
    for i in 1..=n {
        for j in i..=n {
            delta[i][j] = delta[i - 1][j] - delta[i - 1][j - 1];
        }
    }

    let mut out = String::new();
    for row in &delta {
        for v in row {
            out += &format!("{v} ");
        }
        out.push('\n');
    }
    let answered = (0..=n / 2).all(|k| !(delta[2 * k][n] < 0.0));
    out += if answered { HOLDS_LINE } else { UNDECIDED_LINE };
    out.push('\n');
    (out, answered)
}

/// Row `i` holds `Δⁱρⱼ` for `j = i..=n`; the verdict uses the mode's
/// tolerance.
pub fn triangle<T: Scalar + Display>(x: &[T]) -> (String, bool) {
    let n = x.len();
    let table = SymmetricTable::from_alphas(x.iter().map(alpha).collect());
    let mut out = String::new();
    for (i, row) in table.diff.iter().enumerate() {
        let cells: Vec<String> = row[i..].iter().map(ToString::to_string).collect();
        out += &cells.join(" ");
        out.push('\n');
    }
    let answered = even_difference_verdict::<T>(&table.even_differences()).holds();
    debug_assert_eq!(table.diff.len(), n + 1);
    out += if answered { HOLDS_LINE } else { UNDECIDED_LINE };
    out.push('\n');
    (out, answered)
}

fn check_domain(index: usize, is_one: bool) -> Result<(), CliError> {
    if is_one {
        return Err(maskcheck_core::Error::RootAtOne { index }.into());
    }
    Ok(())
}

pub fn parse_float_roots(tokens: &[&str]) -> Result<Vec<f64>, CliError> {
    tokens
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let x: f64 = t.parse().map_err(|_| CliError::Usage(format!("invalid root `{t}`")))?;
            if !x.is_finite() {
                return Err(maskcheck_core::Error::NonFinite { index: i }.into());
            }
            check_domain(i, x == 1.0)?;
            Ok(x)
        })
        .collect()
}

pub fn parse_exact_roots(tokens: &[&str]) -> Result<Vec<Rational>, CliError> {
    tokens
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let x = parse_rational(t)?;
            check_domain(i, x == Rational::from_integer(1.into()))?;
            Ok(x)
        })
        .collect()
}
