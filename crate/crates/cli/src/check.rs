//! `check` and `oracle`: pick the most specific criterion for the input and
//! compare it with the oracle.

use std::fmt::Display;

use maskcheck_core::criteria::{
    corollary1_degree3_real, corollary_nonpositive, minus_one_necessity, prop1_degree2, prop2_degree3,
    theorem_criterion,
};
use maskcheck_core::scalar::FLOAT_DECISION_TOL;
use maskcheck_core::trig::{
    build_t, certification_verdict, certify_sub_qmf, certify_sub_qmf_on, CircleMaxCertificate,
};
use maskcheck_core::{MaskCoefficients, Method, RootSet, Scalar, Status, Verdict, Witness};
use num_complex::Complex;

use crate::error::{CliError, EXIT_FAILS, EXIT_HOLDS, EXIT_INCONCLUSIVE};
use crate::input::{Arithmetic, MaskSpec, Mode};
use crate::report::Report;

/// The criterion that applies to the shape of `roots`, if any.
///
/// Without a root at `-1` the mask fails outright. Otherwise, counting the
/// remaining roots: none (Haar) or all real and nonpositive is settled by
/// the nonpositive-root corollary; one is the degree-2 criterion; two are
/// the degree-3 criteria; more real roots use the even-difference theorem.
/// Complex roots of degree four and up have no criterion.
pub fn select_criterion<T: Scalar>(roots: &RootSet<T>) -> maskcheck_core::Result<Option<Verdict>> {
    let Some(rest) = roots.without_minus_one() else {
        return minus_one_necessity(roots).map(Some);
    };
    match rest.as_slice() {
        [] => corollary_nonpositive(roots).map(Some),
        [z] => prop1_degree2(z).map(Some),
        [z1, z2] if roots.all_real() => corollary1_degree3_real(&z1.re, &z2.re).map(Some),
        [z1, z2] => prop2_degree3(z1, z2).map(Some),
        _ if roots.all_real() => {
            let nonpositive = corollary_nonpositive(roots)?;
            if nonpositive.holds() {
                Ok(Some(nonpositive))
            } else {
                theorem_criterion(roots).map(Some)
            }
        }
        _ => Ok(None),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleRun {
    pub verdict: Verdict,
    pub certificate: CircleMaxCertificate,
    pub tol: f64,
}

pub fn run_oracle(mask: &MaskCoefficients<f64>, tol: f64, grid: Option<usize>) -> Result<OracleRun, CliError> {
    let t = build_t(mask)?;
    let certification = match grid {
        Some(g) => certify_sub_qmf_on(&t, tol, g)?,
        None => certify_sub_qmf(&t, tol),
    };
    Ok(OracleRun { verdict: certification_verdict(&certification, tol), certificate: certification.certificate, tol })
}

/// Why a criterion and the oracle cannot both be right, if they cannot.
pub fn contradiction(criterion: &Verdict, oracle: &OracleRun) -> Option<String> {
    let oracle_excess = -oracle.verdict.margin;
    match (criterion.status, oracle.verdict.status) {
        (Status::Holds, Status::Fails) if oracle_excess > oracle.tol.max(FLOAT_DECISION_TOL) => Some(format!(
            "{} criterion holds but the oracle found max T = {}",
            criterion.method,
            oracle.certificate.max_estimate
        )),
        (Status::Fails, Status::Holds) if -criterion.margin > oracle.tol => Some(format!(
            "{} criterion fails by {} but the oracle certified max T <= {}",
            criterion.method, -criterion.margin, oracle.certificate.certified_upper_bound
        )),
        _ => None,
    }
}

pub fn status_exit_code(status: Status) -> i32 {
    match status {
        Status::Holds => EXIT_HOLDS,
        Status::Fails => EXIT_FAILS,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub arithmetic: Arithmetic,
    pub input: &'static str,
    pub roots: Vec<String>,
    pub has_minus_one: bool,
    pub criterion: Option<Verdict>,
    /// The even-difference theorem, whenever its hypothesis holds.
    pub theorem: Option<Verdict>,
    pub oracle: OracleRun,
}

pub fn render_root<T: Scalar + Display>(z: &Complex<T>) -> String {
    if z.im.is_zero() {
        z.re.to_string()
    } else if z.im.is_negative() {
        format!("{}-{}i", z.re, z.im.abs())
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

type Criteria = (Vec<String>, bool, Option<Verdict>, Option<Verdict>);

fn criteria_for<T: Scalar + Display>(roots: &RootSet<T>) -> Result<Criteria, CliError> {
    let theorem = if roots.all_real() && roots.has_minus_one() { Some(theorem_criterion(roots)?) } else { None };
    Ok((roots.roots().iter().map(render_root).collect(), roots.has_minus_one(), select_criterion(roots)?, theorem))
}

pub fn analyze(spec: &MaskSpec, mode: Mode, tol: f64, grid: Option<usize>) -> Result<Analysis, CliError> {
    let arithmetic = spec.arithmetic(mode)?;
    let (roots, has_minus_one, criterion, theorem) = match arithmetic {
        Arithmetic::Exact => criteria_for(&spec.exact_roots()?)?,
        Arithmetic::Float => criteria_for(&spec.float_roots()?)?,
    };
    let oracle = run_oracle(&spec.mask()?, tol, grid)?;
    Ok(Analysis { arithmetic, input: spec.kind(), roots, has_minus_one, criterion, theorem, oracle })
}

impl Analysis {
    /// Criterion status, or the oracle's when no criterion applies.
    pub fn exit_code(&self) -> i32 {
        status_exit_code(self.criterion.map_or(self.oracle.verdict.status, |c| c.status))
    }

    pub fn contradiction(&self) -> Option<String> {
        self.criterion.iter().chain(&self.theorem).find_map(|c| contradiction(c, &self.oracle))
    }

    pub fn report(&self, command: &str) -> Report {
        let mut r = Report::new();
        r.push("command", command);
        r.push("mode", self.arithmetic);
        r.push("input", self.input);
        r.push("degree", self.roots.len());
        r.push("roots", self.roots.join(";"));
        r.push("has_minus_one", self.has_minus_one);
        if command == "check" {
            match &self.criterion {
                Some(c) => push_verdict(&mut r, "criterion", c),
                None => r.push("criterion", "none"),
            }
            match &self.theorem {
                Some(t) => push_verdict(&mut r, "theorem", t),
                None => r.push("theorem", "none"),
            }
        }
        push_oracle(&mut r, &self.oracle);
        if command == "check" {
            r.push("consistent", self.contradiction().is_none());
            r.push("exit_code", self.exit_code());
        } else {
            r.push("exit_code", status_exit_code(self.oracle.verdict.status));
        }
        r
    }

    pub fn text(&self, command: &str) -> String {
        let mut out = format!(
            "mask: degree {}, {} [{}], {} arithmetic\n",
            self.roots.len(),
            if self.input == "roots" { "roots" } else { "recovered roots" },
            self.roots.join(", "),
            self.arithmetic
        );
        if command == "check" {
            match &self.criterion {
                Some(c) => out += &format!("criterion: {}\n", verdict_text(c)),
                None => out += "criterion: none applies\n",
            }
            if let Some(t) = self.theorem.as_ref().filter(|t| Some(**t) != self.criterion) {
                out += &format!("theorem: {}\n", verdict_text(t));
            }
        }
        let o = &self.oracle;
        out += &format!(
            "oracle: {} (max T = {}, certified bound {}, {} evaluations)\n",
            o.verdict.status, o.certificate.max_estimate, o.certificate.certified_upper_bound, o.certificate.grid_size
        );
        out
    }
}

pub fn witness_text(v: &Verdict) -> String {
    match v.witness {
        None => "none".into(),
        Some(Witness::Angle(phi)) => format!("phi={phi}"),
        Some(Witness::Index(k)) if v.method == Method::EvenDifferences => format!("k={k}"),
        Some(Witness::Index(i)) => format!("root={i}"),
    }
}

fn verdict_text(v: &Verdict) -> String {
    let mut s = format!("{} {} (margin {}", v.method, v.status, v.margin);
    if v.witness.is_some() {
        s += &format!(", witness {}", witness_text(v));
    }
    if v.boundary {
        s += ", boundary";
    }
    s + ")"
}

fn push_verdict(r: &mut Report, prefix: &str, v: &Verdict) {
    r.push(prefix, v.method);
    r.push(&format!("{prefix}_status"), v.status);
    r.push(&format!("{prefix}_margin"), v.margin);
    r.push(&format!("{prefix}_witness"), witness_text(v));
    r.push(&format!("{prefix}_boundary"), v.boundary);
}

fn push_oracle(r: &mut Report, o: &OracleRun) {
    r.push("oracle_status", o.verdict.status);
    r.push("oracle_margin", o.verdict.margin);
    r.push("oracle_max_estimate", o.certificate.max_estimate);
    r.push("oracle_upper_bound", o.certificate.certified_upper_bound);
    r.push("oracle_argmax", o.certificate.argmax);
    r.push("oracle_evaluations", o.certificate.grid_size);
    r.push("oracle_tol", o.tol);
}
