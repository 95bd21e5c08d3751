use core::fmt;

/// Outcome of a criterion or of the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "HOLDS",
            Status::Fails => "FAILS",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which decision procedure produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Necessary condition: a normalized mask satisfying the inequality
    /// vanishes at `z = -1`.
    MinusOneNecessity,
    /// Degree 2, roots `{-1, z₂}`: exact.
    Degree2,
    /// Degree 3, roots `{-1, z₁, z₂}`: exact.
    Degree3,
    /// Degree 3, real roots `{-1, x₁, x₂}`: exact cubic inequality.
    Degree3Real,
    /// All roots nonpositive: sufficient.
    Nonpositive,
    /// Nonnegative even differences of the symmetric means: sufficient.
    EvenDifferences,
    /// Certified maximum of `T` on the circle.
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::MinusOneNecessity => "minus-one-necessity",
            Method::Degree2 => "degree2",
            Method::Degree3 => "degree3",
            Method::Degree3Real => "degree3-real",
            Method::Nonpositive => "nonpositive",
            Method::EvenDifferences => "even-differences",
            Method::Oracle => "oracle",
        }
    }

    /// Exact criteria are necessary and sufficient and never inconclusive.
    pub fn is_exact(self) -> bool {
        matches!(self, Method::Degree2 | Method::Degree3 | Method::Degree3Real)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What explains a failing or inconclusive outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Witness {
    /// Angle `φ*` in `[0, π)` at which `T` is largest.
    Angle(f64),
    /// Index of the first violated condition (difference order `k`, or
    /// root position).
    Index(usize),
}

/// Result of running one criterion.
///
/// `margin >= 0` means the inequality is satisfied by the criterion's
/// measure. In floating-point mode a margin inside `[-tol, tol]` is
/// reported as satisfied and flagged as `boundary`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub margin: f64,
    pub witness: Option<Witness>,
    pub method: Method,
    pub boundary: bool,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}
