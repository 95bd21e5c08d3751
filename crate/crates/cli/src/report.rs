//! Line-oriented `key=value` reports.
//!
//! Keys are lowercase ASCII with `_`; values run to the end of the line and
//! never contain a line break. Keys keep insertion order.

use std::fmt;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error("line {line}: missing `=`")]
    MissingSeparator { line: usize },
    #[error("line {line}: invalid key `{key}`")]
    InvalidKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },
}

fn valid_key(key: &str) -> bool {
    !key.is_empty() && key.bytes().all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `key=value`, replacing line breaks in `value` by spaces.
    ///
    /// # Panics
    /// If `key` is malformed or already present.
    pub fn push(&mut self, key: &str, value: impl fmt::Display) {
        assert!(valid_key(key), "malformed report key {key:?}");
        assert!(self.get(key).is_none(), "duplicate report key {key:?}");
        let value = value.to_string().replace(['\n', '\r'], " ");
        self.entries.push((key.to_string(), value));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    /// Parses rendered output; blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, ReportError> {
        let mut report = Report::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ReportError::MissingSeparator { line: line_no })?;
            if !valid_key(key) {
                return Err(ReportError::InvalidKey { line: line_no, key: key.to_string() });
            }
            if report.get(key).is_some() {
                return Err(ReportError::DuplicateKey { line: line_no, key: key.to_string() });
            }
            report.entries.push((key.to_string(), value.to_string()));
        }
        Ok(report)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}
