use std::fmt;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::subspace::Subspace;

/// Ordered `key = value` lines with unique keys.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Appends a line. Panics if `key` is already present.
    pub fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        let key = key.into();
        assert!(self.get(&key).is_none(), "duplicate report key {key:?}");
        self.entries.push((key, value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(k, _)| k.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}

/// Series terms joined by ` | `.
pub fn format_series(series: &[Subspace]) -> String {
    series
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" | ")
}

/// The invariant table of a Leibniz algebra. Fails with
/// [`crate::Error::NotLeibniz`] if the identity does not hold.
pub fn invariants_report(alg: &Algebra) -> Result<Report> {
    let leib = alg.leibniz_kernel()?;
    let mut r = Report::new();
    r.push("dim", alg.dim());
    r.push("is_lie", alg.is_lie());
    r.push("leib", leib);
    r.push("left_center", alg.left_center());
    r.push("right_center", alg.right_center());
    r.push("center", alg.center());
    r.push("derived", alg.derived_subalgebra());
    r.push("lower_series", format_series(&alg.lower_central_series()));
    r.push("upper_series", format_series(&alg.upper_central_series()));
    r.push("ncl", alg.nilpotency_class());
    Ok(r)
}
