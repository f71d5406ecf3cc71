use std::fmt;

use crate::io::format_number;

/// One named residual with its tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Named residuals with pass/fail verdicts, plus auxiliary reported values
/// (recovered parameters, fit results) and free-form notes.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CheckReport {
    checks: Vec<Check>,
    overall: bool,
    pub values: Vec<(String, f64)>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { checks: Vec::new(), overall: true, values: Vec::new(), notes: Vec::new() }
    }

    /// Record `residual ≤ tolerance`; NaN residuals fail.
    pub fn push(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) -> bool {
        let residual = residual.abs();
        let pass = residual <= tolerance;
        self.overall &= pass;
        self.checks.push(Check { name: name.into(), residual, tolerance, pass });
        pass
    }

    /// Record a boolean condition, with `margin` reported as residual
    /// (0 when the condition held).
    pub fn push_condition(&mut self, name: impl Into<String>, holds: bool, margin: f64) -> bool {
        let residual = if holds { 0.0 } else { margin.abs().max(f64::MIN_POSITIVE) };
        let tolerance = f64::MIN_POSITIVE;
        self.overall &= holds;
        self.checks.push(Check { name: name.into(), residual, tolerance, pass: holds });
        holds
    }

    pub fn value(&mut self, name: impl Into<String>, v: f64) {
        self.values.push((name.into(), v));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn merge(&mut self, prefix: &str, other: CheckReport) {
        for c in other.checks {
            self.overall &= c.pass;
            self.checks.push(Check { name: format!("{prefix}{}", c.name), ..c });
        }
        self.values.extend(other.values.into_iter().map(|(n, v)| (format!("{prefix}{n}"), v)));
        self.notes.extend(other.notes);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }
    pub fn overall(&self) -> bool {
        self.overall
    }
    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
    pub fn get_value(&self, name: &str) -> Option<f64> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }
    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

impl fmt::Display for CheckReport {
    /// `name residual tolerance PASS|FAIL` per check, then values, notes
    /// (prefixed `#`) and the overall verdict.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {} {} {}",
                c.name,
                format_number(c.residual),
                format_number(c.tolerance),
                if c.pass { "PASS" } else { "FAIL" }
            )?;
        }
        for (n, v) in &self.values {
            writeln!(f, "# value {n} {}", format_number(*v))?;
        }
        for n in &self.notes {
            writeln!(f, "# note {n}")?;
        }
        writeln!(f, "overall {}", if self.overall { "PASS" } else { "FAIL" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_is_conjunction() {
        let mut r = CheckReport::new();
        assert!(r.overall());
        r.push("a", 1e-9, 1e-8);
        assert!(r.overall());
        r.push("b", 2.0, 1.0);
        assert!(!r.overall());
        assert!(!r.get("b").unwrap().pass);
        r.push("c", f64::NAN, 1.0);
        assert!(!r.get("c").unwrap().pass);
    }

    #[test]
    fn text_layout() {
        let mut r = CheckReport::new();
        r.push("x", 0.0, 0.5);
        assert_eq!(r.to_string(), "x 0 0.5 PASS\noverall PASS\n");
    }
}
