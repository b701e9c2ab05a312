use std::fmt;

/// Slack below which a verdict still counts as a pass.
pub const PASS_TOLERANCE: f64 = 1e-9;

/// Outcome of one inequality or identity check.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    /// `rhs - lhs`, in log space where the check is multiplicative.
    pub margin: f64,
    pub notes: String,
}

impl Verdict {
    /// Pass iff `margin >= -PASS_TOLERANCE`; a NaN margin fails.
    pub fn from_margin(name: impl Into<String>, margin: f64, notes: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            pass: margin >= -PASS_TOLERANCE,
            margin,
            notes: notes.into(),
        }
    }

    /// `lhs <= rhs`.
    pub fn le(name: impl Into<String>, lhs: f64, rhs: f64, notes: impl Into<String>) -> Self {
        Self::from_margin(name, rhs - lhs, notes)
    }

    /// An exact check with no meaningful numeric slack.
    pub fn exact(name: impl Into<String>, holds: bool, notes: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            pass: holds,
            margin: if holds { 0.0 } else { -1.0 },
            notes: notes.into(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} (margin {:.6e}){}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.margin,
            if self.notes.is_empty() { String::new() } else { format!(": {}", self.notes) }
        )
    }
}

/// A verdict or an explicit skip.
#[derive(Clone, Debug, PartialEq)]
pub enum Check {
    Verdict(Verdict),
    Skipped { name: String, reason: String },
}

impl Check {
    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check::Skipped {
            name: name.into(),
            reason: reason.into(),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Check::Verdict(v) => &v.name,
            Check::Skipped { name, .. } => name,
        }
    }

    /// `Some(pass)` for verdicts, `None` for skips.
    pub fn passed(&self) -> Option<bool> {
        match self {
            Check::Verdict(v) => Some(v.pass),
            Check::Skipped { .. } => None,
        }
    }

    pub fn verdict(&self) -> Option<&Verdict> {
        match self {
            Check::Verdict(v) => Some(v),
            Check::Skipped { .. } => None,
        }
    }
}

impl From<Verdict> for Check {
    fn from(v: Verdict) -> Self {
        Check::Verdict(v)
    }
}
