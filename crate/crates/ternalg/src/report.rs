//! Checker outcomes.

use std::fmt;

use crate::linalg::{Tensor3, Vector};
use crate::scalar::QuadScalar;

/// Exact residual of a violated law at one index tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    /// One coefficient of a tensor-valued identity.
    Scalar(QuadScalar),
    Vector(Vector),
    Tensor(Tensor3),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Scalar(x) => x.is_zero(),
            Residual::Vector(v) => v.is_zero(),
            Residual::Tensor(t) => t.is_zero(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Scalar(x) => write!(f, "{x}"),
            Residual::Vector(v) => write!(f, "{v}"),
            Residual::Tensor(t) => write!(f, "{t}"),
        }
    }
}

/// A law that failed at a basis tuple. `indices` are 1-based and follow the
/// variable order of the law's statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub indices: Vec<usize>,
    pub residual: Residual,
}

/// A sub-law evaluated by a checker: stable name plus the short label of the
/// identity it encodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawId {
    pub name: String,
    pub tag: String,
}

/// Outcome of a checker: every sub-law that was evaluated and every violation
/// found. A report passes iff it has no violations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub checked: Vec<LawId>,
    pub violations: Vec<Violation>,
}

impl LawReport {
    pub fn new(law: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            checked: Vec::new(),
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Registers a sub-law as evaluated.
    pub fn declare(&mut self, name: impl Into<String>, tag: impl Into<String>) {
        let name = name.into();
        if !self.checked.iter().any(|l| l.name == name) {
            self.checked.push(LawId {
                name,
                tag: tag.into(),
            });
        }
    }

    /// Records a violation unless the residual vanishes.
    pub fn check(&mut self, law: &str, indices: Vec<usize>, residual: Residual) {
        if !residual.is_zero() {
            self.violations.push(Violation {
                law: law.to_string(),
                indices,
                residual,
            });
        }
    }

    /// Appends the sub-laws and violations of `other`.
    pub fn absorb(&mut self, other: LawReport) {
        for l in other.checked {
            self.declare(l.name, l.tag);
        }
        self.violations.extend(other.violations);
    }

    /// Prepends `prefix` to every sub-law name.
    pub fn prefixed(mut self, prefix: &str) -> LawReport {
        for l in &mut self.checked {
            l.name = format!("{prefix}{}", l.name);
        }
        for v in &mut self.violations {
            v.law = format!("{prefix}{}", v.law);
        }
        self
    }

    pub fn violations_of<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a Violation> {
        self.violations.iter().filter(move |v| v.law == law)
    }

    /// Names of failing sub-laws, in evaluation order.
    pub fn failing_laws(&self) -> Vec<&str> {
        self.checked
            .iter()
            .map(|l| l.name.as_str())
            .filter(|n| self.violations.iter().any(|v| v.law == *n))
            .collect()
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn has_law(&self, name: &str) -> bool {
        self.checked.iter().any(|l| l.name == name)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        writeln!(f, "{}: {verdict}", self.law)?;
        for l in &self.checked {
            let n = self.violations_of(&l.name).count();
            writeln!(f, "  {} [{}]: {n} violation(s)", l.name, l.tag)?;
        }
        Ok(())
    }
}
