use std::fmt;

use serde::Serialize;

/// One failed instance of a law, with the carrier indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<usize>,
    pub detail: String,
}

/// Outcome of an exhaustive check. An empty violation list means the check passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub instances: u64,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            instances: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn tick(&mut self) {
        self.instances += 1;
    }

    pub(crate) fn fail(&mut self, law: &str, witness: &[usize], detail: impl Into<String>) {
        self.violations.push(Violation {
            law: law.to_string(),
            witness: witness.to_vec(),
            detail: detail.into(),
        });
    }

    /// Violations of `law` only.
    pub fn violations_of<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.law == law)
    }

    pub fn merge(&mut self, other: Report) {
        self.instances += other.instances;
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: pass ({} instances)", self.name, self.instances)
        } else {
            write!(
                f,
                "{}: FAIL ({} of {} instances)",
                self.name,
                self.violations.len(),
                self.instances
            )?;
            for v in self.violations.iter().take(5) {
                write!(f, "\n  {} at {:?}: {}", v.law, v.witness, v.detail)?;
            }
            Ok(())
        }
    }
}
