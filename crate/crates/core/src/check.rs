//! Named claims with a pass/fail outcome, grouped into reports.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One checked statement at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub n: Option<usize>,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report { suite: suite.into(), claims: Vec::new() }
    }

    pub fn push(&mut self, name: &str, n: Option<usize>, holds: bool, detail: impl Into<String>) {
        self.claims.push(Claim { name: name.into(), n, holds, detail: detail.into() });
    }

    pub fn extend(&mut self, other: Report) {
        self.claims.extend(other.claims);
    }

    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.holds)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.holds { "PASS " } else { "FAIL " })?;
        f.write_str(&self.name)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.claims {
            writeln!(f, "{c}")?;
        }
        let passed = self.claims.iter().filter(|c| c.holds).count();
        write!(f, "{passed}/{} claims hold", self.claims.len())
    }
}
