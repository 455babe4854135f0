//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use peakalg::check::Report;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    /// The statement being checked.
    pub anchor: String,
    pub n: Option<usize>,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: (usize, usize),
    pub seed: u64,
    pub claims: Vec<ClaimRecord>,
}

fn slug(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
        } else if !out.ends_with('-') && !out.is_empty() {
            out.push('-');
        }
    }
    out.trim_end_matches('-').to_string()
}

impl SuiteReport {
    pub fn new(suite: &str, n: (usize, usize), seed: u64) -> SuiteReport {
        SuiteReport { suite: suite.into(), n, seed, claims: Vec::new() }
    }

    /// Adds every claim of `r`, namespaced by `suite`.
    pub fn absorb(&mut self, suite: &str, r: Report) {
        for c in r.claims {
            let n = c.n.map(|n| format!("n{n:02}")).unwrap_or_else(|| "all".into());
            let id = format!("{suite}/{}/{n}", slug(&c.name));
            self.claims.push(ClaimRecord { id, anchor: c.name, n: c.n, pass: c.holds, detail: c.detail });
        }
    }

    /// Sorts by claim id and disambiguates repeated ids.
    pub fn finish(&mut self) {
        self.claims.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.anchor.cmp(&b.anchor)));
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        for c in &mut self.claims {
            let k = seen.entry(c.id.clone()).or_insert(0);
            *k += 1;
            if *k > 1 {
                c.id = format!("{}#{k}", c.id);
            }
        }
    }

    pub fn passed(&self) -> usize {
        self.claims.iter().filter(|c| c.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {} n={}..{} seed={}", self.suite, self.n.0, self.n.1, self.seed);
        for c in &self.claims {
            let _ = write!(s, "{} {} [{}]", if c.pass { "PASS" } else { "FAIL" }, c.id, c.anchor);
            if !c.detail.is_empty() {
                let _ = write!(s, " {}", c.detail);
            }
            s.push('\n');
        }
        let _ = writeln!(s, "{}/{} claims pass", self.passed(), self.claims.len());
        s
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            report: &'a SuiteReport,
            passed: usize,
            total: usize,
        }
        let out = Out { report: self, passed: self.passed(), total: self.claims.len() };
        serde_json::to_string_pretty(&out).expect("report serializes") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_sorted_and_unique() {
        let mut r = Report::new("x");
        r.push("b claim", Some(10), true, "");
        r.push("a claim (2)", Some(3), false, "witness");
        r.push("b claim", Some(10), true, "");
        let mut s = SuiteReport::new("x", (3, 10), 1);
        s.absorb("x", r);
        s.finish();
        let ids: Vec<&str> = s.claims.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["x/a-claim-2/n03", "x/b-claim/n10", "x/b-claim/n10#2"]);
        assert!(!s.all_pass());
        assert!(s.to_text().contains("FAIL x/a-claim-2/n03 [a claim (2)] witness"));
        let v: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(v["passed"], 2);
        assert_eq!(v["claims"][0]["anchor"], "a claim (2)");
    }
}
