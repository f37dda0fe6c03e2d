//! Named checks and the reports that group them.

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    pub paper_ref: String,
}

impl Check {
    /// Passes when the two values serialize identically.
    pub fn equal(name: impl Into<String>, expected: impl Serialize, actual: impl Serialize, reference: &str) -> Self {
        let expected = serde_json::to_value(expected).expect("serializable");
        let actual = serde_json::to_value(actual).expect("serializable");
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Self { name: name.into(), status, expected, actual, paper_ref: reference.to_string() }
    }

    pub fn holds(name: impl Into<String>, actual: bool, reference: &str) -> Self {
        Self::equal(name, true, actual, reference)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One line for the text format.
    pub fn line(&self, report: &str) -> String {
        let tag = if self.passed() { "pass" } else { "FAIL" };
        format!("[{tag}] {report}/{}: expected {} actual {}", self.name, self.expected, self.actual)
    }

    pub fn failure_record(&self, report: &str) -> Value {
        json!({ "report": report, "check": self.name, "expected": self.expected, "actual": self.actual })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub report: String,
    pub checks: Vec<Check>,
    /// Extra human-readable lines shown in the text format only.
    #[serde(skip)]
    pub summary: Vec<String>,
}

impl Report {
    pub fn new(name: &str) -> Self {
        Self { report: name.to_string(), checks: Vec::new(), summary: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Merges several reports into one, prefixing check names with the report name.
    pub fn combined(name: &str, parts: Vec<Report>) -> Self {
        let mut out = Self::new(name);
        for p in parts {
            out.summary.extend(p.summary.iter().cloned());
            for mut c in p.checks {
                c.name = format!("{}/{}", p.report, c.name);
                out.checks.push(c);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        // serde_json maps are ordered by key, so the output is stable.
        let value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = self.checks.iter().map(|c| c.line(&self.report)).collect();
        lines.extend(self.summary.iter().cloned());
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_compares_serialized_values() {
        assert!(Check::equal("a", 3, 3, "r").passed());
        assert!(!Check::equal("a", vec![1, 2], vec![2, 1], "r").passed());
        assert!(Check::holds("b", true, "r").passed());
    }

    #[test]
    fn json_keys_are_sorted() {
        let mut r = Report::new("x");
        r.push(Check::equal("c", 1, 1, "ref"));
        let s = r.to_json();
        let keys: Vec<usize> = ["\"actual\"", "\"expected\"", "\"name\"", "\"paper_ref\"", "\"status\""]
            .iter()
            .map(|k| s.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(s.find("\"checks\"").unwrap() < s.find("\"report\"").unwrap());
    }

    #[test]
    fn combined_prefixes_names() {
        let mut a = Report::new("a");
        a.push(Check::holds("one", true, "r"));
        let c = Report::combined("all", vec![a]);
        assert_eq!(c.checks[0].name, "a/one");
    }
}
