//! Named-check verification reports.
//!
//! Every quantitative check the crate runs is recorded as a [`CheckEntry`]:
//! expected vs computed, absolute and relative error, a pass flag, and a
//! provenance tag saying where the expected value comes from. Reports are
//! sorted by entry name so repeated runs are byte-identical.

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Asserted in the source material; reproduced here.
    Paper,
    /// Immediate from the definition.
    Trivial,
    /// Computed by an independent oracle in this crate.
    Derived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Paper => "paper",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckEntry {
    pub name: String,
    pub expected: f64,
    pub computed: f64,
    pub abs_error: f64,
    pub rel_error: f64,
    pub pass: bool,
    pub provenance: Provenance,
    pub note: String,
}

impl CheckEntry {
    /// Build an entry, passing when either the absolute or the relative
    /// deviation is within `tolerance`. For `expected == 0` the relative
    /// error falls back to the absolute one (keeps reports free of
    /// non-finite fields).
    pub fn evaluate(
        name: impl Into<String>,
        expected: f64,
        computed: f64,
        tolerance: f64,
        provenance: Provenance,
        note: impl Into<String>,
    ) -> Self {
        let abs_error = (computed - expected).abs();
        let rel_error = if expected != 0.0 {
            abs_error / expected.abs()
        } else {
            abs_error
        };
        CheckEntry {
            name: name.into(),
            expected,
            computed,
            abs_error,
            rel_error,
            pass: abs_error <= tolerance || rel_error <= tolerance,
            provenance,
            note: note.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub tolerance: f64,
    pub entries: Vec<CheckEntry>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, tolerance: f64) -> Self {
        VerificationReport {
            suite: suite.into(),
            tolerance,
            entries: Vec::new(),
            wall_time_ms: 0,
        }
    }

    /// Deterministic ordering: entries sorted by stable name.
    pub fn sort_entries(&mut self) {
        self.entries.sort_by(|a, b| a.name.cmp(&b.name));
    }

    /// True when every non-informational entry passes. Audit entries (the
    /// claims audit suite, or `audit/`-prefixed names inside the combined
    /// suite) report on the source material and never gate a run.
    pub fn passed(&self) -> bool {
        self.entries
            .iter()
            .filter(|e| self.suite != "audit" && !e.name.starts_with("audit/"))
            .all(|e| e.pass)
    }

    pub fn count_passed(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_logic() {
        let e = CheckEntry::evaluate("a", 1.0, 1.0 + 1e-12, 1e-10, Provenance::Trivial, "");
        assert!(e.pass);
        let e = CheckEntry::evaluate("b", 1.0, 1.1, 1e-10, Provenance::Trivial, "");
        assert!(!e.pass);
        // relative rescue for large magnitudes
        let e = CheckEntry::evaluate("c", 1e12, 1e12 + 1.0, 1e-10, Provenance::Derived, "");
        assert!(e.pass && e.abs_error == 1.0);
        // expected == 0 keeps rel_error finite
        let e = CheckEntry::evaluate("d", 0.0, 1e-14, 1e-10, Provenance::Derived, "");
        assert!(e.pass && e.rel_error == 1e-14);
    }

    #[test]
    fn audit_entries_never_gate() {
        let mut r = VerificationReport::new("audit", 1e-8);
        r.entries.push(CheckEntry::evaluate(
            "zeta3_fpi",
            1.2,
            -0.045,
            1e-8,
            Provenance::Paper,
            "",
        ));
        assert!(!r.entries[0].pass);
        assert!(r.passed());

        let mut all = VerificationReport::new("all", 1e-10);
        all.entries.push(CheckEntry::evaluate(
            "audit/zeta3_fpi",
            1.2,
            -0.045,
            1e-8,
            Provenance::Paper,
            "",
        ));
        all.entries.push(CheckEntry::evaluate(
            "series/ok",
            1.0,
            1.0,
            1e-10,
            Provenance::Trivial,
            "",
        ));
        assert!(all.passed());
        all.entries.push(CheckEntry::evaluate(
            "series/bad",
            1.0,
            2.0,
            1e-10,
            Provenance::Trivial,
            "",
        ));
        assert!(!all.passed());
    }

    #[test]
    fn sorting_is_stable_by_name() {
        let mut r = VerificationReport::new("x", 1e-10);
        for name in ["b", "a", "c"] {
            r.entries.push(CheckEntry::evaluate(
                name,
                0.0,
                0.0,
                1e-10,
                Provenance::Trivial,
                "",
            ));
        }
        r.sort_entries();
        let names: Vec<_> = r.entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, ["a", "b", "c"]);
    }
}
