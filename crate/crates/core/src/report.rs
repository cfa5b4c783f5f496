use serde::{Deserialize, Serialize};

/// Outcome of a finite verification sweep.
///
/// Parameter tuples are stored in sorted order so that reports built from
/// any partition of the parameter box compare equal. An expected exception
/// matches every failure tuple that starts with it, so `[17, 2]` covers
/// `[17, 2, 1, 3]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lemma_id: String,
    pub range_descr: String,
    pub points_checked: u64,
    pub failures: Vec<Vec<i64>>,
    pub expected_exceptions: Vec<Vec<i64>>,
    /// Free-form observations, e.g. the exact values seen at an exception.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(lemma_id: impl Into<String>, range_descr: impl Into<String>) -> Self {
        VerificationReport {
            lemma_id: lemma_id.into(),
            range_descr: range_descr.into(),
            points_checked: 0,
            failures: Vec::new(),
            expected_exceptions: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_exceptions(mut self, exceptions: &[&[i64]]) -> Self {
        self.expected_exceptions = exceptions.iter().map(|e| e.to_vec()).collect();
        self.expected_exceptions.sort();
        self
    }

    /// Records one evaluated point.
    pub fn record(&mut self, params: &[i64], holds: bool) {
        self.points_checked += 1;
        if !holds {
            self.failures.push(params.to_vec());
        }
    }

    pub fn is_expected(&self, failure: &[i64]) -> bool {
        self.expected_exceptions
            .iter()
            .any(|e| failure.starts_with(e))
    }

    pub fn unexpected_failures(&self) -> Vec<&Vec<i64>> {
        self.failures
            .iter()
            .filter(|f| !self.is_expected(f))
            .collect()
    }

    /// Expected exceptions that no failure actually hit.
    pub fn unobserved_exceptions(&self) -> Vec<&Vec<i64>> {
        self.expected_exceptions
            .iter()
            .filter(|e| !self.failures.iter().any(|f| f.starts_with(e)))
            .collect()
    }

    /// `failures ⊆ expected_exceptions`.
    pub fn passed(&self) -> bool {
        self.unexpected_failures().is_empty()
    }

    /// Failures are exactly the expected exceptions: none missing, none extra.
    pub fn matches_expectations(&self) -> bool {
        self.passed() && self.unobserved_exceptions().is_empty()
    }

    /// Combines two reports over disjoint parts of the same parameter box.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.points_checked += other.points_checked;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
        self.normalize();
        self
    }

    pub fn normalize(&mut self) {
        self.failures.sort();
        self.failures.dedup();
        self.expected_exceptions.sort();
        self.expected_exceptions.dedup();
        self.notes.sort();
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        format!(
            "{status} {} [{}]: {} points, {} failures ({} expected)",
            self.lemma_id,
            self.range_descr,
            self.points_checked,
            self.failures.len(),
            self.failures.len() - self.unexpected_failures().len(),
        )
    }
}
