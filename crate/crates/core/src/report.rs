//! Named boolean findings with witnesses, shared by all verifiers.

use serde::Serialize;

/// How a finding participates in the exit status of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FindingKind {
    /// Must hold for the run to pass.
    Asserted,
    /// A hypothesis of the statement being checked; a false hypothesis is a
    /// usage problem, not a refutation.
    Hypothesis,
    /// Reported for information only.
    Info,
}

#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub name: String,
    pub value: bool,
    pub kind: FindingKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// A report on one code or one verification run.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub descriptor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub findings: Vec<Finding>,
}

impl PropertyReport {
    pub fn new(descriptor: impl Into<String>) -> PropertyReport {
        PropertyReport {
            descriptor: descriptor.into(),
            seed: None,
            findings: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> PropertyReport {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, name: &str, value: bool, kind: FindingKind, witness: Option<String>) {
        self.findings.push(Finding {
            name: name.to_string(),
            value,
            kind,
            witness,
        });
    }

    pub fn assert_finding(&mut self, name: &str, value: bool, witness: Option<String>) {
        self.push(name, value, FindingKind::Asserted, witness);
    }

    pub fn hypothesis(&mut self, name: &str, value: bool, witness: Option<String>) {
        self.push(name, value, FindingKind::Hypothesis, witness);
    }

    pub fn info(&mut self, name: &str, value: bool, witness: Option<String>) {
        self.push(name, value, FindingKind::Info, witness);
    }

    pub fn all_asserted_hold(&self) -> bool {
        self.findings
            .iter()
            .filter(|f| f.kind == FindingKind::Asserted)
            .all(|f| f.value)
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.findings
            .iter()
            .filter(|f| f.kind == FindingKind::Hypothesis)
            .all(|f| f.value)
    }

    pub fn failed_findings(&self) -> Vec<&Finding> {
        self.findings
            .iter()
            .filter(|f| !f.value && f.kind != FindingKind::Info)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("report: {}\n", self.descriptor));
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed: {seed}\n"));
        }
        for f in &self.findings {
            let tag = match f.kind {
                FindingKind::Asserted => "assert",
                FindingKind::Hypothesis => "hypothesis",
                FindingKind::Info => "info",
            };
            out.push_str(&format!(
                "  [{}] {} = {}{}\n",
                tag,
                f.name,
                f.value,
                f.witness
                    .as_deref()
                    .map(|w| format!("  ({w})"))
                    .unwrap_or_default()
            ));
        }
        out
    }
}
