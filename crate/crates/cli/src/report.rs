//! Structured report emitted by every command.
//!
//! The JSON form is the source of truth; human output is rendered from the
//! same value. Timings are only included when asked for, so that reports of
//! identical runs are byte-identical.

use finsemi_core::algebra::{AxiomReport, ElementReport};
use finsemi_core::enumeration::{ClassificationVerdict, ScanReport, SearchConstraints};
use finsemi_core::Table;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Normalized command line; options that do not affect results (`--jobs`,
    /// `--json`, `--timings`) are left out.
    pub command: Vec<String>,
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<u64>,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub value: String,
}

impl Verdict {
    pub fn new(name: impl Into<String>, value: impl ToString) -> Self {
        Verdict {
            name: name.into(),
            value: value.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiringTables {
    pub add: Table,
    pub mul: Table,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Check {
        order: usize,
        axioms: AxiomReport,
        /// Present when the axioms hold.
        elements: Option<ElementReport>,
    },
    Congruences {
        order: usize,
        /// Block labels (smallest element of each block) per congruence.
        congruences: Vec<Vec<usize>>,
        congruence_simple: bool,
    },
    Simple {
        congruence_simple: bool,
        ideal_simple: bool,
        bi_ideal_simple: bool,
    },
    Classify {
        verdict: ClassificationVerdict,
    },
    Construct {
        algebra: String,
        order: usize,
        axioms_ok: bool,
        bi_absorbing: Option<usize>,
        /// For `end1`: the endomorphism behind each element.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        maps: Option<Vec<Vec<usize>>>,
    },
    Enumerate {
        order: usize,
        constraints: SearchConstraints,
        count: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        semirings: Option<Vec<SemiringTables>>,
    },
    Scan {
        report: ScanReport,
    },
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            out.push_str(&format!("{} = {}\n", v.name, v.value));
        }
        if let Payload::Enumerate {
            semirings: Some(list),
            ..
        } = &self.payload
        {
            for (i, s) in list.iter().enumerate() {
                out.push_str(&format!("#{i}\n"));
                out.push_str(&format!("  add {:?}\n", s.add.rows()));
                out.push_str(&format!("  mul {:?}\n", s.mul.rows()));
            }
        }
        if let Some(ms) = self.timings_ms {
            out.push_str(&format!("elapsed = {ms} ms\n"));
        }
        out
    }
}
