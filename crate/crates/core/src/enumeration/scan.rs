use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::table::Table;

use super::{classify, ClassificationVerdict, ConjectureStatus, Enumerator, SearchConstraints};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanInstance {
    pub order: usize,
    pub add: Table,
    pub mul: Table,
    pub verdict: ClassificationVerdict,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub order: usize,
    pub total: usize,
    pub t4: usize,
    pub t8: usize,
    pub fields: usize,
    pub v_of_groups: usize,
    pub counterexamples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub max_order: usize,
    pub orders: Vec<OrderSummary>,
    pub instances: Vec<ScanInstance>,
    pub counterexamples: Vec<ScanInstance>,
}

impl ScanReport {
    pub fn has_counterexample(&self) -> bool {
        !self.counterexamples.is_empty()
    }
}

/// Enumerates every congruence-simple semiring with an absorbing element and
/// no non-trivial nilpotents of order `2..=max_order` and classifies it.
pub fn conjecture_scan(max_order: usize) -> Result<ScanReport> {
    conjecture_scan_with(max_order, None, false)
}

pub fn conjecture_scan_with(
    max_order: usize,
    jobs: Option<usize>,
    allow_long_runs: bool,
) -> Result<ScanReport> {
    let mut orders = Vec::new();
    let mut instances = Vec::new();
    for n in 2..=max_order {
        let found = Enumerator::new(n, SearchConstraints::classification())
            .jobs(jobs)
            .allow_long_runs(allow_long_runs)
            .run()?;
        let mut summary = OrderSummary {
            order: n,
            ..Default::default()
        };
        for s in found {
            let verdict = classify(&s)?;
            summary.total += 1;
            match verdict.conjecture_status {
                ConjectureStatus::InListT4 => summary.t4 += 1,
                ConjectureStatus::InListT8 => summary.t8 += 1,
                ConjectureStatus::InListField { .. } => summary.fields += 1,
                ConjectureStatus::InListVG { .. } => summary.v_of_groups += 1,
                ConjectureStatus::Counterexample => summary.counterexamples += 1,
            }
            instances.push(ScanInstance {
                order: n,
                add: s.add_table().clone(),
                mul: s.mul_table().clone(),
                verdict,
            });
        }
        orders.push(summary);
    }
    let counterexamples = instances
        .iter()
        .filter(|i| i.verdict.conjecture_status.is_counterexample())
        .cloned()
        .collect();
    Ok(ScanReport {
        max_order,
        orders,
        instances,
        counterexamples,
    })
}
