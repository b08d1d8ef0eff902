use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Explored-node budget for the exact searches. Node counts, not wall time,
/// keep runs reproducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    /// Emit a progress line (at `debug` level) every this many nodes; 0 disables.
    pub report_interval: u64,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 50_000_000;

    pub fn new(max_nodes: u64) -> Result<Self> {
        if max_nodes == 0 {
            return Err(Error::param("search budget must allow at least one node"));
        }
        Ok(SearchBudget { max_nodes, report_interval: 0 })
    }

    pub fn with_report_interval(mut self, every: u64) -> Self {
        self.report_interval = every;
        self
    }

    pub(crate) fn meter(&self, label: &'static str) -> NodeMeter {
        NodeMeter { budget: *self, used: 0, label }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: Self::DEFAULT_NODES, report_interval: 0 }
    }
}

pub(crate) struct NodeMeter {
    budget: SearchBudget,
    used: u64,
    label: &'static str,
}

impl NodeMeter {
    /// Counts one node; `false` once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        self.used += 1;
        if self.budget.report_interval > 0 && self.used.is_multiple_of(self.budget.report_interval) {
            log::debug!("{}: {} nodes explored", self.label, self.used);
        }
        self.used <= self.budget.max_nodes
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.used > self.budget.max_nodes
    }
}
