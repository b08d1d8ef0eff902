use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::candidates::Candidates;
use super::catalog::search_hints;
use crate::budget::{NodeMeter, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::packing::CopySystem;

/// Outcome of [`multicolor_turan_exact`].
#[derive(Clone, Debug)]
pub struct ExactResult {
    /// Size of the best system found.
    pub value: usize,
    pub witness: CopySystem,
    /// Whether `value` is proved maximum. `false` means the budget ran out
    /// and `value` is only a lower bound.
    pub optimal: bool,
    pub nodes_explored: u64,
    /// Upper bound in force when the search stopped.
    pub upper_bound: usize,
    /// Where the final witness came from.
    pub provenance: String,
}

impl ExactResult {
    pub fn validity_flags(&self) -> Vec<String> {
        if self.optimal {
            Vec::new()
        } else {
            vec![format!("budget exhausted: value is a lower bound, upper bound {}", self.upper_bound)]
        }
    }
}

impl Serialize for ExactResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ExactResult", 7)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("optimal", &self.optimal)?;
        st.serialize_field("provenance", &self.provenance)?;
        st.serialize_field("upper_bound", &self.upper_bound)?;
        st.serialize_field("nodes_explored", &self.nodes_explored)?;
        st.serialize_field("validity_flags", &self.validity_flags())?;
        st.serialize_field("witness", &self.witness)?;
        st.end()
    }
}

pub(crate) fn check_pair(f: &Graph, g: &Graph) -> Result<()> {
    for (name, h) in [("F", f), ("G", g)] {
        if h.edge_count() == 0 {
            return Err(Error::param(format!("{name} must have at least one edge")));
        }
        if h.has_isolated_vertices() {
            return Err(Error::param(format!("{name} must not have isolated vertices")));
        }
    }
    Ok(())
}

/// `ex_F(n, G)`: the largest number of edge-disjoint copies of `F` on `n`
/// vertices without a multicolor `G`.
///
/// Branch and bound over the copies of `F` in `K_n`, in lexicographic order.
/// The first copy is fixed to the least one, which loses nothing because
/// `K_n` is vertex-transitive on copies. After each addition only
/// multicolor embeddings through the new copy are searched. A branch is cut
/// when its size plus what the remaining disjoint candidates could add
/// (by count and by `⌊covered edges / e(F)⌋`) cannot beat the incumbent,
/// and the whole search stops at the best catalog upper bound. The
/// incumbent starts at the best verified catalog construction.
///
/// Running out of budget is not an error: the result is returned with
/// `optimal = false`.
pub fn multicolor_turan_exact(n: usize, f: &Graph, g: &Graph, budget: &SearchBudget) -> Result<ExactResult> {
    check_pair(f, g)?;
    let hints = search_hints(n, f, g, budget)?;
    let host = Graph::complete(n);
    let cands = Candidates::new(&host, f)?;
    let mut search = ExactSearch {
        cands: &cands,
        g,
        per_copy: f.edge_count(),
        system: CopySystem::empty(n, f.clone())?,
        best: hints.seed.clone(),
        improved: false,
        upper: hints.upper.min(cands.len()),
    };
    let mut meter = budget.meter("multicolor_turan_exact");
    if search.best.len() < search.upper && !cands.copies.is_empty() {
        search.system.push_copy(cands.copies[0].clone())?;
        if search.system.find_multicolor_through(g, 0).is_none() {
            let live: Vec<usize> = (1..cands.len()).filter(|&d| !cands.masks[d].intersects(&cands.masks[0])).collect();
            search.run(&live, &mut meter)?;
        } else if search.best.is_empty() {
            // A single copy already holds a multicolor G only when G is one edge.
            search.upper = 0;
        }
    }
    let optimal = search.best.len() >= search.upper || !meter.exhausted();
    let upper_bound = if meter.exhausted() { search.upper } else { search.best.len() };
    let provenance = if search.improved { "branch-and-bound".to_string() } else { hints.seed_source };
    Ok(ExactResult {
        value: search.best.len(),
        witness: search.best,
        optimal,
        nodes_explored: meter.used(),
        upper_bound,
        provenance,
    })
}

struct ExactSearch<'a> {
    cands: &'a Candidates,
    g: &'a Graph,
    per_copy: usize,
    system: CopySystem,
    best: CopySystem,
    improved: bool,
    upper: usize,
}

impl ExactSearch<'_> {
    /// `system` is feasible; `live` lists later candidates disjoint from it.
    fn run(&mut self, live: &[usize], meter: &mut NodeMeter) -> Result<()> {
        if !meter.tick() {
            return Ok(());
        }
        if self.system.len() > self.best.len() {
            self.best = self.system.clone();
            self.improved = true;
        }
        for (j, &c) in live.iter().enumerate() {
            if self.best.len() >= self.upper {
                return Ok(());
            }
            let rest = &live[j..];
            let room = (self.cands.coverage(rest) / self.per_copy).min(rest.len());
            if self.system.len() + room <= self.best.len() {
                return Ok(());
            }
            self.system.push_copy(self.cands.copies[c].clone())?;
            let last = self.system.len() - 1;
            if self.system.find_multicolor_through(self.g, last).is_none() {
                let next: Vec<usize> = live[j + 1..]
                    .iter()
                    .copied()
                    .filter(|&d| !self.cands.masks[d].intersects(&self.cands.masks[c]))
                    .collect();
                self.run(&next, meter)?;
            }
            self.system.pop_copy();
            if meter.exhausted() {
                return Ok(());
            }
        }
        Ok(())
    }
}
