use serde::Serialize;

use super::candidates::{Candidates, EdgeMask};
use crate::budget::{NodeMeter, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::packing::CopySystem;

/// A maximum (or, when the budget ran out, best found) `F`-packing.
#[derive(Clone, Debug, Serialize)]
pub struct PackingResult {
    pub value: usize,
    pub witness: CopySystem,
    pub optimal: bool,
    pub nodes_explored: u64,
}

/// Maximal packing: copies of `f` in `host` are scanned in lexicographic order
/// and each is kept when it is edge-disjoint from those already kept. The
/// result admits no further copy; it need not be maximum.
pub fn greedy_pack(host: &Graph, f: &Graph) -> Result<CopySystem> {
    check_pattern(f)?;
    let cands = Candidates::new(host, f)?;
    let mut used = EdgeMask::zeros(cands.edge_bits);
    let mut system = CopySystem::empty(host.n(), f.clone())?;
    for (i, copy) in cands.copies.iter().enumerate() {
        if !cands.masks[i].intersects(&used) {
            used.or_assign(&cands.masks[i]);
            system.push_copy(copy.clone())?;
        }
    }
    Ok(system)
}

/// `ν_F(host)`: the largest set of pairwise edge-disjoint copies of `f`.
///
/// Branch and bound over copies in lexicographic order, seeded with the
/// greedy packing. A branch is cut when its copy count plus
/// `floor(coverable free edges / e(F))` cannot beat the incumbent.
pub fn max_packing(host: &Graph, f: &Graph, budget: &SearchBudget) -> Result<PackingResult> {
    max_packing_until(host, f, budget, usize::MAX)
}

/// As [`max_packing`], but stops as soon as `target` copies are found.
pub(crate) fn max_packing_until(
    host: &Graph,
    f: &Graph,
    budget: &SearchBudget,
    target: usize,
) -> Result<PackingResult> {
    check_pattern(f)?;
    let cands = Candidates::new(host, f)?;
    let greedy = greedy_pack(host, f)?;
    let ceiling = host.edge_count() / f.edge_count();
    let mut search = PackSearch {
        cands: &cands,
        per_copy: f.edge_count(),
        chosen: Vec::new(),
        best: greedy.copies().iter().map(|c| cands.copies.binary_search(c).expect("greedy copy")).collect(),
        goal: ceiling.min(target),
    };
    let mut meter = budget.meter("max_packing");
    let all: Vec<usize> = (0..cands.len()).collect();
    search.run(&all, &mut meter);
    let stopped_at_target = search.best.len() >= target && search.best.len() < ceiling;
    let optimal = search.best.len() >= ceiling || (!meter.exhausted() && !stopped_at_target);
    let copies: Vec<_> = search.best.iter().map(|&i| cands.copies[i].clone()).collect();
    let witness = CopySystem::new(host.n(), f.clone(), copies)?;
    Ok(PackingResult { value: witness.len(), witness, optimal, nodes_explored: meter.used() })
}

fn check_pattern(f: &Graph) -> Result<()> {
    if f.edge_count() == 0 {
        return Err(Error::param("pattern graph must have at least one edge"));
    }
    Ok(())
}

struct PackSearch<'a> {
    cands: &'a Candidates,
    per_copy: usize,
    chosen: Vec<usize>,
    best: Vec<usize>,
    goal: usize,
}

impl PackSearch<'_> {
    /// `live`: candidates after the last chosen one that are disjoint from all chosen.
    fn run(&mut self, live: &[usize], meter: &mut NodeMeter) {
        if self.best.len() >= self.goal || !meter.tick() {
            return;
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            if self.best.len() >= self.goal {
                return;
            }
        }
        for (j, &c) in live.iter().enumerate() {
            let rest = &live[j..];
            let bound = self.chosen.len() + (self.cands.coverage(rest) / self.per_copy).min(rest.len());
            if bound <= self.best.len() {
                return;
            }
            let next: Vec<usize> = live[j + 1..]
                .iter()
                .copied()
                .filter(|&d| !self.cands.masks[d].intersects(&self.cands.masks[c]))
                .collect();
            self.chosen.push(c);
            self.run(&next, meter);
            self.chosen.pop();
            if meter.exhausted() || self.best.len() >= self.goal {
                return;
            }
        }
    }
}
