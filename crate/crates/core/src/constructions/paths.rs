use super::{place, ConstructionReport, Validity};
use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::graph::{maximum_independent_set, Edge, Graph};
use crate::optimizer::max_packing_until;
use crate::packing::CopySystem;

/// Copies of `F` that all share one maximum independent set `S` of `F`,
/// placed on vertices `0..α(F)`, and are otherwise vertex-disjoint.
/// Claimed to avoid a multicolor `P_4`; the report checks it.
pub fn shared_independent_set_construction(f: &Graph, n: usize) -> Result<ConstructionReport> {
    let v = f.n();
    if f.edge_count() == 0 {
        return Err(Error::param("pattern must have an edge"));
    }
    if n < v {
        return Err(Error::param(format!("n = {n} is smaller than v(F) = {v}")));
    }
    let shared = maximum_independent_set(f);
    let alpha = shared.len();
    let rest: Vec<usize> = (0..v).filter(|w| !shared.contains(w)).collect();
    let count = (n - alpha) / (v - alpha);
    let copies = (0..count).map(|i| {
        let mut image = vec![0; v];
        for (j, &w) in shared.iter().enumerate() {
            image[w] = j;
        }
        for (j, &w) in rest.iter().enumerate() {
            image[w] = alpha + i * rest.len() + j;
        }
        place(f, &image)
    });
    let system = CopySystem::new(n, f.clone(), copies)?;
    Ok(ConstructionReport::certify(system, &Graph::path(4)?, Validity::Exact, "shared-independent-set")
        .with_note(format!("{count} copies through a common independent set of size {alpha}")))
}

/// Smallest `q` such that `K_q` holds `copies` edge-disjoint copies of `f`,
/// with such a packing.
pub(crate) fn smallest_clique_holding(f: &Graph, copies: usize, budget: &SearchBudget) -> Result<(usize, CopySystem)> {
    let need = copies * f.edge_count();
    let mut q = f.n();
    while q * (q - 1) / 2 < need {
        q += 1;
    }
    loop {
        let found = max_packing_until(&Graph::complete(q), f, budget, copies)?;
        if found.value >= copies {
            return Ok((q, found.witness.truncated(copies)));
        }
        if !found.optimal {
            return Err(Error::Resource(format!(
                "budget exhausted deciding whether K_{q} holds {copies} copies"
            )));
        }
        q += 1;
    }
}

/// Disjoint blocks of size `q`, each carrying `t - 2` edge-disjoint copies of
/// `F`, where `q` is the smallest clique order admitting that many. A
/// multicolor path inside one block has at most `t - 2` edges, so no
/// multicolor `P_t` (on `t` vertices) appears.
pub fn clique_group_construction(f: &Graph, t: usize, n: usize, budget: &SearchBudget) -> Result<ConstructionReport> {
    if t < 3 {
        return Err(Error::param("clique groups need t >= 3"));
    }
    if f.edge_count() == 0 {
        return Err(Error::param("pattern must have an edge"));
    }
    let (q, block) = smallest_clique_holding(f, t - 2, budget)?;
    let blocks = n / q;
    let copies = (0..blocks).flat_map(|b| {
        block
            .copies()
            .iter()
            .map(move |c| c.iter().map(|e| Edge::new(e.lo() + b * q, e.hi() + b * q)).collect::<Vec<_>>())
    });
    let system = CopySystem::new(n, f.clone(), copies)?;
    Ok(ConstructionReport::certify(system, &Graph::path(t)?, Validity::Exact, "clique-groups")
        .with_note(format!("q = {q}, {blocks} blocks of {} copies", t - 2)))
}
