use super::{blowup_decomposition, is_prime, ConstructionReport, Validity};
use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::graph::{chromatic_number, Edge, Graph};
use crate::optimizer::max_packing;
use crate::packing::CopySystem;

/// Packs `F` into the Turán graph `T_{n, χ(G)-1}`, which has no `G` at all.
pub fn turan_packing(f: &Graph, g: &Graph, n: usize) -> Result<ConstructionReport> {
    turan_packing_with_budget(f, g, n, &SearchBudget::default())
}

/// As [`turan_packing`], with an explicit budget for the search used when no
/// algebraic decomposition of the Turán graph applies.
pub fn turan_packing_with_budget(
    f: &Graph,
    g: &Graph,
    n: usize,
    budget: &SearchBudget,
) -> Result<ConstructionReport> {
    if f.edge_count() == 0 {
        return Err(Error::param("pattern must have an edge"));
    }
    let (chi_f, chi_g) = (chromatic_number(f), chromatic_number(g));
    if chi_f >= chi_g {
        return Err(Error::Precondition(format!("χ(F) = {chi_f} is not below χ(G) = {chi_g}")));
    }
    let parts = chi_g - 1;
    if n < parts {
        return Err(Error::param(format!("n = {n} is below the {parts} Turán classes")));
    }
    let host = Graph::turan(n, parts)?;
    if let Some(system) = algebraic(f, n, parts)? {
        let report = ConstructionReport::certify(system, g, Validity::Exact, "turan-graph-packing");
        return Ok(report.with_note(format!("T({n},{parts}) decomposed algebraically")));
    }
    let packing = max_packing(&host, f, budget)?;
    let note = if packing.optimal {
        format!("maximum packing of T({n},{parts})")
    } else {
        format!("best packing of T({n},{parts}) found within the budget")
    };
    Ok(ConstructionReport::certify(packing.witness, g, Validity::Exact, "turan-graph-packing").with_note(note))
}

/// Full decompositions of a balanced Turán graph into cliques with one
/// vertex per class: every edge for two classes, a cyclic Latin square for
/// three, and the prime transversal decomposition otherwise.
fn algebraic(f: &Graph, n: usize, parts: usize) -> Result<Option<CopySystem>> {
    if !n.is_multiple_of(parts) || !f.is_isomorphic(&Graph::complete(parts)) {
        return Ok(None);
    }
    let c = n / parts;
    let k = Graph::complete(parts);
    let system = match parts {
        2 => {
            let copies = (0..c).flat_map(|i| (0..c).map(move |j| vec![Edge::new(i, c + j)]));
            CopySystem::new(n, k, copies)?
        }
        3 => {
            let copies = (0..c).flat_map(|i| {
                (0..c).map(move |j| {
                    let (a, b, z) = (i, c + j, 2 * c + (i + j) % c);
                    vec![Edge::new(a, b), Edge::new(a, z), Edge::new(b, z)]
                })
            });
            CopySystem::new(n, k, copies)?
        }
        _ if is_prime(c) && c >= parts => blowup_decomposition(&k, c)?,
        _ => return Ok(None),
    };
    Ok(Some(system))
}
