//! Linear uniform hypergraphs and Berge copies of graphs.
//!
//! A linear `r`-uniform hypergraph and a `K_r` copy system are the same
//! object: each hyperedge spans one clique, and two hyperedges sharing two
//! vertices would make two cliques share an edge. Under this correspondence
//! a Berge copy of `G` is exactly a multicolor `G`, so the largest Berge-`G`
//! free linear hypergraph has `ex_{K_r}(n, G)` hyperedges.
//!
//! Only the exact correspondence is modelled. Formulations that allow extra
//! small components (such as pairs of triples on four vertices in the `(6,3)`
//! problem) are not.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{for_each_embedding, Edge, Graph, VertexMap};
use crate::packing::CopySystem;

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

/// An `r`-uniform hypergraph on `0..n` in which two hyperedges share at most
/// one vertex. Hyperedges are stored as sorted vertex lists, in input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct LinearHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphJson> for LinearHypergraph {
    type Error = Error;

    fn try_from(j: HypergraphJson) -> Result<Self> {
        LinearHypergraph::new(j.n, j.r, j.edges)
    }
}

impl From<LinearHypergraph> for HypergraphJson {
    fn from(h: LinearHypergraph) -> Self {
        HypergraphJson { n: h.n, r: h.r, edges: h.edges }
    }
}

impl LinearHypergraph {
    /// Validates uniformity, vertex range and linearity. A linearity failure
    /// is an [`Error::Invariant`] naming the offending pair of hyperedges.
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::param("uniformity must be at least 2"));
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            e.dedup();
            if e.len() != r {
                return Err(Error::param(format!("hyperedge {i} does not have {r} distinct vertices")));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::param(format!("hyperedge {i} uses vertex {v} outside 0..{n}")));
            }
            sorted.push(e);
        }
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                let common: Vec<usize> = sorted[i].iter().copied().filter(|v| sorted[j].binary_search(v).is_ok()).collect();
                if common.len() > 1 {
                    return Err(Error::Invariant(format!(
                        "hyperedges {i} {:?} and {j} {:?} share vertices {:?}",
                        sorted[i], sorted[j], common
                    )));
                }
            }
        }
        Ok(LinearHypergraph { n, r, edges: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The 2-shadow: all pairs inside some hyperedge.
    pub fn shadow(&self) -> Graph {
        Graph::from_edge_set(self.n, self.edges.iter().flat_map(|e| pairs(e)))
    }

    /// Each hyperedge becomes a `K_r` on its vertices, in hyperedge order.
    pub fn to_copy_system(&self) -> CopySystem {
        CopySystem::new(self.n, Graph::complete(self.r), self.edges.iter().map(|e| pairs(e)))
            .expect("hyperedges are valid cliques")
    }

    /// Inverse of [`LinearHypergraph::to_copy_system`]: each copy's vertex
    /// set becomes a hyperedge. The pattern must be a complete graph.
    pub fn from_copy_system(system: &CopySystem) -> Result<Self> {
        let r = match system.pattern().clique_order() {
            Some(r) if r == system.pattern().n() => r,
            _ => return Err(Error::param("pattern is not a complete graph")),
        };
        let edges = (0..system.len()).map(|i| system.copy_vertices(i)).collect();
        LinearHypergraph::new(system.n(), r, edges)
    }
}

fn pairs(e: &[usize]) -> Vec<Edge> {
    e.iter().enumerate().flat_map(|(i, &a)| e[i + 1..].iter().map(move |&b| Edge::new(a, b))).collect()
}

/// A Berge copy of `target`: the core map embeds `target` into the shadow and
/// every target edge gets its own hyperedge containing both endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    pub core_map: VertexMap,
    /// Hyperedge index for each target edge, in `target.edges()` order.
    pub edge_assignment: Vec<usize>,
}

impl BergeWitness {
    pub fn is_valid_for(&self, h: &LinearHypergraph, target: &Graph) -> bool {
        let map = &self.core_map.mapping;
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        let used: BTreeSet<usize> = self.edge_assignment.iter().copied().collect();
        map.len() == target.n()
            && distinct.len() == map.len()
            && self.edge_assignment.len() == target.edge_count()
            && used.len() == self.edge_assignment.len()
            && target.edges().iter().zip(&self.edge_assignment).all(|(e, &k)| {
                k < h.len() && h.edges[k].binary_search(&map[e.lo()]).is_ok() && h.edges[k].binary_search(&map[e.hi()]).is_ok()
            })
    }
}

/// Finds a Berge copy of `g` in `h`, if any.
///
/// Core embeddings into the shadow are enumerated by backtracking; for each
/// one, target edges are matched to distinct hyperedges containing both
/// endpoints by augmenting paths.
pub fn contains_berge(h: &LinearHypergraph, g: &Graph) -> Option<BergeWitness> {
    let shadow = h.shadow();
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); h.n];
    for (k, e) in h.edges.iter().enumerate() {
        for &v in e {
            through[v].push(k);
        }
    }
    let mut found = None;
    let _ = for_each_embedding(&shadow, g, |map| {
        let eligible: Vec<Vec<usize>> = g
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = (map[e.lo()], map[e.hi()]);
                through[a].iter().copied().filter(|&k| h.edges[k].binary_search(&b).is_ok()).collect()
            })
            .collect();
        match perfect_matching(&eligible, h.len()) {
            Some(edge_assignment) => {
                found = Some(BergeWitness { core_map: VertexMap { mapping: map.to_vec() }, edge_assignment });
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    found
}

/// Kuhn's algorithm: assigns each left vertex a distinct right vertex from
/// its list, or `None` if impossible.
fn perfect_matching(eligible: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    fn augment(u: usize, eligible: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &k in &eligible[u] {
            if seen[k] {
                continue;
            }
            seen[k] = true;
            if owner[k].is_none_or(|w| augment(w, eligible, seen, owner)) {
                owner[k] = Some(u);
                return true;
            }
        }
        false
    }
    let mut owner: Vec<Option<usize>> = vec![None; right];
    for u in 0..eligible.len() {
        let mut seen = vec![false; right];
        if !augment(u, eligible, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut assignment = vec![0; eligible.len()];
    for (k, o) in owner.iter().enumerate() {
        if let Some(u) = o {
            assignment[*u] = k;
        }
    }
    Some(assignment)
}
