use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::{Edge, Graph};

/// Injective map from pattern vertices to host vertices; `mapping[i]` is the
/// image of pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexMap {
    pub mapping: Vec<usize>,
}

impl VertexMap {
    pub fn image(&self, v: usize) -> usize {
        self.mapping[v]
    }

    /// Image of every pattern edge, in pattern edge order.
    pub fn edge_images(&self, pattern: &Graph) -> Vec<Edge> {
        pattern.edges().iter().map(|e| Edge::new(self.mapping[e.lo()], self.mapping[e.hi()])).collect()
    }

    pub fn is_embedding(&self, pattern: &Graph, host: &Graph) -> bool {
        let mut seen = BTreeSet::new();
        self.mapping.len() == pattern.n()
            && self.mapping.iter().all(|&v| v < host.n() && seen.insert(v))
            && self.edge_images(pattern).iter().all(|e| host.has_edge(e.lo(), e.hi()))
    }
}

/// Pattern vertex order for backtracking: start from a vertex of largest
/// degree, then repeatedly take the vertex with the most already-ordered
/// neighbours (ties: larger degree, then smaller index).
pub(crate) fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], pattern.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &w in pattern.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

struct Embedder<'a, F> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    visit: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Embedder<'_, F> {
    fn run(&mut self, depth: usize) -> ControlFlow<()> {
        let Some(&v) = self.order.get(depth) else {
            return (self.visit)(&self.image);
        };
        if self.image[v] != usize::MAX {
            return self.run(depth + 1);
        }
        // Candidates come from the neighbourhood of a mapped neighbour when one exists.
        let anchor = self.pattern.neighbors(v).iter().find(|&&w| self.image[w] != usize::MAX).copied();
        let candidates: Vec<usize> = match anchor {
            Some(w) => self.host.neighbors(self.image[w]).to_vec(),
            None => (0..self.host.n()).collect(),
        };
        for h in candidates {
            if self.used[h] {
                continue;
            }
            let fits = self
                .pattern
                .neighbors(v)
                .iter()
                .all(|&w| self.image[w] == usize::MAX || self.host.has_edge(self.image[w], h));
            if !fits {
                continue;
            }
            self.image[v] = h;
            self.used[h] = true;
            let flow = self.run(depth + 1);
            self.used[h] = false;
            self.image[v] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn embed_seeded<F>(host: &Graph, pattern: &Graph, seed: &[(usize, usize)], visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if pattern.n() > host.n() {
        return ControlFlow::Continue(());
    }
    let mut image = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; host.n()];
    for &(p, h) in seed {
        if used[h] || image[p] != usize::MAX {
            return ControlFlow::Continue(());
        }
        image[p] = h;
        used[h] = true;
    }
    for e in pattern.edges() {
        let (a, b) = (image[e.lo()], image[e.hi()]);
        if a != usize::MAX && b != usize::MAX && !host.has_edge(a, b) {
            return ControlFlow::Continue(());
        }
    }
    let mut emb = Embedder { host, pattern, order: search_order(pattern), image, used, visit };
    emb.run(0)
}

/// Calls `visit` with every injective edge-preserving map `pattern -> host`
/// (as a slice indexed by pattern vertex). Returning `Break` stops the search.
pub fn for_each_embedding<F>(host: &Graph, pattern: &Graph, visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    embed_seeded(host, pattern, &[], visit)
}

pub fn find_embedding(host: &Graph, pattern: &Graph) -> Option<VertexMap> {
    let mut found = None;
    let _ = for_each_embedding(host, pattern, |m| {
        found = Some(VertexMap { mapping: m.to_vec() });
        ControlFlow::Break(())
    });
    found
}

pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_embedding(host, pattern).is_some()
}

/// Whether `host` has a copy of `pattern` that uses the host edge `e`.
pub(crate) fn contains_subgraph_through(host: &Graph, pattern: &Graph, e: Edge) -> bool {
    for pe in pattern.edges() {
        for (a, b) in [(pe.lo(), pe.hi()), (pe.hi(), pe.lo())] {
            let flow = embed_seeded(host, pattern, &[(a, e.lo()), (b, e.hi())], |_| ControlFlow::Break(()));
            if flow.is_break() {
                return true;
            }
        }
    }
    false
}

/// Every subgraph of `host` isomorphic to `pattern`, each exactly once, as a
/// sorted edge list. The result is in lexicographic order.
pub fn enumerate_copies(host: &Graph, pattern: &Graph) -> Vec<Vec<Edge>> {
    let mut copies = BTreeSet::new();
    let _ = for_each_embedding(host, pattern, |m| {
        let mut edges: Vec<Edge> = pattern.edges().iter().map(|e| Edge::new(m[e.lo()], m[e.hi()])).collect();
        edges.sort_unstable();
        copies.insert(edges);
        ControlFlow::Continue(())
    });
    copies.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn copy_counts() {
        assert_eq!(enumerate_copies(&Graph::complete(4), &Graph::complete(3)).len(), 4);
        assert_eq!(enumerate_copies(&Graph::biclique(3, 3).unwrap(), &Graph::complete(3)).len(), 0);
        assert_eq!(enumerate_copies(&Graph::complete(5), &Graph::path(3).unwrap()).len(), 30);
    }

    #[test]
    fn pattern_larger_than_host() {
        assert!(enumerate_copies(&Graph::complete(3), &Graph::complete(4)).is_empty());
        assert!(!contains_subgraph(&Graph::complete(3), &Graph::path(4).unwrap()));
    }

    #[test]
    fn through_edge() {
        let host = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let k3 = Graph::complete(3);
        assert!(contains_subgraph_through(&host, &k3, Edge::new(0, 2)));
        assert!(!contains_subgraph_through(&host, &k3, Edge::new(3, 4)));
    }

    #[test]
    fn found_embeddings_are_valid() {
        let host = Graph::cycle(7).unwrap();
        let p = Graph::path(4).unwrap();
        let m = find_embedding(&host, &p).unwrap();
        assert!(m.is_embedding(&p, &host));
    }
}
