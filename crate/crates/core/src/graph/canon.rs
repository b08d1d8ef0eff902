use std::cmp::{Ordering, Reverse};

use super::Graph;

/// Isomorphism-invariant label of a graph.
///
/// Vertices are first split into classes by degree (highest first); within
/// that constraint the form is the lexicographically least upper-triangle
/// adjacency string, read column by column, over all vertex orderings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    degrees: Vec<usize>,
    bits: Vec<bool>,
}

impl CanonicalForm {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
        let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();

        let mut search = Search {
            g,
            slot_degree: &degrees,
            placed: Vec::with_capacity(n),
            used: vec![false; n],
            bits: Vec::with_capacity(n * n.saturating_sub(1) / 2),
            best: None,
        };
        search.run();
        let bits = search.best.unwrap_or_default();
        CanonicalForm { n, degrees, bits }
    }

    /// The canonical relabelling as a graph.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits[k] {
                    edges.push(super::Edge::new(i, j));
                }
                k += 1;
            }
        }
        Graph::from_edge_set(self.n, edges)
    }
}

struct Search<'a> {
    g: &'a Graph,
    slot_degree: &'a [usize],
    placed: Vec<usize>,
    used: Vec<bool>,
    bits: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl Search<'_> {
    fn run(&mut self) {
        let pos = self.placed.len();
        if pos == self.g.n() {
            if self.best.as_ref().is_none_or(|b| self.bits < *b) {
                self.best = Some(self.bits.clone());
            }
            return;
        }
        for v in 0..self.g.n() {
            if self.used[v] || self.g.degree(v) != self.slot_degree[pos] {
                continue;
            }
            let mark = self.bits.len();
            for &u in &self.placed {
                self.bits.push(self.g.has_edge(u, v));
            }
            let worse = match &self.best {
                Some(best) => self.bits.as_slice().cmp(&best[..self.bits.len()]) == Ordering::Greater,
                None => false,
            };
            if !worse {
                self.used[v] = true;
                self.placed.push(v);
                self.run();
                self.placed.pop();
                self.used[v] = false;
            }
            self.bits.truncate(mark);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_graphs_share_a_form() {
        let a = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let perm = [3, 0, 4, 1, 2];
        let b = Graph::from_edges(5, a.edges().iter().map(|e| (perm[e.lo()], perm[e.hi()]))).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert!(a.canonical_form().to_graph().is_isomorphic(&a));
    }

    #[test]
    fn distinguishes_same_degree_sequences() {
        // C6 versus two disjoint triangles: both 2-regular on 6 vertices.
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(c6.canonical_form(), tt.canonical_form());
        assert!(!c6.is_isomorphic(&tt));
    }
}
