use serde::{Deserialize, Serialize};

use super::Graph;

/// `(e, v, α, χ)` of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub e: usize,
    pub v: usize,
    pub alpha: usize,
    pub chi: usize,
}

impl Invariants {
    pub fn of(g: &Graph) -> Self {
        Invariants { e: g.edge_count(), v: g.n(), alpha: independence_number(g), chi: chromatic_number(g) }
    }
}

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A maximum independent set, found by branch and bound. Among maximum sets
/// the first one met in the search is returned; the search is deterministic.
pub fn maximum_independent_set(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let candidates: Vec<usize> = (0..g.n()).collect();
    mis(g, &candidates, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn mis(g: &Graph, candidates: &[usize], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() + candidates.len() <= best.len() {
        return;
    }
    let Some((&v, rest)) = candidates.split_first() else {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    };
    let without_nb: Vec<usize> = rest.iter().copied().filter(|&w| !g.has_edge(v, w)).collect();
    current.push(v);
    mis(g, &without_nb, current, best);
    current.pop();
    // Skipping `v` only helps if some neighbour of `v` remains.
    if rest.iter().any(|&w| g.has_edge(v, w)) {
        mis(g, rest, current, best);
    }
}

/// Exact chromatic number: the least `k` for which a backtracking
/// `k`-colouring exists.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    (2..=g.n()).find(|&k| colourable(g, &order, k)).unwrap_or(g.n())
}

/// A proper colouring with colours `0..k`, if one exists.
pub fn proper_colouring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colour = vec![usize::MAX; g.n()];
    assign(g, &order, 0, k, &mut colour, 0).then_some(colour)
}

fn colourable(g: &Graph, order: &[usize], k: usize) -> bool {
    let mut colour = vec![usize::MAX; g.n()];
    assign(g, order, 0, k, &mut colour, 0)
}

fn assign(g: &Graph, order: &[usize], depth: usize, k: usize, colour: &mut [usize], used: usize) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    // A fresh colour is interchangeable with every other unused one.
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        if assign(g, order, depth + 1, k, colour, used.max(c + 1)) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}
