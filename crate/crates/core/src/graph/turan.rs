use serde::Serialize;

use super::{contains_subgraph, contains_subgraph_through, chromatic_number, Edge, Graph};
use crate::budget::{NodeMeter, SearchBudget};
use crate::error::{Error, Result};

/// Exact `ex(n, G)` together with a `G`-free graph attaining it.
#[derive(Clone, Debug, Serialize)]
pub struct TuranResult {
    pub value: usize,
    pub witness: Graph,
    pub nodes_explored: u64,
}

/// Computes `ex(n, G)` exactly by a max-edge branch and bound.
///
/// Values are built up from `ex(v(G) - 1, G) = C(v(G)-1, 2)`. At order `m`
/// the search decides the pairs of `K_m` in lexicographic order, include
/// first, and rejects an inclusion that closes a copy of `G`. Three prunes
/// apply: the edge count still reachable, the bound
/// `ex(m, G) <= floor(m * ex(m-1, G) / (m-2))`, and the minimum degree
/// `e - ex(m-1, G)` that every vertex of a graph with `e` edges must have.
/// Vertex 0 is taken to be of maximum degree with neighbourhood `1..=d`.
pub fn turan_number_exact(n: usize, g: &Graph, budget: &SearchBudget) -> Result<TuranResult> {
    if g.edge_count() == 0 {
        return Err(Error::param("forbidden graph must have at least one edge"));
    }
    let core = g.without_isolated();
    let mut meter = budget.meter("turan_number_exact");
    let chi = chromatic_number(&core);

    let small = g.n().min(n + 1);
    let mut value = binom2(small.saturating_sub(1));
    let mut witness = Graph::complete(small.saturating_sub(1));
    for m in small..=n {
        let (v, w) = solve_order(m, &core, chi, value, &witness, &mut meter)?;
        value = v;
        witness = w;
    }
    if n < small {
        witness = Graph::complete(n);
        value = binom2(n);
    }
    Ok(TuranResult { value, witness, nodes_explored: meter.used() })
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn solve_order(
    m: usize,
    g: &Graph,
    chi: usize,
    prev: usize,
    prev_witness: &Graph,
    meter: &mut NodeMeter,
) -> Result<(usize, Graph)> {
    // Lower bound: previous witness plus a greedily attached new vertex.
    let mut best = prev_witness.with_vertex_count(m)?;
    for v in 0..m - 1 {
        let e = Edge::new(v, m - 1);
        best.push_edge(e);
        if contains_subgraph_through(&best, g, e) {
            best.remove_edge(e);
        }
    }
    if chi >= 3 {
        let t = Graph::turan(m, chi - 1)?;
        if t.edge_count() > best.edge_count() && !contains_subgraph(&t, g) {
            best = t;
        }
    }
    let mut upper = binom2(m);
    if m >= 3 {
        upper = upper.min(m * prev / (m - 2));
    }
    if best.edge_count() >= upper {
        return Ok((best.edge_count(), best));
    }

    let pairs: Vec<Edge> = (0..m).flat_map(|u| (u + 1..m).map(move |v| Edge::new(u, v))).collect();
    // remaining[i][v]: pairs with index >= i incident to v.
    let mut remaining = vec![vec![0usize; m]; pairs.len() + 1];
    for i in (0..pairs.len()).rev() {
        remaining[i] = remaining[i + 1].clone();
        remaining[i][pairs[i].lo()] += 1;
        remaining[i][pairs[i].hi()] += 1;
    }
    let mut search = EdgeSearch {
        g,
        prev,
        pairs: &pairs,
        remaining: &remaining,
        work: Graph::empty(m),
        deg: vec![0; m],
        cap: m - 1,
        best_value: best.edge_count(),
        best,
        upper,
    };
    search.run(0, meter);
    if meter.exhausted() {
        return Err(Error::BudgetExhausted {
            nodes: meter.used(),
            lower: search.best_value as u64,
            upper: upper as u64,
        });
    }
    Ok((search.best_value, search.best))
}

struct EdgeSearch<'a> {
    g: &'a Graph,
    prev: usize,
    pairs: &'a [Edge],
    remaining: &'a [Vec<usize>],
    work: Graph,
    deg: Vec<usize>,
    /// Degree cap: the degree of vertex 0 once its pairs are decided.
    cap: usize,
    best_value: usize,
    best: Graph,
    upper: usize,
}

impl EdgeSearch<'_> {
    fn run(&mut self, i: usize, meter: &mut NodeMeter) {
        if self.best_value >= self.upper || !meter.tick() {
            return;
        }
        let m = self.work.n();
        let have = self.work.edge_count();
        if i == self.pairs.len() {
            if have > self.best_value {
                self.best_value = have;
                self.best = self.work.clone();
            }
            return;
        }
        let target = self.best_value + 1;
        if have + self.pairs.len() - i < target {
            return;
        }
        let need = target.saturating_sub(self.prev);
        let mut degree_room = 0;
        for v in 0..m {
            let possible = self.deg[v] + self.remaining[i][v];
            if possible < need {
                return;
            }
            degree_room += possible.min(self.cap);
        }
        if degree_room / 2 < target {
            return;
        }

        let e = self.pairs[i];
        let (a, b) = (e.lo(), e.hi());
        let vertex_zero_done = i + 1 == m - 1;
        // Vertex 0 has neighbourhood 1..=d: after one exclusion the rest of its row is excluded.
        let zero_row_closed = a == 0 && b > 1 && !self.work.has_edge(0, b - 1);
        let may_include = !zero_row_closed
            && (a == 0 || (self.deg[a] < self.cap && self.deg[b] < self.cap));
        if may_include {
            self.work.push_edge(e);
            if !contains_subgraph_through(&self.work, self.g, e) {
                self.deg[a] += 1;
                self.deg[b] += 1;
                let saved = self.cap;
                if vertex_zero_done {
                    self.cap = self.deg[0];
                }
                self.run(i + 1, meter);
                self.cap = saved;
                self.deg[a] -= 1;
                self.deg[b] -= 1;
            }
            self.work.remove_edge(e);
        }
        let saved = self.cap;
        if vertex_zero_done {
            self.cap = self.deg[0];
        }
        self.run(i + 1, meter);
        self.cap = saved;
    }
}
