//! Simple undirected graphs on the vertex set `0..n`.

mod canon;
mod generate;
mod hom;
mod invariants;
pub mod io;
mod subgraph;
mod turan;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::CanonicalForm;
pub use generate::GraphKind;
pub use hom::has_homomorphism;
pub use invariants::{chromatic_number, independence_number, maximum_independent_set, proper_colouring, Invariants};
pub use subgraph::{contains_subgraph, enumerate_copies, find_embedding, for_each_embedding, VertexMap};
pub use turan::{turan_number_exact, TuranResult};

pub(crate) use subgraph::{contains_subgraph_through, search_order};

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn is_loop(self) -> bool {
        self.0 == self.1
    }
}

impl From<[usize; 2]> for Edge {
    fn from([a, b]: [usize; 2]) -> Self {
        Edge::new(a, b)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A simple undirected graph. Vertices are `0..n`; edges are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    words: usize,
    rows: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(raw: GraphJson) -> Result<Self> {
        Graph::from_edges(raw.n, raw.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson { n: g.n, edges: g.edges.iter().map(|&e| e.into()).collect() }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n], words, rows: vec![0; n * words] }
    }

    /// Builds a graph, rejecting loops, out-of-range endpoints and repeated edges.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Graph::empty(n);
        for e in edges {
            let e = e.into();
            if e.is_loop() {
                return Err(Error::Invariant(format!("loop at vertex {}", e.lo())));
            }
            if e.hi() >= n {
                return Err(Error::Invariant(format!("edge {e} has an endpoint outside 0..{n}")));
            }
            if g.has_edge(e.lo(), e.hi()) {
                return Err(Error::Invariant(format!("repeated edge {e}")));
            }
            g.insert(e);
        }
        g.finish();
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently drops repeated edges.
    pub(crate) fn from_edge_set<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Self {
        let mut g = Graph::empty(n);
        for e in edges {
            debug_assert!(!e.is_loop() && e.hi() < n);
            if !g.has_edge(e.lo(), e.hi()) {
                g.insert(e);
            }
        }
        g.finish();
        g
    }

    fn insert(&mut self, e: Edge) {
        let (a, b) = (e.lo(), e.hi());
        self.edges.push(e);
        self.adj[a].push(b);
        self.adj[b].push(a);
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
        self.rows[b * self.words + a / 64] |= 1 << (a % 64);
    }

    /// Adds an absent edge, keeping every list sorted. Used by searches that
    /// grow and shrink one working graph.
    pub(crate) fn push_edge(&mut self, e: Edge) {
        debug_assert!(!self.has_edge(e.lo(), e.hi()));
        let (a, b) = (e.lo(), e.hi());
        let at = self.edges.binary_search(&e).unwrap_err();
        self.edges.insert(at, e);
        for (x, y) in [(a, b), (b, a)] {
            let at = self.adj[x].binary_search(&y).unwrap_err();
            self.adj[x].insert(at, y);
            self.rows[x * self.words + y / 64] |= 1 << (y % 64);
        }
    }

    pub(crate) fn remove_edge(&mut self, e: Edge) {
        let (a, b) = (e.lo(), e.hi());
        if let Ok(at) = self.edges.binary_search(&e) {
            self.edges.remove(at);
            for (x, y) in [(a, b), (b, a)] {
                if let Ok(at) = self.adj[x].binary_search(&y) {
                    self.adj[x].remove(at);
                }
                self.rows[x * self.words + y / 64] &= !(1 << (y % 64));
            }
        }
    }

    fn finish(&mut self) {
        self.edges.sort_unstable();
        for nb in &mut self.adj {
            nb.sort_unstable();
        }
    }

    /// Number of vertices, `v(G)`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, `e(G)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// The graph on `n` vertices with every missing pair added and every edge removed.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push(Edge(u, v));
                }
            }
        }
        Graph::from_edge_set(self.n, edges)
    }

    /// Drops isolated vertices and relabels the rest in increasing order.
    pub fn without_isolated(&self) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in index.iter_mut().enumerate() {
            if self.degree(v) > 0 {
                *slot = next;
                next += 1;
            }
        }
        Graph::from_edge_set(next, self.edges.iter().map(|e| Edge::new(index[e.lo()], index[e.hi()])))
    }

    /// The same edges on a larger vertex set.
    pub fn with_vertex_count(&self, n: usize) -> Result<Graph> {
        if n < self.n {
            return Err(Error::param(format!("cannot shrink a {}-vertex graph to {n} vertices", self.n)));
        }
        Ok(Graph::from_edge_set(n, self.edges.iter().copied()))
    }

    /// `R[t]`: vertex `v` becomes the class `v*t .. v*t + t`, and two vertices are
    /// adjacent iff their classes come from adjacent vertices of `R`.
    pub fn blow_up(&self, t: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::param("blow-up factor must be positive"));
        }
        let mut edges = Vec::with_capacity(self.edge_count() * t * t);
        for e in &self.edges {
            for i in 0..t {
                for j in 0..t {
                    edges.push(Edge::new(e.lo() * t + i, e.hi() * t + j));
                }
            }
        }
        Ok(Graph::from_edge_set(self.n * t, edges))
    }

    /// Sub-structure check used by constructions: every edge of `self` is an edge of `host`.
    pub fn is_spanning_subgraph_of(&self, host: &Graph) -> bool {
        self.n <= host.n && self.edges.iter().all(|e| host.has_edge(e.lo(), e.hi()))
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        CanonicalForm::of(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut d1: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut d2: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        d1.sort_unstable();
        d2.sort_unstable();
        d1 == d2 && self.canonical_form() == other.canonical_form()
    }

    /// `Some(s)` when the graph is the star `K_{1,s}` (isolated vertices ignored).
    pub fn star_size(&self) -> Option<usize> {
        let g = self.without_isolated();
        let e = g.edge_count();
        if e == 0 || g.n != e + 1 {
            return None;
        }
        (0..g.n).any(|v| g.degree(v) == e).then_some(e)
    }

    /// `Some(t)` when the graph is the path `P_t` on `t` vertices (isolated vertices ignored).
    pub fn path_order(&self) -> Option<usize> {
        let g = self.without_isolated();
        if g.edge_count() == 0 || g.edge_count() + 1 != g.n {
            return None;
        }
        if (0..g.n).any(|v| g.degree(v) > 2) || !g.is_connected() {
            return None;
        }
        Some(g.n)
    }

    /// `Some(r)` when the graph is the clique `K_r` (isolated vertices ignored).
    pub fn clique_order(&self) -> Option<usize> {
        let g = self.without_isolated();
        let r = g.n;
        (r >= 2 && g.edge_count() == r * (r - 1) / 2).then_some(r)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// `e(G)`, `v(G)`, `α(G)` and `χ(G)`, computed exactly.
    pub fn invariants(&self) -> Invariants {
        Invariants::of(self)
    }
}
