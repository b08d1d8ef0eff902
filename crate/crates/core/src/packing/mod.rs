//! Colored systems of edge-disjoint pattern copies.
//!
//! A [`CopySystem`] holds copies of a pattern graph `F` on the ground set
//! `0..n`; the index of a copy is its color. Copies may share vertices but
//! never edges.

mod multicolor;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Edge, Graph};

pub use multicolor::MulticolorWitness;

const NO_OWNER: u32 = u32::MAX;

#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "CopySystemJson", into = "CopySystemJson")]
pub struct CopySystem {
    n: usize,
    pattern: Graph,
    copies: Vec<Vec<Edge>>,
    /// Copy index owning each pair, row-major `n * n`; the first owner wins
    /// when copies overlap (which `verify` reports).
    owner: Vec<u32>,
    union: Graph,
}

#[derive(Serialize, Deserialize)]
struct CopySystemJson {
    n: usize,
    pattern: Graph,
    copies: Vec<Vec<Edge>>,
}

impl TryFrom<CopySystemJson> for CopySystem {
    type Error = Error;

    fn try_from(raw: CopySystemJson) -> Result<Self> {
        CopySystem::new(raw.n, raw.pattern, raw.copies)
    }
}

impl From<CopySystem> for CopySystemJson {
    fn from(s: CopySystem) -> Self {
        CopySystemJson { n: s.n, pattern: s.pattern, copies: s.copies }
    }
}

impl PartialEq for CopySystem {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.pattern == other.pattern && self.copies == other.copies
    }
}

impl Eq for CopySystem {}

impl std::fmt::Debug for CopySystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CopySystem")
            .field("n", &self.n)
            .field("pattern", &self.pattern)
            .field("copies", &self.copies)
            .finish()
    }
}

/// Why a [`CopySystem`] fails verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SystemViolation {
    /// Copy `copy` does not span a graph isomorphic to the pattern.
    NotACopy { copy: usize },
    /// Copies `first < second` both contain `edge`.
    SharedEdge { first: usize, second: usize, edge: Edge },
}

impl std::fmt::Display for SystemViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SystemViolation::NotACopy { copy } => write!(f, "copy {copy} is not isomorphic to the pattern"),
            SystemViolation::SharedEdge { first, second, edge } => {
                write!(f, "copies {first} and {second} share the edge {edge}")
            }
        }
    }
}

impl CopySystem {
    /// An empty system on `n` vertices.
    pub fn empty(n: usize, pattern: Graph) -> Result<Self> {
        CopySystem::new(n, pattern, Vec::<Vec<Edge>>::new())
    }

    /// Builds a system. Edge lists are sorted; out-of-range endpoints, loops
    /// and repeated edges inside one copy are rejected. Whether the copies
    /// really are edge-disjoint copies of `pattern` is checked by
    /// [`CopySystem::verify`].
    pub fn new<C, E>(n: usize, pattern: Graph, copies: C) -> Result<Self>
    where
        C: IntoIterator,
        C::Item: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        if pattern.edge_count() == 0 {
            return Err(Error::param("pattern graph must have at least one edge"));
        }
        let mut system = CopySystem {
            n,
            pattern,
            copies: Vec::new(),
            owner: vec![NO_OWNER; n * n],
            union: Graph::empty(n),
        };
        for copy in copies {
            system.push_copy(copy.into_iter().map(Into::into).collect())?;
        }
        Ok(system)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn copies(&self) -> &[Vec<Edge>] {
        &self.copies
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    /// Appends a copy, updating the color map.
    pub fn push_copy(&mut self, mut edges: Vec<Edge>) -> Result<()> {
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invariant(format!("edge {} repeated inside one copy", w[0])));
        }
        for e in &edges {
            if e.is_loop() || e.hi() >= self.n {
                return Err(Error::Invariant(format!("copy edge {e} is not a pair in 0..{}", self.n)));
            }
        }
        let color = self.copies.len() as u32;
        for &e in &edges {
            let slot = &mut self.owner[e.lo() * self.n + e.hi()];
            if *slot == NO_OWNER {
                *slot = color;
                self.union.push_edge(e);
            }
        }
        self.copies.push(edges);
        Ok(())
    }

    /// Removes the most recent copy.
    pub fn pop_copy(&mut self) -> Option<Vec<Edge>> {
        let edges = self.copies.pop()?;
        let color = self.copies.len() as u32;
        for &e in &edges {
            let slot = &mut self.owner[e.lo() * self.n + e.hi()];
            if *slot == color {
                *slot = NO_OWNER;
                self.union.remove_edge(e);
            }
        }
        Some(edges)
    }

    /// Same copies on a larger ground set.
    pub fn with_ground_size(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::param(format!("cannot shrink ground set from {} to {n}", self.n)));
        }
        CopySystem::new(n, self.pattern.clone(), self.copies.iter().cloned())
    }

    /// Keeps only the first `k` copies.
    pub fn truncated(&self, k: usize) -> Self {
        let mut s = self.clone();
        while s.len() > k {
            s.pop_copy();
        }
        s
    }

    /// Color (copy index) of the pair `uv`, if some copy contains it.
    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        if u == v || u >= self.n || v >= self.n {
            return None;
        }
        let e = Edge::new(u, v);
        let c = self.owner[e.lo() * self.n + e.hi()];
        (c != NO_OWNER).then_some(c as usize)
    }

    /// Checks that copies are pairwise edge-disjoint and each is isomorphic to
    /// the pattern (isolated pattern vertices ignored). Copies are scanned in
    /// order and the first problem found is returned.
    pub fn verify(&self) -> std::result::Result<(), SystemViolation> {
        let core = self.pattern.without_isolated();
        let form = core.canonical_form();
        for (i, copy) in self.copies.iter().enumerate() {
            if !spans_pattern(copy, &core, &form) {
                return Err(SystemViolation::NotACopy { copy: i });
            }
            for &e in copy {
                let first = self.owner[e.lo() * self.n + e.hi()] as usize;
                if first != i {
                    return Err(SystemViolation::SharedEdge { first, second: i, edge: e });
                }
            }
        }
        Ok(())
    }

    /// The simple graph formed by all copy edges.
    pub fn union_graph(&self) -> Graph {
        self.union.clone()
    }

    pub(crate) fn union_ref(&self) -> &Graph {
        &self.union
    }

    /// Number of copies with an edge at `v`.
    pub fn color_profile(&self, v: usize) -> usize {
        self.copies.iter().filter(|c| c.iter().any(|e| e.contains(v))).count()
    }

    /// Vertices of copy `i`, sorted.
    pub fn copy_vertices(&self, i: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.copies[i].iter().flat_map(|e| [e.lo(), e.hi()]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

fn spans_pattern(copy: &[Edge], core: &Graph, form: &CanonicalForm) -> bool {
    if copy.len() != core.edge_count() {
        return false;
    }
    let mut vs: Vec<usize> = copy.iter().flat_map(|e| [e.lo(), e.hi()]).collect();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() != core.n() {
        return false;
    }
    let index = |v: usize| vs.binary_search(&v).expect("endpoint listed");
    let local = Graph::from_edge_set(vs.len(), copy.iter().map(|e| Edge::new(index(e.lo()), index(e.hi()))));
    local.canonical_form() == *form
}

/// Verifies a system: see [`CopySystem::verify`].
pub fn verify_system(system: &CopySystem) -> std::result::Result<(), SystemViolation> {
    system.verify()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(a: usize, b: usize, c: usize) -> Vec<(usize, usize)> {
        vec![(a, b), (b, c), (a, c)]
    }

    #[test]
    fn verify_examples() {
        let k3 = Graph::complete(3);
        let ok = CopySystem::new(6, k3.clone(), [tri(0, 1, 2), tri(3, 4, 5)]).unwrap();
        assert_eq!(ok.verify(), Ok(()));

        let shared = CopySystem::new(5, k3.clone(), [tri(1, 2, 3), tri(2, 3, 4)]).unwrap();
        assert_eq!(
            shared.verify(),
            Err(SystemViolation::SharedEdge { first: 0, second: 1, edge: Edge::new(2, 3) })
        );

        let path = CopySystem::new(4, k3, [vec![(1, 2), (2, 3)]]).unwrap();
        assert_eq!(path.verify(), Err(SystemViolation::NotACopy { copy: 0 }));
    }

    #[test]
    fn vertex_overlap_is_allowed() {
        let s = CopySystem::new(5, Graph::complete(3), [tri(0, 1, 2), tri(0, 3, 4)]).unwrap();
        assert_eq!(s.verify(), Ok(()));
        assert_eq!(s.color_profile(0), 2);
        assert_eq!(s.color_profile(3), 1);
    }

    #[test]
    fn union_examples() {
        let k3 = Graph::complete(3);
        let empty = CopySystem::empty(5, k3.clone()).unwrap();
        assert_eq!(empty.union_graph(), Graph::empty(5));
        assert_eq!(empty.color_profile(2), 0);
        let one = CopySystem::new(3, k3.clone(), [tri(0, 1, 2)]).unwrap();
        assert_eq!(one.union_graph(), k3);
    }

    #[test]
    fn push_pop_keeps_color_map() {
        let mut s = CopySystem::empty(4, Graph::complete(2)).unwrap();
        s.push_copy(vec![Edge::new(0, 1)]).unwrap();
        s.push_copy(vec![Edge::new(2, 3)]).unwrap();
        assert_eq!(s.color_of(3, 2), Some(1));
        s.pop_copy();
        assert_eq!(s.color_of(2, 3), None);
        assert_eq!(s.union_graph().edge_count(), 1);
    }

    #[test]
    fn rejects_malformed_copies() {
        let k2 = Graph::complete(2);
        assert!(CopySystem::new(3, k2.clone(), [vec![(0, 3)]]).is_err());
        assert!(CopySystem::new(3, k2.clone(), [vec![(1, 1)]]).is_err());
        assert!(CopySystem::new(3, k2, [vec![(0, 1), (1, 0)]]).is_err());
        assert!(CopySystem::empty(3, Graph::empty(2)).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let s = CopySystem::new(4, Graph::complete(3), [tri(0, 1, 2)]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(
            text,
            r#"{"n":4,"pattern":{"n":3,"edges":[[0,1],[0,2],[1,2]]},"copies":[[[0,1],[0,2],[1,2]]]}"#
        );
        let back: CopySystem = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}
