use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{enumerate_copies, Edge, Graph};

/// Upper limit on the number of pattern copies a search will enumerate.
pub(crate) const MAX_CANDIDATES: usize = 200_000;

/// Bitmask over the edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct EdgeMask(Vec<u64>);

impl EdgeMask {
    pub(crate) fn zeros(bits: usize) -> Self {
        EdgeMask(vec![0; bits.div_ceil(64).max(1)])
    }

    pub(crate) fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn intersects(&self, other: &EdgeMask) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    pub(crate) fn or_assign(&mut self, other: &EdgeMask) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// All copies of a pattern in a host, in lexicographic order, with edge masks.
pub(crate) struct Candidates {
    pub(crate) copies: Vec<Vec<Edge>>,
    pub(crate) masks: Vec<EdgeMask>,
    pub(crate) edge_bits: usize,
}

impl Candidates {
    pub(crate) fn new(host: &Graph, pattern: &Graph) -> Result<Self> {
        let copies = enumerate_copies(host, pattern);
        if copies.len() > MAX_CANDIDATES {
            return Err(Error::Resource(format!(
                "{} pattern copies exceed the limit of {MAX_CANDIDATES}",
                copies.len()
            )));
        }
        let index: HashMap<Edge, usize> = host.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let masks = copies
            .iter()
            .map(|c| {
                let mut m = EdgeMask::zeros(host.edge_count());
                for e in c {
                    m.set(index[e]);
                }
                m
            })
            .collect();
        Ok(Candidates { copies, masks, edge_bits: host.edge_count() })
    }

    pub(crate) fn len(&self) -> usize {
        self.copies.len()
    }

    /// Number of host edges covered by the candidates `ids`.
    pub(crate) fn coverage(&self, ids: &[usize]) -> usize {
        let mut m = EdgeMask::zeros(self.edge_bits);
        for &i in ids {
            m.or_assign(&self.masks[i]);
        }
        m.count()
    }
}
