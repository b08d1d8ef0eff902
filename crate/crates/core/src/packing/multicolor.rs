use serde::{Deserialize, Serialize};

use super::CopySystem;
use crate::graph::{search_order, Graph, VertexMap};

/// A copy of `target` inside a system whose edges all carry distinct colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulticolorWitness {
    pub target: Graph,
    pub embedding: VertexMap,
    /// Color of the image of each target edge, in `target.edges()` order.
    pub edge_colors: Vec<usize>,
}

impl MulticolorWitness {
    /// Host vertices used by the witness, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs = self.embedding.mapping.clone();
        vs.sort_unstable();
        vs
    }

    /// Checks the witness against `system`: the map embeds the target into
    /// the union, each listed color owns its edge and no color repeats.
    pub fn is_valid_for(&self, system: &CopySystem) -> bool {
        if !self.embedding.is_embedding(&self.target, system.union_ref())
            || self.edge_colors.len() != self.target.edge_count()
        {
            return false;
        }
        let mut colors = self.edge_colors.clone();
        colors.sort_unstable();
        if colors.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        self.embedding
            .edge_images(&self.target)
            .iter()
            .zip(&self.edge_colors)
            .all(|(e, &c)| c < system.len() && system.copies()[c].binary_search(e).is_ok())
    }
}

impl CopySystem {
    /// Searches for a multicolor copy of `target`: an embedding into the union
    /// graph whose edges come from pairwise distinct copies.
    ///
    /// Exact backtracking. Target vertices are taken largest degree first
    /// (then by number of already placed neighbours); host candidates are
    /// tried in increasing order of union-graph degree, then index. A color
    /// is never used twice along a branch. The first witness in this order is
    /// returned, so the answer is deterministic.
    pub fn find_multicolor(&self, target: &Graph) -> Option<MulticolorWitness> {
        RainbowSearch::new(self, target).run(&[])
    }

    /// Like [`CopySystem::find_multicolor`] but only reports witnesses that use
    /// an edge of copy `copy`. After adding a copy to a multicolor-free system
    /// this is the only place a new witness can appear.
    pub fn find_multicolor_through(&self, target: &Graph, copy: usize) -> Option<MulticolorWitness> {
        let search = RainbowSearch::new(self, target);
        for &host_edge in &self.copies[copy] {
            for te in target.edges() {
                for (a, b) in [(te.lo(), te.hi()), (te.hi(), te.lo())] {
                    if let Some(w) = search.run(&[(a, host_edge.lo()), (b, host_edge.hi())]) {
                        return Some(w);
                    }
                }
            }
        }
        None
    }

    pub fn is_multicolor_free(&self, target: &Graph) -> bool {
        self.find_multicolor(target).is_none()
    }
}

struct RainbowSearch<'a> {
    system: &'a CopySystem,
    target: &'a Graph,
    order: Vec<usize>,
    /// Host vertices sorted by (union degree, index).
    by_degree: Vec<usize>,
    rank: Vec<usize>,
}

struct State {
    image: Vec<usize>,
    used_vertex: Vec<bool>,
    used_color: Vec<bool>,
}

impl<'a> RainbowSearch<'a> {
    fn new(system: &'a CopySystem, target: &'a Graph) -> Self {
        let union = system.union_ref();
        let mut by_degree: Vec<usize> = (0..system.n()).collect();
        by_degree.sort_by_key(|&v| (union.degree(v), v));
        let mut rank = vec![0; system.n()];
        for (r, &v) in by_degree.iter().enumerate() {
            rank[v] = r;
        }
        RainbowSearch { system, target, order: search_order(target), by_degree, rank }
    }

    fn run(&self, seed: &[(usize, usize)]) -> Option<MulticolorWitness> {
        if self.target.n() > self.system.n() || self.target.edge_count() > self.system.len() {
            return None;
        }
        let mut st = State {
            image: vec![usize::MAX; self.target.n()],
            used_vertex: vec![false; self.system.n()],
            used_color: vec![false; self.system.len()],
        };
        for &(t, h) in seed {
            let mut taken = Vec::new();
            if st.image[t] != usize::MAX || st.used_vertex[h] || !self.try_place(&mut st, t, h, &mut taken) {
                return None;
            }
        }
        if self.extend(&mut st, 0) {
            let colors = self
                .target
                .edges()
                .iter()
                .map(|e| self.system.color_of(st.image[e.lo()], st.image[e.hi()]).expect("edge in union"))
                .collect();
            Some(MulticolorWitness {
                target: self.target.clone(),
                embedding: VertexMap { mapping: st.image },
                edge_colors: colors,
            })
        } else {
            None
        }
    }

    /// Maps `t -> h`, claiming the colors of the edges to placed neighbours.
    fn try_place(&self, st: &mut State, t: usize, h: usize, taken: &mut Vec<usize>) -> bool {
        for &w in self.target.neighbors(t) {
            let hw = st.image[w];
            if hw == usize::MAX {
                continue;
            }
            match self.system.color_of(h, hw) {
                Some(c) if !st.used_color[c] => {
                    st.used_color[c] = true;
                    taken.push(c);
                }
                _ => {
                    for c in taken.drain(..) {
                        st.used_color[c] = false;
                    }
                    return false;
                }
            }
        }
        st.image[t] = h;
        st.used_vertex[h] = true;
        true
    }

    fn unplace(&self, st: &mut State, t: usize, taken: &mut Vec<usize>) {
        st.used_vertex[st.image[t]] = false;
        st.image[t] = usize::MAX;
        for c in taken.drain(..) {
            st.used_color[c] = false;
        }
    }

    fn extend(&self, st: &mut State, depth: usize) -> bool {
        let Some(&t) = self.order.get(depth) else {
            return true;
        };
        if st.image[t] != usize::MAX {
            return self.extend(st, depth + 1);
        }
        let union = self.system.union_ref();
        let anchor = self.target.neighbors(t).iter().find(|&&w| st.image[w] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(&w) => {
                let mut c = union.neighbors(st.image[w]).to_vec();
                c.sort_by_key(|&v| self.rank[v]);
                c
            }
            None => self.by_degree.clone(),
        };
        let mut taken = Vec::new();
        for h in candidates {
            if st.used_vertex[h] || union.degree(h) < self.target.degree(t) {
                continue;
            }
            if !self.try_place(st, t, h, &mut taken) {
                continue;
            }
            if self.extend(st, depth + 1) {
                return true;
            }
            self.unplace(st, t, &mut taken);
        }
        false
    }
}
