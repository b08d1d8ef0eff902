//! Brute-force reference implementations for testing.
//!
//! Nothing here calls the search code of `mcturan`: copies are enumerated by
//! permuting vertices, multicolor copies are found by trying every injective
//! map, and optima come from enumerating every feasible family. The library
//! types are used only as containers.

use std::collections::{BTreeMap, BTreeSet};

use mcturan::{Edge, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Copy = Vec<(usize, usize)>;

fn norm(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Calls `visit` with every injective map `0..k -> 0..n`.
pub fn for_each_injection(k: usize, n: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(map: &mut Vec<usize>, used: &mut [bool], k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if map.len() == k {
            return visit(map);
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                map.push(v);
                let stop = go(map, used, k, visit);
                map.pop();
                used[v] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    if k <= n {
        go(&mut Vec::new(), &mut vec![false; n], k, visit);
    }
}

fn pattern_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.lo(), e.hi())).collect()
}

/// Every copy of `f` inside `host` (given as an edge set on `n` vertices), as
/// sorted edge lists, in sorted order.
pub fn copies_in(n: usize, host: &BTreeSet<(usize, usize)>, f: &Graph) -> Vec<Copy> {
    let fe = pattern_edges(f);
    let mut out = BTreeSet::new();
    for_each_injection(f.n(), n, &mut |m| {
        let mut c: Copy = fe.iter().map(|&(a, b)| norm(m[a], m[b])).collect();
        if c.iter().all(|e| host.contains(e)) {
            c.sort_unstable();
            out.insert(c);
        }
        false
    });
    out.into_iter().collect()
}

pub fn complete_edges(n: usize) -> BTreeSet<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

pub fn graph_edges(g: &Graph) -> BTreeSet<(usize, usize)> {
    pattern_edges(g).into_iter().collect()
}

/// Whether the colored union of `copies` has a copy of `g` with all edge
/// colors distinct, by trying every injective vertex map.
pub fn has_multicolor(n: usize, copies: &[Copy], g: &Graph) -> bool {
    let mut color: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (i, c) in copies.iter().enumerate() {
        for &e in c {
            color.insert(e, i);
        }
    }
    let ge = pattern_edges(g);
    let mut found = false;
    for_each_injection(g.n(), n, &mut |m| {
        let mut seen = BTreeSet::new();
        found = ge.iter().all(|&(a, b)| color.get(&norm(m[a], m[b])).is_some_and(|&c| seen.insert(c)));
        found
    });
    found
}

/// Whether `host` contains `g`, by trying every injective vertex map.
pub fn contains(n: usize, host: &BTreeSet<(usize, usize)>, g: &Graph) -> bool {
    let ge = pattern_edges(g);
    let mut found = false;
    for_each_injection(g.n(), n, &mut |m| {
        found = ge.iter().all(|&(a, b)| host.contains(&norm(m[a], m[b])));
        found
    });
    found
}

/// Enumerates every family of pairwise edge-disjoint copies (in increasing
/// candidate order) that `keep` accepts; families failing `keep` are not
/// extended, so `keep` must be closed under taking subfamilies. Returns the
/// largest accepted size.
fn largest_family(cands: &[Copy], keep: &mut dyn FnMut(&[Copy]) -> bool) -> usize {
    fn go(cands: &[Copy], start: usize, fam: &mut Vec<Copy>, used: &mut BTreeSet<(usize, usize)>, keep: &mut dyn FnMut(&[Copy]) -> bool) -> usize {
        let mut best = fam.len();
        for i in start..cands.len() {
            if cands[i].iter().any(|e| used.contains(e)) {
                continue;
            }
            fam.push(cands[i].clone());
            if keep(fam) {
                used.extend(cands[i].iter().copied());
                best = best.max(go(cands, i + 1, fam, used, keep));
                for e in &cands[i] {
                    used.remove(e);
                }
            }
            fam.pop();
        }
        best
    }
    go(cands, 0, &mut Vec::new(), &mut BTreeSet::new(), keep)
}

/// `ex_F(n, G)` by enumerating every edge-disjoint family of copies of `F`
/// in `K_n` that has no multicolor `G`.
pub fn flat_multicolor_turan(n: usize, f: &Graph, g: &Graph) -> usize {
    let cands = copies_in(n, &complete_edges(n), f);
    largest_family(&cands, &mut |fam| !has_multicolor(n, fam, g))
}

/// `ν_F(host)` by enumerating every edge-disjoint family.
pub fn flat_packing_number(host: &Graph, f: &Graph) -> usize {
    let cands = copies_in(host.n(), &graph_edges(host), f);
    largest_family(&cands, &mut |_| true)
}

/// `ex(n, G)` by scanning all edge subsets of `K_n` (`n <= 7`).
pub fn flat_turan_number(n: usize, g: &Graph) -> usize {
    let all: Vec<(usize, usize)> = complete_edges(n).into_iter().collect();
    assert!(all.len() <= 21, "flat Turán oracle is limited to n <= 7");
    let mut best = 0;
    for mask in 0u32..(1 << all.len()) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let host: BTreeSet<(usize, usize)> = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
        if !contains(n, &host, g) {
            best = k;
        }
    }
    best
}

/// Uniform random graph `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<Edge> = complete_edges(n).into_iter().filter(|_| rng.gen_bool(p)).map(Edge::from).collect();
    Graph::from_edges(n, edges).expect("valid edges")
}

/// A random linear 3-uniform hypergraph on `n` vertices: random triples are
/// offered in turn and kept when they share at most one vertex with every
/// kept triple.
pub fn random_linear_triples<R: Rng>(rng: &mut R, n: usize, attempts: usize) -> Vec<Vec<usize>> {
    let mut kept: Vec<Vec<usize>> = Vec::new();
    let vertices: Vec<usize> = (0..n).collect();
    for _ in 0..attempts {
        let mut t: Vec<usize> = vertices.choose_multiple(rng, 3).copied().collect();
        t.sort_unstable();
        if kept.iter().all(|k| k.iter().filter(|v| t.contains(v)).count() <= 1) {
            kept.push(t);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_sanity() {
        let k3 = Graph::complete(3);
        assert_eq!(copies_in(4, &complete_edges(4), &k3).len(), 4);
        assert_eq!(flat_packing_number(&Graph::complete(6), &k3), 4);
        assert_eq!(flat_turan_number(5, &k3), 6);
        assert_eq!(flat_multicolor_turan(5, &k3, &k3), 2);
        let rainbow = vec![vec![(0, 1), (0, 2), (1, 2)], vec![(2, 3), (2, 4), (3, 4)], vec![(0, 4), (0, 5), (4, 5)]];
        assert!(has_multicolor(6, &rainbow, &k3));
        assert!(!has_multicolor(6, &rainbow[..2], &k3));
    }
}
