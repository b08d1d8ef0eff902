use std::str::FromStr;

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Named graph families accepted by [`Graph::generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Clique,
    Path,
    Cycle,
    Star,
    Biclique,
    Turan,
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "clique" => GraphKind::Clique,
            "path" => GraphKind::Path,
            "cycle" => GraphKind::Cycle,
            "star" => GraphKind::Star,
            "biclique" => GraphKind::Biclique,
            "turan" => GraphKind::Turan,
            other => return Err(Error::Parse(format!("unknown graph kind `{other}`"))),
        })
    }
}

impl Graph {
    /// `K_n`.
    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)));
        Graph::from_edge_set(n, edges)
    }

    /// `P_n`, the path on `n` vertices.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::param("a path needs at least one vertex"));
        }
        Ok(Graph::from_edge_set(n, (1..n).map(|v| Edge::new(v - 1, v))))
    }

    /// `C_n` for `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::param(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Ok(Graph::from_edge_set(n, (0..n).map(|v| Edge::new(v, (v + 1) % n))))
    }

    /// `K_{1,s}` with centre 0.
    pub fn star(s: usize) -> Result<Graph> {
        Graph::biclique(1, s)
    }

    /// `K_{a,b}` with the `a`-side on `0..a`.
    pub fn biclique(a: usize, b: usize) -> Result<Graph> {
        if a == 0 || b == 0 {
            return Err(Error::param(format!("biclique sides must be positive, got {a},{b}")));
        }
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| Edge::new(u, v)));
        Ok(Graph::from_edge_set(a + b, edges))
    }

    /// The Turán graph `T_{n,m}`: complete `m`-partite with class sizes differing
    /// by at most one. Classes are contiguous, larger classes first.
    pub fn turan(n: usize, m: usize) -> Result<Graph> {
        if m == 0 || n < m {
            return Err(Error::param(format!("Turán graph needs n >= m >= 1, got n={n}, m={m}")));
        }
        let class = turan_classes(n, m);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if class[u] != class[v] {
                    edges.push(Edge::new(u, v));
                }
            }
        }
        Ok(Graph::from_edge_set(n, edges))
    }

    /// Dispatches on `kind`. `star` accepts either `[s]` or `[1, s]`.
    pub fn generate(kind: GraphKind, params: &[usize]) -> Result<Graph> {
        let bad = || Error::param(format!("wrong parameters {params:?} for {kind:?}"));
        match (kind, params) {
            (GraphKind::Clique, &[n]) if n >= 1 => Ok(Graph::complete(n)),
            (GraphKind::Path, &[n]) => Graph::path(n),
            (GraphKind::Cycle, &[n]) => Graph::cycle(n),
            (GraphKind::Star, &[s]) | (GraphKind::Star, &[1, s]) => Graph::star(s),
            (GraphKind::Biclique, &[a, b]) => Graph::biclique(a, b),
            (GraphKind::Turan, &[n, m]) => Graph::turan(n, m),
            _ => Err(bad()),
        }
    }

    /// Parses the command-line graph mini-language: `K3`, `P4`, `C5`,
    /// `star:s`, `biclique:a,b`, `turan:n,m`.
    pub fn from_spec(spec: &str) -> Result<Graph> {
        let spec = spec.trim();
        let int = |s: &str| {
            s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad integer `{s}` in graph spec `{spec}`")))
        };
        let ints = |s: &str| s.split(',').map(int).collect::<Result<Vec<_>>>();
        if let Some((kind, args)) = spec.split_once(':') {
            return Graph::generate(kind.parse()?, &ints(args)?);
        }
        let (head, rest) = spec.split_at(spec.chars().next().map_or(0, char::len_utf8));
        match head {
            "K" => Graph::generate(GraphKind::Clique, &[int(rest)?]),
            "P" => Graph::path(int(rest)?),
            "C" => Graph::cycle(int(rest)?),
            _ => Err(Error::Parse(format!("unrecognised graph spec `{spec}`"))),
        }
    }
}

/// Class index of each vertex of `T_{n,m}`.
pub(crate) fn turan_classes(n: usize, m: usize) -> Vec<usize> {
    let (base, extra) = (n / m, n % m);
    let mut class = Vec::with_capacity(n);
    for c in 0..m {
        let size = base + usize::from(c < extra);
        class.extend(std::iter::repeat_n(c, size));
    }
    class
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        let t52 = Graph::turan(5, 2).unwrap();
        assert_eq!(t52.edge_count(), 6);
        assert!(t52.is_isomorphic(&Graph::biclique(2, 3).unwrap()));
        let star = Graph::generate(GraphKind::Star, &[1, 3]).unwrap();
        assert_eq!(star.edge_count(), 3);
        assert_eq!(star.star_size(), Some(3));
        assert_eq!(Graph::turan(12, 3).unwrap().edge_count(), 48);
    }

    #[test]
    fn invalid_parameters() {
        assert!(Graph::turan(2, 3).is_err());
        assert!(Graph::turan(3, 0).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::generate(GraphKind::Clique, &[1, 2]).is_err());
    }

    #[test]
    fn spec_language() {
        assert_eq!(Graph::from_spec("K3").unwrap(), Graph::complete(3));
        assert_eq!(Graph::from_spec("P4").unwrap(), Graph::path(4).unwrap());
        assert_eq!(Graph::from_spec("C5").unwrap(), Graph::cycle(5).unwrap());
        assert_eq!(Graph::from_spec("star:2").unwrap(), Graph::star(2).unwrap());
        assert_eq!(Graph::from_spec("biclique:2,3").unwrap(), Graph::biclique(2, 3).unwrap());
        assert_eq!(Graph::from_spec("turan:6,3").unwrap().edge_count(), 12);
        assert!(Graph::from_spec("Q3").is_err());
        assert!(Graph::from_spec("Kx").is_err());
    }
}
