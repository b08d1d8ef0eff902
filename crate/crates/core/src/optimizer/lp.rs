//! Exact rational simplex for the fractional packing LP.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::candidates::Candidates;
use crate::error::Result;
use crate::graph::{Edge, Graph};

/// An optimal fractional `F`-packing: nonnegative copy weights whose sum over
/// the copies through any edge is at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalPacking {
    /// Copies with positive weight, in lexicographic order.
    pub weights: Vec<(Vec<Edge>, BigRational)>,
    /// `ν*_F(host)`, the total weight.
    pub value: BigRational,
}

impl FractionalPacking {
    /// Largest per-edge load, which must not exceed one.
    pub fn max_edge_load(&self) -> BigRational {
        let mut load: std::collections::BTreeMap<Edge, BigRational> = Default::default();
        for (copy, w) in &self.weights {
            for &e in copy {
                *load.entry(e).or_insert_with(BigRational::zero) += w;
            }
        }
        load.into_values().max().unwrap_or_else(BigRational::zero)
    }
}

/// `ν*_F(host)` solved exactly over the explicitly enumerated copies of `f`.
pub fn fractional_packing(host: &Graph, f: &Graph) -> Result<FractionalPacking> {
    let cands = Candidates::new(host, f)?;
    let index: std::collections::HashMap<Edge, usize> =
        host.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut rows = vec![vec![BigRational::zero(); cands.len()]; host.edge_count()];
    for (j, copy) in cands.copies.iter().enumerate() {
        for e in copy {
            rows[index[e]][j] = BigRational::one();
        }
    }
    // Edges in no copy give empty constraints.
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let rhs = vec![BigRational::one(); rows.len()];
    let objective = vec![BigRational::one(); cands.len()];
    let solution = maximize(&objective, &rows, &rhs);
    let weights = cands
        .copies
        .iter()
        .zip(solution.x)
        .filter(|(_, w)| w.is_positive())
        .map(|(c, w)| (c.clone(), w))
        .collect();
    Ok(FractionalPacking { weights, value: solution.value })
}

pub(crate) struct LpSolution {
    pub(crate) value: BigRational,
    pub(crate) x: Vec<BigRational>,
}

/// Maximises `c·x` subject to `A x <= b`, `x >= 0`, for `b >= 0` and a bounded
/// problem. Dense tableau, slack basis start, Bland's rule for both the
/// entering and the leaving variable.
pub(crate) fn maximize(c: &[BigRational], a: &[Vec<BigRational>], b: &[BigRational]) -> LpSolution {
    let (m, k) = (a.len(), c.len());
    debug_assert!(b.iter().all(|x| !x.is_negative()));
    let width = k + m;
    let mut tab: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.resize(width, BigRational::zero());
            r[k + i] = BigRational::one();
            r
        })
        .collect();
    let mut rhs = b.to_vec();
    let mut reduced: Vec<BigRational> = c.to_vec();
    reduced.resize(width, BigRational::zero());
    let mut value = BigRational::zero();
    let mut basis: Vec<usize> = (k..k + m).collect();

    while let Some(enter) = reduced.iter().position(|r| r.is_positive()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &tab[i][enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((row, _)) = leave else {
            panic!("packing LP is bounded by construction");
        };
        let pivot = tab[row][enter].clone();
        for x in tab[row].iter_mut() {
            *x /= &pivot;
        }
        rhs[row] /= &pivot;
        let pivot_row = tab[row].clone();
        let pivot_rhs = rhs[row].clone();
        for i in 0..m {
            if i == row || tab[i][enter].is_zero() {
                continue;
            }
            let factor = tab[i][enter].clone();
            for (x, p) in tab[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
            rhs[i] -= &factor * &pivot_rhs;
        }
        let factor = reduced[enter].clone();
        for (x, p) in reduced.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &factor * p;
            }
        }
        value += &factor * &pivot_rhs;
        basis[row] = enter;
    }

    let mut x = vec![BigRational::zero(); k];
    for (i, &v) in basis.iter().enumerate() {
        if v < k {
            x[v] = rhs[i].clone();
        }
    }
    LpSolution { value, x }
}

/// `p/q` as a [`BigRational`].
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lp() {
        // max x + y, x + 2y <= 4, 3x + y <= 6  ->  x = 8/5, y = 6/5.
        let c = vec![ratio(1, 1), ratio(1, 1)];
        let a = vec![vec![ratio(1, 1), ratio(2, 1)], vec![ratio(3, 1), ratio(1, 1)]];
        let b = vec![ratio(4, 1), ratio(6, 1)];
        let s = maximize(&c, &a, &b);
        assert_eq!(s.value, ratio(14, 5));
        assert_eq!(s.x, vec![ratio(8, 5), ratio(6, 5)]);
    }

    #[test]
    fn fractional_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(fractional_packing(&k3, &k3).unwrap().value, ratio(1, 1));
        let k4 = fractional_packing(&Graph::complete(4), &k3).unwrap();
        assert_eq!(k4.value, ratio(2, 1));
        assert!(k4.max_edge_load() <= ratio(1, 1));
        let none = fractional_packing(&Graph::biclique(2, 2).unwrap(), &k3).unwrap();
        assert_eq!(none.value, ratio(0, 1));
    }

    #[test]
    fn five_cycle_matching() {
        // Each edge of C_5 lies in two of its five 3-vertex paths, so
        // ν*_{P3}(C5) = 5/2 while ν_{P3}(C5) = 2.
        let fp = fractional_packing(&Graph::cycle(5).unwrap(), &Graph::path(3).unwrap()).unwrap();
        assert_eq!(fp.value, ratio(5, 2));
    }
}
