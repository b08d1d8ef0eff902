use super::{three_ap_free_set, ConstructionReport, Validity};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::packing::CopySystem;

/// Tripartite triangle system on `X = [k]`, `Y = [2k]`, `Z = [3k]` (`6k`
/// vertices): the triangles `(x, x + a, x + 2a)` for `x ∈ X` and `a` in a
/// progression-free subset of `[k]`. Any triangle of the union has sides
/// `a, b, c` with `a + b = 2c`, so it is one of the placed triangles and no
/// multicolor triangle exists.
pub fn ruzsa_szemeredi_construction(k: usize) -> Result<ConstructionReport> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    let steps = three_ap_free_set(k);
    let (xi, yi, zi) = (|x: usize| x - 1, |y: usize| k + y - 1, |z: usize| 3 * k + z - 1);
    let copies = (1..=k).flat_map(|x| {
        steps.iter().map(move |&a| {
            let (p, q, r) = (xi(x), yi(x + a), zi(x + 2 * a));
            vec![Edge::new(p, q), Edge::new(p, r), Edge::new(q, r)]
        })
    });
    let system = CopySystem::new(6 * k, Graph::complete(3), copies)?;
    Ok(ConstructionReport::certify(system, &Graph::complete(3), Validity::Exact, "ruzsa-szemeredi")
        .with_note(format!("{k} x {} triangles from a progression-free set", steps.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_copies;

    #[test]
    fn single_triangle() {
        let r = ruzsa_szemeredi_construction(1).unwrap();
        assert_eq!((r.system.n(), r.copy_count), (6, 1));
        assert!(r.is_verified());
    }

    #[test]
    fn every_edge_in_one_triangle() {
        for k in 1..=8 {
            let r = ruzsa_szemeredi_construction(k).unwrap();
            assert!(r.is_verified());
            assert_eq!(r.copy_count, k * three_ap_free_set(k).len());
            let triangles = enumerate_copies(&r.system.union_graph(), &Graph::complete(3));
            assert_eq!(triangles.len(), r.copy_count, "k={k}");
        }
    }
}
