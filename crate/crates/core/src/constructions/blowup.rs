use super::{is_prime, largest_prime_at_most, place, ConstructionReport, Validity};
use crate::error::{Error, Result};
use crate::graph::{chromatic_number, has_homomorphism, proper_colouring, Graph};
use crate::packing::CopySystem;

/// Decomposes `F[m]` into `m²` transversal copies of `F` for a prime
/// `m >= χ(F)`.
///
/// Class `w` of the blow-up is `w*m .. w*m + m`, and `ℓ` labels the vertices
/// of `F` by `Z_m` with adjacent vertices labelled differently (`ℓ(w) = w`
/// when that works, otherwise a proper `m`-colouring). Copy `(a, b)` for
/// `a, b ∈ Z_m` sends `w` to position `a*ℓ(w) + b (mod m)` of class `w`. For
/// an edge `uv` of `F` the map `(a, b) ↦` (pair of positions) is a bijection
/// onto the `m²` pairs between the classes, because `ℓ(u) - ℓ(v)` is
/// invertible mod `m`.
pub fn blowup_decomposition(f: &Graph, m: usize) -> Result<CopySystem> {
    if !is_prime(m) {
        return Err(Error::param(format!("blow-up size {m} is not prime")));
    }
    let identity = f.edges().iter().all(|e| (e.hi() - e.lo()) % m != 0);
    let labels = if identity {
        (0..f.n()).map(|w| w % m).collect()
    } else {
        proper_colouring(f, m).ok_or_else(|| Error::param(format!("blow-up size {m} is smaller than χ(F)")))?
    };
    let copies = (0..m).flat_map(|a| {
        let labels = &labels;
        (0..m).map(move |b| {
            let vertices: Vec<usize> = (0..f.n()).map(|w| w * m + (a * labels[w] + b) % m).collect();
            place(f, &vertices)
        })
    });
    CopySystem::new(f.n() * m, f.clone(), copies)
}

/// Packs `F[m]`, for the largest prime `m` with `m * v(F) <= n`, into `n`
/// vertices. Without a homomorphism `G -> F` the blow-up contains no `G`, so
/// no multicolor `G` either.
pub fn blowup_lower_bound(f: &Graph, g: &Graph, n: usize) -> Result<ConstructionReport> {
    if has_homomorphism(g, f) {
        return Err(Error::Precondition(
            "a homomorphism G -> F exists, so F[m] may contain G".into(),
        ));
    }
    let m = largest_prime_at_most(n / f.n().max(1))
        .filter(|&m| m >= chromatic_number(f))
        .ok_or_else(|| Error::param(format!("n = {n} is too small for a prime blow-up of a {}-vertex F", f.n())))?;
    let system = blowup_decomposition(f, m)?.with_ground_size(n)?;
    Ok(ConstructionReport::certify(system, g, Validity::Exact, "blowup-transversal")
        .with_note(format!("F[{m}] decomposed into {} transversal copies", m * m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_partition(f: &Graph, m: usize) {
        let s = blowup_decomposition(f, m).unwrap();
        assert_eq!(s.len(), m * m);
        assert_eq!(s.verify(), Ok(()));
        assert_eq!(s.union_graph(), f.blow_up(m).unwrap());
    }

    #[test]
    fn decomposes_blow_ups() {
        assert_partition(&Graph::complete(3), 3);
        assert_partition(&Graph::complete(2), 2);
        assert_partition(&Graph::path(3).unwrap(), 3);
        assert_partition(&Graph::cycle(5).unwrap(), 3);
        assert_partition(&Graph::path(4).unwrap(), 2);
        assert_partition(&Graph::star(3).unwrap(), 2);
        assert_partition(&Graph::cycle(5).unwrap(), 5);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(blowup_decomposition(&Graph::complete(3), 4).is_err());
        assert!(blowup_decomposition(&Graph::complete(3), 2).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        let k3 = Graph::complete(3);
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(blowup_lower_bound(&k3, &c5, 9), Err(Error::Precondition(_))));

        let r = blowup_lower_bound(&c5, &k3, 25).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.copy_count, 25);

        let r = blowup_lower_bound(&Graph::complete(2), &k3, 6).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.copy_count, 9);
        assert!(r.system.union_graph().is_isomorphic(&Graph::biclique(3, 3).unwrap()));
    }
}
