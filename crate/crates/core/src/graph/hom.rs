use super::{search_order, Graph};

/// Whether an edge-preserving (not necessarily injective) map `g -> f` exists.
pub fn has_homomorphism(g: &Graph, f: &Graph) -> bool {
    if g.edge_count() > 0 && f.edge_count() == 0 {
        return false;
    }
    if g.n() > 0 && f.n() == 0 {
        return false;
    }
    let order = search_order(g);
    let mut image = vec![usize::MAX; g.n()];
    extend(g, f, &order, 0, &mut image)
}

fn extend(g: &Graph, f: &Graph, order: &[usize], depth: usize, image: &mut [usize]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for target in 0..f.n() {
        let ok = g.neighbors(v).iter().all(|&w| image[w] == usize::MAX || f.has_edge(image[w], target));
        if ok {
            image[v] = target;
            if extend(g, f, order, depth + 1, image) {
                return true;
            }
            image[v] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5).unwrap();
        let k3 = Graph::complete(3);
        assert!(has_homomorphism(&c5, &k3));
        assert!(!has_homomorphism(&k3, &c5));
        assert!(has_homomorphism(&Graph::cycle(6).unwrap(), &Graph::complete(2)));
        assert!(!has_homomorphism(&c5, &Graph::complete(2)));
    }

    #[test]
    fn edgeless_target() {
        assert!(!has_homomorphism(&Graph::complete(2), &Graph::empty(3)));
        assert!(has_homomorphism(&Graph::empty(2), &Graph::empty(1)));
    }
}
