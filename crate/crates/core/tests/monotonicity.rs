use mcturan::graph::contains_subgraph;
use mcturan::optimizer::multicolor_turan_exact;
use mcturan::{Graph, SearchBudget};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pool() -> Vec<Graph> {
    vec![
        Graph::complete(2),
        Graph::path(3).unwrap(),
        Graph::complete(3),
        Graph::path(4).unwrap(),
        Graph::star(3).unwrap(),
        Graph::cycle(4).unwrap(),
    ]
}

fn ex(n: usize, f: &Graph, g: &Graph) -> usize {
    let r = multicolor_turan_exact(n, f, g, &SearchBudget::default()).unwrap();
    assert!(r.optimal);
    r.value
}

#[test]
fn monotone_in_pattern_forbidden_graph_and_order() {
    let pool = pool();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..20 {
        let n = rng.gen_range(3..=5);
        let f = pool.choose(&mut rng).unwrap();
        let g = pool.choose(&mut rng).unwrap();
        let base = ex(n, f, g);
        assert!(base <= ex(n + 1, f, g), "order: n={n} F={f:?} G={g:?}");
        for bigger in pool.iter().filter(|h| contains_subgraph(h, f)) {
            assert!(ex(n, bigger, g) <= base, "pattern: n={n} F={f:?} F'={bigger:?} G={g:?}");
        }
        for bigger in pool.iter().filter(|h| contains_subgraph(h, g)) {
            assert!(base <= ex(n, f, bigger), "forbidden: n={n} F={f:?} G={g:?} G'={bigger:?}");
        }
    }
}
