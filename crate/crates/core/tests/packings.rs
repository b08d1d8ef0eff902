use std::collections::BTreeMap;

use mcturan::optimizer::{fractional_packing, max_packing, ratio};
use mcturan::{Graph, SearchBudget};
use mcturan_testkit::{flat_packing_number, random_graph};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn fractional_packings_of_blowups() {
    for f in [Graph::complete(3), Graph::path(3).unwrap()] {
        for m in [2usize, 3] {
            let fp = fractional_packing(&f.blow_up(m).unwrap(), &f).unwrap();
            assert_eq!(fp.value, ratio((m * m) as i64, 1));
            assert!(fp.max_edge_load() <= ratio(1, 1));
            let total: BigRational = fp.weights.iter().map(|(_, w)| w.clone()).sum();
            assert_eq!(total, fp.value);
        }
    }
    assert_eq!(fractional_packing(&Graph::complete(4), &Graph::complete(3)).unwrap().value, ratio(2, 1));
}

#[test]
fn triangle_packings_of_small_cliques() {
    let k3 = Graph::complete(3);
    let r = max_packing(&Graph::complete(7), &k3, &SearchBudget::default()).unwrap();
    assert!(r.optimal);
    assert_eq!(r.value, 7);
    let mut pairs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for i in 0..r.witness.len() {
        let t = r.witness.copy_vertices(i);
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            *pairs.entry((a, b)).or_default() += 1;
        }
    }
    assert_eq!(pairs.len(), 21, "a Fano plane covers every pair once");
    let r = max_packing(&Graph::complete(6), &k3, &SearchBudget::default()).unwrap();
    assert_eq!((r.value, r.optimal), (4, true));
    assert_eq!(max_packing(&Graph::complete(4), &k3, &SearchBudget::default()).unwrap().value, 1);
}

#[test]
fn packing_chain_on_random_hosts() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let patterns = [Graph::complete(3), Graph::path(3).unwrap(), Graph::complete(2), Graph::cycle(4).unwrap()];
    for i in 0..50 {
        let n = rng.gen_range(3..=8);
        let p = rng.gen_range(0.3..0.9);
        let host = random_graph(&mut rng, n, p);
        let f = &patterns[i % patterns.len()];
        let nu = max_packing(&host, f, &SearchBudget::default()).unwrap();
        assert!(nu.optimal);
        if host.edge_count() <= 16 {
            assert_eq!(nu.value, flat_packing_number(&host, f));
        }
        let frac = fractional_packing(&host, f).unwrap();
        let nu_q = ratio(nu.value as i64, 1);
        let ceiling = ratio(host.edge_count() as i64, f.edge_count() as i64);
        assert!(nu_q <= frac.value && frac.value <= ceiling, "host {host:?}");
    }
}
