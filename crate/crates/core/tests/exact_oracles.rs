use mcturan::graph::turan_number_exact;
use mcturan::optimizer::{bound_catalog, multicolor_turan_exact, Direction};
use mcturan::{Graph, SearchBudget};
use mcturan_testkit::{copies_in, complete_edges, flat_multicolor_turan, flat_turan_number, has_multicolor};

fn exact(n: usize, f: &Graph, g: &Graph) -> usize {
    let r = multicolor_turan_exact(n, f, g, &SearchBudget::default()).unwrap();
    assert!(r.optimal, "n={n} not optimal");
    let copies: Vec<Vec<(usize, usize)>> =
        r.witness.copies().iter().map(|c| c.iter().map(|e| (e.lo(), e.hi())).collect()).collect();
    assert!(!has_multicolor(n, &copies, g), "witness has a multicolor copy");
    let all = copies_in(n, &complete_edges(n), f);
    assert!(copies.iter().all(|c| all.contains(c)), "witness copy is not a copy of F");
    r.value
}

#[test]
fn branch_and_bound_matches_flat_enumeration() {
    let fs = [Graph::complete(2), Graph::complete(3), Graph::path(3).unwrap()];
    let gs = [Graph::complete(3), Graph::star(2).unwrap(), Graph::path(4).unwrap()];
    for f in &fs {
        for g in &gs {
            for n in 1..=6 {
                assert_eq!(exact(n, f, g), flat_multicolor_turan(n, f, g), "n={n} F={f:?} G={g:?}");
            }
        }
    }
}

#[test]
fn single_edge_pattern_matches_turan_numbers() {
    let k2 = Graph::complete(2);
    for g in [Graph::complete(3), Graph::cycle(4).unwrap(), Graph::path(4).unwrap(), Graph::star(3).unwrap()] {
        for n in 2..=6 {
            let t = turan_number_exact(n, &g, &SearchBudget::default()).unwrap().value;
            assert_eq!(t, flat_turan_number(n, &g), "n={n}");
            assert_eq!(exact(n, &k2, &g), t, "n={n}");
        }
    }
    for n in 4..=7 {
        assert_eq!(exact(n, &k2, &Graph::complete(3)), n * n / 4);
    }
}

#[test]
fn exact_values_respect_catalog() {
    let cases = [
        (Graph::complete(3), Graph::complete(3)),
        (Graph::complete(3), Graph::star(3).unwrap()),
        (Graph::path(3).unwrap(), Graph::cycle(4).unwrap()),
        (Graph::complete(2), Graph::path(4).unwrap()),
        (Graph::path(3).unwrap(), Graph::path(5).unwrap()),
    ];
    for (f, g) in &cases {
        for n in 3..=7 {
            let value = exact(n, f, g);
            for r in bound_catalog(n, f, g).unwrap() {
                if !r.is_binding() {
                    continue;
                }
                match r.direction {
                    Direction::Lower => assert!(r.floor() <= value, "{} exceeds {value}", r.provenance),
                    Direction::Upper => assert!(r.floor() >= value, "{} below {value}", r.provenance),
                    Direction::Reference => {}
                }
            }
        }
    }
}

#[test]
fn known_small_values() {
    let k3 = Graph::complete(3);
    assert_eq!(exact(6, &k3, &Graph::star(2).unwrap()), 2);
    assert_eq!(exact(5, &k3, &k3), 2);
    let v = exact(6, &k3, &k3);
    assert!((2..=4).contains(&v));
    assert_eq!(v, flat_multicolor_turan(6, &k3, &k3));
}
