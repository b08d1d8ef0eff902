use mcturan::optimizer::multicolor_turan_exact;
use mcturan::{Graph, SearchBudget};

fn star_formula(n: usize, s: usize, v: usize) -> usize {
    n * (s - 1) / v
}

#[test]
fn exact_values_meet_the_star_formula() {
    for f in [Graph::complete(3), Graph::path(3).unwrap()] {
        for s in [2usize, 3] {
            let g = Graph::star(s).unwrap();
            let base = f.n().pow(s as u32 - 1);
            for n in [base, 2 * base] {
                let r = multicolor_turan_exact(n, &f, &g, &SearchBudget::default()).unwrap();
                assert!(r.optimal);
                assert_eq!(r.value, star_formula(n, s, f.n()), "F={f:?} s={s} n={n}");
                assert!(r.witness.find_multicolor(&g).is_none());
            }
            for n in 1..=9 {
                let r = multicolor_turan_exact(n, &f, &g, &SearchBudget::default()).unwrap();
                assert!(r.optimal, "n={n}");
                assert!(r.value <= star_formula(n, s, f.n()), "F={f:?} s={s} n={n}");
            }
        }
    }
}
