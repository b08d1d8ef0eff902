//! Acceptance suite: one PASS/FAIL line per criterion, all at exact tolerance.
//! Run with `cargo test -p mcturan-cli --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use mcturan::constructions::{
    blowup_decomposition, blowup_lower_bound, has_three_term_progression, ruzsa_szemeredi_construction,
    sts_construction, sts_lower_bound, three_ap_free_set, turan_packing, ReportFailure,
};
use mcturan::graph::{chromatic_number, contains_subgraph, enumerate_copies};
use mcturan::hypergraph::{contains_berge, LinearHypergraph};
use mcturan::optimizer::{fractional_packing, max_packing, multicolor_turan_exact, ratio};
use mcturan::{CopySystem, Graph, SearchBudget};
use mcturan_testkit::{flat_multicolor_turan, flat_packing_number, has_multicolor, random_graph, random_linear_triples};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn exact(n: usize, f: &Graph, g: &Graph) -> Result<(usize, CopySystem), String> {
    let r = multicolor_turan_exact(n, f, g, &SearchBudget::default()).map_err(|e| e.to_string())?;
    ensure!(r.optimal, "n={n}: search not optimal");
    Ok((r.value, r.witness))
}

fn k(n: usize) -> Graph {
    Graph::complete(n)
}

fn p(n: usize) -> Graph {
    Graph::path(n).unwrap()
}

fn triangle_pairs(s: &CopySystem) -> BTreeMap<(usize, usize), usize> {
    let mut count = BTreeMap::new();
    for i in 0..s.len() {
        let t = s.copy_vertices(i);
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            *count.entry((a, b)).or_default() += 1;
        }
    }
    count
}

fn criterion_1() -> Outcome {
    for f in [k(3), p(3)] {
        for s in [2usize, 3] {
            let g = Graph::star(s).unwrap();
            let formula = |n: usize| n * (s - 1) / f.n();
            let base = f.n().pow(s as u32 - 1);
            for n in [base, 2 * base] {
                let (value, witness) = exact(n, &f, &g)?;
                ensure!(value == formula(n), "F={f:?} s={s} n={n}: {value} != {}", formula(n));
                ensure!(witness.find_multicolor(&g).is_none(), "witness has a multicolor star");
            }
            for n in 1..=9 {
                let (value, _) = exact(n, &f, &g)?;
                ensure!(value <= formula(n), "F={f:?} s={s} n={n}: {value} > {}", formula(n));
            }
        }
    }
    Ok("F in {K3, P3}, s in {2, 3}".into())
}

fn criterion_2() -> Outcome {
    for n in 4..=7 {
        let (value, _) = exact(n, &k(2), &k(3))?;
        ensure!(value == n * n / 4, "n={n}: {value} != {}", n * n / 4);
    }
    Ok("ex_K2(n, K3) = floor(n²/4) for n = 4..7".into())
}

fn criterion_3() -> Outcome {
    let (f, g, n) = (k(3), k(4), 12usize);
    let r = turan_packing(&f, &g, n).map_err(|e| e.to_string())?;
    let chi = chromatic_number(&g);
    let density = ratio(((chi - 2) * n * n) as i64, (2 * f.edge_count() * (chi - 1)) as i64);
    ensure!(r.verified, "report not verified");
    ensure!(r.system.verify().is_ok() && r.system.find_multicolor(&g).is_none(), "independent recheck failed");
    ensure!(ratio(r.copy_count as i64, 1) == density, "{} triangles, formula {density}", r.copy_count);
    ensure!(r.copy_count == 16, "{} triangles", r.copy_count);
    Ok(format!("{} verified triangles on 12 vertices", r.copy_count))
}

fn criterion_4() -> Outcome {
    for f in [k(3), Graph::cycle(5).unwrap(), p(3)] {
        for m in [3usize, 5] {
            let s = blowup_decomposition(&f, m).map_err(|e| e.to_string())?;
            ensure!(s.len() == m * m, "F={f:?} m={m}: {} copies", s.len());
            ensure!(s.verify().is_ok(), "F={f:?} m={m}: copies overlap");
            let covered: usize = s.copies().iter().map(Vec::len).sum();
            ensure!(covered == f.edge_count() * m * m, "F={f:?} m={m}: covered {covered}");
            ensure!(s.union_graph() == f.blow_up(m).unwrap(), "F={f:?} m={m}: union is not F[m]");
        }
    }
    let r = blowup_lower_bound(&Graph::cycle(5).unwrap(), &k(3), 25).map_err(|e| e.to_string())?;
    ensure!(r.verified && r.system.find_multicolor(&k(3)).is_none(), "C5 blow-up has a multicolor K3");
    Ok("F in {K3, C5, P3}, m in {3, 5}; C5/K3 report verified".into())
}

fn criterion_5() -> Outcome {
    for f in [k(3), p(3)] {
        for m in [2usize, 3] {
            let fp = fractional_packing(&f.blow_up(m).unwrap(), &f).map_err(|e| e.to_string())?;
            ensure!(fp.value == ratio((m * m) as i64, 1), "F={f:?} m={m}: {}", fp.value);
        }
    }
    Ok("fractional packing of F[m] is m²".into())
}

fn criterion_6() -> Outcome {
    let budget = SearchBudget::default();
    let r = max_packing(&k(7), &k(3), &budget).map_err(|e| e.to_string())?;
    ensure!(r.optimal && r.value == 7, "K7: {}", r.value);
    let pairs = triangle_pairs(&r.witness);
    ensure!(pairs.len() == 21 && pairs.values().all(|&c| c == 1), "K7 witness is not a Fano plane");
    let r = max_packing(&k(6), &k(3), &budget).map_err(|e| e.to_string())?;
    ensure!(r.optimal && r.value == 4, "K6: {}", r.value);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let patterns = [k(3), p(3), k(2), Graph::cycle(4).unwrap()];
    for i in 0..50 {
        let n = rng.gen_range(3..=8);
        let density = rng.gen_range(0.3..0.9);
        let host = random_graph(&mut rng, n, density);
        let f = &patterns[i % patterns.len()];
        let nu = max_packing(&host, f, &budget).map_err(|e| e.to_string())?;
        ensure!(nu.optimal, "host {i} not solved");
        if host.edge_count() <= 16 {
            ensure!(nu.value == flat_packing_number(&host, f), "host {i}: oracle disagrees");
        }
        let frac = fractional_packing(&host, f).map_err(|e| e.to_string())?.value;
        let nu_q = ratio(nu.value as i64, 1);
        let ceiling = ratio(host.edge_count() as i64, f.edge_count() as i64);
        ensure!(nu_q <= frac && frac <= ceiling, "host {i}: {nu_q} <= {frac} <= {ceiling} fails");
    }
    Ok("K7 -> 7 (Fano), K6 -> 4, 50 random hosts".into())
}

fn criterion_7() -> Outcome {
    for n in [7usize, 9, 13, 15] {
        let s = sts_construction(n).map_err(|e| e.to_string())?;
        ensure!(s.len() == n * (n - 1) / 6, "n={n}: {} triples", s.len());
        let pairs = triangle_pairs(&s);
        ensure!(pairs.len() == n * (n - 1) / 2 && pairs.values().all(|&c| c == 1), "n={n}: not a Steiner system");
    }
    let ok = sts_lower_bound(7, 5).map_err(|e| e.to_string())?;
    ensure!(ok.verified && ok.system.find_multicolor(&k(5)).is_none(), "STS(7) vs K5 not verified");
    let bad = sts_lower_bound(7, 4).map_err(|e| e.to_string())?;
    ensure!(!bad.verified, "STS(7) vs K4 reported valid");
    match &bad.failure {
        Some(ReportFailure::Multicolor { witness }) => {
            ensure!(witness.is_valid_for(&bad.system), "multicolor K4 witness does not check");
        }
        other => return Err(format!("STS(7) vs K4 failure is {other:?}")),
    }
    Ok("n in {7, 9, 13, 15}; (7, 5) valid; (7, 4) invalid with witness".into())
}

fn criterion_8() -> Outcome {
    for size in 1..=15 {
        let r = ruzsa_szemeredi_construction(size).map_err(|e| e.to_string())?;
        let a = three_ap_free_set(size);
        ensure!(!has_three_term_progression(&a), "k={size}: A has a progression");
        ensure!(r.verified && r.system.find_multicolor(&k(3)).is_none(), "k={size}: multicolor triangle");
        ensure!(r.copy_count == size * a.len(), "k={size}: {} != k|A|", r.copy_count);
        let union = r.system.union_graph();
        let mut per_edge: BTreeMap<_, usize> = BTreeMap::new();
        for t in enumerate_copies(&union, &k(3)) {
            for e in t {
                *per_edge.entry(e).or_default() += 1;
            }
        }
        ensure!(per_edge.len() == union.edge_count(), "k={size}: an edge lies in no triangle");
        ensure!(per_edge.values().all(|&c| c == 1), "k={size}: an edge lies in two triangles");
    }
    Ok("k = 1..15".into())
}

fn criterion_9() -> Outcome {
    let targets = [k(3), Graph::cycle(4).unwrap(), Graph::cycle(5).unwrap(), k(4)];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut disagreements = 0;
    for _ in 0..200 {
        let n = rng.gen_range(3..=9);
        let attempts = rng.gen_range(1..=12);
        let h = LinearHypergraph::new(n, 3, random_linear_triples(&mut rng, n, attempts)).map_err(|e| e.to_string())?;
        let s = h.to_copy_system();
        let pairs: Vec<Vec<(usize, usize)>> =
            s.copies().iter().map(|c| c.iter().map(|e| (e.lo(), e.hi())).collect()).collect();
        for g in &targets {
            let berge = contains_berge(&h, g);
            let multicolor = s.find_multicolor(g).is_some();
            let oracle = has_multicolor(n, &pairs, g);
            if berge.is_some() != multicolor || multicolor != oracle || berge.is_some_and(|w| !w.is_valid_for(&h, g)) {
                disagreements += 1;
            }
        }
    }
    ensure!(disagreements == 0, "{disagreements} disagreements");
    Ok("200 hypergraphs x 4 targets, 0 disagreements".into())
}

fn criterion_10() -> Outcome {
    let pool = [k(2), p(3), k(3), p(4), Graph::star(3).unwrap(), Graph::cycle(4).unwrap()];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut violations = Vec::new();
    for _ in 0..20 {
        let n = rng.gen_range(3..=5);
        let f = pool.choose(&mut rng).unwrap();
        let g = pool.choose(&mut rng).unwrap();
        let base = exact(n, f, g)?.0;
        if base > exact(n + 1, f, g)?.0 {
            violations.push(format!("order n={n}"));
        }
        for bigger in pool.iter().filter(|h| contains_subgraph(h, f)) {
            if exact(n, bigger, g)?.0 > base {
                violations.push(format!("pattern n={n}"));
            }
        }
        for bigger in pool.iter().filter(|h| contains_subgraph(h, g)) {
            if base > exact(n, f, bigger)?.0 {
                violations.push(format!("forbidden n={n}"));
            }
        }
    }
    ensure!(violations.is_empty(), "violations: {violations:?}");
    Ok("20 sampled triples with n <= 6, 0 violations".into())
}

fn criterion_11() -> Outcome {
    let mut cases = 0;
    for f in [k(2), k(3), p(3)] {
        for g in [k(3), Graph::star(2).unwrap(), p(4)] {
            for n in 1..=6 {
                let (value, witness) = exact(n, &f, &g)?;
                let oracle = flat_multicolor_turan(n, &f, &g);
                ensure!(value == oracle, "n={n} F={f:?} G={g:?}: {value} != {oracle}");
                ensure!(witness.verify().is_ok() && witness.find_multicolor(&g).is_none(), "bad witness");
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases agree with flat enumeration"))
}

fn run_cli(args: &[&str], workers: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_mcturan"))
        .args(args)
        .env("MCTURAN_WORKERS", workers)
        .env_remove("MCTURAN_BUDGET")
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.code() == Some(0), "{args:?} exited with {:?}", out.status.code());
    Ok(out.stdout)
}

fn criterion_12() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let fano = dir.path().join("fano.json");
    std::fs::write(&fano, r#"{"n":7,"r":3,"edges":[[0,1,2],[0,3,4],[0,5,6],[1,3,5],[1,4,6],[2,3,6],[2,4,5]]}"#)
        .map_err(|e| e.to_string())?;
    let fano = fano.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["exact", "--F", "K3", "--G", "star:2", "--n", "6"],
        vec!["exact", "--F", "P3", "--G", "P4", "--n", "6"],
        vec!["construct", "sts", "--n", "9"],
        vec!["construct", "rs", "--k", "6"],
        vec!["construct", "turan", "--F", "K3", "--G", "K4", "--n", "12"],
        vec!["construct", "blowup", "--F", "C5", "--G", "K3", "--n", "25"],
        vec!["table", "--F", "K3", "--G", "K3", "--n", "3..7"],
        vec!["table", "--F", "K3", "--G", "star:2", "--n", "3..9", "--format", "text"],
        vec!["convert", "--from", "hypergraph", "--to", "system", fano],
        vec!["convert", "--from", "hypergraph", "--to", "graph6", fano],
    ];
    for args in &commands {
        let reference = run_cli(args, "1")?;
        for workers in ["1", "2", "4"] {
            ensure!(run_cli(args, workers)? == reference, "{args:?} differs under {workers} workers");
        }
    }
    Ok(format!("{} commands byte-identical across 4 runs with 1, 2 and 4 workers", commands.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 12] = [
        ("star formula exactness", criterion_1),
        ("ordinary Turán reduction", criterion_2),
        ("Turán-graph packing witness", criterion_3),
        ("blow-up decomposition", criterion_4),
        ("fractional packing identity", criterion_5),
        ("packing sanity", criterion_6),
        ("Steiner triple systems", criterion_7),
        ("Ruzsa-Szemerédi construction", criterion_8),
        ("Berge equivalence", criterion_9),
        ("monotonicity", criterion_10),
        ("oracle equivalence", criterion_11),
        ("determinism", criterion_12),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name}: {why} ({secs:.2}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
