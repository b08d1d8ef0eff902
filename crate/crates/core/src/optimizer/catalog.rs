use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::exact::check_pair;
use super::pack::greedy_pack;
use crate::budget::SearchBudget;
use crate::constructions::{
    blowup_lower_bound, clique_group_construction, ruzsa_szemeredi_construction, shared_independent_set_construction,
    star_construction, sts_lower_bound, turan_packing_with_budget, ConstructionReport, Validity,
};
use crate::error::Result;
use crate::graph::{chromatic_number, has_homomorphism, independence_number, turan_number_exact, Edge, Graph};
use crate::packing::CopySystem;

/// Budget cap for the catalog lookups made before an exact search.
const HINT_NODES: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Lower,
    Upper,
    /// An asymptotic growth rate, printed for comparison only.
    Reference,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundValidity {
    /// Holds for this `n`.
    Exact,
    /// Holds once `n` is large enough.
    LargeNOnly,
    /// Leading-order behaviour only.
    Asymptotic,
    /// A closed form that is not backed by a witness here.
    Formula,
}

/// One bound on `ex_F(n, G)`.
///
/// Lower bounds only constrain the answer when they carry a verified
/// witness; upper bounds only when their validity is [`BoundValidity::Exact`].
#[derive(Clone, Debug)]
pub struct BoundRecord {
    pub direction: Direction,
    pub value: BigRational,
    pub provenance: String,
    pub validity: BoundValidity,
    pub validity_flags: Vec<String>,
    pub witness: Option<CopySystem>,
    /// Set when this record attains both the best binding lower and upper bound.
    pub tight: bool,
}

impl BoundRecord {
    fn new(direction: Direction, value: BigRational, provenance: &str, validity: BoundValidity) -> Self {
        BoundRecord {
            direction,
            value,
            provenance: provenance.to_string(),
            validity,
            validity_flags: Vec::new(),
            witness: None,
            tight: false,
        }
    }

    fn flag(mut self, note: impl Into<String>) -> Self {
        self.validity_flags.push(note.into());
        self
    }

    pub fn is_binding(&self) -> bool {
        match self.direction {
            Direction::Lower => self.witness.is_some(),
            Direction::Upper => self.validity == BoundValidity::Exact,
            Direction::Reference => false,
        }
    }

    /// The value rounded down to an integer (zero for negative values).
    pub fn floor(&self) -> usize {
        let f = self.value.floor().to_integer();
        if f < BigInt::zero() {
            0
        } else {
            f.to_usize().unwrap_or(usize::MAX)
        }
    }
}

impl Serialize for BoundRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundRecord", 8)?;
        st.serialize_field("direction", &self.direction)?;
        if self.value.is_integer() {
            st.serialize_field("value", &self.value.to_integer().to_i64())?;
        } else {
            st.serialize_field("value", &self.value.to_f64())?;
        }
        st.serialize_field("exact_value", &self.value.to_string())?;
        st.serialize_field("optimal", &self.tight)?;
        st.serialize_field("binding", &self.is_binding())?;
        st.serialize_field("provenance", &self.provenance)?;
        st.serialize_field("validity", &self.validity)?;
        st.serialize_field("validity_flags", &self.validity_flags)?;
        if let Some(w) = &self.witness {
            st.serialize_field("witness", w)?;
        }
        st.end()
    }
}

fn int(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(p: usize, q: usize) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// A lower-bound record from a witness, kept binding only if it verifies.
fn witnessed(provenance: &str, system: CopySystem, g: &Graph, validity: BoundValidity) -> BoundRecord {
    let ok = system.verify().is_ok() && system.find_multicolor(g).is_none();
    from_checked(provenance, system, ok, validity)
}

fn from_checked(provenance: &str, system: CopySystem, ok: bool, validity: BoundValidity) -> BoundRecord {
    let record = BoundRecord::new(Direction::Lower, int(system.len()), provenance, validity);
    if ok {
        BoundRecord { witness: Some(system), ..record }
    } else {
        record.flag("witness failed verification")
    }
}

fn from_report(provenance: &str, report: ConstructionReport) -> BoundRecord {
    let validity = match report.validity {
        Validity::Exact => BoundValidity::Exact,
        Validity::LargeNOnly => BoundValidity::LargeNOnly,
    };
    let notes = report.notes.clone();
    let mut record = from_checked(provenance, report.system, report.verified, validity);
    record.validity_flags.extend(notes);
    record
}

/// `ex(n, H)` with a witness when one is available.
struct TuranInfo {
    value: usize,
    witness: Option<Graph>,
    note: &'static str,
}

fn turan_info(n: usize, h: &Graph, budget: &SearchBudget) -> Option<TuranInfo> {
    match turan_number_exact(n, h, budget) {
        Ok(r) => Some(TuranInfo { value: r.value, witness: Some(r.witness), note: "computed by exact search" }),
        Err(_) => {
            if let Some(t) = h.clique_order() {
                let w = Graph::turan(n, t - 1).ok()?;
                Some(TuranInfo { value: w.edge_count(), witness: Some(w), note: "Turán graph (Turán's theorem)" })
            } else if let Some(s) = h.star_size() {
                let value = if n >= s { n * (s - 1) / 2 } else { n * n.saturating_sub(1) / 2 };
                Some(TuranInfo { value, witness: None, note: "maximum-degree formula" })
            } else {
                None
            }
        }
    }
}

/// Every applicable bound on `ex_F(n, G)`, using the default search budget
/// for the auxiliary searches.
pub fn bound_catalog(n: usize, f: &Graph, g: &Graph) -> Result<Vec<BoundRecord>> {
    bound_catalog_with_budget(n, f, g, &SearchBudget::default())
}

/// As [`bound_catalog`]. Each auxiliary search (Turán numbers, packings
/// inside constructions) gets its own `budget`; a search that runs out
/// simply drops the records depending on it.
pub fn bound_catalog_with_budget(n: usize, f: &Graph, g: &Graph, budget: &SearchBudget) -> Result<Vec<BoundRecord>> {
    check_pair(f, g)?;
    let (v, e) = (f.n(), f.edge_count());
    let mut out = Vec::new();

    out.push(
        BoundRecord::new(Direction::Upper, int(n * n.saturating_sub(1) / 2 / e), "edge-count", BoundValidity::Exact)
            .flag("copies are edge-disjoint in K_n"),
    );

    let ex_g = turan_info(n, g, budget);
    if let Some(info) = &ex_g {
        out.push(
            BoundRecord::new(Direction::Upper, int(info.value), "turan-number", BoundValidity::Exact)
                .flag("one edge per copy gives a G-free graph")
                .flag(format!("ex(n,G) {}", info.note)),
        );
    }

    if f.clique_order() == Some(2) {
        if let Some(w) = ex_g.as_ref().and_then(|i| i.witness.as_ref()) {
            let copies = w.edges().iter().map(|&e| vec![e]);
            if let Ok(system) = CopySystem::new(n, f.clone(), copies) {
                out.push(
                    witnessed("ordinary-turan", system, g, BoundValidity::Exact)
                        .flag("single-edge copies: the ordinary Turán problem"),
                );
            }
        }
    }

    if let Some(s) = g.star_size() {
        out.push(
            BoundRecord::new(Direction::Upper, int(n * (s - 1) / v), "star-degree", BoundValidity::Exact)
                .flag("every vertex lies in at most s-1 copies"),
        );
        out.push(
            BoundRecord::new(Direction::Lower, int(n * (s - 1) / v), "star-formula", BoundValidity::LargeNOnly)
                .flag("attained for n large enough"),
        );
        if s >= 2 && n >= v {
            if let Ok(report) = star_construction(f, s, n) {
                out.push(from_report("star-construction", report));
            }
        }
    }

    if let Some(info) = &ex_g {
        let ex_f = turan_info(n, f, budget);
        if let Some(fi) = &ex_f {
            let diff = BigRational::new(BigInt::from(info.value) - BigInt::from(fi.value), BigInt::from(e));
            out.push(
                BoundRecord::new(Direction::Lower, diff, "extremal-difference", BoundValidity::Formula)
                    .flag("(ex(n,G) - ex(n,F)) / e(F)"),
            );
        }
    }

    if let Some(t) = g.path_order() {
        if t == 3 {
            out.push(
                BoundRecord::new(Direction::Reference, frac(n, v), "path-three-rate", BoundValidity::Asymptotic)
                    .flag("asymptotic to n / v(F)"),
            );
        }
        if t == 4 && independence_number(f) < v && n >= v {
            if let Ok(report) = shared_independent_set_construction(f, n) {
                out.push(from_report("shared-independent-set", report));
            }
        }
        if t >= 3 {
            if let Ok(report) = clique_group_construction(f, t, n, budget) {
                out.push(from_report("clique-groups", report));
            }
            out.extend(path_formulas(n, f, t));
        }
    }

    let (chi_f, chi_g) = (chromatic_number(f), chromatic_number(g));
    if chi_f < chi_g {
        let coeff = BigRational::new(BigInt::from(chi_g - 2), BigInt::from(2 * e * (chi_g - 1)));
        out.push(
            BoundRecord::new(Direction::Reference, coeff * int(n * n), "turan-density", BoundValidity::Asymptotic)
                .flag("(1 - 1/(χ(G)-1)) n² / (2 e(F)) to leading order"),
        );
        if n >= chi_g - 1 {
            if let Ok(report) = turan_packing_with_budget(f, g, n, budget) {
                out.push(from_report("turan-packing", report));
            }
        }
    }

    if !has_homomorphism(g, f) {
        out.push(
            BoundRecord::new(Direction::Reference, frac(n * n, v * v), "blowup-density", BoundValidity::Asymptotic)
                .flag("n² / v(F)² to leading order"),
        );
        if let Ok(report) = blowup_lower_bound(f, g, n) {
            out.push(from_report("blowup-transversal", report));
        }
    }

    if f.clique_order() == Some(3) {
        if let Some(t) = g.clique_order() {
            if n % 6 == 1 || n % 6 == 3 {
                if let Ok(report) = sts_lower_bound(n, t) {
                    let flagged = if report.verified {
                        "no multicolor K_t checked directly; guaranteed in general only for t of order √(n log n)"
                    } else {
                        "the Steiner triple system used here contains a multicolor K_t"
                    };
                    out.push(from_report("steiner-triple-system", report).flag(flagged));
                }
            }
            if t == 3 && n >= 6 {
                if let Ok(report) = ruzsa_szemeredi_construction(n / 6) {
                    let ok = report.verified;
                    if let Ok(system) = report.system.with_ground_size(n) {
                        out.push(from_checked("ruzsa-szemeredi", system, ok, BoundValidity::Exact));
                    }
                }
            }
        }
    }

    // Last, so that named constructions win ties against the generic packing.
    if let Some(w) = ex_g.as_ref().and_then(|i| i.witness.as_ref()) {
        if let Ok(system) = greedy_pack(w, f) {
            out.push(
                witnessed("greedy-in-extremal", system, g, BoundValidity::Exact)
                    .flag("maximal packing of an extremal G-free graph"),
            );
        }
    }

    let lower = best_lower(&out).map(BoundRecord::floor);
    let upper = best_upper(&out).map(BoundRecord::floor);
    if lower.is_some() && lower == upper {
        for r in out.iter_mut().filter(|r| r.is_binding() && Some(r.floor()) == lower) {
            r.tight = true;
        }
    }
    Ok(out)
}

/// Lower bounds for paths from clique and path decompositions, recorded as
/// formulas without witnesses.
fn path_formulas(n: usize, f: &Graph, t: usize) -> Vec<BoundRecord> {
    let mut out = Vec::new();
    if let Some(r) = f.clique_order() {
        if r + 3 >= t {
            // (t-2) ⌊n / ((t-2)(r - (t-1)/2 + 1))⌋ with the denominator doubled to stay integral.
            let den = (t - 2) * (2 * r + 3 - t);
            let value = (t - 2) * (2 * n / den);
            out.push(
                BoundRecord::new(Direction::Lower, int(value), "clique-path-decomposition", BoundValidity::Formula)
                    .flag("relies on path decompositions of complete graphs"),
            );
        }
    }
    if let Some(r) = f.path_order() {
        if r >= 3 {
            let block = if r > 2 * (t - 2) { r } else { ceil_sqrt(2 * (t - 2) * (r - 1)) + 1 };
            out.push(
                BoundRecord::new(Direction::Lower, int((t - 2) * (n / block)), "path-path-decomposition", BoundValidity::Formula)
                    .flag("relies on path decompositions of complete graphs"),
            );
        }
    }
    out
}

fn ceil_sqrt(x: usize) -> usize {
    let mut r = (x as f64).sqrt() as usize;
    while r * r < x {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= x {
        r -= 1;
    }
    r
}

/// The binding lower bound with the largest value (earliest on ties).
pub fn best_lower(records: &[BoundRecord]) -> Option<&BoundRecord> {
    records
        .iter()
        .filter(|r| r.direction == Direction::Lower && r.is_binding())
        .fold(None, |best: Option<&BoundRecord>, r| match best {
            Some(b) if b.floor() >= r.floor() => Some(b),
            _ => Some(r),
        })
}

/// The binding upper bound with the smallest value (earliest on ties).
pub fn best_upper(records: &[BoundRecord]) -> Option<&BoundRecord> {
    records
        .iter()
        .filter(|r| r.direction == Direction::Upper && r.is_binding())
        .fold(None, |best: Option<&BoundRecord>, r| match best {
            Some(b) if b.floor() <= r.floor() => Some(b),
            _ => Some(r),
        })
}

/// Seed and ceiling for [`super::multicolor_turan_exact`].
pub(crate) struct SearchHints {
    pub(crate) seed: CopySystem,
    pub(crate) seed_source: String,
    pub(crate) upper: usize,
}

pub(crate) fn search_hints(n: usize, f: &Graph, g: &Graph, budget: &SearchBudget) -> Result<SearchHints> {
    let capped = SearchBudget::new(budget.max_nodes.min(HINT_NODES))?;
    let records = bound_catalog_with_budget(n, f, g, &capped)?;
    let upper = best_upper(&records).map_or(usize::MAX, BoundRecord::floor);
    let empty = CopySystem::empty(n, f.clone())?;
    let (seed, seed_source) = match best_lower(&records) {
        Some(r) => {
            let w = r.witness.as_ref().expect("binding lower bounds carry witnesses");
            let copies: Vec<Vec<Edge>> = w.copies().to_vec();
            (CopySystem::new(n, f.clone(), copies)?, r.provenance.clone())
        }
        None => (empty, "empty".to_string()),
    };
    Ok(SearchHints { seed, seed_source, upper })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(records: &'a [BoundRecord], provenance: &str) -> &'a BoundRecord {
        records.iter().find(|r| r.provenance == provenance).unwrap_or_else(|| panic!("no {provenance} record"))
    }

    #[test]
    fn star_records() {
        let rs = bound_catalog(6, &Graph::complete(3), &Graph::star(2).unwrap()).unwrap();
        assert_eq!(best_upper(&rs).unwrap().floor(), 2);
        assert_eq!(best_lower(&rs).unwrap().floor(), 2);
        assert!(find(&rs, "star-construction").tight);
    }

    #[test]
    fn density_reference() {
        let rs = bound_catalog(12, &Graph::complete(3), &Graph::complete(4)).unwrap();
        assert_eq!(find(&rs, "turan-density").value, int(16));
        assert_eq!(find(&rs, "turan-packing").floor(), 16);
        assert_eq!(best_lower(&rs).unwrap().floor(), 16);
    }

    #[test]
    fn single_edge_reduces_to_turan() {
        for n in 3..=7 {
            let rs = bound_catalog(n, &Graph::complete(2), &Graph::complete(3)).unwrap();
            assert_eq!(best_lower(&rs).unwrap().floor(), n * n / 4);
            assert_eq!(best_upper(&rs).unwrap().floor(), n * n / 4);
            assert_eq!(find(&rs, "extremal-difference").value, int(n * n / 4));
        }
    }

    #[test]
    fn witnesses_are_certified() {
        let k3 = Graph::complete(3);
        for (n, g) in [(9, Graph::complete(3)), (7, Graph::complete(5)), (9, Graph::path(4).unwrap()), (8, Graph::cycle(5).unwrap())] {
            for r in bound_catalog(n, &k3, &g).unwrap() {
                if let Some(w) = &r.witness {
                    assert_eq!(w.verify(), Ok(()), "{}", r.provenance);
                    assert!(w.find_multicolor(&g).is_none(), "{}", r.provenance);
                    assert_eq!(w.len(), r.floor());
                }
            }
        }
    }

    #[test]
    fn path_formula_values() {
        // K_3, P_4: 2 ⌊n / (2 (3 - 3/2 + 1))⌋ = 2 ⌊n/5⌋.
        let rs = path_formulas(10, &Graph::complete(3), 4);
        assert_eq!(rs[0].floor(), 4);
        // P_5, P_4: r/2 > t-2 so 2 ⌊n/5⌋.
        let rs = path_formulas(10, &Graph::path(5).unwrap(), 4);
        assert_eq!(rs[0].floor(), 4);
        // P_3, P_5: ⌈√12⌉ + 1 = 5, so 3 ⌊n/5⌋.
        let rs = path_formulas(10, &Graph::path(3).unwrap(), 5);
        assert_eq!(rs[0].floor(), 6);
        assert_eq!(ceil_sqrt(16), 4);
        assert_eq!(ceil_sqrt(17), 5);
    }

    #[test]
    fn json_shape() {
        let rs = bound_catalog(6, &Graph::complete(3), &Graph::star(2).unwrap()).unwrap();
        let v = serde_json::to_value(&rs).unwrap();
        for rec in v.as_array().unwrap() {
            for key in ["value", "optimal", "provenance", "validity_flags"] {
                assert!(rec.get(key).is_some(), "missing {key}");
            }
        }
    }
}
