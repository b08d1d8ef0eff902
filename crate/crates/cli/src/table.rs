use rayon::prelude::*;

use mcturan::optimizer::{best_lower, best_upper, bound_catalog_with_budget, multicolor_turan_exact, Direction};
use mcturan::{Graph, SearchBudget};

use crate::args::{Format, TableArgs};
use crate::commands::budget;
use crate::failure::Failure;
use crate::io::{emit, graph_spec};

/// Bumped whenever the columns change.
pub const TABLE_HEADER: &str = "# mcturan-table v1";
const COLUMNS: [&str; 8] =
    ["n", "lower", "lower_source", "upper", "upper_source", "exact", "exact_status", "turan_density_reference"];

pub fn parse_range(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Input(format!("bad n-range `{text}`; use N, A..B, A..=B or A-B"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = if let Some((a, b)) = text.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = text.split_once("..") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = text.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        let n = num(text)?;
        (n, n)
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

struct Row {
    cells: Vec<String>,
}

fn row(n: usize, f: &Graph, g: &Graph, budget: &SearchBudget, with_exact: bool) -> Result<Row, Failure> {
    let records = bound_catalog_with_budget(n, f, g, budget)?;
    let lower = best_lower(&records).map(|r| (r.floor(), r.provenance.clone()));
    let upper = best_upper(&records).map(|r| (r.floor(), r.provenance.clone()));
    let reference = records
        .iter()
        .find(|r| r.direction == Direction::Reference && r.provenance == "turan-density")
        .map(|r| r.value.to_string())
        .unwrap_or_default();
    let (exact, status) = if !with_exact {
        (String::new(), "skipped".to_string())
    } else {
        match multicolor_turan_exact(n, f, g, budget) {
            Ok(r) => {
                let lo = lower.as_ref().map_or(0, |l| l.0);
                let hi = upper.as_ref().map_or(usize::MAX, |u| u.0);
                if r.value > hi || (r.optimal && r.value < lo) {
                    return Err(Failure::Verification(format!(
                        "n={n}: exact value {} outside the bounds [{lo}, {hi}]",
                        r.value
                    )));
                }
                (r.value.to_string(), if r.optimal { "optimal" } else { "lower-bound" }.to_string())
            }
            Err(mcturan::Error::Resource(_)) => (String::new(), "too-large".to_string()),
            Err(e) => return Err(e.into()),
        }
    };
    let num = |x: &Option<(usize, String)>| x.as_ref().map(|v| v.0.to_string()).unwrap_or_default();
    let src = |x: &Option<(usize, String)>| x.as_ref().map(|v| v.1.clone()).unwrap_or_default();
    Ok(Row {
        cells: vec![n.to_string(), num(&lower), src(&lower), num(&upper), src(&upper), exact, status, reference],
    })
}

pub fn table(a: &TableArgs) -> Result<i32, Failure> {
    let (f, g) = (graph_spec(&a.f)?, graph_spec(&a.g)?);
    let ns = parse_range(&a.n)?;
    let budget = budget(&a.budget)?;
    let rows: Vec<Row> = ns
        .par_iter()
        .map(|&n| row(n, &f, &g, &budget, !a.bounds_only))
        .collect::<Result<_, _>>()?;
    let text = match a.out.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut s = format!("{TABLE_HEADER}\n# F={} G={} n={}\n{}\n", a.f, a.g, a.n, COLUMNS.join(","));
            for r in &rows {
                s.push_str(&r.cells.join(","));
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let mut widths: Vec<usize> = COLUMNS.iter().map(|c| c.len()).collect();
            for r in &rows {
                for (w, c) in widths.iter_mut().zip(&r.cells) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                format!("{}\n", padded.join("  ").trim_end())
            };
            let mut s = line(&COLUMNS.map(String::from));
            for r in &rows {
                s.push_str(&line(&r.cells));
            }
            s
        }
        Format::Json => return Err(Failure::Input("table supports csv and text output".into())),
    };
    emit(&a.out, &text)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_range("3..=5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_range("3-4").unwrap(), vec![3, 4]);
        assert_eq!(parse_range("7").unwrap(), vec![7]);
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x").is_err());
    }
}
