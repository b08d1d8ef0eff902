use serde::Serialize;
use serde_json::Value;

use mcturan::constructions::{
    blowup_lower_bound, clique_group_construction, ruzsa_szemeredi_construction, shared_independent_set_construction,
    star_construction, sts_lower_bound, turan_packing_with_budget, ConstructionReport, ReportFailure,
};
use mcturan::graph::io::to_graph6;
use mcturan::hypergraph::LinearHypergraph;
use mcturan::optimizer::{multicolor_turan_exact, ExactResult};
use mcturan::{CopySystem, Graph, MulticolorWitness, SearchBudget};

use crate::args::{BudgetArg, ConstructArgs, ConstructionName, ConvertArgs, ExactArgs, FileKind, Format, VerifyArgs};
use crate::failure::Failure;
use crate::io::{emit, graph_file, graph_spec, read_file, to_json};

const REPORT_EVERY: u64 = 10_000_000;

pub fn budget(arg: &BudgetArg) -> Result<SearchBudget, Failure> {
    Ok(SearchBudget::new(arg.budget)?.with_report_interval(REPORT_EVERY))
}

#[derive(Serialize)]
struct ExactOutput<'a> {
    n: usize,
    pattern: &'a Graph,
    forbidden: &'a Graph,
    #[serde(flatten)]
    result: &'a ExactResult,
}

pub fn exact(a: &ExactArgs) -> Result<i32, Failure> {
    let (f, g) = (graph_spec(&a.f)?, graph_spec(&a.g)?);
    let result = multicolor_turan_exact(a.n, &f, &g, &budget(&a.budget)?)?;
    let text = match a.out.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&ExactOutput { n: a.n, pattern: &f, forbidden: &g, result: &result })?,
        Format::Text if result.optimal => format!("ex_F({}, G) = {}\n", a.n, result.value),
        Format::Text => format!(
            "ex_F({}, G) >= {} (budget exhausted; upper bound {})\n",
            a.n, result.value, result.upper_bound
        ),
        Format::Csv => return Err(Failure::Input("exact supports json and text output".into())),
    };
    emit(&a.out, &text)?;
    Ok(if result.optimal { 0 } else { 2 })
}

fn need<T: Copy>(value: Option<T>, flag: &str, name: ConstructionName) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Input(format!("construction {name:?} needs {flag}")))
}

fn need_graph(spec: &Option<String>, flag: &str, name: ConstructionName) -> Result<Graph, Failure> {
    graph_spec(spec.as_deref().ok_or_else(|| Failure::Input(format!("construction {name:?} needs {flag}")))?)
}

pub fn construct(a: &ConstructArgs) -> Result<i32, Failure> {
    use ConstructionName::*;
    let name = a.name;
    let report: ConstructionReport = match name {
        Blowup => blowup_lower_bound(&need_graph(&a.f, "--F", name)?, &need_graph(&a.g, "--G", name)?, need(a.n, "--n", name)?)?,
        Turan => turan_packing_with_budget(
            &need_graph(&a.f, "--F", name)?,
            &need_graph(&a.g, "--G", name)?,
            need(a.n, "--n", name)?,
            &budget(&a.budget)?,
        )?,
        Star => star_construction(&need_graph(&a.f, "--F", name)?, need(a.s, "--s", name)?, need(a.n, "--n", name)?)?,
        SharedIndep => shared_independent_set_construction(&need_graph(&a.f, "--F", name)?, need(a.n, "--n", name)?)?,
        CliqueGroup => clique_group_construction(
            &need_graph(&a.f, "--F", name)?,
            need(a.t, "--t", name)?,
            need(a.n, "--n", name)?,
            &budget(&a.budget)?,
        )?,
        Sts => {
            let n = need(a.n, "--n", name)?;
            sts_lower_bound(n, a.t.unwrap_or(n))?
        }
        Rs => ruzsa_szemeredi_construction(need(a.k, "--k", name)?)?,
    };
    if !report.verified {
        if let Some(failure) = &report.failure {
            eprint!("{}", to_json(failure)?);
        }
        return Err(Failure::Verification(format!("{} construction did not verify; no certificate written", report.source)));
    }
    let text = match a.out.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report)?,
        Format::Text => format!(
            "{}: {} copies on {} vertices, no multicolor copy of the forbidden graph\n",
            report.source,
            report.copy_count,
            report.system.n()
        ),
        Format::Csv => return Err(Failure::Input("construct supports json and text output".into())),
    };
    emit(&a.out, &text)?;
    Ok(0)
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum Verdict {
    Ok { copies: usize },
    Violation { violation: ReportFailure },
}

fn multicolor_text(w: &MulticolorWitness) -> String {
    format!("multicolor copy on vertices {:?} with colors {:?}", w.vertices(), w.edge_colors)
}

pub fn verify(a: &VerifyArgs) -> Result<i32, Failure> {
    let doc: Value = serde_json::from_str(&read_file(&a.certificate)?)?;
    let (system, recorded) = if let Some(s) = doc.get("system") {
        (s.clone(), doc.get("claimed_forbidden").cloned())
    } else if let Some(w) = doc.get("witness") {
        (w.clone(), doc.get("forbidden").cloned())
    } else {
        (doc.clone(), None)
    };
    let system: CopySystem = serde_json::from_value(system)?;
    let g: Graph = match (&a.g, recorded) {
        (Some(spec), _) => graph_spec(spec)?,
        (None, Some(v)) => serde_json::from_value(v)?,
        (None, None) => return Err(Failure::Input("certificate records no forbidden graph; pass --G".into())),
    };
    let verdict = match system.verify() {
        Err(violation) => Verdict::Violation { violation: ReportFailure::System { violation } },
        Ok(()) => match system.find_multicolor(&g) {
            Some(witness) => Verdict::Violation { violation: ReportFailure::Multicolor { witness } },
            None => Verdict::Ok { copies: system.len() },
        },
    };
    let text = match a.out.format.unwrap_or(Format::Text) {
        Format::Json => to_json(&verdict)?,
        Format::Text => match &verdict {
            Verdict::Ok { copies } => format!("ok: {copies} edge-disjoint copies, no multicolor copy of the forbidden graph\n"),
            Verdict::Violation { violation: ReportFailure::System { violation } } => format!("violation: {violation}\n"),
            Verdict::Violation { violation: ReportFailure::Multicolor { witness } } => {
                format!("violation: {}\n", multicolor_text(witness))
            }
        },
        Format::Csv => return Err(Failure::Input("verify supports json and text output".into())),
    };
    emit(&a.out, &text)?;
    Ok(match verdict {
        Verdict::Ok { .. } => 0,
        Verdict::Violation { .. } => 3,
    })
}

enum Loaded {
    Hypergraph(LinearHypergraph),
    System(CopySystem),
    Graph(Graph),
}

pub fn convert(a: &ConvertArgs) -> Result<i32, Failure> {
    let text = read_file(&a.input)?;
    let loaded = match a.from {
        FileKind::Hypergraph => Loaded::Hypergraph(serde_json::from_str(&text)?),
        FileKind::System => Loaded::System(serde_json::from_str(&text)?),
        FileKind::Graph | FileKind::Graph6 => Loaded::Graph(graph_file(&text)?),
    };
    let unsupported = || Failure::Input(format!("cannot convert {:?} to {:?}", a.from, a.to));
    let out = match (a.to, loaded) {
        (FileKind::Hypergraph, Loaded::Hypergraph(h)) => to_json(&h)?,
        (FileKind::Hypergraph, Loaded::System(s)) => to_json(&LinearHypergraph::from_copy_system(&s)?)?,
        (FileKind::System, Loaded::System(s)) => to_json(&s)?,
        (FileKind::System, Loaded::Hypergraph(h)) => to_json(&h.to_copy_system())?,
        (FileKind::System, Loaded::Graph(g)) => {
            let copies = g.edges().iter().map(|&e| vec![e]);
            to_json(&CopySystem::new(g.n(), Graph::complete(2), copies)?)?
        }
        (FileKind::Graph | FileKind::Graph6, loaded) => {
            let g = match loaded {
                Loaded::Graph(g) => g,
                Loaded::System(s) => s.union_graph(),
                Loaded::Hypergraph(h) => h.shadow(),
            };
            if a.to == FileKind::Graph6 {
                format!("{}\n", to_graph6(&g))
            } else {
                to_json(&g)?
            }
        }
        _ => return Err(unsupported()),
    };
    emit(&a.out, &out)?;
    Ok(0)
}
