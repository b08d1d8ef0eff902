use std::fs;
use std::io::Write;
use std::path::Path;

use mcturan::graph::io::from_graph6;
use mcturan::Graph;

use crate::args::OutputArgs;
use crate::failure::Failure;

pub fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

/// A graph from the command-line mini-language, including `file:PATH`.
pub fn graph_spec(spec: &str) -> Result<Graph, Failure> {
    match spec.strip_prefix("file:") {
        Some(path) => graph_file(&read_file(Path::new(path))?),
        None => Ok(Graph::from_spec(spec)?),
    }
}

/// Graph JSON or a single graph6 line.
pub fn graph_file(text: &str) -> Result<Graph, Failure> {
    let t = text.trim();
    if t.starts_with('{') {
        Ok(serde_json::from_str(t)?)
    } else {
        Ok(from_graph6(t)?)
    }
}

pub fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes `text` to the requested file, or standard output.
pub fn emit(out: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Input(format!("cannot write output: {e}")))
        }
    }
}
