//! Library half of the command-line front end: graph sources, run records
//! and their CSV/JSON renderings.
//!
//! Witness sets are printed 1-indexed, ascending and semicolon-joined so
//! they survive inside a CSV cell.

use std::path::PathBuf;

use serde_json::json;

use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::solver::{SolveOutcome, SolveStatus};

pub const CSV_HEADER: &str = "graph,n,k,semantics,status,adim,witness,seconds";

/// Where a graph comes from: family syntax (`torus:5x5`, `ham:4`, ...) or an
/// edge-list file, written either `path:FILE` or as a bare path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    Family(FamilySpec),
    File(PathBuf),
}

impl GraphSource {
    /// Family syntax must parse when its prefix is present; anything else is
    /// taken as a file path.
    pub fn parse(text: &str) -> Result<GraphSource, String> {
        if let Some(rest) = text.strip_prefix("path:") {
            return Ok(GraphSource::File(PathBuf::from(rest)));
        }
        if has_family_prefix(text) {
            text.parse::<FamilySpec>()
                .map(GraphSource::Family)
                .map_err(|e| e.to_string())
        } else {
            Ok(GraphSource::File(PathBuf::from(text)))
        }
    }

    /// Descriptor echoed into run records.
    pub fn describe(&self) -> String {
        match self {
            GraphSource::Family(spec) => spec.to_string(),
            GraphSource::File(p) => p.display().to_string(),
        }
    }
}

fn has_family_prefix(text: &str) -> bool {
    ["grid:", "cyl:", "torus:", "ham:"]
        .iter()
        .any(|p| text.starts_with(p))
}

/// One solve result in the shape of the output tables.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub graph: String,
    pub n: usize,
    pub k: usize,
    pub semantics: String,
    pub status: String,
    pub adim: Option<usize>,
    pub witness: Vec<usize>,
    pub seconds: f64,
}

impl RunRecord {
    pub fn from_outcome(
        graph: &str,
        n: usize,
        k: usize,
        semantics: &str,
        outcome: &SolveOutcome,
        seconds: f64,
    ) -> RunRecord {
        let (status, adim, witness) = match &outcome.status {
            SolveStatus::Optimal {
                cardinality,
                witness,
            } => ("optimal", Some(*cardinality), witness.clone()),
            SolveStatus::InfeasibleProven => ("infeasible", None, Vec::new()),
            SolveStatus::UnknownUpToBound => ("unknown", None, Vec::new()),
        };
        RunRecord {
            graph: graph.to_string(),
            n,
            k,
            semantics: semantics.to_string(),
            status: status.to_string(),
            adim,
            witness,
            seconds,
        }
    }

    /// The `adim` column: the optimum, `inf` when proven infeasible,
    /// `unknown` when the bound ran out.
    pub fn adim_cell(&self) -> String {
        match (self.adim, self.status.as_str()) {
            (Some(v), _) => v.to_string(),
            (None, "infeasible") => "inf".to_string(),
            _ => "unknown".to_string(),
        }
    }

    pub fn witness_cell(&self) -> String {
        self.witness
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{:.3}",
            self.graph,
            self.n,
            self.k,
            self.semantics,
            self.status,
            self.adim_cell(),
            self.witness_cell(),
            self.seconds
        )
    }

    pub fn json_value(&self) -> serde_json::Value {
        let adim = match (self.adim, self.status.as_str()) {
            (Some(v), _) => json!(v),
            (None, "infeasible") => json!("inf"),
            _ => json!("unknown"),
        };
        json!({
            "graph": self.graph,
            "n": self.n,
            "k": self.k,
            "semantics": self.semantics,
            "status": self.status,
            "adim": adim,
            "witness": self.witness_cell(),
            "seconds": self.seconds,
        })
    }
}

/// Loads the graph behind a source; file errors keep their I/O flavor so the
/// binary can exit with the right code.
pub fn load_graph(source: &GraphSource) -> Result<Graph, LoadError> {
    match source {
        GraphSource::Family(spec) => {
            crate::families::build_family(spec).map_err(|e| LoadError::Usage(e.to_string()))
        }
        GraphSource::File(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| LoadError::Io(format!("{}: {e}", p.display())))?;
            Graph::parse_edge_list(&text).map_err(|e| LoadError::Data(e.to_string()))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadError {
    /// Malformed arguments (exit 64).
    Usage(String),
    /// Unreadable file (exit 66).
    Io(String),
    /// Readable but semantically invalid input (exit 65).
    Data(String),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Usage(m) | LoadError::Io(m) | LoadError::Data(m) => f.write_str(m),
        }
    }
}

/// Parses a `--set` argument: comma-separated 1-indexed vertices.
pub fn parse_vertex_set(text: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for field in text.split(',') {
        let field = field.trim();
        if field.is_empty() {
            return Err(format!("empty entry in vertex set `{text}`"));
        }
        let v: usize = field
            .parse()
            .map_err(|_| format!("bad vertex `{field}` in set `{text}`"))?;
        out.push(v);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
