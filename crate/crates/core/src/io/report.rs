//! The report envelope written by the command-line tool, as JSON or CSV.
//!
//! Every requested computation lands exactly once, either as a result or as a
//! skip record. Reports carry no timestamp, so identical inputs give
//! byte-identical output.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::IndexReport;
use crate::io::graph6;
use crate::verify::{RadicalRow, Status, TheoremId, TheoremVerdict};

/// Bumped only on incompatible changes to the JSON layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Graph6,
    Edgelist,
    Builtin,
}

/// A named input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub name: String,
    pub graph: Graph,
    pub source: Source,
}

impl GraphDocument {
    pub fn new(name: impl Into<String>, graph: Graph, source: Source) -> Result<GraphDocument> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::Precondition("graph document needs a name".into()));
        }
        Ok(GraphDocument { name, graph, source })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEntry {
    pub name: String,
    pub source: Source,
    pub graph6: String,
    #[serde(flatten)]
    pub indices: IndexReport,
}

/// One row of a Φ table, with the closed form where one exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub graph: String,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "Phi")]
    pub phi: u64,
    pub varphi: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub closed_form: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkipRecord {
    /// `analyze`, `table`, `product` or `verify`.
    pub task: String,
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub theorem_id: Option<TheoremId>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    /// SHA-256 of the command line and input bytes.
    pub input_digest: String,
    pub budget: Budget,
    pub graphs: Vec<GraphEntry>,
    pub table: Vec<TableRow>,
    pub verdicts: Vec<TheoremVerdict>,
    pub radical: Vec<RadicalRow>,
    pub skipped: Vec<SkipRecord>,
}

/// Hex SHA-256 over the given parts, each length-prefixed so that part
/// boundaries matter.
pub fn digest<I, B>(parts: I) -> String
where
    I: IntoIterator<Item = B>,
    B: AsRef<[u8]>,
{
    let mut h = Sha256::new();
    for p in parts {
        let p = p.as_ref();
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

impl ReportEnvelope {
    pub fn new(input_digest: String, budget: &Budget) -> ReportEnvelope {
        ReportEnvelope {
            schema: SCHEMA_VERSION,
            tool: "distinguish".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            input_digest,
            budget: *budget,
            graphs: Vec::new(),
            table: Vec::new(),
            verdicts: Vec::new(),
            radical: Vec::new(),
            skipped: Vec::new(),
        }
    }

    /// Records an analysis result. Budget errors become skip records; any
    /// other error is returned.
    pub fn push_graph(&mut self, doc: &GraphDocument, result: Result<IndexReport>) -> Result<()> {
        match result {
            Ok(indices) => {
                self.graphs.push(GraphEntry {
                    name: doc.name.clone(),
                    source: doc.source,
                    graph6: graph6::encode(&doc.graph),
                    indices,
                });
                Ok(())
            }
            Err(e) if is_skip(&e) => {
                self.skip("analyze", &doc.name, None, &e);
                Ok(())
            }
            Err(e) => Err(e),
        }
    }

    /// Records verdicts; skipped ones move to the skip list.
    pub fn push_verdicts(&mut self, verdicts: impl IntoIterator<Item = TheoremVerdict>) {
        for v in verdicts {
            if v.status == Status::Skipped {
                self.skipped.push(SkipRecord {
                    task: "verify".into(),
                    subject: v.instance,
                    theorem_id: Some(v.theorem_id),
                    reason: v.reason.unwrap_or_default(),
                });
            } else {
                self.verdicts.push(v);
            }
        }
    }

    pub fn skip(&mut self, task: &str, subject: &str, theorem_id: Option<TheoremId>, err: &Error) {
        self.skipped.push(SkipRecord { task: task.into(), subject: subject.into(), theorem_id, reason: err.to_string() });
    }

    pub fn count(&self, status: Status) -> usize {
        self.verdicts.iter().filter(|v| v.status == status).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One flat table: a `kind` column and the union of the fields of all
    /// record types, blank where a field does not apply.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Precondition(format!("csv: {e}"));
        w.write_record(CSV_HEADER).map_err(io)?;
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        for g in &self.graphs {
            let i = &g.indices;
            let row = CsvRow {
                kind: "graph",
                subject: g.name.clone(),
                n: i.n.to_string(),
                edges: i.edges.to_string(),
                d: i.d.to_string(),
                theta: i.theta.to_string(),
                aut_order: i.aut_order.to_string(),
                ..CsvRow::default()
            };
            w.write_record(row.fields()).map_err(io)?;
        }
        for t in &self.table {
            let row = CsvRow {
                kind: "table",
                subject: t.graph.clone(),
                n: t.n.to_string(),
                k: t.k.to_string(),
                phi: t.phi.to_string(),
                varphi: t.varphi.to_string(),
                predicted: opt(t.closed_form),
                ..CsvRow::default()
            };
            w.write_record(row.fields()).map_err(io)?;
        }
        for v in &self.verdicts {
            let row = CsvRow {
                kind: "verdict",
                subject: v.instance.clone(),
                theorem_id: v.theorem_id.to_string(),
                case: v.case.clone().unwrap_or_default(),
                predicted: opt(v.predicted),
                brute_force: opt(v.brute_force),
                relation: serde_json::to_value(v.relation).ok().and_then(|x| x.as_str().map(String::from)).unwrap_or_default(),
                status: status_name(v.status).into(),
                reason: v.reason.clone().unwrap_or_default(),
                ..CsvRow::default()
            };
            w.write_record(row.fields()).map_err(io)?;
        }
        for r in &self.radical {
            let row = CsvRow {
                kind: "radical",
                subject: format!("{},t={}", r.family, r.t),
                predicted: r.radical.to_string(),
                brute_force: r.min_form.to_string(),
                status: if r.agree { "agree" } else { "disagree" }.into(),
                ..CsvRow::default()
            };
            w.write_record(row.fields()).map_err(io)?;
        }
        for s in &self.skipped {
            let row = CsvRow {
                kind: "skipped",
                subject: s.subject.clone(),
                theorem_id: s.theorem_id.map(|t| t.to_string()).unwrap_or_default(),
                status: "skipped".into(),
                reason: format!("{}: {}", s.task, s.reason),
                ..CsvRow::default()
            };
            w.write_record(row.fields()).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Precondition(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Precondition(format!("csv: {e}")))
    }
}

/// Errors that mean "did not fit", as opposed to bad input.
pub fn is_skip(e: &Error) -> bool {
    e.is_budget() || matches!(e, Error::TooManyVertices { .. })
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Agree => "agree",
        Status::Disagree => "disagree",
        Status::Inconclusive => "inconclusive",
        Status::Skipped => "skipped",
    }
}

const CSV_HEADER: [&str; 17] = [
    "kind", "subject", "theorem_id", "case", "n", "edges", "D", "theta", "aut_order", "k", "Phi", "varphi", "predicted",
    "brute_force", "relation", "status", "reason",
];

#[derive(Default)]
struct CsvRow {
    kind: &'static str,
    subject: String,
    theorem_id: String,
    case: String,
    n: String,
    edges: String,
    d: String,
    theta: String,
    aut_order: String,
    k: String,
    phi: String,
    varphi: String,
    predicted: String,
    brute_force: String,
    relation: String,
    status: String,
    reason: String,
}

impl CsvRow {
    fn fields(self) -> [String; 17] {
        [
            self.kind.to_string(),
            self.subject,
            self.theorem_id,
            self.case,
            self.n,
            self.edges,
            self.d,
            self.theta,
            self.aut_order,
            self.k,
            self.phi,
            self.varphi,
            self.predicted,
            self.brute_force,
            self.relation,
            self.status,
            self.reason,
        ]
    }
}
