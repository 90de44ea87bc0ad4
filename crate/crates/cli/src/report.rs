//! JSON reports and their plain-text rendering.
//!
//! Every command prints exactly one JSON object when `--json` is given. The
//! object carries `report_v`; fields are only ever added under the same
//! version. See the README for the schema.

use std::fmt::Write as _;

use rainbow_core::exact::{LowerCert, ParamResult, ParamTag, UpperCert};
use rainbow_core::rainbow::{Verdict, Violation};
use rainbow_core::lists::ListAssignment;
use rainbow_core::{EdgeColouring, Graph, Property};
use serde::Serialize;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Both bounds rest on exhaustive search or explicit constructions.
    Proved,
    /// Part of the result rests on sampling.
    Evidence,
    /// The budget ran out before the bounds met.
    Exceeded,
    /// A postcondition or an expected value did not hold.
    Failed,
}

impl Status {
    pub fn of(res: &ParamResult) -> Status {
        if !res.is_exact() {
            Status::Exceeded
        } else if res.evidence {
            Status::Evidence
        } else {
            Status::Proved
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Proved | Status::Evidence => 0,
            Status::Exceeded => 2,
            Status::Failed => 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphInfo {
    pub spec: String,
    pub n: usize,
    pub m: usize,
    /// Edge `i` of every colouring and list assignment is `edges[i]`.
    pub edges: Vec<(usize, usize)>,
}

impl GraphInfo {
    pub fn new(spec: String, g: &Graph) -> Self {
        GraphInfo { spec, n: g.n(), m: g.m(), edges: g.edges().to_vec() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Stats {
    pub nodes: u64,
    pub budget: u64,
    pub workers: usize,
    pub seed: u64,
    /// `null` under `--no-timing`.
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParamReport {
    pub report_v: u32,
    pub command: &'static str,
    pub graph: GraphInfo,
    pub parameter: ParamTag,
    pub value: Option<usize>,
    pub interval: [usize; 2],
    pub status: Status,
    pub lower: LowerCert,
    pub upper: UpperCert,
    pub note: Option<String>,
    pub stats: Stats,
}

impl ParamReport {
    pub fn new(graph: GraphInfo, res: ParamResult, stats: Stats) -> Self {
        ParamReport {
            report_v: REPORT_VERSION,
            command: "param",
            graph,
            parameter: res.param,
            value: res.value(),
            interval: [res.lo, res.hi],
            status: Status::of(&res),
            lower: res.lower,
            upper: res.upper,
            note: res.note,
            stats,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        let _ = writeln!(out, "{:<10} {} (n={}, m={})", "graph", g.spec, g.n, g.m);
        let _ = writeln!(out, "{:<10} {}", "parameter", self.parameter);
        match self.value {
            Some(v) => {
                let _ = writeln!(out, "{:<10} {v}", "value");
            }
            None => {
                let _ = writeln!(out, "{:<10} [{}, {}]", "interval", self.interval[0], self.interval[1]);
            }
        }
        let _ = writeln!(out, "{:<10} {}", "status", status_name(self.status));
        let _ = writeln!(out, "{:<10} {}", "lower", compact(&self.lower));
        let _ = writeln!(out, "{:<10} {}", "upper", compact(&self.upper));
        if let Some(note) = &self.note {
            let _ = writeln!(out, "{:<10} {note}", "note");
        }
        stats_text(&mut out, &self.stats);
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructReport {
    pub report_v: u32,
    pub command: &'static str,
    pub graph: GraphInfo,
    pub construction: &'static str,
    pub property: Property,
    pub lists: String,
    pub list_size: usize,
    pub assignment: ListAssignment,
    pub colouring: EdgeColouring,
    pub respects_lists: bool,
    pub verdict: String,
    pub status: Status,
    pub stats: Stats,
}

impl ConstructReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        let _ = writeln!(out, "{:<12} {} (n={}, m={})", "graph", g.spec, g.n, g.m);
        let _ = writeln!(out, "{:<12} {}", "construction", self.construction);
        let _ = writeln!(out, "{:<12} {} (size {})", "lists", self.lists, self.list_size);
        let _ = writeln!(out, "{:<12} {}", "property", self.property);
        let _ = writeln!(out, "{:<12} {}", "verdict", self.verdict);
        let _ = writeln!(out, "{:<12} {}", "in lists", self.respects_lists);
        let _ = writeln!(out, "{:<12} {}", "status", status_name(self.status));
        let _ = writeln!(out, "colouring (edge u-v: colour)");
        for (e, &(u, v)) in g.edges.iter().enumerate() {
            let _ = writeln!(out, "  {e:>4} {u}-{v}: {}", self.colouring.get(e));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    /// Computed value matches and both bounds are certified.
    Proved,
    /// Every sampled case matched.
    Evidence,
    Mismatch,
    Exceeded,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub id: String,
    pub group: &'static str,
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub status: RowStatus,
    pub nodes: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub proved: usize,
    pub evidence: usize,
    pub mismatch: usize,
    pub exceeded: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(rows: &[Row]) -> Self {
        let mut s = Summary { rows: rows.len(), ..Default::default() };
        for r in rows {
            match r.status {
                RowStatus::Proved => s.proved += 1,
                RowStatus::Evidence => s.evidence += 1,
                RowStatus::Mismatch => s.mismatch += 1,
                RowStatus::Exceeded => s.exceeded += 1,
                RowStatus::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub report_v: u32,
    pub command: &'static str,
    pub suite: String,
    pub filter: Option<String>,
    pub rows: Vec<Row>,
    pub summary: Summary,
    pub stats: Stats,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        if self.summary.mismatch > 0 {
            Status::Failed.exit_code()
        } else {
            0
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let idw = self.rows.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
        let ew = self.rows.iter().map(|r| r.expected.len()).max().unwrap_or(8).max(8);
        let cw = self.rows.iter().map(|r| r.computed.len()).max().unwrap_or(8).max(8);
        let _ = writeln!(out, "{:<idw$}  {:<ew$}  {:<cw$}  {:<8}  claim", "id", "expected", "computed", "status");
        for r in &self.rows {
            let st = serde_json::to_value(r.status).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            let _ = writeln!(out, "{:<idw$}  {:<ew$}  {:<cw$}  {:<8}  {}", r.id, r.expected, r.computed, st, r.claim);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "\n{} rows: {} proved, {} evidence, {} mismatch, {} exceeded, {} skipped",
            s.rows, s.proved, s.evidence, s.mismatch, s.exceeded, s.skipped
        );
        stats_text(&mut out, &self.stats);
        out
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Proved => "proved",
        Status::Evidence => "evidence",
        Status::Exceeded => "exceeded",
        Status::Failed => "failed",
    }
}

fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap_or_else(|e| format!("<{e}>"))
}

fn stats_text(out: &mut String, s: &Stats) {
    let _ = write!(out, "{:<10} {} (budget {}, workers {}, seed {})", "nodes", s.nodes, s.budget, s.workers, s.seed);
    if let Some(ms) = s.wall_ms {
        let _ = write!(out, ", {ms} ms");
    }
    out.push('\n');
}

pub fn verdict_text(g: &Graph, v: Verdict) -> String {
    match v {
        Verdict::Ok => "ok".into(),
        Verdict::Violation(Violation::Pair(u, w)) => format!("no suitable rainbow path between {u} and {w}"),
        Verdict::Violation(Violation::IncidentEdges(e, f)) => {
            format!("incident edges {e} {:?} and {f} {:?} share a colour", g.edge(e), g.edge(f))
        }
        Verdict::Violation(Violation::AdjacentVertices(u, w)) => format!("adjacent vertices {u} and {w} share a colour"),
    }
}
