use std::fs::File;
use std::io::BufReader;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use rainbow_core::constructions::{find, registry, run};
use rainbow_core::exact::{compute_param, ParamTag};
use rainbow_core::lists::{random_lists, ItemMode};
use rainbow_core::listsolve::compute_list_param;
use rainbow_core::search::SearchConfig;
use rainbow_core::lists::ListAssignment;
use rainbow_core::{Error, Graph};
use serde::Serialize;

use crate::args::{Common, ListSource};
use crate::dsl::GraphSpec;
use crate::report::{verdict_text, ConstructReport, GraphInfo, ParamReport, Stats, Status, VerifyReport, REPORT_VERSION};
use crate::suite;

/// What a command prints and the process exit code.
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

pub fn config(c: &Common) -> SearchConfig {
    let jobs = if c.jobs == 0 { std::thread::available_parallelism().map_or(1, |n| n.get()) } else { c.jobs };
    SearchConfig { budget: c.budget_nodes, jobs, orbit_pruning: false, seed: c.seed }
}

pub fn stats(c: &Common, cfg: &SearchConfig, nodes: u64, start: Instant) -> Stats {
    Stats {
        nodes,
        budget: cfg.budget,
        workers: cfg.jobs,
        seed: c.seed,
        wall_ms: (!c.no_timing).then(|| start.elapsed().as_millis() as u64),
    }
}

fn render<T: Serialize>(json: bool, report: &T, text: impl FnOnce() -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("reports serialise");
        s.push('\n');
        s
    } else {
        text()
    }
}

/// Exit code for a core error: budget exhaustion is 2, anything else 1.
pub fn error_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(Error::Budget(_)) => 2,
        _ => 1,
    }
}

fn build(spec: &GraphSpec) -> anyhow::Result<Graph> {
    spec.build().with_context(|| format!("cannot build graph {spec}"))
}

pub fn param(spec: &GraphSpec, tag: ParamTag, c: &Common) -> anyhow::Result<Output> {
    let g = build(spec)?;
    let cfg = config(c);
    let start = Instant::now();
    let res = if tag.is_list() { compute_list_param(&g, tag, &cfg)? } else { compute_param(&g, tag, &cfg)? };
    let st = stats(c, &cfg, res.nodes, start);
    let report = ParamReport::new(GraphInfo::new(spec.to_string(), &g), res, st);
    Ok(Output { stdout: render(c.json, &report, || report.text()), code: report.status.exit_code() })
}

fn load_lists(src: &ListSource, g: &Graph, seed: u64) -> anyhow::Result<ListAssignment> {
    let m = g.m();
    let lists = match src {
        ListSource::Constant(r) => ListAssignment::constant(ItemMode::Edge, m, *r),
        ListSource::Random { r, seed: s, universe } => {
            let universe = universe.unwrap_or(2 * r);
            if universe < *r {
                bail!("universe {universe} is smaller than the list size {r}");
            }
            if universe > rainbow_core::search::MAX_COLOURS {
                bail!("universe {universe} exceeds {} colours", rainbow_core::search::MAX_COLOURS);
            }
            random_lists(ItemMode::Edge, m, *r, universe, s.unwrap_or(seed))
        }
        ListSource::File(p) => {
            let f = File::open(p).with_context(|| format!("cannot open list file {}", p.display()))?;
            ListAssignment::read_text(ItemMode::Edge, BufReader::new(f))?
        }
    };
    if lists.len() != m {
        bail!("list assignment covers {} edges, graph has {m}", lists.len());
    }
    Ok(lists)
}

pub fn construct(spec: &GraphSpec, via: &str, src: Option<&ListSource>, c: &Common) -> anyhow::Result<Output> {
    let proc_ = find(via).ok_or_else(|| {
        let names: Vec<&str> = registry().iter().map(|c| c.name()).collect();
        anyhow!("unknown construction {via:?}; available: {}", names.join(", "))
    })?;
    let g = build(spec)?;
    let size = proc_.list_size(&g).with_context(|| format!("{via} does not apply to {spec}"))?;
    let src = src.cloned().unwrap_or(ListSource::Constant(size));
    let lists = load_lists(&src, &g, c.seed)?;
    let cfg = config(c);
    let start = Instant::now();
    let out = run(proc_.as_ref(), &g, &lists).with_context(|| format!("{via} failed on {spec}"))?;
    let status = if out.passed() { Status::Proved } else { Status::Failed };
    let report = ConstructReport {
        report_v: REPORT_VERSION,
        command: "construct",
        graph: GraphInfo::new(spec.to_string(), &g),
        construction: out.name,
        property: out.property,
        lists: src.to_string(),
        list_size: size,
        assignment: lists,
        verdict: verdict_text(&g, out.verdict),
        colouring: out.colouring,
        respects_lists: out.respects_lists,
        status,
        stats: stats(c, &cfg, 0, start),
    };
    Ok(Output { stdout: render(c.json, &report, || report.text()), code: status.exit_code() })
}

pub fn verify(filter: Option<&str>, figure1: Option<&std::path::Path>, c: &Common) -> anyhow::Result<Output> {
    let cfg = config(c);
    let start = Instant::now();
    let rows = suite::run(filter, figure1, &cfg)?;
    let nodes = rows.iter().map(|r| r.nodes).sum();
    let report = VerifyReport {
        report_v: REPORT_VERSION,
        command: "verify",
        suite: "paper".into(),
        filter: filter.map(String::from),
        summary: crate::report::Summary::of(&rows),
        rows,
        stats: stats(c, &cfg, nodes, start),
    };
    Ok(Output { stdout: render(c.json, &report, || report.text()), code: report.exit_code() })
}

#[derive(Serialize)]
struct Entry {
    name: &'static str,
    summary: &'static str,
}

pub fn constructions(json: bool) -> Output {
    let entries: Vec<Entry> = registry().iter().map(|c| Entry { name: c.name(), summary: c.summary() }).collect();
    let text = || entries.iter().map(|e| format!("{:<18} {}\n", e.name, e.summary)).collect::<String>();
    Output { stdout: render(json, &entries, text), code: 0 }
}
