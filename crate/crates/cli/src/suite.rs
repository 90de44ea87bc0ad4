//! The table of known values checked by `rainbow verify --suite paper`.
//!
//! Each claim is evaluated lazily, so a filter only pays for the rows it
//! keeps. Rows from random list assignments are reported as evidence; rows
//! backed by exhaustive search or an explicit construction are proved.

use std::fs;
use std::io::Cursor;
use std::path::{Path, PathBuf};

use rainbow_core::constructions::{find, lemma41_bad_lists, run as run_construction, srcl_wheel_upper};
use rainbow_core::exact::{compute_param, ColouringOutcome, ParamResult, ParamTag};
use rainbow_core::families::{duplicate_degree2, enumerate_family_g};
use rainbow_core::iso::isomorphic;
use rainbow_core::lists::{random_lists, ItemMode};
use rainbow_core::listsolve::{
    adversarial_bad_lists, compute_list_param, decide_list_leq, exists_list_colouring, sampled_forall, ListVerdict,
    SampledOutcome,
};
use rainbow_core::poly::graph_poly_coefficient;
use rainbow_core::search::SearchConfig;
use rainbow_core::{Error, FamilySpec, Graph, Property, Result};

use crate::report::{Row, RowStatus};

type Check = Box<dyn Fn(&SearchConfig) -> Result<Outcome> + Send + Sync>;

pub struct Claim {
    pub id: String,
    pub group: &'static str,
    pub claim: String,
    pub expected: String,
    check: Check,
}

pub struct Outcome {
    pub computed: String,
    pub status: RowStatus,
    pub nodes: u64,
}

impl Outcome {
    fn new(computed: impl Into<String>, status: RowStatus, nodes: u64) -> Self {
        Outcome { computed: computed.into(), status, nodes }
    }
}

impl Claim {
    pub fn matches(&self, filter: Option<&str>) -> bool {
        filter.is_none_or(|f| self.group == f || self.id.contains(f))
    }

    pub fn evaluate(&self, cfg: &SearchConfig) -> Row {
        let out = match (self.check)(cfg) {
            Ok(o) => o,
            Err(e @ Error::Budget(_)) => Outcome::new(e.to_string(), RowStatus::Exceeded, 0),
            Err(e) => Outcome::new(format!("error: {e}"), RowStatus::Mismatch, 0),
        };
        Row {
            id: self.id.clone(),
            group: self.group,
            claim: self.claim.clone(),
            expected: self.expected.clone(),
            computed: out.computed,
            status: out.status,
            nodes: out.nodes,
        }
    }
}

fn claim(
    group: &'static str,
    id: String,
    text: String,
    expected: String,
    check: impl Fn(&SearchConfig) -> Result<Outcome> + Send + Sync + 'static,
) -> Claim {
    Claim { id: format!("{group}/{id}"), group, claim: text, expected, check: Box::new(check) }
}

fn compute(g: &Graph, tag: ParamTag, cfg: &SearchConfig) -> Result<ParamResult> {
    if tag.is_list() {
        compute_list_param(g, tag, cfg)
    } else {
        compute_param(g, tag, cfg)
    }
}

fn shown(res: &ParamResult) -> String {
    match res.value() {
        Some(v) => v.to_string(),
        None => format!("[{}, {}]", res.lo, res.hi),
    }
}

/// `tag(spec) = expected`.
fn value_claim(group: &'static str, spec: FamilySpec, tag: ParamTag, expected: usize) -> Claim {
    let text = format!("{tag}({spec}) = {expected}");
    claim(group, format!("{tag}/{spec}"), text, expected.to_string(), move |cfg| {
        let g = spec.build()?;
        let res = compute(&g, tag, cfg)?;
        let status = match res.value() {
            Some(v) if v == expected && res.evidence => RowStatus::Evidence,
            Some(v) if v == expected => RowStatus::Proved,
            _ if !res.is_exact() && res.lo <= expected && expected <= res.hi => RowStatus::Exceeded,
            _ => RowStatus::Mismatch,
        };
        Ok(Outcome::new(shown(&res), status, res.nodes))
    })
}

/// The construction succeeds on `samples` random `r`-list assignments over `2r` colours.
fn construction_claim(group: &'static str, spec: FamilySpec, via: &'static str, r: usize, samples: u64) -> Claim {
    let text = format!("{via} succeeds on {samples} random {r}-list assignments of {spec}");
    claim(group, format!("{via}/{spec}"), text, format!("{samples}/{samples}"), move |cfg| {
        let g = spec.build()?;
        let c = find(via).expect("registered construction");
        for k in 0..samples {
            let seed = cfg.seed.wrapping_add(k);
            let lists = random_lists(ItemMode::Edge, g.m(), r, 2 * r, seed);
            let out = run_construction(c.as_ref(), &g, &lists)?;
            if !out.passed() {
                return Ok(Outcome::new(format!("failed at seed {seed}"), RowStatus::Mismatch, 0));
            }
        }
        Ok(Outcome::new(format!("{samples}/{samples}"), RowStatus::Evidence, 0))
    })
}

fn prop_name(p: Property) -> &'static str {
    match p {
        Property::RainbowConnected => "rcl",
        Property::StronglyRainbowConnected => "srcl",
        Property::ProperEdge => "proper-edge",
        Property::ProperVertex => "proper-vertex",
    }
}

/// Exhaustive check over all `r`-list assignments: fails below `e`, holds at `e`.
fn forall_claim(group: &'static str, spec: FamilySpec, p: Property, e: usize) -> Claim {
    let name = prop_name(p);
    let text = format!("some {}-list assignment of {spec} is bad and no {e}-list assignment is", e - 1);
    claim(group, format!("forall/{name}/{spec}"), text, e.to_string(), move |cfg| {
        let g = spec.build()?;
        let below = decide_list_leq(&g, p, e - 1, cfg)?;
        let at = decide_list_leq(&g, p, e, &SearchConfig { budget: cfg.budget.saturating_sub(below.nodes), ..*cfg })?;
        let nodes = below.nodes + at.nodes;
        let lo = match below.verdict {
            ListVerdict::Fails(_) => Some(e),
            ListVerdict::Holds => Some(e - 1),
            ListVerdict::Exceeded => None,
        };
        let hi_ok = match at.verdict {
            ListVerdict::Holds => Some(true),
            ListVerdict::Fails(_) => Some(false),
            ListVerdict::Exceeded => None,
        };
        Ok(match (lo, hi_ok) {
            (Some(l), Some(true)) if l == e => Outcome::new(e.to_string(), RowStatus::Proved, nodes),
            (None, _) | (_, None) => Outcome::new("budget exhausted", RowStatus::Exceeded, nodes),
            (Some(l), Some(true)) => Outcome::new(format!("<= {l}"), RowStatus::Mismatch, nodes),
            (_, Some(false)) => Outcome::new(format!("> {e}"), RowStatus::Mismatch, nodes),
        })
    })
}

/// The adversarial search finds a verified bad `(bound-1)`-list assignment.
fn adversarial_claim(group: &'static str, spec: FamilySpec, p: Property, bound: usize) -> Claim {
    let name = prop_name(p);
    let text = format!("{name}({spec}) >= {bound} by an explicit bad {}-list assignment", bound - 1);
    claim(group, format!("bad-lists/{name}/{spec}"), text, format!(">= {bound}"), move |cfg| {
        let g = spec.build()?;
        let s = adversarial_bad_lists(&g, p, bound - 1, cfg, cfg.seed)?;
        Ok(match s.found {
            Some(_) => {
                let via = s.source.unwrap_or_else(|| "search".into());
                Outcome::new(format!(">= {bound} ({via})"), RowStatus::Proved, s.nodes)
            }
            None => Outcome::new("none found", RowStatus::Exceeded, s.nodes),
        })
    })
}

fn cycles(out: &mut Vec<Claim>) {
    for n in 4..=9 {
        for tag in [ParamTag::Rc, ParamTag::Src] {
            out.push(value_claim("cycles", FamilySpec::Cycle(n), tag, n.div_ceil(2)));
        }
    }
    for n in [4, 5] {
        for tag in [ParamTag::Rcl, ParamTag::Srcl] {
            out.push(value_claim("cycles", FamilySpec::Cycle(n), tag, n.div_ceil(2)));
        }
    }
}

fn trees(out: &mut Vec<Claim>) {
    let shapes = (2..=6).map(|e| (FamilySpec::Path(e + 1), e)).chain((3..=6).map(|e| (FamilySpec::Star(e), e)));
    for (spec, e) in shapes {
        for tag in [ParamTag::Rc, ParamTag::Src, ParamTag::Rcl, ParamTag::Srcl] {
            out.push(value_claim("trees", spec.clone(), tag, e));
        }
        for p in [Property::RainbowConnected, Property::StronglyRainbowConnected] {
            if e <= 4 {
                out.push(forall_claim("trees", spec.clone(), p, e));
            }
            out.push(adversarial_claim("trees", spec.clone(), p, e));
        }
    }
}

fn complete(out: &mut Vec<Claim>) {
    for n in 2..=6 {
        let spec = FamilySpec::Complete(n);
        for tag in [ParamTag::Rc, ParamTag::Src, ParamTag::Rcl, ParamTag::Srcl] {
            out.push(value_claim("complete", spec.clone(), tag, 1));
        }
        for p in [Property::RainbowConnected, Property::StronglyRainbowConnected] {
            let spec = spec.clone();
            let name = prop_name(p);
            let text = format!("every 1-list assignment of {spec} admits a valid colouring");
            out.push(claim("complete", format!("forall/{name}/{spec}"), text, "holds".into(), move |cfg| {
                let d = decide_list_leq(&spec.build()?, p, 1, cfg)?;
                Ok(match d.verdict {
                    ListVerdict::Holds => Outcome::new("holds", RowStatus::Proved, d.nodes),
                    ListVerdict::Fails(_) => Outcome::new("fails", RowStatus::Mismatch, d.nodes),
                    ListVerdict::Exceeded => Outcome::new("budget exhausted", RowStatus::Exceeded, d.nodes),
                })
            }));
        }
    }
}

fn wheels(out: &mut Vec<Claim>) {
    for (n, rc) in [(3, 1), (4, 2), (5, 2), (6, 2), (7, 3)] {
        out.push(value_claim("wheels", FamilySpec::Wheel(n), ParamTag::Rc, rc));
        out.push(value_claim("wheels", FamilySpec::Wheel(n), ParamTag::Src, n.div_ceil(3)));
    }
    for n in 7..=12 {
        out.push(construction_claim("wheels", FamilySpec::Wheel(n), "universal-vertex", 3, 200));
    }
    for n in 4..=6 {
        out.push(value_claim("wheel-lists", FamilySpec::Wheel(n), ParamTag::Rcl, 2));
        out.push(value_claim("wheel-lists", FamilySpec::Wheel(n), ParamTag::Srcl, 2));
    }
    for n in 7..=9 {
        let text = format!("srcl(wheel:{n}) = chil(comp-sq-cycle:{n}) = 3");
        out.push(claim("wheel-lists", format!("srcl/wheel:{n}"), text, "3".into(), move |cfg| {
            let res = srcl_wheel_upper(n, cfg)?;
            let status = match res.value() {
                Some(3) => RowStatus::Proved,
                None if res.lo <= 3 && 3 <= res.hi => RowStatus::Exceeded,
                _ => RowStatus::Mismatch,
            };
            Ok(Outcome::new(shown(&res), status, res.nodes))
        }));
    }
    let text = "500 random 2-list assignments of wheel:5 admit strongly rainbow connected colourings".to_string();
    out.push(claim("wheel-lists", "sampled/srcl/wheel:5".into(), text, "500/500".into(), |cfg| {
        let g = FamilySpec::Wheel(5).build()?;
        let (s, nodes) = sampled_forall(&g, Property::StronglyRainbowConnected, 2, 500, cfg.seed, cfg)?;
        Ok(match s {
            SampledOutcome::Pass { samples } => Outcome::new(format!("{samples}/{samples}"), RowStatus::Evidence, nodes),
            SampledOutcome::Fail(_) => Outcome::new("bad assignment found", RowStatus::Mismatch, nodes),
            SampledOutcome::Exceeded { completed } => {
                Outcome::new(format!("{completed}/500 before budget ran out"), RowStatus::Exceeded, nodes)
            }
        })
    }));
}

fn cns(out: &mut Vec<Claim>) {
    let text = "coefficient of x_0^2...x_8^2 in the graph polynomial of comp-sq-cycle:9 is -18".to_string();
    out.push(claim("cns", "coefficient/comp-sq-cycle:9".into(), text, "-18".into(), |_| {
        let g = FamilySpec::CompSqCycle(9).build()?;
        let c = graph_poly_coefficient(&g, &[2; 9])?;
        let status = if c == (-18).into() { RowStatus::Proved } else { RowStatus::Mismatch };
        Ok(Outcome::new(c.to_string(), status, 0))
    }));
    out.push(value_claim("cns", FamilySpec::CompSqCycle(9), ParamTag::Chil, 3));
}

fn kmn(out: &mut Vec<Claim>) {
    for n in 2..=6 {
        let want = (1..=n).find(|r| r * r >= n).expect("root");
        out.push(value_claim("kmn", FamilySpec::Kmn(2, n), ParamTag::Src, want));
    }
    out.push(value_claim("kmn", FamilySpec::Kmn(2, 5), ParamTag::Rc, 3));
    out.push(construction_claim("kmn", FamilySpec::Kmn(2, 9), "kmn-src", 3, 200));
    out.push(construction_claim("kmn", FamilySpec::Kmn(3, 27), "kmn-src", 3, 200));
    out.push(construction_claim("kmn", FamilySpec::Kmn(2, 10), "kmn-rc4", 4, 200));
}

fn multipartite(out: &mut Vec<Claim>) {
    out.push(value_claim("multipartite", FamilySpec::Multipartite(vec![1, 1, 2]), ParamTag::Src, 2));
    out.push(value_claim("multipartite", FamilySpec::Multipartite(vec![1, 2, 2]), ParamTag::Src, 2));
    out.push(construction_claim("multipartite", FamilySpec::Multipartite(vec![1, 1, 5]), "multipartite-rc", 3, 200));
}

fn petersen(out: &mut Vec<Claim>) {
    out.push(value_claim("petersen", FamilySpec::Petersen, ParamTag::Rc, 3));
    out.push(value_claim("petersen", FamilySpec::Petersen, ParamTag::Src, 4));
}

fn gadgets(out: &mut Vec<Claim>) {
    let text = "the product 2-list assignment of lemma41:3 admits no strongly rainbow connected colouring".to_string();
    out.push(claim("gadgets", "bad-lists/lemma41:3".into(), text, "none".into(), |cfg| {
        let (g, l) = lemma41_bad_lists(3, None)?;
        let s = exists_list_colouring(&g, &l, Property::StronglyRainbowConnected, cfg)?;
        Ok(match s.outcome {
            ColouringOutcome::None => Outcome::new("none", RowStatus::Proved, s.nodes),
            ColouringOutcome::Witness(_) => Outcome::new("colouring found", RowStatus::Mismatch, s.nodes),
            ColouringOutcome::Exceeded => Outcome::new("budget exhausted", RowStatus::Exceeded, s.nodes),
        })
    }));
    out.push(value_claim("gadgets", FamilySpec::PairSrc(2, 3), ParamTag::Src, 2));
    out.push(adversarial_claim("gadgets", FamilySpec::PairSrc(2, 3), Property::StronglyRainbowConnected, 3));
    out.push(construction_claim("gadgets", FamilySpec::Lemma42(4), "lemma42", 2, 500));
}

fn family_g(out: &mut Vec<Claim>) {
    let text = "every member on at most 12 vertices has diameter 2, no universal vertex and 2n-5 edges".to_string();
    out.push(claim("family-g", "shape/n<=12".into(), text, "all".into(), |_| {
        let members = enumerate_family_g(12)?;
        let bad: Vec<String> = members
            .iter()
            .filter(|(_, g)| g.diameter() != 2 || !g.universal_vertices().is_empty() || g.m() + 5 != 2 * g.n())
            .map(|(s, _)| s.to_string())
            .collect();
        Ok(if bad.is_empty() {
            Outcome::new(format!("all {}", members.len()), RowStatus::Proved, 0)
        } else {
            Outcome::new(format!("fails for {}", bad.join(" ")), RowStatus::Mismatch, 0)
        })
    }));
    let text = "duplicating any degree-2 vertex of a member on at most 9 vertices gives a member".to_string();
    out.push(claim("family-g", "duplication/n<=10".into(), text, "closed".into(), |_| {
        let members = enumerate_family_g(10)?;
        for (spec, g) in members.iter().filter(|(_, g)| g.n() < 10) {
            for v in (0..g.n()).filter(|&v| g.degree(v) == 2) {
                let d = duplicate_degree2(g, v)?;
                if !members.iter().any(|(_, h)| h.n() == d.n() && h.m() == d.m() && isomorphic(h, &d)) {
                    return Ok(Outcome::new(format!("{spec} at vertex {v} leaves the family"), RowStatus::Mismatch, 0));
                }
            }
        }
        Ok(Outcome::new("closed", RowStatus::Proved, 0))
    }));
    for (p, q) in [(1, 1), (2, 1), (2, 2)] {
        out.push(value_claim("family-g", FamilySpec::Gpq(p, q), ParamTag::Rc, 3));
    }
}

/// Reads `H`, a `---` line, then `G`, both in the plain graph format.
pub fn read_graph_pair(path: &Path) -> Result<(Graph, Graph)> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut blocks = vec![String::new()];
    for line in text.lines() {
        if line.trim() == "---" {
            blocks.push(String::new());
        } else {
            let last = blocks.last_mut().expect("non-empty");
            last.push_str(line);
            last.push('\n');
        }
    }
    if blocks.len() != 2 {
        return Err(Error::Parse { line: 0, message: "expected two graphs separated by a `---` line".into() });
    }
    let h = Graph::read_text(Cursor::new(blocks[0].as_bytes()))?;
    let g = Graph::read_text(Cursor::new(blocks[1].as_bytes()))?;
    Ok((h, g))
}

fn figure1(out: &mut Vec<Claim>, file: Option<PathBuf>) {
    let rows: [(&str, &str, &str); 3] = [
        ("spanning", "H is a spanning subgraph of G", "yes"),
        ("src/H", "src(H) = 4", "4"),
        ("src/G", "src(G) >= 5 although H is a spanning subgraph of G", ">= 5"),
    ];
    for (id, text, expected) in rows {
        let file = file.clone();
        out.push(claim("figure1", id.into(), text.into(), expected.into(), move |cfg| {
            let Some(path) = &file else {
                return Ok(Outcome::new("no graph file given (--figure1)", RowStatus::Skipped, 0));
            };
            let (h, g) = read_graph_pair(path)?;
            match id {
                "spanning" => {
                    let ok = h.n() == g.n() && h.edges().iter().all(|&(u, v)| g.adjacent(u, v));
                    Ok(Outcome::new(if ok { "yes" } else { "no" }, if ok { RowStatus::Proved } else { RowStatus::Mismatch }, 0))
                }
                "src/H" => {
                    let res = compute_param(&h, ParamTag::Src, cfg)?;
                    let status = match res.value() {
                        Some(4) => RowStatus::Proved,
                        None if res.lo <= 4 && 4 <= res.hi => RowStatus::Exceeded,
                        _ => RowStatus::Mismatch,
                    };
                    Ok(Outcome::new(shown(&res), status, res.nodes))
                }
                _ => {
                    let res = compute_param(&g, ParamTag::Src, cfg)?;
                    let status = if res.lo >= 5 {
                        RowStatus::Proved
                    } else if res.hi >= 5 {
                        RowStatus::Exceeded
                    } else {
                        RowStatus::Mismatch
                    };
                    Ok(Outcome::new(shown(&res), status, res.nodes))
                }
            }
        }));
    }
}

/// Every claim of the suite, in table order.
pub fn claims(figure1_file: Option<&Path>) -> Vec<Claim> {
    let mut out = Vec::new();
    cycles(&mut out);
    trees(&mut out);
    complete(&mut out);
    wheels(&mut out);
    cns(&mut out);
    kmn(&mut out);
    multipartite(&mut out);
    petersen(&mut out);
    gadgets(&mut out);
    family_g(&mut out);
    figure1(&mut out, figure1_file.map(Path::to_path_buf));
    out
}

/// Evaluates the claims kept by `filter`; an unmatched filter is an error.
pub fn run(filter: Option<&str>, figure1_file: Option<&Path>, cfg: &SearchConfig) -> anyhow::Result<Vec<Row>> {
    let kept: Vec<Claim> = claims(figure1_file).into_iter().filter(|c| c.matches(filter)).collect();
    if kept.is_empty() {
        anyhow::bail!("no claim matches filter {:?}", filter.unwrap_or_default());
    }
    Ok(kept.iter().map(|c| c.evaluate(cfg)).collect())
}
