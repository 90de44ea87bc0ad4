//! List colourings: the ∃ search for one assignment, the ∀∃ decision over
//! all assignments, and the heuristics used for lower and upper bounds.
//!
//! [`decide_list_leq`] walks the canonical enumeration tree of
//! [`CanonicalNode`], with tree position `i` holding the item at position
//! `i` of the search order. Two checks prune a prefix:
//!
//! * with the unassigned items left out, a valid colouring of the prefix
//!   already exists; monotone properties then hold for every completion;
//! * with the unassigned items as wildcards, no colouring exists; giving
//!   them pairwise disjoint fresh lists is then a bad assignment.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::colour::{Colour, ColourSet, Property};
use crate::error::{Error, Result};
use crate::exact::{
    compute_param, exists_colouring, param_bounds, ColouringOutcome, ColouringSearch, LowerCert,
    ParamResult, ParamTag, UpperCert,
};
use crate::graph::{Graph, INFINITY};
use crate::lists::{
    enumeration_capacity, random_lists_with, CanonicalNode, ItemMode, ListAssignment,
};
use crate::poly::{cns_choosable_certificate, CnsOutcome};
use crate::rainbow::check_property;
use crate::search::{
    complete_witness, search, Prepared, Problem, SearchConfig, SearchOutcome, Unassigned,
};

fn mode_of(p: Property) -> ItemMode {
    if p.is_vertex() {
        ItemMode::Vertex
    } else {
        ItemMode::Edge
    }
}

fn max_len(g: &Graph) -> usize {
    g.n().saturating_sub(1).max(1)
}

/// Searches for a colouring from the lists satisfying `p`.
pub fn exists_list_colouring(
    g: &Graph,
    lists: &ListAssignment,
    p: Property,
    cfg: &SearchConfig,
) -> Result<ColouringSearch> {
    if lists.mode() != mode_of(p) {
        return Err(Error::ModeMismatch(format!(
            "{p} needs {:?} lists, got {:?}",
            mode_of(p),
            lists.mode()
        )));
    }
    let items = p.item_count(g);
    if lists.len() != items {
        return Err(Error::LengthMismatch {
            expected: items,
            got: lists.len(),
        });
    }
    if let Some(i) = (0..items).find(|&i| lists.list(i).is_empty()) {
        return Err(Error::ListTooSmall {
            item: i,
            size: 0,
            required: 1,
        });
    }
    let (dense, back) = lists.densified();
    let prep = Prepared::new(g, p, max_len(g))?;
    let pb = Problem {
        prepared: &prep,
        domains: dense.into_iter().map(Some).collect(),
        palette: None,
        unassigned: Unassigned::Absent,
        item_perms: None,
    };
    let res = search(&pb, cfg)?;
    let outcome = match res.outcome {
        SearchOutcome::Found(w) => {
            let c = complete_witness(&w).map(|c| back[c as usize]);
            let respects = (0..items).all(|i| lists.list(i).contains(&c.get(i)));
            if !respects || !check_property(g, &c, p)?.is_ok() {
                return Err(Error::GuaranteeFailed(format!(
                    "search returned an invalid {p} list colouring"
                )));
            }
            ColouringOutcome::Witness(c)
        }
        SearchOutcome::Exhausted => ColouringOutcome::None,
        SearchOutcome::Exceeded => ColouringOutcome::Exceeded,
    };
    Ok(ColouringSearch {
        outcome,
        nodes: res.nodes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ListVerdict {
    /// Every `r`-list assignment admits a valid colouring.
    Holds,
    /// A verified bad assignment.
    Fails(ListAssignment),
    Exceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListDecision {
    pub verdict: ListVerdict,
    /// Search nodes over all inner searches.
    pub nodes: u64,
    /// Canonical tree nodes visited.
    pub tree_nodes: u64,
}

struct Walk<'a, 'g> {
    g: &'g Graph,
    prep: &'a Prepared<'g>,
    order: Vec<usize>,
    items: usize,
    r: usize,
    closable: usize,
    budget: u64,
    nodes: AtomicU64,
    tree_nodes: AtomicU64,
    stop: AtomicBool,
}

enum Step {
    Holds,
    Fails(Vec<ColourSet>),
    Exceeded,
}

impl Walk<'_, '_> {
    fn run(&self, lists: &[ColourSet], unassigned: Unassigned) -> Option<SearchOutcome> {
        let used = self.nodes.load(Ordering::Relaxed);
        if used >= self.budget {
            return None;
        }
        let mut domains = vec![None; self.items];
        for (pos, l) in lists.iter().enumerate() {
            domains[self.order[pos]] = Some(l.iter().collect());
        }
        let pb = Problem {
            prepared: self.prep,
            domains,
            palette: None,
            unassigned,
            item_perms: None,
        };
        let res = search(&pb, &SearchConfig::with_budget(self.budget - used)).ok()?;
        self.nodes.fetch_add(res.nodes, Ordering::Relaxed);
        match res.outcome {
            SearchOutcome::Exceeded => None,
            o => Some(o),
        }
    }

    fn walk(&self, node: &CanonicalNode) -> Step {
        if self.stop.load(Ordering::Relaxed) {
            return Step::Exceeded;
        }
        self.tree_nodes.fetch_add(1, Ordering::Relaxed);
        let k = node.depth();
        if k >= self.closable {
            match self.run(&node.lists, Unassigned::Absent) {
                Some(SearchOutcome::Found(_)) => return Step::Holds,
                Some(_) if k == self.items => return Step::Fails(node.lists.clone()),
                Some(_) => {}
                None => return Step::Exceeded,
            }
        }
        if k > 0 {
            match self.run(&node.lists, Unassigned::Wildcard) {
                Some(SearchOutcome::Exhausted) => {
                    return Step::Fails(node.complete_fresh(self.items, self.r))
                }
                Some(_) => {}
                None => return Step::Exceeded,
            }
        }
        for child in node.children(self.r) {
            match self.walk(&child) {
                Step::Holds => {}
                other => return other,
            }
        }
        Step::Holds
    }

    fn to_assignment(&self, p: Property, lists: &[ColourSet]) -> ListAssignment {
        let mut out = vec![Vec::new(); self.items];
        for (pos, l) in lists.iter().enumerate() {
            out[self.order[pos]] = l.iter().collect();
        }
        ListAssignment::new(mode_of(p), out)
    }
}

/// First prefix length of `order` whose items alone can carry a valid colouring.
fn closable_depth(g: &Graph, p: Property, order: &[usize]) -> usize {
    match p {
        Property::RainbowConnected | Property::StronglyRainbowConnected => {
            let full = g.distance_matrix();
            let strong = p == Property::StronglyRainbowConnected;
            let mut kept: Vec<(usize, usize)> = Vec::new();
            for (k, &e) in order.iter().enumerate() {
                kept.push(g.edge(e));
                let sub = Graph::from_edges(g.n(), &kept).expect("subgraph of a simple graph");
                let d = sub.distance_matrix();
                // Pairs adjacent in `g` are always served by their edge.
                let ok = (0..g.n()).all(|u| {
                    (0..g.n()).all(|v| {
                        full.get(u, v) <= 1
                            || if strong {
                                d.get(u, v) == full.get(u, v)
                            } else {
                                d.get(u, v) != INFINITY
                            }
                    })
                });
                if ok {
                    return k + 1;
                }
            }
            order.len()
        }
        _ => order.len(),
    }
}

/// Decides whether every `r`-list assignment admits a colouring with property `p`.
pub fn decide_list_leq(
    g: &Graph,
    p: Property,
    r: usize,
    cfg: &SearchConfig,
) -> Result<ListDecision> {
    let items = p.item_count(g);
    enumeration_capacity(items, r)?;
    let prep = Prepared::new(g, p, max_len(g))?;
    let order = prep.order().to_vec();
    let walk = Walk {
        g,
        prep: &prep,
        closable: closable_depth(g, p, &order),
        order,
        items,
        r,
        budget: cfg.budget,
        nodes: AtomicU64::new(0),
        tree_nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
    };
    let step = if cfg.jobs <= 1 {
        walk.walk(&CanonicalNode::root())
    } else {
        parallel_walk(&walk, cfg.jobs)?
    };
    let verdict = match step {
        Step::Holds => ListVerdict::Holds,
        Step::Exceeded => ListVerdict::Exceeded,
        Step::Fails(lists) => {
            let bad = walk.to_assignment(p, &lists);
            let check =
                exists_list_colouring(walk.g, &bad, p, &SearchConfig::with_budget(cfg.budget))?;
            walk.nodes.fetch_add(check.nodes, Ordering::Relaxed);
            match check.outcome {
                ColouringOutcome::None => ListVerdict::Fails(bad),
                ColouringOutcome::Exceeded => ListVerdict::Exceeded,
                ColouringOutcome::Witness(_) => {
                    return Err(Error::GuaranteeFailed(
                        "refuted list assignment has a colouring".into(),
                    ))
                }
            }
        }
    };
    Ok(ListDecision {
        verdict,
        nodes: walk.nodes.load(Ordering::Relaxed),
        tree_nodes: walk.tree_nodes.load(Ordering::Relaxed),
    })
}

fn parallel_walk(walk: &Walk, jobs: usize) -> Result<Step> {
    // Expand breadth-first until there is enough work to share. Skipping
    // the checks on the expanded prefixes only loses pruning.
    let mut frontier = vec![CanonicalNode::root()];
    while frontier.len() < 8 * jobs && frontier[0].depth() < walk.items.min(walk.closable) {
        frontier = frontier.iter().flat_map(|n| n.children(walk.r)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    let steps: Vec<Step> = pool.install(|| {
        frontier
            .par_iter()
            .map(|n| {
                let s = walk.walk(n);
                if !matches!(s, Step::Holds) {
                    walk.stop.store(true, Ordering::Relaxed);
                }
                s
            })
            .collect()
    });
    let mut exceeded = false;
    for s in steps {
        match s {
            Step::Fails(l) => return Ok(Step::Fails(l)),
            Step::Exceeded => exceeded = true,
            Step::Holds => {}
        }
    }
    Ok(if exceeded {
        Step::Exceeded
    } else {
        Step::Holds
    })
}

/// Upper limit on local-search moves, independent of the node budget.
const MAX_LOCAL_STEPS: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadListSearch {
    /// A verified bad assignment, if one was found.
    pub found: Option<ListAssignment>,
    /// Which seed produced it, or `"local-search"`.
    pub source: Option<String>,
    pub candidates: usize,
    pub nodes: u64,
}

/// Seeded and randomised search for an `r`-list assignment with no valid colouring.
///
/// Seeds come first: constant lists; one shared list on the bridges (or on
/// the edges at a cut vertex) with disjoint lists elsewhere; for strong
/// rainbow connection the product lists around a vertex whose neighbours
/// `x ∈ X`, `y ∈ Y` are joined only through it. Then hill climbing over a
/// small universe, changing one colour per step and preferring assignments
/// whose ∃ search needs more nodes. A `None` result proves nothing.
pub fn adversarial_bad_lists(
    g: &Graph,
    p: Property,
    r: usize,
    cfg: &SearchConfig,
    seed: u64,
) -> Result<BadListSearch> {
    if r == 0 {
        return Err(Error::Precondition("r must be positive".into()));
    }
    let mode = mode_of(p);
    let items = p.item_count(g);
    let mut out = BadListSearch {
        found: None,
        source: None,
        candidates: 0,
        nodes: 0,
    };
    // Each candidate check gets a slice of the budget so one hard instance
    // cannot starve the rest.
    let per_check = (cfg.budget / 16).max(1000);
    let evaluate = |l: &ListAssignment, out: &mut BadListSearch| -> Result<Option<u64>> {
        out.candidates += 1;
        let left = cfg.budget.saturating_sub(out.nodes);
        if left == 0 {
            return Ok(None);
        }
        let s = exists_list_colouring(
            g,
            l,
            p,
            &SearchConfig {
                budget: per_check.min(left),
                jobs: 1,
                ..*cfg
            },
        )?;
        // Every candidate costs at least one node so the budget always drains.
        out.nodes += s.nodes.max(1);
        Ok(match s.outcome {
            ColouringOutcome::None => Some(u64::MAX),
            ColouringOutcome::Witness(_) => Some(s.nodes),
            ColouringOutcome::Exceeded => None,
        })
    };
    let mut seeds: Vec<(String, ListAssignment)> =
        vec![("constant".into(), ListAssignment::constant(mode, items, r))];
    if !p.is_vertex() {
        let bridges = g.bridges()?;
        if !bridges.is_empty() {
            seeds.push(("bridges".into(), shared_on(items, r, &bridges, mode)));
        }
        if let Some((v, _)) = g.max_cut_components()? {
            let star: Vec<usize> = g.incident(v).iter().map(|&(_, e)| e).collect();
            seeds.push(("cut-star".into(), shared_on(items, r, &star, mode)));
        }
        if p == Property::StronglyRainbowConnected {
            if let Some(l) = product_lists(g, r) {
                seeds.push(("product".into(), l));
            }
        }
    }
    for (name, l) in seeds {
        if evaluate(&l, &mut out)? == Some(u64::MAX) {
            out.found = Some(l);
            out.source = Some(name);
            return Ok(out);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe = (2 * r).max(r + 1);
    let mut cur = random_lists_with(&mut rng, mode, items, r, universe);
    let mut score = evaluate(&cur, &mut out)?.unwrap_or(0);
    let mut steps = 0u64;
    while out.nodes < cfg.budget && steps < MAX_LOCAL_STEPS {
        steps += 1;
        if score == u64::MAX {
            out.found = Some(cur);
            out.source = Some("local-search".into());
            return Ok(out);
        }
        let i = rng.gen_range(0..items);
        let old = cur.list(i).to_vec();
        let drop = old[rng.gen_range(0..old.len())];
        let add = rng.gen_range(0..universe as Colour);
        if old.contains(&add) {
            continue;
        }
        let mut lists = cur.lists().to_vec();
        lists[i] = old
            .into_iter()
            .filter(|&c| c != drop)
            .chain([add])
            .collect();
        let next = ListAssignment::new(mode, lists);
        let before = out.nodes;
        let Some(s) = evaluate(&next, &mut out)? else {
            if out.nodes == before {
                break;
            }
            continue;
        };
        // Accept sideways moves; occasionally restart from a fresh sample.
        if s >= score {
            cur = next;
            score = s;
        } else if rng.gen_bool(0.02) {
            cur = random_lists_with(&mut rng, mode, items, r, universe);
            score = evaluate(&cur, &mut out)?.unwrap_or(0);
        }
    }
    Ok(out)
}

/// Colours `0..r` on `shared`, pairwise disjoint fresh lists elsewhere.
fn shared_on(items: usize, r: usize, shared: &[usize], mode: ItemMode) -> ListAssignment {
    let mut next = r as Colour;
    let lists = (0..items)
        .map(|i| {
            if shared.contains(&i) {
                (0..r as Colour).collect()
            } else {
                let l: Vec<Colour> = (next..next + r as Colour).collect();
                next += r as Colour;
                l
            }
        })
        .collect();
    ListAssignment::new(mode, lists)
}

/// Product lists: `r` spokes `xv` with disjoint lists and `r^r` spokes `yv`
/// carrying every transversal, where each `x-v-y` is the unique geodesic.
fn product_lists(g: &Graph, r: usize) -> Option<ListAssignment> {
    let need = r.checked_pow(r as u32).filter(|&k| k <= 4096)?;
    let d = g.distance_matrix();
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbours(v).collect();
        if nb.len() < r + need {
            continue;
        }
        let only_via_v = |x: usize, y: usize| {
            d.get(x, y) == 2 && g.neighbours(x).filter(|&w| g.adjacent(w, y)).count() == 1
        };
        // Greedy X: keep the candidates compatible with the most Y's.
        let mut x_set: Vec<usize> = Vec::new();
        let mut ys: Vec<usize> = nb.clone();
        for _ in 0..r {
            let best = nb
                .iter()
                .filter(|x| !x_set.contains(x))
                .map(|&x| {
                    (
                        ys.iter().filter(|&&y| y != x && only_via_v(x, y)).count(),
                        x,
                    )
                })
                .max()?;
            x_set.push(best.1);
            ys.retain(|&y| y != best.1 && only_via_v(best.1, y));
        }
        if ys.len() < need {
            continue;
        }
        let items = g.m();
        let mut lists: Vec<Option<Vec<Colour>>> = vec![None; items];
        for (k, &x) in x_set.iter().enumerate() {
            let e = g.edge_id(v, x)?;
            lists[e] = Some((0..r).map(|j| (k * r + j) as Colour).collect());
        }
        for (t, &y) in ys.iter().take(need).enumerate() {
            let e = g.edge_id(v, y)?;
            let mut digits = t;
            let mut l = Vec::with_capacity(r);
            for k in 0..r {
                l.push((k * r + digits % r) as Colour);
                digits /= r;
            }
            lists[e] = Some(l);
        }
        let mut next = (r * r) as Colour;
        let lists = lists
            .into_iter()
            .map(|l| {
                l.unwrap_or_else(|| {
                    let f: Vec<Colour> = (next..next + r as Colour).collect();
                    next += r as Colour;
                    f
                })
            })
            .collect();
        return Some(ListAssignment::new(ItemMode::Edge, lists));
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampledOutcome {
    /// Every sample admitted a colouring. Evidence, not proof.
    Pass { samples: usize },
    /// A sample with no valid colouring (verified exhaustively).
    Fail(ListAssignment),
    /// A sample's search ran out of budget.
    Exceeded { completed: usize },
}

/// Draws `samples` uniform `r`-list assignments over `r·m` colours
/// (ChaCha8 seeded with `seed`) and checks each one.
pub fn sampled_forall(
    g: &Graph,
    p: Property,
    r: usize,
    samples: usize,
    seed: u64,
    cfg: &SearchConfig,
) -> Result<(SampledOutcome, u64)> {
    let mode = mode_of(p);
    let items = p.item_count(g);
    let universe = r * items;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nodes = 0u64;
    for k in 0..samples {
        let l = random_lists_with(&mut rng, mode, items, r, universe);
        let budget = cfg.budget.saturating_sub(nodes);
        let s = exists_list_colouring(g, &l, p, &SearchConfig { budget, ..*cfg })?;
        nodes += s.nodes;
        match s.outcome {
            ColouringOutcome::Witness(_) => {}
            ColouringOutcome::None => return Ok((SampledOutcome::Fail(l), nodes)),
            ColouringOutcome::Exceeded => {
                return Ok((SampledOutcome::Exceeded { completed: k }, nodes))
            }
        }
    }
    Ok((SampledOutcome::Pass { samples }, nodes))
}

/// Number of exponent vectors the nullstellensatz route tries per `r`.
const CNS_VECTORS: usize = 2000;

/// `rc^ℓ`, `src^ℓ`, `χ_ℓ` or `χ'_ℓ` as a value or certified interval.
pub fn compute_list_param(g: &Graph, tag: ParamTag, cfg: &SearchConfig) -> Result<ParamResult> {
    match tag {
        ParamTag::Rcl | ParamTag::Srcl => rainbow_list_param(g, tag, cfg),
        ParamTag::Chil => choice_number(g, cfg),
        ParamTag::Chipl => {
            let mut res = choice_number(&g.line_graph(), cfg)?;
            res.param = ParamTag::Chipl;
            let degree = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
            res.raise_lo(degree, LowerCert::MaxDegree { degree });
            Ok(res)
        }
        ParamTag::Rc | ParamTag::Src => Err(Error::Precondition(format!(
            "{tag} is not a list parameter; use compute_param"
        ))),
    }
}

fn remaining(cfg: &SearchConfig, used: u64) -> SearchConfig {
    SearchConfig {
        budget: cfg.budget.saturating_sub(used),
        ..*cfg
    }
}

fn rainbow_list_param(g: &Graph, tag: ParamTag, cfg: &SearchConfig) -> Result<ParamResult> {
    let mut res = param_bounds(g, tag)?;
    if res.is_exact() {
        return Ok(res);
    }
    let prop = tag.property();
    let base_tag = tag.base().expect("rainbow list tag");
    let base = compute_param(g, base_tag, cfg)?;
    res.nodes += base.nodes;
    res.raise_lo(
        base.lo,
        LowerCert::Dominates {
            param: base_tag,
            value: base.lo,
        },
    );
    let mut r = res.lo;
    while r < res.hi {
        let d = match decide_list_leq(g, prop, r, &remaining(cfg, res.nodes)) {
            Ok(d) => d,
            Err(Error::Capacity { .. }) => {
                res.note = Some(format!(
                    "{r}-list assignments exceed the enumeration capacity"
                ));
                return with_adversarial(g, prop, r, cfg, res);
            }
            Err(e) => return Err(e),
        };
        res.nodes += d.nodes;
        match d.verdict {
            ListVerdict::Holds => {
                res.lower_hi(
                    r,
                    UpperCert::ListsHold {
                        r,
                        assignments: d.tree_nodes,
                        nodes: d.nodes,
                    },
                );
                break;
            }
            ListVerdict::Fails(l) => {
                res.raise_lo(
                    r + 1,
                    LowerCert::BadList {
                        r: r + 1,
                        lists: l,
                        nodes: d.nodes,
                    },
                );
                r += 1;
            }
            ListVerdict::Exceeded => return with_adversarial(g, prop, r, cfg, res),
        }
    }
    Ok(res)
}

/// Falls back to the heuristic lower bound when the exact ∀ is out of reach.
fn with_adversarial(
    g: &Graph,
    prop: Property,
    r: usize,
    cfg: &SearchConfig,
    mut res: ParamResult,
) -> Result<ParamResult> {
    let left = remaining(cfg, res.nodes);
    if left.budget == 0 {
        return Ok(res);
    }
    let bad = adversarial_bad_lists(g, prop, r, &left, cfg.seed)?;
    res.nodes += bad.nodes;
    if let Some(l) = bad.found {
        res.raise_lo(
            r + 1,
            LowerCert::BadList {
                r: r + 1,
                lists: l,
                nodes: bad.nodes,
            },
        );
    }
    Ok(res)
}

fn choice_number(g: &Graph, cfg: &SearchConfig) -> Result<ParamResult> {
    let mut res = param_bounds(g, ParamTag::Chil)?;
    // Chromatic number first: χ <= χ_ℓ.
    let mut r = res.lo;
    while r < res.hi {
        let s = exists_colouring(g, Property::ProperVertex, r, &remaining(cfg, res.nodes))?;
        res.nodes += s.nodes;
        match s.outcome {
            ColouringOutcome::Witness(_) => break,
            ColouringOutcome::None => {
                res.raise_lo(
                    r + 1,
                    LowerCert::Chromatic {
                        r: r + 1,
                        nodes: s.nodes,
                    },
                );
                r += 1;
            }
            ColouringOutcome::Exceeded => break,
        }
    }
    let mut r = res.lo;
    while r < res.hi {
        // A coefficient table too large to build just means no certificate.
        let cns = match cns_choosable_certificate(g, r, CNS_VECTORS) {
            Err(Error::Capacity { .. }) => CnsOutcome::NoneFound { tried: 0 },
            other => other?,
        };
        if let CnsOutcome::Certificate {
            exponents,
            coefficient,
        } = cns
        {
            res.lower_hi(
                r,
                UpperCert::Nullstellensatz {
                    r,
                    exponents,
                    coefficient: coefficient.to_string(),
                },
            );
            break;
        }
        let d = match decide_list_leq(g, Property::ProperVertex, r, &remaining(cfg, res.nodes)) {
            Ok(d) => d,
            Err(Error::Capacity { .. }) => {
                res.note = Some(format!(
                    "{r}-list assignments exceed the enumeration capacity"
                ));
                break;
            }
            Err(e) => return Err(e),
        };
        res.nodes += d.nodes;
        match d.verdict {
            ListVerdict::Holds => {
                res.lower_hi(
                    r,
                    UpperCert::ListsHold {
                        r,
                        assignments: d.tree_nodes,
                        nodes: d.nodes,
                    },
                );
                break;
            }
            ListVerdict::Fails(l) => {
                res.raise_lo(
                    r + 1,
                    LowerCert::BadList {
                        r: r + 1,
                        lists: l,
                        nodes: d.nodes,
                    },
                );
                r += 1;
            }
            ListVerdict::Exceeded => break,
        }
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::rainbow::satisfies;
    use proptest::prelude::*;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    /// Oracle: try every colouring from the lists.
    fn brute_force(g: &Graph, l: &ListAssignment, p: Property) -> bool {
        let items = l.len();
        let mut idx = vec![0usize; items];
        loop {
            let c: Vec<Colour> = (0..items).map(|i| l.list(i)[idx[i]]).collect();
            if satisfies(g, &c.into(), p).unwrap() {
                return true;
            }
            let mut i = 0;
            loop {
                if i == items {
                    return false;
                }
                idx[i] += 1;
                if idx[i] < l.list(i).len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn c4_constant_lists() {
        let g = FamilySpec::Cycle(4).build().unwrap();
        let l = ListAssignment::new(ItemMode::Edge, vec![vec![1, 2]; 4]);
        match exists_list_colouring(&g, &l, Property::RainbowConnected, &cfg())
            .unwrap()
            .outcome
        {
            ColouringOutcome::Witness(c) => {
                assert!(satisfies(&g, &c, Property::RainbowConnected).unwrap())
            }
            other => panic!("{other:?}"),
        }
        let v = ListAssignment::constant(ItemMode::Vertex, 4, 2);
        assert!(matches!(
            exists_list_colouring(&g, &v, Property::RainbowConnected, &cfg()),
            Err(Error::ModeMismatch(_))
        ));
    }

    #[test]
    fn decisions_on_small_graphs() {
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        let d = decide_list_leq(&c4, Property::StronglyRainbowConnected, 2, &cfg()).unwrap();
        assert_eq!(d.verdict, ListVerdict::Holds);
        let c5 = FamilySpec::Cycle(5).build().unwrap();
        let d = decide_list_leq(&c5, Property::RainbowConnected, 2, &cfg()).unwrap();
        match d.verdict {
            ListVerdict::Fails(l) => {
                assert_eq!(l.r(), 2);
                assert!(!brute_force(&c5, &l, Property::RainbowConnected));
            }
            other => panic!("{other:?}"),
        }
        let k3 = FamilySpec::Complete(3).build().unwrap();
        let d = decide_list_leq(&k3, Property::RainbowConnected, 1, &cfg()).unwrap();
        assert_eq!(d.verdict, ListVerdict::Holds);
        let d = decide_list_leq(&k3, Property::ProperVertex, 2, &cfg()).unwrap();
        assert!(matches!(d.verdict, ListVerdict::Fails(_)));
    }

    #[test]
    fn parallel_walk_agrees() {
        let c5 = FamilySpec::Cycle(5).build().unwrap();
        for (p, r) in [
            (Property::RainbowConnected, 2),
            (Property::RainbowConnected, 3),
            (Property::StronglyRainbowConnected, 3),
        ] {
            let one = decide_list_leq(&c5, p, r, &cfg()).unwrap();
            let four = decide_list_leq(&c5, p, r, &SearchConfig { jobs: 4, ..cfg() }).unwrap();
            assert_eq!(
                matches!(one.verdict, ListVerdict::Holds),
                matches!(four.verdict, ListVerdict::Holds),
                "{p} {r}"
            );
        }
    }

    #[test]
    fn list_parameters() {
        let p4 = FamilySpec::Path(4).build().unwrap();
        assert_eq!(
            compute_list_param(&p4, ParamTag::Rcl, &cfg())
                .unwrap()
                .value(),
            Some(3)
        );
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        assert_eq!(
            compute_list_param(&c4, ParamTag::Srcl, &cfg())
                .unwrap()
                .value(),
            Some(2)
        );
        let c9 = FamilySpec::CompSqCycle(9).build().unwrap();
        let r = compute_list_param(&c9, ParamTag::Chil, &cfg()).unwrap();
        assert_eq!(r.value(), Some(3));
        assert!(matches!(r.upper, UpperCert::Nullstellensatz { .. }));
        let k33 = FamilySpec::Kmn(3, 3).build().unwrap();
        // K_{3,3} is not 2-choosable.
        assert_eq!(
            compute_list_param(&k33, ParamTag::Chil, &cfg())
                .unwrap()
                .value(),
            Some(3)
        );
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        assert_eq!(
            compute_list_param(&c4, ParamTag::Chipl, &cfg())
                .unwrap()
                .value(),
            Some(2)
        );
    }

    #[test]
    fn adversarial_finds_known_bad_lists() {
        let g = FamilySpec::Lemma41 { b: 3, h: None }.build().unwrap();
        let bad =
            adversarial_bad_lists(&g, Property::StronglyRainbowConnected, 2, &cfg(), 1).unwrap();
        let l = bad.found.expect("bad lists");
        assert_eq!(l.r(), 2);
        let c5 = FamilySpec::Cycle(5).build().unwrap();
        let bad = adversarial_bad_lists(&c5, Property::RainbowConnected, 2, &cfg(), 1).unwrap();
        assert!(!brute_force(
            &c5,
            &bad.found.unwrap(),
            Property::RainbowConnected
        ));
        let k4 = FamilySpec::Complete(4).build().unwrap();
        let small = SearchConfig::with_budget(20_000);
        assert_eq!(
            adversarial_bad_lists(&k4, Property::RainbowConnected, 1, &small, 1)
                .unwrap()
                .found,
            None
        );
    }

    #[test]
    fn sampling() {
        let w5 = FamilySpec::Wheel(5).build().unwrap();
        let (o, _) =
            sampled_forall(&w5, Property::StronglyRainbowConnected, 2, 200, 7, &cfg()).unwrap();
        assert_eq!(o, SampledOutcome::Pass { samples: 200 });
        let c5 = FamilySpec::Cycle(5).build().unwrap();
        let (o, _) = sampled_forall(&c5, Property::RainbowConnected, 2, 5000, 7, &cfg()).unwrap();
        if let SampledOutcome::Fail(l) = o {
            assert!(!brute_force(&c5, &l, Property::RainbowConnected));
        }
    }

    fn arb_case() -> impl Strategy<Value = (Graph, ListAssignment, Property)> {
        let graphs = prop_oneof![
            Just(FamilySpec::Cycle(5)),
            Just(FamilySpec::Cycle(6)),
            Just(FamilySpec::Kmn(2, 3)),
            Just(FamilySpec::Wheel(4)),
            Just(FamilySpec::Gpq(2, 1)),
        ];
        let props = prop_oneof![
            Just(Property::RainbowConnected),
            Just(Property::StronglyRainbowConnected),
            Just(Property::ProperEdge),
            Just(Property::ProperVertex),
        ];
        (graphs, props, 1usize..=3, 2usize..=6, any::<u64>()).prop_map(
            |(spec, p, r, extra, seed)| {
                let g = spec.build().unwrap();
                let items = p.item_count(&g);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let l = random_lists_with(&mut rng, mode_of(p), items, r, r + extra);
                (g, l, p)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]

        #[test]
        fn existence_matches_brute_force((g, l, p) in arb_case()) {
            let got = exists_list_colouring(&g, &l, p, &cfg()).unwrap().outcome;
            prop_assert_eq!(matches!(got, ColouringOutcome::Witness(_)), brute_force(&g, &l, p));
        }

        #[test]
        fn supersets_keep_witnesses((g, l, p) in arb_case(), extra in 0u32..5) {
            let found = matches!(exists_list_colouring(&g, &l, p, &cfg()).unwrap().outcome, ColouringOutcome::Witness(_));
            let bigger = ListAssignment::new(
                l.mode(),
                l.lists().iter().enumerate().map(|(i, x)| {
                    let mut y = x.clone();
                    if i % 2 == 0 { y.push(100 + extra); }
                    y
                }).collect(),
            );
            prop_assert!(l.is_pointwise_subset(&bigger));
            let found2 = matches!(exists_list_colouring(&g, &bigger, p, &cfg()).unwrap().outcome, ColouringOutcome::Witness(_));
            prop_assert!(!found || found2);
        }
    }
}
