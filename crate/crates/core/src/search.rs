//! Backtracking search for colourings satisfying a property.
//!
//! Items (edges, or vertices for proper vertex colouring) are coloured in a
//! fixed order. For rainbow properties every non-adjacent pair is tracked:
//!
//! * a pair is *satisfied* once a (geodesic) rainbow path made only of
//!   coloured edges exists; this never changes deeper in the tree;
//! * a pair is *possible* if some path of length at most `max_len` has
//!   pairwise distinct colours on its coloured edges; uncoloured edges act
//!   as fresh colours. An impossible pair prunes the subtree.
//!
//! Only the pairs an item is relevant to are rechecked after colouring it.
//! Once every pair is satisfied the remaining items take their least colour.
//!
//! Items may be left out of the search (`domain = None`). They are either
//! wildcards (uncoloured forever, used for relaxations) or absent (never
//! usable by a path).

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::colour::{Colour, EdgeColouring, Property};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, INFINITY};

const NONE: u16 = u16::MAX;

/// Largest colour id (exclusive) the search can track.
pub const MAX_COLOURS: usize = 1024;

/// Fixed-width colour bitset used as path state.
trait Bits: Copy + Eq + Send + Sync + 'static {
    const ZERO: Self;
    fn has(&self, c: u16) -> bool;
    fn with(&self, c: u16) -> Self;
    fn subset_of(&self, o: &Self) -> bool;
}

impl Bits for u64 {
    const ZERO: Self = 0;
    #[inline]
    fn has(&self, c: u16) -> bool {
        self >> c & 1 == 1
    }
    #[inline]
    fn with(&self, c: u16) -> Self {
        self | 1u64 << c
    }
    #[inline]
    fn subset_of(&self, o: &Self) -> bool {
        self & !o == 0
    }
}

impl<const W: usize> Bits for [u64; W] {
    const ZERO: Self = [0; W];
    #[inline]
    fn has(&self, c: u16) -> bool {
        self[(c >> 6) as usize] >> (c & 63) & 1 == 1
    }
    #[inline]
    fn with(&self, c: u16) -> Self {
        let mut x = *self;
        x[(c >> 6) as usize] |= 1u64 << (c & 63);
        x
    }
    #[inline]
    fn subset_of(&self, o: &Self) -> bool {
        self.iter().zip(o).all(|(a, b)| a & !b == 0)
    }
}

/// Largest palette the exact search accepts.
pub const MAX_PALETTE: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of search nodes (colour assignments tried).
    pub budget: u64,
    pub jobs: usize,
    /// Lexicographic-leader pruning under graph automorphisms.
    pub orbit_pruning: bool,
    /// Seed for randomised helpers such as the adversarial list search.
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 100_000_000,
            jobs: 1,
            orbit_pruning: false,
            seed: 0,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: u64) -> Self {
        SearchConfig {
            budget,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Colour per item; `None` for items outside the search.
    Found(Vec<Option<Colour>>),
    Exhausted,
    Exceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unassigned {
    Wildcard,
    Absent,
}

/// Graph-dependent data shared by many searches.
pub struct Prepared<'g> {
    g: &'g Graph,
    prop: Property,
    items: usize,
    n: usize,
    dist: Vec<usize>,
    max_len: usize,
    pairs: Vec<(VertexId, VertexId)>,
    /// Per item, indices of pairs whose status it can change.
    relevant: Vec<Vec<u32>>,
    conflicts: Vec<Vec<u32>>,
    order: Vec<usize>,
    /// Some pair is farther apart than `max_len`.
    infeasible: bool,
}

impl<'g> Prepared<'g> {
    /// `max_len` bounds the length of a rainbow path (palette size, or
    /// `n - 1` when colours are unconstrained).
    pub fn new(g: &'g Graph, prop: Property, max_len: usize) -> Result<Self> {
        let n = g.n();
        let items = prop.item_count(g);
        let mut p = Prepared {
            g,
            prop,
            items,
            n,
            dist: Vec::new(),
            max_len,
            pairs: Vec::new(),
            relevant: vec![Vec::new(); items],
            conflicts: vec![Vec::new(); items],
            order: Vec::new(),
            infeasible: false,
        };
        if prop.is_rainbow() {
            if !g.is_connected() {
                return Err(Error::Disconnected);
            }
            p.dist = (0..n).flat_map(|s| g.bfs(s)).collect();
            let strong = prop == Property::StronglyRainbowConnected;
            for u in 0..n {
                for v in u + 1..n {
                    if g.adjacent(u, v) {
                        continue;
                    }
                    let duv = p.d(u, v);
                    if duv > max_len {
                        p.infeasible = true;
                    }
                    let id = p.pairs.len() as u32;
                    p.pairs.push((u, v));
                    for (e, &(a, b)) in g.edges().iter().enumerate() {
                        let via = (p.d(u, a) + 1 + p.d(b, v)).min(p.d(u, b) + 1 + p.d(a, v));
                        let rel = if strong { via == duv } else { via <= max_len };
                        if rel {
                            p.relevant[e].push(id);
                        }
                    }
                }
            }
            p.order = betweenness_order(g, &p);
        } else {
            if prop == Property::ProperEdge {
                for v in 0..n {
                    let inc = g.incident(v);
                    for &(_, e) in inc {
                        for &(_, f) in inc {
                            if e != f {
                                p.conflicts[e].push(f as u32);
                            }
                        }
                    }
                }
            } else {
                for v in 0..n {
                    p.conflicts[v] = g.neighbours(v).map(|w| w as u32).collect();
                }
            }
            p.order = conflict_order(&p.conflicts);
        }
        Ok(p)
    }

    #[inline]
    fn d(&self, a: VertexId, b: VertexId) -> usize {
        self.dist[a * self.n + b]
    }

    pub fn items(&self) -> usize {
        self.items
    }

    pub fn property(&self) -> Property {
        self.prop
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Non-adjacent vertex pairs tracked by the rainbow search.
    pub fn pairs(&self) -> &[(VertexId, VertexId)] {
        &self.pairs
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Edges sorted by the number of pairs they lie on a geodesic for, descending.
fn betweenness_order(g: &Graph, p: &Prepared) -> Vec<usize> {
    let mut score = vec![0usize; g.m()];
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let duv = p.d(u, v);
            if duv == INFINITY {
                continue;
            }
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                if (p.d(u, a) + 1 + p.d(b, v)).min(p.d(u, b) + 1 + p.d(a, v)) == duv {
                    score[e] += 1;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(score[e]), e));
    order
}

/// BFS over the conflict graph, each component started at its highest degree item.
fn conflict_order(conflicts: &[Vec<u32>]) -> Vec<usize> {
    let k = conflicts.len();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let s = (0..k)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| (conflicts[i].len(), std::cmp::Reverse(i)))
            .expect("unplaced");
        placed[s] = true;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            let x = order[i];
            i += 1;
            let mut nb: Vec<usize> = conflicts[x]
                .iter()
                .map(|&y| y as usize)
                .filter(|&y| !placed[y])
                .collect();
            nb.sort_by_key(|&y| (std::cmp::Reverse(conflicts[y].len()), y));
            nb.dedup();
            for y in nb {
                if !placed[y] {
                    placed[y] = true;
                    order.push(y);
                }
            }
        }
    }
    order
}

/// A search request over a prepared graph.
pub struct Problem<'a, 'g> {
    pub prepared: &'a Prepared<'g>,
    /// Allowed colours per item, sorted and below [`MAX_COLOURS`]; `None`
    /// leaves the item out of the search.
    pub domains: Vec<Option<Vec<Colour>>>,
    /// `Some(r)` when every domain is `0..r`: enables colour-canonical symmetry breaking.
    pub palette: Option<usize>,
    pub unassigned: Unassigned,
    /// Item permutations from graph automorphisms, for orbit pruning.
    pub item_perms: Option<&'a [Vec<usize>]>,
}

struct Shared {
    found: AtomicBool,
    exceeded: AtomicBool,
    nodes: AtomicU64,
    budget: u64,
}

#[derive(PartialEq, Eq)]
enum Step {
    Found,
    Exhausted,
    Abort,
}

struct Scratch<B> {
    sets: Vec<Vec<B>>,
    touched: Vec<usize>,
    frontier: Vec<(usize, B)>,
    next: Vec<(usize, B)>,
}

struct Worker<'w, 'a, 'g, B> {
    pb: &'w Problem<'a, 'g>,
    order: Vec<usize>,
    pos_of: Vec<usize>,
    col: Vec<u16>,
    absent: Vec<bool>,
    sat: Vec<bool>,
    unsat: usize,
    sat_stack: Vec<u32>,
    maxc: Vec<i16>,
    scratch: Scratch<B>,
    shared: &'w Shared,
    local_nodes: u64,
    witness: Option<Vec<Option<Colour>>>,
    /// Collect prefixes at this depth instead of searching deeper.
    split_at: Option<usize>,
    prefixes: Vec<Vec<u16>>,
}

impl<'w, 'a, 'g, B: Bits> Worker<'w, 'a, 'g, B> {
    fn new(pb: &'w Problem<'a, 'g>, shared: &'w Shared) -> Self {
        let prep = pb.prepared;
        let order: Vec<usize> = prep
            .order
            .iter()
            .copied()
            .filter(|&i| pb.domains[i].is_some())
            .collect();
        let mut pos_of = vec![usize::MAX; prep.items];
        for (p, &i) in order.iter().enumerate() {
            pos_of[i] = p;
        }
        let absent = (0..prep.items)
            .map(|i| pb.domains[i].is_none() && pb.unassigned == Unassigned::Absent)
            .collect();
        let npairs = prep.pairs.len();
        let depth = order.len();
        Worker {
            pb,
            order,
            pos_of,
            col: vec![NONE; prep.items],
            absent,
            sat: vec![false; npairs],
            unsat: npairs,
            sat_stack: Vec::new(),
            maxc: vec![-1; depth + 1],
            scratch: Scratch {
                sets: vec![Vec::new(); prep.n],
                touched: Vec::new(),
                frontier: Vec::new(),
                next: Vec::new(),
            },
            shared,
            local_nodes: 0,
            witness: None,
            split_at: None,
            prefixes: Vec::new(),
        }
    }

    fn is_rainbow(&self) -> bool {
        self.pb.prepared.prop.is_rainbow()
    }

    /// Initial pass: strict satisfaction and possibility of every pair.
    fn init(&mut self) -> bool {
        if !self.is_rainbow() {
            return true;
        }
        if self.pb.prepared.infeasible {
            return false;
        }
        for id in 0..self.pb.prepared.pairs.len() {
            if !self.check_pair(id) {
                return false;
            }
        }
        true
    }

    /// Updates the cached status of a pair; false if it became impossible.
    fn check_pair(&mut self, id: usize) -> bool {
        if self.sat[id] {
            return true;
        }
        let (u, v) = self.pb.prepared.pairs[id];
        if self.pair_dp(u, v, true) {
            self.sat[id] = true;
            self.unsat -= 1;
            self.sat_stack.push(id as u32);
            return true;
        }
        self.pair_dp(u, v, false)
    }

    fn pair_dp(&mut self, u: VertexId, v: VertexId, strict: bool) -> bool {
        let prep = self.pb.prepared;
        let strong = prep.prop == Property::StronglyRainbowConnected;
        let duv = prep.d(u, v);
        let max_len = prep.max_len;
        let sc = &mut self.scratch;
        for &t in &sc.touched {
            sc.sets[t].clear();
        }
        sc.touched.clear();
        sc.frontier.clear();
        sc.frontier.push((u, B::ZERO));
        sc.sets[u].push(B::ZERO);
        sc.touched.push(u);
        let mut layer = 0;
        let mut hit = false;
        'outer: while !sc.frontier.is_empty() {
            sc.next.clear();
            for fi in 0..sc.frontier.len() {
                let (x, s) = sc.frontier[fi];
                for &(y, e) in prep.g.incident(x) {
                    if y == u || self.absent[e] {
                        continue;
                    }
                    if strong {
                        if prep.d(u, y) != layer + 1 || prep.d(y, v) + layer + 1 != duv {
                            continue;
                        }
                    } else if layer + 1 + prep.d(y, v) > max_len {
                        continue;
                    }
                    let c = self.col[e];
                    let s2 = if c == NONE {
                        if strict {
                            continue;
                        }
                        s
                    } else {
                        if s.has(c) {
                            continue;
                        }
                        s.with(c)
                    };
                    if y == v {
                        hit = true;
                        break 'outer;
                    }
                    let set = &mut sc.sets[y];
                    if set.iter().any(|t| t.subset_of(&s2)) {
                        continue;
                    }
                    if set.is_empty() {
                        sc.touched.push(y);
                    }
                    set.push(s2);
                    sc.next.push((y, s2));
                }
            }
            std::mem::swap(&mut sc.frontier, &mut sc.next);
            layer += 1;
        }
        hit
    }

    /// Colours the item at `depth` with `c`. Returns the undo mark, or
    /// `None` (with state restored) if the assignment is inconsistent.
    fn try_assign(&mut self, depth: usize, c: u16) -> Option<usize> {
        let item = self.order[depth];
        let prep = self.pb.prepared;
        if !self.is_rainbow() {
            if prep.conflicts[item]
                .iter()
                .any(|&j| self.col[j as usize] == c)
            {
                return None;
            }
            self.col[item] = c;
            self.maxc[depth + 1] = self.maxc[depth].max(c as i16);
            return Some(self.sat_stack.len());
        }
        let mark = self.sat_stack.len();
        self.col[item] = c;
        self.maxc[depth + 1] = self.maxc[depth].max(c as i16);
        for k in 0..prep.relevant[item].len() {
            let id = prep.relevant[item][k] as usize;
            if !self.check_pair(id) {
                self.undo(depth, mark);
                return None;
            }
        }
        Some(mark)
    }

    fn undo(&mut self, depth: usize, mark: usize) {
        self.col[self.order[depth]] = NONE;
        while self.sat_stack.len() > mark {
            let id = self.sat_stack.pop().expect("mark within stack") as usize;
            self.sat[id] = false;
            self.unsat += 1;
        }
    }

    /// Lexicographic-leader test on the assigned prefix `0..=depth`.
    fn lex_ok(&self, depth: usize) -> bool {
        let Some(perms) = self.pb.item_perms else {
            return true;
        };
        let mut relabel = [NONE; MAX_PALETTE];
        for sigma in perms {
            relabel.fill(NONE);
            let mut next = 0u16;
            for j in 0..=depth {
                let t = sigma[self.order[j]];
                if self.pos_of[t] > depth {
                    break;
                }
                let v = self.col[t] as usize;
                if relabel[v] == NONE {
                    relabel[v] = next;
                    next += 1;
                }
                let (a, b) = (relabel[v], self.col[self.order[j]]);
                if a < b {
                    return false;
                }
                if a > b {
                    break;
                }
            }
        }
        true
    }

    fn count_node(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes & 255 == 0 {
            self.shared.nodes.fetch_add(256, Ordering::Relaxed);
        }
        let total = self.shared.nodes.load(Ordering::Relaxed) + (self.local_nodes & 255);
        if total > self.shared.budget {
            self.shared.exceeded.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn flush_nodes(&mut self) {
        self.shared
            .nodes
            .fetch_add(self.local_nodes & 255, Ordering::Relaxed);
        self.local_nodes = 0;
    }

    fn record_witness(&mut self, depth: usize) {
        for p in depth..self.order.len() {
            let item = self.order[p];
            self.col[item] = self.pb.domains[item]
                .as_ref()
                .expect("ordered items have domains")[0] as u16;
        }
        self.witness = Some(
            self.col
                .iter()
                .map(|&c| (c != NONE).then_some(c as Colour))
                .collect(),
        );
        for p in depth..self.order.len() {
            self.col[self.order[p]] = NONE;
        }
    }

    fn dfs(&mut self, depth: usize) -> Step {
        if self.is_rainbow() && self.unsat == 0 {
            self.record_witness(depth);
            return Step::Found;
        }
        if Some(depth) == self.split_at {
            self.prefixes
                .push(self.order[..depth].iter().map(|&i| self.col[i]).collect());
            return Step::Exhausted;
        }
        if depth == self.order.len() {
            if self.is_rainbow() && self.pb.unassigned == Unassigned::Absent {
                return Step::Exhausted;
            }
            self.record_witness(depth);
            return Step::Found;
        }
        let item = self.order[depth];
        let pb = self.pb;
        let allowed = pb.domains[item]
            .as_deref()
            .expect("ordered items have domains");
        let limit = match pb.palette {
            Some(r) => (self.maxc[depth] + 1).min(r as i16 - 1) as Colour,
            None => Colour::MAX,
        };
        for &c in allowed {
            if c > limit {
                break;
            }
            if self.shared.found.load(Ordering::Relaxed) {
                return Step::Abort;
            }
            if !self.count_node() {
                return Step::Abort;
            }
            let Some(mark) = self.try_assign(depth, c as u16) else {
                continue;
            };
            let step = if self.lex_ok(depth) {
                self.dfs(depth + 1)
            } else {
                Step::Exhausted
            };
            self.undo(depth, mark);
            if step != Step::Exhausted {
                return step;
            }
        }
        Step::Exhausted
    }

    /// Replays a prefix collected by a splitting pass.
    fn replay(&mut self, prefix: &[u16]) -> bool {
        for (d, &c) in prefix.iter().enumerate() {
            if self.try_assign(d, c).is_none() {
                return false;
            }
        }
        true
    }
}

fn validate(pb: &Problem) -> Result<()> {
    let prep = pb.prepared;
    if pb.domains.len() != prep.items {
        return Err(Error::LengthMismatch {
            expected: prep.items,
            got: pb.domains.len(),
        });
    }
    if let Some(r) = pb.palette {
        if r == 0 || r > MAX_PALETTE {
            return Err(Error::Capacity {
                requested: r,
                capacity: MAX_PALETTE,
            });
        }
    } else if pb.item_perms.is_some() {
        return Err(Error::Precondition(
            "orbit pruning requires a uniform palette".into(),
        ));
    }
    let mut top = 0usize;
    for (item, d) in pb.domains.iter().enumerate() {
        if let Some(d) = d {
            if d.is_empty() {
                return Err(Error::ListTooSmall {
                    item,
                    size: 0,
                    required: 1,
                });
            }
            if d.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Precondition(format!(
                    "domain of item {item} is not sorted"
                )));
            }
            top = top.max(*d.last().expect("nonempty") as usize + 1);
        }
    }
    if top > MAX_COLOURS {
        return Err(Error::Capacity {
            requested: top,
            capacity: MAX_COLOURS,
        });
    }
    Ok(())
}

/// Runs the search.
pub fn search(pb: &Problem, cfg: &SearchConfig) -> Result<SearchResult> {
    validate(pb)?;
    let top = pb
        .domains
        .iter()
        .flatten()
        .map(|d| *d.last().expect("nonempty") as usize + 1)
        .max()
        .unwrap_or(0);
    if top <= 64 {
        search_with::<u64>(pb, cfg)
    } else if top <= 256 {
        search_with::<[u64; 4]>(pb, cfg)
    } else {
        search_with::<[u64; 16]>(pb, cfg)
    }
}

fn search_with<B: Bits>(pb: &Problem, cfg: &SearchConfig) -> Result<SearchResult> {
    let shared = Shared {
        found: AtomicBool::new(false),
        exceeded: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
        budget: cfg.budget,
    };
    let mut root = Worker::<B>::new(pb, &shared);
    if !root.init() {
        return Ok(SearchResult {
            outcome: SearchOutcome::Exhausted,
            nodes: 0,
        });
    }
    let order_len = root.order.len();
    let outcome = if cfg.jobs <= 1 || order_len < 4 {
        let step = root.dfs(0);
        root.flush_nodes();
        finish(step, root.witness.take(), &shared)
    } else {
        // Split into enough prefixes to keep the workers busy.
        let target = 8 * cfg.jobs;
        let mut depth = 1;
        let prefixes = loop {
            root.split_at = Some(depth);
            root.prefixes.clear();
            let step = root.dfs(0);
            root.flush_nodes();
            if step != Step::Exhausted {
                return Ok(SearchResult {
                    outcome: finish(step, root.witness.take(), &shared),
                    nodes: shared.nodes.load(Ordering::Relaxed),
                });
            }
            if root.prefixes.len() >= target || depth + 1 >= order_len || depth >= 12 {
                break std::mem::take(&mut root.prefixes);
            }
            depth += 1;
        };
        let witness = std::sync::Mutex::new(None);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        pool.install(|| {
            prefixes.par_iter().for_each(|prefix| {
                if shared.found.load(Ordering::Relaxed) || shared.exceeded.load(Ordering::Relaxed) {
                    return;
                }
                let mut w = Worker::<B>::new(pb, &shared);
                if !w.init() || !w.replay(prefix) {
                    return;
                }
                let step = w.dfs(prefix.len());
                w.flush_nodes();
                if step == Step::Found {
                    shared.found.store(true, Ordering::Relaxed);
                    let mut slot = witness.lock().expect("no poisoning");
                    if slot.is_none() {
                        *slot = w.witness.take();
                    }
                }
            })
        });
        let wit = witness.into_inner().expect("no poisoning");
        if wit.is_some() {
            SearchOutcome::Found(wit.expect("checked"))
        } else if shared.exceeded.load(Ordering::Relaxed) {
            SearchOutcome::Exceeded
        } else {
            SearchOutcome::Exhausted
        }
    };
    Ok(SearchResult {
        outcome,
        nodes: shared.nodes.load(Ordering::Relaxed),
    })
}

fn finish(step: Step, witness: Option<Vec<Option<Colour>>>, shared: &Shared) -> SearchOutcome {
    match step {
        Step::Found => SearchOutcome::Found(witness.expect("found implies witness")),
        Step::Exhausted => SearchOutcome::Exhausted,
        Step::Abort => {
            if shared.exceeded.load(Ordering::Relaxed) {
                SearchOutcome::Exceeded
            } else {
                SearchOutcome::Exhausted
            }
        }
    }
}

/// Turns a complete search witness into a colouring.
pub fn complete_witness(w: &[Option<Colour>]) -> EdgeColouring {
    EdgeColouring::new(w.iter().map(|c| c.unwrap_or(0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::rainbow::satisfies;

    fn run(g: &Graph, p: Property, r: usize, jobs: usize) -> SearchOutcome {
        let prep = Prepared::new(g, p, r.min(g.n() - 1)).unwrap();
        let pb = Problem {
            prepared: &prep,
            domains: vec![Some((0..r as Colour).collect()); p.item_count(g)],
            palette: Some(r),
            unassigned: Unassigned::Absent,
            item_perms: None,
        };
        search(
            &pb,
            &SearchConfig {
                jobs,
                ..Default::default()
            },
        )
        .unwrap()
        .outcome
    }

    #[test]
    fn cycles() {
        for n in 4..=8 {
            let g = FamilySpec::Cycle(n).build().unwrap();
            let k = n.div_ceil(2);
            for p in [
                Property::RainbowConnected,
                Property::StronglyRainbowConnected,
            ] {
                assert_eq!(run(&g, p, k - 1, 1), SearchOutcome::Exhausted, "n={n}");
                match run(&g, p, k, 1) {
                    SearchOutcome::Found(w) => {
                        assert!(satisfies(&g, &complete_witness(&w), p).unwrap())
                    }
                    other => panic!("n={n} {other:?}"),
                }
            }
        }
    }

    #[test]
    fn parallel_agrees() {
        let g = FamilySpec::Wheel(6).build().unwrap();
        for r in 1..=3 {
            let a = matches!(
                run(&g, Property::StronglyRainbowConnected, r, 1),
                SearchOutcome::Found(_)
            );
            let b = matches!(
                run(&g, Property::StronglyRainbowConnected, r, 4),
                SearchOutcome::Found(_)
            );
            assert_eq!(a, b);
        }
    }

    #[test]
    fn proper_colourings() {
        let k4 = FamilySpec::Complete(4).build().unwrap();
        assert_eq!(
            run(&k4, Property::ProperVertex, 3, 1),
            SearchOutcome::Exhausted
        );
        assert!(matches!(
            run(&k4, Property::ProperVertex, 4, 1),
            SearchOutcome::Found(_)
        ));
        let p = FamilySpec::Petersen.build().unwrap();
        assert_eq!(
            run(&p, Property::ProperEdge, 3, 1),
            SearchOutcome::Exhausted
        );
        assert!(matches!(
            run(&p, Property::ProperEdge, 4, 1),
            SearchOutcome::Found(_)
        ));
    }

    #[test]
    fn budget_is_respected() {
        let g = FamilySpec::Cycle(9).build().unwrap();
        let prep = Prepared::new(&g, Property::RainbowConnected, 4).unwrap();
        let pb = Problem {
            prepared: &prep,
            domains: vec![Some(vec![0, 1, 2, 3]); 9],
            palette: Some(4),
            unassigned: Unassigned::Absent,
            item_perms: None,
        };
        let r = search(&pb, &SearchConfig::with_budget(5)).unwrap();
        assert_eq!(r.outcome, SearchOutcome::Exceeded);
    }

    #[test]
    fn capacity_error() {
        let g = FamilySpec::Cycle(5).build().unwrap();
        let prep = Prepared::new(&g, Property::RainbowConnected, 4).unwrap();
        let pb = Problem {
            prepared: &prep,
            domains: vec![Some((0..33).collect()); 5],
            palette: Some(33),
            unassigned: Unassigned::Absent,
            item_perms: None,
        };
        assert!(matches!(
            search(&pb, &SearchConfig::default()),
            Err(Error::Capacity { .. })
        ));
    }
}
