//! Budgeted backtracking isomorphism, automorphism and subgraph search.

use crate::graph::{Graph, VertexId, INFINITY};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `map[v]` is the image of vertex `v` of the first graph.
    Isomorphic(Vec<VertexId>),
    NotIsomorphic,
    Exceeded,
}

/// Per-vertex invariant: degree, sorted neighbour degrees, distance histogram.
fn invariants(g: &Graph) -> Vec<Vec<usize>> {
    let dm = g.distance_matrix();
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbours(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            let mut hist = vec![0usize; g.n() + 1];
            for &d in dm.row(v) {
                hist[if d == INFINITY { g.n() } else { d }] += 1;
            }
            let mut inv = vec![g.degree(v)];
            inv.extend(nd);
            inv.push(usize::MAX);
            inv.extend(hist);
            inv
        })
        .collect()
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Search order: BFS from the vertex with the rarest invariant, so each
/// vertex after the first in its component has a mapped neighbour.
fn search_order(g: &Graph, inv: &[Vec<usize>]) -> Vec<VertexId> {
    let n = g.n();
    let rarity = |v: VertexId| inv.iter().filter(|w| **w == inv[v]).count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (rarity(v), v))
            .expect("unplaced");
        placed[start] = true;
        let mut i = order.len();
        order.push(start);
        while i < order.len() {
            let x = order[i];
            i += 1;
            for y in g.neighbours(x) {
                if !placed[y] {
                    placed[y] = true;
                    order.push(y);
                }
            }
        }
    }
    order
}

struct Matcher<'a> {
    order: Vec<VertexId>,
    cands: Vec<Vec<VertexId>>,
    ag: Vec<Vec<bool>>,
    ah: Vec<Vec<bool>>,
    /// Induced match (isomorphism) or edge-preserving only (subgraph).
    induced: bool,
    map: Vec<VertexId>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
    _g: &'a Graph,
}

enum Step {
    Continue,
    Stop,
    Exceeded,
}

impl Matcher<'_> {
    fn run(&mut self, depth: usize, on_found: &mut dyn FnMut(&[VertexId]) -> bool) -> Step {
        if depth == self.order.len() {
            return if on_found(&self.map) {
                Step::Stop
            } else {
                Step::Continue
            };
        }
        let x = self.order[depth];
        for i in 0..self.cands[x].len() {
            let y = self.cands[x][i];
            if self.used[y] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::Exceeded;
            }
            let ok = self.order[..depth].iter().all(|&w| {
                let (eg, eh) = (self.ag[x][w], self.ah[y][self.map[w]]);
                if self.induced {
                    eg == eh
                } else {
                    !eg || eh
                }
            });
            if !ok {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            let r = self.run(depth + 1, on_found);
            self.used[y] = false;
            match r {
                Step::Continue => {}
                other => return other,
            }
        }
        Step::Continue
    }
}

fn iso_matcher<'a>(g: &'a Graph, h: &Graph, budget: u64) -> Option<Matcher<'a>> {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let (ig, ih) = (invariants(g), invariants(h));
    let (mut sg, mut sh) = (ig.clone(), ih.clone());
    sg.sort();
    sh.sort();
    if sg != sh {
        return None;
    }
    let cands = (0..g.n())
        .map(|v| (0..h.n()).filter(|&w| ih[w] == ig[v]).collect())
        .collect();
    Some(Matcher {
        order: search_order(g, &ig),
        cands,
        ag: adjacency(g),
        ah: adjacency(h),
        induced: true,
        map: vec![usize::MAX; g.n()],
        used: vec![false; h.n()],
        nodes: 0,
        budget,
        _g: g,
    })
}

/// Sound and complete within `budget` search nodes.
pub fn is_isomorphic(g: &Graph, h: &Graph, budget: u64) -> IsoOutcome {
    let Some(mut m) = iso_matcher(g, h, budget) else {
        return IsoOutcome::NotIsomorphic;
    };
    let mut found = None;
    match m.run(0, &mut |map| {
        found = Some(map.to_vec());
        true
    }) {
        Step::Exceeded => IsoOutcome::Exceeded,
        _ => found.map_or(IsoOutcome::NotIsomorphic, IsoOutcome::Isomorphic),
    }
}

/// Boolean isomorphism test with a generous budget.
///
/// Panics if the budget is exhausted, which does not happen at the graph
/// sizes this crate builds.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    match is_isomorphic(g, h, 1_000_000_000) {
        IsoOutcome::Isomorphic(_) => true,
        IsoOutcome::NotIsomorphic => false,
        IsoOutcome::Exceeded => panic!("isomorphism budget exhausted"),
    }
}

/// All automorphisms (including the identity), or `None` if the budget runs out.
pub fn automorphisms(g: &Graph, budget: u64) -> Option<Vec<Vec<VertexId>>> {
    let mut m = iso_matcher(g, g, budget).expect("a graph matches itself");
    let mut all = Vec::new();
    match m.run(0, &mut |map| {
        all.push(map.to_vec());
        false
    }) {
        Step::Exceeded => None,
        _ => Some(all),
    }
}

/// An injective map of `small` into `big` sending edges to edges.
pub fn find_subgraph_embedding(small: &Graph, big: &Graph, budget: u64) -> IsoOutcome {
    if small.n() > big.n() || small.m() > big.m() {
        return IsoOutcome::NotIsomorphic;
    }
    let inv = invariants(small);
    let cands = (0..small.n())
        .map(|v| {
            (0..big.n())
                .filter(|&w| big.degree(w) >= small.degree(v))
                .collect()
        })
        .collect();
    let mut m = Matcher {
        order: search_order(small, &inv),
        cands,
        ag: adjacency(small),
        ah: adjacency(big),
        induced: false,
        map: vec![usize::MAX; small.n()],
        used: vec![false; big.n()],
        nodes: 0,
        budget,
        _g: small,
    };
    let mut found = None;
    match m.run(0, &mut |map| {
        found = Some(map.to_vec());
        true
    }) {
        Step::Exceeded => IsoOutcome::Exceeded,
        _ => found.map_or(IsoOutcome::NotIsomorphic, IsoOutcome::Isomorphic),
    }
}

/// Edge permutation induced by a vertex automorphism.
pub fn edge_permutation(g: &Graph, sigma: &[VertexId]) -> Vec<usize> {
    g.edges()
        .iter()
        .map(|&(a, b)| {
            g.edge_id(sigma[a], sigma[b])
                .expect("automorphism preserves edges")
        })
        .collect()
}
