//! Rainbow and properness verdicts on a fixed colouring.
//!
//! Reachability is a layered search over `(vertex, used colours)` states.
//! A rainbow walk has pairwise distinct edges, and cutting out a closed
//! sub-walk keeps the colours distinct, so walk reachability equals path
//! reachability. A state is dropped when the same vertex was already reached
//! with a subset of its colours.

use crate::colour::{Colour, ColourList, ColourSet, EdgeColouring, Property, UsedColours};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, INFINITY};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// No (strongly) rainbow path between `u < v`.
    Pair(VertexId, VertexId),
    /// Edges `e < f` share an endpoint and a colour.
    IncidentEdges(usize, usize),
    /// Adjacent vertices `u < v` share a colour.
    AdjacentVertices(VertexId, VertexId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Violation(Violation),
}

impl Verdict {
    pub fn is_ok(self) -> bool {
        self == Verdict::Ok
    }
}

/// Colours relabelled densely so the narrow state type can be used when possible.
struct Dense {
    colours: Vec<Colour>,
    palette: usize,
}

fn densify(c: &EdgeColouring) -> Dense {
    let mut sorted = c.colours().to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let colours = c
        .colours()
        .iter()
        .map(|x| sorted.binary_search(x).expect("present") as Colour)
        .collect();
    Dense {
        colours,
        palette: sorted.len(),
    }
}

fn check_len(g: &Graph, c: &EdgeColouring, p: Property) -> Result<()> {
    let expected = p.item_count(g);
    if c.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            got: c.len(),
        });
    }
    Ok(())
}

/// For each vertex, whether it is reachable from `u` by a rainbow path
/// (geodesic when `dist_from_u` is given). Stops once every vertex in
/// `targets` is reached.
fn reach_from<S: UsedColours>(
    g: &Graph,
    colours: &[Colour],
    u: VertexId,
    dist_from_u: Option<&[usize]>,
    targets: &[VertexId],
) -> Vec<bool> {
    let n = g.n();
    let mut reached = vec![false; n];
    reached[u] = true;
    let mut pending = targets.iter().filter(|&&t| t != u).count();
    let mut is_target = vec![false; n];
    for &t in targets {
        is_target[t] = true;
    }
    let mut seen: Vec<Vec<S>> = vec![Vec::new(); n];
    seen[u].push(S::empty());
    let mut frontier = vec![(u, S::empty())];
    while !frontier.is_empty() && pending > 0 {
        let mut next = Vec::new();
        for (x, used) in &frontier {
            for &(y, e) in g.incident(*x) {
                if y == u {
                    continue;
                }
                if let Some(d) = dist_from_u {
                    if d[y] != d[*x] + 1 {
                        continue;
                    }
                }
                let col = colours[e];
                if used.contains(col) {
                    continue;
                }
                let s = used.with(col);
                if seen[y].iter().any(|t| t.is_subset(&s)) {
                    continue;
                }
                seen[y].push(s.clone());
                if !reached[y] {
                    reached[y] = true;
                    if is_target[y] {
                        pending -= 1;
                    }
                }
                next.push((y, s));
            }
        }
        frontier = next;
    }
    reached
}

fn reach_dense(
    g: &Graph,
    d: &Dense,
    u: VertexId,
    dist_from_u: Option<&[usize]>,
    targets: &[VertexId],
) -> Vec<bool> {
    if d.palette <= ColourSet::CAPACITY {
        reach_from::<ColourSet>(g, &d.colours, u, dist_from_u, targets)
    } else {
        reach_from::<ColourList>(g, &d.colours, u, dist_from_u, targets)
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// True iff a rainbow `u`–`v` path exists.
pub fn rainbow_reachable(g: &Graph, c: &EdgeColouring, u: VertexId, v: VertexId) -> Result<bool> {
    check_len(g, c, Property::RainbowConnected)?;
    require_connected(g)?;
    if u == v {
        return Ok(true);
    }
    let d = densify(c);
    Ok(reach_dense(g, &d, u, None, &[v])[v])
}

/// True iff some shortest `u`–`v` path is rainbow.
pub fn strong_rainbow_reachable(
    g: &Graph,
    c: &EdgeColouring,
    u: VertexId,
    v: VertexId,
) -> Result<bool> {
    check_len(g, c, Property::StronglyRainbowConnected)?;
    require_connected(g)?;
    if u == v {
        return Ok(true);
    }
    let d = densify(c);
    let dist = g.bfs(u);
    Ok(reach_dense(g, &d, u, Some(&dist), &[v])[v])
}

/// Checks `p` and reports the lexicographically least violation.
pub fn check_property(g: &Graph, c: &EdgeColouring, p: Property) -> Result<Verdict> {
    check_len(g, c, p)?;
    match p {
        Property::ProperEdge => {
            let mut best: Option<(usize, usize)> = None;
            for v in 0..g.n() {
                let inc = g.incident(v);
                for i in 0..inc.len() {
                    for j in i + 1..inc.len() {
                        let (e, f) = (inc[i].1.min(inc[j].1), inc[i].1.max(inc[j].1));
                        if c.get(e) == c.get(f) && best.is_none_or(|b| (e, f) < b) {
                            best = Some((e, f));
                        }
                    }
                }
            }
            Ok(best.map_or(Verdict::Ok, |(e, f)| {
                Verdict::Violation(Violation::IncidentEdges(e, f))
            }))
        }
        Property::ProperVertex => {
            let mut edges = g.edges().to_vec();
            edges.sort_unstable();
            Ok(edges
                .into_iter()
                .find(|&(a, b)| c.get(a) == c.get(b))
                .map_or(Verdict::Ok, |(a, b)| {
                    Verdict::Violation(Violation::AdjacentVertices(a, b))
                }))
        }
        Property::RainbowConnected | Property::StronglyRainbowConnected => {
            require_connected(g)?;
            let strong = p == Property::StronglyRainbowConnected;
            let d = densify(c);
            for u in 0..g.n() {
                let targets: Vec<VertexId> = (u + 1..g.n()).collect();
                if targets.is_empty() {
                    break;
                }
                let dist = if strong { Some(g.bfs(u)) } else { None };
                let reached = reach_dense(g, &d, u, dist.as_deref(), &targets);
                if let Some(&v) = targets.iter().find(|&&v| !reached[v]) {
                    return Ok(Verdict::Violation(Violation::Pair(u, v)));
                }
            }
            Ok(Verdict::Ok)
        }
    }
}

/// Convenience wrapper: `true` iff the property holds.
pub fn satisfies(g: &Graph, c: &EdgeColouring, p: Property) -> Result<bool> {
    Ok(check_property(g, c, p)?.is_ok())
}

/// Hop distance or [`INFINITY`]; re-exported for callers that only hold a colouring.
pub fn hop_distance(g: &Graph, u: VertexId, v: VertexId) -> usize {
    if u == v {
        0
    } else {
        g.bfs(u).get(v).copied().unwrap_or(INFINITY)
    }
}
