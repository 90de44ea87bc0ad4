//! Simple undirected graphs with stable edge identifiers.

use std::collections::VecDeque;
use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Hop count used for unreachable pairs.
pub const INFINITY: usize = usize::MAX;

/// An immutable simple undirected graph.
///
/// Edges are stored once as `(u, v)` with `u < v`. Edge ids are assigned in
/// insertion order (after dropping duplicates) and never change.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    /// Per vertex: `(neighbour, edge id)` sorted by neighbour.
    incidence: Vec<Vec<(VertexId, EdgeId)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from vertex pairs, normalising orientation and dropping
    /// duplicate pairs.
    pub fn from_edges(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        let mut incidence: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { u: a, v: b, n });
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if incidence[u].iter().any(|&(w, _)| w == v) {
                continue;
            }
            let id = edges.len();
            edges.push((u, v));
            incidence[u].push((v, id));
            incidence[v].push((u, id));
        }
        for list in &mut incidence {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            incidence,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// `(neighbour, edge id)` pairs of `v`, sorted by neighbour.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.incidence[v]
    }

    pub fn neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incidence[v].iter().map(|&(w, _)| w)
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn edge_id(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        if a >= self.n || b >= self.n {
            return None;
        }
        self.incidence[a]
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|i| self.incidence[a][i].1)
    }

    #[inline]
    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_id(a, b).is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs(0).iter().all(|&d| d != INFINITY)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<VertexId> {
        (0..self.n)
            .filter(|&v| self.degree(v) + 1 == self.n)
            .collect()
    }

    /// BFS hop distances from `s`.
    pub fn bfs(&self, s: VertexId) -> Vec<usize> {
        let mut dist = vec![INFINITY; self.n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &self.incidence[x] {
                if dist[y] == INFINITY {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        DistanceMatrix {
            n: self.n,
            dist: (0..self.n).map(|s| self.bfs(s)).collect(),
        }
    }

    /// Diameter, or [`INFINITY`] for a disconnected graph.
    pub fn diameter(&self) -> usize {
        self.distance_matrix().diameter()
    }

    /// Connected components as vertex lists, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_without(None)
    }

    /// Components of the graph with `removed` deleted (if given).
    pub fn components_without(&self, removed: Option<VertexId>) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        if let Some(r) = removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &(y, _) in &self.incidence[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Bridges via DFS low-points, sorted by edge id.
    pub fn bridges(&self) -> Result<Vec<EdgeId>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let lp = self.low_points();
        let mut out: Vec<EdgeId> = (0..self.n)
            .filter_map(|v| {
                let pe = lp.parent_edge[v]?;
                (lp.low[v] > lp.disc[self.other_end(pe, v)]).then_some(pe)
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// A cut vertex maximising the number of components of `G - v`, with that
    /// count; ties go to the least vertex. `None` if there is no cut vertex.
    pub fn max_cut_components(&self) -> Result<Option<(VertexId, usize)>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let lp = self.low_points();
        let mut best: Option<(VertexId, usize)> = None;
        for v in 0..self.n {
            // Number of components of G - v from DFS children.
            let q = if lp.parent_edge[v].is_none() {
                lp.children[v].len()
            } else {
                1 + lp.children[v]
                    .iter()
                    .filter(|&&c| lp.low[c] >= lp.disc[v])
                    .count()
            };
            if q >= 2 && best.is_none_or(|(_, bq)| q > bq) {
                best = Some((v, q));
            }
        }
        Ok(best)
    }

    fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn low_points(&self) -> LowPoints {
        let n = self.n;
        let mut lp = LowPoints {
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            parent_edge: vec![None; n],
            children: vec![Vec::new(); n],
        };
        let mut time = 0;
        for root in 0..n {
            if lp.disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, next incidence index)
            let mut stack = vec![(root, 0usize)];
            lp.disc[root] = time;
            lp.low[root] = time;
            time += 1;
            while let Some(&mut (x, ref mut idx)) = stack.last_mut() {
                if *idx < self.incidence[x].len() {
                    let (y, e) = self.incidence[x][*idx];
                    *idx += 1;
                    if Some(e) == lp.parent_edge[x] {
                        continue;
                    }
                    if lp.disc[y] == usize::MAX {
                        lp.disc[y] = time;
                        lp.low[y] = time;
                        time += 1;
                        lp.parent_edge[y] = Some(e);
                        lp.children[x].push(y);
                        stack.push((y, 0));
                    } else {
                        lp.low[x] = lp.low[x].min(lp.disc[y]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _)) = stack.last() {
                        lp.low[p] = lp.low[p].min(lp.low[x]);
                    }
                }
            }
        }
        lp
    }

    /// Line graph: vertex `i` is edge `i` of `self`.
    pub fn line_graph(&self) -> Graph {
        let mut pairs = Vec::new();
        for v in 0..self.n {
            let inc = &self.incidence[v];
            for i in 0..inc.len() {
                for j in i + 1..inc.len() {
                    pairs.push((inc[i].1, inc[j].1));
                }
            }
        }
        pairs.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
        Graph::from_edges(self.m(), &pairs).expect("line graph pairs are valid")
    }

    pub fn complement(&self) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &pairs).expect("complement pairs are valid")
    }

    /// Copy of the graph with the given edges removed; remaining edge ids are
    /// renumbered in their original order.
    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let pairs: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edges(self.n, &pairs).expect("subset of valid edges")
    }

    /// Copy with one extra vertex joined to `nbrs`.
    pub fn with_vertex(&self, nbrs: &[VertexId]) -> Result<Graph> {
        let mut pairs = self.edges.clone();
        pairs.extend(nbrs.iter().map(|&w| (w, self.n)));
        Graph::from_edges(self.n + 1, &pairs)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Reads the plain-text format: `#` comments, a header `n m`, then `m`
    /// lines `u v` with 0-indexed vertices.
    pub fn read_text<R: BufRead>(reader: R) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::Io(e.to_string()))?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let nums: Vec<&str> = t.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("expected a non-negative integer, found {s:?}"),
                })
            };
            if nums.len() != 2 {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected two integers, found {} fields", nums.len()),
                });
            }
            let (a, b) = (parse(nums[0])?, parse(nums[1])?);
            if header.is_none() {
                header = Some((a, b));
            } else {
                pairs.push((a, b));
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing header".into(),
        })?;
        if n > crate::families::MAX_FAMILY_VERTICES {
            return Err(Error::Parse {
                line: 0,
                message: format!("{n} vertices is more than this tool handles"),
            });
        }
        if pairs.len() != m {
            return Err(Error::Parse {
                line: 0,
                message: format!("header declares {m} edges, found {}", pairs.len()),
            });
        }
        Graph::from_edges(n, &pairs)
    }

    /// Writes the plain-text format with edges sorted lexicographically.
    pub fn write_text<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        writeln!(w, "{} {}", self.n, edges.len())?;
        for (u, v) in edges {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }
}

struct LowPoints {
    disc: Vec<usize>,
    low: Vec<usize>,
    parent_edge: Vec<Option<EdgeId>>,
    children: Vec<Vec<VertexId>>,
}

/// All-pairs hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Vec<usize>>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> usize {
        self.dist[u][v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: VertexId) -> &[usize] {
        &self.dist[u]
    }

    pub fn diameter(&self) -> usize {
        self.dist
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }
}
