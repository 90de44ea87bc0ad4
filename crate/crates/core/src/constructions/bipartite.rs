use std::collections::HashSet;

use serde::Serialize;

use crate::colour::{Colour, EdgeColouring, Property};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::lists::ListAssignment;

use super::{least_colours, pick, require_lists};

/// Smallest `r` with `r^m >= n`.
pub fn ceil_root(n: usize, m: usize) -> usize {
    let mut r = 1usize;
    while r.checked_pow(m as u32).is_some_and(|p| p < n) {
        r += 1;
    }
    r
}

/// Column vectors of a colouring of `K_{m,n}`: `vectors[j][i] = c(u_i v_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VectorTable {
    pub u: Vec<VertexId>,
    pub v: Vec<VertexId>,
    pub vectors: Vec<Vec<Colour>>,
}

impl VectorTable {
    /// (i): all column vectors are distinct.
    pub fn distinct(&self) -> bool {
        let set: HashSet<&Vec<Colour>> = self.vectors.iter().collect();
        set.len() == self.vectors.len()
    }

    /// (ii): for `j < m`, entries `j+1..m` of vector `j` differ from entry `j`.
    pub fn separates_rows(&self) -> bool {
        let m = self.u.len();
        (0..m.min(self.v.len()))
            .all(|j| (j + 1..m).all(|i| self.vectors[j][i] != self.vectors[j][j]))
    }

    /// Full colouring: table entries on `U × V`, least list colour elsewhere.
    pub fn colouring(&self, g: &Graph, lists: &ListAssignment) -> EdgeColouring {
        let mut col = least_colours(lists);
        self.write(g, &mut col);
        EdgeColouring::new(col)
    }

    fn write(&self, g: &Graph, col: &mut [Colour]) {
        for (j, &vj) in self.v.iter().enumerate() {
            for (i, &ui) in self.u.iter().enumerate() {
                col[g.edge_id(ui, vj).expect("complete bipartite")] = self.vectors[j][i];
            }
        }
    }
}

/// Sides `(U, V)` of a complete bipartite graph, `|U| <= |V|`, each sorted.
pub fn bipartite_layout(g: &Graph) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    let not = || Error::Precondition("graph is not complete bipartite".into());
    if g.n() < 2 || !g.is_connected() {
        return Err(not());
    }
    let dist = g.bfs(0);
    let (a, b): (Vec<VertexId>, Vec<VertexId>) = (0..g.n()).partition(|&v| dist[v] % 2 == 0);
    if g.m() != a.len() * b.len() || g.edges().iter().any(|&(x, y)| dist[x] % 2 == dist[y] % 2) {
        return Err(not());
    }
    Ok(if a.len() <= b.len() { (a, b) } else { (b, a) })
}

/// Chooses column vectors in order: the first `|U|` satisfy (ii), all are distinct.
fn choose_vectors(
    g: &Graph,
    lists: &ListAssignment,
    u: &[VertexId],
    v: &[VertexId],
) -> Result<Vec<Vec<Colour>>> {
    let m = u.len();
    let mut chosen: Vec<Vec<Colour>> = Vec::with_capacity(v.len());
    let mut seen: HashSet<Vec<Colour>> = HashSet::new();
    for (j, &vj) in v.iter().enumerate() {
        let doms: Vec<&[Colour]> = u
            .iter()
            .map(|&ui| lists.list(g.edge_id(ui, vj).expect("edge")))
            .collect();
        let mut idx = vec![0usize; m];
        let found = loop {
            let cand: Vec<Colour> = (0..m).map(|i| doms[i][idx[i]]).collect();
            let ok_ii = j >= m || (j + 1..m).all(|i| cand[i] != cand[j]);
            if ok_ii && !seen.contains(&cand) {
                break Some(cand);
            }
            if !advance(&mut idx, &doms) {
                break None;
            }
        };
        let cand = found.ok_or_else(|| {
            Error::GuaranteeFailed(format!(
                "no admissible column vector for column {j} of K_{{{m},{}}}",
                v.len()
            ))
        })?;
        seen.insert(cand.clone());
        chosen.push(cand);
    }
    Ok(chosen)
}

/// Odometer step over the grid of `doms`, last coordinate fastest.
fn advance(idx: &mut [usize], doms: &[&[Colour]]) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < doms[i].len() {
            return true;
        }
        idx[i] = 0;
    }
    false
}

/// Sides of `K_{m,n}` with `2 <= m <= n`.
pub fn kmn_src_shape(g: &Graph) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    let (u, v) = bipartite_layout(g)?;
    if u.len() < 2 {
        return Err(Error::Precondition("need m >= 2 (stars are trees)".into()));
    }
    Ok((u, v))
}

/// Sides of `K_{m,n}` with `m >= 2` and `n > 3^m`.
pub fn kmn_rc4_shape(g: &Graph) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    let (u, v) = kmn_src_shape(g)?;
    let m = u.len();
    if 3usize.checked_pow(m as u32).map_or(true, |x| x >= v.len()) {
        return Err(Error::Precondition(format!(
            "need n > 3^{m}; use kmn-src for n <= 3^m"
        )));
    }
    Ok((u, v))
}

/// Strongly rainbow connected list colouring of `K_{m,n}`, `2 <= m <= n`,
/// from lists of size `ceil(n^(1/m))`.
pub fn kmn_src_colouring(g: &Graph, lists: &ListAssignment) -> Result<VectorTable> {
    let (u, v) = kmn_src_shape(g)?;
    require_lists(g, lists, ceil_root(v.len(), u.len()))?;
    let vectors = choose_vectors(g, lists, &u, &v)?;
    Ok(VectorTable { u, v, vectors })
}

/// Rainbow connected list colouring of `K_{m,n}` with `n > 3^m` from 4-lists.
///
/// The first `3^m` columns come from [`kmn_src_colouring`]; every later
/// column `j` has entries 1 and 2 distinct from each other and from
/// entries 1 and 2 of the first column.
pub fn kmn_rc4_colouring(g: &Graph, lists: &ListAssignment) -> Result<VectorTable> {
    let (u, v) = kmn_rc4_shape(g)?;
    let m = u.len();
    let big = 3usize.pow(m as u32);
    require_lists(g, lists, 4)?;
    let mut vectors = choose_vectors(g, lists, &u, &v[..big])?;
    let (a, b) = (vectors[0][0], vectors[0][1]);
    for &vj in &v[big..] {
        let l = |i: usize| lists.list(g.edge_id(u[i], vj).expect("edge"));
        let x = pick(l(0), &[a, b])?;
        let y = pick(l(1), &[a, b, x])?;
        let mut vec = vec![x, y];
        vec.extend((2..m).map(|i| l(i)[0]));
        vectors.push(vec);
    }
    Ok(VectorTable { u, v, vectors })
}

/// Splits class indices into `(A, B)` with `a = Σ A <= b = Σ B` and `b - a`
/// minimal; ties go to the lexicographically least `A`.
pub fn balanced_bipartition(sizes: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let t = sizes.len();
    let total: usize = sizes.iter().sum();
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    for mask in 1u64..(1u64 << t) - 1 {
        let side: Vec<usize> = (0..t).filter(|&i| mask >> i & 1 == 1).collect();
        let s: usize = side.iter().map(|&i| sizes[i]).sum();
        if 2 * s > total {
            continue;
        }
        let other: Vec<usize> = (0..t).filter(|&i| mask >> i & 1 == 0).collect();
        let gap = total - 2 * s;
        let better = match &best {
            None => true,
            Some((g, a, _)) => gap < *g || (gap == *g && side < *a),
        };
        if better {
            best = Some((gap, side, other));
        }
    }
    let (_, a, b) = best.expect("at least two classes");
    (a, b)
}

/// Classes of a complete multipartite graph, sorted by size then least vertex.
pub fn multipartite_classes(g: &Graph) -> Result<Vec<Vec<VertexId>>> {
    let comp = g.complement();
    let mut classes = comp.components();
    let pairs_inside: usize = classes.iter().map(|c| c.len() * (c.len() - 1) / 2).sum();
    let n = g.n();
    if classes.len() < 2 || g.m() + pairs_inside != n * (n - 1) / 2 {
        return Err(Error::Precondition(
            "graph is not complete multipartite".into(),
        ));
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_by_key(|c| (c.len(), c[0]));
    Ok(classes)
}

/// Which branch of the multipartite construction to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultipartiteCase {
    /// Strong rainbow connection from lists of size 2 (`m > n`) or `ceil(n^(1/m))`.
    Strong,
    /// Rainbow connection from 3-lists when `m <= n` and `n >= 2^m + 1`.
    Rc3,
}

struct Split {
    u: Vec<VertexId>,
    v: Vec<VertexId>,
    m: usize,
    n: usize,
}

fn split(g: &Graph) -> Result<(Vec<Vec<VertexId>>, Split)> {
    let classes = multipartite_classes(g)?;
    if classes.len() < 3 {
        return Err(Error::Precondition(
            "need at least 3 classes; use kmn-src for two".into(),
        ));
    }
    let (last, rest) = classes.split_last().expect("classes");
    let mut u: Vec<VertexId> = rest.iter().flatten().copied().collect();
    // u_1 and u_2 in different classes.
    let second = u
        .iter()
        .position(|&x| !rest[0].contains(&x))
        .expect("two classes in U");
    u.swap(1, second);
    let m = u.len();
    let n = last.len();
    Ok((
        classes.clone(),
        Split {
            u,
            v: last.clone(),
            m,
            n,
        },
    ))
}

pub(crate) fn required_size(g: &Graph, case: MultipartiteCase) -> Result<usize> {
    let (classes, s) = split(g)?;
    Ok(match case {
        _ if classes.last().expect("classes").len() == 1 => 1,
        MultipartiteCase::Strong if s.m > s.n => 2,
        MultipartiteCase::Strong => ceil_root(s.n, s.m),
        MultipartiteCase::Rc3 => 3,
    })
}

/// List colouring of a complete multipartite graph with at least 3 classes.
pub fn multipartite_colouring(
    g: &Graph,
    lists: &ListAssignment,
    case: MultipartiteCase,
) -> Result<(EdgeColouring, Property)> {
    let (classes, s) = split(g)?;
    let r = required_size(g, case)?;
    require_lists(g, lists, r).map_err(|e| match e {
        Error::ListTooSmall {
            item,
            size,
            required,
        } => Error::Precondition(format!(
            "{} case needs lists of size {required}; edge {item} has {size}",
            case_name(case, &s)
        )),
        other => other,
    })?;
    let mut col = least_colours(lists);
    if classes.last().expect("classes").len() == 1 {
        return Ok((EdgeColouring::new(col), Property::StronglyRainbowConnected));
    }
    match case {
        MultipartiteCase::Strong => {
            let (u, v) = if s.m > s.n {
                let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
                let (a, b) = balanced_bipartition(&sizes);
                let side = |idx: &[usize]| -> Vec<VertexId> {
                    let mut x: Vec<VertexId> = idx
                        .iter()
                        .flat_map(|&i| classes[i].iter().copied())
                        .collect();
                    x.sort_unstable();
                    x
                };
                let (u, v) = (side(&a), side(&b));
                if ceil_root(v.len(), u.len()) > 2 {
                    return Err(Error::GuaranteeFailed(format!(
                        "balanced bipartition {}+{} has b > 2^a",
                        u.len(),
                        v.len()
                    )));
                }
                (u, v)
            } else {
                (s.u.clone(), s.v.clone())
            };
            let vectors = choose_vectors(g, lists, &u, &v)?;
            VectorTable { u, v, vectors }.write(g, &mut col);
            Ok((EdgeColouring::new(col), Property::StronglyRainbowConnected))
        }
        MultipartiteCase::Rc3 => {
            let big = 2usize
                .checked_pow(s.m as u32)
                .filter(|&x| s.m <= s.n && x < s.n)
                .ok_or_else(|| {
                    Error::Precondition(format!(
                        "rc case needs m <= n and n >= 2^m + 1 (m={}, n={})",
                        s.m, s.n
                    ))
                })?;
            let table = VectorTable {
                vectors: choose_vectors(g, lists, &s.u, &s.v[..big])?,
                u: s.u.clone(),
                v: s.v[..big].to_vec(),
            };
            table.write(g, &mut col);
            let e12 = g.edge_id(s.u[0], s.u[1]).expect("u1 u2 adjacent");
            let alpha = lists.list(e12)[0];
            col[e12] = alpha;
            for &vj in &s.v[big..] {
                let e1 = g.edge_id(s.u[0], vj).expect("edge");
                let e2 = g.edge_id(s.u[1], vj).expect("edge");
                let x = pick(lists.list(e1), &[alpha])?;
                let y = pick(lists.list(e2), &[alpha, x])?;
                col[e1] = x;
                col[e2] = y;
            }
            Ok((EdgeColouring::new(col), Property::RainbowConnected))
        }
    }
}

fn case_name(case: MultipartiteCase, s: &Split) -> &'static str {
    match case {
        MultipartiteCase::Strong if s.m > s.n => "m > n",
        MultipartiteCase::Strong => "m <= n",
        MultipartiteCase::Rc3 => "rc",
    }
}
