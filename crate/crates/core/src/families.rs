//! Named graph families with fixed vertex labellings.
//!
//! Labelling contracts (relied on by the constructions):
//!
//! * `cycle(n)`: vertices `0..n`, edge `i` joins `i` and `i+1 (mod n)`.
//! * `wheel(n)`: rim `0..n` as in `cycle(n)`, hub `n`; rim edges first, then spokes.
//! * `kmn(m,n)` / `multipartite(..)`: classes laid out consecutively in the
//!   given order; edges in lexicographic order, so `kmn` edge `u_i v_j` has
//!   id `i*n + j`.
//! * `gpq(p,q)`: `y=0, x1=1, x2=2`, then `u_1..u_p`, then `v_1..v_q`.
//! * `gpqr(p,q,r)`: `y=0, x1=1, x2=2, x3=3`, then `u`, `v`, `w` blocks.
//! * `lemma41(b)` / `lemma42(b)`: hub `0`, `H = 1..b`, `K` the remaining
//!   `(b-1)^(b-1)` vertices.
//! * `lemma43(a,b,m)`: singletons `u_1..u_m = 0..m`, big class next, then
//!   the `a` pendant vertices at `u_1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::iso::{is_isomorphic, IsoOutcome};

/// Largest vertex count any family constructor will build.
pub const MAX_FAMILY_VERTICES: usize = 200_000;

/// Largest edge count any family constructor will build.
pub const MAX_FAMILY_EDGES: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Wheel(usize),
    Kmn(usize, usize),
    Multipartite(Vec<usize>),
    Petersen,
    G7,
    Gpq(usize, usize),
    Gpqr(usize, usize, usize),
    CompSqCycle(usize),
    /// Hub graph: `v` joined to all of `H` and of a clique on `(b-1)^(b-1)` vertices; `h` defaults to an edgeless graph on `b-1` vertices.
    Lemma41 {
        b: usize,
        h: Option<Graph>,
    },
    Lemma42(usize),
    Lemma43(usize, usize, usize),
    PairSrc(usize, usize),
    PairRcl(usize, usize),
    Path(usize),
    Complete(usize),
    Star(usize),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Kmn(..) => "kmn",
            FamilySpec::Multipartite(_) => "multipartite",
            FamilySpec::Petersen => "petersen",
            FamilySpec::G7 => "g7",
            FamilySpec::Gpq(..) => "gpq",
            FamilySpec::Gpqr(..) => "gpqr",
            FamilySpec::CompSqCycle(_) => "comp-sq-cycle",
            FamilySpec::Lemma41 { .. } => "lemma41",
            FamilySpec::Lemma42(_) => "lemma42",
            FamilySpec::Lemma43(..) => "lemma43",
            FamilySpec::PairSrc(..) => "pair-src",
            FamilySpec::PairRcl(..) => "pair-rcl",
            FamilySpec::Path(_) => "path",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Star(_) => "star",
        }
    }

    /// Integer parameters in DSL order.
    pub fn params(&self) -> Vec<usize> {
        match self {
            FamilySpec::Cycle(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::CompSqCycle(n)
            | FamilySpec::Lemma42(n)
            | FamilySpec::Path(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n) => vec![*n],
            FamilySpec::Kmn(a, b)
            | FamilySpec::Gpq(a, b)
            | FamilySpec::PairSrc(a, b)
            | FamilySpec::PairRcl(a, b) => vec![*a, *b],
            FamilySpec::Gpqr(a, b, c) | FamilySpec::Lemma43(a, b, c) => vec![*a, *b, *c],
            FamilySpec::Multipartite(s) => s.clone(),
            FamilySpec::Lemma41 { b, .. } => vec![*b],
            FamilySpec::Petersen | FamilySpec::G7 => vec![],
        }
    }

    /// Builds a family member from its DSL name and parameters.
    pub fn from_parts(name: &str, p: &[usize]) -> Result<FamilySpec> {
        let arity = |k: usize| -> Result<()> {
            if p.len() == k {
                Ok(())
            } else {
                Err(domain(
                    name,
                    format!("expected {k} parameter(s), got {}", p.len()),
                ))
            }
        };
        Ok(match name {
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(p[0])
            }
            "wheel" => {
                arity(1)?;
                FamilySpec::Wheel(p[0])
            }
            "kmn" => {
                arity(2)?;
                FamilySpec::Kmn(p[0], p[1])
            }
            "multipartite" => FamilySpec::Multipartite(p.to_vec()),
            "petersen" => {
                arity(0)?;
                FamilySpec::Petersen
            }
            "g7" => {
                arity(0)?;
                FamilySpec::G7
            }
            "gpq" => {
                arity(2)?;
                FamilySpec::Gpq(p[0], p[1])
            }
            "gpqr" => {
                arity(3)?;
                FamilySpec::Gpqr(p[0], p[1], p[2])
            }
            "comp-sq-cycle" => {
                arity(1)?;
                FamilySpec::CompSqCycle(p[0])
            }
            "lemma41" => {
                arity(1)?;
                FamilySpec::Lemma41 { b: p[0], h: None }
            }
            "lemma42" => {
                arity(1)?;
                FamilySpec::Lemma42(p[0])
            }
            "lemma43" => {
                arity(3)?;
                FamilySpec::Lemma43(p[0], p[1], p[2])
            }
            "pair-src" => {
                arity(2)?;
                FamilySpec::PairSrc(p[0], p[1])
            }
            "pair-rcl" => {
                arity(2)?;
                FamilySpec::PairRcl(p[0], p[1])
            }
            "path" => {
                arity(1)?;
                FamilySpec::Path(p[0])
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(p[0])
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star(p[0])
            }
            other => return Err(domain(other, "unknown family".into())),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        build_family(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params();
        if p.is_empty() {
            write!(f, "{}", self.name())
        } else {
            let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            write!(f, "{}:{}", self.name(), s.join(","))
        }
    }
}

fn domain(family: &str, reason: String) -> Error {
    Error::FamilyDomain {
        family: family.to_string(),
        reason,
    }
}

fn check(cond: bool, family: &str, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(domain(family, reason.to_string()))
    }
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    base.checked_pow(u32::try_from(exp).ok()?)
}

/// `(b-1)^(b-1)`, the size of the transversal clique.
fn transversal_count(b: usize, family: &str) -> Result<usize> {
    match checked_pow(b - 1, b - 1) {
        Some(k) if k + b <= MAX_FAMILY_VERTICES => Ok(k),
        _ => Err(domain(family, format!("(b-1)^(b-1) too large for b={b}"))),
    }
}

/// Smallest `m >= 2` with `b^(m-1) > (b-1)^m`.
pub fn lemma43_min_m(b: usize) -> Option<usize> {
    (2..200).find(|&m| lemma43_m_ok(b, m))
}

fn lemma43_m_ok(b: usize, m: usize) -> bool {
    // Compare b^(m-1) with (b-1)^m without overflow using logarithms on the
    // boundary only when the integers overflow.
    match (checked_pow(b, m - 1), checked_pow(b - 1, m)) {
        (Some(x), Some(y)) => x > y,
        _ => (m as f64 - 1.0) * (b as f64).ln() > m as f64 * ((b - 1) as f64).ln(),
    }
}

/// Vertex and edge counts of a family member, saturating on overflow.
fn projected_size(spec: &FamilySpec) -> (u128, u128) {
    let pow = |b: usize, e: usize| {
        (b as u128)
            .checked_pow(e.min(200) as u32)
            .unwrap_or(u128::MAX)
    };
    let pairs = |k: u128| k.saturating_mul(k.saturating_sub(1)) / 2;
    match spec {
        FamilySpec::Cycle(n) | FamilySpec::Path(n) | FamilySpec::Star(n) => {
            (*n as u128 + 1, *n as u128)
        }
        FamilySpec::Wheel(n) => (*n as u128 + 1, 2 * *n as u128),
        FamilySpec::Complete(n) | FamilySpec::CompSqCycle(n) => (*n as u128, pairs(*n as u128)),
        FamilySpec::Kmn(a, b) => (*a as u128 + *b as u128, (*a as u128) * (*b as u128)),
        FamilySpec::Multipartite(s) => {
            let v = s
                .iter()
                .fold(0u128, |acc, &x| acc.saturating_add(x as u128));
            (v, pairs(v))
        }
        FamilySpec::Petersen | FamilySpec::G7 => (10, 15),
        FamilySpec::Gpq(p, q) => (
            *p as u128 + *q as u128 + 3,
            2 * (*p as u128 + *q as u128) + 1,
        ),
        FamilySpec::Gpqr(p, q, r) => {
            let t = *p as u128 + *q as u128 + *r as u128;
            (t + 4, 2 * t + 3)
        }
        FamilySpec::Lemma41 { b, .. } | FamilySpec::Lemma42(b) => {
            let k = pow(b.saturating_sub(1), b.saturating_sub(1));
            let v = k.saturating_add(*b as u128);
            (v, pairs(v))
        }
        FamilySpec::PairSrc(_, b) | FamilySpec::PairRcl(_, b) => {
            projected_size(&FamilySpec::Lemma41 { b: *b, h: None })
        }
        FamilySpec::Lemma43(a, b, m) => {
            let big = pow(b.saturating_sub(1), *m).saturating_add(1);
            let v = big.saturating_add(*a as u128 + *m as u128);
            (
                v,
                (*m as u128)
                    .saturating_mul(big)
                    .saturating_add(pairs(*m as u128))
                    .saturating_add(*a as u128),
            )
        }
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    let name = spec.name();
    let (v, e) = projected_size(spec);
    if v > MAX_FAMILY_VERTICES as u128 || e > MAX_FAMILY_EDGES as u128 {
        return Err(domain(
            name,
            format!("larger than {MAX_FAMILY_VERTICES} vertices or {MAX_FAMILY_EDGES} edges"),
        ));
    }
    match spec {
        FamilySpec::Cycle(n) => {
            check(*n >= 3, name, "n >= 3")?;
            Ok(cycle(*n))
        }
        FamilySpec::Wheel(n) => {
            check(*n >= 3, name, "n >= 3")?;
            let mut pairs: Vec<_> = cycle(*n).edges().to_vec();
            pairs.extend((0..*n).map(|i| (i, *n)));
            Graph::from_edges(n + 1, &pairs)
        }
        FamilySpec::Kmn(m, n) => {
            check(*m >= 1 && m <= n, name, "1 <= m <= n")?;
            Ok(multipartite(&[*m, *n]))
        }
        FamilySpec::Multipartite(sizes) => {
            check(sizes.len() >= 2, name, "t >= 2 classes")?;
            check(sizes.iter().all(|&s| s >= 1), name, "all class sizes >= 1")?;
            check(
                sizes.iter().sum::<usize>() <= MAX_FAMILY_VERTICES,
                name,
                "too many vertices",
            )?;
            Ok(multipartite(sizes))
        }
        FamilySpec::Petersen => {
            let mut pairs = Vec::new();
            for i in 0..5 {
                pairs.push((i, (i + 1) % 5));
            }
            for i in 0..5 {
                pairs.push((i, i + 5));
            }
            for i in 0..5 {
                pairs.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edges(10, &pairs)
        }
        FamilySpec::G7 => build_family(&FamilySpec::Gpqr(1, 1, 1)),
        FamilySpec::Gpq(p, q) => {
            check(p >= q && *q >= 1, name, "p >= q >= 1")?;
            let (y, x1, x2) = (0, 1, 2);
            let u0 = 3;
            let v0 = 3 + p;
            let mut pairs = Vec::new();
            for i in 0..*p {
                pairs.push((y, u0 + i));
            }
            for j in 0..*q {
                pairs.push((y, v0 + j));
            }
            for i in 0..*p {
                pairs.push((u0 + i, x1));
            }
            for j in 0..*q {
                pairs.push((v0 + j, x2));
            }
            pairs.push((x1, x2));
            Graph::from_edges(p + q + 3, &pairs)
        }
        FamilySpec::Gpqr(p, q, r) => {
            check(p >= q && q >= r && *r >= 1, name, "p >= q >= r >= 1")?;
            let (y, x1, x2, x3) = (0, 1, 2, 3);
            let u0 = 4;
            let v0 = u0 + p;
            let w0 = v0 + q;
            let mut pairs = Vec::new();
            for i in 0..*p {
                pairs.push((y, u0 + i));
            }
            for j in 0..*q {
                pairs.push((y, v0 + j));
            }
            for k in 0..*r {
                pairs.push((y, w0 + k));
            }
            for i in 0..*p {
                pairs.push((u0 + i, x1));
            }
            for j in 0..*q {
                pairs.push((v0 + j, x2));
            }
            for k in 0..*r {
                pairs.push((w0 + k, x3));
            }
            pairs.extend([(x1, x2), (x1, x3), (x2, x3)]);
            Graph::from_edges(p + q + r + 4, &pairs)
        }
        FamilySpec::CompSqCycle(n) => {
            check(*n >= 7, name, "n >= 7")?;
            let mut pairs = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    let d = (j - i).min(n - (j - i));
                    if d >= 3 {
                        pairs.push((i, j));
                    }
                }
            }
            Graph::from_edges(*n, &pairs)
        }
        FamilySpec::Lemma41 { b, h } => {
            check(*b >= 2, name, "b >= 2")?;
            let hg = match h {
                Some(h) => {
                    check(h.n() == b - 1, name, "H must have b-1 vertices")?;
                    h.clone()
                }
                None => Graph::empty(b - 1),
            };
            let k = transversal_count(*b, name)?;
            Ok(hub_graph(&hg, k))
        }
        FamilySpec::Lemma42(b) => {
            check(*b >= 3, name, "b >= 3")?;
            let k = transversal_count(*b, name)?;
            Ok(hub_graph(&complete(b - 1), k))
        }
        FamilySpec::Lemma43(a, b, m) => {
            check(*a >= 3, name, "a >= 3")?;
            check(b > a, name, "b > a")?;
            check(*m >= 2, name, "m >= 2")?;
            check(
                lemma43_m_ok(*b, *m),
                name,
                "m must satisfy b^(m-1) > (b-1)^m",
            )?;
            let big = checked_pow(b - 1, *m)
                .and_then(|x| x.checked_add(1))
                .filter(|&x| x + m + a <= MAX_FAMILY_VERTICES)
                .ok_or_else(|| domain(name, "(b-1)^m + 1 too large".into()))?;
            let base = multipartite(&[vec![1; *m], vec![big]].concat());
            let mut pairs = base.edges().to_vec();
            let w0 = m + big;
            pairs.extend((0..*a).map(|k| (0, w0 + k)));
            Graph::from_edges(w0 + a, &pairs)
        }
        FamilySpec::PairSrc(a, b) => {
            check(*a >= 1 && a <= b, name, "1 <= a <= b")?;
            if a == b {
                return Ok(path(a + 1));
            }
            check(*a >= 2, name, "a >= 2 when a < b")?;
            // H: clique on b-a+1 vertices plus a-2 isolated vertices.
            let clique = b - a + 1;
            let mut pairs = Vec::new();
            for i in 0..clique {
                for j in i + 1..clique {
                    pairs.push((i, j));
                }
            }
            let h = Graph::from_edges(b - 1, &pairs)?;
            build_family(&FamilySpec::Lemma41 { b: *b, h: Some(h) })
        }
        FamilySpec::PairRcl(a, b) => {
            check(*a >= 1 && a <= b, name, "1 <= a <= b")?;
            if a == b {
                return Ok(path(a + 1));
            }
            check(*a >= 2, name, "a >= 2 when a < b")?;
            if *a == 2 {
                build_family(&FamilySpec::Lemma42(*b))
            } else {
                let m = lemma43_min_m(*b).ok_or_else(|| domain(name, "no admissible m".into()))?;
                build_family(&FamilySpec::Lemma43(*a, *b, m))
            }
        }
        FamilySpec::Path(n) => {
            check(*n >= 1, name, "n >= 1")?;
            Ok(path(*n))
        }
        FamilySpec::Complete(n) => {
            check(*n >= 1, name, "n >= 1")?;
            Ok(complete(*n))
        }
        FamilySpec::Star(n) => {
            check(*n >= 1, name, "n >= 1")?;
            let pairs: Vec<_> = (1..=*n).map(|i| (0, i)).collect();
            Graph::from_edges(n + 1, &pairs)
        }
    }
}

fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &pairs).expect("cycle")
}

fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &pairs).expect("path")
}

fn complete(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    Graph::from_edges(n, &pairs).expect("complete")
}

fn multipartite(sizes: &[usize]) -> Graph {
    let mut class = Vec::new();
    for (c, &s) in sizes.iter().enumerate() {
        class.extend(std::iter::repeat_n(c, s));
    }
    let n = class.len();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if class[u] != class[v] {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &pairs).expect("multipartite")
}

/// Hub `0` joined to a copy of `h` on `1..=h.n()` and a clique on `k` further vertices.
fn hub_graph(h: &Graph, k: usize) -> Graph {
    let hn = h.n();
    let k0 = hn + 1;
    let mut pairs = Vec::new();
    for i in 0..hn {
        pairs.push((0, 1 + i));
    }
    for i in 0..k {
        pairs.push((0, k0 + i));
    }
    for &(a, b) in h.edges() {
        pairs.push((1 + a, 1 + b));
    }
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((k0 + i, k0 + j));
        }
    }
    Graph::from_edges(1 + hn + k, &pairs).expect("hub graph")
}

/// Adds a new vertex adjacent to both neighbours of the degree-2 vertex `v`.
pub fn duplicate_degree2(g: &Graph, v: VertexId) -> Result<Graph> {
    let d = g.degree(v);
    if d != 2 {
        return Err(Error::NotDegreeTwo {
            vertex: v,
            degree: d,
        });
    }
    let nbrs: Vec<_> = g.neighbours(v).collect();
    g.with_vertex(&nbrs)
}

/// Members of the extremal diameter-2 family with at most `max_n` vertices,
/// deduplicated up to isomorphism.
pub fn enumerate_family_g(max_n: usize) -> Result<Vec<(FamilySpec, Graph)>> {
    if max_n < 5 {
        return Err(domain("family-G", "max_n >= 5".into()));
    }
    let mut specs = Vec::new();
    for t in 2..=max_n.saturating_sub(3) {
        for q in 1..=t / 2 {
            specs.push(FamilySpec::Gpq(t - q, q));
        }
    }
    for t in 3..=max_n.saturating_sub(4) {
        for r in 1..=t / 3 {
            for q in r..=(t - r) / 2 {
                specs.push(FamilySpec::Gpqr(t - q - r, q, r));
            }
        }
    }
    if max_n >= 10 {
        specs.push(FamilySpec::Petersen);
    }
    let mut out: Vec<(FamilySpec, Graph)> = Vec::new();
    for spec in specs {
        let g = spec.build()?;
        let dup = out
            .iter()
            .any(|(_, h)| matches!(is_isomorphic(&g, h, 10_000_000), IsoOutcome::Isomorphic(_)));
        if !dup {
            out.push((spec, g));
        }
    }
    Ok(out)
}
