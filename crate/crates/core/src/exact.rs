//! Exact `rc` and `src`: structural bounds plus exhaustive search.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::colour::{Colour, EdgeColouring, Property};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{automorphisms, edge_permutation};
use crate::lists::ListAssignment;
use crate::rainbow::check_property;
use crate::search::{
    complete_witness, search, Prepared, Problem, SearchConfig, SearchOutcome, Unassigned,
    MAX_PALETTE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamTag {
    Rc,
    Src,
    Rcl,
    Srcl,
    Chil,
    Chipl,
}

impl ParamTag {
    pub const ALL: [ParamTag; 6] = [
        ParamTag::Rc,
        ParamTag::Src,
        ParamTag::Rcl,
        ParamTag::Srcl,
        ParamTag::Chil,
        ParamTag::Chipl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParamTag::Rc => "rc",
            ParamTag::Src => "src",
            ParamTag::Rcl => "rcl",
            ParamTag::Srcl => "srcl",
            ParamTag::Chil => "chil",
            ParamTag::Chipl => "chipl",
        }
    }

    /// Parameters bounded below by bridge counts (all rainbow parameters).
    pub fn is_rainbow(self) -> bool {
        matches!(
            self,
            ParamTag::Rc | ParamTag::Src | ParamTag::Rcl | ParamTag::Srcl
        )
    }

    pub fn is_strong(self) -> bool {
        matches!(self, ParamTag::Src | ParamTag::Srcl)
    }

    pub fn is_list(self) -> bool {
        !matches!(self, ParamTag::Rc | ParamTag::Src)
    }

    /// Property judged for this parameter (χ'_ℓ is handled on the line graph).
    pub fn property(self) -> Property {
        match self {
            ParamTag::Rc | ParamTag::Rcl => Property::RainbowConnected,
            ParamTag::Src | ParamTag::Srcl => Property::StronglyRainbowConnected,
            ParamTag::Chil | ParamTag::Chipl => Property::ProperVertex,
        }
    }

    /// The non-list parameter this one dominates.
    pub fn base(self) -> Option<ParamTag> {
        match self {
            ParamTag::Rcl => Some(ParamTag::Rc),
            ParamTag::Srcl => Some(ParamTag::Src),
            _ => None,
        }
    }
}

impl fmt::Display for ParamTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ParamTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "unknown parameter {s:?}; expected one of rc, src, rcl, srcl, chil, chipl"
                ))
            })
    }
}

/// Why the value is at least `lo`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum LowerCert {
    Trivial,
    Diameter {
        diameter: usize,
    },
    Bridges {
        bridges: usize,
    },
    CutComponents {
        vertex: usize,
        components: usize,
    },
    Tree {
        edges: usize,
    },
    Complete,
    /// Every colouring with `r - 1` colours was refuted.
    Exhaustion {
        r: usize,
        nodes: u64,
    },
    /// A list assignment with lists of size `r - 1` admits no valid colouring.
    BadList {
        r: usize,
        lists: ListAssignment,
        nodes: u64,
    },
    /// Inherited from a parameter this one dominates.
    Dominates {
        param: ParamTag,
        value: usize,
    },
    MaxDegree {
        degree: usize,
    },
    Clique {
        size: usize,
    },
    /// No proper colouring with `r - 1` colours exists.
    Chromatic {
        r: usize,
        nodes: u64,
    },
}

/// Why the value is at most `hi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum UpperCert {
    /// Structural bound such as `n - 1` or `e(G)`, realised by `colouring`.
    Trivial {
        bound: String,
        colouring: Option<EdgeColouring>,
    },
    Tree {
        edges: usize,
    },
    Complete,
    Witness {
        r: usize,
        colouring: EdgeColouring,
    },
    /// Every canonical `r`-list assignment admits a valid colouring.
    ListsHold {
        r: usize,
        assignments: u64,
        nodes: u64,
    },
    Nullstellensatz {
        r: usize,
        exponents: Vec<usize>,
        coefficient: String,
    },
    Degeneracy {
        degeneracy: usize,
    },
    Construction {
        name: String,
    },
    ClosedForm {
        formula: String,
    },
}

/// Computed value or interval with certificates.
#[derive(Clone, Debug, Serialize)]
pub struct ParamResult {
    pub param: ParamTag,
    pub lo: usize,
    pub hi: usize,
    pub lower: LowerCert,
    pub upper: UpperCert,
    pub nodes: u64,
    /// Set when part of the result rests on sampling.
    pub evidence: bool,
    pub note: Option<String>,
}

impl ParamResult {
    pub fn value(&self) -> Option<usize> {
        (self.lo == self.hi).then_some(self.lo)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub(crate) fn raise_lo(&mut self, lo: usize, cert: LowerCert) {
        if lo > self.lo {
            self.lo = lo;
            self.lower = cert;
        }
    }

    pub(crate) fn lower_hi(&mut self, hi: usize, cert: UpperCert) {
        if hi < self.hi {
            self.hi = hi;
            self.upper = cert;
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Precondition(
            "graph needs at least 2 vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Colouring giving a spanning tree distinct colours and every other edge colour 0.
fn spanning_tree_colouring(g: &Graph) -> EdgeColouring {
    let mut cols = vec![0 as Colour; g.m()];
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = vec![0];
    let mut next = 0;
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for &(y, e) in g.incident(x) {
            if !seen[y] {
                seen[y] = true;
                cols[e] = next;
                next += 1;
                queue.push(y);
            }
        }
    }
    EdgeColouring::new(cols)
}

fn degeneracy(g: &Graph) -> usize {
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; g.n()];
    let mut best = 0;
    for _ in 0..g.n() {
        let v = (0..g.n())
            .filter(|&v| !removed[v])
            .min_by_key(|&v| deg[v])
            .expect("vertex left");
        best = best.max(deg[v]);
        removed[v] = true;
        for w in g.neighbours(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}

/// Structural interval for a parameter.
pub fn param_bounds(g: &Graph, p: ParamTag) -> Result<ParamResult> {
    match p {
        ParamTag::Chil => return Ok(chi_bounds(g)),
        ParamTag::Chipl => {
            let mut r = chi_bounds(&g.line_graph());
            r.param = ParamTag::Chipl;
            let degree = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
            r.raise_lo(degree, LowerCert::MaxDegree { degree });
            return Ok(r);
        }
        _ => {}
    }
    require_connected(g)?;
    let mk = |lo, hi, lower, upper| ParamResult {
        param: p,
        lo,
        hi,
        lower,
        upper,
        nodes: 0,
        evidence: false,
        note: None,
    };
    if g.is_complete() {
        return Ok(mk(1, 1, LowerCert::Complete, UpperCert::Complete));
    }
    if g.is_tree() {
        let e = g.m();
        return Ok(mk(
            e,
            e,
            LowerCert::Tree { edges: e },
            UpperCert::Tree { edges: e },
        ));
    }
    let (hi, upper) = if p.is_strong() {
        let c = EdgeColouring::new((0..g.m() as Colour).collect());
        (
            g.m(),
            UpperCert::Trivial {
                bound: "e(G)".into(),
                colouring: Some(c),
            },
        )
    } else {
        (
            g.n() - 1,
            UpperCert::Trivial {
                bound: "n-1".into(),
                colouring: Some(spanning_tree_colouring(g)),
            },
        )
    };
    let diameter = g.diameter();
    let mut res = mk(diameter, hi, LowerCert::Diameter { diameter }, upper);
    let bridges = g.bridges()?.len();
    res.raise_lo(bridges, LowerCert::Bridges { bridges });
    if p.is_strong() {
        if let Some((vertex, components)) = g.max_cut_components()? {
            res.raise_lo(components, LowerCert::CutComponents { vertex, components });
        }
    }
    Ok(res)
}

fn chi_bounds(g: &Graph) -> ParamResult {
    let lo = if g.m() > 0 { 2 } else { 1 };
    let d = degeneracy(g);
    ParamResult {
        param: ParamTag::Chil,
        lo,
        hi: d + 1,
        lower: if g.m() > 0 {
            LowerCert::Clique { size: 2 }
        } else {
            LowerCert::Trivial
        },
        upper: UpperCert::Degeneracy { degeneracy: d },
        nodes: 0,
        evidence: false,
        note: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColouringOutcome {
    Witness(EdgeColouring),
    None,
    Exceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouringSearch {
    pub outcome: ColouringOutcome,
    pub nodes: u64,
}

/// Item permutations induced by automorphisms (edges, or vertices for [`Property::ProperVertex`]).
pub fn item_automorphisms(g: &Graph, p: Property, budget: u64) -> Option<Vec<Vec<usize>>> {
    let auts = automorphisms(g, budget)?;
    Some(if p.is_vertex() {
        auts
    } else {
        auts.iter().map(|s| edge_permutation(g, s)).collect()
    })
}

/// Searches for an `r`-colouring with property `p`.
pub fn exists_colouring(
    g: &Graph,
    p: Property,
    r: usize,
    cfg: &SearchConfig,
) -> Result<ColouringSearch> {
    if r == 0 || r > MAX_PALETTE {
        return Err(Error::Capacity {
            requested: r,
            capacity: MAX_PALETTE,
        });
    }
    if p.is_rainbow() {
        require_connected(g)?;
    }
    let items = p.item_count(g);
    let prep = Prepared::new(g, p, r.min(g.n().saturating_sub(1)).max(1))?;
    let perms = if cfg.orbit_pruning {
        item_automorphisms(g, p, 10_000_000)
    } else {
        None
    };
    let pb = Problem {
        prepared: &prep,
        domains: vec![Some((0..r as Colour).collect()); items],
        palette: Some(r),
        unassigned: Unassigned::Absent,
        item_perms: perms.as_deref(),
    };
    let res = search(&pb, cfg)?;
    let outcome = match res.outcome {
        SearchOutcome::Found(w) => {
            let c = complete_witness(&w);
            if !check_property(g, &c, p)?.is_ok() {
                return Err(Error::GuaranteeFailed(format!(
                    "search returned an invalid {p} colouring"
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

/// `rc(G)` or `src(G)`: tries `r = lo, lo+1, ..` until a witness appears.
pub fn compute_param(g: &Graph, p: ParamTag, cfg: &SearchConfig) -> Result<ParamResult> {
    if p.is_list() {
        return Err(Error::Precondition(format!(
            "{p} is a list parameter; use compute_list_param"
        )));
    }
    let mut res = param_bounds(g, p)?;
    let prop = p.property();
    let mut r = res.lo;
    while r < res.hi {
        if r > MAX_PALETTE {
            res.note = Some(format!("palette above {MAX_PALETTE} not searched"));
            break;
        }
        let remaining = cfg.budget.saturating_sub(res.nodes);
        let sub = SearchConfig {
            budget: remaining,
            ..*cfg
        };
        let s = exists_colouring(g, prop, r, &sub)?;
        res.nodes += s.nodes;
        match s.outcome {
            ColouringOutcome::Witness(c) => {
                res.lower_hi(r, UpperCert::Witness { r, colouring: c });
                break;
            }
            ColouringOutcome::None => {
                res.raise_lo(
                    r + 1,
                    LowerCert::Exhaustion {
                        r: r + 1,
                        nodes: s.nodes,
                    },
                );
                r += 1;
            }
            ColouringOutcome::Exceeded => break,
        }
    }
    Ok(res)
}
