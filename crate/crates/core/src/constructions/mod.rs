//! Explicit list colouring procedures.
//!
//! Each procedure takes a graph of a known shape and an edge-list
//! assignment and returns a colouring drawn from the lists. The result is
//! always re-checked with [`check_property`]; procedures that rely on an
//! existence result fall back to a bounded search and report
//! [`Error::GuaranteeFailed`] if that search comes back empty.
//!
//! Edges the procedures do not constrain get the least colour of their list.

mod bipartite;
mod cycle;
mod hubs;
mod universal;
mod wheel;

pub use bipartite::{
    balanced_bipartition, bipartite_layout, ceil_root, kmn_rc4_colouring, kmn_rc4_shape,
    kmn_src_colouring, kmn_src_shape, multipartite_classes, multipartite_colouring,
    MultipartiteCase, VectorTable,
};
pub use cycle::{cycle_list_colouring, cycle_order};
pub use hubs::{lemma41_bad_lists, lemma41_colouring, lemma42_colouring, HubLayout};
pub use universal::{tree_list_colouring, universal_vertex_colouring};
pub use wheel::{srcl_wheel_upper, wheel_closed_form_upper};

use crate::colour::{Colour, EdgeColouring, Property};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lists::{ItemMode, ListAssignment};
use crate::rainbow::{check_property, Verdict};

/// A colouring procedure selectable by name.
pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// List size the procedure needs on `g`; errors when `g` has the wrong shape.
    fn list_size(&self, g: &Graph) -> Result<usize>;
    /// Colouring from the lists, and the property it is meant to have.
    fn colour(&self, g: &Graph, lists: &ListAssignment) -> Result<(EdgeColouring, Property)>;
}

/// Outcome of running a construction with its postcondition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionRun {
    pub name: &'static str,
    pub colouring: EdgeColouring,
    pub property: Property,
    pub verdict: Verdict,
    pub respects_lists: bool,
}

impl ConstructionRun {
    pub fn passed(&self) -> bool {
        self.respects_lists && self.verdict.is_ok()
    }
}

/// Runs `c` and checks the colouring against the lists and the property.
pub fn run(c: &dyn Construction, g: &Graph, lists: &ListAssignment) -> Result<ConstructionRun> {
    let (colouring, property) = c.colour(g, lists)?;
    let verdict = check_property(g, &colouring, property)?;
    let respects_lists = (0..g.m()).all(|e| lists.list(e).contains(&colouring.get(e)));
    Ok(ConstructionRun {
        name: c.name(),
        colouring,
        property,
        verdict,
        respects_lists,
    })
}

macro_rules! construction {
    ($ty:ident, $name:literal, $summary:literal, $size:expr, $colour:expr) => {
        struct $ty;
        impl Construction for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn summary(&self) -> &'static str {
                $summary
            }
            fn list_size(&self, g: &Graph) -> Result<usize> {
                ($size)(g)
            }
            fn colour(
                &self,
                g: &Graph,
                lists: &ListAssignment,
            ) -> Result<(EdgeColouring, Property)> {
                ($colour)(g, lists)
            }
        }
    };
}

construction!(
    Universal,
    "universal-vertex",
    "rainbow connected colouring of a non-complete graph with a universal vertex",
    |g: &Graph| universal::required_size(g).map(|(_, r)| r),
    |g: &Graph, l: &ListAssignment| universal_vertex_colouring(g, None, l)
        .map(|c| (c, Property::RainbowConnected))
);
construction!(
    Cycle,
    "cycle",
    "every path of length at most n/2 rainbow, from ceil(n/2)-lists",
    |g: &Graph| cycle_order(g).map(|(v, _)| v.len().div_ceil(2)),
    |g: &Graph, l: &ListAssignment| cycle_list_colouring(g, l)
        .map(|c| (c, Property::StronglyRainbowConnected))
);
construction!(
    KmnSrc,
    "kmn-src",
    "strongly rainbow connected K_{m,n} from ceil(n^(1/m))-lists via distinct column vectors",
    |g: &Graph| kmn_src_shape(g).map(|(u, v)| ceil_root(v.len(), u.len())),
    |g: &Graph, l: &ListAssignment| kmn_src_colouring(g, l)
        .map(|t| (t.colouring(g, l), Property::StronglyRainbowConnected))
);
construction!(
    KmnRc4,
    "kmn-rc4",
    "rainbow connected K_{m,n}, n > 3^m, from 4-lists",
    |g: &Graph| kmn_rc4_shape(g).map(|_| 4),
    |g: &Graph, l: &ListAssignment| kmn_rc4_colouring(g, l)
        .map(|t| (t.colouring(g, l), Property::RainbowConnected))
);
construction!(
    Multipartite,
    "multipartite",
    "strongly rainbow connected complete multipartite graph via a spanning K_{a,b}",
    |g: &Graph| bipartite::required_size(g, MultipartiteCase::Strong),
    |g: &Graph, l: &ListAssignment| multipartite_colouring(g, l, MultipartiteCase::Strong)
);
construction!(
    MultipartiteRc,
    "multipartite-rc",
    "rainbow connected complete multipartite graph from 3-lists when n >= 2^m + 1",
    |g: &Graph| bipartite::required_size(g, MultipartiteCase::Rc3),
    |g: &Graph, l: &ListAssignment| multipartite_colouring(g, l, MultipartiteCase::Rc3)
);
construction!(
    Lemma41,
    "lemma41",
    "strongly rainbow connected hub graph (H on b-1 vertices, clique K) from b-lists",
    |g: &Graph| HubLayout::detect(g, false).map(|h| h.b),
    |g: &Graph, l: &ListAssignment| lemma41_colouring(g, l)
        .map(|c| (c, Property::StronglyRainbowConnected))
);
construction!(
    Lemma42,
    "lemma42",
    "rainbow connected hub graph with two cliques from 2-lists",
    |g: &Graph| HubLayout::detect(g, true).map(|_| 2),
    |g: &Graph, l: &ListAssignment| lemma42_colouring(g, l)
        .map(|c| (c, Property::RainbowConnected))
);
construction!(
    Tree,
    "tree",
    "all-distinct colouring of a tree from e(G)-lists by matching",
    |g: &Graph| if g.is_tree() {
        Ok(g.m())
    } else {
        Err(Error::Precondition("graph is not a tree".into()))
    },
    |g: &Graph, l: &ListAssignment| tree_list_colouring(g, l)
        .map(|c| (c, Property::StronglyRainbowConnected))
);

/// Every available construction, in a fixed order.
pub fn registry() -> Vec<Box<dyn Construction>> {
    vec![
        Box::new(Universal),
        Box::new(Cycle),
        Box::new(KmnSrc),
        Box::new(KmnRc4),
        Box::new(Multipartite),
        Box::new(MultipartiteRc),
        Box::new(Lemma41),
        Box::new(Lemma42),
        Box::new(Tree),
    ]
}

pub fn find(name: &str) -> Option<Box<dyn Construction>> {
    registry().into_iter().find(|c| c.name() == name)
}

/// Checks that `lists` is an edge assignment of `g` with lists of size at least `r`.
pub(crate) fn require_lists(g: &Graph, lists: &ListAssignment, r: usize) -> Result<()> {
    if lists.mode() != ItemMode::Edge {
        return Err(Error::ModeMismatch(
            "constructions colour edges; got vertex lists".into(),
        ));
    }
    if lists.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            got: lists.len(),
        });
    }
    for e in 0..g.m() {
        let size = lists.list(e).len();
        if size < r {
            return Err(Error::ListTooSmall {
                item: e,
                size,
                required: r,
            });
        }
    }
    Ok(())
}

/// Least colour of `list` outside `avoid`.
pub(crate) fn pick(list: &[Colour], avoid: &[Colour]) -> Result<Colour> {
    list.iter()
        .copied()
        .find(|c| !avoid.contains(c))
        .ok_or_else(|| Error::GuaranteeFailed(format!("no colour of {list:?} avoids {avoid:?}")))
}

/// Colouring with the least colour of every list.
pub(crate) fn least_colours(lists: &ListAssignment) -> Vec<Colour> {
    lists.lists().iter().map(|l| l[0]).collect()
}
