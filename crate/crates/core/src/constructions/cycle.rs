use crate::colour::{Colour, EdgeColouring, Property};
use crate::error::{Error, Result};
use crate::exact::ColouringOutcome;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::lists::{ItemMode, ListAssignment};
use crate::listsolve::exists_list_colouring;
use crate::search::SearchConfig;

use super::require_lists;

/// Budget for the search standing in for `χ_ℓ(K_{r×2}) = r`.
const PAIRING_BUDGET: u64 = 50_000_000;

/// Vertices and edges of a cycle in cyclic order: edge `i` joins vertex `i` and `i + 1`.
pub fn cycle_order(g: &Graph) -> Result<(Vec<VertexId>, Vec<EdgeId>)> {
    if g.n() < 3 || !g.is_connected() || (0..g.n()).any(|v| g.degree(v) != 2) {
        return Err(Error::Precondition("graph is not a cycle".into()));
    }
    let mut verts = vec![0];
    let mut edges = Vec::with_capacity(g.n());
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let &(next, e) = g
            .incident(cur)
            .iter()
            .find(|&&(w, _)| w != prev)
            .expect("degree two");
        edges.push(e);
        if next == 0 {
            break;
        }
        verts.push(next);
        prev = cur;
        cur = next;
    }
    Ok((verts, edges))
}

/// Cycle colouring from `ceil(n/2)`-lists in which every path of length at
/// most `n/2` (rounded down) is rainbow.
///
/// Even `n = 2r`: a proper list colouring of `K_{r×2}` whose classes are
/// antipodal edge pairs. Odd `n`: one edge keeps its least colour, which is
/// removed from the other lists, and the remaining even cycle is solved.
pub fn cycle_list_colouring(g: &Graph, lists: &ListAssignment) -> Result<EdgeColouring> {
    let (_, order) = cycle_order(g)?;
    let n = order.len();
    if n < 4 {
        return Err(Error::Precondition(
            "cycle must have at least 4 vertices".into(),
        ));
    }
    require_lists(g, lists, n.div_ceil(2))?;
    let mut col = vec![0 as Colour; n];
    let (even, removed): (&[EdgeId], Option<Colour>) = if n % 2 == 0 {
        (&order[..], None)
    } else {
        let alpha = lists.list(order[0])[0];
        col[order[0]] = alpha;
        (&order[1..], Some(alpha))
    };
    let reduced: Vec<Vec<Colour>> = even
        .iter()
        .map(|&e| {
            lists
                .list(e)
                .iter()
                .copied()
                .filter(|&c| Some(c) != removed)
                .collect()
        })
        .collect();
    for (e, c) in even.iter().zip(antipodal_pairing(reduced)?) {
        col[*e] = c;
    }
    Ok(EdgeColouring::new(col))
}

/// Proper colouring of `K_{r×2}` on positions `0..2r`, classes `{i, i + r}`.
fn antipodal_pairing(lists: Vec<Vec<Colour>>) -> Result<Vec<Colour>> {
    let k = lists.len();
    let half = k / 2;
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if j != i + half {
                pairs.push((i, j));
            }
        }
    }
    let aux = Graph::from_edges(k, &pairs)?;
    let l = ListAssignment::new(ItemMode::Vertex, lists);
    let s = exists_list_colouring(
        &aux,
        &l,
        Property::ProperVertex,
        &SearchConfig::with_budget(PAIRING_BUDGET),
    )?;
    match s.outcome {
        ColouringOutcome::Witness(c) => Ok(c.colours().to_vec()),
        ColouringOutcome::None => Err(Error::GuaranteeFailed(format!(
            "K_{{{half}x2}} has no proper colouring from {half}-lists"
        ))),
        ColouringOutcome::Exceeded => Err(Error::Budget(format!(
            "proper list colouring of K_{{{half}x2}}"
        ))),
    }
}
