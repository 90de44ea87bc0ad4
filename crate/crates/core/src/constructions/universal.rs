use crate::colour::{Colour, EdgeColouring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::lists::ListAssignment;
use crate::sdr::{find_sdr, SdrOutcome};

use super::{least_colours, pick, require_lists};

/// Universal vertex used by the construction and the list size `max(p, 3)`.
pub(crate) fn required_size(g: &Graph) -> Result<(VertexId, usize)> {
    if g.is_complete() {
        return Err(Error::Precondition("graph is complete".into()));
    }
    let v = *g
        .universal_vertices()
        .first()
        .ok_or_else(|| Error::Precondition("graph has no universal vertex".into()))?;
    let trivial = g
        .components_without(Some(v))
        .iter()
        .filter(|c| c.len() == 1)
        .count();
    Ok((v, trivial.max(3)))
}

/// Rainbow connected colouring of a graph with a universal vertex `v`.
///
/// Pendant spokes get distinct colours. In every other component of `G - v`
/// a BFS tree is grown edge by edge; when edge `e_k = u_l u_k` is added,
/// `f(u_k v)` and `f(e_k)` are chosen distinct and different from `f(u_l v)`.
pub fn universal_vertex_colouring(
    g: &Graph,
    v: Option<VertexId>,
    lists: &ListAssignment,
) -> Result<EdgeColouring> {
    let (first, r) = required_size(g)?;
    let v = v.unwrap_or(first);
    if g.degree(v) + 1 != g.n() {
        return Err(Error::Precondition(format!("vertex {v} is not universal")));
    }
    require_lists(g, lists, r)?;
    let mut col = least_colours(lists);
    let spoke = |x: VertexId| g.edge_id(v, x).expect("v is universal");
    let mut pendant_colours: Vec<Colour> = Vec::new();
    for comp in g.components_without(Some(v)) {
        if comp.len() == 1 {
            let e = spoke(comp[0]);
            let c = pick(lists.list(e), &pendant_colours)?;
            pendant_colours.push(c);
            col[e] = c;
            continue;
        }
        let root = comp[0];
        let mut seen = vec![false; g.n()];
        seen[v] = true;
        seen[root] = true;
        let mut queue = vec![root];
        let mut i = 0;
        let mut first_edge = true;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &(y, e) in g.incident(x) {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                queue.push(y);
                if first_edge {
                    first_edge = false;
                    let a = pick(lists.list(spoke(x)), &[])?;
                    let b = pick(lists.list(spoke(y)), &[a])?;
                    let c = pick(lists.list(e), &[a, b])?;
                    col[spoke(x)] = a;
                    col[spoke(y)] = b;
                    col[e] = c;
                } else {
                    let parent = col[spoke(x)];
                    let b = pick(lists.list(spoke(y)), &[parent])?;
                    let c = pick(lists.list(e), &[parent, b])?;
                    col[spoke(y)] = b;
                    col[e] = c;
                }
            }
        }
    }
    Ok(EdgeColouring::new(col))
}

/// All-distinct colouring of a tree from lists of size `e(G)`, by matching.
pub fn tree_list_colouring(g: &Graph, lists: &ListAssignment) -> Result<EdgeColouring> {
    if !g.is_tree() {
        return Err(Error::Precondition("graph is not a tree".into()));
    }
    require_lists(g, lists, g.m())?;
    match find_sdr(lists.lists()) {
        SdrOutcome::Representatives(r) => Ok(EdgeColouring::new(r)),
        SdrOutcome::HallViolation(s) => Err(Error::GuaranteeFailed(format!(
            "lists of size e(G) violate Hall's condition on {s:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::Property;
    use crate::families::FamilySpec;
    use crate::lists::{random_lists, ItemMode};
    use crate::rainbow::satisfies;

    #[test]
    fn wheels_and_hub_graphs() {
        for n in 7..=12 {
            let g = FamilySpec::Wheel(n).build().unwrap();
            for seed in 0..20 {
                let l = random_lists(ItemMode::Edge, g.m(), 3, 6, seed);
                let c = universal_vertex_colouring(&g, None, &l).unwrap();
                assert!(
                    satisfies(&g, &c, Property::RainbowConnected).unwrap(),
                    "wheel {n} seed {seed}"
                );
            }
        }
        let g = FamilySpec::Lemma43(3, 4, 5).build().unwrap();
        let l = random_lists(ItemMode::Edge, g.m(), 4, 9, 3);
        let c = universal_vertex_colouring(&g, None, &l).unwrap();
        assert!(satisfies(&g, &c, Property::RainbowConnected).unwrap());
    }

    #[test]
    fn preconditions() {
        let k4 = FamilySpec::Complete(4).build().unwrap();
        let l = ListAssignment::constant(ItemMode::Edge, k4.m(), 3);
        assert!(matches!(
            universal_vertex_colouring(&k4, None, &l),
            Err(Error::Precondition(_))
        ));
        let c5 = FamilySpec::Cycle(5).build().unwrap();
        let l = ListAssignment::constant(ItemMode::Edge, 5, 3);
        assert!(matches!(
            universal_vertex_colouring(&c5, None, &l),
            Err(Error::Precondition(_))
        ));
        let star = FamilySpec::Star(5).build().unwrap();
        let l = ListAssignment::constant(ItemMode::Edge, 5, 4);
        assert!(matches!(
            universal_vertex_colouring(&star, None, &l),
            Err(Error::ListTooSmall { .. })
        ));
    }

    #[test]
    fn trees_get_distinct_colours() {
        let g = FamilySpec::Star(5).build().unwrap();
        for seed in 0..20 {
            let l = random_lists(ItemMode::Edge, 5, 5, 8, seed);
            let c = tree_list_colouring(&g, &l).unwrap();
            assert!(satisfies(&g, &c, Property::StronglyRainbowConnected).unwrap());
        }
    }
}
