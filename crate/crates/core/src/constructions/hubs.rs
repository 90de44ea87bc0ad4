use crate::colour::{Colour, EdgeColouring};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::lists::{ItemMode, ListAssignment};

use super::{least_colours, pick, require_lists};

/// A hub `v` adjacent to everything, a part `H` on `b - 1` vertices and a
/// clique `K` on `(b-1)^(b-1)` vertices with no edges between `H` and `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HubLayout {
    pub b: usize,
    pub hub: VertexId,
    pub h: Vec<VertexId>,
    pub k: Vec<VertexId>,
}

impl HubLayout {
    /// Recognises the shape; `h_clique` additionally requires `H` to be a clique.
    pub fn detect(g: &Graph, h_clique: bool) -> Result<HubLayout> {
        let bad = |why: &str| Error::Precondition(format!("not a hub graph: {why}"));
        let n = g.n();
        let b = (2..=n)
            .find(|&b| transversals(b).is_some_and(|k| b + k == n))
            .ok_or_else(|| bad("vertex count"))?;
        let k_size = transversals(b).expect("checked");
        let is_clique = |c: &[VertexId]| {
            c.iter()
                .all(|&x| c.iter().all(|&y| x == y || g.adjacent(x, y)))
        };
        for hub in g.universal_vertices() {
            let comps = g.components_without(Some(hub));
            // K is a clique component of the right size; H is everything else.
            let Some(ki) = comps.iter().position(|c| c.len() == k_size && is_clique(c)) else {
                continue;
            };
            let mut k = comps[ki].clone();
            let mut h: Vec<VertexId> = comps
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != ki)
                .flat_map(|(_, c)| c.iter().copied())
                .collect();
            h.sort_unstable();
            k.sort_unstable();
            if h_clique && (comps.len() != 2 || !is_clique(&h)) {
                continue;
            }
            return Ok(HubLayout { b, hub, h, k });
        }
        Err(bad("no hub with a clique component of size (b-1)^(b-1)"))
    }

    fn spoke(&self, g: &Graph, x: VertexId) -> EdgeId {
        g.edge_id(self.hub, x).expect("hub is universal")
    }
}

fn transversals(b: usize) -> Option<usize> {
    (b - 1)
        .checked_pow(b.saturating_sub(1) as u32)
        .filter(|&k| k <= 1 << 20)
}

/// The hub graph with `H = h` and the bad `(b-1)`-list assignment: disjoint
/// lists on the `H` spokes, every transversal of them on the `K` spokes,
/// `{0..b-2}` on the remaining edges.
pub fn lemma41_bad_lists(b: usize, h: Option<Graph>) -> Result<(Graph, ListAssignment)> {
    let g = FamilySpec::Lemma41 { b, h }.build()?;
    let lay = HubLayout::detect(&g, false)?;
    let r = b - 1;
    let base: Vec<Colour> = (0..r as Colour).collect();
    let mut lists = vec![base; g.m()];
    for (i, &x) in lay.h.iter().enumerate() {
        lists[lay.spoke(&g, x)] = (0..r).map(|j| (i * r + j) as Colour).collect();
    }
    for (t, &y) in lay.k.iter().enumerate() {
        let mut digits = t;
        let mut l = Vec::with_capacity(r);
        for i in 0..r {
            l.push((i * r + digits % r) as Colour);
            digits /= r;
        }
        lists[lay.spoke(&g, y)] = l;
    }
    Ok((g, ListAssignment::new(ItemMode::Edge, lists)))
}

/// Strongly rainbow connected colouring of a hub graph from `b`-lists:
/// distinct colours on the `H` spokes, `K` spokes avoiding all of them.
pub fn lemma41_colouring(g: &Graph, lists: &ListAssignment) -> Result<EdgeColouring> {
    let lay = HubLayout::detect(g, false)?;
    require_lists(g, lists, lay.b)?;
    let mut col = least_colours(lists);
    let mut used = Vec::new();
    for &x in &lay.h {
        let e = lay.spoke(g, x);
        col[e] = pick(lists.list(e), &used)?;
        used.push(col[e]);
    }
    for &y in &lay.k {
        let e = lay.spoke(g, y);
        col[e] = pick(lists.list(e), &used)?;
    }
    Ok(EdgeColouring::new(col))
}

/// Rainbow connected colouring from 2-lists of the hub graph whose `H` and
/// `K` are both cliques. Every `x ∈ H`, `y ∈ K` gets the rainbow path
/// `x v y` or `x z v y` for a fixed `z ∈ H`.
pub fn lemma42_colouring(g: &Graph, lists: &ListAssignment) -> Result<EdgeColouring> {
    let lay = HubLayout::detect(g, true)?;
    if lay.b < 3 {
        return Err(Error::Precondition("need b >= 3".into()));
    }
    require_lists(g, lists, 2)?;
    let two = |e: EdgeId| -> [Colour; 2] {
        let l = lists.list(e);
        [l[0], l[1]]
    };
    let mut col = least_colours(lists);
    let z = lay.h[0];
    let alpha = two(lay.spoke(g, z))[0];
    let mut rest = Vec::new();
    for &u in &lay.h {
        let e = lay.spoke(g, u);
        if two(e).contains(&alpha) {
            col[e] = alpha;
        } else {
            rest.push(u);
        }
    }
    let mut phi: Vec<Colour> = Vec::new();
    for &w in &lay.k {
        let e = lay.spoke(g, w);
        col[e] = pick(&two(e), &[alpha])?;
        phi.push(col[e]);
    }
    let outside = |l: [Colour; 2], avoid: &[Colour]| l.into_iter().find(|c| !avoid.contains(c));
    for u in rest {
        let uv = lay.spoke(g, u);
        let uz = g.edge_id(u, z).expect("H is a clique");
        if let Some(c) = outside(two(uv), &phi) {
            col[uv] = c;
            continue;
        }
        let mut phi_alpha = phi.clone();
        phi_alpha.push(alpha);
        if let Some(c) = outside(two(uz), &phi_alpha) {
            col[uz] = c;
            continue;
        }
        // Both lists lie inside Φ ∪ {α}: L(uv) = {β, γ}.
        let [beta, gamma] = two(uv);
        let lz = two(uz);
        if let Some(&delta) = lz
            .iter()
            .find(|&&d| phi.contains(&d) && d != beta && d != gamma)
        {
            col[uv] = beta;
            col[uz] = delta;
        } else if lz.contains(&gamma) {
            col[uv] = beta;
            col[uz] = gamma;
        } else {
            col[uv] = gamma;
            col[uz] = beta;
        }
    }
    Ok(EdgeColouring::new(col))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::Property;
    use crate::exact::ColouringOutcome;
    use crate::lists::random_lists;
    use crate::listsolve::exists_list_colouring;
    use crate::rainbow::satisfies;
    use crate::search::SearchConfig;

    /// Oracle: all `2^m` colourings from 2-lists.
    fn any_good(g: &Graph, l: &ListAssignment, p: Property) -> bool {
        (0u64..1 << g.m()).any(|mask| {
            let c: Vec<Colour> = (0..g.m())
                .map(|e| l.list(e)[(mask >> e & 1) as usize])
                .collect();
            satisfies(g, &c.into(), p).unwrap()
        })
    }

    #[test]
    fn bad_lists_are_bad() {
        let (g, l) = lemma41_bad_lists(2, None).unwrap();
        assert_eq!(g.n(), 3);
        let s = exists_list_colouring(
            &g,
            &l,
            Property::StronglyRainbowConnected,
            &SearchConfig::default(),
        )
        .unwrap();
        assert_eq!(s.outcome, ColouringOutcome::None);
        let (g, l) = lemma41_bad_lists(3, None).unwrap();
        assert_eq!(g.m(), 12);
        assert!(!any_good(&g, &l, Property::StronglyRainbowConnected));
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (g, l) = lemma41_bad_lists(3, Some(k2)).unwrap();
        assert!(!any_good(&g, &l, Property::StronglyRainbowConnected));
    }

    #[test]
    fn hub_colourings() {
        let g = FamilySpec::Lemma41 { b: 3, h: None }.build().unwrap();
        for seed in 0..50 {
            let l = random_lists(ItemMode::Edge, g.m(), 3, 6, seed);
            let c = lemma41_colouring(&g, &l).unwrap();
            assert!(satisfies(&g, &c, Property::StronglyRainbowConnected).unwrap());
        }
        for b in [3, 4] {
            let g = FamilySpec::Lemma42(b).build().unwrap();
            for seed in 0..50 {
                let l = random_lists(ItemMode::Edge, g.m(), 2, 4, seed);
                let c = lemma42_colouring(&g, &l).unwrap();
                assert!(
                    satisfies(&g, &c, Property::RainbowConnected).unwrap(),
                    "b={b} seed={seed}"
                );
            }
        }
        let g = FamilySpec::Lemma42(3).build().unwrap();
        let l = ListAssignment::new(ItemMode::Edge, vec![vec![1, 2]; g.m()]);
        assert!(satisfies(
            &g,
            &lemma42_colouring(&g, &l).unwrap(),
            Property::RainbowConnected
        )
        .unwrap());
        let c5 = FamilySpec::Cycle(5).build().unwrap();
        assert!(HubLayout::detect(&c5, false).is_err());
    }
}
