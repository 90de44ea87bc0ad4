mod common;

use std::collections::{BTreeSet, HashMap};

use common::{any_choice, colouring_ok, connected_graph, subsets};
use proptest::prelude::*;
use rainbow_core::exact::ColouringOutcome;
use rainbow_core::lists::{canonical_list_assignments, ItemMode, ListAssignment};
use rainbow_core::listsolve::{decide_list_leq, exists_list_colouring, ListVerdict};
use rainbow_core::poly::{cns_choosable_certificate, graph_poly_coefficient, CnsOutcome};
use rainbow_core::sdr::{find_sdr, SdrOutcome};
use rainbow_core::search::SearchConfig;
use rainbow_core::{Graph, Property};

fn strong_of(p: Property) -> bool {
    p == Property::StronglyRainbowConnected
}

fn colourable(g: &Graph, lists: &[Vec<u32>], p: Property) -> bool {
    any_choice(lists, |c| colouring_ok(g, c, strong_of(p)))
}

/// Every `r`-list assignment over `r·m` colours, which covers every orbit.
fn all_assignments(m: usize, r: usize) -> Vec<Vec<Vec<u32>>> {
    let subs = subsets((r * m) as u32, r);
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|a: Vec<Vec<u32>>| {
                subs.iter().map(move |s| {
                    let mut b = a.clone();
                    b.push(s.clone());
                    b
                })
            })
            .collect();
    }
    out
}

#[test]
fn forall_decision_matches_brute_force() {
    let graphs = [
        ("path:2", Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()),
        (
            "path:3",
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
        ),
        (
            "triangle",
            Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
        ),
        (
            "star:3",
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        ),
        (
            "paw",
            Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(),
        ),
        (
            "cycle:4",
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
        ),
    ];
    let cfg = SearchConfig::default();
    for (name, g) in &graphs {
        for r in 1..=3 {
            if (subsets((r * g.m()) as u32, r).len() as f64).powi(g.m() as i32) > 60_000.0 {
                continue;
            }
            for p in [
                Property::RainbowConnected,
                Property::StronglyRainbowConnected,
            ] {
                let truth = all_assignments(g.m(), r)
                    .iter()
                    .all(|l| colourable(g, l, p));
                let d = decide_list_leq(g, p, r, &cfg).unwrap();
                match d.verdict {
                    ListVerdict::Holds => assert!(truth, "{name} {p:?} r={r}: claimed holds"),
                    ListVerdict::Fails(bad) => {
                        assert!(!truth, "{name} {p:?} r={r}: claimed fails");
                        assert_eq!(bad.r(), r);
                        assert!(
                            !colourable(g, bad.lists(), p),
                            "{name} {p:?} r={r}: counterexample colourable"
                        );
                    }
                    ListVerdict::Exceeded => panic!("{name} {p:?} r={r}: exceeded"),
                }
            }
        }
    }
}

/// Lexicographically least relabelling of `lists` over all colour permutations.
fn orbit_key(lists: &[Vec<u32>], universe: usize) -> Vec<Vec<u32>> {
    let mut perm: Vec<u32> = (0..universe as u32).collect();
    let mut best: Option<Vec<Vec<u32>>> = None;
    permute(&mut perm, 0, &mut |p| {
        let img: Vec<Vec<u32>> = lists
            .iter()
            .map(|l| {
                let mut s: Vec<u32> = l.iter().map(|&c| p[c as usize]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        if best.as_ref().map_or(true, |b| img < *b) {
            best = Some(img);
        }
    });
    best.unwrap()
}

fn permute(p: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

#[test]
fn canonical_enumeration_hits_each_orbit_once() {
    for (items, r) in [
        (1, 1),
        (2, 1),
        (3, 1),
        (4, 1),
        (5, 1),
        (1, 2),
        (2, 2),
        (3, 2),
        (2, 3),
    ] {
        let universe = items * r;
        let orbits: BTreeSet<Vec<Vec<u32>>> = all_assignments(items, r)
            .iter()
            .map(|l| orbit_key(l, universe))
            .collect();
        let listed: Vec<ListAssignment> = canonical_list_assignments(ItemMode::Edge, items, r)
            .unwrap()
            .collect();
        let keys: BTreeSet<Vec<Vec<u32>>> = listed
            .iter()
            .map(|l| {
                assert!(l.lists().iter().all(|x| x.len() == r));
                assert!(l.universe().iter().all(|&c| (c as usize) < universe));
                orbit_key(l.lists(), universe)
            })
            .collect();
        assert_eq!(
            keys.len(),
            listed.len(),
            "duplicate orbit for items={items} r={r}"
        );
        assert_eq!(keys, orbits, "items={items} r={r}");
    }
}

fn lists_strategy(
    max_items: usize,
    max_r: usize,
    universe: u32,
) -> impl Strategy<Value = Vec<Vec<u32>>> {
    (1..=max_r).prop_flat_map(move |r| {
        proptest::collection::vec(
            proptest::sample::subsequence((0..universe).collect::<Vec<u32>>(), r),
            1..=max_items,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_round_trips(lists in lists_strategy(5, 3, 12), shift in 0u32..50) {
        let a = ListAssignment::new(ItemMode::Edge, lists.clone());
        let c = a.canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        let moved = a.map_colours(|x| (x * 7 + shift) % 97);
        prop_assert_eq!(moved.canonical(), c.clone());
        let mut buf = Vec::new();
        a.write_text(&mut buf).unwrap();
        let back = ListAssignment::read_text(ItemMode::Edge, &buf[..]).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn list_colouring_search_matches_brute_force(
        g in connected_graph(5).prop_filter("small", |g| g.m() <= 6),
        raw in proptest::collection::vec(proptest::sample::subsequence((0u32..4).collect::<Vec<_>>(), 2), 6),
    ) {
        let lists: Vec<Vec<u32>> = raw[..g.m()].to_vec();
        let a = ListAssignment::new(ItemMode::Edge, lists.clone());
        for p in [Property::RainbowConnected, Property::StronglyRainbowConnected] {
            let s = exists_list_colouring(&g, &a, p, &SearchConfig::default()).unwrap();
            let truth = colourable(&g, &lists, p);
            match s.outcome {
                ColouringOutcome::Witness(c) => {
                    prop_assert!(truth);
                    prop_assert!(colouring_ok(&g, c.colours(), strong_of(p)));
                    prop_assert!((0..g.m()).all(|e| lists[e].contains(&c.get(e))));
                }
                ColouringOutcome::None => prop_assert!(!truth),
                ColouringOutcome::Exceeded => prop_assert!(false, "exceeded"),
            }
        }
    }

    #[test]
    fn sdr_matches_brute_force(lists in proptest::collection::vec(proptest::sample::subsequence((0u32..5).collect::<Vec<_>>(), 1..=3), 1..=6)) {
        let truth = any_choice(&lists, |c| {
            let mut s = c.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len() == c.len()
        });
        match find_sdr(&lists) {
            SdrOutcome::Representatives(rep) => {
                prop_assert!(truth);
                prop_assert!(rep.iter().zip(&lists).all(|(c, l)| l.contains(c)));
                let distinct: BTreeSet<u32> = rep.iter().copied().collect();
                prop_assert_eq!(distinct.len(), lists.len());
            }
            SdrOutcome::HallViolation(items) => {
                prop_assert!(!truth);
                let union: BTreeSet<u32> = items.iter().flat_map(|&i| lists[i].iter().copied()).collect();
                prop_assert!(union.len() < items.len());
            }
        }
    }

    #[test]
    fn coefficient_matches_expansion(g in connected_graph(6).prop_filter("m <= 8", |g| g.m() <= 8)) {
        let expanded = expand(&g);
        for (t, coef) in &expanded {
            let t: Vec<usize> = t.iter().map(|&x| x as usize).collect();
            prop_assert_eq!(graph_poly_coefficient(&g, &t).unwrap().to_string(), coef.to_string());
        }
        // A vector of the right degree absent from the expansion has coefficient zero.
        let mut t = vec![0usize; g.n()];
        t[0] = g.m();
        let key: Vec<u8> = t.iter().map(|&x| x as u8).collect();
        let want = expanded.get(&key).copied().unwrap_or(0);
        prop_assert_eq!(graph_poly_coefficient(&g, &t).unwrap().to_string(), want.to_string());
    }
}

/// `Π_{(i,j), i<j} (x_i - x_j)` expanded term by term.
fn expand(g: &Graph) -> HashMap<Vec<u8>, i64> {
    let mut poly: HashMap<Vec<u8>, i64> = HashMap::from([(vec![0u8; g.n()], 1)]);
    for &(u, v) in g.edges() {
        let (i, j) = (u.min(v), u.max(v));
        let mut next: HashMap<Vec<u8>, i64> = HashMap::new();
        for (mono, c) in &poly {
            let mut a = mono.clone();
            a[i] += 1;
            *next.entry(a).or_default() += c;
            let mut b = mono.clone();
            b[j] += 1;
            *next.entry(b).or_default() -= c;
        }
        poly = next;
    }
    poly.retain(|_, c| *c != 0);
    poly
}

#[test]
fn even_cycles_have_two_choosability_certificates() {
    let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    match cns_choosable_certificate(&c6, 2, 100).unwrap() {
        CnsOutcome::Certificate {
            exponents,
            coefficient,
        } => {
            assert!(exponents.iter().all(|&t| t < 2));
            assert_eq!(
                expand(&c6)[&exponents.iter().map(|&x| x as u8).collect::<Vec<_>>()].to_string(),
                coefficient.to_string()
            );
        }
        other => panic!("{other:?}"),
    }
}
