//! Brute-force reference implementations shared by the integration tests.

#![allow(dead_code)]

use std::collections::VecDeque;

use proptest::prelude::*;
use rainbow_core::Graph;

/// Connected graphs on `2..=max_n` vertices: a random tree plus random extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            parents,
            proptest::collection::vec(any::<bool>(), pairs),
        )
            .prop_map(|(n, parents, extra)| {
                let mut edges: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (p, i + 1))
                    .collect();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if extra[k] && !edges.contains(&(u, v)) {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
    })
}

pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|s| {
            let mut d = vec![usize::MAX; g.n()];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &(y, _) in g.incident(x) {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            d
        })
        .collect()
}

fn dfs(
    g: &Graph,
    c: &[u32],
    at: usize,
    to: usize,
    used: &mut Vec<u32>,
    seen: &mut Vec<bool>,
    budget: Option<usize>,
    dist_to: &[usize],
) -> bool {
    if at == to {
        return true;
    }
    for &(y, e) in g.incident(at) {
        if seen[y] || used.contains(&c[e]) {
            continue;
        }
        if let Some(left) = budget {
            if left == 0 || dist_to[y] + 1 > left {
                continue;
            }
        }
        seen[y] = true;
        used.push(c[e]);
        if dfs(g, c, y, to, used, seen, budget.map(|b| b - 1), dist_to) {
            return true;
        }
        used.pop();
        seen[y] = false;
    }
    false
}

/// Some `u`–`v` path (a geodesic when `strong`) has distinct colours.
pub fn pair_ok(g: &Graph, c: &[u32], u: usize, v: usize, strong: bool, d: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    let budget = strong.then_some(d[u][v]);
    dfs(g, c, u, v, &mut Vec::new(), &mut seen, budget, &d[v])
}

pub fn colouring_ok(g: &Graph, c: &[u32], strong: bool) -> bool {
    let d = distances(g);
    (0..g.n()).all(|u| (u + 1..g.n()).all(|v| pair_ok(g, c, u, v, strong, &d)))
}

/// Least `k` such that some `k`-colouring passes, by trying all of them.
pub fn naive_param(g: &Graph, strong: bool) -> usize {
    let m = g.m();
    for k in 1..=m.max(1) {
        let mut c = vec![0u32; m];
        loop {
            if colouring_ok(g, &c, strong) {
                return k;
            }
            let mut i = 0;
            while i < m && c[i] as usize == k - 1 {
                c[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            c[i] += 1;
        }
    }
    m
}

/// Every choice of one colour per list, with a callback that stops on `true`.
pub fn any_choice(lists: &[Vec<u32>], mut f: impl FnMut(&[u32]) -> bool) -> bool {
    let mut idx = vec![0usize; lists.len()];
    let mut c: Vec<u32> = lists.iter().map(|l| l[0]).collect();
    loop {
        if f(&c) {
            return true;
        }
        let mut i = 0;
        while i < lists.len() && idx[i] + 1 == lists[i].len() {
            idx[i] = 0;
            c[i] = lists[i][0];
            i += 1;
        }
        if i == lists.len() {
            return false;
        }
        idx[i] += 1;
        c[i] = lists[i][idx[i]];
    }
}

/// All `r`-subsets of `0..universe`.
pub fn subsets(universe: u32, r: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: u32, universe: u32, r: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..universe {
            cur.push(x);
            go(x + 1, universe, r, cur, out);
            cur.pop();
        }
    }
    go(0, universe, r, &mut cur, &mut out);
    out
}
