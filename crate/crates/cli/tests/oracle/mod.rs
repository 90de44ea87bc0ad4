//! Reference implementations written without the library's solvers.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rainbow_core::Graph;

pub fn bfs(g: &Graph, s: usize) -> Vec<usize> {
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
}

pub fn diameter(g: &Graph) -> usize {
    (0..g.n()).flat_map(|s| bfs(g, s)).max().unwrap_or(0)
}

/// Vertices reachable from `u` by a walk with distinct colours (along
/// geodesics from `u` when `strong`), searching over (vertex, colours used).
fn reachable(g: &Graph, c: &[usize], u: usize, strong: bool) -> Vec<bool> {
    let d = bfs(g, u);
    let mut seen: HashSet<(usize, u128)> = HashSet::from([(u, 0)]);
    let mut hit = vec![false; g.n()];
    hit[u] = true;
    let mut q = VecDeque::from([(u, 0u128)]);
    while let Some((x, mask)) = q.pop_front() {
        for &(y, e) in g.incident(x) {
            let bit = 1u128 << c[e];
            if mask & bit != 0 || (strong && d[y] != d[x] + 1) {
                continue;
            }
            let state = (y, mask | bit);
            if seen.insert(state) {
                hit[y] = true;
                q.push_back(state);
            }
        }
    }
    hit
}

fn dense(c: &[u32]) -> Vec<usize> {
    let palette: BTreeSet<u32> = c.iter().copied().collect();
    assert!(palette.len() <= 128, "oracle handles at most 128 colours");
    c.iter().map(|x| palette.iter().position(|p| p == x).unwrap()).collect()
}

/// Every pair joined by a rainbow path (a rainbow geodesic when `strong`).
pub fn colouring_ok(g: &Graph, c: &[u32], strong: bool) -> bool {
    let c = dense(c);
    (0..g.n()).all(|u| reachable(g, &c, u, strong).iter().all(|&h| h))
}

fn paths(g: &Graph, c: &[u32], at: usize, to: usize, used: &mut Vec<u32>, on: &mut Vec<bool>, left: Option<usize>) -> bool {
    if at == to {
        return true;
    }
    if left == Some(0) {
        return false;
    }
    for &(y, e) in g.incident(at) {
        if on[y] || used.contains(&c[e]) {
            continue;
        }
        on[y] = true;
        used.push(c[e]);
        let found = paths(g, c, y, to, used, on, left.map(|l| l - 1));
        used.pop();
        on[y] = false;
        if found {
            return true;
        }
    }
    false
}

/// Same as [`colouring_ok`] by listing simple paths one by one.
pub fn colouring_ok_by_paths(g: &Graph, c: &[u32], strong: bool) -> bool {
    (0..g.n()).all(|u| {
        let d = bfs(g, u);
        (u + 1..g.n()).all(|v| {
            let mut on = vec![false; g.n()];
            on[u] = true;
            paths(g, c, u, v, &mut Vec::new(), &mut on, strong.then_some(d[v]))
        })
    })
}

/// True if some choice of one colour per list passes `f`.
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

pub fn lists_colourable(g: &Graph, lists: &[Vec<u32>], strong: bool) -> bool {
    any_choice(lists, |c| colouring_ok(g, c, strong))
}

/// Proper edge colouring with `k` colours by backtracking.
pub fn proper_edge_colourable(g: &Graph, k: u32) -> bool {
    fn go(g: &Graph, k: u32, e: usize, c: &mut Vec<u32>) -> bool {
        if e == g.m() {
            return true;
        }
        let (u, v) = g.edge(e);
        for col in 0..k {
            let clash = g.incident(u).iter().chain(g.incident(v)).any(|&(_, f)| f < e && c[f] == col);
            if !clash {
                c[e] = col;
                if go(g, k, e + 1, c) {
                    return true;
                }
            }
        }
        false
    }
    go(g, k, 0, &mut vec![0; g.m()])
}

pub fn is_proper_edge_colouring(g: &Graph, c: &[u32]) -> bool {
    (0..g.n()).all(|v| {
        let cols: Vec<u32> = g.incident(v).iter().map(|&(_, e)| c[e]).collect();
        let set: BTreeSet<u32> = cols.iter().copied().collect();
        set.len() == cols.len()
    })
}

/// Coefficient of `Π x_i^{t_i}` in `Π_{i<j} (x_i - x_j)`, expanding edge by
/// edge and dropping monomials that already exceed `t`.
pub fn poly_coefficient(g: &Graph, t: &[usize]) -> i128 {
    let mut poly: HashMap<Vec<u8>, i128> = HashMap::from([(vec![0u8; g.n()], 1)]);
    for &(u, v) in g.edges() {
        let (i, j) = (u.min(v), u.max(v));
        let mut next: HashMap<Vec<u8>, i128> = HashMap::new();
        for (mono, c) in &poly {
            if (mono[i] as usize) < t[i] {
                let mut a = mono.clone();
                a[i] += 1;
                *next.entry(a).or_default() += c;
            }
            if (mono[j] as usize) < t[j] {
                let mut b = mono.clone();
                b[j] += 1;
                *next.entry(b).or_default() -= c;
            }
        }
        next.retain(|_, c| *c != 0);
        poly = next;
    }
    let key: Vec<u8> = t.iter().map(|&x| x as u8).collect();
    poly.get(&key).copied().unwrap_or(0)
}

/// Random connected graph: a random tree plus each other pair with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Least relabelling of `lists` over every permutation of `0..universe`.
pub fn orbit_key(lists: &[Vec<u32>], universe: usize) -> Vec<Vec<u32>> {
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

/// Every assignment of `r`-subsets of `0..r·items` to `items` items.
pub fn all_assignments(items: usize, r: usize) -> Vec<Vec<Vec<u32>>> {
    let universe = (r * items) as u32;
    let mut subs: Vec<Vec<u32>> = Vec::new();
    for mask in 0u32..(1 << universe) {
        if mask.count_ones() as usize == r {
            subs.push((0..universe).filter(|b| mask >> b & 1 == 1).collect());
        }
    }
    let mut out = vec![Vec::new()];
    for _ in 0..items {
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
