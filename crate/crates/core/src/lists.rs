//! List assignments and their canonical enumeration up to colour renaming.
//!
//! Canonical form: give colour `c` the key `Σ 2^(63-i)` over the items `i`
//! whose list contains `c`. An assignment is canonical iff keys are
//! non-increasing in the colour id. Every assignment has exactly one
//! canonical relabelling, since an orbit is determined by the multiset of
//! colour incidence vectors. Keys only gain lower bits as items are added,
//! so a prefix whose keys are out of order has no canonical completion.

use std::fmt;
use std::io::{BufRead, Write};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colour::{Colour, ColourSet};
use crate::error::{Error, Result};

/// Whether lists attach to edges or to vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ItemMode {
    Edge,
    Vertex,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ListAssignment {
    mode: ItemMode,
    /// Sorted, duplicate-free lists.
    lists: Vec<Vec<Colour>>,
}

impl fmt::Debug for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.mode, self.lists)
    }
}

impl ListAssignment {
    pub fn new(mode: ItemMode, lists: Vec<Vec<Colour>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ListAssignment { mode, lists }
    }

    pub fn from_sets(mode: ItemMode, sets: &[ColourSet]) -> Self {
        ListAssignment {
            mode,
            lists: sets.iter().map(|s| s.iter().collect()).collect(),
        }
    }

    /// Every item gets `{0, .., r-1}`.
    pub fn constant(mode: ItemMode, items: usize, r: usize) -> Self {
        ListAssignment {
            mode,
            lists: vec![(0..r as Colour).collect(); items],
        }
    }

    pub fn mode(&self) -> ItemMode {
        self.mode
    }

    pub fn lists(&self) -> &[Vec<Colour>] {
        &self.lists
    }

    pub fn list(&self, i: usize) -> &[Colour] {
        &self.lists[i]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// Smallest list size.
    pub fn r(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Distinct colours used, sorted.
    pub fn universe(&self) -> Vec<Colour> {
        let mut u: Vec<Colour> = self.lists.iter().flatten().copied().collect();
        u.sort_unstable();
        u.dedup();
        u
    }

    /// Lists relabelled to `0..k` with the map back to original ids.
    pub fn densified(&self) -> (Vec<Vec<Colour>>, Vec<Colour>) {
        let uni = self.universe();
        let lists = self
            .lists
            .iter()
            .map(|l| {
                l.iter()
                    .map(|c| uni.binary_search(c).expect("in universe") as Colour)
                    .collect()
            })
            .collect();
        (lists, uni)
    }

    /// Lists as bitsets; fails if a colour id is 64 or more.
    pub fn to_sets(&self) -> Result<Vec<ColourSet>> {
        self.lists
            .iter()
            .map(|l| {
                if let Some(&c) = l.iter().find(|&&c| c as usize >= ColourSet::CAPACITY) {
                    Err(Error::Capacity {
                        requested: c as usize + 1,
                        capacity: ColourSet::CAPACITY,
                    })
                } else {
                    Ok(l.iter().copied().collect())
                }
            })
            .collect()
    }

    /// Whether `self[i] ⊆ other[i]` for all items.
    pub fn is_pointwise_subset(&self, other: &ListAssignment) -> bool {
        self.lists.len() == other.lists.len()
            && self
                .lists
                .iter()
                .zip(&other.lists)
                .all(|(a, b)| a.iter().all(|c| b.binary_search(c).is_ok()))
    }

    /// Applies `f` to every colour.
    pub fn map_colours(&self, f: impl Fn(Colour) -> Colour) -> ListAssignment {
        ListAssignment::new(
            self.mode,
            self.lists
                .iter()
                .map(|l| l.iter().map(|&c| f(c)).collect())
                .collect(),
        )
    }

    /// Reads `item_index: c1,c2,...` lines; `#` starts a comment line.
    pub fn read_text<R: BufRead>(mode: ItemMode, reader: R) -> Result<ListAssignment> {
        let mut entries: Vec<(usize, Vec<Colour>)> = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::Io(e.to_string()))?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let perr = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            let (idx, rest) = t
                .split_once(':')
                .ok_or_else(|| perr("expected `item_index: c1,c2,...`".into()))?;
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| perr(format!("bad item index {:?}", idx.trim())))?;
            let cols = rest
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<Colour>()
                        .map_err(|_| perr(format!("bad colour {:?}", c.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push((idx, cols));
        }
        entries.sort_by_key(|(i, _)| *i);
        for (k, (i, _)) in entries.iter().enumerate() {
            if *i != k {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("item indices must be 0..{} without gaps", entries.len()),
                });
            }
        }
        Ok(ListAssignment::new(
            mode,
            entries.into_iter().map(|(_, l)| l).collect(),
        ))
    }

    pub fn write_text<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for (i, l) in self.lists.iter().enumerate() {
            let s: Vec<String> = l.iter().map(|c| c.to_string()).collect();
            writeln!(w, "{i}: {}", s.join(","))?;
        }
        Ok(())
    }

    /// Canonical relabelling (the representative emitted by
    /// [`canonical_list_assignments`] for this orbit).
    pub fn canonical(&self) -> ListAssignment {
        let uni = self.universe();
        let mut keyed: Vec<(u128, Colour)> = uni
            .iter()
            .map(|&c| {
                let key = self
                    .lists
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| l.binary_search(&c).is_ok())
                    .fold(0u128, |k, (i, _)| k | 1u128 << (127 - i));
                (key, c)
            })
            .collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let rank = |c: Colour| keyed.iter().position(|&(_, d)| d == c).expect("present") as Colour;
        self.map_colours(rank)
    }
}

/// Deterministic sampler: ChaCha8 seeded from a `u64`. Each list is a
/// uniform `r`-subset of `0..universe`, drawn item by item.
pub fn random_lists(
    mode: ItemMode,
    items: usize,
    r: usize,
    universe: usize,
    seed: u64,
) -> ListAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_lists_with(&mut rng, mode, items, r, universe)
}

pub fn random_lists_with(
    rng: &mut ChaCha8Rng,
    mode: ItemMode,
    items: usize,
    r: usize,
    universe: usize,
) -> ListAssignment {
    assert!(r <= universe, "list size exceeds universe");
    let lists = (0..items)
        .map(|_| {
            sample(rng, universe, r)
                .into_iter()
                .map(|c| c as Colour)
                .collect()
        })
        .collect();
    ListAssignment::new(mode, lists)
}

/// Per-node state of the canonical enumeration tree.
#[derive(Clone, Debug)]
pub struct CanonicalNode {
    /// Lists chosen for items `0..depth`.
    pub lists: Vec<ColourSet>,
    /// Incidence key per colour id in use.
    keys: Vec<u64>,
}

impl CanonicalNode {
    pub fn root() -> Self {
        CanonicalNode {
            lists: Vec::new(),
            keys: Vec::new(),
        }
    }

    pub fn depth(&self) -> usize {
        self.lists.len()
    }

    /// Number of colours used so far.
    pub fn colours_used(&self) -> usize {
        self.keys.len()
    }

    /// Children in a fixed order: lists reusing more existing colours first,
    /// subsets in lexicographic order.
    pub fn children(&self, r: usize) -> Vec<CanonicalNode> {
        let i = self.depth();
        debug_assert!(i < 64);
        let bit = 1u64 << (63 - i);
        let k = self.keys.len();
        let mut out = Vec::new();
        for s in (0..=r.min(k)).rev() {
            let fresh = r - s;
            if k + fresh > ColourSet::CAPACITY {
                continue;
            }
            for subset in Combinations::new(k, s) {
                let mut keys = self.keys.clone();
                for &c in &subset {
                    keys[c] |= bit;
                }
                keys.extend(std::iter::repeat_n(bit, fresh));
                // Only neighbours of touched colours can have changed order.
                let ok = subset.iter().all(|&c| {
                    (c == 0 || keys[c - 1] >= keys[c])
                        && (c + 1 >= keys.len() || keys[c] >= keys[c + 1])
                });
                if !ok {
                    continue;
                }
                let mut list: ColourSet = subset.iter().map(|&c| c as Colour).collect();
                for c in k..k + fresh {
                    list.insert(c as Colour);
                }
                let mut lists = self.lists.clone();
                lists.push(list);
                out.push(CanonicalNode { lists, keys });
            }
        }
        out
    }

    /// Completes the node by giving every remaining item fresh colours.
    pub fn complete_fresh(&self, items: usize, r: usize) -> Vec<ColourSet> {
        let mut lists = self.lists.clone();
        let mut next = self.keys.len();
        while lists.len() < items {
            let l: ColourSet = (next..next + r).map(|c| c as Colour).collect();
            next += r;
            lists.push(l);
        }
        lists
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            cur: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.cur.as_mut()?;
        let out = cur.clone();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

fn check_capacity(items: usize, r: usize) -> Result<()> {
    if r == 0 || items == 0 {
        return Err(Error::Precondition(
            "item count and r must be positive".into(),
        ));
    }
    if r * items > ColourSet::CAPACITY {
        return Err(Error::Capacity {
            requested: r * items,
            capacity: ColourSet::CAPACITY,
        });
    }
    Ok(())
}

/// Streams one exact-size-`r` list assignment per colour-renaming orbit.
pub fn canonical_list_assignments(
    mode: ItemMode,
    items: usize,
    r: usize,
) -> Result<CanonicalLists> {
    check_capacity(items, r)?;
    Ok(CanonicalLists {
        mode,
        items,
        r,
        stack: vec![(vec![CanonicalNode::root()], 0)],
    })
}

pub struct CanonicalLists {
    mode: ItemMode,
    items: usize,
    r: usize,
    /// Sibling lists with the index of the next sibling to visit.
    stack: Vec<(Vec<CanonicalNode>, usize)>,
}

impl Iterator for CanonicalLists {
    type Item = ListAssignment;
    fn next(&mut self) -> Option<ListAssignment> {
        loop {
            let (siblings, idx) = self.stack.last_mut()?;
            if *idx >= siblings.len() {
                self.stack.pop();
                continue;
            }
            let node = siblings[*idx].clone();
            *idx += 1;
            if node.depth() == self.items {
                return Some(ListAssignment::from_sets(self.mode, &node.lists));
            }
            let kids = node.children(self.r);
            self.stack.push((kids, 0));
        }
    }
}

/// Checks the capacity precondition of the enumeration.
pub fn enumeration_capacity(items: usize, r: usize) -> Result<()> {
    check_capacity(items, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn sets(l: &ListAssignment) -> Vec<Vec<Colour>> {
        l.lists().to_vec()
    }

    #[test]
    fn tiny_cases() {
        let one: Vec<_> = canonical_list_assignments(ItemMode::Edge, 1, 2)
            .unwrap()
            .collect();
        assert_eq!(one.len(), 1);
        assert_eq!(sets(&one[0]), vec![vec![0, 1]]);
        let two: Vec<_> = canonical_list_assignments(ItemMode::Edge, 2, 1)
            .unwrap()
            .map(|l| sets(&l))
            .collect();
        assert_eq!(two, vec![vec![vec![0], vec![0]], vec![vec![0], vec![1]]]);
        assert!(canonical_list_assignments(ItemMode::Edge, 20, 4).is_err());
    }

    /// Orbit count by brute force: canonicalise every assignment of
    /// 2-subsets of a 6-colour universe to 3 items.
    #[test]
    fn orbit_count_matches_brute_force() {
        let subsets: Vec<Vec<Colour>> = (0..6)
            .flat_map(|a| (a + 1..6).map(move |b| vec![a, b]))
            .collect();
        let mut orbits = HashSet::new();
        for a in &subsets {
            for b in &subsets {
                for c in &subsets {
                    let l =
                        ListAssignment::new(ItemMode::Edge, vec![a.clone(), b.clone(), c.clone()]);
                    orbits.insert(brute_canonical(&l));
                }
            }
        }
        let emitted: Vec<_> = canonical_list_assignments(ItemMode::Edge, 3, 2)
            .unwrap()
            .collect();
        assert_eq!(emitted.len(), orbits.len());
        let emitted_keys: HashSet<_> = emitted.iter().map(brute_canonical).collect();
        assert_eq!(emitted_keys, orbits);
    }

    /// Orbit representative by minimising over all relabellings of the used colours.
    fn brute_canonical(l: &ListAssignment) -> Vec<Vec<Colour>> {
        let uni = l.universe();
        let mut ids: Vec<Colour> = (0..uni.len() as Colour).collect();
        let mut best: Option<Vec<Vec<Colour>>> = None;
        permute(&mut ids, 0, &mut |perm| {
            let v = sets(&l.map_colours(|c| perm[uni.binary_search(&c).unwrap()]));
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        });
        best.unwrap()
    }

    fn permute(xs: &mut Vec<Colour>, k: usize, f: &mut dyn FnMut(&[Colour])) {
        if k == xs.len() {
            f(xs);
            return;
        }
        for i in k..xs.len() {
            xs.swap(k, i);
            permute(xs, k + 1, f);
            xs.swap(k, i);
        }
    }

    #[test]
    fn file_round_trip() {
        let l = ListAssignment::new(ItemMode::Edge, vec![vec![3, 1], vec![2, 7]]);
        let mut buf = Vec::new();
        l.write_text(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "0: 1,3\n1: 2,7\n");
        let back =
            ListAssignment::read_text(ItemMode::Edge, &b"# c\n1: 7,2\n0: 1,3\n"[..]).unwrap();
        assert_eq!(back, l);
        assert!(ListAssignment::read_text(ItemMode::Edge, &b"0 1,2\n"[..]).is_err());
        assert!(ListAssignment::read_text(ItemMode::Edge, &b"1: 1,2\n"[..]).is_err());
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = random_lists(ItemMode::Edge, 5, 3, 15, 9);
        let b = random_lists(ItemMode::Edge, 5, 3, 15, 9);
        assert_eq!(a, b);
        assert!(a
            .lists()
            .iter()
            .all(|l| l.len() == 3 && l.iter().all(|&c| c < 15)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        /// Random assignment, random renaming, canonicalise: the result is emitted.
        #[test]
        fn canonical_round_trip(items in 1usize..=4, r in 1usize..=2, seed in any::<u64>(), shift in 1u32..50) {
            let universe = r * items;
            let l = random_lists(ItemMode::Edge, items, r, universe, seed);
            let renamed = l.map_colours(|c| (c * 7 + shift) % 1000);
            let canon = renamed.canonical();
            prop_assert_eq!(canon.canonical(), canon.clone());
            if l.universe().len() <= 7 {
                prop_assert_eq!(brute_canonical(&canon), brute_canonical(&l));
            }
            let emitted: HashSet<_> = canonical_list_assignments(ItemMode::Edge, items, r).unwrap().collect();
            prop_assert!(emitted.contains(&canon));
        }
    }
}
