//! Systems of distinct representatives by augmenting paths.

use crate::colour::Colour;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SdrOutcome {
    /// One representative per list, pairwise distinct.
    Representatives(Vec<Colour>),
    /// Items whose lists jointly hold fewer colours than there are items.
    HallViolation(Vec<usize>),
}

/// Finds an SDR of `lists`, or a set violating Hall's condition.
pub fn find_sdr(lists: &[Vec<Colour>]) -> SdrOutcome {
    let mut universe: Vec<Colour> = lists.iter().flatten().copied().collect();
    universe.sort_unstable();
    universe.dedup();
    let idx = |c: Colour| universe.binary_search(&c).expect("in universe");
    let adj: Vec<Vec<usize>> = lists
        .iter()
        .map(|l| l.iter().map(|&c| idx(c)).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; universe.len()];
    for item in 0..lists.len() {
        let mut seen_colour = vec![false; universe.len()];
        let mut seen_item = vec![false; lists.len()];
        if !augment(item, &adj, &mut owner, &mut seen_colour, &mut seen_item) {
            // Items reachable by alternating paths from `item` see only
            // colours matched inside the set, one fewer than its size.
            let set: Vec<usize> = (0..lists.len()).filter(|&i| seen_item[i]).collect();
            return SdrOutcome::HallViolation(set);
        }
    }
    let mut rep = vec![0 as Colour; lists.len()];
    for (c, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            rep[*i] = universe[c];
        }
    }
    SdrOutcome::Representatives(rep)
}

fn augment(
    item: usize,
    adj: &[Vec<usize>],
    owner: &mut [Option<usize>],
    seen_colour: &mut [bool],
    seen_item: &mut [bool],
) -> bool {
    seen_item[item] = true;
    for &c in &adj[item] {
        if seen_colour[c] {
            continue;
        }
        seen_colour[c] = true;
        let free = match owner[c] {
            None => true,
            Some(j) => augment(j, adj, owner, seen_colour, seen_item),
        };
        if free {
            owner[c] = Some(item);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn union_size(lists: &[Vec<Colour>], set: &[usize]) -> usize {
        let mut u: Vec<Colour> = set.iter().flat_map(|&i| lists[i].iter().copied()).collect();
        u.sort_unstable();
        u.dedup();
        u.len()
    }

    #[test]
    fn examples() {
        let l = vec![vec![1, 2], vec![2, 3], vec![1, 3]];
        match find_sdr(&l) {
            SdrOutcome::Representatives(r) => {
                let mut s = r.clone();
                s.sort_unstable();
                s.dedup();
                assert_eq!(s.len(), 3);
                for (i, c) in r.iter().enumerate() {
                    assert!(l[i].contains(c));
                }
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            find_sdr(&[vec![1], vec![1]]),
            SdrOutcome::HallViolation(vec![0, 1])
        );
    }

    #[test]
    fn twelve_lists_of_eleven_not_all_equal() {
        let mut lists: Vec<Vec<Colour>> = vec![(1..=11).collect(); 12];
        lists[7] = (2..=12).collect();
        assert!(matches!(find_sdr(&lists), SdrOutcome::Representatives(_)));
        let constant: Vec<Vec<Colour>> = vec![(1..=11).collect(); 12];
        match find_sdr(&constant) {
            SdrOutcome::HallViolation(s) => assert!(union_size(&constant, &s) < s.len()),
            other => panic!("{other:?}"),
        }
    }

    proptest! {
        #[test]
        fn outcome_is_certified(lists in proptest::collection::vec(proptest::collection::vec(0u32..6, 1..4), 1..7)) {
            let lists: Vec<Vec<Colour>> = lists.into_iter().map(|mut l| { l.sort_unstable(); l.dedup(); l }).collect();
            match find_sdr(&lists) {
                SdrOutcome::Representatives(r) => {
                    let mut s = r.clone();
                    s.sort_unstable();
                    s.dedup();
                    prop_assert_eq!(s.len(), lists.len());
                    for (i, c) in r.iter().enumerate() {
                        prop_assert!(lists[i].contains(c));
                    }
                }
                SdrOutcome::HallViolation(set) => {
                    prop_assert!(union_size(&lists, &set) < set.len());
                }
            }
        }
    }
}
