//! Colour sets, edge colourings and the properties judged on them.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Colour identifier. Ids are arbitrary non-negative integers; solvers use
/// dense ids starting at 0.
pub type Colour = u32;

/// Bitset of colour ids below [`ColourSet::CAPACITY`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColourSet(u64);

impl ColourSet {
    pub const CAPACITY: usize = 64;
    pub const EMPTY: ColourSet = ColourSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        ColourSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Colours `0..r`.
    #[inline]
    pub fn range(r: usize) -> Self {
        debug_assert!(r <= Self::CAPACITY);
        if r >= 64 {
            ColourSet(u64::MAX)
        } else {
            ColourSet((1u64 << r) - 1)
        }
    }

    #[inline]
    pub fn contains(self, c: Colour) -> bool {
        (c as usize) < Self::CAPACITY && self.0 >> c & 1 == 1
    }

    #[inline]
    pub fn with(self, c: Colour) -> Self {
        debug_assert!((c as usize) < Self::CAPACITY);
        ColourSet(self.0 | 1u64 << c)
    }

    #[inline]
    pub fn insert(&mut self, c: Colour) {
        *self = self.with(c);
    }

    #[inline]
    pub fn without(self, c: Colour) -> Self {
        ColourSet(self.0 & !(1u64 << c))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, o: ColourSet) -> Self {
        ColourSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: ColourSet) -> Self {
        ColourSet(self.0 & o.0)
    }

    #[inline]
    pub fn is_subset(self, o: ColourSet) -> bool {
        self.0 & !o.0 == 0
    }

    /// Least colour in the set.
    #[inline]
    pub fn min(self) -> Option<Colour> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn iter(self) -> impl Iterator<Item = Colour> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros();
                bits &= bits - 1;
                Some(c)
            }
        })
    }
}

impl FromIterator<Colour> for ColourSet {
    fn from_iter<I: IntoIterator<Item = Colour>>(iter: I) -> Self {
        iter.into_iter().fold(ColourSet::EMPTY, ColourSet::with)
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Sorted colour list, used as reachability state when a palette is wider
/// than [`ColourSet::CAPACITY`].
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct ColourList(SmallVec<[Colour; 8]>);

/// Set of used colours carried along a path.
pub trait UsedColours: Clone + Eq {
    fn empty() -> Self;
    fn contains(&self, c: Colour) -> bool;
    fn with(&self, c: Colour) -> Self;
    fn len(&self) -> usize;
    fn is_subset(&self, other: &Self) -> bool;
}

impl UsedColours for ColourSet {
    #[inline]
    fn empty() -> Self {
        ColourSet::EMPTY
    }
    #[inline]
    fn contains(&self, c: Colour) -> bool {
        ColourSet::contains(*self, c)
    }
    #[inline]
    fn with(&self, c: Colour) -> Self {
        ColourSet::with(*self, c)
    }
    #[inline]
    fn len(&self) -> usize {
        ColourSet::len(*self)
    }
    #[inline]
    fn is_subset(&self, other: &Self) -> bool {
        ColourSet::is_subset(*self, *other)
    }
}

impl UsedColours for ColourList {
    fn empty() -> Self {
        ColourList(SmallVec::new())
    }
    fn contains(&self, c: Colour) -> bool {
        self.0.binary_search(&c).is_ok()
    }
    fn with(&self, c: Colour) -> Self {
        let mut v = self.0.clone();
        if let Err(i) = v.binary_search(&c) {
            v.insert(i, c);
        }
        ColourList(v)
    }
    fn len(&self) -> usize {
        self.0.len()
    }
    fn is_subset(&self, other: &Self) -> bool {
        let mut j = 0;
        for &c in &self.0 {
            while j < other.0.len() && other.0[j] < c {
                j += 1;
            }
            if j == other.0.len() || other.0[j] != c {
                return false;
            }
            j += 1;
        }
        true
    }
}

/// Total map from item index (edge, or vertex for [`Property::ProperVertex`]) to colour.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeColouring {
    colours: Vec<Colour>,
}

impl EdgeColouring {
    pub fn new(colours: Vec<Colour>) -> Self {
        EdgeColouring { colours }
    }

    pub fn uniform(len: usize, c: Colour) -> Self {
        EdgeColouring {
            colours: vec![c; len],
        }
    }

    #[inline]
    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    #[inline]
    pub fn get(&self, i: usize) -> Colour {
        self.colours[i]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of distinct colours in use.
    pub fn palette_size(&self) -> usize {
        let mut v = self.colours.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    }

    /// Colours relabelled to `0..palette_size` by first appearance.
    pub fn normalised(&self) -> EdgeColouring {
        let mut map: Vec<(Colour, Colour)> = Vec::new();
        let colours = self
            .colours
            .iter()
            .map(|&c| match map.iter().find(|&&(k, _)| k == c) {
                Some(&(_, v)) => v,
                None => {
                    let v = map.len() as Colour;
                    map.push((c, v));
                    v
                }
            })
            .collect();
        EdgeColouring { colours }
    }

    /// Applies `f` to every colour.
    pub fn map(&self, f: impl Fn(Colour) -> Colour) -> EdgeColouring {
        EdgeColouring {
            colours: self.colours.iter().map(|&c| f(c)).collect(),
        }
    }
}

impl fmt::Debug for EdgeColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.colours)
    }
}

impl From<Vec<Colour>> for EdgeColouring {
    fn from(colours: Vec<Colour>) -> Self {
        EdgeColouring::new(colours)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Property {
    RainbowConnected,
    StronglyRainbowConnected,
    ProperEdge,
    /// The colouring is read as a vertex colouring.
    ProperVertex,
}

impl Property {
    pub fn is_rainbow(self) -> bool {
        matches!(
            self,
            Property::RainbowConnected | Property::StronglyRainbowConnected
        )
    }

    pub fn is_vertex(self) -> bool {
        self == Property::ProperVertex
    }

    /// Enlarging lists never destroys satisfiability. True for all four.
    pub fn monotone(self) -> bool {
        true
    }

    /// Number of coloured items for `g`.
    pub fn item_count(self, g: &crate::Graph) -> usize {
        if self.is_vertex() {
            g.n()
        } else {
            g.m()
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::RainbowConnected => "rainbow-connected",
            Property::StronglyRainbowConnected => "strongly-rainbow-connected",
            Property::ProperEdge => "proper-edge",
            Property::ProperVertex => "proper-vertex",
        })
    }
}
