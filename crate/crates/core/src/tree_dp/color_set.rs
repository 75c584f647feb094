use std::fmt;

use crate::graph::Color;

/// Subset of color ids `1..=64` as a bit mask (bit `c - 1` for color `c`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const MAX_COLORS: usize = 64;
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn single(c: Color) -> Self {
        debug_assert!(c >= 1 && c as usize <= Self::MAX_COLORS);
        ColorSet(1 << (c - 1))
    }

    pub fn from_colors(colors: impl IntoIterator<Item = Color>) -> Self {
        colors.into_iter().fold(Self::EMPTY, |acc, c| acc | Self::single(c))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, c: Color) -> bool {
        c >= 1 && c as usize <= Self::MAX_COLORS && self.0 >> (c - 1) & 1 == 1
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn colors(self) -> impl Iterator<Item = Color> {
        (0..64u32).filter(move |b| self.0 >> b & 1 == 1).map(|b| b + 1)
    }

    /// Nonempty subsets in increasing numeric (bit) order.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = ColorSet> {
        let full = self.0;
        let mut next = Some(full & full.wrapping_neg());
        std::iter::from_fn(move || {
            let cur = next?;
            if cur == 0 {
                return None;
            }
            // next submask of `full` above `cur`
            let succ = (cur | !full).wrapping_add(1) & full;
            next = (succ != 0).then_some(succ);
            Some(ColorSet(cur))
        })
    }
}

impl std::ops::BitOr for ColorSet {
    type Output = ColorSet;

    fn bitor(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for ColorSet {
    type Output = ColorSet;

    fn bitand(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for ColorSet {
    type Output = ColorSet;

    fn sub(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.colors()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_bit_order() {
        let s = ColorSet::from_colors([1, 3]);
        let subs: Vec<u64> = s.nonempty_subsets().map(ColorSet::bits).collect();
        assert_eq!(subs, vec![0b001, 0b100, 0b101]);
        assert_eq!(ColorSet::EMPTY.nonempty_subsets().count(), 0);
        assert_eq!(ColorSet::from_colors(1..=5).nonempty_subsets().count(), 31);
    }

    #[test]
    fn set_algebra() {
        let a = ColorSet::from_colors([1, 2]);
        let b = ColorSet::single(2);
        assert!(b.is_subset(a) && !a.is_subset(b));
        assert_eq!(a - b, ColorSet::single(1));
        assert_eq!((a & b).len(), 1);
        assert!(a.contains(1) && !a.contains(3) && !a.contains(0));
        assert_eq!(ColorSet::single(64).colors().collect::<Vec<_>>(), vec![64]);
    }
}
