//! Sets of point ids below 64, stored as a bitmask.

use core::fmt;

/// Maximum number of points a [`PointSet`] can index.
pub const MAX_POINTS: usize = 64;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "at most {MAX_POINTS} points");
        if n == MAX_POINTS {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(p: usize) -> Self {
        PointSet(1u64 << p)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        ids.into_iter().fold(Self::EMPTY, |s, p| s.with(p))
    }

    #[inline]
    pub fn contains(self, p: usize) -> bool {
        p < MAX_POINTS && self.0 >> p & 1 == 1
    }

    pub fn with(self, p: usize) -> Self {
        PointSet(self.0 | 1u64 << p)
    }

    pub fn without(self, p: usize) -> Self {
        PointSet(self.0 & !(1u64 << p))
    }

    pub fn insert(&mut self, p: usize) {
        *self = self.with(p);
    }

    pub fn remove(&mut self, p: usize) {
        *self = self.without(p);
    }

    #[inline]
    pub fn union(self, o: Self) -> Self {
        PointSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Self) -> Self {
        PointSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Self) -> Self {
        PointSet(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Point ids in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let p = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(p)
        })
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(PointSet(cur))
        })
    }
}

impl fmt::Display for PointSet {
    /// `{p0,p2}` style, using `p` prefixed ids.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "p{p}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = PointSet::from_ids([0, 2]);
        let b = PointSet::from_ids([2, 3]);
        assert_eq!(a.union(b), PointSet::from_ids([0, 2, 3]));
        assert_eq!(a.intersection(b), PointSet::singleton(2));
        assert_eq!(a.difference(b), PointSet::singleton(0));
        assert!(PointSet::singleton(2).is_subset(a));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(a.to_string(), "{p0,p2}");
        assert_eq!(PointSet::full(64).len(), 64);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = PointSet::from_ids([1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(PointSet::EMPTY.subsets().count(), 1);
    }
}
