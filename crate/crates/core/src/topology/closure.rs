//! Closed sets of the point closure, written `C ∪ F` with `C` a member of
//! the family and `F` a finite set of named points.

use alloc::vec::Vec;

use super::{ClosedSetFamily, Difference, TopologyError};
use crate::pointset::PointSet;

/// Largest number of named points [`point_closure`] will enumerate over.
pub const MAX_NAMED_POINTS: usize = 12;

/// The set `C ∪ F`. Canonical when `C` is the largest member inside the set
/// and `F` is disjoint from `C`; canonical pairs are equal iff their sets are.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClosedPair {
    pub c: usize,
    pub f: PointSet,
}

impl ClosedPair {
    pub fn new(c: usize, f: PointSet) -> Self {
        Self { c, f }
    }
}

fn check<T: ClosedSetFamily + ?Sized>(fam: &T, p: ClosedPair) -> Result<(), TopologyError> {
    if p.c >= fam.member_count() {
        return Err(TopologyError::UnknownMember(p.c));
    }
    let named = PointSet::full(fam.named_points());
    if let Some(q) = p.f.difference(named).iter().next() {
        return Err(TopologyError::UnknownPoint(q));
    }
    Ok(())
}

fn union_of<T: ClosedSetFamily + ?Sized>(fam: &T, a: usize, b: usize) -> Result<usize, TopologyError> {
    fam.union(a, b).ok_or(TopologyError::UndeclaredUnion(a, b))
}

fn intersection_of<T: ClosedSetFamily + ?Sized>(
    fam: &T,
    a: usize,
    b: usize,
) -> Result<usize, TopologyError> {
    fam.intersection(a, b)
        .ok_or(TopologyError::UndeclaredIntersection(a, b))
}

/// Is member `d` contained in `C ∪ F`?
fn member_within<T: ClosedSetFamily + ?Sized>(fam: &T, d: usize, p: ClosedPair) -> bool {
    match fam.difference(d, p.c) {
        Difference::Finite(s) => s.is_subset(p.f),
        Difference::Infinite => false,
    }
}

pub fn canonicalize<T: ClosedSetFamily + ?Sized>(
    fam: &T,
    p: ClosedPair,
) -> Result<ClosedPair, TopologyError> {
    check(fam, p)?;
    let mut c = p.c;
    for d in 0..fam.member_count() {
        if d != c && member_within(fam, d, p) {
            c = union_of(fam, c, d)?;
        }
    }
    Ok(ClosedPair {
        c,
        f: p.f.difference(fam.points_in(c)),
    })
}

/// The points of `C ∪ F`, for finite spaces only.
pub fn pair_points<T: ClosedSetFamily + ?Sized>(fam: &T, p: ClosedPair) -> Option<PointSet> {
    fam.is_finite_space()
        .then(|| fam.points_in(p.c).union(p.f))
}

/// `x ⊆ y` as sets.
pub fn pair_subset<T: ClosedSetFamily + ?Sized>(fam: &T, x: ClosedPair, y: ClosedPair) -> bool {
    member_within(fam, x.c, y) && x.f.is_subset(fam.points_in(y.c).union(y.f))
}

pub fn pc_union<T: ClosedSetFamily + ?Sized>(
    fam: &T,
    pairs: &[ClosedPair],
) -> Result<ClosedPair, TopologyError> {
    let mut c = fam.empty();
    let mut f = PointSet::EMPTY;
    for &p in pairs {
        check(fam, p)?;
        c = union_of(fam, c, p.c)?;
        f = f.union(p.f);
    }
    canonicalize(
        fam,
        ClosedPair {
            c,
            f: f.difference(fam.points_in(c)),
        },
    )
}

/// Intersection of a family of closed sets. `C` is the least finite
/// intersection of the members involved, found by intersecting until nothing
/// shrinks; `F` keeps the finite points lying in every set but outside `C`.
pub fn pc_intersect<T: ClosedSetFamily + ?Sized>(
    fam: &T,
    pairs: &[ClosedPair],
) -> Result<ClosedPair, TopologyError> {
    for &p in pairs {
        check(fam, p)?;
    }
    let Some(first) = pairs.first() else {
        return Ok(ClosedPair {
            c: fam.all(),
            f: PointSet::EMPTY,
        });
    };
    let mut c = first.c;
    loop {
        let mut shrunk = false;
        for p in pairs {
            let next = intersection_of(fam, c, p.c)?;
            if next != c {
                c = next;
                shrunk = true;
            }
        }
        if !shrunk {
            break;
        }
    }
    let candidates = pairs.iter().fold(PointSet::EMPTY, |acc, p| acc.union(p.f));
    let f = candidates
        .iter()
        .filter(|&q| {
            pairs
                .iter()
                .all(|p| fam.points_in(p.c).union(p.f).contains(q))
        })
        .fold(PointSet::EMPTY, PointSet::with)
        .difference(fam.points_in(c));
    canonicalize(fam, ClosedPair { c, f })
}

/// Every closed set of the point closure, as canonical pairs ordered by
/// member index and then by finite part.
pub fn point_closure<T: ClosedSetFamily + ?Sized>(fam: &T) -> Result<Vec<ClosedPair>, TopologyError> {
    let n = fam.named_points();
    if n > MAX_NAMED_POINTS {
        return Err(TopologyError::TooManyPoints {
            count: n,
            limit: MAX_NAMED_POINTS,
        });
    }
    let named = PointSet::full(n);
    let mut out = Vec::new();
    for c in 0..fam.member_count() {
        for f in named.difference(fam.points_in(c)).subsets() {
            let p = ClosedPair { c, f };
            if canonicalize(fam, p)? == p {
                out.push(p);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    /// Least 1-based `m` with `X_i = X_m` for all `i >= m`.
    pub index: usize,
    /// The chain rewritten so that the members descend.
    pub normalized: Vec<ClosedPair>,
    /// 1-based position from which the normalized members are constant.
    pub members_stable_from: usize,
}

/// Stabilization index of a descending chain. The chain is first rewritten
/// with `C_i := C_i ∩ C_{i-1}` and `F_i := (C_i ∩ F_{i-1}) ∪ F_i`, so the
/// members descend; the index is then read off the canonical forms.
pub fn chain_stabilize<T: ClosedSetFamily + ?Sized>(
    fam: &T,
    chain: &[ClosedPair],
) -> Result<ChainReport, TopologyError> {
    if chain.is_empty() {
        return Err(TopologyError::EmptyChain);
    }
    for &p in chain {
        check(fam, p)?;
    }
    for (i, w) in chain.windows(2).enumerate() {
        if !pair_subset(fam, w[1], w[0]) {
            return Err(TopologyError::NotDescending(i + 2));
        }
    }
    let mut normalized = Vec::with_capacity(chain.len());
    normalized.push(chain[0]);
    for &p in &chain[1..] {
        let prev = *normalized.last().expect("nonempty");
        let c = intersection_of(fam, p.c, prev.c)?;
        let f = fam.points_in(p.c).intersection(prev.f).union(p.f);
        normalized.push(ClosedPair { c, f });
    }
    let last_c = normalized.last().expect("nonempty").c;
    let members_stable_from = normalized
        .iter()
        .rposition(|p| p.c != last_c)
        .map_or(1, |i| i + 2);
    let canon = normalized
        .iter()
        .map(|&p| canonicalize(fam, p))
        .collect::<Result<Vec<_>, _>>()?;
    let index = canon
        .windows(2)
        .rposition(|w| w[0] != w[1])
        .map_or(1, |i| i + 2);
    Ok(ChainReport {
        index,
        normalized,
        members_stable_from,
    })
}
