//! Topologies on finite sets, stored as sorted lists of closed sets.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{ClosedSetFamily, Difference, TopologyError};
use crate::pointset::{PointSet, MAX_POINTS};

/// Largest space the power-set closure oracle accepts.
pub const BRUTE_FORCE_POINTS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    n: usize,
    closed: Vec<PointSet>,
}

impl FiniteTopology {
    /// Checks that `closed` contains `∅` and the whole space and is closed
    /// under pairwise unions and intersections.
    pub fn new(n: usize, closed: &[PointSet]) -> Result<Self, TopologyError> {
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints {
                count: n,
                limit: MAX_POINTS,
            });
        }
        let all = PointSet::full(n);
        let set: BTreeSet<PointSet> = closed.iter().copied().collect();
        if let Some(bad) = set.iter().find(|c| !c.is_subset(all)) {
            return Err(TopologyError::NotATopology(format!(
                "{bad} is not a subset of the {n} points"
            )));
        }
        if !set.contains(&PointSet::EMPTY) {
            return Err(TopologyError::NotATopology("the empty set is missing".into()));
        }
        if !set.contains(&all) {
            return Err(TopologyError::NotATopology("the whole space is missing".into()));
        }
        for a in &set {
            for b in &set {
                if !set.contains(&a.union(*b)) {
                    return Err(TopologyError::NotATopology(format!(
                        "{a} ∪ {b} is not closed"
                    )));
                }
                if !set.contains(&a.intersection(*b)) {
                    return Err(TopologyError::NotATopology(format!(
                        "{a} ∩ {b} is not closed"
                    )));
                }
            }
        }
        Ok(Self {
            n,
            closed: set.into_iter().collect(),
        })
    }

    pub fn trivial(n: usize) -> Self {
        Self::new(n, &[PointSet::EMPTY, PointSet::full(n)]).expect("trivial topology")
    }

    pub fn discrete(n: usize) -> Self {
        assert!(n <= 16, "discrete topology listed exhaustively");
        let closed: Vec<PointSet> = PointSet::full(n).subsets().collect();
        Self {
            n,
            closed,
        }
    }

    pub fn points(&self) -> usize {
        self.n
    }

    /// Closed sets in increasing mask order.
    pub fn closed_sets(&self) -> &[PointSet] {
        &self.closed
    }

    pub fn index_of(&self, s: PointSet) -> Option<usize> {
        self.closed.binary_search(&s).ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.index_of(s).is_some()
    }
}

impl ClosedSetFamily for FiniteTopology {
    fn member_count(&self) -> usize {
        self.closed.len()
    }

    fn empty(&self) -> usize {
        0
    }

    fn all(&self) -> usize {
        self.closed.len() - 1
    }

    fn member_name(&self, c: usize) -> String {
        format!("{}", self.closed[c])
    }

    fn named_points(&self) -> usize {
        self.n
    }

    fn point_name(&self, q: usize) -> String {
        format!("p{q}")
    }

    fn points_in(&self, c: usize) -> PointSet {
        self.closed[c]
    }

    fn difference(&self, a: usize, b: usize) -> Difference {
        Difference::Finite(self.closed[a].difference(self.closed[b]))
    }

    fn union(&self, a: usize, b: usize) -> Option<usize> {
        self.index_of(self.closed[a].union(self.closed[b]))
    }

    fn intersection(&self, a: usize, b: usize) -> Option<usize> {
        self.index_of(self.closed[a].intersection(self.closed[b]))
    }

    fn is_finite_space(&self) -> bool {
        true
    }
}

/// Smallest family containing `t`'s closed sets and every singleton that is
/// closed under unions and intersections, by iteration over the power set.
pub fn brute_force_point_closure(t: &FiniteTopology) -> Result<Vec<PointSet>, TopologyError> {
    let n = t.points();
    if n > BRUTE_FORCE_POINTS {
        return Err(TopologyError::TooManyPoints {
            count: n,
            limit: BRUTE_FORCE_POINTS,
        });
    }
    let size = 1usize << n;
    let mut member = vec![false; size];
    for c in t.closed_sets() {
        member[c.0 as usize] = true;
    }
    for q in 0..n {
        member[1 << q] = true;
    }
    loop {
        let current: Vec<usize> = (0..size).filter(|&s| member[s]).collect();
        let mut grew = false;
        for &a in &current {
            for &b in &current {
                for s in [a | b, a & b] {
                    if !member[s] {
                        member[s] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok((0..size)
        .filter(|&s| member[s])
        .map(|s| PointSet(s as u64))
        .collect())
}

/// Every topology on `n <= 4` points.
pub fn all_topologies(n: usize) -> Vec<FiniteTopology> {
    assert!(n <= 4, "exhaustive topology enumeration is limited to 4 points");
    let all = PointSet::full(n);
    let size = 1usize << n;
    // the other subsets that may or may not be closed
    let optional: Vec<PointSet> = (1..size - 1).map(|s| PointSet(s as u64)).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << optional.len() {
        let mut closed = vec![PointSet::EMPTY, all];
        closed.extend(
            optional
                .iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .map(|(_, s)| *s),
        );
        if let Ok(t) = FiniteTopology::new(n, &closed) {
            out.push(t);
        }
    }
    out
}
