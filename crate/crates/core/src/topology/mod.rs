//! Closed-set families and their point closure.
//!
//! A family is described through [`ClosedSetFamily`]: finitely many members
//! indexed `0..member_count()`, finitely many named points, and enough
//! declared data (unions, intersections, set differences) to decide
//! containment between sets of the form `C ∪ F` with `C` a member and `F` a
//! finite set of named points. [`FiniteTopology`] covers finite spaces;
//! [`SymbolicSpace`] covers infinite spaces described by declared tables.

use alloc::string::String;

use thiserror::Error;

use crate::pointset::PointSet;

mod closure;
mod finite;
mod symbolic;

pub use closure::{
    canonicalize, chain_stabilize, pair_points, pair_subset, pc_intersect, pc_union,
    point_closure, ChainReport, ClosedPair, MAX_NAMED_POINTS,
};
pub use finite::{all_topologies, brute_force_point_closure, FiniteTopology, BRUTE_FORCE_POINTS};
pub use symbolic::{weyl_model, Cardinality, SymbolicSpace};

/// `a \ b` for two members of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Difference {
    /// Finite, consisting of the given named points.
    Finite(PointSet),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("{count} points exceed the limit of {limit}")]
    TooManyPoints { count: usize, limit: usize },
    #[error("closed set index {0} is not a member of the family")]
    UnknownMember(usize),
    #[error("point {0} is not a named point of the space")]
    UnknownPoint(usize),
    #[error("the union of members {0} and {1} is not declared")]
    UndeclaredUnion(usize, usize),
    #[error("the intersection of members {0} and {1} is not declared")]
    UndeclaredIntersection(usize, usize),
    #[error("chain is not descending at position {0}")]
    NotDescending(usize),
    #[error("empty chain")]
    EmptyChain,
}

/// The Zariski-closed sets of a space, as seen by the point closure.
pub trait ClosedSetFamily {
    fn member_count(&self) -> usize;
    /// Index of the empty member.
    fn empty(&self) -> usize;
    /// Index of the whole space.
    fn all(&self) -> usize;
    fn member_name(&self, c: usize) -> String;
    /// Number of named points; ids are `0..named_points()`.
    fn named_points(&self) -> usize;
    fn point_name(&self, q: usize) -> String;
    /// Named points lying in member `c`.
    fn points_in(&self, c: usize) -> PointSet;
    fn difference(&self, a: usize, b: usize) -> Difference;
    fn union(&self, a: usize, b: usize) -> Option<usize>;
    fn intersection(&self, a: usize, b: usize) -> Option<usize>;
    /// Whether the whole space consists of the named points.
    fn is_finite_space(&self) -> bool;

    fn is_subset(&self, a: usize, b: usize) -> bool {
        self.difference(a, b) == Difference::Finite(PointSet::EMPTY)
    }
}
