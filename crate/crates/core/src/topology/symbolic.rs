//! Spaces described by declared data rather than by their points.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{ClosedSetFamily, Difference, TopologyError};
use crate::pointset::{PointSet, MAX_POINTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cardinality {
    Finite(usize),
    CountablyInfinite,
}

/// A space with finitely many declared closed sets and finitely many named
/// points. Differences between members are declared finite (with their
/// named points) or infinite; unions and intersections are declared by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicSpace {
    cardinality: Cardinality,
    members: Vec<String>,
    points: Vec<String>,
    contains: Vec<PointSet>,
    difference: Vec<Vec<Difference>>,
    union: Vec<Vec<usize>>,
    intersection: Vec<Vec<usize>>,
    empty: usize,
    all: usize,
}

impl SymbolicSpace {
    /// Validates the declared tables; `difference[a][b]` describes `a \ b`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        cardinality: Cardinality,
        members: Vec<String>,
        points: Vec<String>,
        contains: Vec<PointSet>,
        difference: Vec<Vec<Difference>>,
        union: Vec<Vec<usize>>,
        intersection: Vec<Vec<usize>>,
    ) -> Result<Self, TopologyError> {
        let m = members.len();
        let bad = |msg: String| Err(TopologyError::NotATopology(msg));
        if points.len() > MAX_POINTS {
            return Err(TopologyError::TooManyPoints {
                count: points.len(),
                limit: MAX_POINTS,
            });
        }
        if let Cardinality::Finite(n) = cardinality {
            if n != points.len() {
                return bad(format!("a finite space of {n} points must name all of them"));
            }
        }
        let square = |t: usize| t == m;
        if contains.len() != m
            || !square(difference.len())
            || !square(union.len())
            || !square(intersection.len())
            || difference.iter().any(|r| r.len() != m)
            || union.iter().any(|r| r.len() != m || r.iter().any(|&c| c >= m))
            || intersection.iter().any(|r| r.len() != m || r.iter().any(|&c| c >= m))
        {
            return bad("declared tables do not match the member list".into());
        }
        let named = PointSet::full(points.len());
        if contains.iter().any(|c| !c.is_subset(named)) {
            return bad("a member contains an undeclared point".into());
        }
        let subset = |a: usize, b: usize| difference[a][b] == Difference::Finite(PointSet::EMPTY);
        let Some(empty) = (0..m).find(|&e| (0..m).all(|c| subset(e, c))) else {
            return bad("no empty member".into());
        };
        let Some(all) = (0..m).find(|&u| (0..m).all(|c| subset(c, u))) else {
            return bad("no member contains all others".into());
        };
        let all_named = match cardinality {
            Cardinality::Finite(_) => named,
            Cardinality::CountablyInfinite => contains[all],
        };
        if contains[all] != all_named || !contains[empty].is_empty() {
            return bad("empty and whole members disagree with their points".into());
        }
        for a in 0..m {
            for b in 0..m {
                match difference[a][b] {
                    Difference::Finite(s) if s != contains[a].difference(contains[b]) => {
                        return bad(format!(
                            "{} \\ {} disagrees with the named points",
                            members[a], members[b]
                        ));
                    }
                    Difference::Infinite if cardinality != Cardinality::CountablyInfinite => {
                        return bad("infinite difference in a finite space".into());
                    }
                    _ => {}
                }
                let (u, i) = (union[a][b], intersection[a][b]);
                // least upper bound and greatest lower bound under declared inclusion
                let upper = subset(a, u) && subset(b, u);
                let lower = subset(i, a) && subset(i, b);
                let least = (0..m).all(|c| !(subset(a, c) && subset(b, c)) || subset(u, c));
                let greatest = (0..m).all(|c| !(subset(c, a) && subset(c, b)) || subset(c, i));
                if !(upper && lower && least && greatest) {
                    return bad(format!(
                        "declared union or intersection of {} and {} is inconsistent",
                        members[a], members[b]
                    ));
                }
                for c in 0..m {
                    if subset(a, b) && subset(b, c) && !subset(a, c) {
                        return bad("declared inclusion is not transitive".into());
                    }
                }
            }
        }
        Ok(Self {
            cardinality,
            members,
            points,
            contains,
            difference,
            union,
            intersection,
            empty,
            all,
        })
    }

    pub fn cardinality(&self) -> Cardinality {
        self.cardinality
    }

    pub fn members(&self) -> &[String] {
        &self.members
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }
}

impl ClosedSetFamily for SymbolicSpace {
    fn member_count(&self) -> usize {
        self.members.len()
    }

    fn empty(&self) -> usize {
        self.empty
    }

    fn all(&self) -> usize {
        self.all
    }

    fn member_name(&self, c: usize) -> String {
        self.members[c].clone()
    }

    fn named_points(&self) -> usize {
        self.points.len()
    }

    fn point_name(&self, q: usize) -> String {
        self.points[q].clone()
    }

    fn points_in(&self, c: usize) -> PointSet {
        self.contains[c]
    }

    fn difference(&self, a: usize, b: usize) -> Difference {
        self.difference[a][b]
    }

    fn union(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.union[a][b])
    }

    fn intersection(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.intersection[a][b])
    }

    fn is_finite_space(&self) -> bool {
        matches!(self.cardinality, Cardinality::Finite(_))
    }
}

/// A countably infinite space whose only Zariski-closed sets are `∅` and
/// `All`, with `n` named points `q1, ..., qn`.
pub fn weyl_model(n: usize) -> SymbolicSpace {
    let named = PointSet::full(n);
    let fin = Difference::Finite(PointSet::EMPTY);
    SymbolicSpace::new(
        Cardinality::CountablyInfinite,
        vec!["∅".into(), "All".into()],
        (1..=n).map(|i| format!("q{i}")).collect(),
        vec![PointSet::EMPTY, named],
        vec![vec![fin, fin], vec![Difference::Infinite, fin]],
        vec![vec![0, 1], vec![1, 1]],
        vec![vec![0, 0], vec![0, 1]],
    )
    .expect("the two-member family is a topology")
}
