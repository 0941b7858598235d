//! The space of simple modules of a finite-dimensional algebra with its
//! Zariski, point-closure and refined Zariski topologies.

use alloc::vec::Vec;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::ideal::Ideal;
use crate::meataxe::{composition_factors, MeatAxeError};
use crate::module::{is_isomorphic_simple, ModuleRep};
use crate::pointset::{PointSet, MAX_POINTS};
use crate::radical;
use crate::topology::{self, FiniteTopology, TopologyError};

/// Exhaustive enumeration of Zariski-closed sets is capped at this many points.
pub const ZARISKI_POINT_LIMIT: usize = 16;
/// Checks that run the refined closure on every subset are capped here.
pub const REFINED_POINT_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrrError {
    #[error("algebra fails validation with {0} violated constraints")]
    InvalidAlgebra(usize),
    #[error(transparent)]
    MeatAxe(#[from] MeatAxeError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("{count} points exceed the limit of {limit} for this operation")]
    TooManyPoints { count: usize, limit: usize },
    #[error("point set {0} refers to points outside the space")]
    UnknownPoints(PointSet),
    #[error("ideal has ambient dimension {got}, algebra has dimension {expected}")]
    IdealDimension { expected: usize, got: usize },
    #[error("a composition factor matches no enumerated simple module")]
    UnclassifiedFactor,
}

/// One isomorphism class of simple modules.
#[derive(Debug, Clone)]
pub struct IrrPoint {
    pub id: usize,
    pub rep: ModuleRep,
    pub ann: Ideal,
    /// Multiplicity as a composition factor of the regular module.
    pub multiplicity: usize,
}

#[derive(Debug, Clone)]
pub struct IrrSpace {
    algebra: Algebra,
    points: Vec<IrrPoint>,
}

/// A Zariski-closed set `V(I)` with its semiprimitive defining ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZClosed {
    pub ideal: Ideal,
    pub points: PointSet,
}

/// `x = V(I) ∪ F` with `I` semiprimitive and `F` finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub ideal: Ideal,
    pub v: PointSet,
    pub f: PointSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremFormReport {
    pub x: PointSet,
    pub refined_closed: bool,
    pub decomposition: Option<Decomposition>,
    /// Independent semiprimitivity check of the reported ideal.
    pub ideal_semiprimitive: bool,
    /// Set when `x` is refined-closed but admits no decomposition.
    pub counterexample: bool,
}

/// The three topologies side by side, as lists of closed point sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyComparison {
    pub zariski: Vec<PointSet>,
    pub point_closure: Vec<PointSet>,
    pub refined: Vec<PointSet>,
    pub coincide: bool,
    pub discrete: bool,
}

/// Simple modules of `a`: the composition factors of the regular module up
/// to isomorphism, ordered by dimension and then by first appearance.
pub fn enumerate_irr(a: &Algebra, seed: u64) -> Result<IrrSpace, IrrError> {
    let report = a.validate();
    if !report.is_valid() {
        return Err(IrrError::InvalidAlgebra(report.violations.len()));
    }
    let cf = composition_factors(&ModuleRep::regular(a), seed)?;
    if cf.classes.len() > MAX_POINTS {
        return Err(IrrError::TooManyPoints {
            count: cf.classes.len(),
            limit: MAX_POINTS,
        });
    }
    let mut classes = cf.classes;
    classes.sort_by_key(|c| c.rep.dim());
    let points = classes
        .into_iter()
        .enumerate()
        .map(|(id, c)| IrrPoint {
            id,
            ann: c.rep.annihilator(),
            rep: c.rep,
            multiplicity: c.multiplicity,
        })
        .collect();
    Ok(IrrSpace {
        algebra: a.clone(),
        points,
    })
}

impl IrrSpace {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn points(&self) -> &[IrrPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.points.len())
    }

    fn check_points(&self, x: PointSet) -> Result<(), IrrError> {
        let extra = x.difference(self.all());
        if extra.is_empty() {
            Ok(())
        } else {
            Err(IrrError::UnknownPoints(extra))
        }
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), IrrError> {
        let got = i.space.ambient_dim();
        if got != self.algebra.dim() {
            return Err(IrrError::IdealDimension {
                expected: self.algebra.dim(),
                got,
            });
        }
        Ok(())
    }

    /// `J_T`: the intersection of the annihilators of the points in `t`.
    pub fn core(&self, t: PointSet) -> Ideal {
        t.iter()
            .filter_map(|p| self.points.get(p))
            .fold(Ideal::whole(&self.algebra), |acc, p| acc.intersect(&p.ann))
    }

    /// `V(I)`, with the defining ideal replaced by its semiprimitive core.
    pub fn v_of(&self, i: &Ideal) -> Result<ZClosed, IrrError> {
        self.check_ideal(i)?;
        let points = self
            .points
            .iter()
            .filter(|p| i.is_contained_in(&p.ann))
            .fold(PointSet::EMPTY, |s, p| s.with(p.id));
        Ok(ZClosed {
            ideal: self.core(points),
            points,
        })
    }

    pub fn is_semiprimitive(&self, i: &Ideal) -> Result<bool, IrrError> {
        Ok(self.v_of(i)?.ideal.same_space(i))
    }

    pub fn is_zariski_closed(&self, x: PointSet) -> Result<bool, IrrError> {
        self.check_points(x)?;
        Ok(self.v_of(&self.core(x))?.points == x)
    }

    /// All `V(J_T)` for `T` ranging over subsets of points, ordered by point set.
    pub fn zariski_closed_family(&self) -> Result<Vec<ZClosed>, IrrError> {
        self.guard(ZARISKI_POINT_LIMIT)?;
        let mut family: Vec<ZClosed> = Vec::new();
        for t in self.all().subsets() {
            let z = self.v_of(&self.core(t))?;
            if !family.iter().any(|y| y.points == z.points) {
                family.push(z);
            }
        }
        family.sort_by_key(|z| z.points);
        let sets: Vec<PointSet> = family.iter().map(|z| z.points).collect();
        FiniteTopology::new(self.len(), &sets)?;
        Ok(family)
    }

    pub fn zariski_topology(&self) -> Result<FiniteTopology, IrrError> {
        let sets: Vec<PointSet> = self
            .zariski_closed_family()?
            .into_iter()
            .map(|z| z.points)
            .collect();
        Ok(FiniteTopology::new(self.len(), &sets)?)
    }

    fn guard(&self, limit: usize) -> Result<(), IrrError> {
        if self.len() > limit {
            return Err(IrrError::TooManyPoints {
                count: self.len(),
                limit,
            });
        }
        Ok(())
    }

    /// The point whose simple module is isomorphic to `s`.
    pub fn classify(&self, s: &ModuleRep) -> Option<usize> {
        self.points
            .iter()
            .filter(|p| p.rep.dim() == s.dim())
            .find(|p| is_isomorphic_simple(&p.rep, s).is_some())
            .map(|p| p.id)
    }

    /// Least set containing `x` and the class of every composition factor of
    /// the direct sum of one simple module per point of the set.
    pub fn refined_closure(&self, x: PointSet, seed: u64) -> Result<PointSet, IrrError> {
        self.check_points(x)?;
        let mut current = x;
        loop {
            let reps: Vec<ModuleRep> = current.iter().map(|p| self.points[p].rep.clone()).collect();
            let sum = ModuleRep::direct_sum(&self.algebra, &reps);
            let cf = composition_factors(&sum, seed)?;
            let mut next = current;
            for c in &cf.classes {
                next.insert(self.classify(&c.rep).ok_or(IrrError::UnclassifiedFactor)?);
            }
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Every refined-closed subset, by running the closure on each subset.
    pub fn refined_closed_sets(&self, seed: u64) -> Result<Vec<PointSet>, IrrError> {
        self.guard(REFINED_POINT_LIMIT)?;
        let mut out = Vec::new();
        for x in self.all().subsets() {
            if self.refined_closure(x, seed)? == x {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Checks that a refined-closed `x` has the form `V(I) ∪ F`. Among the
    /// Zariski-closed sets inside `x` the largest is used, so `F` is as small
    /// as possible; ties go to the earliest set in point-set order.
    pub fn verify_theorem_form(&self, x: PointSet, seed: u64) -> Result<TheoremFormReport, IrrError> {
        self.check_points(x)?;
        let refined_closed = self.refined_closure(x, seed)? == x;
        if !refined_closed {
            return Ok(TheoremFormReport {
                x,
                refined_closed,
                decomposition: None,
                ideal_semiprimitive: false,
                counterexample: false,
            });
        }
        let family = self.zariski_closed_family()?;
        let best = family
            .iter()
            .filter(|z| z.points.is_subset(x))
            .fold(None::<&ZClosed>, |best, z| match best {
                Some(b) if b.points.len() >= z.points.len() => Some(b),
                _ => Some(z),
            });
        let decomposition = best.map(|z| Decomposition {
            ideal: z.ideal.clone(),
            v: z.points,
            f: x.difference(z.points),
        });
        let ideal_semiprimitive = match &decomposition {
            Some(d) => radical::is_semiprimitive(&self.algebra, &d.ideal, seed)?,
            None => false,
        };
        Ok(TheoremFormReport {
            x,
            refined_closed,
            counterexample: decomposition.is_none(),
            decomposition,
            ideal_semiprimitive,
        })
    }

    pub fn compare(&self, seed: u64) -> Result<TopologyComparison, IrrError> {
        let zt = self.zariski_topology()?;
        let zariski = zt.closed_sets().to_vec();
        let mut point_closure: Vec<PointSet> = topology::point_closure(&zt)?
            .into_iter()
            .map(|p| topology::pair_points(&zt, p).expect("finite space"))
            .collect();
        point_closure.sort();
        let refined = self.refined_closed_sets(seed)?;
        let coincide = zariski == point_closure && zariski == refined;
        let discrete = zariski.len() == 1usize << self.len();
        Ok(TopologyComparison {
            zariski,
            point_closure,
            refined,
            coincide,
            discrete,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Sidedness;
    use crate::presets::Preset;
    use crate::subspace::Subspace;

    fn space(s: &str) -> IrrSpace {
        enumerate_irr(&s.parse::<Preset>().unwrap().build().unwrap(), 0).unwrap()
    }

    #[test]
    fn point_counts() {
        assert_eq!(space("matrix_algebra(1,5)").len(), 1);
        let m2 = space("matrix_algebra(2,2)");
        assert_eq!(m2.len(), 1);
        assert_eq!(m2.points()[0].rep.dim(), 2);
        let ut2 = space("upper_triangular(2,2)");
        assert_eq!(ut2.len(), 2);
        assert_ne!(ut2.points()[0].ann, ut2.points()[1].ann);
    }

    #[test]
    fn v_of_examples() {
        let s = space("upper_triangular(2,2)");
        let a = s.algebra().clone();
        assert_eq!(s.v_of(&Ideal::zero(&a)).unwrap().points, s.all());
        assert!(s.v_of(&Ideal::whole(&a)).unwrap().points.is_empty());
        let i = Ideal {
            space: Subspace::span(a.field(), 3, &[a.basis_vector(1), a.basis_vector(2)]),
            sided: Sidedness::TwoSided,
        };
        let v = s.v_of(&i).unwrap();
        assert_eq!(v.points.len(), 1);
        let p = v.points.iter().next().unwrap();
        // the point is S1: e11 acts as 1
        assert_eq!(s.points()[p].rep.action()[0].get(0, 0), 1);
    }

    #[test]
    fn zariski_families() {
        assert_eq!(space("matrix_algebra(1,2)").zariski_closed_family().unwrap().len(), 2);
        assert_eq!(space("upper_triangular(2,2)").zariski_closed_family().unwrap().len(), 4);
        let m2 = space("matrix_algebra(2,2)").zariski_closed_family().unwrap();
        let sets: Vec<PointSet> = m2.iter().map(|z| z.points).collect();
        assert_eq!(sets, vec![PointSet::EMPTY, PointSet::full(1)]);
    }

    #[test]
    fn compare_ut2() {
        let c = space("upper_triangular(2,2)").compare(0).unwrap();
        assert!(c.coincide && c.discrete);
        assert_eq!(c.zariski.len(), 4);
    }

    #[test]
    fn theorem_form_edges() {
        let m2 = space("matrix_algebra(2,2)");
        let d = m2.verify_theorem_form(m2.all(), 0).unwrap().decomposition.unwrap();
        assert!(d.ideal.is_zero() && d.f.is_empty());
        // V(0) is everything; its semiprimitive core is the radical span{e12}
        let s = space("upper_triangular(2,2)");
        let all = s.verify_theorem_form(s.all(), 0).unwrap();
        let d = all.decomposition.clone().unwrap();
        assert_eq!(d.ideal.dim(), 1);
        assert!(d.f.is_empty());
        let none = s.verify_theorem_form(PointSet::EMPTY, 0).unwrap();
        let d = none.decomposition.unwrap();
        assert!(d.ideal.is_whole() && d.f.is_empty());
        assert!(all.ideal_semiprimitive && none.ideal_semiprimitive);
    }
}
