//! The MeatAxe: irreducibility testing and composition factors of modules
//! over finite fields.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use thiserror::Error;

use crate::matrix::Matrix;
use crate::module::{is_isomorphic_simple, spin_under, ModuleRep};
use crate::poly::{charpoly, irreducible_factors};
use crate::rng::{self, LabRng};
use crate::subspace::Subspace;

/// Random elements tried before falling back to exhaustive spinning.
pub const SPLIT_ATTEMPTS: usize = 64;
/// Largest module (as a number of vectors) the exhaustive fallback handles.
pub const BRUTE_FORCE_LIMIT: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeatAxeError {
    #[error("the zero module has no irreducibility status")]
    ZeroModule,
    #[error(
        "no decision after {attempts} random elements on a {dim}-dimensional module over GF({p})"
    )]
    BudgetExhausted { attempts: usize, dim: usize, p: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Split {
    Irreducible,
    /// A nonzero proper submodule.
    Reducible(Subspace),
}

/// Decides irreducibility, deterministically for a given seed.
pub fn split(m: &ModuleRep, seed: u64) -> Result<Split, MeatAxeError> {
    split_with(m, &mut rng::seeded(seed))
}

pub fn split_with(m: &ModuleRep, rng: &mut LabRng) -> Result<Split, MeatAxeError> {
    let n = m.dim();
    if n == 0 {
        return Err(MeatAxeError::ZeroModule);
    }
    if n == 1 {
        return Ok(Split::Irreducible);
    }
    let f = m.field();
    let transposed = m.transposed_actions();
    for _ in 0..SPLIT_ATTEMPTS {
        let theta = random_element(m, rng);
        for factor in irreducible_factors(&charpoly(&theta), f, rng) {
            let ft = factor.eval_matrix(&theta);
            let null = ft.kernel();
            let mut probes: Vec<Vec<u32>> = null.vectors().take(1).map(<[u32]>::to_vec).collect();
            if null.dim() > 1 {
                let coeffs = rng::vector(rng, f, null.dim());
                probes.push(null.basis().vec_mul(&coeffs));
            }
            for v in probes.iter().filter(|v| v.iter().any(|&c| c != 0)) {
                let s = m.spin(&[v]);
                if !s.is_full() {
                    return Ok(Split::Reducible(s));
                }
            }
            if Some(null.dim()) == factor.degree() {
                // the transposed criterion settles it
                let null_t = ft.transpose().kernel();
                let w = null_t.vectors().next().expect("nonzero nullspace").to_vec();
                let dual = spin_under(f, n, &transposed, &[w]);
                if dual.is_full() {
                    return Ok(Split::Irreducible);
                }
                return Ok(Split::Reducible(dual.basis().kernel()));
            }
        }
    }
    match m.cardinality() {
        Some(size) if size <= BRUTE_FORCE_LIMIT => Ok(spin_every_vector(m)),
        _ => Err(MeatAxeError::BudgetExhausted {
            attempts: SPLIT_ATTEMPTS,
            dim: n,
            p: f.modulus(),
        }),
    }
}

/// A uniform combination of the actions plus up to three random degree-2 words.
fn random_element(m: &ModuleRep, rng: &mut LabRng) -> Matrix {
    let f = m.field();
    let acts = m.action();
    let mut theta = Matrix::zeros(f, m.dim(), m.dim());
    for a in acts {
        let c = rng::scalar(rng, f);
        if c != 0 {
            theta.add_scaled(c, a);
        }
    }
    if !acts.is_empty() {
        let words = rng.gen_range(0..=3);
        for _ in 0..words {
            let i = rng.gen_range(0..acts.len());
            let j = rng.gen_range(0..acts.len());
            let c = rng::scalar(rng, f);
            if c != 0 {
                theta.add_scaled(c, &acts[i].mul(&acts[j]));
            }
        }
    }
    theta
}

/// Spins one vector from each line of the module.
fn spin_every_vector(m: &ModuleRep) -> Split {
    let p = m.field().modulus();
    let n = m.dim();
    let mut v = vec![0u32; n];
    // vectors whose last nonzero coordinate is 1
    for lead in 0..n {
        v.iter_mut().for_each(|c| *c = 0);
        v[lead] = 1;
        loop {
            let s = m.spin(&[&v]);
            if !s.is_full() {
                return Split::Reducible(s);
            }
            // odometer over coordinates below `lead`
            let mut k = 0;
            while k < lead {
                v[k] += 1;
                if v[k] < p {
                    break;
                }
                v[k] = 0;
                k += 1;
            }
            if k == lead {
                break;
            }
        }
    }
    Split::Irreducible
}

/// A composition series' factors, bottom to top, with isomorphism classes.
#[derive(Debug, Clone)]
pub struct CompositionFactors {
    pub factors: Vec<ModuleRep>,
    /// One entry per isomorphism class, in order of first appearance.
    pub classes: Vec<FactorClass>,
}

#[derive(Debug, Clone)]
pub struct FactorClass {
    pub rep: ModuleRep,
    pub multiplicity: usize,
    /// Positions in `factors` belonging to this class.
    pub members: Vec<usize>,
}

impl CompositionFactors {
    pub fn length(&self) -> usize {
        self.factors.len()
    }

    /// Index into `classes` of a simple module, if it occurs.
    pub fn class_of(&self, s: &ModuleRep) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| is_isomorphic_simple(&c.rep, s).is_some())
    }
}

pub fn composition_factors(m: &ModuleRep, seed: u64) -> Result<CompositionFactors, MeatAxeError> {
    composition_factors_with(m, &mut rng::seeded(seed))
}

pub fn composition_factors_with(
    m: &ModuleRep,
    rng: &mut LabRng,
) -> Result<CompositionFactors, MeatAxeError> {
    let mut factors = Vec::new();
    if m.dim() > 0 {
        collect(m, rng, &mut factors)?;
    }
    let mut classes: Vec<FactorClass> = Vec::new();
    for (idx, s) in factors.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| is_isomorphic_simple(&c.rep, s).is_some())
        {
            Some(c) => {
                c.multiplicity += 1;
                c.members.push(idx);
            }
            None => classes.push(FactorClass {
                rep: s.clone(),
                multiplicity: 1,
                members: vec![idx],
            }),
        }
    }
    Ok(CompositionFactors { factors, classes })
}

fn collect(m: &ModuleRep, rng: &mut LabRng, out: &mut Vec<ModuleRep>) -> Result<(), MeatAxeError> {
    match split_with(m, rng)? {
        Split::Irreducible => out.push(m.clone()),
        Split::Reducible(s) => {
            let (sub, quot) = m.sub_quotient(&s).expect("split returns a submodule");
            collect(&sub, rng, out)?;
            collect(&quot, rng, out)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::Preset;

    #[test]
    fn one_dimensional_is_irreducible() {
        let a = Preset::MatrixAlgebra { n: 1, p: 3 }.build().unwrap();
        assert_eq!(split(&ModuleRep::regular(&a), 0), Ok(Split::Irreducible));
        assert_eq!(
            split(&ModuleRep::zero(&a), 0),
            Err(MeatAxeError::ZeroModule)
        );
    }

    #[test]
    fn regular_m2_splits_into_two_columns() {
        let a = Preset::MatrixAlgebra { n: 2, p: 2 }.build().unwrap();
        let m = ModuleRep::regular(&a);
        for seed in 0..5 {
            let Ok(Split::Reducible(s)) = split(&m, seed) else {
                panic!("regular M2 is reducible");
            };
            assert_eq!(s.dim(), 2);
            assert!(m.is_submodule(&s));
        }
        let cf = composition_factors(&m, 0).unwrap();
        assert_eq!(cf.length(), 2);
        assert_eq!(cf.classes.len(), 1);
        assert_eq!(cf.classes[0].multiplicity, 2);
        assert_eq!(cf.classes[0].rep.dim(), 2);
    }

    #[test]
    fn regular_ut2_has_three_one_dimensional_factors() {
        let a = Preset::UpperTriangular { n: 2, p: 2 }.build().unwrap();
        let cf = composition_factors(&ModuleRep::regular(&a), 7).unwrap();
        assert_eq!(cf.length(), 3);
        assert!(cf.factors.iter().all(|s| s.dim() == 1));
        let mut mult: Vec<usize> = cf.classes.iter().map(|c| c.multiplicity).collect();
        mult.sort_unstable();
        assert_eq!(mult, vec![1, 2]);
    }

    #[test]
    fn factors_are_simple_and_sum_to_dimension() {
        for (name, a) in crate::presets::gallery() {
            let m = ModuleRep::regular(&a);
            let cf = composition_factors(&m, 3).unwrap();
            assert_eq!(cf.factors.iter().map(ModuleRep::dim).sum::<usize>(), a.dim(), "{name}");
            for s in &cf.factors {
                assert!(s.check_axioms(&a).is_ok(), "{name}");
                assert_eq!(split(s, 11), Ok(Split::Irreducible), "{name}");
            }
        }
    }
}
