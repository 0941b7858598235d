//! Jacobson radical and semiprimitive ideals of finite-dimensional algebras.

use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::ideal::Ideal;
use crate::meataxe::{composition_factors, MeatAxeError};
use crate::module::ModuleRep;

/// Annihilators of one representative per class of simple modules.
pub fn simple_annihilators(a: &Algebra, seed: u64) -> Result<Vec<Ideal>, MeatAxeError> {
    let cf = composition_factors(&ModuleRep::regular(a), seed)?;
    Ok(cf.classes.iter().map(|c| c.rep.annihilator()).collect())
}

/// Intersection of the annihilators of all simple modules.
pub fn jacobson_radical(a: &Algebra, seed: u64) -> Result<Ideal, MeatAxeError> {
    Ok(simple_annihilators(a, seed)?
        .iter()
        .fold(Ideal::whole(a), |acc, ann| acc.intersect(ann)))
}

/// Whether `i` equals the intersection of the simple annihilators containing it.
pub fn is_semiprimitive(a: &Algebra, i: &Ideal, seed: u64) -> Result<bool, MeatAxeError> {
    let core = simple_annihilators(a, seed)?
        .iter()
        .filter(|ann| i.is_contained_in(ann))
        .fold(Ideal::whole(a), |acc, ann| acc.intersect(ann));
    Ok(core.same_space(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{ideal_product, quotient_algebra};
    use crate::presets::Preset;
    use crate::subspace::Subspace;

    fn build(s: &str) -> Algebra {
        s.parse::<Preset>().unwrap().build().unwrap()
    }

    #[test]
    fn known_radicals() {
        let m2 = build("matrix_algebra(2,2)");
        assert!(jacobson_radical(&m2, 0).unwrap().is_zero());
        let ut2 = build("upper_triangular(2,2)");
        let rad = jacobson_radical(&ut2, 0).unwrap();
        assert_eq!(rad.space, Subspace::span(ut2.field(), 3, &[ut2.basis_vector(1)]));
        // C2 over GF(2): radical spanned by 1 + g
        let c2 = build("group_algebra([0 1; 1 0],2)");
        let rad = jacobson_radical(&c2, 0).unwrap();
        assert_eq!(rad.space, Subspace::span(c2.field(), 2, &[[1, 1]]));
    }

    #[test]
    fn radical_is_nilpotent_and_quotient_is_semiprimitive() {
        for (name, a) in crate::presets::gallery() {
            let rad = jacobson_radical(&a, 1).unwrap();
            let mut power = rad.clone();
            for _ in 0..a.dim() {
                power.space = ideal_product(&a, &power, &rad);
            }
            assert!(power.is_zero(), "{name}");
            let q = quotient_algebra(&a, &rad).unwrap();
            assert!(jacobson_radical(&q.algebra, 1).unwrap().is_zero(), "{name}");
            assert!(is_semiprimitive(&a, &rad, 1).unwrap(), "{name}");
        }
    }

    #[test]
    fn radical_of_product_is_product_of_radicals() {
        let a = build("upper_triangular(2,2)");
        let b = build("truncated_polynomial(2,2)");
        let ab = Algebra::product(&[a.clone(), b.clone()]).unwrap();
        let ra = jacobson_radical(&a, 0).unwrap();
        let rb = jacobson_radical(&b, 0).unwrap();
        let rab = jacobson_radical(&ab, 0).unwrap();
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for v in ra.space.vectors() {
            let mut w = v.to_vec();
            w.resize(ab.dim(), 0);
            gens.push(w);
        }
        for v in rb.space.vectors() {
            let mut w = alloc::vec![0u32; a.dim()];
            w.extend_from_slice(v);
            gens.push(w);
        }
        assert_eq!(rab.space, Subspace::span(ab.field(), ab.dim(), &gens));
    }

    #[test]
    fn zero_is_not_semiprimitive_in_ut2() {
        let a = build("upper_triangular(2,2)");
        assert!(!is_semiprimitive(&a, &Ideal::zero(&a), 0).unwrap());
        assert!(is_semiprimitive(&a, &Ideal::whole(&a), 0).unwrap());
    }
}
