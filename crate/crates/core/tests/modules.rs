use std::collections::HashSet;

use irrtop_core::ideal::{ideal_product, is_two_sided};
use irrtop_core::{
    composition_factors, ideal_generated, is_isomorphic_simple, is_semiprimitive, jacobson_radical,
    quotient_algebra, rng, split, Algebra, Ideal, Matrix, ModuleRep, Preset, Sidedness, Split,
};
use proptest::prelude::*;

fn presets() -> Vec<Preset> {
    use Preset::*;
    vec![
        MatrixAlgebra { n: 1, p: 3 },
        MatrixAlgebra { n: 2, p: 2 },
        UpperTriangular { n: 2, p: 2 },
        UpperTriangular { n: 2, p: 3 },
        UpperTriangular { n: 3, p: 2 },
        TruncatedPolynomial { m: 3, p: 2 },
        CyclicGroupAlgebra { n: 3, p: 2 },
        CyclicGroupAlgebra { n: 2, p: 2 },
        SymmetricGroupAlgebra { n: 3, p: 2 },
        CommutativeSplit { k: 3, p: 2 },
        Product(vec![UpperTriangular { n: 2, p: 2 }, CommutativeSplit { k: 1, p: 2 }]),
    ]
}

fn build(i: usize) -> Algebra {
    presets()[i].build().unwrap()
}

/// Irreducibility by enumeration: the set generated by each nonzero vector
/// under addition and the action is the whole module. Images of generators
/// are queued, which suffices because the action is linear.
fn irreducible_by_enumeration(m: &ModuleRep) -> bool {
    let p = m.field().modulus();
    let n = m.dim();
    let total = (p as usize).pow(n as u32);
    let mut vectors: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        vectors = vectors
            .into_iter()
            .flat_map(|v| (0..p).map(move |c| [v.clone(), vec![c]].concat()))
            .collect();
    }
    n > 0
        && vectors.iter().filter(|v| v.iter().any(|&c| c != 0)).all(|start| {
            let mut seen: HashSet<Vec<u32>> = HashSet::from([vec![0; n]]);
            let mut queue = vec![start.clone()];
            while let Some(w) = queue.pop() {
                if seen.contains(&w) {
                    continue;
                }
                let old: Vec<Vec<u32>> = seen.iter().cloned().collect();
                for c in 1..p {
                    for s in &old {
                        seen.insert(s.iter().zip(&w).map(|(x, y)| (x + c * y) % p).collect());
                    }
                }
                queue.extend(m.action().iter().map(|a| a.mul_vec(&w)));
            }
            seen.len() == total
        })
}

/// Simple modules and the regular module of a preset, plus a conjugate.
fn modules(a: &Algebra, seed: u64) -> Vec<ModuleRep> {
    let reg = ModuleRep::regular(a);
    let mut out: Vec<ModuleRep> = composition_factors(&reg, seed)
        .unwrap()
        .classes
        .into_iter()
        .map(|c| c.rep)
        .collect();
    let mut r = rng::seeded(seed);
    let n = reg.dim();
    let conj = loop {
        let rows: Vec<Vec<u32>> = (0..n).map(|_| rng::vector(&mut r, a.field(), n)).collect();
        if let Some(c) = reg.conjugate(&Matrix::from_rows(a.field(), n, &rows)) {
            break c;
        }
    };
    out.push(reg);
    out.push(conj);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn split_agrees_with_enumeration(i in 0..11usize, seed in 0..1000u64) {
        let a = build(i);
        for m in modules(&a, seed) {
            m.check_axioms(&a).unwrap();
            if m.cardinality().unwrap() > 512 {
                continue;
            }
            let want = irreducible_by_enumeration(&m);
            match split(&m, seed).unwrap() {
                Split::Irreducible => prop_assert!(want),
                Split::Reducible(s) => {
                    prop_assert!(!want);
                    prop_assert!(m.is_submodule(&s) && !s.is_zero() && !s.is_full());
                    let (sub, quot) = m.sub_quotient(&s).unwrap();
                    sub.check_axioms(&a).unwrap();
                    quot.check_axioms(&a).unwrap();
                }
            }
        }
    }

    #[test]
    fn factors_do_not_depend_on_seed(i in 0..11usize, s1 in 0..1000u64, s2 in 0..1000u64) {
        let a = build(i);
        let reg = ModuleRep::regular(&a);
        let x = composition_factors(&reg, s1).unwrap();
        let y = composition_factors(&reg, s2).unwrap();
        prop_assert_eq!(x.factors.iter().map(ModuleRep::dim).sum::<usize>(), a.dim());
        prop_assert_eq!(x.classes.len(), y.classes.len());
        for c in &x.classes {
            prop_assert!(y.classes.iter().any(|d| d.multiplicity == c.multiplicity
                && is_isomorphic_simple(&c.rep, &d.rep).is_some()));
        }
    }

    #[test]
    fn annihilator_of_sum_is_intersection(i in 0..11usize, picks in prop::collection::vec(0..8usize, 0..4), seed in 0..100u64) {
        let a = build(i);
        let pool = modules(&a, seed);
        let chosen: Vec<ModuleRep> = picks.iter().map(|&k| pool[k % pool.len()].clone()).collect();
        let sum = ModuleRep::direct_sum(&a, &chosen);
        sum.check_axioms(&a).unwrap();
        let meet = chosen.iter().fold(Ideal::whole(&a), |acc, m| acc.intersect(&m.annihilator()));
        prop_assert_eq!(sum.annihilator().space, meet.space);
        prop_assert!(is_two_sided(&a, &sum.annihilator().space));
    }

    #[test]
    fn radical_is_nilpotent_with_semiprimitive_quotient(i in 0..11usize, seed in 0..100u64) {
        let a = build(i);
        let j = jacobson_radical(&a, seed).unwrap();
        prop_assert!(is_two_sided(&a, &j.space));
        let mut power = j.clone();
        for _ in 0..a.dim() {
            power = Ideal { space: ideal_product(&a, &power, &j), sided: Sidedness::TwoSided };
        }
        prop_assert!(power.is_zero());
        prop_assert!(is_semiprimitive(&a, &j, seed).unwrap());
        if !j.is_zero() {
            let q = quotient_algebra(&a, &j).unwrap();
            let qa = q.algebra;
            prop_assert!(jacobson_radical(&qa, seed).unwrap().is_zero());
        }
    }
}

#[test]
fn worked_examples() {
    let ut2 = Preset::UpperTriangular { n: 2, p: 2 }.build().unwrap();
    let m2 = Preset::MatrixAlgebra { n: 2, p: 2 }.build().unwrap();
    let f2 = ut2.field();
    // basis e11 e12 e22
    let e12 = [0u32, 1, 0];
    assert_eq!(ideal_generated(&ut2, &[e12], Sidedness::TwoSided).space.dim(), 1);
    assert!(ideal_generated(&ut2, &[ut2.one()], Sidedness::TwoSided).is_whole());
    assert!(ideal_generated::<Vec<u32>>(&ut2, &[], Sidedness::TwoSided).is_zero());

    // UT2 / span{e12} is commutative of dimension 2 with zero radical
    let q = quotient_algebra(&ut2, &ideal_generated(&ut2, &[e12], Sidedness::TwoSided)).unwrap();
    assert_eq!(q.algebra.dim(), 2);
    let (x, y) = (q.algebra.basis_vector(0), q.algebra.basis_vector(1));
    assert_eq!(q.algebra.mul(&x, &y), q.algebra.mul(&y, &x));
    assert!(jacobson_radical(&q.algebra, 0).unwrap().is_zero());

    let reg = ModuleRep::regular(&ut2);
    assert!(reg.annihilator().is_zero());
    assert!(ModuleRep::zero(&ut2).annihilator().is_whole());
    assert_eq!(ModuleRep::direct_sum(&ut2, &[]).dim(), 0);
    // R e11 = span{e11}; the 2-dimensional left ideal is R e22 = span{e12, e22}
    assert_eq!(reg.spin(&[[1u32, 0, 0]]).dim(), 1);
    assert_eq!(reg.spin(&[[0u32, 0, 1]]).dim(), 2);
    assert!(reg.spin::<Vec<u32>>(&[]).is_zero());

    let j = jacobson_radical(&ut2, 0).unwrap();
    assert_eq!(j.space, irrtop_core::Subspace::span(f2, 3, &[e12]));
    let (sub, quot) = reg.sub_quotient(&j.space).unwrap();
    assert_eq!((sub.dim(), quot.dim()), (1, 2));
    assert!(jacobson_radical(&m2, 0).unwrap().is_zero());

    let cf = composition_factors(&ModuleRep::regular(&m2), 0).unwrap();
    assert_eq!(cf.classes.len(), 1);
    assert_eq!((cf.classes[0].rep.dim(), cf.classes[0].multiplicity), (2, 2));
    assert!(matches!(split(&ModuleRep::regular(&m2), 0).unwrap(), Split::Reducible(s) if s.dim() == 2));

    let cf = composition_factors(&reg, 0).unwrap();
    let s = &cf.classes;
    assert_eq!(s.len(), 2);
    assert!(is_isomorphic_simple(&s[0].rep, &s[1].rep).is_none());
    assert!(is_isomorphic_simple(&s[0].rep, &s[0].rep).is_some());
    // one simple occurs once, the other twice
    let mut mult: Vec<usize> = s.iter().map(|c| c.multiplicity).collect();
    mult.sort();
    assert_eq!(mult, vec![1, 2]);

    let c2 = Preset::CyclicGroupAlgebra { n: 2, p: 2 }.build().unwrap();
    let rad = jacobson_radical(&c2, 0).unwrap();
    assert_eq!(rad.space, irrtop_core::Subspace::span(f2, 2, &[[1u32, 1]]));
}
