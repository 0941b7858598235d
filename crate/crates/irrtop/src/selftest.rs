//! Built-in consistency checks against the brute-force oracles, sized to
//! finish in a few seconds.

use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::{json, Value};

use irrtop_core::embed::ProductFamily;
use irrtop_core::presets::gallery;
use irrtop_core::rng::{self, LabRng};
use irrtop_core::topology::{
    all_topologies, brute_force_point_closure, pair_points, point_closure, weyl_model,
};
use irrtop_core::{
    annihilator_chain_embedding, composition_factors, enumerate_irr, is_isomorphic_simple,
    jacobson_radical, kappa_finite, quotient_algebra, split, staged_basis_embedding, Algebra,
    ChainOutcome, Ideal, IrrError, Matrix, ModuleRep, PrimeField, Split, StagedOutcome,
};

use crate::doc;
use crate::oracle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

type CheckFn = fn(u64) -> Result<String, String>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("rank-nullity", rank_nullity),
    ("kernel-by-enumeration", kernel_by_enumeration),
    ("presets-valid", presets_valid),
    ("corrupted-preset-rejected", corrupted_preset),
    ("regular-module-axioms", regular_axioms),
    ("split-vs-enumeration", split_vs_enumeration),
    ("composition-factors-seed-independent", seed_independence),
    ("radical-nilpotent-quotient-semiprimitive", radical_check),
    ("point-closure-vs-power-set", point_closure_oracle),
    ("weyl-model-closure", weyl_closure),
    ("topologies-coincide", topologies_coincide),
    ("refined-closed-decomposition", decomposition_check),
    ("kappa-vs-longest-chain", kappa_check),
    ("embedding-constructions", embedding_check),
    ("document-round-trip", round_trip),
];

pub fn run(seed: u64) -> SelftestReport {
    let checks = CHECKS
        .iter()
        .map(|&(name, f)| {
            let outcome = catch_unwind(AssertUnwindSafe(|| f(seed)))
                .unwrap_or_else(|_| Err("panicked".to_string()));
            match outcome {
                Ok(detail) => Check {
                    name,
                    passed: true,
                    detail,
                },
                Err(detail) => Check {
                    name,
                    passed: false,
                    detail,
                },
            }
        })
        .collect();
    SelftestReport { checks }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_matrix(rng: &mut LabRng, f: PrimeField, r: usize, c: usize) -> Matrix {
    let rows: Vec<Vec<u32>> = (0..r).map(|_| rng::vector(rng, f, c)).collect();
    Matrix::from_rows(f, c, &rows)
}

fn rank_nullity(seed: u64) -> Result<String, String> {
    let mut rng = rng::seeded(seed);
    let mut n = 0;
    for p in [2, 3, 5, 7] {
        let f = PrimeField::new(p).expect("prime");
        for r in 1..=5 {
            for c in 1..=5 {
                let m = random_matrix(&mut rng, f, r, c);
                let k = m.kernel();
                ensure(m.rank() + k.dim() == c, || format!("rank-nullity fails for {m:?}"))?;
                ensure(k.vectors().all(|v| m.mul_vec(v).iter().all(|&x| x == 0)), || {
                    "kernel vector not killed".into()
                })?;
                let x = rng::vector(&mut rng, f, c);
                let b = m.mul_vec(&x);
                let sol = m.solve(&b).ok_or("consistent system reported unsolvable")?;
                ensure(m.mul_vec(&sol) == b, || "solve returned a non-solution".into())?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} matrices"))
}

fn kernel_by_enumeration(seed: u64) -> Result<String, String> {
    let mut rng = rng::seeded(seed ^ 1);
    let mut n = 0;
    for p in [2u32, 3] {
        let f = PrimeField::new(p).expect("prime");
        for c in 1..=5usize {
            let m = random_matrix(&mut rng, f, 3, c);
            let total = p.pow(c as u32);
            let mut count = 0u32;
            for idx in 0..total {
                let mut v = vec![0u32; c];
                let mut t = idx;
                for x in v.iter_mut() {
                    *x = t % p;
                    t /= p;
                }
                if m.mul_vec(&v).iter().all(|&x| x == 0) {
                    count += 1;
                }
            }
            ensure(count == p.pow(m.kernel().dim() as u32), || {
                format!("kernel size {count} disagrees with dimension {}", m.kernel().dim())
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} kernels enumerated"))
}

fn presets_valid(_: u64) -> Result<String, String> {
    let g = gallery();
    for (name, a) in &g {
        ensure(a.validate().is_valid(), || format!("{name} fails validation"))?;
    }
    Ok(format!("{} presets", g.len()))
}

fn corrupted_preset(seed: u64) -> Result<String, String> {
    let a: Algebra = "upper_triangular(2,2)".parse::<irrtop_core::Preset>().and_then(|p| p.build()).map_err(|e| e.to_string())?;
    let mut structure = a.structure().to_vec();
    // e11 e12 = e12 becomes 0
    let d = a.dim();
    let (i, j, k) = (0, 1, 1);
    structure[(i * d + j) * d + k] = 0;
    let bad = Algebra::new(a.field(), d, structure, a.one().to_vec()).map_err(|e| e.to_string())?;
    let report = bad.validate();
    ensure(!report.is_valid(), || "corruption went unnoticed".into())?;
    ensure(matches!(enumerate_irr(&bad, seed), Err(IrrError::InvalidAlgebra(_))), || {
        "enumeration accepted an invalid algebra".into()
    })?;
    Ok(format!("{} violations reported", report.violations.len()))
}

fn regular_axioms(_: u64) -> Result<String, String> {
    for (name, a) in gallery() {
        ModuleRep::regular(&a)
            .check_axioms(&a)
            .map_err(|e| format!("{name}: {e}"))?;
    }
    Ok("all regular modules satisfy the module axioms".into())
}

fn small_modules() -> Vec<(String, Algebra, ModuleRep)> {
    gallery()
        .into_iter()
        .filter(|(_, a)| ModuleRep::regular(a).cardinality().is_some_and(|c| c <= 512))
        .map(|(n, a)| {
            let m = ModuleRep::regular(&a);
            (n, a, m)
        })
        .collect()
}

fn split_vs_enumeration(seed: u64) -> Result<String, String> {
    let mut n = 0;
    for (name, _, m) in small_modules() {
        let cf = composition_factors(&m, seed).map_err(|e| format!("{name}: {e}"))?;
        let mut modules = vec![m];
        modules.extend(cf.factors);
        for x in &modules {
            let Some(expected) = oracle::is_irreducible(x) else { continue };
            let got = matches!(split(x, seed).map_err(|e| e.to_string())?, Split::Irreducible);
            ensure(got == expected, || format!("{name}: split says {got}, enumeration says {expected}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} modules"))
}

fn seed_independence(seed: u64) -> Result<String, String> {
    let mut n = 0;
    for (name, _, m) in small_modules() {
        let a = composition_factors(&m, seed).map_err(|e| e.to_string())?;
        let b = composition_factors(&m, seed.wrapping_add(7)).map_err(|e| e.to_string())?;
        ensure(a.length() == b.length() && a.classes.len() == b.classes.len(), || {
            format!("{name}: factor counts depend on the seed")
        })?;
        for c in &a.classes {
            let matched = b.classes.iter().any(|d| {
                d.multiplicity == c.multiplicity
                    && d.rep.dim() == c.rep.dim()
                    && is_isomorphic_simple(&c.rep, &d.rep).is_some()
            });
            ensure(matched, || format!("{name}: a factor class has no counterpart"))?;
        }
        n += 1;
    }
    Ok(format!("{n} modules"))
}

fn radical_check(seed: u64) -> Result<String, String> {
    for (name, a, _) in small_modules() {
        let j = jacobson_radical(&a, seed).map_err(|e| e.to_string())?;
        let mut power = j.clone();
        for _ in 0..=a.dim() {
            power = Ideal {
                space: irrtop_core::ideal::ideal_product(&a, &power, &j),
                sided: irrtop_core::Sidedness::TwoSided,
            };
        }
        ensure(power.is_zero(), || format!("{name}: radical is not nilpotent"))?;
        if !j.is_whole() {
            let q = quotient_algebra(&a, &j).map_err(|e| e.to_string())?;
            let jq = jacobson_radical(&q.algebra, seed).map_err(|e| e.to_string())?;
            ensure(jq.is_zero(), || format!("{name}: quotient by the radical is not semiprimitive"))?;
        }
    }
    Ok("radicals nilpotent, quotients semiprimitive".into())
}

fn point_closure_oracle(seed: u64) -> Result<String, String> {
    let mut spaces = Vec::new();
    for n in 0..=3 {
        spaces.extend(all_topologies(n));
    }
    let mut rng = rng::seeded(seed ^ 2);
    for _ in 0..20 {
        spaces.push(oracle::random_topology(5, &mut rng));
    }
    for t in &spaces {
        let mut got: Vec<_> = point_closure(t)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|p| pair_points(t, p).expect("finite"))
            .collect();
        got.sort();
        let want = brute_force_point_closure(t).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("point closure differs on {:?}", t.closed_sets()))?;
    }
    Ok(format!("{} topologies", spaces.len()))
}

fn weyl_closure(_: u64) -> Result<String, String> {
    for n in 1..=4 {
        let got = point_closure(&weyl_model(n)).map_err(|e| e.to_string())?.len();
        ensure(got == (1 << n) + 1, || format!("{n} points: {got} closed sets"))?;
    }
    Ok("finite sets and the whole space".into())
}

fn gallery_spaces(seed: u64, max_points: usize) -> Result<Vec<(String, irrtop_core::IrrSpace)>, String> {
    let mut out = Vec::new();
    for (name, a) in gallery() {
        let s = enumerate_irr(&a, seed).map_err(|e| format!("{name}: {e}"))?;
        if s.len() <= max_points {
            out.push((name, s));
        }
    }
    Ok(out)
}

fn topologies_coincide(seed: u64) -> Result<String, String> {
    let spaces = gallery_spaces(seed, 6)?;
    for (name, s) in &spaces {
        let c = s.compare(seed).map_err(|e| e.to_string())?;
        ensure(c.coincide && c.discrete, || format!("{name}: topologies differ"))?;
    }
    Ok(format!("{} algebras", spaces.len()))
}

fn decomposition_check(seed: u64) -> Result<String, String> {
    let mut n = 0;
    for (name, s) in gallery_spaces(seed, 6)? {
        for x in s.refined_closed_sets(seed).map_err(|e| e.to_string())? {
            let r = s.verify_theorem_form(x, seed).map_err(|e| e.to_string())?;
            ensure(r.decomposition.is_some() && r.ideal_semiprimitive, || {
                format!("{name}: {x} has no decomposition with semiprimitive ideal")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} refined-closed sets"))
}

fn kappa_check(seed: u64) -> Result<String, String> {
    let mut n = 0;
    for (name, _, m) in small_modules() {
        let Some(want) = oracle::kappa(&m, 64, 2000) else { continue };
        let got = kappa_finite(&m, seed).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{name}: kappa {got}, longest chain gives {want}"))?;
        n += 1;
    }
    Ok(format!("{n} modules"))
}

fn embedding_check(seed: u64) -> Result<String, String> {
    let a: Algebra = "upper_triangular(2,2)".parse::<irrtop_core::Preset>().and_then(|p| p.build()).map_err(|e| e.to_string())?;
    let zero = Ideal::zero(&a);
    let regs = vec![ModuleRep::regular(&a); 6];
    let fam = ProductFamily::new(a.clone(), regs, None).map_err(|e| e.to_string())?;
    let (staged, trace) = staged_basis_embedding(&fam, &zero, None, seed).map_err(|e| e.to_string())?;
    ensure(matches!(&staged, StagedOutcome::Success(w) if w.is_valid()), || "staged construction failed".into())?;
    ensure(trace.strictly_descends(), || "staged dimensions do not descend".into())?;
    let (chain, _) = annihilator_chain_embedding(&fam, seed);
    ensure(matches!(&chain, ChainOutcome::Success(w) if w.is_valid()), || "chain construction failed".into())?;

    let space = enumerate_irr(&a, seed).map_err(|e| e.to_string())?;
    let s1 = space.points()[0].rep.clone();
    let fam = ProductFamily::new(a.clone(), vec![s1.clone(); 4], None).map_err(|e| e.to_string())?;
    match annihilator_chain_embedding(&fam, seed).0 {
        ChainOutcome::Failure { stable_l } => ensure(stable_l == s1.annihilator().space, || {
            "stable L differs from the annihilator of the factor".into()
        })?,
        ChainOutcome::Success(_) => return Err("embedded R into copies of a simple module".into()),
    }
    Ok("staged and chain constructions".into())
}

const SAMPLE_DOCS: &[&str] = &[
    "preset: upper_triangular(2,2)\n",
    "p: 3\ndim: 1\none: 1\nmult: 0 0 0 1\n",
    "algebra: matrix_algebra(2,2)\nfactor: simple#0 as S\nfactor: regular\n",
    "algebra: upper_triangular(2,2)\nfactor: quotient e12\nfactor: explicit 1\naction: 1\naction: 0\naction: 0\n",
];

fn round_trip(_: u64) -> Result<String, String> {
    for text in SAMPLE_DOCS {
        let (d, _) = doc::parse_input(text).map_err(|e| e.to_string())?;
        let again = doc::serialize_input(&d);
        let (d2, _) = doc::parse_input(&again).map_err(|e| e.to_string())?;
        ensure(d == d2 && &again == text, || format!("round trip changed {text:?}"))?;
    }
    Ok(format!("{} documents", SAMPLE_DOCS.len()))
}
