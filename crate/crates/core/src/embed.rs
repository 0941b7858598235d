//! Embedding `R / I` into finite products of modules: annihilators of
//! vectors, a finite deletion analog of the cofinite product condition,
//! exhaustive and randomized witness search, and two staged constructions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::ideal::{quotient_algebra, Ideal, IdealError, Sidedness};
use crate::meataxe::{composition_factors, MeatAxeError};
use crate::module::ModuleRep;
use crate::radical::jacobson_radical;
use crate::rng::{self, LabRng};
use crate::subspace::Subspace;

/// Products with at most this many vectors are scanned exhaustively.
pub const EXHAUSTIVE_LIMIT: u64 = 4096;
/// Factors with at most this many vectors are enumerated when choosing `y`.
pub const FACTOR_ENUMERATION_LIMIT: u64 = 256;
/// Random candidates per factor when a factor is too large to enumerate.
pub const FACTOR_SAMPLES: usize = 64;
/// Deletion subsets examined by [`t_cofinite_check`] before giving up.
pub const DELETION_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("factor {0} is a module over a different algebra")]
    ForeignFactor(usize),
    #[error("{labels} labels given for {factors} factors")]
    Labels { labels: usize, factors: usize },
    #[error("vector has length {got}, the product has dimension {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error("ideal has ambient dimension {got}, algebra has dimension {expected}")]
    IdealDimension { expected: usize, got: usize },
    #[error("deletion budget {t} must be below the number of factors {factors}")]
    DeletionBudget { t: usize, factors: usize },
    #[error("too many deletion subsets to check ({0})")]
    TooManyDeletions(u64),
    #[error("the target ideal is not contained in the annihilator of the product")]
    TargetNotBelowAnnihilator,
    #[error("factor {0} is not annihilated by the target ideal")]
    FactorNotKilled(usize),
    #[error("basis order must be a permutation of 0..{0}")]
    BasisOrder(usize),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    MeatAxe(#[from] MeatAxeError),
}

/// An ordered family of modules over one algebra, with labels.
#[derive(Debug, Clone)]
pub struct ProductFamily {
    algebra: Algebra,
    factors: Vec<ModuleRep>,
    labels: Vec<String>,
}

impl ProductFamily {
    pub fn new(
        algebra: Algebra,
        factors: Vec<ModuleRep>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, EmbedError> {
        if let Some(i) = factors
            .iter()
            .position(|m| m.algebra_dim() != algebra.dim() || m.field() != algebra.field())
        {
            return Err(EmbedError::ForeignFactor(i));
        }
        let labels = match labels {
            Some(l) if l.len() != factors.len() => {
                return Err(EmbedError::Labels {
                    labels: l.len(),
                    factors: factors.len(),
                })
            }
            Some(l) => l,
            None => (0..factors.len()).map(|i| format!("M{i}")).collect(),
        };
        Ok(Self {
            algebra,
            factors,
            labels,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn factors(&self) -> &[ModuleRep] {
        &self.factors
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(ModuleRep::dim).sum()
    }

    /// Starting coordinate of each factor inside a product vector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = 0;
        self.factors
            .iter()
            .map(|m| {
                let o = off;
                off += m.dim();
                o
            })
            .collect()
    }

    pub fn product(&self) -> ModuleRep {
        ModuleRep::direct_sum(&self.algebra, &self.factors)
    }

    /// Number of vectors in the product, or `None` past `u64`.
    pub fn cardinality(&self) -> Option<u64> {
        u64::from(self.algebra.field().modulus())
            .checked_pow(u32::try_from(self.total_dim()).ok()?)
    }

    /// Splits a product vector into its components.
    pub fn components<'a>(&self, x: &'a [u32]) -> Vec<&'a [u32]> {
        self.offsets()
            .into_iter()
            .zip(&self.factors)
            .map(|(o, m)| &x[o..o + m.dim()])
            .collect()
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), EmbedError> {
        let got = i.space.ambient_dim();
        if got != self.algebra.dim() {
            return Err(EmbedError::IdealDimension {
                expected: self.algebra.dim(),
                got,
            });
        }
        Ok(())
    }
}

/// `{a : a x = 0}` for a vector `x` of the product.
pub fn ann_of_vector(fam: &ProductFamily, x: &[u32]) -> Result<Ideal, EmbedError> {
    let n = fam.total_dim();
    if x.len() != n {
        return Err(EmbedError::VectorLength {
            expected: n,
            got: x.len(),
        });
    }
    Ok(fam.product().annihilator_of(x))
}

/// A vector of the product whose annihilator is the target ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub x: Vec<u32>,
    pub ann: Ideal,
    pub target: Ideal,
    /// Dimension of the submodule `R x`.
    pub orbit_dim: usize,
}

impl EmbeddingWitness {
    fn build(fam: &ProductFamily, x: Vec<u32>, target: &Ideal) -> Self {
        let product = fam.product();
        let ann = product.annihilator_of(&x);
        let orbit_dim = product.spin(&[&x]).dim();
        Self {
            x,
            ann,
            target: target.clone(),
            orbit_dim,
        }
    }

    /// `ann(x) = I` and `dim R x = dim R - dim I`.
    pub fn is_valid(&self) -> bool {
        self.ann.space == self.target.space
            && self.orbit_dim + self.target.dim() == self.target.space.ambient_dim()
    }
}

/// Outcome of the finite deletion check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TCofiniteReport {
    pub t: usize,
    pub holds: bool,
    /// Deletion sets examined, including the empty one.
    pub checked: u64,
    /// The first deletion set (factor indices) whose remaining product has
    /// a different annihilator.
    pub failing_deletion: Option<Vec<usize>>,
}

/// Whether deleting any `t` or fewer factors leaves a product whose
/// annihilator is exactly `i`. A finite analog of the cofinite product
/// condition, which is vacuous for finite families.
pub fn t_cofinite_check(fam: &ProductFamily, i: &Ideal, t: usize) -> Result<TCofiniteReport, EmbedError> {
    fam.check_ideal(i)?;
    let n = fam.len();
    if (n > 0 && t >= n) || (n == 0 && t > 0) {
        return Err(EmbedError::DeletionBudget { t, factors: n });
    }
    let total: u64 = (0..=t).map(|k| binomial(n as u64, k as u64)).sum();
    if total > DELETION_LIMIT {
        return Err(EmbedError::TooManyDeletions(total));
    }
    let anns: Vec<Ideal> = fam.factors.iter().map(ModuleRep::annihilator).collect();
    let whole = Ideal::whole(&fam.algebra);
    let mut checked = 0u64;
    let mut deleted: Vec<usize> = Vec::new();
    let mut failing = None;
    for k in 0..=t {
        for_each_combination(n, k, &mut deleted, &mut |del| {
            checked += 1;
            let ann = (0..n)
                .filter(|j| !del.contains(j))
                .fold(whole.clone(), |acc, j| acc.intersect(&anns[j]));
            if ann.space != i.space {
                failing = Some(del.to_vec());
                return false;
            }
            true
        });
        if failing.is_some() {
            break;
        }
    }
    Ok(TCofiniteReport {
        t,
        holds: failing.is_none(),
        checked,
        failing_deletion: failing,
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
fn for_each_combination(
    n: usize,
    k: usize,
    buf: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn go(
        start: usize,
        n: usize,
        k: usize,
        buf: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if buf.len() == k {
            return f(buf);
        }
        for j in start..n {
            buf.push(j);
            let go_on = go(j + 1, n, k, buf, f);
            buf.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    buf.clear();
    go(0, n, k, buf, f)
}

/// Result of a witness search. Only an exhaustive scan reports `NoneExists`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingSearch {
    Found(EmbeddingWitness),
    NoneExists { scanned: u64 },
    Unknown { sampled: usize },
}

/// Searches for `x` with `ann(x) = i`: `budget` random vectors first, then
/// every vector when the product is small enough.
pub fn find_embedding(
    fam: &ProductFamily,
    i: &Ideal,
    seed: u64,
    budget: usize,
) -> Result<EmbeddingSearch, EmbedError> {
    fam.check_ideal(i)?;
    let product = fam.product();
    if !i.is_contained_in(&product.annihilator()) {
        return Err(EmbedError::TargetNotBelowAnnihilator);
    }
    let f = fam.algebra.field();
    let n = fam.total_dim();
    let hits = |x: &[u32]| product.annihilator_of(x).space == i.space;
    let mut rng = rng::seeded(seed);
    for _ in 0..budget {
        let x = rng::vector(&mut rng, f, n);
        if hits(&x) {
            return Ok(EmbeddingSearch::Found(EmbeddingWitness::build(fam, x, i)));
        }
    }
    match fam.cardinality() {
        Some(size) if size <= EXHAUSTIVE_LIMIT => {
            let p = f.modulus();
            let mut x = vec![0u32; n];
            for _ in 0..size {
                if hits(&x) {
                    return Ok(EmbeddingSearch::Found(EmbeddingWitness::build(fam, x, i)));
                }
                for c in x.iter_mut() {
                    *c += 1;
                    if *c < p {
                        break;
                    }
                    *c = 0;
                }
            }
            Ok(EmbeddingSearch::NoneExists { scanned: size })
        }
        _ => Ok(EmbeddingSearch::Unknown { sampled: budget }),
    }
}

/// One choice inside a stage: `v` was not yet killed, and factor `factor`
/// supplied `y` with `v y != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StagePick {
    /// `v` in coordinates of the algebra the construction runs over.
    pub v: Vec<u32>,
    pub factor: usize,
    pub y: Vec<u32>,
    /// `dim (ann {y_1, ..., y_j} ∩ B_n)` after this pick.
    pub dim_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageRecord {
    /// 1-based stage number `n`.
    pub stage: usize,
    /// Basis indices spanning `B_n`, in the order they were added.
    pub slab: Vec<usize>,
    pub picks: Vec<StagePick>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub basis_order: Vec<usize>,
    /// Dimension of `R / I`, the algebra the stages run over.
    pub quotient_dim: usize,
    /// Basis indices of `R` whose images form the basis of `R / I`.
    pub quotient_basis: Vec<usize>,
    pub stages: Vec<StageRecord>,
}

impl ConstructionTrace {
    /// Within every stage the recorded dimensions strictly decrease,
    /// starting below `n`.
    pub fn strictly_descends(&self) -> bool {
        self.stages.iter().all(|s| {
            let mut prev = s.slab.len();
            s.picks.iter().all(|p| {
                let ok = p.dim_after < prev;
                prev = p.dim_after;
                ok
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StagedOutcome {
    Success(EmbeddingWitness),
    /// No unused factor moves `v`, written in coordinates of `R`.
    Stall { stage: usize, blocking_v: Vec<u32> },
}

/// The staged basis construction. Stage `n` works in `B_n`, the span of the
/// first `n` basis vectors (in `basis_order`), and consumes fresh factors
/// until the annihilator of the chosen vectors meets `B_n` trivially. With
/// `I != 0` the stages run over `R / I`, whose basis is the image of the
/// basis vectors of `R` at the non-pivot columns of `I`.
pub fn staged_basis_embedding(
    fam: &ProductFamily,
    i: &Ideal,
    basis_order: Option<&[usize]>,
    seed: u64,
) -> Result<(StagedOutcome, ConstructionTrace), EmbedError> {
    fam.check_ideal(i)?;
    for (k, m) in fam.factors.iter().enumerate() {
        if !i.is_contained_in(&m.annihilator()) {
            return Err(EmbedError::FactorNotKilled(k));
        }
    }
    let q = quotient_algebra(&fam.algebra, &Ideal {
        space: i.space.clone(),
        sided: Sidedness::TwoSided,
    })?;
    let d = q.algebra.dim();
    let order: Vec<usize> = match basis_order {
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != (0..d).collect::<Vec<_>>() {
                return Err(EmbedError::BasisOrder(d));
            }
            o.to_vec()
        }
        None => (0..d).collect(),
    };
    // factors as modules over R / I
    let factors: Vec<ModuleRep> = fam
        .factors
        .iter()
        .map(|m| {
            let action = q.complement.iter().map(|&c| m.action()[c].clone()).collect();
            ModuleRep::from_parts(&q.algebra, m.dim(), action).expect("shapes agree")
        })
        .collect();
    let f = q.algebra.field();
    let mut rng = rng::seeded(seed);
    let mut used = vec![false; factors.len()];
    let mut chosen: Vec<Option<Vec<u32>>> = vec![None; factors.len()];
    let mut trace = ConstructionTrace {
        basis_order: order.clone(),
        quotient_dim: d,
        quotient_basis: q.complement.clone(),
        stages: Vec::new(),
    };
    let lift = |v: &[u32]| -> Vec<u32> {
        let mut out = vec![0u32; fam.algebra.dim()];
        for (&c, &x) in q.complement.iter().zip(v) {
            out[c] = x;
        }
        out
    };
    for n in 1..=d {
        let slab = order[..n].to_vec();
        let b_n = Subspace::span(
            f,
            d,
            &slab.iter().map(|&b| q.algebra.basis_vector(b)).collect::<Vec<_>>(),
        );
        let mut w = b_n;
        let mut record = StageRecord {
            stage: n,
            slab,
            picks: Vec::new(),
        };
        while !w.is_zero() {
            let v = w.vectors().next().expect("nonzero").to_vec();
            let Some(k) = (0..factors.len())
                .find(|&k| !used[k] && !factors[k].element_matrix(&v).is_zero())
            else {
                trace.stages.push(record);
                return Ok((
                    StagedOutcome::Stall {
                        stage: n,
                        blocking_v: lift(&v),
                    },
                    trace,
                ));
            };
            let (y, next) = best_y(&factors[k], &v, &w, &mut rng);
            used[k] = true;
            record.picks.push(StagePick {
                v: v.clone(),
                factor: k,
                y: y.clone(),
                dim_after: next.dim(),
            });
            chosen[k] = Some(y);
            w = next;
        }
        trace.stages.push(record);
    }
    let x: Vec<u32> = fam
        .factors
        .iter()
        .zip(&chosen)
        .flat_map(|(m, y)| y.clone().unwrap_or_else(|| vec![0; m.dim()]))
        .collect();
    Ok((StagedOutcome::Success(EmbeddingWitness::build(fam, x, i)), trace))
}

/// Among candidates `y` of `m` with `v y != 0`, one minimizing
/// `dim (w ∩ ann y)`; returns it with that intersection.
fn best_y(m: &ModuleRep, v: &[u32], w: &Subspace, rng: &mut LabRng) -> (Vec<u32>, Subspace) {
    let f = m.field();
    let n = m.dim();
    let mut candidates: Vec<Vec<u32>> = Vec::new();
    match m.cardinality() {
        Some(size) if size <= FACTOR_ENUMERATION_LIMIT => {
            let p = f.modulus();
            let mut y = vec![0u32; n];
            for _ in 0..size {
                candidates.push(y.clone());
                for c in y.iter_mut() {
                    *c += 1;
                    if *c < p {
                        break;
                    }
                    *c = 0;
                }
            }
        }
        _ => {
            for j in 0..n {
                let mut e = vec![0u32; n];
                e[j] = 1;
                candidates.push(e);
            }
            for _ in 0..FACTOR_SAMPLES {
                candidates.push(rng::vector(rng, f, n));
            }
        }
    }
    let mut best: Option<(Vec<u32>, Subspace)> = None;
    for y in candidates {
        if m.act(v, &y).iter().all(|&c| c == 0) {
            continue;
        }
        let next = w.intersect(&m.annihilator_of(&y).space);
        if best.as_ref().is_none_or(|(_, b)| next.dim() < b.dim()) {
            best = Some((y, next));
        }
    }
    best.expect("v acts nontrivially, so some basis vector is moved")
}

/// One factor visited by the annihilator chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub factor: usize,
    /// The element `r` of the current `L`.
    pub r: Vec<u32>,
    /// The chosen component, when the factor moves `r`.
    pub x: Option<Vec<u32>>,
    /// `dim L` after this step.
    pub dim_l: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTrace {
    pub steps: Vec<ChainStep>,
}

impl ChainTrace {
    /// `dim L` strictly drops at every accepted step.
    pub fn strictly_descends(&self, algebra_dim: usize) -> bool {
        let mut prev = algebra_dim;
        self.steps.iter().filter(|s| s.x.is_some()).all(|s| {
            let ok = s.dim_l < prev;
            prev = s.dim_l;
            ok
        })
    }

    pub fn accepted(&self) -> usize {
        self.steps.iter().filter(|s| s.x.is_some()).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainOutcome {
    Success(EmbeddingWitness),
    /// Factors ran out while `L` was still nonzero.
    Failure { stable_l: Subspace },
}

/// The descending annihilator chain: `L` starts as `R`; for each factor in
/// turn, take `r` the first basis vector of `L`, pick `x` in the factor with
/// `r x != 0` and replace `L` by `L ∩ ann x`. Factors that kill `r` are
/// skipped.
pub fn annihilator_chain_embedding(
    fam: &ProductFamily,
    seed: u64,
) -> (ChainOutcome, ChainTrace) {
    let a = &fam.algebra;
    let f = a.field();
    let mut rng = rng::seeded(seed);
    let mut l = Subspace::full(f, a.dim());
    let mut chosen: Vec<Option<Vec<u32>>> = vec![None; fam.len()];
    let mut trace = ChainTrace { steps: Vec::new() };
    for (k, m) in fam.factors.iter().enumerate() {
        if l.is_zero() {
            break;
        }
        let r = l.vectors().next().expect("nonzero").to_vec();
        let moves = |y: &[u32]| m.act(&r, y).iter().any(|&c| c != 0);
        let mut x = None;
        for _ in 0..16 {
            let y = rng::vector(&mut rng, f, m.dim());
            if moves(&y) {
                x = Some(y);
                break;
            }
        }
        if x.is_none() {
            x = (0..m.dim())
                .map(|j| {
                    let mut e = vec![0u32; m.dim()];
                    e[j] = 1;
                    e
                })
                .find(|e| moves(e));
        }
        if let Some(y) = &x {
            l = l.intersect(&m.annihilator_of(y).space);
        }
        trace.steps.push(ChainStep {
            factor: k,
            r,
            x: x.clone(),
            dim_l: l.dim(),
        });
        chosen[k] = x;
    }
    if !l.is_zero() {
        return (ChainOutcome::Failure { stable_l: l }, trace);
    }
    let x: Vec<u32> = fam
        .factors
        .iter()
        .zip(&chosen)
        .flat_map(|(m, y)| y.clone().unwrap_or_else(|| vec![0; m.dim()]))
        .collect();
    let zero = Ideal::zero(a);
    (ChainOutcome::Success(EmbeddingWitness::build(fam, x, &zero)), trace)
}

/// Composition length plus two: the longest strictly descending chain of
/// submodules has `length + 1` members.
pub fn kappa_finite(m: &ModuleRep, seed: u64) -> Result<usize, MeatAxeError> {
    Ok(composition_factors(m, seed)?.length() + 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SufficiencyReport {
    pub faithful: Vec<usize>,
    pub kappa: usize,
    pub guaranteed: bool,
    /// Over a simple algebra every nonzero module is faithful.
    pub algebra_is_simple: bool,
}

impl SufficiencyReport {
    pub fn faithful_count(&self) -> usize {
        self.faithful.len()
    }
}

/// Counts faithful factors against `kappa_finite` of the regular module.
pub fn sufficiency_check(fam: &ProductFamily, seed: u64) -> Result<SufficiencyReport, EmbedError> {
    let a = &fam.algebra;
    let faithful: Vec<usize> = fam
        .factors
        .iter()
        .enumerate()
        .filter(|(_, m)| m.is_faithful())
        .map(|(k, _)| k)
        .collect();
    let regular = ModuleRep::regular(a);
    let cf = composition_factors(&regular, seed)?;
    let kappa = cf.length() + 2;
    let algebra_is_simple = cf.classes.len() == 1 && jacobson_radical(a, seed)?.is_zero();
    Ok(SufficiencyReport {
        guaranteed: faithful.len() >= kappa,
        faithful,
        kappa,
        algebra_is_simple,
    })
}
