//! Brute-force reference implementations, written against enumerated
//! vectors and sets rather than echelon forms, for cross-checking.

use std::collections::HashSet;

use irrtop_core::rng::LabRng;
use irrtop_core::topology::FiniteTopology;
use irrtop_core::{Algebra, ModuleRep, PointSet};
use rand::Rng;

/// Modules with more vectors than this are refused by the oracles.
pub const MAX_VECTORS: u64 = 1 << 13;

/// A module with every vector numbered `0..p^n` (base-`p` digits, first
/// coordinate least significant) and the action tabulated.
pub struct Enumerated {
    p: u32,
    n: usize,
    size: usize,
    /// `act[i][v]` is the number of `b_i v`.
    act: Vec<Vec<u32>>,
}

impl Enumerated {
    pub fn new(m: &ModuleRep) -> Option<Self> {
        let size = m.cardinality().filter(|&s| s <= MAX_VECTORS)? as usize;
        let p = m.field().modulus();
        let n = m.dim();
        let mut e = Self {
            p,
            n,
            size,
            act: Vec::new(),
        };
        e.act = m
            .action()
            .iter()
            .map(|a| (0..size).map(|v| e.encode(&a.mul_vec(&e.decode(v as u32)))).collect())
            .collect();
        Some(e)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn decode(&self, mut v: u32) -> Vec<u32> {
        let mut out = vec![0u32; self.n];
        for c in out.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        out
    }

    pub fn encode(&self, x: &[u32]) -> u32 {
        x.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.n {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn scale(&self, c: u32, v: u32) -> u32 {
        (0..c).fold(0, |acc, _| self.add(acc, v))
    }

    /// The smallest subset containing `set` and `gens` that is closed under
    /// addition and the action; `set` must already be such a subset.
    pub fn extend(&self, set: &mut [bool], gens: &[u32]) {
        let mut members: Vec<u32> = (0..self.size as u32).filter(|&v| set[v as usize]).collect();
        let mut queue: Vec<u32> = gens.to_vec();
        while let Some(w) = queue.pop() {
            if set[w as usize] {
                continue;
            }
            let mut fresh = Vec::new();
            for c in 1..self.p {
                let cw = self.scale(c, w);
                for &s in &members {
                    let x = self.add(s, cw);
                    if !set[x as usize] {
                        set[x as usize] = true;
                        fresh.push(x);
                    }
                }
            }
            members.extend(fresh);
            for table in &self.act {
                queue.push(table[w as usize]);
            }
        }
    }

    pub fn generated(&self, gens: &[u32]) -> Vec<bool> {
        let mut set = vec![false; self.size];
        set[0] = true;
        self.extend(&mut set, gens);
        set
    }
}

/// Irreducibility by generating a submodule from one vector on every line.
/// `None` when the module is too large to enumerate.
pub fn is_irreducible(m: &ModuleRep) -> Option<bool> {
    if m.dim() == 0 {
        return Some(false);
    }
    let e = Enumerated::new(m)?;
    for v in 1..e.size() as u32 {
        let x = e.decode(v);
        let lead = x.iter().find(|&&c| c != 0).copied().unwrap_or(0);
        if lead != 1 {
            continue;
        }
        if e.generated(&[v]).iter().any(|&b| !b) {
            return Some(false);
        }
    }
    Some(true)
}

/// All submodules as membership tables, or `None` past the size limits.
pub fn submodules(m: &ModuleRep, max_vectors: u64, max_count: usize) -> Option<Vec<Vec<bool>>> {
    if m.cardinality()? > max_vectors {
        return None;
    }
    let e = Enumerated::new(m)?;
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let zero = e.generated(&[]);
    seen.insert(zero.clone());
    let mut cyclic: Vec<Vec<bool>> = Vec::new();
    for v in 1..e.size() as u32 {
        let s = e.generated(&[v]);
        if seen.insert(s.clone()) {
            cyclic.push(s);
        }
    }
    let mut all: Vec<Vec<bool>> = seen.iter().cloned().collect();
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for c in &cyclic {
                let gens: Vec<u32> = (0..e.size() as u32).filter(|&v| c[v as usize]).collect();
                let mut sum = s.clone();
                e.extend(&mut sum, &gens);
                if seen.insert(sum.clone()) {
                    if seen.len() > max_count {
                        return None;
                    }
                    next.push(sum.clone());
                    all.push(sum);
                }
            }
        }
        frontier = next;
    }
    Some(all)
}

/// Most members in a strictly increasing chain of submodules from `0` to
/// the whole module, by dynamic programming over the submodule lattice.
pub fn longest_chain_members(m: &ModuleRep, max_vectors: u64, max_count: usize) -> Option<usize> {
    let mut subs = submodules(m, max_vectors, max_count)?;
    subs.sort_by_key(|s| s.iter().filter(|&&b| b).count());
    let subset = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(&x, &y)| !x || y);
    let mut best = vec![1usize; subs.len()];
    for i in 0..subs.len() {
        for j in 0..i {
            if subs[j] != subs[i] && subset(&subs[j], &subs[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.last().copied()
}

/// `kappa` from the longest chain: one more than its number of members.
pub fn kappa(m: &ModuleRep, max_vectors: u64, max_count: usize) -> Option<usize> {
    longest_chain_members(m, max_vectors, max_count).map(|c| c + 1)
}

/// Elements `r` of the algebra with `r x = 0`, counted by enumerating all
/// of `R`. The product acts through `m`.
pub fn annihilator_size(a: &Algebra, m: &ModuleRep, x: &[u32]) -> Option<u64> {
    let p = u64::from(a.field().modulus());
    let size = p.checked_pow(a.dim() as u32).filter(|&s| s <= MAX_VECTORS)?;
    let mut r = vec![0u32; a.dim()];
    let mut count = 0;
    for _ in 0..size {
        if m.act(&r, x).iter().all(|&c| c == 0) {
            count += 1;
        }
        for c in r.iter_mut() {
            *c += 1;
            if u64::from(*c) < p {
                break;
            }
            *c = 0;
        }
    }
    Some(count)
}

/// A random topology on `n` points: random subsets closed under unions and
/// intersections, together with `∅` and the whole space.
pub fn random_topology(n: usize, rng: &mut LabRng) -> FiniteTopology {
    let all = PointSet::full(n);
    let mut sets: Vec<PointSet> = vec![PointSet::EMPTY, all];
    let extra = rng.gen_range(0..=n + 2);
    for _ in 0..extra {
        sets.push(PointSet(rng.gen::<u64>() & all.0));
    }
    loop {
        let mut grown = sets.clone();
        for a in &sets {
            for b in &sets {
                for c in [a.union(*b), a.intersection(*b)] {
                    if !grown.contains(&c) {
                        grown.push(c);
                    }
                }
            }
        }
        if grown.len() == sets.len() {
            break;
        }
        sets = grown;
    }
    FiniteTopology::new(n, &sets).expect("closed under unions and intersections")
}
