//! Subspaces of GF(p)^n in canonical reduced row echelon form.
//!
//! Two subspaces are equal iff their basis matrices are equal, so `==` on
//! [`Subspace`] is subspace equality.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeField;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of a list of vectors of length `ambient`.
    pub fn span<V: AsRef<[u32]>>(field: PrimeField, ambient: usize, vectors: &[V]) -> Self {
        Self::from_matrix_rows(&Matrix::from_rows(field, ambient, vectors))
    }

    /// The row space of `m`.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let r = m.rref();
        let basis = Matrix::from_fn(m.field(), r.rank, m.cols(), |i, j| r.matrix.get(i, j));
        Self {
            basis,
            pivots: r.pivots,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Basis rows in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot; the standard basis vectors at these
    /// positions span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `x` modulo the subspace; the result vanishes on every pivot column.
    pub fn reduce(&self, x: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.ambient_dim(), "ambient dimension mismatch");
        let f = self.field();
        let mut v = x.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c != 0 {
                let s = f.neg(c);
                for (a, &b) in v.iter_mut().zip(self.basis.row(i)) {
                    *a = f.mul_add(*a, s, b);
                }
            }
        }
        v
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.reduce(x).iter().all(|&a| a == 0)
    }

    /// Coordinates of `x` with respect to the RREF basis, if `x` lies in the subspace.
    pub fn coordinates(&self, x: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(x) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| x[pc]).collect())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.check_ambient(other);
        self.dim() <= other.dim() && self.vectors().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        self.check_ambient(other);
        let stacked = Matrix::vstack(
            self.field(),
            self.ambient_dim(),
            &[&self.basis, &other.basis],
        );
        Self::from_matrix_rows(&stacked)
    }

    /// Intersection through the kernel of `[U^T | -V^T]`.
    pub fn intersect(&self, other: &Self) -> Self {
        self.check_ambient(other);
        let f = self.field();
        let n = self.ambient_dim();
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Self::zero(f, n);
        }
        let system = Matrix::from_fn(f, n, k + l, |r, c| {
            if c < k {
                self.basis.get(c, r)
            } else {
                f.neg(other.basis.get(c - k, r))
            }
        });
        let kernel = system.kernel();
        let vectors: Vec<Vec<u32>> = kernel
            .vectors()
            .map(|coeffs| self.basis.vec_mul(&coeffs[..k]))
            .collect();
        Self::span(f, n, &vectors)
    }

    /// The subspace `{x : <w, x> = 0 for all w}` orthogonal to this one.
    pub fn annihilator_in_dual(&self) -> Self {
        if self.dim() == 0 {
            return Self::full(self.field(), self.ambient_dim());
        }
        self.basis.kernel()
    }

    fn check_ambient(&self, other: &Self) {
        assert_eq!(
            self.ambient_dim(),
            other.ambient_dim(),
            "ambient dimension mismatch"
        );
        assert_eq!(self.field(), other.field(), "field mismatch");
    }
}

/// Incrementally grown semi-echelon basis, used for spinning.
#[derive(Debug, Clone)]
pub struct EchelonBuilder {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: PrimeField, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        let mut b = Self::new(s.field(), s.ambient_dim());
        for v in s.vectors() {
            b.insert(v);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, x: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut v = x.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                let s = f.neg(c);
                for (a, &b) in v.iter_mut().zip(row) {
                    *a = f.mul_add(*a, s, b);
                }
            }
        }
        v
    }

    /// Adds `x` to the span. Returns the reduced new basis row when `x` was
    /// not already in the span.
    pub fn insert(&mut self, x: &[u32]) -> Option<&[u32]> {
        assert_eq!(x.len(), self.ambient, "ambient dimension mismatch");
        let mut v = self.reduce(x);
        let pc = v.iter().position(|&a| a != 0)?;
        let inv = self.field.inv(v[pc]).expect("nonzero");
        for a in &mut v {
            *a = self.field.mul(*a, inv);
        }
        self.rows.push(v);
        self.pivots.push(pc);
        self.rows.last().map(|r| r.as_slice())
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.reduce(x).iter().all(|&a| a == 0)
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::span(self.field, self.ambient, &self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn all_vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
        let total = (p as usize).pow(n as u32);
        (0..total)
            .map(|mut idx| {
                (0..n)
                    .map(|_| {
                        let d = (idx % p as usize) as u32;
                        idx /= p as usize;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    /// Element set of a subspace, by enumerating all coefficient vectors.
    fn elements(s: &Subspace) -> BTreeSet<Vec<u32>> {
        let p = s.field().modulus();
        if s.dim() == 0 {
            return [vec![0; s.ambient_dim()]].into_iter().collect();
        }
        all_vectors(p, s.dim())
            .into_iter()
            .map(|c| s.basis().vec_mul(&c))
            .collect()
    }

    /// log_p of a finite set size.
    fn log_p(p: u32, n: usize) -> usize {
        let mut d = 0;
        let mut m = 1usize;
        while m < n {
            m *= p as usize;
            d += 1;
        }
        d
    }

    #[test]
    fn idempotence() {
        let f = gf(3);
        let u = Subspace::span(f, 3, &[[1, 2, 0], [0, 1, 1]]);
        assert_eq!(u.intersect(&u), u);
        assert_eq!(u.sum(&u), u);
    }

    #[test]
    fn complementary_coordinate_subspaces() {
        let f = gf(2);
        let u = Subspace::span(f, 4, &[[1, 0, 0, 0], [0, 1, 0, 0]]);
        let v = Subspace::span(f, 4, &[[0, 0, 1, 0], [0, 0, 0, 1]]);
        assert!(u.intersect(&v).is_zero());
        assert!(u.sum(&v).is_full());
        assert_eq!(u.non_pivots(), vec![2, 3]);
    }

    #[test]
    fn coordinates_and_reduce() {
        let f = gf(5);
        let u = Subspace::span(f, 3, &[[1, 1, 0], [0, 1, 1]]);
        let x = [2, 4, 2];
        let c = u.coordinates(&x).unwrap();
        assert_eq!(u.basis().vec_mul(&c), x.to_vec());
        assert!(u.coordinates(&[0, 0, 1]).is_none());
        let r = u.reduce(&[0, 0, 1]);
        for &pc in u.pivots() {
            assert_eq!(r[pc], 0);
        }
    }

    #[test]
    fn echelon_builder_matches_span() {
        let f = gf(3);
        let vs = [[1, 2, 0, 1], [2, 1, 0, 2], [0, 0, 1, 1], [1, 2, 1, 2]];
        let mut b = EchelonBuilder::new(f, 4);
        let added: Vec<bool> = vs.iter().map(|v| b.insert(v).is_some()).collect();
        assert_eq!(added, vec![true, false, true, false]);
        assert_eq!(b.into_subspace(), Subspace::span(f, 4, &vs));
    }

    #[test]
    fn dual_annihilator() {
        let f = gf(2);
        let u = Subspace::span(f, 3, &[[1, 1, 0]]);
        let w = u.annihilator_in_dual();
        assert_eq!(w.dim(), 2);
        for a in w.vectors() {
            assert_eq!((a[0] + a[1]) % 2, 0);
        }
    }

    fn arb_subspace(p: u32, n: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(0..p, n), 0..=n)
            .prop_map(move |rows| Subspace::span(gf(p), n, &rows))
    }

    #[test]
    fn modular_law_by_enumeration() {
        // ambient <= 4, p <= 3: compare against element-set computations
        for p in [2u32, 3] {
            for n in 1..=3usize {
                let all = all_vectors(p, n);
                // all subspaces spanned by up to two vectors
                let mut spaces = BTreeSet::new();
                for a in &all {
                    for b in &all {
                        spaces.insert(Subspace::span(gf(p), n, &[a.clone(), b.clone()]));
                    }
                }
                for u in &spaces {
                    for v in &spaces {
                        let eu = elements(u);
                        let ev = elements(v);
                        let inter: BTreeSet<_> = eu.intersection(&ev).cloned().collect();
                        assert_eq!(elements(&u.intersect(v)), inter);
                        let sum = u.sum(v);
                        let brute_sum: BTreeSet<Vec<u32>> = eu
                            .iter()
                            .flat_map(|x| {
                                ev.iter().map(move |y| {
                                    x.iter().zip(y).map(|(a, b)| (a + b) % p).collect()
                                })
                            })
                            .collect();
                        assert_eq!(elements(&sum), brute_sum);
                        assert_eq!(
                            log_p(p, eu.len()) + log_p(p, ev.len()),
                            log_p(p, brute_sum.len()) + log_p(p, inter.len())
                        );
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn dimension_formula(u in arb_subspace(3, 4), v in arb_subspace(3, 4)) {
            prop_assert_eq!(u.dim() + v.dim(), u.sum(&v).dim() + u.intersect(&v).dim());
            prop_assert!(u.intersect(&v).is_subspace_of(&u));
            prop_assert!(u.is_subspace_of(&u.sum(&v)));
        }

        #[test]
        fn rref_basis_is_canonical(u in arb_subspace(5, 4)) {
            let rebuilt = Subspace::span(gf(5), 4, &u.vectors().map(|v| v.to_vec()).collect::<Vec<_>>());
            prop_assert_eq!(rebuilt, u.clone());
            let pivots = u.pivots();
            prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
