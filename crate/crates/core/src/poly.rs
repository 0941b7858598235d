//! Univariate polynomials over GF(p): characteristic polynomials and
//! factorization into irreducibles, as needed by the MeatAxe.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::rng::{self, LabRng};

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self { coeffs: vec![0, 1] }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self, f: PrimeField) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| f.add(self.get(i), o.get(i)))
            .collect();
        Self::new(c)
    }

    pub fn sub(&self, o: &Self, f: PrimeField) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| f.sub(self.get(i), o.get(i)))
            .collect();
        Self::new(c)
    }

    pub fn mul(&self, o: &Self, f: PrimeField) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0u32; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] = f.mul_add(c[i + j], a, b);
            }
        }
        Self::new(c)
    }

    pub fn scale(&self, s: u32, f: PrimeField) -> Self {
        Self::new(self.coeffs.iter().map(|&a| f.mul(a, s)).collect())
    }

    pub fn monic(&self, f: PrimeField) -> Self {
        match f.inv(self.leading()) {
            Some(inv) => self.scale(inv, f),
            None => Self::zero(),
        }
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, d: &Self, f: PrimeField) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let inv = f.inv(d.leading()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        let dd = d.deg();
        let mut q = vec![0u32; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = f.mul(r[i + dd], inv);
            q[i] = c;
            if c == 0 {
                continue;
            }
            let s = f.neg(c);
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[i + j] = f.mul_add(r[i + j], s, b);
            }
        }
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self, f: PrimeField) -> Self {
        self.divrem(d, f).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self, f: PrimeField) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: PrimeField) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, (i as u64 % f.modulus() as u64) as u32))
            .collect();
        Self::new(c)
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, mut e: u64, m: &Self, f: PrimeField) -> Self {
        let mut base = self.rem(m, f);
        let mut acc = Self::one().rem(m, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(m, f);
            }
            base = base.mul(&base, f).rem(m, f);
            e >>= 1;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix (Horner).
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let f = a.field();
        let n = a.rows();
        let mut acc = Matrix::zeros(f, n, n);
        let id = Matrix::identity(f, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(a);
            acc.add_scaled(c, &id);
        }
        acc
    }

    fn get(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }
}

/// Characteristic polynomial `det(xI - A)` through Hessenberg reduction.
pub fn charpoly(a: &Matrix) -> Poly {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let f = a.field();
    let n = a.rows();
    let mut h: Vec<Vec<u32>> = (0..n).map(|r| a.row(r).to_vec()).collect();

    // similarity transforms to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]).expect("nonzero pivot");
        for k in j + 2..n {
            let u = f.mul(h[k][j], inv);
            if u == 0 {
                continue;
            }
            // row_k -= u * row_{j+1}
            let neg = f.neg(u);
            let (upper, lower) = h.split_at_mut(k);
            for (x, &v) in lower[0].iter_mut().zip(&upper[j + 1]) {
                *x = f.mul_add(*x, neg, v);
            }
            // col_{j+1} += u * col_k
            for row in h.iter_mut() {
                let v = row[k];
                row[j + 1] = f.mul_add(row[j + 1], u, v);
            }
        }
    }

    // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod sub-diagonal) p_{m-i-1}
    let mut ps: Vec<Poly> = Vec::with_capacity(n + 1);
    ps.push(Poly::one());
    for m in 0..n {
        let lin = Poly::new(vec![f.neg(h[m][m]), 1]);
        let mut pm = lin.mul(&ps[m], f);
        let mut prod = 1u32;
        for i in 1..=m {
            prod = f.mul(prod, h[m - i + 1][m - i]);
            let coef = f.mul(h[m - i][m], prod);
            if coef != 0 {
                pm = pm.sub(&ps[m - i].scale(coef, f), f);
            }
        }
        ps.push(pm);
    }
    ps.pop().expect("nonempty")
}

/// The distinct monic irreducible factors of `g`, sorted by degree and then
/// coefficients.
pub fn irreducible_factors(g: &Poly, f: PrimeField, rng: &mut LabRng) -> Vec<Poly> {
    let mut out = Vec::new();
    if g.degree().is_none_or(|d| d == 0) {
        return out;
    }
    collect_factors(&g.monic(f), f, rng, &mut out);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}

fn collect_factors(g: &Poly, f: PrimeField, rng: &mut LabRng, out: &mut Vec<Poly>) {
    if g.deg() == 0 {
        return;
    }
    let dg = g.derivative(f);
    if dg.is_zero() {
        // g(x) = h(x^p); over a prime field h(x^p) = h(x)^p
        let p = f.modulus() as usize;
        let root = Poly::new(g.coeffs.iter().step_by(p).copied().collect());
        collect_factors(&root, f, rng, out);
        return;
    }
    let common = g.gcd(&dg, f);
    if common.deg() == 0 {
        distinct_degree(g, f, rng, out);
    } else {
        let (squarefree_part, _) = g.divrem(&common, f);
        collect_factors(&squarefree_part.monic(f), f, rng, out);
        collect_factors(&common, f, rng, out);
    }
}

/// Distinct-degree factorization of a squarefree monic polynomial.
fn distinct_degree(g: &Poly, f: PrimeField, rng: &mut LabRng, out: &mut Vec<Poly>) {
    let p = f.modulus() as u64;
    let mut rest = g.clone();
    let mut h = Poly::x().rem(&rest, f);
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod(p, &rest, f);
        let g_d = h.sub(&Poly::x(), f).gcd(&rest, f);
        if g_d.deg() > 0 {
            equal_degree(&g_d, d, f, rng, out);
            rest = rest.divrem(&g_d, f).0.monic(f);
            h = h.rem(&rest, f);
        }
        d += 1;
    }
    if rest.deg() > 0 {
        out.push(rest);
    }
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
fn equal_degree(g: &Poly, d: usize, f: PrimeField, rng: &mut LabRng, out: &mut Vec<Poly>) {
    let n = g.deg();
    if n == d {
        out.push(g.clone());
        return;
    }
    let p = f.modulus() as u64;
    loop {
        let a = Poly::new(rng::vector(rng, f, n));
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(g, f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t, f).rem(g, f);
                acc = acc.add(&t, f);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (prod_{i<d} a^(p^i))^((p-1)/2)
            let mut t = a.rem(g, f);
            let mut prod = t.clone();
            for _ in 1..d {
                t = t.pow_mod(p, g, f);
                prod = prod.mul(&t, f).rem(g, f);
            }
            prod.pow_mod((p - 1) / 2, g, f).sub(&Poly::one(), f)
        };
        let c = b.gcd(g, f);
        if c.deg() > 0 && c.deg() < n {
            let (other, _) = g.divrem(&c, f);
            equal_degree(&c, d, f, rng, out);
            equal_degree(&other.monic(f), d, f, rng, out);
            return;
        }
    }
}
