//! Finite-dimensional associative algebras given by structure constants.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::field::PrimeField;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected {expected} structure constants, got {got}")]
    StructureLength { expected: usize, got: usize },
    #[error("identity vector has length {got}, algebra dimension is {dim}")]
    IdentityLength { dim: usize, got: usize },
    #[error("{count} basis names given for an algebra of dimension {dim}")]
    BasisNames { dim: usize, count: usize },
    #[error("algebra is not associative with identity: {0} violated constraints")]
    Invalid(usize),
}

/// An associative algebra over GF(p) with basis `b_0, ..., b_{d-1}` and
/// `b_i b_j = sum_k lambda[i][j][k] b_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    structure: Vec<u32>,
    one: Vec<u32>,
    basis_names: Vec<String>,
}

/// A violated algebra axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `(b_i b_j) b_k` and `b_i (b_j b_k)` differ in coordinate `l`.
    Associativity { i: usize, j: usize, k: usize, l: usize },
    /// `1 * b_j` differs from `b_j` in coordinate `k`.
    LeftIdentity { j: usize, k: usize },
    /// `b_j * 1` differs from `b_j` in coordinate `k`.
    RightIdentity { j: usize, k: usize },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            Self::Associativity { i, j, k, l } => {
                write!(f, "(b{i} b{j}) b{k} and b{i} (b{j} b{k}) differ in coordinate {l}")
            }
            Self::LeftIdentity { j, k } => write!(f, "1 b{j} differs from b{j} in coordinate {k}"),
            Self::RightIdentity { j, k } => write!(f, "b{j} 1 differs from b{j} in coordinate {k}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Algebra {
    /// Shape-checked constructor; use [`Algebra::validate`] for the axioms.
    /// `structure[(i * d + j) * d + k]` is `lambda[i][j][k]`.
    pub fn new(
        field: PrimeField,
        dim: usize,
        structure: Vec<u32>,
        one: Vec<u32>,
    ) -> Result<Self, AlgebraError> {
        let expected = dim * dim * dim;
        if structure.len() != expected {
            return Err(AlgebraError::StructureLength {
                expected,
                got: structure.len(),
            });
        }
        if one.len() != dim {
            return Err(AlgebraError::IdentityLength {
                dim,
                got: one.len(),
            });
        }
        let p = field.modulus();
        Ok(Self {
            field,
            dim,
            structure: structure.into_iter().map(|x| x % p).collect(),
            one: one.into_iter().map(|x| x % p).collect(),
            basis_names: (0..dim).map(|i| format!("b{i}")).collect(),
        })
    }

    /// Like [`Algebra::new`] but also rejects algebras failing validation.
    pub fn checked(
        field: PrimeField,
        dim: usize,
        structure: Vec<u32>,
        one: Vec<u32>,
    ) -> Result<Self, AlgebraError> {
        let a = Self::new(field, dim, structure, one)?;
        let report = a.validate();
        if !report.is_valid() {
            return Err(AlgebraError::Invalid(report.violations.len()));
        }
        Ok(a)
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self, AlgebraError> {
        if names.len() != self.dim {
            return Err(AlgebraError::BasisNames {
                dim: self.dim,
                count: names.len(),
            });
        }
        self.basis_names = names;
        Ok(self)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn structure(&self) -> &[u32] {
        &self.structure
    }

    /// Coordinates of the identity element.
    pub fn one(&self) -> &[u32] {
        &self.one
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    /// The product of two elements given in coordinates.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let d = self.dim;
        let mut out = vec![0u32; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(xi, yj);
                let base = (i * d + j) * d;
                for (k, o) in out.iter_mut().enumerate() {
                    let l = self.structure[base + k];
                    if l != 0 {
                        *o = f.mul_add(*o, c, l);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y` acting on coordinate columns.
    pub fn left_mul_matrix(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|j| self.mul(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y -> y x` acting on coordinate columns.
    pub fn right_mul_matrix(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|j| self.mul(&self.basis_vector(j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Checks associativity on all basis quadruples and the identity on both
    /// sides. The report lists every violated constraint.
    pub fn validate(&self) -> ValidationReport {
        let f = self.field;
        let d = self.dim;
        let mut violations = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut lhs = 0u32;
                        let mut rhs = 0u32;
                        for m in 0..d {
                            lhs = f.mul_add(lhs, self.constant(i, j, m), self.constant(m, k, l));
                            rhs = f.mul_add(rhs, self.constant(j, k, m), self.constant(i, m, l));
                        }
                        if lhs != rhs {
                            violations.push(Violation::Associativity { i, j, k, l });
                        }
                    }
                }
            }
        }
        for j in 0..d {
            let b = self.basis_vector(j);
            let left = self.mul(&self.one, &b);
            let right = self.mul(&b, &self.one);
            for k in 0..d {
                if left[k] != b[k] {
                    violations.push(Violation::LeftIdentity { j, k });
                }
                if right[k] != b[k] {
                    violations.push(Violation::RightIdentity { j, k });
                }
            }
        }
        ValidationReport { violations }
    }

    /// Direct product of algebras over a common field; bases are concatenated.
    pub fn product(parts: &[Algebra]) -> Option<Self> {
        let field = parts.first()?.field;
        if parts.iter().any(|a| a.field != field) {
            return None;
        }
        let d: usize = parts.iter().map(|a| a.dim).sum();
        let mut structure = vec![0u32; d * d * d];
        let mut one = Vec::with_capacity(d);
        let mut names = Vec::with_capacity(d);
        let mut off = 0;
        for (idx, a) in parts.iter().enumerate() {
            let e = a.dim;
            for i in 0..e {
                for j in 0..e {
                    for k in 0..e {
                        structure[((off + i) * d + off + j) * d + off + k] = a.constant(i, j, k);
                    }
                }
            }
            one.extend_from_slice(&a.one);
            names.extend(a.basis_names.iter().map(|n| format!("{idx}:{n}")));
            off += e;
        }
        let mut out = Self::new(field, d, structure, one).ok()?;
        out.basis_names = names;
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn field_itself_is_valid() {
        let a = Algebra::new(gf(2), 1, vec![1], vec![1]).unwrap();
        assert!(a.validate().is_valid());
    }

    #[test]
    fn wrong_identity_is_reported() {
        let a = Algebra::new(gf(2), 1, vec![1], vec![0]).unwrap();
        let r = a.validate();
        assert!(r
            .violations
            .contains(&Violation::LeftIdentity { j: 0, k: 0 }));
        assert!(r
            .violations
            .contains(&Violation::RightIdentity { j: 0, k: 0 }));
        assert!(matches!(
            Algebra::checked(gf(2), 1, vec![1], vec![0]),
            Err(AlgebraError::Invalid(2))
        ));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            Algebra::new(gf(3), 2, vec![0; 7], vec![1, 0]),
            Err(AlgebraError::StructureLength { expected: 8, got: 7 })
        ));
        assert!(matches!(
            Algebra::new(gf(3), 1, vec![1], vec![1, 0]),
            Err(AlgebraError::IdentityLength { .. })
        ));
    }

    #[test]
    fn non_associative_table_is_caught() {
        // d = 2 over GF(2), b0 = 1, b1*b1 = b0 + b1 except we break (b1 b1) b1
        let mut s = vec![0u32; 8];
        let set = |s: &mut Vec<u32>, i: usize, j: usize, k: usize| s[(i * 2 + j) * 2 + k] = 1;
        set(&mut s, 0, 0, 0);
        set(&mut s, 0, 1, 1);
        set(&mut s, 1, 0, 1);
        set(&mut s, 1, 1, 0);
        // this is GF(2)[x]/(x^2 - 1): valid
        let a = Algebra::new(gf(2), 2, s.clone(), vec![1, 0]).unwrap();
        assert!(a.validate().is_valid());
        // b1 * b0 = 0 breaks right identity and associativity
        s[2 * 2 + 1] = 0;
        let a = Algebra::new(gf(2), 2, s, vec![1, 0]).unwrap();
        let r = a.validate();
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Associativity { .. })));
    }

    #[test]
    fn left_and_right_multiplication_matrices() {
        let a = Algebra::new(gf(2), 1, vec![1], vec![1]).unwrap();
        assert_eq!(a.left_mul_matrix(&[1]), Matrix::identity(gf(2), 1));
        assert_eq!(a.right_mul_matrix(&[0]), Matrix::zeros(gf(2), 1, 1));
    }
}
