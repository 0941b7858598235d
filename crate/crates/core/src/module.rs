//! Left modules given by one action matrix per algebra basis element.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::field::PrimeField;
use crate::ideal::{Ideal, Sidedness};
use crate::matrix::Matrix;
use crate::subspace::{EchelonBuilder, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("expected {expected} action matrices, got {got}")]
    ActionCount { expected: usize, got: usize },
    #[error("action matrix {index} is not {dim}x{dim}")]
    ActionShape { index: usize, dim: usize },
    #[error("action matrices are over GF({got}), algebra is over GF({expected})")]
    FieldMismatch { expected: u32, got: u32 },
    #[error("action does not respect the product b{i} b{j}")]
    Multiplicative { i: usize, j: usize },
    #[error("the identity element does not act as the identity")]
    Identity,
    #[error("subspace is not invariant under the action")]
    NotSubmodule,
    #[error("modules are over different algebras")]
    AlgebraMismatch,
}

/// A left module over an algebra of dimension `algebra_dim`:
/// `action[i]` is the matrix of `b_i` acting on coordinate columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRep {
    field: PrimeField,
    algebra_dim: usize,
    dim: usize,
    action: Vec<Matrix>,
}

impl ModuleRep {
    /// Checked constructor: shape, field and module axioms.
    pub fn new(a: &Algebra, dim: usize, action: Vec<Matrix>) -> Result<Self, ModuleError> {
        let m = Self::from_parts(a, dim, action)?;
        m.check_axioms(a)?;
        Ok(m)
    }

    /// Shape-checked constructor that skips the axiom check.
    pub fn from_parts(a: &Algebra, dim: usize, action: Vec<Matrix>) -> Result<Self, ModuleError> {
        if action.len() != a.dim() {
            return Err(ModuleError::ActionCount {
                expected: a.dim(),
                got: action.len(),
            });
        }
        for (index, m) in action.iter().enumerate() {
            if m.field() != a.field() {
                return Err(ModuleError::FieldMismatch {
                    expected: a.field().modulus(),
                    got: m.field().modulus(),
                });
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(ModuleError::ActionShape { index, dim });
            }
        }
        Ok(Self {
            field: a.field(),
            algebra_dim: a.dim(),
            dim,
            action,
        })
    }

    /// `action[i] action[j] = sum_k lambda[i][j][k] action[k]`, and `1` acts as the identity.
    pub fn check_axioms(&self, a: &Algebra) -> Result<(), ModuleError> {
        if a.dim() != self.algebra_dim || a.field() != self.field {
            return Err(ModuleError::AlgebraMismatch);
        }
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = Matrix::zeros(self.field, self.dim, self.dim);
                for k in 0..d {
                    let c = a.constant(i, j, k);
                    if c != 0 {
                        rhs.add_scaled(c, &self.action[k]);
                    }
                }
                if lhs != rhs {
                    return Err(ModuleError::Multiplicative { i, j });
                }
            }
        }
        if self.element_matrix(a.one()) != Matrix::identity(self.field, self.dim) {
            return Err(ModuleError::Identity);
        }
        Ok(())
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(a: &Algebra) -> Self {
        let action = (0..a.dim())
            .map(|i| a.left_mul_matrix(&a.basis_vector(i)))
            .collect();
        Self {
            field: a.field(),
            algebra_dim: a.dim(),
            dim: a.dim(),
            action,
        }
    }

    pub fn zero(a: &Algebra) -> Self {
        Self {
            field: a.field(),
            algebra_dim: a.dim(),
            dim: 0,
            action: vec![Matrix::zeros(a.field(), 0, 0); a.dim()],
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Number of vectors in the module, or `None` past `u64`.
    pub fn cardinality(&self) -> Option<u64> {
        u64::from(self.field.modulus()).checked_pow(u32::try_from(self.dim).ok()?)
    }

    /// Matrix by which the algebra element `x` acts.
    pub fn element_matrix(&self, x: &[u32]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                out.add_scaled(c, &self.action[i]);
            }
        }
        out
    }

    /// `x . v` for an algebra element `x` and a module vector `v`.
    pub fn act(&self, x: &[u32], v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim];
        for (i, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, w) in out.iter_mut().zip(self.action[i].mul_vec(v)) {
                *o = f.mul_add(*o, c, w);
            }
        }
        out
    }

    /// `d x n` matrix whose column `i` is `b_i . v`, read as a map from the
    /// algebra's coordinates: its kernel is the annihilator of `v`.
    pub fn orbit_matrix(&self, v: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = self.action.iter().map(|m| m.mul_vec(v)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Left annihilator of a single vector.
    pub fn annihilator_of(&self, v: &[u32]) -> Ideal {
        Ideal {
            space: self.orbit_matrix(v).kernel(),
            sided: Sidedness::Left,
        }
    }

    pub fn direct_sum(a: &Algebra, parts: &[ModuleRep]) -> Self {
        let dim = parts.iter().map(|m| m.dim).sum();
        let action = (0..a.dim())
            .map(|i| {
                let blocks: Vec<&Matrix> = parts.iter().map(|m| &m.action[i]).collect();
                Matrix::block_diag(a.field(), &blocks)
            })
            .collect();
        Self {
            field: a.field(),
            algebra_dim: a.dim(),
            dim,
            action,
        }
    }

    /// `{x : x . M = 0}`, always a two-sided ideal.
    pub fn annihilator(&self) -> Ideal {
        let n2 = self.dim * self.dim;
        let cols: Vec<&[u32]> = self.action.iter().map(|m| m.as_slice()).collect();
        let stacked = Matrix::from_columns(self.field, n2, &cols);
        Ideal {
            space: stacked.kernel(),
            sided: Sidedness::TwoSided,
        }
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator().is_zero()
    }

    /// Smallest submodule containing `vecs`.
    pub fn spin<V: AsRef<[u32]>>(&self, vecs: &[V]) -> Subspace {
        spin_under(self.field, self.dim, &self.action, vecs)
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim
            && self
                .action
                .iter()
                .all(|m| s.vectors().all(|v| s.contains(&m.mul_vec(v))))
    }

    /// Restriction to the submodule `s` (in the coordinates of its RREF
    /// basis) and the induced action on `M / s` (in the coordinates of the
    /// standard basis vectors at the non-pivot columns of `s`).
    pub fn sub_quotient(&self, s: &Subspace) -> Result<(ModuleRep, ModuleRep), ModuleError> {
        if !self.is_submodule(s) {
            return Err(ModuleError::NotSubmodule);
        }
        let f = self.field;
        let k = s.dim();
        let comp = s.non_pivots();
        let mut sub = Vec::with_capacity(self.algebra_dim);
        let mut quot = Vec::with_capacity(self.algebra_dim);
        for m in &self.action {
            let cols: Vec<Vec<u32>> = s
                .vectors()
                .map(|v| s.coordinates(&m.mul_vec(v)).expect("invariant subspace"))
                .collect();
            sub.push(Matrix::from_columns(f, k, &cols));
            let cols: Vec<Vec<u32>> = comp
                .iter()
                .map(|&c| {
                    let r = s.reduce(&m.column(c));
                    comp.iter().map(|&j| r[j]).collect()
                })
                .collect();
            quot.push(Matrix::from_columns(f, comp.len(), &cols));
        }
        let build = |dim, action| ModuleRep {
            field: f,
            algebra_dim: self.algebra_dim,
            dim,
            action,
        };
        Ok((build(k, sub), build(comp.len(), quot)))
    }

    /// The same module written in the basis given by the columns of `p`:
    /// actions become `p^-1 A p`. `None` when `p` is singular.
    pub fn conjugate(&self, p: &Matrix) -> Option<Self> {
        let inv = p.inverse()?;
        Some(Self {
            action: self.action.iter().map(|m| inv.mul(m).mul(p)).collect(),
            ..self.clone()
        })
    }

    /// Transposed action matrices; a module over the opposite algebra.
    pub fn transposed_actions(&self) -> Vec<Matrix> {
        self.action.iter().map(Matrix::transpose).collect()
    }
}

/// Smallest subspace of `GF(p)^n` containing `vecs` and stable under `ops`.
pub fn spin_under<V: AsRef<[u32]>>(
    field: PrimeField,
    n: usize,
    ops: &[Matrix],
    vecs: &[V],
) -> Subspace {
    let mut echelon = EchelonBuilder::new(field, n);
    let mut work: Vec<Vec<u32>> = Vec::new();
    for v in vecs {
        if let Some(row) = echelon.insert(v.as_ref()) {
            work.push(row.to_vec());
        }
    }
    while let Some(w) = work.pop() {
        if echelon.dim() == n {
            break;
        }
        for op in ops {
            if let Some(row) = echelon.insert(&op.mul_vec(&w)) {
                work.push(row.to_vec());
            }
        }
    }
    echelon.into_subspace()
}

/// For simple modules, an invertible `X` with `A1_i X = X A2_i` for every
/// `i`, or `None` when the modules are not isomorphic.
pub fn is_isomorphic_simple(m1: &ModuleRep, m2: &ModuleRep) -> Option<Matrix> {
    if m1.dim != m2.dim || m1.algebra_dim != m2.algebra_dim || m1.field != m2.field {
        return None;
    }
    let f = m1.field;
    let n = m1.dim;
    if n == 0 {
        return Some(Matrix::identity(f, 0));
    }
    // unknown X[r][c] at index r * n + c; equation (A1 X - X A2)[r][c] = 0
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut echelon_rows = EchelonBuilder::new(f, n * n);
    for (a1, a2) in m1.action.iter().zip(&m2.action) {
        for r in 0..n {
            for c in 0..n {
                let mut eq = vec![0u32; n * n];
                for k in 0..n {
                    let x = a1.get(r, k);
                    eq[k * n + c] = f.add(eq[k * n + c], x);
                    let y = a2.get(k, c);
                    eq[r * n + k] = f.sub(eq[r * n + k], y);
                }
                if let Some(row) = echelon_rows.insert(&eq) {
                    rows.push(row.to_vec());
                }
            }
        }
        if echelon_rows.dim() == n * n {
            return None;
        }
    }
    let system = echelon_rows.into_subspace();
    let kernel = system.basis().kernel();
    let found = kernel
        .vectors()
        .map(|v| Matrix::from_rows(f, n, &v.chunks(n).collect::<Vec<_>>()))
        .find(|x| x.inverse().is_some());
    found
}
