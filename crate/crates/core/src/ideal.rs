//! Left and two-sided ideals as coordinate subspaces, generated ideals and
//! quotient algebras.

use alloc::vec::Vec;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::subspace::{EchelonBuilder, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sidedness {
    Left,
    TwoSided,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("cannot form the quotient by the whole algebra")]
    WholeAlgebra,
    #[error("subspace is not a two-sided ideal")]
    NotTwoSided,
    #[error("ideal has ambient dimension {got}, algebra has dimension {expected}")]
    Dimension { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    pub space: Subspace,
    pub sided: Sidedness,
}

impl Ideal {
    pub fn zero(a: &Algebra) -> Self {
        Self {
            space: Subspace::zero(a.field(), a.dim()),
            sided: Sidedness::TwoSided,
        }
    }

    pub fn whole(a: &Algebra) -> Self {
        Self {
            space: Subspace::full(a.field(), a.dim()),
            sided: Sidedness::TwoSided,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.space.is_full()
    }

    /// Containment of the underlying subspaces.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Self {
            space: self.space.intersect(&other.space),
            sided: self.sided.min(other.sided),
        }
    }

    /// Same subspace, ignoring the sidedness flag.
    pub fn same_space(&self, other: &Self) -> bool {
        self.space == other.space
    }
}

/// Is `s` closed under left multiplication by the algebra?
pub fn is_left_ideal(a: &Algebra, s: &Subspace) -> bool {
    (0..a.dim()).all(|i| {
        let b = a.basis_vector(i);
        s.vectors().all(|v| s.contains(&a.mul(&b, v)))
    })
}

pub fn is_two_sided(a: &Algebra, s: &Subspace) -> bool {
    is_left_ideal(a, s)
        && (0..a.dim()).all(|i| {
            let b = a.basis_vector(i);
            s.vectors().all(|v| s.contains(&a.mul(v, &b)))
        })
}

/// The least left (or two-sided) ideal containing `gens`.
pub fn ideal_generated<V: AsRef<[u32]>>(a: &Algebra, gens: &[V], sided: Sidedness) -> Ideal {
    let mut ops: Vec<Matrix> = (0..a.dim())
        .map(|i| a.left_mul_matrix(&a.basis_vector(i)))
        .collect();
    if sided == Sidedness::TwoSided {
        ops.extend((0..a.dim()).map(|i| a.right_mul_matrix(&a.basis_vector(i))));
    }
    let space = spin_under(a, &ops, gens);
    Ideal { space, sided }
}

fn spin_under<V: AsRef<[u32]>>(a: &Algebra, ops: &[Matrix], gens: &[V]) -> Subspace {
    let mut echelon = EchelonBuilder::new(a.field(), a.dim());
    let mut work: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if let Some(row) = echelon.insert(g.as_ref()) {
            work.push(row.to_vec());
        }
    }
    while let Some(w) = work.pop() {
        for op in ops {
            let image = op.mul_vec(&w);
            if let Some(row) = echelon.insert(&image) {
                work.push(row.to_vec());
            }
        }
    }
    echelon.into_subspace()
}

/// Span of all products `x y` with `x` in `i` and `y` in `j`.
pub fn ideal_product(a: &Algebra, i: &Ideal, j: &Ideal) -> Subspace {
    let products: Vec<Vec<u32>> = i
        .space
        .vectors()
        .flat_map(|x| j.space.vectors().map(move |y| a.mul(x, y)))
        .collect();
    Subspace::span(a.field(), a.dim(), &products)
}

/// A quotient algebra `A / I` with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: Algebra,
    /// `(d - dim I) x d` matrix sending coordinates in `A` to coordinates in `A / I`.
    pub projection: Matrix,
    /// Basis indices of `A` whose images form the quotient basis.
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, x: &[u32]) -> Vec<u32> {
        self.projection.mul_vec(x)
    }
}

/// Quotient by a proper two-sided ideal. The quotient basis is the image of
/// the standard basis vectors at the non-pivot columns of the ideal's RREF.
pub fn quotient_algebra(a: &Algebra, ideal: &Ideal) -> Result<Quotient, IdealError> {
    if ideal.space.ambient_dim() != a.dim() {
        return Err(IdealError::Dimension {
            expected: a.dim(),
            got: ideal.space.ambient_dim(),
        });
    }
    if ideal.is_whole() {
        return Err(IdealError::WholeAlgebra);
    }
    if !is_two_sided(a, &ideal.space) {
        return Err(IdealError::NotTwoSided);
    }
    let f = a.field();
    let complement = ideal.space.non_pivots();
    let q = complement.len();
    let d = a.dim();
    let project = |x: &[u32]| -> Vec<u32> {
        let r = ideal.space.reduce(x);
        complement.iter().map(|&c| r[c]).collect()
    };
    let mut structure = Vec::with_capacity(q * q * q);
    for &ci in &complement {
        for &cj in &complement {
            let prod = a.mul(&a.basis_vector(ci), &a.basis_vector(cj));
            structure.extend(project(&prod));
        }
    }
    let one = project(a.one());
    let names = complement
        .iter()
        .map(|&c| a.basis_names()[c].clone())
        .collect();
    let algebra = Algebra::new(f, q, structure, one)
        .and_then(|alg| alg.with_basis_names(names))
        .expect("quotient shapes are consistent");
    let cols: Vec<Vec<u32>> = (0..d).map(|j| project(&a.basis_vector(j))).collect();
    let projection = Matrix::from_columns(f, q, &cols);
    Ok(Quotient {
        algebra,
        projection,
        complement,
    })
}
