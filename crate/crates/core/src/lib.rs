//! Exact computational kernels for spaces of simple modules over
//! finite-dimensional algebras.
//!
//! Everything here is pure and allocation-only: algebras are given by
//! structure constants over a prime field, modules by one action matrix per
//! basis element. On top of the linear algebra substrate the crate provides
//! the MeatAxe, Jacobson radicals, the Zariski and refined Zariski
//! topologies on the set of simple modules, the point closure of a noetherian
//! topology (on finite and on declared symbolic spaces), and constructive
//! embeddings of the regular module into products of modules.
//!
//! IO, file formats and the command line live in the companion `irrtop`
//! crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod embed;
pub mod field;
pub mod ideal;
pub mod irr;
pub mod matrix;
pub mod meataxe;
pub mod module;
pub mod pointset;
pub mod poly;
pub mod presets;
pub mod radical;
pub mod rng;
pub mod subspace;
pub mod topology;

pub use algebra::{Algebra, AlgebraError, ValidationReport, Violation};
pub use embed::{
    annihilator_chain_embedding, ann_of_vector, find_embedding, kappa_finite,
    staged_basis_embedding, sufficiency_check, t_cofinite_check, ChainOutcome, ChainTrace,
    ConstructionTrace, EmbedError, EmbeddingSearch, EmbeddingWitness, ProductFamily,
    StagedOutcome, SufficiencyReport, TCofiniteReport,
};
pub use field::{FieldError, PrimeField};
pub use ideal::{ideal_generated, quotient_algebra, Ideal, IdealError, Quotient, Sidedness};
pub use irr::{enumerate_irr, IrrError, IrrPoint, IrrSpace, TheoremFormReport, ZClosed};
pub use matrix::{Matrix, Rref};
pub use meataxe::{composition_factors, split, CompositionFactors, MeatAxeError, Split};
pub use module::{is_isomorphic_simple, ModuleError, ModuleRep};
pub use pointset::PointSet;
pub use presets::{Preset, PresetError};
pub use radical::{is_semiprimitive, jacobson_radical};
pub use subspace::Subspace;
