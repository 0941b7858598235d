//! Seeded randomness. Every randomized routine in the crate draws from a
//! [`LabRng`] created here, so a seed fully determines the outcome.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::PrimeField;

pub type LabRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> LabRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[inline]
pub fn scalar(rng: &mut LabRng, field: PrimeField) -> u32 {
    rng.gen_range(0..field.modulus())
}

pub fn vector(rng: &mut LabRng, field: PrimeField, n: usize) -> alloc::vec::Vec<u32> {
    (0..n).map(|_| scalar(rng, field)).collect()
}
