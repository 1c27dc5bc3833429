//! Reproducible randomness: every consumer draws from a named stream derived from the
//! run seed, so results do not depend on scheduling or call order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::alg::{PolyRing, Polynomial, PrimeField};
use std::sync::Arc;

/// A generator seeded from `SHA-256(seed ‖ path)`.
pub fn stream(seed: u64, path: &[&str]) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    for part in path {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part.as_bytes());
    }
    let digest = h.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}

/// A child seed for `path`, so nested operations get their own reproducible streams.
pub fn derive_seed(seed: u64, path: &[&str]) -> u64 {
    use rand::RngCore;
    stream(seed, path).next_u64()
}

pub fn nonzero_element<R: Rng>(field: PrimeField, rng: &mut R) -> u32 {
    rng.gen_range(1..field.modulus())
}

pub fn element<R: Rng>(field: PrimeField, rng: &mut R) -> u32 {
    rng.gen_range(0..field.modulus())
}

/// A random `F_p`-combination of `polys` with nonzero coefficients.
pub fn combination<R: Rng>(ring: &Arc<PolyRing>, polys: &[Polynomial], rng: &mut R) -> Polynomial {
    let field = ring.field();
    let mut acc = Polynomial::zero(ring);
    for p in polys {
        let c = nonzero_element(field, rng);
        acc = acc.combine(
            &p.to_ring(ring),
            c,
            &crate::alg::Monomial::one(ring.nvars()),
        );
    }
    acc
}

/// A random linear form in all variables.
pub fn linear_form<R: Rng>(ring: &Arc<PolyRing>, rng: &mut R) -> Polynomial {
    combination(ring, &ring.vars(), rng)
}
