//! Seeded inputs shared by the kernel benchmarks in `benches/`.
//!
//! Inputs are fixed per seed so runs are comparable across commits.

use azumaya_core::groups::enumerate_unitary;
use azumaya_core::{AlgebraElem, AlgebraWithInvolution, RingMatrix, RingSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` random `n x n` matrices over `ring`.
pub fn matrices(ring: &RingSpec, n: usize, count: usize, seed: u64) -> Vec<RingMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let entries = (0..n * n).map(|_| ring.elem(rng.gen_range(0..ring.size())).unwrap()).collect();
            RingMatrix::new(ring, n, n, entries).unwrap()
        })
        .collect()
}

/// `count` random units of the algebra.
pub fn units(a: &AlgebraWithInvolution, count: usize, seed: u64) -> Vec<AlgebraElem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| a.algebra().random_unit(&mut rng)).collect()
}

/// Every `stride`-th element of the enumerated unitary group.
pub fn unitary(a: &AlgebraWithInvolution, stride: usize) -> Vec<AlgebraElem> {
    enumerate_unitary(a).into_iter().step_by(stride).collect()
}
