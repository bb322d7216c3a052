//! Shared corpus generation for the integration tests: a tiny
//! deterministic xorshift generator so every run sees the same corpus.
#![allow(dead_code)] // each test binary uses its own subset

use coneseries_core::geometry::{Cone, LatticeVector, RationalVector};

pub struct XorShift {
    state: u64,
}

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift { state: seed.max(1) }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    /// Uniform-ish integer in `[lo, hi]`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

pub fn random_lattice_vector(rng: &mut XorShift, n: usize, amp: i64) -> LatticeVector {
    LatticeVector::from_i64(
        &(0..n).map(|_| rng.range(-amp, amp)).collect::<Vec<_>>(),
    )
}

pub fn random_cone(rng: &mut XorShift, n: usize, max_gens: usize, amp: i64) -> Cone {
    let k = rng.range(1, max_gens as i64) as usize;
    let gens = (0..k)
        .map(|_| random_lattice_vector(rng, n, amp))
        .collect();
    Cone::new(n, gens).expect("dimension fits")
}

pub fn random_positive_weight(rng: &mut XorShift, n: usize, amp: i64) -> RationalVector {
    RationalVector::from_i64(
        &(0..n).map(|_| rng.range(1, amp)).collect::<Vec<_>>(),
    )
}
