//! Seeded rational sample points.
//!
//! Generator: SplitMix64 (Steele, Lea & Flood 2014), 64-bit state, one
//! `u64` output per step. A sample is a pure function of `(ring, seed,
//! index)`:
//!
//! 1. initial state = `seed XOR (index * 0x9E3779B97F4A7C15)` (wrapping);
//! 2. for each ring variable in ring order, draw the numerator uniformly in
//!    `[-999, 999]`, then the denominator uniformly in `[1, 99]`;
//! 3. an integer in `[lo, hi]` is `lo + v % span` for the first output `v`
//!    below `floor(2^64 / span) * span`, where `span = hi - lo + 1`.
//!
//! Floats in `[0, 1)` are `(v >> 11) * 2^-53`.

use std::collections::BTreeMap;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::poly::Assignment;
use crate::rational::{rat, Rational};
use crate::ring::Ring;

pub const NUMERATOR_RANGE: (i64, i64) = (-999, 999);
pub const DENOMINATOR_RANGE: (i64, i64) = (1, 99);

const INDEX_MIX: u64 = 0x9E37_79B9_7F4A_7C15;

/// Deterministic stream for sample `index` of run `seed`.
pub fn stream(seed: u64, index: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed ^ index.wrapping_mul(INDEX_MIX))
}

/// Unbiased integer in `[lo, hi]` by rejection.
pub fn uniform_int(rng: &mut impl RngCore, lo: i64, hi: i64) -> i64 {
    assert!(lo <= hi);
    let span = (hi - lo) as u64 + 1;
    let limit = (u64::MAX / span) * span;
    loop {
        let v = rng.next_u64();
        if v < limit {
            return lo + (v % span) as i64;
        }
    }
}

/// Uniform float in `[0, 1)` with 53 random bits.
pub fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// A rational assignment to ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointSample {
    pub assignments: BTreeMap<String, Rational>,
    pub seed: u64,
    pub index: u64,
}

impl PointSample {
    /// Draws sample `index` of run `seed` over the variables of `ring`.
    pub fn draw(ring: &Ring, seed: u64, index: u64) -> Self {
        let mut rng = stream(seed, index);
        let assignments = ring
            .variables()
            .iter()
            .map(|v| {
                let n = uniform_int(&mut rng, NUMERATOR_RANGE.0, NUMERATOR_RANGE.1);
                let d = uniform_int(&mut rng, DENOMINATOR_RANGE.0, DENOMINATOR_RANGE.1);
                (v.clone(), rat(n, d).expect("denominator is positive"))
            })
            .collect();
        PointSample { assignments, seed, index }
    }

    /// A hand-written point; seed and index are zero.
    pub fn fixed<S: Into<String>>(values: impl IntoIterator<Item = (S, Rational)>) -> Self {
        PointSample {
            assignments: values.into_iter().map(|(k, v)| (k.into(), v)).collect(),
            seed: 0,
            index: 0,
        }
    }

    pub fn get(&self, var: &str) -> Option<&Rational> {
        self.assignments.get(var)
    }
}

impl Assignment for PointSample {
    fn value(&self, var: &str) -> Option<&Rational> {
        self.assignments.get(var)
    }
}
