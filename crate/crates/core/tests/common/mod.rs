#![allow(dead_code)]

use affstan::enumerate::involutions;
use affstan::{AffineInvolution, AffinePermutation};
use proptest::prelude::*;

/// A product of at most `max_len` random simple reflections.
pub fn perm(max_n: usize, max_len: usize) -> impl Strategy<Value = AffinePermutation> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..n, 0..=max_len).prop_map(move |w| AffinePermutation::from_word(n, &w))
    })
}

/// An involution drawn from the exhaustive list at the given scale.
pub fn involution(max_n: usize, max_hat: usize) -> impl Strategy<Value = AffineInvolution> {
    let pool: Vec<AffineInvolution> = (2..=max_n).flat_map(|n| involutions(n, max_hat)).collect();
    prop::sample::select(pool)
}
