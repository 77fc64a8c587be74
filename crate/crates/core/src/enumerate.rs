//! Exhaustive enumeration of small elements.

use std::collections::BTreeSet;

use crate::affine::AffinePermutation;
use crate::involution::AffineInvolution;

/// `levels[k]` lists the elements of length `k`, for `k ≤ max_len`.
pub fn length_levels(n: usize, max_len: usize) -> Vec<Vec<AffinePermutation>> {
    let mut levels = vec![vec![AffinePermutation::identity(n)]];
    if n < 2 {
        levels.resize(max_len + 1, Vec::new());
        return levels;
    }
    for _ in 0..max_len {
        let mut next = BTreeSet::new();
        for p in levels.last().expect("nonempty") {
            for i in 1..=n as i64 {
                if p.apply(i) < p.apply(i + 1) {
                    next.insert(p.mul_simple(i));
                }
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
}

/// `levels[k]` lists the involutions with `ℓ̂ = k`, for `k ≤ max_hat`.
pub fn involution_levels(n: usize, max_hat: usize) -> Vec<Vec<AffineInvolution>> {
    let mut levels = vec![vec![AffineInvolution::identity(n)]];
    if n < 2 {
        levels.resize(max_hat + 1, Vec::new());
        return levels;
    }
    for _ in 0..max_hat {
        let mut next = BTreeSet::new();
        for z in levels.last().expect("nonempty") {
            for i in 1..=n as i64 {
                if z.apply(i) < z.apply(i + 1) {
                    next.insert(z.demazure_conjugate(i));
                }
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
}

/// All involutions with `ℓ̂ ≤ max_hat`.
pub fn involutions(n: usize, max_hat: usize) -> Vec<AffineInvolution> {
    involution_levels(n, max_hat).into_iter().flatten().collect()
}
