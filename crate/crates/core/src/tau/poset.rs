//! Brute-force Bruhat order restricted to involutions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::affine::AffinePermutation;
use crate::enumerate::involutions;
use crate::involution::AffineInvolution;

/// The involutions with `ℓ̂ ≤ max_hat`, each with the set of involutions
/// strictly below it in the Bruhat order of the whole group.
pub struct InvolutionPoset {
    below: BTreeMap<AffineInvolution, BTreeSet<AffineInvolution>>,
}

fn lower_ideal(top: &AffinePermutation) -> BTreeSet<AffinePermutation> {
    let mut seen = BTreeSet::from([top.clone()]);
    let mut queue = VecDeque::from([top.clone()]);
    while let Some(p) = queue.pop_front() {
        for s in p.lower_covers() {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen
}

impl InvolutionPoset {
    pub fn new(n: usize, max_hat: usize) -> Self {
        let below = involutions(n, max_hat)
            .into_iter()
            .map(|z| {
                let set = lower_ideal(z.perm())
                    .into_iter()
                    .filter(|w| w != z.perm() && w.inverse() == *w)
                    .map(AffineInvolution::new_unchecked)
                    .collect();
                (z, set)
            })
            .collect();
        InvolutionPoset { below }
    }

    pub fn elements(&self) -> impl Iterator<Item = &AffineInvolution> {
        self.below.keys()
    }

    /// `y < z`, for `z` in the poset.
    pub fn less(&self, y: &AffineInvolution, z: &AffineInvolution) -> bool {
        self.below[z].contains(y)
    }

    /// `y ⋖ z` in the restricted order: nothing involutive lies strictly between.
    pub fn covers(&self, y: &AffineInvolution, z: &AffineInvolution) -> bool {
        let below = &self.below[z];
        below.contains(y) && !below.iter().any(|w| self.below[w].contains(y))
    }

    /// All `z` in the poset covering `y`.
    pub fn upper_covers(&self, y: &AffineInvolution) -> Vec<AffineInvolution> {
        self.below
            .keys()
            .filter(|z| self.covers(y, z))
            .cloned()
            .collect()
    }
}
