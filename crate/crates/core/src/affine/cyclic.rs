//! Cyclically decreasing elements.

use super::AffinePermutation;
use crate::error::{Error, Result};

/// The cyclically decreasing element indexed by a proper subset of `1..=n`.
///
/// Each maximal cyclic run `a, a+1, ..., b` of the subset contributes
/// `s_b ⋯ s_{a+1} s_a`; distinct runs commute.
pub fn cyclically_decreasing(n: usize, subset: &[usize]) -> Result<AffinePermutation> {
    let mut member = vec![false; n];
    for &r in subset {
        if r == 0 || r > n {
            return Err(Error::ResidueOutOfRange { n, r });
        }
        member[r - 1] = true;
    }
    if member.iter().all(|&b| b) {
        return Err(Error::FullSubset);
    }
    // Start just after a missing residue so no run wraps past the start.
    let start = member.iter().position(|&b| !b).expect("proper subset");
    let mut word = Vec::new();
    let mut run: Vec<usize> = Vec::new();
    for step in 1..=n {
        let k = (start + step) % n;
        if member[k] {
            run.push(k + 1);
        } else if !run.is_empty() {
            word.extend(run.drain(..).rev());
        }
    }
    word.extend(run.drain(..).rev());
    Ok(AffinePermutation::from_word(n, &word))
}

impl AffinePermutation {
    /// Whether some reduced word uses distinct letters and never puts `i + 1`
    /// after `i` (indices modulo `n`).
    pub fn is_cyclically_decreasing(&self) -> bool {
        let n = self.n;
        if self.length() >= n {
            return false;
        }
        self.reduced_words().iter().any(|word| {
            word.iter().enumerate().all(|(a, &x)| {
                word[a + 1..]
                    .iter()
                    .all(|&y| y != x && y != x % n + 1)
            })
        })
    }
}
