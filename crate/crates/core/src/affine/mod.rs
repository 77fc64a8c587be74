//! The affine symmetric group on windows.

mod bruhat;
mod code;
mod cyclic;

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bruhat::ReducedWords;
pub use code::{lambda_star, Code};
pub(crate) use code::multiples_between;
pub use cyclic::cyclically_decreasing;

/// A bijection `π` of the integers with `π(i + n) = π(i) + n`, stored by its
/// canonical window `[π(1), ..., π(n)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPerm")]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

#[derive(Deserialize)]
struct RawPerm {
    n: usize,
    window: Vec<i64>,
}

impl TryFrom<RawPerm> for AffinePermutation {
    type Error = Error;
    fn try_from(raw: RawPerm) -> Result<Self> {
        AffinePermutation::new(raw.n, raw.window)
    }
}

/// Representative of `i` modulo `n` in `1..=n`.
pub(crate) fn residue(i: i64, n: i64) -> i64 {
    (i - 1).rem_euclid(n) + 1
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

fn triangular(n: usize) -> i64 {
    let n = n as i64;
    n * (n + 1) / 2
}

fn check_residues(n: usize, values: &[i64]) -> Result<()> {
    let ni = n as i64;
    let mut seen: Vec<Option<i64>> = vec![None; n];
    for &v in values {
        let r = (residue(v, ni) - 1) as usize;
        if let Some(a) = seen[r] {
            return Err(Error::DuplicateResidue { n, a, b: v });
        }
        seen[r] = Some(v);
    }
    Ok(())
}

impl AffinePermutation {
    /// Builds the permutation with canonical window `window`.
    pub fn new(n: usize, window: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroPeriod);
        }
        if window.len() != n {
            return Err(Error::WrongLength {
                n,
                got: window.len(),
            });
        }
        check_residues(n, &window)?;
        let sum: i64 = window.iter().sum();
        if sum != triangular(n) {
            return Err(Error::BadSum {
                expected: triangular(n),
                got: sum,
            });
        }
        Ok(AffinePermutation { n, window })
    }

    /// Builds the permutation having `seq` as the window at some offset `o`,
    /// i.e. `π(o + k) = seq[k - 1]`. The offset is forced by the sum.
    pub fn from_any_window(n: usize, seq: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroPeriod);
        }
        if seq.len() != n {
            return Err(Error::WrongLength { n, got: seq.len() });
        }
        check_residues(n, seq)?;
        let ni = n as i64;
        let excess = seq.iter().sum::<i64>() - triangular(n);
        if excess.rem_euclid(ni) != 0 {
            return Err(Error::BadSum {
                expected: triangular(n),
                got: excess + triangular(n),
            });
        }
        let offset = excess / ni;
        let mut window = vec![0; n];
        for (k, &v) in seq.iter().enumerate() {
            let p = offset + k as i64 + 1;
            let r = residue(p, ni);
            window[(r - 1) as usize] = v - (p - r);
        }
        Ok(AffinePermutation { n, window })
    }

    /// The `[[a_1, a_2, ...]]` construction: drop every entry congruent to an
    /// earlier one, then read the rest as a window.
    pub fn from_dedup_sequence(n: usize, seq: &[i64]) -> Result<Self> {
        let ni = n as i64;
        let mut seen = vec![false; n];
        let mut kept = Vec::with_capacity(n);
        for &v in seq {
            let r = (residue(v, ni) - 1) as usize;
            if !seen[r] {
                seen[r] = true;
                kept.push(v);
            }
        }
        Self::from_any_window(n, &kept)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "period must be positive");
        AffinePermutation {
            n,
            window: (1..=n as i64).collect(),
        }
    }

    /// The reflection `t_{ij}` exchanging `i + kn` and `j + kn` for all `k`.
    pub fn reflection(n: usize, i: i64, j: i64) -> Result<Self> {
        let ni = n as i64;
        if (i - j).rem_euclid(ni) == 0 {
            return Err(Error::SameResidue { n, i, j });
        }
        let window = (1..=ni)
            .map(|k| {
                if (k - i).rem_euclid(ni) == 0 {
                    k + (j - i)
                } else if (k - j).rem_euclid(ni) == 0 {
                    k - (j - i)
                } else {
                    k
                }
            })
            .collect();
        Ok(AffinePermutation { n, window })
    }

    /// The simple reflection `s_i = t_{i,i+1}`; `i` is read modulo `n`.
    pub fn simple(n: usize, i: i64) -> Self {
        Self::reflection(n, i, i + 1).expect("n >= 2 for simple reflections")
    }

    /// The product `s_{w_1} s_{w_2} ...`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for &i in word {
            p = p.mul_simple(i as i64);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn apply(&self, i: i64) -> i64 {
        let ni = self.n as i64;
        let r = residue(i, ni);
        self.window[(r - 1) as usize] + (i - r)
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().zip(1..).all(|(&v, k)| v == k)
    }

    /// `max_k |π(k) - k|`.
    pub fn max_displacement(&self) -> i64 {
        self.window
            .iter()
            .zip(1..)
            .map(|(&v, k): (&i64, i64)| (v - k).abs())
            .max()
            .unwrap_or(0)
    }

    /// The composition `self ∘ other`, acting by `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::PeriodMismatch(self.n, other.n));
        }
        let window = other.window.iter().map(|&v| self.apply(v)).collect();
        Ok(AffinePermutation { n: self.n, window })
    }

    pub fn inverse(&self) -> Self {
        let ni = self.n as i64;
        let mut window = vec![0; self.n];
        for (k, &v) in (1..).zip(&self.window) {
            let r = residue(v, ni);
            window[(r - 1) as usize] = k - (v - r);
        }
        AffinePermutation { n: self.n, window }
    }

    /// `π s_i`: swaps the values in positions `i` and `i + 1`.
    pub fn mul_simple(&self, i: i64) -> Self {
        let ni = self.n as i64;
        let r = residue(i, ni);
        let mut window = self.window.clone();
        let a = self.apply(r);
        let b = self.apply(r + 1);
        window[(r - 1) as usize] = b;
        let r2 = residue(r + 1, ni);
        window[(r2 - 1) as usize] = a - (r + 1 - r2);
        AffinePermutation { n: self.n, window }
    }

    /// `s_i π`.
    pub fn simple_mul(&self, i: i64) -> Self {
        self.inverse().mul_simple(i).inverse()
    }

    /// Right descents: residues `i` in `1..=n` with `π(i) > π(i+1)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| self.apply(i as i64) > self.apply(i as i64 + 1))
            .collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    pub fn is_grassmannian(&self) -> bool {
        self.left_descents().iter().all(|&i| i == self.n)
    }

    /// The automorphism `s_i ↦ s_{n-i}`.
    pub fn star(&self) -> Self {
        let ni = self.n as i64;
        let window = (1..=ni).map(|k| ni + 1 - self.apply(ni + 1 - k)).collect();
        AffinePermutation { n: self.n, window }
    }

    /// The automorphism `s_i ↦ s_{i+1}`.
    pub fn rotate(&self) -> Self {
        let ni = self.n as i64;
        let window = (1..=ni).map(|k| self.apply(k - 1) + 1).collect();
        AffinePermutation { n: self.n, window }
    }

    /// The window `[π(o+1), ..., π(o+n)]` at offset `o`.
    pub fn window_at(&self, offset: i64) -> Vec<i64> {
        (1..=self.n as i64).map(|k| self.apply(offset + k)).collect()
    }
}

impl Mul for &AffinePermutation {
    type Output = AffinePermutation;

    /// Panics when the periods differ; use [`AffinePermutation::compose`] to
    /// get an error instead.
    fn mul(self, rhs: &AffinePermutation) -> AffinePermutation {
        self.compose(rhs).expect("periods must agree")
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
