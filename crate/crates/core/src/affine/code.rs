//! Codes, shapes and Grassmannian elements.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ceil_div, AffinePermutation};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// An inversion count vector in `ℕⁿ` with at least one zero entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Code(pub Vec<u32>);

impl Code {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    /// Positions `i` (1-based) with `c_i > c_{i+1}`, read cyclically.
    pub fn cyclic_descents(&self) -> Vec<usize> {
        let n = self.0.len();
        (0..n)
            .filter(|&i| self.0[i] > self.0[(i + 1) % n])
            .map(|i| i + 1)
            .collect()
    }

    /// The transpose of the partition sorting the entries.
    pub fn shape(&self) -> Partition {
        Partition::new(self.0.clone()).transpose()
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Number of integers `k` with `lo < k·n < hi`.
pub(crate) fn multiples_between(lo: i64, hi: i64, n: i64) -> i64 {
    let first = lo.div_euclid(n) + 1;
    let last = ceil_div(hi, n) - 1;
    (last - first + 1).max(0)
}

impl AffinePermutation {
    /// `c_i` counts `j > i` with `π(j) < π(i)`.
    pub fn code(&self) -> Code {
        let ni = self.n as i64;
        let entries = (1..=ni)
            .map(|i| {
                let vi = self.apply(i);
                (1..=ni)
                    .map(|j| multiples_between(i - j, vi - self.apply(j), ni))
                    .sum::<i64>() as u32
            })
            .collect();
        Code(entries)
    }

    pub fn length(&self) -> usize {
        self.code().total()
    }

    /// Inverts [`AffinePermutation::code`] by undoing simple descents.
    pub fn from_code(code: &Code) -> Result<Self> {
        let n = code.0.len();
        if n == 0 {
            return Err(Error::ZeroPeriod);
        }
        if code.0.iter().all(|&c| c > 0) {
            return Err(Error::AllPositive(code.0.clone()));
        }
        let mut c = code.0.clone();
        let mut letters = Vec::with_capacity(code.total());
        while let Some(i) = (0..n).find(|&i| c[i] > c[(i + 1) % n]) {
            let next = (i + 1) % n;
            let (ci, cn) = (c[i], c[next]);
            c[i] = cn;
            c[next] = ci - 1;
            letters.push(i + 1);
        }
        letters.reverse();
        Ok(AffinePermutation::from_word(n, &letters))
    }

    /// `λ(π)`: the transpose of the sorted code of `π⁻¹`.
    pub fn shape(&self) -> Partition {
        self.inverse().code().shape()
    }

    /// `λ′(π) = λ(π⁻¹)*`.
    pub fn lambda_prime(&self) -> Partition {
        let lam = self.inverse().shape();
        lambda_star(&lam, self.n).expect("shapes lie in Par^n")
    }

    /// The unique Grassmannian element of shape `λ`.
    pub fn grassmannian(lambda: &Partition, n: usize) -> Result<Self> {
        lambda.check_par_n(n)?;
        let col = lambda.transpose();
        if col.len() > n {
            // Cannot happen for λ in Par^n: the transpose has at most λ₁ < n parts.
            return Err(Error::NotInParN {
                partition: lambda.to_string(),
                n,
            });
        }
        let mut c: Vec<u32> = col.parts().to_vec();
        c.resize(n, 0);
        c.sort_unstable();
        Ok(Self::from_code(&Code(c))?.inverse())
    }
}

/// `λ*`, the shape of the star of the Grassmannian element of shape `λ`.
pub fn lambda_star(lambda: &Partition, n: usize) -> Result<Partition> {
    Ok(AffinePermutation::grassmannian(lambda, n)?.star().shape())
}
