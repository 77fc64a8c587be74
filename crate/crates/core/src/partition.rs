//! Integer partitions and the dominance order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", from = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Sorts the parts into weakly decreasing order and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn largest_part(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Whether every part is strictly less than `n`.
    pub fn in_par_n(&self, n: usize) -> bool {
        (self.largest_part() as usize) < n || self.is_empty()
    }

    pub fn check_par_n(&self, n: usize) -> Result<()> {
        if self.in_par_n(n) {
            Ok(())
        } else {
            Err(Error::NotInParN {
                partition: self.to_string(),
                n,
            })
        }
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn transpose(&self) -> Partition {
        let rows = self.largest_part() as usize;
        let cols = (1..=rows)
            .map(|r| self.0.iter().filter(|&&p| p as usize >= r).count() as u32)
            .collect();
        Partition(cols)
    }

    /// Containment of Young diagrams.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|k| {
                acc += self.0.get(k).copied().unwrap_or(0) as usize;
                acc
            })
            .collect()
    }

    /// Dominance comparison; `None` when the partitions are incomparable.
    pub fn dominance_cmp(&self, other: &Partition) -> Result<Option<Ordering>> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch(self.to_string(), other.to_string()));
        }
        let len = self.len().max(other.len());
        let (a, b) = (self.partial_sums(len), other.partial_sums(len));
        let le = a.iter().zip(&b).all(|(x, y)| x <= y);
        let ge = a.iter().zip(&b).all(|(x, y)| x >= y);
        Ok(match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        })
    }

    /// Strict dominance `self < other`.
    pub fn dominance_less(&self, other: &Partition) -> Result<bool> {
        Ok(self.dominance_cmp(other)? == Some(Ordering::Less))
    }

    /// All partitions of `weight` with every part at most `max_part`, in
    /// lexicographically decreasing order.
    pub fn all_of_weight(weight: usize, max_part: usize) -> Vec<Partition> {
        fn go(rest: usize, cap: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p as u32);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(weight, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// Bracket notation, e.g. `[2,1,1]`.
    pub fn bracket(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(u32::to_string).collect();
        format!("[{}]", inner.join(","))
    }
}

/// Exponent notation: `(2,1,1)` renders as `21^2`, the empty partition as `∅`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let mut k = 0;
        while k < self.0.len() {
            let part = self.0[k];
            let mult = self.0[k..].iter().take_while(|&&p| p == part).count();
            if mult > 1 {
                write!(f, "{part}^{mult}")?;
            } else {
                write!(f, "{part}")?;
            }
            k += mult;
        }
        Ok(())
    }
}
