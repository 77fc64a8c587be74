//! Bruhat covers, the 0-Hecke product and reduced words.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use super::{ceil_div, AffinePermutation};
use crate::error::{Error, Result};
use crate::search::SearchOptions;

/// All reduced words of a permutation, each as a list of letters in `1..=n`.
pub type ReducedWords = Vec<Vec<usize>>;

impl AffinePermutation {
    /// Whether `π ⋖ π t_{ij}`, for `i < j` in different residue classes.
    pub fn bruhat_cover(&self, i: i64, j: i64) -> Result<bool> {
        if (i - j).rem_euclid(self.n as i64) == 0 {
            return Err(Error::SameResidue { n: self.n, i, j });
        }
        if i >= j {
            return Err(Error::NotIncreasing { i, j });
        }
        let (a, b) = (self.apply(i), self.apply(j));
        Ok(a < b && !(i + 1..j).any(|e| (a + 1..b).contains(&self.apply(e))))
    }

    /// Range bound for reflections `t_{ij}` with `π ⋖ π t_{ij}`. A cover
    /// always has `j - i < n + 2·max|π(k) - k|`.
    pub(crate) fn cover_bound(&self) -> i64 {
        let ni = self.n as i64;
        2 * ni * (1 + ceil_div(self.max_displacement(), ni))
    }

    /// Range bound for inversions `(i, j)`, which satisfy `j - i < 2·max|π(k) - k|`.
    pub(crate) fn inversion_span(&self) -> i64 {
        let ni = self.n as i64;
        let d = self.max_displacement();
        (ni * (1 + ceil_div(d, ni)) + ni).max(2 * d + 1)
    }

    fn reflect(&self, i: i64, j: i64) -> AffinePermutation {
        self * &AffinePermutation::reflection(self.n, i, j).expect("distinct residues")
    }

    /// All `(i, j, π t_{ij})` with `π ⋖ π t_{ij}` and `i` in `1..=n`.
    pub fn upper_covers_with(
        &self,
        opts: &SearchOptions,
    ) -> Result<Vec<(i64, i64, AffinePermutation)>> {
        let ni = self.n as i64;
        let found = opts.run(self.cover_bound(), ni, |b| {
            let mut out = BTreeSet::new();
            for i in 1..=ni {
                for j in i + 1..=i + b {
                    if (j - i) % ni != 0 && self.bruhat_cover(i, j).unwrap_or(false) {
                        out.insert((i, j));
                    }
                }
            }
            out
        })?;
        Ok(found
            .into_iter()
            .map(|(i, j)| (i, j, self.reflect(i, j)))
            .collect())
    }

    pub fn upper_covers(&self) -> Vec<(i64, i64, AffinePermutation)> {
        self.upper_covers_with(&SearchOptions::default())
            .expect("cover bound is sufficient")
    }

    /// The covers `π ⋖ π t_{ir}` with `i < r` and `π ⋖ π t_{rj}` with `r < j`,
    /// returned as `(i, π t_{ir})` and `(j, π t_{rj})` lists.
    #[allow(clippy::type_complexity)]
    pub fn covers_through_with(
        &self,
        r: i64,
        opts: &SearchOptions,
    ) -> Result<(Vec<(i64, AffinePermutation)>, Vec<(i64, AffinePermutation)>)> {
        let ni = self.n as i64;
        let below = opts.run(self.cover_bound(), ni, |b| {
            (r - b..r)
                .filter(|&i| (r - i) % ni != 0 && self.bruhat_cover(i, r).unwrap_or(false))
                .collect()
        })?;
        let above = opts.run(self.cover_bound(), ni, |b| {
            (r + 1..=r + b)
                .filter(|&j| (j - r) % ni != 0 && self.bruhat_cover(r, j).unwrap_or(false))
                .collect()
        })?;
        Ok((
            below.into_iter().map(|i| (i, self.reflect(i, r))).collect(),
            above.into_iter().map(|j| (j, self.reflect(r, j))).collect(),
        ))
    }

    /// All `σ` with `σ ⋖ π`.
    pub fn lower_covers_with(&self, opts: &SearchOptions) -> Result<Vec<AffinePermutation>> {
        let ni = self.n as i64;
        let len = self.length();
        let found = opts.run(self.inversion_span(), ni, |span| {
            let mut out = BTreeSet::new();
            for i in 1..=ni {
                for j in i + 1..=i + span {
                    if (j - i) % ni != 0 && self.apply(i) > self.apply(j) {
                        let s = self.reflect(i, j);
                        if s.length() + 1 == len {
                            out.insert(s);
                        }
                    }
                }
            }
            out
        })?;
        Ok(found.into_iter().collect())
    }

    pub fn lower_covers(&self) -> Vec<AffinePermutation> {
        self.lower_covers_with(&SearchOptions::default())
            .expect("inversion span is sufficient")
    }

    /// Bruhat order `self ≤ other`, by breadth-first search down from `other`.
    /// Meant for small lengths only.
    pub fn bruhat_leq(&self, other: &AffinePermutation) -> bool {
        if self.n != other.n {
            return false;
        }
        let target = self.length();
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([other.clone()]);
        while let Some(p) = queue.pop_front() {
            let len = p.length();
            if len == target {
                if &p == self {
                    return true;
                }
                continue;
            }
            if len < target {
                continue;
            }
            for s in p.lower_covers() {
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        false
    }

    /// One reduced word, stripping the smallest right descent each time.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut word = Vec::new();
        while let Some(&i) = p.right_descents().first() {
            word.push(i);
            p = p.mul_simple(i as i64);
        }
        word.reverse();
        word
    }

    /// Every reduced word, sorted lexicographically.
    pub fn reduced_words(&self) -> ReducedWords {
        fn go(
            p: &AffinePermutation,
            memo: &mut HashMap<AffinePermutation, ReducedWords>,
        ) -> ReducedWords {
            if let Some(ws) = memo.get(p) {
                return ws.clone();
            }
            let des = p.right_descents();
            let mut out = if des.is_empty() {
                vec![Vec::new()]
            } else {
                let mut out = Vec::new();
                for i in des {
                    for mut w in go(&p.mul_simple(i as i64), memo) {
                        w.push(i);
                        out.push(w);
                    }
                }
                out
            };
            out.sort();
            memo.insert(p.clone(), out.clone());
            out
        }
        go(self, &mut HashMap::new())
    }

    /// The 0-Hecke product `π ∘ σ`, folding a reduced word of `σ` into `π`.
    pub fn hecke_product(&self, other: &AffinePermutation) -> Result<AffinePermutation> {
        if self.n != other.n {
            return Err(Error::PeriodMismatch(self.n, other.n));
        }
        let mut p = self.clone();
        for i in other.reduced_word() {
            let i = i as i64;
            if p.apply(i) < p.apply(i + 1) {
                p = p.mul_simple(i);
            }
        }
        Ok(p)
    }
}
