//! Affine Stanley symmetric functions and their involution analogues.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::affine::{cyclically_decreasing, AffinePermutation};
use crate::involution::AffineInvolution;
use crate::partition::Partition;
use crate::symfunc::MonomialExpansion;

/// Counts length-additive factorizations into cyclically decreasing factors
/// of prescribed lengths.
pub struct FactorizationCounter {
    /// Inverses of the cyclically decreasing elements, grouped by length.
    factors: Vec<Vec<AffinePermutation>>,
    memo: HashMap<(AffinePermutation, usize), BigInt>,
}

impl FactorizationCounter {
    pub fn new(n: usize) -> Self {
        let factors = (0..n)
            .map(|k| {
                (1..=n)
                    .combinations(k)
                    .map(|s| {
                        cyclically_decreasing(n, &s)
                            .expect("proper subset")
                            .inverse()
                    })
                    .collect()
            })
            .collect();
        FactorizationCounter {
            factors,
            memo: HashMap::new(),
        }
    }

    /// Number of factorizations `π = π¹π²⋯` with `ℓ(πᵏ) = parts[k-1]`.
    pub fn count(&mut self, pi: &AffinePermutation, parts: &[usize]) -> BigInt {
        self.memo.clear();
        if parts.iter().sum::<usize>() != pi.length() {
            return BigInt::zero();
        }
        self.go(pi, parts, 0)
    }

    fn go(&mut self, pi: &AffinePermutation, parts: &[usize], idx: usize) -> BigInt {
        if idx == parts.len() {
            return if pi.is_identity() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let key = (pi.clone(), idx);
        if let Some(c) = self.memo.get(&key) {
            return c.clone();
        }
        let k = parts[idx];
        let target = pi.length() - k;
        let mut total = BigInt::zero();
        if k < self.factors.len() {
            let rests: Vec<AffinePermutation> = self.factors[k]
                .iter()
                .map(|u_inv| u_inv * pi)
                .filter(|rest| rest.length() == target)
                .collect();
            for rest in rests {
                total += self.go(&rest, parts, idx + 1);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// The affine Stanley symmetric function `F_π` in the monomial basis.
pub fn stanley(pi: &AffinePermutation) -> MonomialExpansion {
    let n = pi.n();
    let len = pi.length();
    let mut counter = FactorizationCounter::new(n);
    let mut out = MonomialExpansion::zero(len);
    for lam in Partition::all_of_weight(len, n.saturating_sub(1)) {
        let parts: Vec<usize> = lam.parts().iter().map(|&p| p as usize).collect();
        let c = counter.count(pi, &parts);
        if cfg!(debug_assertions) && lam.parts().first() != lam.parts().last() {
            let reversed: Vec<usize> = parts.iter().rev().copied().collect();
            debug_assert_eq!(
                counter.count(pi, &reversed),
                c,
                "factorization counts not symmetric for {pi} at {lam}"
            );
        }
        out.add_term(lam, c);
    }
    out
}

/// `F̂_z`, the sum of `F_π` over the atoms of `z`.
pub fn involution_stanley(z: &AffineInvolution) -> MonomialExpansion {
    let mut out = MonomialExpansion::zero(z.hat_length());
    for a in z.atoms() {
        out = out.add(&stanley(&a)).expect("atoms share a length");
    }
    out
}

/// The number of reduced words.
pub fn reduced_word_count(pi: &AffinePermutation) -> BigInt {
    let ones = vec![1; pi.length()];
    FactorizationCounter::new(pi.n()).count(pi, &ones)
}

/// The number of involution words, summed over the atoms.
pub fn involution_word_count(z: &AffineInvolution) -> BigInt {
    z.atoms().iter().map(reduced_word_count).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::to_affine_schur;

    fn w(n: usize, v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(n, v.to_vec()).unwrap()
    }

    fn m(terms: &[(&[u32], i64)]) -> MonomialExpansion {
        let d = terms.first().map(|t| t.0.iter().sum::<u32>() as usize).unwrap_or(0);
        MonomialExpansion::from_terms(d, terms.iter().map(|(l, c)| (Partition::new(l.to_vec()), *c)))
            .unwrap()
    }

    #[test]
    fn stanley_examples() {
        assert_eq!(
            stanley(&w(4, &[0, 3, 6, 1])),
            m(&[(&[1, 1, 1, 1], 2), (&[2, 1, 1], 1)])
        );
        let pi = w(4, &[-3, 4, 3, 6]);
        assert_eq!(stanley(&pi), m(&[(&[2, 1, 1, 1], 1), (&[1, 1, 1, 1, 1], 4)]));
        assert_eq!(
            stanley(&pi.inverse()),
            m(&[
                (&[3, 2], 1),
                (&[3, 1, 1], 2),
                (&[2, 2, 1], 2),
                (&[2, 1, 1, 1], 3),
                (&[1, 1, 1, 1, 1], 4)
            ])
        );
        assert_eq!(
            stanley(&AffinePermutation::identity(4)),
            MonomialExpansion::basis_element(Partition::empty())
        );
    }

    #[test]
    fn word_counts() {
        assert_eq!(reduced_word_count(&w(4, &[0, 3, 6, 1])), BigInt::from(2));
        assert_eq!(reduced_word_count(&AffinePermutation::identity(4)), BigInt::one());
        let pi = w(4, &[-3, 4, 3, 6]);
        assert_eq!(
            reduced_word_count(&pi),
            BigInt::from(pi.reduced_words().len())
        );
    }

    #[test]
    fn involution_examples() {
        let z = AffineInvolution::from_cycles(4, &[(3, 8)]).unwrap();
        let f = involution_stanley(&z);
        assert_eq!(
            f,
            m(&[(&[1, 1, 1, 1], 4), (&[2, 1, 1], 2), (&[2, 2], 1), (&[3, 1], 1)])
        );
        assert_eq!(
            to_affine_schur(&f, 4).unwrap().to_string(),
            "F[1,1,1,1] + F[2,1,1] + F[3,1]"
        );
        assert_eq!(involution_word_count(&z), BigInt::from(4));
        let s1 = AffineInvolution::new(AffinePermutation::simple(4, 1)).unwrap();
        assert_eq!(involution_stanley(&s1), m(&[(&[1], 1)]));
        let id = AffineInvolution::identity(4);
        assert_eq!(
            involution_stanley(&id),
            MonomialExpansion::basis_element(Partition::empty())
        );
    }
}
