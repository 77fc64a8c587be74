//! Affine involutions, their codes, shapes and atoms.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine::{ceil_div, AffinePermutation, Code};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// An affine permutation equal to its own inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawInvolution", into = "RawInvolution")]
pub struct AffineInvolution {
    perm: AffinePermutation,
}

/// JSON form `{"n": 4, "cycles": [[3, 8]]}`; a `"window"` is accepted instead.
#[derive(Serialize, Deserialize)]
struct RawInvolution {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cycles: Option<Vec<(i64, i64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    window: Option<Vec<i64>>,
}

impl TryFrom<RawInvolution> for AffineInvolution {
    type Error = Error;
    fn try_from(raw: RawInvolution) -> Result<Self> {
        match (raw.cycles, raw.window) {
            (Some(c), None) => AffineInvolution::from_cycles(raw.n, &c),
            (None, Some(w)) => AffineInvolution::new(AffinePermutation::new(raw.n, w)?),
            _ => Err(Error::parse("involution JSON needs exactly one of cycles, window", "")),
        }
    }
}

impl From<AffineInvolution> for RawInvolution {
    fn from(z: AffineInvolution) -> Self {
        RawInvolution {
            n: z.n(),
            cycles: Some(z.transpositions()),
            window: None,
        }
    }
}

impl From<AffineInvolution> for AffinePermutation {
    fn from(z: AffineInvolution) -> Self {
        z.perm
    }
}

impl AffineInvolution {
    pub fn new(perm: AffinePermutation) -> Result<Self> {
        if perm.inverse() != perm {
            return Err(Error::NotAnInvolution(perm.to_string()));
        }
        Ok(AffineInvolution { perm })
    }

    pub(crate) fn new_unchecked(perm: AffinePermutation) -> Self {
        debug_assert_eq!(perm.inverse(), perm);
        AffineInvolution { perm }
    }

    pub fn identity(n: usize) -> Self {
        AffineInvolution {
            perm: AffinePermutation::identity(n),
        }
    }

    /// The product of the commuting reflections `t_{ij}` for the given pairs.
    pub fn from_cycles(n: usize, pairs: &[(i64, i64)]) -> Result<Self> {
        let ni = n as i64;
        let mut used = vec![false; n];
        let mut perm = AffinePermutation::identity(n);
        for &(i, j) in pairs {
            if i == j {
                continue;
            }
            let t = AffinePermutation::reflection(n, i, j)?;
            for r in [i, j] {
                let slot = &mut used[(r - 1).rem_euclid(ni) as usize];
                if *slot {
                    return Err(Error::OverlappingCycles {
                        n,
                        r: (r - 1).rem_euclid(ni) + 1,
                    });
                }
                *slot = true;
            }
            perm = &perm * &t;
        }
        Ok(AffineInvolution { perm })
    }

    pub fn perm(&self) -> &AffinePermutation {
        &self.perm
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn apply(&self, i: i64) -> i64 {
        self.perm.apply(i)
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn length(&self) -> usize {
        self.perm.length()
    }

    /// Representatives `(a, z(a))` of `Cyc(z)` with `a ∈ [n]` and `a ≤ z(a)`,
    /// fixed points included.
    pub fn cycles(&self) -> Vec<(i64, i64)> {
        (1..=self.n() as i64)
            .map(|a| (a, self.apply(a)))
            .filter(|&(a, b)| a <= b)
            .collect()
    }

    /// The nontrivial cycles among [`AffineInvolution::cycles`].
    pub fn transpositions(&self) -> Vec<(i64, i64)> {
        self.cycles().into_iter().filter(|&(a, b)| a < b).collect()
    }

    /// `n` minus the number of orbits on residues.
    pub fn ell_prime(&self) -> usize {
        self.transpositions().len()
    }

    /// `ℓ̂(z) = (ℓ(z) + ℓ′(z)) / 2`.
    pub fn hat_length(&self) -> usize {
        (self.length() + self.ell_prime()) / 2
    }

    /// `ĉ_i` counts `j > i` with `z(i) > z(j)` and `i ≥ z(j)`.
    pub fn involution_code(&self) -> Code {
        let ni = self.n() as i64;
        let entries = (1..=ni)
            .map(|i| {
                let cap = self.apply(i).min(i + 1);
                (1..=ni)
                    .map(|j| {
                        crate::affine::multiples_between(i - j, cap - self.apply(j), ni)
                    })
                    .sum::<i64>() as u32
            })
            .collect();
        Code(entries)
    }

    /// Residues `i` with `z(i) > z(i+1)` and `i ≥ z(i+1)`.
    pub fn visible_descents(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&i| {
                let (i, next) = (i as i64, self.apply(i as i64 + 1));
                self.apply(i) > next && i >= next
            })
            .collect()
    }

    /// `μ(z)`: the transpose of the sorted involution code.
    pub fn mu_shape(&self) -> Partition {
        self.involution_code().shape()
    }

    pub fn alpha_min(&self) -> AffinePermutation {
        let seq: Vec<i64> = self
            .cycles()
            .into_iter()
            .flat_map(|(a, b)| [b, a])
            .collect();
        AffinePermutation::from_dedup_sequence(self.n(), &seq)
            .expect("one entry per residue")
            .inverse()
    }

    pub fn alpha_max(&self) -> AffinePermutation {
        let seq: Vec<i64> = (1..=self.n() as i64)
            .filter(|&b| self.apply(b) <= b)
            .flat_map(|b| [b, self.apply(b)])
            .collect();
        AffinePermutation::from_dedup_sequence(self.n(), &seq)
            .expect("one entry per residue")
            .inverse()
    }

    /// Whether `π⁻¹ ∘ π = z` and `ℓ(π) = ℓ̂(z)`.
    pub fn is_atom(&self, pi: &AffinePermutation) -> bool {
        pi.n() == self.n()
            && pi.length() == self.hat_length()
            && pi.inverse().hecke_product(pi).as_ref() == Ok(&self.perm)
    }

    /// Whether `π⁻¹ ∘ π = z`.
    pub fn is_hecke_atom(&self, pi: &AffinePermutation) -> bool {
        pi.n() == self.n() && pi.inverse().hecke_product(pi).as_ref() == Ok(&self.perm)
    }

    /// The atoms, generated from `α_min` by the directed window moves.
    pub fn atoms(&self) -> Vec<AffinePermutation> {
        let out = closure(self.alpha_min(), |[x, y, z]| {
            // [c, a, b] -> [b, c, a]
            if y < z && z < x {
                vec![[z, x, y]]
            } else {
                vec![]
            }
        });
        debug_assert!(out.contains(&self.alpha_max()));
        out
    }

    /// The Hecke atoms, generated by the undirected window moves.
    pub fn hecke_atoms(&self) -> Vec<AffinePermutation> {
        closure(self.alpha_min(), |[x, y, z]| {
            let mut v = [x, y, z];
            v.sort_unstable();
            let [a, b, c] = v;
            let forms = [[c, b, a], [c, a, b], [b, c, a]];
            if forms.contains(&[x, y, z]) {
                forms.into_iter().filter(|f| f != &[x, y, z]).collect()
            } else {
                vec![]
            }
        })
    }

    /// The local criterion for `π ∈ A(z)` over cycles translated by at most
    /// `shift_bound` periods (computed from displacements when `None`).
    pub fn local_criterion(&self, pi: &AffinePermutation, shift_bound: Option<i64>) -> bool {
        if pi.n() != self.n() {
            return false;
        }
        let ni = self.n() as i64;
        let default = ceil_div(2 * pi.max_displacement() + 2 * self.perm.max_displacement(), ni) + 2;
        let k = shift_bound.unwrap_or(default);
        let verdict = self.local_criterion_at(pi, k);
        if shift_bound.is_none() {
            debug_assert_eq!(verdict, self.local_criterion_at(pi, k + 1));
        }
        verdict
    }

    fn local_criterion_at(&self, pi: &AffinePermutation, k: i64) -> bool {
        let ni = self.n() as i64;
        let cycles = self.cycles();
        let p = |x| pi.apply(x);
        for &(a, b) in &cycles {
            if a < b && p(b) >= p(a) {
                return false;
            }
            for &(a0, b0) in &cycles {
                for shift in -k..=k {
                    let (a2, b2) = (a0 + shift * ni, b0 + shift * ni);
                    if a < a2 && b2 < b {
                        let between = |v: i64| p(b) < v && v < p(a);
                        if between(p(a2)) || between(p(b2)) {
                            return false;
                        }
                    }
                    if a < a2 && b < b2 && p(a) >= p(b2) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `z s_i` if `z` commutes with `s_i`, otherwise `s_i z s_i`.
    pub fn z_down(&self, i: i64) -> AffineInvolution {
        let zs = self.perm.mul_simple(i);
        let sz = self.perm.simple_mul(i);
        let perm = if zs == sz { zs } else { zs.simple_mul(i) };
        AffineInvolution::new_unchecked(perm)
    }

    /// `s_i ∘ z ∘ s_i`, which differs from `z` exactly when `z(i) < z(i+1)`.
    pub fn demazure_conjugate(&self, i: i64) -> AffineInvolution {
        if self.apply(i) > self.apply(i + 1) {
            return self.clone();
        }
        self.z_down(i)
    }
}

/// Closure of `{start⁻¹}` under moves on three consecutive values of the
/// inverse, applied at every offset; returns the permutations themselves.
fn closure(
    start: AffinePermutation,
    moves: impl Fn([i64; 3]) -> Vec<[i64; 3]>,
) -> Vec<AffinePermutation> {
    let n = start.n();
    let mut seen = BTreeSet::from([start.inverse()]);
    let mut queue = VecDeque::from([start.inverse()]);
    while let Some(sigma) = queue.pop_front() {
        if n < 3 {
            break;
        }
        for r in 0..n as i64 {
            let mut win = sigma.window_at(r);
            for rep in moves([win[0], win[1], win[2]]) {
                win[..3].copy_from_slice(&rep);
                let next = AffinePermutation::from_any_window(n, &win).expect("same values");
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter().map(|s| s.inverse()).collect::<BTreeSet<_>>().into_iter().collect()
}

impl fmt::Display for AffineInvolution {
    /// Cycle notation, e.g. `t(2,8) t(4,10)`; the identity prints as `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ts = self.transpositions();
        if ts.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = ts.iter().map(|(a, b)| format!("t({a},{b})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(n, v.to_vec()).unwrap()
    }

    fn inv(n: usize, v: &[i64]) -> AffineInvolution {
        AffineInvolution::new(w(n, v)).unwrap()
    }

    fn t38() -> AffineInvolution {
        AffineInvolution::from_cycles(4, &[(3, 8)]).unwrap()
    }

    #[test]
    fn from_cycles_examples() {
        assert_eq!(t38().perm().window(), &[1, 2, 8, -1]);
        assert_eq!(
            AffineInvolution::from_cycles(5, &[(2, 8), (4, 10)])
                .unwrap()
                .perm()
                .window(),
            &[1, 8, -3, 10, -1]
        );
        assert!(AffineInvolution::from_cycles(4, &[]).unwrap().is_identity());
        assert!(matches!(
            AffineInvolution::from_cycles(4, &[(1, 2), (6, 7)]),
            Err(Error::OverlappingCycles { .. })
        ));
        assert!(matches!(
            AffineInvolution::new(AffinePermutation::from_word(3, &[1, 2])),
            Err(Error::NotAnInvolution(_))
        ));
        assert_eq!(
            AffineInvolution::from_cycles(5, &[(2, 8), (4, 10)]).unwrap().to_string(),
            "t(2,8) t(4,10)"
        );
    }

    #[test]
    fn lengths() {
        assert_eq!(t38().hat_length(), 4);
        assert_eq!(AffineInvolution::identity(4).hat_length(), 0);
        let s1 = AffineInvolution::new(AffinePermutation::simple(4, 1)).unwrap();
        assert_eq!(s1.hat_length(), 1);
        assert_eq!(s1.mu_shape(), Partition::new(vec![1]));
    }

    #[test]
    fn codes_and_descents() {
        let z = inv(5, &[1, -2, 7, 5, 4]);
        assert_eq!(z.visible_descents(), vec![1, 4]);
        assert_eq!(z.involution_code(), Code(vec![1, 0, 1, 2, 1]));
        assert_eq!(z.alpha_min(), w(5, &[2, -2, 4, 6, 5]));
        assert_eq!(t38().involution_code(), Code(vec![1, 1, 2, 0]));
        let id = AffineInvolution::identity(4);
        assert_eq!(id.involution_code(), Code(vec![0; 4]));
        assert!(id.visible_descents().is_empty());
    }

    #[test]
    fn alpha_examples() {
        let z = t38();
        assert_eq!(z.alpha_min(), w(4, &[2, 3, 5, 0]));
        assert_eq!(z.alpha_max(), w(4, &[0, 1, 7, 2]));
        assert_eq!(z.mu_shape(), Partition::new(vec![3, 1]));
        assert_eq!(z.alpha_max().shape(), Partition::new(vec![3, 1]));
        let id = AffineInvolution::identity(3);
        assert!(id.alpha_min().is_identity() && id.alpha_max().is_identity());
    }

    #[test]
    fn atom_sets() {
        let z = t38();
        let atoms = z.atoms();
        assert_eq!(
            atoms,
            vec![w(4, &[0, 1, 7, 2]), w(4, &[0, 3, 6, 1]), w(4, &[2, 3, 5, 0])]
        );
        let hecke = z.hecke_atoms();
        assert_eq!(hecke.len(), 5);
        assert!(atoms.iter().all(|a| hecke.contains(a)));
        let extra = [
            AffinePermutation::from_any_window(4, &[2, 8, 5, 3]).unwrap().inverse(),
            AffinePermutation::from_any_window(4, &[5, 8, 6, 3]).unwrap().inverse(),
        ];
        for e in &extra {
            assert!(hecke.contains(e));
            assert!(!z.is_atom(e));
            assert!(z.is_hecke_atom(e));
            assert!(!z.local_criterion(e, None));
        }
        for a in &atoms {
            assert!(z.is_atom(a));
            assert!(z.local_criterion(a, None));
        }
        let id = AffineInvolution::identity(4);
        assert_eq!(id.atoms(), vec![AffinePermutation::identity(4)]);
        assert_eq!(id.hecke_atoms(), vec![AffinePermutation::identity(4)]);
        assert!(id.is_atom(&AffinePermutation::identity(4)));
        let s1 = AffineInvolution::new(AffinePermutation::simple(4, 1)).unwrap();
        assert_eq!(s1.atoms(), vec![AffinePermutation::simple(4, 1)]);
    }

    #[test]
    fn z_down_examples() {
        let s1 = AffineInvolution::new(AffinePermutation::simple(4, 1)).unwrap();
        assert!(s1.z_down(1).is_identity());
        let t13 = inv(4, &[3, 2, 1, 4]);
        assert_eq!(t13.z_down(1), AffineInvolution::from_cycles(4, &[(2, 3)]).unwrap());
        let z = inv(5, &[1, -2, 7, 5, 4]);
        assert_eq!(z.z_down(4).involution_code(), Code(vec![1, 0, 1, 1, 1]));
        assert_eq!(z.z_down(4).demazure_conjugate(4), z);
    }
}
