//! Bruhat covers of involutions, the `Ψ`/`Φ` sets and transition identities.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use super::tau;
use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::involution::AffineInvolution;
use crate::search::SearchOptions;
use crate::stanley::{involution_stanley, stanley};
use crate::symfunc::{to_affine_schur, MonomialExpansion};

/// Both sides of a transition identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionReport<T> {
    pub left: Vec<T>,
    pub right: Vec<T>,
    pub left_sum: MonomialExpansion,
    pub right_sum: MonomialExpansion,
    pub equal: bool,
}

impl<T: Serialize> TransitionReport<T> {
    /// `{"left", "right", "sum", "equal"}`, with the sum in the affine Schur
    /// basis when `schur` is set and it lies in their span.
    pub fn to_json(&self, n: usize, schur: bool) -> Result<Value> {
        let sum = if schur {
            to_affine_schur(&self.left_sum, n)?.to_json()
        } else {
            self.left_sum.to_json()
        };
        Ok(json!({
            "left": serde_json::to_value(&self.left).expect("serializable"),
            "right": serde_json::to_value(&self.right).expect("serializable"),
            "sum": sum,
            "equal": self.equal,
        }))
    }
}

fn report<T>(
    left: Vec<T>,
    right: Vec<T>,
    f: impl Fn(&T) -> MonomialExpansion,
    degree: usize,
) -> TransitionReport<T> {
    let total = |xs: &[T]| {
        xs.iter().fold(MonomialExpansion::zero(degree), |acc, x| {
            acc.add(&f(x)).expect("homogeneous")
        })
    };
    let (left_sum, right_sum) = (total(&left), total(&right));
    TransitionReport {
        equal: left_sum == right_sum,
        left,
        right,
        left_sum,
        right_sum,
    }
}

/// `Ψ⁻_r(π) = {π t_{ir} : i < r, π ⋖ π t_{ir}}` and `Ψ⁺_r(π) = {π t_{rj} : r < j, π ⋖ π t_{rj}}`.
pub fn psi_sets(
    pi: &AffinePermutation,
    r: i64,
    opts: &SearchOptions,
) -> Result<(Vec<AffinePermutation>, Vec<AffinePermutation>)> {
    let (below, above) = pi.covers_through_with(r, opts)?;
    let sorted = |v: Vec<(i64, AffinePermutation)>| {
        v.into_iter().map(|x| x.1).collect::<BTreeSet<_>>().into_iter().collect()
    };
    Ok((sorted(below), sorted(above)))
}

/// The Lam–Shimozono transition identity `Σ_{Ψ⁻} F = Σ_{Ψ⁺} F`.
pub fn check_ls_transition(
    pi: &AffinePermutation,
    r: i64,
    opts: &SearchOptions,
) -> Result<TransitionReport<AffinePermutation>> {
    let (minus, plus) = psi_sets(pi, r, opts)?;
    Ok(report(minus, plus, stanley, pi.length() + 1))
}

fn excluded(n: i64, x: i64, classes: [i64; 2]) -> bool {
    classes.iter().any(|&c| (x - c).rem_euclid(n) == 0)
}

/// `Φ⁻_p(y)` for `p ≤ y(p)`, via the covers `y ⋖ y t_{ip}`.
pub fn phi_minus(
    y: &AffineInvolution,
    p: i64,
    opts: &SearchOptions,
) -> Result<Vec<AffineInvolution>> {
    let q = y.apply(p);
    if p > q {
        return Err(Error::NotACycle { p, q });
    }
    let n = y.n() as i64;
    let perm = y.perm();
    let found = opts.run(perm.cover_bound(), n, |b| {
        (p - b..p)
            .filter(|&i| !excluded(n, i, [p, q]) && perm.bruhat_cover(i, p).unwrap_or(false))
            .map(|i| tau(y, i, p).expect("distinct classes"))
            .collect()
    })?;
    Ok(found.into_iter().collect())
}

/// `Φ⁺_q(y)` for `y(q) ≤ q`, via the covers `y ⋖ y t_{qj}`.
pub fn phi_plus(
    y: &AffineInvolution,
    q: i64,
    opts: &SearchOptions,
) -> Result<Vec<AffineInvolution>> {
    let p = y.apply(q);
    if p > q {
        return Err(Error::NotACycle { p: q, q: p });
    }
    let n = y.n() as i64;
    let perm = y.perm();
    let found = opts.run(perm.cover_bound(), n, |b| {
        (q + 1..=q + b)
            .filter(|&j| !excluded(n, j, [p, q]) && perm.bruhat_cover(q, j).unwrap_or(false))
            .map(|j| tau(y, q, j).expect("distinct classes"))
            .collect()
    })?;
    Ok(found.into_iter().collect())
}

/// Range bound for `τ_{ir}(y)` covering `y`: such a cover moves `i` or `r`
/// onto the other's orbit, so `|r - i| ≤ D(z) + D(y) ≤ 2ℓ̂(y) + 2 + D(y)`.
fn definition_bound(y: &AffineInvolution) -> i64 {
    2 * y.hat_length() as i64 + 2 + y.perm().max_displacement() + y.n() as i64
}

fn phi_by_definition(
    y: &AffineInvolution,
    r: i64,
    opts: &SearchOptions,
    below: bool,
) -> Result<Vec<AffineInvolution>> {
    let n = y.n() as i64;
    let target = y.hat_length() + 1;
    let classes = [r, y.apply(r)];
    let found = opts.run(definition_bound(y), n, |b| {
        let range: Vec<i64> = if below {
            (r - b..r).collect()
        } else {
            (r + 1..=r + b).collect()
        };
        range
            .into_iter()
            .filter(|&x| !excluded(n, x, classes))
            .map(|x| {
                let (i, j) = if below { (x, r) } else { (r, x) };
                tau(y, i, j).expect("distinct classes")
            })
            .filter(|z| z.hat_length() == target)
            .collect()
    })?;
    Ok(found.into_iter().collect())
}

/// `Φ⁻_r(y)` straight from its definition, for any `r`.
pub fn phi_minus_by_definition(
    y: &AffineInvolution,
    r: i64,
    opts: &SearchOptions,
) -> Result<Vec<AffineInvolution>> {
    phi_by_definition(y, r, opts, true)
}

/// `Φ⁺_r(y)` straight from its definition, for any `r`.
pub fn phi_plus_by_definition(
    y: &AffineInvolution,
    r: i64,
    opts: &SearchOptions,
) -> Result<Vec<AffineInvolution>> {
    phi_by_definition(y, r, opts, false)
}

/// The involution transition identity `Σ_{Φ⁻_p} F̂ = Σ_{Φ⁺_q} F̂`, `q = y(p)`.
pub fn check_involution_transition(
    y: &AffineInvolution,
    p: i64,
    opts: &SearchOptions,
) -> Result<TransitionReport<AffineInvolution>> {
    let q = y.apply(p);
    if p > q {
        return Err(Error::NotACycleStart { p, q });
    }
    let minus = phi_minus(y, p, opts)?;
    let plus = phi_plus(y, q, opts)?;
    Ok(report(minus, plus, involution_stanley, y.hat_length() + 1))
}

/// Whether `ℓ̂(z) = ℓ̂(y) + 1` and `z = τ_{ij}(y)` for some `i < j`.
pub fn covers_involution_with(
    y: &AffineInvolution,
    z: &AffineInvolution,
    opts: &SearchOptions,
) -> Result<bool> {
    if y.n() != z.n() {
        return Err(Error::PeriodMismatch(y.n(), z.n()));
    }
    if z.hat_length() != y.hat_length() + 1 {
        return Ok(false);
    }
    let n = y.n() as i64;
    let default = y.perm().max_displacement() + z.perm().max_displacement() + n;
    let found = opts.run(default, n, |b| {
        let mut hits = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=i + b {
                if (j - i) % n != 0 && tau(y, i, j).expect("distinct classes") == *z {
                    hits.insert((i, j));
                }
            }
        }
        hits
    })?;
    Ok(!found.is_empty())
}

pub fn covers_involution(y: &AffineInvolution, z: &AffineInvolution) -> bool {
    covers_involution_with(y, z, &SearchOptions::default()).expect("bound is sufficient")
}

/// Checks that `(π, t_{ij}) ↦ π t_{ij}` is a bijection from pairs with
/// `π ∈ A(y)`, `π ⋖ π t_{ij}`, `τ_{ij}(y) = z` onto `A(z)`.
pub fn atom_cover_bijection_check(y: &AffineInvolution, z: &AffineInvolution) -> Result<bool> {
    if !covers_involution(y, z) {
        return Err(Error::NotACover(y.to_string(), z.to_string()));
    }
    let mut images = Vec::new();
    for pi in y.atoms() {
        for (i, j, sigma) in pi.upper_covers() {
            if tau(y, i, j)? == *z {
                images.push(sigma);
            }
        }
    }
    let distinct: BTreeSet<_> = images.iter().cloned().collect();
    let target: BTreeSet<_> = z.atoms().into_iter().collect();
    Ok(distinct.len() == images.len() && distinct == target)
}
