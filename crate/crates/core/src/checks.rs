//! Exhaustive checks of the structural theorems over small involutions.
//!
//! Each suite returns a [`SuiteReport`] listing how many instances were
//! examined and a description of every failure.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::enumerate::involutions;
use crate::error::Result;
use crate::involution::AffineInvolution;
use crate::search::SearchOptions;
use crate::stanley::involution_stanley;
use crate::symfunc::{omega_plus, to_affine_schur};
use crate::tau::{
    atom_cover_bijection_check, check_involution_transition, covers_involution, phi_minus,
    phi_minus_by_definition, phi_plus, phi_plus_by_definition, tau, toggle, InvolutionPoset,
};
use crate::affine::lambda_star;

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `z = τ_{ij}(y) ≠ y` with `ℓ̂(z) = ℓ̂(y) + 1`, `i ∈ [n]`.
fn tau_covers(y: &AffineInvolution) -> Result<BTreeSet<AffineInvolution>> {
    let n = y.n() as i64;
    let reach = 2 * y.perm().max_displacement() + 4 * n;
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=i + reach {
            if (j - i) % n == 0 {
                continue;
            }
            let z = tau(y, i, j)?;
            if z.hat_length() == y.hat_length() + 1 {
                out.insert(z);
            }
        }
    }
    Ok(out)
}

/// Covers in the brute-force involution poset are exactly the involutions
/// `τ_{ij}(y)` one step up, and exactly those where every atom of `z` covers
/// some atom of `y`.
pub fn cover_equivalence(n: usize, max_hat: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("cover equivalence");
    let poset = InvolutionPoset::new(n, max_hat);
    let all: Vec<AffineInvolution> = poset.elements().cloned().collect();
    for y in all.iter().filter(|y| y.hat_length() < max_hat) {
        let brute: BTreeSet<_> = poset.upper_covers(y).into_iter().collect();
        let via_tau = tau_covers(y)?;
        r.check(brute == via_tau, || format!("{y}: poset {brute:?} vs τ {via_tau:?}"));
        let y_atoms: BTreeSet<_> = y.atoms().into_iter().collect();
        for z in all.iter().filter(|z| z.hat_length() == y.hat_length() + 1) {
            let by_atoms = z
                .atoms()
                .iter()
                .all(|s| s.lower_covers().iter().any(|p| y_atoms.contains(p)));
            let covered = brute.contains(z);
            r.check(by_atoms == covered && covers_involution(y, z) == covered, || {
                format!("{y} ⋖ {z}: poset {covered}, atoms {by_atoms}")
            });
        }
    }
    Ok(r)
}

/// For `π ∈ A(y)` and `π ⋖ π t_{ij}`: `π t_{ij}` is an atom of some involution
/// exactly when `τ_{ij}(y) ≠ y`, and then of `τ_{ij}(y)`; otherwise the toggle
/// applies. Also the atom bijection onto each cover.
pub fn covering_property(n: usize, max_hat: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("covering and toggling");
    for y in involutions(n, max_hat.saturating_sub(1)) {
        for pi in y.atoms() {
            for (i, j, sigma) in pi.upper_covers() {
                let z = tau(&y, i, j)?;
                let w = AffineInvolution::new(sigma.inverse().hecke_product(&sigma)?)?;
                let atomic = w.hat_length() == sigma.length();
                r.check(atomic == (z != y), || format!("{y}, {pi}, t({i},{j}): atom {atomic}"));
                if z != y {
                    r.check(z.is_atom(&sigma) && w == z, || format!("{y}, {pi}, t({i},{j}) ↦ {z}"));
                } else {
                    let ok = toggle(&pi, i, j, &y).is_ok_and(|t| y.is_atom(&t.result) && t.result != pi);
                    r.check(ok, || format!("toggle fails at {y}, {pi}, t({i},{j})"));
                }
            }
        }
        for z in tau_covers(&y)? {
            let ok = atom_cover_bijection_check(&y, &z)?;
            r.check(ok, || format!("atom bijection {y} ⋖ {z}"));
        }
    }
    Ok(r)
}

/// `Σ_{Φ⁻_p} F̂ = Σ_{Φ⁺_q} F̂` for every cycle `(p, q)`.
pub fn involution_transitions(n: usize, max_hat: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("involution transition");
    let opts = SearchOptions::default();
    for y in involutions(n, max_hat.saturating_sub(1)) {
        for (p, _) in y.cycles() {
            let rep = check_involution_transition(&y, p, &opts)?;
            r.check(rep.equal, || format!("{y}, p = {p}: {} vs {}", rep.left_sum, rep.right_sum));
        }
    }
    Ok(r)
}

/// The simpler description of `Φ±`, the two inclusions and disjointness.
pub fn phi_lemma(n: usize, max_hat: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("Φ set lemma");
    let opts = SearchOptions::default();
    let set = |v: Vec<AffineInvolution>| v.into_iter().collect::<BTreeSet<_>>();
    for y in involutions(n, max_hat.saturating_sub(1)) {
        for (p, q) in y.cycles() {
            let minus_p = set(phi_minus(&y, p, &opts)?);
            let plus_q = set(phi_plus(&y, q, &opts)?);
            let minus_q = set(phi_minus_by_definition(&y, q, &opts)?);
            let plus_p = set(phi_plus_by_definition(&y, p, &opts)?);
            let tag = || format!("{y}, ({p},{q})");
            r.check(minus_p == set(phi_minus_by_definition(&y, p, &opts)?), || format!("{}: Φ⁻ forms differ", tag()));
            r.check(plus_q == set(phi_plus_by_definition(&y, q, &opts)?), || format!("{}: Φ⁺ forms differ", tag()));
            r.check(minus_p.is_superset(&minus_q), || format!("{}: Φ⁻_p ⊉ Φ⁻_q", tag()));
            r.check(plus_p.is_subset(&plus_q), || format!("{}: Φ⁺_p ⊄ Φ⁺_q", tag()));
            r.check(minus_p.is_disjoint(&plus_q), || format!("{}: Φ⁻_p ∩ Φ⁺_q ≠ ∅", tag()));
        }
    }
    Ok(r)
}

/// Codes, visible descents and shapes against the extreme atoms.
pub fn code_identities(n: usize, max_hat: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("involution code identities");
    let nn = n;
    for z in involutions(n, max_hat) {
        let amin = z.alpha_min();
        let amax = z.alpha_max();
        let c = z.involution_code();
        let e = c.entries();
        r.check(z.visible_descents() == amin.right_descents(), || format!("{z}: Des_V"));
        r.check(c == amin.code(), || format!("{z}: ĉ vs c(α_min)"));
        r.check(c.total() == z.hat_length(), || format!("{z}: Σĉ"));
        let by_code: Vec<usize> = (1..=nn).filter(|&i| e[i - 1] > e[i % nn]).collect();
        r.check(by_code == z.visible_descents(), || format!("{z}: descents from ĉ"));
        let mu = z.mu_shape();
        r.check(mu == amax.shape(), || format!("{z}: μ vs λ(α_max)"));
        r.check(lambda_star(&mu, n)? == amin.lambda_prime(), || format!("{z}: μ* vs λ′(α_min)"));
    }
    Ok(r)
}

/// `ω⁺(F̂_z) = F̂_z`; the first counterexample is recorded as a witness.
pub fn omega_invariance(n: usize, max_hat: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("ω⁺ invariance");
    for z in involutions(n, max_hat) {
        let f = to_affine_schur(&involution_stanley(&z), n)?;
        let g = omega_plus(&f, n)?;
        r.check(f == g, || format!("witness {z}: F̂ = {f}, ω⁺F̂ = {g}"));
        if !r.passed() {
            break;
        }
    }
    Ok(r)
}
