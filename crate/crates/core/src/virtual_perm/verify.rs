//! Finite verification of the covering and toggling transformations.

use itertools::Itertools;
use serde::Serialize;

use super::{finite_cycles, finite_perm, pair_conditions, separates, Part, VirtualPermutation};
use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::involution::AffineInvolution;
use crate::tau::{lookup, tau, Action, Diagram, ToggleCase};

/// The involution of period `m` whose window is `partner` (values in `1..=m`).
pub fn finite_involution(partner: &[u8]) -> Result<AffineInvolution> {
    AffineInvolution::new(finite_perm(partner))
}

/// The largest virtual atom for `y` with the given `ϖ` and `(i, j)` in its
/// `Cov`, or `None` when `ϖ⁻¹` is not an atom or `(i, j)` is not a cover.
pub fn maximal_for(y: &AffineInvolution, i: u8, j: u8, varpi: &[u8]) -> Option<VirtualPermutation> {
    let mut v = VirtualPermutation::new(varpi.to_vec()).ok()?;
    if varpi.len() != y.n() || !y.is_atom(&v.varpi_perm().inverse()) || !v.in_cov(i, j) {
        return None;
    }
    let cycles = finite_cycles(y);
    for p in Part::ALL {
        let values = p.codomain(varpi);
        for d in p.domain(v.m()) {
            v.insert_key(p, d.clone()).expect("domain order");
            for c in &values {
                if pair_conditions(p, &d, c, &cycles) && separates(p, &d, c, i, j) {
                    v.insert(p, d.clone(), c.clone()).expect("codomain order");
                }
            }
        }
    }
    Some(v)
}

/// All maximal virtual atoms for `y` with `(i, j)` in `Cov`, one per valid `ϖ`.
pub fn maximal_virtual_atoms(y: &AffineInvolution, i: u8, j: u8) -> Vec<VirtualPermutation> {
    (1..=y.n() as u8)
        .permutations(y.n())
        .filter_map(|w| maximal_for(y, i, j, &w))
        .collect()
}

/// The unique maximal virtual atom for `y` with `(i, j)` in `Cov`.
pub fn maximal_virtual_atom(y: &AffineInvolution, i: u8, j: u8) -> Result<VirtualPermutation> {
    let mut all = maximal_virtual_atoms(y, i, j);
    match all.len() {
        0 => Err(Error::NoAtomWithCover(i as usize, j as usize)),
        1 => Ok(all.pop().expect("one")),
        _ => Err(Error::AmbiguousAtom(i as usize, j as usize)),
    }
}

/// The outcome of one finite case.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    pub case: String,
    pub y: String,
    pub i_prime: u8,
    pub j_prime: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_prime: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_prime: Option<u8>,
    /// The involution the transformed atom must be a virtual atom for.
    pub target: String,
    pub maximal_atom: VirtualPermutation,
    pub transformed: VirtualPermutation,
    pub verdict: bool,
}

fn cycle_string(y: &AffineInvolution) -> String {
    finite_cycles(y)
        .iter()
        .map(|&(a, b)| if a == b { format!("({a})") } else { format!("({a},{b})") })
        .collect()
}

/// Diagrams with vertex set `1..=m`, `m ≤ 4`, as `(code, y, i, j)`.
fn full_diagrams() -> Vec<(String, AffineInvolution, u8, u8)> {
    let mut out = Vec::new();
    for m in 2..=4u8 {
        for w in (1..=m).permutations(m as usize) {
            if w.iter().enumerate().any(|(k, &v)| w[v as usize - 1] != k as u8 + 1) {
                continue;
            }
            let y = finite_involution(&w).expect("involution");
            for i in 1..=m {
                for j in i + 1..=m {
                    let yi = w[i as usize - 1];
                    let yj = w[j as usize - 1];
                    let mut verts = vec![i, j, yi, yj];
                    verts.sort_unstable();
                    verts.dedup();
                    if verts.len() != m as usize || yi == j {
                        continue;
                    }
                    let d = Diagram::new(&y, i as i64, j as i64).expect("distinct residues");
                    out.push((d.code(), y.clone(), i, j));
                }
            }
        }
    }
    out
}

/// Every diagram on which `τ` moves `y`: the maximal virtual atom exists, is
/// unique, and `Π·(i′,j′)` is a virtual atom for `τ(y′)`.
pub fn verify_covering_cases() -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for (code, y, i, j) in full_diagrams() {
        let row = lookup(&code).expect("complete table");
        if row.action == Action::Keep {
            continue;
        }
        let z = tau(&y, i as i64, j as i64)?;
        let pi = maximal_virtual_atom(&y, i, j)?;
        let t = AffinePermutation::reflection(y.n(), i as i64, j as i64)?;
        let transformed = pi.act(&t)?;
        out.push(Certificate {
            case: code,
            y: cycle_string(&y),
            i_prime: i,
            j_prime: j,
            k_prime: None,
            l_prime: None,
            target: cycle_string(&z),
            verdict: transformed.is_virtual_atom(&z),
            maximal_atom: pi,
            transformed,
        });
    }
    Ok(out)
}

/// Every valid `ϖ` on a diagram where `τ` fixes `y`: the toggle case is
/// identified from `ϖ`, and `Π·(i′,j′)(k′,l′)` is again a virtual atom for `y′`.
pub fn verify_toggling_cases() -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for (code, y, i, j) in full_diagrams() {
        if lookup(&code).expect("complete table").action != Action::Keep {
            continue;
        }
        let d = Diagram::new(&y, i as i64, j as i64)?;
        for pi in maximal_virtual_atoms(&y, i, j) {
            let rank = pi.varpi_perm().inverse();
            let case = ToggleCase::ALL.into_iter().find(|c| {
                c.code() == code
                    && c.chain(&d, i as i64, j as i64, &y)
                        .windows(2)
                        .all(|w| rank.apply(d.vertices[w[0]]) < rank.apply(d.vertices[w[1]]))
            });
            let Some(case) = case else {
                return Err(Error::NotAToggleInstance(format!(
                    "{code} with varpi {} matches no case",
                    pi.varpi_string()
                )));
            };
            let (k, l) = case.partners(i as i64, j as i64, y.apply(i as i64), y.apply(j as i64));
            let n = y.n();
            let sigma = AffinePermutation::reflection(n, i as i64, j as i64)?
                .compose(&AffinePermutation::reflection(n, k.min(l), k.max(l))?)?;
            let transformed = pi.act(&sigma)?;
            out.push(Certificate {
                case: case.to_string(),
                y: cycle_string(&y),
                i_prime: i,
                j_prime: j,
                k_prime: Some(k as u8),
                l_prime: Some(l as u8),
                target: cycle_string(&y),
                verdict: transformed.is_virtual_atom(&y),
                maximal_atom: pi,
                transformed,
            });
        }
    }
    out.sort_by(|a, b| a.case.cmp(&b.case));
    Ok(out)
}
