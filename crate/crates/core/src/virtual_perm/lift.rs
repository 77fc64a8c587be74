//! Virtual permutations read off actual atoms.

use serde::Serialize;

use super::{finite_involution, maximal_for, maximal_virtual_atom, Part, Symbol, VirtualPermutation};
use crate::affine::AffinePermutation;
use crate::enumerate::involutions;
use crate::error::{Error, Result};
use crate::involution::AffineInvolution;
use crate::tau::{tau, toggle};
use crate::virtual_perm::LinearOrder;

/// `Vir(π, y, E)` for a set `E` of distinct residues closed under `y`.
pub fn virtual_of(pi: &AffinePermutation, y: &AffineInvolution, e: &[i64]) -> Result<VirtualPermutation> {
    let n = pi.n() as i64;
    let mut e = e.to_vec();
    e.sort_unstable();
    let residues: Vec<i64> = e.iter().map(|&v| v.rem_euclid(n)).collect();
    let mut distinct = residues.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != e.len() || e.iter().any(|&v| !e.contains(&y.apply(v))) {
        return Err(Error::BadVirtual(format!("{e:?} is not a y-closed set of distinct residues")));
    }
    let m = e.len();
    let mut by_value: Vec<u8> = (1..=m as u8).collect();
    by_value.sort_by_key(|&a| pi.apply(e[a as usize - 1]));
    let mut v = VirtualPermutation::new(by_value)?;

    let add = |v: &mut VirtualPermutation, part: Part, theta: &[(Symbol, i64)]| -> Result<()> {
        let mut dom = theta.to_vec();
        dom.sort_by_key(|&(_, x)| x);
        let mut cod = theta.to_vec();
        cod.sort_by_key(|&(_, x)| pi.apply(x));
        v.insert(
            part,
            LinearOrder(dom.into_iter().map(|p| p.0).collect()),
            LinearOrder(cod.into_iter().map(|p| p.0).collect()),
        )
    };
    let base: Vec<(Symbol, i64)> = (1..=m as u8).map(|a| (Symbol::Pos(a), e[a as usize - 1])).collect();
    let (lo, hi) = (e[0], e[m - 1]);
    let reach = hi - lo + 2 * pi.max_displacement() + n;

    for k in 1..=reach / n + 2 {
        let mut theta = base.clone();
        theta.extend((1..=m as u8).map(|a| (Symbol::Neg(a), e[a as usize - 1] - k * n)));
        add(&mut v, Part::M, &theta)?;
    }
    for (p, q) in y.cycles() {
        if residues.contains(&p.rem_euclid(n)) || residues.contains(&q.rem_euclid(n)) {
            continue;
        }
        let first = (lo - q - reach).div_euclid(n) - 1;
        let last = (hi - p + reach).div_euclid(n) + 1;
        for t in first..=last {
            let mut theta = base.clone();
            if p == q {
                theta.push((Symbol::R, p + t * n));
                add(&mut v, Part::S, &theta)?;
            } else {
                theta.extend([(Symbol::P, p + t * n), (Symbol::Q, q + t * n)]);
                add(&mut v, Part::D, &theta)?;
            }
        }
    }
    Ok(v)
}

/// Tally of [`lift_instances`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct LiftReport {
    pub covering: usize,
    pub toggling: usize,
    pub failures: Vec<String>,
}

/// Checks every `π ∈ A(y)`, `ℓ̂(y) ≤ max_hat`, and cover `π ⋖ π t_{ij}` with
/// `i ∈ [n]` and `i ≢ y(j)`: `Vir(π, y, E)` is a virtual atom contained in the
/// maximal one, and transforming it agrees with reading off the image atom.
pub fn lift_instances(n: usize, max_hat: usize) -> Result<LiftReport> {
    let mut report = LiftReport::default();
    let nn = n as i64;
    for y in involutions(n, max_hat) {
        for pi in y.atoms() {
            for (i, j, sigma) in pi.upper_covers() {
                if (i - y.apply(j)).rem_euclid(nn) == 0 {
                    continue;
                }
                let mut e = vec![i, j, y.apply(i), y.apply(j)];
                e.sort_unstable();
                e.dedup();
                let pos = |x: i64| e.iter().position(|&v| v == x).expect("vertex") as u8 + 1;
                let partner: Vec<u8> = e.iter().map(|&v| pos(y.apply(v))).collect();
                let yp = finite_involution(&partner)?;
                let (ip, jp) = (pos(i), pos(j));
                let vir = virtual_of(&pi, &y, &e)?;
                let label = format!("y = {y}, π = {pi}, (i,j) = ({i},{j})");
                let mut fail = |what: &str| report.failures.push(format!("{label}: {what}"));
                if !vir.is_virtual_atom(&yp) {
                    fail("not a virtual atom");
                }
                if !vir.in_cov(ip, jp) {
                    fail("(i′,j′) not in Cov");
                }
                let z = tau(&y, i, j)?;
                let t = AffinePermutation::reflection(e.len(), ip as i64, jp as i64)?;
                if z != y {
                    report.covering += 1;
                    match maximal_virtual_atom(&yp, ip, jp) {
                        Ok(max) if max.contains(&vir) => {}
                        _ => fail("not inside the maximal virtual atom"),
                    }
                    if virtual_of(&sigma, &z, &e)? != vir.act(&t)? {
                        fail("image does not match the transformed virtual atom");
                    }
                } else {
                    report.toggling += 1;
                    if !maximal_for(&yp, ip, jp, vir.varpi()).is_some_and(|max| max.contains(&vir)) {
                        fail("not inside the maximal virtual atom");
                    }
                    let tg = toggle(&pi, i, j, &y)?;
                    let s = AffinePermutation::reflection(e.len(), pos(tg.k).min(pos(tg.l)) as i64, pos(tg.k).max(pos(tg.l)) as i64)?;
                    if virtual_of(&tg.result, &y, &e)? != vir.act(&t.compose(&s)?)? {
                        fail("toggle image does not match the transformed virtual atom");
                    }
                }
            }
        }
    }
    Ok(report)
}
