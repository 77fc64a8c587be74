use std::fmt::Display;

use affstan::checks::{self, SuiteReport};
use affstan::enumerate::length_levels;
use affstan::notation::{parse_expansion, parse_involution, parse_permutation};
use affstan::stanley::{involution_stanley, stanley};
use affstan::symfunc::{from_affine_schur, to_affine_schur, AffineSchur, Monomial};
use affstan::tau::{
    check_involution_transition, check_ls_transition, phi_minus_by_definition,
    phi_plus_by_definition, psi_sets, tau, tau_action, toggle,
};
use affstan::virtual_perm::{verify_covering_cases, verify_toggling_cases, Certificate};
use affstan::{AffineInvolution, AffinePermutation, Error, MonomialExpansion, SearchOptions};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{BasisArg, Cli, CliError, Command, Options, VerifyKind};

/// Rendered output and whether every check in it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub ok: bool,
}

type Result<T> = std::result::Result<T, CliError>;

struct Ctx<'a> {
    o: &'a Options,
}

impl Ctx<'_> {
    fn guard(&self, got: usize) -> Result<()> {
        if got > self.o.max_length {
            return Err(Error::ScaleGuard { got, bound: self.o.max_length }.into());
        }
        Ok(())
    }

    fn perm(&self, s: &str) -> Result<AffinePermutation> {
        let p = parse_permutation(s, self.o.n)?;
        self.guard(p.length())?;
        Ok(p)
    }

    fn inv(&self, s: &str) -> Result<AffineInvolution> {
        let z = parse_involution(s, self.o.n)?;
        self.guard(z.hat_length())?;
        Ok(z)
    }

    fn search(&self) -> SearchOptions {
        SearchOptions { bound: self.o.bound, widen: self.o.widen }
    }

    fn emit(&self, json: Value, text: impl Into<String>) -> Report {
        self.verdict(json, text, true)
    }

    fn verdict(&self, json: Value, text: impl Into<String>, ok: bool) -> Report {
        let text = if self.o.json {
            format!("{json}\n")
        } else {
            let mut t = text.into();
            if !t.ends_with('\n') {
                t.push('\n');
            }
            t
        };
        Report { text, ok }
    }

    /// `f` in the requested basis, as JSON and text.
    fn expansion(&self, f: &MonomialExpansion, n: usize) -> Result<(Value, String)> {
        Ok(match self.o.basis {
            BasisArg::M => (f.to_json(), f.to_string()),
            BasisArg::F => {
                let g = to_affine_schur(f, n)?;
                (g.to_json(), g.to_string())
            }
        })
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn braces<T: Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn lines<T: Display>(xs: &[T]) -> String {
    xs.iter().map(|x| format!("{x}\n")).collect()
}

pub fn dispatch(cli: &Cli) -> Result<Report> {
    let cx = Ctx { o: &cli.opts };
    match &cli.command {
        Command::Stanley { perm } => {
            let p = cx.perm(perm)?;
            let (j, t) = cx.expansion(&stanley(&p), p.n())?;
            Ok(cx.emit(j, t))
        }
        Command::InvStanley { inv } => {
            let z = cx.inv(inv)?;
            let (j, t) = cx.expansion(&involution_stanley(&z), z.n())?;
            Ok(cx.emit(j, t))
        }
        Command::Atoms { inv } => {
            let atoms = cx.inv(inv)?.atoms();
            Ok(cx.emit(to_json(&atoms), lines(&atoms)))
        }
        Command::HeckeAtoms { inv } => {
            let atoms = cx.inv(inv)?.hecke_atoms();
            Ok(cx.emit(to_json(&atoms), lines(&atoms)))
        }
        Command::Code { input, involution: false } => {
            let c = cx.perm(input)?.code();
            Ok(cx.emit(json!({ "code": c.entries() }), c.to_string()))
        }
        Command::Code { input, involution: true } => {
            let z = cx.inv(input)?;
            let (c, d) = (z.involution_code(), z.visible_descents());
            let text = format!("{c}\nvisible descents: {}", braces(&d));
            Ok(cx.emit(json!({ "code": c.entries(), "visibleDescents": d }), text))
        }
        Command::Shape { input, involution } => {
            let lam = if *involution { cx.inv(input)?.mu_shape() } else { cx.perm(input)?.shape() };
            Ok(cx.emit(json!(lam.parts()), lam.bracket()))
        }
        Command::AlphaMin { inv } => {
            let a = cx.inv(inv)?.alpha_min();
            Ok(cx.emit(to_json(&a), a.to_string()))
        }
        Command::AlphaMax { inv } => {
            let a = cx.inv(inv)?.alpha_max();
            Ok(cx.emit(to_json(&a), a.to_string()))
        }
        Command::Tau { inv, i, j } => {
            let y = cx.inv(inv)?;
            let (d, action) = tau_action(&y, *i, *j)?;
            let z = tau(&y, *i, *j)?;
            let j = json!({
                "diagram": d.code(),
                "special": d.special,
                "action": to_json(&action),
                "result": to_json(&z),
            });
            Ok(cx.emit(j, format!("{z}\ndiagram {d}, action {action:?}")))
        }
        Command::Phi { inv, r } => {
            let y = cx.inv(inv)?;
            let minus = phi_minus_by_definition(&y, *r, &cx.search())?;
            let plus = phi_plus_by_definition(&y, *r, &cx.search())?;
            let text = format!("Phi- = {}\nPhi+ = {}", braces(&minus), braces(&plus));
            Ok(cx.emit(json!({ "minus": to_json(&minus), "plus": to_json(&plus) }), text))
        }
        Command::Psi { perm, r } => {
            let p = cx.perm(perm)?;
            let (minus, plus) = psi_sets(&p, *r, &cx.search())?;
            let text = format!("Psi- = {}\nPsi+ = {}", braces(&minus), braces(&plus));
            Ok(cx.emit(json!({ "minus": to_json(&minus), "plus": to_json(&plus) }), text))
        }
        Command::Transition { perm, r } => {
            let p = cx.perm(perm)?;
            let rep = check_ls_transition(&p, *r, &cx.search())?;
            let (_, left) = cx.expansion(&rep.left_sum, p.n())?;
            let (_, right) = cx.expansion(&rep.right_sum, p.n())?;
            let text = format!(
                "Psi- = {}\nPsi+ = {}\nleft = {left}\nright = {right}\nequal: {}",
                braces(&rep.left),
                braces(&rep.right),
                rep.equal
            );
            let j = rep.to_json(p.n(), cx.o.basis == BasisArg::F)?;
            Ok(cx.verdict(j, text, rep.equal))
        }
        Command::InvTransition { inv, p } => {
            let y = cx.inv(inv)?;
            let rep = check_involution_transition(&y, *p, &cx.search())?;
            let (_, left) = cx.expansion(&rep.left_sum, y.n())?;
            let (_, right) = cx.expansion(&rep.right_sum, y.n())?;
            let text = format!(
                "Phi- = {}\nPhi+ = {}\nleft = {left}\nright = {right}\nequal: {}",
                braces(&rep.left),
                braces(&rep.right),
                rep.equal
            );
            let j = rep.to_json(y.n(), cx.o.basis == BasisArg::F)?;
            Ok(cx.verdict(j, text, rep.equal))
        }
        Command::Toggle { inv, perm, i, j } => {
            let y = cx.inv(inv)?;
            let p = parse_permutation(perm, Some(y.n()))?;
            let t = toggle(&p, *i, *j, &y)?;
            let text = format!("case {}: t({},{}) gives {}", t.case, t.k, t.l, t.result);
            Ok(cx.emit(to_json(&t), text))
        }
        Command::SchurExpand { expansion } => {
            let n = cli
                .opts
                .n
                .ok_or_else(|| CliError::Usage("schur-expand needs -n".into()))?;
            match parse_expansion::<Monomial>(expansion) {
                Ok(f) => {
                    let g = to_affine_schur(&f, n)?;
                    Ok(cx.emit(g.to_json(), g.to_string()))
                }
                Err(e) if !expansion.contains('F') => Err(e.into()),
                Err(_) => {
                    let g = parse_expansion::<AffineSchur>(expansion)?;
                    let f = from_affine_schur(&g, n)?;
                    Ok(cx.emit(f.to_json(), f.to_string()))
                }
            }
        }
        Command::Verify { what, max_hat } => verify(&cx, *what, *max_hat),
        Command::Selftest { scale, golden } => crate::selftest::selftest(cx.o.json, *scale, golden.as_deref()),
    }
}

fn certificates(cx: &Ctx, certs: Vec<Certificate>) -> Report {
    let good = certs.iter().filter(|c| c.verdict).count();
    let mut text = String::new();
    for c in &certs {
        let ij = match (c.k_prime, c.l_prime) {
            (Some(k), Some(l)) => format!("({},{}) ({k},{l})", c.i_prime, c.j_prime),
            _ => format!("({},{})", c.i_prime, c.j_prime),
        };
        let verdict = if c.verdict { "ok" } else { "FAILED" };
        text += &format!("{}: y' = {}, {ij} -> {}: {verdict}\n", c.case, c.y, c.target);
    }
    text += &format!("{good}/{} cases verified", certs.len());
    let j = json!({ "cases": to_json(&certs), "verified": good, "total": certs.len() });
    cx.verdict(j, text, good == certs.len())
}

/// Lam–Shimozono identity for every `π` with `ℓ(π) ≤ max_len` and `r ∈ [n]`.
fn ls_suite(n: usize, max_len: usize, opts: &SearchOptions) -> Result<SuiteReport> {
    let mut r = SuiteReport { name: "Lam–Shimozono transition".into(), ..Default::default() };
    for p in length_levels(n, max_len).into_iter().flatten() {
        for row in 1..=n as i64 {
            r.checked += 1;
            if !check_ls_transition(&p, row, opts)?.equal {
                r.failures.push(format!("{p} at r = {row}"));
            }
        }
    }
    Ok(r)
}

pub(crate) fn suite_line(scope: &str, s: &SuiteReport) -> String {
    match s.failures.first() {
        None => format!("{} ({scope}): {} checked, ok", s.name, s.checked),
        Some(f) => format!(
            "{} ({scope}): {} of {} failed, first: {f}",
            s.name,
            s.failures.len(),
            s.checked
        ),
    }
}

fn verify(cx: &Ctx, what: VerifyKind, max_hat: usize) -> Result<Report> {
    match what {
        VerifyKind::Covering => Ok(certificates(cx, verify_covering_cases()?)),
        VerifyKind::Toggling => Ok(certificates(cx, verify_toggling_cases()?)),
        VerifyKind::Transition | VerifyKind::ConjectureOmega => {
            cx.guard(max_hat)?;
            let top = cx.o.n.unwrap_or(4);
            if top < 2 {
                return Err(CliError::Usage(format!("-n must be at least 2, got {top}")));
            }
            let mut runs = Vec::new();
            for n in 2..=top {
                if what == VerifyKind::Transition {
                    runs.push((n, checks::involution_transitions(n, max_hat)?));
                    runs.push((n, ls_suite(n, max_hat, &cx.search())?));
                } else {
                    runs.push((n, checks::omega_invariance(n, max_hat)?));
                }
            }
            let ok = runs.iter().all(|(_, s)| s.passed());
            let text: Vec<String> = runs.iter().map(|(n, s)| suite_line(&format!("n={n}, max {max_hat}"), s)).collect();
            let j: Vec<Value> = runs
                .iter()
                .map(|(n, s)| json!({ "n": n, "maxHat": max_hat, "suite": to_json(s) }))
                .collect();
            Ok(cx.verdict(Value::Array(j), text.join("\n"), ok))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn report(args: &[&str]) -> Result<Report> {
        dispatch(&Cli::try_parse_from(std::iter::once("affstan").chain(args.iter().copied())).unwrap())
    }

    #[test]
    fn set_notation() {
        assert_eq!(braces::<i32>(&[]), "{}");
        assert_eq!(braces(&[1, 4]), "{1, 4}");
        assert_eq!(lines(&["a", "b"]), "a\nb\n");
    }

    #[test]
    fn guard_uses_involution_length() {
        let z = parse_involution("t(1,8)", Some(4)).unwrap();
        let h = z.hat_length();
        assert!(z.length() > h);
        let at = |b: usize| report(&["inv-stanley", "-n", "4", "t(1,8)", "--max-length", &b.to_string()]);
        assert!(at(h).is_ok());
        let err = at(h - 1).unwrap_err();
        assert!(matches!(err, CliError::Lib(Error::ScaleGuard { got, .. }) if got == h));
    }

    #[test]
    fn failing_suites_clear_ok() {
        let s = SuiteReport { name: "x".into(), checked: 3, failures: vec!["w".into()] };
        assert_eq!(suite_line("n=2", &s), "x (n=2): 1 of 3 failed, first: w");
    }
}
