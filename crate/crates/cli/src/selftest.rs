use std::path::Path;

use affstan::checks::{self, SuiteReport};
use affstan::virtual_perm::{lift_instances, verify_covering_cases, verify_toggling_cases};
use serde::Deserialize;
use serde_json::json;

use crate::commands::{suite_line, Report};
use crate::{CliError, Scale};

const BUILTIN: &str = include_str!("../data/golden.json");

/// One recorded invocation. `expect` must equal stdout up to trailing
/// whitespace; `contains` only needs to occur in it.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Golden {
    name: String,
    args: Vec<String>,
    #[serde(default)]
    expect: Option<String>,
    #[serde(default)]
    contains: Option<String>,
    #[serde(default)]
    exit: i32,
}

impl Golden {
    /// `None` on success, otherwise what went wrong.
    fn check(&self) -> Option<String> {
        if self.args.first().map(String::as_str) == Some("selftest") {
            return Some("golden entries may not call selftest".into());
        }
        let out = crate::run(std::iter::once("affstan".to_string()).chain(self.args.iter().cloned()));
        if out.code != self.exit {
            return Some(format!("exit {} (expected {}) {}", out.code, self.exit, out.stderr.trim()));
        }
        let got = out.stdout.trim_end();
        if let Some(e) = &self.expect {
            if got != e.trim_end() {
                return Some(format!("expected `{e}`, got `{got}`"));
            }
        }
        if let Some(c) = &self.contains {
            if !got.contains(c.as_str()) {
                return Some(format!("output lacks `{c}`, got `{got}`"));
            }
        }
        None
    }
}

fn load(path: Option<&Path>) -> Result<Vec<Golden>, CliError> {
    let (src, text) = match path {
        Some(p) => (
            p.display().to_string(),
            std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?,
        ),
        None => ("built-in golden file".to_string(), BUILTIN.to_string()),
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{src}: {e}")))
}

pub fn selftest(as_json: bool, scale: Scale, golden: Option<&Path>) -> Result<Report, CliError> {
    let entries = load(golden)?;
    let mut failed = Vec::new();
    for g in &entries {
        if let Some(why) = g.check() {
            failed.push((g.name.clone(), why));
        }
    }

    let (top, h) = match scale {
        Scale::Small => (3, 3),
        Scale::Full => (4, 4),
    };
    let mut suites: Vec<(String, SuiteReport)> = Vec::new();
    for n in 2..=top {
        for s in [
            checks::cover_equivalence(n, h)?,
            checks::covering_property(n, h)?,
            checks::involution_transitions(n, h)?,
            checks::phi_lemma(n, h)?,
            checks::code_identities(n, h)?,
            checks::omega_invariance(n, h)?,
        ] {
            suites.push((format!("n={n}, max {h}"), s));
        }
        let lift = lift_instances(n, h)?;
        suites.push((
            format!("n={n}, max {h}"),
            SuiteReport {
                name: "virtual atom lifting".into(),
                checked: lift.covering + lift.toggling,
                failures: lift.failures,
            },
        ));
    }
    let mut certs = SuiteReport { name: "virtual certificates".into(), ..Default::default() };
    for c in verify_covering_cases()?.into_iter().chain(verify_toggling_cases()?) {
        certs.checked += 1;
        if !c.verdict {
            certs.failures.push(c.case);
        }
    }
    suites.push(("finite cases".into(), certs));

    let ok = failed.is_empty() && suites.iter().all(|(_, s)| s.passed());
    let text = if as_json {
        let j = json!({
            "golden": { "total": entries.len(), "failures": failed.iter().map(|(n, w)| json!({ "name": n, "reason": w })).collect::<Vec<_>>() },
            "suites": suites.iter().map(|(n, s)| json!({ "scope": n, "suite": serde_json::to_value(s).expect("serializable") })).collect::<Vec<_>>(),
            "passed": ok,
        });
        format!("{j}\n")
    } else {
        let mut t = format!("golden: {}/{} passed\n", entries.len() - failed.len(), entries.len());
        for (name, why) in &failed {
            t += &format!("FAILED {name}: {why}\n");
        }
        for (n, s) in &suites {
            t += &suite_line(n, s);
            t.push('\n');
        }
        t += if ok { "selftest passed\n" } else { "selftest FAILED\n" };
        t
    };
    Ok(Report { text, ok })
}
