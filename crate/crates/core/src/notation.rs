//! Text input formats shared by the command line and the golden files.
//!
//! Permutations: `[0,3,6,1]`, `t(3,8) t(4,10)`, `s1 s2 s0`, `id`, or JSON
//! `{"n":4,"window":[...]}`. Involutions additionally accept JSON
//! `{"n":4,"cycles":[[3,8]]}`. Expansions: `2m[1,1,1,1] + m[2,1,1]` or the JSON
//! written by `to_json`.

use num_bigint::BigInt;

use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::involution::AffineInvolution;
use crate::partition::Partition;
use crate::symfunc::{Basis, Expansion};

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn need_n(n: Option<usize>, token: &str) -> Result<usize> {
    n.ok_or_else(|| Error::parse("this notation needs an explicit -n", token))
}

fn int(s: &str) -> Result<i64> {
    s.parse().map_err(|_| Error::parse("expected an integer", s))
}

/// `[a,b,c]` as a list of integers.
pub fn parse_list(s: &str) -> Result<Vec<i64>> {
    let t = squash(s);
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse("expected a bracketed list", s))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(int).collect()
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    let parts = parse_list(s)?;
    if let Some(&bad) = parts.iter().find(|&&p| p < 0) {
        return Err(Error::parse("negative part", bad.to_string()));
    }
    Ok(Partition::new(parts.into_iter().map(|p| p as u32).collect()))
}

/// `t(i,j) t(k,l)` as pairs.
pub fn parse_cycles(s: &str) -> Result<Vec<(i64, i64)>> {
    let t = squash(s);
    let mut out = Vec::new();
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix("t(")
            .ok_or_else(|| Error::parse("expected t(i,j)", rest))?;
        let close = body.find(')').ok_or_else(|| Error::parse("missing ')'", rest))?;
        let (a, b) = body[..close]
            .split_once(',')
            .ok_or_else(|| Error::parse("expected t(i,j)", &body[..close]))?;
        out.push((int(a)?, int(b)?));
        rest = &body[close + 1..];
    }
    Ok(out)
}

fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|tok| {
            tok.strip_prefix('s')
                .map(|r| r.trim_start_matches('_'))
                .and_then(|r| r.parse().ok())
                .ok_or_else(|| Error::parse("expected a generator like s1", tok))
        })
        .collect()
}

/// An affine permutation in any of the accepted notations. A window fixes `n`
/// by its length; `n`, if also given, must agree.
pub fn parse_permutation(s: &str, n: Option<usize>) -> Result<AffinePermutation> {
    let t = s.trim();
    if t.starts_with('{') {
        let p: AffinePermutation =
            serde_json::from_str(t).map_err(|e| Error::parse(e.to_string(), t))?;
        return check_n(p, n);
    }
    if t.starts_with('[') {
        let w = parse_list(t)?;
        if let Some(n) = n {
            if n != w.len() {
                return Err(Error::WrongLength { n, got: w.len() });
            }
        }
        return AffinePermutation::new(w.len(), w);
    }
    let n = need_n(n, t)?;
    if t == "id" {
        return Ok(AffinePermutation::identity(n));
    }
    if t.starts_with('t') {
        let mut p = AffinePermutation::identity(n);
        for (i, j) in parse_cycles(t)? {
            p = p.compose(&AffinePermutation::reflection(n, i, j)?)?;
        }
        return Ok(p);
    }
    let word: Vec<usize> = parse_word(t)?.into_iter().map(|r| r % n).collect();
    Ok(AffinePermutation::from_word(n, &word))
}

fn check_n<T>(x: T, n: Option<usize>) -> Result<T>
where
    T: HasPeriod,
{
    match n {
        Some(n) if n != x.period() => Err(Error::PeriodMismatch(n, x.period())),
        _ => Ok(x),
    }
}

trait HasPeriod {
    fn period(&self) -> usize;
}

impl HasPeriod for AffinePermutation {
    fn period(&self) -> usize {
        self.n()
    }
}

impl HasPeriod for AffineInvolution {
    fn period(&self) -> usize {
        self.n()
    }
}

/// An affine involution; cycle notation is read as commuting reflections.
pub fn parse_involution(s: &str, n: Option<usize>) -> Result<AffineInvolution> {
    let t = s.trim();
    if t.starts_with('{') {
        let z: AffineInvolution =
            serde_json::from_str(t).map_err(|e| Error::parse(e.to_string(), t))?;
        return check_n(z, n);
    }
    if t.starts_with('t') {
        return AffineInvolution::from_cycles(need_n(n, t)?, &parse_cycles(t)?);
    }
    AffineInvolution::new(parse_permutation(t, n)?)
}

/// `2m[2,1] - F[3] + m[1,1,1]`, the basis letter fixed by `B`, or a nonzero
/// integer for a degree zero element.
pub fn parse_expansion<B: Basis>(s: &str) -> Result<Expansion<B>> {
    let t = s.trim();
    if t.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(t).map_err(|e| Error::parse(e.to_string(), t))?;
        return Expansion::from_json(&v);
    }
    let flat = squash(t);
    if flat == "0" {
        return Err(Error::parse("cannot infer the degree of 0", t));
    }
    // a constant is how the degree zero element `c·B_∅` prints
    if let Ok(c) = flat.parse::<BigInt>() {
        return Expansion::from_terms(0, [(Partition::empty(), c)]);
    }
    let mut terms: Vec<(Partition, BigInt)> = Vec::new();
    let mut rest = flat.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if terms.is_empty() => (1, rest),
            _ => return Err(Error::parse("expected + or -", rest)),
        };
        let at = body
            .find(B::SYMBOL)
            .ok_or_else(|| Error::parse(format!("expected a term {}[...]", B::SYMBOL), body))?;
        let coeff: BigInt = match &body[..at] {
            "" => BigInt::from(1),
            c => c.parse().map_err(|_| Error::parse("bad coefficient", c))?,
        };
        let close = body.find(']').ok_or_else(|| Error::parse("missing ']'", body))?;
        let lam = parse_partition(&body[at + B::SYMBOL.len()..=close])?;
        terms.push((lam, coeff * sign));
        rest = &body[close + 1..];
    }
    let degree = terms[0].0.weight();
    Expansion::from_terms(degree, terms)
}
