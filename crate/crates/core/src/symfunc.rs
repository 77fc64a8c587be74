//! Homogeneous symmetric functions in the monomial and affine Schur bases.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::affine::{lambda_star, AffinePermutation};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stanley::stanley;

/// A basis of the ring of symmetric functions, used as a type tag.
pub trait Basis: Clone + fmt::Debug + Default + PartialEq + Eq {
    /// Short name used in text and JSON output.
    const SYMBOL: &'static str;
}

/// The monomial basis `m_λ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial;

/// The affine Schur basis `F_λ`, `λ ∈ Parⁿ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct AffineSchur;

impl Basis for Monomial {
    const SYMBOL: &'static str = "m";
}

impl Basis for AffineSchur {
    const SYMBOL: &'static str = "F";
}

/// A homogeneous element written in basis `B`, as a sparse map from
/// partitions to nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expansion<B: Basis> {
    degree: usize,
    terms: BTreeMap<Partition, BigInt>,
    basis: PhantomData<B>,
}

pub type MonomialExpansion = Expansion<Monomial>;
pub type SchurExpansion = Expansion<AffineSchur>;

impl<B: Basis> Expansion<B> {
    pub fn zero(degree: usize) -> Self {
        Expansion {
            degree,
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }

    /// The basis element indexed by `lambda`.
    pub fn basis_element(lambda: Partition) -> Self {
        let mut e = Self::zero(lambda.weight());
        e.terms.insert(lambda, BigInt::from(1));
        e
    }

    /// Collects terms, summing repeated partitions.
    pub fn from_terms<C: Into<BigInt>>(
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, C)>,
    ) -> Result<Self> {
        let mut e = Self::zero(degree);
        for (lam, c) in terms {
            if lam.weight() != degree {
                return Err(Error::DegreeMismatch(degree, lam.weight()));
            }
            e.add_term(lam, c.into());
        }
        Ok(e)
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in increasing lexicographic order of partitions.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_degree(&self, other: &Self) -> Result<usize> {
        if self.is_zero() {
            Ok(other.degree)
        } else if other.is_zero() || self.degree == other.degree {
            Ok(self.degree)
        } else {
            Err(Error::DegreeMismatch(self.degree, other.degree))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.degree = self.check_degree(other)?;
        for (lam, c) in &other.terms {
            out.add_term(lam.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.degree);
        if !c.is_zero() {
            out.terms = self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect();
        }
        out
    }

    /// Sum of a family of expansions of a common degree.
    pub fn sum<'a>(degree: usize, items: impl IntoIterator<Item = &'a Self>) -> Result<Self>
    where
        B: 'a,
    {
        let mut acc = Self::zero(degree);
        for e in items {
            acc = acc.add(e)?;
        }
        Ok(acc)
    }

    /// JSON with partitions in decreasing lexicographic order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(lam, c)| json!({ "partition": lam.parts(), "coeff": coeff_json(c) }))
            .collect();
        json!({ "degree": self.degree, "basis": B::SYMBOL, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::parse(format!("expansion JSON: {what}"), v.to_string());
        let basis = v.get("basis").and_then(Value::as_str).ok_or_else(|| bad("basis"))?;
        if basis != B::SYMBOL {
            return Err(bad("wrong basis"));
        }
        let degree = v.get("degree").and_then(Value::as_u64).ok_or_else(|| bad("degree"))?;
        let mut out = Self::zero(degree as usize);
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("terms"))? {
            let parts: Vec<u32> = serde_json::from_value(t.get("partition").cloned().unwrap_or_default())
                .map_err(|_| bad("partition"))?;
            let coeff = match t.get("coeff") {
                Some(Value::Number(x)) => x.as_i64().map(BigInt::from),
                Some(Value::String(s)) => s.parse().ok(),
                _ => None,
            }
            .ok_or_else(|| bad("coeff"))?;
            let lam = Partition::new(parts);
            if lam.weight() != out.degree {
                return Err(Error::DegreeMismatch(out.degree, lam.weight()));
            }
            out.add_term(lam, coeff);
        }
        Ok(out)
    }

    /// Text form with partitions in exponent notation, e.g. `2m_{1^4} + m_{21^2}`.
    pub fn exponent_form(&self) -> String {
        self.render(|lam| format!("{}_{{{}}}", B::SYMBOL, lam))
    }

    fn render(&self, name: impl Fn(&Partition) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (lam, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if lam.is_empty() {
                out.push_str(&mag.to_string());
                continue;
            }
            if mag != BigInt::from(1) {
                out.push_str(&mag.to_string());
            }
            out.push_str(&name(lam));
        }
        out
    }
}

fn coeff_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => json!(x),
        None => json!(c.to_string()),
    }
}

/// Terms in increasing lexicographic order with partitions in brackets, e.g.
/// `F[1,1,1,1] + F[2,1,1] + F[3,1]`.
impl<B: Basis> fmt::Display for Expansion<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(|lam| format!("{}{}", B::SYMBOL, lam.bracket())))
    }
}

/// `λ <* μ` iff `μ* < λ*` in dominance order.
pub fn star_less(lambda: &Partition, mu: &Partition, n: usize) -> Result<bool> {
    lambda_star(mu, n)?.dominance_less(&lambda_star(lambda, n)?)
}

/// The affine Schur function `F_λ` in the monomial basis.
pub fn affine_schur(lambda: &Partition, n: usize) -> Result<MonomialExpansion> {
    Ok(stanley(&AffinePermutation::grassmannian(lambda, n)?))
}

/// Rewrites `f` in the affine Schur basis, always eliminating the
/// lexicographically largest support element.
pub fn to_affine_schur(f: &MonomialExpansion, n: usize) -> Result<SchurExpansion> {
    to_affine_schur_by(f, n, |maximal| maximal.iter().max().cloned().expect("nonempty"))
}

/// As [`to_affine_schur`], eliminating at each step the dominance-maximal
/// support element picked by `choose`.
pub fn to_affine_schur_by(
    f: &MonomialExpansion,
    n: usize,
    choose: impl Fn(&[Partition]) -> Partition,
) -> Result<SchurExpansion> {
    let mut rest = f.clone();
    let mut out = SchurExpansion::zero(f.degree());
    let mut cache: HashMap<Partition, MonomialExpansion> = HashMap::new();
    while !rest.is_zero() {
        let support: Vec<&Partition> = rest.support().collect();
        let maximal: Vec<Partition> = support
            .iter()
            .filter(|&&a| {
                !support
                    .iter()
                    .any(|&b| a.dominance_less(b).unwrap_or(false))
            })
            .map(|&a| a.clone())
            .collect();
        let lam = choose(&maximal);
        if !lam.in_par_n(n) {
            return Err(Error::NotInSpan(lam.to_string()));
        }
        let c = rest.coeff(&lam);
        if !cache.contains_key(&lam) {
            cache.insert(lam.clone(), affine_schur(&lam, n)?);
        }
        rest = rest.sub(&cache[&lam].scale(&c))?;
        out.add_term(lam, c);
    }
    Ok(out)
}

/// Converts back to the monomial basis.
pub fn from_affine_schur(f: &SchurExpansion, n: usize) -> Result<MonomialExpansion> {
    let mut out = MonomialExpansion::zero(f.degree());
    for (lam, c) in f.terms() {
        out = out.add(&affine_schur(lam, n)?.scale(c))?;
    }
    Ok(out)
}

/// The involution `ω⁺` with `F_λ ↦ F_{λ*}`.
pub fn omega_plus(f: &SchurExpansion, n: usize) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::zero(f.degree());
    for (lam, c) in f.terms() {
        out.add_term(lambda_star(lam, n)?, c.clone());
    }
    Ok(out)
}
