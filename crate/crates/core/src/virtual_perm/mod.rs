//! Virtual permutations: the finite shadow of an atom near a set of positions.
//!
//! A virtual permutation on `m` letters is a permutation `ϖ` together with
//! three maps sending orders of a domain alphabet to sets of orders of the same
//! alphabet. `M` tracks a negative copy of every letter, `D` an extra 2-cycle
//! `P < Q` and `S` an extra fixed point `R`.

mod lift;
mod order;
mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use lift::{lift_instances, virtual_of, LiftReport};
pub use order::{LinearOrder, Symbol};
pub use verify::{
    finite_involution, maximal_for, maximal_virtual_atom, maximal_virtual_atoms,
    verify_covering_cases, verify_toggling_cases, Certificate,
};

use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::involution::AffineInvolution;

use Symbol::{Neg, Pos, P, Q, R};

/// Which of the three order maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Part {
    M,
    D,
    S,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::M, Part::D, Part::S];

    fn letters(m: usize) -> impl Iterator<Item = u8> {
        1..=m as u8
    }

    fn items(self, m: usize) -> Vec<Symbol> {
        let mut v: Vec<Symbol> = Self::letters(m).map(Pos).collect();
        match self {
            Part::M => v.extend(Self::letters(m).map(Neg)),
            Part::D => v.extend([P, Q]),
            Part::S => v.push(R),
        }
        v
    }

    fn chain(self, order: &[u8]) -> Vec<(Symbol, Symbol)> {
        let mut rel: Vec<(Symbol, Symbol)> =
            order.windows(2).map(|w| (Pos(w[0]), Pos(w[1]))).collect();
        if self == Part::M {
            rel.extend(order.windows(2).map(|w| (Neg(w[0]), Neg(w[1]))));
            rel.extend(order.iter().map(|&a| (Neg(a), Pos(a))));
        }
        rel
    }

    /// Orders allowed as keys.
    pub fn domain(self, m: usize) -> Vec<LinearOrder> {
        let natural: Vec<u8> = Self::letters(m).collect();
        let mut rel = self.chain(&natural);
        if self == Part::D {
            rel.push((P, Q));
        }
        LinearOrder::extensions(&self.items(m), &rel)
    }

    /// Orders allowed as values once `ϖ` is fixed.
    pub fn codomain(self, varpi: &[u8]) -> Vec<LinearOrder> {
        LinearOrder::extensions(&self.items(varpi.len()), &self.chain(varpi))
    }

    fn respects(self, rel: &[(Symbol, Symbol)], o: &LinearOrder, m: usize) -> bool {
        let mut syms = o.symbols().to_vec();
        syms.sort();
        let mut want = self.items(m);
        want.sort();
        syms == want && rel.iter().all(|&(a, b)| o.lt(a, b))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

pub type OrderMap = BTreeMap<LinearOrder, BTreeSet<LinearOrder>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawVirtual", into = "RawVirtual")]
pub struct VirtualPermutation {
    varpi: Vec<u8>,
    maps: [OrderMap; 3],
}

impl VirtualPermutation {
    /// Empty maps over the one-line permutation `varpi` of `1..=m`.
    pub fn new(varpi: Vec<u8>) -> Result<Self> {
        let mut sorted = varpi.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(k, &v)| v as usize != k + 1) {
            return Err(Error::BadVirtual(format!("{varpi:?} is not a permutation")));
        }
        Ok(VirtualPermutation {
            varpi,
            maps: Default::default(),
        })
    }

    pub fn m(&self) -> usize {
        self.varpi.len()
    }

    pub fn varpi(&self) -> &[u8] {
        &self.varpi
    }

    /// `ϖ` as a permutation of period `m`.
    pub fn varpi_perm(&self) -> AffinePermutation {
        finite_perm(&self.varpi)
    }

    pub fn map(&self, part: Part) -> &OrderMap {
        &self.maps[part as usize]
    }

    /// Records `dom ↦ ∅` so the key is displayed.
    pub fn insert_key(&mut self, part: Part, dom: LinearOrder) -> Result<()> {
        self.check_domain(part, &dom)?;
        self.maps[part as usize].entry(dom).or_default();
        Ok(())
    }

    pub fn insert(&mut self, part: Part, dom: LinearOrder, cod: LinearOrder) -> Result<()> {
        self.check_domain(part, &dom)?;
        if !part.respects(&part.chain(&self.varpi), &cod, self.m()) {
            return Err(Error::BadVirtual(format!(
                "{part} value {cod} does not extend the chain of {}",
                self.varpi_string()
            )));
        }
        self.maps[part as usize].entry(dom).or_default().insert(cod);
        Ok(())
    }

    fn check_domain(&self, part: Part, dom: &LinearOrder) -> Result<()> {
        let natural: Vec<u8> = (1..=self.m() as u8).collect();
        let mut rel = part.chain(&natural);
        if part == Part::D {
            rel.push((P, Q));
        }
        if part.respects(&rel, dom, self.m()) {
            Ok(())
        } else {
            Err(Error::BadVirtual(format!("{dom} is not a {part} key")))
        }
    }

    /// Every stored `(key, value)` pair.
    pub fn pairs(&self, part: Part) -> impl Iterator<Item = (&LinearOrder, &LinearOrder)> {
        self.map(part)
            .iter()
            .flat_map(|(d, set)| set.iter().map(move |c| (d, c)))
    }

    /// `ϖ` written as a word, e.g. `132`.
    pub fn varpi_string(&self) -> String {
        self.varpi.iter().map(|a| a.to_string()).collect()
    }

    /// Same `ϖ` and every pair of `other` is present here.
    pub fn contains(&self, other: &VirtualPermutation) -> bool {
        self.varpi == other.varpi
            && Part::ALL.iter().all(|&p| {
                other.pairs(p).all(|(d, c)| {
                    self.map(p).get(d).is_some_and(|set| set.contains(c))
                })
            })
    }

    /// The right action `Π·σ`: `ϖ ↦ σ⁻¹ϖ` and `σ⁻¹` applied to value labels.
    pub fn act(&self, sigma: &AffinePermutation) -> Result<Self> {
        let m = self.m();
        if sigma.n() != m || sigma.window().iter().any(|&v| v < 1 || v > m as i64) {
            return Err(Error::BadVirtual(format!("{sigma} is not a permutation of 1..{m}")));
        }
        let inv = sigma.inverse();
        let f = |a: u8| inv.apply(a as i64) as u8;
        let varpi = self.varpi.iter().map(|&a| f(a)).collect();
        let mut maps: [OrderMap; 3] = Default::default();
        for p in Part::ALL {
            for (d, set) in self.map(p) {
                maps[p as usize].insert(d.clone(), set.iter().map(|c| c.map(f)).collect());
            }
        }
        Ok(VirtualPermutation { varpi, maps })
    }

    /// Whether `(i, j)` lies in `Cov(Π)`.
    pub fn in_cov(&self, i: u8, j: u8) -> bool {
        let inv = inverse(&self.varpi);
        let r = |a: u8| inv[a as usize - 1];
        if !(i < j && r(i) < r(j)) || (i + 1..j).any(|e| r(i) < r(e) && r(e) < r(j)) {
            return false;
        }
        Part::ALL
            .iter()
            .all(|&p| self.pairs(p).all(|(d, c)| separates(p, d, c, i, j)))
    }

    pub fn cov(&self) -> Vec<(u8, u8)> {
        let m = self.m() as u8;
        (1..=m)
            .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
            .filter(|&(i, j)| self.in_cov(i, j))
            .collect()
    }

    /// Whether this is a virtual atom for the involution `y` of period `m`
    /// whose window lies in `1..=m`.
    pub fn is_virtual_atom(&self, y: &AffineInvolution) -> bool {
        if y.n() != self.m() || !is_finite(y.perm()) {
            return false;
        }
        if !y.is_atom(&self.varpi_perm().inverse()) {
            return false;
        }
        let cycles = finite_cycles(y);
        Part::ALL.iter().all(|&p| {
            self.pairs(p)
                .all(|(d, c)| pair_conditions(p, d, c, &cycles))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// Conditions on a single stored pair, given the cycles `a ≤ b` of `y`.
/// For `M` a cycle is also compared with the shifted copy `(-a, -b)`, including
/// nesting.
pub(crate) fn pair_conditions(part: Part, d: &LinearOrder, c: &LinearOrder, cycles: &[(u8, u8)]) -> bool {
    match part {
        Part::M => cycles.iter().all(|&(a, b)| {
            cycles.iter().all(|&(a2, b2)| {
                let neg_first = d.lt(Neg(a), Pos(a2)) && d.lt(Neg(b), Pos(b2));
                let pos_first = d.lt(Pos(a), Neg(a2)) && d.lt(Pos(b), Neg(b2));
                let copy_outside = d.lt(Neg(a), Pos(a2)) && d.lt(Pos(b2), Neg(b));
                let copy_inside = d.lt(Pos(a), Neg(a2)) && d.lt(Neg(b2), Pos(b));
                (!neg_first || c.lt(Neg(a), Pos(b2)))
                    && (!pos_first || c.lt(Pos(a), Neg(b2)))
                    && (!copy_outside
                        || !(c.between(Neg(b), Pos(a2), Neg(a))
                            || c.between(Neg(b), Pos(b2), Neg(a))))
                    && (!copy_inside
                        || !(c.between(Pos(b), Neg(a2), Pos(a))
                            || c.between(Pos(b), Neg(b2), Pos(a))))
            })
        }),
        Part::D => {
            c.lt(Q, P)
                && cycles.iter().all(|&(a, b)| {
                    let (a, b) = (Pos(a), Pos(b));
                    let outer = d.lt(a, P) && d.lt(Q, b);
                    let inner = d.lt(P, a) && d.lt(b, Q);
                    (!outer || !(c.between(b, P, a) || c.between(b, Q, a)))
                        && (!inner || !(c.between(Q, a, P) || c.between(Q, b, P)))
                        && (!(d.lt(a, P) && d.lt(b, Q)) || c.lt(a, Q))
                        && (!(d.lt(P, a) && d.lt(Q, b)) || c.lt(P, b))
                })
        }
        Part::S => cycles.iter().all(|&(a, b)| {
            let (a, b) = (Pos(a), Pos(b));
            (!d.between(a, R, b) || !c.between(b, R, a))
                && (!d.lt(b, R) || c.lt(a, R))
                && (!d.lt(R, a) || c.lt(R, b))
        }),
    }
}

/// No symbol sits between `i` and `j` in both orders (and between `-i`, `-j`
/// for `M`).
pub(crate) fn separates(part: Part, d: &LinearOrder, c: &LinearOrder, i: u8, j: u8) -> bool {
    let clear = |lo: Symbol, hi: Symbol| {
        d.symbols()
            .iter()
            .all(|&x| x == lo || x == hi || !(d.between(lo, x, hi) && c.between(lo, x, hi)))
    };
    clear(Pos(i), Pos(j)) && (part != Part::M || clear(Neg(i), Neg(j)))
}

fn inverse(w: &[u8]) -> Vec<u8> {
    let mut inv = vec![0; w.len()];
    for (k, &v) in w.iter().enumerate() {
        inv[v as usize - 1] = k as u8 + 1;
    }
    inv
}

pub(crate) fn finite_perm(w: &[u8]) -> AffinePermutation {
    AffinePermutation::new(w.len(), w.iter().map(|&v| v as i64).collect()).expect("permutation")
}

fn is_finite(p: &AffinePermutation) -> bool {
    p.window().iter().all(|&v| v >= 1 && v <= p.n() as i64)
}

pub(crate) fn finite_cycles(y: &AffineInvolution) -> Vec<(u8, u8)> {
    y.cycles().into_iter().map(|(a, b)| (a as u8, b as u8)).collect()
}

impl fmt::Display for VirtualPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "varpi = {}", self.varpi_string())?;
        for p in Part::ALL {
            for (d, set) in self.map(p) {
                let vals: Vec<String> = set.iter().map(LinearOrder::to_string).collect();
                writeln!(f, "{p}: {d} -> {{{}}}", vals.join(", "))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawVirtual {
    varpi: Vec<u8>,
    #[serde(rename = "M", default)]
    m: BTreeMap<String, Vec<String>>,
    #[serde(rename = "D", default)]
    d: BTreeMap<String, Vec<String>>,
    #[serde(rename = "S", default)]
    s: BTreeMap<String, Vec<String>>,
}

impl TryFrom<RawVirtual> for VirtualPermutation {
    type Error = Error;
    fn try_from(raw: RawVirtual) -> Result<Self> {
        let mut v = VirtualPermutation::new(raw.varpi)?;
        for (p, map) in [(Part::M, raw.m), (Part::D, raw.d), (Part::S, raw.s)] {
            for (d, vals) in map {
                let d: LinearOrder = d.parse()?;
                v.insert_key(p, d.clone())?;
                for c in vals {
                    v.insert(p, d.clone(), c.parse()?)?;
                }
            }
        }
        Ok(v)
    }
}

impl From<VirtualPermutation> for RawVirtual {
    fn from(v: VirtualPermutation) -> Self {
        let conv = |p: Part| {
            v.map(p)
                .iter()
                .map(|(d, set)| (d.to_string(), set.iter().map(LinearOrder::to_string).collect()))
                .collect()
        };
        RawVirtual {
            m: conv(Part::M),
            d: conv(Part::D),
            s: conv(Part::S),
            varpi: v.varpi,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> LinearOrder {
        s.parse().unwrap()
    }

    #[test]
    fn domains() {
        assert_eq!(Part::M.domain(2).len(), 2);
        assert_eq!(Part::D.domain(2).len(), 6);
        assert_eq!(Part::S.domain(2).len(), 3);
        assert_eq!(Part::M.domain(4).len(), 14);
        assert_eq!(Part::D.codomain(&[2, 1]).len(), 12);
    }

    #[test]
    fn action_relabels() {
        let mut v = VirtualPermutation::new(vec![3, 2, 1]).unwrap();
        v.insert(Part::M, o("-1<-2<-3<1<2<3"), o("-3<3<-2<-1<2<1")).unwrap();
        let sigma = finite_perm(&[1, 3, 2]);
        let w = v.act(&sigma).unwrap();
        assert_eq!(w.varpi(), &[2, 3, 1]);
        let (_, c) = w.pairs(Part::M).next().unwrap();
        assert_eq!(c.to_string(), "-2<2<-3<-1<3<1");
        let back = w.act(&sigma).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn cov_of_empty_maps() {
        let v = VirtualPermutation::new(vec![1, 2]).unwrap();
        assert_eq!(v.cov(), vec![(1, 2)]);
        let v = VirtualPermutation::new(vec![1, 2, 3]).unwrap();
        assert_eq!(v.cov(), vec![(1, 2), (2, 3)]);
        let v = VirtualPermutation::new(vec![2, 1]).unwrap();
        assert!(v.cov().is_empty());
    }

    #[test]
    fn insert_validates() {
        let mut v = VirtualPermutation::new(vec![2, 1]).unwrap();
        assert!(v.insert(Part::S, o("1<2<R"), o("1<2<R")).is_err());
        assert!(v.insert(Part::S, o("2<1<R"), o("2<1<R")).is_err());
        assert!(v.insert(Part::S, o("1<2<R"), o("2<R<1")).is_ok());
        assert!(VirtualPermutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut v = VirtualPermutation::new(vec![1, 2]).unwrap();
        v.insert(Part::D, o("P<1<2<Q"), o("1<Q<P<2")).unwrap();
        v.insert_key(Part::S, o("1<R<2")).unwrap();
        let j = v.to_json();
        assert_eq!(j["D"]["P<1<2<Q"][0], "1<Q<P<2");
        let back: VirtualPermutation = serde_json::from_value(j).unwrap();
        assert_eq!(back, v);
    }
}
