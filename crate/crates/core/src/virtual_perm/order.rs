//! Linear orders on small symbol sets.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A symbol of a virtual permutation: `a`, `-a`, or one of `P`, `Q`, `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Pos(u8),
    Neg(u8),
    P,
    Q,
    R,
}

impl Symbol {
    /// Relabels `a ↦ f(a)` and `-a ↦ -f(a)`, fixing `P`, `Q`, `R`.
    pub fn map(self, f: impl Fn(u8) -> u8) -> Symbol {
        match self {
            Symbol::Pos(a) => Symbol::Pos(f(a)),
            Symbol::Neg(a) => Symbol::Neg(f(a)),
            other => other,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Pos(a) => write!(f, "{a}"),
            Symbol::Neg(a) => write!(f, "-{a}"),
            Symbol::P => write!(f, "P"),
            Symbol::Q => write!(f, "Q"),
            Symbol::R => write!(f, "R"),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::parse("expected a symbol such as 3, -3, P, Q or R", t);
        match t {
            "P" => Ok(Symbol::P),
            "Q" => Ok(Symbol::Q),
            "R" => Ok(Symbol::R),
            _ => match t.strip_prefix('-') {
                Some(rest) => rest.parse().map(Symbol::Neg).map_err(|_| bad()),
                None => t.parse().map(Symbol::Pos).map_err(|_| bad()),
            },
        }
    }
}

/// A total order on a finite set of symbols, smallest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrder(pub Vec<Symbol>);

impl LinearOrder {
    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn position(&self, s: Symbol) -> Option<usize> {
        self.0.iter().position(|&x| x == s)
    }

    /// `a` precedes `b`; false if either is absent.
    pub fn lt(&self, a: Symbol, b: Symbol) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(x), Some(y)) => x < y,
            _ => false,
        }
    }

    /// `a < x < b`.
    pub fn between(&self, a: Symbol, x: Symbol, b: Symbol) -> bool {
        self.lt(a, x) && self.lt(x, b)
    }

    pub fn map(&self, f: impl Fn(u8) -> u8) -> LinearOrder {
        LinearOrder(self.0.iter().map(|s| s.map(&f)).collect())
    }

    /// All total orders of `items` in which each `(a, b)` in `before` has `a` first.
    pub fn extensions(items: &[Symbol], before: &[(Symbol, Symbol)]) -> Vec<LinearOrder> {
        fn go(
            left: &mut Vec<Symbol>,
            before: &[(Symbol, Symbol)],
            cur: &mut Vec<Symbol>,
            out: &mut Vec<LinearOrder>,
        ) {
            if left.is_empty() {
                out.push(LinearOrder(cur.clone()));
                return;
            }
            for k in 0..left.len() {
                let s = left[k];
                if before.iter().any(|&(a, b)| b == s && left.contains(&a)) {
                    continue;
                }
                left.remove(k);
                cur.push(s);
                go(left, before, cur, out);
                cur.pop();
                left.insert(k, s);
            }
        }
        let mut out = Vec::new();
        go(&mut items.to_vec(), before, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for LinearOrder {
    /// Written as `-1<1<-2<2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Symbol::to_string).collect();
        write!(f, "{}", parts.join("<"))
    }
}

impl FromStr for LinearOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let syms = s
            .split('<')
            .map(str::parse)
            .collect::<Result<Vec<Symbol>>>()?;
        let mut sorted = syms.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != syms.len() {
            return Err(Error::parse("repeated symbol in order", s));
        }
        Ok(LinearOrder(syms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Symbol::*;

    #[test]
    fn extensions_count() {
        let items = [Pos(1), Pos(2), Neg(1), Neg(2)];
        let before = [(Pos(1), Pos(2)), (Neg(1), Neg(2)), (Neg(1), Pos(1)), (Neg(2), Pos(2))];
        let ext = LinearOrder::extensions(&items, &before);
        assert_eq!(ext.len(), 2);
        assert_eq!(LinearOrder::extensions(&[Pos(1), Pos(2), P, Q], &[(P, Q)]).len(), 12);
    }

    #[test]
    fn text_round_trip() {
        let o: LinearOrder = "-3<3<-2<-1<2<1".parse().unwrap();
        assert_eq!(o.to_string(), "-3<3<-2<-1<2<1");
        assert!(o.lt(Neg(3), Pos(1)));
        assert!(o.between(Pos(3), Neg(1), Pos(2)));
        let swapped = o.map(|a| [0, 1, 3, 2][a as usize]);
        assert_eq!(swapped.to_string(), "-2<2<-3<-1<3<1");
        assert!("1<1".parse::<LinearOrder>().is_err());
        assert!("1<X".parse::<LinearOrder>().is_err());
    }
}
