//! The colored matching `D_{ij}(y)` on `{i, j, y(i), y(j)}`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::involution::AffineInvolution;

/// The colored matching on the integers `{i, j, y(i), y(j)}`, relabeled by
/// the order-preserving bijection onto `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Diagram {
    pub m: usize,
    /// The vertices in increasing order.
    pub vertices: Vec<i64>,
    /// `white[v]` holds for the vertices `i` and `j`.
    pub white: Vec<bool>,
    /// `partner[v]` is the position of `y(vertices[v])`.
    pub partner: Vec<usize>,
    /// Whether `i ≡ y(j) (mod n)`.
    pub special: bool,
}

impl Diagram {
    pub fn new(y: &AffineInvolution, i: i64, j: i64) -> Result<Self> {
        let n = y.n();
        if (i - j).rem_euclid(n as i64) == 0 {
            return Err(Error::SameResidue { n, i, j });
        }
        if i >= j {
            return Err(Error::NotIncreasing { i, j });
        }
        let mut vertices = vec![i, j, y.apply(i), y.apply(j)];
        vertices.sort_unstable();
        vertices.dedup();
        let pos = |x: i64| vertices.iter().position(|&v| v == x).expect("closed under y");
        let white = vertices.iter().map(|&v| v == i || v == j).collect();
        let partner = vertices.iter().map(|&v| pos(y.apply(v))).collect();
        Ok(Diagram {
            m: vertices.len(),
            special: (i - y.apply(j)).rem_euclid(n as i64) == 0,
            vertices,
            white,
            partner,
        })
    }

    /// The word naming each vertex's partner, uppercase for white vertices,
    /// e.g. `bADc` for `y(i) < i < j < y(j)`.
    pub fn code(&self) -> String {
        (0..self.m)
            .map(|v| {
                let c = (b'a' + self.partner[v] as u8) as char;
                if self.white[v] {
                    c.to_ascii_uppercase()
                } else {
                    c
                }
            })
            .collect()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())?;
        if self.special {
            write!(f, " (special)")?;
        }
        Ok(())
    }
}
