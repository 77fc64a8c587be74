//! The toggle map on non-covering extensions of atoms.

use std::fmt;

use serde::Serialize;

use super::{tau, Diagram};
use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::involution::AffineInvolution;

/// The eight configurations of a non-covering extension `π ⋖ π t_{ij}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ToggleCase {
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    C1,
    C2,
}

impl fmt::Display for ToggleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    I,
    J,
    YI,
    YJ,
}

use Role::{I, J, YI, YJ};

/// Diagram code and the increasing `π`-chain of each case.
const CASES: [(ToggleCase, &str, &[Role]); 8] = [
    (ToggleCase::A1, "CBa", &[YI, I, J]),
    (ToggleCase::A2, "DCba", &[YJ, YI, I, J]),
    (ToggleCase::A3, "DcBa", &[YI, I, J, YJ]),
    (ToggleCase::B1, "cBA", &[I, J, YJ]),
    (ToggleCase::B2, "dCbA", &[YI, I, J, YJ]),
    (ToggleCase::B3, "dcBA", &[I, J, YJ, YI]),
    (ToggleCase::C1, "DCba", &[YI, I, YJ, J]),
    (ToggleCase::C2, "dcBA", &[I, YI, J, YJ]),
];

impl ToggleCase {
    pub const ALL: [ToggleCase; 8] = [
        ToggleCase::A1,
        ToggleCase::A2,
        ToggleCase::A3,
        ToggleCase::B1,
        ToggleCase::B2,
        ToggleCase::B3,
        ToggleCase::C1,
        ToggleCase::C2,
    ];

    /// The diagram code this case lives on.
    pub fn code(self) -> &'static str {
        CASES.iter().find(|c| c.0 == self).expect("listed").1
    }

    /// The vertices `a` with `π(a)` increasing along the list, as positions
    /// `0..m` of the diagram.
    pub fn chain(self, d: &Diagram, i: i64, j: i64, y: &AffineInvolution) -> Vec<usize> {
        let roles = CASES.iter().find(|c| c.0 == self).expect("listed").2;
        roles
            .iter()
            .map(|r| {
                let v = role_value(*r, i, j, y);
                d.vertices.iter().position(|&x| x == v).expect("vertex")
            })
            .collect()
    }

    /// `(k, l)` as functions of `(i, j, y(i), y(j))`.
    pub fn partners(self, i: i64, j: i64, yi: i64, yj: i64) -> (i64, i64) {
        use ToggleCase::*;
        let k = match self {
            A1 | A2 | A3 => j,
            _ => yj,
        };
        let l = match self {
            B1 | B2 | B3 => i,
            _ => yi,
        };
        (k, l)
    }
}

fn role_value(r: Role, i: i64, j: i64, y: &AffineInvolution) -> i64 {
    match r {
        I => i,
        J => j,
        YI => y.apply(i),
        YJ => y.apply(j),
    }
}

/// Result of [`toggle`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Toggle {
    pub case: ToggleCase,
    pub k: i64,
    pub l: i64,
    /// `π t_{ij} t_{kl}`.
    pub result: AffinePermutation,
}

/// For `π ∈ A(y)` with `π ⋖ π t_{ij}` and `τ_{ij}(y) = y`, finds the case and
/// the reflection `t_{kl}` with `π ≠ π t_{ij} t_{kl} ∈ A(y)`.
pub fn toggle(
    pi: &AffinePermutation,
    i: i64,
    j: i64,
    y: &AffineInvolution,
) -> Result<Toggle> {
    let fail = |why: &str| Error::NotAToggleInstance(why.to_string());
    if !y.is_atom(pi) {
        return Err(fail("π is not an atom of y"));
    }
    if !pi.bruhat_cover(i, j)? {
        return Err(fail("π t_ij does not cover π"));
    }
    if tau(y, i, j)? != *y {
        return Err(fail("τ_ij(y) differs from y"));
    }
    let d = Diagram::new(y, i, j)?;
    let code = d.code();
    let case = ToggleCase::ALL
        .into_iter()
        .find(|c| {
            c.code() == code
                && c.chain(&d, i, j, y)
                    .windows(2)
                    .all(|w| pi.apply(d.vertices[w[0]]) < pi.apply(d.vertices[w[1]]))
        })
        .ok_or_else(|| fail(&format!("no case matches diagram {code}")))?;
    let (k, l) = case.partners(i, j, y.apply(i), y.apply(j));
    let n = pi.n();
    let result = &(pi * &AffinePermutation::reflection(n, i, j)?)
        * &AffinePermutation::reflection(n, k, l)?;
    debug_assert!(k < l && y.is_atom(&result) && &result != pi);
    Ok(Toggle { case, k, l, result })
}

/// Every `π′ ≠ π` of the form `π t_{ij} t` with `t` a reflection and `π′ ∈ A(y)`.
pub fn toggle_partners(
    pi: &AffinePermutation,
    i: i64,
    j: i64,
    y: &AffineInvolution,
) -> Result<Vec<AffinePermutation>> {
    let sigma = pi * &AffinePermutation::reflection(pi.n(), i, j)?;
    Ok(sigma
        .lower_covers()
        .into_iter()
        .filter(|p| p != pi && y.is_atom(p))
        .collect())
}
