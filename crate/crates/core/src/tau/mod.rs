//! Covering transformations of affine involutions, the sets they generate,
//! transition identities and the toggle map.

mod diagram;
mod poset;
mod table;
mod toggle;
mod transition;

use crate::affine::AffinePermutation;
use crate::error::Result;
use crate::involution::AffineInvolution;

pub use diagram::Diagram;
pub use poset::InvolutionPoset;
pub use table::{lookup, Action, Edge, TauRow, TAU_TABLE};
pub use toggle::{toggle, toggle_partners, Toggle, ToggleCase};
pub use transition::{
    atom_cover_bijection_check, check_involution_transition, check_ls_transition,
    covers_involution, covers_involution_with, phi_minus, phi_minus_by_definition, phi_plus,
    phi_plus_by_definition, psi_sets, TransitionReport,
};

/// `ȳ`: fixes every integer congruent to one of `i, j, y(i), y(j)` and agrees
/// with `y` elsewhere.
pub fn y_bar(y: &AffineInvolution, i: i64, j: i64) -> AffineInvolution {
    let n = y.n() as i64;
    let marks = [i, j, y.apply(i), y.apply(j)];
    let window = (1..=n)
        .map(|k| {
            if marks.iter().any(|&x| (x - k).rem_euclid(n) == 0) {
                k
            } else {
                y.apply(k)
            }
        })
        .collect();
    AffineInvolution::new_unchecked(
        AffinePermutation::new(y.n(), window).expect("restriction of an involution"),
    )
}

fn edge_reflection(y: &AffineInvolution, i: i64, j: i64, e: Edge) -> Result<AffinePermutation> {
    let (a, b) = match e {
        Edge::WhiteWhite => (i, j),
        Edge::WhiteBlack => (i, y.apply(j)),
        Edge::BlackWhite => (y.apply(i), j),
    };
    AffinePermutation::reflection(y.n(), a, b)
}

/// The row of [`TAU_TABLE`] and the action selected for `(y, i, j)`.
pub fn tau_action(y: &AffineInvolution, i: i64, j: i64) -> Result<(Diagram, Action)> {
    let d = Diagram::new(y, i, j)?;
    let row = lookup(&d.code()).expect("table covers every diagram");
    let action = if d.special { row.special } else { row.action };
    Ok((d, action))
}

/// The covering transformation `τ_{ij}(y)`, for `i < j` in distinct classes.
pub fn tau(y: &AffineInvolution, i: i64, j: i64) -> Result<AffineInvolution> {
    let (_, action) = tau_action(y, i, j)?;
    let perm = match action {
        Action::Keep => return Ok(y.clone()),
        Action::Conjugate(e) => {
            let t = edge_reflection(y, i, j, e)?;
            &(&t * y.perm()) * &t
        }
        Action::Attach(e) => {
            let t = edge_reflection(y, i, j, e)?;
            &t * y_bar(y, i, j).perm()
        }
    };
    Ok(AffineInvolution::new_unchecked(perm))
}
