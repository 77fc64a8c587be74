//! The twenty-row table driving the covering transformations.

use serde::Serialize;

/// One of the reflections built from the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Edge {
    /// `t_{i,j}`
    WhiteWhite,
    /// `t_{i,y(j)}`
    WhiteBlack,
    /// `t_{y(i),j}`
    BlackWhite,
}

/// What `τ` does for a given diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Action {
    /// `t·y·t`
    Conjugate(Edge),
    /// `t·ȳ`, where `ȳ` fixes the classes of `i, j, y(i), y(j)`.
    Attach(Edge),
    /// `y` itself.
    Keep,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TauRow {
    /// Diagram code as produced by [`super::Diagram::code`].
    pub code: &'static str,
    pub action: Action,
    /// Action used instead when `i ≡ y(j) (mod n)`.
    pub special: Action,
}

const fn row(code: &'static str, action: Action) -> TauRow {
    TauRow {
        code,
        action,
        special: action,
    }
}

use Action::{Attach, Conjugate, Keep};
use Edge::{BlackWhite, WhiteBlack, WhiteWhite};

pub static TAU_TABLE: [TauRow; 20] = [
    row("bADc", Conjugate(WhiteWhite)),
    row("CDab", Conjugate(WhiteWhite)),
    row("cdAB", Conjugate(WhiteWhite)),
    TauRow {
        code: "CdaB",
        action: Conjugate(WhiteBlack),
        special: Attach(WhiteWhite),
    },
    row("AB", Attach(WhiteWhite)),
    row("AcB", Attach(WhiteWhite)),
    row("BaC", Attach(WhiteWhite)),
    row("BadC", Attach(WhiteWhite)),
    row("ACb", Attach(WhiteBlack)),
    row("BaDc", Attach(WhiteBlack)),
    row("bAC", Attach(BlackWhite)),
    row("bAdC", Attach(BlackWhite)),
    row("BA", Keep),
    row("cBA", Keep),
    row("CBa", Keep),
    row("DCba", Keep),
    row("DcBa", Keep),
    row("cDAb", Keep),
    row("dCbA", Keep),
    row("dcBA", Keep),
];

pub fn lookup(code: &str) -> Option<&'static TauRow> {
    TAU_TABLE.iter().find(|r| r.code == code)
}
