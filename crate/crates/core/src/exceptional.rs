//! Verdicts for the non-even Richardson orbits of the exceptional algebras.
//!
//! Even orbits always admit the Springer resolution, and in `G2`, `F4`,
//! `E6` a resolution exists exactly for Richardson orbits. The table below
//! only lists the non-even Richardson orbits; any other label is reported
//! as not in the database since deciding evenness or the Richardson
//! property needs external orbit tables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::resolution::{Answer, ResolutionVerdict, Route};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExceptionalError {
    #[error("unknown exceptional algebra {0:?} (expected G2, F4, E6, E7 or E8)")]
    UnknownAlgebra(String),
    #[error("{label} in {algebra} is not in the database: {guidance}")]
    NotInDatabase {
        algebra: ExceptionalAlgebra,
        label: String,
        guidance: &'static str,
    },
}

const NOT_IN_DATABASE_GUIDANCE: &str = "only non-even Richardson orbits are tabulated; an even \
orbit always admits a symplectic resolution (Springer), and in G2, F4 and E6 a non-even orbit \
admits one iff it is Richardson, which requires external orbit tables to decide";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExceptionalAlgebra {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl fmt::Display for ExceptionalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for ExceptionalAlgebra {
    type Err = ExceptionalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match normalize_label(s).replace('_', "").as_str() {
            "G2" => Ok(ExceptionalAlgebra::G2),
            "F4" => Ok(ExceptionalAlgebra::F4),
            "E6" => Ok(ExceptionalAlgebra::E6),
            "E7" => Ok(ExceptionalAlgebra::E7),
            "E8" => Ok(ExceptionalAlgebra::E8),
            _ => Err(ExceptionalError::UnknownAlgebra(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExceptionalRecord {
    pub algebra: ExceptionalAlgebra,
    pub label: &'static str,
    pub verdict: Answer,
    pub note: &'static str,
}

const fn record(
    algebra: ExceptionalAlgebra,
    label: &'static str,
    verdict: Answer,
    note: &'static str,
) -> ExceptionalRecord {
    ExceptionalRecord {
        algebra,
        label,
        verdict,
        note,
    }
}

const F4_ONLY: &str = "the only non-even Richardson orbit of F4";
const E6_SIMPLY_CONNECTED: &str = "non-even Richardson orbit, simply connected";
const TRIVIAL_A: &str = "non-even Richardson orbit with trivial component group";
const A_IS_S2: &str = "non-even Richardson orbit with component group S2; open";

use ExceptionalAlgebra::{E6, E7, E8, F4};

static TABLE: [ExceptionalRecord; 18] = [
    record(F4, "C3", Answer::Yes, F4_ONLY),
    record(E6, "2A1", Answer::Yes, E6_SIMPLY_CONNECTED),
    record(E6, "A2+2A1", Answer::Yes, E6_SIMPLY_CONNECTED),
    record(E6, "A3", Answer::Yes, E6_SIMPLY_CONNECTED),
    record(E6, "A4+A1", Answer::Yes, E6_SIMPLY_CONNECTED),
    record(E6, "D5(a1)", Answer::Yes, E6_SIMPLY_CONNECTED),
    record(E7, "D5+A1", Answer::Yes, TRIVIAL_A),
    record(E7, "D6(a1)", Answer::Yes, TRIVIAL_A),
    record(E7, "D4(a1)+A1", Answer::Unknown, A_IS_S2),
    record(E7, "A4+A1", Answer::Unknown, A_IS_S2),
    record(E7, "D5(a1)", Answer::Unknown, A_IS_S2),
    record(E8, "A4+A2+A1", Answer::Yes, TRIVIAL_A),
    record(E8, "A6+A1", Answer::Yes, TRIVIAL_A),
    record(E8, "E7(a1)", Answer::Yes, TRIVIAL_A),
    record(E8, "D6(a1)", Answer::Unknown, A_IS_S2),
    record(E8, "D7(a2)", Answer::Unknown, A_IS_S2),
    record(E8, "E6(a1)+A1", Answer::Unknown, A_IS_S2),
    record(E8, "E7(a3)", Answer::Unknown, A_IS_S2),
];

/// The full table, in a fixed order.
pub fn exceptional_table() -> &'static [ExceptionalRecord] {
    &TABLE
}

/// The table as pretty-printed JSON.
pub fn exceptional_table_json() -> String {
    serde_json::to_string_pretty(&TABLE[..]).expect("table serializes")
}

/// Comparison key for Bala–Carter labels: ASCII digits for subscripts, no
/// whitespace, upper case.
pub fn normalize_label(label: &str) -> String {
    label
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10).unwrap(),
            c => c.to_ascii_uppercase(),
        })
        .collect()
}

pub fn lookup(algebra: ExceptionalAlgebra, label: &str) -> Option<&'static ExceptionalRecord> {
    let key = normalize_label(label);
    TABLE
        .iter()
        .find(|r| r.algebra == algebra && normalize_label(r.label) == key)
}

pub fn exceptional_verdict(
    algebra: &str,
    label: &str,
) -> Result<ResolutionVerdict, ExceptionalError> {
    let algebra: ExceptionalAlgebra = algebra.parse()?;
    let rec = lookup(algebra, label).ok_or_else(|| ExceptionalError::NotInDatabase {
        algebra,
        label: label.to_string(),
        guidance: NOT_IN_DATABASE_GUIDANCE,
    })?;
    Ok(ResolutionVerdict::new(
        rec.verdict,
        Route::ExceptionalLookup,
        None,
    ))
}
