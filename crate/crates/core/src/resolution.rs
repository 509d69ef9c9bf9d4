//! Symplectic resolutions of classical orbit closures.
//!
//! Two routes decide the question for types B, C, D: closed-form partition
//! criteria ([`closed_form_verdict`]) and the polarization search of
//! [`crate::hesselink`]. [`admits_symplectic_resolution`] runs both and
//! refuses to answer if they disagree.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hesselink::{self, HesselinkError};
use crate::orbit::{is_even_orbit, ClassicalOrbit, Family};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error(
        "closed form says {closed_form:?} but polarization search says {search:?} for {orbit}"
    )]
    CrossCheckMismatch {
        orbit: String,
        closed_form: Answer,
        search: Answer,
    },
    #[error(transparent)]
    Hesselink(#[from] HesselinkError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl Answer {
    fn from_bool(yes: bool) -> Self {
        if yes {
            Answer::Yes
        } else {
            Answer::No
        }
    }
}

impl std::fmt::Display for Answer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Route {
    ClosedForm,
    HesselinkSearch,
    AlwaysSLn,
    ExceptionalLookup,
    EvenSpringer,
}

/// Why a `Yes` holds: the number `q` of leading odd parts, or the index `k`
/// of the odd pair sitting at positions `2k-1, 2k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Q { q: u32 },
    PairPosition { pair_position: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionVerdict {
    pub answer: Answer,
    pub route: Route,
    pub witness: Option<Witness>,
    pub cross_checked: bool,
}

impl ResolutionVerdict {
    pub(crate) fn new(answer: Answer, route: Route, witness: Option<Witness>) -> Self {
        ResolutionVerdict {
            answer,
            route,
            witness,
            cross_checked: false,
        }
    }
}

/// `q` such that `d_1..d_q` are odd and the remaining parts even, if any.
/// Such a `q` is necessarily the number of odd parts.
fn odd_prefix_length(orbit: &ClassicalOrbit) -> Option<u32> {
    let parts = orbit.partition().parts();
    let q = parts.iter().take_while(|&&p| p % 2 == 1).count();
    parts[q..].iter().all(|p| p % 2 == 0).then_some(q as u32)
}

/// `k` such that the only two odd parts sit at positions `2k-1` and `2k`.
fn odd_pair_position(orbit: &ClassicalOrbit) -> Option<u32> {
    let odd: Vec<usize> = orbit
        .partition()
        .parts()
        .iter()
        .enumerate()
        .filter(|(_, &p)| p % 2 == 1)
        .map(|(i, _)| i + 1)
        .collect();
    match odd[..] {
        [first, second] if first % 2 == 1 && second == first + 1 => Some((second / 2) as u32),
        _ => None,
    }
}

/// Partition criteria for the existence of a symplectic resolution.
///
/// * `sl`: always.
/// * `sp` (`so_{odd}`): the first `q` parts are odd and the rest even, for
///   some even (odd) `q`.
/// * `so_{even}`: the same with even `q ≠ 2`, or exactly two odd parts at
///   positions `2k-1, 2k`.
pub fn closed_form_verdict(orbit: &ClassicalOrbit) -> ResolutionVerdict {
    let prefix = odd_prefix_length(orbit);
    let q_witness = |parity: u32, forbid_two: bool| {
        prefix
            .filter(|&q| q % 2 == parity && !(forbid_two && q == 2))
            .map(|q| Witness::Q { q })
    };
    let witness = match orbit.family() {
        Family::Sl => return ResolutionVerdict::new(Answer::Yes, Route::AlwaysSLn, None),
        Family::Sp => q_witness(0, false),
        Family::SoOdd => q_witness(1, false),
        Family::SoEven => q_witness(0, true).or_else(|| {
            odd_pair_position(orbit).map(|k| Witness::PairPosition { pair_position: k })
        }),
    };
    ResolutionVerdict::new(
        Answer::from_bool(witness.is_some()),
        Route::ClosedForm,
        witness,
    )
}

/// The verdict of the polarization search alone.
pub fn search_verdict(orbit: &ClassicalOrbit) -> Result<ResolutionVerdict, HesselinkError> {
    let q = hesselink::resolution_by_search(orbit)?;
    Ok(ResolutionVerdict::new(
        Answer::from_bool(q.is_some()),
        Route::HesselinkSearch,
        q.map(|q| Witness::Q { q }),
    ))
}

/// Decides whether the orbit closure admits a symplectic resolution. For
/// B/C/D both routes are computed and must agree.
pub fn admits_symplectic_resolution(
    orbit: &ClassicalOrbit,
) -> Result<ResolutionVerdict, ResolutionError> {
    let closed = closed_form_verdict(orbit);
    if orbit.family() == Family::Sl {
        return Ok(closed);
    }
    let search = search_verdict(orbit)?;
    if search.answer != closed.answer {
        return Err(ResolutionError::CrossCheckMismatch {
            orbit: orbit.to_string(),
            closed_form: closed.answer,
            search: search.answer,
        });
    }
    Ok(ResolutionVerdict {
        cross_checked: true,
        ..closed
    })
}

/// Even orbits always have a (Springer) resolution: `even ⇒ Yes`.
pub fn springer_consistency(orbit: &ClassicalOrbit) -> bool {
    !is_even_orbit(orbit) || closed_form_verdict(orbit).answer == Answer::Yes
}
