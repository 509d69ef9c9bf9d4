//! Consistency sweep over every classical orbit up to a size bound.

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{classical_types_up_to, enumerate_orbits};
use crate::hesselink::polarizable;
use crate::orbit::{is_even_orbit, orbit_dimension, profile, ClassicalOrbit};
use crate::picard::{is_factorial, picard};
use crate::resolution::{admits_symplectic_resolution, Answer};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub orbit: String,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SelfCheckSummary {
    pub max_m: u32,
    pub orbits_checked: usize,
    pub failures: Vec<CheckFailure>,
    /// Orbits (as `algebra [partition]`) verified to have no resolution.
    pub no_verdicts: Vec<String>,
}

impl SelfCheckSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct OrbitOutcome {
    failures: Vec<CheckFailure>,
    no_verdict: bool,
}

/// Runs every check on one orbit.
///
/// * both resolution routes agree (which also exercises the `N(P)`
///   exponent guard),
/// * even ⇒ resolution,
/// * resolution ⇒ polarizable,
/// * factorial ⇔ trivial Picard group (non-zero B/C/D),
/// * `l = 0` ⇒ Picard free rank 0 (B/C/D),
/// * the dimension is even.
fn check_orbit(orbit: &ClassicalOrbit) -> OrbitOutcome {
    let mut failures = Vec::new();
    let mut fail = |check: &'static str, detail: String| {
        failures.push(CheckFailure {
            orbit: orbit.to_string(),
            check,
            detail,
        })
    };
    let mut no_verdict = false;
    match admits_symplectic_resolution(orbit) {
        Err(e) => fail("route-equivalence", e.to_string()),
        Ok(v) => {
            no_verdict = v.answer == Answer::No;
            if is_even_orbit(orbit) && v.answer != Answer::Yes {
                fail("even-implies-yes", format!("verdict {}", v.answer));
            }
            if v.answer == Answer::Yes {
                match polarizable(orbit) {
                    Ok(p) if p.polarizable => {}
                    Ok(_) => fail("yes-implies-polarizable", "no polarization".into()),
                    Err(e) => fail("yes-implies-polarizable", e.to_string()),
                }
            }
        }
    }
    if orbit.family().is_bcd() {
        let group = picard(orbit);
        if let Ok(factorial) = is_factorial(orbit) {
            if factorial != group.is_trivial() {
                fail(
                    "factorial-iff-trivial-picard",
                    format!("factorial={factorial}, Pic={group}"),
                );
            }
        }
        if profile(orbit).l == 0 && group.free_rank != 0 {
            fail("l-zero-implies-finite-picard", format!("Pic={group}"));
        }
    }
    if !orbit_dimension(orbit).is_multiple_of(2) {
        fail("even-dimension", orbit_dimension(orbit).to_string());
    }
    OrbitOutcome {
        failures,
        no_verdict,
    }
}

/// Checks every orbit of every classical algebra with `m ≤ max_m`.
pub fn run_selfcheck(max_m: u32) -> SelfCheckSummary {
    let orbits: Vec<ClassicalOrbit> = classical_types_up_to(max_m)
        .into_iter()
        .flat_map(enumerate_orbits)
        .collect();
    let outcomes: Vec<OrbitOutcome> = orbits.par_iter().map(check_orbit).collect();
    let mut summary = SelfCheckSummary {
        max_m,
        orbits_checked: orbits.len(),
        ..Default::default()
    };
    for (orbit, outcome) in orbits.iter().zip(outcomes) {
        if outcome.no_verdict {
            summary.no_verdicts.push(orbit.to_string());
        }
        summary.failures.extend(outcome.failures);
    }
    summary
}
