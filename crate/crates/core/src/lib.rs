//! Nilpotent orbits of the classical simple Lie algebras, decided from
//! partition data: Picard groups, (Q-)factoriality of the normalized
//! closure, polarizability and existence of symplectic resolutions.
//!
//! ```
//! use orbitres::{admits_symplectic_resolution, validate_orbit, Answer, LieType};
//!
//! let so7 = LieType::so(7).unwrap();
//! let orbit = validate_orbit(so7, &[3, 2, 2]).unwrap();
//! let verdict = admits_symplectic_resolution(&orbit).unwrap();
//! assert_eq!(verdict.answer, Answer::Yes);
//! assert!(verdict.cross_checked);
//! ```

pub mod enumeration;
pub mod exceptional;
pub mod hesselink;
pub mod orbit;
pub mod picard;
pub mod report;
pub mod resolution;
pub mod selfcheck;

pub use enumeration::{count_orbits, enumerate_orbits, OrbitStream};
pub use exceptional::{exceptional_verdict, ExceptionalAlgebra, ExceptionalError};
pub use hesselink::{HesselinkContext, HesselinkError, HesselinkReport};
pub use orbit::{
    is_even_orbit, minimal_orbit, orbit_dimension, profile, validate_orbit, ClassicalOrbit, Family,
    LieType, OrbitError, Partition, PartitionProfile, VeryEvenLabel,
};
pub use picard::{
    is_factorial, picard, q_factorial_certificate, AbelianGroupDescriptor, PicardError,
    QFactoriality,
};
pub use resolution::{
    admits_symplectic_resolution, closed_form_verdict, springer_consistency, Answer,
    ResolutionError, ResolutionVerdict, Route, Witness,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Picard(#[from] PicardError),
    #[error(transparent)]
    Hesselink(#[from] HesselinkError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Exceptional(#[from] ExceptionalError),
}
