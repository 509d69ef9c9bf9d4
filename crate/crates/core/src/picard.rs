//! Picard groups of classical nilpotent orbits and the factoriality
//! verdicts they imply for the normalized orbit closure.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::orbit::{profile, ClassicalOrbit, Family};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PicardError {
    #[error("{0} is not of the expected family")]
    WrongFamily(String),
    #[error("factoriality is only decided for non-zero orbits")]
    ZeroOrbit,
}

/// An extension of `Z/2` by `(Z/2)^kernel_exponent` whose isomorphism type
/// is left undetermined. Its order is `2^(kernel_exponent + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnresolvedExtension {
    pub kernel_exponent: u32,
}

impl UnresolvedExtension {
    pub const QUOTIENT_ORDER: u64 = 2;

    pub fn order(&self) -> u128 {
        u128::from(Self::QUOTIENT_ORDER) << self.kernel_exponent
    }
}

/// A finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/t`, or an
/// unresolved 2-group extension.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "GroupJson", into = "GroupJson")]
pub struct AbelianGroupDescriptor {
    pub free_rank: u32,
    pub torsion: Vec<u64>,
    pub unresolved_extension: Option<UnresolvedExtension>,
}

impl AbelianGroupDescriptor {
    pub fn trivial() -> Self {
        Self::default()
    }

    fn split(free_rank: u32, torsion: Vec<u64>) -> Self {
        debug_assert!(torsion.iter().all(|&t| t >= 2));
        AbelianGroupDescriptor {
            free_rank,
            torsion,
            unresolved_extension: None,
        }
    }

    fn extension(kernel_exponent: u32) -> Self {
        AbelianGroupDescriptor {
            free_rank: 0,
            torsion: Vec::new(),
            unresolved_extension: Some(UnresolvedExtension { kernel_exponent }),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty() && self.unresolved_extension.is_none()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> u128 {
        let split: u128 = self.torsion.iter().map(|&t| u128::from(t)).product();
        split * self.unresolved_extension.map_or(1, |e| e.order())
    }
}

impl std::fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut terms = Vec::new();
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".to_string()),
            r => terms.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&x| x == t).count();
            terms.push(if run == 1 {
                format!("Z/{t}")
            } else {
                format!("(Z/{t})^{run}")
            });
            i += run;
        }
        if let Some(ext) = self.unresolved_extension {
            terms.push(format!("ext(Z/2 by (Z/2)^{})", ext.kernel_exponent));
        }
        f.write_str(&terms.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    free_rank: u32,
    torsion: Vec<u64>,
    unresolved_extension: Option<UnresolvedExtension>,
    #[serde(default)]
    trivial: bool,
}

impl From<AbelianGroupDescriptor> for GroupJson {
    fn from(g: AbelianGroupDescriptor) -> Self {
        GroupJson {
            trivial: g.is_trivial(),
            free_rank: g.free_rank,
            torsion: g.torsion,
            unresolved_extension: g.unresolved_extension,
        }
    }
}

impl From<GroupJson> for AbelianGroupDescriptor {
    fn from(j: GroupJson) -> Self {
        AbelianGroupDescriptor {
            free_rank: j.free_rank,
            torsion: j.torsion,
            unresolved_extension: j.unresolved_extension,
        }
    }
}

/// `Pic = Z^{k-1} ⊕ Z/c` for an orbit of `sl_n`.
pub fn picard_sl(orbit: &ClassicalOrbit) -> Result<AbelianGroupDescriptor, PicardError> {
    if orbit.family() != Family::Sl {
        return Err(PicardError::WrongFamily(orbit.to_string()));
    }
    let p = profile(orbit);
    let torsion = if p.c >= 2 {
        vec![u64::from(p.c)]
    } else {
        Vec::new()
    };
    Ok(AbelianGroupDescriptor::split(p.k - 1, torsion))
}

/// Picard group for types B, C and D.
///
/// * `sp`: `(Z/2)^b ⊕ Z^l`
/// * `so`, rather odd: an extension of `Z/2` by `(Z/2)^{max(0,a-1)}`
/// * `so`, otherwise: `(Z/2)^{max(0,a-1)} ⊕ Z^l`
pub fn picard_bcd(orbit: &ClassicalOrbit) -> Result<AbelianGroupDescriptor, PicardError> {
    let p = profile(orbit);
    let twos = |n: u32| vec![2u64; n as usize];
    match orbit.family() {
        Family::Sl => Err(PicardError::WrongFamily(orbit.to_string())),
        Family::Sp => Ok(AbelianGroupDescriptor::split(p.l, twos(p.b))),
        Family::SoOdd | Family::SoEven => {
            // a >= 1 always holds for so_{2n+1}; only so_{2n} can have a = 0.
            let t = p.a.saturating_sub(1);
            if p.rather_odd {
                Ok(AbelianGroupDescriptor::extension(t))
            } else {
                Ok(AbelianGroupDescriptor::split(p.l, twos(t)))
            }
        }
    }
}

pub fn picard(orbit: &ClassicalOrbit) -> AbelianGroupDescriptor {
    let group = match orbit.family() {
        Family::Sl => picard_sl(orbit),
        _ => picard_bcd(orbit),
    };
    group.expect("dispatch matches family")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QFactoriality {
    /// The normalized closure is Q-factorial.
    Certified,
    /// No certificate; this is not a proof of non-Q-factoriality.
    NotCertified,
}

/// One-sided Q-factoriality test: `l = 0` for B/C/D, a single distinct
/// part for `sl`.
pub fn q_factorial_certificate(orbit: &ClassicalOrbit) -> QFactoriality {
    let p = profile(orbit);
    let certified = match orbit.family() {
        Family::Sl => p.k == 1,
        _ => p.l == 0,
    };
    if certified {
        QFactoriality::Certified
    } else {
        QFactoriality::NotCertified
    }
}

/// Whether the normalized closure of a non-zero orbit is factorial.
pub fn is_factorial(orbit: &ClassicalOrbit) -> Result<bool, PicardError> {
    if orbit.is_zero() {
        return Err(PicardError::ZeroOrbit);
    }
    let r = orbit.partition().multiplicities();
    let single_odd_with = |min_mult: u32| {
        let mut odd = r.iter().filter(|(&i, _)| i % 2 == 1).map(|(_, &mult)| mult);
        matches!((odd.next(), odd.next()), (Some(mult), None) if mult >= min_mult)
    };
    Ok(match orbit.family() {
        Family::Sl => false,
        Family::Sp => r.keys().all(|i| i % 2 == 1),
        Family::SoEven => single_odd_with(4),
        Family::SoOdd => single_odd_with(3),
    })
}
