//! Polarizations of nilpotent orbits in `sp_m` and `so_m`.
//!
//! An orbit is polarizable (Richardson) iff its partition lies in the image
//! of one of the Spaltenstein maps `S_q` for an admissible `q`. The image
//! test and the degree `N(P)` of the associated collapsing map are
//! computed here from partition data alone. All congruences are mod 2 and
//! all index sets run over `j = 1..=N` with `d_{N+1} = 0`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::orbit::{ClassicalOrbit, Family, LieType, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HesselinkError {
    #[error("{0} has no sp/so Hesselink context")]
    WrongFamily(LieType),
    #[error("q = {q} is not admissible for m = {m}, epsilon = {epsilon}")]
    InadmissibleQ { m: u32, epsilon: u32, q: u32 },
    #[error("[{partition}] is not in the image of S_{q}")]
    NotInImage { partition: String, q: u32 },
    #[error(
        "exponent {exponent} of N(P) for [{partition}], q = {q} is not a non-negative integer"
    )]
    NonIntegralExponent {
        partition: String,
        q: u32,
        exponent: Ratio<i64>,
    },
}

/// `m` together with `epsilon` (1 for `sp`, 0 for `so`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HesselinkContext {
    pub m: u32,
    pub epsilon: u32,
}

impl HesselinkContext {
    pub fn new(lie_type: LieType) -> Result<Self, HesselinkError> {
        let epsilon = lie_type
            .epsilon()
            .ok_or(HesselinkError::WrongFamily(lie_type))?;
        Ok(HesselinkContext {
            m: lie_type.m(),
            epsilon,
        })
    }

    /// Admissible values of `q` in `0..=m`.
    pub fn admissible_qs(&self) -> impl Iterator<Item = u32> + '_ {
        (0..=self.m).filter(move |&q| is_admissible(self, q))
    }
}

/// An index extended by the two sentinels used for `sup` and `min` of
/// empty sets. Ordering: `NegInf < At(_) < PosInf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    NegInf,
    At(usize),
    PosInf,
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::NegInf => f.write_str("-inf"),
            Extended::At(j) => write!(f, "{j}"),
            Extended::PosInf => f.write_str("+inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::NegInf => s.serialize_str("-inf"),
            Extended::At(j) => s.serialize_u64(*j as u64),
            Extended::PosInf => s.serialize_str("+inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Index(usize),
            Sentinel(String),
        }
        match Raw::deserialize(d)? {
            Raw::Index(j) => Ok(Extended::At(j)),
            Raw::Sentinel(s) if s == "-inf" => Ok(Extended::NegInf),
            Raw::Sentinel(s) if s == "+inf" => Ok(Extended::PosInf),
            Raw::Sentinel(s) => Err(serde::de::Error::custom(format!(
                "bad index sentinel {s:?}"
            ))),
        }
    }
}

/// `q ≡ m`, and `q ≠ 2` for `so`.
pub fn is_admissible(ctx: &HesselinkContext, q: u32) -> bool {
    q % 2 == ctx.m % 2 && !(ctx.epsilon == 0 && q == 2)
}

/// `J(d) = {j | d_j ≡ ε} ∪ {j, j+1 | j ≡ m, d_j = d_{j+1}}`.
pub fn compute_j(ctx: &HesselinkContext, d: &Partition) -> BTreeSet<usize> {
    let n = d.len();
    let mut set: BTreeSet<usize> = (1..=n).filter(|&j| d.part(j) % 2 == ctx.epsilon).collect();
    for j in 1..=n {
        if j % 2 == ctx.m as usize % 2 && d.part(j) == d.part(j + 1) {
            set.insert(j);
            set.insert(j + 1);
        }
    }
    set
}

/// `j1 = sup{j ∈ J | d_j odd}` and `j0 = min{j ∈ J | d_j even}`.
pub fn compute_j1_j0(ctx: &HesselinkContext, d: &Partition) -> (Extended, Extended) {
    j1_j0_of(&compute_j(ctx, d), d)
}

fn j1_j0_of(set: &BTreeSet<usize>, d: &Partition) -> (Extended, Extended) {
    let j1 = set
        .iter()
        .rev()
        .find(|&&j| d.part(j) % 2 == 1)
        .map_or(Extended::NegInf, |&j| Extended::At(j));
    let j0 = set
        .iter()
        .find(|&&j| d.part(j).is_multiple_of(2))
        .map_or(Extended::PosInf, |&j| Extended::At(j));
    (j1, j0)
}

/// `B(d) = {j | d_j > d_{j+1}, d_j ≡ ε+1}`.
pub fn compute_b(ctx: &HesselinkContext, d: &Partition) -> BTreeSet<usize> {
    (1..=d.len())
        .filter(|&j| d.part(j) > d.part(j + 1) && d.part(j) % 2 == (ctx.epsilon + 1) % 2)
        .collect()
}

/// `d_j ≡ d_{j+1}` for every `j ≡ m+1` in `1..=N`.
fn parity_pairing_holds(ctx: &HesselinkContext, d: &Partition) -> bool {
    (1..=d.len())
        .filter(|&j| j % 2 == (ctx.m as usize + 1) % 2)
        .all(|j| d.part(j) % 2 == d.part(j + 1) % 2)
}

fn check_admissible(ctx: &HesselinkContext, q: u32) -> Result<(), HesselinkError> {
    if is_admissible(ctx, q) {
        Ok(())
    } else {
        Err(HesselinkError::InadmissibleQ {
            m: ctx.m,
            epsilon: ctx.epsilon,
            q,
        })
    }
}

/// Whether `d` is in the image of `S_q`: `j1 ≤ q < j0`, the parity pairing
/// holds, and `d` has at least `q` parts.
///
/// The part-count condition holds for every partition induced from a Levi
/// factor whose classical block has size `q`; without it large `q` would
/// pass the interval test vacuously and produce negative exponents.
pub fn in_image_sq(ctx: &HesselinkContext, d: &Partition, q: u32) -> Result<bool, HesselinkError> {
    check_admissible(ctx, q)?;
    let (j1, j0) = compute_j1_j0(ctx, d);
    let q_ix = Extended::At(q as usize);
    Ok(q as usize <= d.len() && j1 <= q_ix && q_ix < j0 && parity_pairing_holds(ctx, d))
}

/// `u = ½(−1)^ε(#{j | d_j odd} − q)`, exactly.
pub fn compute_u(ctx: &HesselinkContext, d: &Partition, q: u32) -> Ratio<i64> {
    let sign = if ctx.epsilon == 1 { -1 } else { 1 };
    Ratio::new(sign * (d.odd_part_count() as i64 - i64::from(q)), 2)
}

/// The exponent `e` with `N(P) = 2^e`: `u`, or `u − 1` when
/// `q = ε = 0` and `B(d)` is non-empty.
fn degree_exponent(ctx: &HesselinkContext, d: &Partition, q: u32) -> Ratio<i64> {
    let u = compute_u(ctx, d, q);
    if q + ctx.epsilon >= 1 || compute_b(ctx, d).is_empty() {
        u
    } else {
        u - 1
    }
}

/// `N(P)` for a polarization attached to `q`. Requires `d` in the image of `S_q`.
pub fn n_p(ctx: &HesselinkContext, d: &Partition, q: u32) -> Result<u64, HesselinkError> {
    if !in_image_sq(ctx, d, q)? {
        return Err(HesselinkError::NotInImage {
            partition: d.to_string(),
            q,
        });
    }
    let exponent = degree_exponent(ctx, d, q);
    if !exponent.is_integer() || *exponent.numer() < 0 || *exponent.numer() > 63 {
        return Err(HesselinkError::NonIntegralExponent {
            partition: d.to_string(),
            q,
            exponent,
        });
    }
    Ok(1u64 << *exponent.numer())
}

/// Every quantity of the image test and degree formula for one `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HesselinkReport {
    pub q: u32,
    #[serde(rename = "J")]
    pub j: BTreeSet<usize>,
    pub j1: Extended,
    pub j0: Extended,
    #[serde(rename = "B")]
    pub b: BTreeSet<usize>,
    pub in_image: bool,
    pub u: Ratio<i64>,
    #[serde(rename = "N_P")]
    pub n_p: Option<u64>,
}

pub fn hesselink_report(
    ctx: &HesselinkContext,
    d: &Partition,
    q: u32,
) -> Result<HesselinkReport, HesselinkError> {
    let in_image = in_image_sq(ctx, d, q)?;
    let j = compute_j(ctx, d);
    let (j1, j0) = j1_j0_of(&j, d);
    let n_p = if in_image {
        Some(n_p(ctx, d, q)?)
    } else {
        None
    };
    Ok(HesselinkReport {
        q,
        j,
        j1,
        j0,
        b: compute_b(ctx, d),
        in_image,
        u: compute_u(ctx, d, q),
        n_p,
    })
}

/// Reports for every admissible `q` in `0..=m`.
pub fn hesselink_reports(orbit: &ClassicalOrbit) -> Result<Vec<HesselinkReport>, HesselinkError> {
    let ctx = HesselinkContext::new(orbit.lie_type())?;
    ctx.admissible_qs()
        .map(|q| hesselink_report(&ctx, orbit.partition(), q))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizationWitness {
    pub q: u32,
    #[serde(rename = "N_P")]
    pub n_p: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polarizability {
    pub polarizable: bool,
    pub witnesses: Vec<PolarizationWitness>,
}

/// Searches `q = 0..=m` for polarizations. Every orbit of `sl_n` is
/// polarizable; no witnesses are listed for it.
pub fn polarizable(orbit: &ClassicalOrbit) -> Result<Polarizability, HesselinkError> {
    if orbit.family() == Family::Sl {
        return Ok(Polarizability {
            polarizable: true,
            witnesses: Vec::new(),
        });
    }
    let ctx = HesselinkContext::new(orbit.lie_type())?;
    let d = orbit.partition();
    let qs: Vec<u32> = ctx.admissible_qs().collect();
    let found: Vec<Option<PolarizationWitness>> = qs
        .par_iter()
        .map(|&q| {
            if in_image_sq(&ctx, d, q)? {
                Ok(Some(PolarizationWitness {
                    q,
                    n_p: n_p(&ctx, d, q)?,
                }))
            } else {
                Ok(None)
            }
        })
        .collect::<Result<_, HesselinkError>>()?;
    let witnesses: Vec<_> = found.into_iter().flatten().collect();
    Ok(Polarizability {
        polarizable: !witnesses.is_empty(),
        witnesses,
    })
}

/// A symplectic resolution exists iff some polarization has `N(P) = 1`.
pub fn resolution_by_search(orbit: &ClassicalOrbit) -> Result<Option<u32>, HesselinkError> {
    if orbit.family() == Family::Sl {
        return Err(HesselinkError::WrongFamily(orbit.lie_type()));
    }
    Ok(polarizable(orbit)?
        .witnesses
        .iter()
        .find(|w| w.n_p == 1)
        .map(|w| w.q))
}
