//! Partitions, classical Lie types and validated nilpotent orbits.
//!
//! A nilpotent orbit of a classical algebra is determined by the Jordan type
//! of any of its elements, i.e. by a partition of the size of the natural
//! representation. For `sp` the odd parts must occur with even multiplicity,
//! for `so` the even parts. Very even partitions of `so_{2n}` label two
//! orbits, distinguished here by [`VeryEvenLabel`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("partition is empty")]
    Empty,
    #[error("parts are not weakly decreasing at position {position}")]
    NotWeaklyDecreasing { position: usize },
    #[error("part {value} is not positive")]
    NonPositivePart { value: i64 },
    #[error("parts sum to {actual}, expected {expected}")]
    WrongSum { expected: u32, actual: i64 },
    #[error("part {part} has multiplicity {multiplicity}, which must be even for {family}")]
    ParityMultiplicityViolation {
        family: Family,
        part: u32,
        multiplicity: u32,
    },
    #[error("{family} does not exist for matrix size {m}")]
    InvalidLieType { family: Family, m: u32 },
    #[error("rank of {0} is too small for the minimal orbit formula")]
    RankTooSmall(LieType),
    #[error("very even label given for {0}, which is not a very even partition of so_2n")]
    UnexpectedLabel(String),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Sl,
    Sp,
    SoOdd,
    SoEven,
}

impl Family {
    pub fn is_bcd(self) -> bool {
        !matches!(self, Family::Sl)
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(self, Family::SoOdd | Family::SoEven)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sl => "sl",
            Family::Sp => "sp",
            Family::SoOdd | Family::SoEven => "so",
        })
    }
}

/// A classical simple algebra, identified by its family and the size `m` of
/// its natural representation (`sl_m`, `sp_m`, `so_m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    m: u32,
}

impl LieType {
    pub fn new(family: Family, m: u32) -> Result<Self, OrbitError> {
        let ok = match family {
            // sl_1 is allowed so that its single (zero) orbit can be enumerated.
            Family::Sl => m >= 1,
            Family::Sp => m >= 2 && m.is_multiple_of(2),
            Family::SoOdd => m >= 3 && m % 2 == 1,
            Family::SoEven => m >= 4 && m.is_multiple_of(2),
        };
        if ok {
            Ok(LieType { family, m })
        } else {
            Err(OrbitError::InvalidLieType { family, m })
        }
    }

    pub fn sl(m: u32) -> Result<Self, OrbitError> {
        Self::new(Family::Sl, m)
    }

    pub fn sp(m: u32) -> Result<Self, OrbitError> {
        Self::new(Family::Sp, m)
    }

    /// `so_m`, choosing the odd or even family from the parity of `m`.
    pub fn so(m: u32) -> Result<Self, OrbitError> {
        let family = if m % 2 == 1 {
            Family::SoOdd
        } else {
            Family::SoEven
        };
        Self::new(family, m)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Rank of the algebra.
    pub fn rank(&self) -> u32 {
        match self.family {
            Family::Sl => self.m - 1,
            _ => self.m / 2,
        }
    }

    /// Dimension of the algebra.
    pub fn dimension(&self) -> u64 {
        let m = u64::from(self.m);
        match self.family {
            Family::Sl => m * m - 1,
            Family::Sp => m * (m + 1) / 2,
            Family::SoOdd | Family::SoEven => m * (m - 1) / 2,
        }
    }

    /// 1 for `sp`, 0 for `so`, `None` for `sl`.
    pub fn epsilon(&self) -> Option<u32> {
        match self.family {
            Family::Sl => None,
            Family::Sp => Some(1),
            Family::SoOdd | Family::SoEven => Some(0),
        }
    }

    /// Cartan-type name such as `A4`, `B3`, `C3`, `D4`.
    pub fn cartan_name(&self) -> String {
        let letter = match self.family {
            Family::Sl => 'A',
            Family::SoOdd => 'B',
            Family::Sp => 'C',
            Family::SoEven => 'D',
        };
        format!("{letter}{}", self.rank())
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.m)
    }
}

impl FromStr for LieType {
    type Err = OrbitError;

    /// Accepts matrix-size names (`sl5`, `sp6`, `so8`, optionally with `_`)
    /// and Cartan names (`A4`, `B3`, `C3`, `D4`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || OrbitError::Parse {
            what: "algebra",
            input: s.to_string(),
        };
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        for (prefix, ctor) in [
            ("sl", LieType::sl as fn(u32) -> Result<LieType, OrbitError>),
            ("sp", LieType::sp),
            ("so", LieType::so),
        ] {
            if let Some(rest) = lower.strip_prefix(prefix) {
                let rest = rest.trim_start_matches('_');
                let m: u32 = rest.parse().map_err(|_| parse_err())?;
                return ctor(m);
            }
        }
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(parse_err)?.to_ascii_uppercase();
        let n: u32 = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| parse_err())?;
        match letter {
            'A' if n >= 1 => LieType::sl(n + 1),
            'B' if n >= 1 => LieType::new(Family::SoOdd, 2 * n + 1),
            'C' if n >= 1 => LieType::sp(2 * n),
            'D' if n >= 1 => LieType::new(Family::SoEven, 2 * n),
            _ => Err(parse_err()),
        }
    }
}

/// A weakly decreasing sequence of positive integers.
///
/// Indexing through [`Partition::part`] is 1-based and pads with zeros past
/// the last part, so `d_{N+1} = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, OrbitError> {
        if parts.is_empty() {
            return Err(OrbitError::Empty);
        }
        if let Some(&zero) = parts.iter().find(|&&p| p == 0) {
            return Err(OrbitError::NonPositivePart {
                value: i64::from(zero),
            });
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(OrbitError::NotWeaklyDecreasing { position: i + 2 });
        }
        Ok(Partition(parts))
    }

    /// Checks a signed integer sequence and converts it.
    pub fn from_signed(parts: &[i64]) -> Result<Self, OrbitError> {
        if parts.is_empty() {
            return Err(OrbitError::Empty);
        }
        if let Some(&bad) = parts.iter().find(|&&p| p <= 0) {
            return Err(OrbitError::NonPositivePart { value: bad });
        }
        let parts = parts
            .iter()
            .map(|&p| u32::try_from(p).map_err(|_| OrbitError::NonPositivePart { value: p }))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts `N`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// `d_j` for 1-based `j`, zero outside `1..=N`.
    pub fn part(&self, j: usize) -> u32 {
        if j == 0 {
            return 0;
        }
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.0[0]
    }

    pub fn multiplicity(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&p| p == i).count() as u32
    }

    /// Distinct parts with their multiplicities.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut r = BTreeMap::new();
        for &p in &self.0 {
            *r.entry(p).or_insert(0) += 1;
        }
        r
    }

    /// The transpose partition: entry `i-1` is `s_i = #{j | d_j >= i}`.
    pub fn dual(&self) -> Vec<u32> {
        let mut s = vec![0u32; self.largest() as usize];
        for &p in &self.0 {
            for slot in &mut s[..p as usize] {
                *slot += 1;
            }
        }
        s
    }

    pub fn odd_part_count(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Whether this is `[1^m]`.
    pub fn is_zero_orbit(&self) -> bool {
        self.largest() == 1
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = OrbitError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    /// Comma-separated with exponent shorthand for repeated parts: `3,2^2,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == p).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = OrbitError;

    /// Parses `"3,2,2,1"` or the shorthand `"3,2^2,1"`. Surrounding brackets
    /// and whitespace are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || OrbitError::Parse {
            what: "partition",
            input: s.to_string(),
        };
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (
                    b.trim(),
                    e.trim().parse::<usize>().map_err(|_| parse_err())?,
                ),
                None => (token, 1),
            };
            let value: i64 = base.parse().map_err(|_| parse_err())?;
            parts.extend(std::iter::repeat_n(value, exp));
        }
        Partition::from_signed(&parts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VeryEvenLabel {
    I,
    II,
}

impl fmt::Display for VeryEvenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VeryEvenLabel::I => "I",
            VeryEvenLabel::II => "II",
        })
    }
}

impl FromStr for VeryEvenLabel {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "I" | "i" | "1" => Ok(VeryEvenLabel::I),
            "II" | "ii" | "2" => Ok(VeryEvenLabel::II),
            _ => Err(OrbitError::Parse {
                what: "very even label",
                input: s.to_string(),
            }),
        }
    }
}

/// A nilpotent orbit of a classical algebra, validated against its type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassicalOrbit {
    lie_type: LieType,
    partition: Partition,
    very_even_label: Option<VeryEvenLabel>,
}

impl ClassicalOrbit {
    /// Validates `partition` for `lie_type`. Very even partitions of `so_2n`
    /// get `label`, defaulting to `I`; a label on any other orbit is rejected.
    pub fn new(
        lie_type: LieType,
        partition: Partition,
        label: Option<VeryEvenLabel>,
    ) -> Result<Self, OrbitError> {
        let sum = partition.sum();
        if sum != u64::from(lie_type.m()) {
            return Err(OrbitError::WrongSum {
                expected: lie_type.m(),
                actual: sum as i64,
            });
        }
        if let Some((part, multiplicity)) = parity_violation(lie_type.family(), &partition) {
            return Err(OrbitError::ParityMultiplicityViolation {
                family: lie_type.family(),
                part,
                multiplicity,
            });
        }
        let very_even = is_very_even(lie_type.family(), &partition);
        let very_even_label = match (very_even, label) {
            (true, l) => Some(l.unwrap_or(VeryEvenLabel::I)),
            (false, None) => None,
            (false, Some(_)) => return Err(OrbitError::UnexpectedLabel(partition.to_string())),
        };
        Ok(ClassicalOrbit {
            lie_type,
            partition,
            very_even_label,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn family(&self) -> Family {
        self.lie_type.family()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn very_even_label(&self) -> Option<VeryEvenLabel> {
        self.very_even_label
    }

    pub fn is_zero(&self) -> bool {
        self.partition.is_zero_orbit()
    }

    /// The same orbit carrying a different very even label.
    pub(crate) fn relabeled(&self, label: VeryEvenLabel) -> Self {
        debug_assert!(self.very_even_label.is_some());
        ClassicalOrbit {
            very_even_label: Some(label),
            ..self.clone()
        }
    }
}

impl fmt::Display for ClassicalOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.lie_type, self.partition)?;
        if let Some(label) = self.very_even_label {
            write!(f, " {label}")?;
        }
        Ok(())
    }
}

/// The first part whose multiplicity breaks the family's parity rule.
fn parity_violation(family: Family, partition: &Partition) -> Option<(u32, u32)> {
    let constrained_parity = match family {
        Family::Sl => return None,
        Family::Sp => 1,
        Family::SoOdd | Family::SoEven => 0,
    };
    partition
        .multiplicities()
        .into_iter()
        .rev()
        .find(|&(part, mult)| part % 2 == constrained_parity && mult % 2 == 1)
}

fn is_very_even(family: Family, partition: &Partition) -> bool {
    family == Family::SoEven && partition.parts().iter().all(|p| p % 2 == 0)
}

/// Builds a validated orbit from raw integers.
pub fn validate_orbit(lie_type: LieType, parts: &[i64]) -> Result<ClassicalOrbit, OrbitError> {
    let partition = Partition::from_signed(parts)?;
    ClassicalOrbit::new(lie_type, partition, None)
}

/// Partition statistics shared by the Picard and resolution formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionProfile {
    /// `r_i`: multiplicity of each distinct part `i`.
    pub r: BTreeMap<u32, u32>,
    /// `s_i` for `i = 1..=d_1`, stored at index `i-1`.
    pub s: Vec<u32>,
    /// Number of distinct parts.
    pub k: u32,
    /// gcd of all parts.
    pub c: u32,
    /// Number of distinct odd parts.
    pub a: u32,
    /// Number of distinct even parts.
    pub b: u32,
    /// Distinct even (sp) or odd (so) parts occurring exactly twice; 0 for sl.
    pub l: u32,
    pub rather_odd: bool,
    pub all_same_parity: bool,
}

impl PartitionProfile {
    pub fn r(&self, i: u32) -> u32 {
        self.r.get(&i).copied().unwrap_or(0)
    }

    pub fn s(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.s.get(i as usize - 1).copied().unwrap_or(0)
    }
}

pub fn profile(orbit: &ClassicalOrbit) -> PartitionProfile {
    let d = orbit.partition();
    let r = d.multiplicities();
    let k = r.len() as u32;
    let c = d.parts().iter().fold(0u32, |acc, &p| acc.gcd(&p));
    let a = r.keys().filter(|&&i| i % 2 == 1).count() as u32;
    let b = k - a;
    let twice_parity = match orbit.family() {
        Family::Sl => None,
        Family::Sp => Some(0),
        Family::SoOdd | Family::SoEven => Some(1),
    };
    let l = twice_parity.map_or(0, |parity| {
        r.iter()
            .filter(|&(&i, &mult)| i % 2 == parity && mult == 2)
            .count() as u32
    });
    let rather_odd = r.iter().all(|(&i, &mult)| i % 2 == 0 || mult == 1);
    PartitionProfile {
        s: d.dual(),
        r,
        k,
        c,
        a,
        b,
        l,
        rather_odd,
        all_same_parity: a == 0 || b == 0,
    }
}

/// An orbit is even when all its parts share one parity.
pub fn is_even_orbit(orbit: &ClassicalOrbit) -> bool {
    let parts = orbit.partition().parts();
    let parity = parts[0] % 2;
    parts.iter().all(|p| p % 2 == parity)
}

/// Complex dimension of the orbit, from the dual partition.
pub fn orbit_dimension(orbit: &ClassicalOrbit) -> u64 {
    let d = orbit.partition();
    let sum_sq: u64 = d.dual().iter().map(|&s| u64::from(s) * u64::from(s)).sum();
    let odd = d.odd_part_count() as u64;
    let m = u64::from(orbit.lie_type().m());
    match orbit.family() {
        Family::Sl => m * m - sum_sq,
        // 2n^2 + n = m(m+1)/2 with m = 2n
        Family::Sp => m * (m + 1) / 2 - (sum_sq + odd) / 2,
        Family::SoOdd | Family::SoEven => m * (m - 1) / 2 - (sum_sq - odd) / 2,
    }
}

/// The minimal nonzero orbit: `[2,1^{m-2}]` for sl and sp,
/// `[2^2,1^{m-4}]` for so.
pub fn minimal_orbit(lie_type: LieType) -> Result<ClassicalOrbit, OrbitError> {
    let m = lie_type.m();
    let twos = match lie_type.family() {
        Family::Sl if m >= 2 => 1,
        Family::Sp if m >= 6 => 1,
        Family::SoOdd if m >= 5 => 2,
        Family::SoEven if m >= 8 => 2,
        _ => return Err(OrbitError::RankTooSmall(lie_type)),
    };
    let mut parts = vec![2u32; twos];
    parts.resize((m - twos as u32) as usize, 1);
    ClassicalOrbit::new(lie_type, Partition::new(parts)?, None)
}
