//! Per-orbit reports and atlas tables.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::enumerate_orbits;
use crate::hesselink::{hesselink_reports, polarizable, HesselinkReport, Polarizability};
use crate::orbit::{
    is_even_orbit, orbit_dimension, profile, ClassicalOrbit, Family, LieType, VeryEvenLabel,
};
use crate::picard::{
    is_factorial, picard, q_factorial_certificate, AbelianGroupDescriptor, QFactoriality,
};
use crate::resolution::{
    admits_symplectic_resolution, ResolutionError, ResolutionVerdict, Witness,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileSummary {
    pub k: u32,
    pub c: u32,
    pub a: u32,
    pub b: u32,
    pub l: u32,
    pub rather_odd: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub algebra: String,
    pub family: Family,
    pub m: u32,
    /// Exponent shorthand, e.g. `3,2^2,1`.
    pub partition: String,
    pub parts: Vec<u32>,
    pub very_even_label: Option<VeryEvenLabel>,
    pub profile: ProfileSummary,
    pub even: bool,
    pub dimension: u64,
    pub picard: AbelianGroupDescriptor,
    pub q_factorial: QFactoriality,
    /// `None` for the zero orbit, where factoriality is not decided.
    pub factorial: Option<bool>,
    pub polarizability: Polarizability,
    /// One entry per admissible `q`; empty for `sl`.
    pub hesselink: Vec<HesselinkReport>,
    pub verdict: ResolutionVerdict,
}

pub fn build_report(orbit: &ClassicalOrbit) -> Result<OrbitReport, ResolutionError> {
    let p = profile(orbit);
    let hesselink = match orbit.family() {
        Family::Sl => Vec::new(),
        _ => hesselink_reports(orbit)?,
    };
    Ok(OrbitReport {
        algebra: orbit.lie_type().to_string(),
        family: orbit.family(),
        m: orbit.lie_type().m(),
        partition: orbit.partition().to_string(),
        parts: orbit.partition().parts().to_vec(),
        very_even_label: orbit.very_even_label(),
        profile: ProfileSummary {
            k: p.k,
            c: p.c,
            a: p.a,
            b: p.b,
            l: p.l,
            rather_odd: p.rather_odd,
        },
        even: is_even_orbit(orbit),
        dimension: orbit_dimension(orbit),
        picard: picard(orbit),
        q_factorial: q_factorial_certificate(orbit),
        factorial: is_factorial(orbit).ok(),
        polarizability: polarizable(orbit)?,
        hesselink,
        verdict: admits_symplectic_resolution(orbit)?,
    })
}

/// Reports for every orbit of `lie_type`, in enumeration order.
pub fn build_atlas(lie_type: LieType) -> Result<Vec<OrbitReport>, ResolutionError> {
    let orbits: Vec<_> = enumerate_orbits(lie_type).collect();
    orbits.par_iter().map(build_report).collect()
}

fn witness_text(w: Option<Witness>) -> String {
    match w {
        Some(Witness::Q { q }) => format!("q={q}"),
        Some(Witness::PairPosition { pair_position }) => format!("k={pair_position}"),
        None => "-".to_string(),
    }
}

fn label_text(l: Option<VeryEvenLabel>) -> String {
    l.map_or_else(String::new, |l| l.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn factorial_text(f: Option<bool>) -> &'static str {
    f.map_or("n/a", yes_no)
}

fn q_factorial_text(q: QFactoriality) -> &'static str {
    match q {
        QFactoriality::Certified => "certified",
        QFactoriality::NotCertified => "not certified",
    }
}

fn witnesses_text(p: &Polarizability) -> String {
    if p.witnesses.is_empty() {
        return "-".to_string();
    }
    p.witnesses
        .iter()
        .map(|w| format!("q={}:N={}", w.q, w.n_p))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Human-readable multi-line rendering of one report.
pub fn render_text(r: &OrbitReport) -> String {
    let mut s = String::new();
    let label = r
        .very_even_label
        .map_or_else(String::new, |l| format!(" (very even, {l})"));
    let _ = writeln!(s, "orbit        {} [{}]{}", r.algebra, r.partition, label);
    let p = &r.profile;
    let _ = writeln!(
        s,
        "profile      k={} c={} a={} b={} l={} rather_odd={}",
        p.k, p.c, p.a, p.b, p.l, p.rather_odd
    );
    let _ = writeln!(s, "even         {}", yes_no(r.even));
    let _ = writeln!(s, "dimension    {}", r.dimension);
    let _ = writeln!(s, "picard       {}", r.picard);
    let _ = writeln!(s, "Q-factorial  {}", q_factorial_text(r.q_factorial));
    let _ = writeln!(s, "factorial    {}", factorial_text(r.factorial));
    let _ = writeln!(
        s,
        "polarizable  {} {}",
        yes_no(r.polarizability.polarizable),
        witnesses_text(&r.polarizability)
    );
    for h in &r.hesselink {
        let n_p = h.n_p.map_or_else(|| "-".to_string(), |n| n.to_string());
        let j: Vec<_> = h.j.iter().map(ToString::to_string).collect();
        let b: Vec<_> = h.b.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            s,
            "  q={:<3} J={{{}}} j1={} j0={} B={{{}}} in_image={} u={} N(P)={}",
            h.q,
            j.join(","),
            h.j1,
            h.j0,
            b.join(","),
            h.in_image,
            h.u,
            n_p
        );
    }
    let _ = writeln!(
        s,
        "resolution   {} via {:?} witness {}{}",
        r.verdict.answer,
        r.verdict.route,
        witness_text(r.verdict.witness),
        if r.verdict.cross_checked {
            " (cross-checked)"
        } else {
            ""
        }
    );
    s
}

const COLUMNS: [&str; 16] = [
    "partition",
    "label",
    "dim",
    "even",
    "k",
    "c",
    "a",
    "b",
    "l",
    "rather_odd",
    "picard",
    "q_factorial",
    "factorial",
    "polarizable",
    "verdict",
    "witness",
];

fn row(r: &OrbitReport) -> [String; 16] {
    let p = &r.profile;
    [
        r.partition.clone(),
        label_text(r.very_even_label),
        r.dimension.to_string(),
        yes_no(r.even).to_string(),
        p.k.to_string(),
        p.c.to_string(),
        p.a.to_string(),
        p.b.to_string(),
        p.l.to_string(),
        yes_no(p.rather_odd).to_string(),
        r.picard.to_string(),
        q_factorial_text(r.q_factorial).to_string(),
        factorial_text(r.factorial).to_string(),
        yes_no(r.polarizability.polarizable).to_string(),
        r.verdict.answer.to_string(),
        witness_text(r.verdict.witness),
    ]
}

pub fn render_markdown(lie_type: LieType, rows: &[OrbitReport]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "# Nilpotent orbits of {} ({})\n",
        lie_type,
        lie_type.cartan_name()
    );
    let _ = writeln!(s, "| {} |", COLUMNS.join(" | "));
    let _ = writeln!(s, "|{}", "---|".repeat(COLUMNS.len()));
    for r in rows {
        let _ = writeln!(s, "| {} |", row(r).join(" | "));
    }
    s
}

fn csv_field(f: &str) -> String {
    if f.contains([',', '"', '\n']) {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

pub fn render_csv(rows: &[OrbitReport]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra,{}", COLUMNS.join(","));
    for r in rows {
        let fields: Vec<_> = row(r).iter().map(|f| csv_field(f)).collect();
        let _ = writeln!(s, "{},{}", r.algebra, fields.join(","));
    }
    s
}
