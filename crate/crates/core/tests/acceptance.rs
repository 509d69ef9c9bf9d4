//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use orbitres::enumeration::{classical_types_up_to, enumerate_orbits};
use orbitres::exceptional::{exceptional_table, ExceptionalAlgebra};
use orbitres::hesselink::{in_image_sq, n_p, polarizable, resolution_by_search, HesselinkContext};
use orbitres::{
    admits_symplectic_resolution, closed_form_verdict, exceptional_verdict, is_even_orbit,
    is_factorial, minimal_orbit, picard, profile, q_factorial_certificate, Answer, ClassicalOrbit,
    ExceptionalError, LieType, QFactoriality, Witness,
};

const MAX_M: u32 = 24;
const AC1_BUDGET: Duration = Duration::from_secs(1);
const AC4_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn orbit(algebra: &str, partition: &str) -> ClassicalOrbit {
    let t: LieType = algebra.parse().unwrap();
    ClassicalOrbit::new(t, partition.parse().unwrap(), None).unwrap()
}

fn verdict(o: &ClassicalOrbit) -> Result<orbitres::ResolutionVerdict, String> {
    admits_symplectic_resolution(o).map_err(|e| e.to_string())
}

fn bcd_orbits() -> Vec<ClassicalOrbit> {
    classical_types_up_to(MAX_M)
        .into_iter()
        .filter(|t| t.family().is_bcd())
        .flat_map(enumerate_orbits)
        .collect()
}

fn no_partitions(algebra: &str) -> Result<(usize, BTreeSet<String>), String> {
    let mut no = BTreeSet::new();
    let mut count = 0;
    for o in enumerate_orbits(algebra.parse().unwrap()) {
        count += 1;
        if verdict(&o)?.answer == Answer::No {
            no.insert(o.partition().to_string());
        }
    }
    Ok((count, no))
}

fn ac1_so8_atlas() -> Outcome {
    let start = Instant::now();
    let (count, no) = no_partitions("so8")?;
    let elapsed = start.elapsed();
    ensure(count == 12, || format!("{count} orbits, expected 12"))?;
    let expected: BTreeSet<String> = ["3,2^2,1", "2^2,1^4"].map(String::from).into();
    ensure(no == expected, || format!("No verdicts {no:?}"))?;
    ensure(elapsed < AC1_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "12 orbits, No = {{[3,2^2,1], [2^2,1^4]}}, {elapsed:?}"
    ))
}

fn ac2_so7_atlas() -> Outcome {
    let (_, no) = no_partitions("so7")?;
    let expected: BTreeSet<String> = ["2^2,1^3".to_string()].into();
    ensure(no == expected, || format!("No verdicts {no:?}"))?;
    let v = verdict(&orbit("so7", "3,2,2"))?;
    ensure(
        v.answer == Answer::Yes && v.witness == Some(Witness::Q { q: 1 }),
        || format!("[3,2,2] gave {v:?}"),
    )?;
    Ok("only [2^2,1^3] is No; [3,2,2] Yes with q=1".into())
}

fn ac3_sp6() -> Outcome {
    for (p, want) in [
        ("4,1,1", Answer::No),
        ("2,1,1,1,1", Answer::No),
        ("3,3", Answer::Yes),
        ("2,2,2", Answer::Yes),
    ] {
        let got = verdict(&orbit("sp6", p))?.answer;
        ensure(got == want, || {
            format!("sp6 [{p}] gave {got}, expected {want}")
        })?;
    }
    let min = minimal_orbit("sp6".parse().unwrap()).map_err(|e| e.to_string())?;
    ensure(min.partition().to_string() == "2,1^4", || {
        format!("minimal orbit {}", min.partition())
    })?;
    Ok("[4,1,1] No, [2,1^4] No, [3,3] Yes, [2,2,2] Yes".into())
}

fn ac4_route_equivalence(orbits: &[ClassicalOrbit]) -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for o in orbits {
        let closed = closed_form_verdict(o).answer == Answer::Yes;
        match resolution_by_search(o) {
            Ok(q) if q.is_some() == closed => {}
            Ok(q) => mismatches.push(format!("{o}: closed={closed} search={q:?}")),
            Err(e) => mismatches.push(format!("{o}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    ensure(mismatches.is_empty(), || {
        format!(
            "{} mismatches, first {:?}",
            mismatches.len(),
            &mismatches[..mismatches.len().min(5)]
        )
    })?;
    ensure(elapsed < AC4_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} B/C/D orbits with m <= {MAX_M} agree, {elapsed:?}",
        orbits.len()
    ))
}

fn ac5_even_and_polarizable(orbits: &[ClassicalOrbit]) -> Outcome {
    let mut even = 0;
    let mut yes = 0;
    for o in orbits {
        let v = verdict(o)?;
        if is_even_orbit(o) {
            even += 1;
            ensure(v.answer == Answer::Yes, || {
                format!("even orbit {o} has verdict {}", v.answer)
            })?;
        }
        if v.answer == Answer::Yes {
            yes += 1;
            let p = polarizable(o).map_err(|e| e.to_string())?;
            ensure(p.polarizable, || format!("{o} is Yes but not polarizable"))?;
        }
    }
    Ok(format!(
        "{even} even orbits all Yes; {yes} Yes orbits all polarizable"
    ))
}

fn ac6_picard_factoriality(orbits: &[ClassicalOrbit]) -> Outcome {
    let mut checked = 0;
    for o in orbits {
        let g = picard(o);
        if profile(o).l == 0 {
            ensure(g.free_rank == 0, || format!("{o}: l = 0 but Pic = {g}"))?;
        }
        if o.is_zero() {
            continue;
        }
        checked += 1;
        let f = is_factorial(o).map_err(|e| e.to_string())?;
        ensure(f == g.is_trivial(), || {
            format!("{o}: factorial = {f}, Pic = {g}")
        })?;
    }
    Ok(format!(
        "{checked} non-zero orbits: factorial <=> Pic trivial; l = 0 => rank 0"
    ))
}

fn ac7_minimal_orbits() -> Outcome {
    let mut n = 0;
    let mut sweep = |t: LieType, want: Answer| -> Result<(), String> {
        let o = minimal_orbit(t).map_err(|e| e.to_string())?;
        let got = verdict(&o)?.answer;
        n += 1;
        ensure(got == want, || format!("minimal orbit of {t} gave {got}"))
    };
    for r in 2..=8 {
        sweep(LieType::so(2 * r + 1).unwrap(), Answer::No)?;
    }
    for r in 3..=8 {
        sweep(LieType::sp(2 * r).unwrap(), Answer::No)?;
    }
    for r in 4..=8 {
        sweep(LieType::so(2 * r).unwrap(), Answer::No)?;
    }
    for m in 2..=10 {
        sweep(LieType::sl(m).unwrap(), Answer::Yes)?;
    }
    Ok(format!("{n} minimal orbits as expected"))
}

fn ac8_non_q_factorial_family() -> Outcome {
    for n in [3u32, 5, 7] {
        let mut parts = vec!["2".to_string(); n as usize - 1];
        parts.extend(["1".to_string(), "1".to_string()]);
        let o = orbit(&format!("so{}", 2 * n), &parts.join(","));
        let v = verdict(&o)?;
        ensure(
            v.answer == Answer::Yes && matches!(v.witness, Some(Witness::PairPosition { .. })),
            || format!("{o}: {v:?}"),
        )?;
        let g = picard(&o);
        ensure(g.free_rank == 1, || format!("{o}: Pic = {g}"))?;
        ensure(
            q_factorial_certificate(&o) == QFactoriality::NotCertified,
            || format!("{o}: certified"),
        )?;
    }
    Ok("n = 3, 5, 7: Yes via pair clause, rank 1, not certified".into())
}

fn ac9_exceptional_table() -> Outcome {
    use ExceptionalAlgebra::*;
    let count = |alg: ExceptionalAlgebra, ans: Answer| {
        exceptional_table()
            .iter()
            .filter(|r| r.algebra == alg && r.verdict == ans)
            .count()
    };
    let expected = [(G2, 0, 0), (F4, 1, 0), (E6, 5, 0), (E7, 2, 3), (E8, 3, 4)];
    for (alg, yes, unknown) in expected {
        let got = (
            count(alg, Answer::Yes),
            count(alg, Answer::Unknown),
            count(alg, Answer::No),
        );
        ensure(got == (yes, unknown, 0), || format!("{alg}: {got:?}"))?;
    }
    ensure(exceptional_table().len() == 18, || "table size".into())?;
    for r in exceptional_table() {
        let v = exceptional_verdict(&r.algebra.to_string(), r.label).map_err(|e| e.to_string())?;
        ensure(v.answer == r.verdict, || {
            format!("{} {}", r.algebra, r.label)
        })?;
    }
    for (alg, label) in [
        ("G2", "G2(a1)"),
        ("E6", "E6"),
        ("E7", "A1"),
        ("E8", "0"),
        ("F4", "B3"),
    ] {
        ensure(
            matches!(
                exceptional_verdict(alg, label),
                Err(ExceptionalError::NotInDatabase { .. })
            ),
            || format!("{alg} {label} should be NotInDatabase"),
        )?;
    }
    Ok("F4 1 Yes; E6 5 Yes; E7 2 Yes + 3 Unknown; E8 3 Yes + 4 Unknown; others absent".into())
}

fn ac10_integrality(orbits: &[ClassicalOrbit]) -> Outcome {
    let mut pairs = 0;
    for o in orbits {
        let ctx = HesselinkContext::new(o.lie_type()).map_err(|e| e.to_string())?;
        for q in ctx.admissible_qs() {
            if in_image_sq(&ctx, o.partition(), q).map_err(|e| e.to_string())? {
                pairs += 1;
                n_p(&ctx, o.partition(), q).map_err(|e| format!("{o}: {e}"))?;
            }
        }
    }
    Ok(format!(
        "{pairs} in-image (d, q) pairs, all with integral exponent >= 0"
    ))
}

fn main() -> ExitCode {
    let orbits = bcd_orbits();
    let criteria: Vec<Criterion> = vec![
        ("AC1 so8 atlas", Box::new(ac1_so8_atlas)),
        ("AC2 so7 atlas", Box::new(ac2_so7_atlas)),
        ("AC3 sp6 verdicts", Box::new(ac3_sp6)),
        (
            "AC4 route equivalence",
            Box::new(|| ac4_route_equivalence(&orbits)),
        ),
        (
            "AC5 even => Yes => polarizable",
            Box::new(|| ac5_even_and_polarizable(&orbits)),
        ),
        (
            "AC6 Picard/factoriality",
            Box::new(|| ac6_picard_factoriality(&orbits)),
        ),
        ("AC7 minimal orbits", Box::new(ac7_minimal_orbits)),
        (
            "AC8 non-Q-factorial family",
            Box::new(ac8_non_q_factorial_family),
        ),
        ("AC9 exceptional table", Box::new(ac9_exceptional_table)),
        (
            "AC10 N(P) integrality",
            Box::new(|| ac10_integrality(&orbits)),
        ),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
