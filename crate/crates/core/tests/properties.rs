use proptest::prelude::*;

use orbitres::enumeration::{classical_types_up_to, enumerate_orbits, Partitions};
use orbitres::hesselink::{in_image_sq, HesselinkContext};
use orbitres::report::{build_report, OrbitReport};
use orbitres::{
    admits_symplectic_resolution, minimal_orbit, orbit_dimension, picard, profile,
    springer_consistency, ClassicalOrbit, Family, LieType, Partition, VeryEvenLabel,
};

/// `dim` of the centralizer in `gl_m` is `Σ_{i,j} min(d_i, d_j)`; the
/// `sp`/`so` centralizers take half of it, corrected by the number of odd
/// parts.
fn dimension_oracle(orbit: &ClassicalOrbit) -> u64 {
    let d = orbit.partition().parts();
    let min_sum: u64 = d
        .iter()
        .flat_map(|&x| d.iter().map(move |&y| u64::from(x.min(y))))
        .sum();
    let odd = d.iter().filter(|&&x| x % 2 == 1).count() as u64;
    let t = orbit.lie_type();
    match t.family() {
        Family::Sl => t.dimension() + 1 - min_sum,
        Family::Sp => t.dimension() - (min_sum + odd) / 2,
        Family::SoOdd | Family::SoEven => t.dimension() - (min_sum - odd) / 2,
    }
}

fn all_orbits(max_m: u32) -> Vec<ClassicalOrbit> {
    classical_types_up_to(max_m)
        .into_iter()
        .flat_map(enumerate_orbits)
        .collect()
}

#[test]
fn profile_counts_match_brute_force() {
    for o in all_orbits(20) {
        let d = o.partition().parts();
        let p = profile(&o);
        let m: u32 = p.r.iter().map(|(&i, &r)| i * r).sum();
        assert_eq!(m, o.lie_type().m());
        for i in 1..=d[0] + 1 {
            let s_i = d.iter().filter(|&&x| x >= i).count() as u32;
            let r_i = d.iter().filter(|&&x| x == i).count() as u32;
            assert_eq!(p.s(i), s_i, "{o} s_{i}");
            assert_eq!(p.r(i), r_i, "{o} r_{i}");
        }
        assert_eq!(p.a + p.b, p.k);
    }
}

#[test]
fn dimension_matches_centralizer_oracle() {
    for o in all_orbits(20) {
        let dim = orbit_dimension(&o);
        assert_eq!(dim, dimension_oracle(&o), "{o}");
        assert_eq!(dim % 2, 0, "{o}");
        assert_eq!(dim == 0, o.is_zero(), "{o}");
    }
}

#[test]
fn regular_and_minimal_dimensions() {
    for t in classical_types_up_to(20) {
        let regular = enumerate_orbits(t).next().unwrap();
        assert_eq!(
            orbit_dimension(&regular),
            t.dimension() - u64::from(t.rank()),
            "{t}"
        );
        if let Ok(min) = minimal_orbit(t) {
            let m = u64::from(t.m());
            let expected = match t.family() {
                Family::Sl => 2 * m - 2,
                Family::Sp => m,
                Family::SoOdd | Family::SoEven => 2 * m - 6,
            };
            assert_eq!(orbit_dimension(&min), expected, "{t}");
        }
    }
}

#[test]
fn enumeration_is_valid_complete_and_deterministic() {
    for t in classical_types_up_to(30) {
        let orbits: Vec<_> = enumerate_orbits(t).collect();
        for o in &orbits {
            ClassicalOrbit::new(t, o.partition().clone(), o.very_even_label()).unwrap();
        }
        let again: Vec<_> = enumerate_orbits(t).collect();
        assert_eq!(orbits, again);
        if t.m() <= 20 {
            let filtered = Partitions::new(t.m())
                .filter(|p| {
                    ClassicalOrbit::new(t, Partition::new(p.clone()).unwrap(), None).is_ok()
                })
                .map(|p| {
                    let very_even = t.family() == Family::SoEven && p.iter().all(|x| x % 2 == 0);
                    if very_even {
                        2
                    } else {
                        1
                    }
                })
                .sum::<usize>();
            assert_eq!(orbits.len(), filtered, "{t}");
        }
    }
}

#[test]
fn picard_of_regular_sl_orbit() {
    for n in 2..=30 {
        let t = LieType::sl(n).unwrap();
        let regular = ClassicalOrbit::new(t, Partition::new(vec![n]).unwrap(), None).unwrap();
        assert_eq!(picard(&regular).torsion, vec![u64::from(n)]);
        let zero =
            ClassicalOrbit::new(t, Partition::new(vec![1; n as usize]).unwrap(), None).unwrap();
        assert!(picard(&zero).is_trivial());
    }
}

#[test]
fn image_q_range_is_an_interval() {
    for o in all_orbits(20).iter().filter(|o| o.family().is_bcd()) {
        let ctx = HesselinkContext::new(o.lie_type()).unwrap();
        let qs: Vec<u32> = ctx.admissible_qs().collect();
        let hits: Vec<bool> = qs
            .iter()
            .map(|&q| in_image_sq(&ctx, o.partition(), q).unwrap())
            .collect();
        if let (Some(first), Some(last)) =
            (hits.iter().position(|&h| h), hits.iter().rposition(|&h| h))
        {
            assert!(
                hits[first..=last].iter().all(|&h| h),
                "{o}: {qs:?} {hits:?}"
            );
        }
    }
}

#[test]
fn springer_consistency_everywhere() {
    for o in all_orbits(20) {
        assert!(springer_consistency(&o), "{o}");
    }
}

#[test]
fn very_even_label_is_cosmetic() {
    let mut seen = 0;
    for o in all_orbits(24)
        .iter()
        .filter(|o| o.very_even_label() == Some(VeryEvenLabel::II))
    {
        let first = ClassicalOrbit::new(o.lie_type(), o.partition().clone(), None).unwrap();
        assert_eq!(first.very_even_label(), Some(VeryEvenLabel::I));
        assert_eq!(profile(o), profile(&first));
        assert_eq!(picard(o), picard(&first));
        assert_eq!(
            admits_symplectic_resolution(o).unwrap(),
            admits_symplectic_resolution(&first).unwrap()
        );
        seen += 1;
    }
    assert!(seen > 20);
}

fn arb_orbit() -> impl Strategy<Value = ClassicalOrbit> {
    (0usize..4, 2u32..=22, any::<prop::sample::Index>()).prop_filter_map(
        "no such algebra",
        |(fam, m, idx)| {
            let family = [Family::Sl, Family::Sp, Family::SoOdd, Family::SoEven][fam];
            let t = LieType::new(family, m).ok()?;
            let orbits: Vec<_> = enumerate_orbits(t).collect();
            Some(orbits[idx.index(orbits.len())].clone())
        },
    )
}

proptest! {
    #[test]
    fn report_json_round_trips(o in arb_orbit()) {
        let r = build_report(&o).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: OrbitReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn partition_text_round_trips(o in arb_orbit()) {
        let text = o.partition().to_string();
        prop_assert_eq!(&text.parse::<Partition>().unwrap(), o.partition());
        let plain: Vec<String> = o.partition().parts().iter().map(ToString::to_string).collect();
        prop_assert_eq!(&plain.join(",").parse::<Partition>().unwrap(), o.partition());
    }

    #[test]
    fn rank_is_l(o in arb_orbit()) {
        prop_assume!(o.family().is_bcd());
        let g = picard(&o);
        let l = profile(&o).l;
        prop_assert!(g.free_rank == l || (g.unresolved_extension.is_some() && l == 0));
    }
}
