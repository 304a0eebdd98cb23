//! Invariants as properties over randomly chosen small rings.

use proptest::prelude::*;
use proptest::sample::select;

use orelab::analysis::Analysis;
use orelab::corpus::structural_diff;
use orelab::criteria::cross_validate;
use orelab::ideals::all_ideals;
use orelab::ore::{classify_mult_set, localize, multiplicative_closure};
use orelab::report::{run_analysis, Phase};
use orelab::ring::{opposite, ring_isomorphic, IsoOutcome};
use orelab::{build_ring, Bounds, ElementSet, Error, FiniteRing};

const ATOMS: &[&str] = &["Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/8", "Z/9", "F4", "quot(poly(F2,[0,0,0,1]),[4])"];

fn spec() -> impl Strategy<Value = String> {
    prop_oneof![
        select(ATOMS).prop_map(str::to_string),
        (select(ATOMS), select(&["Z/2", "Z/3", "F4"][..])).prop_map(|(a, b)| format!("prod({a},{b})")),
        select(&["tri(2,F2)", "opp(tri(2,F2))", "mat(2,F2)", "tri(2,Z/3)", "Z/12", "Z/16", "prod(F2,tri(2,F2))"][..])
            .prop_map(str::to_string),
    ]
}

fn ring(s: &str) -> FiniteRing {
    build_ring(s, &Bounds::default()).unwrap()
}

fn subset(r: &FiniteRing, bits: u64) -> ElementSet {
    ElementSet::from_predicate(r.order(), |x| bits >> (x % 64) & 1 == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_is_multiplicative_or_hits_zero(s in spec(), bits in any::<u64>()) {
        let r = ring(&s);
        let mut seed = subset(&r, bits);
        seed.remove(r.zero());
        match multiplicative_closure(&r, &seed) {
            Ok(m) => {
                let m = *m.members();
                prop_assert!(seed.is_subset(&m) && m.contains(r.one()) && !m.contains(r.zero()));
                prop_assert!(r.product_set(&m, &m).is_subset(&m));
            }
            Err(Error::ZeroInClosure { a, b }) => prop_assert_eq!(r.mul(a, b), r.zero()),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn denominator_sets_localize_soundly(s in spec(), bits in any::<u64>()) {
        let r = ring(&s);
        let mut seed = subset(&r, bits);
        seed.remove(r.zero());
        let Ok(m) = multiplicative_closure(&r, &seed) else { return Ok(()) };
        let rec = classify_mult_set(&r, m.members()).unwrap();
        for &(x, t) in &rec.kill_witnesses {
            prop_assert_eq!(r.mul(t, x), r.zero());
            prop_assert!(rec.members().contains(t) && rec.ass.contains(x));
        }
        if let Some((x, t)) = rec.ore_witness {
            // No s' in S, r' in R with s'x = r't.
            prop_assert!(!rec.members().iter().any(|u| r.elements().any(|y| r.mul(u, x) == r.mul(y, t))));
        }
        if rec.is_left_denominator {
            prop_assert!(rec.ass_is_ideal && r.is_ideal(&rec.ass));
            let loc = localize(&r, &rec).unwrap();
            prop_assert_eq!(loc.target.order() * rec.ass.len(), r.order());
            prop_assert!(loc.inverts_denominators && loc.fractions_cover_target);
        } else {
            prop_assert!(matches!(localize(&r, &rec), Err(Error::NotDenominator)));
        }
    }

    #[test]
    fn profile_invariants(s in spec()) {
        let a = Analysis::from_spec(&s, Bounds::default()).unwrap();
        let p = a.profile().unwrap();
        let units = a.ring().units();
        prop_assert!(!p.max_den_sets.is_empty());
        for x in &p.max_den_sets {
            prop_assert!(units.is_subset(x.members()));
            prop_assert!(p.ll.members.is_subset(&x.ass));
            for y in &p.max_den_sets {
                prop_assert!(x == y || !x.ass.is_subset(&y.ass));
            }
        }
        prop_assert_eq!(p.localizable.union(&p.non_localizable), a.ring().full_set());
        prop_assert!(p.completely_localizable.is_subset(&p.localizable));
        prop_assert_eq!(p.s0, units);
    }

    #[test]
    fn ideal_lattice_closed(s in spec()) {
        let r = ring(&s);
        let ideals = all_ideals(&r, 256).unwrap();
        for i in &ideals {
            for j in &ideals {
                let sum = r.sumset(&i.members, &j.members);
                prop_assert!(ideals.iter().any(|k| k.members == sum));
                let meet = i.members.intersection(&j.members);
                prop_assert!(ideals.iter().any(|k| k.members == meet));
            }
        }
    }

    #[test]
    fn criteria_agree_with_semisimplicity(s in spec()) {
        let a = Analysis::from_spec(&s, Bounds::default()).unwrap();
        let cv = cross_validate(&a).unwrap();
        prop_assert!(cv.all_agree);
        prop_assert_eq!(cv.semisimple, a.spectrum().unwrap().semiprime);
    }

    #[test]
    fn opposite_is_an_involution(s in spec()) {
        let r = ring(&s);
        prop_assert!(opposite(&opposite(&r).unwrap()).unwrap().tables_equal(&r));
    }

    #[test]
    fn relabelled_ring_is_isomorphic(s in spec(), seed in any::<u64>()) {
        let r = ring(&s);
        prop_assume!(r.order() <= 16);
        // Fisher-Yates with a splitmix64 stream.
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^ (z >> 31)
        };
        let n = r.order();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, (next() % (i as u64 + 1)) as usize);
        }
        let mut add = vec![vec![0; n]; n];
        let mut mul = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                add[perm[x]][perm[y]] = perm[r.add(x, y)];
                mul[perm[x]][perm[y]] = perm[r.mul(x, y)];
            }
        }
        let q = FiniteRing::from_tables("relabelled", "relabelled", perm[r.zero()], perm[r.one()], &add, &mul).unwrap();
        match ring_isomorphic(&r, &q, 64).unwrap() {
            IsoOutcome::Isomorphic(m) => prop_assert!(m.is_bijective(&q)),
            IsoOutcome::Mismatch(why) => prop_assert!(false, "{why}"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn reports_are_deterministic(s in spec()) {
        let b = Bounds::default();
        let one = run_analysis(ring(&s), b, &Phase::ALL).unwrap().to_json().unwrap();
        let two = run_analysis(ring(&s), b, &Phase::ALL).unwrap().to_json().unwrap();
        prop_assert!(structural_diff(&one, &two).is_empty());
    }
}
