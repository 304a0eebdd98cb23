use serde_json::json;

use crate::analysis::Analysis;
use crate::bitset::ElementSet;
use crate::error::Result;
use crate::ore::{classify_mult_set, localization_profile, LocalizationPresentation};
use crate::ring::{product, product_coords, product_index, quotient_ring, FiniteRing, RingMap};

use super::{
    induced_bijection, is_simple, localization_of, Condition, Consequent, CriterionId, CriterionVerdict,
    REGULAR_ARE_UNITS,
};

/// Diagonal map `R → ∏ S_i⁻¹R`, checked to be a ring map.
pub(crate) struct Diagonal {
    pub locs: Vec<LocalizationPresentation>,
    pub factors: Vec<FiniteRing>,
    pub target: FiniteRing,
    pub map: RingMap,
}

impl Diagonal {
    pub fn new(ring: &FiniteRing, locs: Vec<LocalizationPresentation>) -> Result<Self> {
        let factors: Vec<FiniteRing> = locs.iter().map(|l| l.target.clone()).collect();
        let target = product(&factors)?;
        let image = ring
            .elements()
            .map(|x| {
                let coords: Vec<usize> = locs.iter().map(|l| l.projection.apply(x)).collect();
                product_index(&factors, &coords)
            })
            .collect();
        let map = RingMap::new(ring, &target, image)?;
        Ok(Diagonal {
            locs,
            factors,
            target,
            map,
        })
    }

    pub fn coords(&self, y: usize) -> Vec<usize> {
        product_coords(&self.factors, y)
    }

    /// Elements of the product whose `i`-th coordinate satisfies `f`.
    pub fn slot(&self, i: usize, f: impl Fn(usize) -> bool) -> ElementSet {
        ElementSet::from_predicate(self.target.order(), |y| f(self.coords(y)[i]))
    }
}

fn fractions(q: &FiniteRing, d: &RingMap, den: &ElementSet, num: &ElementSet) -> ElementSet {
    let mut out = q.empty_set();
    for s in den.iter() {
        if let Some(inv) = q.unit_inverse(d.apply(s)) {
            for t in num.iter() {
                out.insert(q.mul(inv, d.apply(t)));
            }
        }
    }
    out
}

pub fn first_criterion(a: &Analysis) -> Result<CriterionVerdict> {
    let ring = a.ring();
    let p = a.profile()?;
    let mut non_simple = Vec::new();
    let mut locs = Vec::new();
    for rec in &p.max_den_sets {
        let loc = localization_of(ring, rec)?;
        if !is_simple(&loc.target)? {
            non_simple.push(json!({ "set": rec.members(), "localization_order": loc.target.order() }));
        }
        locs.push(loc);
    }
    let conditions = vec![
        Condition::new("max_den_finite", true, json!({ "count": p.max_den_sets.len() })),
        Condition::new("ass_intersection_zero", p.ll.is_zero(), json!({ "ll": p.ll.members })),
        Condition::new("localizations_simple_artinian", non_simple.is_empty(), json!(non_simple)),
    ];
    let mut v = CriterionVerdict::from_conditions(CriterionId::First, conditions, vec![REGULAR_ARE_UNITS]);
    if v.verdict {
        v.consequents = consequents(a, locs)?;
    }
    Ok(v)
}

fn consequents(a: &Analysis, locs: Vec<LocalizationPresentation>) -> Result<Vec<Consequent>> {
    let ring = a.ring();
    let p = a.profile()?;
    let regular = a.classes()?.regular;
    let sets: Vec<ElementSet> = p.max_den_members();
    let asses: Vec<ElementSet> = p.max_den_sets.iter().map(|r| r.ass).collect();
    let cores: Vec<ElementSet> = p.max_den_sets.iter().map(|r| r.core).collect();
    let n = sets.len();
    let diag = Diagonal::new(ring, locs)?;
    let q = &diag.target;
    let d = &diag.map;
    let mut out = Vec::new();

    out.push(Consequent::new(
        "regular_elements_are_intersection",
        regular == p.completely_localizable,
        json!({ "regular": regular, "intersection": p.completely_localizable }),
    ));
    let iso = d.is_bijective(q);
    out.push(Consequent::new("diagonal_map_is_isomorphism", iso, json!({ "product_order": q.order() })));

    // Maximal denominator sets of the product and their cores.
    let qp = localization_profile(q, a.bounds())?;
    let units_i: Vec<ElementSet> = diag.factors.iter().map(|f| f.units()).collect();
    let expected: Vec<(ElementSet, ElementSet, ElementSet)> = (0..n)
        .map(|i| {
            let s = diag.slot(i, |c| units_i[i].contains(c));
            let ass = diag.slot(i, |c| c == diag.factors[i].zero());
            let core = ElementSet::from_predicate(q.order(), |y| {
                let c = diag.coords(y);
                (0..n).all(|j| if j == i { units_i[i].contains(c[j]) } else { c[j] == diag.factors[j].zero() })
            });
            (s, ass, core)
        })
        .collect();
    let mut want: Vec<ElementSet> = expected.iter().map(|e| e.0).collect();
    want.sort_by_key(crate::bitset::canonical_key);
    let sets_ok = qp.max_den_members() == want;
    let details_ok = expected.iter().enumerate().all(|(i, (s, ass, core))| {
        qp.max_den_sets.iter().find(|r| r.members() == s).is_some_and(|r| {
            r.ass == *ass
                && r.core == *core
                && localization_of(q, r).is_ok_and(|l| induced_bijection(&l, &diag.factors[i], |y| diag.coords(y)[i]))
        })
    });
    out.push(Consequent::new(
        "product_max_den_sets",
        sets_ok && details_ok,
        json!({ "expected": want, "found": qp.max_den_members() }),
    ));

    let pulled = (0..n).all(|i| {
        sets[i] == diag.locs[i].projection.preimage(&units_i[i])
            && sets[i] == d.preimage(&expected[i].0)
            && asses[i] == d.preimage(&expected[i].1)
    });
    out.push(Consequent::new("max_sets_are_unit_preimages", pulled, json!({ "sets": sets })));

    let avoid = (0..n).all(|i| {
        let others = (0..n).filter(|&j| j != i).fold(ring.empty_set(), |acc, j| acc.union(&sets[j]));
        !cores[i].is_empty() && cores[i].is_subset(&sets[i].difference(&others))
    });
    out.push(Consequent::new("cores_avoid_other_sets", avoid, json!({ "cores": cores })));

    let full = ring.full_set();
    let others_ass = |i: usize| (0..n).filter(|&j| j != i).fold(full, |acc, j| acc.intersection(&asses[j]));
    let formula = (0..n).all(|i| {
        cores[i] == sets[i].intersection(&others_ass(i)) && cores[i] == d.preimage(&expected[i].2)
    });
    let orthogonal = (0..n).all(|i| {
        (0..n).all(|j| i == j || ring.product_set(&cores[i], &cores[j]) == ring.zero_set())
    });
    out.push(Consequent::new(
        "core_formula_and_orthogonality",
        formula && orthogonal,
        json!({ "formula": formula, "orthogonal": orthogonal }),
    ));

    let c_prime = cores.iter().skip(1).fold(cores[0], |acc, c| ring.sumset(&acc, c));
    let c_rec = classify_mult_set(ring, &c_prime).ok();
    let c_den = c_rec.as_ref().is_some_and(|r| r.is_left_denominator && r.ass == ring.zero_set());
    let absorbs = ring.product_set(&regular, &c_prime).is_subset(&c_prime)
        && cores.iter().all(|c| ring.product_set(&regular, c).is_subset(c));
    let same_q = c_den && localization_of(ring, c_rec.as_ref().unwrap())?.target.tables_equal(ring);
    // s_i⁻¹a_i lives in the i-th factor, zero elsewhere.
    let local_fractions = |i: usize| {
        let fi = &diag.factors[i];
        let pi = &diag.locs[i].projection;
        let mut out = q.empty_set();
        for s in cores[i].iter() {
            let inv = fi.unit_inverse(pi.apply(s)).expect("core element maps to a unit");
            for t in others_ass(i).iter() {
                let c: Vec<usize> = (0..n)
                    .map(|j| if j == i { fi.mul(inv, pi.apply(t)) } else { diag.factors[j].zero() })
                    .collect();
                out.insert(product_index(&diag.factors, &c));
            }
        }
        out
    };
    let sums = (0..n).fold(ElementSet::singleton(q.order(), q.zero()), |acc, i| q.sumset(&acc, &local_fractions(i)));
    out.push(Consequent::new(
        "core_sum_is_regular_denominator_set",
        c_den && absorbs && same_q && sums.is_full(),
        json!({ "core_sum": c_prime, "denominator_with_zero_ass": c_den, "absorbs_regular": absorbs, "fractions_cover_quotient": sums.is_full() }),
    ));

    let q_units = q.units();
    let via_c_prime = fractions(q, d, &c_prime, &c_prime);
    let via_regular = fractions(q, d, &regular, &regular);
    out.push(Consequent::new(
        "units_are_core_fractions",
        via_c_prime == q_units && via_regular == q_units,
        json!({ "units": q_units.len(), "core_fractions": via_c_prime.len() }),
    ));
    let back = d.preimage(&via_c_prime);
    out.push(Consequent::new(
        "regular_elements_are_core_fractions",
        back == regular,
        json!({ "pulled_back": back }),
    ));

    if n == 1 {
        out.push(Consequent::new(
            "single_max_set_is_regular",
            sets[0] == regular,
            json!({ "set": sets[0], "regular": regular }),
        ));
    }

    let sp = a.spectrum()?;
    let mut min: Vec<ElementSet> = sp.minimal_primes.iter().map(|i| i.members).collect();
    let mut ass_sorted = asses.clone();
    min.sort();
    ass_sorted.sort();
    out.push(Consequent::new(
        "semiprime_with_ass_as_min_primes",
        sp.semiprime && min == ass_sorted,
        json!({ "min_primes": min }),
    ));
    let mut regular_preimage = true;
    let mut quotient_loc = true;
    let mut localized_ass = true;
    for i in 0..n {
        let qr = quotient_ring(ring, &asses[i])?;
        let reg = qr.ring.regular_elements();
        regular_preimage &= qr.lift(&reg) == sets[i];
        quotient_loc &= qr.ring.tables_equal(&diag.factors[i]) && reg == units_i[i];
        for j in 0..n {
            let img = diag.locs[i].projection.image_of(&asses[j], &diag.factors[i]);
            let gen = diag.factors[i].ideal_closure(&img);
            localized_ass &= if i == j { gen.len() == 1 } else { gen.is_full() };
        }
    }
    out.push(Consequent::new("max_sets_are_regular_preimages", regular_preimage, json!(null)));
    out.push(Consequent::new("quotient_regular_elements_localize", quotient_loc, json!(null)));
    out.push(Consequent::new("localized_ass_values", localized_ass, json!(null)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Bounds;

    fn an(s: &str) -> Analysis {
        Analysis::from_spec(s, Bounds::default()).unwrap()
    }

    #[test]
    fn z6_first_criterion() {
        let v = first_criterion(&an("Z/6")).unwrap();
        assert!(v.verdict);
        assert!(v.consequents_hold(), "{:#?}", v.consequents);
        assert_eq!(v.consequent("core_sum_is_regular_denominator_set").unwrap().detail["core_sum"], json!([1, 5]));
    }

    #[test]
    fn triangular_fails_on_ass() {
        let v = first_criterion(&an("tri(2,F2)")).unwrap();
        assert!(!v.verdict);
        assert!(!v.condition("ass_intersection_zero").unwrap().holds);
        assert!(v.condition("localizations_simple_artinian").unwrap().holds);
        assert!(v.consequents.is_empty());
    }

    #[test]
    fn matrix_ring_single_set() {
        let v = first_criterion(&an("mat(2,F2)")).unwrap();
        assert!(v.verdict && v.consequents_hold());
        assert!(v.consequent("single_max_set_is_regular").unwrap().holds);
    }

    #[test]
    fn product_consequents() {
        for s in ["prod(F2,F2)", "prod(F2,F4)", "Z/6"] {
            let v = first_criterion(&an(s)).unwrap();
            assert!(v.verdict && v.consequents_hold(), "{s}: {:#?}", v.consequents);
        }
    }
}
