//! Invariant battery: structural identities checked on a single ring.

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::Analysis;
use crate::bitset::ElementSet;
use crate::criteria::{cross_validate, first_criterion, ll_projection, ll_quotient_criterion, product_maxden_check};
use crate::error::{Error, Result};
use crate::ideals::is_prime_ideal;
use crate::ore::{
    all_multiplicative_sets, classify_mult_set, core_analysis, is_localization_maximal, localize, maximal_sets,
    product_support, semigroup_join, DenominatorSetRecord,
};
use crate::ring::{opposite, quotient_ring};

/// Pairs examined by the join check before stopping.
const JOIN_PAIR_CAP: usize = 400;
/// Largest prime count for the subfamily check (all subsets are tried).
const SUBFAMILY_PRIME_CAP: usize = 10;

#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub holds: bool,
    /// Instances examined.
    pub checked: usize,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl TheoremCheck {
    fn new(name: &'static str, holds: bool, checked: usize, detail: Value) -> Self {
        TheoremCheck {
            name,
            holds,
            checked,
            detail,
            skipped: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub checks: Vec<TheoremCheck>,
    pub all_hold: bool,
}

impl TheoremReport {
    pub fn check(&self, name: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Denominator sets to quantify over: all of them when the oracle runs,
/// otherwise the maximal ones.
fn quantified_sets(a: &Analysis) -> Result<(Vec<DenominatorSetRecord>, &'static str)> {
    match a.denominator_sets() {
        Ok(all) => Ok((all.clone(), "oracle")),
        Err(Error::OrderBound { .. }) => Ok((a.profile()?.max_den_sets.clone(), "max_den")),
        Err(e) => Err(e),
    }
}

fn largest_quotient_ring(a: &Analysis) -> Result<TheoremCheck> {
    let ring = a.ring();
    let p = a.profile()?;
    let q = &p.ql.target;
    let q_units = q.units();
    let q_regular = q.regular_elements();
    let s0_q = classify_mult_set(q, &q_units)?;
    let qq = localize(q, &s0_q)?;
    let pi = &p.ql.projection;
    let back = pi.preimage(&q_units);
    let mut fractions = q.empty_set();
    for s in p.s0.iter() {
        let inv = q.unit_inverse(pi.apply(s)).unwrap();
        for t in p.s0.iter() {
            fractions.insert(q.mul(inv, pi.apply(t)));
        }
    }
    let holds = q_regular == q_units
        && s0_q.is_left_denominator
        && back == p.s0
        && fractions == q_units
        && qq.target.tables_equal(q)
        && q.tables_equal(ring);
    Ok(TheoremCheck::new(
        "largest_quotient_ring",
        holds,
        1,
        json!({ "units": q_units.len(), "fractions_are_units": fractions == q_units, "idempotent": qq.target.tables_equal(q) }),
    ))
}

fn cores(a: &Analysis) -> Result<TheoremCheck> {
    let (sets, source) = quantified_sets(a)?;
    let mut failing = Vec::new();
    let mut checked = 0;
    for rec in sets.iter().filter(|r| !r.core.is_empty()) {
        checked += 1;
        let c = core_analysis(a.ring(), rec)?;
        if !c.all_hold() {
            failing.push(json!({ "set": rec.members(), "core": c.core, "report": c }));
        }
    }
    Ok(TheoremCheck::new(
        "core_localizations",
        failing.is_empty(),
        checked,
        json!({ "source": source, "failing": failing }),
    ))
}

fn inclusion_by_ass(a: &Analysis) -> Result<TheoremCheck> {
    let (sets, source) = quantified_sets(a)?;
    let p = a.profile()?;
    let mut failing = Vec::new();
    for s in &p.max_den_sets {
        for t in &sets {
            if t.members().is_subset(s.members()) != t.ass.is_subset(&s.ass) {
                failing.push(json!({ "max": s.members(), "set": t.members() }));
            }
        }
        for t in &p.max_den_sets {
            if (s == t) != (s.ass == t.ass) {
                failing.push(json!({ "max": s.members(), "other_max": t.members() }));
            }
        }
    }
    Ok(TheoremCheck::new(
        "inclusion_matches_ass",
        failing.is_empty(),
        p.max_den_sets.len() * sets.len(),
        json!({ "source": source, "failing": failing }),
    ))
}

fn maximal_ass(a: &Analysis) -> Result<TheoremCheck> {
    let (sets, source) = quantified_sets(a)?;
    let p = a.profile()?;
    let mut ass_all: Vec<ElementSet> = sets.iter().map(|r| r.ass).collect();
    ass_all.sort();
    ass_all.dedup();
    let mut max_ass: Vec<ElementSet> = ass_all
        .iter()
        .filter(|x| !ass_all.iter().any(|y| y != *x && x.is_subset(y)))
        .copied()
        .collect();
    max_ass.sort();
    let mut from_den: Vec<ElementSet> = p.ass_max.iter().map(|i| i.members).collect();
    from_den.sort();
    let incomparable = from_den
        .iter()
        .tuple_combinations()
        .all(|(x, y): (&ElementSet, &ElementSet)| !x.is_subset(y) && !y.is_subset(x));
    Ok(TheoremCheck::new(
        "maximal_ass_values",
        !from_den.is_empty() && max_ass == from_den && incomparable,
        ass_all.len(),
        json!({ "source": source, "max_ass": max_ass, "ass_of_max_den": from_den }),
    ))
}

fn units_in_max_sets(a: &Analysis) -> Result<TheoremCheck> {
    let ring = a.ring();
    let p = a.profile()?;
    let regular = a.classes()?.regular;
    let all_contain = p.max_den_sets.iter().all(|r| p.s0.is_subset(r.members()));
    let members = p.max_den_members();
    let dichotomy = members == vec![regular] || !members.contains(&regular);
    let stable = p.max_den_sets.iter().all(|r| {
        let mut moved = ring.empty_set();
        for c in p.s0.iter() {
            let inv = ring.unit_inverse(c).unwrap();
            for s in r.members().iter() {
                moved.insert(ring.mul(inv, s));
            }
        }
        moved == *r.members()
    });
    Ok(TheoremCheck::new(
        "units_in_max_sets",
        all_contain && dichotomy && stable,
        members.len(),
        json!({ "contain_units": all_contain, "regular_dichotomy": dichotomy, "unit_fractions_stable": stable }),
    ))
}

fn localization_maximal(a: &Analysis) -> Result<TheoremCheck> {
    let ring = a.ring();
    let p = a.profile()?;
    let max_ass: Vec<ElementSet> = p.max_den_sets.iter().map(|r| r.ass).collect();
    let mut rows = Vec::new();
    let mut holds = true;
    for ideal in &p.kept_candidates {
        let q = quotient_ring(ring, ideal)?;
        let m = is_localization_maximal(&q.ring, a.bounds())?;
        let is_max = max_ass.contains(ideal);
        holds &= m.verdict == is_max;
        rows.push(json!({ "ass": ideal, "at_max_set": is_max, "localization_maximal": m.verdict }));
    }
    Ok(TheoremCheck::new("localization_maximal_iff_max_set", holds, rows.len(), json!(rows)))
}

fn joins(a: &Analysis) -> Result<TheoremCheck> {
    let (sets, source) = quantified_sets(a)?;
    let mut failing = Vec::new();
    let mut checked = 0;
    'outer: for s in &sets {
        for t in &sets {
            if !s.ass.is_subset(&t.ass) {
                continue;
            }
            if checked == JOIN_PAIR_CAP {
                break 'outer;
            }
            checked += 1;
            let j = semigroup_join(a.ring(), s, t)?;
            if !j.conclusions_hold() || j.join.as_ref().is_some_and(|r| r.ass != t.ass) {
                failing.push(json!({ "s": s.members(), "t": t.members(), "report": j }));
            }
        }
    }
    Ok(TheoremCheck::new(
        "nested_ass_joins",
        failing.is_empty(),
        checked,
        json!({ "source": source, "cap": JOIN_PAIR_CAP, "failing": failing }),
    ))
}

fn support(a: &Analysis) -> Result<TheoremCheck> {
    let sets = all_multiplicative_sets(a.ring(), a.bounds().oracle)?;
    let mut failing = Vec::new();
    for s in &sets {
        let r = product_support(a.ring(), s)?;
        if !r.ore_agrees || !r.denominator_agrees || r.ass_formula_holds == Some(false) {
            failing.push(json!({ "set": s, "support": r.support }));
        }
    }
    Ok(TheoremCheck::new("product_support", failing.is_empty(), sets.len(), json!(failing)))
}

fn product_profile(a: &Analysis) -> Result<TheoremCheck> {
    let v = product_maxden_check(a.ring().factors().unwrap(), a.bounds())?;
    Ok(TheoremCheck::new("product_max_den", v.verdict, v.conditions.len(), json!(v.witnesses)))
}

fn prime_subfamilies(a: &Analysis) -> Result<TheoremCheck> {
    let ring = a.ring();
    let sp = a.spectrum()?;
    let primes: Vec<ElementSet> = sp.primes.iter().map(|p| p.members).collect();
    if primes.len() > SUBFAMILY_PRIME_CAP {
        let mut c = TheoremCheck::new("prime_subfamilies", true, 0, json!(null));
        c.skipped = Some(format!("{} primes exceed the subfamily cap {SUBFAMILY_PRIME_CAP}", primes.len()));
        return Ok(c);
    }
    let mut min: Vec<ElementSet> = sp.minimal_primes.iter().map(|p| p.members).collect();
    min.sort();
    let mut failing = Vec::new();
    let mut checked = 0;
    for k in 2..=primes.len() {
        for fam in primes.iter().combinations(k) {
            checked += 1;
            let mut sorted: Vec<ElementSet> = fam.iter().map(|x| **x).collect();
            sorted.sort();
            let lhs = sp.semiprime && sorted == min;
            let incomparable = fam
                .iter()
                .tuple_combinations()
                .all(|(x, y): (&&ElementSet, &&ElementSet)| !x.is_subset(y) && !y.is_subset(x));
            let meet = fam.iter().fold(ring.full_set(), |acc, x| acc.intersection(x));
            let rhs = incomparable && fam.iter().all(|x| is_prime_ideal(ring, x)) && meet == ring.zero_set();
            if lhs != rhs {
                failing.push(json!(sorted));
            }
        }
    }
    Ok(TheoremCheck::new("prime_subfamilies", failing.is_empty(), checked, json!(failing)))
}

fn first_consequents(a: &Analysis) -> Result<TheoremCheck> {
    let v = first_criterion(a)?;
    let failing: Vec<&str> = v.consequents.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    Ok(TheoremCheck::new(
        "semisimple_consequents",
        v.verdict && failing.is_empty(),
        v.consequents.len(),
        json!({ "failing": failing }),
    ))
}

fn opposite_ring(a: &Analysis) -> Result<TheoremCheck> {
    let ring = a.ring();
    let opp = Analysis::new(opposite(ring)?, *a.bounds());
    let mine: Vec<ElementSet> = a.profile()?.ass_max.iter().map(|i| i.members).collect();
    let theirs: Vec<ElementSet> = opp.profile()?.ass_max.iter().map(|i| i.members).collect();
    let same_semisimple = opp.class()?.semisimple == a.class()?.semisimple;
    // Identical on commutative rings; otherwise the difference is reported.
    let holds = same_semisimple && (!ring.is_commutative() || mine == theirs);
    Ok(TheoremCheck::new(
        "opposite_ring",
        holds,
        1,
        json!({ "ass_max": mine, "opposite_ass_max": theirs, "asymmetric": mine != theirs }),
    ))
}

fn ll_equivalence(a: &Analysis) -> Result<TheoremCheck> {
    let v = ll_quotient_criterion(a)?;
    let proj = ll_projection(a)?;
    let holds = proj.injective
        && proj.images_maximal
        && proj.ass_correspondence
        && proj.localizations_match
        && (!v.verdict || v.consequents_hold());
    Ok(TheoremCheck::new(
        "ll_quotient_equivalence",
        holds,
        v.conditions.len(),
        json!({ "verdict": v.verdict, "projection": proj }),
    ))
}

fn criteria_agree(a: &Analysis) -> Result<TheoremCheck> {
    let cv = cross_validate(a)?;
    Ok(TheoremCheck::new("criteria_agree", cv.all_agree, cv.verdicts.len(), json!(cv)))
}

type Check = fn(&Analysis) -> Result<TheoremCheck>;

fn run(name: &'static str, f: Check, a: &Analysis) -> Result<TheoremCheck> {
    match f(a) {
        Err(Error::OrderBound { which, order, bound }) => Ok(TheoremCheck {
            name,
            holds: true,
            checked: 0,
            detail: Value::Null,
            skipped: Some(format!("{which} bound {bound} exceeded by order {order}")),
        }),
        other => other,
    }
}

/// Runs the battery; checks above a bound are recorded as skipped.
pub fn verify_theorems(a: &Analysis) -> Result<TheoremReport> {
    let mut list: Vec<(&'static str, Check)> = vec![
        ("largest_quotient_ring", largest_quotient_ring),
        ("core_localizations", cores),
        ("inclusion_matches_ass", inclusion_by_ass),
        ("maximal_ass_values", maximal_ass),
        ("units_in_max_sets", units_in_max_sets),
        ("localization_maximal_iff_max_set", localization_maximal),
        ("nested_ass_joins", joins),
        ("prime_subfamilies", prime_subfamilies),
        ("opposite_ring", opposite_ring),
        ("ll_quotient_equivalence", ll_equivalence),
        ("criteria_agree", criteria_agree),
    ];
    if a.class()?.semisimple {
        list.push(("semisimple_consequents", first_consequents));
    }
    if a.ring().factors().is_some() {
        list.push(("product_support", support));
        list.push(("product_max_den", product_profile));
    }
    let checks = list.into_iter().map(|(n, f)| run(n, f, a)).collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport {
        all_hold: checks.iter().all(|c| c.holds),
        checks,
    })
}

/// Maximal elements of every denominator set found by the oracle.
pub fn oracle_max_den(a: &Analysis) -> Result<Vec<ElementSet>> {
    let all: Vec<ElementSet> = a.denominator_sets()?.iter().map(|r| *r.members()).collect();
    Ok(maximal_sets(&all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Bounds;

    #[test]
    fn battery_on_small_rings() {
        for s in ["Z/4", "Z/6", "F4", "tri(2,F2)", "opp(tri(2,F2))", "prod(F2,F3)", "quot(poly(F2,[0,0,0,1]),[4])"] {
            let a = Analysis::from_spec(s, Bounds::default()).unwrap();
            let r = verify_theorems(&a).unwrap();
            let bad: Vec<_> = r.checks.iter().filter(|c| !c.holds).collect();
            assert!(bad.is_empty(), "{s}: {bad:#?}");
        }
    }

    #[test]
    fn matrix_ring_skips_oracle_checks_gracefully() {
        let a = Analysis::from_spec("mat(2,F2)", Bounds::default()).unwrap();
        let r = verify_theorems(&a).unwrap();
        assert!(r.all_hold);
        assert_eq!(r.check("core_localizations").unwrap().detail["source"], "max_den");
    }

    #[test]
    fn triangular_is_asymmetric() {
        let a = Analysis::from_spec("tri(2,F2)", Bounds::default()).unwrap();
        let r = verify_theorems(&a).unwrap();
        let opp = r.check("opposite_ring").unwrap();
        assert_eq!(opp.detail["ass_max"], json!([[0, 2, 4, 6]]));
        assert_eq!(opp.detail["opposite_ass_max"], json!([[0, 1, 2, 3]]));
    }
}
