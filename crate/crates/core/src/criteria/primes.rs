use serde_json::json;

use crate::analysis::Analysis;
use crate::bitset::{canonical_key, ElementSet};
use crate::error::{ensure_consistent, Result};
use crate::ore::{denominator_set_for_prime, PrimeSetReport};
use crate::ring::quotient_ring;

use super::first::Diagonal;
use super::{goldie_criterion, localization_of, Condition, Consequent, CriterionId, CriterionVerdict, REGULAR_ARE_UNITS};

fn prime_sets(a: &Analysis) -> Result<Vec<PrimeSetReport>> {
    a.spectrum()?
        .minimal_primes
        .iter()
        .map(|p| denominator_set_for_prime(a.ring(), &p.members))
        .collect()
}

/// Semiprime, finitely many minimal primes, each `S_𝔭` a left denominator
/// set with `ass = 𝔭`, each `S_𝔭⁻¹R` simple Artinian.
pub fn second_criterion(a: &Analysis) -> Result<CriterionVerdict> {
    let sp = a.spectrum()?;
    let reports = prime_sets(a)?;
    let bad = |f: &dyn Fn(&PrimeSetReport) -> bool| -> Vec<serde_json::Value> {
        reports
            .iter()
            .filter(|r| !f(r))
            .map(|r| json!({ "prime": r.prime, "set": r.record.members(), "ass": r.record.ass, "ore_witness": r.record.ore_witness, "reversibility_witness": r.record.reversibility_witness }))
            .collect()
    };
    let not_den = bad(&|r| r.is_denominator);
    let wrong_ass = bad(&|r| r.ass_equals_prime);
    let not_simple = bad(&|r| r.localization_simple == Some(true));
    let conditions = vec![
        Condition::new("semiprime", sp.semiprime, json!({ "prime_radical": sp.prime_radical.members })),
        Condition::new("min_primes_finite", true, json!({ "count": sp.minimal_primes.len() })),
        Condition::new("prime_sets_are_denominator", not_den.is_empty(), json!(not_den)),
        Condition::new("prime_sets_have_ass_prime", wrong_ass.is_empty(), json!(wrong_ass)),
        Condition::new("prime_localizations_simple_artinian", not_simple.is_empty(), json!(not_simple)),
    ];
    let mut v = CriterionVerdict::from_conditions(CriterionId::Second, conditions, vec![REGULAR_ARE_UNITS]);
    if v.verdict {
        let p = a.profile()?;
        let mut want: Vec<ElementSet> = reports.iter().map(|r| *r.record.members()).collect();
        want.sort_by_key(canonical_key);
        want.dedup();
        v.consequents.push(Consequent::new(
            "max_den_sets_are_prime_sets",
            p.max_den_members() == want,
            json!({ "prime_sets": want }),
        ));
        let locs = reports
            .iter()
            .map(|r| localization_of(a.ring(), &r.record))
            .collect::<Result<Vec<_>>>()?;
        let diag = Diagonal::new(a.ring(), locs)?;
        v.consequents.push(Consequent::new(
            "ring_is_product_of_localizations",
            diag.map.is_bijective(&diag.target),
            json!({ "factor_orders": diag.factors.iter().map(|f| f.order()).collect::<Vec<_>>() }),
        ));
    }
    Ok(v)
}

/// Semiprime, finitely many minimal primes, each `R/𝔭` a left Goldie ring.
pub fn third_criterion(a: &Analysis) -> Result<CriterionVerdict> {
    let ring = a.ring();
    let sp = a.spectrum()?;
    let g = a.goldie()?;
    let mut quotients = Vec::new();
    let mut failing = Vec::new();
    for p in &sp.minimal_primes {
        let q = quotient_ring(ring, &p.members)?;
        let sub = Analysis::new(q.ring, *a.bounds());
        let gv = goldie_criterion(&sub)?;
        let entry = json!({ "prime": p.members, "quotient_order": sub.ring().order(), "goldie": gv.verdict });
        if !gv.verdict {
            failing.push(entry.clone());
        }
        quotients.push(entry);
    }
    // Equivalent forms of the finiteness condition on semiprime rings.
    let alternates = json!({
        "min_primes": sp.minimal_primes.len(),
        "annihilator_ideals": sp.annihilator_ideals.len(),
        "acc_annihilator_ideals": true,
        "left_uniform_dimension": g.uniform_dimension.value(),
    });
    if sp.semiprime {
        ensure_consistent!(
            !sp.minimal_primes.is_empty() && !sp.annihilator_ideals.is_empty() && g.uniform_dimension.value().is_some(),
            "finiteness alternates disagree on a semiprime ring"
        );
    }
    let conditions = vec![
        Condition::new("semiprime", sp.semiprime, json!({ "prime_radical": sp.prime_radical.members })),
        Condition::new("min_primes_finite", true, alternates),
        Condition::new(
            "prime_quotients_goldie",
            failing.is_empty(),
            json!({ "failing": failing, "quotients": quotients }),
        ),
    ];
    Ok(CriterionVerdict::from_conditions(CriterionId::Third, conditions, vec![REGULAR_ARE_UNITS]))
}
