use serde::Serialize;
use serde_json::json;

use crate::analysis::Analysis;
use crate::bitset::{canonical_key, ElementSet};
use crate::error::{ensure_consistent, Result};
use crate::ideals::minimal_primes_over;
use crate::ore::{classify_mult_set, denominator_set_for_prime};
use crate::ring::{quotient_ring, QuotientRing};

use super::{
    goldie_criterion, induced_bijection, is_simple, localization_of, Condition, Consequent, CriterionId,
    CriterionVerdict, REGULAR_ARE_UNITS,
};

/// How `maxDen(R)` maps into `maxDen(R/ll)` under the projection.
#[derive(Debug, Clone, Serialize)]
pub struct LlProjection {
    pub ll: ElementSet,
    /// `π(S)` for each maximal `S`, in the order of `maxDen(R)`.
    pub images: Vec<ElementSet>,
    pub injective: bool,
    /// Every `π(S)` is a maximal denominator set of `R/ll`.
    pub images_maximal: bool,
    /// `ass(π(S)) = π(ass(S))` for every maximal `S`.
    pub ass_correspondence: bool,
    /// `S⁻¹R ≅ π(S)⁻¹(R/ll)` via the induced map.
    pub localizations_match: bool,
    pub surjective: bool,
}

fn projection_with(a: &Analysis, q: &QuotientRing, qa: &Analysis) -> Result<LlProjection> {
    let p = a.profile()?;
    let qp = qa.profile()?;
    let qmax = qp.max_den_members();
    let mut images = Vec::new();
    let mut images_maximal = true;
    let mut ass_correspondence = true;
    let mut localizations_match = true;
    for rec in &p.max_den_sets {
        let img = q.project(rec.members());
        images_maximal &= qmax.contains(&img);
        let qrec = classify_mult_set(&q.ring, &img)?;
        ass_correspondence &= qrec.is_left_denominator && qrec.ass == q.project(&rec.ass);
        if qrec.is_left_denominator {
            let qloc = localization_of(&q.ring, &qrec)?;
            let loc = localization_of(a.ring(), rec)?;
            localizations_match &= induced_bijection(&loc, &qloc.target, |x| qloc.projection.apply(q.projection.apply(x)));
        } else {
            localizations_match = false;
        }
        images.push(img);
    }
    let mut sorted = images.clone();
    sorted.sort_by_key(canonical_key);
    sorted.dedup();
    Ok(LlProjection {
        ll: p.ll.members,
        injective: sorted.len() == images.len(),
        surjective: sorted == qmax,
        images,
        images_maximal,
        ass_correspondence,
        localizations_match,
    })
}

/// Projection data for `R → R/ll`; holds on every ring.
pub fn ll_projection(a: &Analysis) -> Result<LlProjection> {
    let q = quotient_ring(a.ring(), &a.profile()?.ll.members)?;
    let qa = Analysis::new(q.ring.clone(), *a.bounds());
    projection_with(a, &q, &qa)
}

/// The four equivalent statements about `R/ll`, checked separately and
/// required to agree.
pub fn ll_quotient_criterion(a: &Analysis) -> Result<CriterionVerdict> {
    let ring = a.ring();
    let sp = a.spectrum()?;
    let p = a.profile()?;
    let ll = p.ll.members;
    let q = quotient_ring(ring, &ll)?;
    let qa = Analysis::new(q.ring.clone(), *a.bounds());

    let quotient_goldie = goldie_criterion(&qa)?.verdict;

    let mut non_simple = Vec::new();
    for rec in &p.max_den_sets {
        if !is_simple(&localization_of(ring, rec)?.target)? {
            non_simple.push(*rec.members());
        }
    }

    let min_over = minimal_primes_over(sp, &ll);
    let meet = min_over.iter().fold(ring.full_set(), |acc, m| acc.intersection(&m.members));
    let mut prime_rows = Vec::new();
    let (mut den, mut simple, mut kills, mut goldie) = (true, true, true, true);
    for m in &min_over {
        let r = denominator_set_for_prime(ring, &m.members)?;
        den &= r.in_den_for_prime();
        simple &= r.localization_simple == Some(true);
        let unkilled: Vec<usize> = ll
            .iter()
            .filter(|&l| !r.record.members().iter().any(|s| ring.mul(s, l) == ring.zero()))
            .collect();
        kills &= unkilled.is_empty();
        let qm = quotient_ring(ring, &m.members)?;
        let g = goldie_criterion(&Analysis::new(qm.ring, *a.bounds()))?.verdict;
        goldie &= g;
        prime_rows.push(json!({
            "prime": m.members,
            "set": r.record.members(),
            "in_den": r.in_den_for_prime(),
            "localization_simple": r.localization_simple,
            "unkilled_ll_elements": unkilled,
            "quotient_goldie": g,
        }));
    }
    let s1 = quotient_goldie;
    let s2 = non_simple.is_empty();
    let s3 = meet == ll && den && simple && kills;
    let s4 = meet == ll && goldie;
    ensure_consistent!(
        s1 == s2 && s2 == s3 && s3 == s4,
        "statements about R/ll disagree: {s1} {s2} {s3} {s4}"
    );
    let conditions = vec![
        Condition::new("quotient_is_goldie", s1, json!({ "ll": ll, "quotient_order": q.ring.order() })),
        Condition::new("max_localizations_simple_artinian", s2, json!({ "non_simple": non_simple })),
        Condition::new(
            "prime_sets_over_ll",
            s3,
            json!({ "intersection_is_ll": meet == ll, "primes": prime_rows }),
        ),
        Condition::new("prime_quotients_over_ll_goldie", s4, json!({ "intersection_is_ll": meet == ll })),
    ];
    let mut v = CriterionVerdict::from_conditions(CriterionId::LlQuotient, conditions, vec![REGULAR_ARE_UNITS]);
    if v.verdict {
        let proj = projection_with(a, &q, &qa)?;
        v.consequents.push(Consequent::new(
            "projection_is_bijection_of_max_sets",
            proj.injective && proj.surjective && proj.images_maximal,
            json!({ "images": proj.images }),
        ));
        let mut prime_sets: Vec<ElementSet> = min_over
            .iter()
            .map(|m| denominator_set_for_prime(ring, &m.members).map(|r| *r.record.members()))
            .collect::<Result<_>>()?;
        prime_sets.sort_by_key(canonical_key);
        prime_sets.dedup();
        v.consequents.push(Consequent::new(
            "max_den_sets_are_prime_sets_over_ll",
            prime_sets == p.max_den_members(),
            json!({ "prime_sets": prime_sets }),
        ));
        v.consequents.push(Consequent::new("ass_correspondence", proj.ass_correspondence, json!(null)));
        v.consequents.push(Consequent::new("localizations_factor_through_quotient", proj.localizations_match, json!(null)));
        let mut asses: Vec<ElementSet> = p.max_den_sets.iter().map(|r| r.ass).collect();
        let mut mins: Vec<ElementSet> = min_over.iter().map(|m| m.members).collect();
        asses.sort();
        mins.sort();
        let distinct = {
            let mut d = asses.clone();
            d.dedup();
            d.len() == asses.len()
        };
        v.consequents.push(Consequent::new(
            "ass_is_bijection_onto_min_primes_over_ll",
            distinct && asses == mins,
            json!({ "min_primes_over_ll": mins }),
        ));
    }
    Ok(v)
}
