use itertools::Itertools;
use serde_json::json;

use crate::analysis::Analysis;
use crate::bitset::{canonical_key, ElementSet};
use crate::error::Result;
use crate::ideals::all_ideals;
use crate::ore::{candidate_set, classify_mult_set, DenominatorSetRecord};

use super::{is_simple, localization_of, Condition, Consequent, CriterionId, CriterionVerdict, REGULAR_ARE_UNITS};

/// Denominator sets whose localization is simple: all candidate sets
/// `π_𝔞⁻¹(units(R/𝔞))` that are denominator sets, in canonical order.
fn simple_candidates(a: &Analysis) -> Result<Vec<DenominatorSetRecord>> {
    let ring = a.ring();
    let mut out: Vec<DenominatorSetRecord> = Vec::new();
    for ideal in all_ideals(ring, a.bounds().profile)?.iter().filter(|i| i.is_proper()) {
        let rec = classify_mult_set(ring, &candidate_set(ring, &ideal.members)?)?;
        if rec.is_left_denominator
            && !out.iter().any(|o| o.members() == rec.members())
            && is_simple(&localization_of(ring, &rec)?.target)?
        {
            out.push(rec);
        }
    }
    out.sort_by_key(|r| canonical_key(r.members()));
    Ok(out)
}

/// Smallest subfamily (then first in lexicographic order) with `∩ ass = 0`.
fn first_cover(ring: &crate::ring::FiniteRing, recs: &[DenominatorSetRecord]) -> Option<Vec<usize>> {
    (1..=recs.len()).find_map(|k| {
        (0..recs.len()).combinations(k).find(|idx| {
            idx.iter().fold(ring.full_set(), |acc, &i| acc.intersection(&recs[i].ass)) == ring.zero_set()
        })
    })
}

/// Finitely many denominator sets `S_i` with simple Artinian localizations
/// and `∩ ass(S_i) = 0`.
///
/// With `sets = None` the family is searched for among the candidate sets.
pub fn fourth_criterion(a: &Analysis, sets: Option<&[ElementSet]>) -> Result<CriterionVerdict> {
    let ring = a.ring();
    let mut notes = vec![REGULAR_ARE_UNITS];
    let (family, conditions) = match sets {
        Some(list) => {
            let mut recs = Vec::new();
            let mut not_den = Vec::new();
            let mut not_simple = Vec::new();
            for s in list {
                let rec = classify_mult_set(ring, s)?;
                if !rec.is_left_denominator {
                    not_den.push(json!({ "set": s, "ore_witness": rec.ore_witness, "reversibility_witness": rec.reversibility_witness }));
                } else if !is_simple(&localization_of(ring, &rec)?.target)? {
                    not_simple.push(json!({ "set": s }));
                }
                recs.push(rec);
            }
            let meet = recs.iter().fold(ring.full_set(), |acc, r| acc.intersection(&r.ass));
            let conditions = vec![
                Condition::new("sets_are_denominator", not_den.is_empty(), json!(not_den)),
                Condition::new("localizations_simple_artinian", not_simple.is_empty(), json!(not_simple)),
                Condition::new("ass_intersection_zero", meet == ring.zero_set(), json!({ "intersection": meet })),
            ];
            (recs, conditions)
        }
        None => {
            notes.push("family chosen as the first covering subfamily of candidate sets");
            let cands = simple_candidates(a)?;
            match first_cover(ring, &cands) {
                Some(idx) => {
                    let recs: Vec<DenominatorSetRecord> = idx.iter().map(|&i| cands[i].clone()).collect();
                    let chosen: Vec<&ElementSet> = recs.iter().map(|r| r.members()).collect();
                    let conditions = vec![
                        Condition::new("sets_are_denominator", true, json!(chosen)),
                        Condition::new("localizations_simple_artinian", true, json!(chosen)),
                        Condition::new("ass_intersection_zero", true, json!({ "intersection": ring.zero_set() })),
                    ];
                    (recs, conditions)
                }
                None => {
                    let meet = cands.iter().fold(ring.full_set(), |acc, r| acc.intersection(&r.ass));
                    let conditions = vec![
                        Condition::new("sets_are_denominator", true, json!(cands.len())),
                        Condition::new("localizations_simple_artinian", true, json!(cands.len())),
                        Condition::new(
                            "ass_intersection_zero",
                            false,
                            json!({ "intersection_over_all_candidates": meet }),
                        ),
                    ];
                    (Vec::new(), conditions)
                }
            }
        }
    };
    let mut v = CriterionVerdict::from_conditions(CriterionId::Fourth, conditions, notes);
    if v.verdict {
        let mut recovered: Vec<ElementSet> = family
            .iter()
            .map(|r| candidate_set(ring, &r.ass))
            .collect::<Result<_>>()?;
        recovered.sort_by_key(canonical_key);
        recovered.dedup();
        let p = a.profile()?;
        v.consequents.push(Consequent::new(
            "max_den_recovered_from_ass",
            recovered == p.max_den_members(),
            json!({ "family": family.iter().map(|r| r.members()).collect::<Vec<_>>(), "recovered": recovered }),
        ));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Bounds;

    fn an(s: &str) -> Analysis {
        Analysis::from_spec(s, Bounds::default()).unwrap()
    }

    #[test]
    fn z6_given_and_searched() {
        let a = an("Z/6");
        let one = fourth_criterion(&a, Some(&[a.ring().set_of([1, 5]).unwrap()])).unwrap();
        assert!(!one.verdict);
        assert!(!one.condition("localizations_simple_artinian").unwrap().holds);
        assert!(one.condition("ass_intersection_zero").unwrap().holds);
        let auto = fourth_criterion(&a, None).unwrap();
        assert!(auto.verdict && auto.consequents_hold());
        assert_eq!(auto.conditions[0].witness, json!([[1, 3, 5], [1, 2, 4, 5]]));
    }

    #[test]
    fn z4_has_no_cover() {
        let v = fourth_criterion(&an("Z/4"), None).unwrap();
        assert!(!v.verdict);
    }
}
