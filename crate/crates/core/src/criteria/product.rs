use serde_json::json;

use crate::bitset::{canonical_key, ElementSet};
use crate::config::Bounds;
use crate::error::Result;
use crate::ore::{classify_mult_set, localization_profile};
use crate::ring::{product, product_coords, product_index, FiniteRing};

use super::{induced_bijection, localization_of, Condition, CriterionId, CriterionVerdict};

/// `maxDen(R_1 × ... × R_n)` against the factors: each maximal set of
/// `R_i` embeds as `R_1 × ... × S_i × ... × R_n`.
pub fn product_maxden_check(factors: &[FiniteRing], bounds: &Bounds) -> Result<CriterionVerdict> {
    let ring = product(factors)?;
    let n = factors.len();
    let coords: Vec<Vec<usize>> = ring.elements().map(|x| product_coords(factors, x)).collect();
    let rp = localization_profile(&ring, bounds)?;
    let slot = |i: usize, s: &ElementSet| ElementSet::from_predicate(ring.order(), |x| s.contains(coords[x][i]));

    let mut embedded = Vec::new();
    let mut loc_bad = Vec::new();
    let mut ass_bad = Vec::new();
    let mut core_bad = Vec::new();
    let mut expected_total = 0;
    for (i, f) in factors.iter().enumerate() {
        let fp = localization_profile(f, bounds)?;
        expected_total += fp.max_den_sets.len();
        for rec in &fp.max_den_sets {
            let e = slot(i, rec.members());
            let erec = classify_mult_set(&ring, &e)?;
            if erec.ass != slot(i, &rec.ass) {
                ass_bad.push(json!({ "factor": i + 1, "set": rec.members(), "ass": erec.ass }));
            }
            let core = ElementSet::from_predicate(ring.order(), |x| {
                (0..n).all(|j| if j == i { rec.core.contains(coords[x][j]) } else { coords[x][j] == factors[j].zero() })
            });
            if erec.core != core {
                core_bad.push(json!({ "factor": i + 1, "set": rec.members(), "core": erec.core, "expected": core }));
            }
            let ok = erec.is_left_denominator && {
                let floc = localization_of(f, rec)?;
                let eloc = localization_of(&ring, &erec)?;
                induced_bijection(&eloc, &floc.target, |x| floc.projection.apply(coords[x][i]))
            };
            if !ok {
                loc_bad.push(json!({ "factor": i + 1, "set": rec.members() }));
            }
            embedded.push(e);
        }
    }
    let mut sorted = embedded.clone();
    sorted.sort_by_key(canonical_key);
    sorted.dedup();
    let bijection = sorted == rp.max_den_members() && sorted.len() == expected_total;

    let units: Vec<usize> = (0..n)
        .map(|j| {
            let c: Vec<usize> = (0..n).map(|k| if k == j { factors[k].one() } else { factors[k].zero() }).collect();
            product_index(factors, &c)
        })
        .collect();
    let counts: Vec<usize> = rp
        .max_den_sets
        .iter()
        .map(|r| units.iter().filter(|&&e| r.members().contains(e)).count())
        .collect();

    let conditions = vec![
        Condition::new(
            "max_den_bijection",
            bijection,
            json!({ "embedded": embedded, "product_max_den": rp.max_den_members() }),
        ),
        Condition::new("localizations_match", loc_bad.is_empty(), json!(loc_bad)),
        Condition::new("ass_formula", ass_bad.is_empty(), json!(ass_bad)),
        Condition::new("core_formula", core_bad.is_empty(), json!(core_bad)),
        Condition::new(
            "one_idempotent_per_set",
            counts.iter().all(|&c| c == 1),
            json!({ "central_idempotents": units, "counts": counts }),
        ),
    ];
    Ok(CriterionVerdict::from_conditions(CriterionId::Product, conditions, Vec::new()))
}
