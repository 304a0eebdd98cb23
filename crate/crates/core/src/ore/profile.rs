use serde::Serialize;

use crate::bitset::{canonical_key, ElementSet};
use crate::config::Bounds;
use crate::error::{ensure_consistent, Error, Result};
use crate::ideals::{all_ideals, is_prime_ideal, Ideal};
use crate::ring::{product_coords, quotient_ring, FiniteRing};

use super::{all_denominator_sets, classify_mult_set, localize, maximal_sets, DenominatorSetRecord, LocalizationPresentation};

const COMPLETENESS: &str = "a maximal denominator set S with ass(S) = a is the preimage of S0(R/a), \
and S0(R/a) is the unit group at finite order, so every maximal set is a candidate";

/// `π_𝔞⁻¹(units(R/𝔞))` for a proper ideal `𝔞`.
pub fn candidate_set(ring: &FiniteRing, ideal: &ElementSet) -> Result<ElementSet> {
    let q = quotient_ring(ring, ideal)?;
    Ok(q.lift(&q.ring.units()))
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleCheck {
    pub denominator_set_count: usize,
    pub maximal: Vec<ElementSet>,
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalizationProfile {
    pub max_den_sets: Vec<DenominatorSetRecord>,
    pub ass_max: Vec<Ideal>,
    pub ll: Ideal,
    pub localizable: ElementSet,
    pub non_localizable: ElementSet,
    pub completely_localizable: ElementSet,
    /// Largest regular left Ore set: the unit group.
    pub s0: ElementSet,
    pub ql: LocalizationPresentation,
    /// Ideals `𝔞` whose candidate is a denominator set with `ass = 𝔞`.
    pub kept_candidates: Vec<ElementSet>,
    pub completeness: &'static str,
    pub oracle_checked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
    /// Set when no oracle ran: `Ass_l` is certified from candidates only.
    pub candidate_sweep_only: bool,
}

impl LocalizationProfile {
    pub fn max_den_members(&self) -> Vec<ElementSet> {
        self.max_den_sets.iter().map(|r| *r.members()).collect()
    }
}

pub fn localization_profile(ring: &FiniteRing, bounds: &Bounds) -> Result<LocalizationProfile> {
    let ideals = all_ideals(ring, bounds.profile)?;
    let mut kept: Vec<DenominatorSetRecord> = Vec::new();
    let mut kept_candidates = Vec::new();
    for ideal in ideals.iter().filter(|i| i.is_proper()) {
        let t = candidate_set(ring, &ideal.members)?;
        let rec = classify_mult_set(ring, &t)?;
        if rec.is_left_denominator && rec.ass == ideal.members {
            kept_candidates.push(ideal.members);
            kept.push(rec);
        }
    }
    let by_set = maximal_sets(&kept.iter().map(|r| *r.members()).collect::<Vec<_>>());
    let by_ass: Vec<ElementSet> = {
        let mut v: Vec<ElementSet> = kept
            .iter()
            .filter(|r| !kept.iter().any(|o| o.ass != r.ass && r.ass.is_subset(&o.ass)))
            .map(|r| *r.members())
            .collect();
        v.sort_by_key(canonical_key);
        v
    };
    ensure_consistent!(by_set == by_ass, "maximal by inclusion {by_set:?} differs from maximal by ass {by_ass:?}");
    ensure_consistent!(!by_set.is_empty(), "no maximal denominator set found");
    let mut max_den_sets: Vec<DenominatorSetRecord> = by_set
        .iter()
        .map(|s| kept.iter().find(|r| r.members() == s).cloned().unwrap())
        .collect();
    max_den_sets.sort_by_key(|r| canonical_key(r.members()));

    for a in &max_den_sets {
        for b in &max_den_sets {
            ensure_consistent!(a == b || !a.ass.is_subset(&b.ass), "maximal ass values {} and {} are comparable", a.ass, b.ass);
        }
    }
    let full = ring.full_set();
    let ll_set = max_den_sets.iter().fold(full, |acc, r| acc.intersection(&r.ass));
    let localizable = max_den_sets.iter().fold(ring.empty_set(), |acc, r| acc.union(r.members()));
    let completely_localizable = max_den_sets.iter().fold(full, |acc, r| acc.intersection(r.members()));

    let classes = ring.classify_elements()?;
    let s0 = classes.units;
    let s0_rec = classify_mult_set(ring, &s0)?;
    ensure_consistent!(s0_rec.is_left_denominator && s0_rec.ass == ring.zero_set(), "units are not a denominator set with zero ass");
    let ql = localize(ring, &s0_rec)?;
    ensure_consistent!(ql.target.tables_equal(ring), "Q_l(R) differs from R");

    let oracle = if ring.order() <= bounds.oracle {
        let all = all_denominator_sets(ring, bounds.oracle)?;
        let maximal = maximal_sets(&all.iter().map(|r| *r.members()).collect::<Vec<_>>());
        let agrees = maximal == by_set;
        ensure_consistent!(agrees, "candidate maxDen {by_set:?} differs from oracle {maximal:?}");
        Some(OracleCheck {
            denominator_set_count: all.len(),
            maximal,
            agrees,
        })
    } else {
        None
    };
    let mut ass_max: Vec<ElementSet> = max_den_sets.iter().map(|r| r.ass).collect();
    ass_max.sort_by_key(canonical_key);
    Ok(LocalizationProfile {
        ass_max: ass_max.into_iter().map(|a| Ideal::new(ring, a)).collect::<Result<_>>()?,
        ll: Ideal::new(ring, ll_set)?,
        non_localizable: localizable.complement(),
        localizable,
        completely_localizable,
        s0,
        ql,
        max_den_sets,
        kept_candidates,
        completeness: COMPLETENESS,
        oracle_checked: oracle.is_some(),
        candidate_sweep_only: oracle.is_none(),
        oracle,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct MaximalityReport {
    pub ql_equals_ring: bool,
    pub ass_l_is_zero: bool,
    /// Denominator sets with nonzero `ass`.
    pub violating: Vec<ElementSet>,
    pub exhaustive: bool,
    pub verdict: bool,
}

/// `Q_l(A) = A` and every denominator set of `A` has zero `ass`.
///
/// Above the oracle bound only candidate sets are examined; since a
/// nonzero `ass` value always sits below a maximal one, this is still
/// decisive, but the report is flagged non-exhaustive.
pub fn is_localization_maximal(ring: &FiniteRing, bounds: &Bounds) -> Result<MaximalityReport> {
    let units = classify_mult_set(ring, &ring.units())?;
    let ql_equals_ring = localize(ring, &units)?.target.tables_equal(ring);
    let exhaustive = ring.order() <= bounds.oracle;
    let violating: Vec<ElementSet> = if exhaustive {
        all_denominator_sets(ring, bounds.oracle)?
            .iter()
            .filter(|r| r.ass != ring.zero_set())
            .map(|r| *r.members())
            .collect()
    } else {
        localization_profile(ring, bounds)?
            .max_den_sets
            .iter()
            .filter(|r| r.ass != ring.zero_set())
            .map(|r| *r.members())
            .collect()
    };
    let ass_l_is_zero = violating.is_empty();
    Ok(MaximalityReport {
        ql_equals_ring,
        ass_l_is_zero,
        violating,
        exhaustive,
        verdict: ql_equals_ring && ass_l_is_zero,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimeSetReport {
    pub prime: ElementSet,
    pub record: DenominatorSetRecord,
    pub is_denominator: bool,
    pub ass_equals_prime: bool,
    /// `S_𝔭⁻¹R` has exactly two ideals; only evaluated for denominator sets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub localization_simple: Option<bool>,
}

impl PrimeSetReport {
    pub fn in_den_for_prime(&self) -> bool {
        self.is_denominator && self.ass_equals_prime
    }
}

/// `S_𝔭 = π_𝔭⁻¹(regular elements of R/𝔭)`, classified.
pub fn denominator_set_for_prime(ring: &FiniteRing, prime: &ElementSet) -> Result<PrimeSetReport> {
    if !is_prime_ideal(ring, prime) {
        return Err(Error::NotPrime);
    }
    let q = quotient_ring(ring, prime)?;
    let set = q.lift(&q.ring.regular_elements());
    let record = classify_mult_set(ring, &set)?;
    let localization_simple = if record.is_left_denominator {
        let target = localize(ring, &record)?.target;
        Some(all_ideals(&target, usize::MAX)?.len() == 2)
    } else {
        None
    };
    Ok(PrimeSetReport {
        prime: *prime,
        is_denominator: record.is_left_denominator,
        ass_equals_prime: record.ass == *prime,
        record,
        localization_simple,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorSupport {
    pub projection: ElementSet,
    pub contains_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub record: Option<DenominatorSetRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SupportReport {
    pub factors: Vec<FactorSupport>,
    /// Factor positions (from 1) where the projection is a left Ore set.
    pub support: Vec<usize>,
    pub record: DenominatorSetRecord,
    pub predicted_ore: bool,
    pub predicted_denominator: bool,
    pub ore_agrees: bool,
    pub denominator_agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_ass: Option<ElementSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ass_formula_holds: Option<bool>,
}

/// Factorwise analysis of a multiplicative set in a declared product.
pub fn product_support(ring: &FiniteRing, members: &ElementSet) -> Result<SupportReport> {
    let factors = ring.factors().ok_or(Error::NotAProduct)?;
    let record = classify_mult_set(ring, members)?;
    let coords: Vec<Vec<usize>> = ring.elements().map(|x| product_coords(factors, x)).collect();
    let mut parts = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let projection = ElementSet::from_elements(f.order(), members.iter().map(|x| coords[x][i]));
        let contains_zero = projection.contains(f.zero());
        let rec = if contains_zero {
            None
        } else {
            Some(classify_mult_set(f, &projection)?)
        };
        parts.push(FactorSupport {
            projection,
            contains_zero,
            record: rec,
        });
    }
    let support: Vec<usize> = parts
        .iter()
        .enumerate()
        .filter(|(_, p)| p.record.as_ref().is_some_and(|r| r.is_left_ore))
        .map(|(i, _)| i + 1)
        .collect();
    let each = |f: &dyn Fn(&DenominatorSetRecord) -> bool| {
        parts.iter().all(|p| p.contains_zero || f(p.record.as_ref().unwrap()))
            && parts.iter().any(|p| p.record.as_ref().is_some_and(f))
    };
    let predicted_ore = each(&|r| r.is_left_ore);
    let predicted_denominator = each(&|r| r.is_left_denominator);
    let (predicted_ass, ass_formula_holds) = if record.is_left_ore {
        let pred = ElementSet::from_predicate(ring.order(), |x| {
            parts.iter().enumerate().all(|(i, p)| match &p.record {
                Some(r) if r.is_left_ore => r.ass.contains(coords[x][i]),
                _ => true,
            })
        });
        (Some(pred), Some(pred == record.ass))
    } else {
        (None, None)
    };
    Ok(SupportReport {
        factors: parts,
        support,
        ore_agrees: predicted_ore == record.is_left_ore,
        denominator_agrees: predicted_denominator == record.is_left_denominator,
        record,
        predicted_ore,
        predicted_denominator,
        predicted_ass,
        ass_formula_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build_ring;

    fn ring(s: &str) -> FiniteRing {
        build_ring(s, &Bounds::default()).unwrap()
    }

    fn members(p: &LocalizationProfile) -> Vec<Vec<usize>> {
        p.max_den_sets.iter().map(|r| r.members().to_vec()).collect()
    }

    #[test]
    fn z6_profile() {
        let r = ring("Z/6");
        let p = localization_profile(&r, &Bounds::default()).unwrap();
        assert_eq!(members(&p), vec![vec![1, 3, 5], vec![1, 2, 4, 5]]);
        assert!(p.ll.is_zero());
        assert_eq!(p.completely_localizable.to_vec(), vec![1, 5]);
        assert_eq!(p.non_localizable.to_vec(), vec![0]);
        assert!(p.oracle_checked);
    }

    #[test]
    fn triangular_profile() {
        let r = ring("tri(2,F2)");
        let p = localization_profile(&r, &Bounds::default()).unwrap();
        assert_eq!(members(&p), vec![vec![1, 3, 5, 7]]);
        assert_eq!(p.ll.members.to_vec(), vec![0, 2, 4, 6]);
        assert_eq!(p.non_localizable.to_vec(), vec![0, 2, 4, 6]);
    }

    #[test]
    fn matrix_profile_without_oracle() {
        let r = ring("mat(2,F2)");
        let p = localization_profile(&r, &Bounds::default()).unwrap();
        assert_eq!(p.max_den_sets.len(), 1);
        assert_eq!(p.max_den_sets[0].members().len(), 6);
        assert!(p.ll.is_zero() && p.candidate_sweep_only);
    }

    #[test]
    fn maximality() {
        let b = Bounds::default();
        assert!(is_localization_maximal(&ring("F4"), &b).unwrap().verdict);
        let m = is_localization_maximal(&ring("mat(2,F2)"), &b).unwrap();
        assert!(m.verdict && !m.exhaustive);
        let z6 = is_localization_maximal(&ring("Z/6"), &b).unwrap();
        assert!(!z6.verdict);
        assert!(z6.violating.contains(&ElementSet::from_elements(6, [1, 3, 5])));
    }

    #[test]
    fn prime_sets() {
        let z6 = ring("Z/6");
        let p = denominator_set_for_prime(&z6, &z6.set_of([0, 3]).unwrap()).unwrap();
        assert_eq!(p.record.members().to_vec(), vec![1, 2, 4, 5]);
        assert!(p.in_den_for_prime());
        let z4 = ring("Z/4");
        let p = denominator_set_for_prime(&z4, &z4.set_of([0, 2]).unwrap()).unwrap();
        assert_eq!(p.record.members().to_vec(), vec![1, 3]);
        assert!(p.is_denominator && !p.ass_equals_prime);
        let t = ring("tri(2,F2)");
        let p = denominator_set_for_prime(&t, &t.set_of([0, 1, 2, 3]).unwrap()).unwrap();
        assert_eq!(p.record.members().to_vec(), vec![4, 5, 6, 7]);
        assert!(!p.record.is_left_ore);
        assert!(matches!(denominator_set_for_prime(&z6, &z6.zero_set()), Err(Error::NotPrime)));
    }

    #[test]
    fn support_examples() {
        // prod(F2,F3): index = 3a + b.
        let r = ring("prod(F2,F3)");
        let s = product_support(&r, &r.set_of([4, 5]).unwrap()).unwrap();
        assert_eq!(s.support, vec![1, 2]);
        assert!(s.record.is_left_denominator && s.record.ass == r.zero_set());
        let s = product_support(&r, &r.set_of([4, 1]).unwrap()).unwrap();
        assert_eq!(s.support, vec![2]);
        assert_eq!(s.record.ass.to_vec(), vec![0, 3]);
        assert!(s.ore_agrees && s.denominator_agrees && s.ass_formula_holds == Some(true));
        assert!(matches!(product_support(&ring("Z/6"), &ElementSet::from_elements(6, [1])), Err(Error::NotAProduct)));
    }
}
