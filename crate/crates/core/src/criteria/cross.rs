use serde::Serialize;

use crate::analysis::Analysis;
use crate::bitset::ElementSet;
use crate::error::{ensure_consistent, Result};
use crate::ring::quotient_ring;

use super::{first_criterion, fourth_criterion, goldie_criterion, second_criterion, third_criterion, CriterionId};

/// Non-localizable elements of a semisimple ring.
#[derive(Debug, Clone, Serialize)]
pub struct NonLocalizableReport {
    pub non_localizable: ElementSet,
    /// `{r : π_𝔭(r) is not regular in R/𝔭 for every minimal prime 𝔭}`.
    pub predicted: ElementSet,
    pub formula_holds: bool,
    pub two_sided_closed: bool,
    pub additively_closed: bool,
    pub is_zero: bool,
    /// Every `R/𝔭`, `𝔭` minimal, is a division ring.
    pub prime_quotients_division: bool,
    /// additively closed ⇔ zero ⇔ all prime quotients are division rings.
    pub equivalence_holds: bool,
    pub domain: bool,
    /// The literal "zero iff R is a domain" reading; reported, not enforced.
    pub domain_clause_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossValidation {
    pub semisimple: bool,
    pub verdicts: Vec<(CriterionId, bool)>,
    pub all_agree: bool,
    pub ll_zero: Option<bool>,
    pub regular_is_intersection: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_localizable: Option<NonLocalizableReport>,
}

fn non_localizable_report(a: &Analysis) -> Result<NonLocalizableReport> {
    let ring = a.ring();
    let p = a.profile()?;
    let sp = a.spectrum()?;
    let mut predicted = ring.full_set();
    let mut division = true;
    for m in &sp.minimal_primes {
        let q = quotient_ring(ring, &m.members)?;
        division &= q.ring.units().len() + 1 == q.ring.order();
        predicted = predicted.difference(&q.lift(&q.ring.regular_elements()));
    }
    let nl = p.non_localizable;
    let full = ring.full_set();
    let two_sided = ring.product_set(&ring.product_set(&full, &nl), &full).is_subset(&nl);
    let additive = ring.sumset(&nl, &nl).is_subset(&nl);
    let is_zero = nl == ring.zero_set();
    let domain = ring.units().len() + 1 == ring.order();
    Ok(NonLocalizableReport {
        non_localizable: nl,
        predicted,
        formula_holds: predicted == nl,
        two_sided_closed: two_sided,
        additively_closed: additive,
        is_zero,
        prime_quotients_division: division,
        equivalence_holds: additive == is_zero && is_zero == division,
        domain,
        domain_clause_holds: is_zero == domain,
    })
}

/// Runs Goldie and the four criteria; all must match semisimplicity.
pub fn cross_validate(a: &Analysis) -> Result<CrossValidation> {
    let semisimple = a.class()?.semisimple;
    let verdicts = vec![
        (CriterionId::Goldie, goldie_criterion(a)?.verdict),
        (CriterionId::First, first_criterion(a)?.verdict),
        (CriterionId::Second, second_criterion(a)?.verdict),
        (CriterionId::Third, third_criterion(a)?.verdict),
        (CriterionId::Fourth, fourth_criterion(a, None)?.verdict),
    ];
    let all_agree = verdicts.iter().all(|&(_, v)| v == semisimple);
    ensure_consistent!(all_agree, "criteria disagree with semisimplicity {semisimple}: {verdicts:?}");
    let (mut ll_zero, mut regular_is_intersection, mut non_localizable) = (None, None, None);
    if semisimple {
        let p = a.profile()?;
        let lz = p.ll.is_zero();
        let ri = a.classes()?.regular == p.completely_localizable;
        let nl = non_localizable_report(a)?;
        ensure_consistent!(lz && ri, "semisimple ring with ll zero {lz}, regular = intersection {ri}");
        ensure_consistent!(
            nl.formula_holds && nl.two_sided_closed && nl.equivalence_holds,
            "non-localizable set checks failed: {nl:?}"
        );
        ll_zero = Some(lz);
        regular_is_intersection = Some(ri);
        non_localizable = Some(nl);
    }
    Ok(CrossValidation {
        semisimple,
        verdicts,
        all_agree,
        ll_zero,
        regular_is_intersection,
        non_localizable,
    })
}
