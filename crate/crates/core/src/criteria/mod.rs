//! Goldie's theorem and the semisimple-quotient criteria as verdicts with
//! evidence.

mod cross;
mod first;
mod fourth;
mod ll;
mod primes;
mod product;

use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::Analysis;
use crate::error::{ensure_consistent, Result};
use crate::ideals::all_ideals;
use crate::ore::{localize, DenominatorSetRecord, LocalizationPresentation};
use crate::ring::{FiniteRing, RingMap};

pub use cross::{cross_validate, CrossValidation, NonLocalizableReport};
pub use first::first_criterion;
pub use fourth::fourth_criterion;
pub use ll::{ll_projection, ll_quotient_criterion, LlProjection};
pub use primes::{second_criterion, third_criterion};
pub use product::product_maxden_check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionId {
    Goldie,
    First,
    Second,
    Third,
    Fourth,
    LlQuotient,
    Product,
}

impl CriterionId {
    pub const ALL: [CriterionId; 7] = [
        CriterionId::Goldie,
        CriterionId::First,
        CriterionId::Second,
        CriterionId::Third,
        CriterionId::Fourth,
        CriterionId::LlQuotient,
        CriterionId::Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CriterionId::Goldie => "goldie",
            CriterionId::First => "first",
            CriterionId::Second => "second",
            CriterionId::Third => "third",
            CriterionId::Fourth => "fourth",
            CriterionId::LlQuotient => "ll_quotient",
            CriterionId::Product => "product",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    pub witness: Value,
}

impl Condition {
    pub fn new(name: impl Into<String>, holds: bool, witness: Value) -> Self {
        Condition {
            name: name.into(),
            holds,
            witness,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Consequent {
    pub name: String,
    pub holds: bool,
    pub detail: Value,
}

impl Consequent {
    pub fn new(name: impl Into<String>, holds: bool, detail: Value) -> Self {
        Consequent {
            name: name.into(),
            holds,
            detail,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionVerdict {
    pub criterion: CriterionId,
    pub verdict: bool,
    pub conditions: Vec<Condition>,
    pub consequents: Vec<Consequent>,
    /// Witnesses of the failing conditions, in order.
    pub witnesses: Vec<Value>,
    pub scale_notes: Vec<&'static str>,
}

impl CriterionVerdict {
    pub fn from_conditions(criterion: CriterionId, conditions: Vec<Condition>, scale_notes: Vec<&'static str>) -> Self {
        let verdict = conditions.iter().all(|c| c.holds);
        let witnesses = conditions
            .iter()
            .filter(|c| !c.holds)
            .map(|c| json!({ "condition": c.name, "witness": c.witness }))
            .collect();
        CriterionVerdict {
            criterion,
            verdict,
            conditions,
            consequents: Vec::new(),
            witnesses,
            scale_notes,
        }
    }

    pub fn consequents_hold(&self) -> bool {
        self.consequents.iter().all(|c| c.holds)
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn consequent(&self, name: &str) -> Option<&Consequent> {
        self.consequents.iter().find(|c| c.name == name)
    }
}

pub(crate) const REGULAR_ARE_UNITS: &str = "regular elements are units at finite order, so the classical left quotient ring is R itself";

/// Exactly two ideals. Finite rings are Artinian, so this is "simple left Artinian".
pub(crate) fn is_simple(ring: &FiniteRing) -> Result<bool> {
    Ok(all_ideals(ring, usize::MAX)?.len() == 2)
}

pub(crate) fn localization_of(ring: &FiniteRing, rec: &DenominatorSetRecord) -> Result<LocalizationPresentation> {
    localize(ring, rec)
}

/// Whether `t ↦ f(rep(t))` is a ring isomorphism from `loc.target` onto
/// `codomain`, where `rep(t)` is the smallest preimage of `t`.
pub(crate) fn induced_bijection(
    loc: &LocalizationPresentation,
    codomain: &FiniteRing,
    f: impl Fn(usize) -> usize,
) -> bool {
    let mut rep = vec![usize::MAX; loc.target.order()];
    for x in loc.source.elements().rev() {
        rep[loc.projection.apply(x)] = x;
    }
    let image: Vec<usize> = rep.iter().map(|&x| f(x)).collect();
    match RingMap::new(&loc.target, codomain, image) {
        Ok(m) => m.is_bijective(codomain),
        Err(_) => false,
    }
}

/// Goldie's theorem: semiprime, a.c.c. on left annihilators, no infinite
/// direct sums of left ideals.
pub fn goldie_criterion(a: &Analysis) -> Result<CriterionVerdict> {
    let sp = a.spectrum()?;
    let g = a.goldie()?;
    let conditions = vec![
        Condition::new("semiprime", sp.semiprime, json!({ "prime_radical": sp.prime_radical.members })),
        Condition::new(
            "acc_left_annihilators",
            g.acc_left_annihilators,
            json!({ "left_annihilators": g.left_annihilators.len(), "longest_chain": g.longest_annihilator_chain }),
        ),
        Condition::new(
            "no_infinite_direct_sums",
            g.no_infinite_direct_sums,
            json!({ "left_uniform_dimension": g.uniform_dimension.value() }),
        ),
    ];
    let v = CriterionVerdict::from_conditions(
        CriterionId::Goldie,
        conditions,
        vec![
            REGULAR_ARE_UNITS,
            "the left annihilator list is finite, so the ascending chain condition holds",
        ],
    );
    ensure_consistent!(v.verdict == g.verdict, "Goldie verdict differs from the witness report");
    ensure_consistent!(v.verdict == a.class()?.semisimple, "Goldie verdict differs from semisimplicity");
    Ok(v)
}

/// Runs one criterion on an analysis; `Product` needs declared factors.
pub fn run_criterion(a: &Analysis, id: CriterionId) -> Result<Option<CriterionVerdict>> {
    Ok(Some(match id {
        CriterionId::Goldie => goldie_criterion(a)?,
        CriterionId::First => first_criterion(a)?,
        CriterionId::Second => second_criterion(a)?,
        CriterionId::Third => third_criterion(a)?,
        CriterionId::Fourth => fourth_criterion(a, None)?,
        CriterionId::LlQuotient => ll_quotient_criterion(a)?,
        CriterionId::Product => match a.ring().factors() {
            Some(fs) => product_maxden_check(fs, a.bounds())?,
            None => return Ok(None),
        },
    }))
}
