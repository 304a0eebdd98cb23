//! One structured report per ring.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::bitset::ElementSet;
use crate::config::Bounds;
use crate::criteria::{cross_validate, run_criterion, CriterionId, CriterionVerdict, CrossValidation};
use crate::error::{Error, Result};
use crate::ideals::{GoldieReport, RingClass, SpectrumProfile};
use crate::ore::{is_localization_maximal, DenominatorSetRecord, MaximalityReport, OracleCheck};
use crate::ring::{ElementClasses, FiniteRing};
use crate::theorems::{verify_theorems, TheoremReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Classify,
    Spectrum,
    Profile,
    Criteria,
    Theorems,
}

impl Phase {
    pub const ALL: [Phase; 5] = [Phase::Classify, Phase::Spectrum, Phase::Profile, Phase::Criteria, Phase::Theorems];

    pub fn name(self) -> &'static str {
        match self {
            Phase::Classify => "classify",
            Phase::Spectrum => "spectrum",
            Phase::Profile => "profile",
            Phase::Criteria => "criteria",
            Phase::Theorems => "theorems",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.name() == s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RingIdentity {
    pub name: String,
    pub order: usize,
    pub provenance: String,
    pub content_hash: String,
    pub characteristic: usize,
    pub commutative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<String>>,
}

impl RingIdentity {
    pub fn of(ring: &FiniteRing) -> Self {
        RingIdentity {
            name: ring.name().to_string(),
            order: ring.order(),
            provenance: ring.provenance().to_string(),
            content_hash: ring.content_hash(),
            characteristic: ring.characteristic(),
            commutative: ring.is_commutative(),
            factors: ring.factors().map(|fs| fs.iter().map(|f| f.provenance().to_string()).collect()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumSection {
    pub class: RingClass,
    pub spectrum: SpectrumProfile,
    pub goldie: GoldieReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileSection {
    pub max_den_count: usize,
    pub max_den_sets: Vec<DenominatorSetRecord>,
    pub ass_max: Vec<ElementSet>,
    pub ll: ElementSet,
    pub localizable: ElementSet,
    pub non_localizable: ElementSet,
    pub completely_localizable: ElementSet,
    pub s0: ElementSet,
    pub ql_is_ring: bool,
    pub kept_candidates: Vec<ElementSet>,
    pub candidate_sweep_only: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
    pub completeness: &'static str,
    pub localization_maximal: MaximalityReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriteriaSection {
    pub verdicts: Vec<CriterionVerdict>,
    pub cross_validation: CrossValidation,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleFlags {
    pub bounds: Bounds,
    pub oracle_ran: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub ring: RingIdentity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ElementClasses>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criteria: Option<CriteriaSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorems: Option<TheoremReport>,
    pub oracle: OracleFlags,
    /// Phases that stopped on a bound or input error; the rest are intact.
    pub phase_errors: BTreeMap<&'static str, String>,
    pub partial: bool,
    pub timing_ms: BTreeMap<&'static str, u64>,
}

impl AnalysisReport {
    /// Failed theorem checks and failed consequents of true criteria.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(c) = &self.criteria {
            for v in &c.verdicts {
                for q in v.consequents.iter().filter(|q| !q.holds) {
                    out.push(format!("{}: consequent {} fails", v.criterion.name(), q.name));
                }
            }
        }
        if let Some(t) = &self.theorems {
            for c in t.checks.iter().filter(|c| !c.holds) {
                out.push(format!("theorem check {} fails", c.name));
            }
        }
        out
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        Ok(serde_json::to_value(self)?)
    }
}

fn profile_section(a: &Analysis) -> Result<ProfileSection> {
    let p = a.profile()?;
    Ok(ProfileSection {
        max_den_count: p.max_den_sets.len(),
        max_den_sets: p.max_den_sets.clone(),
        ass_max: p.ass_max.iter().map(|i| i.members).collect(),
        ll: p.ll.members,
        localizable: p.localizable,
        non_localizable: p.non_localizable,
        completely_localizable: p.completely_localizable,
        s0: p.s0,
        ql_is_ring: p.ql.target.tables_equal(a.ring()),
        kept_candidates: p.kept_candidates.clone(),
        candidate_sweep_only: p.candidate_sweep_only,
        oracle: p.oracle.clone(),
        completeness: p.completeness,
        localization_maximal: is_localization_maximal(a.ring(), a.bounds())?,
    })
}

fn criteria_section(a: &Analysis) -> Result<CriteriaSection> {
    let mut verdicts = Vec::new();
    for id in CriterionId::ALL {
        if let Some(v) = run_criterion(a, id)? {
            verdicts.push(v);
        }
    }
    Ok(CriteriaSection {
        verdicts,
        cross_validation: cross_validate(a)?,
    })
}

/// Runs the requested phases in dependency order.
///
/// A bound or input error stops only its own phase. An internal
/// inconsistency aborts the whole run.
pub fn run_analysis(ring: FiniteRing, bounds: Bounds, phases: &[Phase]) -> Result<AnalysisReport> {
    let a = Analysis::new(ring, bounds);
    let mut phases = phases.to_vec();
    phases.sort();
    phases.dedup();
    let mut report = AnalysisReport {
        ring: RingIdentity::of(a.ring()),
        classification: None,
        spectrum: None,
        profile: None,
        criteria: None,
        theorems: None,
        oracle: OracleFlags {
            bounds,
            oracle_ran: false,
        },
        phase_errors: BTreeMap::new(),
        partial: false,
        timing_ms: BTreeMap::new(),
    };
    for phase in phases {
        let start = Instant::now();
        let outcome: Result<()> = match phase {
            Phase::Classify => a.classes().map(|c| report.classification = Some(c.clone())),
            Phase::Spectrum => (|| {
                report.spectrum = Some(SpectrumSection {
                    class: *a.class()?,
                    spectrum: a.spectrum()?.clone(),
                    goldie: a.goldie()?.clone(),
                });
                Ok(())
            })(),
            Phase::Profile => profile_section(&a).map(|p| {
                report.oracle.oracle_ran = p.oracle.is_some();
                report.profile = Some(p);
            }),
            Phase::Criteria => criteria_section(&a).map(|c| report.criteria = Some(c)),
            Phase::Theorems => verify_theorems(&a).map(|t| report.theorems = Some(t)),
        };
        report.timing_ms.insert(phase.name(), start.elapsed().as_millis() as u64);
        match outcome {
            Ok(()) => {}
            Err(e @ Error::Inconsistency(_)) => return Err(e),
            Err(e) => {
                report.phase_errors.insert(phase.name(), e.to_string());
                report.partial = true;
            }
        }
    }
    Ok(report)
}
