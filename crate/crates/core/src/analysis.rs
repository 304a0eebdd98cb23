//! A ring together with lazily computed, cached analyses.

use once_cell::unsync::OnceCell;

use crate::config::Bounds;
use crate::error::Result;
use crate::ideals::{goldie_witnesses, prime_structure, ring_class, GoldieReport, RingClass, SpectrumProfile};
use crate::ore::{all_denominator_sets, localization_profile, DenominatorSetRecord, LocalizationProfile};
use crate::ring::{build_ring, ElementClasses, FiniteRing};

pub struct Analysis {
    ring: FiniteRing,
    bounds: Bounds,
    classes: OnceCell<ElementClasses>,
    spectrum: OnceCell<SpectrumProfile>,
    class: OnceCell<RingClass>,
    goldie: OnceCell<GoldieReport>,
    profile: OnceCell<LocalizationProfile>,
    denominator_sets: OnceCell<Vec<DenominatorSetRecord>>,
}

impl Analysis {
    pub fn new(ring: FiniteRing, bounds: Bounds) -> Self {
        Analysis {
            ring,
            bounds,
            classes: OnceCell::new(),
            spectrum: OnceCell::new(),
            class: OnceCell::new(),
            goldie: OnceCell::new(),
            profile: OnceCell::new(),
            denominator_sets: OnceCell::new(),
        }
    }

    pub fn from_spec(spec: &str, bounds: Bounds) -> Result<Self> {
        Ok(Self::new(build_ring(spec, &bounds)?, bounds))
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn classes(&self) -> Result<&ElementClasses> {
        self.classes.get_or_try_init(|| self.ring.classify_elements())
    }

    pub fn spectrum(&self) -> Result<&SpectrumProfile> {
        self.spectrum.get_or_try_init(|| prime_structure(&self.ring, &self.bounds))
    }

    pub fn class(&self) -> Result<&RingClass> {
        self.class.get_or_try_init(|| ring_class(&self.ring, self.spectrum()?))
    }

    pub fn goldie(&self) -> Result<&GoldieReport> {
        self.goldie.get_or_try_init(|| goldie_witnesses(&self.ring, self.spectrum()?))
    }

    pub fn profile(&self) -> Result<&LocalizationProfile> {
        self.profile.get_or_try_init(|| localization_profile(&self.ring, &self.bounds))
    }

    /// Every left denominator set, by exhaustive search; `OrderBound` above
    /// the oracle bound.
    pub fn denominator_sets(&self) -> Result<&Vec<DenominatorSetRecord>> {
        self.denominator_sets
            .get_or_try_init(|| all_denominator_sets(&self.ring, self.bounds.oracle))
    }
}
