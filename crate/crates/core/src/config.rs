use serde::{Deserialize, Serialize};

use crate::bitset::MAX_ORDER;

pub const ORACLE_BOUND_VAR: &str = "ORELAB_ORACLE_BOUND";
pub const PROFILE_BOUND_VAR: &str = "ORELAB_PROFILE_BOUND";
pub const ISO_BOUND_VAR: &str = "ORELAB_ISO_BOUND";

/// Order limits for the enumeration phases.
///
/// `profile` caps ring construction and the ideal-indexed analyses,
/// `oracle` caps exhaustive subset enumeration (which is exponential),
/// and `iso` caps the isomorphism search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Bounds {
    pub oracle: usize,
    pub profile: usize,
    pub iso: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            oracle: 12,
            profile: MAX_ORDER,
            iso: 64,
        }
    }
}

impl Bounds {
    /// Defaults overridden by `ORELAB_*_BOUND` environment variables.
    pub fn from_env() -> Self {
        let mut b = Bounds::default();
        let read = |var: &str| std::env::var(var).ok().and_then(|v| v.trim().parse().ok());
        if let Some(v) = read(ORACLE_BOUND_VAR) {
            b.oracle = v;
        }
        if let Some(v) = read(PROFILE_BOUND_VAR) {
            b.profile = v;
        }
        if let Some(v) = read(ISO_BOUND_VAR) {
            b.iso = v;
        }
        b.clamped()
    }

    /// The profile bound can never exceed what an `ElementSet` can hold.
    pub fn clamped(mut self) -> Self {
        self.profile = self.profile.min(MAX_ORDER);
        self
    }
}
