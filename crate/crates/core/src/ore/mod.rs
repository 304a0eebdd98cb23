//! Multiplicative sets, the left Ore and denominator conditions, and
//! localization at denominator sets.

mod localize;
mod oracle;
mod profile;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{ensure_consistent, Error, Result};
use crate::ring::FiniteRing;

pub use localize::{
    core_analysis, lift_denominator_set, localize, semigroup_join, CoreReport, JoinReport,
    LiftReport, LocalizationPresentation,
};
pub use oracle::{all_denominator_sets, all_multiplicative_sets, maximal_sets};
pub use profile::{
    candidate_set, denominator_set_for_prime, is_localization_maximal, localization_profile,
    product_support, FactorSupport, LocalizationProfile, MaximalityReport, OracleCheck, PrimeSetReport,
    SupportReport,
};

/// A multiplicatively closed set with `1 ∈ S` and `0 ∉ S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MultiplicativeSet(ElementSet);

impl MultiplicativeSet {
    pub fn new(ring: &FiniteRing, members: ElementSet) -> Result<Self> {
        if !members.contains(ring.one()) || members.contains(ring.zero()) {
            return Err(Error::ZeroInSet);
        }
        for a in members.iter() {
            for b in members.iter() {
                if !members.contains(ring.mul(a, b)) {
                    return Err(Error::NotMultiplicative { a, b });
                }
            }
        }
        Ok(MultiplicativeSet(members))
    }

    pub fn members(&self) -> &ElementSet {
        &self.0
    }
}

/// Smallest multiplicatively closed set containing `x` and `1`.
pub fn multiplicative_closure(ring: &FiniteRing, x: &ElementSet) -> Result<MultiplicativeSet> {
    if x.contains(ring.zero()) {
        return Err(Error::ZeroInSet);
    }
    let base = ElementSet::singleton(ring.order(), ring.one());
    let closed = extend_closure(ring, &base, x)?;
    Ok(MultiplicativeSet(closed))
}

/// Closure of `base ∪ extra` where `base` is already closed.
pub(crate) fn extend_closure(ring: &FiniteRing, base: &ElementSet, extra: &ElementSet) -> Result<ElementSet> {
    let mut set = *base;
    let mut queue: Vec<usize> = extra.difference(base).iter().collect();
    while let Some(a) = queue.pop() {
        if !set.insert(a) {
            continue;
        }
        for b in set.iter() {
            for (l, r) in [(a, b), (b, a)] {
                let c = ring.mul(l, r);
                if c == ring.zero() {
                    return Err(Error::ZeroInClosure { a: l, b: r });
                }
                if !set.contains(c) {
                    queue.push(c);
                }
            }
        }
    }
    Ok(set)
}

/// Classification of a multiplicative set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenominatorSetRecord {
    pub set: MultiplicativeSet,
    pub is_left_ore: bool,
    /// `(r, s)` with `Sr ∩ Rs = ∅`.
    pub ore_witness: Option<(usize, usize)>,
    /// `rs = 0` implies `tr = 0` for some `t ∈ S`.
    pub left_reversible: bool,
    /// `(r, s)` with `rs = 0` but `tr ≠ 0` for all `t ∈ S`.
    pub reversibility_witness: Option<(usize, usize)>,
    pub is_left_denominator: bool,
    /// `{r : sr = 0 for some s ∈ S}`, whether or not it is an ideal.
    pub ass: ElementSet,
    pub ass_is_ideal: bool,
    pub core: ElementSet,
    /// `(r, s)` with `s·r = 0`, smallest such `s`, for each `r ∈ ass`.
    pub kill_witnesses: Vec<(usize, usize)>,
}

impl DenominatorSetRecord {
    pub fn members(&self) -> &ElementSet {
        self.set.members()
    }
}

/// Exhaustive left Ore and left denominator checks.
pub fn classify_mult_set(ring: &FiniteRing, members: &ElementSet) -> Result<DenominatorSetRecord> {
    let set = MultiplicativeSet::new(ring, *members)?;
    let n = ring.order();
    let zero = ring.zero();

    let right_multiples: Vec<ElementSet> = members
        .iter()
        .map(|s| ElementSet::from_elements(n, ring.elements().map(|r| ring.mul(r, s))))
        .collect();
    let mut ore_witness = None;
    'ore: for r in ring.elements() {
        let sr = ElementSet::from_elements(n, members.iter().map(|t| ring.mul(t, r)));
        for (s, rs) in members.iter().zip(&right_multiples) {
            if sr.is_disjoint(rs) {
                ore_witness = Some((r, s));
                break 'ore;
            }
        }
    }

    let mut kill_witnesses = Vec::new();
    let mut ass = ring.empty_set();
    for r in ring.elements() {
        if let Some(s) = members.iter().find(|&s| ring.mul(s, r) == zero) {
            ass.insert(r);
            kill_witnesses.push((r, s));
        }
    }
    let reversibility_witness = ring.elements().find_map(|r| {
        if ass.contains(r) {
            return None;
        }
        members.iter().find(|&s| ring.mul(r, s) == zero).map(|s| (r, s))
    });

    let ass_is_ideal = ring.is_ideal(&ass);
    let is_left_ore = ore_witness.is_none();
    if is_left_ore {
        ensure_consistent!(ass_is_ideal, "left Ore set {members} has non-ideal ass {ass}");
        ensure_consistent!(!ass.contains(ring.one()), "left Ore set {members} has improper ass");
    }
    let core = ElementSet::from_predicate(n, |s| {
        members.contains(s) && ring.elements().all(|r| (ring.mul(s, r) == zero) == ass.contains(r))
    });
    Ok(DenominatorSetRecord {
        set,
        is_left_ore,
        ore_witness,
        left_reversible: reversibility_witness.is_none(),
        reversibility_witness,
        is_left_denominator: is_left_ore && reversibility_witness.is_none(),
        ass,
        ass_is_ideal,
        core,
        kill_witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Bounds;
    use crate::ring::build_ring;

    fn ring(s: &str) -> FiniteRing {
        build_ring(s, &Bounds::default()).unwrap()
    }

    #[test]
    fn z6_odd_elements() {
        let r = ring("Z/6");
        let rec = classify_mult_set(&r, &r.set_of([1, 3, 5]).unwrap()).unwrap();
        assert!(rec.is_left_denominator);
        assert_eq!(rec.ass.to_vec(), vec![0, 2, 4]);
        assert_eq!(rec.core.to_vec(), vec![3]);
        assert_eq!(rec.kill_witnesses, vec![(0, 1), (2, 3), (4, 3)]);
    }

    #[test]
    fn triangular_sets() {
        let r = ring("tri(2,F2)");
        // (2,2)-entry 1: odd indices.
        let rec = classify_mult_set(&r, &r.set_of([1, 3, 5, 7]).unwrap()).unwrap();
        assert!(rec.is_left_denominator);
        assert_eq!(rec.ass.to_vec(), vec![0, 2, 4, 6]);
        assert_eq!(rec.core.to_vec(), vec![1, 3]);
        // (1,1)-entry 1: indices 4..8.
        let bad = classify_mult_set(&r, &r.set_of([4, 5, 6, 7]).unwrap()).unwrap();
        assert!(!bad.is_left_ore && !bad.is_left_denominator);
        assert!(bad.ore_witness.is_some());
        assert!(!bad.ass_is_ideal);
    }

    #[test]
    fn closure_examples() {
        let z6 = ring("Z/6");
        let c = |r: &FiniteRing, xs: &[usize]| multiplicative_closure(r, &r.set_of(xs.iter().copied()).unwrap());
        assert_eq!(c(&z6, &[5]).unwrap().members().to_vec(), vec![1, 5]);
        assert_eq!(c(&z6, &[2]).unwrap().members().to_vec(), vec![1, 2, 4]);
        assert!(matches!(c(&ring("Z/4"), &[2]), Err(Error::ZeroInClosure { a: 2, b: 2 })));
        assert!(matches!(c(&z6, &[0]), Err(Error::ZeroInSet)));
    }

    #[test]
    fn invalid_sets_rejected() {
        let z6 = ring("Z/6");
        assert!(matches!(
            classify_mult_set(&z6, &z6.set_of([1, 2]).unwrap()),
            Err(Error::NotMultiplicative { a: 2, b: 2 })
        ));
        assert!(matches!(classify_mult_set(&z6, &z6.set_of([5]).unwrap()), Err(Error::ZeroInSet)));
    }
}
