use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{ensure_consistent, Error, Result};
use crate::ring::{quotient_ring, FiniteRing, RingMap, Side};

use super::{classify_mult_set, extend_closure, DenominatorSetRecord};

/// `S⁻¹R` realized as `R/ass(S)`.
#[derive(Debug, Clone, Serialize)]
pub struct LocalizationPresentation {
    pub source: FiniteRing,
    pub denominators: DenominatorSetRecord,
    pub target: FiniteRing,
    pub projection: RingMap,
    /// `(s, π(s)⁻¹)` for every `s ∈ S`.
    pub inverses: Vec<(usize, usize)>,
    pub kernel_is_ass: bool,
    pub inverts_denominators: bool,
    pub fractions_cover_target: bool,
    pub note: &'static str,
}

const FINITE_NOTE: &str = "S^-1 R = R/ass(S) since the image of S consists of units";

/// Localization at a left denominator set, with the universal-property
/// conditions checked on the tables.
pub fn localize(ring: &FiniteRing, rec: &DenominatorSetRecord) -> Result<LocalizationPresentation> {
    if !rec.is_left_denominator {
        return Err(Error::NotDenominator);
    }
    let q = quotient_ring(ring, &rec.ass)?;
    let target = q.ring;
    let pi = q.projection;
    let mut inverses = Vec::new();
    for s in rec.members().iter() {
        match target.unit_inverse(pi.apply(s)) {
            Some(inv) => inverses.push((s, inv)),
            None => ensure_consistent!(false, "image of {s} is not a unit in R/ass(S)"),
        }
    }
    let kernel_is_ass = pi.kernel(&target) == rec.ass;
    ensure_consistent!(kernel_is_ass, "projection kernel differs from ass(S)");
    // Every x is π(s)⁻¹π(r) for each s ∈ S (some r depending on s).
    let image = pi.image_of(&ring.full_set(), &target);
    let fractions_cover_target = inverses.iter().all(|&(_, inv)| {
        let fractions = ElementSet::from_elements(target.order(), image.iter().map(|y| target.mul(inv, y)));
        fractions.is_full()
    });
    ensure_consistent!(fractions_cover_target, "some element of R/ass(S) is not a left fraction");
    Ok(LocalizationPresentation {
        source: ring.clone(),
        denominators: rec.clone(),
        target,
        projection: pi,
        inverses,
        kernel_is_ass,
        inverts_denominators: true,
        fractions_cover_target,
        note: FINITE_NOTE,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CoreReport {
    pub core: ElementSet,
    pub nonempty: bool,
    /// `S·S_c ⊆ S_c`.
    pub absorbs_set: bool,
    /// `(s, t)` with `ts ∈ S_c`, one per `s ∈ S`.
    pub completion_witnesses: Vec<(usize, usize)>,
    pub completion_holds: bool,
    /// The core is handled with `1` adjoined, which changes neither the
    /// Ore conditions, `ass`, nor the localization.
    pub core_is_denominator: bool,
    pub core_ass_equal: bool,
    pub localization_table_identical: bool,
    /// Elements of `S` whose kernel `ker(s·)` is maximal among those of `S`.
    pub max_kernel_elements: ElementSet,
    pub max_kernels_equal: bool,
    pub max_in_core: bool,
}

impl CoreReport {
    pub fn all_hold(&self) -> bool {
        self.nonempty
            && self.absorbs_set
            && self.completion_holds
            && self.core_is_denominator
            && self.core_ass_equal
            && self.localization_table_identical
            && self.max_kernels_equal
            && self.max_in_core
    }
}

pub fn core_analysis(ring: &FiniteRing, rec: &DenominatorSetRecord) -> Result<CoreReport> {
    if !rec.is_left_denominator {
        return Err(Error::NotDenominator);
    }
    let s = *rec.members();
    let core = rec.core;
    let absorbs_set = ring.product_set(&s, &core).is_subset(&core);
    let completion_witnesses: Vec<(usize, usize)> = s
        .iter()
        .filter_map(|x| s.iter().find(|&t| core.contains(ring.mul(t, x))).map(|t| (x, t)))
        .collect();
    let completion_holds = !core.is_empty() && completion_witnesses.len() == s.len();

    let (mut core_is_denominator, mut core_ass_equal, mut identical) = (false, false, false);
    if !core.is_empty() {
        let mut with_one = core;
        with_one.insert(ring.one());
        if let Ok(closed) = extend_closure(ring, &ElementSet::singleton(ring.order(), ring.one()), &with_one) {
            if closed == with_one {
                let crec = classify_mult_set(ring, &with_one)?;
                core_is_denominator = crec.is_left_denominator;
                core_ass_equal = crec.ass == rec.ass;
                if core_is_denominator {
                    let a = localize(ring, &crec)?;
                    let b = localize(ring, rec)?;
                    identical = a.target.tables_equal(&b.target);
                }
            }
        }
    }

    let kernels: Vec<(usize, ElementSet)> = s.iter().map(|x| Ok((x, ring.left_kernel(x)?))).collect::<Result<_>>()?;
    let maximal: Vec<&(usize, ElementSet)> = kernels
        .iter()
        .filter(|(_, k)| !kernels.iter().any(|(_, j)| j != k && k.is_subset(j)))
        .collect();
    let max_kernel_elements = ElementSet::from_elements(ring.order(), maximal.iter().map(|(x, _)| *x));
    let max_kernels_equal = maximal.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(CoreReport {
        nonempty: !core.is_empty(),
        absorbs_set,
        completion_witnesses,
        completion_holds,
        core_is_denominator,
        core_ass_equal,
        localization_table_identical: identical,
        max_in_core: max_kernel_elements.is_subset(&core),
        max_kernel_elements,
        max_kernels_equal,
        core,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct JoinReport {
    pub ass_nested: bool,
    /// `(a, b)` in the generated semigroup with `ab = 0`.
    pub zero_witness: Option<(usize, usize)>,
    pub join: Option<DenominatorSetRecord>,
    /// `lann(ST) ⊆ ass(T)`.
    pub lann_in_ass: Option<bool>,
    pub join_is_denominator: Option<bool>,
    /// `ass(T) ⊆ ass(ST)`.
    pub ass_grows: Option<bool>,
}

impl JoinReport {
    /// The join conclusions, meaningful only when `ass(S) ⊆ ass(T)`.
    pub fn conclusions_hold(&self) -> bool {
        self.lann_in_ass == Some(true) && self.join_is_denominator == Some(true) && self.ass_grows == Some(true)
    }
}

/// The multiplicative semigroup generated by `S ∪ T`.
pub fn semigroup_join(ring: &FiniteRing, s: &DenominatorSetRecord, t: &DenominatorSetRecord) -> Result<JoinReport> {
    if !s.is_left_denominator || !t.is_left_denominator {
        return Err(Error::NotDenominator);
    }
    let ass_nested = s.ass.is_subset(&t.ass);
    match extend_closure(ring, s.members(), t.members()) {
        Err(Error::ZeroInClosure { a, b }) => Ok(JoinReport {
            ass_nested,
            zero_witness: Some((a, b)),
            join: None,
            lann_in_ass: None,
            join_is_denominator: None,
            ass_grows: None,
        }),
        Err(e) => Err(e),
        Ok(closed) => {
            let rec = classify_mult_set(ring, &closed)?;
            let lann = ring.annihilator(&closed, Side::Left)?;
            Ok(JoinReport {
                ass_nested,
                zero_witness: None,
                lann_in_ass: Some(lann.is_subset(&t.ass)),
                join_is_denominator: Some(rec.is_left_denominator),
                ass_grows: Some(t.ass.is_subset(&rec.ass)),
                join: Some(rec),
            })
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftReport {
    pub quotient_set: DenominatorSetRecord,
    pub lifted: DenominatorSetRecord,
    /// `(x, s)` with `s·x = 0`, for each `x ∈ I` that has one.
    pub kill_witnesses: Vec<(usize, usize)>,
    pub hypothesis_holds: bool,
    /// Preimage of `ass(S̄)`.
    pub expected_ass: ElementSet,
    pub ass_matches: bool,
    /// `S⁻¹R ≅ S̄⁻¹(R/I)` via the induced map, when the lift is a denominator set.
    pub localizations_isomorphic: Option<bool>,
}

/// Pulls a denominator set of `R/I` back along `π : R → R/I`.
pub fn lift_denominator_set(ring: &FiniteRing, ideal: &ElementSet, quotient_set: &ElementSet) -> Result<LiftReport> {
    let q = quotient_ring(ring, ideal)?;
    let qrec = classify_mult_set(&q.ring, quotient_set)?;
    if !qrec.is_left_denominator {
        return Err(Error::NotDenominator);
    }
    let lifted_set = q.lift(quotient_set);
    let lifted = classify_mult_set(ring, &lifted_set)?;
    let kill_witnesses: Vec<(usize, usize)> = ideal
        .iter()
        .filter_map(|x| lifted_set.iter().find(|&s| ring.mul(s, x) == ring.zero()).map(|s| (x, s)))
        .collect();
    let hypothesis_holds = kill_witnesses.len() == ideal.len();
    let expected_ass = q.lift(&qrec.ass);
    let ass_matches = lifted.ass == expected_ass;
    let mut localizations_isomorphic = None;
    if lifted.is_left_denominator {
        let big = localize(ring, &lifted)?;
        let small = localize(&q.ring, &qrec)?;
        // x ↦ π₂(π_I(rep(x))), checked as a ring map and for bijectivity.
        let rep = |x: usize| big.projection.preimage(&ElementSet::singleton(big.target.order(), x)).first().unwrap();
        let image: Vec<usize> = big
            .target
            .elements()
            .map(|x| small.projection.apply(q.projection.apply(rep(x))))
            .collect();
        localizations_isomorphic = Some(match RingMap::new(&big.target, &small.target, image) {
            Ok(m) => m.is_bijective(&small.target),
            Err(_) => false,
        });
    }
    if hypothesis_holds {
        ensure_consistent!(lifted.is_left_denominator, "lift of {quotient_set} is not a denominator set");
        ensure_consistent!(ass_matches, "lift of {quotient_set} has the wrong ass");
        ensure_consistent!(localizations_isomorphic == Some(true), "lifted localization differs");
    }
    Ok(LiftReport {
        quotient_set: qrec,
        lifted,
        kill_witnesses,
        hypothesis_holds,
        expected_ass,
        ass_matches,
        localizations_isomorphic,
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

    fn rec(r: &FiniteRing, xs: &[usize]) -> DenominatorSetRecord {
        classify_mult_set(r, &r.set_of(xs.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn localization_examples() {
        let z6 = ring("Z/6");
        let l = localize(&z6, &rec(&z6, &[1, 3, 5])).unwrap();
        assert_eq!(l.target.order(), 2);
        assert_eq!(l.projection.image, vec![0, 1, 0, 1, 0, 1]);
        let id = localize(&z6, &rec(&z6, &[1])).unwrap();
        assert!(id.target.tables_equal(&z6));
        let t = ring("tri(2,F2)");
        assert_eq!(localize(&t, &rec(&t, &[1, 3, 5, 7])).unwrap().target.order(), 2);
        assert!(matches!(localize(&t, &rec(&t, &[4, 5, 6, 7])), Err(Error::NotDenominator)));
    }

    #[test]
    fn core_examples() {
        let z6 = ring("Z/6");
        let c = core_analysis(&z6, &rec(&z6, &[1, 2, 4, 5])).unwrap();
        assert_eq!(c.core.to_vec(), vec![2, 4]);
        assert!(c.all_hold());
        let c = core_analysis(&z6, &rec(&z6, &[1, 5])).unwrap();
        assert_eq!(c.core.to_vec(), vec![1, 5]);
        let t = ring("tri(2,F2)");
        let c = core_analysis(&t, &rec(&t, &[1, 3, 5, 7])).unwrap();
        assert_eq!(c.core.to_vec(), vec![1, 3]);
        assert!(c.all_hold());
    }

    #[test]
    fn join_examples() {
        let z6 = ring("Z/6");
        let j = semigroup_join(&z6, &rec(&z6, &[1, 5]), &rec(&z6, &[1, 3, 5])).unwrap();
        assert!(j.ass_nested && j.conclusions_hold());
        assert_eq!(j.join.unwrap().members().to_vec(), vec![1, 3, 5]);
        let same = semigroup_join(&z6, &rec(&z6, &[1, 3, 5]), &rec(&z6, &[1, 3, 5])).unwrap();
        assert_eq!(same.join.unwrap().members().to_vec(), vec![1, 3, 5]);
        let bad = semigroup_join(&z6, &rec(&z6, &[1, 2, 4]), &rec(&z6, &[1, 3])).unwrap();
        assert!(!bad.ass_nested);
        let (a, b) = bad.zero_witness.unwrap();
        assert_eq!(z6.mul(a, b), 0);
    }

    #[test]
    fn lift_examples() {
        let z6 = ring("Z/6");
        let l = lift_denominator_set(&z6, &z6.set_of([0, 2, 4]).unwrap(), &ElementSet::from_elements(2, [1])).unwrap();
        assert!(l.hypothesis_holds);
        assert_eq!(l.lifted.members().to_vec(), vec![1, 3, 5]);
        assert_eq!(l.lifted.ass.to_vec(), vec![0, 2, 4]);
        let z4 = ring("Z/4");
        let l = lift_denominator_set(&z4, &z4.set_of([0, 2]).unwrap(), &ElementSet::from_elements(2, [1])).unwrap();
        assert!(!l.hypothesis_holds);
        assert_eq!(l.lifted.members().to_vec(), vec![1, 3]);
        assert_eq!(l.lifted.ass.to_vec(), vec![0]);
        let triv = lift_denominator_set(&z6, &z6.zero_set(), &ElementSet::from_elements(6, [1, 5])).unwrap();
        assert_eq!(triv.lifted.members().to_vec(), vec![1, 5]);
    }
}
