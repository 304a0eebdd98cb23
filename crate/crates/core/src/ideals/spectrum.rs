use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::{canonical_key, ElementSet};
use crate::config::Bounds;
use crate::error::{ensure_consistent, Result};
use crate::ring::{FiniteRing, Side};

use super::{all_ideals, ideal_product, Ideal};

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum UniformDimension {
    /// `minimal_left_ideals` lists one maximal independent family.
    Computed {
        value: usize,
        minimal_left_ideals: Vec<ElementSet>,
        exhaustive: bool,
    },
    NotComputed { reason: String },
}

impl UniformDimension {
    pub fn value(&self) -> Option<usize> {
        match self {
            UniformDimension::Computed { value, .. } => Some(*value),
            UniformDimension::NotComputed { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumProfile {
    pub all_ideals: Vec<Ideal>,
    pub primes: Vec<Ideal>,
    pub minimal_primes: Vec<Ideal>,
    pub prime_radical: Ideal,
    pub semiprime: bool,
    /// Distinct left annihilators `lann(I)` of two-sided ideals.
    pub annihilator_ideals: Vec<Ideal>,
    pub left_uniform_dimension: UniformDimension,
    pub bimodule_uniform_dimension: &'static str,
}

impl SpectrumProfile {
    pub fn ideal_index(&self, members: &ElementSet) -> Option<usize> {
        self.all_ideals.iter().position(|i| i.members == *members)
    }

    pub fn is_minimal_prime(&self, members: &ElementSet) -> bool {
        self.minimal_primes.iter().any(|p| p.members == *members)
    }
}

fn is_prime_by_pairs(ring: &FiniteRing, p: &ElementSet, ideals: &[ElementSet]) -> bool {
    if p.is_full() {
        return false;
    }
    ideals.iter().all(|a| {
        a.is_subset(p)
            || ideals
                .iter()
                .all(|b| b.is_subset(p) || !ring.product_set(a, b).is_subset(p))
    })
}

fn is_prime_by_elements(ring: &FiniteRing, p: &ElementSet) -> bool {
    if p.is_full() {
        return false;
    }
    let outside = p.complement();
    outside.iter().all(|a| {
        outside
            .iter()
            .all(|b| ring.elements().any(|r| !p.contains(ring.mul(ring.mul(a, r), b))))
    })
}

/// Two-sided ideal, proper, and `aRb ⊆ P` forces `a ∈ P` or `b ∈ P`.
pub fn is_prime_ideal(ring: &FiniteRing, p: &ElementSet) -> bool {
    ring.is_ideal(p) && is_prime_by_elements(ring, p)
}

fn is_nilpotent(ring: &FiniteRing, i: &ElementSet) -> bool {
    let zero = ring.zero_set();
    let mut pow = *i;
    loop {
        if pow == zero {
            return true;
        }
        let next = ideal_product(ring, &pow, i);
        if next == pow {
            return false;
        }
        pow = next;
    }
}

/// `{x : 1 - rx is a unit for every r}`.
pub fn jacobson_radical(ring: &FiniteRing) -> ElementSet {
    let units = ring.units();
    ElementSet::from_predicate(ring.order(), |x| {
        ring.elements()
            .all(|r| units.contains(ring.sub(ring.one(), ring.mul(r, x))))
    })
}

/// All left ideals, by closing the principal left ideals `Rx` under sums.
pub fn left_ideals(ring: &FiniteRing) -> Vec<ElementSet> {
    let principal: BTreeSet<ElementSet> = ring
        .elements()
        .map(|x| ring.left_ideal_closure(&ElementSet::singleton(ring.order(), x)))
        .collect();
    let mut found = principal.clone();
    let mut queue: Vec<ElementSet> = principal.iter().copied().collect();
    while let Some(i) = queue.pop() {
        for p in &principal {
            if !p.is_subset(&i) {
                let s = ring.sumset(&i, p);
                if found.insert(s) {
                    queue.push(s);
                }
            }
        }
    }
    let mut v: Vec<_> = found.into_iter().collect();
    v.sort_by_key(canonical_key);
    v
}

fn minimal_left_ideals(ring: &FiniteRing) -> Vec<ElementSet> {
    let nonzero: BTreeSet<ElementSet> = ring
        .elements()
        .filter(|&x| x != ring.zero())
        .map(|x| ring.left_ideal_closure(&ElementSet::singleton(ring.order(), x)))
        .collect();
    let mut v: Vec<ElementSet> = nonzero
        .iter()
        .filter(|l| !nonzero.iter().any(|m| m != *l && m.is_subset(l)))
        .copied()
        .collect();
    v.sort_by_key(canonical_key);
    v
}

/// Subgroups are independent iff their sum has the product of their sizes.
fn independent_sum(ring: &FiniteRing, sum: &ElementSet, size: usize, l: &ElementSet) -> Option<(ElementSet, usize)> {
    let s = ring.sumset(sum, l);
    (s.len() == size * l.len()).then_some((s, s.len()))
}

fn max_independent(ring: &FiniteRing, mins: &[ElementSet], from: usize, sum: ElementSet, size: usize) -> usize {
    let mut best = 0;
    for i in from..mins.len() {
        if let Some((s, n)) = independent_sum(ring, &sum, size, &mins[i]) {
            best = best.max(1 + max_independent(ring, mins, i + 1, s, n));
        }
    }
    best
}

/// Uniform dimension of `R` as a left module over itself.
///
/// A finite ring's left socle is essential and semisimple, so any maximal
/// independent family of minimal left ideals realizes the dimension. The
/// greedy family is always computed; the exhaustive search over families
/// confirming it is gated by the oracle bound.
fn uniform_dimension(ring: &FiniteRing, bounds: &Bounds) -> Result<UniformDimension> {
    let mins = minimal_left_ideals(ring);
    let mut family = Vec::new();
    let (mut sum, mut size) = (ring.zero_set(), 1);
    for l in &mins {
        if let Some((s, n)) = independent_sum(ring, &sum, size, l) {
            family.push(*l);
            sum = s;
            size = n;
        }
    }
    let exhaustive = ring.order() <= bounds.oracle;
    if exhaustive {
        let best = max_independent(ring, &mins, 0, ring.zero_set(), 1);
        ensure_consistent!(
            best == family.len(),
            "greedy uniform dimension {} but exhaustive {best}",
            family.len()
        );
    }
    Ok(UniformDimension::Computed {
        value: family.len(),
        minimal_left_ideals: family,
        exhaustive,
    })
}

fn minimal_by_inclusion(sets: &[ElementSet]) -> Vec<ElementSet> {
    sets.iter()
        .filter(|p| !sets.iter().any(|q| q != *p && q.is_subset(p)))
        .copied()
        .collect()
}

/// Primes, minimal primes, prime radical, annihilator ideals and left
/// uniform dimension.
pub fn prime_structure(ring: &FiniteRing, bounds: &Bounds) -> Result<SpectrumProfile> {
    let mut ideals = all_ideals(ring, bounds.profile)?;
    let members: Vec<ElementSet> = ideals.iter().map(|i| i.members).collect();

    let flags: Vec<(bool, bool)> = members
        .par_iter()
        .map(|p| (is_prime_by_pairs(ring, p, &members), is_prime_by_elements(ring, p)))
        .collect();
    for (p, (a, b)) in members.iter().zip(&flags) {
        ensure_consistent!(a == b, "primality of {p} differs: ideal pairs {a}, elements {b}");
    }
    let prime_sets: Vec<ElementSet> = members
        .iter()
        .zip(&flags)
        .filter(|(_, f)| f.0)
        .map(|(p, _)| *p)
        .collect();
    let full = ring.full_set();
    let radical_of = |i: &ElementSet| {
        prime_sets
            .iter()
            .filter(|p| i.is_subset(p))
            .fold(full, |acc, p| acc.intersection(p))
    };
    for (ideal, (prime, _)) in ideals.iter_mut().zip(&flags) {
        ideal.prime = Some(*prime);
        ideal.semiprime = Some(ideal.is_proper() && radical_of(&ideal.members) == ideal.members);
    }

    let min_sets = minimal_by_inclusion(&prime_sets);
    let n_min = min_sets.iter().fold(full, |acc, p| acc.intersection(p));
    let n_all = prime_sets.iter().fold(full, |acc, p| acc.intersection(p));
    ensure_consistent!(n_min == n_all, "intersection of minimal primes {n_min} differs from all primes {n_all}");
    let nilpotent: Vec<ElementSet> = members.iter().filter(|i| is_nilpotent(ring, i)).copied().collect();
    let largest = nilpotent.iter().max_by_key(|i| i.len()).copied().unwrap_or(ring.zero_set());
    ensure_consistent!(
        nilpotent.iter().all(|i| i.is_subset(&largest)),
        "no largest nilpotent ideal"
    );
    ensure_consistent!(n_min == largest, "prime radical {n_min} differs from largest nilpotent ideal {largest}");
    let jac = jacobson_radical(ring);
    ensure_consistent!(jac == largest, "Jacobson radical {jac} differs from nilpotent radical {largest}");

    let by_members = |s: &ElementSet| ideals.iter().find(|i| i.members == *s).cloned().unwrap();
    let primes: Vec<Ideal> = prime_sets.iter().map(by_members).collect();
    let minimal_primes: Vec<Ideal> = min_sets.iter().map(by_members).collect();
    let prime_radical = by_members(&n_min);

    let mut ann: BTreeSet<ElementSet> = BTreeSet::new();
    for i in &members {
        let a = ring.annihilator(i, Side::Left)?;
        ensure_consistent!(ring.is_ideal(&a), "left annihilator of ideal {i} is not an ideal");
        ann.insert(a);
    }
    let mut ann: Vec<ElementSet> = ann.into_iter().collect();
    ann.sort_by_key(canonical_key);

    Ok(SpectrumProfile {
        semiprime: prime_radical.is_zero(),
        annihilator_ideals: ann.iter().map(by_members).collect(),
        left_uniform_dimension: uniform_dimension(ring, bounds)?,
        bimodule_uniform_dimension: "not implemented",
        all_ideals: ideals,
        primes,
        minimal_primes,
        prime_radical,
    })
}

/// Minimal primes containing `ideal`.
pub fn minimal_primes_over(spectrum: &SpectrumProfile, ideal: &ElementSet) -> Vec<Ideal> {
    let over: Vec<ElementSet> = spectrum
        .primes
        .iter()
        .filter(|p| ideal.is_subset(&p.members))
        .map(|p| p.members)
        .collect();
    minimal_by_inclusion(&over)
        .into_iter()
        .map(|m| spectrum.primes.iter().find(|p| p.members == m).cloned().unwrap())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingClass {
    pub simple: bool,
    /// Jacobson radical zero.
    pub semisimple: bool,
    /// Prime radical zero.
    pub semiprime: bool,
    pub simple_left_artinian: bool,
    pub division: bool,
    pub commutative: bool,
    /// Always true at finite order.
    pub left_artinian: bool,
}

pub fn ring_class(ring: &FiniteRing, spectrum: &SpectrumProfile) -> Result<RingClass> {
    let semisimple = jacobson_radical(ring) == ring.zero_set();
    ensure_consistent!(
        semisimple == spectrum.semiprime,
        "semisimple {semisimple} but semiprime {}",
        spectrum.semiprime
    );
    let simple = spectrum.all_ideals.len() == 2;
    Ok(RingClass {
        simple,
        semisimple,
        semiprime: spectrum.semiprime,
        simple_left_artinian: simple,
        division: ring.units().len() == ring.order() - 1,
        commutative: ring.is_commutative(),
        left_artinian: true,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GoldieReport {
    /// Every left annihilator `lann(X)`, `X` a nonempty subset.
    pub left_annihilators: Vec<ElementSet>,
    pub longest_annihilator_chain: usize,
    pub acc_left_annihilators: bool,
    pub uniform_dimension: UniformDimension,
    pub no_infinite_direct_sums: bool,
    pub semiprime: bool,
    pub verdict: bool,
}

/// Since `lann(X)` is the intersection of the `lann(x)`, `x` in `X`, the
/// intersection closure of the single-element annihilators is the full
/// list.
pub fn goldie_witnesses(ring: &FiniteRing, spectrum: &SpectrumProfile) -> Result<GoldieReport> {
    let mut found: BTreeSet<ElementSet> = BTreeSet::new();
    for x in ring.elements() {
        found.insert(ring.annihilator(&ElementSet::singleton(ring.order(), x), Side::Left)?);
    }
    loop {
        let list: Vec<ElementSet> = found.iter().copied().collect();
        let before = found.len();
        for a in &list {
            for b in &list {
                found.insert(a.intersection(b));
            }
        }
        if found.len() == before {
            break;
        }
    }
    let mut list: Vec<ElementSet> = found.into_iter().collect();
    list.sort_by_key(canonical_key);
    for l in &list {
        ensure_consistent!(ring.is_left_ideal(l), "left annihilator {l} is not a left ideal");
    }
    // Longest strictly ascending chain; sorted by size so predecessors come first.
    let mut depth = vec![1usize; list.len()];
    for i in 0..list.len() {
        for j in 0..i {
            if list[j] != list[i] && list[j].is_subset(&list[i]) {
                depth[i] = depth[i].max(depth[j] + 1);
            }
        }
    }
    let ud = spectrum.left_uniform_dimension.clone();
    let verdict = spectrum.semiprime;
    Ok(GoldieReport {
        longest_annihilator_chain: depth.into_iter().max().unwrap_or(0),
        left_annihilators: list,
        acc_left_annihilators: true,
        uniform_dimension: ud,
        no_infinite_direct_sums: true,
        semiprime: spectrum.semiprime,
        verdict,
    })
}
