//! Two-sided ideals, the prime spectrum and Goldie-condition witnesses.

mod spectrum;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bitset::{canonical_key, ElementSet};
use crate::error::{ensure_consistent, Error, Result};
use crate::ring::FiniteRing;

pub use spectrum::{
    goldie_witnesses, is_prime_ideal, jacobson_radical, left_ideals, minimal_primes_over, prime_structure,
    ring_class, GoldieReport, RingClass, SpectrumProfile, UniformDimension,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ideal {
    pub members: ElementSet,
    /// Greedy generating set: smallest missing element added each step.
    pub generators: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semiprime: Option<bool>,
}

impl Ideal {
    /// Wraps `members` after checking it is a two-sided ideal.
    pub fn new(ring: &FiniteRing, members: ElementSet) -> Result<Self> {
        ensure_consistent!(ring.is_ideal(&members), "{members} is not a two-sided ideal");
        Ok(Ideal {
            generators: greedy_generators(ring, &members),
            members,
            prime: None,
            semiprime: None,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        !self.members.is_full()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }
}

fn greedy_generators(ring: &FiniteRing, members: &ElementSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = ring.zero_set();
    while let Some(x) = members.difference(&span).first() {
        gens.push(x);
        span = ring.ideal_closure(&ElementSet::from_elements(ring.order(), gens.iter().copied()));
    }
    gens
}

/// Smallest two-sided ideal containing `x`.
pub fn ideal_closure(ring: &FiniteRing, x: &ElementSet) -> Result<Ideal> {
    Ideal::new(ring, ring.ideal_closure(x))
}

/// The ideal generated by a list of element indices.
pub fn ideal_generated(ring: &FiniteRing, gens: &[usize]) -> Result<Ideal> {
    ideal_closure(ring, &ring.set_of(gens.iter().copied())?)
}

/// Additive closure of the product set `AB`.
pub fn ideal_product(ring: &FiniteRing, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let p = ring.product_set(a, b);
    let mut s = ring.zero_set();
    loop {
        let next = ring.sumset(&s, &p).union(&s);
        if next == s {
            return s;
        }
        s = next;
    }
}

/// All two-sided ideals, sorted by size then member list.
///
/// Every ideal of a finite ring is a finite sum of principal ideals, so
/// the principal ideals closed under sums already give the lattice; the
/// intersection closure is then checked to add nothing.
pub fn all_ideals(ring: &FiniteRing, profile_bound: usize) -> Result<Vec<Ideal>> {
    if ring.order() > profile_bound {
        return Err(Error::OrderBound {
            which: "profile",
            order: ring.order(),
            bound: profile_bound,
        });
    }
    let principal: BTreeSet<ElementSet> = ring
        .elements()
        .map(|x| ring.ideal_closure(&ElementSet::singleton(ring.order(), x)))
        .collect();
    let mut found: BTreeSet<ElementSet> = principal.clone();
    let mut queue: Vec<ElementSet> = principal.iter().copied().collect();
    while let Some(i) = queue.pop() {
        for p in &principal {
            if p.is_subset(&i) {
                continue;
            }
            let s = ring.sumset(&i, p);
            if found.insert(s) {
                queue.push(s);
            }
        }
    }
    let list: Vec<ElementSet> = found.iter().copied().collect();
    for a in &list {
        for b in &list {
            let meet = a.intersection(b);
            ensure_consistent!(found.contains(&meet), "ideal lattice not closed: {a} meet {b}");
        }
    }
    let mut list = list;
    list.sort_by_key(canonical_key);
    list.into_iter().map(|m| Ideal::new(ring, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Bounds;
    use crate::ring::build_ring;

    fn ring(s: &str) -> FiniteRing {
        build_ring(s, &Bounds::default()).unwrap()
    }

    fn sets(v: &[Ideal]) -> Vec<Vec<usize>> {
        v.iter().map(|i| i.members.to_vec()).collect()
    }

    #[test]
    fn closure_examples() {
        let z6 = ring("Z/6");
        assert_eq!(ideal_generated(&z6, &[2]).unwrap().members.to_vec(), vec![0, 2, 4]);
        assert_eq!(ideal_closure(&z6, &z6.empty_set()).unwrap().members.to_vec(), vec![0]);
        // e12 in tri(2,F2) is [[0,1],[0,0]] = index 2.
        let t = ring("tri(2,F2)");
        assert_eq!(ideal_generated(&t, &[2]).unwrap().members.to_vec(), vec![0, 2]);
    }

    #[test]
    fn lattices() {
        assert_eq!(
            sets(&all_ideals(&ring("Z/6"), 256).unwrap()),
            vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]
        );
        assert_eq!(all_ideals(&ring("F4"), 256).unwrap().len(), 2);
        assert_eq!(all_ideals(&ring("mat(2,F2)"), 256).unwrap().len(), 2);
        let t = all_ideals(&ring("tri(2,F2)"), 256).unwrap();
        assert_eq!(sets(&t), vec![vec![0], vec![0, 2], vec![0, 1, 2, 3], vec![0, 2, 4, 6], (0..8).collect()]);
    }

    #[test]
    fn lattice_matches_subset_scan() {
        for s in ["Z/8", "tri(2,F2)", "prod(F2,F2,F2)", "quot(poly(F2,[0,0,0,1]),[4])"] {
            let r = ring(s);
            let mut brute: Vec<ElementSet> = (0u32..1 << r.order())
                .map(|m| ElementSet::from_predicate(r.order(), |x| m >> x & 1 == 1))
                .filter(|x| x.contains(r.zero()) && r.is_ideal(x))
                .collect();
            brute.sort_by_key(canonical_key);
            let fast: Vec<ElementSet> = all_ideals(&r, 256).unwrap().into_iter().map(|i| i.members).collect();
            assert_eq!(fast, brute, "{s}");
        }
    }

    #[test]
    fn non_ideal_rejected() {
        let t = ring("tri(2,F2)");
        // {0,4}: [[1,0],[0,0]] alone is not closed under multiplication by R.
        assert!(Ideal::new(&t, t.set_of([0, 4]).unwrap()).is_err());
    }
}
