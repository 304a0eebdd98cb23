//! Exhaustive enumeration of multiplicative and denominator sets.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bitset::{canonical_key, ElementSet};
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

use super::{classify_mult_set, extend_closure, DenominatorSetRecord};

/// Every multiplicative set, sorted by size then members.
///
/// Breadth-first over closures: each closed set is extended by one
/// element at a time and re-closed, so every closed set is reached
/// through a chain of closed subsets.
pub fn all_multiplicative_sets(ring: &FiniteRing, oracle_bound: usize) -> Result<Vec<ElementSet>> {
    if ring.order() > oracle_bound {
        return Err(Error::OrderBound {
            which: "oracle",
            order: ring.order(),
            bound: oracle_bound,
        });
    }
    let start = ElementSet::singleton(ring.order(), ring.one());
    let mut seen: HashSet<ElementSet> = HashSet::from([start]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let next: Vec<ElementSet> = frontier
            .par_iter()
            .flat_map_iter(|s| {
                s.complement()
                    .iter()
                    .filter(|&x| x != ring.zero())
                    .filter_map(|x| {
                        extend_closure(ring, s, &ElementSet::singleton(ring.order(), x)).ok()
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        frontier = next.into_iter().filter(|s| seen.insert(*s)).collect();
    }
    let mut all: Vec<ElementSet> = seen.into_iter().collect();
    all.sort_by_key(canonical_key);
    Ok(all)
}

/// Every left denominator set, classified and sorted canonically.
pub fn all_denominator_sets(ring: &FiniteRing, oracle_bound: usize) -> Result<Vec<DenominatorSetRecord>> {
    let sets = all_multiplicative_sets(ring, oracle_bound)?;
    let records: Result<Vec<DenominatorSetRecord>> =
        sets.par_iter().map(|s| classify_mult_set(ring, s)).collect();
    Ok(records?
        .into_iter()
        .filter(|r| r.is_left_denominator)
        .collect())
}

/// Members of `sets` not strictly contained in another member.
pub fn maximal_sets(sets: &[ElementSet]) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| t != *s && s.is_subset(t)))
        .copied()
        .collect();
    out.sort_by_key(canonical_key);
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Bounds;
    use crate::ring::build_ring;

    fn den_lists(s: &str) -> Vec<Vec<usize>> {
        let r = build_ring(s, &Bounds::default()).unwrap();
        all_denominator_sets(&r, 12)
            .unwrap()
            .iter()
            .map(|d| d.members().to_vec())
            .collect()
    }

    /// Independent check: scan every subset containing 1.
    fn brute_multiplicative(r: &FiniteRing) -> Vec<ElementSet> {
        let mut v: Vec<ElementSet> = (0u32..1 << r.order())
            .map(|m| ElementSet::from_predicate(r.order(), |x| m >> x & 1 == 1))
            .filter(|s| s.contains(r.one()) && !s.contains(r.zero()))
            .filter(|s| s.iter().all(|a| s.iter().all(|b| s.contains(r.mul(a, b)))))
            .collect();
        v.sort_by_key(canonical_key);
        v
    }

    #[test]
    fn closure_search_matches_subset_scan() {
        for s in ["Z/6", "Z/8", "tri(2,F2)", "prod(F2,F3)", "F4", "Z/12"] {
            let r = build_ring(s, &Bounds::default()).unwrap();
            assert_eq!(all_multiplicative_sets(&r, 12).unwrap(), brute_multiplicative(&r), "{s}");
        }
    }

    #[test]
    fn small_rings() {
        assert_eq!(den_lists("Z/4"), vec![vec![1], vec![1, 3]]);
        assert_eq!(den_lists("F4"), vec![vec![1], vec![1, 2, 3]]);
        assert_eq!(
            den_lists("Z/6"),
            vec![vec![1], vec![1, 3], vec![1, 4], vec![1, 5], vec![1, 2, 4], vec![1, 3, 5], vec![1, 2, 4, 5]]
        );
    }

    #[test]
    fn oracle_bound_enforced() {
        let r = build_ring("mat(2,F2)", &Bounds::default()).unwrap();
        assert!(matches!(all_denominator_sets(&r, 12), Err(Error::OrderBound { .. })));
    }
}
