#![allow(dead_code)]
//! Brute-force oracle over subset bitmasks, using only the ring tables.

use std::path::PathBuf;

use orelab::corpus::CorpusManifest;
use orelab::FiniteRing;

pub struct BruteSet {
    pub mask: u64,
    pub ass: u64,
    pub core: u64,
}

pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn bit(x: usize) -> u64 {
    1u64 << x
}

/// Every left denominator set, by scanning all subsets with 1 and without 0.
pub fn brute_denominator_sets(r: &FiniteRing) -> Vec<BruteSet> {
    let n = r.order();
    assert!(n <= 16, "brute oracle is for tiny rings");
    let (zero, one) = (r.zero(), r.one());
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask & bit(one) == 0 || mask & bit(zero) != 0 {
            continue;
        }
        let s = members(mask);
        if !s.iter().all(|&a| s.iter().all(|&b| mask & bit(r.mul(a, b)) != 0)) {
            continue;
        }
        // s' r = r' s for some s' in S, r' in R.
        let ore = (0..n).all(|x| s.iter().all(|&t| s.iter().any(|&u| (0..n).any(|y| r.mul(u, x) == r.mul(y, t)))));
        if !ore {
            continue;
        }
        let kills = |x: usize| s.iter().any(|&t| r.mul(t, x) == zero);
        let reversible = (0..n).all(|x| s.iter().all(|&t| r.mul(x, t) != zero || kills(x)));
        if !reversible {
            continue;
        }
        let ass = (0..n).filter(|&x| kills(x)).fold(0, |m, x| m | bit(x));
        let core = s
            .iter()
            .filter(|&&t| (0..n).filter(|&x| r.mul(t, x) == zero).fold(0, |m, x| m | bit(x)) == ass)
            .fold(0, |m, &t| m | bit(t));
        out.push(BruteSet { mask, ass, core });
    }
    out
}

pub fn brute_maximal(sets: &[BruteSet]) -> Vec<&BruteSet> {
    let mut v: Vec<&BruteSet> = sets
        .iter()
        .filter(|a| !sets.iter().any(|b| b.mask != a.mask && a.mask & b.mask == a.mask))
        .collect();
    v.sort_by_key(|s| (s.mask.count_ones(), members(s.mask)));
    v
}

pub fn manifest_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus/manifest.toml")
}

pub fn manifest() -> CorpusManifest {
    CorpusManifest::load(&manifest_path()).unwrap()
}
