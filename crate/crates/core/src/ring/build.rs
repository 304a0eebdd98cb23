//! Ring constructors.
//!
//! Element indices are canonical: tuples and matrix entries are encoded
//! lexicographically (first component most significant); polynomial
//! residues use base-`m` digits with the constant term least significant.
//! Identical inputs therefore always produce identical tables.

use crate::bitset::{ElementSet, MAX_ORDER};
use crate::error::{ensure_consistent, Error, Result};

use super::{FiniteRing, RingMap};

fn checked_order(base: usize, exp: usize, what: &'static str) -> Result<usize> {
    let mut n: usize = 1;
    for _ in 0..exp {
        n = n.checked_mul(base).filter(|&v| v <= MAX_ORDER).ok_or(Error::OrderBound {
            which: what,
            order: base.saturating_pow(exp as u32),
            bound: MAX_ORDER,
        })?;
    }
    Ok(n)
}

/// `Z/n`.
pub fn integers_mod(n: usize) -> Result<FiniteRing> {
    let name = format!("Z/{n}");
    FiniteRing::from_fn(&name, &name, n, 0, 1 % n.max(1), |a, b| (a + b) % n, |a, b| (a * b) % n)
}

/// Fields of order 2, 3, 4, 5, 7, 8 and 9 with fixed defining polynomials
/// (`x²+x+1`, `x³+x+1`, `x²+1` for the non-prime orders).
pub fn prime_power_field(q: usize) -> Result<FiniteRing> {
    let name = format!("F{q}");
    let (p, modulus): (usize, &[usize]) = match q {
        2 | 3 | 5 | 7 => (q, &[]),
        4 => (2, &[1, 1, 1]),
        8 => (2, &[1, 1, 0, 1]),
        9 => (3, &[1, 0, 1]),
        _ => {
            return Err(Error::Parse {
                offset: 0,
                message: format!("no built-in field of order {q}"),
            })
        }
    };
    let prime = integers_mod(p)?;
    let ring = if modulus.is_empty() {
        prime
    } else {
        polynomial_quotient(&prime, modulus)?
    };
    ensure_consistent!(
        ring.elements().all(|a| a == ring.zero() || ring.unit_inverse(a).is_some()),
        "built-in F{q} is not a field"
    );
    Ok(FiniteRing { name: name.clone(), provenance: name, ..ring })
}

/// `X[x]/(f)` for a monic `f` given by coefficient indices, constant first.
pub fn polynomial_quotient(base: &FiniteRing, modulus: &[usize]) -> Result<FiniteRing> {
    let d = modulus.len().saturating_sub(1);
    if d == 0 || *modulus.last().unwrap() != base.one() {
        return Err(Error::Parse {
            offset: 0,
            message: "polynomial modulus must be monic of degree at least 1".into(),
        });
    }
    for &c in modulus {
        base.check_element(c)?;
    }
    let m = base.order();
    let n = checked_order(m, d, "construction")?;
    let decode = |mut x: usize| {
        let mut c = vec![0; d];
        for slot in c.iter_mut() {
            *slot = x % m;
            x /= m;
        }
        c
    };
    let encode = |c: &[usize]| c.iter().rev().fold(0, |acc, &v| acc * m + v);
    let digits: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let add = |a: usize, b: usize| {
        let c: Vec<usize> = (0..d).map(|i| base.add(digits[a][i], digits[b][i])).collect();
        encode(&c)
    };
    let mul = |a: usize, b: usize| {
        let mut full = vec![base.zero(); 2 * d - 1];
        for i in 0..d {
            for j in 0..d {
                let t = base.mul(digits[a][i], digits[b][j]);
                full[i + j] = base.add(full[i + j], t);
            }
        }
        for k in (d..full.len()).rev() {
            let c = full[k];
            full[k] = base.zero();
            for (i, &f) in modulus.iter().take(d).enumerate() {
                let t = base.mul(c, f);
                full[k - d + i] = base.sub(full[k - d + i], t);
            }
        }
        encode(&full[..d])
    };
    let coeffs = modulus.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
    let prov = format!("poly({},[{coeffs}])", base.provenance());
    let zero = encode(&vec![base.zero(); d]);
    let mut one_digits = vec![base.zero(); d];
    one_digits[0] = base.one();
    let one = encode(&one_digits);
    FiniteRing::from_fn(prov.clone(), prov, n, zero, one, add, mul)
}

/// Shared builder for full and upper-triangular matrix rings.
fn matrix_like(k: usize, base: &FiniteRing, upper_only: bool) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::Parse {
            offset: 0,
            message: "matrix size must be positive".into(),
        });
    }
    let slots: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| !upper_only || i <= j)
        .collect();
    let m = base.order();
    let n = checked_order(m, slots.len(), "construction")?;
    let slot_of = |i: usize, j: usize| slots.iter().position(|&s| s == (i, j));
    let decode = |mut x: usize| {
        let mut e = vec![0; slots.len()];
        for slot in e.iter_mut().rev() {
            *slot = x % m;
            x /= m;
        }
        e
    };
    let encode = |e: &[usize]| e.iter().fold(0, |acc, &v| acc * m + v);
    let entries: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let add = |a: usize, b: usize| {
        let e: Vec<usize> = (0..slots.len())
            .map(|s| base.add(entries[a][s], entries[b][s]))
            .collect();
        encode(&e)
    };
    let mul = |a: usize, b: usize| {
        let e: Vec<usize> = slots
            .iter()
            .map(|&(i, j)| {
                (0..k).fold(base.zero(), |acc, l| match (slot_of(i, l), slot_of(l, j)) {
                    (Some(x), Some(y)) => base.add(acc, base.mul(entries[a][x], entries[b][y])),
                    _ => acc,
                })
            })
            .collect();
        encode(&e)
    };
    let diag = |v: usize| {
        let e: Vec<usize> = slots
            .iter()
            .map(|&(i, j)| if i == j { v } else { base.zero() })
            .collect();
        encode(&e)
    };
    let kind = if upper_only { "tri" } else { "mat" };
    let prov = format!("{kind}({k},{})", base.provenance());
    FiniteRing::from_fn(prov.clone(), prov, n, diag(base.zero()), diag(base.one()), add, mul)
}

/// `k×k` matrices over `base`, entries encoded row-major.
pub fn matrix_ring(k: usize, base: &FiniteRing) -> Result<FiniteRing> {
    matrix_like(k, base, false)
}

/// Upper-triangular `k×k` matrices over `base`, entries `(i ≤ j)` row-major.
pub fn triangular_ring(k: usize, base: &FiniteRing) -> Result<FiniteRing> {
    matrix_like(k, base, true)
}

/// Mixed-radix digits of a product element, first factor first.
pub(crate) fn product_coords(factors: &[FiniteRing], mut x: usize) -> Vec<usize> {
    let mut c = vec![0; factors.len()];
    for (i, f) in factors.iter().enumerate().rev() {
        c[i] = x % f.order();
        x /= f.order();
    }
    c
}

pub(crate) fn product_index(factors: &[FiniteRing], coords: &[usize]) -> usize {
    factors
        .iter()
        .zip(coords)
        .fold(0, |acc, (f, &c)| acc * f.order() + c)
}

/// Direct product; the factors are retained on the result.
pub fn product(factors: &[FiniteRing]) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "product needs at least one factor".into(),
        });
    }
    let n = factors.iter().try_fold(1usize, |acc, f| {
        acc.checked_mul(f.order())
            .filter(|&v| v <= MAX_ORDER)
            .ok_or(Error::OrderBound {
                which: "construction",
                order: acc.saturating_mul(f.order()),
                bound: MAX_ORDER,
            })
    })?;
    let coords: Vec<Vec<usize>> = (0..n).map(|x| product_coords(factors, x)).collect();
    let combine = |a: usize, b: usize, op: &dyn Fn(&FiniteRing, usize, usize) -> usize| {
        let c: Vec<usize> = factors
            .iter()
            .enumerate()
            .map(|(i, f)| op(f, coords[a][i], coords[b][i]))
            .collect();
        product_index(factors, &c)
    };
    let zero = product_index(factors, &factors.iter().map(|f| f.zero()).collect::<Vec<_>>());
    let one = product_index(factors, &factors.iter().map(|f| f.one()).collect::<Vec<_>>());
    let prov = format!(
        "prod({})",
        factors.iter().map(|f| f.provenance()).collect::<Vec<_>>().join(",")
    );
    let name = factors.iter().map(|f| f.name()).collect::<Vec<_>>().join(" x ");
    let ring = FiniteRing::from_fn(
        name,
        prov,
        n,
        zero,
        one,
        |a, b| combine(a, b, &|f, x, y| f.add(x, y)),
        |a, b| combine(a, b, &|f, x, y| f.mul(x, y)),
    )?;
    Ok(ring.with_factors(factors.to_vec()))
}

/// The opposite ring: same elements, `a ∘ b = b · a`.
pub fn opposite(ring: &FiniteRing) -> Result<FiniteRing> {
    let prov = format!("opp({})", ring.provenance());
    let name = format!("opp({})", ring.name());
    let mut out = FiniteRing::from_fn(
        name,
        prov,
        ring.order(),
        ring.zero(),
        ring.one(),
        |a, b| ring.add(a, b),
        |a, b| ring.mul(b, a),
    )?;
    if let Some(fs) = ring.factors() {
        let opp: Result<Vec<_>> = fs.iter().map(opposite).collect();
        out = out.with_factors(opp?);
    }
    Ok(out)
}

/// `R/I` with its projection and coset representatives.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub ring: FiniteRing,
    pub ideal: ElementSet,
    pub projection: RingMap,
    /// `reps[q]` is the smallest source index in coset `q`.
    pub reps: Vec<usize>,
}

impl QuotientRing {
    /// Image of a source subset.
    pub fn project(&self, set: &ElementSet) -> ElementSet {
        self.projection.image_of(set, &self.ring)
    }

    /// Full preimage of a quotient subset.
    pub fn lift(&self, set: &ElementSet) -> ElementSet {
        self.projection.preimage(set)
    }
}

/// Quotient by the two-sided ideal generated by `gens`.
pub fn quotient_by_generators(ring: &FiniteRing, gens: &[usize]) -> Result<QuotientRing> {
    let seeds = ring.set_of(gens.iter().copied())?;
    let ideal = ring.ideal_closure(&seeds);
    let list = gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",");
    let prov = format!("quot({},[{list}])", ring.provenance());
    let name = format!("{}/({list})", ring.name());
    quotient_impl(ring, ideal, name, prov)
}

/// Quotient by a two-sided ideal given as an element set.
pub fn quotient_ring(ring: &FiniteRing, ideal: &ElementSet) -> Result<QuotientRing> {
    ensure_consistent!(ring.is_ideal(ideal), "{ideal} is not a two-sided ideal");
    // Greedy generating set keeps provenance strings short.
    let mut gens = Vec::new();
    let mut span = ring.zero_set();
    for x in ideal.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = ring.ideal_closure(&ring.set_of(gens.iter().copied())?);
        }
    }
    let list = gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",");
    let prov = format!("quot({},[{list}])", ring.provenance());
    let name = format!("{}/({list})", ring.name());
    quotient_impl(ring, *ideal, name, prov)
}

fn quotient_impl(
    ring: &FiniteRing,
    ideal: ElementSet,
    name: String,
    prov: String,
) -> Result<QuotientRing> {
    if ideal.contains(ring.one()) {
        return Err(Error::AxiomViolation {
            axiom: "quotient by a proper ideal",
            witness: (ring.one(), 0, 0),
        });
    }
    let rep_of: Vec<usize> = ring
        .elements()
        .map(|x| ideal.iter().map(|i| ring.add(x, i)).min().unwrap())
        .collect();
    let mut reps: Vec<usize> = rep_of.clone();
    reps.sort_unstable();
    reps.dedup();
    let index_of = |x: usize| reps.binary_search(&rep_of[x]).unwrap();
    let q = FiniteRing::from_fn(
        name,
        prov,
        reps.len(),
        index_of(ring.zero()),
        index_of(ring.one()),
        |a, b| index_of(ring.add(reps[a], reps[b])),
        |a, b| index_of(ring.mul(reps[a], reps[b])),
    )?;
    let image: Vec<usize> = ring.elements().map(index_of).collect();
    let projection = RingMap::new(ring, &q, image)?;
    ensure_consistent!(
        projection.kernel(&q) == ideal,
        "projection kernel differs from the ideal"
    );
    Ok(QuotientRing {
        ring: q,
        ideal,
        projection,
        reps,
    })
}
