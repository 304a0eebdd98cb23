//! Finite rings given by their addition and multiplication tables.

mod build;
mod expr;
pub mod io;
mod iso;

use std::fmt;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bitset::{ElementSet, MAX_ORDER};
use crate::error::{ensure_consistent, Error, Result};

pub use build::{
    integers_mod, matrix_ring, opposite, polynomial_quotient, prime_power_field, product,
    quotient_by_generators, quotient_ring, triangular_ring, QuotientRing,
};
pub(crate) use build::{product_coords, product_index};
pub use expr::{build_ring, parse_expr, RingExpr};
pub use iso::{ring_isomorphic, IsoOutcome};

/// A ring with identity on the element indices `0..order`.
///
/// Tables are validated on construction and never change afterwards.
#[derive(Clone)]
pub struct FiniteRing {
    name: String,
    provenance: String,
    order: usize,
    zero: usize,
    one: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    factors: Option<Vec<FiniteRing>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

/// Serializes the ring's identity only; tables go through [`io::RingFile`].
impl Serialize for FiniteRing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FiniteRing", 5)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("provenance", &self.provenance)?;
        st.serialize_field("content_hash", &self.content_hash())?;
        st.end()
    }
}

impl FiniteRing {
    /// Builds a ring from full operation tables and checks every axiom.
    pub fn from_tables(
        name: impl Into<String>,
        provenance: impl Into<String>,
        zero: usize,
        one: usize,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
    ) -> Result<Self> {
        let n = add.len();
        if mul.len() != n || add.iter().chain(mul.iter()).any(|row| row.len() != n) {
            return Err(Error::RingFile("tables must both be square of the same order".into()));
        }
        Self::from_fn(
            name,
            provenance,
            n,
            zero,
            one,
            |a, b| add[a][b],
            |a, b| mul[a][b],
        )
    }

    pub(crate) fn from_fn(
        name: impl Into<String>,
        provenance: impl Into<String>,
        order: usize,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderBound {
                which: "representable",
                order,
                bound: MAX_ORDER,
            });
        }
        if order < 2 {
            return Err(Error::AxiomViolation {
                axiom: "zero differs from one",
                witness: (zero, one, 0),
            });
        }
        let mut add_t = Vec::with_capacity(order * order);
        let mut mul_t = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let (s, p) = (add(a, b), mul(a, b));
                if s >= order || p >= order {
                    return Err(Error::AxiomViolation {
                        axiom: "closure",
                        witness: (a, b, 0),
                    });
                }
                add_t.push(s as u8);
                mul_t.push(p as u8);
            }
        }
        let mut ring = FiniteRing {
            name: name.into(),
            provenance: provenance.into(),
            order,
            zero,
            one,
            add: add_t,
            mul: mul_t,
            neg: Vec::new(),
            factors: None,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&mut self) -> Result<()> {
        let n = self.order;
        let (z, o) = (self.zero, self.one);
        let fail = |axiom, a, b, c| Err(Error::AxiomViolation { axiom, witness: (a, b, c) });
        if z >= n || o >= n {
            return fail("identity index in range", z, o, 0);
        }
        if z == o {
            return fail("zero differs from one", z, o, 0);
        }
        let mut neg = vec![0u8; n];
        for a in 0..n {
            if self.add(a, z) != a || self.add(z, a) != a {
                return fail("additive identity", a, z, 0);
            }
            if self.mul(a, o) != a || self.mul(o, a) != a {
                return fail("multiplicative identity", a, o, 0);
            }
            match (0..n).find(|&b| self.add(a, b) == z) {
                Some(b) => neg[a] = b as u8,
                None => return fail("additive inverse", a, 0, 0),
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", a, b, 0);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab_sum = self.add(a, b);
                let ab_prod = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab_sum, c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", a, b, c);
                    }
                    if self.mul(ab_prod, c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", a, b, c);
                    }
                    let bc_sum = self.add(b, c);
                    if self.mul(a, bc_sum) != self.add(ab_prod, self.mul(a, c)) {
                        return fail("left distributivity", a, b, c);
                    }
                    if self.mul(ab_sum, c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return fail("right distributivity", a, b, c);
                    }
                }
            }
        }
        self.neg = neg;
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub(crate) fn with_factors(mut self, factors: Vec<FiniteRing>) -> Self {
        self.factors = Some(factors);
        self
    }

    /// Factor rings when this ring was built as a direct product.
    pub fn factors(&self) -> Option<&[FiniteRing]> {
        self.factors.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn zero_set(&self) -> ElementSet {
        ElementSet::singleton(self.order, self.zero)
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, it: I) -> Result<ElementSet> {
        let mut s = self.empty_set();
        for x in it {
            self.check_element(x)?;
            s.insert(x);
        }
        Ok(s)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    /// Two-sided inverse of `a`, if it exists.
    pub fn unit_inverse(&self, a: usize) -> Option<usize> {
        self.elements()
            .find(|&b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, a: usize) -> bool {
        self.elements().all(|b| self.mul(a, b) == self.mul(b, a))
    }

    /// Additive order of `a`.
    pub fn additive_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.zero {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    /// Table equality, ignoring names and provenance.
    pub fn tables_equal(&self, other: &FiniteRing) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }

    /// SHA-256 over the order, identities and both tables, as hex.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.order as u32).to_le_bytes());
        h.update((self.zero as u32).to_le_bytes());
        h.update((self.one as u32).to_le_bytes());
        h.update(&self.add);
        h.update(&self.mul);
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add
            .chunks(self.order)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.order)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    // ---- subsets ----

    /// `{a + b : a ∈ A, b ∈ B}`.
    pub fn sumset(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in a {
            for y in b {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// `{a · b : a ∈ A, b ∈ B}` (not closed under addition).
    pub fn product_set(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in a {
            for y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    pub fn is_additive_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(self.zero) && s.iter().all(|a| s.iter().all(|b| s.contains(self.sub(a, b))))
    }

    pub fn is_left_ideal(&self, s: &ElementSet) -> bool {
        self.is_additive_subgroup(s)
            && s.iter().all(|a| self.elements().all(|r| s.contains(self.mul(r, a))))
    }

    pub fn is_right_ideal(&self, s: &ElementSet) -> bool {
        self.is_additive_subgroup(s)
            && s.iter().all(|a| self.elements().all(|r| s.contains(self.mul(a, r))))
    }

    pub fn is_ideal(&self, s: &ElementSet) -> bool {
        self.is_left_ideal(s) && self.is_right_ideal(s)
    }

    /// `ker(s·) = {r : s·r = 0}`, a right ideal.
    pub fn left_kernel(&self, s: usize) -> Result<ElementSet> {
        self.check_element(s)?;
        let k = ElementSet::from_predicate(self.order, |r| self.mul(s, r) == self.zero);
        ensure_consistent!(self.is_right_ideal(&k), "ker({s}·) is not a right ideal");
        Ok(k)
    }

    /// Left (`{r : rX = 0}`) or right (`{r : Xr = 0}`) annihilator.
    pub fn annihilator(&self, x: &ElementSet, side: Side) -> Result<ElementSet> {
        let ann = match side {
            Side::Left => ElementSet::from_predicate(self.order, |r| {
                x.iter().all(|a| self.mul(r, a) == self.zero)
            }),
            Side::Right => ElementSet::from_predicate(self.order, |r| {
                x.iter().all(|a| self.mul(a, r) == self.zero)
            }),
        };
        let closed = match side {
            Side::Left => self.is_left_ideal(&ann),
            Side::Right => self.is_right_ideal(&ann),
        };
        ensure_consistent!(closed, "{side:?} annihilator of {x} is not a {side:?} ideal");
        Ok(ann)
    }

    /// Smallest two-sided ideal containing `x` (worklist closure under
    /// `+`, `r·(−)` and `(−)·r`).
    pub fn ideal_closure(&self, x: &ElementSet) -> ElementSet {
        self.closure_with(x, |ring, a, push| {
            for r in ring.elements() {
                push(ring.mul(r, a));
                push(ring.mul(a, r));
            }
        })
    }

    /// Smallest left ideal containing `x`.
    pub fn left_ideal_closure(&self, x: &ElementSet) -> ElementSet {
        self.closure_with(x, |ring, a, push| {
            for r in ring.elements() {
                push(ring.mul(r, a));
            }
        })
    }

    /// Smallest subring (with 1) containing `x`.
    pub fn subring_closure(&self, x: &ElementSet) -> ElementSet {
        let mut seeds = *x;
        seeds.insert(self.one);
        let mut set = self.zero_set();
        let mut queue: Vec<usize> = seeds.iter().collect();
        while let Some(a) = queue.pop() {
            if !set.insert(a) {
                continue;
            }
            for b in set.iter() {
                for c in [self.add(a, b), self.mul(a, b), self.mul(b, a)] {
                    if !set.contains(c) {
                        queue.push(c);
                    }
                }
            }
        }
        set
    }

    /// Additive closure of `x`, extended by `extra(a)` for each new member.
    fn closure_with(
        &self,
        x: &ElementSet,
        extra: impl Fn(&Self, usize, &mut dyn FnMut(usize)),
    ) -> ElementSet {
        let mut set = self.zero_set();
        let mut queue: Vec<usize> = x.iter().collect();
        while let Some(a) = queue.pop() {
            if !set.insert(a) {
                continue;
            }
            let mut push = |c: usize| {
                if !set.contains(c) {
                    queue.push(c);
                }
            };
            extra(self, a, &mut push);
            for b in set.iter() {
                push(self.add(a, b));
            }
        }
        set
    }

    // ---- element classes ----

    pub fn units(&self) -> ElementSet {
        ElementSet::from_predicate(self.order, |a| self.unit_inverse(a).is_some())
    }

    /// Elements that are neither left nor right zero divisors.
    pub fn regular_elements(&self) -> ElementSet {
        ElementSet::from_predicate(self.order, |a| {
            self.elements().all(|r| {
                r == self.zero || (self.mul(a, r) != self.zero && self.mul(r, a) != self.zero)
            })
        })
    }

    pub fn idempotents(&self) -> ElementSet {
        ElementSet::from_predicate(self.order, |e| self.mul(e, e) == e)
    }

    pub fn classify_elements(&self) -> Result<ElementClasses> {
        let units = self.units();
        let regular = self.regular_elements();
        ensure_consistent!(units.is_subset(&regular), "a unit is a zero divisor");
        // Finite rings: a regular element has injective, hence bijective,
        // left and right multiplication maps.
        ensure_consistent!(
            units == regular,
            "regular elements {regular} differ from units {units}"
        );
        let idempotents = self.idempotents();
        let central_idempotents =
            ElementSet::from_predicate(self.order, |e| idempotents.contains(e) && self.is_central(e));
        Ok(ElementClasses {
            zero_divisors: regular.complement(),
            units,
            regular,
            idempotents,
            central_idempotents,
            regular_equals_units: true,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Element classification of a ring.
///
/// `zero_divisors` is the complement of `regular`, so it includes `0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementClasses {
    pub units: ElementSet,
    pub regular: ElementSet,
    pub zero_divisors: ElementSet,
    pub idempotents: ElementSet,
    pub central_idempotents: ElementSet,
    /// Always true at finite order; recorded so reports state it.
    pub regular_equals_units: bool,
}

/// A ring homomorphism stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingMap {
    pub source: String,
    pub target: String,
    pub image: Vec<usize>,
}

impl RingMap {
    /// Checks that `image` preserves 0, 1, + and · exhaustively.
    pub fn new(source: &FiniteRing, target: &FiniteRing, image: Vec<usize>) -> Result<Self> {
        ensure_consistent!(
            image.len() == source.order() && image.iter().all(|&x| x < target.order()),
            "map table has wrong shape"
        );
        ensure_consistent!(
            image[source.zero()] == target.zero() && image[source.one()] == target.one(),
            "map does not preserve 0 and 1"
        );
        for a in source.elements() {
            for b in source.elements() {
                ensure_consistent!(
                    image[source.add(a, b)] == target.add(image[a], image[b]),
                    "map does not preserve {a} + {b}"
                );
                ensure_consistent!(
                    image[source.mul(a, b)] == target.mul(image[a], image[b]),
                    "map does not preserve {a} * {b}"
                );
            }
        }
        Ok(RingMap {
            source: source.name().to_string(),
            target: target.name().to_string(),
            image,
        })
    }

    pub fn identity(ring: &FiniteRing) -> Self {
        RingMap {
            source: ring.name().to_string(),
            target: ring.name().to_string(),
            image: ring.elements().collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image_of(&self, set: &ElementSet, target: &FiniteRing) -> ElementSet {
        ElementSet::from_elements(target.order(), set.iter().map(|x| self.image[x]))
    }

    pub fn preimage(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_predicate(self.image.len(), |x| set.contains(self.image[x]))
    }

    pub fn kernel(&self, target: &FiniteRing) -> ElementSet {
        self.preimage(&target.zero_set())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.image.iter().all(|x| seen.insert(*x))
    }

    pub fn is_bijective(&self, target: &FiniteRing) -> bool {
        self.image.len() == target.order() && self.is_injective()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> FiniteRing {
        integers_mod(n).unwrap()
    }

    #[test]
    fn rejects_broken_multiplication_with_triple() {
        let n = 3;
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mut mul: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        mul[2][2] = 2;
        let err = FiniteRing::from_tables("bad", "file", 0, 1, &add, &mul).unwrap_err();
        match err {
            Error::AxiomViolation { axiom, .. } => {
                assert!(axiom.contains("associativity") || axiom.contains("distributivity"))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_trivial_ring() {
        let err = FiniteRing::from_tables("0", "file", 0, 0, &[vec![0]], &[vec![0]]).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { .. }));
    }

    #[test]
    fn z6_classes() {
        let r = zn(6);
        let c = r.classify_elements().unwrap();
        assert_eq!(c.units.to_vec(), vec![1, 5]);
        assert_eq!(c.idempotents.to_vec(), vec![0, 1, 3, 4]);
        assert_eq!(c.central_idempotents, c.idempotents);
        assert_eq!(c.zero_divisors.to_vec(), vec![0, 2, 3, 4]);
    }

    #[test]
    fn left_kernels_and_annihilators_in_z6() {
        let r = zn(6);
        assert_eq!(r.left_kernel(3).unwrap().to_vec(), vec![0, 2, 4]);
        assert_eq!(r.left_kernel(r.one()).unwrap().to_vec(), vec![0]);
        let two = r.set_of([2]).unwrap();
        assert_eq!(r.annihilator(&two, Side::Left).unwrap().to_vec(), vec![0, 3]);
        let zero = r.zero_set();
        assert!(r.annihilator(&zero, Side::Left).unwrap().is_full());
    }

    #[test]
    fn ring_map_rejects_non_homomorphism() {
        let z4 = zn(4);
        let z2 = zn(2);
        assert!(RingMap::new(&z4, &z2, vec![0, 1, 0, 1]).is_ok());
        assert!(RingMap::new(&z4, &z2, vec![0, 1, 1, 1]).is_err());
    }

    #[test]
    fn content_hash_tracks_tables_only() {
        let a = zn(5);
        let b = zn(5).with_name("other");
        assert_eq!(a.content_hash(), b.content_hash());
        assert_ne!(a.content_hash(), zn(6).content_hash());
    }
}
