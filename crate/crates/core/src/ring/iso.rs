//! Isomorphism search between finite rings.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

use super::{FiniteRing, RingMap};

#[derive(Debug, Clone)]
pub enum IsoOutcome {
    Isomorphic(RingMap),
    /// Names the first invariant that separates the rings.
    Mismatch(String),
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }

    pub fn map(&self) -> Option<&RingMap> {
        match self {
            IsoOutcome::Isomorphic(m) => Some(m),
            IsoOutcome::Mismatch(_) => None,
        }
    }
}

fn additive_shape(r: &FiniteRing) -> Vec<usize> {
    let mut v: Vec<usize> = r.elements().map(|a| r.additive_order(a)).collect();
    v.sort_unstable();
    v
}

/// Searches for a ring isomorphism `r1 -> r2`.
///
/// Cheap invariants are compared first. Otherwise a generating set of `r1`
/// is mapped by backtracking, each choice propagated through sums and
/// products until the map is total or contradicts itself.
pub fn ring_isomorphic(r1: &FiniteRing, r2: &FiniteRing, iso_bound: usize) -> Result<IsoOutcome> {
    if r1.order() != r2.order() {
        return Ok(IsoOutcome::Mismatch(format!(
            "order {} vs {}",
            r1.order(),
            r2.order()
        )));
    }
    if r1.tables_equal(r2) {
        return Ok(IsoOutcome::Isomorphic(RingMap::new(
            r1,
            r2,
            r1.elements().collect(),
        )?));
    }
    if r1.order() > iso_bound {
        return Err(Error::OrderBound {
            which: "isomorphism",
            order: r1.order(),
            bound: iso_bound,
        });
    }
    let checks: [(&str, Box<dyn Fn(&FiniteRing) -> Vec<usize>>); 5] = [
        ("characteristic", Box::new(|r| vec![r.characteristic()])),
        ("unit count", Box::new(|r| vec![r.units().len()])),
        ("idempotent count", Box::new(|r| vec![r.idempotents().len()])),
        ("additive group", Box::new(additive_shape)),
        ("commutativity", Box::new(|r| vec![r.is_commutative() as usize])),
    ];
    for (what, f) in checks.iter() {
        let (a, b) = (f(r1), f(r2));
        if a != b {
            return Ok(IsoOutcome::Mismatch(format!("{what} differs: {a:?} vs {b:?}")));
        }
    }

    let gens = generators(r1);
    let mut search = Search {
        r1,
        r2,
        fwd: vec![None; r1.order()],
        back: vec![None; r2.order()],
        trail: Vec::new(),
    };
    search.assign(r1.zero(), r2.zero());
    search.assign(r1.one(), r2.one());
    if search.backtrack(&gens, 0) {
        let image = search.fwd.iter().map(|x| x.unwrap()).collect();
        return Ok(IsoOutcome::Isomorphic(RingMap::new(r1, r2, image)?));
    }
    Ok(IsoOutcome::Mismatch("no isomorphism exists (exhaustive search)".into()))
}

/// Greedy subring generating set: keep adding the smallest element not
/// yet generated.
fn generators(r: &FiniteRing) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = r.subring_closure(&ElementSet::empty(r.order()));
    while let Some(x) = span.complement().first() {
        gens.push(x);
        span = r.subring_closure(&ElementSet::from_elements(r.order(), gens.iter().copied()));
    }
    gens
}

struct Search<'a> {
    r1: &'a FiniteRing,
    r2: &'a FiniteRing,
    fwd: Vec<Option<usize>>,
    back: Vec<Option<usize>>,
    trail: Vec<usize>,
}

impl Search<'_> {
    /// Records `x -> y` and everything it forces; false on contradiction.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((a, b)) = queue.pop() {
            match (self.fwd[a], self.back[b]) {
                (Some(b0), _) if b0 != b => return false,
                (Some(_), _) => continue,
                (None, Some(_)) => return false,
                (None, None) => {}
            }
            if self.r1.additive_order(a) != self.r2.additive_order(b) {
                return false;
            }
            self.fwd[a] = Some(b);
            self.back[b] = Some(a);
            self.trail.push(a);
            for u in 0..self.r1.order() {
                if let Some(v) = self.fwd[u] {
                    queue.push((self.r1.add(a, u), self.r2.add(b, v)));
                    queue.push((self.r1.mul(a, u), self.r2.mul(b, v)));
                    queue.push((self.r1.mul(u, a), self.r2.mul(v, b)));
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            let b = self.fwd[a].take().unwrap();
            self.back[b] = None;
        }
    }

    fn backtrack(&mut self, gens: &[usize], i: usize) -> bool {
        if i == gens.len() {
            return self.fwd.iter().all(Option::is_some);
        }
        let g = gens[i];
        if self.fwd[g].is_some() {
            return self.backtrack(gens, i + 1);
        }
        for y in 0..self.r2.order() {
            if self.back[y].is_some() {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(g, y) && self.backtrack(gens, i + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}
