//! Ideals of a finite ring and their power chains.

use super::{FiniteRing, RingError};
use crate::set::Subset;
use std::collections::BTreeSet;

/// An ideal, stored as the subset of element indices it contains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring_size: usize,
    elements: Subset,
}

impl Ideal {
    /// Wraps an explicit element set after checking the ideal axioms.
    pub fn from_elements(ring: &FiniteRing, elems: &[usize]) -> Result<Ideal, RingError> {
        for &e in elems {
            ring.check_element(e)?;
        }
        let elements = Subset::from_elems(ring.size(), elems);
        if !elements.contains(ring.zero()) {
            return Err(RingError::NotAnIdeal {
                reason: "does not contain zero".into(),
            });
        }
        for a in elements.iter() {
            for b in elements.iter() {
                let s = ring.add(a, b);
                if !elements.contains(s) {
                    return Err(RingError::NotAnIdeal {
                        reason: format!("{a} + {b} = {s} escapes the set"),
                    });
                }
            }
            for r in ring.elements() {
                let p = ring.mul(r, a);
                if !elements.contains(p) {
                    return Err(RingError::NotAnIdeal {
                        reason: format!("{r} * {a} = {p} escapes the set"),
                    });
                }
            }
        }
        Ok(Ideal {
            ring_size: ring.size(),
            elements,
        })
    }

    pub fn elems(&self) -> Vec<usize> {
        self.elements.elems()
    }

    pub fn subset(&self) -> &Subset {
        &self.elements
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.contains(e)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an ideal always contains zero
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.elements.len() == self.ring_size
    }

    pub fn ring_size(&self) -> usize {
        self.ring_size
    }
}

/// Smallest ideal containing `gens`: the closure under addition and
/// multiplication by arbitrary ring elements, saturated to a fixpoint.
pub fn ideal_generate(ring: &FiniteRing, gens: &[usize]) -> Result<Ideal, RingError> {
    for &g in gens {
        ring.check_element(g)?;
    }
    let mut elements = Subset::from_elems(ring.size(), gens);
    elements.insert(ring.zero());
    loop {
        let mut next = elements.clone();
        for a in elements.iter() {
            for b in elements.iter() {
                next.insert(ring.add(a, b));
            }
            for r in ring.elements() {
                next.insert(ring.mul(r, a));
            }
        }
        if next == elements {
            break;
        }
        elements = next;
    }
    Ok(Ideal {
        ring_size: ring.size(),
        elements,
    })
}

/// The product ideal I*J, generated by the pairwise element products.
pub fn ideal_product(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Ideal {
    let mut gens = Vec::new();
    for a in i.subset().iter() {
        for b in j.subset().iter() {
            gens.push(ring.mul(a, b));
        }
    }
    ideal_generate(ring, &gens).expect("products of ring elements are ring elements")
}

/// The descending chain I, I^2, I^3, ... up to its stabilization point.
#[derive(Debug, Clone)]
pub struct PowerChain {
    /// Powers I^1 .. I^m where m is the first exponent with I^m = I^(m+1).
    pub chain: Vec<Ideal>,
    /// The stabilization exponent m.
    pub stable_index: usize,
    /// I^m, which equals the intersection of all powers.
    pub stable: Ideal,
    /// stable = {0}
    pub nilpotent: bool,
    /// I^2 = I
    pub idempotent: bool,
}

pub fn ideal_power_chain(ring: &FiniteRing, ideal: &Ideal) -> PowerChain {
    let mut chain = vec![ideal.clone()];
    loop {
        let last = chain.last().unwrap();
        let next = ideal_product(ring, last, ideal);
        if &next == last {
            break;
        }
        chain.push(next);
    }
    let stable = chain.last().unwrap().clone();
    let stable_index = chain.len();
    PowerChain {
        nilpotent: stable.is_zero(),
        idempotent: stable_index == 1,
        chain,
        stable_index,
        stable,
    }
}

/// Ann(x) = {r : r*x = 0}, always an ideal.
pub fn annihilator(ring: &FiniteRing, x: usize) -> Result<Ideal, RingError> {
    ring.check_element(x)?;
    let elems: Vec<usize> = ring.elements().filter(|&r| ring.mul(r, x) == 0).collect();
    Ideal::from_elements(ring, &elems)
}

/// Every ideal of the ring, in canonical (size, element-list) order.
///
/// Grows ideals one generator at a time from the zero ideal; the lattice of
/// ideals of a ring within the size cap is small enough to walk directly.
pub fn ideals_all(ring: &FiniteRing) -> Vec<Ideal> {
    let zero = ideal_generate(ring, &[]).expect("zero ideal");
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(zero.elems());
    let mut frontier = vec![zero];
    while let Some(ideal) = frontier.pop() {
        for x in ring.elements() {
            if ideal.contains(x) {
                continue;
            }
            let mut gens = ideal.elems();
            gens.push(x);
            let bigger = ideal_generate(ring, &gens).expect("elements in range");
            if seen.insert(bigger.elems()) {
                frontier.push(bigger);
            }
        }
    }
    let mut out: Vec<Ideal> = seen
        .into_iter()
        .map(|elems| Ideal {
            ring_size: ring.size(),
            elements: Subset::from_elems(ring.size(), &elems),
        })
        .collect();
    out.sort_by(|a, b| a.subset().cmp_canonical(b.subset()));
    out
}

/// Ideals maximal among the proper ideals.
pub fn maximal_ideals(ring: &FiniteRing) -> Vec<Ideal> {
    let all = ideals_all(ring);
    let proper: Vec<&Ideal> = all.iter().filter(|i| !i.is_full()).collect();
    proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| i.subset() != j.subset() && i.subset().is_subset_of(j.subset()))
        })
        .map(|i| (*i).clone())
        .collect()
}
