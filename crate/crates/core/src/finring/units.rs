//! Units, zerodivisors, and the idempotent Boolean ring of a finite ring.

use super::{FiniteRing, RingError};
use crate::report::TheoremId;

/// The multiplicative group of invertible elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroup {
    /// Unit element indices in increasing order.
    pub elements: Vec<usize>,
    /// inverses[i] is the inverse of elements[i].
    pub inverses: Vec<usize>,
}

impl UnitGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn inverse_of(&self, a: usize) -> Option<usize> {
        self.elements
            .binary_search(&a)
            .ok()
            .map(|i| self.inverses[i])
    }
}

/// All units of the ring, each paired with its (unique) inverse.
pub fn units_group(ring: &FiniteRing) -> UnitGroup {
    let mut elements = Vec::new();
    let mut inverses = Vec::new();
    for a in ring.elements() {
        let mut found: Vec<usize> = ring
            .elements()
            .filter(|&b| ring.mul(a, b) == ring.one())
            .collect();
        if found.is_empty() {
            continue;
        }
        assert_eq!(found.len(), 1, "inverse of {a} is not unique");
        elements.push(a);
        inverses.push(found.pop().unwrap());
    }
    UnitGroup { elements, inverses }
}

/// Z(R) = {a : Ann(a) ≠ 0}. In a nonzero ring Ann(0) = R, so 0 is listed;
/// the zero ring has no zerodivisors under this reading.
pub fn zerodivisors(ring: &FiniteRing) -> Vec<usize> {
    ring.elements()
        .filter(|&a| {
            ring.elements()
                .any(|b| b != ring.zero() && ring.mul(a, b) == ring.zero())
        })
        .collect()
}

/// The ring of idempotents under e ⊕ e' = e + e' − 2ee'.
#[derive(Debug, Clone)]
pub struct BooleanRing {
    /// Idempotents of the parent ring, in increasing order; entry i is the
    /// parent element that index i of `ring` denotes.
    pub elements: Vec<usize>,
    /// The idempotent ring itself, with fully verified axioms.
    pub ring: FiniteRing,
}

pub fn boolean_ring(ring: &FiniteRing) -> BooleanRing {
    let elements = ring.idempotents();
    let index_of = |e: usize| -> u16 {
        elements
            .binary_search(&e)
            .expect("closure under the operations keeps values idempotent") as u16
    };
    let n = elements.len();
    let mut add_table = Vec::with_capacity(n * n);
    let mut mul_table = Vec::with_capacity(n * n);
    for &e in &elements {
        for &f in &elements {
            let twice = ring.add(ring.mul(e, f), ring.mul(e, f));
            let circ = ring.sub(ring.add(e, f), twice);
            add_table.push(index_of(circ));
            mul_table.push(index_of(ring.mul(e, f)));
        }
    }
    let one = index_of(ring.one()) as usize;
    let spec = format!("B({})", ring.spec());
    let ring = FiniteRing::from_tables(&spec, n, add_table, mul_table, one)
        .expect("idempotent operations satisfy the ring axioms");
    BooleanRing { elements, ring }
}

/// Outcome of the zerodivisor finiteness test on a nonzero ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonfieldReport {
    pub ring_size: usize,
    pub is_field: bool,
    /// Z(R), always containing 0 here since the ring is nonzero.
    pub zerodivisors: Vec<usize>,
    /// True when Z(R) ≠ {0}, i.e. the ring is not a domain.
    pub zerodivisors_nonzero: bool,
    /// |Z(R)|², meaningful when Z(R) ≠ {0}.
    pub bound: usize,
    /// |R| = |Z(R)|² exactly.
    pub bound_tight: bool,
}

/// Checks, on one nonzero ring, the equivalence "not a field iff Z(R) is a
/// finite nonzero set" together with the size bound |R| ≤ |Z(R)|².
///
/// At this scale every ring is finite, so the equivalence reduces to
/// "nonfield iff Z(R) ≠ {0}"; a failure of either direction or of the bound
/// is a theorem violation, not a report entry.
pub fn finite_nonfield_criterion(ring: &FiniteRing) -> Result<NonfieldReport, RingError> {
    if ring.is_zero_ring() {
        return Err(RingError::ZeroRing {
            context: "zerodivisor finiteness criterion".into(),
        });
    }
    let units = units_group(ring);
    let is_field = units.len() == ring.size() - 1;
    let zd = zerodivisors(ring);
    let nonzero = zd.len() > 1;
    if is_field == nonzero {
        return Err(RingError::TheoremViolation {
            theorem: TheoremId::Theorem7Seven,
            detail: format!(
                "ring {} of size {}: is_field={} but |Z(R)|={}",
                ring.spec(),
                ring.size(),
                is_field,
                zd.len()
            ),
        });
    }
    let bound = zd.len() * zd.len();
    if nonzero && ring.size() > bound {
        return Err(RingError::TheoremViolation {
            theorem: TheoremId::Theorem7Seven,
            detail: format!(
                "ring {} has size {} > |Z(R)|² = {}",
                ring.spec(),
                ring.size(),
                bound
            ),
        });
    }
    Ok(NonfieldReport {
        ring_size: ring.size(),
        is_field,
        zerodivisors_nonzero: nonzero,
        bound,
        bound_tight: nonzero && ring.size() == bound,
        zerodivisors: zd,
    })
}
