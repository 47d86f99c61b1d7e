//! Exact arithmetic in finite commutative rings.
//!
//! A ring is a pair of full operation tables over elements `0..size`, with 0
//! always the additive identity. Tables are verified against every
//! commutative-ring axiom at construction time by triple loops, so anything
//! downstream can trust the algebra unconditionally. The construction
//! grammar lives in [`parse`], ideals in [`ideal`], unit groups and
//! zerodivisors in [`units`], quotients and morphisms in [`quotient`].

pub mod ideal;
pub mod parse;
pub mod quotient;
pub mod units;

pub use ideal::{annihilator, ideal_generate, ideal_power_chain, ideals_all, maximal_ideals, Ideal, PowerChain};
pub use parse::{make_ring, make_ring_with_cap};
pub use quotient::{is_isomorphic, quotient_ring, RingMorphism};
pub use units::{boolean_ring, finite_nonfield_criterion, units_group, zerodivisors, BooleanRing, NonfieldReport, UnitGroup};

use crate::report::TheoremId;
use crate::set::Subset;
use std::fmt;
use thiserror::Error;

/// Largest ring any constructor will build.
pub const DEFAULT_SIZE_CAP: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("cannot parse ring spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },
    #[error("polynomial quotient modulus {p} is not prime")]
    NonPrimeModulus { p: usize },
    #[error("polynomial must be monic: leading coefficient is {leading}, expected 1")]
    NonMonic { leading: usize },
    #[error("ring size {size} exceeds the cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("element {element} out of range for ring of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("ring axiom failed: {0}")]
    AxiomFailed(String),
    #[error("operation rejects the zero ring: {context}")]
    ZeroRing { context: String },
    #[error("not an ideal: {reason}")]
    NotAnIdeal { reason: String },
    #[error("not a ring morphism: {reason}")]
    NotAMorphism { reason: String },
    #[error("theorem violation ({theorem}): {detail}")]
    TheoremViolation { theorem: TheoremId, detail: String },
}

/// A finite commutative unital ring with explicit operation tables.
///
/// Element 0 is the additive identity. The `spec` string records the
/// expression the ring was built from and is echoed in reports.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    size: usize,
    add_table: Vec<u16>,
    mul_table: Vec<u16>,
    neg_table: Vec<u16>,
    zero: usize,
    one: usize,
    spec: String,
}

impl FiniteRing {
    /// Builds a ring from raw tables and verifies every axiom exhaustively.
    pub fn from_tables(
        spec: impl Into<String>,
        size: usize,
        add_table: Vec<u16>,
        mul_table: Vec<u16>,
        one: usize,
    ) -> Result<FiniteRing, RingError> {
        let spec = spec.into();
        if size == 0 {
            return Err(RingError::AxiomFailed("ring must have at least one element".into()));
        }
        if add_table.len() != size * size || mul_table.len() != size * size {
            return Err(RingError::AxiomFailed(format!(
                "table size mismatch for ring of size {size}"
            )));
        }
        for &v in add_table.iter().chain(&mul_table) {
            if v as usize >= size {
                return Err(RingError::ElementOutOfRange {
                    element: v as usize,
                    size,
                });
            }
        }
        if one >= size {
            return Err(RingError::ElementOutOfRange { element: one, size });
        }
        let mut ring = FiniteRing {
            size,
            add_table,
            mul_table,
            neg_table: vec![0; size],
            zero: 0,
            one,
            spec,
        };
        ring.verify_axioms()?;
        for a in 0..size {
            let neg = (0..size)
                .find(|&b| ring.add(a, b) == 0)
                .expect("verified additive inverse");
            ring.neg_table[a] = neg as u16;
        }
        Ok(ring)
    }

    fn verify_axioms(&self) -> Result<(), RingError> {
        let n = self.size;
        for a in 0..n {
            if self.add(0, a) != a {
                return Err(RingError::AxiomFailed(format!("0 + {a} != {a}")));
            }
            if self.mul(self.one, a) != a {
                return Err(RingError::AxiomFailed(format!("1 * {a} != {a}")));
            }
            if !(0..n).any(|b| self.add(a, b) == 0) {
                return Err(RingError::AxiomFailed(format!("{a} has no additive inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(RingError::AxiomFailed(format!("{a} + {b} not commutative")));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(RingError::AxiomFailed(format!("{a} * {b} not commutative")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(RingError::AxiomFailed(format!("+ not associative at ({a},{b},{c})")));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(RingError::AxiomFailed(format!("* not associative at ({a},{b},{c})")));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(RingError::AxiomFailed(format!("* not distributive at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    /// True for the one-element ring, where zero = one.
    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add_table[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg_table[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, exp: u32) -> usize {
        let mut acc = self.one;
        for _ in 0..exp {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    /// Smallest k >= 1 with a added to itself k times equal to zero.
    pub fn additive_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != 0 {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    pub fn check_element(&self, a: usize) -> Result<(), RingError> {
        if a < self.size {
            Ok(())
        } else {
            Err(RingError::ElementOutOfRange {
                element: a,
                size: self.size,
            })
        }
    }

    /// Elementwise sum {a + b : a in A, b in B}.
    pub fn add_sets(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// Elementwise product {a * b : a in A, b in B}.
    pub fn mul_sets(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// Coset a + S.
    pub fn translate(&self, a: usize, s: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for x in s.iter() {
            out.insert(self.add(a, x));
        }
        out
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, size {})", self.spec, self.size)
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec)
    }
}
