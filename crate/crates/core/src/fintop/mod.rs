//! Finite topological spaces.
//!
//! A topology on a finite set is the same thing as a preorder on it: the
//! specialization preorder x ≤ y (x in the closure of {y}) determines the
//! opens as exactly the up-closed sets, and every preorder arises this way.
//! The struct therefore stores, for each point, its minimal open
//! neighborhood (the up-set of the point) and its point closure (the
//! down-set); the full open family is derived on demand and only for small
//! ground sets, since its size can be exponential.

pub mod enumerate;
pub mod homeo;
pub mod map;
pub mod pi0;
pub mod sober;

pub use enumerate::enumerate_topologies;
pub use homeo::is_homeomorphic;
pub use map::{
    induced_topology, is_continuous, product_topology, quotient_topology, subspace_topology,
    ContinuityReport, MapTable, Partition,
};
pub use pi0::pi0;
pub use sober::{sober_space, SoberSpace};

use crate::set::{canonicalize_family, Subset};
use thiserror::Error;

/// Largest ground size for which the full open family is materialized.
pub const MAX_OPENS_GROUND: usize = 16;

/// Largest ground size for exhaustive topology enumeration.
pub const MAX_ENUMERATION_GROUND: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopError {
    #[error("ground set must be nonempty")]
    EmptyGround,
    #[error("element {element} out of range for ground size {ground}")]
    ElementOutOfRange { element: usize, ground: usize },
    #[error("open family does not contain the empty set")]
    MissingEmpty,
    #[error("open family does not contain the full set")]
    MissingFull,
    #[error("family not closed under union: {a} and {b} but not {result}")]
    UnionEscapes { a: String, b: String, result: String },
    #[error("family not closed under intersection: {a} and {b} but not {result}")]
    IntersectionEscapes { a: String, b: String, result: String },
    #[error("minimal-neighborhood system is not reflexive at {point}")]
    NotReflexive { point: usize },
    #[error("minimal-neighborhood system is not transitive: {x} reaches {y} reaches {z}")]
    NotTransitive { x: usize, y: usize, z: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },
    #[error("size mismatch: {context}")]
    SizeMismatch { context: String },
    #[error("ground size {ground} exceeds the exhaustive cap {cap}")]
    EnumerationCap { ground: usize, cap: usize },
    #[error("ground size {ground} too large to materialize the open family (cap {cap})")]
    OpensCap { ground: usize, cap: usize },
}

/// A topology on {0, .., ground_size−1}, stored by minimal neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinTopology {
    ground: usize,
    /// min_open[x] = smallest open set containing x.
    min_open: Vec<Subset>,
    /// closure[x] = closure of {x}; the transpose of min_open.
    closure: Vec<Subset>,
}

impl FinTopology {
    /// Builds the space from its minimal-neighborhood rows, checking that
    /// they encode a preorder (reflexive and transitive).
    pub fn from_min_open(ground: usize, min_open: Vec<Subset>) -> Result<FinTopology, TopError> {
        if ground == 0 {
            return Err(TopError::EmptyGround);
        }
        assert_eq!(min_open.len(), ground, "one row per point");
        for (x, row) in min_open.iter().enumerate() {
            if !row.contains(x) {
                return Err(TopError::NotReflexive { point: x });
            }
            for y in row.iter() {
                for z in min_open[y].iter() {
                    if !row.contains(z) {
                        return Err(TopError::NotTransitive { x, y, z });
                    }
                }
            }
        }
        let mut closure = vec![Subset::empty(ground); ground];
        for x in 0..ground {
            for y in min_open[x].iter() {
                closure[y].insert(x);
            }
        }
        Ok(FinTopology {
            ground,
            min_open,
            closure,
        })
    }

    pub fn discrete(ground: usize) -> FinTopology {
        let rows = (0..ground).map(|x| Subset::singleton(ground, x)).collect();
        FinTopology::from_min_open(ground, rows).expect("equality is a preorder")
    }

    pub fn trivial(ground: usize) -> FinTopology {
        let rows = vec![Subset::full(ground); ground];
        FinTopology::from_min_open(ground, rows).expect("the complete relation is a preorder")
    }

    /// The two-open-point space: {0} open, {1} closed.
    pub fn sierpinski() -> FinTopology {
        let rows = vec![Subset::singleton(2, 0), Subset::full(2)];
        FinTopology::from_min_open(2, rows).expect("valid preorder")
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    /// Specialization preorder: x ≤ y iff x lies in the closure of {y}.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.min_open[x].contains(y)
    }

    pub fn min_open(&self, x: usize) -> &Subset {
        &self.min_open[x]
    }

    pub fn point_closure(&self, x: usize) -> &Subset {
        &self.closure[x]
    }

    /// A set is open iff it is up-closed: it contains the minimal
    /// neighborhood of each of its points.
    pub fn is_open(&self, s: &Subset) -> bool {
        s.iter().all(|x| self.min_open[x].is_subset_of(s))
    }

    /// A set is closed iff it is down-closed under specialization.
    pub fn is_closed(&self, s: &Subset) -> bool {
        s.iter().all(|x| self.closure[x].is_subset_of(s))
    }

    pub fn closure_set(&self, s: &Subset) -> Subset {
        let mut out = Subset::empty(self.ground);
        for x in s.iter() {
            out.union_with(&self.closure[x]);
        }
        out
    }

    pub fn interior_set(&self, s: &Subset) -> Subset {
        let mut out = Subset::empty(self.ground);
        for x in s.iter() {
            if self.min_open[x].is_subset_of(s) {
                out.insert(x);
            }
        }
        out
    }

    /// The distinct minimal neighborhoods in canonical order; a base for
    /// the topology of minimum size.
    pub fn minimal_base(&self) -> Vec<Subset> {
        canonicalize_family(self.min_open.clone())
    }

    /// The full open family in canonical order. Exponential in the ground
    /// size, so guarded by [`MAX_OPENS_GROUND`].
    pub fn opens_family(&self) -> Result<Vec<Subset>, TopError> {
        if self.ground > MAX_OPENS_GROUND {
            return Err(TopError::OpensCap {
                ground: self.ground,
                cap: MAX_OPENS_GROUND,
            });
        }
        let rows: Vec<u64> = self.min_open.iter().map(|r| r.word()).collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << self.ground) {
            let up_closed = (0..self.ground)
                .all(|x| mask & (1 << x) == 0 || rows[x] & !mask == 0);
            if up_closed {
                out.push(Subset::from_word(self.ground, mask));
            }
        }
        Ok(canonicalize_family(out))
    }

    pub fn open_count(&self) -> Result<usize, TopError> {
        Ok(self.opens_family()?.len())
    }

    /// Serializable literal listing the full open family; same ground cap
    /// as [`Self::opens_family`]. Round-trips through [`make_topology`].
    pub fn literal(&self) -> Result<crate::report::TopologyLiteral, TopError> {
        let opens = self.opens_family()?.iter().map(|s| s.elems()).collect();
        Ok(crate::report::TopologyLiteral {
            n: self.ground,
            opens,
        })
    }
}

/// Validates an explicit open family and converts it to minimal-neighborhood
/// form. Rejections name the violated axiom and the witnessing pair of sets.
pub fn make_topology(ground: usize, opens: &[Vec<usize>]) -> Result<FinTopology, TopError> {
    if ground == 0 {
        return Err(TopError::EmptyGround);
    }
    let mut family: Vec<Subset> = Vec::with_capacity(opens.len());
    for open in opens {
        for &e in open {
            if e >= ground {
                return Err(TopError::ElementOutOfRange { element: e, ground });
            }
        }
        family.push(Subset::from_elems(ground, open));
    }
    let family = canonicalize_family(family);
    if !family.iter().any(|s| s.is_empty()) {
        return Err(TopError::MissingEmpty);
    }
    if !family.iter().any(|s| s.is_full()) {
        return Err(TopError::MissingFull);
    }
    for a in &family {
        for b in &family {
            let u = a.union(b);
            if !family.contains(&u) {
                return Err(TopError::UnionEscapes {
                    a: a.to_string(),
                    b: b.to_string(),
                    result: u.to_string(),
                });
            }
            let i = a.intersection(b);
            if !family.contains(&i) {
                return Err(TopError::IntersectionEscapes {
                    a: a.to_string(),
                    b: b.to_string(),
                    result: i.to_string(),
                });
            }
        }
    }
    let mut min_open = Vec::with_capacity(ground);
    for x in 0..ground {
        let mut m = Subset::full(ground);
        for s in &family {
            if s.contains(x) {
                m.intersect_with(s);
            }
        }
        min_open.push(m);
    }
    let top = FinTopology::from_min_open(ground, min_open)?;
    debug_assert!(
        top.ground > MAX_OPENS_GROUND || top.opens_family().unwrap() == family,
        "a union- and intersection-closed family is exactly the up-sets of its preorder"
    );
    Ok(top)
}

/// Closure, interior, density, and the isolated points of the ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub closure: Subset,
    pub interior: Subset,
    pub is_dense: bool,
    /// Points of the space whose singleton is open.
    pub isolated_points: Vec<usize>,
}

pub fn closure_calculus(top: &FinTopology, s: &Subset) -> ClosureReport {
    assert_eq!(s.ground_size(), top.ground_size(), "subset of the ground set");
    let closure = top.closure_set(s);
    let interior = top.interior_set(s);
    // Oracle at small size: smallest closed superset / largest open subset,
    // found by scanning every subset of the ground set.
    if top.ground_size() <= 10 {
        let n = top.ground_size();
        let mut best_closed = Subset::full(n);
        let mut best_open = Subset::empty(n);
        for mask in 0u64..(1u64 << n) {
            let c = Subset::from_word(n, mask);
            if top.is_closed(&c) && s.is_subset_of(&c) && c.len() < best_closed.len() {
                best_closed = c.clone();
            }
            if top.is_open(&c) && c.is_subset_of(s) && c.len() > best_open.len() {
                best_open = c;
            }
        }
        assert_eq!(closure, best_closed, "closure oracle disagrees");
        assert_eq!(interior, best_open, "interior oracle disagrees");
    }
    let isolated_points = (0..top.ground_size())
        .filter(|&x| top.min_open(x).len() == 1)
        .collect();
    ClosureReport {
        is_dense: closure.is_full(),
        closure,
        interior,
        isolated_points,
    }
}

/// Separation and connectedness facts about one space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpacePredicates {
    pub hausdorff: bool,
    pub t0: bool,
    pub discrete: bool,
    pub trivial: bool,
    pub connected: bool,
    pub totally_disconnected: bool,
}

pub fn space_predicates(top: &FinTopology) -> SpacePredicates {
    let n = top.ground_size();
    // Two points have disjoint neighborhoods iff their minimal ones are
    // disjoint, so the pairwise search only needs the minimal base.
    let hausdorff = (0..n).all(|x| {
        (x + 1..n).all(|y| !top.min_open(x).intersects(top.min_open(y)))
    });
    let t0 = (0..n).all(|x| (x + 1..n).all(|y| top.min_open(x) != top.min_open(y)));
    let discrete = (0..n).all(|x| top.min_open(x).len() == 1);
    let trivial = (0..n).all(|x| top.min_open(x).is_full());
    let (partition, _) = pi0(top);
    let components = partition.blocks().len();
    SpacePredicates {
        hausdorff,
        t0,
        discrete,
        trivial,
        connected: components == 1,
        totally_disconnected: partition.blocks().iter().all(|b| b.len() == 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_accepted_and_oriented() {
        let t = make_topology(2, &[vec![], vec![0], vec![0, 1]]).unwrap();
        assert_eq!(t, FinTopology::sierpinski());
        assert_eq!(t.min_open(0).elems(), vec![0]);
        assert_eq!(t.min_open(1).elems(), vec![0, 1]);
        // Closed sets are complements: cl{0} = {0,1}, cl{1} = {1}.
        assert_eq!(t.point_closure(0).elems(), vec![0, 1]);
        assert_eq!(t.point_closure(1).elems(), vec![1]);
    }

    #[test]
    fn missing_union_is_rejected_with_witness() {
        let err = make_topology(3, &[vec![], vec![0], vec![1], vec![0, 1, 2]]).unwrap_err();
        match err {
            TopError::UnionEscapes { a, b, result } => {
                assert_eq!(a, "{0}");
                assert_eq!(b, "{1}");
                assert_eq!(result, "{0,1}");
            }
            other => panic!("expected a union witness, got {other:?}"),
        }
    }

    #[test]
    fn missing_boundary_sets_are_rejected() {
        assert_eq!(
            make_topology(2, &[vec![0], vec![0, 1]]).unwrap_err(),
            TopError::MissingEmpty
        );
        assert_eq!(
            make_topology(2, &[vec![], vec![0]]).unwrap_err(),
            TopError::MissingFull
        );
        assert_eq!(make_topology(0, &[vec![]]).unwrap_err(), TopError::EmptyGround);
    }

    #[test]
    fn discrete_space_has_identity_preorder() {
        let opens: Vec<Vec<usize>> = (0u64..8).map(|m| Subset::from_word(3, m).elems()).collect();
        let t = make_topology(3, &opens).unwrap();
        assert_eq!(t, FinTopology::discrete(3));
        assert_eq!(t.open_count().unwrap(), 8);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(t.leq(x, y), x == y);
            }
        }
    }

    #[test]
    fn opens_family_round_trips_canonically() {
        let t = make_topology(3, &[vec![], vec![1], vec![1, 2], vec![0, 1, 2]]).unwrap();
        let fam = t.opens_family().unwrap();
        let printed: Vec<String> = fam.iter().map(|s| s.to_string()).collect();
        assert_eq!(printed, vec!["{}", "{1}", "{1,2}", "{0,1,2}"]);
    }

    #[test]
    fn closure_calculus_on_sierpinski() {
        let t = FinTopology::sierpinski();
        let rep = closure_calculus(&t, &Subset::singleton(2, 0));
        assert_eq!(rep.closure.elems(), vec![0, 1]);
        assert!(rep.is_dense);
        assert_eq!(rep.interior.elems(), vec![0]);
        assert_eq!(rep.isolated_points, vec![0]);

        let rep = closure_calculus(&t, &Subset::singleton(2, 1));
        assert_eq!(rep.closure.elems(), vec![1]);
        assert!(!rep.is_dense);
        assert!(rep.interior.is_empty());
    }

    #[test]
    fn closure_in_discrete_space_is_identity() {
        let t = FinTopology::discrete(5);
        let s = Subset::from_elems(5, &[1, 3]);
        let rep = closure_calculus(&t, &s);
        assert_eq!(rep.closure, s);
        assert_eq!(rep.interior, s);
        assert!(!rep.is_dense);
        let rep = closure_calculus(&t, &Subset::empty(5));
        assert!(rep.closure.is_empty());
    }

    #[test]
    fn predicate_table_for_basic_spaces() {
        let d = space_predicates(&FinTopology::discrete(3));
        assert!(d.hausdorff && d.discrete && d.totally_disconnected && d.t0);
        assert!(!d.connected && !d.trivial);

        let tr = space_predicates(&FinTopology::trivial(3));
        assert!(tr.connected && tr.trivial);
        assert!(!tr.hausdorff && !tr.t0 && !tr.discrete);

        let s = space_predicates(&FinTopology::sierpinski());
        assert!(s.t0 && s.connected);
        assert!(!s.hausdorff && !s.discrete && !s.trivial);

        let one = space_predicates(&FinTopology::trivial(1));
        assert!(one.hausdorff && one.discrete && one.trivial && one.connected);
    }
}
