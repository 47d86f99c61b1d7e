//! The space of irreducible closed sets with its canonical map.

use super::map::{is_continuous, MapTable};
use super::FinTopology;
use crate::set::{canonicalize_family, Subset};

/// t(X): points are the irreducible closed subsets of the base space.
#[derive(Debug, Clone)]
pub struct SoberSpace {
    /// Irreducible closed subsets in canonical order. On a finite space
    /// these are exactly the distinct point closures.
    pub points: Vec<Subset>,
    /// Topology on `points`: specialization is set inclusion.
    pub topology: FinTopology,
    /// x ↦ the index of closure{x} in `points`.
    pub canonical_map: MapTable,
    /// Always true; asserted, not assumed.
    pub continuous: bool,
    /// Always true on finite spaces (every irreducible closed set has a
    /// generic point); asserted, not assumed.
    pub closed_map: bool,
    /// Whether the canonical map sends opens to opens.
    pub open_map: bool,
    /// A minimal open of the base with non-open image, when one exists.
    pub open_witness: Option<Subset>,
}

pub fn sober_space(top: &FinTopology) -> SoberSpace {
    let n = top.ground_size();
    let points = canonicalize_family((0..n).map(|x| top.point_closure(x).clone()).collect());
    if n <= 6 {
        irreducible_closed_oracle(top, &points);
    }
    let k = points.len();
    let rows = (0..k)
        .map(|p| {
            let mut row = Subset::empty(k);
            for q in 0..k {
                if points[p].is_subset_of(&points[q]) {
                    row.insert(q);
                }
            }
            row
        })
        .collect();
    let topology = FinTopology::from_min_open(k, rows).expect("inclusion is a preorder");
    let position = |closure: &Subset| -> usize {
        points
            .iter()
            .position(|p| p == closure)
            .expect("every point closure is listed")
    };
    let canonical_map = MapTable::from_fn(n, k, |x| position(top.point_closure(x)));

    let continuous = is_continuous(&canonical_map, top, &topology)
        .expect("sizes match by construction")
        .continuous;
    assert!(continuous, "the closure-point map must be continuous");

    // Closed sets are unions of point closures and images commute with
    // unions, so closedness of the map reduces to the point closures;
    // the image of closure{x} is the t(X)-closure of its generic point.
    let closed_map = (0..n).all(|x| {
        let image = canonical_map.image(top.point_closure(x));
        topology.is_closed(&image)
    });
    assert!(closed_map, "every irreducible closed set has a generic point");

    // Opens are unions of minimal opens, so openness also reduces to them.
    let mut open_witness = None;
    for u in top.minimal_base() {
        if !topology.is_open(&canonical_map.image(&u)) {
            open_witness = Some(u);
            break;
        }
    }
    SoberSpace {
        points,
        topology,
        canonical_map,
        continuous,
        closed_map,
        open_map: open_witness.is_none(),
        open_witness,
    }
}

/// Definitional oracle: enumerate the closed sets, keep those that are
/// nonempty and not a union of two proper closed subsets, and compare with
/// the point-closure list.
fn irreducible_closed_oracle(top: &FinTopology, points: &[Subset]) {
    let n = top.ground_size();
    let mut closed: Vec<Subset> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let c = Subset::from_word(n, mask);
        if top.is_closed(&c) {
            closed.push(c);
        }
    }
    let mut irreducible = Vec::new();
    for c in &closed {
        if c.is_empty() {
            continue;
        }
        let proper: Vec<&Subset> = closed
            .iter()
            .filter(|a| a.is_subset_of(c) && a.len() < c.len())
            .collect();
        let splits = proper
            .iter()
            .any(|a| proper.iter().any(|b| a.union(b) == *c));
        if !splits {
            irreducible.push(c.clone());
        }
    }
    assert_eq!(
        canonicalize_family(irreducible),
        points,
        "irreducible closed sets must be the point closures"
    );
}
