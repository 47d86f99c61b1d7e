//! Connected components of a finite space.

use super::map::{quotient_topology, Partition};
use super::FinTopology;
use crate::set::Subset;

/// The space of connected components with its quotient topology.
///
/// On a finite space the components are the connected components of the
/// comparability graph (x adjacent to y when one specializes to the other).
/// For small spaces the result is checked against the definitional reading:
/// no component splits into two disjoint nonempty relatively open parts,
/// and every component is clopen.
pub fn pi0(top: &FinTopology) -> (Partition, FinTopology) {
    let n = top.ground_size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for x in 0..n {
        for y in top.min_open(x).iter() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    let partition = Partition::from_labels(&labels);
    if n <= 5 {
        definitional_check(top, &partition);
    }
    let quotient = quotient_topology(top, &partition).expect("partition covers the ground set");
    debug_assert_eq!(
        quotient,
        FinTopology::discrete(partition.blocks().len()),
        "component blocks are clopen, so the component space is discrete"
    );
    (partition, quotient)
}

/// Oracle: each block is clopen and admits no separation by relatively
/// open sets; together these characterize the connected components.
fn definitional_check(top: &FinTopology, partition: &Partition) {
    let n = top.ground_size();
    for block in partition.blocks() {
        assert!(
            top.is_open(block) && top.is_closed(block),
            "component {block} is not clopen"
        );
        let size = block.len();
        let members = block.elems();
        // Scan proper nonempty sub-splits of the block.
        for mask in 1u64..(1u64 << size) / 2 + 1 {
            let part_a: Vec<usize> = (0..size)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| members[i])
                .collect();
            if part_a.len() == size {
                continue;
            }
            let a = Subset::from_elems(n, &part_a);
            let b = block.minus(&a);
            // Relatively open: O ∩ block = part, for some open O. On a
            // finite space it suffices to test the up-closures.
            let mut up_a = Subset::empty(n);
            for x in a.iter() {
                up_a.union_with(top.min_open(x));
            }
            let mut up_b = Subset::empty(n);
            for x in b.iter() {
                up_b.union_with(top.min_open(x));
            }
            let a_rel_open = up_a.intersection(block) == a;
            let b_rel_open = up_b.intersection(block) == b;
            assert!(
                !(a_rel_open && b_rel_open),
                "component {block} separates into {a} and {b}"
            );
        }
    }
}
