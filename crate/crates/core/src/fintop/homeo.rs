//! Homeomorphism testing by pruned bijection search.

use super::FinTopology;

/// Searches for a homeomorphism and returns its point map when one exists.
///
/// A bijection is a homeomorphism of finite spaces iff it is a preorder
/// isomorphism, so candidates are pruned by the per-point signature
/// (minimal-neighborhood size, point-closure size) and validated edgewise.
pub fn is_homeomorphic(a: &FinTopology, b: &FinTopology) -> Option<Vec<usize>> {
    if a.ground_size() != b.ground_size() {
        return None;
    }
    let n = a.ground_size();
    let sig = |t: &FinTopology, x: usize| (t.min_open(x).len(), t.point_closure(x).len());
    let sigs_a: Vec<_> = (0..n).map(|x| sig(a, x)).collect();
    let sigs_b: Vec<_> = (0..n).map(|x| sig(b, x)).collect();
    let mut sorted_a = sigs_a.clone();
    let mut sorted_b = sigs_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(a, b, &sigs_a, &sigs_b, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}

fn search(
    a: &FinTopology,
    b: &FinTopology,
    sigs_a: &[(usize, usize)],
    sigs_b: &[(usize, usize)],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    k: usize,
) -> bool {
    if k == a.ground_size() {
        return true;
    }
    for v in 0..b.ground_size() {
        if used[v] || sigs_b[v] != sigs_a[k] {
            continue;
        }
        let consistent = (0..k).all(|j| {
            a.leq(j, k) == b.leq(map[j], v) && a.leq(k, j) == b.leq(v, map[j])
        });
        if !consistent {
            continue;
        }
        map[k] = v;
        used[v] = true;
        if search(a, b, sigs_a, sigs_b, map, used, k + 1) {
            return true;
        }
        map[k] = usize::MAX;
        used[v] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::map::{quotient_topology, Partition};
    use super::super::make_topology;
    use super::*;

    #[test]
    fn every_space_matches_itself() {
        let t = make_topology(3, &[vec![], vec![0], vec![0, 1], vec![0, 1, 2]]).unwrap();
        let w = is_homeomorphic(&t, &t).unwrap();
        assert_eq!(w, vec![0, 1, 2]);
    }

    #[test]
    fn discrete_vs_trivial_differ() {
        assert!(is_homeomorphic(&FinTopology::discrete(2), &FinTopology::trivial(2)).is_none());
        assert!(is_homeomorphic(&FinTopology::discrete(2), &FinTopology::discrete(3)).is_none());
    }

    #[test]
    fn relabeled_sierpinski_matches() {
        let s = make_topology(2, &[vec![], vec![0], vec![0, 1]]).unwrap();
        let flipped = make_topology(2, &[vec![], vec![1], vec![0, 1]]).unwrap();
        assert_eq!(is_homeomorphic(&s, &flipped), Some(vec![1, 0]));
    }

    #[test]
    fn coset_quotient_matches_discrete() {
        // Partition a 4-chain-free space whose blocks are clopen pairs.
        let t = make_topology(
            4,
            &[
                vec![],
                vec![0, 1],
                vec![2, 3],
                vec![0, 1, 2, 3],
            ],
        )
        .unwrap();
        let q = quotient_topology(&t, &Partition::from_labels(&[0, 0, 1, 1])).unwrap();
        assert!(is_homeomorphic(&q, &FinTopology::discrete(2)).is_some());
    }
}
