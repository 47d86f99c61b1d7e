//! Independent oracles the integration suites compare against. Each one
//! recomputes a quantity from first principles, without touching the
//! code paths under test. Not every test target uses every oracle.
#![allow(dead_code)]

use topring_core::fintop::FinTopology;

/// Counts topologies on `n` points by filtering every family of subsets
/// for the open-family axioms. Exponential twice over, so `n <= 4`.
pub fn family_filter_count(n: usize) -> usize {
    assert!(n <= 4, "family filter oracle is doubly exponential");
    let subsets: u32 = 1 << n;
    let full: u32 = subsets - 1;
    let mut count = 0usize;
    for family in 0u64..(1u64 << subsets) {
        let has = |w: u32| family & (1 << w) != 0;
        if !has(0) || !has(full) {
            continue;
        }
        let members: Vec<u32> = (0..subsets).filter(|&w| has(w)).collect();
        let closed = members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| has(a | b) && has(a & b))
        });
        if closed {
            count += 1;
        }
    }
    count
}

/// Every open of the topology as a bit word, by scanning all subsets for
/// up-closure. Ground must fit in a word scan.
pub fn opens_words(top: &FinTopology) -> Vec<u64> {
    let n = top.ground_size();
    assert!(n <= 16, "opens oracle scans all subsets");
    let rows: Vec<u64> = (0..n).map(|x| top.min_open(x).word()).collect();
    (0u64..(1 << n))
        .filter(|mask| {
            (0..n).all(|x| mask & (1 << x) == 0 || rows[x] & !mask == 0)
        })
        .collect()
}

/// Closure from the definition: the points whose every open neighborhood
/// meets the set.
pub fn closure_from_opens(opens: &[u64], n: usize, s: u64) -> u64 {
    let mut closure = 0u64;
    for x in 0..n {
        let meets_all = opens
            .iter()
            .filter(|&&u| u & (1 << x) != 0)
            .all(|&u| u & s != 0);
        if meets_all {
            closure |= 1 << x;
        }
    }
    closure
}

/// Connected components as the transitive closure of the comparability
/// relation, via union-find.
pub fn component_labels(top: &FinTopology) -> Vec<usize> {
    let n = top.ground_size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for x in 0..n {
        for y in 0..n {
            if top.leq(x, y) || top.leq(y, x) {
                let rx = find(&mut parent, x);
                let ry = find(&mut parent, y);
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
    }
    let mut labels = vec![0usize; n];
    for x in 0..n {
        labels[x] = find(&mut parent, x);
    }
    // Relabel by least representative so labels are canonical.
    let mut canon = vec![usize::MAX; n];
    for x in 0..n {
        let root = labels[x];
        if canon[root] == usize::MAX {
            canon[root] = x;
        }
    }
    labels.into_iter().map(|root| canon[root]).collect()
}
