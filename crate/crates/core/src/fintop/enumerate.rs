//! Exhaustive enumeration of all topologies on a small ground set.

use super::{FinTopology, TopError, MAX_ENUMERATION_GROUND};
use crate::set::Subset;
use std::cmp::Ordering;

/// Every topology on {0..ground−1}, each exactly once, sorted by the
/// lexicographic order of their canonical open families.
///
/// Works by depth-first assignment of minimal-neighborhood rows; a row
/// system is valid exactly when it is reflexive and pairwise consistent
/// (j in row i forces row j ⊆ row i), which is transitivity.
pub fn enumerate_topologies(ground: usize) -> Result<Vec<FinTopology>, TopError> {
    if ground == 0 {
        return Err(TopError::EmptyGround);
    }
    if ground > MAX_ENUMERATION_GROUND {
        return Err(TopError::EnumerationCap {
            ground,
            cap: MAX_ENUMERATION_GROUND,
        });
    }
    let mut rows: Vec<u64> = Vec::with_capacity(ground);
    let mut out = Vec::new();
    dfs(ground, &mut rows, &mut out);
    let mut keyed: Vec<(Vec<Subset>, FinTopology)> = out
        .into_iter()
        .map(|t| (t.opens_family().expect("ground ≤ 6"), t))
        .collect();
    keyed.sort_by(|(fa, _), (fb, _)| family_order(fa, fb));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

fn dfs(ground: usize, rows: &mut Vec<u64>, out: &mut Vec<FinTopology>) {
    let k = rows.len();
    if k == ground {
        let subsets = rows
            .iter()
            .map(|&w| Subset::from_word(ground, w))
            .collect();
        out.push(FinTopology::from_min_open(ground, subsets).expect("checked during the walk"));
        return;
    }
    let full = if ground == 64 { u64::MAX } else { (1u64 << ground) - 1 };
    'candidate: for row in 0..=full {
        if row & (1 << k) == 0 {
            continue;
        }
        for (j, &prev) in rows.iter().enumerate() {
            if row & (1 << j) != 0 && prev & !row != 0 {
                continue 'candidate;
            }
            if prev & (1 << k) != 0 && row & !prev != 0 {
                continue 'candidate;
            }
        }
        rows.push(row);
        dfs(ground, rows, out);
        rows.pop();
    }
}

/// Lexicographic comparison of two canonical families.
pub fn family_order(a: &[Subset], b: &[Subset]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp_canonical(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}
