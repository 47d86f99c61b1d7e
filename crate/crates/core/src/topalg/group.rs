//! Finite groups as explicit operation tables.

use super::TopAlgError;
use crate::finring::{units_group, FiniteRing};
use crate::fintop::Partition;
use crate::set::Subset;
use std::collections::BTreeSet;

/// A finite group, not necessarily abelian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    size: usize,
    op: Vec<u16>,
    inv: Vec<u16>,
    identity: usize,
    label: String,
}

impl GroupTable {
    /// Validates a raw operation table: a two-sided identity must exist,
    /// the operation must be associative, and inverses must exist.
    pub fn from_table(label: &str, size: usize, op: Vec<u16>) -> Result<GroupTable, TopAlgError> {
        if size == 0 || op.len() != size * size {
            return Err(TopAlgError::NotAGroup {
                reason: format!("table has {} entries for size {}", op.len(), size),
            });
        }
        if let Some(&bad) = op.iter().find(|&&v| v as usize >= size) {
            return Err(TopAlgError::NotAGroup {
                reason: format!("entry {bad} out of range"),
            });
        }
        let at = |a: usize, b: usize| op[a * size + b] as usize;
        let identity = (0..size)
            .find(|&e| (0..size).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| TopAlgError::NotAGroup {
                reason: "no two-sided identity".into(),
            })?;
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(TopAlgError::NotAGroup {
                            reason: format!("associativity fails at ({a}, {b}, {c})"),
                        });
                    }
                }
            }
        }
        let mut inv = vec![0u16; size];
        for a in 0..size {
            let found: Vec<usize> = (0..size)
                .filter(|&b| at(a, b) == identity && at(b, a) == identity)
                .collect();
            match found.as_slice() {
                [b] => inv[a] = *b as u16,
                _ => {
                    return Err(TopAlgError::NotAGroup {
                        reason: format!("element {a} lacks a unique inverse"),
                    })
                }
            }
        }
        Ok(GroupTable {
            size,
            op,
            inv,
            identity,
            label: label.to_string(),
        })
    }

    /// The additive group (R, +).
    pub fn additive(ring: &FiniteRing) -> GroupTable {
        let n = ring.size();
        let mut op = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                op.push(ring.add(a, b) as u16);
            }
        }
        GroupTable::from_table(&format!("({},+)", ring.spec()), n, op)
            .expect("ring addition is a group operation")
    }

    /// The unit group R*, reindexed to 0..k−1. Returns the group together
    /// with the table sending new indices to ring elements.
    pub fn units_of(ring: &FiniteRing) -> (GroupTable, Vec<usize>) {
        let units = units_group(ring);
        let elements = units.elements.clone();
        let k = elements.len();
        let position = |e: usize| elements.binary_search(&e).expect("unit") as u16;
        let mut op = Vec::with_capacity(k * k);
        for &a in &elements {
            for &b in &elements {
                op.push(position(ring.mul(a, b)));
            }
        }
        let group = GroupTable::from_table(&format!("U({})", ring.spec()), k, op)
            .expect("units form a group");
        (group, elements)
    }

    /// The symmetric group on three letters: the smallest group with a
    /// non-normal subgroup. Permutations in one-line lexicographic order.
    pub fn symmetric_3() -> GroupTable {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index_of = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap() as u16;
        let mut op = Vec::with_capacity(36);
        for a in &perms {
            for b in &perms {
                let composed = [a[b[0]], a[b[1]], a[b[2]]];
                op.push(index_of(&composed));
            }
        }
        GroupTable::from_table("S3", 6, op).expect("permutation composition is a group")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.size + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let (base, reps) = if k < 0 {
            (self.inv(a), k.unsigned_abs())
        } else {
            (a, k as u64)
        };
        let mut acc = self.identity;
        for _ in 0..reps {
            acc = self.op(acc, base);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn mul_sets(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.op(x, y));
            }
        }
        out
    }

    pub fn inv_set(&self, a: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for x in a.iter() {
            out.insert(self.inv(x));
        }
        out
    }

    pub fn translate_left(&self, g: usize, a: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for x in a.iter() {
            out.insert(self.op(g, x));
        }
        out
    }

    pub fn translate_right(&self, a: &Subset, g: usize) -> Subset {
        let mut out = Subset::empty(self.size);
        for x in a.iter() {
            out.insert(self.op(x, g));
        }
        out
    }

    /// Smallest subgroup containing `gens`. The closure under the
    /// operation alone suffices: a nonempty finite set closed under the
    /// operation contains the identity and all inverses, since every
    /// element has finite order.
    pub fn subgroup_closure(&self, gens: &Subset) -> Subset {
        let mut elems = gens.clone();
        elems.insert(self.identity);
        loop {
            let next = self.mul_sets(&elems, &elems);
            let mut merged = elems.clone();
            merged.union_with(&next);
            if merged == elems {
                break;
            }
            elems = merged;
        }
        debug_assert!(self.is_subgroup(&elems));
        elems
    }

    pub fn is_op_closed(&self, h: &Subset) -> bool {
        h.iter().all(|a| h.iter().all(|b| h.contains(self.op(a, b))))
    }

    pub fn is_subgroup(&self, h: &Subset) -> bool {
        h.contains(self.identity)
            && self.is_op_closed(h)
            && h.iter().all(|a| h.contains(self.inv(a)))
    }

    pub fn is_normal(&self, h: &Subset) -> bool {
        self.is_subgroup(h)
            && (0..self.size).all(|g| {
                h.iter().all(|x| h.contains(self.op(self.op(g, x), self.inv(g))))
            })
    }

    /// Every subgroup, in canonical (size, element-list) order; grown one
    /// generator at a time from the trivial subgroup.
    pub fn subgroups(&self) -> Vec<Subset> {
        let trivial = Subset::singleton(self.size, self.identity);
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(trivial.elems());
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for g in 0..self.size {
                if h.contains(g) {
                    continue;
                }
                let mut gens = h.clone();
                gens.insert(g);
                let bigger = self.subgroup_closure(&gens);
                if seen.insert(bigger.elems()) {
                    frontier.push(bigger);
                }
            }
        }
        let mut out: Vec<Subset> = seen
            .into_iter()
            .map(|elems| Subset::from_elems(self.size, &elems))
            .collect();
        out.sort_by(|a, b| a.cmp_canonical(b));
        out
    }

    /// No normal subgroup besides the trivial one and the whole group.
    pub fn is_simple(&self) -> bool {
        self.size > 1
            && self
                .subgroups()
                .iter()
                .filter(|h| self.is_normal(h))
                .all(|h| h.len() == 1 || h.len() == self.size)
    }

    /// Left cosets of a subgroup, as a partition ordered by least element.
    pub fn coset_partition(&self, h: &Subset) -> Partition {
        let mut labels = vec![usize::MAX; self.size];
        for g in 0..self.size {
            if labels[g] != usize::MAX {
                continue;
            }
            let coset = self.translate_left(g, h);
            let least = coset.iter().next().unwrap();
            for x in coset.iter() {
                labels[x] = least;
            }
        }
        Partition::from_labels(&labels)
    }
}
