//! Ring morphisms, coset quotients, and isomorphism search.

use super::{FiniteRing, Ideal, RingError};

/// A unital ring homomorphism given by an explicit value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMorphism {
    domain: FiniteRing,
    codomain: FiniteRing,
    map: Vec<usize>,
}

impl RingMorphism {
    /// Wraps a value table after exhaustively checking that it preserves
    /// addition, multiplication, zero, and one.
    pub fn new(
        domain: &FiniteRing,
        codomain: &FiniteRing,
        map: Vec<usize>,
    ) -> Result<RingMorphism, RingError> {
        if map.len() != domain.size() {
            return Err(RingError::NotAMorphism {
                reason: format!(
                    "table has {} entries for a domain of size {}",
                    map.len(),
                    domain.size()
                ),
            });
        }
        for &v in &map {
            codomain.check_element(v)?;
        }
        if map[domain.zero()] != codomain.zero() {
            return Err(RingError::NotAMorphism {
                reason: "zero is not sent to zero".into(),
            });
        }
        if map[domain.one()] != codomain.one() {
            return Err(RingError::NotAMorphism {
                reason: "one is not sent to one".into(),
            });
        }
        for a in domain.elements() {
            for b in domain.elements() {
                if map[domain.add(a, b)] != codomain.add(map[a], map[b]) {
                    return Err(RingError::NotAMorphism {
                        reason: format!("addition not preserved at ({a}, {b})"),
                    });
                }
                if map[domain.mul(a, b)] != codomain.mul(map[a], map[b]) {
                    return Err(RingError::NotAMorphism {
                        reason: format!("multiplication not preserved at ({a}, {b})"),
                    });
                }
            }
        }
        Ok(RingMorphism {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map,
        })
    }

    pub fn identity(ring: &FiniteRing) -> RingMorphism {
        RingMorphism {
            domain: ring.clone(),
            codomain: ring.clone(),
            map: (0..ring.size()).collect(),
        }
    }

    pub fn domain(&self) -> &FiniteRing {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteRing {
        &self.codomain
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.size()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// The coset ring R/I with its canonical surjection.
///
/// Cosets are named by their least element; the quotient reuses the canonical
/// index order of those representatives, so the quotient's zero is coset I.
pub fn quotient_ring(
    ring: &FiniteRing,
    ideal: &Ideal,
) -> Result<(FiniteRing, RingMorphism), RingError> {
    let mut rep_of = vec![usize::MAX; ring.size()];
    let mut reps: Vec<usize> = Vec::new();
    for a in ring.elements() {
        if rep_of[a] != usize::MAX {
            continue;
        }
        let coset = ring.translate(a, ideal.subset());
        let least = coset.iter().next().expect("cosets are nonempty");
        debug_assert_eq!(least, a, "elements are visited in increasing order");
        for b in coset.iter() {
            rep_of[b] = a;
        }
        reps.push(a);
    }
    let classes = reps.len();
    if ideal.len() * classes != ring.size() {
        return Err(RingError::AxiomFailed(format!(
            "cosets of an ideal must partition the ring evenly: {} * {} != {}",
            ideal.len(),
            classes,
            ring.size()
        )));
    }
    let index_of = |a: usize| -> usize {
        reps.binary_search(&rep_of[a]).expect("representative recorded")
    };
    let mut add_table = Vec::with_capacity(classes * classes);
    let mut mul_table = Vec::with_capacity(classes * classes);
    for &a in &reps {
        for &b in &reps {
            add_table.push(index_of(ring.add(a, b)) as u16);
            mul_table.push(index_of(ring.mul(a, b)) as u16);
        }
    }
    let spec = format!("{} mod {}", ring.spec(), ideal.subset());
    let quotient = FiniteRing::from_tables(
        &spec,
        classes,
        add_table,
        mul_table,
        index_of(ring.one()),
    )?;
    let map: Vec<usize> = ring.elements().map(index_of).collect();
    let surjection = RingMorphism::new(ring, &quotient, map)?;
    Ok((quotient, surjection))
}

/// Searches for a ring isomorphism and returns its value table if one exists.
///
/// Backtracking over element images, pruned by the per-element signature
/// (additive order, unit?, idempotent?); exponential in principle, fast for
/// the sizes this crate constructs.
pub fn is_isomorphic(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let sig = |r: &FiniteRing, x: usize| -> (usize, bool, bool) {
        let unit = r.elements().any(|y| r.mul(x, y) == r.one());
        (r.additive_order(x), unit, r.is_idempotent(x))
    };
    let sigs_a: Vec<_> = a.elements().map(|x| sig(a, x)).collect();
    let sigs_b: Vec<_> = b.elements().map(|x| sig(b, x)).collect();
    let mut sorted_a = sigs_a.clone();
    let mut sorted_b = sigs_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    let n = a.size();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.zero()] = b.zero();
    used[b.zero()] = true;
    if a.one() != a.zero() {
        if sigs_a[a.one()] != sigs_b[b.one()] {
            return None;
        }
        map[a.one()] = b.one();
        used[b.one()] = true;
    }

    fn consistent(a: &FiniteRing, b: &FiniteRing, map: &[usize], k: usize) -> bool {
        for i in 0..a.size() {
            if map[i] == usize::MAX {
                continue;
            }
            for (x, y) in [(i, k), (k, i)] {
                let s = a.add(x, y);
                if map[s] != usize::MAX && b.add(map[x], map[y]) != map[s] {
                    return false;
                }
                let p = a.mul(x, y);
                if map[p] != usize::MAX && b.mul(map[x], map[y]) != map[p] {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        a: &FiniteRing,
        b: &FiniteRing,
        sigs_a: &[(usize, bool, bool)],
        sigs_b: &[(usize, bool, bool)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let k = match map.iter().position(|&v| v == usize::MAX) {
            Some(k) => k,
            None => return true,
        };
        for v in 0..b.size() {
            if used[v] || sigs_b[v] != sigs_a[k] {
                continue;
            }
            map[k] = v;
            used[v] = true;
            if consistent(a, b, map, k) && search(a, b, sigs_a, sigs_b, map, used) {
                return true;
            }
            map[k] = usize::MAX;
            used[v] = false;
        }
        false
    }

    if search(a, b, &sigs_a, &sigs_b, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}
