//! Maps between finite spaces and the topologies they induce.

use super::{FinTopology, TopError, MAX_OPENS_GROUND};
use crate::set::{canonicalize_family, Subset};

/// A total function between two finite ground sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapTable {
    domain_size: usize,
    codomain_size: usize,
    map: Vec<usize>,
}

impl MapTable {
    pub fn new(domain_size: usize, codomain_size: usize, map: Vec<usize>) -> Result<MapTable, TopError> {
        if map.len() != domain_size {
            return Err(TopError::SizeMismatch {
                context: format!("table has {} entries for domain {}", map.len(), domain_size),
            });
        }
        for &v in &map {
            if v >= codomain_size {
                return Err(TopError::ElementOutOfRange {
                    element: v,
                    ground: codomain_size,
                });
            }
        }
        Ok(MapTable {
            domain_size,
            codomain_size,
            map,
        })
    }

    pub fn identity(n: usize) -> MapTable {
        MapTable {
            domain_size: n,
            codomain_size: n,
            map: (0..n).collect(),
        }
    }

    pub fn constant(domain_size: usize, codomain_size: usize, value: usize) -> MapTable {
        assert!(value < codomain_size);
        MapTable {
            domain_size,
            codomain_size,
            map: vec![value; domain_size],
        }
    }

    /// Tabulates x ↦ f(x).
    pub fn from_fn(domain_size: usize, codomain_size: usize, f: impl Fn(usize) -> usize) -> MapTable {
        let map: Vec<usize> = (0..domain_size).map(f).collect();
        MapTable::new(domain_size, codomain_size, map).expect("function stays in range")
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn preimage(&self, s: &Subset) -> Subset {
        let mut out = Subset::empty(self.domain_size);
        for (x, &v) in self.map.iter().enumerate() {
            if s.contains(v) {
                out.insert(x);
            }
        }
        out
    }

    pub fn image(&self, s: &Subset) -> Subset {
        let mut out = Subset::empty(self.codomain_size);
        for x in s.iter() {
            out.insert(self.map[x]);
        }
        out
    }

    pub fn compose(&self, then: &MapTable) -> MapTable {
        assert_eq!(self.codomain_size, then.domain_size);
        MapTable {
            domain_size: self.domain_size,
            codomain_size: then.codomain_size,
            map: self.map.iter().map(|&v| then.map[v]).collect(),
        }
    }
}

/// A partition of a ground set into nonempty disjoint covering blocks,
/// ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    ground: usize,
    blocks: Vec<Subset>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn from_blocks(ground: usize, blocks: Vec<Subset>) -> Result<Partition, TopError> {
        let mut block_of = vec![usize::MAX; ground];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(TopError::InvalidPartition {
                    reason: "empty block".into(),
                });
            }
            for x in b.iter() {
                if x >= ground {
                    return Err(TopError::ElementOutOfRange { element: x, ground });
                }
                if block_of[x] != usize::MAX {
                    return Err(TopError::InvalidPartition {
                        reason: format!("element {x} appears in two blocks"),
                    });
                }
                block_of[x] = i;
            }
        }
        if let Some(x) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(TopError::InvalidPartition {
                reason: format!("element {x} not covered"),
            });
        }
        let mut order: Vec<usize> = (0..blocks.len()).collect();
        order.sort_by_key(|&i| blocks[i].iter().next().unwrap());
        let blocks: Vec<Subset> = order.iter().map(|&i| blocks[i].clone()).collect();
        let mut block_of = vec![0; ground];
        for (i, b) in blocks.iter().enumerate() {
            for x in b.iter() {
                block_of[x] = i;
            }
        }
        Ok(Partition {
            ground,
            blocks,
            block_of,
        })
    }

    /// Builds blocks from an element→label table.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let ground = labels.len();
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let blocks: Vec<Subset> = distinct
            .iter()
            .map(|&l| {
                let elems: Vec<usize> = (0..ground).filter(|&x| labels[x] == l).collect();
                Subset::from_elems(ground, &elems)
            })
            .collect();
        Partition::from_blocks(ground, blocks).expect("labels induce a partition")
    }

    pub fn singletons(ground: usize) -> Partition {
        Partition::from_labels(&(0..ground).collect::<Vec<_>>())
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// The canonical projection onto block indices.
    pub fn projection(&self) -> MapTable {
        MapTable::new(self.ground, self.blocks.len(), self.block_of.clone())
            .expect("block indices are in range")
    }
}

/// Continuity verdict; on failure, `witness` is an open set of the codomain
/// whose preimage is not open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityReport {
    pub continuous: bool,
    pub witness: Option<Subset>,
}

/// Open-preimage continuity, decided on the minimal base of the codomain
/// (preimages commute with the unions that build every other open). The
/// specialization-monotonicity criterion is computed independently and the
/// two answers are asserted to agree.
pub fn is_continuous(
    f: &MapTable,
    domain: &FinTopology,
    codomain: &FinTopology,
) -> Result<ContinuityReport, TopError> {
    if f.domain_size() != domain.ground_size() || f.codomain_size() != codomain.ground_size() {
        return Err(TopError::SizeMismatch {
            context: format!(
                "map {}→{} between spaces of sizes {} and {}",
                f.domain_size(),
                f.codomain_size(),
                domain.ground_size(),
                codomain.ground_size()
            ),
        });
    }
    let monotone = (0..domain.ground_size()).all(|x| {
        domain
            .min_open(x)
            .iter()
            .all(|y| codomain.leq(f.apply(x), f.apply(y)))
    });
    let mut witness = None;
    for v in codomain_minimal_base(codomain) {
        if !domain.is_open(&f.preimage(&v)) {
            witness = Some(v);
            break;
        }
    }
    assert_eq!(
        monotone,
        witness.is_none(),
        "monotonicity and open-preimage criteria must agree"
    );
    Ok(ContinuityReport {
        continuous: monotone,
        witness,
    })
}

fn codomain_minimal_base(codomain: &FinTopology) -> Vec<Subset> {
    codomain.minimal_base()
}

/// Product space on row-major pairs: (x, y) ↦ x·|B| + y.
///
/// The minimal neighborhood of a pair is the rectangle of the factor
/// minimal neighborhoods; at small sizes the full rectangle-generated
/// family is built independently and asserted to match.
pub fn product_topology(a: &FinTopology, b: &FinTopology) -> FinTopology {
    let (na, nb) = (a.ground_size(), b.ground_size());
    let n = na * nb;
    let mut rows = Vec::with_capacity(n);
    for x in 0..na {
        for y in 0..nb {
            let mut row = Subset::empty(n);
            for u in a.min_open(x).iter() {
                for v in b.min_open(y).iter() {
                    row.insert(u * nb + v);
                }
            }
            rows.push(row);
        }
    }
    let product = FinTopology::from_min_open(n, rows).expect("product of preorders is a preorder");
    if n <= 12 {
        let rectangles = rectangle_family(a, b);
        assert_eq!(
            product.opens_family().unwrap(),
            rectangles,
            "rectangle-generated opens must match the product preorder"
        );
    }
    product
}

/// Oracle route: all unions of open rectangles U×V, closed to a fixpoint.
fn rectangle_family(a: &FinTopology, b: &FinTopology) -> Vec<Subset> {
    let (na, nb) = (a.ground_size(), b.ground_size());
    let n = na * nb;
    let opens_a = a.opens_family().expect("guarded by the caller");
    let opens_b = b.opens_family().expect("guarded by the caller");
    let mut family: Vec<Subset> = Vec::new();
    for u in &opens_a {
        for v in &opens_b {
            let mut rect = Subset::empty(n);
            for x in u.iter() {
                for y in v.iter() {
                    rect.insert(x * nb + y);
                }
            }
            if !family.contains(&rect) {
                family.push(rect);
            }
        }
    }
    loop {
        let mut grew = false;
        let snapshot = family.clone();
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                let u = snapshot[i].union(&snapshot[j]);
                if !family.contains(&u) {
                    family.push(u);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    canonicalize_family(family)
}

/// Restriction to a nonempty subset, reindexed to 0..|S|−1. Returns the
/// new space together with the index map new→old.
pub fn subspace_topology(
    top: &FinTopology,
    subset: &Subset,
) -> Result<(FinTopology, Vec<usize>), TopError> {
    if subset.is_empty() {
        return Err(TopError::EmptySubset);
    }
    assert_eq!(subset.ground_size(), top.ground_size());
    let index_map = subset.elems();
    let n = index_map.len();
    let position = |old: usize| index_map.binary_search(&old).expect("member of the subset");
    let rows = index_map
        .iter()
        .map(|&old| {
            let mut row = Subset::empty(n);
            for y in top.min_open(old).iter() {
                if subset.contains(y) {
                    row.insert(position(y));
                }
            }
            row
        })
        .collect();
    let sub = FinTopology::from_min_open(n, rows).expect("restricted preorder is a preorder");
    Ok((sub, index_map))
}

/// Quotient by a partition: a set of blocks is open iff the union of its
/// blocks is open upstairs.
pub fn quotient_topology(top: &FinTopology, partition: &Partition) -> Result<FinTopology, TopError> {
    if partition.ground_size() != top.ground_size() {
        return Err(TopError::SizeMismatch {
            context: format!(
                "partition of {} under a space of size {}",
                partition.ground_size(),
                top.ground_size()
            ),
        });
    }
    let k = partition.blocks().len();
    let mut rows = Vec::with_capacity(k);
    for b in 0..k {
        // Minimal saturated open around the block: alternate up-closure in
        // the space with closure under whole blocks until stable.
        let mut union = partition.blocks()[b].clone();
        loop {
            let mut next = union.clone();
            for x in union.iter() {
                next.union_with(top.min_open(x));
            }
            for block in partition.blocks() {
                if next.intersects(block) {
                    next.union_with(block);
                }
            }
            if next == union {
                break;
            }
            union = next;
        }
        let mut row = Subset::empty(k);
        for block_index in 0..k {
            if union.intersects(&partition.blocks()[block_index]) {
                row.insert(block_index);
            }
        }
        rows.push(row);
    }
    let quotient = FinTopology::from_min_open(k, rows)?;
    if k <= 12 {
        // Definitional oracle: scan every block set.
        let mut opens = Vec::new();
        for mask in 0u64..(1u64 << k) {
            let w = Subset::from_word(k, mask);
            let mut union = Subset::empty(top.ground_size());
            for b in w.iter() {
                union.union_with(&partition.blocks()[b]);
            }
            if top.is_open(&union) {
                opens.push(w);
            }
        }
        assert_eq!(
            quotient.opens_family().unwrap(),
            canonicalize_family(opens),
            "quotient opens must match the definitional scan"
        );
    }
    Ok(quotient)
}

/// The topology induced on the domain by a map into a space: the pullback
/// preorder, whose opens are exactly the open preimages.
pub fn induced_topology(f: &MapTable, codomain: &FinTopology) -> Result<FinTopology, TopError> {
    if f.codomain_size() != codomain.ground_size() {
        return Err(TopError::SizeMismatch {
            context: format!(
                "map into {} under a space of size {}",
                f.codomain_size(),
                codomain.ground_size()
            ),
        });
    }
    let n = f.domain_size();
    let rows = (0..n)
        .map(|x| f.preimage(codomain.min_open(f.apply(x))))
        .collect();
    let induced = FinTopology::from_min_open(n, rows).expect("pullback preorder is a preorder");
    if n <= 12 && codomain.ground_size() <= MAX_OPENS_GROUND {
        let preimages: Vec<Subset> = codomain
            .opens_family()?
            .iter()
            .map(|u| f.preimage(u))
            .collect();
        let preimages = canonicalize_family(preimages);
        assert_eq!(
            induced.opens_family().unwrap(),
            preimages,
            "open preimages must form the induced topology"
        );
    }
    Ok(induced)
}
