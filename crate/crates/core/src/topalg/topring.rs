//! Topological-ring verdicts: units topologies, absoluteness, and the
//! ring-side structure theorems.

use super::group::GroupTable;
use super::topgroup::{check_topological_group, ContinuityWitness};
use super::TopAlgError;
use crate::budget::charge_nary_check;
use crate::finring::{
    annihilator, boolean_ring, quotient_ring, units_group, zerodivisors, FiniteRing, Ideal,
};
use crate::fintop::{
    induced_topology, is_continuous, pi0, product_topology, quotient_topology, space_predicates,
    subspace_topology, FinTopology, MapTable, Partition,
};
use crate::report::{TheoremId, Verdict};
use crate::set::Subset;

/// Verdicts for one (ring, topology) pair.
#[derive(Debug, Clone)]
pub struct TopRingReport {
    pub add_continuous: bool,
    pub add_witness: Option<ContinuityWitness>,
    pub mul_continuous: bool,
    pub mul_witness: Option<ContinuityWitness>,
    /// Minimal open neighborhood of zero.
    pub zero_min_open: Subset,
    /// Whether that neighborhood is an ideal.
    pub zero_nbhd_ideal: bool,
    /// Whether every minimal open is an additive coset of that
    /// neighborhood, so the opens are exactly the unions of its cosets.
    pub opens_are_cosets: bool,
}

/// A ring carrying a topology, with cached continuity verdicts.
#[derive(Debug, Clone)]
pub struct TopRing {
    ring: FiniteRing,
    topology: FinTopology,
    report: TopRingReport,
}

impl TopRing {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn topology(&self) -> &FinTopology {
        &self.topology
    }

    pub fn report(&self) -> &TopRingReport {
        &self.report
    }

    pub fn is_topological_ring(&self) -> bool {
        self.report.add_continuous && self.report.mul_continuous
    }
}

fn check_map(
    f: &MapTable,
    domain: &FinTopology,
    codomain: &FinTopology,
) -> Result<(bool, Option<ContinuityWitness>), TopAlgError> {
    let report = is_continuous(f, domain, codomain)?;
    let witness = report.witness.map(|open| ContinuityWitness {
        preimage: f.preimage(&open),
        codomain_open: open,
    });
    Ok((report.continuous, witness))
}

/// Decides whether addition and multiplication are continuous for the
/// given topology, and reports the structure around zero: its minimal
/// open neighborhood, whether that neighborhood is an ideal, and whether
/// the opens are exactly unions of its additive cosets.
pub fn check_topological_ring(
    ring: &FiniteRing,
    topology: &FinTopology,
) -> Result<TopRing, TopAlgError> {
    let n = ring.size();
    if topology.ground_size() != n {
        return Err(TopAlgError::SizeMismatch {
            context: format!(
                "ring of size {n} with topology on {} points",
                topology.ground_size()
            ),
        });
    }
    charge_nary_check(n, 2)?;
    let product = product_topology(topology, topology);
    let add_map = MapTable::from_fn(n * n, n, |p| ring.add(p / n, p % n));
    let (add_continuous, add_witness) = check_map(&add_map, &product, topology)?;
    let mul_map = MapTable::from_fn(n * n, n, |p| ring.mul(p / n, p % n));
    let (mul_continuous, mul_witness) = check_map(&mul_map, &product, topology)?;
    let zero_min_open = topology.min_open(ring.zero()).clone();
    let zero_nbhd_ideal = Ideal::from_elements(ring, &zero_min_open.elems()).is_ok();
    let opens_are_cosets =
        (0..n).all(|x| *topology.min_open(x) == ring.translate(x, &zero_min_open));
    Ok(TopRing {
        ring: ring.clone(),
        topology: topology.clone(),
        report: TopRingReport {
            add_continuous,
            add_witness,
            mul_continuous,
            mul_witness,
            zero_min_open,
            zero_nbhd_ideal,
            opens_are_cosets,
        },
    })
}

/// The two natural topologies on the unit group of a topological ring,
/// both reindexed to 0..k−1 in unit order.
#[derive(Debug, Clone)]
pub struct UnitsTopologies {
    /// Ring elements of the units, sorted; index i of the group is
    /// `elements[i]` in the ring.
    pub elements: Vec<usize>,
    /// Restriction of the ring topology to the units.
    pub subspace: FinTopology,
    /// Topology induced by u ↦ (u, u⁻¹) into the product space, which
    /// refines the subspace topology.
    pub tf: FinTopology,
    pub tf_equals_subspace: bool,
    pub group: GroupTable,
}

/// Builds the subspace and inversion-graph topologies on R*. The graph
/// topology always refines the subspace topology, and the unit group
/// under the graph topology is always a topological group; both facts
/// are asserted.
pub fn units_topologies(tr: &TopRing) -> Result<UnitsTopologies, TopAlgError> {
    if !tr.is_topological_ring() {
        return Err(TopAlgError::Precondition {
            reason: "units topologies require a topological ring".into(),
        });
    }
    let ring = tr.ring();
    let t = tr.topology();
    let n = ring.size();
    let units = units_group(ring);
    let elements = units.elements.clone();
    let unit_set = Subset::from_elems(n, &elements);
    let (subspace, index_map) = subspace_topology(t, &unit_set)?;
    debug_assert_eq!(index_map, elements);
    let product = product_topology(t, t);
    let embed = MapTable::from_fn(elements.len(), n * n, |u| {
        let e = elements[u];
        e * n + units.inverse_of(e).expect("inverse of a unit")
    });
    let tf = induced_topology(&embed, &product)?;
    let refines = (0..elements.len()).all(|u| tf.min_open(u).is_subset_of(subspace.min_open(u)));
    if !refines {
        return Err(TopAlgError::violation(
            TheoremId::TheoremI,
            "inversion-graph topology does not refine the subspace topology".to_string(),
        ));
    }
    let (group, group_elements) = GroupTable::units_of(ring);
    debug_assert_eq!(group_elements, elements);
    let tf_group = check_topological_group(&group, &tf)?;
    if !tf_group.is_topological_group() {
        return Err(TopAlgError::violation(
            TheoremId::TheoremI,
            "unit group is not a topological group under the inversion-graph topology".to_string(),
        ));
    }
    let tf_equals_subspace = tf == subspace;
    Ok(UnitsTopologies {
        elements,
        subspace,
        tf,
        tf_equals_subspace,
        group,
    })
}

#[derive(Debug, Clone)]
pub struct AbsoluteReport {
    /// Inversion is continuous on (R*, subspace).
    pub inverse_continuous: bool,
    /// (R*, subspace) is a topological group.
    pub subspace_group: bool,
    /// The inversion-graph topology coincides with the subspace topology.
    pub tf_equals_subspace: bool,
    pub absolute: bool,
}

/// Absoluteness of a topological ring: continuity of inversion on the
/// unit subspace. Three formulations are computed and asserted to agree;
/// in particular the subspace is a topological group exactly when the
/// two unit topologies coincide.
pub fn absolute_check(tr: &TopRing) -> Result<AbsoluteReport, TopAlgError> {
    let ut = units_topologies(tr)?;
    let k = ut.elements.len();
    let inv_map = MapTable::from_fn(k, k, |u| ut.group.inv(u));
    let inverse_continuous = is_continuous(&inv_map, &ut.subspace, &ut.subspace)?.continuous;
    let subspace_group = check_topological_group(&ut.group, &ut.subspace)?.is_topological_group();
    // Multiplication restricts continuously to any subspace, so the
    // subspace unit group stands or falls with inversion alone.
    assert_eq!(
        inverse_continuous, subspace_group,
        "subspace group verdict must reduce to inversion continuity"
    );
    if subspace_group != ut.tf_equals_subspace {
        return Err(TopAlgError::violation(
            TheoremId::Coro3iii,
            format!(
                "subspace group = {subspace_group} but graph topology equality = {}",
                ut.tf_equals_subspace
            ),
        ));
    }
    Ok(AbsoluteReport {
        inverse_continuous,
        subspace_group,
        tf_equals_subspace: ut.tf_equals_subspace,
        absolute: subspace_group,
    })
}

/// A polynomial map in `arity` variables: a sum of terms, each a
/// coefficient times a product of variable powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub arity: usize,
    /// (exponent per variable, coefficient) pairs.
    pub terms: Vec<(Vec<u32>, usize)>,
}

impl Polynomial {
    fn eval(&self, ring: &FiniteRing, coords: &[usize]) -> usize {
        let mut acc = ring.zero();
        for (exps, coeff) in &self.terms {
            let mut term = *coeff;
            for (i, &e) in exps.iter().enumerate() {
                term = ring.mul(term, ring.pow(coords[i], e));
            }
            acc = ring.add(acc, term);
        }
        acc
    }
}

#[derive(Debug, Clone)]
pub struct PolynomialReport {
    pub verdict: Verdict,
    pub continuous: bool,
    pub witness: Option<ContinuityWitness>,
}

fn decode_tuple(index: usize, n: usize, arity: usize) -> Vec<usize> {
    let mut coords = vec![0usize; arity];
    let mut rem = index;
    for j in (0..arity).rev() {
        coords[j] = rem % n;
        rem /= n;
    }
    coords
}

fn iterated_product(topology: &FinTopology, arity: usize) -> FinTopology {
    let mut space = topology.clone();
    for _ in 1..arity {
        space = product_topology(&space, topology);
    }
    space
}

/// Continuity of a polynomial map Rᵏ → R. On a verified topological ring
/// every polynomial is a composition of the two operations, so
/// discontinuity would be a counterexample; otherwise the verdict is
/// only reported.
pub fn polynomial_continuity(
    tr: &TopRing,
    poly: &Polynomial,
) -> Result<PolynomialReport, TopAlgError> {
    let arity = poly.arity;
    if arity == 0 || arity > 3 {
        return Err(TopAlgError::Precondition {
            reason: format!("polynomial arity {arity} outside 1..=3"),
        });
    }
    let n = tr.ring().size();
    for (exps, coeff) in &poly.terms {
        if exps.len() != arity || *coeff >= n {
            return Err(TopAlgError::Precondition {
                reason: "term arity or coefficient out of range".into(),
            });
        }
    }
    charge_nary_check(n, arity as u32)?;
    let domain = iterated_product(tr.topology(), arity);
    let ground = n.pow(arity as u32);
    let map = MapTable::from_fn(ground, n, |i| poly.eval(tr.ring(), &decode_tuple(i, n, arity)));
    let (continuous, witness) = check_map(&map, &domain, tr.topology())?;
    if !tr.is_topological_ring() {
        return Ok(PolynomialReport {
            verdict: Verdict::HypothesisUnmet,
            continuous,
            witness,
        });
    }
    if !continuous {
        return Err(TopAlgError::violation(
            TheoremId::Lemma2ii,
            format!("polynomial {poly:?} discontinuous on a topological ring of size {n}"),
        ));
    }
    Ok(PolynomialReport {
        verdict: Verdict::Holds,
        continuous: true,
        witness: None,
    })
}

#[derive(Debug, Clone)]
pub struct BooleanSubspaceReport {
    pub verdict: Verdict,
    /// Idempotent elements of the ring, the carrier of its boolean ring.
    pub elements: Vec<usize>,
    pub xor_continuous: bool,
    pub mul_continuous: bool,
}

/// The boolean ring of idempotents under its subspace topology. Both
/// operations are polynomial maps of the parent ring restricted to the
/// idempotents, so on a topological ring both must be continuous.
pub fn boolean_subspace_check(tr: &TopRing) -> Result<BooleanSubspaceReport, TopAlgError> {
    let ring = tr.ring();
    let bool_ring = boolean_ring(ring);
    let elements = bool_ring.elements.clone();
    let k = elements.len();
    charge_nary_check(k, 2)?;
    let subset = Subset::from_elems(ring.size(), &elements);
    let (sub, index_map) = subspace_topology(tr.topology(), &subset)?;
    debug_assert_eq!(index_map, elements);
    let product = product_topology(&sub, &sub);
    let xor_map = MapTable::from_fn(k * k, k, |p| bool_ring.ring.add(p / k, p % k));
    let xor_continuous = is_continuous(&xor_map, &product, &sub)?.continuous;
    let mul_map = MapTable::from_fn(k * k, k, |p| bool_ring.ring.mul(p / k, p % k));
    let mul_continuous = is_continuous(&mul_map, &product, &sub)?.continuous;
    if !tr.is_topological_ring() {
        return Ok(BooleanSubspaceReport {
            verdict: Verdict::HypothesisUnmet,
            elements,
            xor_continuous,
            mul_continuous,
        });
    }
    if !xor_continuous || !mul_continuous {
        return Err(TopAlgError::violation(
            TheoremId::BooleanSubspace,
            format!(
                "boolean operations on idempotents {elements:?}: xor = {xor_continuous}, \
                 mul = {mul_continuous}"
            ),
        ));
    }
    Ok(BooleanSubspaceReport {
        verdict: Verdict::Holds,
        elements,
        xor_continuous,
        mul_continuous,
    })
}

pub(crate) fn additive_coset_partition(ring: &FiniteRing, subset: &Subset) -> Partition {
    let n = ring.size();
    let mut labels = vec![usize::MAX; n];
    for x in 0..n {
        if labels[x] != usize::MAX {
            continue;
        }
        let coset = ring.translate(x, subset);
        let least = coset.iter().next().unwrap();
        for y in coset.iter() {
            labels[y] = least;
        }
    }
    Partition::from_labels(&labels)
}

#[derive(Debug, Clone)]
pub struct RingComponentReport {
    pub verdict: Verdict,
    pub component: Subset,
    pub is_ideal: bool,
    pub cosets_are_components: bool,
    /// The ring R/C, present when the component is an ideal.
    pub quotient_ring: Option<FiniteRing>,
    pub quotient_topology: FinTopology,
}

/// The connected component of zero, asserted to be an ideal whose cosets
/// are exactly the connected components; the quotient topology over that
/// partition is the (discrete) component space carried by the ring R/C.
pub fn ring_identity_component(tr: &TopRing) -> Result<RingComponentReport, TopAlgError> {
    let ring = tr.ring();
    let t = tr.topology();
    let (partition, component_space) = pi0(t);
    let component = partition.blocks()[partition.block_of(ring.zero())].clone();
    let ideal = Ideal::from_elements(ring, &component.elems()).ok();
    let is_ideal = ideal.is_some();
    let cosets_are_components =
        additive_coset_partition(ring, &component).blocks() == partition.blocks();
    let quotient = quotient_topology(t, &partition)?;
    assert_eq!(
        quotient, component_space,
        "quotient over the component partition is the component space"
    );
    let quotient_ring = match &ideal {
        Some(i) => Some(quotient_ring(ring, i)?.0),
        None => None,
    };
    if !tr.is_topological_ring() {
        return Ok(RingComponentReport {
            verdict: Verdict::HypothesisUnmet,
            component,
            is_ideal,
            cosets_are_components,
            quotient_ring,
            quotient_topology: quotient,
        });
    }
    if !is_ideal || !cosets_are_components {
        return Err(TopAlgError::violation(
            TheoremId::Lemma5v,
            format!(
                "component of zero = {component}: ideal = {is_ideal}, \
                 cosets are components = {cosets_are_components}"
            ),
        ));
    }
    if !space_predicates(&quotient).discrete {
        return Err(TopAlgError::violation(
            TheoremId::Lemma5v,
            "component space is not discrete".to_string(),
        ));
    }
    Ok(RingComponentReport {
        verdict: Verdict::Holds,
        component,
        is_ideal,
        cosets_are_components,
        quotient_ring,
        quotient_topology: quotient,
    })
}

#[derive(Debug, Clone)]
pub struct IdealDensity {
    pub dense: bool,
    pub quotient_trivial: bool,
}

#[derive(Debug, Clone)]
pub struct RingDensityReport {
    pub verdict: Verdict,
    pub zero_closure: Subset,
    pub zero_dense: bool,
    pub trivial: bool,
    pub is_field: bool,
    pub ideal: Option<IdealDensity>,
}

/// Density against triviality on the additive structure: the closure of
/// {0} is everything exactly when the topology is trivial; an ideal is
/// dense exactly when the quotient topology on R/I is trivial; and a
/// field admits only a closed zero or the trivial topology.
pub fn ring_dense_triviality(
    tr: &TopRing,
    ideal: Option<&Ideal>,
) -> Result<RingDensityReport, TopAlgError> {
    let ring = tr.ring();
    let t = tr.topology();
    let zero_closure = t.point_closure(ring.zero()).clone();
    let zero_dense = zero_closure.is_full();
    let trivial = space_predicates(t).trivial;
    let zero_closed = zero_closure.len() == 1;
    let is_field = ring.size() >= 2 && units_group(ring).len() == ring.size() - 1;
    let ideal_report = match ideal {
        None => None,
        Some(i) => {
            if i.ring_size() != ring.size() {
                return Err(TopAlgError::Precondition {
                    reason: "ideal from a different ring".into(),
                });
            }
            let dense = t.closure_set(i.subset()).is_full();
            let partition = additive_coset_partition(ring, i.subset());
            let quotient_trivial = space_predicates(&quotient_topology(t, &partition)?).trivial;
            Some(IdealDensity {
                dense,
                quotient_trivial,
            })
        }
    };
    if !tr.is_topological_ring() {
        return Ok(RingDensityReport {
            verdict: Verdict::HypothesisUnmet,
            zero_closure,
            zero_dense,
            trivial,
            is_field,
            ideal: ideal_report,
        });
    }
    if zero_dense != trivial {
        return Err(TopAlgError::violation(
            TheoremId::Theorem8Zekiz,
            format!("closure of zero is {zero_closure} while trivial = {trivial}"),
        ));
    }
    if let Some(id) = &ideal_report {
        if id.dense != id.quotient_trivial {
            return Err(TopAlgError::violation(
                TheoremId::DenseIdeal,
                format!(
                    "ideal density = {} but quotient triviality = {}",
                    id.dense, id.quotient_trivial
                ),
            ));
        }
    }
    if is_field && !zero_closed && !trivial {
        return Err(TopAlgError::violation(
            TheoremId::Coro4Dort,
            format!("field with cl(0) = {zero_closure} and a nontrivial topology"),
        ));
    }
    Ok(RingDensityReport {
        verdict: Verdict::Holds,
        zero_closure,
        zero_dense,
        trivial,
        is_field,
        ideal: ideal_report,
    })
}

/// The kind of substructure a subset is claimed to be, on the additive
/// group or the ring. Subring here means closed under addition and
/// multiplication and containing zero; it need not contain one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubstructureKind {
    Subgroup,
    NormalSubgroup,
    Ideal,
    MultiplicativeSet,
    Subring,
}

#[derive(Debug, Clone)]
pub struct SubstructureReport {
    pub verdict: Verdict,
    pub kind: SubstructureKind,
    pub closure: Subset,
    pub closure_has_kind: bool,
}

fn has_kind(ring: &FiniteRing, subset: &Subset, kind: SubstructureKind) -> bool {
    let additive = || {
        subset.contains(ring.zero())
            && subset
                .iter()
                .all(|a| subset.iter().all(|b| subset.contains(ring.add(a, b))))
    };
    let multiplicative = || {
        !subset.is_empty()
            && subset
                .iter()
                .all(|a| subset.iter().all(|b| subset.contains(ring.mul(a, b))))
    };
    match kind {
        // The additive group is abelian, so normality adds nothing.
        SubstructureKind::Subgroup | SubstructureKind::NormalSubgroup => additive(),
        SubstructureKind::Ideal => Ideal::from_elements(ring, &subset.elems()).is_ok(),
        SubstructureKind::MultiplicativeSet => multiplicative(),
        SubstructureKind::Subring => additive() && multiplicative(),
    }
}

/// Closure of a substructure keeps its kind: the topological closure of
/// a subgroup, ideal, multiplicative set, or subring is asserted to be
/// again a substructure of the declared kind.
pub fn closure_substructure(
    tr: &TopRing,
    subset: &Subset,
    kind: SubstructureKind,
) -> Result<SubstructureReport, TopAlgError> {
    if !has_kind(tr.ring(), subset, kind) {
        return Err(TopAlgError::Precondition {
            reason: format!("{subset} is not a {kind:?}"),
        });
    }
    let closure = tr.topology().closure_set(subset);
    let closure_has_kind = has_kind(tr.ring(), &closure, kind);
    if !tr.is_topological_ring() {
        return Ok(SubstructureReport {
            verdict: Verdict::HypothesisUnmet,
            kind,
            closure,
            closure_has_kind,
        });
    }
    if !closure_has_kind {
        let theorem = match kind {
            SubstructureKind::Subgroup | SubstructureKind::NormalSubgroup => TheoremId::Thm6Six,
            _ => TheoremId::ClosureSubstructure,
        };
        return Err(TopAlgError::violation(
            theorem,
            format!("closure {closure} of a {kind:?} lost its structure"),
        ));
    }
    Ok(SubstructureReport {
        verdict: Verdict::Holds,
        kind,
        closure,
        closure_has_kind,
    })
}

#[derive(Debug, Clone)]
pub struct KohReport {
    pub verdict: Verdict,
    /// Whether r ↦ rx is a closed map.
    pub closed_map: bool,
    pub kernel: Subset,
    pub kernel_closed: bool,
    pub hausdorff: bool,
    /// The principal multiple set Rx.
    pub image: Subset,
    pub image_closed: bool,
    /// Every finite space is quasi-compact, so the compactness side of
    /// the statement carries no content here.
    pub quasi_compact_note: &'static str,
}

/// The zerodivisor multiplication map r ↦ rx for a nonzero zerodivisor
/// x. When the map is closed, the kernel Ann(x) is closed exactly when
/// the space is Hausdorff, and the image Rx is closed; when it is not,
/// the verdicts are only reported.
pub fn koh_hypotheses(tr: &TopRing, x: usize) -> Result<KohReport, TopAlgError> {
    let ring = tr.ring();
    let t = tr.topology();
    let n = ring.size();
    if x == 0 || x >= n || !zerodivisors(ring).contains(&x) {
        return Err(TopAlgError::Precondition {
            reason: format!("{x} is not a nonzero zerodivisor"),
        });
    }
    let f = MapTable::from_fn(n, n, |r| ring.mul(r, x));
    // Closed sets are unions of point closures and images commute with
    // unions, so point closures decide the closed-map property.
    let closed_map = (0..n).all(|r| t.is_closed(&f.image(t.point_closure(r))));
    let kernel = annihilator(ring, x)?.subset().clone();
    let kernel_closed = t.is_closed(&kernel);
    let hausdorff = space_predicates(t).hausdorff;
    let image = f.image(&Subset::full(n));
    let image_closed = t.is_closed(&image);
    if !tr.is_topological_ring() || !closed_map {
        return Ok(KohReport {
            verdict: Verdict::HypothesisUnmet,
            closed_map,
            kernel,
            kernel_closed,
            hausdorff,
            image,
            image_closed,
            quasi_compact_note: "degenerate-finite",
        });
    }
    if kernel_closed != hausdorff {
        return Err(TopAlgError::violation(
            TheoremId::Theorem4iv,
            format!("kernel closed = {kernel_closed} but hausdorff = {hausdorff}"),
        ));
    }
    if !image_closed {
        return Err(TopAlgError::violation(
            TheoremId::Theorem4iv,
            format!("closed multiplication map with non-closed image {image}"),
        ));
    }
    Ok(KohReport {
        verdict: Verdict::Holds,
        closed_map,
        kernel,
        kernel_closed,
        hausdorff,
        image,
        image_closed,
        quasi_compact_note: "degenerate-finite",
    })
}
