//! Topological-group verdicts and the structure theorems behind them.

use super::group::GroupTable;
use super::TopAlgError;
use crate::budget::charge_nary_check;
use crate::fintop::{
    is_continuous, product_topology, quotient_topology, space_predicates, subspace_topology,
    FinTopology, MapTable,
};
use crate::report::{TheoremId, Verdict};
use crate::set::Subset;

/// A failed continuity check: an open set of the codomain together with
/// its non-open preimage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityWitness {
    pub codomain_open: Subset,
    pub preimage: Subset,
}

/// Verdicts for one (group, topology) pair.
#[derive(Debug, Clone)]
pub struct TopGroupReport {
    pub op_continuous: bool,
    pub op_witness: Option<ContinuityWitness>,
    pub inverse_continuous: bool,
    pub inverse_witness: Option<ContinuityWitness>,
    /// Minimal open neighborhood of the identity.
    pub identity_min_open: Subset,
    /// Whether that neighborhood is a normal subgroup.
    pub identity_nbhd_normal_subgroup: bool,
    /// Whether every minimal open is a left coset of that neighborhood,
    /// so the opens are exactly the unions of its cosets.
    pub opens_are_cosets: bool,
}

/// A group carrying a topology, with cached continuity verdicts.
#[derive(Debug, Clone)]
pub struct TopGroup {
    group: GroupTable,
    topology: FinTopology,
    report: TopGroupReport,
}

impl TopGroup {
    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn topology(&self) -> &FinTopology {
        &self.topology
    }

    pub fn report(&self) -> &TopGroupReport {
        &self.report
    }

    pub fn is_topological_group(&self) -> bool {
        self.report.op_continuous && self.report.inverse_continuous
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

/// Decides whether the operation and inversion are continuous for the
/// given topology, and reports the structure visible around the identity:
/// its minimal open neighborhood, whether that neighborhood is a normal
/// subgroup, and whether the opens are exactly unions of its cosets.
pub fn check_topological_group(
    group: &GroupTable,
    topology: &FinTopology,
) -> Result<TopGroup, TopAlgError> {
    let n = group.size();
    if topology.ground_size() != n {
        return Err(TopAlgError::SizeMismatch {
            context: format!(
                "group of size {n} with topology on {} points",
                topology.ground_size()
            ),
        });
    }
    charge_nary_check(n, 2)?;
    let product = product_topology(topology, topology);
    let op_map = MapTable::from_fn(n * n, n, |p| group.op(p / n, p % n));
    let (op_continuous, op_witness) = check_map(&op_map, &product, topology)?;
    let inv_map = MapTable::from_fn(n, n, |a| group.inv(a));
    let (inverse_continuous, inverse_witness) = check_map(&inv_map, topology, topology)?;
    let identity_min_open = topology.min_open(group.identity()).clone();
    let identity_nbhd_normal_subgroup = group.is_normal(&identity_min_open);
    let opens_are_cosets = (0..n)
        .all(|x| *topology.min_open(x) == group.translate_left(x, &identity_min_open));
    Ok(TopGroup {
        group: group.clone(),
        topology: topology.clone(),
        report: TopGroupReport {
            op_continuous,
            op_witness,
            inverse_continuous,
            inverse_witness,
            identity_min_open,
            identity_nbhd_normal_subgroup,
            opens_are_cosets,
        },
    })
}

/// A word c·x₁^{d₁}···xₖ^{dₖ}, multiplied left to right; negative
/// exponents go through the group inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub constant: usize,
    pub exponents: Vec<i64>,
}

impl Monomial {
    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    fn eval(&self, group: &GroupTable, coords: &[usize]) -> usize {
        let mut acc = self.constant;
        for (i, &d) in self.exponents.iter().enumerate() {
            acc = group.op(acc, group.pow(coords[i], d));
        }
        acc
    }
}

#[derive(Debug, Clone)]
pub struct MonomialReport {
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

/// Continuity of a monomial word as a map Gᵏ → G. On a verified
/// topological group the word is a composition of the operation and the
/// inverse, so discontinuity would be a counterexample; when the instance
/// is not a topological group the verdict is only reported.
pub fn monomial_continuity(
    tg: &TopGroup,
    monomial: &Monomial,
) -> Result<MonomialReport, TopAlgError> {
    let arity = monomial.arity();
    if arity == 0 || arity > 3 {
        return Err(TopAlgError::Precondition {
            reason: format!("monomial arity {arity} outside 1..=3"),
        });
    }
    let n = tg.group().size();
    if monomial.constant >= n {
        return Err(TopAlgError::Precondition {
            reason: format!("constant {} outside the group", monomial.constant),
        });
    }
    charge_nary_check(n, arity as u32)?;
    let domain = iterated_product(tg.topology(), arity);
    let ground: usize = n.pow(arity as u32);
    let map = MapTable::from_fn(ground, n, |i| {
        monomial.eval(tg.group(), &decode_tuple(i, n, arity))
    });
    let (continuous, witness) = check_map(&map, &domain, tg.topology())?;
    if !tg.is_topological_group() {
        return Ok(MonomialReport {
            verdict: Verdict::HypothesisUnmet,
            continuous,
            witness,
        });
    }
    if !continuous {
        return Err(TopAlgError::violation(
            TheoremId::Lemma2i,
            format!(
                "monomial {:?} discontinuous on a topological group of size {n}",
                monomial
            ),
        ));
    }
    Ok(MonomialReport {
        verdict: Verdict::Holds,
        continuous: true,
        witness: None,
    })
}

/// For an open U ∋ e and n ≥ 1, returns an open V ∋ e with Vⁿ ⊆ U. The
/// minimal open neighborhood of the identity always works at finite
/// scale: it is a subgroup, hence equal to all its powers.
pub fn power_neighborhood(
    tg: &TopGroup,
    u: &Subset,
    n: u32,
) -> Result<Subset, TopAlgError> {
    if !tg.is_topological_group() {
        return Err(TopAlgError::Precondition {
            reason: "power neighborhoods require a topological group".into(),
        });
    }
    let e = tg.group().identity();
    if n == 0 || !u.contains(e) || !tg.topology().is_open(u) {
        return Err(TopAlgError::Precondition {
            reason: "need n ≥ 1 and an open set containing the identity".into(),
        });
    }
    let v = tg.topology().min_open(e).clone();
    let mut power = v.clone();
    for _ in 1..n {
        power = tg.group().mul_sets(&power, &v);
    }
    if !power.is_subset_of(u) {
        return Err(TopAlgError::violation(
            TheoremId::PowerNeighborhood,
            format!("V = {v} has V^{n} = {power} escaping U = {u}"),
        ));
    }
    Ok(v)
}

#[derive(Debug, Clone)]
pub struct HausdorffDiscreteReport {
    pub verdict: Verdict,
    pub hausdorff: bool,
    pub identity_closed: bool,
    pub discrete: bool,
    pub isolated_points: Vec<usize>,
}

/// On a topological group, Hausdorff is equivalent to the identity being
/// a closed point, and discreteness to the existence of any isolated
/// point; both equivalences are asserted.
pub fn hausdorff_discrete_criteria(
    tg: &TopGroup,
) -> Result<HausdorffDiscreteReport, TopAlgError> {
    let t = tg.topology();
    let preds = space_predicates(t);
    let e = tg.group().identity();
    let identity_closed = t.is_closed(&Subset::singleton(t.ground_size(), e));
    let isolated_points: Vec<usize> = (0..t.ground_size())
        .filter(|&x| t.min_open(x).len() == 1)
        .collect();
    if !tg.is_topological_group() {
        return Ok(HausdorffDiscreteReport {
            verdict: Verdict::HypothesisUnmet,
            hausdorff: preds.hausdorff,
            identity_closed,
            discrete: preds.discrete,
            isolated_points,
        });
    }
    if preds.hausdorff != identity_closed {
        return Err(TopAlgError::violation(
            TheoremId::Thm6Six,
            format!(
                "hausdorff = {} but identity closed = {}",
                preds.hausdorff, identity_closed
            ),
        ));
    }
    if preds.discrete != !isolated_points.is_empty() {
        return Err(TopAlgError::violation(
            TheoremId::Thm6Six,
            format!(
                "discrete = {} but isolated points = {:?}",
                preds.discrete, isolated_points
            ),
        ));
    }
    Ok(HausdorffDiscreteReport {
        verdict: Verdict::Holds,
        hausdorff: preds.hausdorff,
        identity_closed,
        discrete: preds.discrete,
        isolated_points,
    })
}

#[derive(Debug, Clone)]
pub struct IdentityComponentReport {
    pub verdict: Verdict,
    pub component: Subset,
    pub normal_subgroup: bool,
    pub cosets_are_components: bool,
    pub quotient: FinTopology,
}

/// The connected component of the identity, asserted to be a normal
/// subgroup whose cosets are exactly the connected components; the
/// quotient topology over that partition is the (discrete) component
/// space.
pub fn identity_component(tg: &TopGroup) -> Result<IdentityComponentReport, TopAlgError> {
    let t = tg.topology();
    let (partition, component_space) = crate::fintop::pi0(t);
    let e = tg.group().identity();
    let component = partition.blocks()[partition.block_of(e)].clone();
    let normal_subgroup = tg.group().is_normal(&component);
    let cosets = tg.group().coset_partition(&component);
    let cosets_are_components = cosets.blocks() == partition.blocks();
    let quotient = quotient_topology(t, &partition)?;
    if !tg.is_topological_group() {
        return Ok(IdentityComponentReport {
            verdict: Verdict::HypothesisUnmet,
            component,
            normal_subgroup,
            cosets_are_components,
            quotient,
        });
    }
    if !normal_subgroup || !cosets_are_components {
        return Err(TopAlgError::violation(
            TheoremId::Lemma4iv,
            format!(
                "component of e = {component}: normal subgroup = {normal_subgroup}, \
                 cosets are components = {cosets_are_components}"
            ),
        ));
    }
    assert_eq!(
        quotient, component_space,
        "quotient over the component partition is the component space"
    );
    if !space_predicates(&quotient).discrete {
        return Err(TopAlgError::violation(
            TheoremId::Lemma4iv,
            "component space is not discrete".to_string(),
        ));
    }
    Ok(IdentityComponentReport {
        verdict: Verdict::Holds,
        component,
        normal_subgroup,
        cosets_are_components,
        quotient,
    })
}

#[derive(Debug, Clone)]
pub struct SubgroupDensity {
    pub normal: bool,
    pub dense: bool,
    pub quotient_trivial: bool,
}

#[derive(Debug, Clone)]
pub struct DenseTrivialityReport {
    pub verdict: Verdict,
    pub identity_closure: Subset,
    pub identity_dense: bool,
    pub trivial: bool,
    pub subgroup: Option<SubgroupDensity>,
    pub simple: bool,
}

/// Density against triviality. Without a subgroup: the closure of {e} is
/// the whole group exactly when the topology is trivial. With a normal
/// subgroup H: H is dense exactly when the quotient topology on G/H is
/// trivial; without normality only the quotient-trivial direction is
/// asserted. A simple group additionally has {e} closed or the trivial
/// topology, nothing in between.
pub fn dense_triviality(
    tg: &TopGroup,
    subgroup: Option<&Subset>,
) -> Result<DenseTrivialityReport, TopAlgError> {
    let t = tg.topology();
    let g = tg.group();
    let e = g.identity();
    let identity_closure = t.point_closure(e).clone();
    let identity_dense = identity_closure.is_full();
    let trivial = space_predicates(t).trivial;
    let identity_closed = identity_closure.len() == 1;
    let subgroup_report = match subgroup {
        None => None,
        Some(h) => {
            if !g.is_subgroup(h) {
                return Err(TopAlgError::Precondition {
                    reason: format!("{h} is not a subgroup"),
                });
            }
            let normal = g.is_normal(h);
            let dense = t.closure_set(h).is_full();
            let quotient = quotient_topology(t, &g.coset_partition(h))?;
            let quotient_trivial = space_predicates(&quotient).trivial;
            Some(SubgroupDensity {
                normal,
                dense,
                quotient_trivial,
            })
        }
    };
    let simple = if subgroup.is_none() { g.is_simple() } else { false };
    if !tg.is_topological_group() {
        return Ok(DenseTrivialityReport {
            verdict: Verdict::HypothesisUnmet,
            identity_closure,
            identity_dense,
            trivial,
            subgroup: subgroup_report,
            simple,
        });
    }
    if identity_dense != trivial {
        return Err(TopAlgError::violation(
            TheoremId::Theorem8Zekiz,
            format!("closure of e is {identity_closure} while trivial = {trivial}"),
        ));
    }
    if let Some(sd) = &subgroup_report {
        let ok = if sd.normal {
            sd.dense == sd.quotient_trivial
        } else {
            !sd.quotient_trivial || sd.dense
        };
        if !ok {
            return Err(TopAlgError::violation(
                TheoremId::Theorem10On,
                format!(
                    "subgroup density = {}, quotient trivial = {}, normal = {}",
                    sd.dense, sd.quotient_trivial, sd.normal
                ),
            ));
        }
    }
    if simple && !identity_closed && !trivial {
        return Err(TopAlgError::violation(
            TheoremId::Coro5Besh,
            format!("simple group with cl(e) = {identity_closure} and a nontrivial topology"),
        ));
    }
    Ok(DenseTrivialityReport {
        verdict: Verdict::Holds,
        identity_closure,
        identity_dense,
        trivial,
        subgroup: subgroup_report,
        simple,
    })
}

#[derive(Debug, Clone)]
pub struct GroupClosureReport {
    pub verdict: Verdict,
    pub closure: Subset,
    pub neighborhood_intersection: Subset,
    pub translate_products_closed: bool,
    pub projections_closed: bool,
    /// Every subset of a finite space is quasi-compact, so the
    /// quasi-compactness hypotheses hold without content.
    pub quasi_compact_note: &'static str,
}

/// The closure formula cl(S) = ∩{S·U : U open ∋ e} and its consequences:
/// products of a closed set with any set are closed, and the projection
/// onto any coset space is a closed map with quasi-compact fibers. Every
/// open U ∋ e contains the minimal neighborhood N of e, so the
/// intersection collapses to S·N; at small sizes the full scan over the
/// open family is run as well and asserted to agree.
pub fn group_closure_formula(
    tg: &TopGroup,
    s: &Subset,
) -> Result<GroupClosureReport, TopAlgError> {
    let t = tg.topology();
    let g = tg.group();
    let n = g.size();
    let e = g.identity();
    let closure = t.closure_set(s);
    let nbhd = t.min_open(e);
    let neighborhood_intersection = g.mul_sets(s, nbhd);
    if n <= 12 {
        let mut scan = Subset::full(n);
        let mut scan_closures = Subset::full(n);
        for u in t.opens_family()? {
            if u.contains(e) {
                let su = g.mul_sets(s, &u);
                scan_closures.intersect_with(&t.closure_set(&su));
                scan.intersect_with(&su);
            }
        }
        assert_eq!(
            scan, neighborhood_intersection,
            "intersection over opens containing e collapses to S·N"
        );
        assert_eq!(
            scan_closures, neighborhood_intersection,
            "intersecting the closures of the S·U gives the same set"
        );
    }
    let closed_family: Vec<Subset> = if n <= 8 {
        t.opens_family()?
            .into_iter()
            .map(|u| u.complement())
            .collect()
    } else {
        vec![closure.clone(), t.point_closure(e).clone()]
    };
    let mut k_sets: Vec<Subset> = (0..n).map(|x| Subset::singleton(n, x)).collect();
    k_sets.push(s.clone());
    k_sets.push(nbhd.clone());
    k_sets.push(Subset::full(n));
    let mut translate_products_closed = true;
    'outer: for closed in &closed_family {
        for k in &k_sets {
            if !t.is_closed(&g.mul_sets(closed, k)) || !t.is_closed(&g.mul_sets(k, closed)) {
                translate_products_closed = false;
                break 'outer;
            }
        }
    }
    let subgroups = if n <= 24 {
        g.subgroups()
    } else {
        vec![
            Subset::singleton(n, e),
            g.subgroup_closure(nbhd),
            Subset::full(n),
        ]
    };
    let mut projections_closed = true;
    'subgroups: for h in &subgroups {
        let partition = g.coset_partition(h);
        let quotient = quotient_topology(t, &partition)?;
        let projection = partition.projection();
        // Closed sets are unions of point closures and images commute
        // with unions, so point closures decide the closed-map property.
        for x in 0..n {
            if !quotient.is_closed(&projection.image(t.point_closure(x))) {
                projections_closed = false;
                break 'subgroups;
            }
        }
    }
    if !tg.is_topological_group() {
        return Ok(GroupClosureReport {
            verdict: Verdict::HypothesisUnmet,
            closure,
            neighborhood_intersection,
            translate_products_closed,
            projections_closed,
            quasi_compact_note: "degenerate-finite",
        });
    }
    if closure != neighborhood_intersection {
        return Err(TopAlgError::violation(
            TheoremId::Theorem5Five,
            format!("cl(S) = {closure} but the neighborhood formula gives {neighborhood_intersection}"),
        ));
    }
    if !translate_products_closed || !projections_closed {
        return Err(TopAlgError::violation(
            TheoremId::Theorem5Five,
            format!(
                "translate products closed = {translate_products_closed}, \
                 coset projections closed = {projections_closed}"
            ),
        ));
    }
    Ok(GroupClosureReport {
        verdict: Verdict::Holds,
        closure,
        neighborhood_intersection,
        translate_products_closed,
        projections_closed,
        quasi_compact_note: "degenerate-finite",
    })
}

#[derive(Debug, Clone)]
pub struct WeakClosedReport {
    pub verdict: Verdict,
    pub weak_closed: bool,
    /// First open (in canonical family order) meeting the subset in a
    /// relatively closed nonempty piece.
    pub witness_open: Option<Subset>,
    pub is_subgroup: bool,
    pub closed: bool,
}

/// Weak closedness: some open U meets H in a nonempty set closed in the
/// subspace U. A weak closed subset that is closed under the operation
/// is asserted to be a closed subgroup.
pub fn weak_closed_check(tg: &TopGroup, h: &Subset) -> Result<WeakClosedReport, TopAlgError> {
    let t = tg.topology();
    let g = tg.group();
    if h.is_empty() || !g.is_op_closed(h) {
        return Err(TopAlgError::Precondition {
            reason: "need a nonempty subset closed under the operation".into(),
        });
    }
    let mut witness_open = None;
    for u in t.opens_family()? {
        let meet = u.intersection(h);
        if meet.is_empty() {
            continue;
        }
        let (sub, index_map) = subspace_topology(t, &u)?;
        let position = |old: usize| index_map.binary_search(&old).expect("member");
        let mut meet_reindexed = Subset::empty(index_map.len());
        for x in meet.iter() {
            meet_reindexed.insert(position(x));
        }
        if sub.is_closed(&meet_reindexed) {
            witness_open = Some(u);
            break;
        }
    }
    let weak_closed = witness_open.is_some();
    let is_subgroup = g.is_subgroup(h);
    let closed = t.is_closed(h);
    if !tg.is_topological_group() || !weak_closed {
        return Ok(WeakClosedReport {
            verdict: Verdict::HypothesisUnmet,
            weak_closed,
            witness_open,
            is_subgroup,
            closed,
        });
    }
    // A nonempty finite set closed under the operation is a subgroup.
    assert!(is_subgroup, "finite operation-closed sets are subgroups");
    if !closed {
        return Err(TopAlgError::violation(
            TheoremId::WeakClosed,
            format!("weak closed subgroup {h} is not closed"),
        ));
    }
    Ok(WeakClosedReport {
        verdict: Verdict::Holds,
        weak_closed,
        witness_open,
        is_subgroup,
        closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::make_ring;
    use crate::fintop::pi0;

    fn coset_topology(group: &GroupTable, h: &Subset) -> FinTopology {
        let rows = (0..group.size())
            .map(|x| group.translate_left(x, h))
            .collect();
        FinTopology::from_min_open(group.size(), rows).unwrap()
    }

    fn z12_coset_group() -> TopGroup {
        let g = GroupTable::additive(&make_ring("Z/12").unwrap());
        let h = Subset::from_elems(12, &[0, 4, 8]);
        check_topological_group(&g, &coset_topology(&g, &h)).unwrap()
    }

    #[test]
    fn addition_mod_two_fails_on_the_two_point_space_with_one_open_point() {
        let g = GroupTable::additive(&make_ring("Z/2").unwrap());
        let tg = check_topological_group(&g, &FinTopology::sierpinski()).unwrap();
        assert!(!tg.is_topological_group());
        let w = tg.report().op_witness.as_ref().unwrap();
        assert_eq!(w.codomain_open.elems(), vec![0]);
        assert_eq!(w.preimage.elems(), vec![0, 3]); // pairs (0,0) and (1,1)
        assert!(tg.report().inverse_continuous); // negation is the identity map
    }

    #[test]
    fn discrete_and_trivial_topologies_always_work() {
        let g = GroupTable::additive(&make_ring("Z/6").unwrap());
        for t in [FinTopology::discrete(6), FinTopology::trivial(6)] {
            let tg = check_topological_group(&g, &t).unwrap();
            assert!(tg.is_topological_group());
            assert!(tg.report().identity_nbhd_normal_subgroup);
            assert!(tg.report().opens_are_cosets);
        }
    }

    #[test]
    fn coset_topology_is_a_topological_group_with_subgroup_neighborhood() {
        let tg = z12_coset_group();
        assert!(tg.is_topological_group());
        assert_eq!(tg.report().identity_min_open.elems(), vec![0, 4, 8]);
        assert!(tg.report().identity_nbhd_normal_subgroup);
        assert!(tg.report().opens_are_cosets);
    }

    #[test]
    fn monomials_are_continuous_on_topological_groups() {
        let tg = z12_coset_group();
        for exponents in [vec![1], vec![-1], vec![2, -3], vec![1, 1, -1]] {
            let m = Monomial {
                constant: 4,
                exponents,
            };
            let report = monomial_continuity(&tg, &m).unwrap();
            assert_eq!(report.verdict, Verdict::Holds);
        }
        let g = GroupTable::additive(&make_ring("Z/2").unwrap());
        let broken = check_topological_group(&g, &FinTopology::sierpinski()).unwrap();
        let m = Monomial {
            constant: 0,
            exponents: vec![1, 1],
        };
        let report = monomial_continuity(&broken, &m).unwrap();
        assert_eq!(report.verdict, Verdict::HypothesisUnmet);
        assert!(!report.continuous);
    }

    #[test]
    fn power_neighborhoods_come_from_the_identity_neighborhood() {
        let tg = z12_coset_group();
        let u = Subset::from_elems(12, &[0, 4, 8]);
        assert_eq!(power_neighborhood(&tg, &u, 2).unwrap().elems(), vec![0, 4, 8]);
        let g = GroupTable::additive(&make_ring("Z/6").unwrap());
        let trivial = check_topological_group(&g, &FinTopology::trivial(6)).unwrap();
        assert!(power_neighborhood(&trivial, &Subset::full(6), 3)
            .unwrap()
            .is_full());
        let discrete = check_topological_group(&g, &FinTopology::discrete(6)).unwrap();
        let tight = Subset::singleton(6, 0);
        assert_eq!(power_neighborhood(&discrete, &tight, 2).unwrap(), tight);
        assert!(power_neighborhood(&discrete, &Subset::from_elems(6, &[1, 2]), 1).is_err());
    }

    #[test]
    fn separation_criteria_match_the_identity_point() {
        let g = GroupTable::additive(&make_ring("Z/6").unwrap());
        let discrete = check_topological_group(&g, &FinTopology::discrete(6)).unwrap();
        let r = hausdorff_discrete_criteria(&discrete).unwrap();
        assert!(r.hausdorff && r.identity_closed && r.discrete);
        assert_eq!(r.isolated_points.len(), 6);

        let tg = z12_coset_group();
        let r = hausdorff_discrete_criteria(&tg).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(!r.hausdorff && !r.identity_closed && !r.discrete);
        assert!(r.isolated_points.is_empty());
    }

    #[test]
    fn identity_component_is_the_coset_of_the_stable_subgroup() {
        let tg = z12_coset_group();
        let r = identity_component(&tg).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.component.elems(), vec![0, 4, 8]);
        assert!(r.normal_subgroup && r.cosets_are_components);
        assert_eq!(r.quotient.ground_size(), 4);
        assert!(space_predicates(&r.quotient).discrete);
    }

    #[test]
    fn dense_identity_forces_the_trivial_topology() {
        let g = GroupTable::additive(&make_ring("Z/6").unwrap());
        let trivial = check_topological_group(&g, &FinTopology::trivial(6)).unwrap();
        let r = dense_triviality(&trivial, None).unwrap();
        assert!(r.identity_dense && r.trivial);
        let discrete = check_topological_group(&g, &FinTopology::discrete(6)).unwrap();
        let r = dense_triviality(&discrete, None).unwrap();
        assert!(!r.identity_dense && !r.trivial);
    }

    #[test]
    fn normal_subgroup_density_matches_quotient_triviality() {
        let tg = z12_coset_group();
        // Dense subgroup: its closure sweeps out every coset.
        let r = dense_triviality(&tg, Some(&Subset::from_elems(12, &[0, 3, 6, 9]))).unwrap();
        let sd = r.subgroup.unwrap();
        assert!(sd.normal && sd.dense && sd.quotient_trivial);
        // Closed subgroup: neither dense nor quotient-trivial.
        let r = dense_triviality(&tg, Some(&Subset::from_elems(12, &[0, 2, 4, 6, 8, 10]))).unwrap();
        let sd = r.subgroup.unwrap();
        assert!(!sd.dense && !sd.quotient_trivial);
        let r = dense_triviality(&tg, Some(&Subset::from_elems(12, &[0, 6]))).unwrap();
        let sd = r.subgroup.unwrap();
        assert!(!sd.dense && !sd.quotient_trivial);
    }

    #[test]
    fn non_normal_dense_subgroup_with_trivial_quotient() {
        let g = GroupTable::symmetric_3();
        let alternating = Subset::from_elems(6, &[0, 3, 4]);
        let t = coset_topology(&g, &alternating);
        let tg = check_topological_group(&g, &t).unwrap();
        assert!(tg.is_topological_group());
        let transpositions = Subset::from_elems(6, &[0, 2]);
        let r = dense_triviality(&tg, Some(&transpositions)).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let sd = r.subgroup.unwrap();
        assert!(!sd.normal);
        assert!(sd.dense && sd.quotient_trivial);
    }

    #[test]
    fn simple_groups_admit_only_closed_identity_or_trivial() {
        let g = GroupTable::additive(&make_ring("Z/5").unwrap());
        for t in [FinTopology::discrete(5), FinTopology::trivial(5)] {
            let tg = check_topological_group(&g, &t).unwrap();
            let r = dense_triviality(&tg, None).unwrap();
            assert!(r.simple);
            assert_eq!(r.verdict, Verdict::Holds);
        }
    }

    #[test]
    fn closure_formula_collapses_to_the_identity_neighborhood() {
        let tg = z12_coset_group();
        let s = Subset::from_elems(12, &[1]);
        let r = group_closure_formula(&tg, &s).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.closure.elems(), vec![1, 5, 9]);
        assert_eq!(r.neighborhood_intersection, r.closure);
        assert!(r.translate_products_closed);
        assert!(r.projections_closed);
        assert_eq!(r.quasi_compact_note, "degenerate-finite");
    }

    #[test]
    fn weak_closed_detection_and_the_closedness_consequence() {
        let tg = z12_coset_group();
        // A full coset subgroup: witnessed by its own open coset.
        let r = weak_closed_check(&tg, &Subset::from_elems(12, &[0, 4, 8])).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.weak_closed && r.closed && r.is_subgroup);
        assert_eq!(r.witness_open.unwrap().elems(), vec![0, 4, 8]);
        // {0, 6} meets every open in a relatively non-closed set.
        let r = weak_closed_check(&tg, &Subset::from_elems(12, &[0, 6])).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisUnmet);
        assert!(!r.weak_closed && !r.closed);
    }

    #[test]
    fn component_partition_agrees_with_pi0() {
        let tg = z12_coset_group();
        let (partition, _) = pi0(tg.topology());
        assert_eq!(partition.blocks().len(), 4);
        let r = identity_component(&tg).unwrap();
        assert_eq!(partition.blocks()[0], r.component);
    }
}
