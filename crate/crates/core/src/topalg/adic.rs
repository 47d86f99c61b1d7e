//! Adic topologies: the opens generated by cosets of ideal powers.
//!
//! The powers of an ideal descend to a stable ideal after finitely many
//! steps, so the coset filtration collapses: the minimal open around a
//! point is its coset of the stable power. The topology is built from
//! that coset directly; agreement with the base of all power cosets is
//! covered by an integration test rather than recomputed here.

use super::topring::{
    absolute_check, additive_coset_partition, check_topological_ring, TopRing,
};
use super::TopAlgError;
use crate::finring::{
    ideal_power_chain, maximal_ideals, quotient_ring, FiniteRing, Ideal, PowerChain, RingMorphism,
};
use crate::fintop::{
    is_continuous, is_homeomorphic, pi0, sober_space, space_predicates, subspace_topology,
    FinTopology, MapTable,
};
use crate::report::TheoremId;
use crate::set::Subset;

/// A ring with the topology of an ideal's power filtration.
#[derive(Debug, Clone)]
pub struct AdicTopology {
    ideal: Ideal,
    chain: PowerChain,
    top_ring: TopRing,
}

impl AdicTopology {
    pub fn ring(&self) -> &FiniteRing {
        self.top_ring.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn chain(&self) -> &PowerChain {
        &self.chain
    }

    pub fn stable(&self) -> &Ideal {
        &self.chain.stable
    }

    pub fn topology(&self) -> &FinTopology {
        self.top_ring.topology()
    }

    pub fn top_ring(&self) -> &TopRing {
        &self.top_ring
    }
}

/// Builds the adic topology of an ideal: minimal opens are the cosets of
/// the stable power. The result is asserted to be a topological ring and
/// absolute, and to be discrete exactly when the ideal is nilpotent.
pub fn adic_topology(ring: &FiniteRing, ideal: &Ideal) -> Result<AdicTopology, TopAlgError> {
    if ideal.ring_size() != ring.size() {
        return Err(TopAlgError::Precondition {
            reason: "ideal from a different ring".into(),
        });
    }
    let chain = ideal_power_chain(ring, ideal);
    let stable = chain.stable.subset();
    let rows = (0..ring.size()).map(|x| ring.translate(x, stable)).collect();
    let topology = FinTopology::from_min_open(ring.size(), rows)
        .expect("coset rows of an ideal form a preorder");
    let top_ring = check_topological_ring(ring, &topology)?;
    if !top_ring.is_topological_ring() {
        return Err(TopAlgError::violation(
            TheoremId::Theorem3,
            format!("adic topology of {} on {} is not a topological ring", ideal.subset(), ring.spec()),
        ));
    }
    if !absolute_check(&top_ring)?.absolute {
        return Err(TopAlgError::violation(
            TheoremId::Theorem3,
            format!("adic topology of {} on {} is not absolute", ideal.subset(), ring.spec()),
        ));
    }
    let discrete = space_predicates(&topology).discrete;
    if discrete != chain.nilpotent {
        return Err(TopAlgError::violation(
            TheoremId::Lemma3iii,
            format!(
                "discrete = {discrete} but the ideal is {}nilpotent",
                if chain.nilpotent { "" } else { "not " }
            ),
        ));
    }
    Ok(AdicTopology {
        ideal: ideal.clone(),
        chain,
        top_ring,
    })
}

/// Computed facts about one adic instance; constructing the report
/// asserts every one of them, so a returned report certifies them all.
#[derive(Debug, Clone)]
pub struct AdicStructureReport {
    pub adic: AdicTopology,
    /// Closures agree with the power-coset intersection formula.
    pub closure_formula: bool,
    /// Every point closure is the point's coset of the stable power.
    pub point_closures_are_cosets: bool,
    /// The component partition is the coset partition of the stable
    /// power, so R modulo the stable power is the component space.
    pub components_match_quotient: bool,
    /// The space of irreducible closed sets is that same quotient.
    pub sober_matches_quotient: bool,
    pub ideal_connected: bool,
    pub ideal_idempotent: bool,
    pub hausdorff: bool,
    pub stable_zero: bool,
    pub totally_disconnected: bool,
    pub has_singleton_component: bool,
    pub connected: bool,
}

fn closure_formula_test_sets(adic: &AdicTopology) -> Vec<Subset> {
    let n = adic.ring().size();
    if n <= 10 {
        return (0u64..(1 << n)).map(|w| Subset::from_word(n, w)).collect();
    }
    let mut sets: Vec<Subset> = vec![Subset::empty(n), Subset::full(n)];
    sets.extend((0..n).map(|x| Subset::singleton(n, x)));
    sets.extend(adic.chain().chain.iter().map(|p| p.subset().clone()));
    sets.extend(
        adic.chain()
            .chain
            .iter()
            .map(|p| adic.ring().translate(1 % n, p.subset())),
    );
    sets.push(Subset::from_elems(
        n,
        &crate::finring::zerodivisors(adic.ring()),
    ));
    sets.push(Subset::from_elems(n, &adic.ring().idempotents()));
    sets
}

/// Verifies the closure formula, the component and sober quotients, the
/// idempotent-connectivity criterion, the four-way Hausdorff
/// equivalence, and the impossibility of a connected proper adic
/// topology. Every subset is swept when the ring has at most ten
/// elements; a fixed family of structured subsets is used beyond that.
pub fn adic_structure_theorems(
    ring: &FiniteRing,
    ideal: &Ideal,
) -> Result<AdicStructureReport, TopAlgError> {
    let adic = adic_topology(ring, ideal)?;
    let t = adic.topology();
    let n = ring.size();
    let stable = adic.stable().subset().clone();

    for s in closure_formula_test_sets(&adic) {
        let mut formula = ring.add_sets(&s, adic.chain().chain[0].subset());
        for power in &adic.chain().chain[1..] {
            formula.intersect_with(&ring.add_sets(&s, power.subset()));
        }
        if t.closure_set(&s) != formula {
            return Err(TopAlgError::violation(
                TheoremId::Lemma3iii,
                format!("closure of {s} differs from the power-coset intersection {formula}"),
            ));
        }
    }

    for x in 0..n {
        if *t.point_closure(x) != ring.translate(x, &stable) {
            return Err(TopAlgError::violation(
                TheoremId::Coro2Ex,
                format!("closure of {{{x}}} is not its stable-power coset"),
            ));
        }
    }

    let (partition, component_space) = pi0(t);
    let cosets = additive_coset_partition(ring, &stable);
    if partition.blocks() != cosets.blocks() {
        return Err(TopAlgError::violation(
            TheoremId::Coro1Excellent,
            "components are not the cosets of the stable power".to_string(),
        ));
    }
    let (residue, _) = quotient_ring(ring, adic.stable())?;
    let components_match_quotient =
        is_homeomorphic(&component_space, &FinTopology::discrete(residue.size())).is_some();
    if !components_match_quotient {
        return Err(TopAlgError::violation(
            TheoremId::Coro1Excellent,
            "component space is not the discrete residue space".to_string(),
        ));
    }

    let sober = sober_space(t);
    let sober_matches_quotient =
        is_homeomorphic(&sober.topology, &FinTopology::discrete(residue.size())).is_some();
    if !sober_matches_quotient {
        return Err(TopAlgError::violation(
            TheoremId::TSpace,
            "irreducible-closed space is not the discrete residue space".to_string(),
        ));
    }

    let (ideal_space, _) = subspace_topology(t, ideal.subset())?;
    let ideal_connected = space_predicates(&ideal_space).connected;
    let ideal_idempotent = adic.chain().idempotent;
    if ideal_connected != ideal_idempotent {
        return Err(TopAlgError::violation(
            TheoremId::IdempotentConnected,
            format!("ideal connected = {ideal_connected} but idempotent = {ideal_idempotent}"),
        ));
    }

    let preds = space_predicates(t);
    let stable_zero = adic.stable().is_zero();
    let has_singleton_component = partition.blocks().iter().any(|b| b.len() == 1);
    if !(preds.hausdorff == stable_zero
        && stable_zero == preds.totally_disconnected
        && preds.totally_disconnected == has_singleton_component)
    {
        return Err(TopAlgError::violation(
            TheoremId::HausdorffFourWay,
            format!(
                "hausdorff = {}, stable zero = {stable_zero}, totally disconnected = {}, \
                 singleton component = {has_singleton_component}",
                preds.hausdorff, preds.totally_disconnected
            ),
        ));
    }

    if preds.connected && !ideal.is_full() {
        return Err(TopAlgError::violation(
            TheoremId::ConnectedImproper,
            "connected adic topology from a proper ideal".to_string(),
        ));
    }

    Ok(AdicStructureReport {
        closure_formula: true,
        point_closures_are_cosets: true,
        components_match_quotient,
        sober_matches_quotient,
        ideal_connected,
        ideal_idempotent,
        hausdorff: preds.hausdorff,
        stable_zero,
        totally_disconnected: preds.totally_disconnected,
        has_singleton_component,
        connected: preds.connected,
        adic,
    })
}

#[derive(Debug, Clone)]
pub struct AdicMorphismReport {
    pub continuous: bool,
    /// Least power with f(Iᵏ) contained in J, when one exists.
    pub witness_power: Option<usize>,
    /// For an identity morphism, whether the domain filtration refines
    /// the codomain ideal: some Iᵏ ⊆ J.
    pub identity_finer: Option<bool>,
}

/// Continuity of a ring morphism between two adic topologies, computed
/// by brute force and by the power criterion f(Iᵏ) ⊆ J; the two answers
/// are asserted to agree.
pub fn adic_morphism_continuity(
    f: &RingMorphism,
    domain_ideal: &Ideal,
    codomain_ideal: &Ideal,
) -> Result<AdicMorphismReport, TopAlgError> {
    if domain_ideal.ring_size() != f.domain().size()
        || codomain_ideal.ring_size() != f.codomain().size()
    {
        return Err(TopAlgError::Precondition {
            reason: "ideal sizes do not match the morphism".into(),
        });
    }
    let source = adic_topology(f.domain(), domain_ideal)?;
    let target = adic_topology(f.codomain(), codomain_ideal)?;
    let map = MapTable::new(f.domain().size(), f.codomain().size(), f.table().to_vec())?;
    let continuous = is_continuous(&map, source.topology(), target.topology())?.continuous;
    let witness_power = source
        .chain()
        .chain
        .iter()
        .position(|power| map.image(power.subset()).is_subset_of(codomain_ideal.subset()))
        .map(|i| i + 1);
    if continuous != witness_power.is_some() {
        return Err(TopAlgError::violation(
            TheoremId::AdicMorphism,
            format!(
                "brute-force continuity = {continuous} but power criterion found {witness_power:?}"
            ),
        ));
    }
    let is_identity =
        f.domain() == f.codomain() && f.table().iter().enumerate().all(|(i, &v)| i == v);
    let identity_finer = is_identity.then(|| {
        source
            .chain()
            .chain
            .iter()
            .any(|power| power.subset().is_subset_of(codomain_ideal.subset()))
    });
    if let Some(finer) = identity_finer {
        assert_eq!(
            finer, continuous,
            "identity continuity is exactly the refinement criterion"
        );
    }
    Ok(AdicMorphismReport {
        continuous,
        witness_power,
        identity_finer,
    })
}

#[derive(Debug, Clone)]
pub struct MaximalAdicReport {
    pub maximal_count: usize,
    pub pairs_checked: usize,
    /// Distinct maximal ideals always induce distinct adic topologies.
    pub separated: bool,
}

/// Sweeps all pairs of maximal ideals of one ring and asserts that their
/// adic topologies coincide exactly for equal ideals.
pub fn maximal_adic_separation(ring: &FiniteRing) -> Result<MaximalAdicReport, TopAlgError> {
    let maximal = maximal_ideals(ring);
    let topologies: Vec<FinTopology> = maximal
        .iter()
        .map(|m| adic_topology(ring, m).map(|a| a.topology().clone()))
        .collect::<Result<_, _>>()?;
    let mut pairs_checked = 0;
    for i in 0..maximal.len() {
        for j in i..maximal.len() {
            pairs_checked += 1;
            let same_ideal = maximal[i] == maximal[j];
            let same_topology = topologies[i] == topologies[j];
            if same_ideal != same_topology {
                return Err(TopAlgError::violation(
                    TheoremId::AdicMorphism,
                    format!(
                        "maximal ideals {} and {} with topology equality {}",
                        maximal[i].subset(),
                        maximal[j].subset(),
                        same_topology
                    ),
                ));
            }
        }
    }
    Ok(MaximalAdicReport {
        maximal_count: maximal.len(),
        pairs_checked,
        separated: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{ideal_generate, make_ring};

    fn z12_with(gens: &[usize]) -> (FiniteRing, Ideal) {
        let ring = make_ring("Z/12").unwrap();
        let ideal = ideal_generate(&ring, gens).unwrap();
        (ring, ideal)
    }

    #[test]
    fn idempotent_ideal_gives_coset_topology() {
        let (ring, ideal) = z12_with(&[4]);
        let adic = adic_topology(&ring, &ideal).unwrap();
        assert_eq!(adic.stable().elems(), vec![0, 4, 8]);
        assert_eq!(adic.topology().min_open(1).elems(), vec![1, 5, 9]);
        assert!(adic.top_ring().is_topological_ring());
        assert!(!space_predicates(adic.topology()).discrete);
    }

    #[test]
    fn nilpotent_ideal_gives_discrete_topology() {
        let (ring, ideal) = z12_with(&[6]);
        let adic = adic_topology(&ring, &ideal).unwrap();
        assert!(adic.chain().nilpotent);
        assert!(space_predicates(adic.topology()).discrete);
    }

    #[test]
    fn full_ideal_gives_trivial_topology() {
        let (ring, ideal) = z12_with(&[1]);
        let adic = adic_topology(&ring, &ideal).unwrap();
        assert!(space_predicates(adic.topology()).trivial);
    }

    #[test]
    fn structure_report_for_the_idempotent_case() {
        let (ring, ideal) = z12_with(&[4]);
        let r = adic_structure_theorems(&ring, &ideal).unwrap();
        assert!(r.closure_formula && r.point_closures_are_cosets);
        assert!(r.components_match_quotient && r.sober_matches_quotient);
        assert!(r.ideal_connected && r.ideal_idempotent);
        assert!(!r.hausdorff && !r.stable_zero && !r.totally_disconnected);
        assert!(!r.has_singleton_component && !r.connected);
        assert_eq!(
            r.adic.topology().point_closure(1).elems(),
            vec![1, 5, 9]
        );
    }

    #[test]
    fn structure_report_for_the_nilpotent_case() {
        let (ring, ideal) = z12_with(&[6]);
        let r = adic_structure_theorems(&ring, &ideal).unwrap();
        assert!(r.hausdorff && r.stable_zero && r.totally_disconnected);
        assert!(r.has_singleton_component);
        assert!(!r.ideal_connected && !r.ideal_idempotent);
        assert!(!r.connected);
    }

    #[test]
    fn zero_ideal_is_discrete_with_pointwise_closures() {
        let ring = make_ring("Z/6").unwrap();
        let ideal = ideal_generate(&ring, &[]).unwrap();
        let r = adic_structure_theorems(&ring, &ideal).unwrap();
        assert!(r.hausdorff);
        for x in 0..6 {
            assert_eq!(r.adic.topology().point_closure(x).elems(), vec![x]);
        }
    }

    #[test]
    fn reduction_map_is_continuous_by_the_power_criterion() {
        let z4 = make_ring("Z/4").unwrap();
        let z2 = make_ring("Z/2").unwrap();
        let f = RingMorphism::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        let i = ideal_generate(&z4, &[2]).unwrap();
        let j = ideal_generate(&z2, &[]).unwrap();
        let r = adic_morphism_continuity(&f, &i, &j).unwrap();
        assert!(r.continuous);
        assert_eq!(r.witness_power, Some(1)); // already f(I) = {0}
        assert_eq!(r.identity_finer, None);
    }

    #[test]
    fn identity_between_incomparable_filtrations_is_discontinuous() {
        let z6 = make_ring("Z/6").unwrap();
        let f = RingMorphism::identity(&z6);
        let i = ideal_generate(&z6, &[2]).unwrap();
        let j = ideal_generate(&z6, &[3]).unwrap();
        let r = adic_morphism_continuity(&f, &i, &j).unwrap();
        assert!(!r.continuous);
        assert_eq!(r.witness_power, None);
        assert_eq!(r.identity_finer, Some(false));
    }

    #[test]
    fn any_morphism_into_the_full_ideal_is_continuous() {
        let z6 = make_ring("Z/6").unwrap();
        let f = RingMorphism::identity(&z6);
        let i = ideal_generate(&z6, &[2]).unwrap();
        let j = ideal_generate(&z6, &[1]).unwrap();
        let r = adic_morphism_continuity(&f, &i, &j).unwrap();
        assert!(r.continuous);
        assert_eq!(r.witness_power, Some(1));
        assert_eq!(r.identity_finer, Some(true));
    }

    #[test]
    fn distinct_maximal_ideals_have_distinct_topologies() {
        let z30 = make_ring("Z/30").unwrap();
        let r = maximal_adic_separation(&z30).unwrap();
        assert_eq!(r.maximal_count, 3);
        assert_eq!(r.pairs_checked, 6);
        assert!(r.separated);
        let z4 = make_ring("Z/4").unwrap();
        let r = maximal_adic_separation(&z4).unwrap();
        assert_eq!(r.maximal_count, 1);
    }
}
