//! Corpus sweeps: enumerate the topological rings on a carrier, hunt for
//! instances whose unit group fails the subspace check, and run every
//! theorem predicate across a configured family of rings.
//!
//! All results are deterministic. Sweeps follow enumeration order, the
//! sampling draw is seeded, and parallel runs are merged in input order,
//! so the worker count never changes a report. An empty counterexample
//! list is a first-class result and always carries the size of the space
//! it was drawn from; absence of a counterexample is never converted into
//! a claim about instances that were not examined.

use crate::finring::{
    finite_nonfield_criterion, ideals_all, make_ring, zerodivisors, FiniteRing, Ideal, RingError,
    RingMorphism,
};
use crate::fintop::{enumerate_topologies, FinTopology, TopError, MAX_ENUMERATION_GROUND};
use crate::report::{Finding, TheoremId, Verdict};
use crate::set::Subset;
use crate::topalg::{
    absolute_check, adic_morphism_continuity, adic_structure_theorems, boolean_subspace_check,
    check_topological_group, check_topological_ring, closure_substructure, dense_triviality,
    group_closure_formula, hausdorff_discrete_criteria, identity_component, koh_hypotheses,
    maximal_adic_separation, monomial_continuity, polynomial_continuity, power_neighborhood,
    ring_dense_triviality, ring_identity_component, units_topologies, weak_closed_check,
    GroupTable, Monomial, Polynomial, SubstructureKind, TopAlgError, TopGroup, TopRing,
};
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// Largest carrier for the monomial and polynomial continuity sweeps.
const MAP_SWEEP_GROUND: usize = 12;
/// Carriers up to this size sweep monomial constants and polynomial
/// coefficients over the whole ring; beyond it only the identity
/// constant and unit coefficient are used.
const COEFFICIENT_SWEEP_GROUND: usize = 6;
/// Largest carrier for the closure-formula checks, which scan the full
/// open family.
const CLOSURE_SWEEP_GROUND: usize = 8;
/// Carriers up to this size sweep every subset in the closure formula;
/// between this and the closure cap only singletons and the full set.
const FULL_SUBSET_SWEEP_GROUND: usize = 5;
/// Largest carrier for the weak-closed scan over the open family.
const WEAK_CLOSED_GROUND: usize = 12;
/// Largest carrier for the identity-map adic continuity sweep over all
/// ideal pairs.
const MORPHISM_SWEEP_GROUND: usize = 12;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("carrier of {ground} points exceeds the exhaustive cap of {cap} and sampling does not apply")]
    SweepCap { ground: usize, cap: usize },
    #[error("{} fails on {}: {}", .finding.theorem, .finding.ring_spec, .finding.detail)]
    Violation { finding: Box<Finding> },
    #[error(transparent)]
    TopAlg(#[from] TopAlgError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Top(#[from] TopError),
}

impl SearchError {
    /// The finding behind a violation, if this error is one.
    pub fn finding(&self) -> Option<&Finding> {
        match self {
            SearchError::Violation { finding } => Some(finding),
            _ => None,
        }
    }
}

/// Parameters shared by every search entry point.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Ring specs forming the corpus, swept in order.
    pub ring_specs: Vec<String>,
    /// Largest carrier swept exhaustively over all topologies.
    pub max_exhaustive_ground: usize,
    /// Number of topologies sampled on a six-point carrier; zero makes
    /// such a sweep an error instead.
    pub sample_budget: usize,
    /// Seed for the sampling draw.
    pub seed: u64,
    /// Restricts the corpus report to these claims; `None` runs all.
    pub theorems: Option<Vec<TheoremId>>,
    /// Worker threads; zero uses the library default.
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            ring_specs: default_corpus(),
            max_exhaustive_ground: 5,
            sample_budget: 500,
            seed: 1,
            theorems: None,
            workers: 0,
        }
    }
}

impl SearchConfig {
    fn active(&self, id: TheoremId) -> bool {
        self.theorems.as_ref().is_none_or(|mask| mask.contains(&id))
    }

    fn exhaustive_cap(&self) -> usize {
        self.max_exhaustive_ground.min(MAX_ENUMERATION_GROUND)
    }
}

/// Rings every corpus run covers by default: cyclic carriers through
/// twelve elements, small products, and degree-two quotients.
pub fn default_corpus() -> Vec<String> {
    let mut specs: Vec<String> = (2..=12).map(|n| format!("Z/{n}")).collect();
    specs.extend(
        [
            "Z/2 x Z/2",
            "Z/2 x Z/3",
            "Z/2 x Z/4",
            "Z/3 x Z/3",
            "Z/2 x Z/2 x Z/2",
            "Z/2[x]/(1,1,1)",
            "Z/2[x]/(0,0,1)",
            "Z/3[x]/(1,0,1)",
            "Z/3[x]/(0,0,1)",
        ]
        .map(String::from),
    );
    specs
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("worker pool")
            .install(f)
    }
}

/// Wraps a theorem violation into a finding that records the instance it
/// broke on; other errors pass through.
fn attach_instance(
    ring_spec: &str,
    ideal: Option<&Ideal>,
    topology: Option<&FinTopology>,
    err: TopAlgError,
) -> SearchError {
    match err {
        TopAlgError::TheoremViolation { theorem, detail } => SearchError::Violation {
            finding: Box::new(Finding {
                theorem,
                ring_spec: ring_spec.to_string(),
                ideal: ideal.map(Ideal::elems),
                topology: topology.and_then(|t| t.literal().ok()),
                verdict: Verdict::Violation,
                witness: None,
                detail,
            }),
        },
        other => SearchError::TopAlg(other),
    }
}

fn structural_violation(
    ring_spec: &str,
    topology: Option<&FinTopology>,
    detail: String,
) -> SearchError {
    attach_instance(
        ring_spec,
        None,
        topology,
        TopAlgError::TheoremViolation {
            theorem: TheoremId::StructuralFinding,
            detail,
        },
    )
}

/// Outcome of sweeping the topologies on one carrier.
#[derive(Debug)]
pub struct SweepOutcome {
    pub ring_spec: String,
    pub ground: usize,
    /// Topologies existing on the carrier.
    pub total: usize,
    /// Topologies actually checked; below `total` only when sampled.
    pub examined: usize,
    pub sampled: bool,
    /// The instances that are topological rings, in enumeration order.
    pub topological: Vec<TopRing>,
}

/// Checks every topology on the carrier of `ring` (or a seeded sample on
/// a six-point carrier) and keeps the topological rings.
pub fn enumerate_topological_rings(
    ring: &FiniteRing,
    config: &SearchConfig,
) -> Result<SweepOutcome, SearchError> {
    let ground = ring.size();
    let cap = config.exhaustive_cap();
    let sampling = ground <= MAX_ENUMERATION_GROUND && config.sample_budget > 0;
    if ground > cap && !sampling {
        return Err(SearchError::SweepCap { ground, cap });
    }
    let all = enumerate_topologies(ground)?;
    let total = all.len();
    let selected: Vec<FinTopology> = if ground <= cap {
        all
    } else {
        let mut rng = rand::rngs::StdRng::seed_from_u64(config.seed);
        let mut picks =
            rand::seq::index::sample(&mut rng, total, config.sample_budget.min(total)).into_vec();
        picks.sort_unstable();
        picks.into_iter().map(|i| all[i].clone()).collect()
    };
    let examined = selected.len();
    let checked: Vec<TopRing> = with_pool(config.workers, || {
        selected
            .par_iter()
            .map(|t| check_topological_ring(ring, t))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(SweepOutcome {
        ring_spec: ring.spec().to_string(),
        ground,
        total,
        examined,
        sampled: examined < total,
        topological: checked
            .into_iter()
            .filter(|tr| tr.is_topological_ring())
            .collect(),
    })
}

/// Result of hunting one carrier for topological rings whose unit group
/// fails to be a topological group under the subspace topology.
#[derive(Debug)]
pub struct NonAbsoluteHunt {
    pub ring_spec: String,
    pub ground: usize,
    pub total: usize,
    pub examined: usize,
    pub sampled: bool,
    /// Topological rings found in the examined space.
    pub topological_rings: usize,
    /// The instances failing the subspace unit-group check; empty means
    /// the examined space contains none.
    pub non_absolute: Vec<TopRing>,
}

pub fn find_non_absolute(
    ring: &FiniteRing,
    config: &SearchConfig,
) -> Result<NonAbsoluteHunt, SearchError> {
    let sweep = enumerate_topological_rings(ring, config)?;
    let reports = with_pool(config.workers, || {
        sweep
            .topological
            .par_iter()
            .map(absolute_check)
            .collect::<Result<Vec<_>, _>>()
    })
    .map_err(|e| attach_instance(ring.spec(), None, None, e))?;
    let non_absolute = sweep
        .topological
        .iter()
        .zip(&reports)
        .filter(|(_, rep)| !rep.absolute)
        .map(|(tr, _)| tr.clone())
        .collect();
    Ok(NonAbsoluteHunt {
        ring_spec: sweep.ring_spec,
        ground: sweep.ground,
        total: sweep.total,
        examined: sweep.examined,
        sampled: sweep.sampled,
        topological_rings: sweep.topological.len(),
        non_absolute,
    })
}

/// Verdict counts for one claim across a corpus run. A finished report
/// has no violation column: the first violation aborts the run as an
/// error carrying its finding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremTally {
    pub theorem: TheoremId,
    pub holds: usize,
    pub hypothesis_unmet: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingSummary {
    pub spec: String,
    pub size: usize,
    /// Distinct topological-ring instances examined on this carrier.
    pub instances: usize,
    /// Whether the instances came from the full topology sweep; otherwise
    /// they are the coset topologies of the ideals.
    pub swept: bool,
    pub ideals: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub rings: Vec<RingSummary>,
    /// One row per active claim, in declaration order, zero counts kept.
    pub tallies: Vec<TheoremTally>,
}

#[derive(Default)]
struct Tally {
    counts: BTreeMap<TheoremId, (usize, usize)>,
}

impl Tally {
    fn holds(&mut self, id: TheoremId) {
        self.counts.entry(id).or_default().0 += 1;
    }

    fn unmet(&mut self, id: TheoremId) {
        self.counts.entry(id).or_default().1 += 1;
    }

    fn verdict(&mut self, id: TheoremId, v: Verdict) {
        match v {
            Verdict::Holds => self.holds(id),
            Verdict::HypothesisUnmet => self.unmet(id),
            // Invariant: predicates surface violations as errors, never
            // as report verdicts.
            Verdict::Violation => unreachable!("violation verdicts surface as errors"),
        }
    }

    fn merge(&mut self, other: Tally) {
        for (id, (h, u)) in other.counts {
            let entry = self.counts.entry(id).or_default();
            entry.0 += h;
            entry.1 += u;
        }
    }
}

/// Runs every active theorem predicate over every instance of the
/// configured corpus and tallies the verdicts. The first violation, if
/// any, aborts the run with its finding.
pub fn theorem_corpus_report(config: &SearchConfig) -> Result<CorpusReport, SearchError> {
    let results: Vec<Result<(RingSummary, Tally), SearchError>> =
        with_pool(config.workers, || {
            config
                .ring_specs
                .par_iter()
                .map(|spec| ring_corpus(config, spec))
                .collect()
        });
    let mut rings = Vec::new();
    let mut tally = Tally::default();
    for result in results {
        let (summary, t) = result?;
        rings.push(summary);
        tally.merge(t);
    }
    let tallies = TheoremId::ALL
        .iter()
        .filter(|id| config.active(**id))
        .map(|id| {
            let (holds, hypothesis_unmet) = tally.counts.get(id).copied().unwrap_or((0, 0));
            TheoremTally {
                theorem: *id,
                holds,
                hypothesis_unmet,
            }
        })
        .collect();
    Ok(CorpusReport { rings, tallies })
}

fn ring_corpus(config: &SearchConfig, spec: &str) -> Result<(RingSummary, Tally), SearchError> {
    let ring = make_ring(spec)?;
    let ideals = ideals_all(&ring);
    let mut tally = Tally::default();

    if config.active(TheoremId::Theorem7Seven) {
        nonfield_claim(&ring, &mut tally)?;
    }
    if config.active(TheoremId::AdicMorphism) {
        morphism_claims(&ring, &ideals, &mut tally)?;
    }

    let (instances, swept) = corpus_instances(&ring, &ideals, config)?;
    for tr in &instances {
        instance_claims(&ring, tr, &ideals, config, &mut tally)?;
    }
    for ideal in &ideals {
        adic_claims(&ring, ideal, config, &mut tally)?;
    }

    Ok((
        RingSummary {
            spec: spec.to_string(),
            size: ring.size(),
            instances: instances.len(),
            swept,
            ideals: ideals.len(),
        },
        tally,
    ))
}

/// The instances a corpus run examines on one carrier: every topological
/// ring when the carrier is small enough to sweep, the coset topologies
/// of the ideals otherwise. The sweep subsumes the coset instances, and
/// sampling is never used here, so the instance set is deterministic.
fn corpus_instances(
    ring: &FiniteRing,
    ideals: &[Ideal],
    config: &SearchConfig,
) -> Result<(Vec<TopRing>, bool), SearchError> {
    let ground = ring.size();
    if ground <= config.exhaustive_cap() {
        let sweep = enumerate_topological_rings(ring, config)?;
        return Ok((sweep.topological, true));
    }
    let mut out = Vec::with_capacity(ideals.len());
    for ideal in ideals {
        let rows = (0..ground)
            .map(|x| ring.translate(x, ideal.subset()))
            .collect();
        let topology =
            FinTopology::from_min_open(ground, rows).expect("ideal cosets form a preorder");
        let tr = check_topological_ring(ring, &topology)?;
        if !tr.is_topological_ring() {
            return Err(structural_violation(
                ring.spec(),
                Some(&topology),
                format!(
                    "coset topology of ideal {} fails the topological-ring check",
                    ideal.subset()
                ),
            ));
        }
        out.push(tr);
    }
    Ok((out, false))
}

fn nonfield_claim(ring: &FiniteRing, tally: &mut Tally) -> Result<(), SearchError> {
    let report = finite_nonfield_criterion(ring)?;
    let ok = report.is_field != report.zerodivisors_nonzero
        && (report.is_field || report.ring_size <= report.bound);
    if !ok {
        return Err(attach_instance(
            ring.spec(),
            None,
            None,
            TopAlgError::TheoremViolation {
                theorem: TheoremId::Theorem7Seven,
                detail: format!(
                    "field {} with zerodivisors {:?} against bound {}",
                    report.is_field, report.zerodivisors, report.bound
                ),
            },
        ));
    }
    tally.holds(TheoremId::Theorem7Seven);
    Ok(())
}

fn morphism_claims(
    ring: &FiniteRing,
    ideals: &[Ideal],
    tally: &mut Tally,
) -> Result<(), SearchError> {
    let wrap = |e| attach_instance(ring.spec(), None, None, e);
    maximal_adic_separation(ring).map_err(wrap)?;
    tally.holds(TheoremId::AdicMorphism);
    if ring.size() > MORPHISM_SWEEP_GROUND {
        return Ok(());
    }
    let id_map = RingMorphism::identity(ring);
    for source in ideals {
        for target in ideals {
            adic_morphism_continuity(&id_map, source, target)
                .map_err(|e| attach_instance(ring.spec(), Some(source), None, e))?;
            tally.holds(TheoremId::AdicMorphism);
        }
    }
    Ok(())
}

fn adic_claims(
    ring: &FiniteRing,
    ideal: &Ideal,
    config: &SearchConfig,
    tally: &mut Tally,
) -> Result<(), SearchError> {
    const ADIC_IDS: [TheoremId; 8] = [
        TheoremId::Theorem3,
        TheoremId::Lemma3iii,
        TheoremId::Coro2Ex,
        TheoremId::Coro1Excellent,
        TheoremId::TSpace,
        TheoremId::IdempotentConnected,
        TheoremId::HausdorffFourWay,
        TheoremId::ConnectedImproper,
    ];
    if !ADIC_IDS.iter().any(|id| config.active(*id)) {
        return Ok(());
    }
    adic_structure_theorems(ring, ideal)
        .map_err(|e| attach_instance(ring.spec(), Some(ideal), None, e))?;
    for id in ADIC_IDS {
        if config.active(id) {
            tally.holds(id);
        }
    }
    Ok(())
}

fn instance_claims(
    ring: &FiniteRing,
    tr: &TopRing,
    ideals: &[Ideal],
    config: &SearchConfig,
    tally: &mut Tally,
) -> Result<(), SearchError> {
    let spec = ring.spec();
    let t = tr.topology();
    let fail = |e| attach_instance(spec, None, Some(t), e);

    if config.active(TheoremId::StructuralFinding) {
        if tr.report().zero_nbhd_ideal && tr.report().opens_are_cosets {
            tally.holds(TheoremId::StructuralFinding);
        } else {
            return Err(structural_violation(
                spec,
                Some(t),
                format!(
                    "neighborhood filter of zero is {}, opens-are-cosets is {}",
                    tr.report().zero_nbhd_ideal,
                    tr.report().opens_are_cosets
                ),
            ));
        }
    }
    if config.active(TheoremId::TheoremI) {
        units_topologies(tr).map_err(fail)?;
        tally.holds(TheoremId::TheoremI);
    }
    if config.active(TheoremId::Coro3iii) {
        absolute_check(tr).map_err(fail)?;
        tally.holds(TheoremId::Coro3iii);
    }
    if config.active(TheoremId::BooleanSubspace) {
        boolean_subspace_check(tr).map_err(fail)?;
        tally.holds(TheoremId::BooleanSubspace);
    }
    if config.active(TheoremId::Lemma5v) {
        ring_identity_component(tr).map_err(fail)?;
        tally.holds(TheoremId::Lemma5v);
    }
    if config.active(TheoremId::Theorem8Zekiz) || config.active(TheoremId::Coro4Dort) {
        let report = ring_dense_triviality(tr, None).map_err(fail)?;
        if config.active(TheoremId::Theorem8Zekiz) {
            tally.holds(TheoremId::Theorem8Zekiz);
        }
        if config.active(TheoremId::Coro4Dort) {
            if report.is_field {
                tally.holds(TheoremId::Coro4Dort);
            } else {
                tally.unmet(TheoremId::Coro4Dort);
            }
        }
    }
    if config.active(TheoremId::DenseIdeal) {
        for ideal in ideals {
            ring_dense_triviality(tr, Some(ideal))
                .map_err(|e| attach_instance(spec, Some(ideal), Some(t), e))?;
            tally.holds(TheoremId::DenseIdeal);
        }
    }
    if config.active(TheoremId::Lemma2ii) && ring.size() <= MAP_SWEEP_GROUND {
        for poly in polynomial_sweep(ring) {
            let report = polynomial_continuity(tr, &poly).map_err(fail)?;
            tally.verdict(TheoremId::Lemma2ii, report.verdict);
        }
    }
    if config.active(TheoremId::Theorem4iv) {
        for x in zerodivisors(ring) {
            if x == ring.zero() {
                continue;
            }
            let report = koh_hypotheses(tr, x).map_err(fail)?;
            tally.verdict(TheoremId::Theorem4iv, report.verdict);
        }
    }
    substructure_claims(ring, tr, ideals, config, tally)?;

    let additive = check_topological_group(&GroupTable::additive(ring), t).map_err(fail)?;
    if !additive.is_topological_group() {
        return Err(structural_violation(
            spec,
            Some(t),
            "additive group of a topological ring fails the topological-group check".to_string(),
        ));
    }
    group_claims(spec, &additive, config, tally)?;
    let units = units_topologies(tr).map_err(fail)?;
    let unit_group = check_topological_group(&units.group, &units.tf)
        .map_err(|e| attach_instance(spec, None, Some(&units.tf), e))?;
    if !unit_group.is_topological_group() {
        return Err(attach_instance(
            spec,
            None,
            Some(&units.tf),
            TopAlgError::TheoremViolation {
                theorem: TheoremId::TheoremI,
                detail: "induced unit topology fails the topological-group check".to_string(),
            },
        ));
    }
    group_claims(spec, &unit_group, config, tally)?;
    Ok(())
}

fn substructure_claims(
    ring: &FiniteRing,
    tr: &TopRing,
    ideals: &[Ideal],
    config: &SearchConfig,
    tally: &mut Tally,
) -> Result<(), SearchError> {
    let check_subgroups = config.active(TheoremId::Thm6Six);
    let check_rest = config.active(TheoremId::ClosureSubstructure);
    if !check_subgroups && !check_rest {
        return Ok(());
    }
    let spec = ring.spec();
    let t = tr.topology();
    let fail = |e| attach_instance(spec, None, Some(t), e);
    if check_subgroups {
        for h in GroupTable::additive(ring).subgroups() {
            for kind in [SubstructureKind::Subgroup, SubstructureKind::NormalSubgroup] {
                closure_substructure(tr, &h, kind).map_err(fail)?;
                tally.holds(TheoremId::Thm6Six);
            }
        }
    }
    if check_rest {
        for ideal in ideals {
            closure_substructure(tr, ideal.subset(), SubstructureKind::Ideal)
                .map_err(|e| attach_instance(spec, Some(ideal), Some(t), e))?;
            tally.holds(TheoremId::ClosureSubstructure);
        }
        for x in ring.elements() {
            let powers = multiplicative_closure(ring, x);
            closure_substructure(tr, &powers, SubstructureKind::MultiplicativeSet)
                .map_err(fail)?;
            tally.holds(TheoremId::ClosureSubstructure);
            let sub = subring_closure(ring, x);
            closure_substructure(tr, &sub, SubstructureKind::Subring).map_err(fail)?;
            tally.holds(TheoremId::ClosureSubstructure);
        }
    }
    Ok(())
}

fn group_claims(
    spec: &str,
    tg: &TopGroup,
    config: &SearchConfig,
    tally: &mut Tally,
) -> Result<(), SearchError> {
    let g = tg.group();
    let t = tg.topology();
    let n = g.size();
    let fail = |e| attach_instance(spec, None, Some(t), e);

    if config.active(TheoremId::Lemma2i) && n <= MAP_SWEEP_GROUND {
        let constants: Vec<usize> = if n <= COEFFICIENT_SWEEP_GROUND {
            (0..n).collect()
        } else {
            vec![g.identity()]
        };
        for exponents in exponent_vectors() {
            for &constant in &constants {
                let monomial = Monomial {
                    constant,
                    exponents: exponents.clone(),
                };
                let report = monomial_continuity(tg, &monomial).map_err(fail)?;
                tally.verdict(TheoremId::Lemma2i, report.verdict);
            }
        }
    }
    if config.active(TheoremId::PowerNeighborhood) {
        let mut neighborhoods: Vec<Subset> = vec![Subset::full(n)];
        let e_min = t.min_open(g.identity()).clone();
        if !e_min.is_full() {
            neighborhoods.push(e_min);
        }
        for u in &neighborhoods {
            for exponent in 1..=3 {
                power_neighborhood(tg, u, exponent).map_err(fail)?;
                tally.holds(TheoremId::PowerNeighborhood);
            }
        }
    }
    if config.active(TheoremId::Lemma4iv) {
        identity_component(tg).map_err(fail)?;
        tally.holds(TheoremId::Lemma4iv);
    }
    if config.active(TheoremId::Thm6Six) {
        hausdorff_discrete_criteria(tg).map_err(fail)?;
        tally.holds(TheoremId::Thm6Six);
    }
    if config.active(TheoremId::Theorem8Zekiz) || config.active(TheoremId::Coro5Besh) {
        let report = dense_triviality(tg, None).map_err(fail)?;
        if config.active(TheoremId::Theorem8Zekiz) {
            tally.holds(TheoremId::Theorem8Zekiz);
        }
        if config.active(TheoremId::Coro5Besh) {
            if report.simple {
                tally.holds(TheoremId::Coro5Besh);
            } else {
                tally.unmet(TheoremId::Coro5Besh);
            }
        }
    }
    if config.active(TheoremId::Theorem10On) {
        for h in g.subgroups() {
            dense_triviality(tg, Some(&h)).map_err(fail)?;
            tally.holds(TheoremId::Theorem10On);
        }
    }
    if config.active(TheoremId::Theorem5Five) && n <= CLOSURE_SWEEP_GROUND {
        for s in closure_test_sets(n) {
            group_closure_formula(tg, &s).map_err(fail)?;
            tally.holds(TheoremId::Theorem5Five);
        }
    }
    if config.active(TheoremId::WeakClosed) && n <= WEAK_CLOSED_GROUND {
        for h in g.subgroups() {
            let report = weak_closed_check(tg, &h).map_err(fail)?;
            tally.verdict(TheoremId::WeakClosed, report.verdict);
        }
    }
    Ok(())
}

fn exponent_vectors() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for d in -3..=3i64 {
        out.push(vec![d]);
    }
    for d1 in -3..=3i64 {
        for d2 in -3..=3i64 {
            out.push(vec![d1, d2]);
        }
    }
    out
}

/// Single terms c x^i y^j of total degree at most three with coefficients
/// swept over small rings, plus a fixed basket of mixed shapes.
fn polynomial_sweep(ring: &FiniteRing) -> Vec<Polynomial> {
    let coefficients: Vec<usize> = if ring.size() <= COEFFICIENT_SWEEP_GROUND {
        ring.elements().collect()
    } else {
        vec![ring.one()]
    };
    let one = ring.one();
    let mut out = Vec::new();
    for i in 0..=3u32 {
        for &c in &coefficients {
            out.push(Polynomial {
                arity: 1,
                terms: vec![(vec![i], c)],
            });
        }
    }
    for i in 0..=3u32 {
        for j in 0..=3u32 {
            if i + j > 3 {
                continue;
            }
            for &c in &coefficients {
                out.push(Polynomial {
                    arity: 2,
                    terms: vec![(vec![i, j], c)],
                });
            }
        }
    }
    let shapes: [Vec<(Vec<u32>, usize)>; 4] = [
        vec![(vec![1, 0], one), (vec![0, 1], one)],
        vec![(vec![1, 0], one), (vec![0, 1], one), (vec![1, 1], one)],
        vec![(vec![2], one), (vec![0], one)],
        vec![(vec![3], one), (vec![1], one), (vec![0], one)],
    ];
    for terms in shapes {
        let arity = terms[0].0.len();
        out.push(Polynomial { arity, terms });
    }
    out
}

fn closure_test_sets(n: usize) -> Vec<Subset> {
    if n <= FULL_SUBSET_SWEEP_GROUND {
        (0..(1u64 << n)).map(|w| Subset::from_word(n, w)).collect()
    } else {
        let mut out: Vec<Subset> = (0..n).map(|x| Subset::singleton(n, x)).collect();
        out.push(Subset::full(n));
        out
    }
}

fn multiplicative_closure(ring: &FiniteRing, x: usize) -> Subset {
    let mut s = Subset::singleton(ring.size(), x);
    loop {
        let mut grew = false;
        let members = s.elems();
        for &a in &members {
            for &b in &members {
                let p = ring.mul(a, b);
                if !s.contains(p) {
                    s.insert(p);
                    grew = true;
                }
            }
        }
        if !grew {
            return s;
        }
    }
}

fn subring_closure(ring: &FiniteRing, x: usize) -> Subset {
    let mut s = Subset::from_elems(ring.size(), &[ring.zero(), x]);
    loop {
        let mut grew = false;
        let members = s.elems();
        for &a in &members {
            for &b in &members {
                for v in [ring.add(a, b), ring.mul(a, b)] {
                    if !s.contains(v) {
                        s.insert(v);
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(spec: &str) -> FiniteRing {
        make_ring(spec).expect("corpus ring")
    }

    #[test]
    fn two_point_sweep_finds_discrete_and_trivial() {
        let r = ring("Z/2");
        let sweep = enumerate_topological_rings(&r, &SearchConfig::default()).unwrap();
        assert_eq!(sweep.total, 4);
        assert_eq!(sweep.examined, 4);
        assert!(!sweep.sampled);
        assert_eq!(sweep.topological.len(), 2);
        let mut zero_neighborhoods: Vec<Vec<usize>> = sweep
            .topological
            .iter()
            .map(|tr| tr.topology().min_open(0).elems())
            .collect();
        zero_neighborhoods.sort();
        assert_eq!(zero_neighborhoods, vec![vec![0], vec![0, 1]]);
    }

    #[test]
    fn qualifying_counts_equal_ideal_counts() {
        // Invariant: the neighborhood filter of zero is an ideal and
        // determines the topology, so the sweep count is the ideal count.
        for spec in ["Z/2", "Z/3", "Z/4", "Z/5", "Z/2 x Z/2"] {
            let r = ring(spec);
            let sweep = enumerate_topological_rings(&r, &SearchConfig::default()).unwrap();
            assert_eq!(
                sweep.topological.len(),
                ideals_all(&r).len(),
                "sweep count off on {spec}"
            );
        }
    }

    #[test]
    fn sweep_totals_match_enumeration() {
        let totals = [("Z/3", 29), ("Z/4", 355), ("Z/5", 6942)];
        for (spec, expected) in totals {
            let sweep = enumerate_topological_rings(&ring(spec), &SearchConfig::default()).unwrap();
            assert_eq!(sweep.total, expected, "total off on {spec}");
            assert!(!sweep.sampled);
        }
    }

    #[test]
    fn oversized_carrier_is_rejected() {
        let config = SearchConfig {
            sample_budget: 0,
            ..SearchConfig::default()
        };
        let err = enumerate_topological_rings(&ring("Z/6"), &config).unwrap_err();
        assert!(matches!(
            err,
            SearchError::SweepCap { ground: 6, cap: 5 }
        ));
        let err = enumerate_topological_rings(&ring("Z/7"), &SearchConfig::default()).unwrap_err();
        assert!(matches!(err, SearchError::SweepCap { ground: 7, .. }));
    }

    #[test]
    fn six_point_sampling_is_seeded() {
        let config = SearchConfig {
            sample_budget: 40,
            ..SearchConfig::default()
        };
        let first = enumerate_topological_rings(&ring("Z/6"), &config).unwrap();
        assert_eq!(first.total, 209527);
        assert_eq!(first.examined, 40);
        assert!(first.sampled);
        let again = enumerate_topological_rings(&ring("Z/6"), &config).unwrap();
        assert_eq!(
            first.topological.len(),
            again.topological.len(),
            "same seed must pick the same topologies"
        );
    }

    #[test]
    fn non_absolute_hunt_comes_back_empty_with_space_size() {
        let hunt = find_non_absolute(&ring("Z/4"), &SearchConfig::default()).unwrap();
        assert_eq!(hunt.total, 355);
        assert_eq!(hunt.examined, 355);
        assert_eq!(hunt.topological_rings, 3);
        assert!(hunt.non_absolute.is_empty());
    }

    #[test]
    fn five_point_hunt_sweeps_everything() {
        let hunt = find_non_absolute(&ring("Z/5"), &SearchConfig::default()).unwrap();
        assert_eq!(hunt.examined, 6942);
        assert_eq!(hunt.topological_rings, 2);
        assert!(hunt.non_absolute.is_empty());
    }

    #[test]
    fn corpus_report_on_one_ring_has_expected_tallies() {
        let config = SearchConfig {
            ring_specs: vec!["Z/4".to_string()],
            ..SearchConfig::default()
        };
        let report = theorem_corpus_report(&config).unwrap();
        assert_eq!(report.rings.len(), 1);
        let summary = &report.rings[0];
        assert_eq!(summary.instances, 3);
        assert!(summary.swept);
        assert_eq!(summary.ideals, 3);
        let get = |id: TheoremId| {
            report
                .tallies
                .iter()
                .find(|t| t.theorem == id)
                .expect("tally present")
                .clone()
        };
        assert_eq!(get(TheoremId::Theorem3).holds, 3);
        assert_eq!(get(TheoremId::TheoremI).holds, 3);
        assert_eq!(get(TheoremId::Theorem7Seven).holds, 1);
        // Identity morphisms over the nine ideal pairs plus the maximal
        // separation sweep.
        assert_eq!(get(TheoremId::AdicMorphism).holds, 10);
        // The only nonzero zerodivisor is 2; the discrete instance meets
        // the closed-map hypothesis, the other two do not.
        let koh = get(TheoremId::Theorem4iv);
        assert_eq!((koh.holds, koh.hypothesis_unmet), (1, 2));
        assert_eq!(get(TheoremId::StructuralFinding).holds, 3);
        assert!(get(TheoremId::Lemma2i).holds > 0);
        assert!(get(TheoremId::Lemma2ii).holds > 0);
        assert!(get(TheoremId::Theorem5Five).holds > 0);
    }

    #[test]
    fn theorem_mask_restricts_the_tallies() {
        let config = SearchConfig {
            ring_specs: vec!["Z/6".to_string()],
            theorems: Some(vec![TheoremId::Theorem3]),
            ..SearchConfig::default()
        };
        let report = theorem_corpus_report(&config).unwrap();
        assert_eq!(report.tallies.len(), 1);
        assert_eq!(report.tallies[0].theorem, TheoremId::Theorem3);
        assert_eq!(report.tallies[0].holds, 4);
        assert_eq!(report.rings[0].instances, 4);
        assert!(!report.rings[0].swept);
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let base = SearchConfig {
            ring_specs: vec!["Z/4".to_string(), "Z/6".to_string()],
            ..SearchConfig::default()
        };
        let serial = theorem_corpus_report(&SearchConfig {
            workers: 1,
            ..base.clone()
        })
        .unwrap();
        let parallel = theorem_corpus_report(&SearchConfig {
            workers: 3,
            ..base
        })
        .unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn multiplicative_and_subring_closures_are_closed() {
        let r = ring("Z/12");
        let powers = multiplicative_closure(&r, 2);
        assert_eq!(powers.elems(), vec![2, 4, 8]);
        let sub = subring_closure(&r, 2);
        assert_eq!(sub.elems(), vec![0, 2, 4, 6, 8, 10]);
    }
}
