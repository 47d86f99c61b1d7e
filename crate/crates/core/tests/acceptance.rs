//! Acceptance gate for the laboratory: eleven numbered criteria, each a
//! sweep with exact expectations and the wall-clock bounds pinned as
//! constants. Every test prints one `[criterion N] PASS/FAIL` line (run
//! with `--nocapture` to see them) and fails hard on any miss. The
//! criteria serialize through a gate mutex so each bound is measured
//! without interference from the others.

mod common;

use std::collections::BTreeSet;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use topring_core::finring::{
    finite_nonfield_criterion, ideals_all, make_ring, quotient_ring, zerodivisors, FiniteRing,
    RingMorphism,
};
use topring_core::fintop::{
    enumerate_topologies, is_homeomorphic, make_topology, pi0, sober_space, FinTopology, TopError,
};
use topring_core::report::TheoremId;
use topring_core::search::{default_corpus, theorem_corpus_report, SearchConfig};
use topring_core::set::Subset;
use topring_core::topalg::{
    absolute_check, adic_structure_theorems, adic_topology, adic_morphism_continuity,
    check_topological_group, check_topological_ring, dense_triviality, group_closure_formula,
    hausdorff_discrete_criteria, koh_hypotheses, maximal_adic_separation, ring_dense_triviality,
    units_topologies, GroupTable, TopGroup,
};

const NONFIELD_BOUND: Duration = Duration::from_secs(10);
const ADIC_SWEEP_BOUND: Duration = Duration::from_secs(60);
const EXHAUSTIVE_BOUND: Duration = Duration::from_secs(300);
const CONTROL_BOUND: Duration = Duration::from_secs(1);

static GATE: Mutex<()> = Mutex::new(());

fn criterion(n: usize, body: impl FnOnce() -> Result<String, String>) {
    let _gate = GATE.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
    match body() {
        Ok(message) => println!("[criterion {n}] PASS {message}"),
        Err(message) => {
            println!("[criterion {n}] FAIL {message}");
            panic!("criterion {n} failed: {message}");
        }
    }
}

fn ring(spec: &str) -> FiniteRing {
    make_ring(spec).expect(spec)
}

fn cyclic_specs(max: usize) -> Vec<String> {
    (2..=max).map(|n| format!("Z/{n}")).collect()
}

/// All products of two or three cyclic factors, each at least Z/2, with
/// at most `max` elements, one spec per factor multiset.
fn product_specs(max: usize) -> Vec<String> {
    let mut specs = Vec::new();
    for a in 2..=max / 2 {
        for b in a..=max / a {
            specs.push(format!("Z/{a} x Z/{b}"));
            for c in b..=max / (a * b) {
                specs.push(format!("Z/{a} x Z/{b} x Z/{c}"));
            }
        }
    }
    specs
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Groups of order at most five, up to isomorphism: the cyclic groups
/// and the Klein four-group, all realized as additive ring groups.
fn small_groups() -> Vec<GroupTable> {
    let mut groups: Vec<GroupTable> = (2..=5)
        .map(|n| GroupTable::additive(&ring(&format!("Z/{n}"))))
        .collect();
    groups.push(GroupTable::additive(&ring("Z/2 x Z/2")));
    groups
}

/// Every (group, topology) pair on the small groups that passes the
/// topological-group check.
fn small_topological_groups() -> Vec<TopGroup> {
    let mut instances = Vec::new();
    for g in small_groups() {
        for top in enumerate_topologies(g.size()).unwrap() {
            let tg = check_topological_group(&g, &top).unwrap();
            if tg.is_topological_group() {
                instances.push(tg);
            }
        }
    }
    instances
}

#[test]
fn criterion_01_zerodivisor_bound_across_all_small_cyclic_and_product_rings() {
    criterion(1, || {
        let start = Instant::now();
        let mut specs = cyclic_specs(100);
        specs.extend(product_specs(100));
        let mut rings = 0usize;
        let mut bounded = 0usize;
        for spec in &specs {
            let r = ring(spec);
            let report = finite_nonfield_criterion(&r).map_err(|e| e.to_string())?;
            if report.is_field == report.zerodivisors_nonzero {
                return Err(format!(
                    "{spec}: field = {} yet nonzero zerodivisors = {}",
                    report.is_field, report.zerodivisors_nonzero
                ));
            }
            let expected_field = match spec.contains(" x ") {
                true => false,
                false => is_prime(r.size()),
            };
            if report.is_field != expected_field {
                return Err(format!("{spec}: field verdict {}", report.is_field));
            }
            if report.zerodivisors_nonzero {
                let square = report.zerodivisors.len() * report.zerodivisors.len();
                if report.bound != square || r.size() > report.bound {
                    return Err(format!(
                        "{spec}: size {} against zerodivisor bound {}",
                        r.size(),
                        report.bound
                    ));
                }
                bounded += 1;
            }
            rings += 1;
        }
        let z4 = finite_nonfield_criterion(&ring("Z/4")).map_err(|e| e.to_string())?;
        if !z4.bound_tight {
            return Err("the bound must be tight on Z/4".into());
        }
        let elapsed = start.elapsed();
        if elapsed > NONFIELD_BOUND {
            return Err(format!("took {elapsed:?}, bound {NONFIELD_BOUND:?}"));
        }
        Ok(format!(
            "{rings} rings to size 100, {bounded} bounded by squared zerodivisor counts, tight on Z/4, {elapsed:?}"
        ))
    });
}

#[test]
fn criterion_02_every_adic_instance_is_an_absolute_topological_ring() {
    criterion(2, || {
        let start = Instant::now();
        let mut specs = cyclic_specs(24);
        specs.extend(product_specs(16));
        let mut instances = 0usize;
        for spec in &specs {
            let r = ring(spec);
            for ideal in ideals_all(&r) {
                let adic = adic_topology(&r, &ideal).map_err(|e| e.to_string())?;
                if !adic.top_ring().is_topological_ring() {
                    return Err(format!("{spec} ideal {:?} not topological", ideal.elems()));
                }
                let abs = absolute_check(adic.top_ring()).map_err(|e| e.to_string())?;
                if !abs.absolute {
                    return Err(format!("{spec} ideal {:?} not absolute", ideal.elems()));
                }
                instances += 1;
            }
        }
        let elapsed = start.elapsed();
        if elapsed > ADIC_SWEEP_BOUND {
            return Err(format!("took {elapsed:?}, bound {ADIC_SWEEP_BOUND:?}"));
        }
        Ok(format!(
            "{instances} adic instances over {} rings, all topological and absolute, {elapsed:?}",
            specs.len()
        ))
    });
}

#[test]
fn criterion_03_exhaustive_unit_group_equivalence_on_small_rings() {
    criterion(3, || {
        let start = Instant::now();
        let specs = [
            "Z/2",
            "Z/3",
            "Z/4",
            "Z/2 x Z/2",
            "Z/2[x]/(1,1,1)",
            "Z/2[x]/(0,0,1)",
            "Z/5",
        ];
        let mut pairs = 0usize;
        let mut qualifying = 0usize;
        for spec in specs {
            let r = ring(spec);
            let mut found = 0usize;
            for top in enumerate_topologies(r.size()).unwrap() {
                pairs += 1;
                let tr = check_topological_ring(&r, &top).map_err(|e| e.to_string())?;
                if !tr.is_topological_ring() {
                    continue;
                }
                found += 1;
                let units = units_topologies(&tr).map_err(|e| e.to_string())?;
                let subspace_group = check_topological_group(&units.group, &units.subspace)
                    .map_err(|e| e.to_string())?
                    .is_topological_group();
                if subspace_group != units.tf_equals_subspace {
                    return Err(format!(
                        "{spec}: unit subspace group = {subspace_group} but graph topology equality = {}",
                        units.tf_equals_subspace
                    ));
                }
                let abs = absolute_check(&tr).map_err(|e| e.to_string())?;
                if abs.absolute != units.tf_equals_subspace {
                    return Err(format!("{spec}: absolute verdict disagrees"));
                }
            }
            // A finite topological ring is exactly an ideal-coset
            // topology, so the qualifying count is the ideal count.
            let ideals = ideals_all(&r).len();
            if found != ideals {
                return Err(format!(
                    "{spec}: {found} topological rings against {ideals} ideals"
                ));
            }
            qualifying += found;
        }
        if pairs != 4 + 29 + 4 * 355 + 6942 {
            return Err(format!("swept {pairs} pairs, expected the full census"));
        }
        let elapsed = start.elapsed();
        if elapsed > EXHAUSTIVE_BOUND {
            return Err(format!("took {elapsed:?}, bound {EXHAUSTIVE_BOUND:?}"));
        }
        Ok(format!(
            "{pairs} exhaustive pairs, {qualifying} topological rings, unit equivalence everywhere, {elapsed:?}"
        ))
    });
}

#[test]
fn criterion_04_components_and_sober_points_are_the_stable_quotient() {
    criterion(4, || {
        let mut specs = cyclic_specs(24);
        specs.extend(product_specs(16));
        let mut instances = 0usize;
        for spec in &specs {
            let r = ring(spec);
            for ideal in ideals_all(&r) {
                let report = adic_structure_theorems(&r, &ideal).map_err(|e| e.to_string())?;
                if !report.components_match_quotient || !report.sober_matches_quotient {
                    return Err(format!("{spec} ideal {:?} quotient mismatch", ideal.elems()));
                }
                let top = report.adic.topology();
                let stable = report.adic.stable();
                let (quotient, _) = quotient_ring(&r, stable).map_err(|e| e.to_string())?;
                let (partition, quotient_top) = pi0(top);
                if partition.blocks().len() != quotient.size() {
                    return Err(format!(
                        "{spec} ideal {:?}: {} components against quotient size {}",
                        ideal.elems(),
                        partition.blocks().len(),
                        quotient.size()
                    ));
                }
                let sober = sober_space(top);
                let block_words: BTreeSet<u64> =
                    partition.blocks().iter().map(|b| b.word()).collect();
                let point_words: BTreeSet<u64> = sober.points.iter().map(|p| p.word()).collect();
                if block_words != point_words {
                    return Err(format!(
                        "{spec} ideal {:?}: sober points differ from components",
                        ideal.elems()
                    ));
                }
                let witness = is_homeomorphic(&sober.topology, &quotient_top);
                if witness.is_none() {
                    return Err(format!(
                        "{spec} ideal {:?}: no homeomorphism between sober space and component space",
                        ideal.elems()
                    ));
                }
                if is_homeomorphic(&quotient_top, &FinTopology::discrete(quotient.size()))
                    .is_none()
                {
                    return Err(format!(
                        "{spec} ideal {:?}: component space is not discrete",
                        ideal.elems()
                    ));
                }
                instances += 1;
            }
        }
        Ok(format!(
            "{instances} instances with components, sober points, and the stable quotient identified"
        ))
    });
}

#[test]
fn criterion_05_closure_formulas_on_adic_and_group_instances() {
    criterion(5, || {
        let mut specs = cyclic_specs(12);
        specs.extend(product_specs(12));
        let mut subsets = 0usize;
        for spec in &specs {
            let r = ring(spec);
            let n = r.size();
            for ideal in ideals_all(&r) {
                let adic = adic_topology(&r, &ideal).map_err(|e| e.to_string())?;
                let top = adic.topology();
                let powers: Vec<Subset> = adic
                    .chain()
                    .chain
                    .iter()
                    .map(|p| p.subset().clone())
                    .collect();
                for word in 0u64..(1 << n) {
                    let s = Subset::from_word(n, word);
                    let mut formula = r.add_sets(&s, &powers[0]);
                    for power in &powers[1..] {
                        formula.intersect_with(&r.add_sets(&s, power));
                    }
                    if top.closure_set(&s) != formula {
                        return Err(format!(
                            "{spec} ideal {:?}: closure of {s} differs from the power-coset formula",
                            ideal.elems()
                        ));
                    }
                    subsets += 1;
                }
                let stable = adic.stable().subset();
                for x in r.elements() {
                    if top.point_closure(x) != &r.translate(x, stable) {
                        return Err(format!("{spec}: closure of {x} is not its stable coset"));
                    }
                }
            }
        }
        let mut group_subsets = 0usize;
        let instances = small_topological_groups();
        for tg in &instances {
            let n = tg.group().size();
            for word in 0u64..(1 << n) {
                let s = Subset::from_word(n, word);
                let report = group_closure_formula(tg, &s).map_err(|e| e.to_string())?;
                if report.closure != report.neighborhood_intersection {
                    return Err(format!(
                        "group {}: closure of {s} differs from the neighborhood product",
                        tg.group().label()
                    ));
                }
                group_subsets += 1;
            }
        }
        Ok(format!(
            "{subsets} adic subsets against the power-coset formula, {group_subsets} group subsets across {} instances against the neighborhood product",
            instances.len()
        ))
    });
}

#[test]
fn criterion_06_monomial_and_polynomial_continuity_sweeps() {
    criterion(6, || {
        let config = SearchConfig {
            ring_specs: default_corpus(),
            theorems: Some(vec![TheoremId::Lemma2i, TheoremId::Lemma2ii]),
            ..SearchConfig::default()
        };
        let report = theorem_corpus_report(&config).map_err(|e| e.to_string())?;
        if report.tallies.len() != 2 {
            return Err(format!("{} tallies for a two-theorem mask", report.tallies.len()));
        }
        let mut counts = Vec::new();
        for tally in &report.tallies {
            if tally.holds == 0 {
                return Err(format!("{} never held", tally.theorem));
            }
            counts.push(format!("{} held {} times", tally.theorem, tally.holds));
        }
        Ok(format!(
            "monomial and polynomial sweeps over {} corpus rings: {}",
            report.rings.len(),
            counts.join(", ")
        ))
    });
}

#[test]
fn criterion_07_density_triviality_equivalences() {
    criterion(7, || {
        let config = SearchConfig {
            ring_specs: default_corpus(),
            theorems: Some(vec![
                TheoremId::Theorem8Zekiz,
                TheoremId::Theorem10On,
                TheoremId::DenseIdeal,
                TheoremId::Coro5Besh,
                TheoremId::Coro4Dort,
            ]),
            ..SearchConfig::default()
        };
        let report = theorem_corpus_report(&config).map_err(|e| e.to_string())?;
        if report.tallies.len() != 5 || report.tallies.iter().any(|t| t.holds == 0) {
            return Err("a density theorem never held on the corpus".into());
        }

        // Both directions, directly, on every small topological group.
        let mut group_checks = 0usize;
        for tg in small_topological_groups() {
            let base = dense_triviality(&tg, None).map_err(|e| e.to_string())?;
            if base.identity_dense != base.trivial {
                return Err(format!(
                    "group {}: identity dense = {} against trivial = {}",
                    tg.group().label(),
                    base.identity_dense,
                    base.trivial
                ));
            }
            for h in tg.group().subgroups() {
                let sub = dense_triviality(&tg, Some(&h)).map_err(|e| e.to_string())?;
                let detail = sub.subgroup.expect("subgroup report present");
                if detail.normal && detail.dense != detail.quotient_trivial {
                    return Err(format!(
                        "group {}: dense subgroup against nontrivial quotient",
                        tg.group().label()
                    ));
                }
                group_checks += 1;
            }
        }

        // Ring side on every small adic instance, both directions.
        let mut ring_checks = 0usize;
        let mut specs = cyclic_specs(12);
        specs.extend(product_specs(12));
        for spec in &specs {
            let r = ring(spec);
            for ideal in ideals_all(&r) {
                let adic = adic_topology(&r, &ideal).map_err(|e| e.to_string())?;
                let base = ring_dense_triviality(adic.top_ring(), None).map_err(|e| e.to_string())?;
                if base.zero_dense != base.trivial {
                    return Err(format!("{spec}: zero dense against nontrivial topology"));
                }
                if base.is_field && !base.trivial && base.zero_closure.len() != 1 {
                    return Err(format!("{spec}: field with a strange zero closure"));
                }
                for dense_ideal in ideals_all(&r) {
                    let with = ring_dense_triviality(adic.top_ring(), Some(&dense_ideal))
                        .map_err(|e| e.to_string())?;
                    let detail = with.ideal.expect("ideal report present");
                    if detail.dense != detail.quotient_trivial {
                        return Err(format!(
                            "{spec}: ideal density against quotient triviality"
                        ));
                    }
                    ring_checks += 1;
                }
            }
        }
        Ok(format!(
            "corpus tallies all positive, {group_checks} subgroup density checks, {ring_checks} ideal density checks, both directions everywhere"
        ))
    });
}

#[test]
fn criterion_08_substructure_closures_and_separation_criteria() {
    criterion(8, || {
        let config = SearchConfig {
            ring_specs: default_corpus(),
            theorems: Some(vec![TheoremId::ClosureSubstructure, TheoremId::Thm6Six]),
            ..SearchConfig::default()
        };
        let report = theorem_corpus_report(&config).map_err(|e| e.to_string())?;
        if report.tallies.len() != 2 || report.tallies.iter().any(|t| t.holds == 0) {
            return Err("a substructure suite never held on the corpus".into());
        }
        let mut checks = 0usize;
        for tg in small_topological_groups() {
            let sep = hausdorff_discrete_criteria(&tg).map_err(|e| e.to_string())?;
            if sep.hausdorff != sep.identity_closed {
                return Err(format!(
                    "group {}: hausdorff against a non-closed identity",
                    tg.group().label()
                ));
            }
            if sep.discrete != !sep.isolated_points.is_empty() {
                return Err(format!(
                    "group {}: discreteness against isolated points",
                    tg.group().label()
                ));
            }
            checks += 1;
        }
        Ok(format!(
            "substructure closures over the corpus, separation criteria on {checks} small topological groups"
        ))
    });
}

#[test]
fn criterion_09_morphism_continuity_matches_the_power_criterion() {
    criterion(9, || {
        let mut pairs = 0usize;
        for n in 2..=12usize {
            let domain = ring(&format!("Z/{n}"));
            for m in 2..=n {
                if n % m != 0 {
                    continue;
                }
                let codomain = ring(&format!("Z/{m}"));
                let table: Vec<usize> = domain.elements().map(|x| x % m).collect();
                let f = RingMorphism::new(&domain, &codomain, table).map_err(|e| e.to_string())?;
                for i in ideals_all(&domain) {
                    for j in ideals_all(&codomain) {
                        let report =
                            adic_morphism_continuity(&f, &i, &j).map_err(|e| e.to_string())?;
                        if report.continuous != report.witness_power.is_some() {
                            return Err(format!(
                                "Z/{n} to Z/{m}: brute continuity against the power criterion"
                            ));
                        }
                        pairs += 1;
                    }
                }
            }
        }
        let mut maximal_rings = 0usize;
        for n in 2..=30usize {
            let r = ring(&format!("Z/{n}"));
            let report = maximal_adic_separation(&r).map_err(|e| e.to_string())?;
            if !report.separated {
                return Err(format!("Z/{n}: maximal ideals with equal adic topologies"));
            }
            maximal_rings += 1;
        }
        Ok(format!(
            "{pairs} morphism ideal pairs against the power criterion, maximal separation on {maximal_rings} rings"
        ))
    });
}

#[test]
fn criterion_10_negative_controls_and_enumeration_oracle() {
    criterion(10, || {
        let start = Instant::now();
        let r = ring("Z/2");
        let tr = check_topological_ring(&r, &FinTopology::sierpinski())
            .map_err(|e| e.to_string())?;
        if tr.is_topological_ring() {
            return Err("the one-sided two-point topology passed".into());
        }
        let witness = tr
            .report()
            .add_witness
            .as_ref()
            .ok_or("missing addition witness")?;
        if witness.codomain_open.elems() != vec![0] || witness.preimage.elems() != vec![0, 3] {
            return Err(format!(
                "witness open {} with preimage {}",
                witness.codomain_open, witness.preimage
            ));
        }

        if !matches!(
            make_topology(2, &[vec![0], vec![0, 1]]),
            Err(TopError::MissingEmpty)
        ) {
            return Err("a family without the empty set passed".into());
        }
        if !matches!(
            make_topology(2, &[vec![], vec![0]]),
            Err(TopError::MissingFull)
        ) {
            return Err("a family without the full set passed".into());
        }
        if !matches!(
            make_topology(3, &[vec![], vec![0], vec![1], vec![0, 1, 2]]),
            Err(TopError::UnionEscapes { .. })
        ) {
            return Err("a union-escaping family passed".into());
        }
        if !matches!(
            make_topology(3, &[vec![], vec![0, 1], vec![1, 2], vec![0, 1, 2]]),
            Err(TopError::IntersectionEscapes { .. })
        ) {
            return Err("an intersection-escaping family passed".into());
        }
        if !matches!(
            make_topology(2, &[vec![], vec![5], vec![0, 1]]),
            Err(TopError::ElementOutOfRange { .. })
        ) {
            return Err("an out-of-range element passed".into());
        }

        for (n, expected) in [(1usize, 1usize), (2, 4), (3, 29)] {
            let enumerated = enumerate_topologies(n).unwrap().len();
            if enumerated != expected || enumerated != common::family_filter_count(n) {
                return Err(format!("{enumerated} topologies on {n} points"));
            }
        }
        if enumerate_topologies(4).unwrap().len() != 355 {
            return Err("wrong four-point census".into());
        }
        let elapsed = start.elapsed();
        if elapsed > CONTROL_BOUND {
            return Err(format!("took {elapsed:?}, bound {CONTROL_BOUND:?}"));
        }
        Ok(format!(
            "witness pair reproduced, five rejection controls, censuses 1/4/29/355 against the family filter, {elapsed:?}"
        ))
    });
}

#[test]
fn criterion_11_zerodivisor_closed_map_equivalence() {
    criterion(11, || {
        let mut specs = cyclic_specs(16);
        specs.extend(product_specs(16));
        let mut gated = 0usize;
        let mut degenerate = 0usize;
        for spec in &specs {
            let r = ring(spec);
            let nonzero: Vec<usize> = zerodivisors(&r).into_iter().filter(|&x| x != 0).collect();
            for ideal in ideals_all(&r) {
                let adic = adic_topology(&r, &ideal).map_err(|e| e.to_string())?;
                for &x in &nonzero {
                    let report =
                        koh_hypotheses(adic.top_ring(), x).map_err(|e| e.to_string())?;
                    if report.quasi_compact_note != "degenerate-finite" {
                        return Err("compactness must be reported as degenerate".into());
                    }
                    if report.closed_map {
                        if report.kernel_closed != report.hausdorff {
                            return Err(format!(
                                "{spec} element {x}: closed kernel against separation"
                            ));
                        }
                        if !report.image_closed {
                            return Err(format!("{spec} element {x}: non-closed image"));
                        }
                        gated += 1;
                    } else {
                        degenerate += 1;
                    }
                }
            }
        }
        if gated == 0 {
            return Err("no instance ever met the closed-map hypothesis".into());
        }
        Ok(format!(
            "{gated} closed-map instances with kernel closure matching separation, {degenerate} reported as hypothesis unmet"
        ))
    });
}
