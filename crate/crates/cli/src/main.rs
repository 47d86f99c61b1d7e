//! Command-line front end: parse ring, ideal, and topology arguments,
//! dispatch the checks, and emit text or JSON reports.
//!
//! Exit codes: 0 when every assertion holds, 1 for usage or parse
//! errors, 2 when a check fails or a theorem violation is found (the
//! witness is printed), 3 when the lookup budget is exceeded. The
//! `TOPRING_BUDGET` environment variable raises the budget.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;
use topring_core::finring::{
    boolean_ring, ideal_generate, ideals_all, make_ring, maximal_ideals, units_group,
    zerodivisors, FiniteRing,
};
use topring_core::fintop::{enumerate_topologies, make_topology, pi0, FinTopology};
use topring_core::report::{TheoremId, TopologyLiteral};
use topring_core::search::{find_non_absolute, theorem_corpus_report, SearchConfig, SearchError};
use topring_core::topalg::{
    absolute_check, adic_structure_theorems, check_topological_group, check_topological_ring,
    ContinuityWitness, GroupTable, TopAlgError,
};

#[derive(Parser)]
#[command(name = "topring", version, about = "Finite topological rings, checked exhaustively")]
struct Cli {
    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a finite ring.
    Ring {
        #[command(subcommand)]
        action: RingCmd,
    },
    /// Build an adic topology and report its structure.
    Adic {
        #[command(subcommand)]
        action: AdicCmd,
    },
    /// Enumerate the topologies on a small carrier.
    Topology {
        #[command(subcommand)]
        action: TopologyCmd,
    },
    /// Check one explicit instance.
    Check {
        #[command(subcommand)]
        action: CheckCmd,
    },
    /// Sweep a carrier for counterexamples.
    Search {
        #[command(subcommand)]
        action: SearchCmd,
    },
    /// Run theorem suites over a ring corpus.
    Suite {
        #[command(subcommand)]
        action: SuiteCmd,
    },
}

#[derive(Subcommand)]
enum RingCmd {
    /// Sizes, units, zerodivisors, idempotents, and ideal counts.
    Info { spec: String },
}

#[derive(Subcommand)]
enum AdicCmd {
    /// Power chain, components, separation, and the certified claims.
    Report {
        #[arg(long)]
        ring: String,
        /// Comma-separated generator elements.
        #[arg(long)]
        ideal: String,
    },
}

#[derive(Subcommand)]
enum TopologyCmd {
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Is the topology a ring topology for this ring?
    Topring {
        #[arg(long)]
        ring: String,
        /// Topology literal, e.g. '{"n":2,"opens":[[],[0],[0,1]]}'.
        #[arg(long)]
        topology: String,
    },
    /// Is the topology a group topology for the additive group?
    Topgroup {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        topology: String,
    },
    /// Is the unit group a topological group under the subspace topology?
    Absolute {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        topology: String,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Hunt for topological rings whose unit subspace fails the group check.
    NonAbsolute {
        #[arg(long)]
        ring: String,
        /// Largest carrier swept exhaustively.
        #[arg(long)]
        max_size: Option<usize>,
    },
}

#[derive(Subcommand)]
enum SuiteCmd {
    Run {
        /// Comma-separated claim identifiers; all claims when absent.
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<String>>,
        /// Comma-separated ring specs; the default corpus when absent.
        #[arg(long, value_delimiter = ',')]
        rings: Option<Vec<String>>,
        /// Also write the JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

fn failure_from_topalg(err: TopAlgError) -> Failure {
    match err {
        TopAlgError::TheoremViolation { theorem, detail } => Failure {
            code: 2,
            message: format!("VIOLATION {theorem}: {detail}"),
        },
        TopAlgError::Budget(b) => Failure {
            code: 3,
            message: b.to_string(),
        },
        other => Failure::usage(other.to_string()),
    }
}

fn failure_from_search(err: SearchError) -> Failure {
    match err {
        SearchError::Violation { finding } => {
            let witness = serde_json::to_string_pretty(&finding).unwrap_or_default();
            Failure {
                code: 2,
                message: format!(
                    "VIOLATION {} on {}: {}\n{witness}",
                    finding.theorem, finding.ring_spec, finding.detail
                ),
            }
        }
        SearchError::TopAlg(e) => failure_from_topalg(e),
        other => Failure::usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    // Invariant: a closed stdout pipe ends the process quietly instead
    // of panicking mid-report.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("{}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Ring {
            action: RingCmd::Info { spec },
        } => ring_info(cli.format, spec),
        Command::Adic {
            action: AdicCmd::Report { ring, ideal },
        } => adic_report(cli.format, ring, ideal),
        Command::Topology {
            action: TopologyCmd::Enumerate { size, count_only },
        } => topology_enumerate(cli.format, *size, *count_only),
        Command::Check { action } => match action {
            CheckCmd::Topring { ring, topology } => check_topring(cli.format, ring, topology),
            CheckCmd::Topgroup { ring, topology } => check_topgroup(cli.format, ring, topology),
            CheckCmd::Absolute { ring, topology } => check_absolute(cli.format, ring, topology),
        },
        Command::Search {
            action: SearchCmd::NonAbsolute { ring, max_size },
        } => search_non_absolute(cli.format, ring, *max_size),
        Command::Suite {
            action: SuiteCmd::Run {
                theorems,
                rings,
                json,
            },
        } => suite_run(cli.format, theorems.as_deref(), rings.as_deref(), json.as_deref()),
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: &str) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(value).expect("report serializes")
            );
        }
    }
}

fn parse_ring(spec: &str) -> Result<FiniteRing, Failure> {
    make_ring(spec).map_err(|e| Failure::usage(format!("bad ring spec {spec:?}: {e}")))
}

fn parse_generators(arg: &str) -> Result<Vec<usize>, Failure> {
    arg.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Failure::usage(format!("bad ideal generator {s:?}")))
        })
        .collect()
}

fn parse_topology(arg: &str, expected_ground: usize) -> Result<FinTopology, Failure> {
    let literal: TopologyLiteral = serde_json::from_str(arg)
        .map_err(|e| Failure::usage(format!("bad topology literal: {e}")))?;
    if literal.n != expected_ground {
        return Err(Failure::usage(format!(
            "topology on {} points given for a carrier of {} elements",
            literal.n, expected_ground
        )));
    }
    make_topology(literal.n, &literal.opens)
        .map_err(|e| Failure::usage(format!("not a topology: {e}")))
}

fn fmt_list(items: &[usize]) -> String {
    let inner = items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("[{inner}]")
}

#[derive(Serialize)]
struct RingInfo {
    spec: String,
    size: usize,
    zero: usize,
    one: usize,
    units: Vec<usize>,
    zerodivisors: Vec<usize>,
    idempotents: Vec<usize>,
    nilpotents: Vec<usize>,
    ideals: usize,
    maximal_ideals: usize,
    is_field: bool,
}

fn ring_info(format: Format, spec: &str) -> Result<u8, Failure> {
    let ring = parse_ring(spec)?;
    let units = units_group(&ring);
    let nilpotents: Vec<usize> = ring
        .elements()
        .filter(|&x| {
            let mut pow = x;
            for _ in 0..ring.size() {
                pow = ring.mul(pow, x);
            }
            pow == ring.zero()
        })
        .collect();
    let info = RingInfo {
        spec: ring.spec().to_string(),
        size: ring.size(),
        zero: ring.zero(),
        one: ring.one(),
        units: units.elements.clone(),
        zerodivisors: zerodivisors(&ring),
        idempotents: boolean_ring(&ring).elements,
        nilpotents,
        ideals: ideals_all(&ring).len(),
        maximal_ideals: maximal_ideals(&ring).len(),
        is_field: ring.size() >= 2 && units.len() == ring.size() - 1,
    };
    let text = format!(
        "ring {}\nsize {}\nunits {}\nzerodivisors {}\nidempotents {}\nnilpotents {}\nideals {} ({} maximal)\nfield {}",
        info.spec,
        info.size,
        fmt_list(&info.units),
        fmt_list(&info.zerodivisors),
        fmt_list(&info.idempotents),
        fmt_list(&info.nilpotents),
        info.ideals,
        info.maximal_ideals,
        info.is_field,
    );
    emit(format, &info, &text);
    Ok(0)
}

#[derive(Serialize)]
struct AdicReportOut {
    ring: String,
    generators: Vec<usize>,
    ideal: Vec<usize>,
    /// Element lists of I, I², ... up to the stable power.
    chain: Vec<Vec<usize>>,
    stable: Vec<usize>,
    nilpotent: bool,
    idempotent: bool,
    components: usize,
    hausdorff: bool,
    discrete: bool,
    connected: bool,
    totally_disconnected: bool,
    ideal_connected: bool,
    absolute: bool,
    /// Claims certified while constructing this report.
    theorems: Vec<&'static str>,
}

fn adic_report(format: Format, ring_spec: &str, ideal_arg: &str) -> Result<u8, Failure> {
    let ring = parse_ring(ring_spec)?;
    let generators = parse_generators(ideal_arg)?;
    let ideal = ideal_generate(&ring, &generators)
        .map_err(|e| Failure::usage(format!("bad ideal generators: {e}")))?;
    let report = adic_structure_theorems(&ring, &ideal).map_err(failure_from_topalg)?;
    let adic = &report.adic;
    let absolute = absolute_check(adic.top_ring())
        .map_err(failure_from_topalg)?
        .absolute;
    let components = pi0(adic.topology()).0.blocks().len();
    let out = AdicReportOut {
        ring: ring.spec().to_string(),
        generators,
        ideal: ideal.elems(),
        chain: adic.chain().chain.iter().map(|p| p.elems()).collect(),
        stable: adic.stable().elems(),
        nilpotent: adic.chain().nilpotent,
        idempotent: adic.chain().idempotent,
        components,
        hausdorff: report.hausdorff,
        discrete: adic.chain().nilpotent,
        connected: report.connected,
        totally_disconnected: report.totally_disconnected,
        ideal_connected: report.ideal_connected,
        absolute,
        theorems: vec![
            TheoremId::Theorem3.as_str(),
            TheoremId::Lemma3iii.as_str(),
            TheoremId::Coro2Ex.as_str(),
            TheoremId::Coro1Excellent.as_str(),
            TheoremId::TSpace.as_str(),
            TheoremId::IdempotentConnected.as_str(),
            TheoremId::HausdorffFourWay.as_str(),
            TheoremId::ConnectedImproper.as_str(),
        ],
    };
    let text = format!(
        "adic topology on {} from generators {}\nideal {}\nstable ideal {} (power {})\ncomponents {}\nhausdorff {}\ndiscrete {}\nconnected {}\ntotally disconnected {}\nideal connected {} (idempotent {})\nabsolute {}\ncertified {}",
        out.ring,
        fmt_list(&out.generators),
        fmt_list(&out.ideal),
        fmt_list(&out.stable),
        out.chain.len(),
        out.components,
        out.hausdorff,
        out.discrete,
        out.connected,
        out.totally_disconnected,
        out.ideal_connected,
        out.idempotent,
        out.absolute,
        out.theorems.join(", "),
    );
    emit(format, &out, &text);
    Ok(0)
}

#[derive(Serialize)]
struct EnumerationOut {
    size: usize,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    topologies: Option<Vec<TopologyLiteral>>,
}

fn topology_enumerate(format: Format, size: usize, count_only: bool) -> Result<u8, Failure> {
    let all = enumerate_topologies(size).map_err(|e| Failure::usage(e.to_string()))?;
    let topologies = if count_only {
        None
    } else {
        Some(
            all.iter()
                .map(|t| t.literal().expect("enumeration carriers are small"))
                .collect::<Vec<_>>(),
        )
    };
    let out = EnumerationOut {
        size,
        count: all.len(),
        topologies,
    };
    let mut text = format!("topologies on {} points: {}", out.size, out.count);
    if let Some(literals) = &out.topologies {
        for literal in literals {
            text.push('\n');
            text.push_str(&serde_json::to_string(literal).expect("literal serializes"));
        }
    }
    emit(format, &out, &text);
    Ok(0)
}

#[derive(Serialize)]
struct WitnessOut {
    open: Vec<usize>,
    preimage: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    preimage_pairs: Option<Vec<[usize; 2]>>,
}

fn witness_out(witness: &ContinuityWitness, ground: usize) -> WitnessOut {
    let preimage = witness.preimage.elems();
    let preimage_pairs = if witness.preimage.ground_size() == ground * ground {
        Some(preimage.iter().map(|&i| [i / ground, i % ground]).collect())
    } else {
        None
    };
    WitnessOut {
        open: witness.codomain_open.elems(),
        preimage,
        preimage_pairs,
    }
}

fn witness_text(out: &WitnessOut) -> String {
    let preimage = match &out.preimage_pairs {
        Some(pairs) => pairs
            .iter()
            .map(|[a, b]| format!("({a}, {b})"))
            .collect::<Vec<_>>()
            .join(", "),
        None => out
            .preimage
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", "),
    };
    format!(
        "  witness open {}\n  preimage {{{preimage}}} is not open",
        fmt_list(&out.open)
    )
}

#[derive(Serialize)]
struct TopringCheckOut {
    ring: String,
    pass: bool,
    add_continuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    add_witness: Option<WitnessOut>,
    mul_continuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    mul_witness: Option<WitnessOut>,
    zero_neighborhood: Vec<usize>,
    neighborhood_is_ideal: bool,
    opens_are_cosets: bool,
}

fn check_topring(format: Format, ring_spec: &str, topology_arg: &str) -> Result<u8, Failure> {
    let ring = parse_ring(ring_spec)?;
    let topology = parse_topology(topology_arg, ring.size())?;
    let tr = check_topological_ring(&ring, &topology).map_err(failure_from_topalg)?;
    let report = tr.report();
    let n = ring.size();
    let out = TopringCheckOut {
        ring: ring.spec().to_string(),
        pass: tr.is_topological_ring(),
        add_continuous: report.add_continuous,
        add_witness: report.add_witness.as_ref().map(|w| witness_out(w, n)),
        mul_continuous: report.mul_continuous,
        mul_witness: report.mul_witness.as_ref().map(|w| witness_out(w, n)),
        zero_neighborhood: report.zero_min_open.elems(),
        neighborhood_is_ideal: report.zero_nbhd_ideal,
        opens_are_cosets: report.opens_are_cosets,
    };
    let mut text = format!(
        "topological ring: {}\naddition continuous: {}",
        out.pass, out.add_continuous
    );
    if let Some(w) = &out.add_witness {
        text.push('\n');
        text.push_str(&witness_text(w));
    }
    text.push_str(&format!("\nmultiplication continuous: {}", out.mul_continuous));
    if let Some(w) = &out.mul_witness {
        text.push('\n');
        text.push_str(&witness_text(w));
    }
    text.push_str(&format!(
        "\nneighborhood of zero {} (ideal {})\nopens are coset unions: {}",
        fmt_list(&out.zero_neighborhood),
        out.neighborhood_is_ideal,
        out.opens_are_cosets
    ));
    emit(format, &out, &text);
    Ok(if out.pass { 0 } else { 2 })
}

#[derive(Serialize)]
struct TopgroupCheckOut {
    group: String,
    pass: bool,
    op_continuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    op_witness: Option<WitnessOut>,
    inverse_continuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverse_witness: Option<WitnessOut>,
    identity_neighborhood: Vec<usize>,
    neighborhood_is_normal_subgroup: bool,
    opens_are_cosets: bool,
}

fn check_topgroup(format: Format, ring_spec: &str, topology_arg: &str) -> Result<u8, Failure> {
    let ring = parse_ring(ring_spec)?;
    let topology = parse_topology(topology_arg, ring.size())?;
    let group = GroupTable::additive(&ring);
    let tg = check_topological_group(&group, &topology).map_err(failure_from_topalg)?;
    let report = tg.report();
    let n = group.size();
    let out = TopgroupCheckOut {
        group: group.label().to_string(),
        pass: tg.is_topological_group(),
        op_continuous: report.op_continuous,
        op_witness: report.op_witness.as_ref().map(|w| witness_out(w, n)),
        inverse_continuous: report.inverse_continuous,
        inverse_witness: report.inverse_witness.as_ref().map(|w| witness_out(w, n)),
        identity_neighborhood: report.identity_min_open.elems(),
        neighborhood_is_normal_subgroup: report.identity_nbhd_normal_subgroup,
        opens_are_cosets: report.opens_are_cosets,
    };
    let mut text = format!(
        "topological group: {}\noperation continuous: {}",
        out.pass, out.op_continuous
    );
    if let Some(w) = &out.op_witness {
        text.push('\n');
        text.push_str(&witness_text(w));
    }
    text.push_str(&format!("\ninversion continuous: {}", out.inverse_continuous));
    if let Some(w) = &out.inverse_witness {
        text.push('\n');
        text.push_str(&witness_text(w));
    }
    text.push_str(&format!(
        "\nneighborhood of identity {} (normal subgroup {})\nopens are coset unions: {}",
        fmt_list(&out.identity_neighborhood),
        out.neighborhood_is_normal_subgroup,
        out.opens_are_cosets
    ));
    emit(format, &out, &text);
    Ok(if out.pass { 0 } else { 2 })
}

#[derive(Serialize)]
struct AbsoluteCheckOut {
    ring: String,
    topological_ring: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverse_continuous: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    subspace_group: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    induced_equals_subspace: Option<bool>,
    absolute: bool,
    theorems: Vec<&'static str>,
}

fn check_absolute(format: Format, ring_spec: &str, topology_arg: &str) -> Result<u8, Failure> {
    let ring = parse_ring(ring_spec)?;
    let topology = parse_topology(topology_arg, ring.size())?;
    let tr = check_topological_ring(&ring, &topology).map_err(failure_from_topalg)?;
    let theorems = vec![TheoremId::TheoremI.as_str(), TheoremId::Coro3iii.as_str()];
    if !tr.is_topological_ring() {
        let out = AbsoluteCheckOut {
            ring: ring.spec().to_string(),
            topological_ring: false,
            inverse_continuous: None,
            subspace_group: None,
            induced_equals_subspace: None,
            absolute: false,
            theorems,
        };
        let text = "absolute: false\nnot a topological ring, so the absolute check does not apply"
            .to_string();
        emit(format, &out, &text);
        return Ok(2);
    }
    let report = absolute_check(&tr).map_err(failure_from_topalg)?;
    let out = AbsoluteCheckOut {
        ring: ring.spec().to_string(),
        topological_ring: true,
        inverse_continuous: Some(report.inverse_continuous),
        subspace_group: Some(report.subspace_group),
        induced_equals_subspace: Some(report.tf_equals_subspace),
        absolute: report.absolute,
        theorems,
    };
    let text = format!(
        "absolute: {}\ninversion continuous on the unit subspace: {}\nunit subspace is a topological group: {}\ninduced topology equals subspace topology: {}\ncertified {}",
        out.absolute,
        report.inverse_continuous,
        report.subspace_group,
        report.tf_equals_subspace,
        out.theorems.join(", "),
    );
    emit(format, &out, &text);
    Ok(if out.absolute { 0 } else { 2 })
}

#[derive(Serialize)]
struct HuntOut {
    ring: String,
    ground: usize,
    total: usize,
    examined: usize,
    sampled: bool,
    topological_rings: usize,
    non_absolute: Vec<TopologyLiteral>,
}

fn search_non_absolute(
    format: Format,
    ring_spec: &str,
    max_size: Option<usize>,
) -> Result<u8, Failure> {
    let ring = parse_ring(ring_spec)?;
    let mut config = SearchConfig::default();
    if let Some(cap) = max_size {
        config.max_exhaustive_ground = cap;
    }
    let hunt = find_non_absolute(&ring, &config).map_err(failure_from_search)?;
    let out = HuntOut {
        ring: hunt.ring_spec.clone(),
        ground: hunt.ground,
        total: hunt.total,
        examined: hunt.examined,
        sampled: hunt.sampled,
        topological_rings: hunt.topological_rings,
        non_absolute: hunt
            .non_absolute
            .iter()
            .map(|tr| tr.topology().literal().expect("sweep carriers are small"))
            .collect(),
    };
    let mut text = format!(
        "search space: {} topologies on {} points ({} examined{})\ntopological rings: {}\nnon-absolute instances: {}",
        out.total,
        out.ground,
        out.examined,
        if out.sampled { ", sampled" } else { "" },
        out.topological_rings,
        out.non_absolute.len(),
    );
    for literal in &out.non_absolute {
        text.push('\n');
        text.push_str(&serde_json::to_string(literal).expect("literal serializes"));
    }
    emit(format, &out, &text);
    Ok(0)
}

fn parse_theorem_mask(ids: &[String]) -> Result<Vec<TheoremId>, Failure> {
    ids.iter()
        .map(|raw| {
            raw.trim().parse::<TheoremId>().map_err(|_| {
                let known = TheoremId::ALL
                    .iter()
                    .map(|id| id.as_str())
                    .collect::<Vec<_>>()
                    .join(", ");
                Failure::usage(format!("unknown theorem id {raw:?}; known ids: {known}"))
            })
        })
        .collect()
}

fn suite_run(
    format: Format,
    theorems: Option<&[String]>,
    rings: Option<&[String]>,
    json_path: Option<&std::path::Path>,
) -> Result<u8, Failure> {
    let mut config = SearchConfig::default();
    if let Some(specs) = rings {
        config.ring_specs = specs.iter().map(|s| s.trim().to_string()).collect();
    }
    if let Some(ids) = theorems {
        config.theorems = Some(parse_theorem_mask(ids)?);
    }
    match theorem_corpus_report(&config) {
        Ok(report) => {
            if let Some(path) = json_path {
                let body =
                    serde_json::to_string_pretty(&report).expect("corpus report serializes");
                std::fs::write(path, body)
                    .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            }
            let mut text = format!("suite over {} rings", report.rings.len());
            for ring in &report.rings {
                text.push_str(&format!(
                    "\n  {} ({} elements): {} instances{}, {} ideals",
                    ring.spec,
                    ring.size,
                    ring.instances,
                    if ring.swept { " from the full sweep" } else { "" },
                    ring.ideals
                ));
            }
            for tally in &report.tallies {
                text.push_str(&format!(
                    "\n{:<24} holds {:<8} hypothesis-unmet {}",
                    tally.theorem.as_str(),
                    tally.holds,
                    tally.hypothesis_unmet
                ));
            }
            text.push_str("\nall claims hold");
            emit(format, &report, &text);
            Ok(0)
        }
        Err(SearchError::Violation { finding }) => {
            if let Some(path) = json_path {
                let body = serde_json::to_string_pretty(&*finding).expect("finding serializes");
                let _ = std::fs::write(path, body);
            }
            Err(failure_from_search(SearchError::Violation { finding }))
        }
        Err(other) => Err(failure_from_search(other)),
    }
}
