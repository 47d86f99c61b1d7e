//! Shared report vocabulary: verdicts, theorem identifiers, findings.
//!
//! Every checkable claim in this crate carries a stable identifier string.
//! Suite reports, search findings, and CLI output all use these identifiers,
//! so a failure anywhere names exactly which claim broke and on which
//! instance.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Outcome of running one theorem predicate on one instance.
///
/// `HypothesisUnmet` means the instance does not satisfy the theorem's
/// hypotheses, so nothing was asserted. `Violation` means the hypotheses held
/// and the conclusion failed; it signals a bug and fails any suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "hypothesis-unmet")]
    HypothesisUnmet,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::HypothesisUnmet => "hypothesis-unmet",
            Verdict::Violation => "VIOLATION",
        };
        f.write_str(s)
    }
}

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal : $summary:literal),+ $(,)?) => {
        /// Identifier for one checkable claim.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TheoremId {
            $($variant),+
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name),+
                }
            }

            /// One-line statement of what the claim asserts.
            pub fn summary(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $summary),+
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = UnknownTheoremId;
            fn from_str(s: &str) -> Result<Self, UnknownTheoremId> {
                match s {
                    $($name => Ok(TheoremId::$variant),)+
                    _ => Err(UnknownTheoremId(s.to_string())),
                }
            }
        }
    };
}

theorem_ids! {
    Theorem3 => "theorem-3":
        "every adic topology makes the ring a topological ring whose unit group is a topological group under the subspace topology",
    TheoremI => "theorem-i":
        "the unit group with the topology induced by a -> (a, a^-1) is a topological group",
    Coro3iii => "coro-3-iii":
        "the unit group under the subspace topology is a topological group iff the subspace topology equals the induced one",
    Lemma2i => "lemma-2-i":
        "every monomial map G^n -> G on a topological group is continuous",
    Lemma2ii => "lemma-2-ii":
        "every polynomial map R^n -> R on a topological ring is continuous",
    PowerNeighborhood => "power-neighborhood":
        "every open U containing e admits an open V containing e with V^n inside U",
    BooleanSubspace => "boolean-subspace":
        "the idempotents with xor-addition and the subspace topology form a topological ring",
    Lemma4iv => "lemma-4-iv":
        "the connected component of e is a normal subgroup whose cosets are the components",
    Lemma5v => "lemma-5-v":
        "the connected component of 0 is an ideal whose cosets are the components",
    Lemma3iii => "lemma-3-iii":
        "adic closure formula: cl(S) equals the intersection of S + I^n; discrete iff I nilpotent iff some point isolated",
    Coro1Excellent => "coro-1-excellent":
        "the component space of an adic ring is the quotient ring by the stable power",
    Coro2Ex => "coro-2-ex":
        "adic point closures are x + stable power",
    TSpace => "t-space":
        "the sober space of an adic ring matches its component space; the canonical map is continuous and closed",
    IdempotentConnected => "idempotent-connected":
        "the ideal is connected in the adic topology iff it is idempotent",
    HausdorffFourWay => "hausdorff-four-way":
        "adic: Hausdorff iff stable power is zero iff totally disconnected iff some component is a singleton",
    ConnectedImproper => "connected-improper":
        "an adic ring is connected only when the ideal is the whole ring",
    Theorem8Zekiz => "theorem-8-zekiz":
        "the identity is dense iff the topology is trivial",
    Theorem10On => "theorem-10-on":
        "trivial quotient topology forces a subgroup to be dense; for normal subgroups the converse holds too",
    DenseIdeal => "dense-ideal":
        "an ideal is dense iff the quotient topology on R/I is trivial",
    Coro5Besh => "coro-5-besh":
        "a simple topological group has a closed identity or a trivial topology",
    Coro4Dort => "coro-4-dort":
        "a topological field has closed zero or a trivial topology",
    Theorem5Five => "theorem-5-five":
        "cl(S) = intersection of SU over open U containing e; products with closed sets are closed; quotient maps are perfect",
    Thm6Six => "thm-6-six":
        "Hausdorff iff the identity is closed; discrete iff some point is isolated",
    ClosureSubstructure => "closure-substructure":
        "closures of subgroups, normal subgroups, ideals, multiplicative sets, and subrings are again such",
    WeakClosed => "weak-closed":
        "every weak closed subgroup is closed; finite operation-closed weak closed subsets are closed subgroups",
    Theorem7Seven => "theorem-7-seven":
        "a finite ring is a nonfield iff its zerodivisor set is finite nonzero, and then |R| <= |Z(R)|^2",
    Theorem4iv => "theorem-4-iv":
        "for nonzero x in Z(R) with r -> rx a closed map: the kernel is closed iff R is Hausdorff, and Rx is closed",
    AdicMorphism => "adic-morphism":
        "a ring map is adic-continuous iff some f(I^n) lands in J; same-ring maximal ideals give equal adic topologies iff equal",
    StructuralFinding => "structural-finding":
        "finite topological groups are coset topologies of a normal subgroup; finite topological rings of an ideal",
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id {0:?} (expected one of the documented kebab-case ids)")]
pub struct UnknownTheoremId(pub String);

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serialized form of a finite topology: ground size plus the full open
/// family, each open an ascending element list, family in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyLiteral {
    pub n: usize,
    pub opens: Vec<Vec<usize>>,
}

/// One theorem verdict on one instance, with enough context to replay it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub theorem: TheoremId,
    pub ring_spec: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topology: Option<TopologyLiteral>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    pub detail: String,
}

impl Finding {
    pub fn holds(theorem: TheoremId, ring_spec: impl Into<String>, detail: impl Into<String>) -> Self {
        Finding {
            theorem,
            ring_spec: ring_spec.into(),
            ideal: None,
            topology: None,
            verdict: Verdict::Holds,
            witness: None,
            detail: detail.into(),
        }
    }
}
