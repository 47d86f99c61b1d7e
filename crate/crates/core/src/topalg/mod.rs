//! Topological algebra at finite scale.
//!
//! A finite group or ring paired with a finite topology on its carrier set
//! either is or is not a topological structure: the operations are maps
//! between finite spaces, so continuity is decidable by table lookup. The
//! checkers here produce verdicts with explicit witnesses, and every
//! structure theorem they rely on is re-verified on the instance at hand.
//! A theorem whose hypotheses are met but whose conclusion fails is an
//! error, never a silent report line.

use crate::budget::BudgetExceeded;
use crate::finring::RingError;
use crate::fintop::TopError;
use crate::report::TheoremId;
use thiserror::Error;

pub mod adic;
pub mod group;
pub mod topgroup;
pub mod topring;

pub use adic::{
    adic_morphism_continuity, adic_structure_theorems, adic_topology, maximal_adic_separation,
    AdicMorphismReport, AdicStructureReport, AdicTopology, MaximalAdicReport,
};
pub use group::GroupTable;
pub use topgroup::{
    check_topological_group, dense_triviality, group_closure_formula, hausdorff_discrete_criteria,
    identity_component, monomial_continuity, power_neighborhood, weak_closed_check,
    ContinuityWitness, DenseTrivialityReport, GroupClosureReport, HausdorffDiscreteReport,
    IdentityComponentReport, Monomial, MonomialReport, TopGroup, TopGroupReport, WeakClosedReport,
};
pub use topring::{
    absolute_check, boolean_subspace_check, check_topological_ring, closure_substructure,
    koh_hypotheses, polynomial_continuity, ring_dense_triviality, ring_identity_component,
    units_topologies, AbsoluteReport, BooleanSubspaceReport, IdealDensity, KohReport, Polynomial,
    PolynomialReport, RingComponentReport, RingDensityReport, SubstructureKind, SubstructureReport,
    TopRing, TopRingReport, UnitsTopologies,
};

/// Errors from topological-algebra checkers.
#[derive(Debug, Error)]
pub enum TopAlgError {
    #[error("not a group: {reason}")]
    NotAGroup { reason: String },
    #[error("size mismatch: {context}")]
    SizeMismatch { context: String },
    #[error("precondition violated: {reason}")]
    Precondition { reason: String },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Top(#[from] TopError),
    /// A verified hypothesis led to a failed conclusion. Reaching this is
    /// a counterexample to the statement named by `theorem`.
    #[error("{theorem} violated: {detail}")]
    TheoremViolation { theorem: TheoremId, detail: String },
}

impl TopAlgError {
    pub(crate) fn violation(theorem: TheoremId, detail: impl Into<String>) -> TopAlgError {
        TopAlgError::TheoremViolation {
            theorem,
            detail: detail.into(),
        }
    }
}
