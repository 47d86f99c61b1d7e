//! Work budget for exhaustive continuity checks.
//!
//! Verifying that a map `R^k -> R` is continuous against a product topology
//! costs on the order of `|R|^(2k)` table lookups. Each such check charges
//! that figure against a per-call budget before starting, so oversized
//! requests fail fast instead of running for hours. The default budget is
//! 10^7 lookups; the `TOPRING_BUDGET` environment variable overrides it.

use thiserror::Error;

pub const DEFAULT_LOOKUP_BUDGET: u64 = 10_000_000;
pub const BUDGET_ENV_VAR: &str = "TOPRING_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("continuity check needs {cost} table lookups, budget is {budget} (set {BUDGET_ENV_VAR} to raise)")]
pub struct BudgetExceeded {
    pub cost: u64,
    pub budget: u64,
}

/// The active per-call lookup budget.
pub fn lookup_budget() -> u64 {
    match std::env::var(BUDGET_ENV_VAR) {
        Ok(v) => v.trim().parse().unwrap_or(DEFAULT_LOOKUP_BUDGET),
        Err(_) => DEFAULT_LOOKUP_BUDGET,
    }
}

/// Budget for a continuity check of a map `ground^arity -> ground`.
pub fn charge_nary_check(ground: usize, arity: u32) -> Result<(), BudgetExceeded> {
    let cost = (ground as u64).saturating_pow(2 * arity);
    let budget = lookup_budget();
    if cost > budget {
        Err(BudgetExceeded { cost, budget })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_budget_admits_binary_ops_up_to_56() {
        assert!(charge_nary_check(56, 2).is_ok());
        assert!(charge_nary_check(57, 2).is_err());
    }

    #[test]
    fn cost_grows_with_arity() {
        assert!(charge_nary_check(10, 3).is_ok());
        assert!(charge_nary_check(100, 2).is_err());
    }
}
