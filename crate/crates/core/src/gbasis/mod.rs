//! Pure-binomial Gröbner machinery for polyomino ideals.
//!
//! All coefficients are ±1, so every result holds over any field.

mod binomial;
mod engine;
mod saturation;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::geometry::{Polyomino, Vertex};
use crate::orders::{ExponentVector, MonomialOrder, OrderError};

pub use binomial::{purity_counters, Binomial, PurityCounters};
pub use engine::{buchberger, normal_form, spoly, GroebnerBasis};
pub use saturation::{colon_by_variable, is_prime, saturate_all, PrimeReport, Saturation, SaturationStep, Witness};

pub const PAIR_BUDGET_ENV: &str = "POLYGB_PAIR_BUDGET";
pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GbError {
    #[error("pair budget of {budget} exhausted")]
    Timeout { budget: u64 },
    #[error("x_{0} is not the smallest variable of the order")]
    OrderPreconditionViolated(Vertex),
    #[error(transparent)]
    Order(#[from] OrderError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbOptions {
    /// Maximum number of critical pairs taken off the queue per basis.
    pub pair_budget: u64,
}

impl Default for GbOptions {
    /// Reads the budget from `POLYGB_PAIR_BUDGET` when it is set and parses.
    fn default() -> Self {
        let pair_budget = std::env::var(PAIR_BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_PAIR_BUDGET);
        GbOptions { pair_budget }
    }
}

/// One binomial per inner interval: diagonal product minus anti-diagonal product.
pub fn inner_2_minors(p: &Polyomino) -> Vec<Binomial> {
    p.inner_intervals()
        .iter()
        .map(|i| {
            let (a, b) = i.diagonal_corners();
            let (c, d) = i.anti_diagonal_corners();
            Binomial::new(ExponentVector::product([a, b]), ExponentVector::product([c, d]))
                .expect("proper intervals have four distinct corners")
        })
        .collect()
}

/// True iff the reduced Gröbner basis of `I_P` under `order` is exactly the
/// set of inner 2-minors.
pub fn is_quadratic_gb(p: &Polyomino, order: &MonomialOrder, opts: &GbOptions) -> Result<bool, GbError> {
    let minors = inner_2_minors(p);
    let gb = buchberger(minors.iter().cloned(), order, opts)?;
    let expected: BTreeSet<Binomial> = minors.into_iter().map(|g| g.oriented(order)).collect();
    let got: BTreeSet<Binomial> = gb.elements().iter().cloned().collect();
    Ok(expected == got)
}
