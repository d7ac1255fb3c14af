//! Search budgets. Every potentially expensive operation takes a [`Budget`]
//! so CI runtimes stay predictable; exceeding a budget yields bounds or a
//! partial result instead of an unbounded search.

use std::cell::Cell;

/// Caps for the search-heavy operations.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Maximum number of span computations a single operation may perform.
    pub max_span_calls: u64,
    /// Maximum number of distinct subspaces a lattice search may visit.
    pub max_subspaces: usize,
    /// Exhaustive exchange-property checks are allowed up to this many points.
    pub ep_max_points_exhaustive: usize,
    /// Trials used when the exchange check falls back to sampling.
    pub ep_sample_trials: u32,
    /// Seed for sampled checks launched without an explicit seed.
    pub ep_sample_seed: u64,
    /// Exact maximum-independent-set scans are allowed up to this many points.
    pub exact_independence_max_points: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_span_calls: 10_000_000,
            max_subspaces: 200_000,
            ep_max_points_exhaustive: 16,
            ep_sample_trials: 4096,
            ep_sample_seed: 0x5eed,
            exact_independence_max_points: 14,
        }
    }
}

impl Budget {
    /// Default budget with the span-call cap replaced by `max_span_calls`.
    pub fn with_span_calls(max_span_calls: u64) -> Self {
        Budget {
            max_span_calls,
            ..Budget::default()
        }
    }
}

/// Running counter checked against a [`Budget`] inside one operation.
pub(crate) struct SpanMeter {
    used: Cell<u64>,
    cap: u64,
}

impl SpanMeter {
    pub(crate) fn new(budget: &Budget) -> Self {
        SpanMeter {
            used: Cell::new(0),
            cap: budget.max_span_calls,
        }
    }

    /// Records one span call; returns false once the cap is exhausted.
    pub(crate) fn tick(&self) -> bool {
        let next = self.used.get() + 1;
        self.used.set(next);
        next <= self.cap
    }
}
