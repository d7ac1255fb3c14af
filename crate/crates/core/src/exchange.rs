//! Exchange-property checking.
//!
//! The exchange property asks: for every `X ⊆ P` and points `x, y`, if
//! `y ∈ span(X ∪ {x})` but `y ∉ span(X)`, then `x ∈ span(X ∪ {y})`.
//! When it holds the subspace lattice behaves like a matroid: all bases
//! have equal size and maximal chains have equal length. The exhaustive
//! mode walks all subsets in mask order and reports the first violation;
//! the sampled mode draws subsets from a seeded generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::pointset::PointSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpMode {
    Exhaustive,
    Sampled { seed: u64, trials: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EpStatus {
    Holds,
    Fails,
    SampledOk,
}

/// A replayable violation: `y ∈ span(X ∪ {x})`, `y ∉ span(X)`, yet
/// `x ∉ span(X ∪ {y})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpWitness {
    pub base: PointSet,
    pub x: usize,
    pub y: usize,
}

impl EpWitness {
    /// Re-derives the three span facts recorded by the witness.
    pub fn replays(&self, g: &Geometry) -> bool {
        let span_base = g.span(&self.base);
        let span_with_x = g.span_with(&span_base, self.x);
        let span_with_y = g.span_with(&span_base, self.y);
        span_with_x.contains(self.y) && !span_base.contains(self.y) && !span_with_y.contains(self.x)
    }
}

#[derive(Clone, Debug)]
pub struct EpReport {
    pub status: EpStatus,
    pub witness: Option<EpWitness>,
    pub checks_performed: u64,
}

impl EpReport {
    pub fn holds(&self) -> bool {
        matches!(self.status, EpStatus::Holds | EpStatus::SampledOk)
    }
}

impl Geometry {
    pub fn check_exchange_property(&self, mode: EpMode, budget: &Budget) -> Result<EpReport> {
        match mode {
            EpMode::Exhaustive => self.check_ep_exhaustive(budget),
            EpMode::Sampled { seed, trials } => Ok(self.check_ep_sampled(seed, trials)),
        }
    }

    fn check_ep_exhaustive(&self, budget: &Budget) -> Result<EpReport> {
        let n = self.n_points();
        if n > budget.ep_max_points_exhaustive || n > 20 {
            return Err(Error::EpBudgetExceeded {
                n_points: n,
                max_points: budget.ep_max_points_exhaustive.min(20),
            });
        }
        let lines: Vec<u32> = self
            .lines()
            .iter()
            .map(|l| l.iter().fold(0u32, |m, p| m | 1 << p))
            .collect();
        let close = |seed: u32| -> u32 {
            let mut cur = seed;
            loop {
                let mut changed = false;
                for &l in &lines {
                    if l & !cur != 0 && (l & cur).count_ones() >= 2 {
                        cur |= l;
                        changed = true;
                    }
                }
                if !changed {
                    return cur;
                }
            }
        };
        let total = 1usize << n;
        let mut table = vec![0u32; total];
        for mask in 0..total {
            table[mask] = close(mask as u32);
        }

        let mut checks = 0u64;
        for mask in 0..total {
            let span_x = table[mask];
            for x in 0..n {
                if span_x >> x & 1 == 1 {
                    continue; // span(X ∪ {x}) = span(X): nothing new to test
                }
                let with_x = table[mask | 1 << x];
                let mut fresh = with_x & !span_x & !(1 << x);
                while fresh != 0 {
                    let y = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    checks += 1;
                    if table[mask | 1 << y] >> x & 1 == 0 {
                        let base = PointSet::from_points(n, (0..n).filter(|&p| mask >> p & 1 == 1));
                        return Ok(EpReport {
                            status: EpStatus::Fails,
                            witness: Some(EpWitness { base, x, y }),
                            checks_performed: checks,
                        });
                    }
                }
            }
        }
        Ok(EpReport {
            status: EpStatus::Holds,
            witness: None,
            checks_performed: checks,
        })
    }

    fn check_ep_sampled(&self, seed: u64, trials: u32) -> EpReport {
        let n = self.n_points();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checks = 0u64;
        for _ in 0..trials {
            let mut base = PointSet::empty(n);
            for p in 0..n {
                if rng.gen_bool(0.5) {
                    base.insert(p);
                }
            }
            let span_base = self.span(&base);
            // span(X ∪ {y}) is reused across the x-scan within one trial
            let mut span_with: Vec<Option<PointSet>> = vec![None; n];
            for x in 0..n {
                if span_base.contains(x) {
                    continue;
                }
                let with_x = self.span_with(&span_base, x);
                for y in with_x.iter() {
                    if y == x || span_base.contains(y) {
                        continue;
                    }
                    checks += 1;
                    let with_y = span_with[y]
                        .get_or_insert_with(|| self.span_with(&span_base, y));
                    if !with_y.contains(x) {
                        return EpReport {
                            status: EpStatus::Fails,
                            witness: Some(EpWitness { base, x, y }),
                            checks_performed: checks,
                        };
                    }
                }
            }
        }
        EpReport {
            status: EpStatus::SampledOk,
            witness: None,
            checks_performed: checks,
        }
    }
}
