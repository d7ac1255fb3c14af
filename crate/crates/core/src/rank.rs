//! Independence, generating sets, and rank computation.
//!
//! The generating rank is the least size of a set whose span is the whole
//! point set; it is found by iterative deepening over subset size with an
//! exhaustive, pruned search per level, so results are exact whenever the
//! search completes and honest bounds otherwise. Independence follows the
//! closure-operator definition: a set is independent when no member lies in
//! the span of the others (checking the maximal proper subsets suffices,
//! because a proper subset spanning as much as the whole set forces some
//! one-point-deleted subset to do the same).

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::budget::{Budget, SpanMeter};
use crate::chains;
use crate::error::{Error, Result};
use crate::exchange::{EpMode, EpReport, EpStatus};
use crate::geometry::Geometry;
use crate::pointset::PointSet;

/// True when the span of `x` is the whole point set.
pub fn is_generating(g: &Geometry, x: &PointSet) -> bool {
    g.span(x).is_full()
}

/// True when no member of `x` lies in the span of the remaining members.
pub fn is_independent(g: &Geometry, x: &PointSet) -> bool {
    x.iter().all(|p| !g.span(&x.without(p)).contains(p))
}

/// Scans `order` (a permutation of the points), keeping a point whenever the
/// kept set stays independent. Every point skipped lies in the span of the
/// kept set at that moment, so the result always generates; under the
/// exchange property the two acceptance tests coincide and the result is a
/// basis.
pub fn greedy_basis(g: &Geometry, order: &[usize]) -> Result<Vec<usize>> {
    let n = g.n_points();
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut seen = PointSet::empty(n);
    for &p in order {
        if p >= n {
            return Err(Error::PointOutOfRange {
                point: p,
                n_points: n,
            });
        }
        if !seen.insert(p) {
            return Err(Error::NotAPermutation);
        }
    }

    let mut kept: Vec<usize> = Vec::new();
    let mut kept_set = PointSet::empty(n);
    let mut span_kept = g.empty_set();
    for &p in order {
        if span_kept.contains(p) {
            continue;
        }
        kept_set.insert(p);
        if is_independent(g, &kept_set) {
            kept.push(p);
            span_kept = g.span_with(&span_kept, p);
        } else {
            kept_set.remove(p);
        }
    }
    Ok(kept)
}

/// Exact value or bounds for a rank quantity, with the witness realizing
/// the upper bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankValue {
    pub lower: usize,
    pub upper: usize,
    pub witness: Option<Vec<usize>>,
}

impl RankValue {
    pub fn exact(value: usize, witness: Option<Vec<usize>>) -> Self {
        RankValue {
            lower: value,
            upper: value,
            witness,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// The exact value, if the bounds agree.
    pub fn value(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }

    pub fn to_json_value(&self) -> Value {
        if self.is_exact() {
            json!({"value": self.lower, "exact": true})
        } else {
            json!({"lower": self.lower, "upper": self.upper, "exact": false})
        }
    }
}

enum LevelOutcome {
    Found(Vec<usize>),
    Refuted,
    OutOfBudget,
}

/// Least size of a generating set, by iterative deepening: level `k`
/// enumerates `k`-subsets in ascending lexicographic order, growing spans
/// incrementally and skipping any candidate whose next point already lies in
/// the span of the chosen prefix (such a set generates only if a smaller one
/// does, and smaller levels were already refuted). Exact when the search
/// finishes within budget; otherwise bounds, with the upper witness taken
/// from the condensation of the full point list.
pub fn generating_rank(g: &Geometry, budget: &Budget) -> RankValue {
    let n = g.n_points();
    let all: Vec<usize> = (0..n).collect();
    let (_, upper_witness) =
        chains::condense_generating_chain(g, &all).expect("the full point set generates");
    let upper = upper_witness.len();

    let meter = SpanMeter::new(budget);
    for k in 1..upper {
        match search_level(g, k, &meter) {
            LevelOutcome::Found(w) => return RankValue::exact(k, Some(w)),
            LevelOutcome::Refuted => continue,
            LevelOutcome::OutOfBudget => {
                return RankValue {
                    lower: k,
                    upper,
                    witness: Some(upper_witness),
                }
            }
        }
    }
    RankValue::exact(upper, Some(upper_witness))
}

fn search_level(g: &Geometry, k: usize, meter: &SpanMeter) -> LevelOutcome {
    fn descend(
        g: &Geometry,
        k: usize,
        start: usize,
        span: &PointSet,
        chosen: &mut Vec<usize>,
        meter: &SpanMeter,
    ) -> LevelOutcome {
        if chosen.len() == k {
            return if span.is_full() {
                LevelOutcome::Found(chosen.clone())
            } else {
                LevelOutcome::Refuted
            };
        }
        let n = g.n_points();
        let needed = k - chosen.len();
        for p in start..n {
            if n - p < needed {
                break;
            }
            if span.contains(p) {
                continue;
            }
            if !meter.tick() {
                return LevelOutcome::OutOfBudget;
            }
            let next = g.span_with(span, p);
            chosen.push(p);
            match descend(g, k, p + 1, &next, chosen, meter) {
                LevelOutcome::Refuted => {}
                other => return other,
            }
            chosen.pop();
        }
        LevelOutcome::Refuted
    }

    let mut chosen = Vec::with_capacity(k);
    descend(g, k, 0, &g.empty_set(), &mut chosen, meter)
}

/// Result of a bounded independence search.
#[derive(Clone, Debug)]
pub enum WitnessOutcome {
    Found(Vec<usize>),
    NotFound { exhaustive: bool },
}

impl WitnessOutcome {
    pub fn found(&self) -> Option<&[usize]> {
        match self {
            WitnessOutcome::Found(w) => Some(w),
            WitnessOutcome::NotFound { .. } => None,
        }
    }
}

/// Searches for an independent set of size at least `target`. A set of
/// pairwise non-collinear points and all its subsets are subspaces, hence
/// independent, so a greedy pass over those comes first; a backtracking
/// search over independent prefixes follows. The prefix pruning means a
/// `NotFound { exhaustive: true }` outcome is conclusive only for targets
/// reachable through independent prefixes.
pub fn independence_witness(g: &Geometry, target: usize, budget: &Budget) -> WitnessOutcome {
    if target == 0 {
        return WitnessOutcome::Found(Vec::new());
    }
    let n = g.n_points();
    let mut pairwise: Vec<usize> = Vec::new();
    for p in 0..n {
        if pairwise.iter().all(|&q| !g.collinear(p, q)) {
            pairwise.push(p);
        }
    }
    if pairwise.len() >= target {
        return WitnessOutcome::Found(pairwise);
    }

    let meter = SpanMeter::new(budget);
    let mut chosen_set = PointSet::empty(n);
    let mut chosen = Vec::new();
    match witness_dfs(g, target, 0, &mut chosen, &mut chosen_set, &meter) {
        DfsOutcome::Found(found) => WitnessOutcome::Found(found),
        DfsOutcome::Exhausted => WitnessOutcome::NotFound { exhaustive: true },
        DfsOutcome::OutOfBudget => WitnessOutcome::NotFound { exhaustive: false },
    }
}

enum DfsOutcome {
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

fn witness_dfs(
    g: &Geometry,
    target: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    chosen_set: &mut PointSet,
    meter: &SpanMeter,
) -> DfsOutcome {
    if chosen.len() >= target {
        return DfsOutcome::Found(chosen.clone());
    }
    for p in start..g.n_points() {
        // the independence test below costs |chosen| + 1 span calls
        for _ in 0..=chosen.len() {
            if !meter.tick() {
                return DfsOutcome::OutOfBudget;
            }
        }
        chosen_set.insert(p);
        let extends = is_independent(g, chosen_set);
        if extends {
            chosen.push(p);
            match witness_dfs(g, target, p + 1, chosen, chosen_set, meter) {
                DfsOutcome::Exhausted => {}
                other => return other,
            }
            chosen.pop();
        }
        chosen_set.remove(p);
    }
    DfsOutcome::Exhausted
}

/// Exact maximum independent set by full subset scan; only attempted for
/// geometries small enough for `2^n` closures.
pub fn exact_max_independent(g: &Geometry, budget: &Budget) -> Option<(usize, Vec<usize>)> {
    let n = g.n_points();
    if n > budget.exact_independence_max_points || n > 24 {
        return None;
    }
    let mut best: usize = 0;
    let mut witness: Vec<usize> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if (mask.count_ones() as usize) <= best {
            continue;
        }
        let set = PointSet::from_points(n, (0..n).filter(|&p| mask >> p & 1 == 1));
        if is_independent(g, &set) {
            best = set.len();
            witness = set.to_vec();
        }
    }
    Some((best, witness))
}

/// Aggregated rank data for one geometry.
#[derive(Clone, Debug)]
pub struct RankReport {
    pub rk_gen: RankValue,
    /// Longest-chain length (exact when the lattice search completed).
    pub rk_wo: RankValue,
    pub rk_ind_lower: usize,
    pub rk_ind_exact: bool,
    pub ep: EpReport,
    /// Sizes of the distinct bases discovered, ascending.
    pub basis_sizes: Vec<usize>,
}

impl RankReport {
    pub fn to_json_value(&self) -> Value {
        let witness = |v: &RankValue| {
            v.witness
                .as_ref()
                .map(|w| json!(w))
                .unwrap_or(Value::Null)
        };
        let ep_witness = match &self.ep.witness {
            Some(w) => json!({"base": w.base.to_vec(), "x": w.x, "y": w.y}),
            None => Value::Null,
        };
        json!({
            "rk_gen": self.rk_gen.to_json_value(),
            "rk_gen_witness": witness(&self.rk_gen),
            "rk_wo": self.rk_wo.to_json_value(),
            "rk_ind_lower": self.rk_ind_lower,
            "rk_ind_exact": self.rk_ind_exact,
            "ep": {
                "status": serde_json::to_value(self.ep.status).expect("status serializes"),
                "witness": ep_witness,
                "checks": self.ep.checks_performed,
            },
            "basis_sizes": self.basis_sizes,
        })
    }
}

/// Fills a [`RankReport`] by delegating to the individual searches, then
/// checks the cross-field relations that are theorems for exact values.
pub fn rank_report(g: &Geometry, budget: &Budget) -> RankReport {
    let n = g.n_points();

    let ep_mode = if n <= budget.ep_max_points_exhaustive {
        EpMode::Exhaustive
    } else {
        EpMode::Sampled {
            seed: budget.ep_sample_seed,
            trials: budget.ep_sample_trials,
        }
    };
    let ep = g
        .check_exchange_property(ep_mode, budget)
        .expect("mode matches the budget");

    let rk_gen = generating_rank(g, budget);

    let lc = chains::longest_chain(g, budget);

    // independence: exact scan when small, bounded search otherwise
    let (mut rk_ind_lower, rk_ind_exact) = match exact_max_independent(g, budget) {
        Some((size, _)) => (size, true),
        None => {
            let slice = Budget {
                max_span_calls: budget.max_span_calls.min(200_000),
                ..budget.clone()
            };
            let mut best = 0usize;
            let mut target = 1usize;
            while target <= n {
                match independence_witness(g, target, &slice) {
                    WitnessOutcome::Found(w) => {
                        best = best.max(w.len());
                        target = best + 1;
                    }
                    WitnessOutcome::NotFound { .. } => break,
                }
            }
            (best, false)
        }
    };

    // bases discovered by greedy scans over a few fixed orders
    let mut bases: BTreeSet<PointSet> = BTreeSet::new();
    let mut orders: Vec<Vec<usize>> = Vec::new();
    orders.push((0..n).collect());
    orders.push((0..n).rev().collect());
    for i in 0..3u64 {
        let mut order: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0xBA5E + i);
        order.shuffle(&mut rng);
        orders.push(order);
    }
    for order in &orders {
        let kept = greedy_basis(g, order).expect("orders are permutations");
        let set = PointSet::from_points(n, kept.iter().copied());
        if is_generating(g, &set) {
            bases.insert(set);
        }
    }
    if let (true, Some(w)) = (rk_gen.is_exact(), rk_gen.witness.as_ref()) {
        let set = PointSet::from_points(n, w.iter().copied());
        debug_assert!(is_independent(g, &set));
        bases.insert(set);
    }
    let mut basis_sizes: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    basis_sizes.sort_unstable();
    for b in &bases {
        rk_ind_lower = rk_ind_lower.max(b.len());
    }

    // an independent set of size k yields a chain of length k, so the
    // independence bound feeds the chain bound when the search was cut short
    let rk_wo = if lc.exact {
        RankValue::exact(lc.length, None)
    } else {
        RankValue {
            lower: lc.length.max(rk_ind_lower),
            upper: n,
            witness: None,
        }
    };

    let report = RankReport {
        rk_gen,
        rk_wo,
        rk_ind_lower,
        rk_ind_exact,
        ep,
        basis_sizes,
    };

    // cross-field relations that hold whenever the values are exact
    assert!(report.rk_gen.lower <= report.rk_gen.upper);
    if report.ep.status == EpStatus::Holds && !report.basis_sizes.is_empty() {
        let first = report.basis_sizes[0];
        assert!(
            report.basis_sizes.iter().all(|&s| s == first),
            "equal basis sizes under the exchange property"
        );
    }
    if let (Some(gen), Some(wo)) = (report.rk_gen.value(), report.rk_wo.value()) {
        assert!(gen <= wo, "generating rank never exceeds the chain rank");
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Geometry {
        Geometry::build(3, [vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn generating_and_independent_basics() {
        let g = triangle();
        assert!(is_generating(&g, &g.full_set()));
        assert!(is_independent(&g, &g.empty_set()));
        let two = PointSet::from_points(3, [0, 1]);
        assert!(is_generating(&g, &two));
        assert!(is_independent(&g, &two));
        assert!(!is_independent(&g, &g.full_set()));
    }

    #[test]
    fn greedy_basis_on_single_point() {
        let g = Geometry::build(1, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(greedy_basis(&g, &[0]).unwrap(), vec![0]);
    }

    #[test]
    fn greedy_basis_rejects_non_permutations() {
        let g = triangle();
        assert!(matches!(
            greedy_basis(&g, &[0, 1]),
            Err(Error::NotAPermutation)
        ));
        assert!(matches!(
            greedy_basis(&g, &[0, 1, 1]),
            Err(Error::NotAPermutation)
        ));
    }

    #[test]
    fn rank_of_triangle_is_two() {
        let g = triangle();
        let r = generating_rank(&g, &Budget::default());
        assert_eq!(r.value(), Some(2));
        assert_eq!(r.witness, Some(vec![0, 1]));
    }

    #[test]
    fn rank_without_lines_is_point_count() {
        let g = Geometry::build(4, Vec::<Vec<usize>>::new()).unwrap();
        let r = generating_rank(&g, &Budget::default());
        assert_eq!(r.value(), Some(4));
    }

    #[test]
    fn witness_target_zero_is_empty() {
        let g = triangle();
        let w = independence_witness(&g, 0, &Budget::default());
        assert_eq!(w.found().unwrap().len(), 0);
    }

    #[test]
    fn exact_independence_on_triangle() {
        let g = triangle();
        let (size, witness) = exact_max_independent(&g, &Budget::default()).unwrap();
        assert_eq!(size, 2);
        assert_eq!(witness, vec![0, 1]);
    }

    #[test]
    fn report_on_single_point() {
        let g = Geometry::build(1, Vec::<Vec<usize>>::new()).unwrap();
        let r = rank_report(&g, &Budget::default());
        assert_eq!(r.rk_gen.value(), Some(1));
        assert_eq!(r.rk_wo.value(), Some(1));
        assert_eq!(r.ep.status, EpStatus::Holds);
        assert_eq!(r.basis_sizes, vec![1]);
    }

    #[test]
    fn rank_value_json_shapes() {
        let exact = RankValue::exact(3, None);
        assert_eq!(
            exact.to_json_value(),
            serde_json::json!({"value": 3, "exact": true})
        );
        let bounds = RankValue {
            lower: 2,
            upper: 5,
            witness: None,
        };
        assert_eq!(
            bounds.to_json_value(),
            serde_json::json!({"lower": 2, "upper": 5, "exact": false})
        );
    }
}
