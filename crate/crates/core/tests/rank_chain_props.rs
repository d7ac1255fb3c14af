//! Cross-module invariants tying ranks to chains: the generating rank
//! never exceeds the longest-chain length; under the exchange property the
//! two agree, all bases are equicardinal, and maximal chains are exactly
//! the span ladders of bases.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use geom_core::budget::Budget;
use geom_core::chains::{self, Picker};
use geom_core::exchange::{EpMode, EpStatus};
use geom_core::gallery::{example2, fano, projective_space};
use geom_core::pointset::PointSet;
use geom_core::random::random_geometry;
use geom_core::rank;
use geom_core::Geometry;

fn geometry_from_seed(seed: u64) -> Geometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_geometry(&mut rng, 8, 10)
}

fn points_set(g: &Geometry, points: &[usize]) -> PointSet {
    PointSet::from_points(g.n_points(), points.iter().copied())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generating_rank_never_exceeds_longest_chain(seed in any::<u64>()) {
        let g = geometry_from_seed(seed);
        let budget = Budget::default();
        let rk = rank::generating_rank(&g, &budget);
        let lc = chains::longest_chain(&g, &budget);
        prop_assert!(lc.exact);
        prop_assert!(rk.value().unwrap() <= lc.length);
    }

    #[test]
    fn exchange_property_forces_rank_chain_agreement(seed in any::<u64>()) {
        let g = geometry_from_seed(seed);
        let budget = Budget::default();
        let ep = g.check_exchange_property(EpMode::Exhaustive, &budget).unwrap();
        if ep.status == EpStatus::Holds {
            let rk = rank::generating_rank(&g, &budget).value().unwrap();
            let lc = chains::longest_chain(&g, &budget);
            prop_assert_eq!(rk, lc.length);
            let lengths = chains::maximal_chain_lengths(&g, &budget);
            prop_assert!(lengths.exhaustive);
            prop_assert!(lengths.all_equal());
            prop_assert_eq!(lengths.counts.keys().next().copied(), Some(rk));
            // every greedy scan yields a basis
            let order: Vec<usize> = (0..g.n_points()).collect();
            let kept = rank::greedy_basis(&g, &order).unwrap();
            let kept_set = points_set(&g, &kept);
            prop_assert!(rank::is_generating(&g, &kept_set));
            prop_assert!(rank::is_independent(&g, &kept_set));
            prop_assert_eq!(kept.len(), rk);
        }
    }

    #[test]
    fn independence_criterion_matches_definition(seed in any::<u64>(), mask in any::<u32>()) {
        // the one-point-deleted test equals the all-proper-subsets
        // definition: X is dependent iff some proper subset spans span(X)
        let g = geometry_from_seed(seed);
        let n = g.n_points();
        let x = PointSet::from_points(n, (0..n).filter(|&p| mask >> p & 1 == 1));
        let by_criterion = rank::is_independent(&g, &x);
        let span_x = g.span(&x);
        let members: Vec<usize> = x.to_vec();
        let mut by_definition = true;
        for sub in 0u32..(1 << members.len()) {
            if sub == (1 << members.len()) - 1 {
                continue; // not a proper subset
            }
            let y = PointSet::from_points(
                n,
                members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| sub >> i & 1 == 1)
                    .map(|(_, &p)| p),
            );
            if g.span(&y) == span_x {
                by_definition = false;
                break;
            }
        }
        prop_assert_eq!(by_criterion, by_definition);
    }

    #[test]
    fn condensation_always_generates_with_chain_length(seed in any::<u64>(), shuffle_seed in any::<u64>()) {
        let g = geometry_from_seed(seed);
        let mut order: Vec<usize> = (0..g.n_points()).collect();
        use rand::seq::SliceRandom;
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(shuffle_seed));
        let (chain, jumps) = chains::condense_generating_chain(&g, &order).unwrap();
        prop_assert_eq!(chain.len(), jumps.len());
        prop_assert!(chain.last().is_full());
        prop_assert!(rank::is_generating(&g, &points_set(&g, &jumps)));
        // the jump count bounds the generating rank from above
        let rk = rank::generating_rank(&g, &Budget::default());
        prop_assert!(rk.value().unwrap() <= jumps.len());
    }

    #[test]
    fn extraction_counts_match_chain_length(seed in any::<u64>()) {
        let g = geometry_from_seed(seed);
        let budget = Budget::default();
        let lc = chains::longest_chain(&g, &budget);
        let extraction = chains::independent_from_chain(&g, &lc.witness, Picker::Canonical).unwrap();
        prop_assert_eq!(extraction.points.len(), lc.length);
        // chains built from independent sets have length |X|
        if extraction.independent {
            let rebuilt = chains::chain_from_independent(&g, &extraction.points).unwrap();
            prop_assert_eq!(rebuilt.len(), extraction.points.len());
        }
    }

    #[test]
    fn extend_to_maximal_contains_and_is_maximal(seed in any::<u64>(), mask in any::<u32>()) {
        let g = geometry_from_seed(seed);
        let s = g.span(&PointSet::from_points(
            g.n_points(),
            (0..g.n_points()).filter(|&p| mask >> p & 1 == 1),
        ));
        let base = chains::Chain::new(&g, vec![s]).unwrap();
        let extended = chains::extend_to_maximal(&g, &base);
        prop_assert!(chains::is_maximal_chain(&g, &extended).maximal);
        prop_assert!(extended.contains_chain(&base));
        let again = chains::extend_to_maximal(&g, &extended);
        prop_assert_eq!(again, extended);
    }
}

/// Exchange-holding reference geometries with enumerable lattices.
fn ep_reference_geometries() -> Vec<Geometry> {
    vec![fano(), projective_space(2, 3).unwrap(), projective_space(3, 2).unwrap()]
}

#[test]
fn maximal_chains_extract_bases_and_round_trip() {
    let budget = Budget::default();
    for g in ep_reference_geometries() {
        let all = g.all_subspaces();
        // enumerate every maximal chain by walking covers from the bottom
        let mut stack = vec![vec![g.empty_set()]];
        let mut maximal_chains = Vec::new();
        while let Some(prefix) = stack.pop() {
            let top = prefix.last().unwrap().clone();
            if top.is_full() {
                maximal_chains.push(prefix);
                continue;
            }
            for cover in g.covers(&top).unwrap() {
                let mut next = prefix.clone();
                next.push(cover);
                stack.push(next);
            }
        }
        for members in maximal_chains {
            let chain = chains::Chain::new(&g, members).unwrap();
            assert!(chains::is_maximal_chain(&g, &chain).maximal);
            let extraction =
                chains::independent_from_chain(&g, &chain, Picker::Canonical).unwrap();
            // under the exchange property the extraction is a basis...
            assert!(extraction.independent);
            let set = points_set(&g, &extraction.points);
            assert!(rank::is_generating(&g, &set));
            // ...and rebuilding the span ladder reproduces the chain exactly
            let rebuilt = chains::chain_from_independent(&g, &extraction.points).unwrap();
            assert_eq!(&rebuilt, &chain);
        }
        // chains that are not maximal never extract a basis
        let lc = chains::longest_chain(&g, &budget);
        let full = lc.witness;
        for drop_index in 1..full.members().len() - 1 {
            let mut members: Vec<PointSet> = full.members().to_vec();
            members.remove(drop_index);
            let pruned = chains::Chain::new(&g, members).unwrap();
            assert!(!chains::is_maximal_chain(&g, &pruned).maximal);
            let extraction =
                chains::independent_from_chain(&g, &pruned, Picker::Canonical).unwrap();
            let set = points_set(&g, &extraction.points);
            assert!(
                !(extraction.independent && rank::is_generating(&g, &set)),
                "a non-maximal chain extracted a basis"
            );
        }
        // any subspace comparable with every member of a basis ladder either
        // belongs to the ladder or strictly contains its top
        let basis = rank::generating_rank(&g, &budget).witness.unwrap();
        let partial: Vec<usize> = basis[..basis.len() - 1].to_vec();
        let ladder = chains::chain_from_independent(&g, &partial).unwrap();
        let top = ladder.last().clone();
        for s in &all {
            let comparable = ladder
                .members()
                .iter()
                .all(|m| m.is_subset(s) || s.is_subset(m));
            if comparable && !ladder.members().contains(s) {
                assert!(top.is_proper_subset(s));
            }
        }
    }
}

#[test]
fn dependent_extraction_is_reported_when_exchange_fails() {
    // a maximal chain through the C-half of the hub geometry picks the hub
    // last, and the hub lies in the span of the other picks
    let n = 4;
    let g = example2(n).unwrap();
    let mut members = vec![g.empty_set()];
    let mut cur = g.empty_set();
    for c in n + 1..=2 * n {
        cur = g.span_with(&cur, c);
        members.push(cur.clone());
    }
    members.push(g.full_set());
    let chain = chains::Chain::new(&g, members).unwrap();
    assert!(chains::is_maximal_chain(&g, &chain).maximal);
    let extraction = chains::independent_from_chain(&g, &chain, Picker::Canonical).unwrap();
    assert_eq!(extraction.points.len(), chain.len());
    assert!(!extraction.independent, "the flag records the failure");
}

#[test]
fn seeded_picker_is_reproducible() {
    let g = fano();
    let lc = chains::longest_chain(&g, &Budget::default());
    let a = chains::independent_from_chain(&g, &lc.witness, Picker::Seeded(9)).unwrap();
    let b = chains::independent_from_chain(&g, &lc.witness, Picker::Seeded(9)).unwrap();
    assert_eq!(a.points, b.points);
}
