//! Facts about the gallery geometries: hand-derived spans and covers for
//! the hub-and-halves family, projective-space counts against the Gaussian
//! binomial, and the rank/chain/exchange behavior of both.

use geom_core::budget::Budget;
use geom_core::chains;
use geom_core::exchange::{EpMode, EpStatus};
use geom_core::gallery::{
    example2, example2_c_points, fano, pg_point_count, projective_space, EXAMPLE2_HUB,
};
use geom_core::pointset::PointSet;
use geom_core::rank;

fn c_set(n: usize) -> PointSet {
    PointSet::from_points(2 * n + 1, example2_c_points(n))
}

/// Number of k-dimensional subspaces of an n-dimensional space over GF(q).
fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(k - i) - 1;
    }
    num / den
}

#[test]
fn pg_line_counts_match_gaussian_binomials() {
    for (d, q) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let g = projective_space(d, q).unwrap();
        assert_eq!(g.n_points(), pg_point_count(d, q));
        assert_eq!(
            g.lines().len() as u64,
            gaussian_binomial(d as u32 + 1, 2, q as u64),
            "PG({d},{q}) line count"
        );
    }
}

#[test]
fn fano_matches_its_classical_presentation() {
    // an explicit seven-triple presentation has the same invariants as the
    // algebraic build: counts, regularity, exchange, rank
    let classic = geom_core::Geometry::build(
        7,
        [
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
        ],
    )
    .unwrap();
    let algebraic = fano();
    let budget = Budget::default();
    for g in [&classic, &algebraic] {
        assert_eq!(g.n_points(), 7);
        assert_eq!(g.lines().len(), 7);
        let ep = g.check_exchange_property(EpMode::Exhaustive, &budget).unwrap();
        assert_eq!(ep.status, EpStatus::Holds);
        assert_eq!(rank::generating_rank(g, &budget).value(), Some(3));
        assert_eq!(chains::longest_chain(g, &budget).length, 3);
    }
}

#[test]
fn fano_covers_of_a_point_are_its_three_lines() {
    let g = fano();
    for p in 0..7 {
        let covers = g
            .covers(&PointSet::from_points(7, [p]))
            .unwrap();
        assert_eq!(covers.len(), 3);
        for c in &covers {
            assert_eq!(c.len(), 3);
            assert!(g.lines().contains(c));
            assert!(c.contains(p));
        }
    }
}

#[test]
fn fano_maximal_chains_all_have_length_three() {
    let g = fano();
    let lengths = chains::maximal_chain_lengths(&g, &Budget::default());
    assert!(lengths.exhaustive);
    // one maximal chain per (point ⊂ line) flag: 7 points × 3 lines each
    assert_eq!(lengths.counts.len(), 1);
    assert_eq!(lengths.counts.get(&3), Some(&21));
}

#[test]
fn pg32_lattice_is_exhaustive_and_equilong() {
    let g = projective_space(3, 2).unwrap();
    assert_eq!(g.all_subspaces().len(), 67);
    let lengths = chains::maximal_chain_lengths(&g, &Budget::default());
    assert!(lengths.exhaustive);
    assert_eq!(lengths.counts.len(), 1);
    // flags: 15 points × 7 lines through a point × 3 planes through a line
    assert_eq!(lengths.counts.get(&4), Some(&315));
    assert_eq!(
        rank::generating_rank(&g, &Budget::default()).value(),
        Some(4)
    );
}

#[test]
fn pg23_exchange_holds_exhaustively() {
    let g = projective_space(2, 3).unwrap();
    let ep = g
        .check_exchange_property(EpMode::Exhaustive, &Budget::default())
        .unwrap();
    assert_eq!(ep.status, EpStatus::Holds);
}

#[test]
fn example2_c_half_is_maximal_independent_but_not_generating() {
    for n in 3..=6 {
        let g = example2(n).unwrap();
        let c = c_set(n);
        assert!(g.is_subspace(&c));
        assert!(rank::is_independent(&g, &c));
        assert!(!rank::is_generating(&g, &c));
        // maximality: adjoining any point breaks independence
        for x in c.complement_iter() {
            assert!(
                !rank::is_independent(&g, &c.with(x)),
                "n={n}: C ∪ {{{x}}} should be dependent"
            );
        }
    }
}

#[test]
fn example2_rank_facts() {
    let budget = Budget::default();
    for n in 3..=6 {
        let g = example2(n).unwrap();
        let rk = rank::generating_rank(&g, &budget);
        assert_eq!(rk.value(), Some(3), "generating rank of example2({n})");
        // the lexicographically first witness is {hub, b_1, b_2}
        assert_eq!(rk.witness, Some(vec![0, 1, 2]));

        let lc = chains::longest_chain(&g, &budget);
        assert!(lc.exact);
        assert_eq!(lc.length, n + 1, "longest chain of example2({n})");

        let ep = g.check_exchange_property(EpMode::Exhaustive, &budget);
        if 2 * n < budget.ep_max_points_exhaustive {
            let report = ep.unwrap();
            assert_eq!(report.status, EpStatus::Fails);
            assert!(report.witness.unwrap().replays(&g));
        }
    }
}

#[test]
fn example2_exact_independence_number_is_n() {
    let budget = Budget::default();
    for n in 3..=5 {
        let g = example2(n).unwrap();
        let (size, witness) = rank::exact_max_independent(&g, &budget).unwrap();
        assert_eq!(size, n);
        assert!(rank::is_independent(
            &g,
            &PointSet::from_points(2 * n + 1, witness)
        ));
    }
}

#[test]
fn example2_covers() {
    let n = 4;
    let g = example2(n).unwrap();
    // every singleton covers the empty subspace
    let covers_empty = g.covers(&g.empty_set()).unwrap();
    assert_eq!(covers_empty.len(), 2 * n + 1);
    assert!(covers_empty.iter().all(|c| c.len() == 1));
    // C is covered by the full point set alone
    let covers_c = g.covers(&c_set(n)).unwrap();
    assert_eq!(covers_c, vec![g.full_set()]);
}

#[test]
fn example2_greedy_scan_starting_in_c_keeps_exactly_c() {
    let n = 4;
    let g = example2(n).unwrap();
    let mut order: Vec<usize> = example2_c_points(n).collect();
    order.push(EXAMPLE2_HUB);
    order.extend(1..=n);
    let kept = rank::greedy_basis(&g, &order).unwrap();
    assert_eq!(kept, example2_c_points(n).collect::<Vec<_>>());
    // independent but not generating: the scan cannot be a basis here
    let kept_set = PointSet::from_points(2 * n + 1, kept);
    assert!(rank::is_independent(&g, &kept_set));
    assert!(!rank::is_generating(&g, &kept_set));
}

#[test]
fn example2_condense_drops_the_partner_point() {
    // feeding (hub, b_1, c_1, b_2): c_1 lies in span(hub, b_1), causing no
    // jump, so the condensed generators are (hub, b_1, b_2)
    let n = 4;
    let g = example2(n).unwrap();
    let (chain, jumps) = chains::condense_generating_chain(&g, &[0, 1, n + 1, 2]).unwrap();
    assert_eq!(jumps, vec![0, 1, 2]);
    assert_eq!(chain.len(), 3);
}

#[test]
fn example2_ladder_through_c_stays_inside_c() {
    // the C half is independent and its subsets are subspaces, so the span
    // ladder of C in index order is a chain of subsets of C of length n
    let n = 4;
    let g = example2(n).unwrap();
    let order: Vec<usize> = example2_c_points(n).collect();
    let chain = chains::chain_from_independent(&g, &order).unwrap();
    assert_eq!(chain.len(), n);
    let c = c_set(n);
    for member in chain.members() {
        assert!(member.is_subset(&c));
    }
}

#[test]
fn example2_extending_through_c_gives_the_full_length() {
    // [∅, C, P] extends to a maximal chain of length n + 1 containing C
    let n = 4;
    let g = example2(n).unwrap();
    let base = chains::Chain::new(&g, vec![g.empty_set(), c_set(n), g.full_set()]).unwrap();
    let extended = chains::extend_to_maximal(&g, &base);
    assert!(chains::is_maximal_chain(&g, &extended).maximal);
    assert!(extended.contains_chain(&base));
    assert_eq!(extended.len(), n + 1);
}

#[test]
fn example2_rank_report_shape() {
    let n = 4;
    let g = example2(n).unwrap();
    let report = rank::rank_report(&g, &Budget::default());
    assert_eq!(report.rk_gen.value(), Some(3));
    assert_eq!(report.rk_wo.value(), Some(5));
    assert_eq!(report.ep.status, EpStatus::Fails);
    assert_eq!(report.rk_ind_lower, 4);
    assert!(report.rk_ind_exact);
    assert!(!report.basis_sizes.is_empty());
    assert!(report.basis_sizes.iter().all(|&s| s == 3));
}

#[test]
fn fano_rank_report_shape() {
    let g = fano();
    let report = rank::rank_report(&g, &Budget::default());
    assert_eq!(report.rk_gen.value(), Some(3));
    assert_eq!(report.rk_wo.value(), Some(3));
    assert_eq!(report.ep.status, EpStatus::Holds);
    assert_eq!(report.rk_ind_lower, 3);
    assert!(report.basis_sizes.iter().all(|&s| s == 3));
}

#[test]
fn example2_maximal_chain_lengths_include_a_short_chain() {
    // the lattice census decides empirically: alongside chains of the full
    // length n+1 there are shorter maximal chains through a hub triple
    let g = example2(3).unwrap();
    let lengths = chains::maximal_chain_lengths(&g, &Budget::default());
    assert!(lengths.exhaustive);
    assert!(lengths.counts.contains_key(&4), "full-length chains exist");
    assert!(
        lengths.counts.keys().any(|&l| l < 4),
        "a shorter maximal chain exists: {:?}",
        lengths.counts
    );
    // exhibit one explicitly: ∅ ⊂ {hub} ⊂ {hub, b_1, c_1} ⊂ P
    let hub = PointSet::from_points(7, [0]);
    let triple = PointSet::from_points(7, [0, 1, 4]);
    let chain = chains::Chain::new(&g, vec![g.empty_set(), hub, triple, g.full_set()]).unwrap();
    assert!(chains::is_maximal_chain(&g, &chain).maximal);
    assert_eq!(chain.len(), 3);
}
