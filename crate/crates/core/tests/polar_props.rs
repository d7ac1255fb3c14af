//! Polar-space behavior across the supported kinds: rank route agreement,
//! corank by chains versus orthogonal complements, quotients at nice
//! subspaces, and faithfulness of the natural embeddings.

use geom_core::budget::Budget;
use geom_core::exchange::{EpMode, EpStatus};
use geom_core::polar::{
    build_polar, CorankMethod, FaithfulMode, PolarKind, PolarRankMethod,
};
use geom_core::rank;

#[test]
fn rank_routes_agree_for_the_supported_grid() {
    let cases = [
        (PolarKind::Symplectic, 2, 2),
        (PolarKind::Symplectic, 2, 3),
        (PolarKind::Symplectic, 3, 2),
        (PolarKind::Symplectic, 3, 3),
        (PolarKind::ParabolicQuadric, 2, 3),
        (PolarKind::EllipticQuadric, 2, 2),
    ];
    for (kind, n, q) in cases {
        let pg = build_polar(kind, n, q).unwrap();
        assert_eq!(pg.polar_rank(PolarRankMethod::Witt), n, "{kind:?} GF({q})");
        assert_eq!(pg.polar_rank(PolarRankMethod::Chain), n, "{kind:?} GF({q})");
    }
}

#[test]
fn corank_values_for_the_reference_cases() {
    let cases = [
        (PolarKind::Symplectic, 3, 0usize),
        (PolarKind::ParabolicQuadric, 3, 1),
        (PolarKind::EllipticQuadric, 2, 2),
    ];
    for (kind, q, expected) in cases {
        let pg = build_polar(kind, 2, q).unwrap();
        let chain = pg.corank(CorankMethod::Chain, None).unwrap();
        let perp = pg.corank(CorankMethod::Perp, None).unwrap();
        assert_eq!(chain.value, expected, "{kind:?} GF({q}) chain corank");
        assert_eq!(perp.value, expected, "{kind:?} GF({q}) perp corank");
        // the chain value does not depend on the pair or tie-breaking
        for seed in [1u64, 2, 3] {
            assert_eq!(
                pg.corank(CorankMethod::Chain, Some(seed)).unwrap().value,
                expected
            );
        }
    }
}

#[test]
fn chain_corank_witness_members_are_nice() {
    let pg = build_polar(PolarKind::EllipticQuadric, 2, 2).unwrap();
    let report = pg.corank(CorankMethod::Chain, None).unwrap();
    let chain = report.chain.expect("chain method carries its witness");
    assert_eq!(chain.len(), 2);
    for member in chain.members() {
        assert!(pg.is_nice(member).unwrap());
    }
}

#[test]
fn generating_rank_at_least_twice_polar_rank() {
    // exact generating ranks on the small builds
    let cases = [
        (PolarKind::Symplectic, 2, 5usize),
        (PolarKind::Symplectic, 3, 4),
        (PolarKind::ParabolicQuadric, 3, 5),
        (PolarKind::EllipticQuadric, 2, 6),
    ];
    let budget = Budget::default();
    for (kind, q, expected) in cases {
        let pg = build_polar(kind, 2, q).unwrap();
        let rk = rank::generating_rank(pg.geometry(), &budget);
        assert_eq!(rk.value(), Some(expected), "{kind:?} over GF({q})");
        assert!(expected >= 2 * pg.polar_rank(PolarRankMethod::Witt));
    }
}

#[test]
fn symplectic_embedding_over_gf2_is_unfaithful() {
    let pg = build_polar(PolarKind::Symplectic, 2, 2).unwrap();
    // the span of two disjoint lines is a 9-point grid, but its linear span
    // is the whole 4-dimensional space, so the pullback is everything
    let pair = pg.disjoint_maximal_singulars(None);
    let mut seed = pair.first.clone();
    seed.union_with(&pair.second);
    let grid = pg.geometry().span(&seed);
    assert_eq!(grid.len(), 9);
    let pullback = pg.pullback(&pg.linear_span_of(&grid));
    assert_eq!(pullback.len(), 15);
    assert!(grid.is_proper_subset(&pullback));

    let report = pg.check_faithful(FaithfulMode::ExhaustiveMinimal);
    assert!(!report.faithful_on_tested());
    // corank routes disagree under the unfaithful embedding
    assert_eq!(pg.corank(CorankMethod::Chain, None).unwrap().value, 1);
    assert_eq!(pg.corank(CorankMethod::Perp, None).unwrap().value, 0);
}

#[test]
fn parabolic_model_over_gf2_is_faithful_and_coranks_agree() {
    let pg = build_polar(PolarKind::ParabolicQuadric, 2, 2).unwrap();
    assert_eq!(pg.n_points(), 15);
    let report = pg.check_faithful(FaithfulMode::ExhaustiveMinimal);
    assert!(report.faithful_on_tested(), "violations: {:?}", report.violations);
    assert_eq!(pg.corank(CorankMethod::Chain, None).unwrap().value, 1);
    assert_eq!(pg.corank(CorankMethod::Perp, None).unwrap().value, 1);
}

#[test]
fn faithful_models_pass_sampled_probes() {
    for (kind, q) in [
        (PolarKind::ParabolicQuadric, 3),
        (PolarKind::EllipticQuadric, 2),
    ] {
        let pg = build_polar(kind, 2, q).unwrap();
        let report = pg.check_faithful(FaithfulMode::Sampled {
            seed: 99,
            trials: 40,
        });
        assert!(report.faithful_on_tested(), "{kind:?} over GF({q})");
    }
}

#[test]
fn quotients_at_minimal_nice_subspaces() {
    // parabolic over GF(3): corank 1, so the quotient collapses to a point
    let pg = build_polar(PolarKind::ParabolicQuadric, 2, 3).unwrap();
    let pair = pg.disjoint_maximal_singulars(None);
    let mut seed = pair.first.clone();
    seed.union_with(&pair.second);
    let s = pg.geometry().span(&seed);
    assert!(pg.is_nice(&s).unwrap());
    let quotient = pg.quotient_geometry(&s).unwrap();
    assert_eq!(quotient.geometry.n_points(), 1);
    assert_eq!(
        rank::generating_rank(&quotient.geometry, &Budget::default()).value(),
        Some(1)
    );

    // elliptic over GF(2): corank 2, quotient is a single 3-point line
    let pg = build_polar(PolarKind::EllipticQuadric, 2, 2).unwrap();
    let pair = pg.disjoint_maximal_singulars(None);
    let mut seed = pair.first.clone();
    seed.union_with(&pair.second);
    let s = pg.geometry().span(&seed);
    assert_eq!(s.len(), 9);
    let quotient = pg.quotient_geometry(&s).unwrap();
    assert_eq!(quotient.geometry.n_points(), 3);
    assert_eq!(quotient.geometry.lines().len(), 1);
    let ep = quotient
        .geometry
        .check_exchange_property(EpMode::Exhaustive, &Budget::default())
        .unwrap();
    assert_eq!(ep.status, EpStatus::Holds);
    assert_eq!(
        rank::generating_rank(&quotient.geometry, &Budget::default()).value(),
        Some(2)
    );
}

#[test]
fn quotient_rejects_full_and_non_nice_subspaces() {
    let pg = build_polar(PolarKind::ParabolicQuadric, 2, 3).unwrap();
    let full = pg.geometry().full_set();
    assert!(matches!(
        pg.quotient_geometry(&full),
        Err(geom_core::Error::QuotientOfFullSpace)
    ));
    let single = pg.disjoint_maximal_singulars(None).first;
    assert!(matches!(
        pg.quotient_geometry(&single),
        Err(geom_core::Error::NotNice)
    ));
}

#[test]
fn symplectic_odd_order_pair_spans_everything() {
    // over GF(3) the two disjoint lines already generate, so the minimal
    // nice subspace is the full point set and the quotient is degenerate
    let pg = build_polar(PolarKind::Symplectic, 2, 3).unwrap();
    let pair = pg.disjoint_maximal_singulars(None);
    let mut seed = pair.first.clone();
    seed.union_with(&pair.second);
    let s = pg.geometry().span(&seed);
    assert!(s.is_full());
    assert!(matches!(
        pg.quotient_geometry(&s),
        Err(geom_core::Error::QuotientOfFullSpace)
    ));
}

#[test]
fn symplectic_gf5_embedding_shows_no_violation() {
    // corank 0: the only nice subspace is the full set, so sampled probes
    // cannot find a discrepancy
    let pg = build_polar(PolarKind::Symplectic, 2, 5).unwrap();
    let report = pg.check_faithful(FaithfulMode::Sampled {
        seed: 5,
        trials: 10,
    });
    assert!(report.faithful_on_tested());
}

#[test]
fn generating_rank_decomposes_through_the_quotient() {
    // rank = 2·(polar rank) + rank of the quotient at a minimal nice
    // subspace, on the faithful parabolic model over GF(2)
    let pg = build_polar(PolarKind::ParabolicQuadric, 2, 2).unwrap();
    let budget = Budget::default();
    let rk = rank::generating_rank(pg.geometry(), &budget).value().unwrap();
    let pair = pg.disjoint_maximal_singulars(None);
    let mut seed = pair.first.clone();
    seed.union_with(&pair.second);
    let s = pg.geometry().span(&seed);
    let quotient = pg.quotient_geometry(&s).unwrap();
    let quotient_rank = rank::generating_rank(&quotient.geometry, &budget)
        .value()
        .unwrap();
    assert_eq!(rk, 2 * pg.polar_rank(PolarRankMethod::Witt) + quotient_rank);
}

#[test]
fn corank_disagreement_implies_a_faithfulness_violation() {
    for (kind, q) in [
        (PolarKind::Symplectic, 2usize),
        (PolarKind::Symplectic, 3),
        (PolarKind::ParabolicQuadric, 2),
        (PolarKind::ParabolicQuadric, 3),
        (PolarKind::EllipticQuadric, 2),
    ] {
        let pg = build_polar(kind, 2, q).unwrap();
        let chain = pg.corank(CorankMethod::Chain, None).unwrap().value;
        let perp = pg.corank(CorankMethod::Perp, None).unwrap().value;
        let report = pg.check_faithful(FaithfulMode::ExhaustiveMinimal);
        if chain != perp {
            assert!(
                !report.faithful_on_tested(),
                "{kind:?} GF({q}): routes disagree but no violation found"
            );
        }
        if report.faithful_on_tested() {
            assert_eq!(chain, perp, "{kind:?} GF({q})");
        }
    }
}

#[test]
fn embedding_sidecar_is_valid_json() {
    let pg = build_polar(PolarKind::Symplectic, 2, 2).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&pg.embedding_json()).unwrap();
    assert_eq!(doc["q"], 2);
    assert_eq!(doc["dim"], 4);
    assert_eq!(doc["vectors"].as_array().unwrap().len(), 15);
}
