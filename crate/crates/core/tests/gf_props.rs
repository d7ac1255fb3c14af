//! Properties of the field tables, the canonical linear algebra, and the
//! form machinery.

use proptest::prelude::*;

use geom_core::gf::field::{Field, SUPPORTED_ORDERS};
use geom_core::gf::forms::{Form, QuadKind};
use geom_core::gf::linalg::Subspace;

fn random_vectors(q: usize, dim: usize, seed: u64, count: usize) -> Vec<Vec<u8>> {
    // tiny deterministic generator; proptest drives the seed
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count)
        .map(|_| (0..dim).map(|_| (next() % q as u64) as u8).collect())
        .collect()
}

#[test]
fn every_supported_field_constructs() {
    // construction itself runs the exhaustive axiom check
    for q in SUPPORTED_ORDERS {
        let f = Field::get(q).unwrap();
        assert_eq!(f.order(), q);
        assert_eq!(f.elements().count(), q);
    }
}

#[test]
fn alternating_witt_index_for_all_orders() {
    for q in SUPPORTED_ORDERS {
        let f = Field::get(q).unwrap();
        for n in 1..=3 {
            assert_eq!(Form::alternating(f, n).witt_index(), n, "n={n} over GF({q})");
        }
    }
}

#[test]
fn quadratic_witt_indices_follow_the_kind() {
    for q in [2usize, 3, 4, 5] {
        let f = Field::get(q).unwrap();
        for n in 1..=2 {
            assert_eq!(Form::quadratic(f, QuadKind::Hyperbolic, n).witt_index(), n);
            assert_eq!(Form::quadratic(f, QuadKind::Parabolic, n).witt_index(), n);
            assert_eq!(Form::quadratic(f, QuadKind::Elliptic, n).witt_index(), n);
        }
    }
}

#[test]
fn decomposition_pairs_pair_up_correctly() {
    let f = Field::get(3).unwrap();
    let form = Form::quadratic(f, QuadKind::Elliptic, 2);
    let dec = form.decompose(None);
    for (i, (v, w)) in dec.pairs.iter().enumerate() {
        assert!(form.is_singular(v));
        assert!(form.is_singular(w));
        assert_eq!(form.bilinear(v, w), 1);
        for (j, (v2, w2)) in dec.pairs.iter().enumerate() {
            if i != j {
                assert_eq!(form.bilinear(v, v2), 0);
                assert_eq!(form.bilinear(v, w2), 0);
                assert_eq!(form.bilinear(w, v2), 0);
                assert_eq!(form.bilinear(w, w2), 0);
            }
        }
    }
    // the residual is anisotropic: no nonzero singular vectors
    for v in dec.residual.vectors(f) {
        if v.iter().any(|&c| c != 0) {
            assert!(!form.is_singular(&v));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sum_and_intersection_satisfy_the_dimension_formula(seed in any::<u64>()) {
        let f = Field::get(3).unwrap();
        let dim = 5;
        let vs = random_vectors(3, dim, seed, 6);
        let a = Subspace::span(f, dim, &vs[..3]).unwrap();
        let b = Subspace::span(f, dim, &vs[3..]).unwrap();
        let sum = Subspace::sum(f, &a, &b);
        let inter = Subspace::intersect(f, &a, &b);
        prop_assert_eq!(a.dim() + b.dim(), sum.dim() + inter.dim());
        // the intersection lies inside both
        for v in inter.basis_rows() {
            prop_assert!(a.contains(f, &v));
            prop_assert!(b.contains(f, &v));
        }
    }

    #[test]
    fn double_perp_restores_nondegenerate_subspaces(seed in any::<u64>(), q_pick in 0usize..3) {
        let q = [2usize, 3, 5][q_pick];
        let f = Field::get(q).unwrap();
        let form = Form::alternating(f, 2);
        let vs = random_vectors(q, 4, seed, 2);
        let w = Subspace::span(f, 4, &vs).unwrap();
        let back = form.perp_of(&form.perp_of(&w));
        prop_assert_eq!(back, w.clone());
        prop_assert_eq!(w.dim() + form.perp_of(&w).dim(), 4);
    }

    #[test]
    fn quadratic_bilinear_identity_sampled(seed in any::<u64>(), q_pick in 0usize..2) {
        let q = [4usize, 5][q_pick];
        let f = Field::get(q).unwrap();
        let form = Form::quadratic(f, QuadKind::Parabolic, 2);
        let vs = random_vectors(q, form.dim(), seed, 2);
        let (u, v) = (&vs[0], &vs[1]);
        let sum: Vec<u8> = u.iter().zip(v).map(|(&a, &b)| f.add(a, b)).collect();
        let lhs = form.bilinear(u, v);
        let rhs = f.sub(
            f.sub(form.eval_quad(&sum).unwrap(), form.eval_quad(u).unwrap()),
            form.eval_quad(v).unwrap(),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_respects_span(seed in any::<u64>()) {
        let f = Field::get(2).unwrap();
        let dim = 6;
        let vs = random_vectors(2, dim, seed, 3);
        let s = Subspace::span(f, dim, &vs).unwrap();
        for v in &vs {
            prop_assert!(s.contains(f, v));
        }
        prop_assert_eq!(s.vectors(f).len(), 1usize << s.dim());
    }
}

#[cfg(feature = "hermitian")]
#[test]
fn hermitian_form_splits_pairs() {
    let f = Field::get(4).unwrap();
    let form = Form::hermitian(f, 4);
    assert_eq!(form.witt_index(), 2);
}
