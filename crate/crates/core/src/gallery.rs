//! Ready-made geometries: the hub-and-halves construction `example2`, the
//! Fano plane, and projective spaces PG(d, q) built from the linear algebra
//! layer.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::gf::field::Field;

/// Cap on the number of points a projective-space build may produce.
pub const PG_POINT_CAP: usize = 10_000;

/// A geometry on `2n + 1` points with a hub `a = 0` and two halves
/// `B = 1..=n`, `C = n+1..=2n` paired by `b_i ↦ c_i`. Lines: `B` itself,
/// the triples `{a, b_i, c_i}`, the pairs `{b_i, c_j}` for `j ≠ i`, and all
/// pairs inside `C`. Its generating rank is 3 while `C` is a maximal
/// independent set of size `n`, so the exchange property fails and the
/// longest chain has length `n + 1`.
pub fn example2(n: usize) -> Result<Geometry> {
    if n < 3 {
        return Err(Error::UnsupportedParameter(format!(
            "example2 needs n >= 3, got {n}"
        )));
    }
    let mut lines: Vec<Vec<usize>> = Vec::new();
    lines.push((1..=n).collect()); // the half B is a line
    for i in 1..=n {
        lines.push(vec![0, i, n + i]); // hub triples {a, b_i, c_i}
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                lines.push(vec![i, n + j]); // cross pairs avoid the partner
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            lines.push(vec![n + i, n + j]); // all pairs inside C
        }
    }
    Geometry::build(2 * n + 1, lines)
}

/// The hub point of [`example2`].
pub const EXAMPLE2_HUB: usize = 0;

/// Points of the half `B` of [`example2`].
pub fn example2_b_points(n: usize) -> std::ops::RangeInclusive<usize> {
    1..=n
}

/// Points of the half `C` of [`example2`].
pub fn example2_c_points(n: usize) -> std::ops::RangeInclusive<usize> {
    n + 1..=2 * n
}

/// Number of points of PG(d, q): `(q^(d+1) - 1) / (q - 1)`.
pub fn pg_point_count(d: usize, q: usize) -> usize {
    (q.pow(d as u32 + 1) - 1) / (q - 1)
}

/// Projective space PG(d, q) as a point-line geometry: points are the
/// 1-dimensional subspaces of a `(d+1)`-dimensional vector space over
/// GF(q), lines the point sets of the 2-dimensional subspaces.
pub fn projective_space(d: usize, q: usize) -> Result<Geometry> {
    if d < 1 {
        return Err(Error::UnsupportedParameter(format!(
            "projective dimension must be at least 1, got {d}"
        )));
    }
    let field = Field::get(q)?;
    let expected = pg_point_count(d, q);
    if expected > PG_POINT_CAP {
        return Err(Error::PointCapExceeded {
            points: expected,
            cap: PG_POINT_CAP,
        });
    }
    let dim = d + 1;
    let points = projective_points(field, dim);
    assert_eq!(points.len(), expected, "projective point count");
    let index: HashMap<Vec<u8>, usize> = points
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();

    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let mut line: Vec<usize> = projective_line(field, &points[i], &points[j])
                .into_iter()
                .map(|v| index[&v])
                .collect();
            line.sort_unstable();
            lines.insert(line);
        }
    }
    Geometry::build(expected, lines)
}

/// The Fano plane PG(2, 2): 7 points, 7 lines of 3 points.
pub fn fano() -> Geometry {
    projective_space(2, 2).expect("PG(2,2) is supported")
}

/// Canonical representatives of the projective points: vectors whose first
/// nonzero coordinate is 1, in lexicographic coordinate order.
pub fn projective_points(field: &Field, dim: usize) -> Vec<Vec<u8>> {
    let q = field.order();
    let mut out = Vec::new();
    let mut v = vec![0u8; dim];
    loop {
        // advance the odometer, last coordinate fastest
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            v[i] += 1;
            if (v[i] as usize) < q {
                break;
            }
            v[i] = 0;
        }
        if let Some(first) = v.iter().position(|&c| c != 0) {
            if v[first] == 1 {
                out.push(v.clone());
            }
        }
    }
}

/// Normalizes a nonzero vector to its canonical projective representative.
pub fn normalize_projective(field: &Field, v: &[u8]) -> Vec<u8> {
    let first = v
        .iter()
        .position(|&c| c != 0)
        .expect("projective points are nonzero");
    let scale = field.inv(v[first]);
    v.iter().map(|&c| field.mul(c, scale)).collect()
}

/// The `q + 1` canonical points of the projective line through `u` and `v`.
pub fn projective_line(field: &Field, u: &[u8], v: &[u8]) -> Vec<Vec<u8>> {
    let mut pts = vec![normalize_projective(field, u)];
    for lambda in field.elements() {
        let w: Vec<u8> = u
            .iter()
            .zip(v)
            .map(|(&uc, &vc)| field.add(field.mul(lambda, uc), vc))
            .collect();
        pts.push(normalize_projective(field, &w));
    }
    pts.sort();
    pts.dedup();
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointset::PointSet;

    #[test]
    fn example2_rejects_degenerate_sizes() {
        assert!(matches!(
            example2(2),
            Err(Error::UnsupportedParameter(_))
        ));
    }

    #[test]
    fn example2_counts() {
        // n = 3: one line B, 3 triples, 6 cross pairs, 3 pairs in C
        let g = example2(3).unwrap();
        assert_eq!(g.n_points(), 7);
        assert_eq!(g.lines().len(), 13);
        let g4 = example2(4).unwrap();
        assert_eq!(g4.n_points(), 9);
        let n = 4;
        assert_eq!(g4.lines().len(), 1 + n + n * (n - 1) + n * (n - 1) / 2);
    }

    #[test]
    fn example2_span_of_hub_triple_seed() {
        // {a, b_1} closes to the triple {a, b_1, c_1} and nothing more
        let g = example2(4).unwrap();
        let s = g.span(&PointSet::from_points(9, [0, 1]));
        assert_eq!(s.to_vec(), vec![0, 1, 5]);
    }

    #[test]
    fn example2_c_is_a_subspace() {
        let n = 4;
        let g = example2(n).unwrap();
        let c = PointSet::from_points(2 * n + 1, example2_c_points(n));
        assert!(g.is_subspace(&c));
        assert!(!crate::rank::is_generating(&g, &c));
    }

    #[test]
    fn fano_shape() {
        let g = fano();
        assert_eq!(g.n_points(), 7);
        assert_eq!(g.lines().len(), 7);
        assert!(g.lines().iter().all(|l| l.len() == 3));
        // every point lies on exactly 3 lines
        for p in 0..7 {
            assert_eq!(g.lines_through(p).len(), 3);
        }
        // any two points lie on exactly one common line
        for p in 0..7 {
            for q in p + 1..7 {
                let common = g
                    .lines()
                    .iter()
                    .filter(|l| l.contains(p) && l.contains(q))
                    .count();
                assert_eq!(common, 1);
            }
        }
    }

    #[test]
    fn fano_span_of_two_points_is_their_line() {
        let g = fano();
        for p in 0..7 {
            for q in p + 1..7 {
                let s = g.span(&PointSet::from_points(7, [p, q]));
                assert_eq!(s.len(), 3);
                assert!(g.lines().contains(&s));
            }
        }
    }

    #[test]
    fn pg32_counts() {
        let g = projective_space(3, 2).unwrap();
        assert_eq!(g.n_points(), 15);
        assert_eq!(g.lines().len(), 35);
    }

    #[test]
    fn pg23_counts() {
        let g = projective_space(2, 3).unwrap();
        assert_eq!(g.n_points(), 13);
        assert_eq!(g.lines().len(), 13);
        assert!(g.lines().iter().all(|l| l.len() == 4));
    }

    #[test]
    fn pg_respects_point_cap() {
        assert!(matches!(
            projective_space(7, 9),
            Err(Error::PointCapExceeded { .. })
        ));
    }
}
