//! Seeded random geometries for fuzz campaigns and property tests.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::Geometry;

/// A geometry with up to `max_points` points and up to `max_lines` random
/// lines of 2 to 4 points. Deterministic for a given generator state.
pub fn random_geometry(rng: &mut ChaCha8Rng, max_points: usize, max_lines: usize) -> Geometry {
    let n = rng.gen_range(1..=max_points.max(1));
    let mut lines: Vec<Vec<usize>> = Vec::new();
    if n >= 2 {
        let count = rng.gen_range(0..=max_lines);
        for _ in 0..count {
            let size = rng.gen_range(2..=4usize.min(n));
            let mut points: Vec<usize> = (0..n).collect();
            points.shuffle(rng);
            points.truncate(size);
            lines.push(points);
        }
    }
    Geometry::build(n, lines).expect("random lines are valid by construction")
}
