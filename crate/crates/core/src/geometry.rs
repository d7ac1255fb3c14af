//! The geometry data model: a point universe plus a deduplicated, canonically
//! ordered family of lines, each of size at least 2.
//!
//! Construction normalizes the line list (each line an ascending point set,
//! lines sorted in canonical set order) so all downstream tie-breaking is
//! deterministic, and keeps a point-to-lines index for the closure fixpoint.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::PointSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geometry {
    n_points: usize,
    lines: Vec<PointSet>,
    point_to_lines: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct GeometryJson {
    points: usize,
    lines: Vec<Vec<usize>>,
}

impl Geometry {
    /// Validates and normalizes the line list: duplicate lines (as sets) are
    /// merged, lines with fewer than 2 distinct points or out-of-range
    /// indices are rejected.
    pub fn build<L, P>(n_points: usize, lines: L) -> Result<Geometry>
    where
        L: IntoIterator<Item = P>,
        P: IntoIterator<Item = usize>,
    {
        if n_points == 0 {
            return Err(Error::EmptyGeometry);
        }
        let mut canonical: BTreeSet<PointSet> = BTreeSet::new();
        for (index, line) in lines.into_iter().enumerate() {
            let mut set = PointSet::empty(n_points);
            for point in line {
                if point >= n_points {
                    return Err(Error::InvalidPoint {
                        line: index,
                        point,
                        n_points,
                    });
                }
                set.insert(point);
            }
            let size = set.len();
            if size < 2 {
                return Err(Error::InvalidLine { index, size });
            }
            canonical.insert(set);
        }
        let lines: Vec<PointSet> = canonical.into_iter().collect();
        let mut point_to_lines = vec![Vec::new(); n_points];
        for (li, line) in lines.iter().enumerate() {
            for p in line.iter() {
                point_to_lines[p].push(li as u32);
            }
        }
        Ok(Geometry {
            n_points,
            lines,
            point_to_lines,
        })
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn lines(&self) -> &[PointSet] {
        &self.lines
    }

    pub fn lines_through(&self, p: usize) -> &[u32] {
        &self.point_to_lines[p]
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.n_points)
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.n_points)
    }

    /// Two distinct points are collinear when some line contains both.
    pub fn collinear(&self, p: usize, q: usize) -> bool {
        self.point_to_lines[p]
            .iter()
            .any(|&li| self.lines[li as usize].contains(q))
    }

    /// Checks that the point index is bidirectionally consistent with the
    /// line list. Construction guarantees this; exposed for tests.
    pub fn index_consistent(&self) -> bool {
        let forward = self.lines.iter().enumerate().all(|(li, line)| {
            line.iter()
                .all(|p| self.point_to_lines[p].contains(&(li as u32)))
        });
        let backward = self.point_to_lines.iter().enumerate().all(|(p, lis)| {
            lis.iter().all(|&li| self.lines[li as usize].contains(p))
        });
        forward && backward
    }

    pub fn to_json(&self) -> String {
        let doc = GeometryJson {
            points: self.n_points,
            lines: self.lines.iter().map(|l| l.to_vec()).collect(),
        };
        serde_json::to_string(&doc).expect("geometry serializes")
    }

    pub fn from_json(text: &str) -> Result<Geometry> {
        let doc: GeometryJson = serde_json::from_str(text)?;
        Geometry::build(doc.points, doc.lines)
    }
}

impl Geometry {
    /// Least subspace containing `seed`: the fixpoint of repeatedly adding
    /// every line that meets the current set in at least two points.
    pub fn span(&self, seed: &PointSet) -> PointSet {
        debug_assert_eq!(seed.universe(), self.n_points);
        let mut s = seed.clone();
        let mut queue: Vec<usize> = s.iter().collect();
        self.close_over(&mut s, &mut queue);
        s
    }

    /// Span of `closed ∪ {p}` where `closed` is already a subspace; only
    /// lines through newly added points need re-examination.
    pub fn span_with(&self, closed: &PointSet, p: usize) -> PointSet {
        let mut s = closed.clone();
        if !s.insert(p) {
            return s;
        }
        let mut queue = vec![p];
        self.close_over(&mut s, &mut queue);
        s
    }

    fn close_over(&self, s: &mut PointSet, queue: &mut Vec<usize>) {
        while let Some(p) = queue.pop() {
            for &li in &self.point_to_lines[p] {
                let line = &self.lines[li as usize];
                if line.is_subset(s) {
                    continue;
                }
                if line.intersection_len(s) >= 2 {
                    for q in line.iter() {
                        if s.insert(q) {
                            queue.push(q);
                        }
                    }
                }
            }
        }
    }

    /// True when no line meets `s` in two or more points without being
    /// contained in it; equivalently `span(s) == s`.
    pub fn is_subspace(&self, s: &PointSet) -> bool {
        self.lines
            .iter()
            .all(|line| line.is_subset(s) || line.intersection_len(s) < 2)
    }

    /// The subspaces covering `s`: the minimal elements, under inclusion,
    /// of `{ span(s ∪ {p}) : p ∉ s }`. Any subspace strictly containing `s`
    /// contains one of these, and nothing sits strictly between `s` and a
    /// minimal element, so these are exactly the covers.
    pub fn covers(&self, s: &PointSet) -> Result<Vec<PointSet>> {
        if !self.is_subspace(s) {
            return Err(Error::NotASubspace);
        }
        let mut candidates: BTreeSet<PointSet> = BTreeSet::new();
        for p in s.complement_iter() {
            candidates.insert(self.span_with(s, p));
        }
        let list: Vec<PointSet> = candidates.into_iter().collect();
        let minimal: Vec<PointSet> = list
            .iter()
            .filter(|t| !list.iter().any(|u| u.is_proper_subset(t)))
            .cloned()
            .collect();
        Ok(minimal)
    }

    /// `t` covers `s` iff every single-point extension of `s` inside `t`
    /// spans all of `t`. Requires `s` to be a subspace and `s ⊂ t`.
    pub fn is_cover(&self, s: &PointSet, t: &PointSet) -> bool {
        if !s.is_proper_subset(t) {
            return false;
        }
        t.iter()
            .filter(|&p| !s.contains(p))
            .all(|p| &self.span_with(s, p) == t)
    }

    /// Enumerates every subspace, in canonical order. Exponential in the
    /// worst case; intended for small geometries in tests and lattice
    /// searches guarded by budgets.
    pub fn all_subspaces(&self) -> Vec<PointSet> {
        assert!(
            self.n_points <= 20,
            "subspace enumeration is limited to 20 points"
        );
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << self.n_points) {
            let s = PointSet::from_points(
                self.n_points,
                (0..self.n_points).filter(|&p| mask >> p & 1 == 1),
            );
            if self.is_subspace(&s) {
                out.push(s);
            }
        }
        out.sort();
        out
    }
}
