//! Finite classical polar spaces as point-line geometries, together with
//! their natural projective embedding.
//!
//! Points are the singular projective points of a form on V = GF(q)^d,
//! lines the totally singular projective lines; two points are collinear
//! exactly when their vectors are orthogonal. Polar rank is computed both
//! algebraically (Witt splitting of the form) and combinatorially (greedy
//! chain of singular subspaces); the corank — how far two disjoint maximal
//! singular subspaces fall short of generating — is computed by a greedy
//! chain of nice subspaces and, independently, as the dimension of the
//! orthogonal complement of their joint linear span. The two agree exactly
//! when the embedding is faithful, which `check_faithful` probes directly.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::chains::Chain;
use crate::error::{Error, Result};
use crate::gallery::{normalize_projective, projective_points};
use crate::geometry::Geometry;
use crate::gf::field::Field;
use crate::gf::forms::{Form, QuadKind};
use crate::gf::linalg::Subspace;
use crate::pointset::PointSet;

/// Default cap on the number of singular points of one build.
pub const POLAR_POINT_CAP: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolarKind {
    Symplectic,
    ParabolicQuadric,
    HyperbolicQuadric,
    EllipticQuadric,
    #[cfg(feature = "hermitian")]
    Hermitian,
}

impl PolarKind {
    pub fn label(&self) -> &'static str {
        match self {
            PolarKind::Symplectic => "sp",
            PolarKind::ParabolicQuadric => "o-par",
            PolarKind::HyperbolicQuadric => "o-plus",
            PolarKind::EllipticQuadric => "o-minus",
            #[cfg(feature = "hermitian")]
            PolarKind::Hermitian => "herm",
        }
    }
}

pub struct PolarGeometry {
    kind: PolarKind,
    rank_param: usize,
    q: usize,
    geometry: Geometry,
    embedding: Vec<Vec<u8>>,
    vec_to_point: HashMap<Vec<u8>, usize>,
    form: Form,
    prk: usize,
    canonical_pair: MaximalPair,
}

/// Two disjoint maximal singular subspaces together with their linear spans.
#[derive(Clone, Debug)]
pub struct MaximalPair {
    pub first: PointSet,
    pub second: PointSet,
    pub span_first: Subspace,
    pub span_second: Subspace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolarRankMethod {
    Witt,
    Chain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorankMethod {
    Chain,
    Perp,
}

/// Outcome of a corank computation, with the pair used and the witness
/// (a chain of nice subspaces or the orthogonal complement).
#[derive(Debug)]
pub struct CorankReport {
    pub method: CorankMethod,
    pub value: usize,
    pub pair: MaximalPair,
    pub chain: Option<Chain>,
    pub perp: Option<Subspace>,
}

pub fn build_polar(kind: PolarKind, n: usize, q: usize) -> Result<PolarGeometry> {
    build_polar_capped(kind, n, q, POLAR_POINT_CAP)
}

pub fn build_polar_capped(
    kind: PolarKind,
    n: usize,
    q: usize,
    cap: usize,
) -> Result<PolarGeometry> {
    if n < 1 {
        return Err(Error::UnsupportedParameter(format!(
            "polar rank parameter must be at least 1, got {n}"
        )));
    }
    let field = Field::get(q)?;
    let form = match kind {
        PolarKind::Symplectic => Form::alternating(field, n),
        PolarKind::ParabolicQuadric => Form::quadratic(field, QuadKind::Parabolic, n),
        PolarKind::HyperbolicQuadric => Form::quadratic(field, QuadKind::Hyperbolic, n),
        PolarKind::EllipticQuadric => Form::quadratic(field, QuadKind::Elliptic, n),
        #[cfg(feature = "hermitian")]
        PolarKind::Hermitian => Form::hermitian(field, 2 * n),
    };
    if let Some(expected) = expected_point_count(kind, n, q) {
        if expected > cap {
            return Err(Error::PointCapExceeded {
                points: expected,
                cap,
            });
        }
    }

    let dim = form.dim();
    let singular: Vec<Vec<u8>> = projective_points(field, dim)
        .into_iter()
        .filter(|v| form.is_singular(v))
        .collect();
    if singular.len() > cap {
        return Err(Error::PointCapExceeded {
            points: singular.len(),
            cap,
        });
    }
    if let Some(expected) = expected_point_count(kind, n, q) {
        assert_eq!(singular.len(), expected, "singular point count");
    }
    let vec_to_point: HashMap<Vec<u8>, usize> = singular
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();

    // totally singular lines: orthogonal pairs of singular points; for the
    // quadratic kinds orthogonality already makes the whole projective line
    // singular, so its q + 1 points are all geometry points
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..singular.len() {
        for j in i + 1..singular.len() {
            if form.bilinear(&singular[i], &singular[j]) != 0 {
                continue;
            }
            let mut line = Vec::with_capacity(q + 1);
            for v in crate::gallery::projective_line(field, &singular[i], &singular[j]) {
                let idx = vec_to_point
                    .get(&v)
                    .copied()
                    .expect("points of a totally singular line are singular");
                line.push(idx);
            }
            line.sort_unstable();
            lines.insert(line);
        }
    }
    let geometry = Geometry::build(singular.len(), lines)?;

    let prk = form.witt_index();
    assert_eq!(prk, n, "Witt index matches the rank parameter");

    let canonical_pair = pair_from_decomposition(&form, &singular, &vec_to_point, None);
    let pg = PolarGeometry {
        kind,
        rank_param: n,
        q,
        geometry,
        embedding: singular,
        vec_to_point,
        form,
        prk,
        canonical_pair,
    };
    debug_assert!(pg.pair_is_valid(&pg.canonical_pair));
    Ok(pg)
}

/// Singular projective point counts from the closed-form zero counts of the
/// standard forms; the independent oracle the enumeration is checked
/// against.
pub fn expected_point_count(kind: PolarKind, n: usize, q: usize) -> Option<usize> {
    let qp = |e: u32| q.pow(e);
    let count = match kind {
        PolarKind::Symplectic => (qp(2 * n as u32) - 1) / (q - 1),
        PolarKind::ParabolicQuadric => (qp(2 * n as u32) - 1) / (q - 1),
        PolarKind::HyperbolicQuadric => {
            let m = n as u32;
            (qp(2 * m - 1) + qp(m) - qp(m - 1) - 1) / (q - 1)
        }
        PolarKind::EllipticQuadric => {
            let m = n as u32 + 1;
            (qp(2 * m - 1) - qp(m) + qp(m - 1) - 1) / (q - 1)
        }
        #[cfg(feature = "hermitian")]
        PolarKind::Hermitian => return None,
    };
    Some(count)
}

fn pair_from_decomposition(
    form: &Form,
    singular: &[Vec<u8>],
    vec_to_point: &HashMap<Vec<u8>, usize>,
    seed: Option<u64>,
) -> MaximalPair {
    let field = form.field();
    let dec = form.decompose(seed);
    let firsts: Vec<Vec<u8>> = dec.pairs.iter().map(|(v, _)| v.clone()).collect();
    let seconds: Vec<Vec<u8>> = dec.pairs.iter().map(|(_, w)| w.clone()).collect();
    let span_first = Subspace::span(field, form.dim(), &firsts).expect("splitting vectors");
    let span_second = Subspace::span(field, form.dim(), &seconds).expect("splitting vectors");
    let n_points = singular.len();
    let points_of = |sub: &Subspace| -> PointSet {
        let mut s = PointSet::empty(n_points);
        for v in sub.vectors(field) {
            if v.iter().any(|&c| c != 0) {
                let idx = vec_to_point[&normalize_projective(field, &v)];
                s.insert(idx);
            }
        }
        s
    };
    MaximalPair {
        first: points_of(&span_first),
        second: points_of(&span_second),
        span_first,
        span_second,
    }
}

impl PolarGeometry {
    pub fn kind(&self) -> PolarKind {
        self.kind
    }

    pub fn rank_param(&self) -> usize {
        self.rank_param
    }

    pub fn field_order(&self) -> usize {
        self.q
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn n_points(&self) -> usize {
        self.geometry.n_points()
    }

    /// Canonical vector of a geometry point (first nonzero coordinate 1).
    pub fn vector_of(&self, point: usize) -> &[u8] {
        &self.embedding[point]
    }

    /// Orthogonality of the embedded vectors; for distinct points this is
    /// collinearity in the geometry.
    pub fn orthogonal(&self, p: usize, r: usize) -> bool {
        self.form
            .bilinear(&self.embedding[p], &self.embedding[r])
            == 0
    }

    /// Polar rank, by the requested route. The Witt route reads the cached
    /// splitting of the form; the chain route grows a chain of singular
    /// subspaces greedily, which is exact because singular subspaces are
    /// projective spaces and so satisfy the exchange property.
    pub fn polar_rank(&self, method: PolarRankMethod) -> usize {
        match method {
            PolarRankMethod::Witt => self.prk,
            PolarRankMethod::Chain => {
                let g = &self.geometry;
                let mut current = g.empty_set();
                let mut steps = 0usize;
                loop {
                    let next = (0..g.n_points()).find(|&p| {
                        !current.contains(p) && current.iter().all(|x| self.orthogonal(p, x))
                    });
                    match next {
                        Some(p) => {
                            current = g.span_with(&current, p);
                            steps += 1;
                        }
                        None => return steps,
                    }
                }
            }
        }
    }

    /// Two disjoint maximal singular subspaces from a (possibly seeded)
    /// Witt splitting of the form.
    pub fn disjoint_maximal_singulars(&self, seed: Option<u64>) -> MaximalPair {
        match seed {
            None => self.canonical_pair.clone(),
            Some(_) => {
                let pair =
                    pair_from_decomposition(&self.form, &self.embedding, &self.vec_to_point, seed);
                debug_assert!(self.pair_is_valid(&pair));
                pair
            }
        }
    }

    /// Disjointness, total singularity, and maximality of a candidate pair.
    pub fn pair_is_valid(&self, pair: &MaximalPair) -> bool {
        let disjoint = pair.first.intersection_len(&pair.second) == 0;
        let singular = |s: &PointSet| {
            s.iter()
                .all(|p| s.iter().all(|r| p == r || self.orthogonal(p, r)))
        };
        let maximal = |s: &PointSet| {
            s.complement_iter().all(|p| s.iter().any(|x| !self.orthogonal(p, x)))
        };
        disjoint
            && singular(&pair.first)
            && singular(&pair.second)
            && maximal(&pair.first)
            && maximal(&pair.second)
            && self.geometry.is_subspace(&pair.first)
            && self.geometry.is_subspace(&pair.second)
    }

    /// Linear span of the embedded vectors of a point set.
    pub fn linear_span_of(&self, s: &PointSet) -> Subspace {
        let rows: Vec<Vec<u8>> = s.iter().map(|p| self.embedding[p].clone()).collect();
        Subspace::span(self.form.field(), self.form.dim(), &rows).expect("embedding widths agree")
    }

    /// The points whose vectors lie in the given linear subspace: the
    /// pullback `e⁻¹([...])`.
    pub fn pullback(&self, sub: &Subspace) -> PointSet {
        let mut s = PointSet::empty(self.n_points());
        let field = self.form.field();
        for p in 0..self.n_points() {
            if sub.contains(field, &self.embedding[p]) {
                s.insert(p);
            }
        }
        s
    }

    /// Whether the subspace contains two disjoint maximal singular
    /// subspaces. Decided in stages: containment of the canonical pair, the
    /// algebraic necessary condition (the restriction of the form to the
    /// linear span of `s` must split `prk` hyperbolic pairs), the pair
    /// manufactured by that splitting if its points land inside `s`, and
    /// finally a direct combinatorial search inside `s`.
    pub fn is_nice(&self, s: &PointSet) -> Result<bool> {
        if !self.geometry.is_subspace(s) {
            return Err(Error::NotASubspace);
        }
        let pair = &self.canonical_pair;
        if pair.first.is_subset(s) && pair.second.is_subset(s) {
            return Ok(true);
        }

        let field = self.form.field();
        let w = self.linear_span_of(s);
        let dec = self.form.decompose_within(&w, None);
        if dec.pairs.len() < self.prk {
            return Ok(false);
        }
        let firsts: Vec<Vec<u8>> = dec.pairs.iter().map(|(v, _)| v.clone()).collect();
        let seconds: Vec<Vec<u8>> = dec.pairs.iter().map(|(_, w)| w.clone()).collect();
        let span_first =
            Subspace::span(field, self.form.dim(), &firsts[..self.prk]).expect("widths");
        let span_second =
            Subspace::span(field, self.form.dim(), &seconds[..self.prk]).expect("widths");
        let inside = |sub: &Subspace| -> bool {
            sub.vectors(field)
                .iter()
                .filter(|v| v.iter().any(|&c| c != 0))
                .all(|v| {
                    let idx = self.vec_to_point[&normalize_projective(field, v)];
                    s.contains(idx)
                })
        };
        if inside(&span_first) && inside(&span_second) {
            return Ok(true);
        }
        Ok(self.disjoint_maximals_inside(s))
    }

    /// Direct search: enumerate the maximal singular subspaces whose points
    /// lie inside `s` and look for a disjoint pair.
    fn disjoint_maximals_inside(&self, s: &PointSet) -> bool {
        let maximals = self.maximal_singulars_within(s);
        for (i, a) in maximals.iter().enumerate() {
            for b in maximals.iter().skip(i + 1) {
                if a.intersection_len(b) == 0 {
                    return true;
                }
            }
        }
        false
    }

    /// All maximal singular subspaces of the geometry contained in `s`.
    /// For rank 2 these are lines; in general they are grown by adjoining
    /// points collinear with everything so far.
    pub fn maximal_singulars_within(&self, s: &PointSet) -> Vec<PointSet> {
        let target = (self.q.pow(self.prk as u32) - 1) / (self.q - 1);
        let mut found: BTreeSet<PointSet> = BTreeSet::new();
        let mut seen: HashSet<PointSet> = HashSet::new();
        let mut stack: Vec<PointSet> = Vec::new();
        for p in s.iter() {
            stack.push(PointSet::from_points(self.n_points(), [p]));
        }
        while let Some(current) = stack.pop() {
            if !seen.insert(current.clone()) {
                continue;
            }
            if current.len() == target {
                found.insert(current);
                continue;
            }
            for p in s.iter() {
                if current.contains(p) {
                    continue;
                }
                if current.iter().all(|x| self.orthogonal(p, x)) {
                    // the span stays within s because s is a subspace
                    stack.push(self.geometry.span_with(&current, p));
                }
            }
        }
        found.into_iter().collect()
    }

    /// The quotient at a nice proper subspace `s`: points are the distinct
    /// subspaces `span(s ∪ {x})`, and the line joining two of them consists
    /// of the classes met by `span(s ∪ {x, y})`.
    pub fn quotient_geometry(&self, s: &PointSet) -> Result<QuotientGeometry> {
        if s.is_full() {
            return Err(Error::QuotientOfFullSpace);
        }
        if !self.is_nice(s)? {
            return Err(Error::NotNice);
        }
        let g = &self.geometry;
        let mut class_index: BTreeMap<PointSet, usize> = BTreeMap::new();
        let mut reps: Vec<usize> = Vec::new();
        let mut class_of_point: Vec<Option<usize>> = vec![None; g.n_points()];
        for x in s.complement_iter() {
            let t = g.span_with(s, x);
            let next_index = class_index.len();
            let idx = *class_index.entry(t).or_insert_with(|| {
                reps.push(x);
                next_index
            });
            class_of_point[x] = Some(idx);
        }

        let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
        for qi in 0..reps.len() {
            let ti = g.span_with(s, reps[qi]);
            for qj in qi + 1..reps.len() {
                let joint = g.span_with(&ti, reps[qj]);
                let classes: BTreeSet<usize> = joint
                    .iter()
                    .filter(|&z| !s.contains(z))
                    .map(|z| class_of_point[z].expect("z outside s has a class"))
                    .collect();
                if classes.len() >= 2 {
                    lines.insert(classes.into_iter().collect());
                }
            }
        }
        let geometry = Geometry::build(reps.len(), lines)?;
        Ok(QuotientGeometry {
            geometry,
            reps,
            class_of_point,
        })
    }

    /// Corank of the geometry relative to a pair of disjoint maximal
    /// singular subspaces. The chain route grows nice subspaces greedily
    /// from `span(first ∪ second)` to the full set; the perp route takes
    /// the dimension of the orthogonal complement of the pair's joint
    /// linear span. Under a faithful embedding the two agree.
    pub fn corank(&self, method: CorankMethod, seed: Option<u64>) -> Result<CorankReport> {
        if self.prk < 2 {
            return Err(Error::DegenerateRank { prk: self.prk });
        }
        let pair = self.disjoint_maximal_singulars(seed);
        match method {
            CorankMethod::Perp => {
                let field = self.form.field();
                let joint = Subspace::sum(field, &pair.span_first, &pair.span_second);
                let perp = self.form.perp_of(&joint);
                Ok(CorankReport {
                    method,
                    value: perp.dim(),
                    pair,
                    chain: None,
                    perp: Some(perp),
                })
            }
            CorankMethod::Chain => {
                let g = &self.geometry;
                let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
                let mut seed_set = pair.first.clone();
                seed_set.union_with(&pair.second);
                let mut current = g.span(&seed_set);
                let mut members = vec![current.clone()];
                while !current.is_full() {
                    let outside: Vec<usize> = current.complement_iter().collect();
                    let x = match rng.as_mut() {
                        None => outside[0],
                        Some(r) => outside[r.gen_range(0..outside.len())],
                    };
                    current = g.span_with(&current, x);
                    members.push(current.clone());
                }
                let chain = Chain::new(g, members)?;
                debug_assert!(chain
                    .members()
                    .iter()
                    .all(|m| self.is_nice(m).unwrap_or(false)));
                Ok(CorankReport {
                    method,
                    value: chain.len(),
                    pair,
                    chain: Some(chain),
                    perp: None,
                })
            }
        }
    }

    /// Probes faithfulness of the natural embedding: for nice subspaces
    /// `s = span(first ∪ second ∪ extra)` it compares `s` against the
    /// pullback of its linear span. Equality for all nice subspaces is
    /// faithfulness; any discrepancy is returned as a violation.
    pub fn check_faithful(&self, mode: FaithfulMode) -> FaithfulnessReport {
        let g = &self.geometry;
        let mut checked_spans: HashSet<PointSet> = HashSet::new();
        let mut violations: Vec<FaithfulnessViolation> = Vec::new();
        let mut examine = |s: PointSet, violations: &mut Vec<FaithfulnessViolation>| {
            if !checked_spans.insert(s.clone()) {
                return;
            }
            let pullback = self.pullback(&self.linear_span_of(&s));
            if pullback != s {
                violations.push(FaithfulnessViolation { nice: s, pullback });
            }
        };

        let checked = match mode {
            FaithfulMode::ExhaustiveMinimal => {
                let maximals = self.maximal_singulars_within(&g.full_set());
                let mut count = 0usize;
                for (i, a) in maximals.iter().enumerate() {
                    for b in maximals.iter().skip(i + 1) {
                        if a.intersection_len(b) != 0 {
                            continue;
                        }
                        let mut seed_set = a.clone();
                        seed_set.union_with(b);
                        examine(g.span(&seed_set), &mut violations);
                        count += 1;
                    }
                }
                count
            }
            FaithfulMode::Sampled { seed, trials } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..trials {
                    let pair = self.disjoint_maximal_singulars(Some(rng.gen()));
                    let mut seed_set = pair.first.clone();
                    seed_set.union_with(&pair.second);
                    let mut s = g.span(&seed_set);
                    let extra = rng.gen_range(0..=2usize);
                    for _ in 0..extra {
                        if s.is_full() {
                            break;
                        }
                        let outside: Vec<usize> = s.complement_iter().collect();
                        let x = outside[rng.gen_range(0..outside.len())];
                        s = g.span_with(&s, x);
                    }
                    examine(s, &mut violations);
                }
                trials as usize
            }
        };
        FaithfulnessReport {
            checked,
            distinct_subspaces: checked_spans.len(),
            violations,
        }
    }

    /// Sidecar description of the embedding: field tag plus the canonical
    /// vector of every point.
    pub fn embedding_json(&self) -> String {
        let doc = json!({
            "q": self.q,
            "poly": self.form.field().polynomial(),
            "dim": self.form.dim(),
            "kind": self.kind.label(),
            "rank": self.rank_param,
            "vectors": self.embedding,
        });
        serde_json::to_string(&doc).expect("embedding serializes")
    }

    pub fn corank_report_json(&self, report: &CorankReport) -> Value {
        json!({
            "method": match report.method {
                CorankMethod::Chain => "chain",
                CorankMethod::Perp => "perp",
            },
            "value": report.value,
            "m": report.pair.first.to_vec(),
            "m_prime": report.pair.second.to_vec(),
            "chain_members": report.chain.as_ref().map(|c| {
                c.members().iter().map(|m| m.to_vec()).collect::<Vec<_>>()
            }),
            "perp_dim": report.perp.as_ref().map(|p| p.dim()),
        })
    }
}

/// The quotient geometry at a nice subspace, with the representative point
/// of each class and the class of every point outside the subspace.
pub struct QuotientGeometry {
    pub geometry: Geometry,
    pub reps: Vec<usize>,
    pub class_of_point: Vec<Option<usize>>,
}

#[derive(Clone, Copy, Debug)]
pub enum FaithfulMode {
    /// Every minimal nice subspace: spans of all disjoint pairs of maximal
    /// singular subspaces.
    ExhaustiveMinimal,
    /// Seeded random pairs, each optionally extended by a few points.
    Sampled { seed: u64, trials: u32 },
}

#[derive(Clone, Debug)]
pub struct FaithfulnessViolation {
    pub nice: PointSet,
    pub pullback: PointSet,
}

#[derive(Clone, Debug)]
pub struct FaithfulnessReport {
    pub checked: usize,
    pub distinct_subspaces: usize,
    pub violations: Vec<FaithfulnessViolation>,
}

impl FaithfulnessReport {
    pub fn faithful_on_tested(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp42_counts() {
        let pg = build_polar(PolarKind::Symplectic, 2, 2).unwrap();
        assert_eq!(pg.n_points(), 15);
        assert_eq!(pg.geometry().lines().len(), 15);
        assert!(pg.geometry().lines().iter().all(|l| l.len() == 3));
    }

    #[test]
    fn sp45_counts() {
        let pg = build_polar(PolarKind::Symplectic, 2, 5).unwrap();
        assert_eq!(pg.n_points(), 156);
        assert_eq!(pg.geometry().lines().len(), 156);
    }

    #[test]
    fn elliptic_52_counts() {
        let pg = build_polar(PolarKind::EllipticQuadric, 2, 2).unwrap();
        assert_eq!(pg.n_points(), 27);
        assert_eq!(pg.geometry().lines().len(), 45);
    }

    #[test]
    fn parabolic_43_counts() {
        let pg = build_polar(PolarKind::ParabolicQuadric, 2, 3).unwrap();
        assert_eq!(pg.n_points(), 40);
        assert_eq!(pg.geometry().lines().len(), 40);
    }

    #[test]
    fn hyperbolic_32_is_a_grid() {
        let pg = build_polar(PolarKind::HyperbolicQuadric, 2, 2).unwrap();
        assert_eq!(pg.n_points(), 9);
        assert_eq!(pg.geometry().lines().len(), 6);
    }

    #[test]
    fn rank_routes_agree_on_sp42() {
        let pg = build_polar(PolarKind::Symplectic, 2, 2).unwrap();
        assert_eq!(pg.polar_rank(PolarRankMethod::Witt), 2);
        assert_eq!(pg.polar_rank(PolarRankMethod::Chain), 2);
    }

    #[test]
    fn collinearity_matches_orthogonality() {
        let pg = build_polar(PolarKind::ParabolicQuadric, 2, 3).unwrap();
        let g = pg.geometry();
        for p in 0..pg.n_points() {
            for r in p + 1..pg.n_points() {
                assert_eq!(g.collinear(p, r), pg.orthogonal(p, r));
            }
        }
    }

    #[test]
    fn canonical_pair_is_valid_and_disjoint() {
        for (kind, n, q) in [
            (PolarKind::Symplectic, 2, 2),
            (PolarKind::Symplectic, 2, 3),
            (PolarKind::ParabolicQuadric, 2, 3),
            (PolarKind::EllipticQuadric, 2, 2),
        ] {
            let pg = build_polar(kind, n, q).unwrap();
            let pair = pg.disjoint_maximal_singulars(None);
            assert!(pg.pair_is_valid(&pair), "{kind:?} over GF({q})");
            let expected = (q.pow(n as u32) - 1) / (q - 1);
            assert_eq!(pair.first.len(), expected);
            assert_eq!(pair.second.len(), expected);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            build_polar_capped(PolarKind::Symplectic, 3, 5, 2000),
            Err(Error::PointCapExceeded { .. })
        ));
    }

    #[test]
    fn corank_requires_rank_two() {
        let pg = build_polar(PolarKind::Symplectic, 1, 3).unwrap();
        assert!(matches!(
            pg.corank(CorankMethod::Perp, None),
            Err(Error::DegenerateRank { prk: 1 })
        ));
    }

    #[test]
    fn full_set_is_nice_single_maximal_is_not() {
        let pg = build_polar(PolarKind::Symplectic, 2, 2).unwrap();
        let full = pg.geometry().full_set();
        assert!(pg.is_nice(&full).unwrap());
        let pair = pg.disjoint_maximal_singulars(None);
        assert!(!pg.is_nice(&pair.first).unwrap());
        // two points of a 3-point line do not form a subspace
        let line = &pg.geometry().lines()[0];
        let two: Vec<usize> = line.iter().take(2).collect();
        let not_subspace = PointSet::from_points(pg.n_points(), two);
        assert!(matches!(pg.is_nice(&not_subspace), Err(Error::NotASubspace)));
    }
}
