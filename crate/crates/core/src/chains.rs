//! Chains of subspaces: strictly increasing sequences ordered by inclusion.
//!
//! A chain's length is its member count minus one. The module builds chains
//! from ordered independent sets, extracts point sequences back out of
//! chains, condenses the span ladder of an arbitrary generating sequence,
//! computes the longest chain by memoized search over the cover relation,
//! and tests or restores maximality.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::pointset::PointSet;
use crate::rank;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    members: Vec<PointSet>,
}

#[derive(Serialize, Deserialize)]
struct ChainJson {
    members: Vec<Vec<usize>>,
}

impl Chain {
    /// Validates that every member is a subspace and that members strictly
    /// increase. A chain has at least one member; `[∅]` is the shortest.
    pub fn new(g: &Geometry, members: Vec<PointSet>) -> Result<Chain> {
        if members.is_empty() {
            return Err(Error::EmptyChain);
        }
        for (index, m) in members.iter().enumerate() {
            if !g.is_subspace(m) {
                return Err(Error::ChainMemberNotSubspace { index });
            }
        }
        for index in 0..members.len() - 1 {
            if !members[index].is_proper_subset(&members[index + 1]) {
                return Err(Error::ChainNotIncreasing { index });
            }
        }
        Ok(Chain { members })
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false // a valid chain always has at least one member
    }

    pub fn first(&self) -> &PointSet {
        self.members.first().expect("chain is non-empty")
    }

    pub fn last(&self) -> &PointSet {
        self.members.last().expect("chain is non-empty")
    }

    /// True when `other`'s members all appear in `self`.
    pub fn contains_chain(&self, other: &Chain) -> bool {
        other.members.iter().all(|m| self.members.contains(m))
    }

    pub fn to_json(&self) -> String {
        let doc = ChainJson {
            members: self.members.iter().map(|m| m.to_vec()).collect(),
        };
        serde_json::to_string(&doc).expect("chain serializes")
    }

    pub fn from_json(g: &Geometry, text: &str) -> Result<Chain> {
        let doc: ChainJson = serde_json::from_str(text)?;
        let n = g.n_points();
        let mut members = Vec::with_capacity(doc.members.len());
        for raw in doc.members {
            let mut s = PointSet::empty(n);
            for p in raw {
                if p >= n {
                    return Err(Error::PointOutOfRange {
                        point: p,
                        n_points: n,
                    });
                }
                s.insert(p);
            }
            members.push(s);
        }
        Chain::new(g, members)
    }
}

/// How a point is chosen from each successive difference of a chain.
#[derive(Clone, Copy, Debug)]
pub enum Picker {
    /// Least point index; fully deterministic.
    Canonical,
    /// Uniform choice from a seeded generator.
    Seeded(u64),
}

/// Result of [`independent_from_chain`]: the chosen points plus whether the
/// extracted set is independent (guaranteed only under the exchange
/// property; reported either way).
#[derive(Clone, Debug)]
pub struct Extraction {
    pub points: Vec<usize>,
    pub independent: bool,
}

/// Builds the span ladder `span(ξ[..k])` for `k = 0..=|ξ|` of an independent
/// sequence. Independence makes every inclusion strict, so the result is a
/// chain of length `|ξ|`.
pub fn chain_from_independent(g: &Geometry, points: &[usize]) -> Result<Chain> {
    validate_points(g, points)?;
    if !rank::is_independent(g, &PointSet::from_points(g.n_points(), points.iter().copied())) {
        return Err(Error::DependentInput);
    }
    let mut members = vec![g.empty_set()];
    let mut cur = g.empty_set();
    for &p in points {
        cur = g.span_with(&cur, p);
        members.push(cur.clone());
    }
    Chain::new(g, members)
}

/// Picks one point from each consecutive difference of a chain starting at
/// the empty subspace. The sequence always has one point per step; it is
/// independent whenever the geometry satisfies the exchange property, and
/// the report says whether it is here.
pub fn independent_from_chain(g: &Geometry, chain: &Chain, picker: Picker) -> Result<Extraction> {
    if !chain.first().is_empty() {
        return Err(Error::ChainMustStartEmpty);
    }
    let mut rng = match picker {
        Picker::Canonical => None,
        Picker::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut points = Vec::with_capacity(chain.len());
    for pair in chain.members().windows(2) {
        let fresh: Vec<usize> = pair[1].iter().filter(|&p| !pair[0].contains(p)).collect();
        let chosen = match rng.as_mut() {
            None => fresh[0],
            Some(r) => fresh[r.gen_range(0..fresh.len())],
        };
        points.push(chosen);
    }
    let independent =
        rank::is_independent(g, &PointSet::from_points(g.n_points(), points.iter().copied()));
    Ok(Extraction {
        points,
        independent,
    })
}

/// Condenses the span ladder of a generating sequence: duplicates collapse
/// away, leaving a strictly increasing chain, and the points that caused
/// each strict jump form a generating subsequence of the same size as the
/// chain's length.
pub fn condense_generating_chain(g: &Geometry, points: &[usize]) -> Result<(Chain, Vec<usize>)> {
    validate_points(g, points)?;
    let seed = PointSet::from_points(g.n_points(), points.iter().copied());
    if !g.span(&seed).is_full() {
        return Err(Error::NotGenerating);
    }
    let mut members = vec![g.empty_set()];
    let mut jumps = Vec::new();
    let mut cur = g.empty_set();
    for &p in points {
        if cur.contains(p) {
            continue; // span unchanged: this point causes no jump
        }
        cur = g.span_with(&cur, p);
        members.push(cur.clone());
        jumps.push(p);
    }
    let chain = Chain::new(g, members)?;
    debug_assert_eq!(chain.len(), jumps.len());
    debug_assert!(chain.last().is_full());
    Ok((chain, jumps))
}

/// Outcome of the longest-chain search. `exact` is false when the subspace
/// cap was hit, in which case `length` and `witness` come from the deepest
/// completed descent.
#[derive(Clone, Debug)]
pub struct LongestChain {
    pub length: usize,
    pub witness: Chain,
    pub exact: bool,
    pub subspaces_visited: usize,
}

/// Longest chain of subspaces from `∅` to the full point set, computed by
/// memoized depth-first search over the cover relation.
pub fn longest_chain(g: &Geometry, budget: &Budget) -> LongestChain {
    struct Search<'a> {
        g: &'a Geometry,
        // height of the sub-lattice above each subspace, plus the cover
        // realizing it (None at the top)
        memo: HashMap<PointSet, (usize, Option<PointSet>)>,
        cap: usize,
        exceeded: bool,
    }

    impl Search<'_> {
        fn height(&mut self, s: &PointSet) -> usize {
            if let Some(&(h, _)) = self.memo.get(s) {
                return h;
            }
            if self.memo.len() >= self.cap {
                self.exceeded = true;
                return 0;
            }
            if s.is_full() {
                self.memo.insert(s.clone(), (0, None));
                return 0;
            }
            // reserve the slot before recursing so the cap counts this node
            self.memo.insert(s.clone(), (0, None));
            let mut best = 0usize;
            let mut via: Option<PointSet> = None;
            for cover in self.g.covers(s).expect("chain search visits subspaces") {
                let h = self.height(&cover) + 1;
                if self.exceeded {
                    return 0;
                }
                if h > best {
                    best = h;
                    via = Some(cover);
                }
            }
            self.memo.insert(s.clone(), (best, via));
            best
        }
    }

    let mut search = Search {
        g,
        memo: HashMap::new(),
        cap: budget.max_subspaces,
        exceeded: false,
    };
    let empty = g.empty_set();
    let length = search.height(&empty);

    if search.exceeded {
        // fall back to one greedy descent: still a genuine chain, hence a
        // correct lower bound
        let mut members = vec![g.empty_set()];
        let mut cur = g.empty_set();
        while !cur.is_full() {
            let next = g
                .covers(&cur)
                .expect("greedy descent stays inside the lattice")
                .into_iter()
                .next()
                .expect("a proper subspace has at least one cover");
            members.push(next.clone());
            cur = next;
        }
        let witness = Chain::new(g, members).expect("greedy descent yields a chain");
        return LongestChain {
            length: witness.len(),
            witness,
            exact: false,
            subspaces_visited: search.memo.len(),
        };
    }

    let mut members = vec![empty.clone()];
    let mut cur = empty;
    while let Some((_, Some(next))) = search.memo.get(&cur).cloned() {
        members.push(next.clone());
        cur = next;
    }
    let witness = Chain::new(g, members).expect("reconstructed path is a chain");
    debug_assert_eq!(witness.len(), length);
    LongestChain {
        length,
        witness,
        exact: true,
        subspaces_visited: search.memo.len(),
    }
}

/// The condition a chain violates first, if any: it must start at `∅`, end
/// at the full set, and each member must cover its predecessor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainViolation {
    FirstNotEmpty,
    LastNotFull,
    NotACover { index: usize },
}

#[derive(Clone, Debug)]
pub struct MaximalityCheck {
    pub maximal: bool,
    pub violation: Option<ChainViolation>,
}

pub fn is_maximal_chain(g: &Geometry, chain: &Chain) -> MaximalityCheck {
    let violation = if !chain.first().is_empty() {
        Some(ChainViolation::FirstNotEmpty)
    } else if !chain.last().is_full() {
        Some(ChainViolation::LastNotFull)
    } else {
        chain
            .members()
            .windows(2)
            .position(|w| !g.is_cover(&w[0], &w[1]))
            .map(|index| ChainViolation::NotACover { index })
    };
    MaximalityCheck {
        maximal: violation.is_none(),
        violation,
    }
}

/// Extends a chain to a maximal one containing it. `∅` and the full set are
/// added if missing; then, between any consecutive non-cover pair `(s, t)`,
/// the span of `s` plus the least point of `t ∖ s` that stays strictly
/// below `t` is inserted. Every insertion lengthens the strict ladder, which
/// is bounded by the point count, so the loop terminates unconditionally.
pub fn extend_to_maximal(g: &Geometry, chain: &Chain) -> Chain {
    let mut members: Vec<PointSet> = chain.members().to_vec();
    if !members[0].is_empty() {
        members.insert(0, g.empty_set());
    }
    if !members.last().expect("non-empty").is_full() {
        members.push(g.full_set());
    }
    let mut i = 0;
    while i + 1 < members.len() {
        let (s, t) = (&members[i], &members[i + 1]);
        if g.is_cover(s, t) {
            i += 1;
            continue;
        }
        let insert = t
            .iter()
            .filter(|&p| !s.contains(p))
            .map(|p| g.span_with(s, p))
            .find(|u| u.is_proper_subset(t))
            .expect("a non-cover gap contains an intermediate subspace");
        members.insert(i + 1, insert);
    }
    Chain::new(g, members).expect("insertion preserves chain validity")
}

/// Multiset of lengths of all maximal chains, computed by dynamic
/// programming over the cover relation (one visit per subspace).
#[derive(Clone, Debug)]
pub struct ChainLengths {
    pub counts: BTreeMap<usize, u64>,
    pub exhaustive: bool,
    pub subspaces_visited: usize,
}

impl ChainLengths {
    pub fn all_equal(&self) -> bool {
        self.counts.len() <= 1
    }
}

pub fn maximal_chain_lengths(g: &Geometry, budget: &Budget) -> ChainLengths {
    struct Census<'a> {
        g: &'a Geometry,
        memo: HashMap<PointSet, BTreeMap<usize, u64>>,
        cap: usize,
        exceeded: bool,
    }

    impl Census<'_> {
        fn lengths_from(&mut self, s: &PointSet) -> BTreeMap<usize, u64> {
            if let Some(m) = self.memo.get(s) {
                return m.clone();
            }
            if self.memo.len() >= self.cap {
                self.exceeded = true;
                return BTreeMap::new();
            }
            self.memo.insert(s.clone(), BTreeMap::new());
            let mut out: BTreeMap<usize, u64> = BTreeMap::new();
            if s.is_full() {
                out.insert(0, 1);
            } else {
                for cover in self.g.covers(s).expect("census visits subspaces") {
                    for (len, count) in self.lengths_from(&cover) {
                        *out.entry(len + 1).or_insert(0) += count;
                    }
                    if self.exceeded {
                        break;
                    }
                }
            }
            self.memo.insert(s.clone(), out.clone());
            out
        }
    }

    let mut census = Census {
        g,
        memo: HashMap::new(),
        cap: budget.max_subspaces,
        exceeded: false,
    };
    let counts = census.lengths_from(&g.empty_set());
    ChainLengths {
        counts,
        exhaustive: !census.exceeded,
        subspaces_visited: census.memo.len(),
    }
}

fn validate_points(g: &Geometry, points: &[usize]) -> Result<()> {
    let mut seen = PointSet::empty(g.n_points());
    for &p in points {
        if p >= g.n_points() {
            return Err(Error::PointOutOfRange {
                point: p,
                n_points: g.n_points(),
            });
        }
        if !seen.insert(p) {
            return Err(Error::NotDistinct);
        }
    }
    Ok(())
}
