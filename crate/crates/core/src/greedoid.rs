//! Greedoids as feasibility oracles, branching greedoids of rooted digraphs,
//! and the greedoid polynomial via external activity.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::Polynomial;
use crate::digraph::{enumerate_spanning_arborescences, is_arborescence, DiGraph, GraphError};
use crate::sets::{EdgeSet, IndexSet};

/// Axioms are re-verified over every subset pair for ground sets up to this size.
pub const AXIOM_CHECK_LIMIT: usize = 12;
/// Largest ground set for which feasibility tables are materialized.
pub const TABLE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedoidError {
    #[error("the empty set is not feasible")]
    EmptyNotFeasible,
    #[error("feasible set {set:?} has no element whose removal stays feasible")]
    NotAccessible { set: EdgeSet },
    #[error("exchange fails for feasible sets {larger:?} and {smaller:?}")]
    ExchangeFails { larger: EdgeSet, smaller: EdgeSet },
    #[error("maximal feasible sets have different sizes")]
    UnequalBases,
    #[error("{set:?} is not a basis")]
    NotABasis { set: EdgeSet },
    #[error("{set:?} is not a spanning arborescence")]
    NotAnArborescence { set: EdgeSet },
    #[error("the greedoid has no basis")]
    NoBasis,
    #[error("order is not a permutation of the ground set")]
    BadOrder,
    #[error("ground set of {size} elements exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("restriction search found k = {found}, but the lowest exponent is {expected}")]
    RestrictionMismatch { found: usize, expected: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

type Oracle = Arc<dyn Fn(EdgeSet) -> bool + Send + Sync>;

/// A greedoid on a ground set of indices below 64, given by a feasibility oracle.
#[derive(Clone)]
pub struct Greedoid {
    ground: EdgeSet,
    universe: usize,
    oracle: Oracle,
    bases: Vec<EdgeSet>,
    rank: usize,
}

impl std::fmt::Debug for Greedoid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Greedoid")
            .field("ground", &self.ground)
            .field("rank", &self.rank)
            .field("bases", &self.bases.len())
            .finish()
    }
}

/// A basis with its lexicographically minimal feasible word and activity data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisActivity {
    pub basis: EdgeSet,
    pub word: Vec<usize>,
    pub active: EdgeSet,
}

impl Greedoid {
    /// Builds from an oracle, materializing the feasible sets into a table and
    /// verifying the axioms when the ground set is small enough.
    pub fn from_oracle(
        universe: usize,
        ground: EdgeSet,
        oracle: impl Fn(EdgeSet) -> bool + Send + Sync + 'static,
    ) -> Result<Self, GreedoidError> {
        if ground.len() > TABLE_LIMIT {
            return Err(GreedoidError::TooLarge {
                size: ground.len(),
                limit: TABLE_LIMIT,
            });
        }
        let feasible: BTreeSet<u64> = ground
            .subsets()
            .filter(|&s| oracle(s))
            .map(|s| s.bits())
            .collect();
        let table = Arc::new(feasible);
        let lookup = {
            let table = Arc::clone(&table);
            move |s: EdgeSet| table.contains(&s.bits())
        };
        Self::build(universe, ground, Arc::new(lookup), true)
    }

    /// Builds from an explicit family of feasible sets.
    pub fn from_feasible_sets(
        universe: usize,
        ground: EdgeSet,
        sets: impl IntoIterator<Item = EdgeSet>,
    ) -> Result<Self, GreedoidError> {
        let table: BTreeSet<u64> = sets.into_iter().map(|s| s.bits()).collect();
        Self::from_oracle(universe, ground, move |s| table.contains(&s.bits()))
    }

    fn build(
        universe: usize,
        ground: EdgeSet,
        oracle: Oracle,
        verify: bool,
    ) -> Result<Self, GreedoidError> {
        if !oracle(EdgeSet::EMPTY) {
            return Err(GreedoidError::EmptyNotFeasible);
        }
        if verify && ground.len() <= AXIOM_CHECK_LIMIT {
            verify_axioms(ground, &oracle)?;
        }
        let feasible = reachable_feasible_sets(ground, &oracle);
        let maximal: Vec<EdgeSet> = feasible
            .iter()
            .copied()
            .filter(|&s| ground.difference(s).iter().all(|e| !oracle(s.insert(e))))
            .collect();
        let rank = maximal.iter().map(|b| b.len()).max().unwrap_or(0);
        if maximal.iter().any(|b| b.len() != rank) {
            return Err(GreedoidError::UnequalBases);
        }
        let mut bases = maximal;
        bases.sort_by_key(|b| b.lex_key());
        Ok(Self {
            ground,
            universe,
            oracle,
            bases,
            rank,
        })
    }

    pub fn ground(&self) -> EdgeSet {
        self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[EdgeSet] {
        &self.bases
    }

    pub fn is_feasible(&self, set: EdgeSet) -> bool {
        set.is_subset(self.ground) && (self.oracle)(set)
    }

    pub fn is_basis(&self, set: EdgeSet) -> bool {
        set.len() == self.rank && self.is_feasible(set)
    }

    /// The greedoid on `ground & s` whose feasible sets are those inside `s`.
    pub fn restriction(&self, s: EdgeSet) -> Greedoid {
        let ground = self.ground.intersection(s);
        let inner = Arc::clone(&self.oracle);
        let oracle: Oracle = Arc::new(move |x: EdgeSet| x.is_subset(ground) && inner(x));
        Self::build(self.universe, ground, oracle, false)
            .expect("restrictions of greedoids are greedoids")
    }

    fn rank_of_order(&self, order: &[usize]) -> Result<Vec<usize>, GreedoidError> {
        let elements = self.ground.to_vec();
        let mut seen = BTreeSet::new();
        if order.len() != elements.len()
            || !order.iter().all(|&e| self.ground.contains(e) && seen.insert(e))
        {
            return Err(GreedoidError::BadOrder);
        }
        let mut rank = vec![usize::MAX; self.universe.max(64)];
        for (i, &e) in order.iter().enumerate() {
            rank[e] = i;
        }
        Ok(rank)
    }

    /// The ground set in increasing index order.
    pub fn natural_order(&self) -> Vec<usize> {
        self.ground.to_vec()
    }

    /// The lexicographically smallest ordering of `basis` whose every prefix is
    /// feasible, built greedily.
    pub fn lexmin_feasible_word(
        &self,
        basis: EdgeSet,
        order: &[usize],
    ) -> Result<Vec<usize>, GreedoidError> {
        if !self.is_basis(basis) {
            return Err(GreedoidError::NotABasis { set: basis });
        }
        let rank = self.rank_of_order(order)?;
        Ok(self.greedy_word(basis, &rank))
    }

    fn greedy_word(&self, basis: EdgeSet, rank: &[usize]) -> Vec<usize> {
        let mut word = Vec::with_capacity(basis.len());
        let mut current = EdgeSet::EMPTY;
        while current != basis {
            let next = basis
                .difference(current)
                .iter()
                .filter(|&e| (self.oracle)(current.insert(e)))
                .min_by_key(|&e| rank[e])
                .expect("a basis is reachable through feasible prefixes");
            word.push(next);
            current = current.insert(next);
        }
        word
    }

    fn compare_words(a: &[usize], b: &[usize], rank: &[usize]) -> Ordering {
        a.iter().map(|&e| rank[e]).cmp(b.iter().map(|&e| rank[e]))
    }

    /// The externally active elements of `basis`: those `e` such that every
    /// basis `basis + e - f` has a larger lexicographically minimal word. An
    /// element with no such exchange is active.
    pub fn external_activity(
        &self,
        basis: EdgeSet,
        order: &[usize],
    ) -> Result<BasisActivity, GreedoidError> {
        if !self.is_basis(basis) {
            return Err(GreedoidError::NotABasis { set: basis });
        }
        let rank = self.rank_of_order(order)?;
        Ok(self.activity_with_rank(basis, &rank))
    }

    fn activity_with_rank(&self, basis: EdgeSet, rank: &[usize]) -> BasisActivity {
        let word = self.greedy_word(basis, rank);
        let mut active = EdgeSet::EMPTY;
        for e in self.ground.difference(basis).iter() {
            let is_active = basis.iter().all(|f| {
                let other = basis.remove(f).insert(e);
                if !(self.oracle)(other) {
                    return true;
                }
                let other_word = self.greedy_word(other, rank);
                Self::compare_words(&word, &other_word, rank) == Ordering::Less
            });
            if is_active {
                active = active.insert(e);
            }
        }
        BasisActivity {
            basis,
            word,
            active,
        }
    }

    /// Activity data for every basis under `order`.
    pub fn activities(&self, order: &[usize]) -> Result<Vec<BasisActivity>, GreedoidError> {
        let rank = self.rank_of_order(order)?;
        Ok(self
            .bases
            .iter()
            .map(|&b| self.activity_with_rank(b, &rank))
            .collect())
    }

    /// `sum over bases B of t^{e(B)}` under the given order.
    pub fn greedoid_polynomial_with_order(&self, order: &[usize]) -> Result<Polynomial, GreedoidError> {
        if self.bases.is_empty() {
            return Err(GreedoidError::NoBasis);
        }
        let mut counts = vec![0u64; self.ground.len() + 1];
        for a in self.activities(order)? {
            counts[a.active.len()] += 1;
        }
        Ok(Polynomial::from_coeffs(counts))
    }

    /// The greedoid polynomial under the natural order.
    pub fn greedoid_polynomial(&self) -> Result<Polynomial, GreedoidError> {
        self.greedoid_polynomial_with_order(&self.natural_order())
    }

    /// Random orders of the ground set from a seeded generator.
    pub fn random_orders(&self, count: usize, seed: u64) -> Vec<Vec<usize>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let mut o = self.natural_order();
                o.shuffle(&mut rng);
                o
            })
            .collect()
    }

    /// Smallest `|S|` such that restricting to the complement of `S` keeps the
    /// rank and gives a greedoid polynomial with nonzero constant term. Each
    /// candidate restriction's polynomial is recomputed from scratch; the
    /// result is checked against the lowest exponent of this greedoid's polynomial.
    pub fn min_restriction_k(&self) -> Result<usize, GreedoidError> {
        let lambda = self.greedoid_polynomial()?;
        let expected = lambda.lowest_degree().expect("nonzero polynomial");
        let elements = self.ground.to_vec();
        for size in 0..=elements.len() {
            for removed in itertools::Itertools::combinations(elements.iter().copied(), size) {
                let keep = self.ground.difference(IndexSet::from_indices(removed));
                let sub = self.restriction(keep);
                if sub.rank != self.rank {
                    continue;
                }
                let p = sub.greedoid_polynomial()?;
                if !p.constant_term().is_zero() {
                    if size != expected {
                        return Err(GreedoidError::RestrictionMismatch {
                            found: size,
                            expected,
                        });
                    }
                    return Ok(size);
                }
            }
        }
        Err(GreedoidError::RestrictionMismatch {
            found: usize::MAX,
            expected,
        })
    }
}

fn reachable_feasible_sets(ground: EdgeSet, oracle: &Oracle) -> Vec<EdgeSet> {
    let mut seen: BTreeSet<u64> = BTreeSet::from([0]);
    let mut frontier = vec![EdgeSet::EMPTY];
    while let Some(s) = frontier.pop() {
        for e in ground.difference(s).iter() {
            let t = s.insert(e);
            if !seen.contains(&t.bits()) && oracle(t) {
                seen.insert(t.bits());
                frontier.push(t);
            }
        }
    }
    seen.into_iter().map(IndexSet).collect()
}

fn verify_axioms(ground: EdgeSet, oracle: &Oracle) -> Result<(), GreedoidError> {
    let feasible: Vec<EdgeSet> = ground.subsets().filter(|&s| oracle(s)).collect();
    for &x in &feasible {
        if !x.is_empty() && !x.iter().any(|e| oracle(x.remove(e))) {
            return Err(GreedoidError::NotAccessible { set: x });
        }
    }
    for &x in &feasible {
        for &y in &feasible {
            if x.len() == y.len() + 1 && !x.difference(y).iter().any(|e| oracle(y.insert(e))) {
                return Err(GreedoidError::ExchangeFails {
                    larger: x,
                    smaller: y,
                });
            }
        }
    }
    Ok(())
}

/// The branching greedoid: feasible sets are the arborescences rooted at `s`.
pub fn branching_greedoid(g: &DiGraph, s: usize) -> Result<Greedoid, GreedoidError> {
    if s >= g.n() {
        return Err(GraphError::NoSuchVertex { vertex: s, n: g.n() }.into());
    }
    if g.m() > TABLE_LIMIT {
        return Err(GreedoidError::TooLarge {
            size: g.m(),
            limit: TABLE_LIMIT,
        });
    }
    let graph = g.clone();
    let oracle: Oracle = Arc::new(move |x: EdgeSet| is_arborescence(&graph, s, x));
    Greedoid::build(g.m(), g.all_edges(), oracle, true)
}

/// Edges outside the spanning arborescence `a` whose fundamental cycle has
/// its order-maximal edge pointing the same way round as the edge itself.
pub fn semi_active_edges(
    g: &DiGraph,
    s: usize,
    a: EdgeSet,
    order: &[usize],
) -> Result<EdgeSet, GreedoidError> {
    if !crate::digraph::is_spanning_arborescence(g, s, a) {
        return Err(GreedoidError::NotAnArborescence { set: a });
    }
    let mut rank = vec![0usize; g.m()];
    if order.len() != g.m() {
        return Err(GreedoidError::BadOrder);
    }
    for (i, &e) in order.iter().enumerate() {
        rank[e] = i;
    }
    let mut out = EdgeSet::EMPTY;
    for e in g.all_edges().difference(a).iter() {
        let (t, h) = g.edges()[e];
        // Walk the cycle starting along e: from h back to t through the tree.
        let steps = tree_walk(g, s, a, h, t);
        let (max_edge, forward) = steps
            .into_iter()
            .chain(std::iter::once((e, true)))
            .max_by_key(|&(f, _)| rank[f])
            .expect("cycle is nonempty");
        debug_assert!(max_edge != e || forward);
        if forward {
            out = out.insert(e);
        }
    }
    Ok(out)
}

/// The tree path from `from` to `to`, each edge tagged with whether the walk
/// traverses it from tail to head.
fn tree_walk(g: &DiGraph, s: usize, a: EdgeSet, from: usize, to: usize) -> Vec<(usize, bool)> {
    let up = crate::digraph::tree_path_from_root(g, s, a, from);
    let down = crate::digraph::tree_path_from_root(g, s, a, to);
    let common = up.iter().zip(&down).take_while(|(x, y)| x == y).count();
    // From `from` climb towards the root (against edge direction), then descend to `to`.
    let mut walk: Vec<(usize, bool)> = up[common..].iter().rev().map(|&e| (e, false)).collect();
    walk.extend(down[common..].iter().map(|&e| (e, true)));
    walk
}

/// `sum over spanning arborescences A of t^{#semi-active edges}`.
pub fn semi_activity_polynomial(g: &DiGraph, s: usize, order: &[usize]) -> Result<Polynomial, GreedoidError> {
    let mut counts = vec![0u64; g.m() + 1];
    for a in enumerate_spanning_arborescences(g, s) {
        counts[semi_active_edges(g, s, a, order)?.len()] += 1;
    }
    Ok(Polynomial::from_coeffs(counts))
}
