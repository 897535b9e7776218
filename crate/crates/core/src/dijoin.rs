//! Minimum dijoins, directed-cut packings and feedback arc sets, all by
//! exhaustive search in order of increasing cardinality.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::digraph::{enumerate_directed_cuts, DiGraph, DirectedCut, GraphError};
use crate::sets::{EdgeSet, IndexSet};

/// Exhaustive searches refuse inputs with more edges than this unless the
/// caller passes a larger limit.
pub const DEFAULT_EDGE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DijoinError {
    #[error("the input digraph is not weakly connected")]
    DisconnectedInput,
    #[error("vertex {root} cannot reach every vertex")]
    NotRootConnected { root: usize },
    #[error("{edges} edges exceed the exhaustive-search limit of {limit}")]
    TooLarge { edges: usize, limit: usize },
    #[error("the underlying graph is not 2-edge-connected")]
    NotTwoEdgeConnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn map_graph(e: GraphError) -> DijoinError {
    match e {
        GraphError::DisconnectedInput => DijoinError::DisconnectedInput,
        other => DijoinError::Graph(other),
    }
}

fn check_budget(m: usize, limit: usize) -> Result<(), DijoinError> {
    if m > limit {
        Err(DijoinError::TooLarge { edges: m, limit })
    } else {
        Ok(())
    }
}

/// All minimum dijoins together with their distinct net degree vectors.
///
/// For a matroid, `net_degree_vectors` holds the distinct sums of the columns
/// of each minimum dijoin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DijoinCertificate {
    pub nu: usize,
    /// Lexicographically sorted by edge index.
    pub min_dijoins: Vec<EdgeSet>,
    /// Sorted, without repetitions.
    pub net_degree_vectors: Vec<Vec<i64>>,
}

fn cut_masks(g: &DiGraph) -> Result<Vec<EdgeSet>, DijoinError> {
    Ok(enumerate_directed_cuts(g)
        .map_err(map_graph)?
        .into_iter()
        .map(|c| c.edges)
        .collect())
}

fn hits_all(k: EdgeSet, cuts: &[EdgeSet]) -> bool {
    cuts.iter().all(|&c| !c.is_disjoint(k))
}

/// Whether `k` meets every directed cut of `g`.
pub fn is_dijoin(g: &DiGraph, k: EdgeSet) -> Result<bool, DijoinError> {
    Ok(hits_all(k, &cut_masks(g)?))
}

pub fn min_dijoins(g: &DiGraph) -> Result<DijoinCertificate, DijoinError> {
    min_dijoins_with_limit(g, DEFAULT_EDGE_LIMIT)
}

/// Minimum dijoins, searching only edge sets without undirected cycles (a
/// minimum dijoin never contains one).
pub fn min_dijoins_with_limit(g: &DiGraph, limit: usize) -> Result<DijoinCertificate, DijoinError> {
    check_budget(g.m(), limit)?;
    let cuts = cut_masks(g)?;
    search_dijoins(g, &cuts, |k| g.is_forest_on(k))
}

/// Minimum dijoins by unrestricted search over all edge subsets; a
/// slower reference for [`min_dijoins`].
pub fn min_dijoins_unrestricted(g: &DiGraph) -> Result<DijoinCertificate, DijoinError> {
    check_budget(g.m(), DEFAULT_EDGE_LIMIT)?;
    let cuts = cut_masks(g)?;
    search_dijoins(g, &cuts, |_| true)
}

fn search_dijoins(
    g: &DiGraph,
    cuts: &[EdgeSet],
    admissible: impl Fn(EdgeSet) -> bool,
) -> Result<DijoinCertificate, DijoinError> {
    for size in 0..=g.m() {
        let found: Vec<EdgeSet> = IndexSet::subsets_of_size(g.m(), size)
            .filter(|&k| hits_all(k, cuts) && admissible(k))
            .collect();
        if !found.is_empty() {
            let vectors: BTreeSet<Vec<i64>> =
                found.iter().map(|&k| g.net_degree_vector(k)).collect();
            return Ok(DijoinCertificate {
                nu: size,
                min_dijoins: found,
                net_degree_vectors: vectors.into_iter().collect(),
            });
        }
    }
    unreachable!("the full edge set meets every directed cut")
}

/// A largest family of pairwise edge-disjoint directed cuts.
///
/// Only inclusion-minimal cuts are branched on: any disjoint family can swap
/// each member for a minimal directed cut inside it.
pub fn max_disjoint_directed_cuts(g: &DiGraph) -> Result<(usize, Vec<DirectedCut>), DijoinError> {
    check_budget(g.m(), DEFAULT_EDGE_LIMIT)?;
    let all = enumerate_directed_cuts(g).map_err(map_graph)?;
    let minimal: Vec<DirectedCut> = all
        .iter()
        .filter(|c| {
            !all.iter()
                .any(|d| d.edges != c.edges && d.edges.is_subset(c.edges))
        })
        .cloned()
        .collect();
    let mut best: Vec<usize> = Vec::new();
    let mut current = Vec::new();
    pack(&minimal, 0, EdgeSet::EMPTY, &mut current, &mut best);
    let family: Vec<DirectedCut> = best.into_iter().map(|i| minimal[i].clone()).collect();
    Ok((family.len(), family))
}

fn pack(
    cuts: &[DirectedCut],
    from: usize,
    used: EdgeSet,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    let compatible: Vec<usize> = (from..cuts.len())
        .filter(|&i| cuts[i].edges.is_disjoint(used))
        .collect();
    if current.len() + compatible.len() <= best.len() {
        return;
    }
    for (pos, &i) in compatible.iter().enumerate() {
        if current.len() + compatible.len() - pos <= best.len() {
            return;
        }
        current.push(i);
        pack(cuts, i + 1, used.union(cuts[i].edges), current, best);
        current.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeedbackArcSet {
    pub size: usize,
    /// The lexicographically first minimum witness.
    pub witness: EdgeSet,
}

/// Minimum number of edges whose removal leaves no directed cycle.
pub fn minfas(g: &DiGraph) -> Result<FeedbackArcSet, DijoinError> {
    minfas_with_limit(g, DEFAULT_EDGE_LIMIT)
}

pub fn minfas_with_limit(g: &DiGraph, limit: usize) -> Result<FeedbackArcSet, DijoinError> {
    check_budget(g.m(), limit)?;
    let all = g.all_edges();
    smallest(g.m(), |f| g.is_acyclic_on(all.difference(f)))
}

/// Minimum number of edges whose removal leaves an acyclic graph in which `s`
/// still reaches every vertex.
pub fn minfas_rooted(g: &DiGraph, s: usize) -> Result<FeedbackArcSet, DijoinError> {
    minfas_rooted_with_limit(g, s, DEFAULT_EDGE_LIMIT)
}

pub fn minfas_rooted_with_limit(
    g: &DiGraph,
    s: usize,
    limit: usize,
) -> Result<FeedbackArcSet, DijoinError> {
    if s >= g.n() {
        return Err(DijoinError::Graph(GraphError::NoSuchVertex { vertex: s, n: g.n() }));
    }
    if !g.is_root_connected(s) {
        return Err(DijoinError::NotRootConnected { root: s });
    }
    check_budget(g.m(), limit)?;
    let all = g.all_edges();
    let everything = g.all_vertices();
    smallest(g.m(), |f| {
        let rest = all.difference(f);
        g.is_acyclic_on(rest) && g.reachable(s, rest) == everything
    })
}

fn smallest(m: usize, ok: impl Fn(EdgeSet) -> bool) -> Result<FeedbackArcSet, DijoinError> {
    for size in 0..=m {
        if let Some(witness) = IndexSet::subsets_of_size(m, size).find(|&f| ok(f)) {
            return Ok(FeedbackArcSet { size, witness });
        }
    }
    unreachable!("removing every edge leaves an acyclic graph")
}

/// Fewest edge reversals making `g` strongly connected; defined when the
/// underlying graph is 2-edge-connected.
pub fn min_reversals_to_strong(g: &DiGraph) -> Result<FeedbackArcSet, DijoinError> {
    check_budget(g.m(), DEFAULT_EDGE_LIMIT)?;
    if !g.is_weakly_connected() {
        return Err(DijoinError::DisconnectedInput);
    }
    if !g.underlying().is_bridgeless() {
        return Err(DijoinError::NotTwoEdgeConnected);
    }
    smallest(g.m(), |f| g.with_reversed(f).is_strongly_connected())
}
