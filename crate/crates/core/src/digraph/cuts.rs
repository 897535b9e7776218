use std::collections::BTreeMap;

use serde::Serialize;

use super::{DiGraph, GraphError};
use crate::sets::{EdgeSet, IndexSet};

/// A directed cut: every edge between the shores goes from `tail_shore` to
/// `head_shore`, and `edges` lists those edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectedCut {
    pub tail_shore: IndexSet,
    pub head_shore: IndexSet,
    pub edges: EdgeSet,
    pub elementary: bool,
}

/// All distinct directed cuts of a weakly connected digraph, ordered
/// lexicographically by edge-index set.
///
/// Every bipartition of the vertex set is scanned; when several bipartitions
/// produce the same edge set the one with the numerically smallest head-shore
/// mask is kept.
pub fn enumerate_directed_cuts(g: &DiGraph) -> Result<Vec<DirectedCut>, GraphError> {
    if !g.is_weakly_connected() {
        return Err(GraphError::DisconnectedInput);
    }
    let n = g.n();
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut by_edges: BTreeMap<Vec<usize>, DirectedCut> = BTreeMap::new();
    let all = g.all_vertices();
    for mask in 1u64..(all.bits()) {
        let head_shore = IndexSet(mask);
        let tail_shore = all.difference(head_shore);
        let mut edges = EdgeSet::EMPTY;
        let mut backward = false;
        for (i, &(t, h)) in g.edges().iter().enumerate() {
            match (head_shore.contains(t), head_shore.contains(h)) {
                (false, true) => edges = edges.insert(i),
                (true, false) => {
                    backward = true;
                    break;
                }
                _ => {}
            }
        }
        if backward || edges.is_empty() {
            continue;
        }
        by_edges.entry(edges.lex_key()).or_insert_with(|| DirectedCut {
            tail_shore,
            head_shore,
            edges,
            elementary: g.weak_component_count(g.all_edges().difference(edges)) == 2,
        });
    }
    Ok(by_edges.into_values().collect())
}

/// Only the elementary directed cuts.
pub fn elementary_directed_cuts(g: &DiGraph) -> Result<Vec<DirectedCut>, GraphError> {
    Ok(enumerate_directed_cuts(g)?
        .into_iter()
        .filter(|c| c.elementary)
        .collect())
}
