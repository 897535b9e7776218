use serde::Serialize;

use super::DiGraph;
use crate::sets::{EdgeSet, IndexSet, SignedSet};

/// A cycle of the underlying undirected multigraph, split into the edges
/// traversed forward (`positive`) and backward (`negative`) along a cyclic
/// direction chosen so that the lowest-index edge is forward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignedCycle {
    pub positive: EdgeSet,
    pub negative: EdgeSet,
}

impl SignedCycle {
    pub fn edges(&self) -> EdgeSet {
        self.positive.union(self.negative)
    }

    pub fn signed_set(&self) -> SignedSet {
        SignedSet {
            positive: self.positive,
            negative: self.negative,
        }
    }

    pub fn is_directed(&self) -> bool {
        self.negative.is_empty()
    }
}

/// Every cycle of the underlying multigraph, in lexicographic order of edge sets.
///
/// Each cycle is found exactly once: from its lowest-index edge `e0`, traversed
/// tail to head, along a simple path back to the tail of `e0` that uses only
/// edges with larger index.
pub fn enumerate_signed_cycles(g: &DiGraph) -> Vec<SignedCycle> {
    let mut out = Vec::new();
    for e0 in 0..g.m() {
        let (t0, h0) = g.edges()[e0];
        if t0 == h0 {
            out.push(SignedCycle {
                positive: IndexSet::singleton(e0),
                negative: IndexSet::EMPTY,
            });
            continue;
        }
        let mut search = PathSearch {
            g,
            min_edge: e0,
            target: t0,
            out: &mut out,
        };
        search.extend(
            h0,
            IndexSet::singleton(t0).insert(h0),
            IndexSet::singleton(e0),
            IndexSet::EMPTY,
        );
    }
    out.sort_by_key(|c| c.edges().lex_key());
    out
}

struct PathSearch<'a> {
    g: &'a DiGraph,
    min_edge: usize,
    target: usize,
    out: &'a mut Vec<SignedCycle>,
}

impl PathSearch<'_> {
    fn extend(&mut self, at: usize, visited: IndexSet, pos: EdgeSet, neg: EdgeSet) {
        for e in self.min_edge + 1..self.g.m() {
            let (t, h) = self.g.edges()[e];
            if t == h {
                continue;
            }
            let (next, forward) = if t == at {
                (h, true)
            } else if h == at {
                (t, false)
            } else {
                continue;
            };
            let (pos2, neg2) = if forward {
                (pos.insert(e), neg)
            } else {
                (pos, neg.insert(e))
            };
            if next == self.target {
                self.out.push(SignedCycle {
                    positive: pos2,
                    negative: neg2,
                });
            } else if !visited.contains(next) {
                self.extend(next, visited.insert(next), pos2, neg2);
            }
        }
    }
}
