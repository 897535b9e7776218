use super::DiGraph;
use crate::sets::{EdgeSet, IndexSet};

/// Whether `edges` forms an arborescence rooted at `s`: no edge enters `s`, no
/// vertex has two entering edges, and every edge head is reachable from `s`.
/// The arborescence need not span.
pub fn is_arborescence(g: &DiGraph, s: usize, edges: EdgeSet) -> bool {
    let mut heads = IndexSet::EMPTY;
    for e in edges.iter() {
        let (t, h) = g.edges()[e];
        if h == s || t == h || heads.contains(h) {
            return false;
        }
        heads = heads.insert(h);
    }
    heads.is_subset(g.reachable(s, edges))
}

/// Whether `edges` is a spanning arborescence rooted at `s`.
pub fn is_spanning_arborescence(g: &DiGraph, s: usize, edges: EdgeSet) -> bool {
    edges.len() + 1 == g.n() && is_arborescence(g, s, edges)
}

/// All spanning arborescences rooted at `s`, in lexicographic order.
///
/// Chooses one non-loop entering edge per non-root vertex and keeps the
/// choices from which every vertex is reachable.
pub fn enumerate_spanning_arborescences(g: &DiGraph, s: usize) -> Vec<EdgeSet> {
    let n = g.n();
    let choices: Vec<Vec<usize>> = (0..n)
        .filter(|&v| v != s)
        .map(|v| (0..g.m()).filter(|&e| g.head(e) == v && g.tail(e) != v).collect())
        .collect();
    if choices.iter().any(Vec::is_empty) {
        return if n == 1 { vec![EdgeSet::EMPTY] } else { Vec::new() };
    }
    let all = g.all_vertices();
    let mut out: Vec<EdgeSet> = itertools::Itertools::multi_cartesian_product(choices.into_iter().map(Vec::into_iter))
        .map(EdgeSet::from_indices)
        .filter(|&t| g.reachable(s, t) == all)
        .collect();
    if n == 1 {
        out = vec![EdgeSet::EMPTY];
    }
    out.sort_by_key(|t| t.lex_key());
    out
}

/// Edges of the path from `s` to `v` inside the arborescence `edges`.
pub fn tree_path_from_root(g: &DiGraph, s: usize, edges: EdgeSet, v: usize) -> Vec<usize> {
    let mut path = Vec::new();
    let mut cur = v;
    while cur != s {
        let e = edges
            .iter()
            .find(|&e| g.head(e) == cur)
            .expect("vertex lies in the arborescence");
        path.push(e);
        cur = g.tail(e);
    }
    path.reverse();
    path
}
