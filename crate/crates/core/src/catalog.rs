//! Named small instances and exhaustive isomorphism-free families of small
//! digraphs and multigraphs.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::digraph::{DiGraph, UGraph};
use crate::sets::EdgeSet;

fn digraph(n: usize, edges: &[(usize, usize)]) -> DiGraph {
    DiGraph::new(n, edges.to_vec()).expect("catalog instances are well formed")
}

/// Eight vertices, ten edges, edge set a disjoint union of five directed cuts.
pub fn five_cut_digraph() -> DiGraph {
    digraph(
        8,
        &[(1, 0), (3, 0), (1, 2), (3, 2), (4, 0), (4, 7), (4, 5), (6, 5), (6, 7), (6, 2)],
    )
}

/// `0 -> 1 -> 2` together with `0 -> 2`.
pub fn acyclic_triangle() -> DiGraph {
    digraph(3, &[(0, 1), (1, 2), (0, 2)])
}

pub fn directed_triangle() -> DiGraph {
    digraph(3, &[(0, 1), (1, 2), (2, 0)])
}

/// One edge `0 -> 1` and two edges `1 -> 0`.
pub fn lopsided_digon() -> DiGraph {
    digraph(2, &[(0, 1), (1, 0), (1, 0)])
}

/// One edge each way between two vertices.
pub fn balanced_digon() -> DiGraph {
    digraph(2, &[(0, 1), (1, 0)])
}

/// An Eulerian digraph on six vertices with nine edges, rooted at 0.
pub fn eulerian_hexagon() -> DiGraph {
    digraph(
        6,
        &[(0, 1), (2, 0), (0, 3), (4, 0), (2, 3), (1, 2), (5, 2), (3, 5), (3, 4)],
    )
}

/// A spanning arborescence of [`eulerian_hexagon`] rooted at 0.
pub fn eulerian_hexagon_arborescence() -> EdgeSet {
    EdgeSet::from_indices([0, 2, 6, 7, 8])
}

/// Acyclic digraph `0 -> 1, 0 -> 2, 1 -> 2, 2 -> 3, 1 -> 3`.
pub fn parking_diamond() -> DiGraph {
    digraph(4, &[(0, 1), (0, 2), (1, 2), (2, 3), (1, 3)])
}

/// Two orientations of a non-bipartite seven-vertex graph with ten edges.
pub fn heptad_orientations() -> [DiGraph; 2] {
    let first = [
        (1, 0), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3), (5, 2), (2, 6), (4, 6), (5, 6),
    ];
    let mut second = first;
    second[3] = (4, 0);
    [digraph(7, &first), digraph(7, &second)]
}

/// Two orientations of the complete bipartite graph `K_{2,4}` with sides
/// `{0, 1}` and `{2, 3, 4, 5}`: a strongly connected one and one with a source.
pub fn k24_orientations() -> [DiGraph; 2] {
    let strong = [(0, 2), (2, 1), (3, 0), (1, 3), (0, 4), (4, 1), (5, 0), (1, 5)];
    let mut with_source = strong;
    with_source[7] = (5, 1);
    [digraph(6, &strong), digraph(6, &with_source)]
}

/// Which edges may be added while generating a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Upper bound on parallel copies of an ordered pair.
    pub max_multiplicity: usize,
    pub loops: bool,
}

impl FamilySpec {
    /// Simple digraphs (antiparallel pairs allowed, no loops).
    pub fn simple(max_vertices: usize, max_edges: usize) -> Self {
        Self {
            max_vertices,
            max_edges,
            max_multiplicity: 1,
            loops: false,
        }
    }

    /// Multidigraphs with loops.
    pub fn multi(max_vertices: usize, max_edges: usize) -> Self {
        Self {
            max_vertices,
            max_edges,
            max_multiplicity: usize::MAX,
            loops: true,
        }
    }
}

type EdgeList = Vec<(usize, usize)>;

fn canonical(n: usize, edges: &[(usize, usize)], fix_zero: bool) -> EdgeList {
    let mut best: Option<EdgeList> = None;
    let start = usize::from(fix_zero);
    for rest in (start..n).permutations(n - start) {
        let mut perm = Vec::with_capacity(n);
        if fix_zero {
            perm.push(0);
        }
        perm.extend(rest);
        let mut e: EdgeList = edges.iter().map(|&(t, h)| (perm[t], perm[h])).collect();
        e.sort_unstable();
        if best.as_ref().map_or(true, |b| e < *b) {
            best = Some(e);
        }
    }
    best.unwrap_or_default()
}

fn grow<F>(spec: FamilySpec, fix_zero: bool, new_vertex_edges: F) -> Vec<DiGraph>
where
    F: Fn(usize, usize) -> Vec<(usize, usize)>,
{
    let mut all: Vec<(usize, EdgeList)> = Vec::new();
    let mut level: BTreeSet<(usize, EdgeList)> = BTreeSet::from([(1, Vec::new())]);
    for _ in 0..=spec.max_edges {
        all.extend(level.iter().cloned());
        let mut next = BTreeSet::new();
        for (n, edges) in &level {
            if edges.len() == spec.max_edges {
                continue;
            }
            let mut candidates: Vec<(usize, (usize, usize))> = Vec::new();
            for t in 0..*n {
                for h in 0..*n {
                    if t == h && !spec.loops {
                        continue;
                    }
                    let copies = edges.iter().filter(|&&e| e == (t, h)).count();
                    if copies < spec.max_multiplicity {
                        candidates.push((*n, (t, h)));
                    }
                }
            }
            if *n < spec.max_vertices {
                for v in 0..*n {
                    for e in new_vertex_edges(v, *n) {
                        candidates.push((*n + 1, e));
                    }
                }
            }
            for (m, e) in candidates {
                let mut grown = edges.clone();
                grown.push(e);
                next.insert((m, canonical(m, &grown, fix_zero)));
            }
        }
        level = next;
    }
    all.sort_by(|a, b| (a.0, a.1.len(), &a.1).cmp(&(b.0, b.1.len(), &b.1)));
    all.into_iter().map(|(n, e)| digraph(n, &e)).collect()
}

/// Every weakly connected digraph allowed by `spec`, once per isomorphism
/// class, ordered by vertex count, edge count, then canonical edge list.
pub fn weakly_connected_digraphs(spec: FamilySpec) -> Vec<DiGraph> {
    grow(spec, false, |v, new| vec![(v, new), (new, v)])
}

/// Every digraph allowed by `spec` in which all vertices are reachable from 0,
/// once per isomorphism class fixing 0.
pub fn root_connected_digraphs(spec: FamilySpec) -> Vec<DiGraph> {
    grow(spec, true, |v, new| vec![(v, new)])
}

/// Connected Eulerian multidigraphs with loops.
pub fn connected_eulerian_digraphs(max_vertices: usize, max_edges: usize) -> Vec<DiGraph> {
    weakly_connected_digraphs(FamilySpec::multi(max_vertices, max_edges))
        .into_iter()
        .filter(|g| g.is_eulerian())
        .collect()
}

/// Connected loopless undirected multigraphs with at most `max_edges` edges,
/// once per isomorphism class.
pub fn connected_multigraphs(max_edges: usize) -> Vec<UGraph> {
    let canon = |n: usize, e: &[(usize, usize)]| -> EdgeList {
        let mut best: Option<EdgeList> = None;
        for perm in (0..n).permutations(n) {
            let mut x: EdgeList = e
                .iter()
                .map(|&(a, b)| {
                    let (p, q) = (perm[a], perm[b]);
                    (p.min(q), p.max(q))
                })
                .collect();
            x.sort_unstable();
            if best.as_ref().map_or(true, |b| x < *b) {
                best = Some(x);
            }
        }
        best.unwrap_or_default()
    };
    let mut all = Vec::new();
    let mut level: BTreeSet<(usize, EdgeList)> = BTreeSet::from([(1, Vec::new())]);
    for _ in 0..=max_edges {
        all.extend(level.iter().cloned());
        let mut next = BTreeSet::new();
        for (n, edges) in &level {
            if edges.len() == max_edges {
                continue;
            }
            for a in 0..*n {
                for b in a + 1..*n {
                    let mut grown = edges.clone();
                    grown.push((a, b));
                    next.insert((*n, canon(*n, &grown)));
                }
                let mut grown = edges.clone();
                grown.push((a, *n));
                next.insert((*n + 1, canon(*n + 1, &grown)));
            }
        }
        level = next;
    }
    all.sort_by(|a, b| (a.1.len(), a.0, &a.1).cmp(&(b.1.len(), b.0, &b.1)));
    all.into_iter()
        .map(|(n, e)| UGraph::new(n, e).expect("well formed"))
        .collect()
}

/// Connected bipartite multigraphs with at most `max_edges` edges.
pub fn connected_bipartite_multigraphs(max_edges: usize) -> Vec<UGraph> {
    connected_multigraphs(max_edges)
        .into_iter()
        .filter(|u| u.bipartition().is_some())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_family_counts() {
        // Weakly connected simple digraphs on 3 vertices, antiparallel pairs allowed: 13.
        let three: Vec<_> = weakly_connected_digraphs(FamilySpec::simple(3, 6))
            .into_iter()
            .filter(|g| g.n() == 3)
            .collect();
        assert_eq!(three.len(), 13);
        // Connected simple graphs on 4 vertices: 6, all within 6 edges.
        let four = connected_multigraphs(6)
            .into_iter()
            .filter(|u| u.n() == 4 && {
                let mut e = u.edges().to_vec();
                e.dedup();
                e.len() == u.edges().len()
            })
            .count();
        assert_eq!(four, 6);
    }

    #[test]
    fn rooted_family_is_root_connected() {
        for g in root_connected_digraphs(FamilySpec::multi(3, 3)) {
            assert!(g.is_root_connected(0));
        }
    }

    #[test]
    fn named_instances_are_as_described() {
        assert!(eulerian_hexagon().is_eulerian());
        let [strong, source] = k24_orientations();
        assert!(strong.is_strongly_connected());
        assert!(!source.is_strongly_connected());
        assert!(parking_diamond().is_acyclic());
    }
}
