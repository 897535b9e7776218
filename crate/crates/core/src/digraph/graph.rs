use serde::Serialize;

use super::GraphError;
use crate::sets::{EdgeSet, IndexSet, MAX_ELEMENTS};

/// Multidigraph on vertices `0..n`; loops and parallel edges are allowed and an
/// edge is identified by its position in the edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityFlags {
    pub weakly_connected: bool,
    pub strongly_connected: bool,
    pub s_root_connected: bool,
    pub eulerian: bool,
}

impl DiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if n > MAX_ELEMENTS {
            return Err(GraphError::TooManyVertices { n });
        }
        if edges.len() > MAX_ELEMENTS {
            return Err(GraphError::TooManyEdges { m: edges.len() });
        }
        if let Some((i, &(t, h))) = edges.iter().enumerate().find(|(_, &(t, h))| t >= n || h >= n) {
            return Err(GraphError::VertexOutOfRange {
                edge: i,
                vertex: t.max(h),
                n,
            });
        }
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn tail(&self, e: usize) -> usize {
        self.edges[e].0
    }

    pub fn head(&self, e: usize) -> usize {
        self.edges[e].1
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].0 == self.edges[e].1
    }

    pub fn all_edges(&self) -> EdgeSet {
        IndexSet::full(self.m())
    }

    pub fn all_vertices(&self) -> IndexSet {
        IndexSet::full(self.n)
    }

    /// Number of incoming edges, loops included.
    pub fn indegree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(_, h)| h == v).count()
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(t, _)| t == v).count()
    }

    /// The vector `1_head - 1_tail` of edge `e`; zero for loops.
    pub fn incidence_vector(&self, e: usize) -> Vec<i64> {
        let mut x = vec![0i64; self.n];
        let (t, h) = self.edges[e];
        x[h] += 1;
        x[t] -= 1;
        x
    }

    /// Net degree vector `sum over e in F of (1_head - 1_tail)`.
    pub fn net_degree_vector(&self, edges: EdgeSet) -> Vec<i64> {
        let mut x = vec![0i64; self.n];
        for e in edges.iter() {
            let (t, h) = self.edges[e];
            x[h] += 1;
            x[t] -= 1;
        }
        x
    }

    /// Vertices reachable from `s` along directed paths using only `edges`.
    pub fn reachable(&self, s: usize, edges: EdgeSet) -> IndexSet {
        let mut seen = IndexSet::singleton(s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for e in edges.iter() {
                let (t, h) = self.edges[e];
                if t == u && !seen.contains(h) {
                    seen = seen.insert(h);
                    stack.push(h);
                }
            }
        }
        seen
    }

    /// Vertices that can reach `s` using only `edges`.
    pub fn coreachable(&self, s: usize, edges: EdgeSet) -> IndexSet {
        let mut seen = IndexSet::singleton(s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for e in edges.iter() {
                let (t, h) = self.edges[e];
                if h == u && !seen.contains(t) {
                    seen = seen.insert(t);
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// Weak component labels (smallest vertex of each component) for the
    /// spanning subgraph with edge set `edges`.
    pub fn weak_components(&self, edges: EdgeSet) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in edges.iter() {
            let (t, h) = self.edges[e];
            let (a, b) = (find(&mut parent, t), find(&mut parent, h));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    pub fn weak_component_count(&self, edges: EdgeSet) -> usize {
        let labels = self.weak_components(edges);
        labels.iter().enumerate().filter(|&(v, &l)| v == l).count()
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.n <= 1 || self.weak_component_count(self.all_edges()) == 1
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = self.all_vertices();
        self.reachable(0, self.all_edges()) == all && self.coreachable(0, self.all_edges()) == all
    }

    pub fn is_root_connected(&self, s: usize) -> bool {
        self.reachable(s, self.all_edges()) == self.all_vertices()
    }

    pub fn is_eulerian(&self) -> bool {
        (0..self.n).all(|v| self.indegree(v) == self.outdegree(v))
    }

    pub fn connectivity_flags(&self, s: usize) -> ConnectivityFlags {
        ConnectivityFlags {
            weakly_connected: self.is_weakly_connected(),
            strongly_connected: self.is_strongly_connected(),
            s_root_connected: self.is_root_connected(s),
            eulerian: self.is_eulerian(),
        }
    }

    /// Whether the spanning subgraph with edge set `edges` has no directed cycle
    /// (a loop counts as a directed cycle).
    pub fn is_acyclic_on(&self, edges: EdgeSet) -> bool {
        let mut indeg = vec![0usize; self.n];
        for e in edges.iter() {
            indeg[self.edges[e].1] += 1;
        }
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(u) = queue.pop() {
            removed += 1;
            for e in edges.iter() {
                let (t, h) = self.edges[e];
                if t == u {
                    indeg[h] -= 1;
                    if indeg[h] == 0 {
                        queue.push(h);
                    }
                }
            }
        }
        removed == self.n
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_on(self.all_edges())
    }

    /// Whether `edges` contains no cycle of the underlying undirected multigraph
    /// (loops and parallel pairs count as cycles).
    pub fn is_forest_on(&self, edges: EdgeSet) -> bool {
        self.weak_component_count(edges) + edges.len() == self.n
    }

    /// Spanning subgraph keeping only the edges in `keep`, renumbered in order.
    pub fn edge_subgraph(&self, keep: EdgeSet) -> DiGraph {
        DiGraph {
            n: self.n,
            edges: keep.iter().map(|e| self.edges[e]).collect(),
        }
    }

    /// Induced subgraph on the vertex set `vertices`, with vertices and edges
    /// renumbered in increasing order.
    pub fn induced_subgraph(&self, vertices: IndexSet) -> DiGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        DiGraph {
            n: vertices.len(),
            edges: self
                .edges
                .iter()
                .filter(|&&(t, h)| vertices.contains(t) && vertices.contains(h))
                .map(|&(t, h)| (index[t], index[h]))
                .collect(),
        }
    }

    /// The graph with every edge reversed.
    pub fn reversed(&self) -> DiGraph {
        DiGraph {
            n: self.n,
            edges: self.edges.iter().map(|&(t, h)| (h, t)).collect(),
        }
    }

    /// Reverses exactly the edges in `flip`.
    pub fn with_reversed(&self, flip: EdgeSet) -> DiGraph {
        DiGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, &(t, h))| if flip.contains(i) { (h, t) } else { (t, h) })
                .collect(),
        }
    }

    /// Relabels vertices by `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabeled(&self, perm: &[usize]) -> DiGraph {
        DiGraph {
            n: self.n,
            edges: self.edges.iter().map(|&(t, h)| (perm[t], perm[h])).collect(),
        }
    }

    pub fn underlying(&self) -> UGraph {
        UGraph {
            n: self.n,
            edges: self.edges.clone(),
        }
    }

    /// Whether every edge lies on a directed cycle (loops included) or is a
    /// bridge of the underlying graph.
    pub fn non_bridges_on_directed_cycles(&self) -> bool {
        let bridges = self.underlying().bridges();
        (0..self.m()).all(|e| {
            if bridges.contains(e) {
                return true;
            }
            let (t, h) = self.edges[e];
            self.reachable(h, self.all_edges()).contains(t)
        })
    }
}

/// Undirected multigraph; edge `i` joins `edges[i].0` and `edges[i].1`, and
/// that listed order is the "forward" direction when orienting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl UGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        // Validation is the same as for digraphs.
        let g = DiGraph::new(n, edges)?;
        Ok(g.underlying())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The orientation in which edge `i` is `edges[i].0 -> edges[i].1` when
    /// bit `i` of `forward` is set and reversed otherwise.
    pub fn orient(&self, forward: EdgeSet) -> DiGraph {
        DiGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if forward.contains(i) { (u, v) } else { (v, u) })
                .collect(),
        }
    }

    fn as_digraph(&self) -> DiGraph {
        DiGraph {
            n: self.n,
            edges: self.edges.clone(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.as_digraph().is_weakly_connected()
    }

    /// A proper 2-coloring (`true` = second class) if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let cu = color[u].expect("colored before push");
                for &(a, b) in &self.edges {
                    let other = if a == u {
                        b
                    } else if b == u {
                        a
                    } else {
                        continue;
                    };
                    match color[other] {
                        None => {
                            color[other] = Some(!cu);
                            stack.push(other);
                        }
                        Some(c) if c == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    /// Edges whose removal increases the number of connected components.
    pub fn bridges(&self) -> EdgeSet {
        let g = self.as_digraph();
        let all = g.all_edges();
        let base = g.weak_component_count(all);
        (0..self.m())
            .filter(|&e| g.weak_component_count(all.remove(e)) > base)
            .collect()
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Spanning trees of a connected graph as edge sets, in lexicographic order.
    pub fn spanning_trees(&self) -> Vec<EdgeSet> {
        if self.n == 0 {
            return vec![EdgeSet::EMPTY];
        }
        let g = self.as_digraph();
        IndexSet::subsets_of_size(self.m(), self.n - 1)
            .filter(|&t| g.is_forest_on(t))
            .collect()
    }
}
