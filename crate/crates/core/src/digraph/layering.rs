use std::collections::BTreeSet;

use super::{DiGraph, GraphError};

/// Integer vertex labels; see [`find_layering`] and [`admissible_layerings`].
pub type Layering = Vec<i64>;

/// A labeling with `l(head) - l(tail) = 1` on every edge, normalized by
/// `l(0) = 0`; `None` if the graph is not semi-balanced.
pub fn find_layering(g: &DiGraph) -> Result<Option<Layering>, GraphError> {
    if !g.is_weakly_connected() {
        return Err(GraphError::DisconnectedInput);
    }
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut label: Vec<Option<i64>> = vec![None; g.n()];
    label[0] = Some(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let lu = label[u].expect("labeled before enqueue");
        for &(t, h) in g.edges() {
            let (other, value) = if t == u {
                (h, lu + 1)
            } else if h == u {
                (t, lu - 1)
            } else {
                continue;
            };
            if label[other].is_none() {
                label[other] = Some(value);
                queue.push_back(other);
            }
        }
    }
    let label: Vec<i64> = label.into_iter().map(|l| l.expect("connected")).collect();
    let ok = g.edges().iter().all(|&(t, h)| label[h] - label[t] == 1);
    Ok(ok.then_some(label))
}

pub fn is_admissible_layering(g: &DiGraph, l: &[i64]) -> bool {
    if g.edges().iter().any(|&(t, h)| l[h] - l[t] > 1) {
        return false;
    }
    let tight = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(t, h))| l[h] - l[t] == 1)
        .map(|(i, _)| i)
        .collect();
    g.n() <= 1 || g.weak_component_count(tight) == 1
}

/// All admissible layerings normalized by `l(0) = 0`, sorted.
///
/// The tight edges of an admissible layering contain a spanning tree, and a
/// spanning tree together with "rise by one along each tree edge" determines
/// the layering, so it suffices to try every spanning tree.
pub fn admissible_layerings(g: &DiGraph) -> Result<Vec<Layering>, GraphError> {
    if !g.is_weakly_connected() {
        return Err(GraphError::DisconnectedInput);
    }
    let mut found = BTreeSet::new();
    for tree in g.underlying().spanning_trees() {
        let l = tree_layering(g, tree);
        if is_admissible_layering(g, &l) {
            found.insert(l);
        }
    }
    Ok(found.into_iter().collect())
}

fn tree_layering(g: &DiGraph, tree: crate::sets::EdgeSet) -> Layering {
    let mut label: Vec<Option<i64>> = vec![None; g.n()];
    if g.n() == 0 {
        return Vec::new();
    }
    label[0] = Some(0);
    let mut stack = vec![0usize];
    while let Some(u) = stack.pop() {
        let lu = label[u].expect("labeled before push");
        for e in tree.iter() {
            let (t, h) = g.edges()[e];
            let (other, value) = if t == u {
                (h, lu + 1)
            } else if h == u {
                (t, lu - 1)
            } else {
                continue;
            };
            if label[other].is_none() {
                label[other] = Some(value);
                stack.push(other);
            }
        }
    }
    label.into_iter().map(|l| l.expect("spanning tree")).collect()
}
