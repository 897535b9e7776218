use std::collections::BTreeSet;

use serde::Serialize;

use super::{Facet, FacetKind, PolytopeError, RootPolytope};
use crate::digraph::{admissible_layerings, elementary_directed_cuts, DiGraph, DirectedCut, Layering};

/// Facets of an extended root polytope matched with the objects they come from.
#[derive(Clone, Debug, Serialize)]
pub struct FacetClassification {
    /// `(facet index, elementary directed cut)` for each facet through the origin.
    pub cut_facets: Vec<(usize, DirectedCut)>,
    /// `(facet index, admissible layering with l(0) = 0)` for the other facets.
    pub layering_facets: Vec<(usize, Layering)>,
}

fn mismatch(msg: String) -> PolytopeError {
    PolytopeError::ClassificationMismatch(msg)
}

/// Values of the facet functional on the edge vectors `x_e`.
fn edge_values(g: &DiGraph, f: &Facet) -> Vec<i64> {
    (0..g.m())
        .map(|e| {
            let (t, h) = g.edges()[e];
            f.normal[h] - f.normal[t]
        })
        .collect()
}

/// Matches every facet of the extended root polytope of `g` with an elementary
/// directed cut (facets through the origin) or an admissible layering (the
/// others), and checks that both matchings are bijections.
///
/// A facet through the origin matches the cut `C` when its functional equals
/// `-1` on the edge vectors of `C` and `0` on all other edges. A facet missing
/// the origin must have offset 1, and its functional read along the edges
/// must be an admissible layering.
pub fn classify_facets(p: &RootPolytope, g: &DiGraph) -> Result<FacetClassification, PolytopeError> {
    if !g.is_weakly_connected() {
        return Err(PolytopeError::DisconnectedInput);
    }
    if p.generators().len() != g.m() + 1
        || p.generators()[0].iter().any(|&x| x != 0)
        || (0..g.m()).any(|e| p.generators()[e + 1] != g.incidence_vector(e))
    {
        return Err(mismatch("the polytope was not built from this digraph".into()));
    }
    let facets = p.facets()?;
    let cuts = elementary_directed_cuts(g).map_err(|_| PolytopeError::DisconnectedInput)?;
    let layerings: BTreeSet<Layering> = admissible_layerings(g)
        .map_err(|_| PolytopeError::DisconnectedInput)?
        .into_iter()
        .collect();

    let mut cut_facets = Vec::new();
    let mut layering_facets = Vec::new();
    let mut cut_used = vec![false; cuts.len()];
    let mut layering_seen = BTreeSet::new();
    for (i, f) in facets.iter().enumerate() {
        let values = edge_values(g, f);
        match f.kind {
            FacetKind::Cut => {
                let hits: Vec<usize> = cuts
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| {
                        values
                            .iter()
                            .enumerate()
                            .all(|(e, &v)| v == if c.edges.contains(e) { -1 } else { 0 })
                    })
                    .map(|(j, _)| j)
                    .collect();
                let [j] = hits[..] else {
                    return Err(mismatch(format!(
                        "facet {i} through the origin matches {} elementary directed cuts",
                        hits.len()
                    )));
                };
                if cut_used[j] {
                    return Err(mismatch(format!("cut {j} is matched by two facets")));
                }
                cut_used[j] = true;
                cut_facets.push((i, cuts[j].clone()));
            }
            FacetKind::Layering => {
                if f.offset != 1 {
                    return Err(mismatch(format!(
                        "facet {i} misses the origin but has offset {}",
                        f.offset
                    )));
                }
                let l = layering_from_edge_values(g, &values)
                    .ok_or_else(|| mismatch(format!("facet {i} is not a potential difference")))?;
                if !layerings.contains(&l) {
                    return Err(mismatch(format!(
                        "facet {i} gives {l:?}, which is not an admissible layering"
                    )));
                }
                if !layering_seen.insert(l.clone()) {
                    return Err(mismatch(format!("layering {l:?} is matched by two facets")));
                }
                layering_facets.push((i, l));
            }
        }
    }
    if let Some(j) = cut_used.iter().position(|&u| !u) {
        return Err(mismatch(format!(
            "elementary directed cut {:?} has no facet",
            cuts[j].edges
        )));
    }
    if layering_seen.len() != layerings.len() {
        return Err(mismatch(format!(
            "{} admissible layerings but {} facets missing the origin",
            layerings.len(),
            layering_seen.len()
        )));
    }
    Ok(FacetClassification {
        cut_facets,
        layering_facets,
    })
}

/// Integrates edge values into vertex labels with `l(0) = 0`; `None` if they
/// are inconsistent around some cycle.
fn layering_from_edge_values(g: &DiGraph, values: &[i64]) -> Option<Layering> {
    let mut label: Vec<Option<i64>> = vec![None; g.n()];
    label[0] = Some(0);
    let mut stack = vec![0usize];
    while let Some(u) = stack.pop() {
        let lu = label[u]?;
        for (e, &(t, h)) in g.edges().iter().enumerate() {
            let (other, value) = if t == u {
                (h, lu + values[e])
            } else if h == u {
                (t, lu - values[e])
            } else {
                continue;
            };
            match label[other] {
                None => {
                    label[other] = Some(value);
                    stack.push(other);
                }
                Some(existing) if existing != value => return None,
                Some(_) => {}
            }
        }
    }
    label.into_iter().collect()
}
