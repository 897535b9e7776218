//! Interior polynomials of all orientations of an undirected multigraph.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::Polynomial;
use crate::digraph::UGraph;
use crate::dijoin::{min_dijoins, DijoinError};
use crate::polytope::{interior_polynomial, PolytopeError};
use crate::sets::{EdgeSet, IndexSet};

pub const DEFAULT_SCAN_LIMIT: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientScanError {
    #[error("{edges} edges exceeds the scan limit of {limit}")]
    TooLarge { edges: usize, limit: usize },
    #[error("the graph is not connected")]
    DisconnectedInput,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Dijoin(#[from] DijoinError),
}

/// The two sides of the degree bounds for a standard orientation of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteBounds {
    pub smaller_side: usize,
    pub larger_side: usize,
    pub degree: usize,
    pub nu: usize,
    /// `smaller_side - 1 - degree`.
    pub degree_defect: i64,
    /// `nu - larger_side`.
    pub cut_defect: i64,
}

impl BipartiteBounds {
    pub fn holds(&self) -> bool {
        self.degree_defect >= 0 && self.cut_defect >= 0 && self.degree_defect == self.cut_defect
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrientScan {
    pub orientations: u64,
    /// Distinct interior polynomials with the number of orientations giving each.
    pub polynomials: Vec<(Polynomial, u64)>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub min_degree_attainers: u64,
    pub max_degree_attainers: u64,
    /// `|V| - 1 - #bridges`.
    pub predicted_max_degree: usize,
    /// Maximum degree is attained exactly by the orientations in which every
    /// non-bridge edge lies on a directed cycle.
    pub max_degree_rule_holds: bool,
    /// For bipartite input, whether both standard orientations attain the minimum degree.
    pub standard_attains_min_degree: Option<bool>,
    pub bipartite_bounds: Option<BipartiteBounds>,
    pub coefficientwise_minimum: Option<Polynomial>,
    pub coefficientwise_maximum: Option<Polynomial>,
    /// Polynomials not coefficientwise above any other.
    pub minimal_polynomials: Vec<Polynomial>,
    pub maximal_polynomials: Vec<Polynomial>,
    #[serde(skip)]
    by_mask: Vec<Polynomial>,
}

impl OrientScan {
    /// The interior polynomial of the orientation with forward edges `mask`.
    pub fn polynomial_of(&self, forward: EdgeSet) -> &Polynomial {
        &self.by_mask[forward.bits() as usize]
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.polynomials.iter().any(|(q, _)| q == p)
    }

    pub fn holds(&self) -> bool {
        self.max_degree_rule_holds
            && self.standard_attains_min_degree.unwrap_or(true)
            && self.bipartite_bounds.as_ref().map_or(true, BipartiteBounds::holds)
    }
}

fn degree(p: &Polynomial) -> usize {
    p.degree().unwrap_or(0)
}

pub fn orient_scan(u: &UGraph, limit: usize) -> Result<OrientScan, OrientScanError> {
    let m = u.m();
    if m > limit {
        return Err(OrientScanError::TooLarge { edges: m, limit });
    }
    if !u.is_connected() {
        return Err(OrientScanError::DisconnectedInput);
    }
    let total = 1u64 << m;
    let full = EdgeSet::full(m);
    // Reversing every edge negates the polytope, so half the masks suffice.
    let half: Vec<u64> = (0..total)
        .filter(|&b| m == 0 || b & (1 << (m - 1)) == 0)
        .collect();
    let computed: Vec<(u64, Polynomial, bool)> = half
        .par_iter()
        .map(|&b| {
            let g = u.orient(IndexSet(b));
            interior_polynomial(&g).map(|p| (b, p, g.non_bridges_on_directed_cycles()))
        })
        .collect::<Result<_, _>>()?;
    let mut by_mask = vec![Polynomial::zero(); total as usize];
    let mut rule = vec![false; total as usize];
    for (b, p, r) in computed {
        let c = full.difference(IndexSet(b)).bits() as usize;
        by_mask[c] = p.clone();
        rule[c] = r;
        by_mask[b as usize] = p;
        rule[b as usize] = r;
    }

    let mut counts: BTreeMap<Vec<i64>, (Polynomial, u64)> = BTreeMap::new();
    for p in &by_mask {
        let key = p.to_i64_vec().expect("small coefficients");
        counts.entry(key).or_insert_with(|| (p.clone(), 0)).1 += 1;
    }
    let polynomials: Vec<(Polynomial, u64)> = counts.into_values().collect();
    let min_degree = by_mask.iter().map(degree).min().unwrap_or(0);
    let max_degree = by_mask.iter().map(degree).max().unwrap_or(0);
    let predicted_max_degree = u.n() - 1 - u.bridges().len();
    let max_degree_rule_holds = max_degree == predicted_max_degree
        && by_mask
            .iter()
            .zip(&rule)
            .all(|(p, &r)| (degree(p) == max_degree) == r);

    // The bounds need both sides nonempty.
    let (standard_attains_min_degree, bipartite_bounds) = match u.bipartition() {
        None => (None, None),
        Some(_) if u.n() < 2 => (None, None),
        Some(side) => {
            let forward = EdgeSet::from_indices(
                (0..m).filter(|&j| !side[u.edges()[j].0]),
            );
            let attains = degree(&by_mask[forward.bits() as usize]) == min_degree
                && degree(&by_mask[full.difference(forward).bits() as usize]) == min_degree;
            let g = u.orient(forward);
            let nu = min_dijoins(&g)?.nu;
            let w = side.iter().filter(|&&s| s).count();
            let small = w.min(u.n() - w);
            let large = w.max(u.n() - w);
            let d = degree(&by_mask[forward.bits() as usize]);
            let bounds = BipartiteBounds {
                smaller_side: small,
                larger_side: large,
                degree: d,
                nu,
                degree_defect: small as i64 - 1 - d as i64,
                cut_defect: nu as i64 - large as i64,
            };
            (Some(attains), Some(bounds))
        }
    };

    let distinct: Vec<&Polynomial> = polynomials.iter().map(|(p, _)| p).collect();
    let minimal_polynomials: Vec<Polynomial> = distinct
        .iter()
        .filter(|p| !distinct.iter().any(|q| q != *p && q.coefficientwise_le(p)))
        .map(|p| (*p).clone())
        .collect();
    let maximal_polynomials: Vec<Polynomial> = distinct
        .iter()
        .filter(|p| !distinct.iter().any(|q| q != *p && p.coefficientwise_le(q)))
        .map(|p| (*p).clone())
        .collect();
    let coefficientwise_minimum = match &minimal_polynomials[..] {
        [p] => Some(p.clone()),
        _ => None,
    };
    let coefficientwise_maximum = match &maximal_polynomials[..] {
        [p] => Some(p.clone()),
        _ => None,
    };

    Ok(OrientScan {
        orientations: total,
        min_degree,
        max_degree,
        min_degree_attainers: by_mask.iter().filter(|p| degree(p) == min_degree).count() as u64,
        max_degree_attainers: by_mask.iter().filter(|p| degree(p) == max_degree).count() as u64,
        predicted_max_degree,
        max_degree_rule_holds,
        standard_attains_min_degree,
        bipartite_bounds,
        coefficientwise_minimum,
        coefficientwise_maximum,
        minimal_polynomials,
        maximal_polynomials,
        polynomials,
        by_mask,
    })
}
