//! Graph parking functions, their enumerator, and its relation to the
//! branching greedoid and to the cographic interior polynomial.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::Polynomial;
use crate::digraph::{DiGraph, GraphError};
use crate::matroid::{MatroidError, OrientedRegularMatroid};
use crate::sets::IndexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParkingError {
    #[error("not every vertex is reachable from root {root}")]
    NotRootConnected { root: usize },
    #[error("enumerator degree {degree} exceeds |E| - |V| + 1 = {bound}")]
    NegativeExponent { degree: usize, bound: i64 },
    #[error("the digraph is not Eulerian")]
    NotEulerian,
    #[error("the digraph is not connected")]
    DisconnectedInput,
    #[error("expected {expected} labels, one per non-root vertex, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Outcome of the parking test, with the first violating vertex set when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParkingCheck {
    pub is_parking: bool,
    pub violating_set: Option<Vec<usize>>,
}

fn non_root_vertices(g: &DiGraph, s: usize) -> Vec<usize> {
    (0..g.n()).filter(|&v| v != s).collect()
}

/// Number of edges from outside `set` into `u`.
fn entering(g: &DiGraph, set: IndexSet, u: usize) -> usize {
    g.edges()
        .iter()
        .filter(|&&(t, h)| h == u && !set.contains(t))
        .count()
}

fn violating_set(g: &DiGraph, s: usize, labels: &[usize]) -> Option<IndexSet> {
    let others = non_root_vertices(g, s);
    let k = others.len();
    for size in 1..=k {
        for pick in IndexSet::subsets_of_size(k, size) {
            let set = IndexSet::from_indices(pick.iter().map(|i| others[i]));
            let ok = pick
                .iter()
                .any(|i| labels[i] < entering(g, set, others[i]));
            if !ok {
                return Some(set);
            }
        }
    }
    None
}

/// Tests `p`, given on the non-root vertices in increasing order, against every
/// nonempty vertex set avoiding the root. The witness is smallest first.
pub fn is_parking_function(g: &DiGraph, s: usize, p: &[usize]) -> Result<ParkingCheck, ParkingError> {
    if s >= g.n() {
        return Err(GraphError::NoSuchVertex { vertex: s, n: g.n() }.into());
    }
    if p.len() + 1 != g.n() {
        return Err(ParkingError::WrongLength {
            expected: g.n() - 1,
            found: p.len(),
        });
    }
    let witness = violating_set(g, s, p);
    Ok(ParkingCheck {
        is_parking: witness.is_none(),
        violating_set: witness.map(|w| w.to_vec()),
    })
}

/// All parking functions rooted at `s`, in lexicographic order.
pub fn parking_functions(g: &DiGraph, s: usize) -> Result<Vec<Vec<usize>>, ParkingError> {
    if s >= g.n() {
        return Err(GraphError::NoSuchVertex { vertex: s, n: g.n() }.into());
    }
    let others = non_root_vertices(g, s);
    let bounds: Vec<usize> = others
        .iter()
        .map(|&v| entering(g, IndexSet::singleton(v), v))
        .collect();
    if bounds.iter().any(|&b| b == 0) {
        return Ok(Vec::new());
    }
    let candidates = |first: usize| {
        let mut out = Vec::new();
        let mut p = vec![0usize; bounds.len()];
        p[0] = first;
        loop {
            if violating_set(g, s, &p).is_none() {
                out.push(p.clone());
            }
            let mut i = bounds.len();
            loop {
                if i == 1 {
                    return out;
                }
                i -= 1;
                p[i] += 1;
                if p[i] < bounds[i] {
                    break;
                }
                p[i] = 0;
            }
        }
    };
    if bounds.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    Ok((0..bounds[0])
        .into_par_iter()
        .map(candidates)
        .collect::<Vec<_>>()
        .concat())
}

/// `sum over parking functions p of x^{|p|}`.
pub fn parking_enumerator(g: &DiGraph, s: usize) -> Result<Polynomial, ParkingError> {
    let mut counts = vec![0u64; g.m() + 1];
    for p in parking_functions(g, s)? {
        counts[p.iter().sum::<usize>()] += 1;
    }
    Ok(Polynomial::from_coeffs(counts))
}

/// The greedoid polynomial obtained from the enumerator by reversing its
/// coefficients into degree `|E| - |V| + 1`.
pub fn chan_transform(g: &DiGraph, s: usize) -> Result<Polynomial, ParkingError> {
    if s >= g.n() {
        return Err(GraphError::NoSuchVertex { vertex: s, n: g.n() }.into());
    }
    if !g.is_root_connected(s) {
        return Err(ParkingError::NotRootConnected { root: s });
    }
    let park = parking_enumerator(g, s)?;
    let bound = g.m() as i64 - g.n() as i64 + 1;
    let degree = park.degree().unwrap_or(0);
    if bound < 0 || degree as i64 > bound {
        return Err(ParkingError::NegativeExponent { degree, bound });
    }
    Ok(park
        .reversed(bound as usize)
        .expect("degree bound checked above"))
}

/// Enumerators at every root compared with the interior polynomial of the cographic matroid.
#[derive(Clone, Debug, Serialize)]
pub struct EulerianDualityReport {
    pub root: usize,
    pub park: Polynomial,
    pub cographic_interior: Polynomial,
    pub park_by_root: Vec<Polynomial>,
    pub equal: bool,
    pub root_independent: bool,
}

impl EulerianDualityReport {
    pub fn holds(&self) -> bool {
        self.equal && self.root_independent
    }
}

pub fn eulerian_duality_check(g: &DiGraph, s: usize) -> Result<EulerianDualityReport, ParkingError> {
    if s >= g.n() {
        return Err(GraphError::NoSuchVertex { vertex: s, n: g.n() }.into());
    }
    if !g.is_weakly_connected() {
        return Err(ParkingError::DisconnectedInput);
    }
    if !g.is_eulerian() {
        return Err(ParkingError::NotEulerian);
    }
    let park_by_root = (0..g.n())
        .map(|r| parking_enumerator(g, r))
        .collect::<Result<Vec<_>, _>>()?;
    let cographic_interior = OrientedRegularMatroid::cographic(g)?.interior_polynomial()?;
    let park = park_by_root[s].clone();
    Ok(EulerianDualityReport {
        root: s,
        equal: park == cographic_interior,
        root_independent: park_by_root.iter().all(|p| *p == park),
        park,
        cographic_interior,
        park_by_root,
    })
}
