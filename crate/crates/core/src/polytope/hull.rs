//! Facets of full-dimensional lattice polytopes by exhaustive hyperplane search.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::algebra::{cofactor_normal, gcd_i64};
use crate::sets::IndexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct HullFacet {
    /// Primitive integer normal; `normal . p <= offset` holds for every point.
    pub normal: Vec<i64>,
    pub offset: i64,
    /// Indices of the points lying on the facet.
    pub incident: IndexSet,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Facets of `conv(points)`, where the points are distinct, lie in `Z^d` and
/// affinely span it (`d >= 1`). Sorted by `(offset, normal)`.
///
/// Every `d`-subset of points spanning a hyperplane is tested for
/// one-sidedness; hyperplanes are merged by their primitive normal.
pub(crate) fn full_dimensional_facets(points: &[Vec<i64>]) -> Vec<HullFacet> {
    let d = points[0].len();
    debug_assert!(d >= 1 && points.len() > d);
    let mut found: BTreeMap<Vec<i64>, HullFacet> = BTreeMap::new();
    let mut diffs: Vec<Vec<i64>> = Vec::with_capacity(d.saturating_sub(1));
    for subset in (0..points.len()).combinations(d) {
        let p0 = &points[subset[0]];
        // A facet already found that contains the whole subset gives nothing new.
        let mask = IndexSet::from_indices(subset.iter().copied());
        if found.values().any(|f| mask.is_subset(f.incident)) {
            continue;
        }
        diffs.clear();
        diffs.extend(
            subset[1..]
                .iter()
                .map(|&i| points[i].iter().zip(p0).map(|(a, b)| a - b).collect()),
        );
        let mut normal = cofactor_normal(&diffs, d);
        let g = gcd_i64(normal.iter().copied());
        if g == 0 {
            continue;
        }
        for x in normal.iter_mut() {
            *x /= g;
        }
        let mut offset = dot(&normal, p0);
        let values: Vec<i64> = points.iter().map(|p| dot(&normal, p)).collect();
        let max = *values.iter().max().expect("nonempty");
        let min = *values.iter().min().expect("nonempty");
        if max > offset && min < offset {
            continue;
        }
        if max > offset {
            for x in normal.iter_mut() {
                *x = -*x;
            }
            offset = -offset;
        }
        let incident: IndexSet = (0..points.len())
            .filter(|&i| dot(&normal, &points[i]) == offset)
            .collect();
        found.entry(normal.clone()).or_insert(HullFacet {
            normal,
            offset,
            incident,
        });
    }
    let mut facets: Vec<HullFacet> = found.into_values().collect();
    facets.sort_by(|a, b| (a.offset, &a.normal).cmp(&(b.offset, &b.normal)));
    facets
}
