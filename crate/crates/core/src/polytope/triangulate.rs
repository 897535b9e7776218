//! Pulling triangulation: cone the first point over a triangulation of every
//! facet that misses it.

use super::hull::full_dimensional_facets;

/// Simplices (as lists of indices into `points`) triangulating `conv(points)`.
/// The points must be distinct and affinely span `Z^d`.
pub(crate) fn pulling_triangulation(points: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let ids: Vec<usize> = (0..points.len()).collect();
    triangulate(points.to_vec(), ids)
}

fn triangulate(local: Vec<Vec<i64>>, ids: Vec<usize>) -> Vec<Vec<usize>> {
    let d = local[0].len();
    if local.len() == d + 1 {
        return vec![ids];
    }
    let mut out = Vec::new();
    for facet in full_dimensional_facets(&local) {
        if facet.incident.contains(0) {
            continue;
        }
        // The facet hyperplane projects injectively onto the coordinates other
        // than one where its normal is nonzero.
        let drop = facet
            .normal
            .iter()
            .position(|&c| c != 0)
            .expect("nonzero normal");
        let members: Vec<usize> = facet.incident.to_vec();
        let sub_local: Vec<Vec<i64>> = members
            .iter()
            .map(|&i| {
                local[i]
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != drop)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sub_ids: Vec<usize> = members.iter().map(|&i| ids[i]).collect();
        for mut simplex in triangulate(sub_local, sub_ids) {
            simplex.push(ids[0]);
            simplex.sort_unstable();
            out.push(simplex);
        }
    }
    out.sort();
    out
}
