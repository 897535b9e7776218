//! Per-instance checks of the degree, leading-coefficient, facet, parking and
//! greedoid identities.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::orient_scan::orient_scan;
use super::report::Report;
use super::{CliError, Options};
use crate::algebra::Polynomial;
use crate::digraph::{DiGraph, UGraph};
use crate::dijoin::{max_disjoint_directed_cuts, min_dijoins_with_limit, minfas_rooted_with_limit, minfas_with_limit};
use crate::greedoid::{branching_greedoid, semi_activity_polynomial};
use crate::matroid::OrientedRegularMatroid;
use crate::parking::{chan_transform, eulerian_duality_check, parking_enumerator};
use crate::polytope::{classify_facets, CountMode, RootPolytope};

/// Seed for the extra activity orders tried by `verify`.
pub const ORDER_SEED: u64 = 0x5eed;

fn detail(s: String) -> Option<String> {
    Some(s)
}

fn deg(p: &Polynomial) -> usize {
    p.degree().unwrap_or(0)
}

fn leading(p: &Polynomial) -> BigInt {
    p.leading_coefficient().cloned().unwrap_or_default()
}

/// Degree, leading coefficient, volume and first interior dilate of one polytope.
pub fn polytope_checks(report: &mut Report, p: &RootPolytope) -> Result<Polynomial, CliError> {
    let h = p.hstar()?;
    let k = p.first_interior_dilate()?;
    let d = p.dim();
    let interior = p.lattice_count(k, CountMode::Interior)?;
    report.check(
        "first_interior_dilate_consistency",
        deg(&h) + k as usize == d + 1 && leading(&h) == BigInt::from(interior),
        detail(format!(
            "deg h* = {}, dim = {d}, first interior dilate = {k}, interior points = {interior}",
            deg(&h)
        )),
    );
    let vol = p.normalized_volume();
    report.check(
        "hstar_at_one_equals_normalized_volume",
        h.value_at_one() == vol,
        detail(format!("h*(1) = {}, volume = {vol}", h.value_at_one())),
    );
    Ok(h)
}

pub fn verify_digraph(report: &mut Report, g: &DiGraph, opts: &Options) -> Result<(), CliError> {
    if !g.is_weakly_connected() {
        return Err(CliError::Input("the digraph is not weakly connected".into()));
    }
    let limit = opts.max_edges;
    let p = RootPolytope::of_digraph(g)?;
    let h = polytope_checks(report, &p)?;
    report.value("interior_polynomial", &h);
    let cert = min_dijoins_with_limit(g, limit)?;
    report.value("nu", cert.nu);
    report.check(
        "degree_equals_vertices_minus_one_minus_nu",
        deg(&h) + cert.nu + 1 == g.n(),
        detail(format!("deg = {}, |V| = {}, nu = {}", deg(&h), g.n(), cert.nu)),
    );
    report.check(
        "leading_coefficient_counts_net_degree_vectors",
        leading(&h) == BigInt::from(cert.net_degree_vectors.len()),
        detail(format!(
            "leading = {}, vectors = {}",
            leading(&h),
            cert.net_degree_vectors.len()
        )),
    );
    let points: BTreeSet<Vec<i64>> = p
        .lattice_points(cert.nu as u64 + 1, CountMode::Interior)?
        .into_iter()
        .collect();
    let vectors: BTreeSet<Vec<i64>> = cert.net_degree_vectors.iter().cloned().collect();
    report.check(
        "interior_points_are_net_degree_vectors",
        points == vectors,
        detail(format!("{} interior points of the (nu+1)-th dilate", points.len())),
    );
    let (packing, _) = max_disjoint_directed_cuts(g)?;
    report.check(
        "min_dijoin_equals_max_disjoint_cuts",
        packing == cert.nu,
        detail(format!("nu = {}, disjoint directed cuts = {packing}", cert.nu)),
    );
    let classification = classify_facets(&p, g);
    report.check(
        "facets_match_cuts_and_layerings",
        classification.is_ok(),
        classification.err().map(|e| e.to_string()),
    );
    if g.is_strongly_connected() {
        report.check(
            "palindromic_when_strongly_connected",
            h.is_palindromic() && deg(&h) + 1 == g.n(),
            detail(format!("interior polynomial {h}")),
        );
    }

    if g.m() <= crate::greedoid::TABLE_LIMIT {
        rooted_checks(report, g, opts)?;
    }
    if g.is_eulerian() {
        let fas = minfas_with_limit(g, limit)?;
        let duality = eulerian_duality_check(g, 0)?;
        let bound = g.m() as i64 - g.n() as i64 + 1;
        report.check(
            "eulerian_parking_degree",
            deg(&duality.park) as i64 == bound - fas.size as i64,
            detail(format!(
                "deg park = {}, |E|-|V|+1 = {bound}, minfas = {}",
                deg(&duality.park),
                fas.size
            )),
        );
        report.check(
            "eulerian_parking_equals_cographic_interior",
            duality.holds(),
            detail(format!(
                "park = {}, cographic interior = {}",
                duality.park, duality.cographic_interior
            )),
        );
    }
    Ok(())
}

fn rooted_checks(report: &mut Report, g: &DiGraph, opts: &Options) -> Result<(), CliError> {
    let roots: Vec<usize> = match opts.root {
        Some(s) => vec![s],
        None => (0..g.n()).filter(|&s| g.is_root_connected(s)).collect(),
    };
    let bound = g.m() as i64 - g.n() as i64 + 1;
    let mut chan = true;
    let mut degree = true;
    let mut lowest = true;
    let mut order_free = true;
    let mut semi = true;
    let mut notes = Vec::new();
    for &s in &roots {
        if !g.is_root_connected(s) {
            return Err(CliError::Input(format!("not every vertex is reachable from {s}")));
        }
        let x = branching_greedoid(g, s)?;
        let lambda = x.greedoid_polynomial()?;
        let park = parking_enumerator(g, s)?;
        let fas = minfas_rooted_with_limit(g, s, opts.max_edges)?;
        chan &= chan_transform(g, s)? == lambda;
        degree &= deg(&park) as i64 == bound - fas.size as i64;
        lowest &= lambda.lowest_degree() == Some(fas.size);
        for order in x.random_orders(3, ORDER_SEED) {
            order_free &= x.greedoid_polynomial_with_order(&order)? == lambda;
        }
        semi &= semi_activity_polynomial(g, s, &x.natural_order())? == lambda;
        notes.push(format!("root {s}: lambda = {lambda}, park = {park}, minfas_rooted = {}", fas.size));
    }
    if roots.is_empty() {
        return Ok(());
    }
    let joined = notes.join("; ");
    report.check("chan_identity", chan, detail(joined.clone()));
    report.check("parking_degree_rooted_minfas", degree, None);
    report.check("greedoid_lowest_exponent_rooted_minfas", lowest, None);
    report.check("greedoid_order_independence", order_free, None);
    report.check("semi_activity_polynomial_equals_greedoid_polynomial", semi, None);
    Ok(())
}

pub fn verify_matroid(report: &mut Report, m: &OrientedRegularMatroid) -> Result<(), CliError> {
    let p = m.polytope()?;
    let h = polytope_checks(report, &p)?;
    report.value("interior_polynomial", &h);
    let cert = m.min_dijoins()?;
    report.value("nu", cert.nu);
    report.check(
        "degree_equals_rank_minus_nu",
        deg(&h) + cert.nu == m.rank(),
        detail(format!("deg = {}, rank = {}, nu = {}", deg(&h), m.rank(), cert.nu)),
    );
    report.check(
        "leading_coefficient_counts_dijoin_column_sums",
        leading(&h) == BigInt::from(cert.net_degree_vectors.len()),
        detail(format!(
            "leading = {}, sums = {}",
            leading(&h),
            cert.net_degree_vectors.len()
        )),
    );
    let facets = m.check_facet_description()?;
    report.check(
        "facets_match_cocircuits_and_admissible_vectors",
        facets.holds(),
        (!facets.failures.is_empty()).then(|| facets.failures.join("; ")),
    );
    Ok(())
}

pub fn verify_ugraph(report: &mut Report, u: &UGraph) -> Result<(), CliError> {
    let scan = orient_scan(u, super::orient_scan::DEFAULT_SCAN_LIMIT)?;
    report.value("min_degree", scan.min_degree);
    report.value("max_degree", scan.max_degree);
    report.check(
        "max_degree_attained_by_cycle_covered_orientations",
        scan.max_degree_rule_holds,
        detail(format!(
            "max degree {}, predicted {}",
            scan.max_degree, scan.predicted_max_degree
        )),
    );
    if let Some(ok) = scan.standard_attains_min_degree {
        report.check("standard_orientation_minimizes_degree", ok, None);
    }
    if let Some(b) = &scan.bipartite_bounds {
        report.check(
            "bipartite_bounds_have_equal_defects",
            b.holds(),
            detail(format!(
                "degree defect {}, cut defect {}",
                b.degree_defect, b.cut_defect
            )),
        );
    }
    Ok(())
}
