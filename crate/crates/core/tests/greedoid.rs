mod common;

use num_bigint::BigInt;
use rootpoly::algebra::Polynomial;
use rootpoly::catalog::{self, FamilySpec};
use rootpoly::digraph::{enumerate_spanning_arborescences, DiGraph};
use rootpoly::greedoid::{branching_greedoid, semi_active_edges, semi_activity_polynomial, Greedoid, GreedoidError};
use rootpoly::sets::{EdgeSet, IndexSet};

use common::poly;

fn set(e: &[usize]) -> EdgeSet {
    EdgeSet::from_indices(e.iter().copied())
}

#[test]
fn lexmin_word_examples() {
    let g = catalog::eulerian_hexagon();
    let x = branching_greedoid(&g, 0).unwrap();
    let a = catalog::eulerian_hexagon_arborescence();
    assert_eq!(x.lexmin_feasible_word(a, &x.natural_order()).unwrap(), vec![0, 2, 7, 6, 8]);
    let edge = branching_greedoid(&DiGraph::new(2, vec![(0, 1)]).unwrap(), 0).unwrap();
    assert_eq!(edge.lexmin_feasible_word(set(&[0]), &[0]).unwrap(), vec![0]);
    let t = branching_greedoid(&catalog::acyclic_triangle(), 0).unwrap();
    assert_eq!(t.lexmin_feasible_word(set(&[0, 1]), &[0, 2, 1]).unwrap(), vec![0, 1]);
    assert!(matches!(t.lexmin_feasible_word(set(&[1, 2]), &[0, 1, 2]), Err(GreedoidError::NotABasis { .. })));
    assert!(matches!(t.lexmin_feasible_word(set(&[0, 1]), &[0, 1]), Err(GreedoidError::BadOrder)));
}

#[test]
fn lexmin_words_match_permutation_search() {
    for g in catalog::root_connected_digraphs(FamilySpec::multi(4, 6)) {
        let x = branching_greedoid(&g, 0).unwrap();
        let feasible = |f: u64| common::is_arborescence(&g, 0, f);
        for order in std::iter::once(x.natural_order()).chain(x.random_orders(2, 99)) {
            for &b in x.bases() {
                let word = x.lexmin_feasible_word(b, &order).unwrap();
                assert_eq!(Some(word), common::lexmin_word(&feasible, b.bits(), &order), "{:?}", g.edges());
            }
        }
    }
}

#[test]
fn activity_examples() {
    let t = branching_greedoid(&DiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap(), 0).unwrap();
    let a = t.external_activity(set(&[0, 1]), &[0, 1]).unwrap();
    assert!(a.active.is_empty());

    let g = catalog::eulerian_hexagon();
    let x = branching_greedoid(&g, 0).unwrap();
    let a = catalog::eulerian_hexagon_arborescence();
    let semi = semi_active_edges(&g, 0, a, &x.natural_order()).unwrap();
    assert!(semi.contains(1));
    assert!(!semi.contains(5));

    for g in catalog::root_connected_digraphs(FamilySpec::simple(4, 6)) {
        if g.is_acyclic() {
            let x = branching_greedoid(&g, 0).unwrap();
            let acts = x.activities(&x.natural_order()).unwrap();
            assert!(acts.iter().any(|b| b.active.is_empty()), "{:?}", g.edges());
        }
    }
}

#[test]
fn greedoid_polynomial_examples() {
    let x = branching_greedoid(&catalog::parking_diamond(), 0).unwrap();
    assert_eq!(poly(&x.greedoid_polynomial().unwrap()), [1, 2, 1]);
    let t = branching_greedoid(&catalog::acyclic_triangle(), 0).unwrap();
    for order in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        assert_eq!(poly(&t.greedoid_polynomial_with_order(&order).unwrap()), [1, 1]);
    }
}

#[test]
fn greedoid_polynomials_match_definition() {
    for g in catalog::weakly_connected_digraphs(FamilySpec::multi(4, 5)) {
        let x = branching_greedoid(&g, 0).unwrap();
        let lambda = x.greedoid_polynomial().unwrap();
        assert_eq!(poly(&lambda), common::greedoid_polynomial(&g, 0, &x.natural_order()), "{:?}", g.edges());
        for order in x.random_orders(2, 5) {
            assert_eq!(x.greedoid_polynomial_with_order(&order).unwrap(), lambda, "{:?}", g.edges());
        }
    }
}

#[test]
fn unreachable_part_contributes_a_power() {
    let mut seen = 0;
    for g in catalog::weakly_connected_digraphs(FamilySpec::simple(4, 6)) {
        if g.is_root_connected(0) {
            continue;
        }
        let reach = g.reachable(0, g.all_edges());
        let sub = g.induced_subgraph(reach);
        let inner = branching_greedoid(&sub, 0).unwrap().greedoid_polynomial().unwrap();
        let lambda = branching_greedoid(&g, 0).unwrap().greedoid_polynomial().unwrap();
        assert_eq!(lambda, inner.shifted(g.m() - sub.m()), "{:?}", g.edges());
        seen += 1;
    }
    assert!(seen > 0);
}

#[test]
fn semi_activity_matches_greedoid_polynomial() {
    for g in catalog::root_connected_digraphs(FamilySpec::multi(4, 6)) {
        let x = branching_greedoid(&g, 0).unwrap();
        let lambda = x.greedoid_polynomial().unwrap();
        for order in std::iter::once(x.natural_order()).chain(x.random_orders(2, 17)) {
            assert_eq!(semi_activity_polynomial(&g, 0, &order).unwrap(), lambda, "{:?} {order:?}", g.edges());
        }
    }
}

#[test]
fn tree_has_no_semi_active_edges() {
    let g = DiGraph::new(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap();
    let tree = enumerate_spanning_arborescences(&g, 0)[0];
    assert!(semi_active_edges(&g, 0, tree, &[0, 1, 2]).unwrap().is_empty());
}

#[test]
fn restriction_examples() {
    let g = catalog::eulerian_hexagon();
    let x = branching_greedoid(&g, 0).unwrap();
    let full = x.restriction(g.all_edges());
    assert_eq!(full.greedoid_polynomial().unwrap(), x.greedoid_polynomial().unwrap());
    let empty = x.restriction(EdgeSet::EMPTY);
    assert_eq!(empty.rank(), 0);
    assert_eq!(empty.greedoid_polynomial().unwrap(), Polynomial::one());
    // An acyclic root-connected edge subset: the spanning arborescence itself plus a chord.
    let acyclic = catalog::eulerian_hexagon_arborescence().insert(5);
    assert!(g.is_acyclic_on(acyclic));
    let r = x.restriction(acyclic);
    assert_ne!(r.greedoid_polynomial().unwrap().constant_term(), BigInt::from(0));
}

#[test]
fn min_restriction_examples() {
    assert_eq!(branching_greedoid(&catalog::parking_diamond(), 0).unwrap().min_restriction_k().unwrap(), 0);
    for s in 0..3 {
        let x = branching_greedoid(&catalog::directed_triangle(), s).unwrap();
        assert_eq!(x.min_restriction_k().unwrap(), 1);
    }
    assert_eq!(branching_greedoid(&catalog::lopsided_digon(), 0).unwrap().min_restriction_k().unwrap(), 2);
}

#[test]
fn matroids_are_greedoids() {
    // Uniform matroid of rank 2 on 3 elements: lambda = T(1, x) = 2 + x.
    let u23 = Greedoid::from_oracle(3, IndexSet::full(3), |s| s.len() <= 2).unwrap();
    assert_eq!(poly(&u23.greedoid_polynomial().unwrap()), [2, 1]);
    assert_eq!(u23.min_restriction_k().unwrap(), 0);
}

#[test]
fn axiom_violations_are_reported() {
    let ground = IndexSet::full(2);
    assert!(matches!(
        Greedoid::from_feasible_sets(2, ground, [set(&[0])]),
        Err(GreedoidError::EmptyNotFeasible)
    ));
    assert!(matches!(
        Greedoid::from_feasible_sets(2, ground, [EdgeSet::EMPTY, set(&[0, 1])]),
        Err(GreedoidError::NotAccessible { .. })
    ));
    assert!(matches!(
        Greedoid::from_feasible_sets(3, IndexSet::full(3), [EdgeSet::EMPTY, set(&[0]), set(&[2]), set(&[0, 1])]),
        Err(GreedoidError::ExchangeFails { .. })
    ));
}

#[test]
fn worked_example_activity() {
    let g = catalog::eulerian_hexagon();
    let x = branching_greedoid(&g, 0).unwrap();
    let a = x.external_activity(catalog::eulerian_hexagon_arborescence(), &x.natural_order()).unwrap();
    assert!(a.active.contains(1), "{:?}", a.active.to_vec());
    assert!(!a.active.contains(5), "{:?}", a.active.to_vec());
}
