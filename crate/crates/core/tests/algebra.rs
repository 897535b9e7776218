mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rootpoly::algebra::{determinant, to_rational_vec, Polynomial, RatMatrix};
use rootpoly::catalog;

fn m(rows: &[Vec<i64>], cols: usize) -> RatMatrix {
    RatMatrix::from_int_rows(rows, cols).unwrap()
}

fn q(v: &[i64]) -> Vec<BigRational> {
    to_rational_vec(v)
}

#[test]
fn rank_examples() {
    assert_eq!(RatMatrix::identity(3).rank(), 3);
    assert_eq!(RatMatrix::zeros(2, 5).rank(), 0);
    for g in [catalog::five_cut_digraph(), catalog::eulerian_hexagon(), catalog::acyclic_triangle()] {
        let inc = common::incidence_matrix(&g);
        assert_eq!(m(&inc, g.m()).rank(), g.n() - 1);
    }
}

#[test]
fn kernel_vectors_on_supports() {
    let a = m(&[vec![1, 0, 1], vec![0, 1, 1]], 3);
    assert_eq!(a.kernel_vector_on_support(&[0, 1, 2]).unwrap(), Some(vec![1, 1, -1]));
    assert_eq!(a.kernel_vector_on_support(&[0, 1]).unwrap(), None);
    let g = catalog::directed_triangle();
    let inc = m(&common::incidence_matrix(&g), 3);
    assert_eq!(inc.kernel_vector_on_support(&[0, 1, 2]).unwrap(), Some(vec![1, 1, 1]));
}

#[test]
fn solve_examples() {
    let id = RatMatrix::identity(3);
    assert_eq!(id.solve(&q(&[1, 2, 3])).unwrap(), Some(q(&[1, 2, 3])));
    let a = m(&[vec![1, 1], vec![1, -1]], 2);
    assert_eq!(a.solve(&q(&[2, 0])).unwrap(), Some(q(&[1, 1])));
    let b = m(&[vec![1, 1], vec![2, 2]], 2);
    assert_eq!(b.solve(&q(&[1, 3])).unwrap(), None);
}

#[test]
fn polynomial_reversal_and_display() {
    let p = Polynomial::from(vec![1, 2, 0]);
    assert_eq!(p.degree(), Some(1));
    assert_eq!(p.reversed(3).unwrap(), Polynomial::from(vec![0, 0, 2, 1]));
    assert!(Polynomial::from(vec![1, 3, 4]).reversed(1).is_none());
    assert_eq!(Polynomial::from(vec![1, 3, 4]).to_string(), "4x^2 + 3x + 1");
    assert!(Polynomial::from(vec![1, 3, 4, 4, 3, 1]).is_palindromic());
}

proptest! {
    #[test]
    fn rank_matches_fraction_free_elimination(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..5)) {
        prop_assert_eq!(m(&rows, 4).rank(), common::rank(&rows));
    }

    #[test]
    fn determinant_matches_bareiss(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 4)) {
        let wide: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        prop_assert_eq!(determinant(&rows), BigInt::from(common::det(wide)));
    }

    #[test]
    fn solve_recovers_planted_solutions(x in prop::collection::vec(-5i64..=5, 3)) {
        let a = m(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]], 3);
        let b = a.mul_vec(&q(&x));
        prop_assert_eq!(a.solve(&b).unwrap(), Some(q(&x)));
    }

    #[test]
    fn double_reversal_is_identity(c in prop::collection::vec(0i64..5, 1..6)) {
        let p = Polynomial::from(c.clone());
        let n = c.len() + 1;
        let back = p.reversed(n).and_then(|r| r.reversed(n));
        prop_assert_eq!(back, Some(p));
    }
}
