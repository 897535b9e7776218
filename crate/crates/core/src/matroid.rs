//! Oriented regular matroids given by totally unimodular matrices.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{determinant, AlgebraError, Polynomial, RatMatrix};
use crate::digraph::DiGraph;
use crate::dijoin::{DijoinCertificate, DEFAULT_EDGE_LIMIT};
use crate::polytope::{FacetKind, PolytopeError, RootPolytope};
use crate::sets::{IndexSet, SignedSet, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("row {row} has {found} entries, expected {expected}")]
    DimensionMismatch { row: usize, expected: usize, found: usize },
    #[error("entry ({row}, {col}) = {value} is not in {{-1, 0, 1}}")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },
    #[error("{cols} columns exceed the supported maximum of 64")]
    TooManyColumns { cols: usize },
    #[error("submatrix with rows {rows:?} and columns {cols:?} has determinant {determinant}")]
    NotTotallyUnimodular {
        rows: Vec<usize>,
        cols: Vec<usize>,
        determinant: String,
    },
    #[error("pivoting produced a non-unit pivot or an entry outside {{-1, 0, 1}}")]
    RankDeficientPivot,
    #[error("{columns} columns exceed the exhaustive-search limit of {limit}")]
    TooLarge { columns: usize, limit: usize },
    #[error("identity check failed: {0}")]
    IdentityCheck(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Outcome of the exhaustive total-unimodularity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TuCheck {
    TotallyUnimodular,
    /// The first offending square submatrix (smallest size, then lexicographic).
    Violation {
        rows: Vec<usize>,
        cols: Vec<usize>,
        determinant: String,
    },
}

impl TuCheck {
    pub fn is_tu(&self) -> bool {
        matches!(self, TuCheck::TotallyUnimodular)
    }
}

/// Checks every square submatrix determinant.
pub fn is_totally_unimodular(a: &[Vec<i64>], cols: usize) -> TuCheck {
    let rows = a.len();
    for size in 1..=rows.min(cols) {
        for rs in (0..rows).combinations(size) {
            for cs in (0..cols).combinations(size) {
                let sub: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| a[r][c]).collect())
                    .collect();
                let det = determinant(&sub);
                if det.magnitude() > &One::one() {
                    return TuCheck::Violation {
                        rows: rs,
                        cols: cs,
                        determinant: det.to_string(),
                    };
                }
            }
        }
    }
    TuCheck::TotallyUnimodular
}

/// A cocircuit with its sign split, normalized so the smallest element is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignedCocircuit {
    pub positive: IndexSet,
    pub negative: IndexSet,
    pub directed: bool,
}

impl SignedCocircuit {
    pub fn support(&self) -> IndexSet {
        self.positive.union(self.negative)
    }

    pub fn signed_set(&self) -> SignedSet {
        SignedSet {
            positive: self.positive,
            negative: self.negative,
        }
    }
}

/// Result of checking the facet description of the extended root polytope
/// against directed cocircuits and admissible vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetDescriptionReport {
    pub cocircuit_facets: usize,
    pub other_facets: usize,
    pub directed_cocircuits: usize,
    pub failures: Vec<String>,
}

impl FacetDescriptionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// An oriented regular matroid: the columns of a totally unimodular matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedRegularMatroid {
    rows: usize,
    cols: usize,
    a: Vec<Vec<i64>>,
    rank: usize,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

impl OrientedRegularMatroid {
    /// Validates entries and total unimodularity.
    pub fn new(cols: usize, a: Vec<Vec<i64>>) -> Result<Self, MatroidError> {
        let m = Self::new_trusted(cols, a)?;
        if let TuCheck::Violation {
            rows,
            cols,
            determinant,
        } = is_totally_unimodular(&m.a, m.cols)
        {
            return Err(MatroidError::NotTotallyUnimodular {
                rows,
                cols,
                determinant,
            });
        }
        Ok(m)
    }

    /// Validates entries only; the caller vouches for total unimodularity.
    pub fn new_trusted(cols: usize, a: Vec<Vec<i64>>) -> Result<Self, MatroidError> {
        if cols > MAX_ELEMENTS {
            return Err(MatroidError::TooManyColumns { cols });
        }
        for (r, row) in a.iter().enumerate() {
            if row.len() != cols {
                return Err(MatroidError::DimensionMismatch {
                    row: r,
                    expected: cols,
                    found: row.len(),
                });
            }
            if let Some((c, &value)) = row.iter().enumerate().find(|(_, &v)| !(-1..=1).contains(&v)) {
                return Err(MatroidError::EntryOutOfRange { row: r, col: c, value });
            }
        }
        let rank = RatMatrix::from_int_rows(&a, cols)?.rank();
        Ok(Self {
            rows: a.len(),
            cols,
            a,
            rank,
        })
    }

    /// The incidence matrix: column `e` is `1_head - 1_tail`.
    pub fn graphic(g: &DiGraph) -> Self {
        let mut a = vec![vec![0i64; g.m()]; g.n()];
        for (e, &(t, h)) in g.edges().iter().enumerate() {
            a[h][e] += 1;
            a[t][e] -= 1;
        }
        Self::new_trusted(g.m(), a).expect("incidence matrices have entries in {-1, 0, 1}")
    }

    /// The oriented dual of the graphic matroid, with ground set aligned to the edges.
    pub fn cographic(g: &DiGraph) -> Result<Self, MatroidError> {
        Self::graphic(g).dual()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ground_size(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn column(&self, i: usize) -> Vec<i64> {
        self.a.iter().map(|r| r[i]).collect()
    }

    fn rat_matrix(&self) -> RatMatrix {
        RatMatrix::from_int_rows(&self.a, self.cols).expect("rows have uniform length")
    }

    fn columns_rank(&self, set: IndexSet) -> usize {
        if set.is_empty() {
            return 0;
        }
        self.rat_matrix().select_columns(&set.to_vec()).rank()
    }

    fn check_size(&self) -> Result<(), MatroidError> {
        if self.cols > DEFAULT_EDGE_LIMIT {
            Err(MatroidError::TooLarge {
                columns: self.cols,
                limit: DEFAULT_EDGE_LIMIT,
            })
        } else {
            Ok(())
        }
    }

    /// Sum of the columns in `set`.
    pub fn column_sum(&self, set: IndexSet) -> Vec<i64> {
        self.a
            .iter()
            .map(|r| set.iter().map(|i| r[i]).sum())
            .collect()
    }

    pub fn is_independent(&self, set: IndexSet) -> bool {
        self.columns_rank(set) == set.len()
    }

    /// All signed circuits, lexicographic by support.
    pub fn signed_circuits(&self) -> Result<Vec<SignedSet>, MatroidError> {
        self.check_size()?;
        let m = self.rat_matrix();
        let mut out = Vec::new();
        for size in 1..=(self.rank + 1).min(self.cols) {
            for support in (0..self.cols).combinations(size) {
                if let Some(v) = m.kernel_vector_on_support(&support)? {
                    out.push(SignedSet::from_signs(&v));
                }
            }
        }
        out.sort_by_key(|c| c.support().lex_key());
        Ok(out)
    }

    /// All signed cocircuits, lexicographic by support.
    ///
    /// Each rank-`(r-1)` flat `F` is spanned by some independent `(r-1)`-subset;
    /// the functional vanishing on `F` is read off by writing every column in a
    /// basis that extends that subset by one column outside `F`.
    pub fn signed_cocircuits(&self) -> Result<Vec<SignedCocircuit>, MatroidError> {
        self.check_size()?;
        if self.rank == 0 {
            return Ok(Vec::new());
        }
        let m = self.rat_matrix();
        let mut flats: BTreeSet<u64> = BTreeSet::new();
        let mut out: BTreeMap<Vec<usize>, SignedCocircuit> = BTreeMap::new();
        for spanning in (0..self.cols).combinations(self.rank - 1) {
            let spanning = IndexSet::from_indices(spanning);
            if self.columns_rank(spanning) != self.rank - 1 {
                continue;
            }
            let flat: IndexSet = (0..self.cols)
                .filter(|&i| self.columns_rank(spanning.insert(i)) == self.rank - 1)
                .collect();
            if !flats.insert(flat.bits()) {
                continue;
            }
            let outside = (0..self.cols)
                .find(|&i| !flat.contains(i))
                .expect("a proper flat misses some column");
            let basis: Vec<usize> = spanning.insert(outside).to_vec();
            let pos = basis.iter().position(|&b| b == outside).expect("in basis");
            let basis_m = m.select_columns(&basis);
            let mut signs = vec![0i8; self.cols];
            for (i, s) in signs.iter_mut().enumerate() {
                let col: Vec<BigRational> = self.column(i).into_iter().map(rat).collect();
                let coeffs = basis_m
                    .solve(&col)?
                    .expect("every column lies in the span of a basis");
                let h = &coeffs[pos];
                *s = if h.is_zero() {
                    0
                } else if h.is_one() {
                    1
                } else if (-h).is_one() {
                    -1
                } else {
                    return Err(MatroidError::Algebra(AlgebraError::NonTuRelation {
                        support: basis.clone(),
                    }));
                };
            }
            let signed = SignedSet::from_signs(&signs).canonical();
            out.insert(
                signed.support().lex_key(),
                SignedCocircuit {
                    positive: signed.positive,
                    negative: signed.negative,
                    directed: signed.negative.is_empty(),
                },
            );
        }
        Ok(out.into_values().collect())
    }

    pub fn directed_cocircuits(&self) -> Result<Vec<SignedCocircuit>, MatroidError> {
        Ok(self
            .signed_cocircuits()?
            .into_iter()
            .filter(|c| c.directed)
            .collect())
    }

    /// Every circuit has as many positive as negative elements.
    pub fn is_co_eulerian(&self) -> Result<bool, MatroidError> {
        Ok(self
            .signed_circuits()?
            .iter()
            .all(|c| c.positive.len() == c.negative.len()))
    }

    /// All minimum-size ground subsets meeting every directed cocircuit, found
    /// among independent subsets, with the distinct column sums.
    pub fn min_dijoins(&self) -> Result<DijoinCertificate, MatroidError> {
        let directed: Vec<IndexSet> = self
            .directed_cocircuits()?
            .into_iter()
            .map(|c| c.support())
            .collect();
        for size in 0..=self.cols {
            let found: Vec<IndexSet> = IndexSet::subsets_of_size(self.cols, size)
                .filter(|&k| directed.iter().all(|c| !c.is_disjoint(k)) && self.is_independent(k))
                .collect();
            if !found.is_empty() {
                let vectors: BTreeSet<Vec<i64>> =
                    found.iter().map(|&k| self.column_sum(k)).collect();
                return Ok(DijoinCertificate {
                    nu: size,
                    min_dijoins: found,
                    net_degree_vectors: vectors.into_iter().collect(),
                });
            }
        }
        unreachable!("a basis meets every cocircuit")
    }

    /// `conv({0} u columns)`.
    pub fn polytope(&self) -> Result<RootPolytope, MatroidError> {
        Ok(RootPolytope::extended(
            self.rows,
            (0..self.cols).map(|i| self.column(i)).collect(),
        )?)
    }

    /// The h*-polynomial of the extended root polytope, without cross-checks.
    pub fn interior_polynomial_unchecked(&self) -> Result<Polynomial, MatroidError> {
        Ok(self.polytope()?.hstar()?)
    }

    /// The interior polynomial, checked against the minimum dijoins: its degree
    /// must be `r - nu` and its leading coefficient the number of distinct
    /// column sums of minimum dijoins.
    pub fn interior_polynomial(&self) -> Result<Polynomial, MatroidError> {
        let h = self.interior_polynomial_unchecked()?;
        let cert = self.min_dijoins()?;
        let degree = h.degree().unwrap_or(0);
        if degree + cert.nu != self.rank {
            return Err(MatroidError::IdentityCheck(format!(
                "degree {degree} differs from rank {} minus nu {}",
                self.rank, cert.nu
            )));
        }
        let leading = h.leading_coefficient().cloned().unwrap_or_default();
        if leading != BigInt::from(cert.net_degree_vectors.len()) {
            return Err(MatroidError::IdentityCheck(format!(
                "leading coefficient {leading} differs from {} dijoin vectors",
                cert.net_degree_vectors.len()
            )));
        }
        Ok(h)
    }

    /// Checks that facets through the origin are exactly the hyperplanes of the
    /// directed cocircuits and that every other facet is `l . x <= 1` with `l`
    /// integral, `l . a_i <= 1` for all columns, and a tight set of full rank.
    /// Failures are collected rather than raised.
    pub fn check_facet_description(&self) -> Result<FacetDescriptionReport, MatroidError> {
        let p = self.polytope()?;
        let directed = self.directed_cocircuits()?;
        let mut report = FacetDescriptionReport {
            cocircuit_facets: 0,
            other_facets: 0,
            directed_cocircuits: directed.len(),
            failures: Vec::new(),
        };
        if p.dim() == 0 {
            if !directed.is_empty() {
                report
                    .failures
                    .push("point polytope but directed cocircuits exist".into());
            }
            return Ok(report);
        }
        let dotp = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let mut matched = vec![false; directed.len()];
        for (fi, f) in p.facets()?.iter().enumerate() {
            let values: Vec<i64> = (0..self.cols).map(|i| dotp(&f.normal, &self.column(i))).collect();
            match f.kind {
                FacetKind::Cut => {
                    report.cocircuit_facets += 1;
                    let neg: IndexSet = (0..self.cols).filter(|&i| values[i] < 0).collect();
                    let unit = values.iter().all(|&v| v == 0 || v == -1);
                    match directed.iter().position(|c| c.support() == neg) {
                        Some(j) if unit => {
                            if matched[j] {
                                report
                                    .failures
                                    .push(format!("directed cocircuit {:?} matched twice", neg));
                            }
                            matched[j] = true;
                        }
                        _ => report.failures.push(format!(
                            "facet {fi} through the origin is not a directed cocircuit hyperplane"
                        )),
                    }
                }
                FacetKind::Layering => {
                    report.other_facets += 1;
                    if f.offset != 1 {
                        report
                            .failures
                            .push(format!("facet {fi} has offset {} instead of 1", f.offset));
                    }
                    if values.iter().any(|&v| v > f.offset) {
                        report.failures.push(format!("facet {fi} is violated by a column"));
                    }
                    let tight: IndexSet = (0..self.cols).filter(|&i| values[i] == f.offset).collect();
                    if self.columns_rank(tight) != self.rank {
                        report
                            .failures
                            .push(format!("tight columns of facet {fi} do not have full rank"));
                    }
                }
            }
        }
        for (j, c) in directed.iter().enumerate() {
            if !matched[j] {
                report
                    .failures
                    .push(format!("directed cocircuit {:?} has no facet", c.support()));
            }
        }
        Ok(report)
    }

    /// Row-reduces to `[I | D]` on a greedy column basis using unit pivots.
    /// Returns the nonzero rows and the pivot columns.
    fn standard_form(&self) -> Result<(Vec<Vec<i64>>, Vec<usize>), MatroidError> {
        let mut m = self.a.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| m[i][col] != 0) else {
                continue;
            };
            if m[p][col].abs() != 1 {
                return Err(MatroidError::RankDeficientPivot);
            }
            m.swap(p, r);
            if m[r][col] == -1 {
                for x in m[r].iter_mut() {
                    *x = -*x;
                }
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[col] == 0 {
                    continue;
                }
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                    if x.abs() > 1 {
                        return Err(MatroidError::RankDeficientPivot);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        if pivots.len() != self.rank {
            return Err(MatroidError::RankDeficientPivot);
        }
        m.truncate(r);
        Ok((m, pivots))
    }

    /// The oriented dual: `[I | D]` becomes `[-D^T | I]`, with columns kept in
    /// the original ground-set order.
    pub fn dual(&self) -> Result<Self, MatroidError> {
        let (form, pivots) = self.standard_form()?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut dual = vec![vec![0i64; self.cols]; free.len()];
        for (q, &j) in free.iter().enumerate() {
            for (t, &b) in pivots.iter().enumerate() {
                dual[q][b] = -form[t][j];
            }
            dual[q][j] = 1;
        }
        let rank = free.len();
        Ok(Self {
            rows: free.len(),
            cols: self.cols,
            a: dual,
            rank,
        })
    }

    /// A random sequence of row operations that keep the matrix totally
    /// unimodular (unit pivots, row swaps, row negations), followed by a random
    /// column permutation. Returns the new matrix and the permutation
    /// (`perm[new] = old`).
    pub fn scrambled<R: Rng>(&self, rng: &mut R, steps: usize) -> (Self, Vec<usize>) {
        let mut m = self.a.clone();
        let rows = m.len();
        for _ in 0..steps {
            if rows == 0 {
                break;
            }
            match rng.gen_range(0..3) {
                0 => {
                    let entries: Vec<(usize, usize)> = (0..rows)
                        .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
                        .filter(|&(i, j)| m[i][j] != 0)
                        .collect();
                    if entries.is_empty() {
                        continue;
                    }
                    let (pi, pj) = entries[rng.gen_range(0..entries.len())];
                    if m[pi][pj] == -1 {
                        for x in m[pi].iter_mut() {
                            *x = -*x;
                        }
                    }
                    let pivot_row = m[pi].clone();
                    for (i, row) in m.iter_mut().enumerate() {
                        if i != pi && row[pj] != 0 {
                            let f = row[pj];
                            for (x, p) in row.iter_mut().zip(&pivot_row) {
                                *x -= f * p;
                            }
                        }
                    }
                }
                1 => {
                    let (i, j) = (rng.gen_range(0..rows), rng.gen_range(0..rows));
                    m.swap(i, j);
                }
                _ => {
                    let i = rng.gen_range(0..rows);
                    for x in m[i].iter_mut() {
                        *x = -*x;
                    }
                }
            }
        }
        let mut perm: Vec<usize> = (0..self.cols).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let permuted: Vec<Vec<i64>> = m
            .iter()
            .map(|row| perm.iter().map(|&old| row[old]).collect())
            .collect();
        let rank = self.rank;
        (
            Self {
                rows,
                cols: self.cols,
                a: permuted,
                rank,
            },
            perm,
        )
    }

    /// The matrix with column `i` negated.
    pub fn with_negated_column(&self, i: usize) -> Self {
        let mut a = self.a.clone();
        for row in a.iter_mut() {
            row[i] = -row[i];
        }
        Self { a, ..self.clone() }
    }
}

/// Orthogonality of signed circuits and cocircuits: whenever the supports
/// meet, both "agreeing" and "disagreeing" parts are nonempty.
pub fn orthogonal(c: &SignedSet, d: &SignedSet) -> bool {
    if c.support().is_disjoint(d.support()) {
        return true;
    }
    let agree = c
        .positive
        .intersection(d.positive)
        .union(c.negative.intersection(d.negative));
    let disagree = c
        .positive
        .intersection(d.negative)
        .union(c.negative.intersection(d.positive));
    !agree.is_empty() && !disagree.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> DiGraph {
        DiGraph::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn tu_examples() {
        let inc = OrientedRegularMatroid::graphic(&g(3, &[(0, 1), (1, 2), (0, 2)]));
        assert!(is_totally_unimodular(inc.matrix(), 3).is_tu());
        assert_eq!(
            is_totally_unimodular(&[vec![1, 1], vec![-1, 1]], 2),
            TuCheck::Violation {
                rows: vec![0, 1],
                cols: vec![0, 1],
                determinant: "2".into()
            }
        );
    }

    #[test]
    fn circuits_of_small_matrices() {
        let m = OrientedRegularMatroid::new(3, vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let c = m.signed_circuits().unwrap();
        assert_eq!(c, vec![SignedSet::from_signs(&[1, 1, -1])]);
        let id = OrientedRegularMatroid::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(id.signed_circuits().unwrap().is_empty());
    }

    #[test]
    fn rank_one_single_column() {
        let m = OrientedRegularMatroid::new(1, vec![vec![1]]).unwrap();
        let c = m.signed_cocircuits().unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].directed);
        assert_eq!(m.interior_polynomial().unwrap(), Polynomial::one());
    }

    #[test]
    fn graphic_columns() {
        let m = OrientedRegularMatroid::graphic(&g(2, &[(0, 1), (1, 1)]));
        assert_eq!(m.column(0), vec![-1, 1]);
        assert_eq!(m.column(1), vec![0, 0]);
    }

    #[test]
    fn dual_of_two_parallel_elements() {
        let m = OrientedRegularMatroid::new(2, vec![vec![1, 1]]).unwrap();
        let d = m.dual().unwrap();
        assert_eq!(d.matrix(), &[vec![-1, 1]]);
        assert_eq!(m.signed_circuits().unwrap(), vec![SignedSet::from_signs(&[1, -1])]);
        assert_eq!(d.signed_circuits().unwrap(), vec![SignedSet::from_signs(&[1, 1])]);
    }

    #[test]
    fn dual_of_two_vertex_graph_is_unit_square() {
        let two = g(2, &[(0, 1), (1, 0), (1, 0)]);
        let d = OrientedRegularMatroid::cographic(&two).unwrap();
        assert_eq!(d.matrix(), &[vec![1, 1, 0], vec![1, 0, 1]]);
        assert_eq!(d.interior_polynomial().unwrap(), Polynomial::from(vec![1, 1]));
    }

    #[test]
    fn non_unit_pivot_is_rejected() {
        let m = OrientedRegularMatroid::new_trusted(2, vec![vec![1, 1], vec![1, -1]]).unwrap();
        assert_eq!(m.dual(), Err(MatroidError::RankDeficientPivot));
    }

    #[test]
    fn co_eulerian_examples() {
        let cyc = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!OrientedRegularMatroid::graphic(&cyc).is_co_eulerian().unwrap());
        assert!(OrientedRegularMatroid::cographic(&cyc).unwrap().is_co_eulerian().unwrap());
        let sq = g(4, &[(0, 1), (2, 1), (2, 3), (0, 3)]);
        assert!(OrientedRegularMatroid::graphic(&sq).is_co_eulerian().unwrap());
    }
}
