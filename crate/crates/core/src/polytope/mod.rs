//! Root polytopes: exact facet descriptions, lattice-point counts of dilates,
//! h*-polynomials.

mod classify;
mod count;
mod hull;
mod triangulate;

pub use classify::{classify_facets, FacetClassification};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{binomial, determinant, AlgebraError, Polynomial, RatMatrix};
use crate::digraph::DiGraph;
use crate::sets::MAX_ELEMENTS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("a polytope needs at least one generator")]
    EmptyGenerators,
    #[error("generator {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, found: usize },
    #[error("{count} distinct generators exceed the supported maximum of 64")]
    TooManyGenerators { count: usize },
    #[error("no coordinate projection maps the lattice of the affine hull onto Z^d")]
    NoUnimodularChart,
    #[error("the polytope is a single point, so it has no facets")]
    DegenerateDimension,
    #[error("interpolated h* coefficients {coefficients:?} are not all nonnegative integers with h*_0 = 1")]
    NonIntegralHstar { coefficients: Vec<String> },
    #[error("lattice-point enumeration for dilate {k} could overflow 64-bit arithmetic")]
    CountOverflow { k: u64 },
    #[error("no dilate up to dimension + 1 has an interior lattice point")]
    NoInteriorDilate,
    #[error("the input digraph is not weakly connected")]
    DisconnectedInput,
    #[error("facet classification failed: {0}")]
    ClassificationMismatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FacetKind {
    /// The facet contains the origin.
    Cut,
    /// The facet misses the origin.
    Layering,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    Closed,
    Interior,
}

/// A facet `{x in P : normal . x = offset}`, with `normal . x <= offset` valid on `P`.
///
/// The normal is primitive on the lattice of the affine hull and is zero on the
/// coordinates the polytope's chart eliminates, which makes it canonical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
    pub kind: FacetKind,
    /// Indices into the generator list of the generators on the facet.
    pub generators: Vec<usize>,
    #[serde(skip)]
    chart_normal: Vec<i64>,
}

/// Convex hull of integer generators, with its H-representation relative to
/// the affine hull computed at construction.
#[derive(Clone, Debug)]
pub struct RootPolytope {
    ambient: usize,
    generators: Vec<Vec<i64>>,
    /// Distinct generators; `provenance[i]` lists the generator indices equal to `unique[i]`.
    unique: Vec<Vec<i64>>,
    provenance: Vec<Vec<usize>>,
    dim: usize,
    /// Coordinates kept by the chart `x -> x[chart]`.
    chart: Vec<usize>,
    /// `x = lift * z + k * shift` for `z` the chart image of a point of the `k`-th dilate.
    lift: Vec<Vec<i64>>,
    shift: Vec<i64>,
    chart_points: Vec<Vec<i64>>,
    facets: Vec<Facet>,
    chart_normals: Vec<Vec<i64>>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

impl RootPolytope {
    /// `conv(generators)` in `Z^ambient`.
    pub fn from_points(ambient: usize, generators: Vec<Vec<i64>>) -> Result<Self, PolytopeError> {
        if generators.is_empty() {
            return Err(PolytopeError::EmptyGenerators);
        }
        for (index, g) in generators.iter().enumerate() {
            if g.len() != ambient {
                return Err(PolytopeError::DimensionMismatch {
                    index,
                    expected: ambient,
                    found: g.len(),
                });
            }
        }
        let mut unique: Vec<Vec<i64>> = Vec::new();
        let mut provenance: Vec<Vec<usize>> = Vec::new();
        for (i, g) in generators.iter().enumerate() {
            match unique.iter().position(|u| u == g) {
                Some(j) => provenance[j].push(i),
                None => {
                    unique.push(g.clone());
                    provenance.push(vec![i]);
                }
            }
        }
        if unique.len() > MAX_ELEMENTS {
            return Err(PolytopeError::TooManyGenerators {
                count: unique.len(),
            });
        }
        let base = unique[0].clone();
        let diffs: Vec<Vec<i64>> = unique[1..]
            .iter()
            .map(|u| u.iter().zip(&base).map(|(a, b)| a - b).collect())
            .collect();
        let (chart, lift) = choose_chart(ambient, &diffs)?;
        let dim = chart.len();
        let project = |x: &[i64]| -> Vec<i64> { chart.iter().map(|&c| x[c]).collect() };
        let chart_points: Vec<Vec<i64>> = unique.iter().map(|u| project(u)).collect();
        let base_chart = project(&base);
        let shift: Vec<i64> = (0..ambient)
            .map(|i| base[i] - dot(&lift[i], &base_chart))
            .collect();
        let mut poly = Self {
            ambient,
            generators,
            unique,
            provenance,
            dim,
            chart,
            lift,
            shift,
            chart_points,
            facets: Vec::new(),
            chart_normals: Vec::new(),
        };
        poly.facets = poly.compute_facets();
        poly.chart_normals = poly.facets.iter().map(|f| f.chart_normal.clone()).collect();
        Ok(poly)
    }

    /// Extended root polytope `conv({0} u vectors)`; the zero vector becomes generator 0.
    pub fn extended(ambient: usize, vectors: Vec<Vec<i64>>) -> Result<Self, PolytopeError> {
        let mut generators = Vec::with_capacity(vectors.len() + 1);
        generators.push(vec![0; ambient]);
        generators.extend(vectors);
        Self::from_points(ambient, generators)
    }

    /// The extended root polytope of a digraph: generator `0` is the origin and
    /// generator `e + 1` is `1_head - 1_tail` of edge `e`.
    pub fn of_digraph(g: &DiGraph) -> Result<Self, PolytopeError> {
        Self::extended(g.n(), (0..g.m()).map(|e| g.incidence_vector(e)).collect())
    }

    /// The root polytope without the origin: generator `e` is edge `e`.
    pub fn of_digraph_without_origin(g: &DiGraph) -> Result<Self, PolytopeError> {
        Self::from_points(g.n(), (0..g.m()).map(|e| g.incidence_vector(e)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Distinct generators, each with the indices of the generators equal to it.
    pub fn distinct_generators(&self) -> impl Iterator<Item = (&[i64], &[usize])> {
        self.unique
            .iter()
            .zip(&self.provenance)
            .map(|(u, p)| (u.as_slice(), p.as_slice()))
    }

    pub fn facets(&self) -> Result<&[Facet], PolytopeError> {
        if self.dim == 0 {
            return Err(PolytopeError::DegenerateDimension);
        }
        Ok(&self.facets)
    }

    fn compute_facets(&self) -> Vec<Facet> {
        if self.dim == 0 {
            return Vec::new();
        }
        let zero = vec![0i64; self.ambient];
        hull::full_dimensional_facets(&self.chart_points)
            .into_iter()
            .map(|f| {
                let mut normal = vec![0i64; self.ambient];
                for (&c, &a) in self.chart.iter().zip(&f.normal) {
                    normal[c] = a;
                }
                let mut generators: Vec<usize> = f
                    .incident
                    .iter()
                    .flat_map(|i| self.provenance[i].iter().copied())
                    .collect();
                generators.sort_unstable();
                // The origin lies on the facet iff it is in the affine hull and
                // satisfies the facet equation.
                let through_origin = f.offset == 0 && self.in_affine_hull(&zero, 0);
                Facet {
                    normal,
                    offset: f.offset,
                    kind: if through_origin {
                        FacetKind::Cut
                    } else {
                        FacetKind::Layering
                    },
                    generators,
                    chart_normal: f.normal,
                }
            })
            .collect()
    }

    fn lift_point(&self, z: &[i64], k: i64) -> Vec<i64> {
        (0..self.ambient)
            .map(|i| dot(&self.lift[i], z) + k * self.shift[i])
            .collect()
    }

    /// Whether `x` lies in the affine hull of the `k`-th dilate.
    fn in_affine_hull(&self, x: &[i64], k: i64) -> bool {
        let z: Vec<i64> = self.chart.iter().map(|&c| x[c]).collect();
        self.lift_point(&z, k) == x
    }

    /// Whether the integer point `x` lies in `k * P` (or its relative interior).
    pub fn contains(&self, x: &[i64], k: u64, mode: CountMode) -> bool {
        if x.len() != self.ambient || !self.in_affine_hull(x, k as i64) {
            return false;
        }
        let z: Vec<i64> = self.chart.iter().map(|&c| x[c]).collect();
        let strict = i64::from(mode == CountMode::Interior);
        self.facets
            .iter()
            .all(|f| dot(&f.chart_normal, &z) <= k as i64 * f.offset - strict)
    }

    fn region(&self, k: u64, mode: CountMode) -> Result<count::Region<'_>, PolytopeError> {
        let k = k as i64;
        let strict = i64::from(mode == CountMode::Interior);
        let rhs: Vec<i64> = self.facets.iter().map(|f| k * f.offset - strict).collect();
        let lo: Vec<i64> = (0..self.dim)
            .map(|i| k * self.chart_points.iter().map(|p| p[i]).min().unwrap_or(0))
            .collect();
        let hi: Vec<i64> = (0..self.dim)
            .map(|i| k * self.chart_points.iter().map(|p| p[i]).max().unwrap_or(0))
            .collect();
        // Every intermediate sum is bounded by sum_i |a_i| * max(|lo_i|, |hi_i|)
        // plus the right-hand side.
        let overflow = self.facets.iter().zip(&rhs).any(|(f, r)| {
            let mut acc: i128 = i128::from(r.abs());
            for (i, &a) in f.chart_normal.iter().enumerate() {
                acc += i128::from(a.abs()) * i128::from(lo[i].abs().max(hi[i].abs()) + 1) * 2;
            }
            acc > i128::from(i64::MAX / 4)
        });
        if overflow {
            return Err(PolytopeError::CountOverflow { k: k as u64 });
        }
        Ok(count::Region {
            normals: &self.chart_normals,
            rhs,
            lo,
            hi,
        })
    }

    /// Number of lattice points in `k * P` (`CountMode::Closed`) or in its
    /// relative interior (`CountMode::Interior`).
    pub fn lattice_count(&self, k: u64, mode: CountMode) -> Result<u64, PolytopeError> {
        Ok(self.region(k, mode)?.count())
    }

    /// The lattice points counted by [`RootPolytope::lattice_count`], in ambient coordinates.
    pub fn lattice_points(&self, k: u64, mode: CountMode) -> Result<Vec<Vec<i64>>, PolytopeError> {
        Ok(self
            .region(k, mode)?
            .points()
            .into_iter()
            .map(|z| self.lift_point(&z, k as i64))
            .collect())
    }

    /// The h*-polynomial, from the counts `L(0..=d)` and the identity
    /// `L(k) = sum_i h*_i C(k + d - i, d)`.
    pub fn hstar(&self) -> Result<Polynomial, PolytopeError> {
        let d = self.dim;
        let counts: Vec<BigRational> = (0..=d as u64)
            .map(|k| {
                self.lattice_count(k, CountMode::Closed)
                    .map(|c| BigRational::from_integer(c.into()))
            })
            .collect::<Result<_, _>>()?;
        let rows: Vec<Vec<BigRational>> = (0..=d as u64)
            .map(|k| {
                (0..=d as u64)
                    .map(|i| {
                        if k + d as u64 >= i {
                            BigRational::from_integer(binomial(k + d as u64 - i, d as u64))
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let system = RatMatrix::from_rows(rows, d + 1)?;
        let h = system
            .solve(&counts)?
            .expect("the binomial interpolation system is triangular with unit diagonal");
        let ok = h.iter().all(|x| x.is_integer() && !x.is_negative()) && h[0].is_one();
        if !ok {
            return Err(PolytopeError::NonIntegralHstar {
                coefficients: h.iter().map(ToString::to_string).collect(),
            });
        }
        Ok(Polynomial::new(h.into_iter().map(|x| x.to_integer()).collect()))
    }

    /// Smallest `k >= 1` such that `k * P` has a lattice point in its relative interior.
    pub fn first_interior_dilate(&self) -> Result<u64, PolytopeError> {
        for k in 1..=self.dim as u64 + 1 {
            if self.lattice_count(k, CountMode::Interior)? > 0 {
                return Ok(k);
            }
        }
        Err(PolytopeError::NoInteriorDilate)
    }

    /// Simplices of a pulling triangulation, as sorted lists of distinct-generator
    /// representatives (the first generator index of each distinct point).
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        if self.dim == 0 {
            return vec![vec![0]];
        }
        triangulate::pulling_triangulation(&self.chart_points)
            .into_iter()
            .map(|s| s.into_iter().map(|i| self.provenance[i][0]).collect())
            .collect()
    }

    /// Lattice-normalized volume, summed over a pulling triangulation.
    pub fn normalized_volume(&self) -> BigInt {
        if self.dim == 0 {
            return BigInt::one();
        }
        triangulate::pulling_triangulation(&self.chart_points)
            .iter()
            .map(|s| {
                let base = &self.chart_points[s[0]];
                let rows: Vec<Vec<i64>> = s[1..]
                    .iter()
                    .map(|&i| {
                        self.chart_points[i]
                            .iter()
                            .zip(base)
                            .map(|(a, b)| a - b)
                            .collect()
                    })
                    .collect();
                determinant(&rows).abs()
            })
            .sum()
    }
}

/// Complement-lexicographic search for coordinates `R` such that `x -> x[R]`
/// maps `Z^n` intersected with the linear span of `diffs` bijectively onto `Z^d`.
fn choose_chart(
    ambient: usize,
    diffs: &[Vec<i64>],
) -> Result<(Vec<usize>, Vec<Vec<i64>>), PolytopeError> {
    // Greedy column basis of the span.
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for v in diffs {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if RatMatrix::from_int_rows(&trial, ambient)?.rank() == trial.len() {
            basis = trial;
        }
    }
    let d = basis.len();
    if d == 0 {
        return Ok((Vec::new(), vec![Vec::new(); ambient]));
    }
    for dropped in (0..ambient).combinations(ambient - d) {
        let chart: Vec<usize> = (0..ambient).filter(|c| !dropped.contains(c)).collect();
        // sub[i][j] = basis[j][chart[i]]
        let sub: Vec<Vec<i64>> = chart
            .iter()
            .map(|&c| basis.iter().map(|b| b[c]).collect())
            .collect();
        if determinant(&sub).is_zero() {
            continue;
        }
        let sub_t = RatMatrix::from_int_rows(
            &(0..d).map(|j| sub.iter().map(|r| r[j]).collect()).collect::<Vec<_>>(),
            d,
        )?;
        // Row i of the lift solves lift_i * sub = (basis[.][i]), i.e. sub^T lift_i^T = row.
        let mut lift = Vec::with_capacity(ambient);
        let mut integral = true;
        for i in 0..ambient {
            let rhs: Vec<BigRational> = basis.iter().map(|b| rational(b[i])).collect();
            let sol = sub_t
                .solve(&rhs)?
                .expect("nonsingular system has a solution");
            if sol.iter().any(|x| !x.is_integer()) {
                integral = false;
                break;
            }
            lift.push(
                sol.iter()
                    .map(|x| i64::try_from(x.to_integer()).expect("small lift entry"))
                    .collect(),
            );
        }
        if integral {
            return Ok((chart, lift));
        }
    }
    Err(PolytopeError::NoUnimodularChart)
}

/// The interior polynomial: the h*-polynomial of the extended root polytope.
pub fn interior_polynomial(g: &DiGraph) -> Result<Polynomial, PolytopeError> {
    if !g.is_weakly_connected() {
        return Err(PolytopeError::DisconnectedInput);
    }
    RootPolytope::of_digraph(g)?.hstar()
}
