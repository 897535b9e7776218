//! Python bindings: digraphs, oriented regular matroids, root polytopes and the
//! command-line reports.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use rootpoly::algebra::Polynomial;
use rootpoly::cli::{self, Command, Options};
use rootpoly::dijoin::{self, DijoinCertificate};
use rootpoly::digraph::{self as dg, UGraph};
use rootpoly::greedoid::{branching_greedoid, semi_active_edges};
use rootpoly::matroid::OrientedRegularMatroid;
use rootpoly::parking;
use rootpoly::polytope::{self as poly, CountMode};
use rootpoly::sets::IndexSet;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn coeffs(p: Polynomial) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

fn mode(interior: bool) -> CountMode {
    if interior {
        CountMode::Interior
    } else {
        CountMode::Closed
    }
}

fn certificate<'py>(py: Python<'py>, c: &DijoinCertificate) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("nu", c.nu)?;
    let sets: Vec<Vec<usize>> = c.min_dijoins.iter().map(|s| s.to_vec()).collect();
    d.set_item("min_dijoins", sets)?;
    d.set_item("net_degree_vectors", c.net_degree_vectors.clone())?;
    Ok(d)
}

/// A directed multigraph on vertices `0..n`.
#[pyclass(name = "DiGraph", module = "rootpoly_py")]
struct PyDiGraph {
    inner: dg::DiGraph,
}

#[pymethods]
impl PyDiGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self { inner: dg::DiGraph::new(n, edges).map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn is_weakly_connected(&self) -> bool {
        self.inner.is_weakly_connected()
    }

    fn is_strongly_connected(&self) -> bool {
        self.inner.is_strongly_connected()
    }

    fn is_root_connected(&self, root: usize) -> bool {
        root < self.inner.n() && self.inner.is_root_connected(root)
    }

    fn is_eulerian(&self) -> bool {
        self.inner.is_eulerian()
    }

    fn is_acyclic(&self) -> bool {
        self.inner.is_acyclic()
    }

    /// Ascending coefficients of the interior polynomial.
    fn interior_polynomial(&self) -> PyResult<Vec<BigInt>> {
        poly::interior_polynomial(&self.inner).map(coeffs).map_err(err)
    }

    fn root_polytope(&self) -> PyResult<PyRootPolytope> {
        Ok(PyRootPolytope { inner: poly::RootPolytope::of_digraph(&self.inner).map_err(err)? })
    }

    /// `{"nu", "min_dijoins", "net_degree_vectors"}`.
    fn min_dijoins<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = dijoin::min_dijoins(&self.inner).map_err(err)?;
        certificate(py, &c)
    }

    /// Size of a largest family of pairwise disjoint directed cuts.
    fn max_disjoint_directed_cuts(&self) -> PyResult<usize> {
        Ok(dijoin::max_disjoint_directed_cuts(&self.inner).map_err(err)?.0)
    }

    /// `(size, witness)` of a minimum feedback arc set; with `root`, every
    /// vertex must stay reachable from it.
    #[pyo3(signature = (root=None))]
    fn minfas(&self, root: Option<usize>) -> PyResult<(usize, Vec<usize>)> {
        let f = match root {
            Some(s) => dijoin::minfas_rooted(&self.inner, s),
            None => dijoin::minfas(&self.inner),
        }
        .map_err(err)?;
        Ok((f.size, f.witness.to_vec()))
    }

    /// Parking functions indexed by the non-root vertices in increasing order.
    fn parking_functions(&self, root: usize) -> PyResult<Vec<Vec<usize>>> {
        parking::parking_functions(&self.inner, root).map_err(err)
    }

    fn parking_enumerator(&self, root: usize) -> PyResult<Vec<BigInt>> {
        parking::parking_enumerator(&self.inner, root).map(coeffs).map_err(err)
    }

    fn chan_transform(&self, root: usize) -> PyResult<Vec<BigInt>> {
        parking::chan_transform(&self.inner, root).map(coeffs).map_err(err)
    }

    /// Whether the parking enumerator equals the cographic interior polynomial.
    fn eulerian_duality_holds(&self, root: usize) -> PyResult<bool> {
        Ok(parking::eulerian_duality_check(&self.inner, root).map_err(err)?.holds())
    }

    /// Greedoid polynomial of the branching greedoid; `order` defaults to edge order.
    #[pyo3(signature = (root, order=None))]
    fn greedoid_polynomial(&self, root: usize, order: Option<Vec<usize>>) -> PyResult<Vec<BigInt>> {
        let x = branching_greedoid(&self.inner, root).map_err(err)?;
        match order {
            Some(o) => x.greedoid_polynomial_with_order(&o),
            None => x.greedoid_polynomial(),
        }
        .map(coeffs)
        .map_err(err)
    }

    /// Lexicographically minimal feasible word of the arborescence `basis`.
    #[pyo3(signature = (root, basis, order=None))]
    fn lexmin_word(&self, root: usize, basis: Vec<usize>, order: Option<Vec<usize>>) -> PyResult<Vec<usize>> {
        let x = branching_greedoid(&self.inner, root).map_err(err)?;
        let order = order.unwrap_or_else(|| x.natural_order());
        x.lexmin_feasible_word(IndexSet::from_indices(basis), &order).map_err(err)
    }

    #[pyo3(signature = (root, arborescence, order=None))]
    fn semi_active_edges(
        &self,
        root: usize,
        arborescence: Vec<usize>,
        order: Option<Vec<usize>>,
    ) -> PyResult<Vec<usize>> {
        let order = order.unwrap_or_else(|| (0..self.inner.m()).collect());
        semi_active_edges(&self.inner, root, IndexSet::from_indices(arborescence), &order)
            .map(IndexSet::to_vec)
            .map_err(err)
    }

    fn graphic_matroid(&self) -> PyMatroid {
        PyMatroid { inner: OrientedRegularMatroid::graphic(&self.inner) }
    }

    fn cographic_matroid(&self) -> PyResult<PyMatroid> {
        Ok(PyMatroid { inner: OrientedRegularMatroid::cographic(&self.inner).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("DiGraph({}, {:?})", self.inner.n(), self.inner.edges())
    }
}

/// An oriented regular matroid given by a totally unimodular matrix.
#[pyclass(name = "Matroid", module = "rootpoly_py")]
struct PyMatroid {
    inner: OrientedRegularMatroid,
}

#[pymethods]
impl PyMatroid {
    /// Rows of integers; `trust_tu` skips the total unimodularity test.
    #[new]
    #[pyo3(signature = (rows, trust_tu=false))]
    fn new(rows: Vec<Vec<i64>>, trust_tu: bool) -> PyResult<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let inner = if trust_tu {
            OrientedRegularMatroid::new_trusted(cols, rows)
        } else {
            OrientedRegularMatroid::new(cols, rows)
        };
        Ok(Self { inner: inner.map_err(err)? })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    #[getter]
    fn matrix(&self) -> Vec<Vec<i64>> {
        self.inner.matrix().to_vec()
    }

    fn interior_polynomial(&self) -> PyResult<Vec<BigInt>> {
        self.inner.interior_polynomial().map(coeffs).map_err(err)
    }

    fn min_dijoins<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = self.inner.min_dijoins().map_err(err)?;
        certificate(py, &c)
    }

    fn dual(&self) -> PyResult<PyMatroid> {
        Ok(PyMatroid { inner: self.inner.dual().map_err(err)? })
    }

    fn root_polytope(&self) -> PyResult<PyRootPolytope> {
        Ok(PyRootPolytope { inner: self.inner.polytope().map_err(err)? })
    }

    fn facet_description_holds(&self) -> PyResult<bool> {
        Ok(self.inner.check_facet_description().map_err(err)?.holds())
    }
}

/// Convex hull of the origin and a set of integer generators.
#[pyclass(name = "RootPolytope", module = "rootpoly_py")]
struct PyRootPolytope {
    inner: poly::RootPolytope,
}

#[pymethods]
impl PyRootPolytope {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.inner.ambient_dim()
    }

    fn hstar(&self) -> PyResult<Vec<BigInt>> {
        self.inner.hstar().map(coeffs).map_err(err)
    }

    fn normalized_volume(&self) -> BigInt {
        self.inner.normalized_volume()
    }

    fn first_interior_dilate(&self) -> PyResult<u64> {
        self.inner.first_interior_dilate().map_err(err)
    }

    #[pyo3(signature = (k, interior=false))]
    fn lattice_count(&self, k: u64, interior: bool) -> PyResult<u64> {
        self.inner.lattice_count(k, mode(interior)).map_err(err)
    }

    #[pyo3(signature = (k, interior=false))]
    fn lattice_points(&self, k: u64, interior: bool) -> PyResult<Vec<Vec<i64>>> {
        self.inner.lattice_points(k, mode(interior)).map_err(err)
    }

    fn facet_count(&self) -> PyResult<usize> {
        Ok(self.inner.facets().map_err(err)?.len())
    }
}

/// Summary of the interior polynomials over all orientations of an undirected
/// multigraph, as a dict.
#[pyfunction]
fn orient_scan<'py>(py: Python<'py>, n: usize, edges: Vec<(usize, usize)>) -> PyResult<Bound<'py, PyDict>> {
    let u = UGraph::new(n, edges).map_err(err)?;
    let s = cli::orient_scan(&u, cli::orient_scan::DEFAULT_SCAN_LIMIT).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("holds", s.holds())?;
    d.set_item("orientations", s.orientations)?;
    let polys: Vec<(Vec<BigInt>, u64)> = s.polynomials.iter().map(|(p, c)| (coeffs(p.clone()), *c)).collect();
    d.set_item("polynomials", polys)?;
    d.set_item("min_degree", s.min_degree)?;
    d.set_item("max_degree", s.max_degree)?;
    d.set_item("minimal_polynomials", s.minimal_polynomials.into_iter().map(coeffs).collect::<Vec<_>>())?;
    d.set_item("maximal_polynomials", s.maximal_polynomials.into_iter().map(coeffs).collect::<Vec<_>>())?;
    d.set_item("coefficientwise_minimum", s.coefficientwise_minimum.map(coeffs))?;
    d.set_item("coefficientwise_maximum", s.coefficientwise_maximum.map(coeffs))?;
    Ok(d)
}

/// Runs a command-line subcommand on instance text and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (command, text, root=None, order=None, trust_tu=false))]
fn run(
    command: &str,
    text: &str,
    root: Option<usize>,
    order: Option<Vec<usize>>,
    trust_tu: bool,
) -> PyResult<String> {
    let instance = cli::parse_instance(text).map_err(err)?;
    let path = std::path::PathBuf::from("<python>");
    let need_root = || root.ok_or_else(|| PyValueError::new_err(format!("`{command}` needs a root")));
    let cmd = match command {
        "interior" => Command::Interior { path },
        "dijoin" => Command::Dijoin { path },
        "minfas" => Command::Minfas { path, root },
        "parking" => Command::Parking { path, root: need_root()? },
        "greedoid" => Command::Greedoid { path, root: need_root()?, order },
        "matroid-interior" => Command::MatroidInterior { path },
        "dual" => Command::Dual { path },
        "facets" => Command::Facets { path },
        "orient-scan" => Command::OrientScan { path },
        "verify" => Command::Verify { path, root },
        other => return Err(PyValueError::new_err(format!("unknown command `{other}`"))),
    };
    let opts = Options { trust_tu, root, ..Options::default() };
    let report = cli::run_command(&cmd, &instance, "<python>", &opts).map_err(err)?;
    Ok(report.to_json())
}

#[pymodule]
fn rootpoly_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiGraph>()?;
    m.add_class::<PyMatroid>()?;
    m.add_class::<PyRootPolytope>()?;
    m.add_function(wrap_pyfunction!(orient_scan, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
