//! Python bindings for the `alphak` core. Structured results come back as
//! plain dicts mirroring the CLI's JSON payloads.

use std::collections::BTreeMap;

use alphak::bounds::{bound_report_with, brooks_distance_bound, firby_haviland_bound, theorem2_bound};
use alphak::coloring::{chi_k_exact, chi_k_greedy};
use alphak::constructions::{certify as certify_params, verify_construction, FamilyParams};
use alphak::power::{alpha_k_bruteforce, alpha_k_exact_with, alpha_k_greedy, graph_power, SolverOptions};
use alphak::{check_lemma1, layer_decomposition};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;

create_exception!(pyalphak, SolverCapError, PyException, "An exact solver hit its size cap or node limit.");

fn to_py(err: alphak::Error) -> PyErr {
    if err.is_solver_cap() {
        SolverCapError::new_err(err.to_string())
    } else {
        PyValueError::new_err(err.to_string())
    }
}

fn to_dict<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn options(node_limit: Option<u64>) -> SolverOptions {
    SolverOptions { node_limit }
}

/// Family parameters from keyword arguments; list values become
/// comma-separated block sizes.
fn family_params(family: &str, kwargs: Option<&Bound<'_, PyDict>>) -> PyResult<FamilyParams> {
    let mut pairs = BTreeMap::from([("family".to_string(), family.to_string())]);
    if let Some(kwargs) = kwargs {
        for (key, value) in kwargs.iter() {
            let key: String = key.extract()?;
            let value = match value.cast::<PyList>() {
                Ok(list) => list.iter().map(|x| x.str().map(|s| s.to_string())).collect::<PyResult<Vec<_>>>()?.join(","),
                Err(_) => value.str()?.to_string(),
            };
            pairs.insert(key, value);
        }
    }
    FamilyParams::from_pairs(&pairs).map_err(to_py)
}

/// Undirected simple graph on vertices `0..n`.
#[pyclass(frozen, eq, skip_from_py_object, module = "pyalphak")]
#[derive(Clone, PartialEq)]
struct Graph {
    inner: alphak::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph { inner: alphak::Graph::from_edge_list(n, &edges).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(Graph { inner: alphak::parse_graph6(text).map_err(to_py)? })
    }

    /// Parses graph6 or an edge list, detected from the text.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Graph { inner: alphak::parse_graph_auto(text).map_err(to_py)? })
    }

    fn graph6(&self) -> String {
        alphak::write_graph6(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        Ok(self.neighbors(v)?.len())
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(to_py(alphak::Error::VertexOutOfRange { vertex: v, n: self.inner.vertex_count() }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn distances(&self, source: usize) -> PyResult<Vec<Option<usize>>> {
        Ok(self.inner.bfs_distances(source).map_err(to_py)?.dist)
    }

    /// `None` for disconnected graphs.
    fn diameter(&self) -> Option<usize> {
        self.inner.diameter().finite()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn power(&self, k: usize) -> PyResult<Graph> {
        Ok(Graph { inner: graph_power(&self.inner, k).map_err(to_py)? })
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={}, graph6={:?})", self.inner.vertex_count(), self.inner.edge_count(), self.graph6())
    }
}

/// `α_k` with a witness set. `method` is `exact`, `brute_force` or `greedy`.
#[pyfunction]
#[pyo3(signature = (graph, k, method = "exact", node_limit = None))]
fn alpha_k<'py>(py: Python<'py>, graph: &Graph, k: usize, method: &str, node_limit: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let g = &graph.inner;
    let result = match method {
        "exact" => alpha_k_exact_with(g, k, &options(node_limit)),
        "brute_force" | "brute" => alpha_k_bruteforce(g, k),
        "greedy" => alpha_k_greedy(g, k),
        other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
    }
    .map_err(to_py)?;
    to_dict(py, &result)
}

/// Distance-`k` coloring of `graph`: exact up to the colorer's cap, or greedy.
#[pyfunction]
#[pyo3(signature = (graph, k, exact = true))]
fn chi_k<'py>(py: Python<'py>, graph: &Graph, k: usize, exact: bool) -> PyResult<Bound<'py, PyAny>> {
    let result = if exact { chi_k_exact(&graph.inner, k) } else { chi_k_greedy(&graph.inner, k) }.map_err(to_py)?;
    to_dict(py, &result)
}

/// Every closed-form bound for `(graph, k)`, with applicability and, when
/// `exact` is set, the true `α_k` and the tight cases.
#[pyfunction]
#[pyo3(signature = (graph, k, exact = true, node_limit = None))]
fn bounds<'py>(py: Python<'py>, graph: &Graph, k: usize, exact: bool, node_limit: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let report = bound_report_with(&graph.inner, k, exact, &options(node_limit)).map_err(to_py)?;
    to_dict(py, &report)
}

#[pyfunction]
fn distance_bound<'py>(py: Python<'py>, n: usize, k: usize) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &firby_haviland_bound(n, k).map_err(to_py)?)
}

#[pyfunction]
fn degree_bound<'py>(py: Python<'py>, n: usize, k: usize, min_degree: usize, max_degree: usize) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &theorem2_bound(n, k, min_degree, max_degree).map_err(to_py)?)
}

/// Upper bound on the maximum degree of `G^k` given `Δ(G)`.
#[pyfunction]
fn brooks_bound(max_degree: usize, k: usize) -> PyResult<u128> {
    brooks_distance_bound(max_degree, k).map_err(to_py)
}

/// Distance layers around `seed`.
#[pyfunction]
fn layers(graph: &Graph, seed: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    Ok(layer_decomposition(&graph.inner, &seed).map_err(to_py)?.layers)
}

/// Audits the layer-size inequalities around a `k`-independent `seed`.
#[pyfunction]
fn audit_layers<'py>(py: Python<'py>, graph: &Graph, seed: Vec<usize>, k: usize) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &check_lemma1(&graph.inner, &seed, k).map_err(to_py)?)
}

/// Builds a named family, e.g. `construct("g1", r=3, l=1, t=2)`.
#[pyfunction]
#[pyo3(signature = (family, **params))]
fn construct(family: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<Graph> {
    Ok(Graph { inner: family_params(family, params)?.build().map_err(to_py)? })
}

/// Checks `graph` against a family's closed-form profile.
#[pyfunction]
#[pyo3(signature = (graph, family, node_limit = None, **params))]
fn verify<'py>(
    py: Python<'py>,
    graph: &Graph,
    family: &str,
    node_limit: Option<u64>,
    params: Option<&Bound<'py, PyDict>>,
) -> PyResult<Bound<'py, PyAny>> {
    let params = family_params(family, params)?;
    to_dict(py, &verify_construction(&graph.inner, &params, &options(node_limit)).map_err(to_py)?)
}

/// Builds a family instance and verifies it.
#[pyfunction]
#[pyo3(signature = (family, node_limit = None, **params))]
fn certify<'py>(py: Python<'py>, family: &str, node_limit: Option<u64>, params: Option<&Bound<'py, PyDict>>) -> PyResult<Bound<'py, PyAny>> {
    let params = family_params(family, params)?;
    to_dict(py, &certify_params(&params, &options(node_limit)).map_err(to_py)?)
}

#[pyfunction]
fn random_graph(n: usize, p: f64, seed: u64) -> PyResult<Graph> {
    Ok(Graph { inner: alphak::random_connected_graph(n, p, seed).map_err(to_py)? })
}

#[pymodule]
fn pyalphak(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add("SolverCapError", m.py().get_type::<SolverCapError>())?;
    m.add_function(wrap_pyfunction!(alpha_k, m)?)?;
    m.add_function(wrap_pyfunction!(chi_k, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(distance_bound, m)?)?;
    m.add_function(wrap_pyfunction!(degree_bound, m)?)?;
    m.add_function(wrap_pyfunction!(brooks_bound, m)?)?;
    m.add_function(wrap_pyfunction!(layers, m)?)?;
    m.add_function(wrap_pyfunction!(audit_layers, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    Ok(())
}
