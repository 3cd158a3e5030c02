//! Python bindings: the graph type, the mu_k solvers, family generators
//! with their closed-form values, the tree algorithm, the hardness gadget,
//! and the bound report.

use std::collections::HashMap;
use std::time::Duration;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use kvis_core::bounds;
use kvis_core::families::{self, FamilyName, FamilySpec};
use kvis_core::graph::{all_pairs, from_edge_list, Graph as CoreGraph};
use kvis_core::reduction::{build_gprime, expected_mu_gprime, proof_witness_set, GPrimeLayout};
use kvis_core::solver::{self, SolveOptions};
use kvis_core::visibility;
use kvis_core::VertexSet;

fn to_py_err(err: kvis_core::Error) -> PyErr {
    match err {
        kvis_core::Error::Budget { lower_bound } => PyRuntimeError::new_err(format!(
            "budget exhausted; best lower bound {lower_bound}"
        )),
        kvis_core::Error::Internal(msg) => PyRuntimeError::new_err(msg),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn spec_from_args(
    name: &str,
    params: Option<HashMap<String, u64>>,
    inner: Option<String>,
    inner_params: Option<HashMap<String, u64>>,
) -> PyResult<FamilySpec> {
    let family = FamilyName::parse(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown family '{name}'")))?;
    let mut spec = FamilySpec::new(family);
    for (key, value) in params.unwrap_or_default() {
        spec = spec.with(&key, value);
    }
    if let Some(inner_name) = inner {
        let inner_family = FamilyName::parse(&inner_name)
            .ok_or_else(|| PyValueError::new_err(format!("unknown inner family '{inner_name}'")))?;
        let mut inner_spec = FamilySpec::new(inner_family);
        for (key, value) in inner_params.unwrap_or_default() {
            inner_spec = inner_spec.with(&key, value);
        }
        spec = spec.with_inner(inner_spec);
    }
    Ok(spec)
}

/// An immutable simple undirected graph. Vertices keep the labels they had
/// in the input; generated graphs are labeled 0..n-1.
#[pyclass(frozen)]
struct Graph {
    inner: CoreGraph,
    labels: Vec<u64>,
    index: HashMap<u64, usize>,
}

impl Graph {
    fn wrap(inner: CoreGraph, labels: Vec<u64>) -> Graph {
        let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        Graph {
            inner,
            labels,
            index,
        }
    }

    fn wrap_identity(inner: CoreGraph) -> Graph {
        let labels: Vec<u64> = (0..inner.n() as u64).collect();
        Graph::wrap(inner, labels)
    }

    fn id_of(&self, label: u64) -> PyResult<usize> {
        self.index
            .get(&label)
            .copied()
            .ok_or_else(|| PyValueError::new_err(format!("unknown vertex label {label}")))
    }

    fn set_from_labels(&self, labels: Vec<u64>) -> PyResult<VertexSet> {
        let mut s = VertexSet::empty(self.inner.n());
        for label in labels {
            s.insert(self.id_of(label)?);
        }
        Ok(s)
    }

    fn labels_of(&self, s: &VertexSet) -> Vec<u64> {
        s.iter().map(|v| self.labels[v]).collect()
    }
}

#[pymethods]
impl Graph {
    /// Parse edge-list text: two integer labels per line, `#`/`c` comments
    /// and blank lines ignored, duplicate edges collapsed.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Graph> {
        let parsed = from_edge_list(text).map_err(to_py_err)?;
        Ok(Graph::wrap(parsed.graph, parsed.labels))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn labels(&self) -> Vec<u64> {
        self.labels.clone()
    }

    fn edges(&self) -> Vec<(u64, u64)> {
        self.inner
            .edges()
            .into_iter()
            .map(|(u, v)| (self.labels[u], self.labels[v]))
            .collect()
    }

    fn degree(&self, label: u64) -> PyResult<usize> {
        Ok(self.inner.degree(self.id_of(label)?))
    }

    fn has_edge(&self, a: u64, b: u64) -> PyResult<bool> {
        Ok(self.inner.has_edge(self.id_of(a)?, self.id_of(b)?))
    }

    fn neighbors(&self, label: u64) -> PyResult<Vec<u64>> {
        let v = self.id_of(label)?;
        Ok(self
            .inner
            .neighbors(v)
            .iter()
            .map(|u| self.labels[u])
            .collect())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn diameter(&self) -> usize {
        all_pairs(&self.inner).diameter
    }

    /// Length of a shortest cycle, or None for forests.
    fn girth(&self) -> Option<usize> {
        all_pairs(&self.inner).girth.value()
    }

    fn min_degree(&self) -> usize {
        all_pairs(&self.inner).min_degree
    }

    fn max_degree(&self) -> usize {
        all_pairs(&self.inner).max_degree
    }

    fn distance(&self, a: u64, b: u64) -> PyResult<Option<usize>> {
        let dm = all_pairs(&self.inner);
        let d = dm.dist(self.id_of(a)?, self.id_of(b)?);
        Ok((d != kvis_core::graph::UNREACHABLE).then_some(d as usize))
    }

    fn clique_number(&self) -> PyResult<usize> {
        kvis_core::graph::clique_number_with_limit(&self.inner, self.inner.n().max(64))
            .map_err(to_py_err)
    }

    fn independence_number(&self) -> PyResult<usize> {
        kvis_core::graph::independence_number_with_limit(&self.inner, self.inner.n().max(64))
            .map_err(to_py_err)
    }

    fn to_edge_list(&self) -> String {
        self.inner
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{} {}\n", self.labels[u], self.labels[v]))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Outcome of a mu_k solve.
#[pyclass(frozen)]
struct SolveResult {
    #[pyo3(get)]
    mu: usize,
    #[pyo3(get)]
    witness: Vec<u64>,
    #[pyo3(get)]
    k_effective: usize,
    #[pyo3(get)]
    clamped: bool,
    #[pyo3(get)]
    nodes: u64,
    #[pyo3(get)]
    elapsed_ms: u64,
}

#[pymethods]
impl SolveResult {
    fn __repr__(&self) -> String {
        format!(
            "SolveResult(mu={}, k_effective={}, clamped={}, nodes={})",
            self.mu, self.k_effective, self.clamped, self.nodes
        )
    }
}

/// Exact mu_k. `method` is "bb" (branch-and-bound) or "brute" (subset
/// scan, n <= 20); k beyond the diameter is clamped with a flag.
#[pyfunction]
#[pyo3(signature = (graph, k, method="bb", threads=0, budget_ms=None))]
fn solve(
    graph: &Graph,
    k: usize,
    method: &str,
    threads: usize,
    budget_ms: Option<u64>,
) -> PyResult<SolveResult> {
    let result = match method {
        "bb" => {
            let options = SolveOptions {
                threads,
                budget: budget_ms.map(Duration::from_millis),
            };
            solver::mu_k_exact_with(&graph.inner, k, &options).map_err(to_py_err)?
        }
        "brute" => solver::mu_k_bruteforce(&graph.inner, k).map_err(to_py_err)?,
        other => {
            return Err(PyValueError::new_err(format!(
                "method must be 'bb' or 'brute', got '{other}'"
            )))
        }
    };
    Ok(SolveResult {
        mu: result.mu,
        witness: graph.labels_of(&result.witness),
        k_effective: result.k_effective,
        clamped: result.clamped,
        nodes: result.nodes_explored,
        elapsed_ms: result.elapsed.as_millis() as u64,
    })
}

/// Whether `members` (vertex labels) form a k-distance mutual-visibility
/// set.
#[pyfunction]
fn is_k_mv_set(graph: &Graph, members: Vec<u64>, k: usize) -> PyResult<bool> {
    let s = graph.set_from_labels(members)?;
    let dm = all_pairs(&graph.inner);
    visibility::is_k_mv_set(&graph.inner, &dm, &s, k).map_err(to_py_err)
}

/// All maximum k-distance mutual-visibility sets (n <= 14), as label lists
/// in lexicographic order.
#[pyfunction]
fn maximum_sets(graph: &Graph, k: usize) -> PyResult<Vec<Vec<u64>>> {
    let sets = solver::enumerate_maximum_sets(&graph.inner, k).map_err(to_py_err)?;
    Ok(sets.iter().map(|s| graph.labels_of(s)).collect())
}

/// Generate a named family, e.g. family("corona_path", {"r": 4},
/// inner="complete", inner_params={"n": 2}).
#[pyfunction]
#[pyo3(signature = (name, params=None, inner=None, inner_params=None))]
fn family(
    name: &str,
    params: Option<HashMap<String, u64>>,
    inner: Option<String>,
    inner_params: Option<HashMap<String, u64>>,
) -> PyResult<Graph> {
    let spec = spec_from_args(name, params, inner, inner_params)?;
    let generated = families::generate(&spec).map_err(to_py_err)?;
    Ok(Graph::wrap_identity(generated.graph))
}

/// The closed-form mu_k for a family, or None where no formula is stated.
#[pyfunction]
#[pyo3(signature = (name, k, params=None, inner=None, inner_params=None))]
fn expected_mu(
    name: &str,
    k: usize,
    params: Option<HashMap<String, u64>>,
    inner: Option<String>,
    inner_params: Option<HashMap<String, u64>>,
) -> PyResult<Option<usize>> {
    let spec = spec_from_args(name, params, inner, inner_params)?;
    families::expected_mu(&spec, k).map_err(to_py_err)
}

/// Exact mu_k of a tree in polynomial time (k >= 2).
#[pyfunction]
fn mu_k_tree(graph: &Graph, k: usize) -> PyResult<usize> {
    families::mu_k_tree(&graph.inner, k).map_err(to_py_err)
}

/// (k, mu_k) for k = 1..=diameter; fails if the chain is not
/// nondecreasing from the clique number.
#[pyfunction]
fn check_chain(graph: &Graph) -> PyResult<Vec<(usize, usize)>> {
    bounds::check_chain(&graph.inner).map_err(to_py_err)
}

/// The hardness gadget built from a connected base of diameter >= 3.
#[pyclass(frozen)]
struct Reduction {
    layout: GPrimeLayout,
    base_labels: Vec<u64>,
}

#[pymethods]
impl Reduction {
    #[new]
    fn new(base: &Graph) -> PyResult<Reduction> {
        let layout = build_gprime(&base.inner).map_err(to_py_err)?;
        Ok(Reduction {
            layout,
            base_labels: base.labels.clone(),
        })
    }

    fn gprime(&self) -> Graph {
        Graph::wrap_identity(self.layout.gprime.clone())
    }

    #[getter]
    fn diameter(&self) -> usize {
        self.layout.diameter
    }

    /// One `id<TAB>role` line per gadget vertex, originals in base labels.
    fn roles(&self) -> Vec<String> {
        (0..self.layout.gprime.n())
            .map(|v| self.layout.role_line(v, Some(&self.base_labels)))
            .collect()
    }

    /// The exact value n(m+k-1) + alpha - k + 2.
    fn expected_mu(&self, k: usize) -> PyResult<usize> {
        expected_mu_gprime(&self.layout, k).map_err(to_py_err)
    }

    /// The explicit witness set (gadget vertex ids) built from a maximum
    /// independent set of the base.
    fn witness(&self, k: usize) -> PyResult<Vec<usize>> {
        let independent = kvis_core::graph::max_independent_set_with_limit(
            &self.layout.base,
            self.layout.base.n().max(64),
        )
        .map_err(to_py_err)?;
        let s = proof_witness_set(&self.layout, k, &independent).map_err(to_py_err)?;
        Ok(s.to_vec())
    }

    fn __repr__(&self) -> String {
        format!(
            "Reduction(base_n={}, gprime_n={}, d={})",
            self.layout.base.n(),
            self.layout.gprime.n(),
            self.layout.diameter
        )
    }
}

/// Bound records for a graph as a dict with a list of per-bound entries.
#[pyfunction]
fn bound_report(py: Python<'_>, graph: &Graph) -> PyResult<Py<PyAny>> {
    let report = bounds::bound_report(&graph.inner);
    let out = PyDict::new(py);
    out.set_item("n", report.n)?;
    out.set_item("max_degree", report.max_degree)?;
    out.set_item("min_degree", report.min_degree)?;
    out.set_item("girth", report.girth.value())?;
    let records = PyList::empty(py);
    for r in &report.records {
        let entry = PyDict::new(py);
        entry.set_item("name", r.name)?;
        entry.set_item("direction", r.direction.as_str())?;
        entry.set_item("applicable", r.applicable)?;
        entry.set_item("value", r.value)?;
        entry.set_item("at_k", r.at_k)?;
        entry.set_item("conditions", &r.conditions)?;
        records.append(entry)?;
    }
    out.set_item("bounds", records)?;
    Ok(out.into_any().unbind())
}

#[pymodule]
fn kvis(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Graph>()?;
    m.add_class::<SolveResult>()?;
    m.add_class::<Reduction>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(is_k_mv_set, m)?)?;
    m.add_function(wrap_pyfunction!(maximum_sets, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(expected_mu, m)?)?;
    m.add_function(wrap_pyfunction!(mu_k_tree, m)?)?;
    m.add_function(wrap_pyfunction!(check_chain, m)?)?;
    m.add_function(wrap_pyfunction!(bound_report, m)?)?;
    Ok(())
}
