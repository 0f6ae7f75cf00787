//! Python bindings. One class wraps the graph type; module functions cover
//! hole-number computation, cycle search, the exception families, and the
//! catalog verifier. Contract limits surface as ValueError instead of panics.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use bhnlab::bhn::{bipartite_hole_number, has_bipartite_hole, hole_profile};
use bhnlab::families;
use bhnlab::g6::{emit_graph6, parse_graph6 as parse_g6};
use bhnlab::graph::{Graph, Sigma2};
use bhnlab::hamilton::{
    hamilton_cycle, hamilton_path, is_hamiltonian_connected, MAX_CONNECTED_ORDER, MAX_DP_ORDER,
};
use bhnlab::verify::{
    check_one, enumerate_all_graphs, equality_census, run_verification, CatalogSource, Invariants,
    TheoremId, Verdict, ALL_THEOREMS,
};

const MAX_SCAN_ORDER: usize = 32;

fn value_err(msg: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(msg.to_string())
}

fn check_scan_order(n: usize) -> PyResult<()> {
    if n > MAX_SCAN_ORDER {
        return Err(value_err(format!(
            "order {n} exceeds the order-{MAX_SCAN_ORDER} hole-scan envelope"
        )));
    }
    Ok(())
}

fn check_dp_order(n: usize) -> PyResult<()> {
    if n > MAX_DP_ORDER {
        return Err(value_err(format!(
            "order {n} exceeds the order-{MAX_DP_ORDER} hamiltonicity envelope"
        )));
    }
    Ok(())
}

fn parse_theorem(name: &str) -> PyResult<TheoremId> {
    TheoremId::parse(name).ok_or_else(|| {
        let ids: Vec<&str> = ALL_THEOREMS.iter().map(|t| t.name()).collect();
        value_err(format!(
            "unknown theorem id {name:?}; valid ids: {}",
            ids.join(", ").to_lowercase()
        ))
    })
}

fn sigma2_object(py: Python<'_>, s: Sigma2) -> Py<PyAny> {
    match s {
        Sigma2::Finite(v) => (v as u64).into_pyobject(py).unwrap().into_any().unbind(),
        Sigma2::Infinity => f64::INFINITY.into_pyobject(py).unwrap().into_any().unbind(),
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::NotApplicable => "not_applicable",
        Verdict::Confirmed => "confirmed",
        Verdict::Exception => "exception",
        Verdict::Counterexample => "counterexample",
    }
}

/// An undirected simple graph on at most 64 vertices, labeled 0..n-1.
/// Equality and hashing are on the labeled adjacency, not up to isomorphism.
#[pyclass(name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=None))]
    fn new(n: usize, edges: Option<Vec<(usize, usize)>>) -> PyResult<Self> {
        let inner = Graph::from_edges(n, &edges.unwrap_or_default()).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(word: &str) -> PyResult<Self> {
        let inner = parse_g6(word.trim().as_bytes()).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        if !(1..=64).contains(&n) {
            return Err(value_err(format!("order {n} outside 1..=64")));
        }
        Ok(PyGraph { inner: Graph::complete(n) })
    }

    #[staticmethod]
    fn edgeless(n: usize) -> PyResult<Self> {
        if !(1..=64).contains(&n) {
            return Err(value_err(format!("order {n} outside 1..=64")));
        }
        Ok(PyGraph { inner: Graph::edgeless(n) })
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        if !(1..=64).contains(&n) {
            return Err(value_err(format!("order {n} outside 1..=64")));
        }
        Ok(PyGraph { inner: Graph::path_graph(n) })
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        if !(3..=64).contains(&n) {
            return Err(value_err(format!("cycle order {n} outside 3..=64")));
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Ok(PyGraph { inner: Graph::from_edges(n, &edges).unwrap() })
    }

    #[staticmethod]
    fn complete_bipartite(a: usize, b: usize) -> PyResult<Self> {
        if a == 0 || b == 0 || a + b > 64 {
            return Err(value_err(format!(
                "complete bipartite sides must be positive with a+b <= 64, got ({a},{b})"
            )));
        }
        Ok(PyGraph { inner: Graph::complete_bipartite(a, b) })
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.inner.edge_count());
        for u in 0..self.inner.n() {
            for v in u + 1..self.inner.n() {
                if self.inner.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        let n = self.inner.n();
        if u >= n || v >= n {
            return Err(value_err(format!("vertex outside 0..{n}")));
        }
        Ok(self.inner.has_edge(u, v))
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(value_err(format!("vertex {v} outside 0..{}", self.inner.n())));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(value_err(format!("vertex {v} outside 0..{}", self.inner.n())));
        }
        Ok(self.inner.degree(v))
    }

    fn min_degree(&self) -> usize {
        self.inner.min_degree()
    }

    /// Minimum degree sum over non-adjacent vertex pairs; float('inf') on
    /// complete graphs.
    fn sigma2(&self, py: Python<'_>) -> Py<PyAny> {
        sigma2_object(py, self.inner.sigma2())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_two_connected(&self) -> bool {
        self.inner.n() >= 3 && self.inner.is_2connected()
    }

    fn complement(&self) -> Self {
        PyGraph { inner: self.inner.complement() }
    }

    fn join(&self, other: &PyGraph) -> PyResult<Self> {
        let inner = self.inner.join(&other.inner).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    fn to_graph6(&self) -> PyResult<String> {
        emit_graph6(&self.inner).map_err(value_err)
    }

    /// Label-invariant identity for graphs of order <= 10, as bytes.
    fn canonical_bytes(&self) -> PyResult<Vec<u8>> {
        if self.inner.n() > 10 {
            return Err(value_err(format!(
                "canonical form supports order <= 10, got {}",
                self.inner.n()
            )));
        }
        Ok(self.inner.canonical_code().to_bytes())
    }

    fn is_isomorphic(&self, other: &PyGraph) -> PyResult<bool> {
        if self.inner.n() > 10 || other.inner.n() > 10 {
            return Err(value_err("isomorphism test supports order <= 10"));
        }
        Ok(self.inner.canonical_code() == other.inner.canonical_code())
    }

    /// Smallest k such that some split s+t=k+1 leaves no (s,t) bipartite hole.
    fn alpha_tilde(&self) -> PyResult<usize> {
        check_scan_order(self.inner.n())?;
        Ok(bipartite_hole_number(&self.inner))
    }

    /// The split (s, t) certifying alpha_tilde: s+t = alpha_tilde+1 and no
    /// (s, t) hole exists, with the smallest such s.
    fn certifying_split(&self) -> PyResult<(usize, usize)> {
        check_scan_order(self.inner.n())?;
        Ok(hole_profile(&self.inner).certifying_split())
    }

    /// Disjoint nonempty sides (S, T) with no S-T edge, if any exist at the
    /// requested sizes.
    fn bipartite_hole(&self, s: usize, t: usize) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
        let n = self.inner.n();
        check_scan_order(n)?;
        if s == 0 || t == 0 || s + t > n {
            return Err(value_err(format!(
                "hole sides must be positive with s+t <= {n}, got ({s},{t})"
            )));
        }
        Ok(has_bipartite_hole(&self.inner, s, t)
            .map(|w| (w.s_side.to_vec(), w.t_side.to_vec())))
    }

    fn is_hamiltonian(&self) -> PyResult<bool> {
        check_dp_order(self.inner.n())?;
        Ok(self.inner.n() >= 3 && hamilton_cycle(&self.inner).is_some())
    }

    fn is_traceable(&self) -> PyResult<bool> {
        check_dp_order(self.inner.n())?;
        Ok(hamilton_path(&self.inner).is_some())
    }

    /// A spanning cycle as a vertex list, or None. Order below 3 has none.
    fn hamilton_cycle(&self) -> PyResult<Option<Vec<usize>>> {
        check_dp_order(self.inner.n())?;
        if self.inner.n() < 3 {
            return Ok(None);
        }
        Ok(hamilton_cycle(&self.inner).map(|c| c.vertices().to_vec()))
    }

    /// A spanning path as a vertex list, or None.
    fn hamilton_path(&self) -> PyResult<Option<Vec<usize>>> {
        check_dp_order(self.inner.n())?;
        Ok(hamilton_path(&self.inner).map(|p| p.vertices().to_vec()))
    }

    /// True when every vertex pair is joined by a spanning path.
    fn is_hamiltonian_connected(&self) -> PyResult<bool> {
        let n = self.inner.n();
        if n < 3 {
            return Err(value_err(format!(
                "hamiltonian-connectedness needs order >= 3, got {n}"
            )));
        }
        if n > MAX_CONNECTED_ORDER {
            return Err(value_err(format!(
                "order {n} exceeds the order-{MAX_CONNECTED_ORDER} spanning-path envelope"
            )));
        }
        Ok(is_hamiltonian_connected(&self.inner))
    }

    /// All scalar invariants at once, as a dict matching the CLI field names.
    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        check_dp_order(self.inner.n())?;
        let inv = Invariants::compute(&self.inner);
        let d = PyDict::new(py);
        d.set_item("n", inv.n)?;
        d.set_item("e", inv.e)?;
        d.set_item("min_degree", inv.min_degree)?;
        d.set_item("sigma2", sigma2_object(py, inv.sigma2))?;
        d.set_item("alpha_tilde", inv.alpha_tilde)?;
        d.set_item("connected", inv.connected)?;
        d.set_item("two_connected", inv.two_connected)?;
        d.set_item("hamiltonian", inv.hamiltonian)?;
        d.set_item("traceable", inv.traceable)?;
        Ok(d)
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        match emit_graph6(&self.inner) {
            Ok(w) => format!("Graph.from_graph6({w:?})"),
            Err(_) => format!("<Graph n={} e={}>", self.inner.n(), self.inner.edge_count()),
        }
    }
}

/// Parse one graph6 word.
#[pyfunction]
fn parse_graph6(word: &str) -> PyResult<PyGraph> {
    PyGraph::from_graph6(word)
}

/// Join of `inner` with an independent set one larger: the odd-order
/// hamiltonicity exceptions.
#[pyfunction]
fn build_exc_a(inner: &PyGraph) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: families::build_exc_a(&inner.inner).map_err(value_err)? })
}

/// Two m-cliques sharing a single apex vertex: the cut-vertex exceptions.
#[pyfunction]
fn build_exc_b(m: usize) -> PyResult<PyGraph> {
    if m == 0 {
        return Err(value_err("clique size must be positive"));
    }
    Ok(PyGraph { inner: families::build_exc_b(m).map_err(value_err)? })
}

/// Join of `inner` with an independent set two larger: the even-order
/// traceability exceptions.
#[pyfunction]
fn build_trace_a(inner: &PyGraph) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: families::build_trace_a(&inner.inner).map_err(value_err)? })
}

/// Two disjoint m-cliques.
#[pyfunction]
fn build_trace_b(m: usize) -> PyResult<PyGraph> {
    if m == 0 {
        return Err(value_err("clique size must be positive"));
    }
    Ok(PyGraph { inner: families::build_trace_b(m).map_err(value_err)? })
}

#[pyfunction]
fn recognize_exc_a(g: &PyGraph) -> bool {
    g.inner.n() >= 3 && families::recognize_exc_a(&g.inner)
}

#[pyfunction]
fn recognize_exc_b(g: &PyGraph) -> bool {
    g.inner.n() >= 3 && families::recognize_exc_b(&g.inner)
}

/// ("trace_a", inner_order) or ("trace_b", m) when the graph is a
/// traceability exception, else None.
#[pyfunction]
fn recognize_trace_family(g: &PyGraph) -> Option<(String, usize)> {
    if g.inner.n() < 2 {
        return None;
    }
    families::recognize_trace_families(&g.inner).map(|tag| match tag {
        families::FamilyTag::TraceA { inner_order } => ("trace_a".to_string(), inner_order),
        families::FamilyTag::TraceB { m } => ("trace_b".to_string(), m),
        other => unreachable!("trace recognizer returned {other:?}"),
    })
}

/// The theorem ids accepted by check_theorem and verify_builtin.
#[pyfunction]
fn theorem_ids() -> Vec<String> {
    ALL_THEOREMS.iter().map(|t| t.name().to_lowercase()).collect()
}

/// One verdict for one graph: "not_applicable", "confirmed", "exception",
/// or "counterexample".
#[pyfunction]
fn check_theorem(theorem: &str, g: &PyGraph) -> PyResult<String> {
    let id = parse_theorem(theorem)?;
    check_dp_order(g.inner.n())?;
    Ok(verdict_name(check_one(id, &g.inner)).to_string())
}

/// Run theorems over the built-in catalog of orders lo..=hi (1..=8). Returns
/// one dict per theorem with the same fields as the CLI verify report.
#[pyfunction]
#[pyo3(signature = (lo, hi, theorems=None, connected_only=false))]
fn verify_builtin<'py>(
    py: Python<'py>,
    lo: usize,
    hi: usize,
    theorems: Option<Vec<String>>,
    connected_only: bool,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    if !(1 <= lo && lo <= hi && hi <= 8) {
        return Err(value_err(format!(
            "catalog range must satisfy 1 <= lo <= hi <= 8, got {lo}..={hi}"
        )));
    }
    let ids: Vec<TheoremId> = match theorems {
        None => ALL_THEOREMS.to_vec(),
        Some(names) => names
            .iter()
            .map(|s| parse_theorem(s))
            .collect::<PyResult<_>>()?,
    };
    let verification = py
        .detach(|| run_verification(&ids, CatalogSource::builtin(lo, hi, connected_only)))
        .map_err(value_err)?;
    let mut out = Vec::with_capacity(verification.reports.len());
    for r in verification.reports {
        let d = PyDict::new(py);
        d.set_item("theorem", r.theorem)?;
        d.set_item("graphs_checked", r.graphs_checked)?;
        d.set_item("hypothesis_hits", r.hypothesis_hits)?;
        d.set_item("counterexamples", r.counterexamples)?;
        d.set_item("equality_cases", r.equality_cases)?;
        d.set_item("exceptions_found", r.exceptions_found)?;
        out.push(d);
    }
    Ok(out)
}

/// graph6 words of the catalog graphs meeting a theorem's hypothesis with
/// equality while failing its conclusion.
#[pyfunction]
#[pyo3(signature = (theorem, lo, hi, connected_only=false))]
fn equality_census_builtin(
    py: Python<'_>,
    theorem: &str,
    lo: usize,
    hi: usize,
    connected_only: bool,
) -> PyResult<Vec<String>> {
    if !(1 <= lo && lo <= hi && hi <= 8) {
        return Err(value_err(format!(
            "catalog range must satisfy 1 <= lo <= hi <= 8, got {lo}..={hi}"
        )));
    }
    let id = parse_theorem(theorem)?;
    py.detach(|| equality_census(id, CatalogSource::builtin(lo, hi, connected_only)))
        .map_err(value_err)
}

/// graph6 words for one representative per isomorphism class of order n <= 8.
#[pyfunction]
#[pyo3(signature = (n, connected_only=false))]
fn enumerate_graph6(py: Python<'_>, n: usize, connected_only: bool) -> PyResult<Vec<String>> {
    if !(1..=8).contains(&n) {
        return Err(value_err(format!("enumeration supports order 1..=8, got {n}")));
    }
    let graphs = py.detach(|| enumerate_all_graphs(n, connected_only));
    graphs
        .iter()
        .map(|g| emit_graph6(g).map_err(value_err))
        .collect()
}

#[pymodule]
fn bhnlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(parse_graph6, m)?)?;
    m.add_function(wrap_pyfunction!(build_exc_a, m)?)?;
    m.add_function(wrap_pyfunction!(build_exc_b, m)?)?;
    m.add_function(wrap_pyfunction!(build_trace_a, m)?)?;
    m.add_function(wrap_pyfunction!(build_trace_b, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_exc_a, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_exc_b, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_trace_family, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_ids, m)?)?;
    m.add_function(wrap_pyfunction!(check_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(verify_builtin, m)?)?;
    m.add_function(wrap_pyfunction!(equality_census_builtin, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_graph6, m)?)?;
    m.add("MAX_SCAN_ORDER", MAX_SCAN_ORDER)?;
    m.add("MAX_DP_ORDER", MAX_DP_ORDER)?;
    m.add("MAX_CONNECTED_ORDER", MAX_CONNECTED_ORDER)?;
    Ok(())
}
