//! Python bindings: quivers, bound quiver algebras, modules, Galois covers
//! and the Hochschild cohomology reports.
//!
//! ```python
//! import tiltcover_py as tc
//! k = tc.Algebra.path(tc.Quiver.kronecker())
//! c = tc.Cover(k, "Z2", {"b": "1"})
//! c.lift(["0,1", "1,2"])
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyAny;
use serde_json::Value;

use tiltcover::algebra::{squid, AlgebraJson, BoundQuiverAlgebra};
use tiltcover::cover::{build_cover, induced_end_cover, lift_transcript, stabilizer, CategoryCover};
use tiltcover::derived::DObject;
use tiltcover::exactla::parse_scalar;
use tiltcover::hh;
use tiltcover::quiver::{finite_cover_from_monodromy, is_tree, named, pi1_rank, FiniteGroup, QuiverJson};
use tiltcover::rep::{self, decompose, Rep};
use tiltcover::tilt::{is_tilting_module, module_mutation, tilting_hasse, Transcript};
use tiltcover::Error;

fn err(e: Error) -> PyErr {
    match e {
        Error::Verification(_) | Error::CoveringProperty(_) | Error::ClosedFormMismatch { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (s,))
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &str) -> PyResult<T> {
    serde_json::from_str(s).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn parse_dims(s: &str) -> PyResult<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| PyValueError::new_err(format!("bad dimension vector `{s}`")))
}

/// A finite quiver.
#[pyclass(name = "Quiver", frozen)]
struct PyQuiver {
    inner: tiltcover::quiver::Quiver,
}

#[pymethods]
impl PyQuiver {
    /// Builds a quiver from vertex names and `(name, source, target)` triples.
    #[new]
    fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> PyResult<Self> {
        let inner = tiltcover::quiver::Quiver::new(&vertices, &arrows).map_err(err)?;
        Ok(PyQuiver { inner })
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let j: QuiverJson = parse_json(s)?;
        Ok(PyQuiver { inner: tiltcover::quiver::Quiver::from_json(&j).map_err(err)? })
    }

    #[staticmethod]
    fn kronecker() -> Self {
        PyQuiver { inner: named::kronecker() }
    }

    #[staticmethod]
    fn linear(n: usize) -> Self {
        PyQuiver { inner: named::linear_a(n) }
    }

    fn pi1_rank(&self) -> usize {
        pi1_rank(&self.inner)
    }

    fn is_tree(&self) -> bool {
        is_tree(&self.inner)
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn __repr__(&self) -> String {
        format!("Quiver({} vertices, {} arrows)", self.inner.num_vertices(), self.inner.num_arrows())
    }
}

/// A bound quiver algebra.
#[pyclass(name = "Algebra", frozen)]
struct PyAlgebra {
    inner: rep::Algebra,
}

#[pymethods]
impl PyAlgebra {
    #[staticmethod]
    fn path(q: &PyQuiver) -> PyResult<Self> {
        Ok(PyAlgebra { inner: Arc::new(BoundQuiverAlgebra::path_algebra(&q.inner).map_err(err)?) })
    }

    /// The squid `S(t, p, tau)`; `tau` entries are rationals such as `"2/3"`.
    #[staticmethod]
    #[pyo3(signature = (t, p, tau=Vec::new()))]
    fn squid(t: usize, p: Vec<usize>, tau: Vec<String>) -> PyResult<Self> {
        let tau = tau.iter().map(|x| parse_scalar(x)).collect::<tiltcover::Result<Vec<_>>>().map_err(err)?;
        Ok(PyAlgebra { inner: Arc::new(squid(t, &p, &tau).map_err(err)?) })
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let j: AlgebraJson = parse_json(s)?;
        Ok(PyAlgebra { inner: Arc::new(BoundQuiverAlgebra::from_json(&j).map_err(err)?) })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_json()).expect("algebra JSON serialises")
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    fn projective(&self, v: usize) -> PyResult<PyModule_> {
        self.check_vertex(v)?;
        Ok(PyModule_ { inner: Rep::projective(&self.inner, v) })
    }

    fn simple(&self, v: usize) -> PyResult<PyModule_> {
        self.check_vertex(v)?;
        Ok(PyModule_ { inner: Rep::simple(&self.inner, v) })
    }

    fn regular(&self) -> PyModule_ {
        PyModule_ { inner: Rep::regular(&self.inner) }
    }

    /// `dim HH^n` for `n` in `{0, 1}`.
    #[pyo3(signature = (n, cap=hh::DEFAULT_DIM_CAP))]
    fn hh_dim(&self, n: usize, cap: usize) -> PyResult<usize> {
        hh::hh_dim(&self.inner, n, cap).map_err(err)
    }

    /// The simple-connectedness report as a dict.
    #[pyo3(signature = (cap=hh::DEFAULT_DIM_CAP))]
    fn report<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Bound<'py, PyAny>> {
        let r = hh::simple_connectedness_report(&self.inner, cap).map_err(err)?;
        to_py(py, &serde_json::to_value(r).expect("report serialises"))
    }

    /// Dimension vectors of the basic tilting modules, and the Hasse edges.
    #[pyo3(signature = (cap=4))]
    fn tilting_hasse<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Bound<'py, PyAny>> {
        let g = tilting_hasse(&self.inner, cap).map_err(err)?;
        let mut v = g.to_json();
        v["connected"] = Value::from(g.is_connected());
        to_py(py, &v)
    }

    fn __repr__(&self) -> String {
        format!("Algebra({}, dim {})", self.inner.label(), self.inner.dim())
    }
}

impl PyAlgebra {
    fn check_vertex(&self, v: usize) -> PyResult<()> {
        if v >= self.inner.num_vertices() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(())
    }
}

/// A finite-dimensional module, as a representation of the quiver.
#[pyclass(name = "Module", frozen)]
struct PyModule_ {
    inner: Rep,
}

#[pymethods]
impl PyModule_ {
    #[staticmethod]
    fn from_json(alg: &PyAlgebra, s: &str) -> PyResult<Self> {
        let v: Value = parse_json(s)?;
        Ok(PyModule_ { inner: Rep::from_json(&alg.inner, &v).map_err(err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().to_vec()
    }

    fn direct_sum(&self, other: &PyModule_) -> PyResult<Self> {
        if self.inner.algebra() != other.inner.algebra() {
            return Err(err(Error::AlgebraMismatch));
        }
        Ok(PyModule_ { inner: Rep::direct_sum(self.inner.algebra(), &[self.inner.clone(), other.inner.clone()]) })
    }

    /// Dimension vectors of the indecomposable summands.
    fn summands(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(decompose(&self.inner).map_err(err)?.summands.iter().map(|x| x.dims().to_vec()).collect())
    }

    fn is_indecomposable(&self) -> PyResult<bool> {
        rep::is_indecomposable(&self.inner).map_err(err)
    }

    fn is_isomorphic(&self, other: &PyModule_) -> PyResult<bool> {
        rep::is_isomorphic(&self.inner, &other.inner).map_err(err)
    }

    fn hom_dim(&self, other: &PyModule_) -> PyResult<usize> {
        rep::hom_dim(&self.inner, &other.inner).map_err(err)
    }

    fn ext1_dim(&self, other: &PyModule_) -> PyResult<usize> {
        rep::ext1_dim(&self.inner, &other.inner).map_err(err)
    }

    fn is_tilting(&self) -> PyResult<bool> {
        is_tilting_module(&self.inner).map_err(err)
    }

    /// Exchanges the summand with the given dimension vector, e.g. `"0,1"`.
    fn mutate(&self, summand: &str) -> PyResult<Self> {
        let k = summand_index(&self.inner, &parse_dims(summand)?)?;
        let mu = module_mutation(&self.inner, k)
            .map_err(err)?
            .ok_or_else(|| PyValueError::new_err("summand cannot be exchanged"))?;
        Ok(PyModule_ { inner: mu.result })
    }

    fn __repr__(&self) -> String {
        format!("Module({:?})", self.inner.dims())
    }
}

fn summand_index(t: &Rep, dims: &[usize]) -> PyResult<usize> {
    let d = decompose(t).map_err(err)?;
    let hits: Vec<usize> = (0..d.summands.len()).filter(|&i| d.summands[i].dims() == dims).collect();
    match hits.as_slice() {
        [k] => Ok(*k),
        _ => Err(PyValueError::new_err(format!("no unique summand with dimension vector {dims:?}"))),
    }
}

/// A Galois covering of an algebra by a finite group acting through the
/// monodromy of its arrows.
#[pyclass(name = "Cover", frozen)]
struct PyCover {
    inner: CategoryCover,
}

#[pymethods]
impl PyCover {
    /// `group` is `"Zn"` or `"Zn x Zm"`; `monodromy` maps arrow names to
    /// group element names.
    #[new]
    #[pyo3(signature = (alg, group, monodromy=BTreeMap::new()))]
    fn new(alg: &PyAlgebra, group: &str, monodromy: BTreeMap<String, String>) -> PyResult<Self> {
        let g = FiniteGroup::parse_spec(group).map_err(err)?;
        let mut w = BTreeMap::new();
        for (a, e) in monodromy {
            w.insert(a, g.element(&e).map_err(err)?);
        }
        let qc = finite_cover_from_monodromy(alg.inner.quiver(), &g, &w).map_err(err)?;
        Ok(PyCover { inner: build_cover(&alg.inner, qc).map_err(err)? })
    }

    #[getter]
    fn total(&self) -> PyAlgebra {
        PyAlgebra { inner: self.inner.total().clone() }
    }

    fn push_down(&self, m: &PyModule_) -> PyResult<PyModule_> {
        if m.inner.algebra() != self.inner.total() {
            return Err(err(Error::AlgebraMismatch));
        }
        Ok(PyModule_ { inner: self.inner.push_down(&m.inner) })
    }

    /// `dim Hom(F M, F N) = Σ_g dim Hom(gM, N)` and likewise for `Ext^1`.
    fn covering_property(&self, m: &PyModule_, n: &PyModule_) -> PyResult<bool> {
        self.inner.covering_property_check(&m.inner, &n.inner, &[0, 1]).map_err(err)
    }

    /// Lifts the summands met along mutations of the regular module; each
    /// entry is a dimension vector such as `"0,1"`. Returns one dict per
    /// summand of the final module.
    fn lift<'py>(&self, py: Python<'py>, mutations: Vec<String>) -> PyResult<Bound<'py, PyAny>> {
        let tr = self.transcript(&mutations)?;
        let lifts = lift_transcript(&self.inner, &tr).map_err(err)?;
        let mut out = Vec::new();
        for l in &lifts {
            let stab = stabilizer(&self.inner, &l.total).map_err(err)?;
            out.push(serde_json::json!({
                "base": l.base.dims(),
                "total": l.total.dims(),
                "stabilizer": stab.iter().map(|&g| self.inner.group().name(g).to_string()).collect::<Vec<_>>(),
            }));
        }
        to_py(py, &Value::from(out))
    }

    /// Runs the induced End-cover construction at the end of the mutations
    /// and returns its checks together with `End(T)`.
    fn end_cover<'py>(&self, py: Python<'py>, mutations: Vec<String>) -> PyResult<Bound<'py, PyAny>> {
        let tr = self.transcript(&mutations)?;
        let lifts = lift_transcript(&self.inner, &tr).map_err(err)?;
        let t = tr.end().underlying_module();
        let ec = induced_end_cover(&self.inner, &t, &lifts).map_err(err)?;
        let v = serde_json::json!({
            "checks": ec.checks.iter().map(|(n, ok)| serde_json::json!({ "name": n, "ok": ok })).collect::<Vec<_>>(),
            "end_dim": ec.end_algebra.dim(),
            "end_algebra": serde_json::to_value(ec.end_algebra.to_json()).expect("algebra JSON serialises"),
        });
        to_py(py, &v)
    }
}

impl PyCover {
    fn transcript(&self, mutations: &[String]) -> PyResult<Transcript> {
        let a = self.inner.base();
        let mut t = Rep::regular(a);
        let mut tr = Transcript::new(DObject::module(&t).map_err(err)?);
        for s in mutations {
            let k = summand_index(&t, &parse_dims(s)?)?;
            let mu = module_mutation(&t, k)
                .map_err(err)?
                .ok_or_else(|| PyValueError::new_err(format!("summand {s} cannot be exchanged")))?;
            tr.steps.push(mu.step(&t).map_err(err)?);
            t = mu.result;
        }
        Ok(tr)
    }
}

/// `HH^1` of a squid by its closed form and by computation.
#[pyfunction]
#[pyo3(signature = (t, p, tau=Vec::new(), cap=hh::DEFAULT_DIM_CAP))]
fn squid_hh1<'py>(py: Python<'py>, t: usize, p: Vec<usize>, tau: Vec<String>, cap: usize) -> PyResult<Bound<'py, PyAny>> {
    let tau = tau.iter().map(|x| parse_scalar(x)).collect::<tiltcover::Result<Vec<_>>>().map_err(err)?;
    let r = hh::squid_hh1(t, &p, &tau, cap).map_err(err)?;
    to_py(py, &serde_json::to_value(r).expect("result serialises"))
}

#[pymodule]
fn tiltcover_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuiver>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyModule_>()?;
    m.add_class::<PyCover>()?;
    m.add_function(wrap_pyfunction!(squid_hh1, m)?)?;
    Ok(())
}
