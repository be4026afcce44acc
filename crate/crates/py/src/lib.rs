//! Python bindings. Partitions and cycle types accept either a list of
//! parts or the bracket text the command line uses.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use youngbound::characters::{character_branching, character_mn, count_ribbon_tableaux};
use youngbound::decomposition::{build_thick_hook_decomposition, stairs_decomposition, validate_decomposition};
use youngbound::dimensions::{dim_hlf, skew_dim_det, skew_dim_oracle, SkewShape};
use youngbound::excited::{enumerate_excited, excited_sum, naruse_ratio as naruse};
use youngbound::render::{render_partition, RenderStyle};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[derive(FromPyObject)]
enum Parts {
    List(Vec<usize>),
    Text(String),
}

#[pyclass(name = "Partition", module = "youngbound", frozen, eq, hash, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyPartition(youngbound::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Parts) -> PyResult<Self> {
        let p = match parts {
            Parts::List(v) => youngbound::Partition::new(v),
            Parts::Text(t) => youngbound::parse_partition(&t),
        };
        p.map(PyPartition).map_err(value_error)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn max_hook(&self) -> usize {
        self.0.max_hook()
    }

    fn diagonal_length(&self) -> usize {
        self.0.diagonal_length()
    }

    /// Removable boxes as (row, col), 1-based, row 1 the longest.
    fn corners(&self) -> Vec<(usize, usize)> {
        self.0.corners().into_iter().map(|c| (c.row, c.col)).collect()
    }

    fn contains(&self, inner: &PyPartition) -> bool {
        self.0.contains(&inner.0)
    }

    fn dim(&self) -> BigUint {
        dim_hlf(&self.0)
    }

    #[pyo3(signature = (unicode = false))]
    fn draw(&self, unicode: bool) -> String {
        let style = if unicode { RenderStyle::Unicode } else { RenderStyle::Ascii };
        render_partition(&self.0, style)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition('{}')", self.0)
    }
}

#[pyclass(name = "CycleType", module = "youngbound", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCycleType(youngbound::CycleType);

#[pymethods]
impl PyCycleType {
    /// Cycle lengths in the order given; the order matters only for
    /// ribbon tableaux counts.
    #[new]
    fn new(lengths: Parts) -> PyResult<Self> {
        let a = match lengths {
            Parts::List(v) => youngbound::CycleType::new(v),
            Parts::Text(t) => youngbound::parse_cycle_type(&t),
        };
        a.map(PyCycleType).map_err(value_error)
    }

    #[getter]
    fn lengths(&self) -> Vec<usize> {
        self.0.lengths().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn support(&self) -> usize {
        self.0.support()
    }

    fn class_size(&self) -> BigUint {
        self.0.class_size()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CycleType('{}')", self.0)
    }
}

fn shape(outer: &PyPartition, inner: &PyPartition) -> PyResult<SkewShape> {
    SkewShape::new(outer.0.clone(), inner.0.clone()).map_err(value_error)
}

#[pyfunction]
fn dim(shape: &PyPartition) -> BigUint {
    dim_hlf(&shape.0)
}

/// Standard tableaux of outer \ inner. `method` is "det" or "oracle".
#[pyfunction]
#[pyo3(signature = (outer, inner, method = "det"))]
fn skew_dim(outer: &PyPartition, inner: &PyPartition, method: &str) -> PyResult<BigUint> {
    let s = shape(outer, inner)?;
    match method {
        "det" => Ok(skew_dim_det(&s)),
        "oracle" => skew_dim_oracle(&s).map_err(value_error),
        other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
}

/// Excited diagrams of inner in outer, each a list of (row, col) boxes.
#[pyfunction]
fn excited_diagrams(outer: &PyPartition, inner: &PyPartition) -> PyResult<Vec<Vec<(usize, usize)>>> {
    let all = enumerate_excited(&outer.0, &inner.0).map_err(value_error)?;
    Ok(all.iter().map(|e| e.cells().iter().map(|c| (c.row, c.col)).collect()).collect())
}

#[pyfunction]
fn excited_count(outer: &PyPartition, inner: &PyPartition) -> PyResult<usize> {
    enumerate_excited(&outer.0, &inner.0).map(|v| v.len()).map_err(value_error)
}

/// The excited sum, as an integer.
#[pyfunction]
fn excited_total(outer: &PyPartition, inner: &PyPartition) -> PyResult<BigUint> {
    excited_sum(&outer.0, &inner.0).map_err(value_error)
}

/// `d_{λ\μ} / d_λ` as a Fraction.
#[pyfunction]
fn naruse_ratio(outer: &PyPartition, inner: &PyPartition) -> PyResult<BigRational> {
    naruse(&outer.0, &inner.0).map_err(value_error)
}

/// Character value by Murnaghan-Nakayama, or by branching off a fixed point.
#[pyfunction]
#[pyo3(signature = (shape, alpha, method = "mn"))]
fn character(shape: &PyPartition, alpha: &PyCycleType, method: &str) -> PyResult<BigInt> {
    let v = match method {
        "mn" => character_mn(&shape.0, &alpha.0),
        "branching" => character_branching(&shape.0, &alpha.0),
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    v.map(|c| c.value).map_err(value_error)
}

#[pyfunction]
fn normalized_character(shape: &PyPartition, alpha: &PyCycleType) -> PyResult<BigRational> {
    character_mn(&shape.0, &alpha.0).map(|c| c.normalized()).map_err(value_error)
}

/// Ribbon tableaux with ribbon sizes in the given order.
#[pyfunction]
fn ribbon_tableaux(shape: &PyPartition, alpha: &PyCycleType) -> PyResult<BigUint> {
    count_ribbon_tableaux(&shape.0, &alpha.0).map_err(value_error)
}

/// Sizes of an (a, 4a) thick hook decomposition, innermost first.
#[pyfunction]
fn thick_hooks(shape: &PyPartition, a: usize) -> PyResult<Vec<usize>> {
    let d = build_thick_hook_decomposition(&shape.0, a).map_err(value_error)?;
    validate_decomposition(&d).map_err(value_error)?;
    Ok(d.sizes())
}

/// Line lengths of the stairs decomposition.
#[pyfunction]
fn stairs(shape: &PyPartition) -> Vec<usize> {
    stairs_decomposition(&shape.0).lengths()
}

#[pymodule]
#[pyo3(name = "youngbound")]
fn youngbound_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyCycleType>()?;
    m.add_function(wrap_pyfunction!(dim, m)?)?;
    m.add_function(wrap_pyfunction!(skew_dim, m)?)?;
    m.add_function(wrap_pyfunction!(excited_diagrams, m)?)?;
    m.add_function(wrap_pyfunction!(excited_count, m)?)?;
    m.add_function(wrap_pyfunction!(excited_total, m)?)?;
    m.add_function(wrap_pyfunction!(naruse_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(normalized_character, m)?)?;
    m.add_function(wrap_pyfunction!(ribbon_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(thick_hooks, m)?)?;
    m.add_function(wrap_pyfunction!(stairs, m)?)?;
    Ok(())
}
