//! Python bindings for the weak G-identity toolkit.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use weakid_core::certify::{self, Suite};
use weakid_core::{self as core, Error, GMonomial, Multidegree};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Parse { .. }
        | Error::UnknownOperator { .. }
        | Error::OutsideAlphabet { .. }
        | Error::InvalidGroup(_)
        | Error::UnsupportedGroup { .. }
        | Error::UnknownSuite(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

/// A group together with its realized action, e.g. `GroupSpec("Zn:3")`.
#[pyclass(name = "GroupSpec", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyGroupSpec(core::GroupSpec);

#[pymethods]
impl PyGroupSpec {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyGroupSpec).map_err(to_py)
    }

    /// Order `N` of the root of unity adjoined to the rationals.
    #[getter]
    fn conductor(&self) -> u32 {
        self.0.conductor
    }

    /// Operator names the normal forms are written in.
    fn core_alphabet(&self) -> Vec<String> {
        core::GroupAction::get(&self.0).core_alphabet().iter().map(|o| o.to_string()).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GroupSpec('{}')", self.0)
    }
}

/// A linear combination of words in operator letters applied to variables.
#[pyclass(name = "GPolynomial", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGPolynomial {
    poly: core::GPolynomial,
    spec: core::GroupSpec,
}

impl PyGPolynomial {
    fn same_group(&self, other: &PyGPolynomial) -> PyResult<()> {
        if self.spec != other.spec {
            return Err(PyValueError::new_err(format!("group mismatch: {} vs {}", self.spec, other.spec)));
        }
        Ok(())
    }

    fn wrap(&self, poly: core::GPolynomial) -> PyGPolynomial {
        PyGPolynomial { poly, spec: self.spec }
    }
}

#[pymethods]
impl PyGPolynomial {
    #[new]
    fn new(text: &str, group: &PyGroupSpec) -> PyResult<Self> {
        let poly = core::parse(text, &group.0).map_err(to_py)?;
        Ok(PyGPolynomial { poly, spec: group.0 })
    }

    #[getter]
    fn group(&self) -> PyGroupSpec {
        PyGroupSpec(self.spec)
    }

    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Entries of the evaluation at generic traceless matrices, row-major.
    fn evaluate(&self) -> PyResult<Vec<String>> {
        let m = core::evaluate(&self.poly, &self.spec).map_err(to_py)?;
        Ok(m.m.iter().map(|p| p.to_string()).collect())
    }

    fn is_identity(&self) -> PyResult<bool> {
        core::is_weak_g_identity(&self.poly, &self.spec).map_err(to_py)
    }

    fn normalize(&self) -> PyResult<PyGPolynomial> {
        core::normalize(&self.poly, &self.spec).map(|p| self.wrap(p)).map_err(to_py)
    }

    /// `(word, coefficient)` pairs in canonical order.
    fn terms(&self) -> Vec<(String, String)> {
        self.poly.terms().iter().map(|(m, c)| (m.to_string(), c.to_string())).collect()
    }

    fn __len__(&self) -> usize {
        self.poly.len()
    }

    fn __add__(&self, other: &PyGPolynomial) -> PyResult<PyGPolynomial> {
        self.same_group(other)?;
        Ok(self.wrap(&self.poly + &other.poly))
    }

    fn __sub__(&self, other: &PyGPolynomial) -> PyResult<PyGPolynomial> {
        self.same_group(other)?;
        Ok(self.wrap(&self.poly - &other.poly))
    }

    fn __mul__(&self, other: &PyGPolynomial) -> PyResult<PyGPolynomial> {
        self.same_group(other)?;
        Ok(self.wrap(&self.poly * &other.poly))
    }

    fn __neg__(&self) -> PyGPolynomial {
        self.wrap(-&self.poly)
    }

    fn __eq__(&self, other: &PyGPolynomial) -> bool {
        self.spec == other.spec && self.poly == other.poly
    }

    fn __str__(&self) -> String {
        self.poly.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GPolynomial('{}', '{}')", self.poly, self.spec)
    }
}

/// A bounded-degree basis certificate.
#[pyclass(name = "Certificate", frozen)]
struct PyCertificate(certify::Certificate);

#[pymethods]
impl PyCertificate {
    #[getter]
    fn verdict(&self) -> &str {
        &self.0.verdict
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    #[getter]
    fn runtime_ms(&self) -> u64 {
        self.0.runtime_ms
    }

    /// `(degree, b_count, rank, oracle_dim, spanning_ok)` per multidegree.
    fn records(&self) -> Vec<(Vec<u32>, usize, usize, usize, bool)> {
        self.0
            .multidegrees
            .iter()
            .map(|r| (r.degree.clone(), r.b_count, r.rank, r.oracle_dim, r.spanning_ok))
            .collect()
    }

    fn identities(&self) -> Vec<(String, bool)> {
        self.0.identities.iter().map(|r| (r.tag.clone(), r.ok)).collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }
}

fn monomial(text: &str, spec: &core::GroupSpec) -> PyResult<GMonomial> {
    let p = core::parse(text, spec).map_err(to_py)?;
    match p.terms().iter().next() {
        Some((m, c)) if p.len() == 1 && c.is_one() => Ok(m.clone()),
        _ => Err(PyValueError::new_err(format!("`{text}` is not a single monomial"))),
    }
}

fn multidegree(vars: Vec<u32>) -> PyResult<Multidegree> {
    if vars.is_empty() || vars.contains(&0) {
        return Err(PyValueError::new_err("multidegree needs positive variable indices"));
    }
    Ok(Multidegree::from_vars(vars))
}

/// Parse an expression for a group.
#[pyfunction]
fn parse(text: &str, group: &PyGroupSpec) -> PyResult<PyGPolynomial> {
    PyGPolynomial::new(text, group)
}

/// Normal form of an expression, as text.
#[pyfunction]
fn normalize(text: &str, group: &PyGroupSpec) -> PyResult<String> {
    let f = core::parse(text, &group.0).map_err(to_py)?;
    core::normalize(&f, &group.0).map(|p| p.to_string()).map_err(to_py)
}

#[pyfunction]
fn is_normal_form(text: &str, group: &PyGroupSpec) -> PyResult<bool> {
    core::is_normal_form(&monomial(text, &group.0)?, &group.0).map_err(to_py)
}

/// Normal-form monomials of the multidegree given as variable indices.
#[pyfunction]
fn enumerate_b(group: &PyGroupSpec, vars: Vec<u32>) -> PyResult<Vec<String>> {
    Ok(core::enumerate_b(&group.0, &multidegree(vars)?).iter().map(|m| m.to_string()).collect())
}

/// Rank of the evaluations of the given monomials.
#[pyfunction]
fn independence_rank(monomials: Vec<String>, group: &PyGroupSpec) -> PyResult<usize> {
    let ms: Vec<GMonomial> = monomials.iter().map(|t| monomial(t, &group.0)).collect::<PyResult<_>>()?;
    Ok(core::independence_check(&ms, &group.0).rank)
}

#[pyfunction]
fn oracle_dimension(group: &PyGroupSpec, vars: Vec<u32>) -> PyResult<usize> {
    core::quotient_dimension_oracle(&group.0, &multidegree(vars)?).map_err(to_py)
}

/// `(tag, ok)` for every instance of a suite, or of the default suites.
#[pyfunction]
#[pyo3(signature = (group, suite=None))]
fn verify_suite(group: &PyGroupSpec, suite: Option<&str>) -> PyResult<Vec<(String, bool)>> {
    let s = suite.map(|t| t.parse::<Suite>()).transpose().map_err(to_py)?;
    let rs = core::verify_identity_suite(&group.0, s).map_err(to_py)?;
    Ok(rs.into_iter().map(|r| (r.tag, r.ok)).collect())
}

#[pyfunction]
fn certify_basis(group: &PyGroupSpec, degree: u32) -> PyResult<PyCertificate> {
    core::certify_basis(&group.0, degree).map(PyCertificate).map_err(to_py)
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
#[pyfunction]
fn cyclotomic_polynomial(n: u32) -> PyResult<Vec<i64>> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be positive"));
    }
    core::cyclotomic_polynomial(n)
        .iter()
        .map(|c| i64::try_from(c).map_err(|_| PyValueError::new_err("coefficient overflows i64")))
        .collect()
}

#[pymodule]
pub fn weakid(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroupSpec>()?;
    m.add_class::<PyGPolynomial>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(is_normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_b, m)?)?;
    m.add_function(wrap_pyfunction!(independence_rank, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add_function(wrap_pyfunction!(certify_basis, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_polynomial, m)?)?;
    Ok(())
}
