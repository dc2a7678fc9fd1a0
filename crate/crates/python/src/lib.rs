//! Python bindings: exact numbers come back as `fractions.Fraction`,
//! polynomials in `a` and `x` as `Poly` objects or strings, reports as dicts.

use genbern::harness::{emit_json, run_suite as run_sweep, ResultRecord, SweepConfig};
use genbern::identities::{lambda_certify, theorem_lhs, theorem_rhs, IdentityCase};
use genbern::text::{format_alpha, format_bipoly, parse_bipoly};
use genbern::{BiPoly, CaseId, GenBernTable, Rational};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn value_error(err: impl ToString) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// Accepts `int`, `fractions.Fraction` or a string such as `"-3/2"`.
/// Floats are rejected since they are not exact.
fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?.to_str()?.parse().map_err(value_error)
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.to_string(),))
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn table() -> &'static GenBernTable {
    GenBernTable::global()
}

/// Polynomial in `x` with coefficients in `Q[a]`.
#[pyclass(name = "Poly", module = "genbern", frozen, eq, skip_from_py_object)]
#[derive(Debug, Clone, PartialEq)]
struct Poly(BiPoly);

#[pymethods]
impl Poly {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_bipoly(text).map(Poly).map_err(value_error)
    }

    fn __str__(&self) -> String {
        format_bipoly(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", format_bipoly(&self.0))
    }

    fn __add__(&self, other: &Self) -> Self {
        Poly(self.0.add(&other.0))
    }

    fn __sub__(&self, other: &Self) -> Self {
        Poly(self.0.sub(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        Poly(self.0.mul(&other.0))
    }

    fn __neg__(&self) -> Self {
        Poly(self.0.neg())
    }

    #[getter]
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Degree in `x`, `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    #[pyo3(signature = (k = 1))]
    fn derive(&self, k: usize) -> Self {
        Poly(self.0.derive(k))
    }

    fn delta(&self) -> Self {
        Poly(self.0.delta())
    }

    /// `p(x + c)`.
    fn shift(&self, c: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Poly(self.0.shift_x(&to_rational(c)?)))
    }

    /// Substitutes a rational value for `a`.
    fn specialize(&self, alpha: &Bound<'_, PyAny>) -> PyResult<Self> {
        let p = self.0.eval_alpha(&to_rational(alpha)?);
        Ok(Poly(BiPoly::from_rat_poly(&p)))
    }

    fn eval<'py>(&self, py: Python<'py>, x: &Bound<'py, PyAny>, alpha: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.eval_both(&to_rational(x)?, &to_rational(alpha)?))
    }
}

/// Classical Bernoulli numbers `[B_0, ..., B_max]` with `B_1 = -1/2`.
#[pyfunction]
fn classical_numbers<'py>(py: Python<'py>, max: usize) -> PyResult<Bound<'py, PyList>> {
    let values = table()
        .classical_numbers(max)
        .iter()
        .map(|q| fraction(py, q))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, values)
}

/// `B_n^(a)` as a string in `a`.
#[pyfunction]
fn number(n: usize) -> String {
    format_alpha(&table().number(n))
}

/// `B_n^(a + offset)(x)`.
#[pyfunction]
#[pyo3(signature = (n, offset = 0))]
fn poly(n: usize, offset: i64) -> Poly {
    Poly((*table().poly_with_offset(n, offset)).clone())
}

/// Classical `B_n(x)`.
#[pyfunction]
fn classical_poly(n: usize) -> Poly {
    Poly(BiPoly::from_rat_poly(&table().classical_poly(n)))
}

/// Both sides of the main identity and their difference.
#[pyfunction]
fn verify_theorem<'py>(
    py: Python<'py>,
    n: u32,
    l: u32,
    r: u32,
    s: u32,
    lam: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyDict>> {
    let lam = to_rational(lam)?;
    let lhs = theorem_lhs(table(), n, l, r, s, &lam);
    let rhs = theorem_rhs(table(), n, l, r, s, &lam);
    let residual = lhs.sub(&rhs);
    let out = PyDict::new(py);
    out.set_item("holds", residual.is_zero())?;
    out.set_item("lhs", Poly(lhs))?;
    out.set_item("rhs", Poly(rhs))?;
    out.set_item("residual", Poly(residual))?;
    Ok(out)
}

/// Checks the identity at enough integer points to cover every `λ`.
#[pyfunction]
fn certify_lambda<'py>(py: Python<'py>, n: u32, l: u32, r: u32, s: u32) -> PyResult<Bound<'py, PyDict>> {
    let cert = lambda_certify(table(), n, l, r, s);
    let out = PyDict::new(py);
    out.set_item("verified", cert.verified())?;
    out.set_item("points", cert.points.iter().map(|p| fraction(py, p)).collect::<PyResult<Vec<_>>>()?)?;
    if let Some((lam, res)) = &cert.failure {
        out.set_item("failure", (fraction(py, lam)?, Poly(res.clone())))?;
    }
    Ok(out)
}

#[pyfunction]
fn case_ids() -> Vec<&'static str> {
    CaseId::ALL.iter().map(|c| c.as_str()).collect()
}

/// Verifies one catalog instance, e.g. `verify("t3", n=2, l=1, r=1)`.
/// Rational parameters may be ints, Fractions or strings; `alpha` may be
/// `"symbolic"`.
#[pyfunction]
#[pyo3(signature = (case, **params))]
fn verify<'py>(py: Python<'py>, case: &str, params: Option<&Bound<'py, PyDict>>) -> PyResult<Bound<'py, PyAny>> {
    let id: CaseId = case.parse().map_err(value_error)?;
    let mut spec = serde_json::Map::new();
    if let Some(params) = params {
        for (key, value) in params.iter() {
            let key: String = key.extract()?;
            let value = match key.as_str() {
                "n" | "l" | "r" | "s" | "m" => serde_json::Value::from(value.extract::<u32>()?),
                _ => serde_json::Value::from(value.str()?.to_str()?),
            };
            spec.insert(key, value);
        }
    }
    let params = serde_json::from_value(spec.into()).map_err(value_error)?;
    let result = genbern::verify(&IdentityCase::new(id, params), table()).map_err(value_error)?;
    let text = serde_json::to_string(&ResultRecord::from(&result)).map_err(value_error)?;
    json_to_py(py, &text)
}

/// Runs a sweep and returns the JSON report as a dict. `config` uses the
/// same keys as the CLI's config file; omitted keys take their defaults.
#[pyfunction]
#[pyo3(signature = (config = None))]
fn run_suite<'py>(py: Python<'py>, config: Option<&Bound<'py, PyDict>>) -> PyResult<Bound<'py, PyAny>> {
    let cfg: SweepConfig = match config {
        Some(c) => {
            let text: String = py.import("json")?.call_method1("dumps", (c,))?.extract()?;
            serde_json::from_str(&text).map_err(value_error)?
        }
        None => SweepConfig::default(),
    };
    let report = py.detach(|| run_sweep(&cfg)).map_err(value_error)?;
    json_to_py(py, &emit_json(&report).map_err(value_error)?)
}

#[pymodule]
#[pyo3(name = "genbern")]
fn genbern_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(classical_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(number, m)?)?;
    m.add_function(wrap_pyfunction!(poly, m)?)?;
    m.add_function(wrap_pyfunction!(classical_poly, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(certify_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(case_ids, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
