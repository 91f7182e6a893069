//! Python bindings: rings, polynomials, ideals, substitution maps,
//! containment certificates, the catalog, and job execution.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use spc_core::symbolic::{self, CertificateCheck, ContainmentCertificate};
use spc_core::{catalog, expr, idealops, FieldSpec};

create_exception!(spc, SpcError, PyValueError, "Raised for any engine error.");

fn to_py(e: spc_core::Error) -> PyErr {
    SpcError::new_err(format!("{}: {}", e.kind(), e.root()))
}

/// A polynomial ring over `QQ` or `GF(p)` with grevlex order.
#[pyclass(name = "Ring", module = "spc", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Ring(spc_core::PolyRing);

#[pymethods]
impl Ring {
    #[new]
    #[pyo3(signature = (field = "QQ", variables = vec!["x".to_string(), "y".to_string(), "z".to_string()]))]
    fn new(field: &str, variables: Vec<String>) -> PyResult<Self> {
        let field: FieldSpec = field.parse().map_err(to_py)?;
        Ok(Ring(spc_core::PolyRing::grevlex(field, variables).map_err(to_py)?))
    }

    #[getter]
    fn field(&self) -> String {
        self.0.field().to_string()
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.0.variables().to_vec()
    }

    #[getter]
    fn characteristic(&self) -> u32 {
        self.0.field().characteristic()
    }

    /// Parses a polynomial such as `"x^2*y - 3/2*z^3"`.
    fn poly(&self, text: &str) -> PyResult<Polynomial> {
        Ok(Polynomial(expr::parse_polynomial(text, &self.0).map_err(to_py)?))
    }

    /// Builds an ideal from polynomials or strings; a single string may hold
    /// several generators separated by `;`.
    fn ideal(&self, generators: IdealInput) -> PyResult<Ideal> {
        let polys = match generators {
            IdealInput::Text(text) => expr::parse_polynomial_list(&text, &self.0).map_err(to_py)?,
            IdealInput::Items(items) => {
                items.into_iter().map(|p| p.into_polynomial(&self.0)).collect::<PyResult<Vec<_>>>()?
            }
        };
        Ok(Ideal(idealops::Ideal::new(&self.0, polys).map_err(to_py)?))
    }

    /// The ideal generated by all variables.
    fn irrelevant_ideal(&self) -> Ideal {
        Ideal(idealops::irrelevant_ideal(&self.0))
    }

    fn __repr__(&self) -> String {
        format!("Ring('{}')", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[derive(FromPyObject)]
enum PolyInput {
    Poly(Polynomial),
    Text(String),
}

impl PolyInput {
    fn into_polynomial(self, ring: &spc_core::PolyRing) -> PyResult<spc_core::Polynomial> {
        match self {
            PolyInput::Poly(p) => {
                ring.check(p.0.ring()).map_err(to_py)?;
                Ok(p.0)
            }
            PolyInput::Text(t) => expr::parse_polynomial(&t, ring).map_err(to_py),
        }
    }
}

#[derive(FromPyObject)]
enum IdealInput {
    Text(String),
    Items(Vec<PolyInput>),
}

#[pyclass(name = "Polynomial", module = "spc", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Polynomial(spc_core::Polynomial);

#[pymethods]
impl Polynomial {
    #[getter]
    fn ring(&self) -> Ring {
        Ring(self.0.ring().clone())
    }

    /// Total degree; `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_homogeneous(&self) -> bool {
        self.0.is_homogeneous()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __add__(&self, other: PolyInput) -> PyResult<Self> {
        let o = other.into_polynomial(self.0.ring())?;
        Ok(Polynomial(self.0.add(&o).map_err(to_py)?))
    }

    fn __sub__(&self, other: PolyInput) -> PyResult<Self> {
        let o = other.into_polynomial(self.0.ring())?;
        Ok(Polynomial(self.0.sub(&o).map_err(to_py)?))
    }

    fn __mul__(&self, other: PolyInput) -> PyResult<Self> {
        let o = other.into_polynomial(self.0.ring())?;
        Ok(Polynomial(self.0.mul(&o).map_err(to_py)?))
    }

    fn __neg__(&self) -> Self {
        Polynomial(self.0.neg())
    }

    fn __pow__(&self, e: u32, _modulo: Option<Py<PyAny>>) -> PyResult<Self> {
        Ok(Polynomial(self.0.pow(e).map_err(to_py)?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.0)
    }
}

/// An ideal with a lazily computed reduced Gröbner basis.
#[pyclass(name = "Ideal", module = "spc", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Ideal(idealops::Ideal);

#[pymethods]
impl Ideal {
    #[getter]
    fn ring(&self) -> Ring {
        Ring(self.0.ring().clone())
    }

    #[getter]
    fn generators(&self) -> Vec<Polynomial> {
        self.0.generators().iter().cloned().map(Polynomial).collect()
    }

    fn groebner_basis(&self) -> Vec<Polynomial> {
        self.0.groebner_basis().elements().iter().cloned().map(Polynomial).collect()
    }

    fn is_homogeneous(&self) -> bool {
        self.0.is_homogeneous()
    }

    fn contains(&self, f: PolyInput) -> PyResult<bool> {
        let f = f.into_polynomial(self.0.ring())?;
        self.0.contains(&f).map_err(to_py)
    }

    fn __contains__(&self, f: PolyInput) -> PyResult<bool> {
        self.contains(f)
    }

    /// Membership decided by dense linear algebra instead of a Gröbner basis.
    fn contains_by_linalg(&self, f: PolyInput) -> PyResult<bool> {
        let f = f.into_polynomial(self.0.ring())?;
        spc_core::member_by_linalg(&f, &self.0).map_err(to_py)
    }

    fn is_subset_of(&self, other: &Ideal) -> PyResult<bool> {
        self.0.is_subset_of(&other.0).map_err(to_py)
    }

    fn __eq__(&self, other: &Ideal) -> PyResult<bool> {
        self.0.equals(&other.0).map_err(to_py)
    }

    fn __add__(&self, other: &Ideal) -> PyResult<Ideal> {
        Ok(Ideal(idealops::ideal_sum(&self.0, &other.0).map_err(to_py)?))
    }

    fn __mul__(&self, other: &Ideal) -> PyResult<Ideal> {
        Ok(Ideal(idealops::ideal_product(&self.0, &other.0).map_err(to_py)?))
    }

    fn __pow__(&self, m: u32, _modulo: Option<Py<PyAny>>) -> PyResult<Ideal> {
        self.power(m)
    }

    fn power(&self, m: u32) -> PyResult<Ideal> {
        Ok(Ideal(idealops::ideal_power(&self.0, m).map_err(to_py)?))
    }

    fn intersect(&self, other: &Ideal) -> PyResult<Ideal> {
        Ok(Ideal(idealops::intersect(&self.0, &other.0).map_err(to_py)?))
    }

    fn colon(&self, other: &Ideal) -> PyResult<Ideal> {
        Ok(Ideal(idealops::colon(&self.0, &other.0).map_err(to_py)?))
    }

    /// `I : 𝔪^∞`.
    fn saturation(&self) -> PyResult<Ideal> {
        Ok(Ideal(idealops::saturation(&self.0).map_err(to_py)?))
    }

    fn symbolic_power(&self, m: u32) -> PyResult<Ideal> {
        Ok(Ideal(symbolic::symbolic_power(&self.0, m).map_err(to_py)?))
    }

    fn krull_dim(&self) -> PyResult<usize> {
        idealops::krull_dim(&self.0).map_err(to_py)
    }

    /// `(krull_dimension, multiplicity)` of the quotient ring.
    fn degree(&self) -> PyResult<(usize, u64)> {
        let h = idealops::degree(&self.0).map_err(to_py)?;
        Ok((h.krull_dimension, h.multiplicity))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal('{}')", self.0)
    }
}

/// A substitution `y_i ↦ f_i` by same-degree forms, verified to be a
/// regular sequence.
#[pyclass(name = "Map", module = "spc", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Map(idealops::SubstitutionMap);

#[pymethods]
impl Map {
    #[new]
    fn new(ring: &Ring, images: Vec<PolyInput>) -> PyResult<Self> {
        let images = images.into_iter().map(|p| p.into_polynomial(&ring.0)).collect::<PyResult<Vec<_>>>()?;
        Ok(Map(idealops::SubstitutionMap::verified(&ring.0, images).map_err(to_py)?))
    }

    #[getter]
    fn images(&self) -> Vec<Polynomial> {
        self.0.images().iter().cloned().map(Polynomial).collect()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.0.degree()
    }

    fn apply(&self, f: PolyInput) -> PyResult<Polynomial> {
        let f = f.into_polynomial(self.0.source())?;
        Ok(Polynomial(self.0.apply(&f).map_err(to_py)?))
    }

    fn pushforward(&self, ideal: &Ideal) -> PyResult<Ideal> {
        Ok(Ideal(idealops::pushforward(&ideal.0, &self.0).map_err(to_py)?))
    }

    fn __repr__(&self) -> String {
        let images: Vec<String> = self.0.images().iter().map(ToString::to_string).collect();
        format!("Map([{}])", images.join(", "))
    }
}

/// The outcome of deciding `I^(m) ⊆ I^r`.
#[pyclass(name = "Certificate", module = "spc", frozen)]
pub struct Certificate(ContainmentCertificate);

#[pymethods]
impl Certificate {
    #[getter]
    fn m(&self) -> u32 {
        self.0.m
    }

    #[getter]
    fn r(&self) -> u32 {
        self.0.r
    }

    /// `"contained"` or `"not_contained"`.
    #[getter]
    fn verdict(&self) -> &'static str {
        self.0.verdict.as_str()
    }

    #[getter]
    fn contained(&self) -> bool {
        self.0.verdict == symbolic::Verdict::Contained
    }

    /// A polynomial in `I^(m)` but not in `I^r`, when not contained.
    #[getter]
    fn witness(&self) -> Option<Polynomial> {
        self.0.witness.clone().map(Polynomial)
    }

    /// Re-checks the certificate with the linear-algebra oracle.
    fn verify(&self) -> PyResult<bool> {
        Ok(matches!(self.0.verify().map_err(to_py)?, CertificateCheck::Verified))
    }

    fn __repr__(&self) -> String {
        match &self.0.witness {
            Some(w) => {
                format!("Certificate(m={}, r={}, {}, witness='{w}')", self.0.m, self.0.r, self.verdict())
            }
            None => format!("Certificate(m={}, r={}, {})", self.0.m, self.0.r, self.verdict()),
        }
    }
}

#[pyfunction]
fn check_containment(ideal: &Ideal, m: u32, r: u32) -> PyResult<Certificate> {
    Ok(Certificate(symbolic::check_containment(&ideal.0, m, r).map_err(to_py)?))
}

/// Decides `(m, r)` for `I` and for the saturated pushforward along `phi`;
/// returns `(agree, source, pushforward)`.
#[pyfunction]
fn check_roundtrip(ideal: &Ideal, phi: &Map, m: u32, r: u32) -> PyResult<(bool, Certificate, Certificate)> {
    let report = symbolic::check_roundtrip(&ideal.0, &phi.0, m, r).map_err(to_py)?;
    Ok((report.agree, Certificate(report.source), Certificate(report.pushforward)))
}

#[pyfunction]
fn check_lemma3(ideal: &Ideal, phi: &Map, m: u32) -> PyResult<bool> {
    symbolic::check_lemma3(&ideal.0, &phi.0, m).map_err(to_py)
}

/// Returns `(lower_bound, failures)` with the bound as a `"p/q"` string and
/// failures as `(s, t)` pairs.
#[pyfunction]
fn resurgence_scan(ideal: &Ideal, smax: u32, tmax: u32) -> PyResult<(String, Vec<(u32, u32)>)> {
    let scan = symbolic::resurgence_scan(&ideal.0, smax, tmax).map_err(to_py)?;
    Ok((scan.lower_bound.to_string(), scan.failures.iter().map(|f| (f.s, f.t)).collect()))
}

/// A named configuration ideal, e.g. `catalog_ideal("fermat", ring, 3)`.
#[pyfunction]
#[pyo3(signature = (name, ring, arg = None))]
fn catalog_ideal(name: &str, ring: &Ring, arg: Option<u32>) -> PyResult<Ideal> {
    Ok(Ideal(catalog::catalog_entry(name, arg, &ring.0).map_err(to_py)?.ideal))
}

/// A named substitution map: `ex1`, `ex2`, `ex4` or `ex4b`.
#[pyfunction]
fn catalog_map(name: &str, ring: &Ring) -> PyResult<Map> {
    Ok(Map(catalog::paper_map(name, &ring.0).map_err(to_py)?))
}

/// Names and descriptions of the catalog entries.
#[pyfunction]
fn catalog_list() -> Vec<(&'static str, &'static str, &'static str)> {
    catalog::CATALOG.iter().map(|c| (c.syntax, c.kind, c.description)).collect()
}

/// Runs a job given as text and returns `(exit_code, json_report)`.
#[pyfunction]
#[pyo3(signature = (text, field = None, verify_certificates = false, slow = false))]
fn run_job(
    text: &str,
    field: Option<&str>,
    verify_certificates: bool,
    slow: bool,
) -> PyResult<(i32, String)> {
    let field_override = field.map(str::parse::<FieldSpec>).transpose().map_err(to_py)?;
    let opts =
        spc_cli::RunOptions { field_override, verify_certificates, slow, ..spc_cli::RunOptions::default() };
    let report = spc_cli::run_job_text("<python>", text, &opts);
    Ok((report.summary.exit_code, report.to_json()))
}

#[pymodule]
fn spc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", spc_core::VERSION)?;
    m.add("SpcError", m.py().get_type::<SpcError>())?;
    m.add_class::<Ring>()?;
    m.add_class::<Polynomial>()?;
    m.add_class::<Ideal>()?;
    m.add_class::<Map>()?;
    m.add_class::<Certificate>()?;
    m.add_function(wrap_pyfunction!(check_containment, m)?)?;
    m.add_function(wrap_pyfunction!(check_roundtrip, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemma3, m)?)?;
    m.add_function(wrap_pyfunction!(resurgence_scan, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_map, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_list, m)?)?;
    m.add_function(wrap_pyfunction!(run_job, m)?)?;
    Ok(())
}
