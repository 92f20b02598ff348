//! Python bindings: relations, rough-set algebras, checks and the formula
//! search, exposed as the `nelson_forge` module.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use nelson_forge::logic::{self, SearchOptions, SearchOutcome};
use nelson_forge::nelson::{self, PairElement};
use nelson_forge::relations::{self as rel, RelationFilter};
use nelson_forge::report::Report;
use nelson_forge::{export, roughsets, suite, PointSet, QuasiOrder};

create_exception!(nelson_forge, NelsonForgeError, PyException);

fn py_err(e: nelson_forge::Error) -> PyErr {
    NelsonForgeError::new_err(e.to_string())
}

type PairLists = (Vec<usize>, Vec<usize>);

fn pair_lists(p: PairElement) -> PairLists {
    (p.left.to_vec(), p.right.to_vec())
}

/// A reflexive, transitive relation on `0..n`.
#[pyclass(
    name = "Relation",
    module = "nelson_forge",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyRelation {
    inner: QuasiOrder,
}

#[pymethods]
impl PyRelation {
    /// With `closure` the pairs are completed reflexively and transitively;
    /// otherwise a missing pair is an error.
    #[new]
    #[pyo3(signature = (n, pairs, closure = false))]
    fn new(n: usize, pairs: Vec<(usize, usize)>, closure: bool) -> PyResult<Self> {
        let inner = if closure {
            QuasiOrder::closure(n, pairs)
        } else {
            QuasiOrder::from_pairs(n, pairs)
        };
        Ok(PyRelation {
            inner: inner.map_err(py_err)?,
        })
    }

    /// Parses the relation text format.
    #[staticmethod]
    #[pyo3(signature = (text, closure = false))]
    fn parse(text: &str, closure: bool) -> PyResult<Self> {
        let loaded = rel::parse_relation(text, closure).map_err(py_err)?;
        Ok(PyRelation {
            inner: loaded.relation,
        })
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    /// Off-diagonal pairs, ascending.
    #[getter]
    fn pairs(&self) -> Vec<(usize, usize)> {
        self.inner.off_diagonal_pairs()
    }

    #[getter]
    fn closed_points(&self) -> Vec<usize> {
        self.inner.closed_points().to_vec()
    }

    /// Whether the closed points are cofinal.
    #[getter]
    fn is_effective(&self) -> bool {
        self.inner.is_cofinal(self.inner.closed_points())
    }

    #[getter]
    fn is_antisymmetric(&self) -> bool {
        self.inner.is_antisymmetric()
    }

    #[getter]
    fn is_symmetric(&self) -> bool {
        self.inner.is_symmetric()
    }

    fn lower(&self, x: Vec<usize>) -> Vec<usize> {
        nelson_forge::approx::lower(&self.inner, PointSet::from_points(x)).to_vec()
    }

    fn upper(&self, x: Vec<usize>) -> Vec<usize> {
        nelson_forge::approx::upper(&self.inner, PointSet::from_points(x)).to_vec()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Relation({}, {:?})",
            self.inner.size(),
            self.inner.off_diagonal_pairs()
        )
    }
}

/// A finite Nelson algebra given by its operation tables.
#[pyclass(name = "Algebra", module = "nelson_forge", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyAlgebra {
    inner: nelson::NelsonAlgebra,
}

impl PyAlgebra {
    fn check_index(&self, i: usize) -> PyResult<usize> {
        if i < self.inner.len() {
            Ok(i)
        } else {
            Err(NelsonForgeError::new_err(format!(
                "index {i} out of range for a carrier of {}",
                self.inner.len()
            )))
        }
    }
}

#[pymethods]
impl PyAlgebra {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: export::from_json_str(text).map_err(py_err)?,
        })
    }

    fn to_json(&self) -> String {
        export::to_json_string(&self.inner)
    }

    fn hasse_dot(&self) -> PyResult<String> {
        export::hasse_dot(&self.inner).map_err(py_err)
    }

    /// "increasing", "disjoint" or "abstract".
    #[getter]
    fn representation(&self) -> String {
        format!("{:?}", self.inner.representation()).to_lowercase()
    }

    /// Carrier elements as pairs of sorted point lists.
    #[getter]
    fn carrier(&self) -> Vec<PairLists> {
        self.inner
            .carrier()
            .iter()
            .map(|&p| pair_lists(p))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn index_of(&self, left: Vec<usize>, right: Vec<usize>) -> Option<usize> {
        self.inner.index_of(PairElement::new(
            PointSet::from_points(left),
            PointSet::from_points(right),
        ))
    }

    #[getter]
    fn zero(&self) -> usize {
        self.inner.zero()
    }

    #[getter]
    fn one(&self) -> usize {
        self.inner.one()
    }

    fn join(&self, a: usize, b: usize) -> PyResult<usize> {
        Ok(self.inner.join(self.check_index(a)?, self.check_index(b)?))
    }

    fn meet(&self, a: usize, b: usize) -> PyResult<usize> {
        Ok(self.inner.meet(self.check_index(a)?, self.check_index(b)?))
    }

    fn implication(&self, a: usize, b: usize) -> PyResult<usize> {
        Ok(self
            .inner
            .implication(self.check_index(a)?, self.check_index(b)?))
    }

    fn strong_negation(&self, a: usize) -> PyResult<usize> {
        Ok(self.inner.strong_negation(self.check_index(a)?))
    }

    fn weak_negation(&self, a: usize) -> PyResult<usize> {
        Ok(self.inner.weak_negation(self.check_index(a)?))
    }

    fn le(&self, a: usize, b: usize) -> PyResult<bool> {
        Ok(self.inner.le(self.check_index(a)?, self.check_index(b)?))
    }

    /// `T(a)`; only on effective algebras unless `force`.
    #[pyo3(signature = (a, force = false))]
    fn t(&self, a: usize, force: bool) -> PyResult<usize> {
        let table = nelson::t_table(&self.inner, force).map_err(py_err)?;
        Ok(table[self.check_index(a)?])
    }

    #[getter]
    fn is_effective(&self) -> bool {
        self.inner.is_effective()
    }

    #[getter]
    fn is_semi_simple(&self) -> bool {
        nelson::is_semi_simple(&self.inner)
    }

    fn join_irreducibles(&self) -> PyResult<Vec<usize>> {
        Ok(nelson::g_map(&self.inner).map_err(py_err)?.irreducibles)
    }

    /// Join-irreducible index to its image under g.
    fn g_map(&self) -> PyResult<BTreeMap<usize, usize>> {
        let g = nelson::g_map(&self.inner).map_err(py_err)?;
        Ok(g.irreducibles.into_iter().zip(g.images).collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(<{} elements, {}>)",
            self.inner.len(),
            self.representation()
        )
    }
}

/// A parsed formula.
#[pyclass(name = "Formula", module = "nelson_forge", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFormula {
    inner: logic::Formula,
}

#[pymethods]
impl PyFormula {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyFormula {
            inner: logic::parse(text).map_err(py_err)?,
        })
    }

    #[getter]
    fn atoms(&self) -> Vec<String> {
        self.inner.atoms()
    }

    #[getter]
    fn depth(&self) -> usize {
        self.inner.depth()
    }

    #[getter]
    fn contains_t(&self) -> bool {
        self.inner.contains_t()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Formula({:?})", self.inner.to_string())
    }
}

/// A refuting model: relation, its IRS algebra, valuation and value.
#[pyclass(
    name = "Countermodel",
    module = "nelson_forge",
    frozen,
    get_all,
    skip_from_py_object
)]
struct PyCountermodel {
    relation: PyRelation,
    algebra: PyAlgebra,
    valuation: BTreeMap<String, PairLists>,
    value: PairLists,
    description: String,
}

#[pymethods]
impl PyCountermodel {
    fn __repr__(&self) -> String {
        format!("Countermodel({})", self.description)
    }
}

fn report_dict<'py>(py: Python<'py>, r: &Report) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("name", &r.name)?;
    d.set_item("passed", r.passed())?;
    d.set_item("instances", r.instances)?;
    let violations: Vec<(String, Vec<usize>, String)> = r
        .violations
        .iter()
        .map(|v| (v.law.clone(), v.witness.clone(), v.detail.clone()))
        .collect();
    d.set_item("violations", violations)?;
    Ok(d)
}

/// Quasiorders on `n` points ascending by encoding; `kind` is one of
/// "all", "posets", "equivalences", "effective".
#[pyfunction]
#[pyo3(signature = (n, kind = "all", canonical = false))]
fn enumerate(n: usize, kind: &str, canonical: bool) -> PyResult<Vec<PyRelation>> {
    let filter = match kind {
        "all" => RelationFilter::All,
        "posets" => RelationFilter::PartialOrders,
        "equivalences" => RelationFilter::Equivalences,
        "effective" => RelationFilter::CofinalClosedPoints,
        other => return Err(NelsonForgeError::new_err(format!("unknown kind {other:?}"))),
    };
    let iter = rel::enumerate_quasiorders_with(n, filter, canonical, rel::enumeration_bound())
        .map_err(py_err)?;
    Ok(iter.map(|inner| PyRelation { inner }).collect())
}

#[pyfunction]
fn build_irs(relation: &PyRelation) -> PyResult<PyAlgebra> {
    Ok(PyAlgebra {
        inner: roughsets::irs_direct(&relation.inner).map_err(py_err)?,
    })
}

/// Built three ways; an error means they disagree.
#[pyfunction]
fn build_drs(relation: &PyRelation) -> PyResult<PyAlgebra> {
    Ok(PyAlgebra {
        inner: roughsets::drs_construct(&relation.inner).map_err(py_err)?,
    })
}

/// The five effectiveness conditions by name.
#[pyfunction]
fn effectiveness(relation: &PyRelation) -> PyResult<BTreeMap<&'static str, bool>> {
    let e = roughsets::effectiveness_criteria(&relation.inner).map_err(py_err)?;
    let names = [
        "cofinal",
        "s_dense",
        "s_least_dense",
        "congruence_is_glivenko",
        "structural",
    ];
    Ok(names.into_iter().zip(e.values()).collect())
}

/// Every structural check on the algebras of `relation`.
#[pyfunction]
#[pyo3(signature = (relation, seed = suite::DEFAULT_SEED))]
fn check_relation<'py>(
    py: Python<'py>,
    relation: &PyRelation,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let c = suite::check_relation(&relation.inner, seed).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("passed", c.passed())?;
    d.set_item("irs_size", c.irs_size)?;
    d.set_item("effective", c.effective)?;
    d.set_item("semi_simple", c.semi_simple)?;
    let reports = c
        .reports
        .iter()
        .map(|r| report_dict(py, r))
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("reports", reports)?;
    Ok(d)
}

/// Kleene, Nelson, J1–J4 and T checks on any algebra.
#[pyfunction]
fn check_algebra<'py>(py: Python<'py>, algebra: &PyAlgebra) -> PyResult<Vec<Bound<'py, PyDict>>> {
    suite::check_algebra(&algebra.inner)
        .iter()
        .map(|r| report_dict(py, r))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (formula, algebra, valuation, force = false))]
fn evaluate(
    formula: &PyFormula,
    algebra: &PyAlgebra,
    valuation: BTreeMap<String, usize>,
    force: bool,
) -> PyResult<usize> {
    for &i in valuation.values() {
        algebra.check_index(i)?;
    }
    logic::evaluate(&formula.inner, &algebra.inner, &valuation, force).map_err(py_err)
}

/// `None` when valid, otherwise the first refuting valuation.
#[pyfunction]
#[pyo3(signature = (formula, algebra, force = false))]
fn refute(
    formula: &PyFormula,
    algebra: &PyAlgebra,
    force: bool,
) -> PyResult<Option<BTreeMap<String, usize>>> {
    let v = logic::is_valid_capped(
        &formula.inner,
        &algebra.inner,
        logic::DEFAULT_VALUATION_CAP,
        force,
    )
    .map_err(py_err)?;
    Ok(match v {
        logic::Validity::Valid => None,
        logic::Validity::Refuted { valuation, .. } => Some(valuation),
    })
}

/// Smallest countermodel up to `max_size`, or `None` if there is none there.
#[pyfunction]
#[pyo3(signature = (formula, max_size = 3, effective_only = false, force = false, jobs = None))]
fn countermodel(
    py: Python<'_>,
    formula: &PyFormula,
    max_size: usize,
    effective_only: bool,
    force: bool,
    jobs: Option<usize>,
) -> PyResult<Option<PyCountermodel>> {
    let mut opts = SearchOptions::new(max_size);
    opts.effective_only = effective_only;
    opts.force = force;
    opts.jobs = jobs;
    let f = formula.inner.clone();
    let outcome = py
        .detach(move || logic::countermodel_search(&f, &opts))
        .map_err(py_err)?;
    Ok(match outcome {
        SearchOutcome::Exhausted { .. } => None,
        SearchOutcome::Countermodel(c) => Some(PyCountermodel {
            description: logic::describe_countermodel(&c),
            relation: PyRelation { inner: c.relation },
            algebra: PyAlgebra { inner: c.algebra },
            valuation: c
                .valuation
                .into_iter()
                .map(|(k, v)| (k, pair_lists(v)))
                .collect(),
            value: pair_lists(c.value),
        }),
    })
}

/// Two-valued truth-table validity of a formula without `T`.
#[pyfunction]
fn classical_validity(formula: &PyFormula) -> PyResult<bool> {
    logic::classical_validity(&formula.inner).map_err(py_err)
}

#[pymodule]
#[pyo3(name = "nelson_forge")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("NelsonForgeError", m.py().get_type::<NelsonForgeError>())?;
    m.add_class::<PyRelation>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyFormula>()?;
    m.add_class::<PyCountermodel>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(build_irs, m)?)?;
    m.add_function(wrap_pyfunction!(build_drs, m)?)?;
    m.add_function(wrap_pyfunction!(effectiveness, m)?)?;
    m.add_function(wrap_pyfunction!(check_relation, m)?)?;
    m.add_function(wrap_pyfunction!(check_algebra, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(refute, m)?)?;
    m.add_function(wrap_pyfunction!(countermodel, m)?)?;
    m.add_function(wrap_pyfunction!(classical_validity, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pyo3::ffi::c_str;

    #[test]
    fn module_works_from_embedded_python() {
        pyo3::append_to_inittab!(init);
        Python::initialize();
        Python::attach(|py| {
            py.run(
                c_str!(
                    r#"
import nelson_forge as nf
r = nf.Relation(3, [(0, 1), (0, 2)])
a = nf.build_irs(r)
assert len(a) == 6 and a.is_effective
assert nf.check_relation(r)["passed"]
cm = nf.countermodel(nf.Formula("p | ~p"), max_size=2)
assert len(cm.algebra) == 3
try:
    nf.Formula("T")
    raise AssertionError("bare T accepted")
except nf.NelsonForgeError:
    pass
"#
                ),
                None,
                None,
            )
            .unwrap();
        });
    }
}
