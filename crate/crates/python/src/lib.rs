use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use speclattice::correspondence::{omega, psi, verify_correspondence};
use speclattice::format::{parse, print, Document};
use speclattice::poset_spec::{
    compatible_preorder_count_poset, enumerate_surjective_monotone_classes, equivalence_count,
};
use speclattice::quotient::{arrow_isomorphic, build_quotient, quotient_isomorphic};
use speclattice::relational_model::verify_expansion_bijection;
use speclattice::semilattice::enumerate_semilattices;
use speclattice::{fixtures, BinaryRelation, Carrier, Congruence, Error, FiniteSemilattice, Partition};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pairs(r: &BinaryRelation) -> Vec<(usize, usize)> {
    r.pairs().collect()
}

fn blocks(theta: &Congruence) -> Vec<Vec<usize>> {
    theta.partition().blocks()
}

/// A finite join semilattice given by its join table.
#[pyclass(name = "Semilattice", module = "speclattice_py", frozen, from_py_object)]
#[derive(Clone)]
struct PySemilattice {
    inner: FiniteSemilattice,
}

#[pymethods]
impl PySemilattice {
    #[new]
    #[pyo3(signature = (table, names=None))]
    fn new(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> PyResult<Self> {
        let carrier = match names {
            Some(names) => Carrier::named(names),
            None => Carrier::indexed(table.len()),
        }
        .map_err(py_err)?;
        let inner = FiniteSemilattice::new(carrier, table).map_err(py_err)?;
        Ok(PySemilattice { inner })
    }

    /// Parses the text format; the file must describe a semilattice.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        match parse(text).map_err(py_err)? {
            Document::Semilattice(inner) => Ok(PySemilattice { inner }),
            Document::SpecSemilattice(ss) => Ok(PySemilattice { inner: ss.base().clone() }),
            doc => Err(PyValueError::new_err(format!("expected a semilattice, got a {}", doc.kind()))),
        }
    }

    fn to_text(&self) -> String {
        print(&Document::Semilattice(self.inner.clone()))
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.carrier().names().to_vec()
    }

    #[getter]
    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.table()
    }

    fn join(&self, a: usize, b: usize) -> PyResult<usize> {
        let n = self.inner.size();
        if a >= n || b >= n {
            return Err(py_err(Error::OutOfRange { index: a.max(b), size: n }));
        }
        Ok(self.inner.join(a, b))
    }

    fn induced_order(&self) -> Vec<(usize, usize)> {
        pairs(&self.inner.induced_order())
    }

    /// Congruences as lists of blocks.
    fn congruences(&self) -> PyResult<Vec<Vec<Vec<usize>>>> {
        Ok(self.inner.enumerate_congruences().map_err(py_err)?.iter().map(blocks).collect())
    }

    /// Compatible preorders as lists of pairs.
    fn compatible_preorders(&self) -> PyResult<Vec<Vec<(usize, usize)>>> {
        Ok(self.inner.enumerate_compatible_preorders().map_err(py_err)?.iter().map(pairs).collect())
    }

    /// Blocks of the congruence attached to a compatible preorder.
    fn psi(&self, preorder: Vec<(usize, usize)>) -> PyResult<Vec<Vec<usize>>> {
        let r = BinaryRelation::from_pairs(self.inner.size(), preorder).map_err(py_err)?;
        Ok(blocks(&psi(&self.inner, &r).map_err(py_err)?))
    }

    /// Compatible preorder attached to a congruence given by its blocks.
    fn omega(&self, partition: Vec<Vec<usize>>) -> PyResult<Vec<(usize, usize)>> {
        let theta = self.congruence(&partition)?;
        Ok(pairs(&omega(&self.inner, &theta).map_err(py_err)?))
    }

    /// `(target, projection)` for the congruence with the given blocks.
    fn quotient(&self, partition: Vec<Vec<usize>>) -> PyResult<(PySemilattice, Vec<usize>)> {
        let theta = self.congruence(&partition)?;
        let q = build_quotient(&self.inner, &theta).map_err(py_err)?;
        Ok((PySemilattice { inner: q.target().clone() }, q.projection().map().to_vec()))
    }

    /// Exhaustive check that the two maps are inverse lattice isomorphisms.
    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let rep = verify_correspondence(&self.inner, "python").map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("preorders", rep.preorder_count)?;
        d.set_item("congruences", rep.congruence_count)?;
        d.set_item("meets_checked", rep.meets_checked)?;
        d.set_item("passed", rep.passed())?;
        d.set_item("failures", [rep.round_trip_failures, rep.meet_failures, rep.order_failures].concat())?;
        Ok(d)
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Semilattice(table={:?}, names={:?})", self.inner.table(), self.inner.carrier().names())
    }
}

impl PySemilattice {
    fn congruence(&self, partition: &[Vec<usize>]) -> PyResult<Congruence> {
        let p = Partition::from_blocks(self.inner.size(), partition).map_err(py_err)?;
        Congruence::from_partition(&self.inner, &p).map_err(py_err)
    }
}

/// All labelled semilattices on `n` elements.
#[pyfunction]
fn semilattices(n: usize) -> PyResult<Vec<PySemilattice>> {
    Ok(enumerate_semilattices(n).map_err(py_err)?.into_iter().map(|inner| PySemilattice { inner }).collect())
}

/// The two 3-chains example and the fixture's theta, theta' projections.
#[pyfunction]
fn two_chains<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let f = fixtures::two_chains();
    let q1 = build_quotient(&f.semilattice, &f.theta).map_err(py_err)?.arrow();
    let q2 = build_quotient(&f.semilattice, &f.theta_prime).map_err(py_err)?.arrow();
    let d = PyDict::new(py);
    d.set_item("semilattice", PySemilattice { inner: f.semilattice.clone() })?;
    d.set_item("theta", blocks(&f.theta))?;
    d.set_item("theta_prime", blocks(&f.theta_prime))?;
    d.set_item("quotient_isomorphic", quotient_isomorphic(&q1, &q2).map_err(py_err)?.is_some())?;
    let arrow = arrow_isomorphic(&q1, &q2);
    d.set_item("arrow_isomorphic", arrow.is_some())?;
    d.set_item("arrow_witness", arrow)?;
    Ok(d)
}

/// Counts for the two-element antichain.
#[pyfunction]
fn antichain<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let p = fixtures::antichain_pair();
    let d = PyDict::new(py);
    d.set_item("classes", enumerate_surjective_monotone_classes(&p).map_err(py_err)?.len())?;
    d.set_item("equivalences", equivalence_count(p.size()).map_err(py_err)?)?;
    d.set_item("compatible_preorders", compatible_preorder_count_poset(&p).map_err(py_err)?)?;
    Ok(d)
}

/// Checks the homomorphism/expansion bijection on a relational structure in text form.
#[pyfunction]
fn verify_expansions<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyDict>> {
    let a = match parse(text).map_err(py_err)? {
        Document::Structure(a) => a,
        doc => return Err(PyValueError::new_err(format!("expected a relational structure, got a {}", doc.kind()))),
    };
    let rep = verify_expansion_bijection(&a).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("homomorphisms", rep.homs)?;
    d.set_item("expansions", rep.expansions)?;
    d.set_item("passed", rep.passed())?;
    Ok(d)
}

/// Kind tag of a document in the text format, raising on invalid input.
#[pyfunction]
fn validate(text: &str) -> PyResult<&'static str> {
    Ok(parse(text).map_err(py_err)?.kind())
}

#[pymodule]
fn speclattice_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySemilattice>()?;
    m.add_function(wrap_pyfunction!(semilattices, m)?)?;
    m.add_function(wrap_pyfunction!(two_chains, m)?)?;
    m.add_function(wrap_pyfunction!(antichain, m)?)?;
    m.add_function(wrap_pyfunction!(verify_expansions, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    Ok(())
}
