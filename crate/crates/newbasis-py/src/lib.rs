//! Python bindings: the interval-set families, their F2 realization and
//! tables, and the non-abelian Fourier calculus with the exceptional-case
//! basis builders.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use newbasis_core::basis::{change_of_basis, membership_matrix, symplectic_fourier, VFunction};
use newbasis_core::exc::{
    build_exceptional_basis, check_properties, lambda_library, render_expansions, render_matrix,
    Case,
};
use newbasis_core::f2::{eps_vector, pairing, span, u_stat, utilde, F2Vector, SdOrder};
use newbasis_core::intervals;
use newbasis_core::mspace::{fourier_apply, fourier_matrix, MContext};
use newbasis_core::odd;
use newbasis_core::tables;

fn err(msg: impl Into<String>) -> PyErr {
    PyValueError::new_err(msg.into())
}

/// A finite set of intervals of `[1,d]`.
#[pyclass(frozen)]
#[derive(Clone)]
struct IntervalSet {
    inner: intervals::IntervalSet,
}

#[pymethods]
impl IntervalSet {
    /// Parse from the digit-run notation, e.g. `IntervalSet(4, "<2,123>")`.
    #[new]
    fn new(d: u32, text: &str) -> PyResult<Self> {
        intervals::IntervalSet::parse(d, text)
            .map(|inner| IntervalSet { inner })
            .ok_or_else(|| err(format!("cannot parse {:?} over D={}", text, d)))
    }

    #[getter]
    fn d(&self) -> u32 {
        self.inner.d()
    }

    fn items(&self) -> Vec<(u32, u32)> {
        self.inner.items().iter().map(|iv| (iv.a, iv.b)).collect()
    }

    fn json(&self) -> String {
        self.inner.json()
    }

    /// Per-axiom report (P0, P1, P2).
    fn check_axioms(&self) -> (bool, bool, bool) {
        let rep = intervals::check_axioms(&self.inner);
        (rep.p0, rep.p1, rep.p2)
    }

    fn h_sequence(&self) -> Option<Vec<u32>> {
        intervals::h_sequence(&self.inner)
    }

    fn tau(&self) -> IntervalSet {
        IntervalSet { inner: intervals::tau(&self.inner) }
    }

    fn f_eps(&self) -> (Vec<i64>, Vec<u8>) {
        intervals::f_eps(&self.inner)
    }

    /// The ε-vector as a digit string.
    fn eps(&self) -> String {
        eps_vector(&self.inner).digits()
    }

    /// Members of the span as digit strings.
    fn span(&self) -> Vec<String> {
        span(&self.inner).elements().iter().map(F2Vector::digits).collect()
    }

    /// The singleton move at position i.
    #[pyo3(name = "move")]
    fn move_at(&self, i: u32) -> PyResult<IntervalSet> {
        intervals::move_singleton(&self.inner, i)
            .map(|inner| IntervalSet { inner })
            .map_err(|e| err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("{}", self.inner)
    }

    fn __eq__(&self, other: &IntervalSet) -> bool {
        self.inner == other.inner
    }
}

/// The family S_D (even or odd D), in canonical order.
#[pyfunction]
fn enumerate_s(d: u32) -> Vec<IntervalSet> {
    let sets = if d % 2 == 0 { intervals::enumerate_s(d) } else { odd::enumerate_s_odd(d) };
    sets.into_iter().map(|inner| IntervalSet { inner }).collect()
}

#[pyfunction]
fn count_by_m(d: u32) -> PyResult<Vec<u64>> {
    if d % 2 != 0 {
        return Err(err("count_by_m needs even d"));
    }
    Ok(intervals::count_by_m(d))
}

#[pyfunction]
fn sd_table(d: u32) -> PyResult<String> {
    if d % 2 == 0 {
        tables::render_sd_table(d).map_err(err)
    } else {
        tables::render_sd_odd_table(d).map_err(err)
    }
}

#[pyfunction]
fn symplectic_pairing(d: u32, x: &str, y: &str) -> PyResult<u8> {
    let xv = F2Vector::parse(d, x).ok_or_else(|| err("bad vector"))?;
    let yv = F2Vector::parse(d, y).ok_or_else(|| err("bad vector"))?;
    Ok(pairing(&xv, &yv))
}

#[pyfunction]
fn u_statistics(d: u32, x: &str) -> PyResult<(i64, u64)> {
    let xv = F2Vector::parse(d, x).ok_or_else(|| err("bad vector"))?;
    Ok((u_stat(&xv), utilde(&xv)))
}

/// CSV of the membership matrix ("d") or its inverse ("c").
#[pyfunction]
fn basis_matrix_csv(d: u32, which: &str) -> PyResult<String> {
    if d % 2 != 0 {
        return Err(err("basis matrices need even d"));
    }
    let ord = SdOrder::new(d);
    match which {
        "membership" | "d" => Ok(membership_matrix(&ord).csv()),
        "change" | "c" => Ok(change_of_basis(&ord).csv()),
        _ => Err(err("which must be 'membership' or 'change'")),
    }
}

/// The transform of the span indicator of a set, as (digits, value) pairs.
#[pyfunction]
fn fourier_of_span(set: &IntervalSet) -> Vec<(String, String)> {
    let af = symplectic_fourier(&VFunction::psi_cap(&set.inner));
    af.support()
        .into_iter()
        .map(|x| (x.digits(), af.eval(&x).to_string()))
        .collect()
}

/// The set whose ε-vector is the given digit string (even D).
#[pyfunction]
fn eps_inverse(d: u32, digits: &str) -> PyResult<IntervalSet> {
    if d % 2 != 0 {
        return Err(err("eps_inverse needs even d"));
    }
    let x = F2Vector::parse(d, digits).ok_or_else(|| err("bad vector"))?;
    let ord = SdOrder::new(d);
    Ok(IntervalSet { inner: ord.eps_inverse(&x).clone() })
}

/// The labeled M(Γ)-pairs of a catalog group.
#[pyfunction]
fn m_pairs(group: &str) -> Vec<String> {
    let ctx = MContext::catalog(group);
    (0..ctx.n_pairs()).map(|i| ctx.pair_label(i)).collect()
}

/// The Fourier transform of a basis pair, as (pair, coefficient) strings.
#[pyfunction]
fn fourier_of_pair(group: &str, class_label: &str, irrep_label: &str) -> Vec<(String, String)> {
    let ctx = MContext::catalog(group);
    let idx = ctx.pair_by_labels(class_label, irrep_label);
    let m = fourier_matrix(&ctx);
    let af = fourier_apply(&m, &newbasis_core::mspace::MVector::basis(&ctx, idx));
    af.support()
        .into_iter()
        .map(|i| (ctx.pair_label(i), format!("{}", af.coeffs[i])))
        .collect()
}

#[pyfunction]
fn lambda_names() -> Vec<String> {
    lambda_library().into_iter().map(|l| format!("{}@{}", l.name, l.group)).collect()
}

#[pyfunction]
fn lambda_display(name: &str) -> PyResult<String> {
    let lib = lambda_library();
    let lam = lib
        .iter()
        .find(|l| l.name == name)
        .ok_or_else(|| err(format!("no library element {:?}", name)))?;
    let ctx = MContext::catalog(&lam.group);
    Ok(lam.vector.display(&ctx))
}

#[pyfunction]
fn exc_expansions(case: &str) -> PyResult<String> {
    let case = Case::parse(case).ok_or_else(|| err("unknown case"))?;
    Ok(render_expansions(&build_exceptional_basis(case)))
}

#[pyfunction]
fn exc_matrix(case: &str) -> PyResult<String> {
    let case = Case::parse(case).ok_or_else(|| err("unknown case"))?;
    render_matrix(&build_exceptional_basis(case)).map_err(err)
}

/// Run the defining property checks for a case; returns the failure list.
#[pyfunction]
fn exc_check(case: &str) -> PyResult<Vec<String>> {
    let case = Case::parse(case).ok_or_else(|| err("unknown case"))?;
    let report = check_properties(&build_exceptional_basis(case));
    Ok(report.failures)
}

#[pymodule]
fn newbasis_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<IntervalSet>()?;
    m.add_function(wrap_pyfunction!(enumerate_s, m)?)?;
    m.add_function(wrap_pyfunction!(count_by_m, m)?)?;
    m.add_function(wrap_pyfunction!(sd_table, m)?)?;
    m.add_function(wrap_pyfunction!(symplectic_pairing, m)?)?;
    m.add_function(wrap_pyfunction!(u_statistics, m)?)?;
    m.add_function(wrap_pyfunction!(basis_matrix_csv, m)?)?;
    m.add_function(wrap_pyfunction!(fourier_of_span, m)?)?;
    m.add_function(wrap_pyfunction!(eps_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(m_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(fourier_of_pair, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_names, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_display, m)?)?;
    m.add_function(wrap_pyfunction!(exc_expansions, m)?)?;
    m.add_function(wrap_pyfunction!(exc_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(exc_check, m)?)?;
    Ok(())
}
