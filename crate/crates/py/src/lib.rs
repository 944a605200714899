//! Python bindings. Models cross the boundary as text in the file format
//! the CLI reads and writes.

use idcodes::bounds::{self, BoundKind, BoundQuery, GraphClass};
use idcodes::generators::{self, FamilyParams};
use idcodes::models::cograph_recognize;
use idcodes::{cograph, exact, io, verify, Cotree, Error, Model, ProblemKind, VertexSet};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn model(text: &str) -> PyResult<Model> {
    io::parse_model(text).map_err(err)
}

fn problem(name: &str) -> PyResult<ProblemKind> {
    name.parse().map_err(err)
}

fn cotree(text: &str) -> PyResult<Cotree> {
    match model(text)? {
        Model::Cotree(t) => Ok(t),
        other => cograph_recognize(&other.to_graph().map_err(err)?).map_err(err),
    }
}

/// Minimum size and one witness, by exhaustive search.
#[pyfunction]
fn solve(problem_name: &str, model_text: &str) -> PyResult<(usize, Vec<usize>)> {
    let g = model(model_text)?.to_graph().map_err(err)?;
    let r = exact::min_set(&g, problem(problem_name)?).map_err(err)?;
    Ok((r.k, r.witness.into_iter().collect()))
}

/// None when the set is valid, otherwise the violation.
#[pyfunction]
fn check(problem_name: &str, model_text: &str, set: Vec<usize>) -> PyResult<Option<String>> {
    let g = model(model_text)?.to_graph().map_err(err)?;
    let s: VertexSet = set.into_iter().collect();
    let v = verify::check(&g, &s, problem(problem_name)?).map_err(err)?;
    Ok(v.map(|v| v.to_string()))
}

/// `(k, emp, univ)` of the minimum separating set computed on the cotree.
#[pyfunction]
fn cograph_separating(problem_name: &str, model_text: &str) -> PyResult<(usize, bool, bool)> {
    let t = cotree(model_text)?;
    let s = match problem(problem_name)? {
        ProblemKind::Ic | ProblemKind::SepId => cograph::sep_id_dp(&t).map_err(err)?,
        ProblemKind::Ld | ProblemKind::SepLd => cograph::sep_ld_dp(&t),
        other => return Err(PyValueError::new_err(format!("cograph does not support {other}"))),
    };
    Ok((s.k, s.emp, s.univ))
}

#[pyfunction]
fn gamma_cograph(problem_name: &str, model_text: &str) -> PyResult<usize> {
    let t = cotree(model_text)?;
    match problem(problem_name)? {
        ProblemKind::Ic => cograph::gamma_id_cograph(&t).map_err(err),
        ProblemKind::Ld => Ok(cograph::gamma_ld_cograph(&t)),
        ProblemKind::Rs => cograph::dim_cograph(&t).map_err(err),
        other => Err(PyValueError::new_err(format!("cograph does not support {other}"))),
    }
}

/// Model text and manifest line of an extremal instance.
#[pyfunction]
#[pyo3(signature = (family, k=None, d=None, n=None, variant=None))]
fn generate(family: &str, k: Option<usize>, d: Option<usize>, n: Option<usize>, variant: Option<u8>) -> PyResult<(String, String)> {
    let inst = generators::generate(family, FamilyParams { k, d, n, variant }).map_err(err)?;
    Ok((io::write_model(&inst.model), inst.manifest_line()))
}

#[pyfunction]
#[pyo3(signature = (class_name, kind, k, d=None))]
fn max_order(class_name: &str, kind: &str, k: u64, d: Option<u64>) -> PyResult<u64> {
    let class: GraphClass = class_name.parse().map_err(err)?;
    let kind: BoundKind = kind.parse().map_err(err)?;
    bounds::max_order(&BoundQuery::new(class, kind, k, d)).map_err(err)
}

/// `(satisfied, slack, class, max_n)` for a set on a model.
#[pyfunction]
fn certify(model_text: &str, set: Vec<usize>, problem_name: &str) -> PyResult<(bool, i64, String, u64)> {
    let s: VertexSet = set.into_iter().collect();
    let r = bounds::certify(&model(model_text)?, &s, problem(problem_name)?).map_err(err)?;
    Ok((r.satisfied, r.slack, r.class.to_string(), r.max_n))
}

#[pymodule]
fn idcodes_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(cograph_separating, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_cograph, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(max_order, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    Ok(())
}
