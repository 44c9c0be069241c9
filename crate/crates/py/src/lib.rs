use pyo3::prelude::*;

#[pyfunction]
fn ping() -> f64 { 1.0 }

#[pymodule]
fn slicelab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(ping, m)?)?;
    Ok(())
}
