//! Python bindings (placeholder while the core library is built).

use pyo3::prelude::*;

#[pymodule]
fn flamefront_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
