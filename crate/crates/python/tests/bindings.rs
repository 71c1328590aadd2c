use pyo3::prelude::*;
use pyo3::types::PyDict;
use weakid::weakid as weakid_module;

fn run(code: &std::ffi::CStr) {
    pyo3::append_to_inittab!(weakid_module);
    Python::initialize();
    Python::attach(|py| {
        let globals = PyDict::new(py);
        py.run(code, Some(&globals), None).map_err(|e| e.display(py)).unwrap();
    });
}

#[test]
fn module_round_trip() {
    run(c"
import weakid
g = weakid.GroupSpec('Zn:3')
assert weakid.normalize('x1', g) == 'e0(x1) + e1(x1) + e-1(x1)'
f = weakid.parse('[e0(x1), e0(x2)]', g)
assert f.is_identity() and len(f) == 2
assert weakid.enumerate_b(g, [1, 2]) == [str(weakid.parse(m, g)) for m in weakid.enumerate_b(g, [1, 2])]
assert weakid.oracle_dimension(weakid.GroupSpec('A4'), [1]) == 9
assert all(ok for _, ok in weakid.verify_suite(weakid.GroupSpec('Dn:5')))
try:
    weakid.parse('e1(x1', g)
    raise AssertionError('parse error expected')
except ValueError:
    pass
");
}
