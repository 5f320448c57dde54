//! Every example under `examples/` runs to completion.

#[path = "../examples/hom_algebras.rs"]
mod hom_algebras;

#[path = "../examples/twistors.rs"]
mod twistors;

#[path = "../examples/twisted_tensor.rs"]
mod twisted_tensor;

#[path = "../examples/clifford_process.rs"]
mod clifford_process;

#[path = "../examples/smash_products.rs"]
mod smash_products;

#[path = "../examples/iterated_products.rs"]
mod iterated_products;

#[path = "../examples/quantum_plane.rs"]
mod quantum_plane;

#[path = "../examples/manifests.rs"]
mod manifests;

#[path = "../examples/example_suite.rs"]
mod example_suite;

#[test]
fn hom_algebras_example_runs() {
    hom_algebras::run().expect("hom_algebras example");
}

#[test]
fn twistors_example_runs() {
    twistors::run().expect("twistors example");
}

#[test]
fn twisted_tensor_example_runs() {
    twisted_tensor::run().expect("twisted_tensor example");
}

#[test]
fn clifford_process_example_runs() {
    clifford_process::run().expect("clifford_process example");
}

#[test]
fn smash_products_example_runs() {
    smash_products::run().expect("smash_products example");
}

#[test]
fn iterated_products_example_runs() {
    iterated_products::run().expect("iterated_products example");
}

#[test]
fn quantum_plane_example_runs() {
    quantum_plane::run().expect("quantum_plane example");
}

#[test]
fn manifests_example_runs() {
    manifests::run().expect("manifests example");
}

#[test]
fn example_suite_example_runs() {
    example_suite::run().expect("example_suite example");
}
