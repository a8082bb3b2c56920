//! Matroid combinatorics of a vector configuration: circuits, signed
//! circuits, broken circuits, flats, and the f/h-vectors of the
//! independence and broken-circuit complexes.
//!
//!     cargo run --example circuits

use otk::matroid::{ComplexKind, VectorConfig};

fn main() {
    let config = VectorConfig::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![0, -1]],
        Some(vec![0, 0, 1, 3]),
    )
    .unwrap();

    let report = config.validate().unwrap();
    println!("assumptions hold: {}", report.all_ok());

    for sc in config.signed_circuits().unwrap() {
        println!(
            "circuit {:?}: plus {:?}, minus {:?}",
            sc.circuit, sc.plus, sc.minus
        );
    }
    println!("broken circuits: {:?}", config.broken_circuits());
    println!("flats: {:?}", config.flats());

    let ind = config.complex_summary(ComplexKind::Independence);
    println!("independence   f = {:?}, h = {:?}", ind.f_vector, ind.h_vector);
    let bc = config.complex_summary(ComplexKind::BrokenCircuit);
    println!("broken-circuit f = {:?}, h = {:?}", bc.f_vector, bc.h_vector);
}
