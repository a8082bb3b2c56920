//! Per-degree construction of the graded map from the cohomology
//! presentation to its q=1 quotient, with the kernel identified against
//! the W-module generated by the u_S f_C.
//!
//!     cargo run --example psi_kernel

use otk::verify::{build_psi, kernel_dimensions, triangle_config, verify_kernel_equals_w};

fn main() {
    let config = triangle_config();
    let bound = 5;

    let map = build_psi(&config, bound).unwrap();
    println!("deg  2*deg  dim H  dim R'  dim Ker");
    for slice in &map.degrees {
        println!(
            "{:>3}  {:>5}  {:>5}  {:>6}  {:>7}",
            slice.degree,
            2 * slice.degree,
            slice.source_basis.len(),
            slice.target_basis.len(),
            slice.kernel_dimension()
        );
    }
    println!("kernel dimensions: {:?}", kernel_dimensions(&map));

    let report = verify_kernel_equals_w(&config, bound).unwrap();
    for c in &report.checks {
        println!("{:<28} {}", c.name, c.status);
    }
    assert!(report.all_pass());
}
