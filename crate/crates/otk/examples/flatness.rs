//! Flatness of the deformed circuit algebra over k[h]: the ideal is
//! h-saturated and the Hilbert series is the undeformed series divided
//! by (1-t), for both the full and Artinian variants.
//!
//!     cargo run --example flatness

use otk::verify::{square_config, verify_flatness};

fn main() {
    let report = verify_flatness(&square_config()).unwrap();
    for c in &report.checks {
        println!("{:<34} {}", c.name, c.status);
    }
    for (label, series) in &report.series {
        println!("Hilb({label}) = {series}");
    }
    assert!(report.all_pass());
}
