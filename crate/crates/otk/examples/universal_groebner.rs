//! The circuit forms are a Gröbner basis of their ideal under every
//! monomial order, cross-checked against the elimination oracle for the
//! kernel of u_i -> 1/a_i.
//!
//!     cargo run --example universal_groebner

use otk::groebner::kernel_by_elimination;
use otk::verify::{default_orders, square_config, verify_universal_groebner};

fn main() {
    let config = square_config();
    let orders = default_orders(config.n(), 20, 0);
    println!("sampled orders: {}", orders.len());

    let report = verify_universal_groebner(&config, &orders).unwrap();
    for c in &report.checks {
        println!("{:<42} {}", c.name, c.status);
    }
    assert!(report.all_pass());

    let (oracle, _) = kernel_by_elimination(&config).unwrap();
    println!("elimination-oracle generators:");
    for g in oracle.generators() {
        println!("  {g}");
    }
}
