//! The rank-1 golden example: two opposite vectors on a line.
//!
//! Prints every presentation attached to the configuration and runs the
//! built-in golden checks.
//!
//!     cargo run --example tp1

use otk::algebras::{build_j0, build_oth, build_qh};
use otk::verify::{tp1_config, verify_tp1};

fn main() {
    let config = tp1_config();
    println!("vectors: {:?}", config.vectors);

    let j0 = build_j0(&config).unwrap();
    println!("J0 generators:      {:?}", strings(&j0.ideal));

    let qh = build_qh(&config).unwrap();
    println!("quantum generators: {:?}", strings(&qh.ideal));

    let oth = build_oth(&config).unwrap();
    println!("J1' generators:     {:?}", strings(&oth.ideal));

    let report = verify_tp1().unwrap();
    for c in &report.checks {
        println!("{:<34} {}", c.name, c.status);
    }
    assert!(report.all_pass());
}

fn strings(ideal: &otk::groebner::Ideal) -> Vec<String> {
    ideal.generators().iter().map(|g| g.to_string()).collect()
}
