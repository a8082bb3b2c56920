//! Reduced Gröbner bases, normal forms, and initial ideals for the
//! deformed circuit relations of the triangle configuration.
//!
//!     cargo run --example groebner_basics

use otk::algebras::build_oth;
use otk::groebner::{buchberger, initial_ideal, normal_form};
use otk::polyring::{parse_polynomial, MonomialOrder};
use otk::verify::triangle_config;

fn main() {
    let pres = build_oth(&triangle_config()).unwrap();
    let order = MonomialOrder::deglex(pres.ring.len());
    let gb = buchberger(&pres.ideal, &order);

    println!("reduced basis:");
    for g in gb.basis() {
        println!("  {g}");
    }
    println!("initial ideal:");
    for g in initial_ideal(&gb).generators() {
        println!("  {g}");
    }

    let p = parse_polynomial(&pres.ring, "u1*u2*u3 + h^3").unwrap();
    println!("NF({p}) = {}", normal_form(&p, &gb));
}
