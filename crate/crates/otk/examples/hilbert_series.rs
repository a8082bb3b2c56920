//! Hilbert series of the graded quotients for the triangle
//! configuration, including the h-vector identities.
//!
//!     cargo run --example hilbert_series

use otk::groebner::hilbert_series_quotient;
use otk::polyring::MonomialOrder;
use otk::algebras::{build_j0, build_ot, build_oth, build_sr};
use otk::verify::triangle_config;

fn main() {
    let config = triangle_config();
    let n = config.n();
    let order_u = MonomialOrder::deglex(n);
    let order_uh = MonomialOrder::deglex(n + 1);

    let ot = build_ot(&config).unwrap();
    let hs = hilbert_series_quotient(&ot.ideal, &order_u).unwrap();
    println!("Hilb(OT)    = {}", hs.display());
    println!("coefficients through degree 5: {:?}", hs.expand(5));

    let oth = build_oth(&config).unwrap();
    let hs = hilbert_series_quotient(&oth.ideal, &order_uh).unwrap();
    println!("Hilb(OTh)   = {}", hs.display());

    for (label, pres) in [
        ("SRind", build_sr(&config, false)),
        ("SRbc ", build_sr(&config, true)),
    ] {
        let hs = hilbert_series_quotient(&pres.ideal, &order_u).unwrap();
        println!("Hilb({label}) = {}", hs.display());
    }

    let j0 = build_j0(&config).unwrap();
    let hs = hilbert_series_quotient(&j0.ideal, &order_uh).unwrap();
    println!("Hilb(H)     = {}", hs.display());
}
