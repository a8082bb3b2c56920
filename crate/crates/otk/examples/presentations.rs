//! Every graded ring presentation attached to a configuration: the
//! cohomology ideal, the quantum ideal with its curve-class lattice, the
//! q=1 quotients, the circuit algebras, the Stanley-Reisner rings, the
//! Artinian variants, and the toric binomial ideal.
//!
//!     cargo run --example presentations

use otk::algebras::{
    build_aot, build_j0, build_j1, build_ot, build_oth, build_qh, build_sr, build_toric_i1,
    curve_class_lattice,
};
use otk::verify::triangle_config;

fn main() {
    let config = triangle_config();

    let lattice = curve_class_lattice(&config).unwrap();
    println!("curve-class lattice basis: {:?}", lattice.basis);
    println!("circuit classes:           {:?}", lattice.beta_coords);

    let pres = vec![
        build_j0(&config).unwrap(),
        build_qh(&config).unwrap(),
        build_j1(&config).unwrap(),
        build_oth(&config).unwrap(),
        build_ot(&config).unwrap(),
        build_sr(&config, false),
        build_sr(&config, true),
        build_aot(&config, false).unwrap(),
        build_aot(&config, true).unwrap(),
        build_toric_i1(&config).unwrap(),
    ];
    for p in &pres {
        println!("{}:", p.name.label());
        for g in p.ideal.generators() {
            println!("  {g}");
        }
    }
}
