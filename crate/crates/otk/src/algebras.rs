//! Builders for the graded presentations attached to a configuration:
//! the cohomology ideal J0, the quantum ideal J and its q=1 quotients J1
//! and J1' (= the deformed Orlik-Terao ideal), the Orlik-Terao and
//! Stanley-Reisner rings, the Artinian variants, the toric binomial
//! ideal, the Sym(V) structure map, and the W-module generators.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::{int_kernel_basis, QMatrix};
use crate::matroid::{SignedCircuit, VectorConfig};
use crate::polyring::{coeff_int, Monomial, Polynomial, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PresentationName {
    J0,
    QH,
    J1,
    J1Prime,
    OT,
    SRInd,
    SRBc,
    AOT,
    AOTh,
    ToricI1,
}

impl PresentationName {
    pub fn label(&self) -> &'static str {
        match self {
            PresentationName::J0 => "J0",
            PresentationName::QH => "J",
            PresentationName::J1 => "J1",
            PresentationName::J1Prime => "J1prime/OTh",
            PresentationName::OT => "OT",
            PresentationName::SRInd => "SRind",
            PresentationName::SRBc => "SRbc",
            PresentationName::AOT => "AOT",
            PresentationName::AOTh => "AOTh",
            PresentationName::ToricI1 => "ToricI1",
        }
    }
}

/// A graded quotient presentation: ring, ideal, and the degree-1 images
/// of a lattice basis of the dual lattice under the structure map.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: PresentationName,
    pub ring: Arc<VarSet>,
    pub ideal: Ideal,
    pub structure_map: Vec<Polynomial>,
}

/// A chosen integer basis of P = ker(Z^n -> N) with the coordinates of
/// each circuit class beta_C in that basis.
#[derive(Debug, Clone)]
pub struct CurveClassLattice {
    /// Basis vectors of P, each of length n.
    pub basis: Vec<Vec<BigInt>>,
    /// For each circuit (in sorted circuit order), the coordinates of
    /// beta_C in `basis`.
    pub beta_coords: Vec<Vec<BigInt>>,
}

/// Polynomial ring k[u1..un].
pub fn u_ring(n: usize) -> Arc<VarSet> {
    VarSet::new((1..=n).map(|i| format!("u{i}")).collect::<Vec<_>>())
}

/// Polynomial ring k[u1..un, h].
pub fn uh_ring(n: usize) -> Arc<VarSet> {
    let mut names: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    names.push("h".to_string());
    VarSet::new(names)
}

/// Ring k[u1..un, h, q1..qm, qb1..qbm]; quantum variables have weight 0.
pub fn quantum_ring(n: usize, m: usize) -> Arc<VarSet> {
    let mut names: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    names.push("h".to_string());
    let mut weights = vec![1u32; n + 1];
    for k in 1..=m {
        names.push(format!("q{k}"));
        weights.push(0);
    }
    for k in 1..=m {
        names.push(format!("qb{k}"));
        weights.push(0);
    }
    VarSet::with_weights(names, weights)
}

/// Ring k[u1, v1, ..., un, vn] for the toric ideal.
pub fn toric_ring(n: usize) -> Arc<VarSet> {
    let mut names = Vec::with_capacity(2 * n);
    for i in 1..=n {
        names.push(format!("u{i}"));
        names.push(format!("v{i}"));
    }
    VarSet::new(names)
}

fn u_monomial(set: &[usize]) -> Monomial {
    Monomial::from_pairs(set.iter().map(|&i| (i, 1)).collect())
}

/// u_S as a polynomial (u_i at index i in the ring).
pub fn u_s(ring: &Arc<VarSet>, set: &[usize]) -> Polynomial {
    Polynomial::monomial(ring, u_monomial(set))
}

fn prod(ring: &Arc<VarSet>, factors: impl IntoIterator<Item = Polynomial>) -> Polynomial {
    let mut acc = Polynomial::one(ring);
    for f in factors {
        acc = acc.mul(&f).expect("same ring");
    }
    acc
}

/// The two circuit products of the quantum relation, in a ring whose
/// first n variables are u_i and that contains `h`.
/// Returns (plus-side, minus-side) of
/// prod_{C+} u_i prod_{C-} (u_j - h)  and  prod_{C+} (u_i - h) prod_{C-} u_j.
fn circuit_products(ring: &Arc<VarSet>, sc: &SignedCircuit) -> (Polynomial, Polynomial) {
    let h = Polynomial::var_named(ring, "h").expect("ring has h");
    let a = prod(
        ring,
        sc.plus
            .iter()
            .map(|&i| Polynomial::var(ring, i))
            .chain(sc.minus.iter().map(|&j| {
                Polynomial::var(ring, j).sub(&h).expect("same ring")
            })),
    );
    let b = prod(
        ring,
        sc.plus
            .iter()
            .map(|&i| Polynomial::var(ring, i).sub(&h).expect("same ring"))
            .chain(sc.minus.iter().map(|&j| Polynomial::var(ring, j))),
    );
    (a, b)
}

fn oriented_circuits(config: &VectorConfig) -> Result<Vec<SignedCircuit>> {
    config.signed_circuits()
}

/// Degree-1 structure forms: for the standard basis of the dual lattice,
/// form_j = sum_i (a_i)_j u_i, built in the given ring.
pub fn structure_forms(config: &VectorConfig, ring: &Arc<VarSet>) -> Vec<Polynomial> {
    (0..config.d())
        .map(|j| {
            let mut acc = Polynomial::zero(ring);
            for (i, a) in config.vectors.iter().enumerate() {
                if a[j] != 0 {
                    acc = acc
                        .add(&Polynomial::var(ring, i).scale(&coeff_int(a[j])))
                        .expect("same ring");
                }
            }
            acc
        })
        .collect()
}

/// J0: one generator prod_{C+} u_i * prod_{C-} (h - u_j) per circuit.
pub fn build_j0(config: &VectorConfig) -> Result<Presentation> {
    let ring = uh_ring(config.n());
    let h = Polynomial::var_named(&ring, "h").unwrap();
    let mut gens = Vec::new();
    for sc in oriented_circuits(config)? {
        let g = prod(
            &ring,
            sc.plus
                .iter()
                .map(|&i| Polynomial::var(&ring, i))
                .chain(sc.minus.iter().map(|&j| {
                    h.sub(&Polynomial::var(&ring, j)).expect("same ring")
                })),
        );
        gens.push(g);
    }
    Ok(Presentation {
        name: PresentationName::J0,
        ring: ring.clone(),
        ideal: Ideal::new(&ring, gens),
        structure_map: structure_forms(config, &ring),
    })
}

/// f_{C,0} for a signed circuit, in a u-only ring.
pub fn f_c0(ring: &Arc<VarSet>, sc: &SignedCircuit) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for &i in &sc.circuit {
        let rest: Vec<usize> = sc.circuit.iter().copied().filter(|&k| k != i).collect();
        acc = acc
            .add(&u_s(ring, &rest).scale(&coeff_int(sc.eta(i))))
            .expect("same ring");
    }
    acc
}

/// f_{C,0} for a general (possibly non-unimodular) circuit, with rational
/// eta from the null space, normalized primitive with first entry positive.
pub fn f_c0_general(config: &VectorConfig, ring: &Arc<VarSet>, circuit: &[usize]) -> Polynomial {
    let mut c = circuit.to_vec();
    c.sort_unstable();
    let cols: Vec<Vec<BigInt>> = c
        .iter()
        .map(|&i| config.vectors[i].iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let kernel = int_kernel_basis(&cols, config.d());
    assert_eq!(kernel.len(), 1, "not a circuit");
    let eta = &kernel[0];
    let mut acc = Polynomial::zero(ring);
    for (k, &i) in c.iter().enumerate() {
        let rest: Vec<usize> = c.iter().copied().filter(|&x| x != i).collect();
        acc = acc
            .add(&u_s(ring, &rest).scale(&BigRational::from_integer(eta[k].clone())))
            .expect("same ring");
    }
    acc
}

/// f_C = h^{-1} (prod_{C+} u prod_{C-} (u-h)  -  prod_{C+} (u-h) prod_{C-} u).
pub fn f_c(ring: &Arc<VarSet>, sc: &SignedCircuit) -> Polynomial {
    let (a, b) = circuit_products(ring, sc);
    a.sub(&b)
        .expect("same ring")
        .divide_exact_by_var("h")
        .expect("circuit difference is divisible by h")
}

/// OT: the ideal generated by f_{C,0}, in k[u1..un].
pub fn build_ot(config: &VectorConfig) -> Result<Presentation> {
    let ring = u_ring(config.n());
    let gens = match config.signed_circuits() {
        Ok(scs) => scs.iter().map(|sc| f_c0(&ring, sc)).collect(),
        Err(Error::NotUnimodular(_)) => config
            .circuits()
            .iter()
            .map(|c| f_c0_general(config, &ring, c))
            .collect(),
        Err(e) => return Err(e),
    };
    Ok(Presentation {
        name: PresentationName::OT,
        ring: ring.clone(),
        ideal: Ideal::new(&ring, gens),
        structure_map: structure_forms(config, &ring),
    })
}

/// OT_h: the ideal generated by f_C, in k[u1..un, h].
/// Checks f_C|_{h=0} = ±f_{C,0} for every circuit.
pub fn build_oth(config: &VectorConfig) -> Result<Presentation> {
    let ring = uh_ring(config.n());
    let u_only = u_ring(config.n());
    let mut gens = Vec::new();
    for sc in oriented_circuits(config)? {
        let g = f_c(&ring, &sc);
        let at0 = g
            .substitute("h", &Polynomial::zero(&ring))
            .expect("h in ring");
        let expected = crate::groebner::lift_poly(&f_c0(&u_only, &sc), &ring);
        assert!(
            at0 == expected || at0 == expected.neg(),
            "f_C at h=0 must be ±f_C0"
        );
        gens.push(g);
    }
    Ok(Presentation {
        name: PresentationName::J1Prime,
        ring: ring.clone(),
        ideal: Ideal::new(&ring, gens),
        structure_map: structure_forms(config, &ring),
    })
}

/// Stanley-Reisner presentations: <u_C> (independence) or <u_Cbar>
/// (broken circuit), in k[u1..un].
pub fn build_sr(config: &VectorConfig, broken: bool) -> Presentation {
    let ring = u_ring(config.n());
    let sets: Vec<Vec<usize>> = if broken {
        config.broken_circuits()
    } else {
        config.circuits()
    };
    let gens = sets.iter().map(|s| u_s(&ring, s)).collect();
    Presentation {
        name: if broken {
            PresentationName::SRBc
        } else {
            PresentationName::SRInd
        },
        ring: ring.clone(),
        ideal: Ideal::new(&ring, gens),
        structure_map: structure_forms(config, &ring),
    }
}

/// J1: the un-divided circuit differences h * f_C.
pub fn build_j1(config: &VectorConfig) -> Result<Presentation> {
    let ring = uh_ring(config.n());
    let mut gens = Vec::new();
    for sc in oriented_circuits(config)? {
        let (a, b) = circuit_products(&ring, &sc);
        gens.push(a.sub(&b).expect("same ring"));
    }
    Ok(Presentation {
        name: PresentationName::J1,
        ring: ring.clone(),
        ideal: Ideal::new(&ring, gens),
        structure_map: structure_forms(config, &ring),
    })
}

/// The curve-class lattice P = ker(Z^n -> N) with a deterministic basis
/// and the beta_C coordinates for every circuit.
pub fn curve_class_lattice(config: &VectorConfig) -> Result<CurveClassLattice> {
    let n = config.n();
    let cols: Vec<Vec<BigInt>> = config
        .vectors
        .iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let basis = int_kernel_basis(&cols, config.d());
    let m = basis.len();
    let mut beta_coords = Vec::new();
    for sc in oriented_circuits(config)? {
        // solve basis * c = beta_C over Q; the solution must be integral
        let rows: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..m)
                    .map(|k| BigRational::from_integer(basis[k][i].clone()))
                    .collect()
            })
            .collect();
        let beta: Vec<BigRational> = (0..n)
            .map(|i| BigRational::from_integer(BigInt::from(sc.eta(i))))
            .collect();
        let sol = QMatrix::from_rows(rows)
            .solve(&beta)
            .expect("beta_C lies in P");
        let coords: Vec<BigInt> = sol
            .iter()
            .map(|x| {
                assert!(x.is_integer(), "beta_C coordinates must be integral");
                x.to_integer()
            })
            .collect();
        beta_coords.push(coords);
    }
    Ok(CurveClassLattice { basis, beta_coords })
}

/// q^{beta} as a monomial in q/qb variables of a quantum ring.
fn q_power(n: usize, m: usize, coords: &[BigInt]) -> Monomial {
    let mut pairs = Vec::new();
    for (k, c) in coords.iter().enumerate() {
        let e = u32::try_from(c.abs().clone()).expect("small exponent");
        if e == 0 {
            continue;
        }
        if c.is_positive() {
            pairs.push((n + 1 + k, e));
        } else {
            pairs.push((n + 1 + m + k, e));
        }
    }
    Monomial::from_pairs(pairs)
}

/// J: the quantum presentation in k[u, h, q, qb] with unit relations
/// q_k qb_k = 1 adjoined.
pub fn build_qh(config: &VectorConfig) -> Result<Presentation> {
    let n = config.n();
    let lattice = curve_class_lattice(config)?;
    let m = lattice.basis.len();
    let ring = quantum_ring(n, m);
    let mut gens = Vec::new();
    for (sc, coords) in oriented_circuits(config)?.iter().zip(&lattice.beta_coords) {
        let (a, b) = circuit_products(&ring, sc);
        let q = Polynomial::monomial(&ring, q_power(n, m, coords));
        gens.push(a.sub(&b.mul(&q).expect("same ring")).expect("same ring"));
    }
    for k in 0..m {
        let rel = Polynomial::var(&ring, n + 1 + k)
            .mul(&Polynomial::var(&ring, n + 1 + m + k))
            .expect("same ring")
            .sub(&Polynomial::one(&ring))
            .expect("same ring");
        gens.push(rel);
    }
    Ok(Presentation {
        name: PresentationName::QH,
        ring: ring.clone(),
        ideal: Ideal::new(&ring, gens),
        structure_map: structure_forms(config, &ring),
    })
}

/// AOT (deformed=false): OT ideal plus u_i^2.
/// AOT_h (deformed=true): OT_h ideal plus u_i(u_i - h).
pub fn build_aot(config: &VectorConfig, deformed: bool) -> Result<Presentation> {
    if deformed {
        let base = build_oth(config)?;
        let ring = base.ring.clone();
        let h = Polynomial::var_named(&ring, "h").unwrap();
        let mut gens = base.ideal.generators().to_vec();
        for i in 0..config.n() {
            let ui = Polynomial::var(&ring, i);
            gens.push(ui.mul(&ui.sub(&h).expect("same ring")).expect("same ring"));
        }
        Ok(Presentation {
            name: PresentationName::AOTh,
            ring: ring.clone(),
            ideal: Ideal::new(&ring, gens),
            structure_map: base.structure_map,
        })
    } else {
        let base = build_ot(config)?;
        let ring = base.ring.clone();
        let mut gens = base.ideal.generators().to_vec();
        for i in 0..config.n() {
            let ui = Polynomial::var(&ring, i);
            gens.push(ui.mul(&ui).expect("same ring"));
        }
        Ok(Presentation {
            name: PresentationName::AOT,
            ring: ring.clone(),
            ideal: Ideal::new(&ring, gens),
            structure_map: base.structure_map,
        })
    }
}

/// The toric binomial ideal in k[u1,v1,...,un,vn]:
/// prod_{C+} u_i prod_{C-} v_j - prod_{C+} v_i prod_{C-} u_j per circuit.
pub fn build_toric_i1(config: &VectorConfig) -> Result<Presentation> {
    let n = config.n();
    let ring = toric_ring(n);
    let u = |i: usize| Polynomial::var(&ring, 2 * i);
    let v = |i: usize| Polynomial::var(&ring, 2 * i + 1);
    let mut gens = Vec::new();
    for sc in config.signed_circuits()? {
        let a = prod(
            &ring,
            sc.plus.iter().map(|&i| u(i)).chain(sc.minus.iter().map(|&j| v(j))),
        );
        let b = prod(
            &ring,
            sc.plus.iter().map(|&i| v(i)).chain(sc.minus.iter().map(|&j| u(j))),
        );
        gens.push(a.sub(&b).expect("same ring"));
    }
    Ok(Presentation {
        name: PresentationName::ToricI1,
        ring: ring.clone(),
        ideal: Ideal::new(&ring, gens),
        structure_map: Vec::new(),
    })
}

/// All independent subsets of [n], sorted by (size, lex).
pub fn independent_sets(config: &VectorConfig) -> Vec<Vec<usize>> {
    crate::matroid::all_subsets(config.n())
        .into_iter()
        .filter(|s| config.is_independent(s))
        .collect()
}

/// W-module generators: u_S f_C over pairs with S disjoint from C and
/// S ∪ Cbar independent; circuit-major, then S lexicographic.
pub fn build_w_generators(config: &VectorConfig, with_hbar: bool) -> Result<Vec<Polynomial>> {
    let n = config.n();
    let ring = if with_hbar { uh_ring(n) } else { u_ring(n) };
    let mut out = Vec::new();
    for sc in oriented_circuits(config)? {
        let f = if with_hbar {
            f_c(&ring, &sc)
        } else {
            f_c0(&ring, &sc)
        };
        let broken = sc.broken();
        let mut sets: Vec<Vec<usize>> = crate::matroid::all_subsets(n)
            .into_iter()
            .filter(|s| {
                s.iter().all(|i| !sc.circuit.contains(i)) && {
                    let mut union = s.clone();
                    union.extend(broken.iter().copied());
                    union.sort_unstable();
                    config.is_independent(&union)
                }
            })
            .collect();
        sets.sort();
        for s in sets {
            out.push(u_s(&ring, &s).mul(&f).expect("same ring"));
        }
    }
    Ok(out)
}
