//! The theorem-checking pipeline: per-degree construction of the graded
//! map psi from the cohomology presentation to its q=1 quotient, kernel
//! identification against the W-module, Hilbert-series identities,
//! universal-Gröbner and flatness checks, spanning theorems, and the
//! built-in golden example.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebras::{
    build_aot, build_j0, build_ot, build_oth, build_qh, build_sr, build_toric_i1,
    build_w_generators, f_c0, f_c0_general, independent_sets, structure_forms, u_ring, u_s,
    uh_ring, Presentation,
};
use crate::error::{Error, Result};
use crate::groebner::{
    all_s_polynomials_reduce, buchberger, graded_piece_basis, hilbert_series_quotient,
    ideal_equal, kernel_by_elimination, krull_dimension, normal_form, saturation,
    GroebnerBasis, ORACLE_MAX_N,
};
use crate::linalg::QMatrix;
use crate::matroid::{ComplexKind, VectorConfig};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, VarSet};

/// One per-degree slice of the graded map.
#[derive(Debug, Clone)]
pub struct PsiDegree {
    pub degree: u32,
    pub source_basis: Vec<Monomial>,
    pub target_basis: Vec<Monomial>,
    /// Rows indexed by the target basis, columns by the source basis.
    pub matrix: Vec<Vec<BigRational>>,
}

impl PsiDegree {
    pub fn rank(&self) -> usize {
        if self.matrix.is_empty() || self.source_basis.is_empty() {
            return 0;
        }
        QMatrix::from_rows(self.matrix.clone()).rank()
    }

    pub fn kernel_dimension(&self) -> usize {
        self.source_basis.len() - self.rank()
    }

    /// Image coordinates of a source coordinate vector.
    pub fn apply(&self, x: &[BigRational]) -> Vec<BigRational> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// The graded map between the cohomology presentation (source, ideal J0)
/// and its q=1 quotient (target, ideal J1'), one exact matrix per degree.
#[derive(Debug, Clone)]
pub struct GradedMap {
    pub degree_bound: u32,
    pub source: Presentation,
    pub target: Presentation,
    pub gb_source: GroebnerBasis,
    pub gb_target: GroebnerBasis,
    pub degrees: Vec<PsiDegree>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Wall time; excluded from JSON so reports are run-to-run identical.
    #[serde(skip)]
    pub millis: u128,
}

impl CheckResult {
    pub fn pass(name: &str) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            status: "pass".to_string(),
            degrees: None,
            witness: None,
            millis: 0,
        }
    }

    pub fn fail(name: &str, witness: String) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            status: "fail".to_string(),
            degrees: None,
            witness: Some(witness),
            millis: 0,
        }
    }

    pub fn with_degrees(mut self, degrees: Vec<u32>) -> CheckResult {
        self.degrees = Some(degrees);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub config: VectorConfig,
    pub checks: Vec<CheckResult>,
    pub series: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn new(config: &VectorConfig) -> VerificationReport {
        VerificationReport {
            config: config.clone(),
            checks: Vec::new(),
            series: BTreeMap::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.series.extend(other.series);
    }
}

/// Default per-degree cutoff: two layers of generator interactions.
pub fn default_degree_bound(config: &VectorConfig) -> u32 {
    2 * (config.d() as u32 + 1)
}

fn deglex_uh(n: usize) -> MonomialOrder {
    MonomialOrder::deglex(n + 1)
}

/// All products of the given degree of homogeneous degree-1 generators
/// (non-decreasing index, so each multiset appears once).
fn products_of_degree(gens: &[Polynomial], ring: &Arc<VarSet>, deg: u32) -> Vec<Polynomial> {
    fn rec(
        gens: &[Polynomial],
        start: usize,
        remaining: u32,
        cur: &Polynomial,
        out: &mut Vec<Polynomial>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for k in start..gens.len() {
            let next = cur.mul(&gens[k]).expect("same ring");
            rec(gens, k, remaining - 1, &next, out);
        }
    }
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut out = Vec::new();
    rec(&gens, 0, deg, &Polynomial::one(ring), &mut out);
    out
}

fn basis_index(basis: &[Monomial]) -> BTreeMap<Monomial, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect()
}

/// Coordinates of a normal form in a standard-monomial basis.
fn coords(p: &Polynomial, index: &BTreeMap<Monomial, usize>, dim: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); dim];
    for (m, c) in p.terms() {
        let i = *index
            .get(m)
            .expect("normal form supported on standard monomials");
        v[i] = c.clone();
    }
    v
}

fn is_zero_vec(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// The degree-1 module generators of the spanning family: the structure
/// forms, plus h when the ring contains it.
fn module_generators(config: &VectorConfig, ring: &Arc<VarSet>) -> Vec<Polynomial> {
    let mut gens = structure_forms(config, ring);
    if let Ok(h) = Polynomial::var_named(ring, "h") {
        gens.push(h);
    }
    gens
}

/// Constructs the graded map psi through `degree_bound`: the unique
/// module-linear map with psi(u_S) = u_S for independent S.  Per degree,
/// the independent-monomial family is checked to span the source, every
/// syzygy of the family is checked to map to zero in the target, and the
/// matrix is assembled in standard-monomial coordinates.
pub fn build_psi(config: &VectorConfig, degree_bound: u32) -> Result<GradedMap> {
    let n = config.n();
    let ring = uh_ring(n);
    let order = deglex_uh(n);
    let source = build_j0(config)?;
    let target = build_oth(config)?;
    let gb_source = buchberger(&source.ideal, &order);
    let gb_target = buchberger(&target.ideal, &order);
    let gens = module_generators(config, &ring);
    let ind = independent_sets(config);

    let mut degrees = Vec::new();
    for d in 0..=degree_bound {
        let sb = graded_piece_basis(&gb_source, d)?;
        let tb = graded_piece_basis(&gb_target, d)?;
        let s_index = basis_index(&sb);
        let t_index = basis_index(&tb);

        // One combined reduction of [M | N] (family coordinates in the
        // source block, images in the target block) yields everything:
        // all source columns are pivots iff the family spans; a pivot in
        // the target block is a syzygy with nonzero image; and the
        // surviving rows read off the matrix directly.
        let mut rows = Vec::new();
        for s in &ind {
            if s.len() as u32 > d {
                continue;
            }
            let us = u_s(&ring, s);
            for m in products_of_degree(&gens, &ring, d - s.len() as u32) {
                let e = m.mul(&us).expect("same ring");
                let mut row = coords(&normal_form(&e, &gb_source), &s_index, sb.len());
                row.extend(coords(&normal_form(&e, &gb_target), &t_index, tb.len()));
                rows.push(row);
            }
        }
        let mut aug = QMatrix::from_rows(rows);
        let pivots = aug.rref();
        if pivots.iter().filter(|&&c| c < sb.len()).count() < sb.len() {
            return Err(Error::SpanFailure(d));
        }
        if let Some(&c) = pivots.iter().find(|&&c| c >= sb.len()) {
            let witness = tb[c - sb.len()].display(&ring).to_string();
            return Err(Error::PsiIllDefined(format!(
                "degree {d}: target coordinate {witness} survives a source syzygy"
            )));
        }
        // row j of the reduced matrix is (e_j | image of source basis j)
        let matrix: Vec<Vec<BigRational>> = (0..tb.len())
            .map(|t| {
                (0..sb.len())
                    .map(|s| aug.get(s, sb.len() + t).clone())
                    .collect()
            })
            .collect();
        degrees.push(PsiDegree {
            degree: d,
            source_basis: sb,
            target_basis: tb,
            matrix,
        });
    }

    Ok(GradedMap {
        degree_bound,
        source,
        target,
        gb_source,
        gb_target,
        degrees,
    })
}

/// dim Ker(psi_d) per internal degree, by exact matrix rank.
pub fn kernel_dimensions(map: &GradedMap) -> Vec<usize> {
    map.degrees.iter().map(|d| d.kernel_dimension()).collect()
}

/// Per-degree coordinate spans of the W-module (generated over the
/// structure forms and h by u_S f_C) inside the source standard basis.
fn w_span_rows(
    config: &VectorConfig,
    map: &GradedMap,
    degree: u32,
) -> Result<Vec<Vec<BigRational>>> {
    let ring = map.source.ring.clone();
    let gens = module_generators(config, &ring);
    let w_gens = build_w_generators(config, true)?;
    let slice = &map.degrees[degree as usize];
    let index = basis_index(&slice.source_basis);
    let mut rows = Vec::new();
    for w in &w_gens {
        let wd = w.homogeneous_degree().expect("w generator homogeneous");
        if wd > degree {
            continue;
        }
        for m in products_of_degree(&gens, &ring, degree - wd) {
            let e = m.mul(w).expect("same ring");
            rows.push(coords(
                &normal_form(&e, &map.gb_source),
                &index,
                slice.source_basis.len(),
            ));
        }
    }
    Ok(rows)
}

/// Kernel identification: W is contained in Ker(psi) degree by degree,
/// and the dimensions agree.
pub fn verify_kernel_equals_w(config: &VectorConfig, degree_bound: u32) -> Result<VerificationReport> {
    let map = build_psi(config, degree_bound)?;
    let mut report = VerificationReport::new(config);
    let degrees: Vec<u32> = (0..=degree_bound).collect();

    let mut containment = CheckResult::pass("w_contained_in_kernel").with_degrees(degrees.clone());
    let mut dims = CheckResult::pass("kernel_dims_equal_w_dims").with_degrees(degrees);
    for d in 0..=degree_bound {
        let slice = &map.degrees[d as usize];
        let rows = w_span_rows(config, &map, d)?;
        for row in &rows {
            if !is_zero_vec(&slice.apply(row)) {
                let witness = describe_vector(row, &slice.source_basis, map.source.ring.as_ref());
                containment = CheckResult::fail(
                    "w_contained_in_kernel",
                    format!("degree {d}: {witness} has nonzero image"),
                );
                break;
            }
        }
        let w_dim = if rows.is_empty() {
            0
        } else {
            QMatrix::from_rows(rows).rank()
        };
        let k_dim = slice.kernel_dimension();
        if w_dim != k_dim && dims.passed() {
            dims = CheckResult::fail(
                "kernel_dims_equal_w_dims",
                format!("degree {d}: dim W = {w_dim}, dim Ker = {k_dim}"),
            );
        }
    }
    report.checks.push(containment);
    report.checks.push(dims);
    Ok(report)
}

fn describe_vector(v: &[BigRational], basis: &[Monomial], ring: &VarSet) -> String {
    let mut parts = Vec::new();
    for (c, m) in v.iter().zip(basis) {
        if !c.is_zero() {
            parts.push(format!("{c}*{}", m.display(ring)));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// The initial-term bookkeeping behind the kernel identification: for
/// sampled products u_S f_{C,0} prod u_i^{d_i} prod (eta_j u_j -
/// eta_max u_max)^{e_j}, the deglex leading monomial is the predicted
/// broken-circuit monomial and the product stays in the span of the
/// degree-0 W-module.
pub fn verify_initial_ideal_argument(config: &VectorConfig) -> Result<VerificationReport> {
    let n = config.n();
    let ring = u_ring(n);
    let order = MonomialOrder::deglex(n);
    let mut report = VerificationReport::new(config);
    let scs = config.signed_circuits()?;
    let forms = structure_forms(config, &ring);
    let gb_sr = buchberger(&build_sr(config, false).ideal, &order);

    // degree-0 W-module generators: u_S f_{C,0} over valid pairs
    let w0: Vec<Polynomial> = build_w_generators(config, false)?;

    let mut lead_check = CheckResult::pass("initial_term_prediction");
    let mut span_check = CheckResult::pass("products_in_w0_span");
    'outer: for sc in &scs {
        let jmax = *sc.circuit.last().expect("nonempty circuit");
        let broken = sc.broken();
        let valid_s: Vec<Vec<usize>> = crate::matroid::all_subsets(n)
            .into_iter()
            .filter(|s| {
                s.iter().all(|i| !sc.circuit.contains(i)) && {
                    let mut u = s.clone();
                    u.extend(broken.iter().copied());
                    u.sort_unstable();
                    config.is_independent(&u)
                }
            })
            .collect();
        for s in &valid_s {
            // exponent samples: all 0/1 vectors over S and over the broken part
            for d_mask in 0..(1usize << s.len()) {
                for e_mask in 0..(1usize << broken.len()) {
                    let mut f = u_s(&ring, s).mul(&f_c0(&ring, sc)).expect("same ring");
                    let mut expected = u_monomial_product(s, &broken);
                    for (k, &i) in s.iter().enumerate() {
                        if d_mask & (1 << k) != 0 {
                            f = f.mul(&Polynomial::var(&ring, i)).expect("same ring");
                            expected = expected.mul(&Monomial::var(i));
                        }
                    }
                    for (k, &j) in broken.iter().enumerate() {
                        if e_mask & (1 << k) != 0 {
                            let factor = Polynomial::var(&ring, j)
                                .scale(&crate::polyring::coeff_int(sc.eta(j)))
                                .sub(
                                    &Polynomial::var(&ring, jmax)
                                        .scale(&crate::polyring::coeff_int(sc.eta(jmax))),
                                )
                                .expect("same ring");
                            f = f.mul(&factor).expect("same ring");
                            expected = expected.mul(&Monomial::var(j));
                        }
                    }
                    let lead = f.leading_monomial(&order).expect("nonzero");
                    if lead != expected {
                        lead_check = CheckResult::fail(
                            "initial_term_prediction",
                            format!(
                                "circuit {:?}, S {:?}: lead {} != {}",
                                sc.circuit,
                                s,
                                lead.display(&ring),
                                expected.display(&ring)
                            ),
                        );
                        break 'outer;
                    }
                    if !in_w0_span(&f, &w0, &forms, &ring, &gb_sr) {
                        span_check = CheckResult::fail(
                            "products_in_w0_span",
                            format!("circuit {:?}, S {:?}: {} escapes the W0 span", sc.circuit, s, f),
                        );
                        break 'outer;
                    }
                }
            }
        }
    }
    report.checks.push(lead_check);
    report.checks.push(span_check);
    Ok(report)
}

fn u_monomial_product(s: &[usize], broken: &[usize]) -> Monomial {
    let mut pairs: Vec<(usize, u32)> = s.iter().map(|&i| (i, 1)).collect();
    pairs.extend(broken.iter().map(|&j| (j, 1)));
    Monomial::from_pairs(pairs)
}

/// Membership of a homogeneous polynomial in the graded piece of the
/// module spanned by structure-form multiples of the W0 generators.
/// Everything is reduced modulo the circuit monomial ideal first: the
/// W0 module lives in the quotient by the circuit monomials, not in the
/// free polynomial ring.
fn in_w0_span(
    f: &Polynomial,
    w0: &[Polynomial],
    forms: &[Polynomial],
    ring: &Arc<VarSet>,
    gb_sr: &GroebnerBasis,
) -> bool {
    let deg = f.homogeneous_degree().expect("homogeneous product");
    let f_red = normal_form(f, gb_sr);
    if f_red.is_zero() {
        return true;
    }
    let basis = graded_piece_basis(gb_sr, deg).expect("weight-1 ring");
    let index = basis_index(&basis);
    let mut rows = Vec::new();
    for w in w0 {
        let wd = w.homogeneous_degree().expect("homogeneous generator");
        if wd > deg {
            continue;
        }
        for m in products_of_degree(forms, ring, deg - wd) {
            let prod = normal_form(&m.mul(w).expect("same ring"), gb_sr);
            rows.push(coords(&prod, &index, basis.len()));
        }
    }
    let base_rank = if rows.is_empty() {
        0
    } else {
        QMatrix::from_rows(rows.clone()).rank()
    };
    rows.push(coords(&f_red, &index, basis.len()));
    QMatrix::from_rows(rows).rank() == base_rank
}

/// Default order sample for the universal-Gröbner check: all n! lex
/// orders when n <= 6, otherwise `samples` seeded random permutations
/// under each of lex, deglex, and degrevlex; deglex and degrevlex on the
/// identity are always included.
pub fn default_orders(n: usize, samples: usize, seed: u64) -> Vec<MonomialOrder> {
    let mut orders = Vec::new();
    if n <= 6 {
        permutations(n, &mut orders);
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            orders.push(MonomialOrder::lex_perm(perm.clone()));
            orders.push(MonomialOrder::deglex_perm(perm.clone()));
            orders.push(MonomialOrder::degrevlex_perm(perm));
        }
    }
    orders.push(MonomialOrder::deglex(n));
    orders.push(MonomialOrder::degrevlex(n));
    orders
}

fn permutations(n: usize, out: &mut Vec<MonomialOrder>) {
    let mut perm: Vec<usize> = (0..n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<MonomialOrder>) {
        if k <= 1 {
            out.push(MonomialOrder::lex_perm(perm.clone()));
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, out);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut perm, out);
}

/// The circuit forms f_{C,0} are a Gröbner basis of their ideal under
/// every sampled order (no S-polynomial survives reduction), and for
/// small n the ideal agrees with the elimination oracle.
pub fn verify_universal_groebner(
    config: &VectorConfig,
    orders: &[MonomialOrder],
) -> Result<VerificationReport> {
    let ot = build_ot(config)?;
    let mut report = VerificationReport::new(config);
    let gens = ot.ideal.generators();

    let mut gb_check = CheckResult::pass("circuit_forms_universal_groebner");
    for (k, order) in orders.iter().enumerate() {
        if let Some(((i, j), r)) = all_s_polynomials_reduce(gens, order) {
            gb_check = CheckResult::fail(
                "circuit_forms_universal_groebner",
                format!("order #{k}: S({i},{j}) reduces to {r}"),
            );
            break;
        }
    }
    report.checks.push(gb_check);

    if config.n() <= ORACLE_MAX_N {
        let (oracle, _) = kernel_by_elimination(config)?;
        let same = ideal_equal(&ot.ideal, &oracle);
        report.checks.push(if same {
            CheckResult::pass("circuit_ideal_equals_elimination_oracle")
        } else {
            CheckResult::fail(
                "circuit_ideal_equals_elimination_oracle",
                "reduced bases differ".to_string(),
            )
        });
    }
    Ok(report)
}

/// Flatness over k[h]: the deformed ideal is h-saturated and its Hilbert
/// series is the undeformed series divided by (1-t); likewise for the
/// Artinian variants.
pub fn verify_flatness(config: &VectorConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(config);
    let oth = build_oth(config)?;
    let ot = build_ot(config)?;
    let aoth = build_aot(config, true)?;
    let aot = build_aot(config, false)?;
    let h = Polynomial::var_named(&oth.ring, "h").unwrap();

    for (name, deformed, plain) in [
        ("oth", &oth, &ot),
        ("aoth", &aoth, &aot),
    ] {
        let sat = saturation(&deformed.ideal, &h);
        report.checks.push(if ideal_equal(&sat, &deformed.ideal) {
            CheckResult::pass(&format!("{name}_h_saturated"))
        } else {
            CheckResult::fail(
                &format!("{name}_h_saturated"),
                format!("saturation adds {} generators", sat.generators().len()),
            )
        });

        let order_big = deglex_uh(config.n());
        let order_small = MonomialOrder::deglex(config.n());
        let hs_def = hilbert_series_quotient(&deformed.ideal, &order_big)?;
        let hs_plain = hilbert_series_quotient(&plain.ideal, &order_small)?;
        let expected = hs_plain.shift_denominator();
        report.series.insert(
            format!("{}", label_of(name, true)),
            hs_def.display(),
        );
        report.series.insert(
            format!("{}", label_of(name, false)),
            hs_plain.display(),
        );
        report.checks.push(if hs_def == expected {
            CheckResult::pass(&format!("hilb_{name}_is_undeformed_over_1mt"))
        } else {
            CheckResult::fail(
                &format!("hilb_{name}_is_undeformed_over_1mt"),
                format!("{} != {}", hs_def.display(), expected.display()),
            )
        });
    }
    Ok(report)
}

fn label_of(name: &str, deformed: bool) -> String {
    match (name, deformed) {
        ("oth", true) => "OTh".to_string(),
        ("oth", false) => "OT".to_string(),
        ("aoth", true) => "AOTh".to_string(),
        ("aoth", false) => "AOT".to_string(),
        _ => name.to_string(),
    }
}

/// Hilbert-series identities against the combinatorial h-vectors.
pub fn verify_hilbert_identities(config: &VectorConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(config);
    let n = config.n();
    let d = config.d();
    let order_u = MonomialOrder::deglex(n);
    let order_uh = deglex_uh(n);

    let h_bc = config.complex_summary(ComplexKind::BrokenCircuit).h_vector;
    let h_ind = config.complex_summary(ComplexKind::Independence).h_vector;
    let series_bc = crate::groebner::HilbertSeries::new(
        h_bc.iter().map(|&x| x.into()).collect(),
        d,
    );
    let series_ind = crate::groebner::HilbertSeries::new(
        h_ind.iter().map(|&x| x.into()).collect(),
        d,
    );

    let ot = build_ot(config)?;
    let hs_ot = hilbert_series_quotient(&ot.ideal, &order_u)?;
    report.series.insert("OT".to_string(), hs_ot.display());
    report.checks.push(if hs_ot == series_bc {
        CheckResult::pass("hilb_ot_is_broken_circuit_h_poly")
    } else {
        CheckResult::fail(
            "hilb_ot_is_broken_circuit_h_poly",
            format!("{} != {}", hs_ot.display(), series_bc.display()),
        )
    });

    let sr_bc = build_sr(config, true);
    let hs_sr_bc = hilbert_series_quotient(&sr_bc.ideal, &order_u)?;
    report.series.insert("SRbc".to_string(), hs_sr_bc.display());
    report.checks.push(if hs_sr_bc == series_bc {
        CheckResult::pass("hilb_sr_bc_is_broken_circuit_h_poly")
    } else {
        CheckResult::fail(
            "hilb_sr_bc_is_broken_circuit_h_poly",
            format!("{} != {}", hs_sr_bc.display(), series_bc.display()),
        )
    });

    let sr_ind = build_sr(config, false);
    let hs_sr_ind = hilbert_series_quotient(&sr_ind.ideal, &order_u)?;
    report
        .series
        .insert("SRind".to_string(), hs_sr_ind.display());
    report.checks.push(if hs_sr_ind == series_ind {
        CheckResult::pass("hilb_sr_ind_is_independence_h_poly")
    } else {
        CheckResult::fail(
            "hilb_sr_ind_is_independence_h_poly",
            format!("{} != {}", hs_sr_ind.display(), series_ind.display()),
        )
    });

    let j0 = build_j0(config)?;
    let hs_j0 = hilbert_series_quotient(&j0.ideal, &order_uh)?;
    report.series.insert("H".to_string(), hs_j0.display());
    let expected = hs_sr_ind.shift_denominator();
    report.checks.push(if hs_j0 == expected {
        CheckResult::pass("hilb_h_is_sr_ind_over_1mt")
    } else {
        CheckResult::fail(
            "hilb_h_is_sr_ind_over_1mt",
            format!("{} != {}", hs_j0.display(), expected.display()),
        )
    });
    Ok(report)
}

/// Spanning theorems: in each quotient (OT, SR rings, the deformed
/// quotient, the cohomology quotient), the independent monomials u_S
/// together with structure-form (and h) multiples span every graded
/// piece up to the bound.
pub fn verify_monomial_span(config: &VectorConfig, degree_bound: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(config);
    let n = config.n();
    let ind = independent_sets(config);

    let presentations: Vec<(String, Presentation)> = vec![
        ("OT".to_string(), build_ot(config)?),
        ("SRind".to_string(), build_sr(config, false)),
        ("SRbc".to_string(), build_sr(config, true)),
        ("Rprime".to_string(), build_oth(config)?),
        ("H".to_string(), build_j0(config)?),
    ];

    for (label, pres) in presentations {
        let order = if pres.ring.len() == n {
            MonomialOrder::deglex(n)
        } else {
            deglex_uh(n)
        };
        let gb = buchberger(&pres.ideal, &order);
        let gens = module_generators(config, &pres.ring);
        let mut failed = None;
        for d in 0..=degree_bound {
            let basis = graded_piece_basis(&gb, d)?;
            let index = basis_index(&basis);
            let mut rows = Vec::new();
            for s in &ind {
                if s.len() as u32 > d {
                    continue;
                }
                let us = u_s(&pres.ring, s);
                for m in products_of_degree(&gens, &pres.ring, d - s.len() as u32) {
                    let e = m.mul(&us).expect("same ring");
                    rows.push(coords(&normal_form(&e, &gb), &index, basis.len()));
                }
            }
            let rank = if rows.is_empty() {
                0
            } else {
                QMatrix::from_rows(rows).rank()
            };
            if rank < basis.len() {
                failed = Some(d);
                break;
            }
        }
        let name = format!("monomial_span_{label}");
        report.checks.push(match failed {
            None => CheckResult::pass(&name).with_degrees((0..=degree_bound).collect()),
            Some(d) => CheckResult::fail(&name, format!("span failure at degree {d}")),
        });
    }
    Ok(report)
}

/// Built-in golden example: the cotangent bundle of the projective line,
/// realized by the configuration {1, -1} in rank 1.
pub fn tp1_config() -> VectorConfig {
    VectorConfig::new(1, vec![vec![1], vec![-1]], Some(vec![0, -1])).expect("valid")
}

/// Built-in example: the triangle configuration {e1, e2, e1+e2}.
pub fn triangle_config() -> VectorConfig {
    VectorConfig::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![1, 1]],
        Some(vec![0, 0, 1]),
    )
    .expect("valid")
}

/// Built-in example: a 4-vector rank-2 unimodular configuration with a
/// parallel pair.
pub fn square_config() -> VectorConfig {
    VectorConfig::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![0, -1]],
        Some(vec![0, 0, 1, 3]),
    )
    .expect("valid")
}

/// Golden checks for the built-in rank-1 example: exact presentation
/// match and the kernel/W dimension count through degree 4.
pub fn verify_tp1() -> Result<VerificationReport> {
    let config = tp1_config();
    let mut report = VerificationReport::new(&config);

    let j0 = build_j0(&config)?;
    let j0_ok = j0
        .ideal
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        == vec!["u1*u2".to_string()];
    report.checks.push(if j0_ok {
        CheckResult::pass("tp1_j0_presentation")
    } else {
        CheckResult::fail("tp1_j0_presentation", format!("{:?}", j0.ideal.generators()))
    });

    let qh = build_qh(&config)?;
    let one = Polynomial::one(&qh.ring);
    let mut g = qh.ideal.generators()[0].clone();
    g = g.substitute("q1", &one)?.substitute("qb1", &one)?;
    let expect = crate::polyring::parse_polynomial(&qh.ring, "u1*h + u2*h - h^2")?;
    let qh_ok = g == expect || g == expect.neg();
    report.checks.push(if qh_ok {
        CheckResult::pass("tp1_qh_q1_specialization")
    } else {
        CheckResult::fail("tp1_qh_q1_specialization", g.to_string())
    });

    let oth = build_oth(&config)?;
    let gen = &oth.ideal.generators()[0];
    let expect = crate::polyring::parse_polynomial(&oth.ring, "u1 + u2 - h")?;
    let oth_ok = *gen == expect || *gen == expect.neg();
    report.checks.push(if oth_ok {
        CheckResult::pass("tp1_j1prime_presentation")
    } else {
        CheckResult::fail("tp1_j1prime_presentation", gen.to_string())
    });

    let kernel = verify_kernel_equals_w(&config, 4)?;
    report.merge(kernel);
    let map = build_psi(&config, 4)?;
    let dims = kernel_dimensions(&map);
    report.checks.push(if dims == vec![0, 1, 2, 3, 4] {
        CheckResult::pass("tp1_kernel_dimension_count").with_degrees((0..=4).collect())
    } else {
        CheckResult::fail("tp1_kernel_dimension_count", format!("{dims:?}"))
    });
    Ok(report)
}

/// The toric binomial quotient has Krull dimension d + n.
pub fn verify_toric_dimension(config: &VectorConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(config);
    let toric = build_toric_i1(config)?;
    let order = MonomialOrder::degrevlex(toric.ring.len());
    let dim = krull_dimension(&toric.ideal, &order);
    let expected = config.d() + config.n();
    report.checks.push(if dim == expected {
        CheckResult::pass("toric_dimension")
    } else {
        CheckResult::fail(
            "toric_dimension",
            format!("krull dimension {dim}, expected {expected}"),
        )
    });
    Ok(report)
}

/// Options for the combined run.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_degree: Option<u32>,
    pub order_samples: usize,
    pub seed: u64,
    pub skip: Vec<String>,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            max_degree: None,
            order_samples: 20,
            seed: 0,
            skip: Vec::new(),
        }
    }
}

pub const CHECK_NAMES: &[&str] = &[
    "kernel",
    "initial-ideal",
    "universal-groebner",
    "flatness",
    "hilbert",
    "monomial-span",
    "toric-dimension",
];

/// Runs every check concurrently and assembles the report in a fixed
/// order; timings are recorded per check group.
pub fn verify_all(config: &VectorConfig, opts: &VerifyOptions) -> Result<VerificationReport> {
    let bound = opts.max_degree.unwrap_or_else(|| default_degree_bound(config));
    let orders = default_orders(config.n(), opts.order_samples, opts.seed);
    let enabled = |name: &str| !opts.skip.iter().any(|s| s == name);

    type Job<'a> = (&'a str, Box<dyn FnOnce() -> Result<VerificationReport> + Send + 'a>);
    let mut jobs: Vec<Job> = Vec::new();
    if enabled("kernel") {
        jobs.push(("kernel", Box::new(move || verify_kernel_equals_w(config, bound))));
    }
    if enabled("initial-ideal") {
        jobs.push(("initial-ideal", Box::new(move || verify_initial_ideal_argument(config))));
    }
    if enabled("universal-groebner") {
        let orders = orders.clone();
        jobs.push((
            "universal-groebner",
            Box::new(move || verify_universal_groebner(config, &orders)),
        ));
    }
    if enabled("flatness") {
        jobs.push(("flatness", Box::new(move || verify_flatness(config))));
    }
    if enabled("hilbert") {
        jobs.push(("hilbert", Box::new(move || verify_hilbert_identities(config))));
    }
    if enabled("monomial-span") {
        jobs.push(("monomial-span", Box::new(move || verify_monomial_span(config, bound))));
    }
    if enabled("toric-dimension") {
        jobs.push(("toric-dimension", Box::new(move || verify_toric_dimension(config))));
    }

    let results: Vec<Result<(VerificationReport, u128)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .into_iter()
            .map(|(_, job)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    job().map(|r| (r, start.elapsed().as_millis()))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });

    let mut report = VerificationReport::new(config);
    for result in results {
        match result {
            Ok((mut sub, millis)) => {
                for c in &mut sub.checks {
                    c.millis = millis;
                }
                report.merge(sub);
            }
            Err(e) => report
                .checks
                .push(CheckResult::fail("check_error", e.to_string())),
        }
    }
    Ok(report)
}

/// General circuit forms for possibly non-unimodular configurations, as
/// used by the universal-Gröbner acceptance example.
pub fn circuit_forms_general(config: &VectorConfig) -> Vec<Polynomial> {
    let ring = u_ring(config.n());
    config
        .circuits()
        .iter()
        .map(|c| f_c0_general(config, &ring, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{ideal_membership, Ideal};
    use num_traits::One;

    fn config_d() -> VectorConfig {
        VectorConfig::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1]],
            None,
        )
        .unwrap()
    }

    fn basis2() -> VectorConfig {
        VectorConfig::new(2, vec![vec![1, 0], vec![0, 1]], Some(vec![0, 0])).unwrap()
    }

    #[test]
    fn builtin_configs_valid() {
        for cfg in [tp1_config(), triangle_config(), square_config()] {
            let rep = cfg.validate().unwrap();
            assert!(rep.all_ok(), "{:?}", rep.violations);
        }
    }

    #[test]
    fn psi_tp1_low_degrees() {
        let map = build_psi(&tp1_config(), 3).unwrap();
        // degree 0: identity on constants
        assert_eq!(map.degrees[0].matrix, vec![vec![BigRational::one()]]);
        // degree 1: source 3-dimensional? no — J0 has no degree-1 part,
        // so H_1 is all of {u1, u2, h}; R'_1 is 2-dimensional
        assert_eq!(map.degrees[1].source_basis.len(), 3);
        assert_eq!(map.degrees[1].target_basis.len(), 2);
        assert_eq!(map.degrees[1].kernel_dimension(), 1);
    }

    #[test]
    fn kernel_dims_tp1() {
        let map = build_psi(&tp1_config(), 3).unwrap();
        assert_eq!(kernel_dimensions(&map), vec![0, 1, 2, 3]);
    }

    #[test]
    fn kernel_dims_basis_config() {
        let map = build_psi(&basis2(), 3).unwrap();
        assert_eq!(kernel_dimensions(&map), vec![0, 0, 0, 0]);
    }

    #[test]
    fn kernel_dims_triangle_degree0() {
        let map = build_psi(&triangle_config(), 1).unwrap();
        assert_eq!(map.degrees[0].kernel_dimension(), 0);
    }

    #[test]
    fn kernel_equals_w_tp1() {
        let report = verify_kernel_equals_w(&tp1_config(), 3).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
    }

    #[test]
    fn kernel_equals_w_triangle() {
        let report = verify_kernel_equals_w(&triangle_config(), 4).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
    }

    #[test]
    fn kernel_equals_w_basis() {
        let report = verify_kernel_equals_w(&basis2(), 3).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
    }

    #[test]
    fn tp1_golden() {
        let report = verify_tp1().unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
    }

    #[test]
    fn initial_ideal_triangle() {
        let report = verify_initial_ideal_argument(&triangle_config()).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
    }

    #[test]
    fn universal_groebner_small() {
        for cfg in [tp1_config(), triangle_config(), square_config()] {
            let orders = default_orders(cfg.n(), 20, 0);
            let report = verify_universal_groebner(&cfg, &orders).unwrap();
            assert!(report.all_pass(), "{}", report.to_json());
        }
    }

    #[test]
    fn universal_groebner_general_circuits() {
        // non-unimodular 4-vector config: circuit forms with coefficient 2
        let cfg = config_d();
        let gens = circuit_forms_general(&cfg);
        assert_eq!(gens.len(), 4);
        let ring = gens[0].ring().clone();
        let ideal = Ideal::new(&ring, gens.clone());
        for order in default_orders(cfg.n(), 20, 0) {
            assert!(all_s_polynomials_reduce(&gens, &order).is_none());
        }
        // elimination-oracle cross-check
        let (oracle, gb) = kernel_by_elimination(&cfg).unwrap();
        assert!(ideal_equal(&ideal, &oracle));
        for g in &gens {
            assert!(ideal_membership(g, &gb));
        }
    }

    #[test]
    fn flatness_tp1_and_triangle() {
        let report = verify_flatness(&tp1_config()).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
        assert_eq!(report.series["OTh"], "(1)/(1-t)^2");
        assert_eq!(report.series["OT"], "(1)/(1-t)");

        let report = verify_flatness(&triangle_config()).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
        assert_eq!(report.series["OTh"], "(1 + t)/(1-t)^3");
        assert_eq!(report.series["OT"], "(1 + t)/(1-t)^2");
    }

    #[test]
    fn artinian_dimensions_tp1() {
        // dim AOT = 2 with standard monomials {1, u1}
        let cfg = tp1_config();
        let aot = build_aot(&cfg, false).unwrap();
        let order = MonomialOrder::deglex(2);
        let hs = hilbert_series_quotient(&aot.ideal, &order).unwrap();
        assert_eq!(hs.denom_power, 0);
        let total: num_bigint::BigInt = hs.numerator.iter().sum();
        assert_eq!(total, num_bigint::BigInt::from(2));
    }

    #[test]
    fn hilbert_identities_examples() {
        let report = verify_hilbert_identities(&triangle_config()).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
        assert_eq!(report.series["OT"], "(1 + t)/(1-t)^2");
        assert_eq!(report.series["SRind"], "(1 + t + t^2)/(1-t)^2");

        let report = verify_hilbert_identities(&tp1_config()).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
        assert_eq!(report.series["OT"], "(1)/(1-t)");
    }

    #[test]
    fn monomial_span_examples() {
        for cfg in [tp1_config(), triangle_config(), basis2()] {
            let report = verify_monomial_span(&cfg, 4).unwrap();
            assert!(report.all_pass(), "{}", report.to_json());
        }
    }

    #[test]
    fn toric_dimensions() {
        let report = verify_toric_dimension(&tp1_config()).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
        let report = verify_toric_dimension(&triangle_config()).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
        let report = verify_toric_dimension(&basis2()).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
    }

    #[test]
    fn verify_all_triangle() {
        let report = verify_all(&triangle_config(), &VerifyOptions::default()).unwrap();
        assert!(report.all_pass(), "{}", report.to_json());
    }

    #[test]
    fn verify_all_deterministic_json() {
        let opts = VerifyOptions::default();
        let a = verify_all(&tp1_config(), &opts).unwrap().to_json();
        let b = verify_all(&tp1_config(), &opts).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn skip_respected() {
        let mut opts = VerifyOptions::default();
        opts.skip = vec!["kernel".to_string(), "monomial-span".to_string()];
        let report = verify_all(&tp1_config(), &opts).unwrap();
        assert!(report
            .checks
            .iter()
            .all(|c| !c.name.starts_with("w_contained") && !c.name.starts_with("monomial_span")));
    }
}
