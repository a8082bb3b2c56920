//! Integer vector-configuration combinatorics: rank, circuits, signed
//! circuits, the four input assumptions, flats, and the independence and
//! broken-circuit complexes with their f/h-vectors.
//!
//! Indices are 0-based internally; human-facing output is 1-based.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{int_det, int_rank, QMatrix};

/// A configuration of n primitive integer vectors in a rank-d lattice,
/// with optional affine parameters theta.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorConfig {
    pub rank: usize,
    pub vectors: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<i64>>,
}

/// A circuit with a ±1 orientation: sum over plus minus sum over minus is 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedCircuit {
    pub circuit: Vec<usize>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl SignedCircuit {
    pub fn eta(&self, i: usize) -> i64 {
        if self.plus.contains(&i) {
            1
        } else if self.minus.contains(&i) {
            -1
        } else {
            0
        }
    }

    pub fn flipped(&self) -> SignedCircuit {
        SignedCircuit {
            circuit: self.circuit.clone(),
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Maximal element of the circuit.
    pub fn j_max(&self) -> usize {
        *self.circuit.last().unwrap()
    }

    /// The broken circuit: the circuit with its maximal element removed.
    pub fn broken(&self) -> Vec<usize> {
        let jm = self.j_max();
        self.circuit.iter().copied().filter(|&i| i != jm).collect()
    }
}

/// Result of the four assumption checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub full_rank: bool,
    pub no_coloops: bool,
    pub unimodular: bool,
    pub simple: bool,
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn all_ok(&self) -> bool {
        self.full_rank && self.no_coloops && self.unimodular && self.simple
    }
}

/// f- and h-vector of a simplicial complex on [n].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    /// f[k] = number of faces of cardinality k (f[0] = 1 for the empty face).
    pub f_vector: Vec<u64>,
    /// h-vector, trailing zeros trimmed.
    pub h_vector: Vec<i64>,
    pub ground_set: usize,
    /// Matroid rank used in the f-to-h transform.
    pub rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    Independence,
    BrokenCircuit,
}

impl VectorConfig {
    /// Validates the structural invariants: vectors nonzero and primitive,
    /// matching lengths, n >= d.
    pub fn new(rank: usize, vectors: Vec<Vec<i64>>, theta: Option<Vec<i64>>) -> Result<VectorConfig> {
        if rank == 0 {
            return Err(Error::InvalidConfig("rank must be positive".into()));
        }
        if vectors.len() < rank {
            return Err(Error::InvalidConfig(format!(
                "need at least {rank} vectors, got {}",
                vectors.len()
            )));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != rank {
                return Err(Error::InvalidConfig(format!(
                    "vector {} has length {}, expected {rank}",
                    i + 1,
                    v.len()
                )));
            }
            if v.iter().all(|&x| x == 0) {
                return Err(Error::InvalidConfig(format!("vector {} is zero", i + 1)));
            }
            let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            if g.abs() != 1 {
                return Err(Error::InvalidConfig(format!(
                    "vector {} is not primitive (gcd {})",
                    i + 1,
                    g.abs()
                )));
            }
        }
        if let Some(th) = &theta {
            if th.len() != vectors.len() {
                return Err(Error::InvalidConfig(format!(
                    "theta has length {}, expected {}",
                    th.len(),
                    vectors.len()
                )));
            }
        }
        Ok(VectorConfig {
            rank,
            vectors,
            theta,
        })
    }

    pub fn from_json(src: &str) -> Result<VectorConfig> {
        let raw: VectorConfig = serde_json::from_str(src).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })?;
        VectorConfig::new(raw.rank, raw.vectors, raw.theta)
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn d(&self) -> usize {
        self.rank
    }

    fn columns(&self, subset: &[usize]) -> Vec<Vec<BigInt>> {
        subset
            .iter()
            .map(|&i| self.vectors[i].iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Rank over Q of the selected columns.
    pub fn subset_rank(&self, subset: &[usize]) -> usize {
        int_rank(&self.columns(subset))
    }

    pub fn is_independent(&self, subset: &[usize]) -> bool {
        self.subset_rank(subset) == subset.len()
    }

    /// The four assumption checks of the input data.
    pub fn validate(&self) -> Result<ValidationReport> {
        let n = self.n();
        let d = self.d();
        let all: Vec<usize> = (0..n).collect();
        let mut violations = Vec::new();

        let full_rank = self.subset_rank(&all) == d;
        if !full_rank {
            violations.push("full_rank: vectors do not span the lattice over Q".to_string());
        }

        let mut no_coloops = true;
        for i in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            if self.subset_rank(&rest) < d {
                no_coloops = false;
                violations.push(format!("no_coloops: vector {} is a co-loop", i + 1));
            }
        }

        let mut unimodular = true;
        for subset in subsets_of_size(n, d) {
            let cols = self.columns(&subset);
            let m: Vec<Vec<BigInt>> = (0..d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
            let det = int_det(&m);
            if det.abs() > BigInt::one() {
                unimodular = false;
                violations.push(format!(
                    "unimodular: minor on {:?} has determinant {det}",
                    one_based(&subset)
                ));
            }
        }

        let theta = self.theta.as_ref().ok_or(Error::MissingTheta)?;
        let mut simple = true;
        for subset in all_subsets(n).into_iter().filter(|s| !s.is_empty()) {
            // affine system <a_i, x> = -theta_i for i in subset
            let rows: Vec<Vec<BigRational>> = subset
                .iter()
                .map(|&i| {
                    self.vectors[i]
                        .iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect();
            let m = QMatrix::from_rows(rows);
            let b: Vec<BigRational> = subset
                .iter()
                .map(|&i| BigRational::from_integer(BigInt::from(-theta[i])))
                .collect();
            if m.solve(&b).is_some() && m.rank() < subset.len() {
                simple = false;
                violations.push(format!(
                    "simple: hyperplanes {:?} meet with codim {} < {}",
                    one_based(&subset),
                    m.rank(),
                    subset.len()
                ));
            }
        }

        Ok(ValidationReport {
            full_rank,
            no_coloops,
            unimodular,
            simple,
            violations,
        })
    }

    /// As `validate`, but skips the simplicity check when theta is absent.
    pub fn validate_linear(&self) -> ValidationReport {
        match self.theta {
            Some(_) => self.validate().expect("theta present"),
            None => {
                let mut with_theta = self.clone();
                with_theta.theta = Some(vec![0; self.n()]);
                let mut rep = with_theta.validate().expect("theta present");
                rep.simple = true;
                rep.violations.retain(|v| !v.starts_with("simple:"));
                rep
            }
        }
    }

    /// All inclusion-minimal dependent subsets, sorted lexicographically.
    ///
    /// Brute force over subsets of size <= d+1; circuits of a rank-d
    /// matroid never have more elements than that.
    pub fn circuits(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let d = self.d();
        let mut found: Vec<Vec<usize>> = Vec::new();
        for size in 1..=(d + 1).min(n) {
            for subset in subsets_of_size(n, size) {
                if found.iter().any(|c| is_subset(c, &subset)) {
                    continue;
                }
                if self.subset_rank(&subset) < subset.len() {
                    found.push(subset);
                }
            }
        }
        found.sort();
        found
    }

    /// The ±1 relation on a circuit, oriented by theta when present
    /// (choose the labeling with negative affine defect), otherwise by
    /// putting min(C) in the plus part.
    pub fn signed_circuit(&self, circuit: &[usize]) -> Result<SignedCircuit> {
        let mut c = circuit.to_vec();
        c.sort_unstable();
        let cols = self.columns(&c);
        let rows: Vec<Vec<BigRational>> = (0..self.d())
            .map(|r| {
                cols.iter()
                    .map(|col| BigRational::from_integer(col[r].clone()))
                    .collect()
            })
            .collect();
        let kernel = QMatrix::from_rows(rows).kernel_basis();
        if kernel.len() != 1 {
            return Err(Error::InvalidConfig(format!(
                "{:?} is not a circuit (kernel dimension {})",
                one_based(&c),
                kernel.len()
            )));
        }
        // scale to a primitive integer vector
        let v = &kernel[0];
        let mut denom_lcm = BigInt::one();
        for x in v {
            denom_lcm = denom_lcm.lcm(x.denom());
        }
        let ints: Vec<BigInt> = v
            .iter()
            .map(|x| x.numer() * (&denom_lcm / x.denom()))
            .collect();
        let mut g = BigInt::zero();
        for x in &ints {
            g = g.gcd(x);
        }
        let ints: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
        for x in &ints {
            if x.abs() != BigInt::one() {
                return Err(Error::NotUnimodular(x.to_string()));
            }
        }
        let orient = |sign_flip: bool| -> SignedCircuit {
            let mut plus = Vec::new();
            let mut minus = Vec::new();
            for (k, &i) in c.iter().enumerate() {
                let pos = ints[k].is_positive() != sign_flip;
                if pos {
                    plus.push(i);
                } else {
                    minus.push(i);
                }
            }
            SignedCircuit {
                circuit: c.clone(),
                plus,
                minus,
            }
        };
        match &self.theta {
            Some(theta) => {
                let tau: i64 = c
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| if ints[k].is_positive() { theta[i] } else { -theta[i] })
                    .sum();
                match tau.cmp(&0) {
                    std::cmp::Ordering::Less => Ok(orient(false)),
                    std::cmp::Ordering::Greater => Ok(orient(true)),
                    std::cmp::Ordering::Equal => Err(Error::DegenerateTheta(one_based(&c))),
                }
            }
            None => {
                // min(C) is c[0]; it carries ints[0]
                Ok(orient(!ints[0].is_positive()))
            }
        }
    }

    pub fn signed_circuits(&self) -> Result<Vec<SignedCircuit>> {
        self.circuits()
            .iter()
            .map(|c| self.signed_circuit(c))
            .collect()
    }

    /// Linear-span closure of a subset.
    pub fn closure(&self, subset: &[usize]) -> Vec<usize> {
        let r = self.subset_rank(subset);
        let mut out = Vec::new();
        for i in 0..self.n() {
            if subset.contains(&i) {
                out.push(i);
                continue;
            }
            let mut with = subset.to_vec();
            with.push(i);
            if self.subset_rank(&with) == r {
                out.push(i);
            }
        }
        out.sort_unstable();
        out
    }

    /// All flats, sorted.
    pub fn flats(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut out = Vec::new();
        for s in all_subsets(n) {
            if self.closure(&s) == s {
                out.push(s);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// Broken circuits: each circuit minus its maximal element; deduplicated.
    pub fn broken_circuits(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .circuits()
            .into_iter()
            .map(|mut c| {
                c.pop();
                c
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// f/h-summary of the independence or broken-circuit complex.
    pub fn complex_summary(&self, which: ComplexKind) -> ComplexSummary {
        let n = self.n();
        let d = self.d();
        let broken = self.broken_circuits();
        let mut f = vec![0u64; n + 2];
        let mut max_card = 0usize;
        for s in all_subsets(n) {
            let is_face = match which {
                ComplexKind::Independence => self.is_independent(&s),
                ComplexKind::BrokenCircuit => !broken.iter().any(|b| is_subset(b, &s)),
            };
            if is_face {
                f[s.len()] += 1;
                max_card = max_card.max(s.len());
            }
        }
        f.truncate(max_card + 1);
        let h = f_to_h(&f, d);
        ComplexSummary {
            f_vector: f,
            h_vector: h,
            ground_set: n,
            rank: d,
        }
    }
}

/// h(t) = sum_i f[i] t^i (1-t)^(d-i), trailing zeros trimmed.
pub fn f_to_h(f: &[u64], d: usize) -> Vec<i64> {
    let mut h = vec![0i64; d + 1];
    for (i, &fi) in f.iter().enumerate() {
        // t^i (1-t)^(d-i)
        for j in 0..=(d - i) {
            let c = binom(d - i, j) * if j % 2 == 0 { 1 } else { -1 };
            h[i + j] += fi as i64 * c;
        }
    }
    while h.len() > 1 && *h.last().unwrap() == 0 {
        h.pop();
    }
    h
}

/// Inverse of `f_to_h`: f[i] = sum_j h[j] * C(d-j, i-j).
pub fn h_to_f(h: &[i64], d: usize) -> Vec<u64> {
    let mut f = vec![0i64; d + 1];
    for (j, &hj) in h.iter().enumerate() {
        for i in j..=d {
            f[i] += hj * binom(d - j, i - j);
        }
    }
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f.into_iter().map(|x| x as u64).collect()
}

fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

pub fn one_based(s: &[usize]) -> Vec<usize> {
    s.iter().map(|&i| i + 1).collect()
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1u32 << n) {
        out.push((0..n).filter(|&i| mask & (1 << i) != 0).collect());
    }
    out.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// T*P^1 data: a = (1), (-1), theta = (0, -1).
    pub fn config_a() -> VectorConfig {
        VectorConfig::new(1, vec![vec![1], vec![-1]], Some(vec![0, -1])).unwrap()
    }

    /// Rank-2 triangle: (1,0), (0,1), (1,1), theta = (0,0,1).
    pub fn config_b() -> VectorConfig {
        VectorConfig::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            Some(vec![0, 0, 1]),
        )
        .unwrap()
    }

    fn basis2() -> VectorConfig {
        VectorConfig::new(2, vec![vec![1, 0], vec![0, 1]], None).unwrap()
    }

    #[test]
    fn rank_examples() {
        let b = config_b();
        assert_eq!(b.subset_rank(&[0, 1]), 2);
        assert_eq!(b.subset_rank(&[0, 1, 2]), 2);
        assert_eq!(b.subset_rank(&[]), 0);
    }

    #[test]
    fn validate_config_a() {
        let rep = config_a().validate().unwrap();
        assert!(rep.all_ok(), "{:?}", rep.violations);
    }

    #[test]
    fn primitivity_rejected() {
        assert!(matches!(
            VectorConfig::new(1, vec![vec![1], vec![2]], None),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn basis_has_coloops() {
        let rep = basis2().validate_linear();
        assert!(!rep.no_coloops);
        assert!(rep.full_rank && rep.unimodular);
    }

    #[test]
    fn simple_requires_theta() {
        assert_eq!(basis2().validate(), Err(Error::MissingTheta));
    }

    #[test]
    fn circuits_examples() {
        assert_eq!(config_a().circuits(), vec![vec![0, 1]]);
        assert_eq!(config_b().circuits(), vec![vec![0, 1, 2]]);
        assert!(basis2().circuits().is_empty());
    }

    #[test]
    fn signed_circuit_theta_rule() {
        let a = config_a();
        let sc = a.signed_circuit(&[0, 1]).unwrap();
        assert_eq!(sc.plus, vec![0, 1]);
        assert!(sc.minus.is_empty());

        let b = config_b();
        let sc = b.signed_circuit(&[0, 1, 2]).unwrap();
        assert_eq!(sc.plus, vec![0, 1]);
        assert_eq!(sc.minus, vec![2]);

        // opposite theta forces the swap
        let a2 = VectorConfig::new(1, vec![vec![1], vec![-1]], Some(vec![0, 1])).unwrap();
        let sc = a2.signed_circuit(&[0, 1]).unwrap();
        assert!(sc.plus.is_empty());
        assert_eq!(sc.minus, vec![0, 1]);
    }

    #[test]
    fn signed_circuit_relation_holds() {
        let b = config_b();
        let sc = b.signed_circuit(&[0, 1, 2]).unwrap();
        for r in 0..b.d() {
            let s: i64 = sc.plus.iter().map(|&i| b.vectors[i][r]).sum::<i64>()
                - sc.minus.iter().map(|&i| b.vectors[i][r]).sum::<i64>();
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn degenerate_theta_detected() {
        let a = VectorConfig::new(1, vec![vec![1], vec![-1]], Some(vec![0, 0])).unwrap();
        assert!(matches!(
            a.signed_circuit(&[0, 1]),
            Err(Error::DegenerateTheta(_))
        ));
    }

    #[test]
    fn closure_and_flats() {
        let b = config_b();
        assert_eq!(b.closure(&[0, 1]), vec![0, 1, 2]);
        assert_eq!(b.closure(&[2]), vec![2]);
        assert_eq!(b.closure(&[0, 1, 2]), vec![0, 1, 2]);
        assert_eq!(
            b.flats(),
            vec![vec![], vec![0], vec![1], vec![2], vec![0, 1, 2]]
        );
        // parallel vectors close up together
        let a = config_a();
        assert_eq!(a.flats(), vec![vec![], vec![0, 1]]);
        let one = VectorConfig::new(1, vec![vec![1]], None).unwrap();
        assert_eq!(one.flats(), vec![vec![], vec![0]]);
    }

    #[test]
    fn broken_circuits_examples() {
        assert_eq!(config_a().broken_circuits(), vec![vec![0]]);
        assert_eq!(config_b().broken_circuits(), vec![vec![0, 1]]);
        assert!(basis2().broken_circuits().is_empty());
    }

    #[test]
    fn complex_summaries() {
        let b = config_b();
        let bc = b.complex_summary(ComplexKind::BrokenCircuit);
        assert_eq!(bc.f_vector, vec![1, 3, 2]);
        assert_eq!(bc.h_vector, vec![1, 1]);
        let ind = b.complex_summary(ComplexKind::Independence);
        assert_eq!(ind.f_vector, vec![1, 3, 3]);
        assert_eq!(ind.h_vector, vec![1, 1, 1]);
        let a = config_a();
        let bc = a.complex_summary(ComplexKind::BrokenCircuit);
        assert_eq!(bc.f_vector, vec![1, 1]);
        assert_eq!(bc.h_vector, vec![1]);
    }

    #[test]
    fn h_f_roundtrip() {
        let b = config_b();
        for kind in [ComplexKind::Independence, ComplexKind::BrokenCircuit] {
            let s = b.complex_summary(kind);
            assert_eq!(h_to_f(&s.h_vector, b.d()), s.f_vector);
        }
    }

    #[test]
    fn json_roundtrip() {
        let src = r#"{"rank": 2, "vectors": [[1,0],[0,1],[1,1]], "theta": [0,0,1]}"#;
        let cfg = VectorConfig::from_json(src).unwrap();
        assert_eq!(cfg, config_b());
    }
}
