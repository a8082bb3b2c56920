//! Colon ideals, saturation, Krull dimension, and the elimination oracle
//! for the kernel of u_i -> 1/a_i.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matroid::VectorConfig;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, VarSet};

use super::{buchberger, GroebnerBasis, Ideal};

/// Append auxiliary variables to a ring; existing indices are preserved.
pub(crate) fn extend_ring(ring: &Arc<VarSet>, extra: &[&str]) -> Arc<VarSet> {
    let mut names: Vec<String> = ring.names().to_vec();
    let mut weights: Vec<u32> = (0..ring.len()).map(|i| ring.weight(i)).collect();
    for e in extra {
        names.push(e.to_string());
        weights.push(1);
    }
    VarSet::with_weights(names, weights)
}

/// Reinterpret a polynomial in a larger ring that shares the leading
/// variable block.
pub(crate) fn lift(p: &Polynomial, big: &Arc<VarSet>) -> Polynomial {
    let mut acc = Polynomial::zero(big);
    for (m, c) in p.terms() {
        let m2 = Monomial::from_pairs(m.iter().collect());
        acc = acc
            .add(&Polynomial::from_term(big, m2, c.clone()))
            .expect("same ring");
    }
    acc
}

/// Reinterpret in a smaller ring; the support must fit.
pub(crate) fn restrict(p: &Polynomial, small: &Arc<VarSet>) -> Polynomial {
    let mut acc = Polynomial::zero(small);
    for (m, c) in p.terms() {
        for i in m.support() {
            assert!(i < small.len(), "polynomial does not fit in the target ring");
        }
        let m2 = Monomial::from_pairs(m.iter().collect());
        acc = acc
            .add(&Polynomial::from_term(small, m2, c.clone()))
            .expect("same ring");
    }
    acc
}

/// Exact quotient g/f; `None` when f does not divide g.
fn divide_exact(g: &Polynomial, f: &Polynomial, order: &MonomialOrder) -> Option<Polynomial> {
    let ring = g.ring().clone();
    let (flm, flc) = f.leading_term(order)?;
    let mut quot = Polynomial::zero(&ring);
    let mut rem = g.clone();
    while let Some((lm, lc)) = rem.leading_term(order) {
        let q = flm.div_into(&lm)?;
        let c = &lc / &flc;
        let term = Polynomial::from_term(&ring, q, c);
        quot = quot.add(&term).expect("same ring");
        rem = rem.sub(&term.mul(f).expect("same ring")).expect("same ring");
    }
    Some(quot)
}

/// Intersection of two ideals via the auxiliary-variable trick:
/// eliminate t from t*I + (1-t)*J.
pub fn ideals_intersection(a: &Ideal, b: &Ideal) -> Ideal {
    let ring = a.ring().clone();
    assert_eq!(&ring, b.ring());
    let big = extend_ring(&ring, &["t_aux"]);
    let t = Polynomial::var(&big, big.len() - 1);
    let one_minus_t = Polynomial::one(&big).sub(&t).expect("same ring");
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(lift(g, &big).mul(&t).expect("same ring"));
    }
    for g in b.generators() {
        gens.push(lift(g, &big).mul(&one_minus_t).expect("same ring"));
    }
    let order = MonomialOrder::elimination(big.len(), &[big.len() - 1]);
    let gb = buchberger(&Ideal::new(&big, gens), &order);
    let tn = big.len() - 1;
    let kept: Vec<Polynomial> = gb
        .basis()
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.exponent(tn) == 0))
        .map(|g| restrict(g, &ring))
        .collect();
    Ideal::new(&ring, kept)
}

/// The colon ideal (I : f) = { g | g*f in I }.
pub fn colon_ideal(ideal: &Ideal, f: &Polynomial) -> Ideal {
    assert!(!f.is_zero());
    let ring = ideal.ring().clone();
    let principal = Ideal::new(&ring, vec![f.clone()]);
    let meet = ideals_intersection(ideal, &principal);
    let order = MonomialOrder::degrevlex(ring.len());
    let gens = meet
        .generators()
        .iter()
        .map(|g| divide_exact(g, f, &order).expect("intersection element divisible by f"))
        .collect();
    Ideal::new(&ring, gens)
}

/// Equality of ideals, via uniqueness of the reduced Gröbner basis.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> bool {
    if a.ring() != b.ring() {
        return false;
    }
    let order = MonomialOrder::degrevlex(a.ring().len());
    buchberger(a, &order).basis() == buchberger(b, &order).basis()
}

/// Iterate (I : f) until stable; the result is (I : f^infinity).
pub fn saturation(ideal: &Ideal, f: &Polynomial) -> Ideal {
    let mut cur = ideal.clone();
    loop {
        let next = colon_ideal(&cur, f);
        if ideal_equal(&next, &cur) {
            return cur;
        }
        cur = next;
    }
}

/// Krull dimension of ring/I: the largest number of variables meeting
/// the support of no minimal generator of the initial ideal.
pub fn krull_dimension(ideal: &Ideal, order: &MonomialOrder) -> usize {
    let m = ideal.ring().len();
    assert!(m <= 24, "dimension search is brute force over variable subsets");
    let gb = buchberger(ideal, order);
    let supports: Vec<u32> = super::initial_ideal(&gb)
        .generators()
        .iter()
        .map(|g| {
            let (mono, _) = g.terms().next().unwrap();
            mono.support().fold(0u32, |acc, i| acc | (1 << i))
        })
        .collect();
    if supports.iter().any(|&s| s == 0) {
        // 1 is in the ideal
        return 0;
    }
    let mut best = 0usize;
    for mask in 0u32..(1u32 << m) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !mask != 0) {
            best = size;
        }
    }
    best
}

pub const ORACLE_MAX_N: usize = 6;

/// Independent oracle for the Orlik-Terao kernel ideal: introduce
/// x-variables, impose u_i * a_i(x) = 1, and eliminate the x-block.
pub fn kernel_by_elimination(config: &VectorConfig) -> Result<(Ideal, GroebnerBasis)> {
    let n = config.n();
    let d = config.d();
    if n > ORACLE_MAX_N {
        return Err(Error::OracleScale(n, ORACLE_MAX_N));
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    for j in 1..=d {
        names.push(format!("x{j}"));
    }
    let big = VarSet::new(names);
    let mut gens = Vec::new();
    for (i, a) in config.vectors.iter().enumerate() {
        // u_i * a_i(x) - 1
        let mut form = Polynomial::zero(&big);
        for (j, &coef) in a.iter().enumerate() {
            let term = Polynomial::var(&big, n + j).scale(&crate::polyring::coeff_int(coef));
            form = form.add(&term).expect("same ring");
        }
        let rel = Polynomial::var(&big, i)
            .mul(&form)
            .expect("same ring")
            .sub(&Polynomial::one(&big))
            .expect("same ring");
        gens.push(rel);
    }
    let xs: Vec<usize> = (n..n + d).collect();
    let order = MonomialOrder::elimination(big.len(), &xs);
    let gb = buchberger(&Ideal::new(&big, gens), &order);
    let small = VarSet::new((1..=n).map(|i| format!("u{i}")).collect::<Vec<_>>());
    let kept: Vec<Polynomial> = gb
        .basis()
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.support().all(|i| i < n)))
        .map(|g| restrict(g, &small))
        .collect();
    let ideal = Ideal::new(&small, kept);
    let gb_small = buchberger(&ideal, &MonomialOrder::deglex(n));
    Ok((ideal, gb_small))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_membership;
    use crate::polyring::parse_polynomial;

    fn p(r: &Arc<VarSet>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn colon_examples() {
        let r = VarSet::new(vec!["u1", "u2", "h"]);
        let i = Ideal::new(&r, vec![p(&r, "h*u1")]);
        let c = colon_ideal(&i, &p(&r, "h"));
        assert!(ideal_equal(&c, &Ideal::new(&r, vec![p(&r, "u1")])));

        let i = Ideal::new(&r, vec![p(&r, "u1^2")]);
        let c = colon_ideal(&i, &p(&r, "u1"));
        assert!(ideal_equal(&c, &Ideal::new(&r, vec![p(&r, "u1")])));

        // principal linear ideal is h-regular: (I : h) = I
        let i = Ideal::new(&r, vec![p(&r, "u1 + u2 - h")]);
        let c = colon_ideal(&i, &p(&r, "h"));
        assert!(ideal_equal(&c, &i));
    }

    #[test]
    fn saturation_examples() {
        let r = VarSet::new(vec!["u1", "h"]);
        let i = Ideal::new(&r, vec![p(&r, "h^2*u1")]);
        let s = saturation(&i, &p(&r, "h"));
        assert!(ideal_equal(&s, &Ideal::new(&r, vec![p(&r, "u1")])));

        let i = Ideal::new(&r, vec![p(&r, "u1")]);
        let s = saturation(&i, &p(&r, "h"));
        assert!(ideal_equal(&s, &i));
    }

    #[test]
    fn krull_examples() {
        // <u1*u2 - v1*v2> in 4 variables has dimension 3
        let r = VarSet::new(vec!["u1", "v1", "u2", "v2"]);
        let i = Ideal::new(&r, vec![p(&r, "u1*u2 - v1*v2")]);
        assert_eq!(krull_dimension(&i, &MonomialOrder::degrevlex(4)), 3);

        let r3 = VarSet::new(vec!["u1", "u2", "u3"]);
        assert_eq!(
            krull_dimension(&Ideal::new(&r3, vec![]), &MonomialOrder::degrevlex(3)),
            3
        );
        let maximal = Ideal::new(&r3, vec![p(&r3, "u1"), p(&r3, "u2"), p(&r3, "u3")]);
        assert_eq!(krull_dimension(&maximal, &MonomialOrder::degrevlex(3)), 0);
    }

    #[test]
    fn kernel_oracle_tp1() {
        let cfg = VectorConfig::new(1, vec![vec![1], vec![-1]], None).unwrap();
        let (ideal, gb) = kernel_by_elimination(&cfg).unwrap();
        let r = ideal.ring().clone();
        assert!(ideal_membership(&p(&r, "u1 + u2"), &gb));
        assert!(ideal_equal(
            &ideal,
            &Ideal::new(&r, vec![p(&r, "u1 + u2")])
        ));
    }

    #[test]
    fn kernel_oracle_triangle() {
        let cfg =
            VectorConfig::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 1]], None).unwrap();
        let (ideal, gb) = kernel_by_elimination(&cfg).unwrap();
        let r = ideal.ring().clone();
        let f = p(&r, "u2*u3 + u1*u3 - u1*u2");
        assert!(ideal_membership(&f, &gb));
        assert!(ideal_equal(&ideal, &Ideal::new(&r, vec![f])));
    }

    #[test]
    fn kernel_oracle_basis_config() {
        let cfg = VectorConfig::new(2, vec![vec![1, 0], vec![0, 1]], None).unwrap();
        let (ideal, _) = kernel_by_elimination(&cfg).unwrap();
        assert!(ideal.is_zero());
    }

    #[test]
    fn oracle_scale_enforced() {
        let vs: Vec<Vec<i64>> = (0..7).map(|i| vec![1, i]).collect();
        let cfg = VectorConfig::new(2, vs, None).unwrap();
        assert!(matches!(
            kernel_by_elimination(&cfg),
            Err(Error::OracleScale(7, 6))
        ));
    }
}
