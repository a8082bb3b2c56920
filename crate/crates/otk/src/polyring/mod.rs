//! Exact sparse multivariate polynomial arithmetic over the rationals,
//! with pluggable monomial orders and an integer grading on the variables.

mod order;
mod parse;

pub use order::{MonomialOrder, OrderKind};
pub use parse::parse_polynomial;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient; always reduced, denominator positive.
pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_frac(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// An ordered set of variables with a non-negative integer weight each.
///
/// The default weight is 1.  Weight 0 is used for quantum variables,
/// which do not contribute to the grading.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Arc<VarSet> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights = vec![1; names.len()];
        VarSet::with_weights(names, weights)
    }

    pub fn with_weights(names: Vec<String>, weights: Vec<u32>) -> Arc<VarSet> {
        assert_eq!(names.len(), weights.len());
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            assert!(seen.insert(n.clone()), "duplicate variable name `{n}`");
        }
        Arc::new(VarSet { names, weights })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A monomial: sparse exponent vector, no zero exponents stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    /// (variable index, exponent), sorted by index, exponents > 0.
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn var(i: usize) -> Monomial {
        Monomial { exps: vec![(i, 1)] }
    }

    pub fn from_pairs(mut pairs: Vec<(usize, u32)>) -> Monomial {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(i, _)| i);
        for w in pairs.windows(2) {
            assert!(w[0].0 < w[1].0, "repeated variable index in monomial");
        }
        Monomial { exps: pairs }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .iter()
            .find(|&&(i, _)| i == var)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().map(|&(i, _)| i)
    }

    /// Plain total degree (sum of exponents).
    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    /// Weighted degree against the grading of `ring`.
    pub fn weighted_degree(&self, ring: &VarSet) -> u32 {
        self.exps.iter().map(|&(i, e)| ring.weight(i) * e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Less => {
                        out.push((i, e));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((j, f));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((i, e + f));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&(i, e)), None) => {
                    out.push((i, e));
                    a.next();
                }
                (None, Some(&&(j, f))) => {
                    out.push((j, f));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(i, e)| other.exponent(i) >= e)
    }

    /// other / self, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = Vec::new();
        for &(i, e) in &other.exps {
            let q = e - self.exponent(i);
            if q > 0 {
                out.push((i, q));
            }
        }
        Some(Monomial { exps: out })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out: BTreeMap<usize, u32> = self.exps.iter().copied().collect();
        for &(i, e) in &other.exps {
            let v = out.entry(i).or_insert(0);
            *v = (*v).max(e);
        }
        Monomial {
            exps: out.into_iter().collect(),
        }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(i, _)| other.exponent(i) == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(i, e)| (i, e * k)).collect(),
        }
    }

    pub fn display<'a>(&'a self, ring: &'a VarSet) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, ring }
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ring: &'a VarSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.m.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with exact rational coefficients over a shared `VarSet`.
///
/// Invariants: no zero coefficients stored; term storage is a `BTreeMap`
/// under the structural monomial order, so identical inputs always print
/// and hash identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<VarSet>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<VarSet>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<VarSet>) -> Polynomial {
        Polynomial::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Arc<VarSet>, c: Coeff) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<VarSet>, i: usize) -> Polynomial {
        Polynomial::from_term(ring, Monomial::var(i), Coeff::one())
    }

    pub fn var_named(ring: &Arc<VarSet>, name: &str) -> Result<Polynomial> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(ring, i))
    }

    pub fn from_term(ring: &Arc<VarSet>, m: Monomial, c: Coeff) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<VarSet>, m: Monomial) -> Polynomial {
        Polynomial::from_term(ring, m, Coeff::one())
    }

    pub fn ring(&self) -> &Arc<VarSet> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::VarSetMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                add_term(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        self.mul_monomial(m).scale(c)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Replace every occurrence of `var` by `value`, expanded.
    pub fn substitute(&self, var: &str, value: &Polynomial) -> Result<Polynomial> {
        self.check_ring(value)?;
        let idx = self
            .ring
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(idx);
            let rest = Monomial::from_pairs(m.iter().filter(|&(i, _)| i != idx).collect());
            let term = value.pow(e).mul_term(&rest, c);
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Exact division by a single variable; errors if some term lacks it.
    pub fn divide_exact_by_var(&self, var: &str) -> Result<Polynomial> {
        let idx = self
            .ring
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let v = Monomial::var(idx);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            match v.div_into(m) {
                Some(q) => {
                    terms.insert(q, c.clone());
                }
                None => {
                    return Err(Error::NotDivisible(
                        m.display(&self.ring).to_string(),
                        var.to_string(),
                    ))
                }
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Weighted degree of the polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(&self.ring))
            .max()
    }

    /// `Some(d)` iff nonzero and every term has weighted degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(&self.ring));
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Leading (monomial, coefficient) under `order`; `None` when zero.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Monomial, Coeff)> {
        self.terms
            .iter()
            .max_by(|(m1, _), (m2, _)| order.compare(m1, m2))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scale so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&(Coeff::one() / c)),
            None => self.clone(),
        }
    }

    /// Terms sorted descending under degrevlex with identity priority;
    /// the canonical display order.
    fn display_terms(&self) -> Vec<(&Monomial, &Coeff)> {
        let order = MonomialOrder::degrevlex(self.ring.len());
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(m1, _), (m2, _)| order.compare(m2, m1));
        ts
    }
}

fn add_term(terms: &mut BTreeMap<Monomial, Coeff>, m: Monomial, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

fn fmt_coeff_abs(c: &Coeff) -> String {
    let a = c.abs();
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ca = fmt_coeff_abs(c);
            if m.is_one() {
                write!(f, "{ca}")?;
            } else if ca == "1" {
                write!(f, "{}", m.display(&self.ring))?;
            } else {
                write!(f, "{ca}*{}", m.display(&self.ring))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> Arc<VarSet> {
        VarSet::new(vec!["u1", "u2", "h"])
    }

    fn p(r: &Arc<VarSet>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn add_cancellation() {
        let r = ring3();
        assert_eq!(p(&r, "u1 + u2").add(&p(&r, "-u2")).unwrap(), p(&r, "u1"));
        let q = p(&r, "u1*u2 - h");
        assert_eq!(q.add(&Polynomial::zero(&r)).unwrap(), q);
        assert_eq!(
            p(&r, "u1 + u2 - h").add(&p(&r, "u1*u2")).unwrap(),
            p(&r, "u1*u2 + u1 + u2 - h")
        );
    }

    #[test]
    fn mul_binomials() {
        let r = ring3();
        assert_eq!(
            p(&r, "u1 - h").mul(&p(&r, "u2 - h")).unwrap(),
            p(&r, "u1*u2 - h*u1 - h*u2 + h^2")
        );
        let q = p(&r, "u1 + 2/3*h");
        assert_eq!(q.mul(&Polynomial::one(&r)).unwrap(), q);
        assert_eq!(p(&r, "u1*u2").mul(&p(&r, "h")).unwrap(), p(&r, "u1*u2*h"));
    }

    #[test]
    fn mismatched_ring_rejected() {
        let r = ring3();
        let s = VarSet::new(vec!["x"]);
        assert_eq!(
            p(&r, "u1").add(&Polynomial::var(&s, 0)),
            Err(Error::VarSetMismatch)
        );
    }

    #[test]
    fn substitute_examples() {
        let r = ring3();
        let zero = Polynomial::zero(&r);
        assert_eq!(
            p(&r, "u1 + u2 - h").substitute("h", &zero).unwrap(),
            p(&r, "u1 + u2")
        );
        // identity substitution
        let q = p(&r, "u1^2*u2 - 5*h + 1/2");
        assert_eq!(q.substitute("h", &p(&r, "h")).unwrap(), q);
        assert_eq!(
            q.substitute("w", &zero),
            Err(Error::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn substitute_q_one() {
        let r = VarSet::new(vec!["u1", "u2", "h", "L", "q"]);
        let f = parse_polynomial(&r, "u1*u2 - q*u1*u2 - q*h*L").unwrap();
        let got = f.substitute("q", &Polynomial::one(&r)).unwrap();
        assert_eq!(got, parse_polynomial(&r, "-h*L").unwrap());
    }

    #[test]
    fn divide_exact() {
        let r = ring3();
        assert_eq!(
            p(&r, "h*u2 - h*u1").divide_exact_by_var("h").unwrap(),
            p(&r, "u2 - u1")
        );
        assert_eq!(
            p(&r, "h*u1 + h*u2 - h^2").divide_exact_by_var("h").unwrap(),
            p(&r, "u1 + u2 - h")
        );
        assert!(matches!(
            p(&r, "u1").divide_exact_by_var("h"),
            Err(Error::NotDivisible(..))
        ));
    }

    #[test]
    fn display_roundtrip() {
        let r = ring3();
        let s = "u1*u2 - h*u1 + 2/3*h^2";
        let q = p(&r, s);
        assert_eq!(q.to_string(), "u1*u2 - u1*h + 2/3*h^2");
        assert_eq!(p(&r, &q.to_string()), q);
    }

    #[test]
    fn homogeneity_with_weights() {
        let names = vec!["u1".to_string(), "q".to_string()];
        let r = VarSet::with_weights(names, vec![1, 0]);
        let f = parse_polynomial(&r, "u1 - q*u1").unwrap();
        assert_eq!(f.homogeneous_degree(), Some(1));
    }
}
