//! Hilbert series of graded quotients, via the initial-ideal recursion.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder};

use super::{buchberger, initial_ideal, minimize_monomials, Ideal};

/// A rational function numerator / (1-t)^denom_power in canonical
/// reduced form: the numerator is not divisible by (1-t).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// Integer coefficients of the numerator, constant term first.
    pub numerator: Vec<BigInt>,
    pub denom_power: usize,
}

impl HilbertSeries {
    pub fn new(mut numerator: Vec<BigInt>, mut denom_power: usize) -> HilbertSeries {
        while numerator.len() > 1 && numerator.last().map_or(false, |c| c.is_zero()) {
            numerator.pop();
        }
        // cancel factors of (1-t): numerator divisible iff value at t=1 is 0
        loop {
            let at_one: BigInt = numerator.iter().sum();
            if !at_one.is_zero() || denom_power == 0 || numerator.iter().all(|c| c.is_zero()) {
                break;
            }
            // synthetic division by (1-t): q_i = sum_{j<=i} n_j
            let mut q = Vec::with_capacity(numerator.len().saturating_sub(1));
            let mut acc = BigInt::zero();
            for c in &numerator[..numerator.len() - 1] {
                acc += c;
                q.push(acc.clone());
            }
            numerator = if q.is_empty() { vec![BigInt::zero()] } else { q };
            denom_power -= 1;
        }
        while numerator.len() > 1 && numerator.last().map_or(false, |c| c.is_zero()) {
            numerator.pop();
        }
        HilbertSeries {
            numerator,
            denom_power,
        }
    }

    pub fn numerator_i64(&self) -> Vec<i64> {
        self.numerator
            .iter()
            .map(|c| i64::try_from(c.clone()).expect("small coefficient"))
            .collect()
    }

    /// Exact power-series coefficients up to and including degree `deg`.
    pub fn expand(&self, deg: usize) -> Vec<BigInt> {
        // (1-t)^{-k} has coefficients C(k-1+j, k-1)
        let k = self.denom_power;
        let mut denom = vec![BigInt::zero(); deg + 1];
        for (j, d) in denom.iter_mut().enumerate() {
            *d = if k == 0 {
                if j == 0 { BigInt::one() } else { BigInt::zero() }
            } else {
                binom_big(k - 1 + j, k - 1)
            };
        }
        let mut out = vec![BigInt::zero(); deg + 1];
        for (i, c) in self.numerator.iter().enumerate() {
            if i > deg {
                break;
            }
            for j in 0..=(deg - i) {
                out[i + j] += c * &denom[j];
            }
        }
        out
    }

    /// Multiply by 1/(1-t).
    pub fn shift_denominator(&self) -> HilbertSeries {
        HilbertSeries::new(self.numerator.clone(), self.denom_power + 1)
    }

    pub fn display(&self) -> String {
        let mut num = String::new();
        let mut first = true;
        for (i, c) in self.numerator.iter().enumerate() {
            if c.is_zero() && self.numerator.len() > 1 {
                continue;
            }
            let term = match i {
                0 => c.to_string(),
                _ => {
                    let abs = c.magnitude().to_string();
                    let base = if i == 1 { "t".to_string() } else { format!("t^{i}") };
                    if abs == "1" { base } else { format!("{abs}*{base}") }
                }
            };
            if first {
                if i > 0 && c < &BigInt::zero() {
                    num.push('-');
                }
                num.push_str(&term);
                first = false;
            } else if c < &BigInt::zero() {
                num.push_str(&format!(" - {term}"));
            } else {
                num.push_str(&format!(" + {term}"));
            }
        }
        if num.is_empty() {
            num = "0".to_string();
        }
        match self.denom_power {
            0 => num,
            1 => format!("({num})/(1-t)"),
            k => format!("({num})/(1-t)^{k}"),
        }
    }
}

fn binom_big(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Hilbert series of ring/ideal for a homogeneous ideal, computed as the
/// series of ring/in(ideal).  Requires every variable to have weight 1.
pub fn hilbert_series_quotient(ideal: &Ideal, order: &MonomialOrder) -> Result<HilbertSeries> {
    let ring = ideal.ring();
    for i in 0..ring.len() {
        if ring.weight(i) != 1 {
            return Err(Error::Inhomogeneous);
        }
    }
    if !ideal.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let gb = buchberger(ideal, order);
    let init = initial_ideal(&gb);
    let mut gens: Vec<Monomial> = init
        .generators()
        .iter()
        .map(|g| g.terms().next().unwrap().0.clone())
        .collect();
    minimize_monomials(&mut gens);
    let num = numerator_rec(&gens);
    Ok(HilbertSeries::new(num, ring.len()))
}

/// Numerator of Hilb(R/I) over (1-t)^nvars for a monomial ideal given
/// by minimal generators.  Splits on the first variable of the first
/// minimal generator: N(I) = N(I + <x>) + t * N(I : x).
fn numerator_rec(gens: &[Monomial]) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![BigInt::zero()];
    }
    // base case: pairwise coprime generators -> product of (1 - t^deg);
    // otherwise split on a variable shared by a non-coprime pair, so that
    // both branches strictly shrink (a shared variable can never itself be
    // a minimal generator)
    let mut shared = None;
    'outer: for (i, g) in gens.iter().enumerate() {
        for h in gens.iter().skip(i + 1) {
            if let Some(x) = g.support().find(|&x| h.exponent(x) > 0) {
                shared = Some(x);
                break 'outer;
            }
        }
    }
    let Some(x) = shared else {
        let mut acc = vec![BigInt::one()];
        for g in gens {
            let d = g.total_degree() as usize;
            let mut factor = vec![BigInt::zero(); d + 1];
            factor[0] = BigInt::one();
            factor[d] = -BigInt::one();
            acc = poly_mul(&acc, &factor);
        }
        return acc;
    };
    let xv = Monomial::var(x);
    // I + <x>
    let mut plus: Vec<Monomial> = vec![xv.clone()];
    plus.extend(gens.iter().filter(|g| g.exponent(x) == 0).cloned());
    minimize_monomials(&mut plus);
    // I : x
    let mut colon: Vec<Monomial> = gens
        .iter()
        .map(|g| xv.div_into(g).unwrap_or_else(|| g.clone()))
        .collect();
    minimize_monomials(&mut colon);
    let a = numerator_rec(&plus);
    let b = numerator_rec(&colon);
    let mut out = vec![BigInt::zero(); a.len().max(b.len() + 1)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + 1] += c;
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
