//! Deterministic Buchberger engine: reduced bases, normal forms, initial
//! ideals, graded-piece bases, and ideal membership.

mod elim;
mod hilbert;

pub use elim::{colon_ideal, ideal_equal, ideals_intersection, kernel_by_elimination, krull_dimension, saturation, ORACLE_MAX_N};
pub use hilbert::{hilbert_series_quotient, HilbertSeries};

/// Reinterpret a polynomial in a larger ring that shares the leading
/// variable block.
pub fn lift_poly(p: &Polynomial, big: &Arc<VarSet>) -> Polynomial {
    elim::lift(p, big)
}

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::{Coeff, Monomial, MonomialOrder, Polynomial, VarSet};

/// A list of generators over a common ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<VarSet>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<VarSet>, generators: Vec<Polynomial>) -> Ideal {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &generators {
            assert_eq!(g.ring(), ring, "generator ring mismatch");
        }
        Ideal {
            ring: ring.clone(),
            generators,
        }
    }

    pub fn ring(&self) -> &Arc<VarSet> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }
}

/// A reduced Gröbner basis together with its monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    ring: Arc<VarSet>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn ring(&self) -> &Arc<VarSet> {
        &self.ring
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("nonzero"))
            .collect()
    }
}

/// Remainder of `p` on division by `gens` under `order`.  Every term of
/// the result is divisible by no leading monomial of `gens`.
pub fn normal_form_by(p: &Polynomial, gens: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let ring = p.ring().clone();
    let lts: Vec<(Monomial, Coeff)> = gens
        .iter()
        .map(|g| g.leading_term(order).expect("nonzero generator"))
        .collect();
    let mut rem = Polynomial::zero(&ring);
    let mut work = p.clone();
    while let Some((lm, lc)) = work.leading_term(order) {
        let mut reduced = false;
        for (k, (glm, glc)) in lts.iter().enumerate() {
            if glm.divides(&lm) {
                let q = glm.div_into(&lm).unwrap();
                let c = &lc / glc;
                work = work
                    .sub(&gens[k].mul_term(&q, &c))
                    .expect("same ring");
                reduced = true;
                break;
            }
        }
        if !reduced {
            let t = Polynomial::from_term(&ring, lm, lc);
            rem = rem.add(&t).expect("same ring");
            work = work.sub(&t).expect("same ring");
        }
    }
    rem
}

/// Remainder of `p` modulo a Gröbner basis; unique for a reduced basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    normal_form_by(p, &gb.basis, &gb.order)
}

pub fn ideal_membership(p: &Polynomial, gb: &GroebnerBasis) -> bool {
    normal_form(p, gb).is_zero()
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = fm.lcm(&gm);
    let a = f.mul_term(&fm.div_into(&l).unwrap(), &(Coeff::one() / fc));
    let b = g.mul_term(&gm.div_into(&l).unwrap(), &(Coeff::one() / gc));
    a.sub(&b).expect("same ring")
}

/// Buchberger's algorithm with the normal pair-selection strategy
/// (minimal lcm degree, then lexicographic pair index), the coprime
/// criterion, and the chain criterion; output is the reduced basis.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> GroebnerBasis {
    let ring = ideal.ring().clone();
    let mut basis: Vec<Polynomial> = ideal
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();

    // queue keyed by (lcm total degree, i, j) for determinism
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lm = |g: &Polynomial| g.leading_monomial(order).unwrap();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let deg = lm(&basis[i]).lcm(&lm(&basis[j])).total_degree();
            queue.insert((deg, i, j));
        }
    }

    while let Some(&(deg, i, j)) = queue.iter().next() {
        queue.remove(&(deg, i, j));
        done.insert((i, j));
        let lmi = lm(&basis[i]);
        let lmj = lm(&basis[j]);
        if lmi.gcd_is_one(&lmj) {
            continue; // coprime criterion
        }
        let lcm_ij = lmi.lcm(&lmj);
        // chain criterion: some k with lm_k | lcm and both pairs handled
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&lcm_ij)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form_by(&s, &basis, order);
        if !r.is_zero() {
            let new_idx = basis.len();
            for k in 0..new_idx {
                let deg = lm(&basis[k]).lcm(&r.leading_monomial(order).unwrap()).total_degree();
                queue.insert((deg, k, new_idx));
            }
            basis.push(r);
        }
    }

    // Inter-reduce: drop elements whose lead is divisible by another lead,
    // then fully reduce each survivor against the others and scale monic.
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let gi = lm(g);
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            if i == j {
                return false;
            }
            let hj = lm(h);
            hj.divides(&gi) && (hj != gi || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = if others.is_empty() {
            keep[i].clone()
        } else {
            normal_form_by(&keep[i], &others, order)
        };
        if !r.is_zero() {
            reduced.push(r.monic(order));
        }
    }
    // deterministic output order: sort by leading monomial, descending
    reduced.sort_by(|a, b| {
        order
            .compare(&lm(b), &lm(a))
    });

    GroebnerBasis {
        order: order.clone(),
        basis: reduced,
        ring,
    }
}

/// Checks the reduced-basis invariants: monic leads, pairwise
/// non-divisibility of leading monomials across all terms, and every
/// S-polynomial reducing to zero.  Used post-hoc in tests.
pub fn is_reduced_basis(gb: &GroebnerBasis) -> bool {
    let order = &gb.order;
    for (i, g) in gb.basis.iter().enumerate() {
        let (_, lc) = g.leading_term(order).unwrap();
        if !lc.is_one() {
            return false;
        }
        for (j, h) in gb.basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let hlm = h.leading_monomial(order).unwrap();
            if g.terms().any(|(m, _)| hlm.divides(m)) {
                return false;
            }
        }
    }
    all_s_polynomials_reduce(&gb.basis, order).is_none()
}

/// `None` when every S-polynomial of `gens` reduces to zero against
/// `gens`; otherwise the offending pair and remainder.
pub fn all_s_polynomials_reduce(
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Option<((usize, usize), Polynomial)> {
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let s = s_polynomial(&gens[i], &gens[j], order);
            let r = normal_form_by(&s, gens, order);
            if !r.is_zero() {
                return Some(((i, j), r));
            }
        }
    }
    None
}

/// Monomial ideal of leading monomials, minimally generated.
pub fn initial_ideal(gb: &GroebnerBasis) -> Ideal {
    let mut lms = gb.leading_monomials();
    minimize_monomials(&mut lms);
    let gens = lms
        .into_iter()
        .map(|m| Polynomial::monomial(gb.ring(), m))
        .collect();
    Ideal::new(gb.ring(), gens)
}

pub(crate) fn minimize_monomials(ms: &mut Vec<Monomial>) {
    ms.sort_by_key(|m| m.total_degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms.iter() {
        if !out.iter().any(|g| g.divides(m)) {
            out.push(m.clone());
        }
    }
    out.sort();
    *ms = out;
}

/// All monomials of the given weighted degree, not divisible by any
/// leading monomial of `gb`, sorted descending under the basis order.
/// Errors if some variable has weight 0 (the piece would be infinite).
pub fn graded_piece_basis(gb: &GroebnerBasis, degree: u32) -> Result<Vec<Monomial>> {
    let ring = gb.ring();
    for i in 0..ring.len() {
        if ring.weight(i) == 0 {
            return Err(Error::Inhomogeneous);
        }
    }
    let lms = gb.leading_monomials();
    let mut out = Vec::new();
    let mut cur: Vec<(usize, u32)> = Vec::new();
    fn rec(
        ring: &VarSet,
        var: usize,
        remaining: u32,
        cur: &mut Vec<(usize, u32)>,
        out: &mut Vec<Monomial>,
        lms: &[Monomial],
    ) {
        if remaining == 0 {
            let m = Monomial::from_pairs(cur.clone());
            if !lms.iter().any(|g| g.divides(&m)) {
                out.push(m);
            }
            return;
        }
        if var >= ring.len() {
            return;
        }
        let w = ring.weight(var);
        let max_e = remaining / w;
        for e in 0..=max_e {
            if e > 0 {
                cur.push((var, e));
            }
            rec(ring, var + 1, remaining - e * w, cur, out, lms);
            if e > 0 {
                cur.pop();
            }
        }
    }
    rec(ring, 0, degree, &mut cur, &mut out, &lms);
    out.sort_by(|a, b| gb.order.compare(b, a));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn ring_u2h() -> Arc<VarSet> {
        VarSet::new(vec!["u1", "u2", "h"])
    }

    fn p(r: &Arc<VarSet>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring_u2h();
        let order = MonomialOrder::deglex(3);
        let gb = buchberger(&Ideal::new(&r, vec![p(&r, "u1*u2")]), &order);
        assert!(normal_form(&p(&r, "u1*u2"), &gb).is_zero());
        assert_eq!(normal_form(&p(&r, "h^3"), &gb), p(&r, "h^3"));

        let gb = buchberger(&Ideal::new(&r, vec![p(&r, "u1 + u2 - h")]), &order);
        assert_eq!(normal_form(&p(&r, "u1*u2"), &gb), p(&r, "-u2^2 + h*u2"));
    }

    #[test]
    fn buchberger_principal() {
        let r = ring_u2h();
        let order = MonomialOrder::deglex(3);
        let gb = buchberger(&Ideal::new(&r, vec![p(&r, "2*u1 + 2*u2")]), &order);
        assert_eq!(gb.basis(), &[p(&r, "u1 + u2")]);
        assert!(is_reduced_basis(&gb));
    }

    #[test]
    fn buchberger_triangle_circuit() {
        // f_{C,0} for the triangle: u2*u3 + u1*u3 - u1*u2, lead u1*u2
        let r = VarSet::new(vec!["u1", "u2", "u3"]);
        let order = MonomialOrder::deglex(3);
        let f = p(&r, "u2*u3 + u1*u3 - u1*u2");
        let gb = buchberger(&Ideal::new(&r, vec![f.clone()]), &order);
        assert_eq!(gb.basis().len(), 1);
        assert_eq!(
            gb.basis()[0].leading_monomial(&order).unwrap(),
            Monomial::from_pairs(vec![(0, 1), (1, 1)])
        );
        let init = initial_ideal(&gb);
        assert_eq!(init.generators(), &[p(&r, "u1*u2")]);
    }

    #[test]
    fn buchberger_one_s_pair() {
        let r = ring_u2h();
        let order = MonomialOrder::deglex(3);
        let gb = buchberger(
            &Ideal::new(&r, vec![p(&r, "u1*u2"), p(&r, "u1 + u2 - h")]),
            &order,
        );
        assert!(is_reduced_basis(&gb));
        let polys: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
        assert!(polys.contains(&"u1 + u2 - h".to_string()), "{polys:?}");
        assert!(polys.contains(&"u2^2 - u2*h".to_string()), "{polys:?}");
    }

    #[test]
    fn initial_ideal_edge_cases() {
        let r = ring_u2h();
        let order = MonomialOrder::deglex(3);
        let gb = buchberger(&Ideal::new(&r, vec![p(&r, "u1 + u2 - h")]), &order);
        assert_eq!(initial_ideal(&gb).generators(), &[p(&r, "u1")]);
        let gb = buchberger(&Ideal::new(&r, vec![]), &order);
        assert!(initial_ideal(&gb).is_zero());
    }

    #[test]
    fn graded_pieces() {
        let r = ring_u2h();
        let order = MonomialOrder::deglex(3);
        let gb = buchberger(&Ideal::new(&r, vec![p(&r, "u1*u2")]), &order);
        let b2 = graded_piece_basis(&gb, 2).unwrap();
        let names: Vec<String> = b2.iter().map(|m| m.display(&r).to_string()).collect();
        assert_eq!(names, vec!["u1^2", "u1*h", "u2^2", "u2*h", "h^2"]);

        let gb = buchberger(&Ideal::new(&r, vec![p(&r, "u1 + u2 - h")]), &order);
        let b1 = graded_piece_basis(&gb, 1).unwrap();
        let names: Vec<String> = b1.iter().map(|m| m.display(&r).to_string()).collect();
        assert_eq!(names, vec!["u2", "h"]);

        let b0 = graded_piece_basis(&gb, 0).unwrap();
        assert_eq!(b0, vec![Monomial::one()]);
    }

    #[test]
    fn membership() {
        let r = ring_u2h();
        let order = MonomialOrder::deglex(3);
        let gb = buchberger(&Ideal::new(&r, vec![p(&r, "u1")]), &order);
        assert!(ideal_membership(&p(&r, "u1*u2"), &gb));
        assert!(!ideal_membership(&p(&r, "u2"), &gb));
    }
}
