//! Monomial orders: total, multiplicative, with 1 minimal.

use std::cmp::Ordering;

use serde::Serialize;

use super::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
    /// Eliminates the first `split` variables of the priority list:
    /// compares deglex on that block first, then deglex on the rest.
    Elimination {
        split: usize,
    },
    /// Compares the weighted degree first, then the tie-break order.
    /// Weights must be positive to preserve well-ordering.
    Weighted {
        weights: Vec<u32>,
        tie: Box<OrderKind>,
    },
}

/// A monomial order: a kind plus a variable priority permutation.
/// `perm[0]` is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, perm: Vec<usize>) -> MonomialOrder {
        if let OrderKind::Weighted { weights, .. } = &kind {
            assert_eq!(weights.len(), perm.len());
            assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        }
        MonomialOrder { kind, perm }
    }

    pub fn lex(nvars: usize) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Lex, (0..nvars).collect())
    }

    pub fn deglex(nvars: usize) -> MonomialOrder {
        MonomialOrder::new(OrderKind::DegLex, (0..nvars).collect())
    }

    pub fn degrevlex(nvars: usize) -> MonomialOrder {
        MonomialOrder::new(OrderKind::DegRevLex, (0..nvars).collect())
    }

    pub fn lex_perm(perm: Vec<usize>) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Lex, perm)
    }

    pub fn deglex_perm(perm: Vec<usize>) -> MonomialOrder {
        MonomialOrder::new(OrderKind::DegLex, perm)
    }

    pub fn degrevlex_perm(perm: Vec<usize>) -> MonomialOrder {
        MonomialOrder::new(OrderKind::DegRevLex, perm)
    }

    /// Elimination order with the given variables in the front block.
    /// Remaining variables follow in increasing index order.
    pub fn elimination(nvars: usize, eliminated: &[usize]) -> MonomialOrder {
        let mut perm: Vec<usize> = eliminated.to_vec();
        for i in 0..nvars {
            if !eliminated.contains(&i) {
                perm.push(i);
            }
        }
        MonomialOrder::new(
            OrderKind::Elimination {
                split: eliminated.len(),
            },
            perm,
        )
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        compare_kind(&self.kind, &self.perm, a, b)
    }
}

fn total(m: &Monomial) -> u64 {
    m.iter().map(|(_, e)| e as u64).sum()
}

fn block_degree(m: &Monomial, vars: &[usize]) -> u64 {
    vars.iter().map(|&i| m.exponent(i) as u64).sum()
}

fn lex_on(perm: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &i in perm {
        match a.exponent(i).cmp(&b.exponent(i)) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn revlex_on(perm: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    // Scan from the least variable; the monomial with the smaller
    // exponent at the first difference is the larger one.
    for &i in perm.iter().rev() {
        match a.exponent(i).cmp(&b.exponent(i)) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

fn compare_kind(kind: &OrderKind, perm: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    match kind {
        OrderKind::Lex => lex_on(perm, a, b),
        OrderKind::DegLex => total(a).cmp(&total(b)).then_with(|| lex_on(perm, a, b)),
        OrderKind::DegRevLex => total(a).cmp(&total(b)).then_with(|| revlex_on(perm, a, b)),
        OrderKind::Elimination { split } => {
            let (front, back) = perm.split_at(*split);
            block_degree(a, front)
                .cmp(&block_degree(b, front))
                .then_with(|| lex_on(front, a, b))
                .then_with(|| block_degree(a, back).cmp(&block_degree(b, back)))
                .then_with(|| lex_on(back, a, b))
        }
        OrderKind::Weighted { weights, tie } => {
            let wd = |m: &Monomial| -> u64 {
                m.iter().map(|(i, e)| weights[i] as u64 * e as u64).sum()
            };
            wd(a)
                .cmp(&wd(b))
                .then_with(|| compare_kind(tie, perm, a, b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.to_vec())
    }

    #[test]
    fn deglex_examples() {
        let o = MonomialOrder::deglex(3);
        // u1 > u2 by priority
        assert_eq!(o.compare(&m(&[(0, 1)]), &m(&[(1, 1)])), Ordering::Greater);
        // degree dominates: u2^2 > u1
        assert_eq!(o.compare(&m(&[(1, 2)]), &m(&[(0, 1)])), Ordering::Greater);
        // u2*u3 < u1*u3
        assert_eq!(
            o.compare(&m(&[(1, 1), (2, 1)]), &m(&[(0, 1), (2, 1)])),
            Ordering::Less
        );
    }

    #[test]
    fn degrevlex_vs_deglex() {
        // classic separating example: x z vs y^2 with x > y > z
        let dl = MonomialOrder::deglex(3);
        let drl = MonomialOrder::degrevlex(3);
        let xz = m(&[(0, 1), (2, 1)]);
        let y2 = m(&[(1, 2)]);
        assert_eq!(dl.compare(&xz, &y2), Ordering::Greater);
        assert_eq!(drl.compare(&xz, &y2), Ordering::Less);
    }

    #[test]
    fn elimination_front_block_dominates() {
        // eliminate var 2: any monomial containing it beats any that does not
        let o = MonomialOrder::elimination(3, &[2]);
        assert_eq!(
            o.compare(&m(&[(2, 1)]), &m(&[(0, 5), (1, 5)])),
            Ordering::Greater
        );
    }

    #[test]
    fn one_is_minimal() {
        let one = Monomial::one();
        for o in [
            MonomialOrder::lex(3),
            MonomialOrder::deglex(3),
            MonomialOrder::degrevlex(3),
            MonomialOrder::elimination(3, &[1]),
        ] {
            assert_eq!(o.compare(&one, &m(&[(2, 1)])), Ordering::Less);
            assert_eq!(o.compare(&one, &one), Ordering::Equal);
        }
    }
}
