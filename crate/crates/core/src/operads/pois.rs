//! `Pois₁(n) ≅ Com∘Lie(n)`: commutative products of Lie words on disjoint
//! blocks.
//!
//! A Lie element on a block `S` is stored in the left-normed basis
//! `[[x_m, x_a], x_b]…` with `m = min S`, keyed by the word `m a b …`. Its
//! coordinates are read off the associative expansion: the left-normed
//! bracket on `m a b …` is the only basis element whose expansion contains
//! that word, and no other word starting with `m` occurs in it.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exact::{Rational, RationalMatrix, SparseVec};

use super::assoc::{AsElement, Flip};
use super::free::set_partitions;

/// Sorted list of blocks, each a left-normed Lie word starting with its minimum.
pub type PoisMonomial = Vec<Vec<u8>>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PoisElement {
    pub terms: BTreeMap<PoisMonomial, Rational>,
}

fn lie_expansion(word: &[u8]) -> AsElement {
    let mut acc = AsElement::word(&word[..1]);
    for &l in &word[1..] {
        let x = AsElement::word(&[l]);
        acc = acc.concat(&x).add(&x.concat(&acc).scale(&Rational::from_int(-1)));
    }
    acc
}

/// Left-normed coordinates of a Lie polynomial given by its expansion.
fn lie_coordinates(e: &AsElement) -> Vec<(Vec<u8>, Rational)> {
    let Some(min) = e.terms.keys().filter_map(|w| w.iter().min().copied()).min() else {
        return Vec::new();
    };
    e.terms.iter().filter(|(w, _)| w.first() == Some(&min)).map(|(w, c)| (w.clone(), c.clone())).collect()
}

/// `[u, v]` for left-normed words on disjoint blocks.
pub fn lie_bracket_words(u: &[u8], v: &[u8]) -> Vec<(Vec<u8>, Rational)> {
    let (eu, ev) = (lie_expansion(u), lie_expansion(v));
    lie_coordinates(&eu.concat(&ev).add(&ev.concat(&eu).scale(&Rational::from_int(-1))))
}

impl PoisElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn variable(i: u8) -> Self {
        Self::monomial(vec![vec![i]])
    }

    pub fn monomial(mut blocks: PoisMonomial) -> Self {
        blocks.sort();
        let mut e = PoisElement::zero();
        e.terms.insert(blocks, Rational::one());
        e
    }

    pub fn add_term(&mut self, mut m: PoisMonomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        m.sort();
        let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &PoisElement) -> PoisElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> PoisElement {
        let mut out = PoisElement::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), &(x * c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Commutative product of elements on disjoint variable sets.
    pub fn product(&self, other: &PoisElement) -> PoisElement {
        let mut out = PoisElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.iter().chain(b).cloned().collect(), &(x * y));
            }
        }
        out
    }

    /// Lie bracket, a biderivation of the product.
    pub fn bracket(&self, other: &PoisElement) -> PoisElement {
        let mut out = PoisElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let c = x * y;
                for i in 0..a.len() {
                    for j in 0..b.len() {
                        let rest: Vec<Vec<u8>> = a
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != i)
                            .chain(b.iter().enumerate().filter(|&(k, _)| k != j))
                            .map(|(_, w)| w.clone())
                            .collect();
                        for (w, z) in lie_bracket_words(&a[i], &b[j]) {
                            let mut m = rest.clone();
                            m.push(w);
                            out.add_term(m, &(&c * &z));
                        }
                    }
                }
            }
        }
        out
    }

    /// `SignedFlip`: `τ(μ₂) = -μ₂`, `τ(ν₂) = ν₂`. `Flip`: `τ(μ₂) = μ₂`,
    /// `τ(ν₂) = -ν₂`. A monomial with `k` blocks on `n` letters uses `k-1`
    /// products and `n-k` brackets.
    pub fn tau(&self, variant: Flip) -> PoisElement {
        let mut out = PoisElement::zero();
        for (m, c) in &self.terms {
            let n: usize = m.iter().map(Vec::len).sum();
            let odd = match variant {
                Flip::SignedFlip => m.len() % 2 == 0,
                Flip::Flip => (n - m.len()) % 2 == 1,
            };
            out.add_term(m.clone(), &if odd { -c } else { c.clone() });
        }
        out
    }
}

/// Basis of `Pois₁(n)`: set partitions with a left-normed word per block.
pub fn pois_basis(n: usize) -> Vec<PoisMonomial> {
    use itertools::Itertools;
    let items: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    for k in 1..=n {
        for blocks in set_partitions(&items, k) {
            let choices: Vec<Vec<Vec<u8>>> = blocks
                .iter()
                .map(|b| {
                    b[1..].iter().copied().permutations(b.len() - 1).map(|p| [vec![b[0]], p].concat()).collect()
                })
                .collect();
            for pick in choices.iter().map(|c| c.iter()).multi_cartesian_product() {
                let mut m: PoisMonomial = pick.into_iter().cloned().collect();
                m.sort();
                out.push(m);
            }
        }
    }
    out.sort();
    out
}

pub fn pois_vector(e: &PoisElement, index: &BTreeMap<PoisMonomial, usize>) -> SparseVec {
    SparseVec::from_pairs(e.terms.iter().map(|(m, c)| (index[m], c.clone())))
}

/// `rank((id + τ)/2)` on `Pois₁(n)`.
pub fn pois_invariant_dimension(variant: Flip, n: usize) -> usize {
    let basis = pois_basis(n);
    let index: BTreeMap<PoisMonomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let half = Rational::new(1, 2);
    let columns = basis
        .iter()
        .map(|m| {
            let e = PoisElement::monomial(m.clone());
            pois_vector(&e.add(&e.tau(variant)).scale(&half), &index)
        })
        .collect();
    RationalMatrix::from_columns(basis.len(), columns).unwrap().rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u8) -> PoisElement {
        PoisElement::variable(i)
    }

    #[test]
    fn basis_has_factorial_size() {
        assert_eq!(pois_basis(3).len(), 6);
        assert_eq!(pois_basis(5).len(), 120);
    }

    #[test]
    fn jacobi_and_leibniz() {
        let b = |a: &PoisElement, c: &PoisElement| a.bracket(c);
        let jac = b(&b(&x(1), &x(2)), &x(3)).add(&b(&b(&x(2), &x(3)), &x(1))).add(&b(&b(&x(3), &x(1)), &x(2)));
        assert!(jac.is_zero());
        let lhs = b(&x(1).product(&x(2)), &x(3));
        let rhs = x(1).product(&b(&x(2), &x(3))).add(&b(&x(1), &x(3)).product(&x(2)));
        assert_eq!(lhs, rhs);
        assert_eq!(b(&x(2), &x(1)), b(&x(1), &x(2)).scale(&Rational::from_int(-1)));
    }

    #[test]
    fn bracket_of_words_reexpands() {
        // [[x1,x3],[x2,x4]] in the left-normed basis
        let v = lie_bracket_words(&[1, 3], &[2, 4]);
        let mut total = AsElement::zero();
        for (w, c) in &v {
            total = total.add(&lie_expansion(w).scale(c));
        }
        let (u, w) = (lie_expansion(&[1, 3]), lie_expansion(&[2, 4]));
        assert_eq!(total, u.concat(&w).add(&w.concat(&u).scale(&Rational::from_int(-1))));
    }

    #[test]
    fn invariant_dims() {
        assert_eq!(pois_invariant_dimension(Flip::SignedFlip, 1), 1);
        assert_eq!(pois_invariant_dimension(Flip::SignedFlip, 4), 12);
        assert_eq!(pois_invariant_dimension(Flip::Flip, 4), 12);
    }
}
