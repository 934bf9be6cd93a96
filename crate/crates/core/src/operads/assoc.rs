//! The associative operad: `As(n)` has the words `x_{σ(1)}…x_{σ(n)}` as basis.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::exact::{Rational, RationalMatrix, SparseVec};

/// Combination of words; each word lists variable indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AsElement {
    pub terms: BTreeMap<Vec<u8>, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flip {
    /// Reverse each word.
    Flip,
    /// Reverse and multiply by `(-1)^{n-1}`.
    SignedFlip,
}

impl AsElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: &[u8]) -> Self {
        Self::from_terms([(w.to_vec(), Rational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u8>, Rational)>) -> Self {
        let mut e = AsElement::zero();
        for (w, c) in terms {
            e.add_term(w, &c);
        }
        e
    }

    pub fn add_term(&mut self, w: Vec<u8>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &AsElement) -> AsElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> AsElement {
        AsElement::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x * c)))
    }

    /// Concatenation product.
    pub fn concat(&self, other: &AsElement) -> AsElement {
        let mut out = AsElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &(x * y));
            }
        }
        out
    }

    /// Substitute `args[i-1]` for letter `i` in every word.
    pub fn substitute(&self, args: &[AsElement]) -> AsElement {
        let mut out = AsElement::zero();
        for (w, c) in &self.terms {
            let mut prod = AsElement::from_terms([(Vec::new(), c.clone())]);
            for &l in w {
                prod = prod.concat(&args[l as usize - 1]);
            }
            out = out.add(&prod);
        }
        out
    }

    /// Replace letters through `map`; words may acquire repeated letters.
    pub fn specialize(&self, map: &dyn Fn(u8) -> u8) -> AsElement {
        AsElement::from_terms(self.terms.iter().map(|(w, c)| (w.iter().map(|&l| map(l)).collect(), c.clone())))
    }

    pub fn tau(&self, variant: Flip) -> AsElement {
        AsElement::from_terms(self.terms.iter().map(|(w, c)| {
            let rev: Vec<u8> = w.iter().rev().copied().collect();
            let sign = variant == Flip::SignedFlip && w.len() % 2 == 0;
            (rev, if sign { -c } else { c.clone() })
        }))
    }
}

/// Words of `As(n)` in lexicographic order.
pub fn as_basis(n: usize) -> Vec<Vec<u8>> {
    (1..=n as u8).permutations(n).collect()
}

pub fn as_vector(e: &AsElement, index: &BTreeMap<Vec<u8>, usize>) -> SparseVec {
    SparseVec::from_pairs(e.terms.iter().map(|(w, c)| (index[w], c.clone())))
}

pub fn basis_index(words: &[Vec<u8>]) -> BTreeMap<Vec<u8>, usize> {
    words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect()
}

/// `rank((id + τ)/2)` on `As(n)`.
pub fn as_invariant_dimension(variant: Flip, n: usize) -> usize {
    let words = as_basis(n);
    let index = basis_index(&words);
    let half = Rational::new(1, 2);
    let columns = words
        .iter()
        .map(|w| {
            let e = AsElement::word(w);
            as_vector(&e.add(&e.tau(variant)).scale(&half), &index)
        })
        .collect();
    RationalMatrix::from_columns(words.len(), columns).unwrap().rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_actions() {
        let x = AsElement::word(&[1, 2]);
        assert_eq!(x.tau(Flip::Flip), AsElement::word(&[2, 1]));
        assert_eq!(x.tau(Flip::SignedFlip), AsElement::word(&[2, 1]).scale(&Rational::from_int(-1)));
        let y = AsElement::from_terms([(vec![1, 3, 2], Rational::new(2, 3)), (vec![2, 1, 3], Rational::one())]);
        for v in [Flip::Flip, Flip::SignedFlip] {
            assert_eq!(y.tau(v).tau(v), y);
        }
    }

    #[test]
    fn invariant_dims() {
        assert_eq!(as_invariant_dimension(Flip::SignedFlip, 1), 1);
        assert_eq!(as_invariant_dimension(Flip::SignedFlip, 3), 3);
        assert_eq!(as_invariant_dimension(Flip::SignedFlip, 5), 60);
        assert_eq!(as_invariant_dimension(Flip::Flip, 2), 1);
    }
}
