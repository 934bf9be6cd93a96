//! Lyndon words and the free Lie algebra inside the tensor algebra.
//!
//! Words over `k` letters are encoded as base-`k` integers (most significant
//! letter first), so the numeric order of codes of equal length is the
//! lexicographic order of words.

use std::collections::BTreeMap;

use crate::exact::{Rational, SparseVec};

/// All Lyndon words of length `m` over `0..k`, in lexicographic order (Duval).
pub fn lyndon_words(k: usize, m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if k == 0 || m == 0 {
        return out;
    }
    let mut w: Vec<i32> = vec![-1];
    while !w.is_empty() {
        *w.last_mut().unwrap() += 1;
        if w.len() == m {
            out.push(w.iter().map(|&c| c as u8).collect());
        }
        let n = w.len();
        while w.len() < m {
            w.push(w[w.len() - n]);
        }
        while w.last().is_some_and(|&c| c as usize == k - 1) {
            w.pop();
        }
    }
    out
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut result, mut p) = (n, 1i64, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Necklace (Witt) formula `(1/m) Σ_{d|m} μ(d) k^{m/d}`.
pub fn free_lie_dimension(k: usize, m: usize) -> usize {
    if m == 0 {
        return 0;
    }
    let total: i128 =
        (1..=m).filter(|d| m.is_multiple_of(*d)).map(|d| mobius(d) as i128 * (k as i128).pow((m / d) as u32)).sum();
    (total / m as i128) as usize
}

/// Standard factorization `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> (usize, &[u8], &[u8]) {
    for split in 1..w.len() {
        if is_lyndon(&w[split..]) {
            return (split, &w[..split], &w[split..]);
        }
    }
    (w.len(), w, &[])
}

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w[i..] > *w)
}

/// Homogeneous elements of the tensor algebra on `k` letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordSpace {
    pub k: usize,
}

impl WordSpace {
    pub fn encode(&self, w: &[u8]) -> usize {
        w.iter().fold(0, |acc, &l| acc * self.k + l as usize)
    }

    pub fn decode(&self, mut code: usize, len: usize) -> Vec<u8> {
        let mut w = vec![0u8; len];
        for i in (0..len).rev() {
            w[i] = (code % self.k) as u8;
            code /= self.k;
        }
        w
    }

    pub fn letter(&self, l: u8) -> LieElement {
        LieElement { degree: 1, terms: SparseVec::unit(l as usize) }
    }

    /// `uv` for homogeneous `u`, `v`.
    pub fn concat(&self, u: &LieElement, v: &LieElement) -> SparseVec {
        let shift = self.k.pow(v.degree as u32);
        let mut pairs = Vec::with_capacity(u.terms.nnz() * v.terms.nnz());
        for (a, x) in u.terms.entries() {
            for (b, y) in v.terms.entries() {
                pairs.push((a * shift + b, x * y));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    pub fn bracket(&self, u: &LieElement, v: &LieElement) -> LieElement {
        let terms = self.concat(u, v).sub(&self.concat(v, u));
        LieElement { degree: u.degree + v.degree, terms }
    }

    /// `[u, x]` for a letter `x`.
    pub fn bracket_letter(&self, u: &LieElement, x: u8) -> LieElement {
        let x = x as usize;
        let top = self.k.pow(u.degree as u32);
        let pairs = u.terms.entries().iter().flat_map(|(a, c)| [(a * self.k + x, c.clone()), (x * top + a, -c)]);
        LieElement { degree: u.degree + 1, terms: SparseVec::from_pairs(pairs) }
    }

    /// Standard bracketing of a Lyndon word.
    pub fn lyndon_bracket(&self, w: &[u8]) -> LieElement {
        if w.len() == 1 {
            return self.letter(w[0]);
        }
        let (_, u, v) = standard_factorization(w);
        self.bracket(&self.lyndon_bracket(u), &self.lyndon_bracket(v))
    }

    /// Coordinates in the Lyndon basis. The smallest word in the expansion
    /// of a standard bracketing is its Lyndon word, so peeling off smallest
    /// words is triangular.
    pub fn lyndon_coordinates(&self, e: &LieElement) -> Option<BTreeMap<Vec<u8>, Rational>> {
        let mut rest = e.terms.clone();
        let mut out = BTreeMap::new();
        while let Some((code, c)) = rest.leading().cloned() {
            let w = self.decode(code, e.degree);
            if !is_lyndon(&w) {
                return None;
            }
            rest.axpy(&-&c, &self.lyndon_bracket(&w).terms);
            out.insert(w, c);
        }
        Some(out)
    }
}

/// A homogeneous Lie polynomial, stored through its expansion in the
/// tensor algebra (faithful by PBW).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    pub degree: usize,
    pub terms: SparseVec,
}

impl LieElement {
    pub fn zero(degree: usize) -> Self {
        LieElement { degree, terms: SparseVec::new() }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        LieElement { degree: self.degree, terms: self.terms.add(&other.terms) }
    }

    pub fn scaled(&self, c: &Rational) -> LieElement {
        LieElement { degree: self.degree, terms: self.terms.scaled(c) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witt_numbers() {
        assert_eq!(free_lie_dimension(4, 1), 4);
        assert_eq!(free_lie_dimension(4, 2), 6);
        assert_eq!(free_lie_dimension(10, 3), 330);
        assert_eq!(free_lie_dimension(10, 4), 2475);
        assert_eq!(free_lie_dimension(2, 6), 9);
        for k in 1..=10 {
            for m in 1..=4 {
                assert_eq!(lyndon_words(k, m).len(), free_lie_dimension(k, m), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn words_are_lyndon() {
        let ws = lyndon_words(2, 4);
        assert_eq!(ws, vec![vec![0, 0, 0, 1], vec![0, 0, 1, 1], vec![0, 1, 1, 1]]);
        assert!(ws.iter().all(|w| is_lyndon(w)));
        assert_eq!(standard_factorization(&[0, 0, 1, 1]).0, 1);
    }

    #[test]
    fn lyndon_coordinates_roundtrip() {
        let s = WordSpace { k: 3 };
        let a = s.lyndon_bracket(&[0, 1]);
        let b = s.lyndon_bracket(&[0, 2]);
        let e = s.bracket(&a, &b);
        let coords = s.lyndon_coordinates(&e).unwrap();
        let mut rebuilt = LieElement::zero(4);
        for (w, c) in &coords {
            rebuilt = rebuilt.add(&s.lyndon_bracket(w).scaled(c));
        }
        assert_eq!(rebuilt, e);
        // a non-Lie element has no coordinates
        let x = LieElement { degree: 2, terms: s.concat(&s.letter(0), &s.letter(1)) };
        assert!(s.lyndon_coordinates(&x).is_none());
    }
}
