//! Quadratic Lie algebras `Lie(V)/(R)` computed degree by degree.
//!
//! The ideal generated by `R` is spanned in degree `m` by `[I_{m-1}, V]`.
//! Each degree keeps an echelon form of `I_m` over word coordinates and the
//! independent spanning elements that feed the next degree.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{Echelon, Rational, SparseVec};

use super::lyndon::{free_lie_dimension, LieElement, WordSpace};

#[derive(Clone, Debug)]
pub struct QuadraticLiePresentation {
    pub generators: Vec<String>,
    /// Degree-2 Lie polynomials.
    pub relations: Vec<LieElement>,
}

/// Graded pieces of the ideal, up to some degree.
pub struct IdealTower {
    pub space: WordSpace,
    /// `echelons[m]` spans `I_m`; entries 0 and 1 are empty.
    pub echelons: Vec<Echelon>,
    frontier: Vec<LieElement>,
}

impl IdealTower {
    pub fn new(p: &QuadraticLiePresentation) -> Self {
        let space = WordSpace { k: p.generators.len() };
        let mut tower = IdealTower { space, echelons: vec![Echelon::new(), Echelon::new()], frontier: Vec::new() };
        let mut ech = Echelon::new();
        for r in &p.relations {
            if ech.insert(r.terms.clone()) {
                tower.frontier.push(r.clone());
            }
        }
        tower.echelons.push(ech);
        tower
    }

    pub fn top(&self) -> usize {
        self.echelons.len() - 1
    }

    /// Extend the tower to degree `m`.
    pub fn grow_to(&mut self, m: usize) {
        while self.top() < m {
            let space = self.space;
            let candidates: Vec<LieElement> = self
                .frontier
                .par_iter()
                .flat_map_iter(|u| (0..space.k as u8).map(move |x| space.bracket_letter(u, x)))
                .collect();
            let mut ech = Echelon::new();
            let mut frontier = Vec::new();
            for c in candidates {
                if ech.insert(c.terms.clone()) {
                    frontier.push(c);
                }
            }
            self.echelons.push(ech);
            self.frontier = frontier;
        }
    }

    pub fn rank(&self, m: usize) -> usize {
        self.echelons[m].rank()
    }
}

impl QuadraticLiePresentation {
    /// Dimensions of the quotient in degrees `1..=max_degree`.
    pub fn graded_dims(&self, max_degree: usize) -> Vec<usize> {
        let mut tower = IdealTower::new(self);
        tower.grow_to(max_degree.max(2));
        let k = self.generators.len();
        (1..=max_degree).map(|m| free_lie_dimension(k, m) - if m >= 2 { tower.rank(m) } else { 0 }).collect()
    }
}

pub fn graded_dims(p: &QuadraticLiePresentation, max_degree: usize) -> Vec<usize> {
    p.graded_dims(max_degree)
}

/// Triples `i<j<k` of `1..=n`, the generators `ν_ijk`.
pub fn triples(n: usize) -> Vec<[u8; 3]> {
    (1..=n as u8).combinations(3).map(|c| [c[0], c[1], c[2]]).collect()
}

/// `ν_ijk` as a signed letter: skew in the indices, zero with a repeat.
fn nu(index: &[[u8; 3]], i: u8, j: u8, k: u8) -> Option<(u8, i64)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut s = [i, j, k];
    let mut sign = 1;
    for a in 0..3 {
        for b in a + 1..3 {
            if s[a] > s[b] {
                sign = -sign;
            }
        }
    }
    s.sort();
    Some((index.iter().position(|t| *t == s).unwrap() as u8, sign))
}

fn signed_letters(letters: &[(u8, i64)]) -> LieElement {
    let pairs = letters.iter().map(|&(l, s)| (l as usize, Rational::from_int(s)));
    LieElement { degree: 1, terms: SparseVec::from_pairs(pairs) }
}

/// `t^odd_1(n)`: generators `ν_ijk`, relations
/// `[ν_ijk, ν_pqi + ν_pqj + ν_pqk] = 0` for five distinct indices and
/// `[ν_ijk, ν_pqr] = 0` for six.
pub fn t_odd(n: usize) -> QuadraticLiePresentation {
    let index = triples(n);
    let space = WordSpace { k: index.len() };
    let mut relations = Vec::new();
    let all: Vec<u8> = (1..=n as u8).collect();
    for t in &index {
        let [i, j, k] = *t;
        let a = nu(&index, i, j, k).unwrap();
        let rest: Vec<u8> = all.iter().copied().filter(|x| !t.contains(x)).collect();
        for pq in rest.iter().copied().permutations(2) {
            let (p, q) = (pq[0], pq[1]);
            let sum: Vec<(u8, i64)> = [i, j, k].iter().filter_map(|&x| nu(&index, p, q, x)).collect();
            relations.push(space.bracket(&signed_letters(&[a]), &signed_letters(&sum)));
        }
        for pqr in rest.iter().copied().combinations(3) {
            let b = nu(&index, pqr[0], pqr[1], pqr[2]).unwrap();
            relations.push(space.bracket(&signed_letters(&[a]), &signed_letters(&[b])));
        }
    }
    QuadraticLiePresentation {
        generators: index.iter().map(|t| format!("nu{}{}{}", t[0], t[1], t[2])).collect(),
        relations: relations.into_iter().filter(|r| !r.is_zero()).collect(),
    }
}

/// Pairs `i<j`, the generators `t_ij`.
pub fn pairs(n: usize) -> Vec<[u8; 2]> {
    (1..=n as u8).combinations(2).map(|c| [c[0], c[1]]).collect()
}

fn t_letter(index: &[[u8; 2]], i: u8, j: u8) -> u8 {
    let key = if i < j { [i, j] } else { [j, i] };
    index.iter().position(|p| *p == key).unwrap() as u8
}

/// Drinfeld–Kohno `𝔱₂(n)`: symmetric generators `t_ij`, relations
/// `[t_ij, t_ik + t_jk] = 0` and `[t_ij, t_kl] = 0` for distinct indices.
pub fn drinfeld_kohno(n: usize) -> QuadraticLiePresentation {
    let index = pairs(n);
    let space = WordSpace { k: index.len() };
    let mut relations = Vec::new();
    for ijk in (1..=n as u8).permutations(3) {
        let (i, j, k) = (ijk[0], ijk[1], ijk[2]);
        let sum = signed_letters(&[(t_letter(&index, i, k), 1), (t_letter(&index, j, k), 1)]);
        relations.push(space.bracket(&space.letter(t_letter(&index, i, j)), &sum));
    }
    for ijkl in (1..=n as u8).combinations(4) {
        for (a, b) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))] {
            let x = t_letter(&index, ijkl[a.0], ijkl[a.1]);
            let y = t_letter(&index, ijkl[b.0], ijkl[b.1]);
            relations.push(space.bracket(&space.letter(x), &space.letter(y)));
        }
    }
    QuadraticLiePresentation {
        generators: index.iter().map(|p| format!("t{}{}", p[0], p[1])).collect(),
        relations,
    }
}

/// Image of `ν_ijk` (for the triple at letter `l`): `[t_ij, t_jk]`.
fn xi_letter(nus: &[[u8; 3]], ts: &[[u8; 2]], space: WordSpace, l: u8) -> LieElement {
    let [i, j, k] = nus[l as usize];
    space.bracket(&space.letter(t_letter(ts, i, j)), &space.letter(t_letter(ts, j, k)))
}

/// `ξ` applied to the standard bracketing of a Lyndon word in the `ν`.
fn xi_of_word(w: &[u8], nus: &[[u8; 3]], ts: &[[u8; 2]], space: WordSpace) -> LieElement {
    if w.len() == 1 {
        return xi_letter(nus, ts, space, w[0]);
    }
    let (_, u, v) = super::lyndon::standard_factorization(w);
    space.bracket(&xi_of_word(u, nus, ts, space), &xi_of_word(v, nus, ts, space))
}

/// Rank of `ξ: t^odd_1(n)_m → 𝔱₂(n)_{2m}`: the span of `ξ` of the free Lie
/// algebra on the `ν` in degree `m`, modulo the ideal of `𝔱₂(n)`.
pub fn xi_rank(n: usize, m: usize) -> usize {
    let nus = triples(n);
    let ts = pairs(n);
    let dk = drinfeld_kohno(n);
    let mut tower = IdealTower::new(&dk);
    tower.grow_to(2 * m);
    let space = tower.space;
    let images: Vec<SparseVec> = super::lyndon::lyndon_words(nus.len(), m)
        .par_iter()
        .map(|w| tower.echelons[2 * m].reduce_full(&xi_of_word(w, &nus, &ts, space).terms))
        .collect();
    let mut ech = Echelon::new();
    images.into_iter().filter(|v| ech.insert(v.clone())).count()
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelProbe {
    pub n: usize,
    pub kernel_dims: Vec<usize>,
    pub free_dims: Vec<usize>,
}

impl KernelProbe {
    pub fn is_free(&self) -> bool {
        self.kernel_dims == self.free_dims
    }
}

/// Kernel of `𝔱₂(n) → 𝔱₂(n-1)` killing every `t_in`, against the free Lie
/// algebra on `n-1` letters. The map is onto, so the kernel has dimension
/// `dim 𝔱₂(n)_m - dim 𝔱₂(n-1)_m`.
pub fn kernel_freeness_probe(n: usize, max_degree: usize) -> KernelProbe {
    let big = drinfeld_kohno(n).graded_dims(max_degree);
    let small = if n >= 3 {
        drinfeld_kohno(n - 1).graded_dims(max_degree)
    } else {
        vec![0; max_degree]
    };
    KernelProbe {
        n,
        kernel_dims: big.iter().zip(&small).map(|(a, b)| a - b).collect(),
        free_dims: (1..=max_degree).map(|m| free_lie_dimension(n - 1, m)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_odd_small() {
        assert_eq!(t_odd(3).graded_dims(3), vec![1, 0, 0]);
        assert_eq!(t_odd(4).graded_dims(3), vec![4, 6, 20]);
        assert!(t_odd(4).relations.is_empty());
    }

    #[test]
    fn t_odd_five() {
        assert_eq!(t_odd(5).graded_dims(3), vec![10, 36, 240]);
    }

    #[test]
    fn drinfeld_kohno_three() {
        assert_eq!(drinfeld_kohno(3).graded_dims(3), vec![3, 1, 2]);
    }

    #[test]
    fn xi_small() {
        assert_eq!(xi_rank(3, 1), 1);
        assert_eq!(xi_rank(4, 1), 4);
        assert_eq!(xi_rank(4, 2), 6);
    }

    #[test]
    fn kernel_probe_small() {
        let p = kernel_freeness_probe(3, 3);
        assert_eq!(p.kernel_dims, vec![2, 1, 2]);
        assert!(p.is_free());
        let p = kernel_freeness_probe(4, 2);
        assert_eq!(p.kernel_dims, vec![3, 3]);
    }
}
