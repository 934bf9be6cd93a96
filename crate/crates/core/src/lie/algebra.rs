//! The graded-commutative quadratic algebra on odd generators `ν_ijk`
//! (skew in the indices) with relations `ν_ijk ν_ijl = 0` and the five-term
//! relation `ν_ijk ν_klm + ν_jkl ν_lmi + ν_klm ν_mij + ν_lmi ν_ijk + ν_mij ν_jkl = 0`,
//! and the numerical Koszul test against `t^odd_1(n)`.

use itertools::Itertools;
use serde::Serialize;

use crate::exact::{Echelon, Rational, SparseVec};
use crate::series::Series;

use super::quadratic::{t_odd, triples};

/// Exterior monomials: strictly increasing generator lists.
fn monomial_index(k: usize, m: usize) -> Vec<Vec<u8>> {
    (0..k as u8).combinations(m).collect()
}

fn rank_of(monomials: &[Vec<u8>], m: &[u8]) -> usize {
    monomials.binary_search_by(|x| x.as_slice().cmp(m)).unwrap()
}

/// Product of sorted monomials with the Koszul sign, `None` on a repeat.
fn wedge(a: &[u8], b: &[u8]) -> Option<(Vec<u8>, i64)> {
    let mut inversions = 0;
    for x in a {
        for y in b {
            if x == y {
                return None;
            }
            if x > y {
                inversions += 1;
            }
        }
    }
    let mut out: Vec<u8> = a.iter().chain(b).copied().collect();
    out.sort();
    Some((out, if inversions % 2 == 0 { 1 } else { -1 }))
}

type Quadric = Vec<(Vec<u8>, i64)>;

fn nu_letter(index: &[[u8; 3]], i: u8, j: u8, k: u8) -> (u8, i64) {
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
    (index.iter().position(|t| *t == s).unwrap() as u8, sign)
}

fn product(x: (u8, i64), y: (u8, i64)) -> Option<(Vec<u8>, i64)> {
    wedge(&[x.0], &[y.0]).map(|(m, s)| (m, s * x.1 * y.1))
}

fn relations(n: usize) -> Vec<Quadric> {
    let index = triples(n);
    let nu = |i, j, k| nu_letter(&index, i, j, k);
    let mut out = Vec::new();
    for p in (1..=n as u8).permutations(4) {
        let (i, j, k, l) = (p[0], p[1], p[2], p[3]);
        out.push(product(nu(i, j, k), nu(i, j, l)).into_iter().collect());
    }
    for p in (1..=n as u8).permutations(5) {
        let (i, j, k, l, m) = (p[0], p[1], p[2], p[3], p[4]);
        let pairs = [
            (nu(i, j, k), nu(k, l, m)),
            (nu(j, k, l), nu(l, m, i)),
            (nu(k, l, m), nu(m, i, j)),
            (nu(l, m, i), nu(i, j, k)),
            (nu(m, i, j), nu(j, k, l)),
        ];
        out.push(pairs.into_iter().filter_map(|(a, b)| product(a, b)).collect());
    }
    out
}

/// Graded dimensions in degrees `0..=max_degree`, by linear algebra on
/// exterior monomials: `I_m = R · Λ^{m-2}`.
pub fn odd_algebra_dims(n: usize, max_degree: usize) -> Vec<usize> {
    let k = triples(n).len();
    let rels = relations(n);
    (0..=max_degree)
        .map(|m| {
            let basis = monomial_index(k, m);
            if m < 2 {
                return basis.len();
            }
            let mut ech = Echelon::new();
            for r in &rels {
                for tail in monomial_index(k, m - 2) {
                    let v = SparseVec::from_pairs(r.iter().filter_map(|(q, c)| {
                        let (mono, s) = wedge(q, &tail)?;
                        Some((rank_of(&basis, &mono), Rational::from_int(c * s)))
                    }));
                    ech.insert(v);
                }
            }
            basis.len() - ech.rank()
        })
        .collect()
}

/// `∏_m (1 - t^m)^{-d_m}` truncated after `t^len-1`.
pub fn pbw_series(dims: &[usize], len: usize) -> Series {
    let mut acc = Series::from_coeffs(len, [Rational::one()]);
    for (i, &d) in dims.iter().enumerate() {
        let m = i + 1;
        let geometric = Series::from_coeffs(
            len,
            (0..len).map(|e| if e % m == 0 { Rational::one() } else { Rational::zero() }),
        );
        for _ in 0..d {
            acc = acc.mul(&geometric);
        }
    }
    acc
}

/// Number of multisets of basis elements of total degree `0..len`, counted
/// directly with binomial coefficients.
pub fn pbw_counts(dims: &[usize], len: usize) -> Vec<u128> {
    let binom = |n: u128, r: u128| -> u128 { (0..r).fold(1u128, |acc, i| acc * (n - i) / (i + 1)) };
    let multisets = |d: usize, a: usize| -> u128 {
        match (d, a) {
            (_, 0) => 1,
            (0, _) => 0,
            _ => binom((d + a - 1) as u128, a as u128),
        }
    };
    let mut acc = vec![0u128; len];
    acc[0] = 1;
    for (i, &d) in dims.iter().enumerate() {
        let m = i + 1;
        let mut next = vec![0u128; len];
        for (e, &c) in acc.iter().enumerate() {
            for a in 0..=(len - 1 - e) / m {
                next[e + a * m] += c * multisets(d, a);
            }
        }
        acc = next;
    }
    acc
}

#[derive(Clone, Debug, Serialize)]
pub struct KoszulReport {
    pub n: usize,
    pub max_degree: usize,
    pub algebra_dims: Vec<usize>,
    pub lie_dims: Vec<usize>,
    pub envelope_dims: Vec<Rational>,
    /// Coefficients of `h_A(t) h_U(-t)` up to the truncation.
    pub product: Vec<Rational>,
    pub passed: bool,
}

/// `h_A(t) · h_U(-t) ≡ 1 mod t^{max_degree+1}` with `A` the odd algebra and
/// `U` the envelope of `t^odd_1(n)`.
pub fn koszul_check(n: usize, max_degree: usize) -> KoszulReport {
    let len = max_degree + 1;
    let algebra_dims = odd_algebra_dims(n, max_degree);
    let lie_dims = t_odd(n).graded_dims(max_degree);
    let h_u = pbw_series(&lie_dims, len);
    let h_a = Series::from_coeffs(len, algebra_dims.iter().map(|&d| Rational::from_int(d as i64)));
    let prod = h_a.mul(&h_u.negate_variable());
    let product: Vec<Rational> = prod.coeffs().to_vec();
    let passed = product.iter().enumerate().all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() });
    KoszulReport {
        n,
        max_degree,
        algebra_dims,
        lie_dims,
        envelope_dims: h_u.coeffs().to_vec(),
        product,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_dims() {
        assert_eq!(odd_algebra_dims(3, 2), vec![1, 1, 0]);
        assert_eq!(odd_algebra_dims(4, 3), vec![1, 4, 0, 0]);
        assert_eq!(odd_algebra_dims(5, 3), vec![1, 10, 9, 0]);
    }

    #[test]
    fn pbw_agrees_with_counting() {
        let dims = [10, 36, 240];
        let s = pbw_series(&dims, 4);
        let c = pbw_counts(&dims, 4);
        assert_eq!(c, vec![1, 10, 91, 820]);
        for (i, &ci) in c.iter().enumerate() {
            assert_eq!(s.coeff(i), Rational::from_int(ci as i64));
        }
    }

    #[test]
    fn koszul_small() {
        for n in 3..=5 {
            let r = koszul_check(n, 3);
            assert!(r.passed, "{r:?}");
        }
    }
}
