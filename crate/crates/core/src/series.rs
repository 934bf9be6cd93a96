//! Truncated power series in one and two variables, and the dimension
//! formulas built from them.

use serde::Serialize;

use crate::exact::Rational;

pub fn factorial(n: u64) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * Rational::from_int(k))
}

/// Power series in `t` truncated below `t^len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn zero(len: usize) -> Self {
        Series { coeffs: vec![Rational::zero(); len] }
    }

    pub fn from_coeffs(len: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut s = Self::zero(len);
        for (i, c) in coeffs.into_iter().enumerate().take(len) {
            s.coeffs[i] = c;
        }
        s
    }

    /// `t` itself.
    pub fn variable(len: usize) -> Self {
        Self::from_coeffs(len, [Rational::zero(), Rational::one()])
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Series) -> Series {
        let len = self.len().min(other.len());
        Series::from_coeffs(len, (0..len).map(|i| self.coeff(i) + other.coeff(i)))
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let len = self.len().min(other.len());
        let mut out = Series::zero(len);
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }

    /// `self(t)` evaluated at `t ↦ -t`.
    pub fn negate_variable(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Series {
        let len = self.len();
        let a0 = self.coeff(0);
        assert!(!a0.is_zero(), "series has no inverse");
        let inv0 = a0.recip();
        let mut out = Series::zero(len);
        for n in 0..len {
            let mut s = if n == 0 { Rational::one() } else { Rational::zero() };
            for k in 1..=n {
                s -= &(&self.coeff(k) * &out.coeffs[n - k]);
            }
            out.coeffs[n] = &s * &inv0;
        }
        out
    }

    /// `self ∘ inner`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Series {
        assert!(inner.coeff(0).is_zero(), "inner series must vanish at 0");
        let len = self.len().min(inner.len());
        let mut out = Series::zero(len);
        let mut power = Series::from_coeffs(len, [Rational::one()]);
        for k in 0..len {
            let c = self.coeff(k);
            if !c.is_zero() {
                out = out.add(&power.scale(&c));
            }
            power = power.mul(inner);
        }
        out
    }

    /// Compositional inverse of a series `a_1 t + ...` with `a_1 != 0`,
    /// by fixed-point iteration `g ← g + (t - f∘g)/a_1`.
    pub fn reversion(&self) -> Series {
        let len = self.len();
        let a1 = self.coeff(1);
        assert!(self.coeff(0).is_zero() && !a1.is_zero(), "series is not invertible");
        let t = Series::variable(len);
        let mut g = t.scale(&a1.recip());
        for _ in 0..len {
            let err = t.add(&self.compose(&g).scale(&Rational::from_int(-1)));
            g = g.add(&err.scale(&a1.recip()));
        }
        g
    }

    pub fn exp(&self) -> Series {
        assert!(self.coeff(0).is_zero());
        let len = self.len();
        let mut out = Series::from_coeffs(len, [Rational::one()]);
        let mut power = out.clone();
        for k in 1..len {
            power = power.mul(self).scale(&Rational::new(1, k as i64));
            out = out.add(&power);
        }
        out
    }

    /// `n! [t^n]`, the dimension sequence of an exponential generating series.
    pub fn egf_counts(&self) -> Vec<Rational> {
        (0..self.len()).map(|n| &factorial(n as u64) * &self.coeff(n)).collect()
    }
}

pub fn sinh_series(len: usize) -> Series {
    Series::from_coeffs(
        len,
        (0..len).map(|n| if n % 2 == 1 { factorial(n as u64).recip() } else { Rational::zero() }),
    )
}

/// `-ln(1-t) = Σ t^n/n`
pub fn neg_log_one_minus(len: usize) -> Series {
    Series::from_coeffs(
        len,
        (0..len).map(|n| if n == 0 { Rational::zero() } else { Rational::new(1, n as i64) }),
    )
}

/// `(2k-1)!! / ((2k)!! (2k+1))`, the coefficient of `t^{2k+1}` in arcsin.
pub fn arcsin_coefficient(k: u64) -> Rational {
    let mut r = Rational::one();
    for j in 1..=k as i64 {
        r = r * Rational::new(2 * j - 1, 2 * j);
    }
    r / Rational::from_int(2 * k as i64 + 1)
}

pub fn arcsin_series(len: usize) -> Series {
    Series::from_coeffs(
        len,
        (0..len).map(|n| if n % 2 == 1 { arcsin_coefficient((n / 2) as u64) } else { Rational::zero() }),
    )
}

/// arcsinh from the closed form; coefficients alternate in sign.
pub fn arcsinh_series(len: usize) -> Series {
    Series::from_coeffs(
        len,
        (0..len).map(|n| {
            if n % 2 == 0 {
                return Rational::zero();
            }
            let k = (n / 2) as u64;
            let c = arcsin_coefficient(k);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        }),
    )
}

/// `(n, n! · |[t^n] arcsinh(t)|)` for odd `n ≤ max_n`: the arity dimensions
/// of the operad generated by one ternary bracket.
pub fn lie_odd_dims(max_n: usize) -> Vec<(usize, Rational)> {
    // the compositional inverse of sinh, independent of the closed form
    let inv = sinh_series(max_n + 1).reversion();
    (1..=max_n)
        .step_by(2)
        .map(|n| (n, (&factorial(n as u64) * &inv.coeff(n)).abs()))
        .collect()
}

/// Polynomial in `z`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polynomial(pub Vec<Rational>);

impl Polynomial {
    pub fn one() -> Self {
        Polynomial(vec![Rational::one()])
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial(out).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.len() > 1 && self.0.last().is_some_and(Rational::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn value_at_one(&self) -> Rational {
        self.0.iter().cloned().sum()
    }

    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        self.0.iter().map(Rational::to_i64).collect()
    }
}

/// `∏_{1 ≤ k < n/2} (1 + (n-2k)^2 z)`
pub fn poincare_polynomial(n: usize) -> Polynomial {
    let mut p = Polynomial::one();
    let mut k = 1;
    while 2 * k < n {
        let a = (n - 2 * k) as i64;
        p = p.mul(&Polynomial(vec![Rational::one(), Rational::from_int(a * a)]));
        k += 1;
    }
    p
}

/// Series in `t` and `z`, truncated below `t^t_len` and `z^z_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    t_len: usize,
    z_len: usize,
    coeffs: Vec<Vec<Rational>>,
}

impl BiSeries {
    pub fn zero(t_len: usize, z_len: usize) -> Self {
        BiSeries { t_len, z_len, coeffs: vec![vec![Rational::zero(); z_len]; t_len] }
    }

    pub fn one(t_len: usize, z_len: usize) -> Self {
        let mut s = Self::zero(t_len, z_len);
        if t_len > 0 && z_len > 0 {
            s.coeffs[0][0] = Rational::one();
        }
        s
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, c: Rational) {
        if i < self.t_len && j < self.z_len {
            self.coeffs[i][j] = c;
        }
    }

    pub fn add(&self, other: &BiSeries) -> BiSeries {
        let mut out = self.clone();
        for i in 0..self.t_len {
            for j in 0..self.z_len {
                out.coeffs[i][j] += &other.coeff(i, j);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> BiSeries {
        let mut out = self.clone();
        out.coeffs.iter_mut().flatten().for_each(|x| *x = &*x * c);
        out
    }

    pub fn mul(&self, other: &BiSeries) -> BiSeries {
        let mut out = BiSeries::zero(self.t_len, self.z_len);
        for i in 0..self.t_len {
            for j in 0..self.z_len {
                let a = &self.coeffs[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..self.t_len - i {
                    for l in 0..self.z_len - j {
                        let b = other.coeff(k, l);
                        if !b.is_zero() {
                            out.coeffs[i + k][j + l] += &(a * &b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn exp(&self) -> BiSeries {
        assert!(self.coeff(0, 0).is_zero());
        let mut out = BiSeries::one(self.t_len, self.z_len);
        let mut power = out.clone();
        for k in 1..self.t_len.max(self.z_len) + 1 {
            power = power.mul(self).scale(&Rational::new(1, k as i64));
            out = out.add(&power);
        }
        out
    }

    /// The `t^n` coefficient as a polynomial in `z`.
    pub fn t_coefficient(&self, n: usize) -> Polynomial {
        Polynomial(self.coeffs[n].clone()).trimmed()
    }
}

/// `arcsin(t√z)/√z = Σ c_k t^{2k+1} z^k`, with no radicals.
pub fn arcsin_scaled(t_len: usize, z_len: usize) -> BiSeries {
    let mut s = BiSeries::zero(t_len, z_len);
    let mut k = 0;
    while 2 * k + 1 < t_len {
        s.set(2 * k + 1, k, arcsin_coefficient(k as u64));
        k += 1;
    }
    s
}

/// `n! [t^n] exp(arcsin(t√z)/√z)` for `n ≤ max_n`.
pub fn egf_poincare(max_n: usize) -> Vec<Polynomial> {
    let z_len = max_n / 2 + 1;
    let f = arcsin_scaled(max_n + 1, z_len).exp();
    (0..=max_n)
        .map(|n| {
            let p = f.t_coefficient(n);
            Polynomial(p.0.iter().map(|c| c * &factorial(n as u64)).collect())
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub product_matches_egf: bool,
    pub closed_form_matches_reversion: bool,
    pub sinh_arcsinh_identity: bool,
    pub pois_invariant_totals: bool,
    pub pois_odd_totals: Vec<(usize, Rational)>,
    pub pois_odd_totals_match: bool,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.product_matches_egf
            && self.closed_form_matches_reversion
            && self.sinh_arcsinh_identity
            && self.pois_invariant_totals
            && self.pois_odd_totals_match
    }
}

/// Cross-checks the closed-form dimension formulas against each other up to
/// arity `max_n`.
pub fn egf_cross_check(max_n: usize) -> SeriesReport {
    let len = max_n + 1;
    let egf = egf_poincare(max_n);
    let product_matches_egf = (2..=max_n).all(|n| egf[n] == poincare_polynomial(n));

    let closed = arcsinh_series(len);
    let reverted = sinh_series(len).reversion();
    let closed_form_matches_reversion = closed == reverted;

    let sinh_arcsinh_identity = sinh_series(len).compose(&closed) == Series::variable(len);

    // [Com]^{Z2} ∘ Lie: sinh(-ln(1-t)) has n!/2 in every arity n ≥ 2
    let inv = sinh_series(len).compose(&neg_log_one_minus(len)).egf_counts();
    let pois_invariant_totals = inv.get(1).is_none_or(Rational::is_one)
        && (2..=max_n).all(|n| inv[n] == &factorial(n as u64) / &Rational::from_int(2));

    // Com ∘ Lie^odd at z = 1: exp(arcsin t)
    let odd = arcsin_series(len).exp();
    let counts = odd.egf_counts();
    let pois_odd_totals: Vec<(usize, Rational)> = (2..=max_n).map(|n| (n, counts[n].clone())).collect();
    let pois_odd_totals_match = pois_odd_totals.iter().all(|(n, c)| *c == poincare_polynomial(*n).value_at_one());

    SeriesReport {
        product_matches_egf,
        closed_form_matches_reversion,
        sinh_arcsinh_identity,
        pois_invariant_totals,
        pois_odd_totals,
        pois_odd_totals_match,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &Polynomial) -> Vec<i64> {
        p.integer_coeffs().unwrap()
    }

    #[test]
    fn lie_odd() {
        let d: Vec<(usize, Option<i64>)> = lie_odd_dims(9).into_iter().map(|(n, c)| (n, c.to_i64())).collect();
        assert_eq!(
            d,
            vec![(1, Some(1)), (3, Some(1)), (5, Some(9)), (7, Some(225)), (9, Some(11025))]
        );
    }

    #[test]
    fn poincare() {
        assert_eq!(ints(&poincare_polynomial(2)), vec![1]);
        assert_eq!(ints(&poincare_polynomial(3)), vec![1, 1]);
        assert_eq!(ints(&poincare_polynomial(4)), vec![1, 4]);
        assert_eq!(ints(&poincare_polynomial(5)), vec![1, 10, 9]);
        assert_eq!(ints(&poincare_polynomial(6)), vec![1, 20, 64]);
    }

    #[test]
    fn egf_matches_product() {
        let egf = egf_poincare(8);
        assert_eq!(ints(&egf[4]), vec![1, 4]);
        for (n, p) in egf.iter().enumerate().skip(2) {
            assert_eq!(*p, poincare_polynomial(n), "n = {n}");
        }
    }

    #[test]
    fn cross_check_passes() {
        let r = egf_cross_check(8);
        assert!(r.passed(), "{r:?}");
        let totals: Vec<i64> = r.pois_odd_totals.iter().map(|(_, c)| c.to_i64().unwrap()).collect();
        assert_eq!(&totals[..4], &[1, 2, 5, 20]);
    }

    #[test]
    fn reversion_roundtrip() {
        let s = sinh_series(10);
        assert_eq!(s.compose(&s.reversion()), Series::variable(10));
        let e = Series::variable(6).exp();
        assert_eq!(e.egf_counts(), vec![Rational::one(); 6]);
        assert_eq!(e.mul(&e.negate_variable()), Series::from_coeffs(6, [Rational::one()]));
        assert_eq!(e.recip(), e.negate_variable());
    }
}
