//! Sparse rational vectors and an incremental row-echelon accumulator.

use std::collections::HashMap;

use super::Rational;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from arbitrary `(index, value)` pairs; duplicates are summed.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut v: Vec<(usize, Rational)> = pairs.into_iter().collect();
        v.sort_by_key(|e| e.0);
        let mut entries: Vec<(usize, Rational)> = Vec::with_capacity(v.len());
        for (i, c) in v {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|e| !e.1.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Rational::one())] }
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<&(usize, Rational)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for e in &mut self.entries {
            e.1 = &e.1 * c;
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut v = self.clone();
        v.scale(c);
        v
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Rational, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) if x.0 < y.0 => out.push(a.next().unwrap()),
                (Some(x), Some(y)) if x.0 > y.0 => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, c * v));
                }
                (Some(_), Some(_)) => {
                    let (i, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = &x + &(c * y);
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, c * v));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut v = self.clone();
        v.axpy(&Rational::one(), other);
        v
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut v = self.clone();
        v.axpy(&Rational::from_int(-1), other);
        v
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, b) = (self.entries[i].0, other.entries[j].0);
            if a < b {
                i += 1;
            } else if a > b {
                j += 1;
            } else {
                acc += &(&self.entries[i].1 * &other.entries[j].1);
                i += 1;
                j += 1;
            }
        }
        acc
    }

    /// Apply an index map; the map must be injective on the support.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }
}

/// Row-echelon form built one vector at a time.
///
/// Every stored row is scaled so its leading (smallest-index) entry is 1 and
/// no two rows share a leading index. Insertion only clears leading entries,
/// which is enough for rank and membership; `into_reduced` finishes the
/// back-substitution when a kernel is needed.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_of: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.leading().unwrap().0)
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of.contains_key(&col)
    }

    /// Reduce until the leading entry is not a pivot. The result is zero iff
    /// `v` lies in the row span.
    pub fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        while let Some((c, coef)) = v.leading().cloned() {
            match self.pivot_of.get(&c) {
                Some(&r) => v.axpy(&-coef, &self.rows[r]),
                None => break,
            }
        }
        v
    }

    /// Eliminate every pivot column from `v`; gives a normal form modulo the span.
    pub fn reduce_full(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut k = 0;
        while k < v.nnz() {
            let (c, coef) = v.entries()[k].clone();
            match self.pivot_of.get(&c) {
                Some(&r) => {
                    v.axpy(&-coef, &self.rows[r]);
                    // entries before position k are untouched because pivot rows
                    // start at their pivot column
                }
                None => k += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_leading(v.clone()).is_zero()
    }

    /// Insert `v`; returns true when it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce_leading(v);
        let Some((c, lead)) = v.leading().cloned() else {
            return false;
        };
        if !lead.is_one() {
            v.scale(&lead.recip());
        }
        self.pivot_of.insert(c, self.rows.len());
        self.rows.push(v);
        true
    }

    /// Fully reduced echelon form: each pivot column is zero in all other rows.
    /// Rows are returned sorted by pivot column.
    pub fn into_reduced(self) -> Vec<SparseVec> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r.leading().unwrap().0);
        let pivot_of: HashMap<usize, usize> =
            rows.iter().enumerate().map(|(i, r)| (r.leading().unwrap().0, i)).collect();
        for i in (0..rows.len()).rev() {
            let mut row = std::mem::take(&mut rows[i]);
            let mut k = 1;
            while k < row.nnz() {
                let (c, coef) = row.entries()[k].clone();
                match pivot_of.get(&c) {
                    Some(&j) => {
                        debug_assert!(j > i);
                        row.axpy(&-coef, &rows[j]);
                    }
                    None => k += 1,
                }
            }
            rows[i] = row;
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn axpy_cancels() {
        let mut a = SparseVec::from_pairs([(0, q(1)), (2, q(3))]);
        let b = SparseVec::from_pairs([(1, q(1)), (2, q(1))]);
        a.axpy(&q(-3), &b);
        assert_eq!(a, SparseVec::from_pairs([(0, q(1)), (1, q(-3))]));
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(SparseVec::from_pairs([(0, q(1)), (1, q(2)), (2, q(3))])));
        assert!(!e.insert(SparseVec::from_pairs([(0, q(2)), (1, q(4)), (2, q(6))])));
        assert!(e.insert(SparseVec::from_pairs([(1, q(1))])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&SparseVec::from_pairs([(0, q(1)), (2, q(3))])));
        assert!(!e.contains(&SparseVec::unit(2)));
        let red = e.into_reduced();
        assert_eq!(red[0], SparseVec::from_pairs([(0, q(1)), (2, q(3))]));
    }
}
