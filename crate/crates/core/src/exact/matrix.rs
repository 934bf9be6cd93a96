use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Echelon, Rational, SparseVec};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfBounds { row: usize, col: usize, rows: usize, cols: usize },
}

/// Sparse matrix over ℚ, stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        RationalMatrix { rows: n, cols: n, columns: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Result<Self, MatrixError> {
        for (c, col) in columns.iter().enumerate() {
            if let Some(r) = col.max_index() {
                if r >= rows {
                    return Err(MatrixError::OutOfBounds { row: r, col: c, rows, cols: columns.len() });
                }
            }
        }
        Ok(RationalMatrix { rows, cols: columns.len(), columns })
    }

    /// Duplicate positions are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self, MatrixError> {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(MatrixError::OutOfBounds { row: r, col: c, rows, cols });
            }
            buckets[c].push((r, v));
        }
        let columns = buckets.into_iter().map(SparseVec::from_pairs).collect();
        Ok(RationalMatrix { rows, cols, columns })
    }

    /// Row-major integer literal, mostly for tests.
    pub fn from_rows_i64(data: &[&[i64]]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        let trip = data.iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().map(move |(j, &v)| (i, j, Rational::from_int(v)))
        });
        Self::from_triplets(rows, cols, trip).expect("literal in bounds")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.columns[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.entries().iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.triplets() {
            buckets[r].push((c, v.clone()));
        }
        RationalMatrix {
            rows: self.cols,
            cols: self.rows,
            columns: buckets.into_iter().map(SparseVec::from_pairs).collect(),
        }
    }

    /// Row vectors of the matrix, each indexed by column.
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        self.transpose().columns
    }

    pub fn mul_vec(&self, v: &SparseVec) -> Result<SparseVec, MatrixError> {
        if let Some(m) = v.max_index() {
            if m >= self.cols {
                return Err(MatrixError::DimensionMismatch { expected: self.cols, got: m + 1 });
            }
        }
        let mut out = SparseVec::new();
        for (c, x) in v.entries() {
            out.axpy(x, &self.columns[*c]);
        }
        Ok(out)
    }

    /// `self * rhs`
    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        let columns = rhs.columns.iter().map(|c| self.mul_vec(c).unwrap()).collect();
        Ok(RationalMatrix { rows: self.rows, cols: rhs.cols, columns })
    }

    pub fn scaled(&self, c: &Rational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|v| v.scaled(c)).collect(),
        }
    }

    pub fn add(&self, rhs: &RationalMatrix) -> Result<RationalMatrix, MatrixError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatrixError::DimensionMismatch { expected: self.cols, got: rhs.cols });
        }
        let columns = self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.add(b)).collect();
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, columns })
    }

    /// Echelon form of the column space.
    pub fn column_echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        for col in &self.columns {
            e.insert(col.clone());
        }
        e
    }

    /// Eliminates along the smaller side.
    pub fn rank(&self) -> usize {
        if self.rows < self.cols {
            let mut e = Echelon::new();
            for row in self.row_vectors() {
                e.insert(row);
            }
            e.rank()
        } else {
            self.column_echelon().rank()
        }
    }

    /// Rank after relabeling row indices by `order` (a permutation of
    /// `0..rows`), which changes every pivot choice of the elimination.
    pub fn rank_with_row_order(&self, order: &[usize]) -> usize {
        assert_eq!(order.len(), self.rows);
        let mut e = Echelon::new();
        for col in &self.columns {
            e.insert(col.reindex(|r| order[r]));
        }
        e.rank()
    }

    /// Basis of `{v : self * v = 0}` read off the reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new();
        for row in self.row_vectors() {
            e.insert(row);
        }
        let reduced = e.into_reduced();
        let mut is_pivot = vec![false; self.cols];
        for r in &reduced {
            is_pivot[r.leading().unwrap().0] = true;
        }
        let mut kernel: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (f, p) in is_pivot.iter().enumerate() {
            if !p {
                kernel[f].push((f, Rational::one()));
            }
        }
        for r in &reduced {
            let p = r.leading().unwrap().0;
            for (c, v) in &r.entries()[1..] {
                kernel[*c].push((p, -v));
            }
        }
        kernel
            .into_iter()
            .enumerate()
            .filter(|(f, _)| !is_pivot[*f])
            .map(|(_, pairs)| SparseVec::from_pairs(pairs))
            .collect()
    }

    /// Whether `v` (length `rows`) lies in the column span.
    pub fn image_membership(&self, v: &SparseVec) -> Result<bool, MatrixError> {
        if let Some(m) = v.max_index() {
            if m >= self.rows {
                return Err(MatrixError::DimensionMismatch { expected: self.rows, got: m + 1 });
            }
        }
        Ok(self.column_echelon().contains(v))
    }

    /// Dense fraction-free (Bareiss) rank over ℤ after clearing denominators
    /// column by column. Independent of the sparse path; used to cross-check.
    pub fn rank_fraction_free(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            let lcm = col.entries().iter().fold(BigInt::one(), |l, (_, v)| l.lcm(&v.denom()));
            for (r, v) in col.entries() {
                a[*r][c] = v.numer() * (&lcm / v.denom());
            }
        }
        bareiss_rank(a)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            out[r][c] = v.clone();
        }
        out
    }
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k];
                // exact division is the Bareiss invariant
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_ranks() {
        assert_eq!(RationalMatrix::zeros(0, 0).rank(), 0);
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        let m = RationalMatrix::from_rows_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank_fraction_free(), 1);
    }

    #[test]
    fn kernels() {
        assert!(RationalMatrix::identity(4).kernel_basis().is_empty());
        assert_eq!(RationalMatrix::zeros(2, 2).kernel_basis().len(), 2);
        let k = RationalMatrix::from_rows_i64(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].get(0), -k[0].get(1));
        assert!(!k[0].is_zero());
    }

    #[test]
    fn membership() {
        let m = RationalMatrix::from_rows_i64(&[&[1], &[0]]);
        assert!(m.image_membership(&SparseVec::new()).unwrap());
        assert!(!m.image_membership(&SparseVec::unit(1)).unwrap());
        assert!(RationalMatrix::identity(3).image_membership(&SparseVec::unit(2)).unwrap());
        assert!(matches!(
            m.image_membership(&SparseVec::unit(5)),
            Err(MatrixError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn bareiss_with_fractions() {
        let m = RationalMatrix::from_triplets(
            2,
            2,
            [
                (0, 0, Rational::new(1, 2)),
                (0, 1, Rational::new(1, 3)),
                (1, 0, Rational::new(3, 2)),
                (1, 1, Rational::one()),
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank_fraction_free(), 1);
    }
}
