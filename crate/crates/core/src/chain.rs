//! Finite chain complexes over ℚ with explicit bases.

use rayon::prelude::*;
use serde::Serialize;

use crate::exact::RationalMatrix;

/// Degree `k` piece: basis labels and the boundary `C_k → C_{k-1}`.
#[derive(Clone, Debug)]
pub struct ChainGroup {
    pub basis: Vec<String>,
    pub boundary: RationalMatrix,
}

#[derive(Clone, Debug)]
pub struct ChainComplex {
    groups: Vec<ChainGroup>,
}

#[derive(Debug, thiserror::Error)]
#[error("boundary of degree {degree} has shape {rows}x{cols}, expected {want_rows}x{want_cols}")]
pub struct ShapeError {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub want_rows: usize,
    pub want_cols: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub dims: Vec<usize>,
    pub ranks: Vec<usize>,
}

impl ChainComplex {
    /// `groups[k]` is degree `k`; degree 0 must have a boundary with 0 rows.
    pub fn new(groups: Vec<ChainGroup>) -> Result<Self, ShapeError> {
        for (k, g) in groups.iter().enumerate() {
            let want_rows = if k == 0 { 0 } else { groups[k - 1].basis.len() };
            let want_cols = g.basis.len();
            if g.boundary.rows() != want_rows || g.boundary.cols() != want_cols {
                return Err(ShapeError {
                    degree: k,
                    rows: g.boundary.rows(),
                    cols: g.boundary.cols(),
                    want_rows,
                    want_cols,
                });
            }
        }
        Ok(ChainComplex { groups })
    }

    pub fn top_degree(&self) -> usize {
        self.groups.len().saturating_sub(1)
    }

    pub fn groups(&self) -> &[ChainGroup] {
        &self.groups
    }

    pub fn dims(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.basis.len()).collect()
    }

    pub fn boundary(&self, k: usize) -> &RationalMatrix {
        &self.groups[k].boundary
    }

    /// True iff every `d_{k-1} ∘ d_k` vanishes.
    pub fn check_d_squared(&self) -> bool {
        (2..self.groups.len()).into_par_iter().all(|k| {
            self.groups[k - 1].boundary.mul(&self.groups[k].boundary).unwrap().is_zero()
        })
    }

    pub fn boundary_ranks(&self) -> Vec<usize> {
        self.groups.par_iter().map(|g| g.boundary.rank()).collect()
    }

    /// Betti numbers `dim C_k - rank d_k - rank d_{k+1}`.
    pub fn homology_ranks(&self) -> Vec<usize> {
        let ranks = self.boundary_ranks();
        (0..self.groups.len())
            .map(|k| {
                let next = ranks.get(k + 1).copied().unwrap_or(0);
                self.groups[k].basis.len() - ranks[k] - next
            })
            .collect()
    }

    pub fn summary(&self) -> HomologySummary {
        HomologySummary { dims: self.dims(), ranks: self.homology_ranks() }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims()
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval() {
        // two vertices, one edge
        let c = ChainComplex::new(vec![
            ChainGroup { basis: vec!["a".into(), "b".into()], boundary: RationalMatrix::zeros(0, 2) },
            ChainGroup {
                basis: vec!["e".into()],
                boundary: RationalMatrix::from_rows_i64(&[&[-1], &[1]]),
            },
        ])
        .unwrap();
        assert!(c.check_d_squared());
        assert_eq!(c.homology_ranks(), vec![1, 0]);
        assert_eq!(c.euler_characteristic(), 1);
    }
}
