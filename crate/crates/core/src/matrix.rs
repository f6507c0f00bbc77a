//! Dense GF(2) matrices stored as bit-packed rows.

use std::fmt;

use crate::bits::BitVec;

#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

/// Result of Gauss-Jordan elimination: independent reduced rows and, for each
/// row, the column holding its pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<BitVec>,
    pub pivots: Vec<usize>,
}

impl BinaryMatrix {
    pub fn new(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        Self { cols, rows }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(cols, vec![BitVec::zeros(cols); rows])
    }

    pub fn identity(size: usize) -> Self {
        Self::new(
            size,
            (0..size)
                .map(|i| BitVec::from_positions(size, [i]))
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut out = vec![BitVec::zeros(self.nrows()); self.cols];
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                out[c].set(r, true);
            }
        }
        BinaryMatrix::new(self.nrows(), out)
    }

    /// `self · otherᵀ`.
    pub fn mul_transpose(&self, other: &BinaryMatrix) -> BinaryMatrix {
        assert_eq!(self.cols, other.cols);
        let rows = self
            .rows
            .iter()
            .map(|a| {
                BitVec::from_positions(
                    other.nrows(),
                    other
                        .rows
                        .iter()
                        .enumerate()
                        .filter(|(_, b)| a.dot(b))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        BinaryMatrix::new(other.nrows(), rows)
    }

    /// `v · self` for a row vector `v` of length `nrows`.
    pub fn left_mul(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.nrows());
        let mut out = BitVec::zeros(self.cols);
        for i in v.iter_ones() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    /// Syndrome-style product `self · vᵀ` for `v` of length `ncols`.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        BitVec::from_positions(
            self.nrows(),
            self.rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.dot(v))
                .map(|(i, _)| i),
        )
    }

    /// Gauss-Jordan elimination, choosing pivot columns in `order` priority.
    /// Columns missing from `order` are never used as pivots.
    pub fn echelon_with_order(&self, order: &[usize]) -> Echelon {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for &c in order {
            if next == rows.len() {
                break;
            }
            let Some(p) = (next..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(next, p);
            let pivot_row = rows[next].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != next && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next += 1;
        }
        rows.truncate(next);
        Echelon { rows, pivots }
    }

    /// Reduced row echelon form with lowest-index pivots.
    pub fn echelon(&self) -> Echelon {
        let order: Vec<usize> = (0..self.cols).collect();
        self.echelon_with_order(&order)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rows.len()
    }

    /// True when both matrices span the same row space.
    pub fn same_row_space(&self, other: &BinaryMatrix) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let r = self.rank();
        if r != other.rank() {
            return false;
        }
        let mut stacked = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        BinaryMatrix::new(self.cols, stacked).rank() == r
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.nrows(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}
