use nalgebra::DMatrix;
use num_complex::Complex64;

use super::CyclotomicNumber;
use crate::error::{MayerError, Result};
use crate::linalg::{kernel_basis_in_place, rank_in_place, CyclotomicField};

/// Dense row-major matrix over `Q(ξ_N)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycMatrix {
    order: u32,
    rows: usize,
    cols: usize,
    entries: Vec<CyclotomicNumber>,
}

impl CycMatrix {
    pub fn zeros(order: u32, rows: usize, cols: usize) -> Self {
        CycMatrix {
            order,
            rows,
            cols,
            entries: vec![CyclotomicNumber::zero(order); rows * cols],
        }
    }

    pub fn identity(order: u32, size: usize) -> Self {
        let mut m = Self::zeros(order, size, size);
        for i in 0..size {
            m.set(i, i, CyclotomicNumber::one(order));
        }
        m
    }

    pub fn from_fn(
        order: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CyclotomicNumber,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let x = f(r, c);
                debug_assert_eq!(x.order(), order);
                entries.push(x);
            }
        }
        CycMatrix {
            order,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_entries(order: u32, rows: usize, cols: usize, entries: Vec<CyclotomicNumber>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(MayerError::Config(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.order() != order) {
            return Err(MayerError::FieldMismatch(order, bad.order()));
        }
        Ok(CycMatrix {
            order,
            rows,
            cols,
            entries,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CyclotomicNumber {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: CyclotomicNumber) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn column(&self, c: usize) -> Vec<CyclotomicNumber> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CyclotomicNumber::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.order, self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn try_mul(&self, rhs: &CycMatrix) -> Result<CycMatrix> {
        if self.order != rhs.order {
            return Err(MayerError::FieldMismatch(self.order, rhs.order));
        }
        if self.cols != rhs.rows {
            return Err(MayerError::Config(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.order, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Rows `range` of the matrix.
    pub fn select_rows(&self, range: std::ops::Range<usize>) -> Self {
        let start = range.start;
        Self::from_fn(self.order, range.len(), self.cols, |r, c| self.get(start + r, c).clone())
    }

    /// Columns `0..count`.
    pub fn leading_columns(&self, count: usize) -> Self {
        Self::from_fn(self.order, self.rows, count, |r, c| self.get(r, c).clone())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &CycMatrix) -> Result<CycMatrix> {
        if self.rows != other.rows {
            return Err(MayerError::Config(format!(
                "cannot stack {} rows beside {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.order, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    /// Rank over `Q(ξ_N)` by exact Gaussian elimination.
    pub fn exact_rank(&self) -> usize {
        let mut data = self.entries.clone();
        rank_in_place(&CyclotomicField { order: self.order }, self.rows, self.cols, &mut data)
    }

    /// Matrix whose columns form a basis of the right null space.
    pub fn exact_kernel_basis(&self) -> CycMatrix {
        let mut data = self.entries.clone();
        let basis = kernel_basis_in_place(
            &CyclotomicField { order: self.order },
            self.rows,
            self.cols,
            &mut data,
        );
        Self::from_fn(self.order, self.cols, basis.len(), |r, c| basis[c][r].clone())
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).to_complex())
    }
}

impl std::fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CycMatrix {}x{} over Q(ξ_{})", self.rows, self.cols, self.order)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
