use std::collections::HashMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::cyclotomic::{CycMatrix, XiPoly};
use crate::linalg::Field;
use crate::simplicial::FilteredComplex;

/// Sparse faces × cofaces matrix with entries in `Z[ξ]`, stored by column.
///
/// Columns follow the complex's ordering of the domain dimension, rows the ordering of the
/// target dimension, so the matrix of a sublevel complex is the leading block.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    order: u32,
    rows: usize,
    cols: Vec<Vec<(usize, XiPoly)>>,
}

impl SparseMatrix {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    /// Nonzero entries of column `j`, sorted by row.
    pub fn column(&self, j: usize) -> &[(usize, XiPoly)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Column `j` restricted to `rows_from..rows`, as a dense vector over `field`.
    pub fn dense_column<F: Field>(&self, field: &F, j: usize, rows_from: usize) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); self.rows - rows_from];
        for (r, p) in &self.cols[j] {
            if *r >= rows_from {
                out[r - rows_from] = field.embed(p);
            }
        }
        out
    }

    /// Exact dense block `rows × 0..cols`.
    pub fn to_cyclotomic(&self, rows: std::ops::Range<usize>, cols: usize) -> CycMatrix {
        let mut m = CycMatrix::zeros(self.order, rows.len(), cols);
        for (c, col) in self.cols[..cols].iter().enumerate() {
            for (r, p) in col {
                if rows.contains(r) {
                    m.set(r - rows.start, c, p.to_cyclotomic());
                }
            }
        }
        m
    }

    /// Complex dense block `rows × 0..cols`.
    pub fn to_complex(&self, rows: std::ops::Range<usize>, cols: usize) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(rows.len(), cols);
        for (c, col) in self.cols[..cols].iter().enumerate() {
            for (r, p) in col {
                if rows.contains(r) {
                    m[(r - rows.start, c)] = p.to_complex();
                }
            }
        }
        m
    }
}

/// `d_n : C_n → C_{n-1}` with `d⟨v_0,…,v_n⟩ = Σ_i ξ^i ⟨v_0,…,v̂_i,…,v_n⟩`.
/// For `n = 0` the target is the zero space.
pub fn differential(complex: &FilteredComplex, n: usize, order: u32) -> SparseMatrix {
    if n == 0 {
        return SparseMatrix {
            order,
            rows: 0,
            cols: vec![Vec::new(); complex.count(0)],
        };
    }
    let cols = complex
        .simplices(n)
        .iter()
        .map(|(s, _)| {
            let mut col: Vec<(usize, XiPoly)> = s
                .faces()
                .enumerate()
                .map(|(i, face)| {
                    let row = complex
                        .index_of(&face)
                        .expect("filtered complexes are closed under faces");
                    (row, XiPoly::monomial(order, i))
                })
                .collect();
            col.sort_by_key(|(r, _)| *r);
            col
        })
        .collect();
    SparseMatrix {
        order,
        rows: complex.count(n - 1),
        cols,
    }
}

/// `M_{n,q} = D_{n-q+1} ⋯ D_n : C_n → C_{n-q}`; a map with no rows when `n < q`.
pub fn composed(complex: &FilteredComplex, n: usize, q: usize, order: u32) -> SparseMatrix {
    let domain = complex.count(n);
    if q == 0 {
        return SparseMatrix {
            order,
            rows: domain,
            cols: (0..domain).map(|j| vec![(j, XiPoly::monomial(order, 0))]).collect(),
        };
    }
    if n < q {
        return SparseMatrix {
            order,
            rows: 0,
            cols: vec![Vec::new(); domain],
        };
    }
    let mut current = differential(complex, n, order);
    for k in (n - q + 1..n).rev() {
        let d = differential(complex, k, order);
        current = apply(&d, &current);
    }
    current
}

/// `left · right` for sparse matrices with `right.rows == left.cols`.
fn apply(left: &SparseMatrix, right: &SparseMatrix) -> SparseMatrix {
    debug_assert_eq!(left.cols(), right.rows);
    let order = left.order;
    let cols = right
        .cols
        .iter()
        .map(|col| {
            let mut acc: HashMap<usize, XiPoly> = HashMap::new();
            for (mid, coeff) in col {
                for (row, inner) in &left.cols[*mid] {
                    acc.entry(*row)
                        .or_insert_with(|| XiPoly::zero(order))
                        .add_product(inner, coeff);
                }
            }
            let mut out: Vec<(usize, XiPoly)> = acc
                .into_iter()
                .filter_map(|(r, mut p)| {
                    p.normalize();
                    (!p.is_zero()).then_some((r, p))
                })
                .collect();
            out.sort_by_key(|(r, _)| *r);
            out
        })
        .collect();
    SparseMatrix {
        order,
        rows: left.rows,
        cols,
    }
}
