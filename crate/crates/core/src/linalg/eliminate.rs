use super::Field;

/// Rank of a dense row-major `rows × cols` matrix, destroying its contents.
///
/// Plain Gaussian elimination: columns are scanned left to right and the pivot is the
/// first nonzero entry at or below the current row.
pub fn rank_in_place<F: Field>(field: &F, rows: usize, cols: usize, data: &mut [F::Elem]) -> usize {
    debug_assert_eq!(data.len(), rows * cols);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !field.is_zero(&data[r * cols + c])) else {
            continue;
        };
        swap_rows(data, cols, rank, pivot);
        let inv = field.inv(&data[rank * cols + c]);
        for r in rank + 1..rows {
            if field.is_zero(&data[r * cols + c]) {
                continue;
            }
            let factor = field.mul(&data[r * cols + c], &inv);
            for k in c..cols {
                let updated = field.sub_mul(&data[r * cols + k], &factor, &data[rank * cols + k]);
                data[r * cols + k] = updated;
            }
        }
        rank += 1;
    }
    rank
}

/// Basis of the right null space of a dense row-major matrix, one vector per free column.
pub fn kernel_basis_in_place<F: Field>(
    field: &F,
    rows: usize,
    cols: usize,
    data: &mut [F::Elem],
) -> Vec<Vec<F::Elem>> {
    debug_assert_eq!(data.len(), rows * cols);
    // Reduced row echelon form.
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !field.is_zero(&data[r * cols + c])) else {
            continue;
        };
        swap_rows(data, cols, rank, pivot);
        let inv = field.inv(&data[rank * cols + c]);
        for k in c..cols {
            data[rank * cols + k] = field.mul(&data[rank * cols + k], &inv);
        }
        for r in 0..rows {
            if r == rank || field.is_zero(&data[r * cols + c]) {
                continue;
            }
            let factor = data[r * cols + c].clone();
            for k in c..cols {
                let updated = field.sub_mul(&data[r * cols + k], &factor, &data[rank * cols + k]);
                data[r * cols + k] = updated;
            }
        }
        pivots.push(c);
        rank += 1;
    }

    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); cols];
            v[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(&data[r * cols + free]);
            }
            v
        })
        .collect()
}

fn swap_rows<T>(data: &mut [T], cols: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    let (lo, hi) = (a.min(b), a.max(b));
    let (head, tail) = data.split_at_mut(hi * cols);
    head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
}

/// Column space built one column at a time.
///
/// Each stored vector has a pivot row where it equals one, and is zero on the pivot rows of
/// every vector stored before it. Reducing a new column against the stored vectors in
/// insertion order therefore clears all pivot rows, and a nonzero remainder is independent.
pub struct IncrementalRank<'f, F: Field> {
    field: &'f F,
    len: usize,
    /// Pivot row and the nonzero entries of each stored vector.
    basis: Vec<(usize, Vec<(usize, F::Elem)>)>,
}

impl<'f, F: Field> IncrementalRank<'f, F> {
    pub fn new(field: &'f F, len: usize) -> Self {
        IncrementalRank {
            field,
            len,
            basis: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Adds a column; returns whether it enlarged the span.
    pub fn push(&mut self, mut column: Vec<F::Elem>) -> bool {
        debug_assert_eq!(column.len(), self.len);
        if self.basis.len() == self.len {
            return false;
        }
        let f = self.field;
        for (pivot, entries) in &self.basis {
            if f.is_zero(&column[*pivot]) {
                continue;
            }
            let factor = column[*pivot].clone();
            for (i, b) in entries {
                column[*i] = f.sub_mul(&column[*i], &factor, b);
            }
        }
        let Some(pivot) = column.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&column[pivot]);
        let entries = column
            .iter()
            .enumerate()
            .skip(pivot)
            .filter(|(_, x)| !f.is_zero(x))
            .map(|(i, x)| (i, f.mul(x, &inv)))
            .collect();
        self.basis.push((pivot, entries));
        true
    }
}

/// `out[k]` = rank of the first `k` columns, for every `k` in `0..=count`.
///
/// `cap` is an upper bound on the rank of all `count` columns; once it is reached the
/// remaining columns are not read.
pub fn prefix_ranks<F: Field>(
    field: &F,
    len: usize,
    cap: usize,
    count: usize,
    mut column: impl FnMut(usize) -> Vec<F::Elem>,
) -> Vec<usize> {
    let cap = cap.min(len);
    let mut inc = IncrementalRank::new(field, len);
    let mut out = Vec::with_capacity(count + 1);
    out.push(0);
    for j in 0..count {
        if inc.rank() < cap {
            inc.push(column(j));
        }
        out.push(inc.rank());
    }
    out
}
