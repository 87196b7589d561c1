//! Mayer Laplacians, their persistent versions, and spectra.

mod eigen;
mod summary;

use nalgebra::{DMatrix, SVD};
use num_complex::Complex64;

pub use eigen::{dense_eigenvalues, eigenvalues_with, hermitian_eigenvalues, EigenSolver, JACOBI_MAX_ORDER};
pub use summary::{spectral_summary, summarize, SpectralChannel, SpectrumReport, DEFAULT_ZERO_TOLERANCE};

use crate::chain::{MayerComplex, RankEngine, SparseMatrix, AUTO_EXACT_LIMIT};
use crate::cyclotomic::CycMatrix;
use crate::error::{MayerError, Result};
use crate::linalg::{rank_in_place, Field, PrimeField};
use crate::simplicial::FilteredComplex;

/// Dense Hermitian matrix, symmetrized on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    data: DMatrix<Complex64>,
}

impl HermitianMatrix {
    /// `(m + mᴴ) / 2`.
    pub fn new(m: DMatrix<Complex64>) -> Self {
        assert_eq!(m.nrows(), m.ncols(), "Hermitian matrices are square");
        let data = (&m + m.adjoint()).scale(0.5);
        HermitianMatrix { data }
    }

    pub fn order(&self) -> usize {
        self.data.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[(i, j)]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order()).map(|i| self.data[(i, i)].re).sum()
    }
}

/// The two factors of a (persistent) Laplacian `L = downᴴ·down + up·upᴴ`.
///
/// `down` is `M_{n,q}` on `K_a`. `up` is `R·Q`, where the columns of `Q` are an orthonormal
/// basis of the chains `x` of `K_b` in degree `n+N-q` whose image `M^b_up x` lies in `K_a`,
/// and `R` keeps the rows of `M^b_up` indexed by `K_a`.
#[derive(Clone, Debug)]
pub struct LaplacianParts {
    pub down: DMatrix<Complex64>,
    pub up: DMatrix<Complex64>,
}

impl LaplacianParts {
    pub fn assemble(&self) -> HermitianMatrix {
        HermitianMatrix::new(self.down.adjoint() * &self.down + &self.up * self.up.adjoint())
    }
}

/// Column split of `M^b_up` for the pair `a <= b`.
struct UpSplit {
    /// Columns with no entry outside `K_a`; each is its own kernel vector.
    free: Vec<usize>,
    /// Columns touching rows outside `K_a`.
    touching: Vec<usize>,
}

fn split_up(up: &SparseMatrix, cols: usize, ca: usize) -> UpSplit {
    let (touching, free): (Vec<usize>, Vec<usize>) =
        (0..cols).partition(|&j| up.column(j).iter().any(|(r, _)| *r >= ca));
    UpSplit { free, touching }
}

/// Orthonormal basis (as columns over `touching`) of the kernel of the outside-`K_a` rows.
fn touching_kernel(mc: &MayerComplex<'_>, up: &SparseMatrix, touching: &[usize], ca: usize) -> Result<DMatrix<Complex64>> {
    if touching.is_empty() {
        return Ok(DMatrix::zeros(0, 0));
    }
    let mut rows: Vec<usize> = touching
        .iter()
        .flat_map(|&j| up.column(j).iter().map(|(r, _)| *r).filter(|r| *r >= ca))
        .collect();
    rows.sort_unstable();
    rows.dedup();
    let position = |r: usize| rows.binary_search(&r).expect("row collected above");
    let (h, w) = (rows.len(), touching.len());
    let exact = match mc.engine() {
        RankEngine::Exact => true,
        RankEngine::Modular => false,
        RankEngine::Auto => h * w <= AUTO_EXACT_LIMIT,
    };
    let order = mc.order();
    let basis = if exact {
        let mut s = CycMatrix::zeros(order, h, w);
        for (c, &j) in touching.iter().enumerate() {
            for (r, p) in up.column(j) {
                if *r >= ca {
                    s.set(position(*r), c, p.to_cyclotomic());
                }
            }
        }
        s.exact_kernel_basis().to_complex()
    } else {
        let mut dense = DMatrix::<Complex64>::zeros(h, w);
        for (c, &j) in touching.iter().enumerate() {
            for (r, p) in up.column(j) {
                if *r >= ca {
                    dense[(position(*r), c)] = p.to_complex();
                }
            }
        }
        let rank = PrimeField::for_order(order, 2)
            .iter()
            .map(|f| {
                let mut data = vec![f.zero(); h * w];
                for (c, &j) in touching.iter().enumerate() {
                    for (r, p) in up.column(j) {
                        if *r >= ca {
                            data[position(*r) * w + c] = f.embed(p);
                        }
                    }
                }
                rank_in_place(f, h, w, &mut data)
            })
            .max()
            .unwrap_or(0);
        float_kernel(&dense, rank)
    };
    orthonormalize(basis)
}

/// Right null space of `m` given its rank, from the trailing right singular vectors.
fn float_kernel(m: &DMatrix<Complex64>, rank: usize) -> DMatrix<Complex64> {
    let w = m.ncols();
    // Pad with zero rows so the thin SVD returns all `w` right singular vectors.
    let mut padded = DMatrix::<Complex64>::zeros(m.nrows().max(w), w);
    padded.view_mut((0, 0), (m.nrows(), w)).copy_from(m);
    let svd = SVD::new(padded, false, true);
    let v_t = svd.v_t.expect("requested");
    let mut order: Vec<usize> = (0..w).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let kernel: Vec<usize> = order[rank..].to_vec();
    DMatrix::from_fn(w, kernel.len(), |r, c| v_t[(kernel[c], r)].conj())
}

/// Modified Gram–Schmidt with one re-orthogonalization pass.
fn orthonormalize(mut m: DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    for j in 0..m.ncols() {
        let original = m.column(j).norm();
        for _ in 0..2 {
            for k in 0..j {
                let proj = m.column(k).dotc(&m.column(j));
                let qk = m.column(k).clone_owned();
                m.column_mut(j).axpy(-proj, &qk, Complex64::new(1.0, 0.0));
            }
        }
        let norm = m.column(j).norm();
        if norm <= 1e-10 * original.max(f64::MIN_POSITIVE) {
            return Err(MayerError::NumericalDegeneracy(norm, original));
        }
        m.column_mut(j).unscale_mut(norm);
    }
    Ok(m)
}

fn stage_and_order(mc: &MayerComplex<'_>, q: usize, a: f64, b: f64) -> Result<()> {
    if q == 0 || q >= mc.order() as usize {
        return Err(MayerError::InvalidStage { q, n_diff: mc.order() });
    }
    if a > b {
        return Err(MayerError::ParameterOrder { a, b });
    }
    Ok(())
}

/// Dense factors of `Δ^{a,b}_{n,q}`.
pub fn laplacian_parts(mc: &MayerComplex<'_>, n: usize, q: usize, a: f64, b: f64) -> Result<LaplacianParts> {
    stage_and_order(mc, q, a, b)?;
    let k = mc.complex();
    let p = mc.order() as usize - q;
    let ca = k.sublevel_count(n, a);
    let down_m = mc.composed(n, q);
    let down_rows = if n >= q { k.sublevel_count(n - q, a) } else { 0 };
    let down = down_m.to_complex(0..down_rows, ca);

    let up_m = mc.composed(n + p, p);
    let cols = k.sublevel_count(n + p, b);
    let split = split_up(&up_m, cols, ca);
    let q_touch = touching_kernel(mc, &up_m, &split.touching, ca)?;
    let r_all = up_m.to_complex(0..ca, cols);
    let width = split.free.len() + q_touch.ncols();
    let mut up = DMatrix::zeros(ca, width);
    for (c, &j) in split.free.iter().enumerate() {
        up.set_column(c, &r_all.column(j));
    }
    if q_touch.ncols() > 0 {
        let r_touch = DMatrix::from_fn(ca, split.touching.len(), |r, c| r_all[(r, split.touching[c])]);
        up.columns_mut(split.free.len(), q_touch.ncols()).copy_from(&(r_touch * q_touch));
    }
    Ok(LaplacianParts { down, up })
}

/// `Σ_k v_k v_kᴴ` over sparse vectors in `C^dim`.
fn sparse_gram(vectors: impl Iterator<Item = Vec<(usize, Complex64)>>, dim: usize) -> DMatrix<Complex64> {
    let mut g = DMatrix::zeros(dim, dim);
    for v in vectors {
        for &(i, x) in &v {
            for &(j, y) in &v {
                g[(i, j)] += x * y.conj();
            }
        }
    }
    g
}

/// `Δ^{a,b}_{n,q}` on the `n`-simplices of `K_a`.
pub fn persistent_laplacian_with(mc: &MayerComplex<'_>, n: usize, q: usize, a: f64, b: f64) -> Result<HermitianMatrix> {
    stage_and_order(mc, q, a, b)?;
    let k = mc.complex();
    let p = mc.order() as usize - q;
    let ca = k.sublevel_count(n, a);

    // downᴴ·down = Σ over rows r of conj(row r) conj(row r)ᴴ.
    let down_m = mc.composed(n, q);
    let mut rows: Vec<Vec<(usize, Complex64)>> = vec![Vec::new(); down_m.rows()];
    for j in 0..ca {
        for (r, x) in down_m.column(j) {
            rows[*r].push((j, x.to_complex().conj()));
        }
    }
    let mut l = sparse_gram(rows.into_iter(), ca);

    let up_m = mc.composed(n + p, p);
    let cols = k.sublevel_count(n + p, b);
    let split = split_up(&up_m, cols, ca);
    l += sparse_gram(
        split
            .free
            .iter()
            .map(|&j| up_m.column(j).iter().map(|(r, x)| (*r, x.to_complex())).collect()),
        ca,
    );
    if !split.touching.is_empty() {
        let q_touch = touching_kernel(mc, &up_m, &split.touching, ca)?;
        if q_touch.ncols() > 0 {
            let mut r_touch = DMatrix::zeros(ca, split.touching.len());
            for (c, &j) in split.touching.iter().enumerate() {
                for (r, x) in up_m.column(j) {
                    if *r < ca {
                        r_touch[(*r, c)] = x.to_complex();
                    }
                }
            }
            let rq = r_touch * q_touch;
            l += &rq * rq.adjoint();
        }
    }
    Ok(HermitianMatrix::new(l))
}

/// `L_{n,q}` of `K_a`.
pub fn laplacian_at(mc: &MayerComplex<'_>, n: usize, q: usize, a: f64) -> Result<HermitianMatrix> {
    persistent_laplacian_with(mc, n, q, a, a)
}

/// `L_{n,q}` of a whole complex.
pub fn laplacian_matrix(complex: &FilteredComplex, n: usize, q: usize, order: u32) -> Result<HermitianMatrix> {
    let mc = MayerComplex::new(complex, order)?;
    laplacian_at(&mc, n, q, f64::INFINITY)
}

/// `Δ^{a,b}_{n,q}` of a filtered complex.
pub fn persistent_laplacian(
    complex: &FilteredComplex,
    a: f64,
    b: f64,
    n: usize,
    q: usize,
    order: u32,
) -> Result<HermitianMatrix> {
    let mc = MayerComplex::new(complex, order)?;
    persistent_laplacian_with(&mc, n, q, a, b)
}

/// Spectrum of `Δ^{a,b}_{n,q}`, cross-checked against `β^{a,b}_{n,q}`.
pub fn persistent_spectrum(
    mc: &MayerComplex<'_>,
    n: usize,
    q: usize,
    a: f64,
    b: f64,
    solver: EigenSolver,
    zero_tolerance: f64,
) -> Result<SpectrumReport> {
    let l = persistent_laplacian_with(mc, n, q, a, b)?;
    let eigs = eigenvalues_with(&l, solver)?;
    let expected = mc.persistent_betti(n, q, a, b)?;
    let mut report = summarize(eigs, Some(expected), zero_tolerance)?;
    report.channel = Some(SpectralChannel {
        n,
        q,
        order: mc.order(),
        a,
        b,
    });
    Ok(report)
}
