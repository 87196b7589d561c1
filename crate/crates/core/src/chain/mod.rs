//! N-differentials, Mayer Betti numbers and their persistent versions.
//!
//! Ranks of sublevel matrices come from one incremental elimination per matrix: because
//! each dimension is sorted by filtration value, the matrix of `K_a` is a leading column
//! block of the full one, and rows outside `K_a` are zero on those columns.

mod boundary;
mod diagram;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use log::debug;

pub use boundary::{composed, differential, SparseMatrix};
pub use diagram::{count_value_variations, count_variations, DiagramPoint, PersistenceDiagram};

use crate::cyclotomic::{check_order, CycMatrix};
use crate::error::{MayerError, Result};
use crate::linalg::{prefix_ranks, CyclotomicField, Field, PrimeField};
use crate::simplicial::FilteredComplex;

/// How ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RankEngine {
    /// Exact elimination over `Q(ξ_N)`.
    Exact,
    /// Elimination modulo two primes `p ≡ 1 (mod N)`, keeping the larger rank.
    /// The result never exceeds the true rank and is wrong only if both primes divide
    /// a nonzero minor.
    Modular,
    /// Exact for blocks up to [`AUTO_EXACT_LIMIT`] entries, modular beyond.
    #[default]
    Auto,
}

/// Largest dense block (rows × columns) that [`RankEngine::Auto`] eliminates exactly.
pub const AUTO_EXACT_LIMIT: usize = 20_000;

type RankKey = (usize, usize, usize);

/// A filtered complex together with a prime `N`, caching composed boundaries and ranks.
pub struct MayerComplex<'k> {
    complex: &'k FilteredComplex,
    order: u32,
    engine: RankEngine,
    primes: Vec<PrimeField>,
    composed: Mutex<HashMap<(usize, usize), Arc<SparseMatrix>>>,
    ranks: Mutex<HashMap<RankKey, Arc<Vec<usize>>>>,
}

impl<'k> MayerComplex<'k> {
    pub fn new(complex: &'k FilteredComplex, order: u32) -> Result<Self> {
        check_order(order)?;
        Ok(MayerComplex {
            complex,
            order,
            engine: RankEngine::default(),
            primes: PrimeField::for_order(order, 2),
            composed: Mutex::new(HashMap::new()),
            ranks: Mutex::new(HashMap::new()),
        })
    }

    pub fn with_engine(mut self, engine: RankEngine) -> Self {
        self.engine = engine;
        self
    }

    pub fn complex(&self) -> &'k FilteredComplex {
        self.complex
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn engine(&self) -> RankEngine {
        self.engine
    }

    pub(crate) fn check_stage(&self, q: usize) -> Result<()> {
        if q == 0 || q >= self.order as usize {
            return Err(MayerError::InvalidStage { q, n_diff: self.order });
        }
        Ok(())
    }

    /// `M_{n,q}` on the full complex.
    pub fn composed(&self, n: usize, q: usize) -> Arc<SparseMatrix> {
        if let Some(m) = self.composed.lock().unwrap().get(&(n, q)) {
            return m.clone();
        }
        let m = Arc::new(composed(self.complex, n, q, self.order));
        self.composed.lock().unwrap().entry((n, q)).or_insert(m).clone()
    }

    /// `M_{n+N-q, N-q}`, the map whose image is divided out in `H_{n,q}`.
    pub fn composed_up(&self, n: usize, q: usize) -> Arc<SparseMatrix> {
        let p = self.order as usize - q;
        self.composed(n + p, p)
    }

    /// `out[k]` = rank of the first `k` columns of `M_{n,q}` restricted to rows `row_start..`.
    pub fn prefix_ranks(&self, n: usize, q: usize, row_start: usize) -> Arc<Vec<usize>> {
        let key = (n, q, row_start);
        if let Some(r) = self.ranks.lock().unwrap().get(&key) {
            return r.clone();
        }
        let m = self.composed(n, q);
        let cap = if row_start == 0 { self.rank_bound(n, q, m.rows()) } else { usize::MAX };
        let start = std::time::Instant::now();
        let r = Arc::new(self.compute_prefix_ranks(&m, row_start, cap));
        debug!(
            "prefix ranks of M_({n},{q}) from row {row_start}: {}x{}, rank {} of cap {cap}, {:.2?}",
            m.rows(),
            m.cols(),
            r[r.len() - 1],
            start.elapsed()
        );
        self.ranks.lock().unwrap().entry(key).or_insert(r).clone()
    }

    /// The image of `M_{n,q}` lies in the kernel of `M_{n-q,N-q}`.
    fn rank_bound(&self, n: usize, q: usize, rows: usize) -> usize {
        let order = self.order as usize;
        if rows == 0 || n < order {
            return rows;
        }
        let below = self.prefix_ranks(n - q, order - q, 0);
        rows - below[below.len() - 1]
    }

    fn compute_prefix_ranks(&self, m: &SparseMatrix, row_start: usize, cap: usize) -> Vec<usize> {
        let len = m.rows().saturating_sub(row_start);
        let cols = m.cols();
        if len == 0 {
            return vec![0; cols + 1];
        }
        let exact = match self.engine {
            RankEngine::Exact => true,
            RankEngine::Modular => false,
            RankEngine::Auto => len * cols <= AUTO_EXACT_LIMIT,
        };
        if exact {
            return run_prefix(&CyclotomicField { order: self.order }, m, row_start, cap);
        }
        let mut best = vec![0; cols + 1];
        for field in &self.primes {
            let r = run_prefix(field, m, row_start, cap);
            for (b, x) in best.iter_mut().zip(r) {
                *b = (*b).max(x);
            }
        }
        best
    }

    /// Rank of `M_{n,q}` on the sublevel complex `K_a`.
    pub fn rank_at(&self, n: usize, q: usize, a: f64) -> usize {
        let cols = self.complex.sublevel_count(n, a);
        self.prefix_ranks(n, q, 0)[cols]
    }

    /// `β_{n,q}(K_a)`.
    pub fn betti_at(&self, n: usize, q: usize, a: f64) -> Result<usize> {
        self.check_stage(q)?;
        let p = self.order as usize - q;
        let c = self.complex.sublevel_count(n, a);
        Ok(c - self.rank_at(n, q, a) - self.rank_at(n + p, p, a))
    }

    /// `β_{n,q}` of the whole complex.
    pub fn betti(&self, n: usize, q: usize) -> Result<usize> {
        self.betti_at(n, q, f64::INFINITY)
    }

    /// `β^{a,b}_{n,q}`, the rank of `H_{n,q}(K_a) → H_{n,q}(K_b)`.
    ///
    /// With `S` the rows of `n`-simplices of `K_b` missing from `K_a`, a boundary of `K_b`
    /// is a cycle of `K_a` exactly when it vanishes on `S`, so
    /// `dim(Z^a ∩ B^b) = rank M^b_up − rank S-block`.
    pub fn persistent_betti(&self, n: usize, q: usize, a: f64, b: f64) -> Result<usize> {
        self.check_stage(q)?;
        if a > b {
            return Err(MayerError::ParameterOrder { a, b });
        }
        let p = self.order as usize - q;
        let ca = self.complex.sublevel_count(n, a);
        let up_b = self.complex.sublevel_count(n + p, b);
        let z = ca - self.rank_at(n, q, a);
        let boundaries = self.prefix_ranks(n + p, p, 0)[up_b];
        let outside = if up_b == self.complex.sublevel_count(n + p, a) {
            0
        } else {
            self.prefix_ranks(n + p, p, ca)[up_b]
        };
        Ok(z - (boundaries - outside))
    }

    /// `(r, β^{r,r}_{n,q})` for every critical value `r`.
    pub fn betti_curve(&self, n: usize, q: usize) -> Result<Vec<(f64, usize)>> {
        self.complex
            .critical_values()
            .iter()
            .map(|&r| Ok((r, self.betti_at(n, q, r)?)))
            .collect()
    }

    /// `grid[i][j - i] = β^{r_i, r_j}_{n,q}` for `i <= j` over the critical values.
    pub fn persistent_betti_grid(&self, n: usize, q: usize) -> Result<Vec<Vec<usize>>> {
        let crit = self.complex.critical_values();
        (0..crit.len())
            .map(|i| {
                (i..crit.len())
                    .map(|j| self.persistent_betti(n, q, crit[i], crit[j]))
                    .collect()
            })
            .collect()
    }

    /// Persistence diagram of the channel `(n, q)`.
    pub fn diagram(&self, n: usize, q: usize) -> Result<PersistenceDiagram> {
        let grid = self.persistent_betti_grid(n, q)?;
        PersistenceDiagram::from_grid(n, q, self.order, self.complex.critical_values(), &grid)
    }
}

fn run_prefix<F: Field>(field: &F, m: &SparseMatrix, row_start: usize, cap: usize) -> Vec<usize> {
    prefix_ranks(field, m.rows() - row_start, cap, m.cols(), |j| m.dense_column(field, j, row_start))
}

/// Exact matrix of `d_n`, faces × cofaces.
pub fn boundary_matrix(complex: &FilteredComplex, n: usize, order: u32) -> Result<CycMatrix> {
    check_order(order)?;
    let d = differential(complex, n, order);
    Ok(d.to_cyclotomic(0..d.rows(), d.cols()))
}

/// Exact matrix of `M_{n,q} = D_{n-q+1} ⋯ D_n`.
pub fn composed_boundary(complex: &FilteredComplex, n: usize, q: usize, order: u32) -> Result<CycMatrix> {
    check_order(order)?;
    if q == 0 || q >= order as usize {
        return Err(MayerError::InvalidStage { q, n_diff: order });
    }
    let m = composed(complex, n, q, order);
    Ok(m.to_cyclotomic(0..m.rows(), m.cols()))
}

/// `β_{n,q}` of a whole complex, by exact ranks.
pub fn mayer_betti(complex: &FilteredComplex, n: usize, q: usize, order: u32) -> Result<usize> {
    MayerComplex::new(complex, order)?
        .with_engine(RankEngine::Exact)
        .betti(n, q)
}

/// `β^{a,b}_{n,q}` by exact ranks.
pub fn persistent_betti(
    complex: &FilteredComplex,
    n: usize,
    q: usize,
    order: u32,
    a: f64,
    b: f64,
) -> Result<usize> {
    MayerComplex::new(complex, order)?
        .with_engine(RankEngine::Exact)
        .persistent_betti(n, q, a, b)
}

/// `β^{a,b}_{n,q}` as `dim Z^a − dim(Z^a ∩ B^b)` with an explicit kernel basis of `M^a_{n,q}`
/// and `dim(Z^a ∩ B^b) = dim Z^a + dim B^b − rank [Z^a | B^b]`.
///
/// Slower than [`persistent_betti`]; kept as an independent route.
pub fn persistent_betti_by_intersection(
    complex: &FilteredComplex,
    n: usize,
    q: usize,
    order: u32,
    a: f64,
    b: f64,
) -> Result<usize> {
    check_order(order)?;
    if q == 0 || q >= order as usize {
        return Err(MayerError::InvalidStage { q, n_diff: order });
    }
    if a > b {
        return Err(MayerError::ParameterOrder { a, b });
    }
    let p = order as usize - q;
    let ca = complex.sublevel_count(n, a);
    let cb = complex.sublevel_count(n, b);
    let down = composed(complex, n, q, order);
    let down_rows = if n >= q { complex.sublevel_count(n - q, a) } else { 0 };
    let za = down.to_cyclotomic(0..down_rows, ca).exact_kernel_basis();
    let padded = CycMatrix::from_fn(order, cb, za.cols(), |r, c| {
        if r < ca {
            za.get(r, c).clone()
        } else {
            crate::cyclotomic::CyclotomicNumber::zero(order)
        }
    });
    let up = composed(complex, n + p, p, order);
    let bb = up.to_cyclotomic(0..cb, complex.sublevel_count(n + p, b));
    let dim_b = bb.exact_rank();
    let joint = padded.hstack(&bb)?.exact_rank();
    let dim_z = za.cols();
    Ok(dim_z - (dim_z + dim_b - joint))
}

/// Persistence diagram of `(n, q)` with exact ranks on small blocks.
pub fn persistence_diagram(complex: &FilteredComplex, n: usize, q: usize, order: u32) -> Result<PersistenceDiagram> {
    MayerComplex::new(complex, order)?.diagram(n, q)
}

/// `(r, β^{r,r}_{n,q})` at every critical value.
pub fn betti_curve(complex: &FilteredComplex, n: usize, q: usize, order: u32) -> Result<Vec<(f64, usize)>> {
    MayerComplex::new(complex, order)?.betti_curve(n, q)
}
