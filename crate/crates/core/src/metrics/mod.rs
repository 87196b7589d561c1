//! Wasserstein and bottleneck distances between persistence diagrams and Mayer diagram families.
//!
//! Essential points are matched only with essential points, in birth order, at cost
//! `|b − b'|`; diagrams with different numbers of essential points are at distance `+∞`.

mod hungarian;

use serde::Serialize;

pub use hungarian::min_cost_assignment;

use crate::chain::{MayerComplex, PersistenceDiagram};
use crate::error::{MayerError, Result};

/// `L_s` distance between two points of the plane.
fn point_cost(x: (f64, f64), y: (f64, f64), s: f64) -> f64 {
    let (u, v) = ((x.0 - y.0).abs(), (x.1 - y.1).abs());
    if s.is_infinite() {
        u.max(v)
    } else {
        (u.powf(s) + v.powf(s)).powf(1.0 / s)
    }
}

/// `L_s` distance from `(b, d)` to the diagonal: `((d − b)/2) · 2^{1/s}`.
fn diagonal_cost(x: (f64, f64), s: f64) -> f64 {
    let half = (x.1 - x.0) / 2.0;
    if s.is_infinite() {
        half
    } else {
        half * 2f64.powf(1.0 / s)
    }
}

fn check_exponent(e: f64) -> Result<()> {
    if e.is_nan() || e < 1.0 {
        return Err(MayerError::InvalidExponent(e));
    }
    Ok(())
}

/// Finite points and sorted essential births.
fn split(d: &PersistenceDiagram) -> (Vec<(f64, f64)>, Vec<f64>) {
    let mut finite = Vec::new();
    let mut essential = Vec::new();
    for (b, de) in d.expanded() {
        if de.is_infinite() {
            essential.push(b);
        } else {
            finite.push((b, de));
        }
    }
    essential.sort_by(f64::total_cmp);
    (finite, essential)
}

/// Augmented cost matrix: real points of `x` then diagonal slots for `y`, against
/// real points of `y` then diagonal slots for `x`.
fn augmented(x: &[(f64, f64)], y: &[(f64, f64)], s: f64) -> Vec<Vec<f64>> {
    let (m, k) = (x.len(), y.len());
    let size = m + k;
    let mut c = vec![vec![0.0; size]; size];
    for i in 0..size {
        for j in 0..size {
            c[i][j] = match (i < m, j < k) {
                (true, true) => point_cost(x[i], y[j], s),
                (true, false) => diagonal_cost(x[i], s),
                (false, true) => diagonal_cost(y[j], s),
                (false, false) => 0.0,
            };
        }
    }
    c
}

/// `W_{r}` with ground metric `L_s`; `r = ∞` gives the bottleneck distance.
pub fn wasserstein(d1: &PersistenceDiagram, d2: &PersistenceDiagram, r: f64, s: f64) -> Result<f64> {
    check_exponent(r)?;
    check_exponent(s)?;
    if r.is_infinite() {
        return bottleneck_with(d1, d2, s);
    }
    let (x, ex) = split(d1);
    let (y, ey) = split(d2);
    if ex.len() != ey.len() {
        return Ok(f64::INFINITY);
    }
    let mut total: f64 = ex.iter().zip(&ey).map(|(a, b)| (a - b).abs().powf(r)).sum();
    if !x.is_empty() || !y.is_empty() {
        let cost: Vec<Vec<f64>> = augmented(&x, &y, s)
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.powf(r)).collect())
            .collect();
        let (value, _) = min_cost_assignment(&cost);
        total += value;
    }
    Ok(total.max(0.0).powf(1.0 / r))
}

/// Bottleneck distance with ground metric `L_∞`.
pub fn bottleneck(d1: &PersistenceDiagram, d2: &PersistenceDiagram) -> Result<f64> {
    bottleneck_with(d1, d2, f64::INFINITY)
}

/// Bottleneck distance with ground metric `L_s`: the smallest candidate cost admitting a
/// perfect matching of the augmented bipartite graph.
pub fn bottleneck_with(d1: &PersistenceDiagram, d2: &PersistenceDiagram, s: f64) -> Result<f64> {
    check_exponent(s)?;
    let (x, ex) = split(d1);
    let (y, ey) = split(d2);
    if ex.len() != ey.len() {
        return Ok(f64::INFINITY);
    }
    let essential = ex.iter().zip(&ey).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    if x.is_empty() && y.is_empty() {
        return Ok(essential);
    }
    let cost = augmented(&x, &y, s);
    let mut candidates: Vec<f64> = cost.iter().flatten().copied().collect();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if perfect_matching(&cost, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(candidates[lo].max(essential))
}

/// Whether the edges with cost `<= eps` contain a perfect matching (augmenting paths).
fn perfect_matching(cost: &[Vec<f64>], eps: f64) -> bool {
    let n = cost.len();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    fn augment(u: usize, cost: &[Vec<f64>], eps: f64, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for v in 0..cost.len() {
            if cost[u][v] <= eps && !seen[v] {
                seen[v] = true;
                if owner[v].map_or(true, |w| augment(w, cost, eps, seen, owner)) {
                    owner[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    (0..n).all(|u| augment(u, cost, eps, &mut vec![false; n], &mut owner))
}

/// The diagrams `D_1, …, D_{N−1}` of one dimension `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagramFamily {
    pub order: u32,
    pub n: usize,
    pub diagrams: Vec<PersistenceDiagram>,
}

impl DiagramFamily {
    pub fn new(order: u32, n: usize, diagrams: Vec<PersistenceDiagram>) -> Result<Self> {
        if diagrams.len() + 1 != order as usize {
            return Err(MayerError::ChannelMismatch(format!(
                "a family for N = {order} needs {} diagrams, got {}",
                order as usize - 1,
                diagrams.len()
            )));
        }
        for (i, d) in diagrams.iter().enumerate() {
            if d.order != order || d.n != n || d.q != i + 1 {
                return Err(MayerError::ChannelMismatch(format!(
                    "diagram {i} has channel (n={}, q={}, N={}), expected (n={n}, q={}, N={order})",
                    d.n,
                    d.q,
                    d.order,
                    i + 1
                )));
            }
        }
        Ok(DiagramFamily { order, n, diagrams })
    }

    /// All stages of dimension `n`.
    pub fn from_complex(mc: &MayerComplex<'_>, n: usize) -> Result<Self> {
        let diagrams = (1..mc.order() as usize)
            .map(|q| mc.diagram(n, q))
            .collect::<Result<Vec<_>>>()?;
        Self::new(mc.order(), n, diagrams)
    }

    fn check_compatible(&self, other: &DiagramFamily) -> Result<()> {
        if self.order != other.order || self.n != other.n {
            return Err(MayerError::ChannelMismatch(format!(
                "(n={}, N={}) vs (n={}, N={})",
                self.n, self.order, other.n, other.order
            )));
        }
        Ok(())
    }
}

/// `(Σ_q W_r(D_q, D'_q)^r)^{1/r}` with ground metric `L_∞`.
pub fn family_wasserstein(f1: &DiagramFamily, f2: &DiagramFamily, r: f64) -> Result<f64> {
    f1.check_compatible(f2)?;
    check_exponent(r)?;
    let per_stage = f1
        .diagrams
        .iter()
        .zip(&f2.diagrams)
        .map(|(a, b)| wasserstein(a, b, r, f64::INFINITY))
        .collect::<Result<Vec<f64>>>()?;
    if r.is_infinite() {
        return Ok(per_stage.into_iter().fold(0.0, f64::max));
    }
    Ok(per_stage.iter().map(|w| w.powf(r)).sum::<f64>().powf(1.0 / r))
}

/// `max_q d_B(D_q, D'_q)`.
pub fn family_bottleneck(f1: &DiagramFamily, f2: &DiagramFamily) -> Result<f64> {
    f1.check_compatible(f2)?;
    f1.diagrams
        .iter()
        .zip(&f2.diagrams)
        .map(|(a, b)| bottleneck(a, b))
        .try_fold(0.0, |acc, d| Ok(f64::max(acc, d?)))
}
