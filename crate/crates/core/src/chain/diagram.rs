use serde::{Deserialize, Serialize};

use crate::error::{MayerError, Result};

/// One point of a diagram; `death` is `f64::INFINITY` for essential classes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagramPoint {
    pub birth: f64,
    #[serde(with = "infinite_as_null")]
    pub death: f64,
    pub multiplicity: usize,
}

impl DiagramPoint {
    pub fn is_essential(&self) -> bool {
        self.death.is_infinite()
    }

    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }
}

mod infinite_as_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() {
            s.serialize_none()
        } else {
            s.serialize_some(v)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
    }
}

/// Persistence diagram of one Mayer channel `(n, q)` for a given `N`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PersistenceDiagram {
    pub n: usize,
    pub q: usize,
    pub order: u32,
    pub points: Vec<DiagramPoint>,
}

impl PersistenceDiagram {
    pub fn new(n: usize, q: usize, order: u32, mut points: Vec<DiagramPoint>) -> Self {
        points.retain(|p| p.multiplicity > 0);
        points.sort_by(|a, b| a.birth.total_cmp(&b.birth).then(a.death.total_cmp(&b.death)));
        PersistenceDiagram { n, q, order, points }
    }

    /// Builds a diagram from `grid[i][j - i] = β^{r_i, r_j}` by inclusion–exclusion.
    pub fn from_grid(n: usize, q: usize, order: u32, critical: &[f64], grid: &[Vec<usize>]) -> Result<Self> {
        let m = critical.len();
        let beta = |i: usize, j: usize| -> i64 { grid[i][j - i] as i64 };
        // β^{i-1, j} with the convention β^{-1, ·} = 0.
        let before = |i: usize, j: usize| -> i64 { if i == 0 { 0 } else { beta(i - 1, j) } };
        let mut points = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let mu = (beta(i, j - 1) - beta(i, j)) - (before(i, j - 1) - before(i, j));
                push_point(&mut points, n, q, critical[i], critical[j], mu)?;
            }
            let mu = beta(i, m - 1) - before(i, m - 1);
            push_point(&mut points, n, q, critical[i], f64::INFINITY, mu)?;
        }
        Ok(Self::new(n, q, order, points))
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Total multiplicity.
    pub fn len(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity).sum()
    }

    /// Sum of multiplicities over points alive at `r` (`birth <= r < death`).
    pub fn rank_at(&self, r: f64) -> usize {
        self.points
            .iter()
            .filter(|p| p.birth <= r && r < p.death)
            .map(|p| p.multiplicity)
            .sum()
    }

    /// Points repeated by multiplicity, as `(birth, death)` pairs.
    pub fn expanded(&self) -> Vec<(f64, f64)> {
        self.points
            .iter()
            .flat_map(|p| std::iter::repeat((p.birth, p.death)).take(p.multiplicity))
            .collect()
    }
}

fn push_point(points: &mut Vec<DiagramPoint>, n: usize, q: usize, birth: f64, death: f64, mu: i64) -> Result<()> {
    if mu < 0 {
        return Err(MayerError::NegativeMultiplicity {
            n,
            q,
            birth,
            death,
            multiplicity: mu,
        });
    }
    if mu > 0 {
        points.push(DiagramPoint {
            birth,
            death,
            multiplicity: mu as usize,
        });
    }
    Ok(())
}

/// Number of consecutive entries that differ.
pub fn count_variations<T: PartialEq>(curve: &[T]) -> usize {
    curve.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Like [`count_variations`] for real curves: a change is a relative difference above `rel_tol`.
pub fn count_value_variations(curve: &[f64], rel_tol: f64) -> usize {
    curve
        .windows(2)
        .filter(|w| (w[0] - w[1]).abs() > rel_tol * w[0].abs().max(w[1].abs()))
        .count()
}
