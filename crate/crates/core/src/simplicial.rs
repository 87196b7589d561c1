//! Simplices, filtered complexes and Vietoris–Rips filtrations.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{MayerError, Result};

/// A simplex given by strictly increasing vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Sorts the ids; rejects empty input and repeated vertices.
    pub fn new(mut ids: Vec<usize>) -> Result<Self> {
        if ids.is_empty() {
            return Err(MayerError::EmptySimplex);
        }
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(MayerError::DuplicateVertex(w[0]));
        }
        Ok(Simplex(ids))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The `i`-th face map: drop the vertex in position `i`.
    pub fn face(&self, i: usize) -> Result<Simplex> {
        if self.dim() == 0 || i > self.dim() {
            return Err(MayerError::FaceOutOfRange {
                index: i,
                dim: self.dim(),
            });
        }
        let mut v = self.0.clone();
        v.remove(i);
        Ok(Simplex(v))
    }

    /// All codimension-one faces, in face-map order.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.dim() == 0 { 0 } else { self.0.len() };
        (0..n).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Simplex(v)
        })
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "⟨{}⟩", ids.join(","))
    }
}

/// Points in `R^d` with optional labels (element symbols for molecules).
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    points: Vec<Vec<f64>>,
    labels: Option<Vec<String>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(MayerError::EmptyPointCloud);
        };
        let dim = first.len();
        if let Some((index, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(MayerError::RaggedPoints {
                index,
                expected: dim,
                found: p.len(),
            });
        }
        Ok(PointCloud {
            points,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.points.len() {
            return Err(MayerError::Config(format!(
                "{} labels for {} points",
                labels.len(),
                self.points.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.points[i]
            .iter()
            .zip(&self.points[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

fn filtration_order(a: &(Simplex, f64), b: &(Simplex, f64)) -> Ordering {
    a.1.total_cmp(&b.1)
        .then(a.0.dim().cmp(&b.0.dim()))
        .then_with(|| a.0.cmp(&b.0))
}

/// A simplicial complex with a monotone filtration function.
///
/// Simplices of each dimension are kept sorted by (value, lexicographic vertices), so the
/// `n`-simplices of every sublevel complex `K_a` are a prefix of the dimension-`n` list.
/// Boundary matrices of sublevel complexes are therefore leading blocks of the full ones.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    by_dim: Vec<Vec<(Simplex, f64)>>,
    index: Vec<HashMap<Simplex, usize>>,
    critical_values: Vec<f64>,
}

impl FilteredComplex {
    /// Builds a complex from simplices with values. Every face must be present with a value
    /// no larger than its coface.
    pub fn new(simplices: Vec<(Simplex, f64)>) -> Result<Self> {
        let mut all = simplices;
        all.sort_by(filtration_order);
        let top = all.iter().map(|(s, _)| s.dim()).max();
        let mut by_dim: Vec<Vec<(Simplex, f64)>> = vec![Vec::new(); top.map_or(0, |d| d + 1)];
        for (s, v) in all {
            if v.is_nan() {
                return Err(MayerError::Config(format!("simplex {s} has a NaN filtration value")));
            }
            by_dim[s.dim()].push((s, v));
        }
        let index: Vec<HashMap<Simplex, usize>> = by_dim
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, (s, _))| (s.clone(), i)).collect())
            .collect();
        for (list, map) in by_dim.iter().zip(&index) {
            if map.len() != list.len() {
                let dup = list.iter().find(|(s, _)| list.iter().filter(|(t, _)| t == s).count() > 1);
                return Err(MayerError::Config(format!(
                    "simplex {} listed more than once",
                    dup.map(|(s, _)| s.to_string()).unwrap_or_default()
                )));
            }
        }

        for (d, list) in by_dim.iter().enumerate().skip(1) {
            for (s, v) in list {
                for face in s.faces() {
                    match index[d - 1].get(&face) {
                        None => {
                            return Err(MayerError::Config(format!(
                                "face {face} of {s} is missing from the complex"
                            )))
                        }
                        Some(&i) => {
                            let fv = by_dim[d - 1][i].1;
                            if fv > *v {
                                return Err(MayerError::NonMonotone {
                                    face: face.to_string(),
                                    face_value: fv,
                                    coface: s.to_string(),
                                    coface_value: *v,
                                });
                            }
                        }
                    }
                }
            }
        }

        let mut critical_values: Vec<f64> =
            by_dim.iter().flatten().map(|(_, v)| *v).collect();
        critical_values.sort_by(f64::total_cmp);
        critical_values.dedup();

        Ok(FilteredComplex {
            by_dim,
            index,
            critical_values,
        })
    }

    /// An unfiltered complex: every simplex gets value 0.
    pub fn from_simplices(simplices: Vec<Simplex>) -> Result<Self> {
        Self::new(simplices.into_iter().map(|s| (s, 0.0)).collect())
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.by_dim.iter().rposition(|l| !l.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.iter().all(Vec::is_empty)
    }

    /// Number of `n`-simplices (zero past the top dimension).
    pub fn count(&self, n: usize) -> usize {
        self.by_dim.get(n).map_or(0, Vec::len)
    }

    pub fn len(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// The ordered `n`-simplices with their values.
    pub fn simplices(&self, n: usize) -> &[(Simplex, f64)] {
        self.by_dim.get(n).map_or(&[], Vec::as_slice)
    }

    /// All simplices in the global filtration order (value, dimension, lexicographic).
    pub fn iter(&self) -> impl Iterator<Item = &(Simplex, f64)> {
        let mut all: Vec<&(Simplex, f64)> = self.by_dim.iter().flatten().collect();
        all.sort_by(|a, b| filtration_order(a, b));
        all.into_iter()
    }

    /// Position of `s` in its dimension's ordering.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn value(&self, s: &Simplex) -> Option<f64> {
        self.index_of(s).map(|i| self.by_dim[s.dim()][i].1)
    }

    /// Sorted distinct filtration values.
    pub fn critical_values(&self) -> &[f64] {
        &self.critical_values
    }

    /// Per-dimension counts of simplices with value `<= a`.
    pub fn sublevel_sizes(&self, a: f64) -> Vec<usize> {
        self.by_dim
            .iter()
            .map(|list| list.partition_point(|(_, v)| *v <= a))
            .collect()
    }

    /// Number of `n`-simplices in `K_a`.
    pub fn sublevel_count(&self, n: usize, a: f64) -> usize {
        self.by_dim
            .get(n)
            .map_or(0, |list| list.partition_point(|(_, v)| *v <= a))
    }

    /// The sublevel complex `K_a` with its inherited values.
    pub fn sublevel(&self, a: f64) -> FilteredComplex {
        let by_dim: Vec<Vec<(Simplex, f64)>> = self
            .by_dim
            .iter()
            .map(|list| list.iter().take_while(|(_, v)| *v <= a).cloned().collect())
            .collect();
        let index = by_dim
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, (s, _))| (s.clone(), i)).collect())
            .collect();
        let critical_values = self.critical_values.iter().copied().filter(|v| *v <= a).collect();
        FilteredComplex {
            by_dim,
            index,
            critical_values,
        }
    }

    /// Same simplices, values replaced by `f`. The new values must still be monotone.
    pub fn refiltered(&self, f: impl Fn(&Simplex) -> f64) -> Result<FilteredComplex> {
        FilteredComplex::new(
            self.by_dim
                .iter()
                .flatten()
                .map(|(s, _)| (s.clone(), f(s)))
                .collect(),
        )
    }
}

/// Distances closer than this, relative to the largest one, are treated as equal.
pub const DISTANCE_RESOLUTION: f64 = 1e-9;

/// Replaces each distance by the smallest member of its cluster of near-equal distances,
/// so symmetric configurations give one critical value per geometric distance.
fn snap_ties(dist: &mut [f64], n: usize) {
    let mut values: Vec<f64> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| dist[i * n + j]).collect();
    if values.is_empty() {
        return;
    }
    values.sort_by(f64::total_cmp);
    let tol = DISTANCE_RESOLUTION * values[values.len() - 1].max(1.0);
    let mut representative = Vec::with_capacity(values.len());
    let mut start = values[0];
    let mut prev = values[0];
    for &v in &values {
        if v - prev > tol {
            start = v;
        }
        representative.push(start);
        prev = v;
    }
    for d in dist.iter_mut() {
        if *d > 0.0 {
            let k = values.partition_point(|x| x < d);
            *d = representative[k];
        }
    }
}

/// Vietoris–Rips filtration: every vertex set of size `<= max_dim + 1` whose diameter is at most
/// `max_radius` (unbounded when `None`), filtered by its diameter. Vertices sit at value 0.
/// Pairwise distances agreeing to [`DISTANCE_RESOLUTION`] are merged first.
pub fn vr_filtration(cloud: &PointCloud, max_dim: usize, max_radius: Option<f64>) -> Result<FilteredComplex> {
    if let Some(r) = max_radius {
        if r.is_nan() || r < 0.0 {
            return Err(MayerError::Config(format!("max radius must be non-negative, got {r}")));
        }
    }
    let n = cloud.len();
    let limit = max_radius.unwrap_or(f64::INFINITY);
    let mut dist = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let d = cloud.distance(i, j);
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    snap_ties(&mut dist, n);
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|i| (i + 1..n).filter(|&j| dist[i * n + j] <= limit).collect())
        .collect();

    let mut simplices: Vec<(Simplex, f64)> = (0..n).map(|i| (Simplex(vec![i]), 0.0)).collect();
    // Grow cliques one vertex at a time; only larger ids are appended so each clique is built once.
    let mut frontier: Vec<(Vec<usize>, f64)> = (0..n).map(|i| (vec![i], 0.0)).collect();
    for _ in 0..max_dim {
        let mut next = Vec::new();
        for (verts, diam) in &frontier {
            let last = *verts.last().expect("non-empty");
            for &w in &neighbours[last] {
                let mut d = *diam;
                let mut ok = true;
                for &v in verts {
                    let dv = dist[v * n + w];
                    if dv > limit {
                        ok = false;
                        break;
                    }
                    d = d.max(dv);
                }
                if ok {
                    let mut grown = verts.clone();
                    grown.push(w);
                    next.push((grown, d));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        simplices.extend(next.iter().map(|(v, d)| (Simplex(v.clone()), *d)));
        frontier = next;
    }
    FilteredComplex::new(simplices)
}
