//! Channel-by-channel evaluation of a filtration, and the reports the CLI writes.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::{MayerComplex, PersistenceDiagram, RankEngine};
use crate::cyclotomic::check_order;
use crate::error::{MayerError, Result};
use crate::metrics::{family_bottleneck, family_wasserstein, DiagramFamily};
use crate::simplicial::{vr_filtration, FilteredComplex, PointCloud};
use crate::spectral::{persistent_spectrum, EigenSolver, SpectrumReport, DEFAULT_ZERO_TOLERANCE};

/// What to compute and how.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub order: u32,
    /// Stages `q`; `None` means `1..N-1`.
    pub stages: Option<Vec<usize>>,
    pub dims: Vec<usize>,
    /// Largest simplex dimension built from a point cloud.
    pub max_dim: usize,
    pub max_radius: Option<f64>,
    pub eigen: bool,
    pub diagrams: bool,
    pub zero_tolerance: f64,
    /// Curves are evaluated at `(r_i, r_{i+k})`, clamped to the last critical value.
    pub persistence_step: usize,
    pub engine: RankEngine,
    pub solver: EigenSolver,
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: 3,
            stages: None,
            dims: vec![0, 1],
            max_dim: 3,
            max_radius: None,
            eigen: false,
            diagrams: false,
            zero_tolerance: DEFAULT_ZERO_TOLERANCE,
            persistence_step: 0,
            engine: RankEngine::Auto,
            solver: EigenSolver::Auto,
            threads: None,
        }
    }
}

impl RunConfig {
    pub fn stages(&self) -> Vec<usize> {
        self.stages
            .clone()
            .unwrap_or_else(|| (1..self.order as usize).collect())
    }

    pub fn validate(&self) -> Result<()> {
        check_order(self.order)?;
        for &q in &self.stages() {
            if q == 0 || q >= self.order as usize {
                return Err(MayerError::InvalidStage { q, n_diff: self.order });
            }
        }
        if let Some(&n) = self.dims.iter().find(|&&n| n > self.max_dim) {
            return Err(MayerError::Config(format!(
                "dimension {n} exceeds the skeleton cap {}",
                self.max_dim
            )));
        }
        if !(self.zero_tolerance > 0.0) {
            return Err(MayerError::Config("zero tolerance must be positive".into()));
        }
        Ok(())
    }

    /// Thread count from the config, else `MAYER_THREADS`, else rayon's default.
    pub fn thread_count(&self) -> Option<usize> {
        self.threads.or_else(|| {
            std::env::var("MAYER_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
                .filter(|&t| t > 0)
        })
    }
}

/// A point cloud or an explicit complex.
#[derive(Clone, Debug)]
pub enum Input {
    Cloud(PointCloud),
    Complex(FilteredComplex),
}

impl Input {
    pub fn into_complex(self, config: &RunConfig) -> Result<FilteredComplex> {
        match self {
            Input::Cloud(c) => vr_filtration(&c, config.max_dim, config.max_radius),
            Input::Complex(k) => Ok(k),
        }
    }
}

/// Curves of one channel `(n, q)` over the critical values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChannelReport {
    pub n: usize,
    pub q: usize,
    pub betti: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_count: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda1: Option<Vec<Option<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_max: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_positive: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<Vec<(f64, Option<f64>, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Meta {
    #[serde(rename = "N")]
    pub order: u32,
    pub dims: Vec<usize>,
    pub stages: Vec<usize>,
    pub input: String,
    pub tool_version: String,
    pub persistence_step: usize,
}

impl Meta {
    fn new(config: &RunConfig, input: &str) -> Self {
        Meta {
            order: config.order,
            dims: config.dims.clone(),
            stages: config.stages(),
            input: input.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            persistence_step: config.persistence_step,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub meta: Meta,
    pub critical_values: Vec<f64>,
    pub channels: Vec<ChannelReport>,
    /// Channels whose Laplacian zero count or diagram disagrees with the exact Betti numbers.
    #[serde(skip)]
    pub failures: Vec<String>,
}

fn with_pool<T: Send>(config: &RunConfig, f: impl FnOnce() -> T + Send) -> Result<T> {
    match config.thread_count() {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| MayerError::Config(e.to_string()))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

/// Evaluates every requested channel of `complex`.
pub fn run_pipeline(config: &RunConfig, complex: &FilteredComplex, input_name: &str) -> Result<Report> {
    config.validate()?;
    let mc = MayerComplex::new(complex, config.order)?.with_engine(config.engine);
    let critical = complex.critical_values().to_vec();
    let m = critical.len();
    let pairs: Vec<(f64, f64)> = (0..m)
        .map(|i| (critical[i], critical[(i + config.persistence_step).min(m - 1)]))
        .collect();
    let channels: Vec<(usize, usize)> = config
        .dims
        .iter()
        .flat_map(|&n| config.stages().into_iter().map(move |q| (n, q)))
        .collect();

    with_pool(config, || -> Result<Report> {
        let betti: Vec<Vec<usize>> = channels
            .par_iter()
            .map(|&(n, q)| pairs.iter().map(|&(a, b)| mc.persistent_betti(n, q, a, b)).collect())
            .collect::<Result<_>>()?;

        let spectra: Option<Vec<Vec<SpectrumReport>>> = if config.eigen {
            let tasks: Vec<(usize, usize)> = (0..channels.len())
                .flat_map(|c| (0..m).map(move |i| (c, i)))
                .collect();
            let flat: Vec<SpectrumReport> = tasks
                .par_iter()
                .map(|&(c, i)| {
                    let (n, q) = channels[c];
                    let (a, b) = pairs[i];
                    persistent_spectrum(&mc, n, q, a, b, config.solver, config.zero_tolerance)
                })
                .collect::<Result<_>>()?;
            let mut it = flat.into_iter();
            Some(
                (0..channels.len())
                    .map(|_| it.by_ref().take(m).collect())
                    .collect(),
            )
        } else {
            None
        };

        let diagrams: Option<Vec<PersistenceDiagram>> = if config.diagrams {
            Some(
                channels
                    .par_iter()
                    .map(|&(n, q)| mc.diagram(n, q))
                    .collect::<Result<_>>()?,
            )
        } else {
            None
        };

        let mut failures = Vec::new();
        let mut reports = Vec::with_capacity(channels.len());
        for (c, &(n, q)) in channels.iter().enumerate() {
            let mut report = ChannelReport {
                n,
                q,
                betti: betti[c].clone(),
                zero_count: None,
                lambda1: None,
                lambda_max: None,
                mean_positive: None,
                diagram: None,
            };
            if let Some(spectra) = &spectra {
                let s = &spectra[c];
                for (i, r) in s.iter().enumerate() {
                    if r.zero_count != betti[c][i] {
                        failures.push(format!(
                            "n={n} q={q} at ({}, {}): Laplacian kernel {} but Betti number {}",
                            pairs[i].0, pairs[i].1, r.zero_count, betti[c][i]
                        ));
                    }
                }
                report.zero_count = Some(s.iter().map(|r| r.zero_count).collect());
                report.lambda1 = Some(s.iter().map(|r| r.lambda1).collect());
                report.lambda_max = Some(s.iter().map(|r| r.lambda_max).collect());
                report.mean_positive = Some(s.iter().map(|r| r.mean_positive).collect());
            }
            if let Some(diagrams) = &diagrams {
                let d = &diagrams[c];
                for &r in &critical {
                    let live = d.rank_at(r);
                    let beta = mc.persistent_betti(n, q, r, r)?;
                    if live != beta {
                        failures.push(format!(
                            "n={n} q={q} at {r}: diagram has {live} live classes but Betti number {beta}"
                        ));
                    }
                }
                report.diagram = Some(
                    d.points
                        .iter()
                        .map(|p| (p.birth, p.death.is_finite().then_some(p.death), p.multiplicity))
                        .collect(),
                );
            }
            reports.push(report);
        }
        Ok(Report {
            meta: Meta::new(config, input_name),
            critical_values: critical.clone(),
            channels: reports,
            failures,
        })
    })?
}

impl Report {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// One row per critical value; columns `r` then each curve of each channel.
    pub fn to_csv(&self) -> String {
        let mut header = vec!["r".to_string()];
        let mut columns: Vec<Vec<String>> = Vec::new();
        for c in &self.channels {
            let tag = format!("n{}_q{}", c.n, c.q);
            header.push(format!("betti_{tag}"));
            columns.push(c.betti.iter().map(usize::to_string).collect());
            if let Some(z) = &c.zero_count {
                header.push(format!("zero_count_{tag}"));
                columns.push(z.iter().map(usize::to_string).collect());
            }
            if let Some(l) = &c.lambda1 {
                header.push(format!("lambda1_{tag}"));
                columns.push(l.iter().map(|x| x.map(|v| v.to_string()).unwrap_or_default()).collect());
            }
            if let Some(l) = &c.lambda_max {
                header.push(format!("lambda_max_{tag}"));
                columns.push(l.iter().map(f64::to_string).collect());
            }
            if let Some(l) = &c.mean_positive {
                header.push(format!("mean_positive_{tag}"));
                columns.push(l.iter().map(f64::to_string).collect());
            }
        }
        let mut out = header.join(",");
        out.push('\n');
        for (i, r) in self.critical_values.iter().enumerate() {
            let mut row = vec![r.to_string()];
            row.extend(columns.iter().map(|c| c[i].clone()));
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Aligned plain-text table: Betti numbers (and spectral gaps when present) per critical value.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut header = format!("{:>12}", "r");
        for c in &self.channels {
            write!(header, " {:>10}", format!("b[{},{}]", c.n, c.q)).unwrap();
            if c.lambda1.is_some() {
                write!(header, " {:>10}", format!("l1[{},{}]", c.n, c.q)).unwrap();
            }
        }
        writeln!(out, "{header}").unwrap();
        for (i, r) in self.critical_values.iter().enumerate() {
            write!(out, "{r:>12.6}").unwrap();
            for c in &self.channels {
                write!(out, " {:>10}", c.betti[i]).unwrap();
                if let Some(l) = &c.lambda1 {
                    match l[i] {
                        Some(v) => write!(out, " {v:>10.4}").unwrap(),
                        None => write!(out, " {:>10}", "-").unwrap(),
                    }
                }
            }
            out.push('\n');
        }
        for c in &self.channels {
            if let Some(d) = &c.diagram {
                writeln!(out, "diagram n={} q={}:", c.n, c.q).unwrap();
                for (b, de, mult) in d {
                    let death = de.map_or("inf".to_string(), |x| format!("{x:.6}"));
                    writeln!(out, "  ({b:.6}, {death}) x{mult}").unwrap();
                }
            }
        }
        out
    }
}

/// Distances between the Mayer diagram families of two inputs, for one dimension.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistanceReport {
    pub n: usize,
    pub wasserstein: f64,
    pub bottleneck: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistanceSummary {
    pub meta: Meta,
    pub wasserstein_r: f64,
    pub distances: Vec<DistanceReport>,
}

/// Family Wasserstein and bottleneck distances between two complexes, per dimension.
pub fn run_distance(
    config: &RunConfig,
    first: &FilteredComplex,
    second: &FilteredComplex,
    inputs: &str,
    r: f64,
) -> Result<DistanceSummary> {
    config.validate()?;
    let a = MayerComplex::new(first, config.order)?.with_engine(config.engine);
    let b = MayerComplex::new(second, config.order)?.with_engine(config.engine);
    let distances = with_pool(config, || {
        config
            .dims
            .par_iter()
            .map(|&n| {
                let fa = DiagramFamily::from_complex(&a, n)?;
                let fb = DiagramFamily::from_complex(&b, n)?;
                Ok(DistanceReport {
                    n,
                    wasserstein: family_wasserstein(&fa, &fb, r)?,
                    bottleneck: family_bottleneck(&fa, &fb)?,
                })
            })
            .collect::<Result<Vec<_>>>()
    })??;
    Ok(DistanceSummary {
        meta: Meta::new(config, inputs),
        wasserstein_r: r,
        distances,
    })
}

impl DistanceSummary {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,wasserstein,bottleneck\n");
        for d in &self.distances {
            writeln!(out, "{},{},{}", d.n, d.wasserstein, d.bottleneck).unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{:>4} {:>14} {:>14}\n", "n", format!("W_{}", self.wasserstein_r), "bottleneck");
        for d in &self.distances {
            writeln!(out, "{:>4} {:>14.6} {:>14.6}", d.n, d.wasserstein, d.bottleneck).unwrap();
        }
        out
    }
}
