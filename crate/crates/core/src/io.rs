//! Readers for XYZ molecules, CSV point clouds and explicit filtered complexes.
//!
//! Complex files hold one simplex per line: an optional filtration value followed by vertex
//! ids, e.g. `0.5 0 1 2`. A leading token is read as a value when it is not a plain unsigned
//! integer, so `1 2` is an edge while `1.0 2 3` is an edge at value 1. Missing values default
//! to 0, missing faces are added, and `#` starts a comment.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use log::warn;

use crate::error::{MayerError, Result};
use crate::simplicial::{FilteredComplex, PointCloud, Simplex};

/// Reads a standard XYZ file: atom count, comment line, then `Element x y z` per atom.
pub fn parse_xyz(path: impl AsRef<Path>) -> Result<PointCloud> {
    let path = path.as_ref();
    parse_xyz_str(&std::fs::read_to_string(path)?, path)
}

pub fn parse_xyz_str(text: &str, path: &Path) -> Result<PointCloud> {
    let mut lines = text.lines().enumerate();
    let (_, first) = lines
        .next()
        .ok_or_else(|| MayerError::parse(path, 1, "empty XYZ file"))?;
    let count: usize = first
        .trim()
        .parse()
        .map_err(|_| MayerError::parse(path, 1, format!("expected an atom count, found {first:?}")))?;
    if count == 0 {
        return Err(MayerError::parse(path, 1, "XYZ file declares no atoms"));
    }
    lines
        .next()
        .ok_or_else(|| MayerError::parse(path, 2, "missing comment line"))?;
    let mut labels = Vec::with_capacity(count);
    let mut points = Vec::with_capacity(count);
    for (i, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if points.len() == count {
            return Err(MayerError::parse(
                path,
                i + 1,
                format!("more atom lines than the declared {count}"),
            ));
        }
        if fields.len() < 4 {
            return Err(MayerError::parse(path, i + 1, "expected `Element x y z`"));
        }
        let coords = fields[1..4]
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| MayerError::parse(path, i + 1, format!("bad coordinate {f:?}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        labels.push(fields[0].to_string());
        points.push(coords);
    }
    if points.len() != count {
        return Err(MayerError::parse(
            path,
            text.lines().count(),
            format!("declared {count} atoms, found {}", points.len()),
        ));
    }
    PointCloud::new(points)?.with_labels(labels)
}

/// Reads one point per line, comma separated, all rows of equal length.
pub fn parse_points(path: impl AsRef<Path>) -> Result<PointCloud> {
    let path = path.as_ref();
    parse_points_str(&std::fs::read_to_string(path)?, path)
}

pub fn parse_points_str(text: &str, path: &Path) -> Result<PointCloud> {
    let mut points: Vec<Vec<f64>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|f| {
                let f = f.trim();
                f.parse::<f64>()
                    .map_err(|_| MayerError::parse(path, i + 1, format!("non-numeric field {f:?}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        if let Some(first) = points.first() {
            if first.len() != row.len() {
                return Err(MayerError::parse(
                    path,
                    i + 1,
                    format!("row has {} fields, expected {}", row.len(), first.len()),
                ));
            }
        }
        points.push(row);
    }
    if points.is_empty() {
        return Err(MayerError::parse(path, 1, "no points"));
    }
    PointCloud::new(points)
}

/// Reads a filtered complex in the text format described in the module docs.
pub fn parse_complex(path: impl AsRef<Path>) -> Result<FilteredComplex> {
    let path = path.as_ref();
    parse_complex_str(&std::fs::read_to_string(path)?, path)
}

pub fn parse_complex_str(text: &str, path: &Path) -> Result<FilteredComplex> {
    let mut explicit: HashMap<Simplex, f64> = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let has_value = tokens[0].parse::<usize>().is_err();
        let value = if has_value {
            tokens[0]
                .parse::<f64>()
                .map_err(|_| MayerError::parse(path, i + 1, format!("bad value {:?}", tokens[0])))?
        } else {
            0.0
        };
        if value.is_nan() {
            return Err(MayerError::parse(path, i + 1, "filtration value is NaN"));
        }
        let ids = tokens[usize::from(has_value)..]
            .iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| MayerError::parse(path, i + 1, format!("bad vertex id {t:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        let simplex = Simplex::new(ids).map_err(|e| MayerError::parse(path, i + 1, e.to_string()))?;
        if explicit.insert(simplex.clone(), value).is_some() {
            return Err(MayerError::parse(path, i + 1, format!("simplex {simplex} listed twice")));
        }
    }
    FilteredComplex::new(close_under_faces(explicit))
}

/// Adds every missing face at the smallest value among its cofaces.
fn close_under_faces(explicit: HashMap<Simplex, f64>) -> Vec<(Simplex, f64)> {
    let top = explicit.keys().map(Simplex::dim).max().unwrap_or(0);
    let mut all = explicit.clone();
    let mut added = 0usize;
    for d in (1..=top).rev() {
        let layer: Vec<(Simplex, f64)> = all
            .iter()
            .filter(|(s, _)| s.dim() == d)
            .map(|(s, v)| (s.clone(), *v))
            .collect();
        for (s, v) in layer {
            for face in s.faces() {
                if explicit.contains_key(&face) {
                    continue;
                }
                let entry = all.entry(face).or_insert_with(|| {
                    added += 1;
                    v
                });
                *entry = entry.min(v);
            }
        }
    }
    if added > 0 {
        warn!("added {added} missing faces to the complex");
    }
    all.into_iter().collect()
}

/// Text form readable by [`parse_complex`], one simplex per line in filtration order.
pub fn serialize_complex(complex: &FilteredComplex) -> String {
    let mut out = String::new();
    for (s, v) in complex.iter() {
        let ids: Vec<String> = s.vertices().iter().map(usize::to_string).collect();
        writeln!(out, "{v:?} {}", ids.join(" ")).expect("writing to a string");
    }
    out
}

/// Text form of a point cloud readable by [`parse_points`].
pub fn serialize_points(cloud: &PointCloud) -> String {
    let mut out = String::new();
    for p in cloud.points() {
        let row: Vec<String> = p.iter().map(|x| format!("{x:?}")).collect();
        writeln!(out, "{}", row.join(",")).expect("writing to a string");
    }
    out
}
