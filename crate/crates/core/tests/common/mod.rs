//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mayer::cyclotomic::{root_of_unity, CycMatrix, CyclotomicNumber};
use mayer::io::parse_complex;
use mayer::simplicial::{FilteredComplex, PointCloud, Simplex};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn load(name: &str) -> FilteredComplex {
    parse_complex(fixture(name)).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random cloud of `n` points in the unit cube of dimension `dim`, with coordinates on a
/// coarse grid so that ties occur.
pub fn random_cloud(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> PointCloud {
    PointCloud::new(
        (0..n)
            .map(|_| (0..dim).map(|_| rng.gen_range(0..8) as f64 / 4.0).collect())
            .collect(),
    )
    .unwrap()
}

/// Random complex on at most `vertices` vertices: random simplices up to `max_dim`, closed
/// under faces, with random monotone values from a small set.
pub fn random_complex(rng: &mut ChaCha8Rng, vertices: usize, max_dim: usize, count: usize) -> FilteredComplex {
    let mut values: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    for _ in 0..count {
        let k = rng.gen_range(1..=(max_dim + 1).min(vertices));
        let mut ids: BTreeSet<usize> = BTreeSet::new();
        while ids.len() < k {
            ids.insert(rng.gen_range(0..vertices));
        }
        let v = rng.gen_range(0..5) as f64 * 0.5;
        let ids: Vec<usize> = ids.into_iter().collect();
        let e = values.entry(ids).or_insert(v);
        *e = e.min(v);
    }
    // Close under faces top-down, pushing values down.
    for d in (1..=max_dim).rev() {
        let layer: Vec<(Vec<usize>, f64)> = values
            .iter()
            .filter(|(s, _)| s.len() == d + 1)
            .map(|(s, v)| (s.clone(), *v))
            .collect();
        for (s, v) in layer {
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                let e = values.entry(f).or_insert(v);
                *e = e.min(v);
            }
        }
    }
    FilteredComplex::new(
        values
            .into_iter()
            .map(|(s, v)| (Simplex::new(s).unwrap(), v))
            .collect(),
    )
    .unwrap()
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Rank over Q by plain elimination on a dense matrix of rationals.
pub fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in c..cols {
                    let t = &f * &m[rank][k];
                    m[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Signed classical boundary `∂_n` of the sublevel `K_a`, faces × cofaces, over Q.
pub fn classical_boundary(k: &FilteredComplex, n: usize, a: f64) -> Vec<Vec<BigRational>> {
    let rows = if n == 0 { 0 } else { k.sublevel_count(n - 1, a) };
    let cols = k.sublevel_count(n, a);
    let mut m = vec![vec![q(0); cols]; rows];
    if n == 0 {
        return m;
    }
    for (j, (s, _)) in k.simplices(n)[..cols].iter().enumerate() {
        for i in 0..=n {
            let face = s.face(i).unwrap();
            let r = k.index_of(&face).unwrap();
            m[r][j] = q(if i % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Classical Betti number of `K_a` over Q.
pub fn classical_betti(k: &FilteredComplex, n: usize, a: f64) -> usize {
    let c = k.sublevel_count(n, a);
    c - rational_rank(classical_boundary(k, n, a)) - rational_rank(classical_boundary(k, n + 1, a))
}

/// Persistence intervals over Q by the standard column reduction of the filtration-ordered
/// boundary matrix. Returns `(dimension, birth value, death value or ∞)`.
pub fn classical_intervals(k: &FilteredComplex) -> Vec<(usize, f64, f64)> {
    let order: Vec<(Simplex, f64)> = k.iter().cloned().collect();
    let position: BTreeMap<Vec<usize>, usize> = order
        .iter()
        .enumerate()
        .map(|(i, (s, _))| (s.vertices().to_vec(), i))
        .collect();
    let mut columns: Vec<BTreeMap<usize, BigRational>> = order
        .iter()
        .map(|(s, _)| {
            let mut col = BTreeMap::new();
            if s.dim() > 0 {
                for i in 0..=s.dim() {
                    let f = s.face(i).unwrap();
                    col.insert(position[f.vertices()], q(if i % 2 == 0 { 1 } else { -1 }));
                }
            }
            col
        })
        .collect();
    let mut low_owner: BTreeMap<usize, usize> = BTreeMap::new();
    let mut pairs = Vec::new();
    let mut killed = BTreeSet::new();
    for j in 0..columns.len() {
        while let Some((&low, lv)) = columns[j].iter().next_back() {
            let lv = lv.clone();
            match low_owner.get(&low) {
                Some(&other) => {
                    let ov = columns[other][&low].clone();
                    let f = &lv / &ov;
                    let other_col = columns[other].clone();
                    for (r, x) in other_col {
                        let e = columns[j].entry(r).or_insert_with(|| q(0));
                        *e -= &f * x;
                        if e.is_zero() {
                            columns[j].remove(&r);
                        }
                    }
                }
                None => {
                    low_owner.insert(low, j);
                    pairs.push((low, j));
                    killed.insert(low);
                    killed.insert(j);
                    break;
                }
            }
        }
    }
    let mut out = Vec::new();
    for (b, d) in pairs {
        out.push((order[b].0.dim(), order[b].1, order[d].1));
    }
    for (i, (s, v)) in order.iter().enumerate() {
        if !killed.contains(&i) {
            out.push((s.dim(), *v, f64::INFINITY));
        }
    }
    out
}

/// Classical persistent Betti number `β^{a,b}_n` from intervals.
pub fn classical_persistent_betti(intervals: &[(usize, f64, f64)], n: usize, a: f64, b: f64) -> usize {
    intervals
        .iter()
        .filter(|(d, birth, death)| *d == n && *birth <= a && *death > b)
        .count()
}

/// Real signed boundary `∂_n` of `K_a` as a float matrix.
pub fn float_boundary(k: &FilteredComplex, n: usize, a: f64) -> DMatrix<f64> {
    let rows = if n == 0 { 0 } else { k.sublevel_count(n - 1, a) };
    let cols = k.sublevel_count(n, a);
    let mut m = DMatrix::zeros(rows, cols);
    if n == 0 {
        return m;
    }
    for (j, (s, _)) in k.simplices(n)[..cols].iter().enumerate() {
        for i in 0..=n {
            let r = k.index_of(&s.face(i).unwrap()).unwrap();
            m[(r, j)] = if i % 2 == 0 { 1.0 } else { -1.0 };
        }
    }
    m
}

fn rational_product(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(q(0), |acc, t| acc + &row[t] * &b[t][j]))
                .collect()
        })
        .collect()
}

fn rational_transpose(a: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// One solution of the consistent system `d·y = c` over Q, free variables set to zero.
fn rational_solve(d: &[Vec<BigRational>], c: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = d.len();
    let width = c.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = d
        .iter()
        .zip(c)
        .map(|(dr, cr)| dr.iter().chain(cr).cloned().collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = q(1) / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..n + width {
                    let t = &f * &m[row][k];
                    m[r][k] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    assert!(m[row..].iter().all(|r| r[n..].iter().all(Zero::is_zero)), "inconsistent system");
    let mut y = vec![vec![q(0); width]; n];
    for (r, &col) in pivots.iter().enumerate() {
        y[col] = m[r][n..].to_vec();
    }
    y
}

/// Classical persistent Laplacian of `K_a ⊆ K_b` in degree `n`: down part of `K_a` plus the
/// generalized Schur complement of the up Laplacian of `K_b` onto the `n`-simplices of `K_a`.
/// The complement is formed exactly over Q as `L_RR − L_RS·Y` with `L_SS·Y = L_SR`.
pub fn schur_persistent_laplacian(k: &FilteredComplex, n: usize, a: f64, b: f64) -> DMatrix<f64> {
    let ca = k.sublevel_count(n, a);
    let cb = k.sublevel_count(n, b);
    let down = classical_boundary(k, n, a);
    let mut l = if down.is_empty() {
        vec![vec![q(0); ca]; ca]
    } else {
        rational_product(&rational_transpose(&down, ca), &down)
    };
    let up = classical_boundary(k, n + 1, b);
    let up_cols = k.sublevel_count(n + 1, b);
    let lu = rational_product(&up, &rational_transpose(&up, up_cols));
    if up_cols > 0 {
        let block = |rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| -> Vec<Vec<BigRational>> {
            lu[rows].iter().map(|r| r[cols.clone()].to_vec()).collect()
        };
        let lrr = block(0..ca, 0..ca);
        let correction = if cb > ca {
            let lrs = block(0..ca, ca..cb);
            let y = rational_solve(&block(ca..cb, ca..cb), &block(ca..cb, 0..ca));
            rational_product(&lrs, &y)
        } else {
            vec![vec![q(0); ca]; ca]
        };
        for i in 0..ca {
            for j in 0..ca {
                l[i][j] += &lrr[i][j] - &correction[i][j];
            }
        }
    }
    DMatrix::from_fn(ca, ca, |i, j| {
        use num_traits::ToPrimitive;
        l[i][j].to_f64().unwrap()
    })
}

pub fn real_eigenvalues(m: DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let mut e: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    e.sort_by(f64::total_cmp);
    e
}

/// Number of connected components of the graph with edges of length `<= r`.
pub fn components(cloud: &PointCloud, r: f64) -> usize {
    let n = cloud.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let root = find(p, p[x]);
            p[x] = root;
        }
        p[x]
    }
    for i in 0..n {
        for j in i + 1..n {
            if cloud.distance(i, j) <= r {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

pub fn approx_eq(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

/// Entry of `d^r` on an n-simplex predicted by the product formula: removing the vertices at
/// positions `J` gets `c_r · ξ^{ΣJ − r(r−1)/2}` with `c_r = Π_{k=1}^{r} (1 + ξ + ⋯ + ξ^{k−1})`.
pub fn product_formula(k: &FilteredComplex, n: usize, r: usize, order: u32) -> CycMatrix {
    let mut c = CyclotomicNumber::one(order);
    for kk in 1..=r {
        let mut s = CyclotomicNumber::zero(order);
        for i in 0..kk {
            s = &s + &root_of_unity(order, i as i64).unwrap();
        }
        c = &c * &s;
    }
    let rows = k.count(n - r);
    let mut m = CycMatrix::zeros(order, rows, k.count(n));
    for (j, (sigma, _)) in k.simplices(n).iter().enumerate() {
        for mask in 0u32..(1 << (n + 1)) {
            if mask.count_ones() as usize != r {
                continue;
            }
            let positions: Vec<usize> = (0..=n).filter(|p| mask & (1 << p) != 0).collect();
            let kept: Vec<usize> = (0..=n)
                .filter(|p| mask & (1 << p) == 0)
                .map(|p| sigma.vertices()[p])
                .collect();
            let face = Simplex::new(kept).unwrap();
            let row = k.index_of(&face).unwrap();
            let e = positions.iter().sum::<usize>() as i64 - (r * (r - 1) / 2) as i64;
            let term = &c * &root_of_unity(order, e).unwrap();
            let cur = m.get(row, j).clone();
            m.set(row, j, &cur + &term);
        }
    }
    m
}
