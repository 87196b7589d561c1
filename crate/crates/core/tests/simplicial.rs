mod common;

use common::{fixture, rng};
use mayer::io::parse_points;
use mayer::simplicial::{vr_filtration, PointCloud, Simplex};
use proptest::prelude::*;

#[test]
fn simplex_construction() {
    assert_eq!(Simplex::new(vec![2, 0, 1]).unwrap().vertices(), &[0, 1, 2]);
    let s = Simplex::new(vec![5]).unwrap();
    assert_eq!((s.vertices(), s.dim()), (&[5][..], 0));
    assert!(Simplex::new(vec![1, 1]).is_err());
    assert!(Simplex::new(vec![]).is_err());
}

#[test]
fn faces() {
    let s = Simplex::new(vec![0, 1, 2]).unwrap();
    assert_eq!(s.face(1).unwrap().vertices(), &[0, 2]);
    assert_eq!(Simplex::new(vec![0, 1]).unwrap().face(0).unwrap().vertices(), &[1]);
    assert!(s.face(3).is_err());
    assert!(Simplex::new(vec![4]).unwrap().face(0).is_err());
}

#[test]
fn x1_has_twelve_critical_values() {
    let x1 = parse_points(fixture("x1.csv")).unwrap();
    let k = vr_filtration(&x1, 6, None).unwrap();
    assert_eq!(k.critical_values().len(), 12);
    assert_eq!(k.critical_values()[0], 0.0);
    assert_eq!(k.sublevel_sizes(0.0)[..2], [7, 0]);
    assert!(k.sublevel_sizes(-1.0).iter().all(|&c| c == 0));
    let full = k.sublevel_sizes(f64::INFINITY);
    assert_eq!(full.iter().sum::<usize>(), 127);
}

#[test]
fn x2_complete_two_skeleton() {
    let x2 = parse_points(fixture("x2.csv")).unwrap();
    let k = vr_filtration(&x2, 2, None).unwrap();
    assert_eq!((k.count(0), k.count(1), k.count(2), k.count(3)), (6, 15, 20, 0));
}

#[test]
fn single_point() {
    let k = vr_filtration(&PointCloud::new(vec![vec![1.0, 2.0]]).unwrap(), 3, None).unwrap();
    assert_eq!(k.len(), 1);
    assert_eq!(k.critical_values(), &[0.0]);
}

fn diameter(cloud: &PointCloud, ids: &[usize]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, &u) in ids.iter().enumerate() {
        for &v in &ids[i + 1..] {
            d = d.max(cloud.distance(u, v));
        }
    }
    d
}

/// Every vertex subset of size ≤ max_dim + 1 with all pairwise distances ≤ ε, by enumeration.
fn brute_force_rips(cloud: &PointCloud, max_dim: usize, eps: f64) -> Vec<Vec<usize>> {
    let n = cloud.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let ids: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if ids.len() <= max_dim + 1 && diameter(cloud, &ids) <= eps {
            out.push(ids);
        }
    }
    out.sort();
    out
}

proptest! {
    #[test]
    fn face_identity(ids in prop::collection::btree_set(0usize..20, 3..7), seed in any::<u64>()) {
        let s = Simplex::new(ids.into_iter().collect()).unwrap();
        let n = s.dim();
        let i = 1 + (seed as usize) % n;
        let j = (seed as usize / 7) % i;
        let lhs = s.face(i).unwrap().face(j).unwrap();
        let rhs = s.face(j).unwrap().face(i - 1).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rips_matches_enumeration(seed in any::<u64>(), n in 1usize..7, max_dim in 0usize..4) {
        let cloud = common::random_cloud(&mut rng(seed), n, 2);
        let k = vr_filtration(&cloud, max_dim, None).unwrap();
        for &eps in k.critical_values() {
            let mut got: Vec<Vec<usize>> = k
                .sublevel(eps)
                .iter()
                .map(|(s, _)| s.vertices().to_vec())
                .collect();
            got.sort();
            prop_assert_eq!(got, brute_force_rips(&cloud, max_dim, eps));
        }
        for (s, v) in k.iter() {
            prop_assert_eq!(*v, diameter(&cloud, s.vertices()));
        }
    }

    #[test]
    fn closure_monotonicity_and_prefixes(seed in any::<u64>(), n in 2usize..7) {
        let cloud = common::random_cloud(&mut rng(seed), n, 3);
        let k = vr_filtration(&cloud, 3, Some(1.2)).unwrap();
        for (s, v) in k.iter() {
            if s.dim() > 0 {
                for f in s.faces() {
                    let fv = k.value(&f);
                    prop_assert!(fv.is_some_and(|fv| fv <= *v));
                }
            }
        }
        let mut prev = vec![0; 4];
        for &a in k.critical_values() {
            let sizes = k.sublevel_sizes(a);
            for d in 0..=k.dimension().unwrap() {
                let layer = k.simplices(d);
                prop_assert!(layer[..sizes[d]].iter().all(|(_, v)| *v <= a));
                prop_assert!(layer[sizes[d]..].iter().all(|(_, v)| *v > a));
                prop_assert!(sizes[d] >= prev[d]);
                prev[d] = sizes[d];
            }
        }
    }
}
