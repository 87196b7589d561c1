//! Mayer persistence diagrams of a point cloud and a perturbed copy, and the family
//! distances between them.

use std::path::Path;

use mayer::chain::MayerComplex;
use mayer::io::parse_points;
use mayer::metrics::{family_bottleneck, family_wasserstein, DiagramFamily};
use mayer::simplicial::{vr_filtration, PointCloud};

fn main() -> mayer::Result<()> {
    let cloud = parse_points(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/x1.csv"))?;
    let shifted: Vec<Vec<f64>> = cloud
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| vec![p[0] + 0.05 * (i as f64).sin(), p[1] - 0.05 * (i as f64).cos()])
        .collect();
    let moved = PointCloud::new(shifted)?;
    let k1 = vr_filtration(&cloud, 3, None)?;
    let k2 = vr_filtration(&moved, 3, None)?;

    let order = 3;
    let m1 = MayerComplex::new(&k1, order)?;
    let m2 = MayerComplex::new(&k2, order)?;
    for n in 0..=1 {
        let f1 = DiagramFamily::from_complex(&m1, n)?;
        let f2 = DiagramFamily::from_complex(&m2, n)?;
        for d in &f1.diagrams {
            let pts: Vec<String> = d
                .points
                .iter()
                .map(|p| format!("({:.3}, {:.3})x{}", p.birth, p.death, p.multiplicity))
                .collect();
            println!("D_{}, n={n}: {}", d.q, pts.join(" "));
        }
        println!(
            "n={n}: family W_2 = {:.4}, family bottleneck = {:.4}",
            family_wasserstein(&f1, &f2, 2.0)?,
            family_bottleneck(&f1, &f2)?
        );
    }
    // Each point moved by at most 0.05, so pairwise distances moved by at most 0.1.
    println!("stability bound: 0.1");
    Ok(())
}
