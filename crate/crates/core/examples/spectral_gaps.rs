//! Betti numbers versus the smallest positive Laplacian eigenvalue along a filtration of six
//! points in space: how many changes each curve shows, per N and stage.

use std::path::Path;

use mayer::chain::{count_value_variations, count_variations, MayerComplex};
use mayer::io::parse_points;
use mayer::simplicial::vr_filtration;
use mayer::spectral::{persistent_spectrum, EigenSolver, DEFAULT_ZERO_TOLERANCE};

fn main() -> mayer::Result<()> {
    let cloud = parse_points(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/x2.csv"))?;
    let k = vr_filtration(&cloud, cloud.len() - 1, None)?;
    println!("{:<12} {:>6} {:>8} {:>6} {:>8}", "", "β0,q", "λ0,q(1)", "β1,q", "λ1,q(1)");
    for order in [2u32, 3, 5] {
        let mc = MayerComplex::new(&k, order)?;
        for q in 1..order as usize {
            let mut cells = Vec::new();
            for n in 0..=1 {
                let mut betti = Vec::new();
                let mut gap = Vec::new();
                for &r in k.critical_values() {
                    let s = persistent_spectrum(&mc, n, q, r, r, EigenSolver::Auto, DEFAULT_ZERO_TOLERANCE)?;
                    assert!(!s.cross_check_failed());
                    betti.push(s.zero_count);
                    // A Laplacian without positive eigenvalues contributes 0.
                    gap.push(s.lambda1.unwrap_or(0.0));
                }
                cells.push(count_variations(&betti));
                cells.push(count_value_variations(&gap, 1e-6));
            }
            println!(
                "{:<12} {:>6} {:>8} {:>6} {:>8}",
                format!("N={order}, q={q}"),
                cells[0],
                cells[1],
                cells[2],
                cells[3]
            );
        }
    }
    Ok(())
}
