//! Betti curves of the Vietoris–Rips filtration of seven planar points, and how often they
//! change, for N = 2, 3, 5, 7.

use std::path::Path;

use mayer::chain::{count_variations, MayerComplex};
use mayer::io::parse_points;
use mayer::simplicial::vr_filtration;

fn main() -> mayer::Result<()> {
    let cloud = parse_points(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/x1.csv"))?;
    // The full Rips complex: every vertex subset eventually enters.
    let k = vr_filtration(&cloud, cloud.len() - 1, None)?;
    let radii: Vec<String> = k.critical_values().iter().map(|r| format!("{r:.3}")).collect();
    println!("critical radii: {}", radii.join(" "));
    for order in [2u32, 3, 5, 7] {
        let mc = MayerComplex::new(&k, order)?;
        let mut totals = [0usize; 2];
        for n in 0..=1 {
            for q in 1..order as usize {
                let curve: Vec<usize> = mc.betti_curve(n, q)?.into_iter().map(|(_, b)| b).collect();
                totals[n] += count_variations(&curve);
                if order <= 3 {
                    println!("  N={order} β_{{{n},{q}}}: {curve:?}");
                }
            }
        }
        println!("N={order}: Betti0 variations {}, Betti1 variations {}", totals[0], totals[1]);
    }
    Ok(())
}
