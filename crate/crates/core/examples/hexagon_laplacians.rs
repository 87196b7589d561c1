//! Mayer Laplacians of the hexagon for N = 3 and N = 5: every channel, with spectra to two
//! decimals.

use std::path::Path;

use mayer::chain::MayerComplex;
use mayer::io::parse_complex;
use mayer::spectral::{hermitian_eigenvalues, laplacian_at, spectral_summary};

fn main() -> mayer::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/hexagon.cplx");
    let k = parse_complex(path)?;
    for order in [3u32, 5] {
        println!("N = {order}");
        let mc = MayerComplex::new(&k, order)?;
        for n in 0..=1 {
            for q in 1..order as usize {
                let l = laplacian_at(&mc, n, q, f64::INFINITY)?;
                let beta = mc.betti(n, q)?;
                let report = spectral_summary(hermitian_eigenvalues(&l)?, Some(beta))?;
                let eigs: Vec<String> = report.eigenvalues.iter().map(|x| format!("{x:.2}")).collect();
                println!(
                    "  (n,q)=({n},{q})  β={beta}  λ(1)={}  spectrum {{{}}}",
                    report.lambda1.map_or("-".into(), |x| format!("{x:.2}")),
                    eigs.join(", ")
                );
            }
        }
    }
    Ok(())
}
