//! Mayer Laplacians of the boundary of the 3-simplex with N = 3 and their spectra.

use std::path::Path;

use mayer::io::parse_complex;
use mayer::spectral::{hermitian_eigenvalues, laplacian_matrix, spectral_summary};

fn main() -> mayer::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/boundary_delta3.cplx");
    let k = parse_complex(path)?;
    for (n, q) in [(0, 1), (0, 2), (1, 1), (1, 2)] {
        let l = laplacian_matrix(&k, n, q, 3)?;
        if (n, q) == (0, 1) {
            println!("L_{{0,1}} =");
            for i in 0..l.order() {
                let row: Vec<String> = (0..l.order())
                    .map(|j| {
                        let z = l.get(i, j);
                        format!("{:>6.3}{:+.3}i", z.re, z.im)
                    })
                    .collect();
                println!("  {}", row.join("  "));
            }
        }
        let eigs = hermitian_eigenvalues(&l)?;
        let report = spectral_summary(eigs, None)?;
        let shown: Vec<String> = report.eigenvalues.iter().map(|x| format!("{x:.6}")).collect();
        println!(
            "Spectrum of L_{{{n},{q}}} = {{{}}}  zero modes: {}",
            shown.join(", "),
            report.zero_count
        );
    }
    println!("for reference: 2-√3 = {:.6}, 2+√3 = {:.6}, 4∓2√3 = {:.6} / {:.6}",
        2.0 - 3f64.sqrt(), 2.0 + 3f64.sqrt(), 4.0 - 2.0 * 3f64.sqrt(), 4.0 + 2.0 * 3f64.sqrt());
    Ok(())
}
