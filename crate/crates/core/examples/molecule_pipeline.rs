//! The full channel pipeline on a molecule: Betti curves and Laplacian spectra at every
//! critical radius, written as JSON.
//!
//! `cargo run --release --example molecule_pipeline -- [file.xyz] [max_radius]`

use std::path::{Path, PathBuf};
use std::time::Instant;

use mayer::io::parse_xyz;
use mayer::pipeline::{run_pipeline, RunConfig};
use mayer::simplicial::vr_filtration;

fn main() -> mayer::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/c60.xyz"));
    let radius: f64 = args.next().and_then(|r| r.parse().ok()).unwrap_or(3.0);
    let cloud = parse_xyz(&path)?;
    println!("{}: {} atoms", path.display(), cloud.len());
    for order in [2u32, 3, 5] {
        let config = RunConfig {
            order,
            max_radius: Some(radius),
            eigen: true,
            ..RunConfig::default()
        };
        let k = vr_filtration(&cloud, config.max_dim, config.max_radius)?;
        let start = Instant::now();
        let report = run_pipeline(&config, &k, &path.display().to_string())?;
        println!(
            "N={order}: {} simplices, {} critical radii, {} channels in {:.2?}, cross-check failures: {}",
            k.len(),
            report.critical_values.len(),
            report.channels.len(),
            start.elapsed(),
            report.failures.len()
        );
        if order == 3 {
            let json = report.to_json()?;
            println!("{}…", &json[..json.len().min(400)]);
        }
    }
    Ok(())
}
