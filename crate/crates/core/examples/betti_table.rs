//! Mayer Betti numbers (N = 3) of six small complexes.
//!
//! Run with `cargo run --example betti_table`.

use std::path::Path;

use mayer::chain::MayerComplex;
use mayer::io::parse_complex;

fn main() -> mayer::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    println!("{:<16} b01 b11 b21 b02 b12 b22", "complex");
    for name in ["delta3", "boundary_delta3", "hexagon", "mobius", "torus", "octahedron"] {
        let k = parse_complex(dir.join(format!("{name}.cplx")))?;
        let mc = MayerComplex::new(&k, 3)?;
        let mut row = Vec::new();
        for q in 1..=2 {
            for n in 0..=2 {
                row.push(mc.betti(n, q)?);
            }
        }
        let cells: Vec<String> = row.iter().map(|b| format!("{b:>3}")).collect();
        println!("{name:<16} {}", cells.join(" "));
    }
    Ok(())
}
