//! Exact arithmetic in Q(ξ_N) and the N-differential of a single simplex.

use mayer::chain::boundary_matrix;
use mayer::cyclotomic::{root_of_unity, CyclotomicNumber};
use mayer::simplicial::{FilteredComplex, Simplex};

fn main() -> mayer::Result<()> {
    let xi = root_of_unity(3, 1)?;
    let one = CyclotomicNumber::one(3);
    println!("ξ = {xi},  ξ² = {},  1 + ξ + ξ² = {}", &xi * &xi, &(&one + &xi) + &(&xi * &xi));
    let a = &one + &xi;
    println!("(1 + ξ)⁻¹ = {},  |1 + ξ|² = {}", a.inv()?, a.norm());

    let mut simplices = Vec::new();
    for mask in 1u32..16 {
        simplices.push(Simplex::new((0..4).filter(|i| mask & (1 << i) != 0).collect())?);
    }
    let k = FilteredComplex::from_simplices(simplices)?;
    for n in 1..=3 {
        println!("D_{n} (faces × cofaces):\n{:?}", boundary_matrix(&k, n, 3)?);
    }
    Ok(())
}
