//! Mayer homology and Mayer Laplacians of filtered simplicial complexes.
//!
//! A simplicial complex carries an N-differential `d⟨v_0,…,v_n⟩ = Σ ξ^i ⟨…v̂_i…⟩` with
//! `ξ = e^{2πi/N}`, so `d^N = 0`. For each stage `1 <= q <= N-1` this gives homology
//! `ker d^q / im d^{N-q}`, a Hermitian Laplacian whose kernel has the same dimension,
//! and persistent versions of both over a filtration.
//!
//! ```
//! use mayer::chain::mayer_betti;
//! use mayer::simplicial::{FilteredComplex, Simplex};
//!
//! let triangle = FilteredComplex::from_simplices(vec![
//!     Simplex::new(vec![0]).unwrap(),
//!     Simplex::new(vec![1]).unwrap(),
//!     Simplex::new(vec![2]).unwrap(),
//!     Simplex::new(vec![0, 1]).unwrap(),
//!     Simplex::new(vec![0, 2]).unwrap(),
//!     Simplex::new(vec![1, 2]).unwrap(),
//! ])
//! .unwrap();
//! // With N = 2 this is ordinary homology: one component, one loop.
//! assert_eq!(mayer_betti(&triangle, 0, 1, 2).unwrap(), 1);
//! assert_eq!(mayer_betti(&triangle, 1, 1, 2).unwrap(), 1);
//! ```

pub mod chain;
pub mod cyclotomic;
pub mod error;
pub mod io;
pub mod linalg;
pub mod metrics;
pub mod pipeline;
pub mod simplicial;
pub mod spectral;

pub use error::{MayerError, Result};
