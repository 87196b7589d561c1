//! Exact elimination shared by the cyclotomic and prime-field backends.

mod eliminate;
mod field;

pub use eliminate::{kernel_basis_in_place, prefix_ranks, rank_in_place, IncrementalRank};
pub use field::{CyclotomicField, Field, PrimeField};
