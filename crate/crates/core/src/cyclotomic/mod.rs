//! Exact arithmetic in `Q(ξ_N)` for prime `N`, and exact rank/kernel computations over it.

mod matrix;
mod number;
mod xi_poly;

pub use matrix::CycMatrix;
pub use number::{is_prime, root_of_unity, CyclotomicNumber};
pub(crate) use number::check_order;
pub use xi_poly::XiPoly;
