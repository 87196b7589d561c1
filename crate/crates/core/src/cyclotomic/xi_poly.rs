use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use super::CyclotomicNumber;

/// Integer combination `Σ c_j ξ^j`, `0 <= j < N`, kept unreduced.
///
/// Entries of composed boundary matrices are sums of powers of `ξ`, so they live in `Z[ξ]`.
/// Keeping them as small integer vectors lets the same matrix be mapped into the exact field,
/// a prime field, or `C` without redoing the composition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XiPoly {
    coeffs: Vec<i64>,
}

impl XiPoly {
    pub fn zero(order: u32) -> Self {
        XiPoly {
            coeffs: vec![0; order as usize],
        }
    }

    pub fn monomial(order: u32, exponent: usize) -> Self {
        let mut p = Self::zero(order);
        p.coeffs[exponent % order as usize] = 1;
        p
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(coeffs.len() >= 2);
        XiPoly { coeffs }
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Adds `other · ξ^shift` into `self`.
    pub fn add_shifted(&mut self, other: &XiPoly, shift: usize) {
        let n = self.coeffs.len();
        for (j, c) in other.coeffs.iter().enumerate() {
            if *c != 0 {
                self.coeffs[(j + shift) % n] += c;
            }
        }
    }

    /// Adds `a · b` into `self`.
    pub fn add_product(&mut self, a: &XiPoly, b: &XiPoly) {
        let n = self.coeffs.len();
        for (i, x) in a.coeffs.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if *y != 0 {
                    self.coeffs[(i + j) % n] += x * y;
                }
            }
        }
    }

    /// Rewrites the representative so the `ξ^{N-1}` coefficient is zero.
    /// Afterwards the polynomial is zero in `Q(ξ)` iff all coefficients vanish.
    pub fn normalize(&mut self) {
        let top = *self.coeffs.last().expect("non-empty");
        if top != 0 {
            for c in self.coeffs.iter_mut() {
                *c -= top;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        let first = self.coeffs[0];
        self.coeffs.iter().all(|c| *c == first)
    }

    pub fn to_cyclotomic(&self) -> CyclotomicNumber {
        CyclotomicNumber::from_power_coeffs(
            self.order(),
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(BigInt::from(*c)))
                .collect(),
        )
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.coeffs.len() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(j, c)| {
                Complex64::from_polar(*c as f64, 2.0 * std::f64::consts::PI * j as f64 / n)
            })
            .sum()
    }

    /// Image in `F_p` under `ξ ↦ ω`, where `ω` has multiplicative order `N` mod `p`.
    pub fn to_prime_field(&self, modulus: u64, omega: u64) -> u64 {
        let mut acc = 0u64;
        let mut power = 1u64;
        for c in &self.coeffs {
            let c = c.rem_euclid(modulus as i64) as u64;
            acc = (acc + c * power % modulus) % modulus;
            power = power * omega % modulus;
        }
        acc
    }
}
