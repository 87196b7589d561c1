use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{MayerError, Result};

/// Trial division is plenty for the orders used here (N is a chain-complex parameter, not a key size).
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_order(order: u32) -> Result<()> {
    if is_prime(order) {
        Ok(())
    } else {
        Err(MayerError::NotPrime(order))
    }
}

/// An exact element of the cyclotomic field `Q(ξ)`, `ξ = exp(2πi/N)` with `N` prime.
///
/// Stored as the coefficients `c_0, …, c_{N-2}` of `c_0 + c_1 ξ + … + c_{N-2} ξ^{N-2}`.
/// Every operation reduces eagerly with `ξ^{N-1} = -(1 + ξ + … + ξ^{N-2})`, so two numbers
/// are equal exactly when their coefficient vectors are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    /// The additive identity. `order` is assumed to be prime; use [`root_of_unity`]
    /// to validate untrusted orders.
    pub fn zero(order: u32) -> Self {
        debug_assert!(order >= 2);
        CyclotomicNumber {
            order,
            coeffs: vec![BigRational::zero(); order as usize - 1],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_integer(order: u32, value: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(value)))
    }

    pub fn from_rational(order: u32, value: BigRational) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = value;
        out
    }

    /// Builds a number from coefficients on `1, ξ, …, ξ^{N-1}` (length `N`, not yet reduced).
    pub fn from_power_coeffs(order: u32, mut powers: Vec<BigRational>) -> Self {
        let n = order as usize;
        assert_eq!(powers.len(), n, "expected {n} power coefficients");
        let top = powers.pop().expect("order >= 2");
        if !top.is_zero() {
            for c in powers.iter_mut() {
                *c -= &top;
            }
        }
        CyclotomicNumber {
            order,
            coeffs: powers,
        }
    }

    /// Builds a number from already-reduced coefficients (length `N - 1`).
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        check_order(order)?;
        if coeffs.len() != order as usize - 1 {
            return Err(MayerError::Config(format!(
                "expected {} coefficients for N = {order}, got {}",
                order - 1,
                coeffs.len()
            )));
        }
        Ok(CyclotomicNumber { order, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True when the number is a rational (all coefficients past the constant vanish).
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(MayerError::FieldMismatch(self.order, other.order))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(CyclotomicNumber {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(CyclotomicNumber {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let n = self.order as usize;
        // Accumulate on exponents mod N, then fold ξ^{N-1} back into the basis.
        let mut powers = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                powers[(i + j) % n] += a * b;
            }
        }
        Ok(Self::from_power_coeffs(self.order, powers))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Applies the Galois automorphism `ξ ↦ ξ^k` (`k` coprime to `N`).
    pub fn galois(&self, k: u32) -> Self {
        let n = self.order as usize;
        let k = k as usize % n;
        let mut powers = vec![BigRational::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                powers[(j * k) % n] += c;
            }
        }
        Self::from_power_coeffs(self.order, powers)
    }

    /// Complex conjugation, i.e. the substitution `ξ ↦ ξ^{N-1}`.
    pub fn conj(&self) -> Self {
        self.galois(self.order - 1)
    }

    /// Field norm down to `Q`: the product of all Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let mut acc = self.clone();
        for k in 2..self.order {
            acc = acc * self.galois(k);
        }
        debug_assert!(acc.is_rational());
        acc.coeffs[0].clone()
    }

    /// Multiplicative inverse via `a^{-1} = (∏_{k≥2} σ_k(a)) / N(a)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(MayerError::DivisionByZero);
        }
        let mut others = Self::one(self.order);
        for k in 2..self.order {
            others = others * self.galois(k);
        }
        let norm = (self.clone() * others.clone()).coeffs[0].clone();
        Ok(others.scale(&norm.recip()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.clone() * other.inv()?)
    }

    /// Evaluates at `ξ = exp(2πi/N)` in double precision.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let angle = 2.0 * std::f64::consts::PI * j as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }
}

/// `ξ^{i mod N}` in canonical form.
pub fn root_of_unity(order: u32, exponent: i64) -> Result<CyclotomicNumber> {
    check_order(order)?;
    let n = order as usize;
    let k = exponent.rem_euclid(order as i64) as usize;
    let mut powers = vec![BigRational::zero(); n];
    powers[k] = BigRational::one();
    Ok(CyclotomicNumber::from_power_coeffs(order, powers))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                self.$checked(&rhs).expect("cyclotomic order mismatch")
            }
        }
        impl<'a> $trait<&'a CyclotomicNumber> for &'a CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (N={})", self.order)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "ξ")?,
                (1, false) => write!(f, "{mag}ξ")?,
                (_, true) => write!(f, "ξ^{j}")?,
                (_, false) => write!(f, "{mag}ξ^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn coeffs(x: &CyclotomicNumber) -> Vec<BigRational> {
        x.coeffs().to_vec()
    }

    #[test]
    fn roots_of_unity_reduce_canonically() {
        assert_eq!(coeffs(&root_of_unity(2, 1).unwrap()), vec![q(-1)]);
        assert_eq!(coeffs(&root_of_unity(3, 2).unwrap()), vec![q(-1), q(-1)]);
        assert_eq!(
            coeffs(&root_of_unity(5, 4).unwrap()),
            vec![q(-1), q(-1), q(-1), q(-1)]
        );
        assert!(root_of_unity(7, 0).unwrap().is_one());
        assert_eq!(root_of_unity(5, -1).unwrap(), root_of_unity(5, 4).unwrap());
    }

    #[test]
    fn rejects_composite_orders() {
        assert!(matches!(root_of_unity(4, 1), Err(MayerError::NotPrime(4))));
        assert!(matches!(root_of_unity(1, 0), Err(MayerError::NotPrime(1))));
        assert!(root_of_unity(0, 0).is_err());
    }

    #[test]
    fn power_rule() {
        let x = root_of_unity(5, 1).unwrap();
        let x2 = root_of_unity(5, 2).unwrap();
        assert_eq!(coeffs(&(&x * &x2)), vec![q(0), q(0), q(0), q(1)]);

        let x = root_of_unity(3, 1).unwrap();
        let x2 = root_of_unity(3, 2).unwrap();
        assert!((&x * &x2).is_one());
    }

    #[test]
    fn full_root_sum_annihilates() {
        let one = CyclotomicNumber::one(3);
        let s = one.clone() + root_of_unity(3, 1).unwrap() + root_of_unity(3, 2).unwrap();
        assert!(s.is_zero());
        let anything = CyclotomicNumber::from_integer(3, 7) + root_of_unity(3, 1).unwrap();
        assert!((s * anything).is_zero());
    }

    #[test]
    fn mismatched_orders_error() {
        let a = root_of_unity(3, 1).unwrap();
        let b = root_of_unity(5, 1).unwrap();
        assert!(matches!(a.try_mul(&b), Err(MayerError::FieldMismatch(3, 5))));
    }

    #[test]
    fn conjugation() {
        let x = root_of_unity(3, 1).unwrap();
        assert_eq!(coeffs(&x.conj()), vec![q(-1), q(-1)]);
        let r = CyclotomicNumber::from_integer(5, -4);
        assert_eq!(r.conj(), r);
    }

    #[test]
    fn complex_evaluation() {
        let z = root_of_unity(2, 1).unwrap().to_complex();
        assert!((z.re + 1.0).abs() < 1e-15 && z.im.abs() < 1e-15);
        let z = root_of_unity(3, 1).unwrap().to_complex();
        assert!((z.re + 0.5).abs() < 1e-15);
        assert!((z.im - 3f64.sqrt() / 2.0).abs() < 1e-15);
        let sum = (CyclotomicNumber::one(3)
            + root_of_unity(3, 1).unwrap()
            + root_of_unity(3, 2).unwrap())
        .to_complex();
        assert!(sum.norm() < 1e-15);
    }

    #[test]
    fn inverse_and_norm() {
        let x = CyclotomicNumber::one(5) + root_of_unity(5, 1).unwrap();
        let inv = x.inv().unwrap();
        assert!((&x * &inv).is_one());
        // N(1 - ξ) = N for prime N.
        let y = CyclotomicNumber::one(7) - root_of_unity(7, 1).unwrap();
        assert_eq!(y.norm(), q(7));
        assert!(matches!(
            CyclotomicNumber::zero(3).inv(),
            Err(MayerError::DivisionByZero)
        ));
    }

    #[test]
    fn display() {
        assert_eq!(root_of_unity(3, 2).unwrap().to_string(), "-1 - ξ");
        assert_eq!(CyclotomicNumber::zero(5).to_string(), "0");
    }
}
