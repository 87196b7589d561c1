use crate::cyclotomic::{CyclotomicNumber, XiPoly};

/// Arithmetic context for elimination over an exact field.
///
/// Elements are plain values; the context carries whatever the elements need
/// (the cyclotomic order, or a modulus and a root of unity).
pub trait Field: Sync {
    type Elem: Clone + Send + Sync + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element. Callers never pass zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn embed(&self, p: &XiPoly) -> Self::Elem;

    /// `a - f * b`, the elimination kernel.
    fn sub_mul(&self, a: &Self::Elem, f: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(&self.mul(f, b)))
    }
}

/// `Q(ξ_N)` with exact rational coefficients.
#[derive(Clone, Copy, Debug)]
pub struct CyclotomicField {
    pub order: u32,
}

impl Field for CyclotomicField {
    type Elem = CyclotomicNumber;

    fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber::zero(self.order)
    }
    fn one(&self) -> CyclotomicNumber {
        CyclotomicNumber::one(self.order)
    }
    fn is_zero(&self, a: &CyclotomicNumber) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        a + b
    }
    fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        a * b
    }
    fn neg(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        -a.clone()
    }
    fn inv(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        a.inv().expect("pivot is nonzero")
    }
    fn embed(&self, p: &XiPoly) -> CyclotomicNumber {
        p.to_cyclotomic()
    }
    fn sub_mul(
        &self,
        a: &CyclotomicNumber,
        f: &CyclotomicNumber,
        b: &CyclotomicNumber,
    ) -> CyclotomicNumber {
        if b.is_zero() {
            return a.clone();
        }
        a - &(f * b)
    }
}

/// `F_p` for a prime `p ≡ 1 (mod N)`, with `ξ` sent to an element `ω` of order `N`.
///
/// Reduction modulo a prime of `Z[ξ]` above `p` is a ring map, so ranks over `F_p`
/// never exceed ranks over `Q(ξ)`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    pub modulus: u64,
    pub omega: u64,
    /// `⌊2^64 / modulus⌋`, for Barrett reduction.
    barrett: u64,
}

impl PrimeField {
    /// `x mod p` for any `x < 2^64`.
    #[inline]
    fn reduce(&self, x: u64) -> u64 {
        let q = ((u128::from(x) * u128::from(self.barrett)) >> 64) as u64;
        let r = x - q * self.modulus;
        if r >= self.modulus {
            r - self.modulus
        } else {
            r
        }
    }

    /// Largest primes below `2^31` that are `1 mod order`, `count` of them, each paired with a
    /// primitive `order`-th root of unity.
    pub fn for_order(order: u32, count: usize) -> Vec<PrimeField> {
        let order = order as u64;
        let mut out = Vec::with_capacity(count);
        let mut candidate = (1u64 << 31) - 1;
        candidate -= (candidate - 1) % order;
        while out.len() < count && candidate > order {
            if is_prime_u64(candidate) {
                let omega = (2..candidate)
                    .map(|g| pow_mod(g, (candidate - 1) / order, candidate))
                    .find(|w| *w != 1)
                    .expect("multiplicative group is cyclic");
                out.push(PrimeField {
                    modulus: candidate,
                    omega,
                    barrett: (u128::from(u64::MAX) + 1).div_euclid(u128::from(candidate)) as u64,
                });
            }
            candidate -= order;
        }
        out
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.reduce(a * b)
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.modulus - a) % self.modulus
    }
    fn inv(&self, a: &u64) -> u64 {
        pow_mod(*a, self.modulus - 2, self.modulus)
    }
    fn embed(&self, p: &XiPoly) -> u64 {
        p.to_prime_field(self.modulus, self.omega)
    }
    fn sub_mul(&self, a: &u64, f: &u64, b: &u64) -> u64 {
        self.reduce(a + (self.modulus - f) * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields_carry_roots_of_the_right_order() {
        for order in [2u32, 3, 5, 7, 11] {
            let fields = PrimeField::for_order(order, 2);
            assert_eq!(fields.len(), 2);
            for f in fields {
                assert_eq!((f.modulus - 1) % order as u64, 0);
                assert_ne!(f.omega, 1);
                assert_eq!(pow_mod(f.omega, order as u64, f.modulus), 1);
                // Σ ω^j = 0, mirroring the cyclotomic relation.
                let s = (0..order as u64)
                    .map(|j| pow_mod(f.omega, j, f.modulus))
                    .fold(0, |a, b| (a + b) % f.modulus);
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn barrett_reduction_matches_remainder() {
        for f in PrimeField::for_order(5, 2) {
            let p = f.modulus;
            for x in [0, 1, p - 1, p, p + 1, 2 * p - 1, (p - 1) * (p - 1), (p - 1) * (p - 1) + p - 1, u64::MAX] {
                assert_eq!(f.reduce(x), x % p, "x = {x}");
            }
            assert_eq!(f.sub_mul(&3, &(p - 1), &(p - 1)), (3 + p - 1) % p);
        }
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::for_order(3, 1)[0];
        for a in [1u64, 2, 12345, f.modulus - 1] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }
}
