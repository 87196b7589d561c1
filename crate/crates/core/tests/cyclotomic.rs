use mayer::cyclotomic::{root_of_unity, CycMatrix, CyclotomicNumber};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn xi(order: u32, e: i64) -> CyclotomicNumber {
    root_of_unity(order, e).unwrap()
}

fn int(order: u32, v: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_integer(order, v)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn coeffs(order: u32, c: &[(i64, i64)]) -> CyclotomicNumber {
    CyclotomicNumber::from_coeffs(order, c.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
}

#[test]
fn roots_of_unity_in_canonical_basis() {
    assert_eq!(xi(2, 1), coeffs(2, &[(-1, 1)]));
    assert_eq!(xi(3, 2), coeffs(3, &[(-1, 1), (-1, 1)]));
    assert_eq!(xi(5, 4), coeffs(5, &[(-1, 1), (-1, 1), (-1, 1), (-1, 1)]));
    assert!(xi(7, 0).is_one());
    assert_eq!(xi(5, -1), xi(5, 4));
    assert!(root_of_unity(4, 1).is_err());
    assert!(root_of_unity(1, 0).is_err());
}

#[test]
fn products_of_powers() {
    assert_eq!(&xi(5, 1) * &xi(5, 2), coeffs(5, &[(0, 1), (0, 1), (0, 1), (1, 1)]));
    assert!((&xi(3, 1) * &xi(3, 2)).is_one());
    let s = &(&int(3, 1) + &xi(3, 1)) + &xi(3, 2);
    assert!(s.is_zero());
    assert!((&s * &coeffs(3, &[(3, 7), (-2, 5)])).is_zero());
    assert!(xi(3, 1).try_mul(&xi(5, 1)).is_err());
}

#[test]
fn conjugation() {
    assert_eq!(xi(3, 1).conj(), coeffs(3, &[(-1, 1), (-1, 1)]));
    let r = CyclotomicNumber::from_rational(5, rat(-7, 3));
    assert_eq!(r.conj(), r);
}

#[test]
fn complex_embedding() {
    let z = xi(2, 1).to_complex();
    assert!((z.re + 1.0).abs() < 1e-15 && z.im.abs() < 1e-15);
    let z = xi(3, 1).to_complex();
    assert!((z.re + 0.5).abs() < 1e-15 && (z.im - 3f64.sqrt() / 2.0).abs() < 1e-15);
    let s = &(&int(3, 1) + &xi(3, 1)) + &xi(3, 2);
    assert!(s.to_complex().norm() < 1e-15);
}

/// `d_1` of the 3-simplex in column convention: rows are vertices, columns the edges
/// 01, 02, 03, 12, 13, 23, and `d{v,w} = {w} + ξ{v}`.
fn delta3_d1() -> CycMatrix {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    CycMatrix::from_fn(3, 4, 6, |r, c| {
        let (v, w) = edges[c];
        if r == v {
            xi(3, 1)
        } else if r == w {
            int(3, 1)
        } else {
            int(3, 0)
        }
    })
}

#[test]
fn rank_and_kernel_of_the_first_differential() {
    let d1 = delta3_d1();
    assert_eq!(d1.exact_rank(), 4);
    let z = d1.exact_kernel_basis();
    assert_eq!(z.cols(), 2);
    assert!(d1.try_mul(&z).unwrap().is_zero());
    // The two displayed cycle generators lie in the kernel.
    let one = || int(3, 1);
    let m1 = || int(3, -1);
    let zero = || int(3, 0);
    let g1 = [zero(), one(), m1(), m1(), one(), zero()];
    let g2 = [xi(3, 1), -xi(3, 1), zero(), zero(), m1(), one()];
    for g in [g1, g2] {
        let col = CycMatrix::from_entries(3, 6, 1, g.to_vec()).unwrap();
        assert!(d1.try_mul(&col).unwrap().is_zero());
        assert_eq!(z.hstack(&col).unwrap().exact_rank(), 2);
    }
}

#[test]
fn degenerate_shapes() {
    assert_eq!(CycMatrix::zeros(3, 0, 4).exact_rank(), 0);
    assert_eq!(CycMatrix::zeros(3, 4, 0).exact_rank(), 0);
    assert_eq!(CycMatrix::identity(5, 5).exact_rank(), 5);
    assert_eq!(CycMatrix::identity(5, 5).exact_kernel_basis().cols(), 0);
    let k = CycMatrix::zeros(3, 3, 3).exact_kernel_basis();
    assert_eq!((k.rows(), k.cols(), k.exact_rank()), (3, 3, 3));
}

#[test]
fn full_sum_of_powers_vanishes_but_partial_sums_do_not() {
    for order in [2u32, 3, 5, 7, 11] {
        let mut acc = int(order, 0);
        for i in 0..order as i64 {
            acc = &acc + &xi(order, i);
            if i < order as i64 - 1 {
                assert!(!acc.is_zero(), "N={order} k={i}");
            }
        }
        assert!(acc.is_zero());
    }
}

fn number(order: u32) -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec((-9i64..10, 1i64..5), order as usize - 1).prop_map(move |c| coeffs(order, &c))
}

fn order() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7])
}

fn triple() -> impl Strategy<Value = (CyclotomicNumber, CyclotomicNumber, CyclotomicNumber)> {
    order().prop_flat_map(|n| (number(n), number(n), number(n)))
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn embedding_is_a_homomorphism((a, b, _c) in triple()) {
        let (za, zb) = (a.to_complex(), b.to_complex());
        prop_assert!(((&a + &b).to_complex() - (za + zb)).norm() < 1e-12);
        prop_assert!(((&a * &b).to_complex() - za * zb).norm() < 1e-12 * (1.0 + (za * zb).norm()));
        prop_assert!((a.conj().to_complex() - za.conj()).norm() < 1e-12);
    }

    #[test]
    fn rank_is_invariant_under_conjugate_transpose(
        (order, rows, cols, seed) in (order(), 1usize..5, 1usize..5, any::<u64>())
    ) {
        // Sparse-ish entries so that rank deficiency is common.
        let mut state = seed;
        let m = CycMatrix::from_fn(order, rows, cols, |_, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let r = (state >> 33) % 6;
            if r < 3 { int(order, 0) } else { xi(order, (r as i64) * (state >> 50) as i64) }
        });
        prop_assert_eq!(m.exact_rank(), m.conj_transpose().exact_rank());
        prop_assert_eq!(m.exact_kernel_basis().cols(), cols - m.exact_rank());
    }
}
