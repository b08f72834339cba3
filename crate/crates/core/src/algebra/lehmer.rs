//! Lehmer's gcd for big integers.
//!
//! The binary gcd behind `num_integer::Integer::gcd` costs a shift and a
//! subtraction of the full operands per bit, which dominates Gröbner runs
//! with thousand-bit coefficients. Lehmer's method simulates Euclid on the
//! leading 63 bits and applies the accumulated cofactors in one step.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    BigInt::from_biguint(Sign::Plus, gcd_unsigned(a.magnitude().clone(), b.magnitude().clone()))
}

fn top_bits(n: &BigUint, shift: u64) -> i128 {
    (n >> shift).to_u64().expect("at most 63 bits") as i128
}

fn gcd_unsigned(mut a: BigUint, mut b: BigUint) -> BigUint {
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let (abits, bbits) = (a.bits(), b.bits());
        if abits <= 64 {
            let (mut x, mut y) = (a.to_u64().unwrap(), b.to_u64().unwrap());
            while y != 0 {
                (x, y) = (y, x % y);
            }
            return BigUint::from(x);
        }
        if abits - bbits > 32 {
            let r = &a % &b;
            a = b;
            b = r;
            continue;
        }
        let shift = abits - 63;
        let (mut x, mut y) = (top_bits(&a, shift), top_bits(&b, shift));
        // invariant: a' = A a + B b, b' = C a + D b for the simulated pair
        let (mut ca, mut cb, mut cc, mut cd) = (1i128, 0i128, 0i128, 1i128);
        loop {
            if y + cc == 0 || y + cd == 0 {
                break;
            }
            let q = (x + ca) / (y + cc);
            if q != (x + cb) / (y + cd) {
                break;
            }
            (ca, cc) = (cc, ca - q * cc);
            (cb, cd) = (cd, cb - q * cd);
            (x, y) = (y, x - q * y);
        }
        if cb == 0 {
            let r = &a % &b;
            a = b;
            b = r;
        } else {
            let (ai, bi) = (BigInt::from(a), BigInt::from(b));
            let na = &ai * ca + &bi * cb;
            let nb = &ai * cc + &bi * cd;
            a = na.to_biguint().expect("cofactor step stays nonnegative");
            b = nb.to_biguint().expect("cofactor step stays nonnegative");
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn big(digits: &[u64]) -> BigInt {
        digits.iter().fold(BigInt::zero(), |acc, &d| (acc << 64) + d)
    }

    #[test]
    fn small_cases() {
        assert_eq!(gcd(&BigInt::from(0), &BigInt::from(0)), BigInt::from(0));
        assert_eq!(gcd(&BigInt::from(0), &BigInt::from(-5)), BigInt::from(5));
        assert_eq!(gcd(&BigInt::from(12), &BigInt::from(-18)), BigInt::from(6));
    }

    #[test]
    fn fibonacci_worst_case() {
        let (mut a, mut b) = (BigInt::from(1), BigInt::from(1));
        for _ in 0..2000 {
            (a, b) = (b.clone(), a + b);
        }
        assert_eq!(gcd(&a, &b), BigInt::from(1));
        let g = big(&[3, 7, 11]);
        assert_eq!(gcd(&(&a * &g), &(&b * &g)), g);
    }

    proptest! {
        #[test]
        fn agrees_with_binary_gcd(
            x in proptest::collection::vec(any::<u64>(), 0..8),
            y in proptest::collection::vec(any::<u64>(), 0..8),
            z in proptest::collection::vec(any::<u64>(), 0..4),
            neg in any::<bool>(),
        ) {
            let common = big(&z);
            let a = big(&x) * &common;
            let b = if neg { -(big(&y) * &common) } else { big(&y) * &common };
            prop_assert_eq!(gcd(&a, &b), a.gcd(&b));
        }
    }
}
