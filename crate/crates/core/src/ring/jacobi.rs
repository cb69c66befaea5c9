use num_bigint::BigInt;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{reduce_int, Modulus};

/// Jacobi symbol `(a | n)` for odd `n >= 3`; zero exactly when
/// `gcd(a, n) > 1`.
///
/// Negative `a` reduces mod `n` first, which folds in the standard
/// `(-1 | n) = (-1)^((n-1)/2)` rule.
pub fn jacobi(a: &BigInt, n: &Modulus) -> i8 {
    let mut a = reduce_int(a, n.value());
    let mut n = n.value().clone();
    let mut sign: i8 = 1;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            // (2|n) = -1 iff n = 3, 5 mod 8
            let r = low3(&n);
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        // both odd: quadratic reciprocity flips when both are 3 mod 4
        if low_bits(&a) == 3 && low_bits(&n) == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
        a %= &n;
    }
    if n.is_one() {
        sign
    } else {
        0
    }
}

fn low_bits(x: &BigUint) -> u8 {
    (x % BigUint::from(4u32)).to_u32_digits().first().copied().unwrap_or(0) as u8
}

fn low3(x: &BigUint) -> u8 {
    (x % BigUint::from(8u32)).to_u32_digits().first().copied().unwrap_or(0) as u8
}
