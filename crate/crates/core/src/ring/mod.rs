//! Arbitrary-precision integer and polynomial arithmetic over `Z/nZ`.
//!
//! Every polynomial handled here is kept in a canonical form: coefficients
//! reduced into `[0, n)`, no leading zeros, the zero polynomial represented
//! by an empty coefficient vector. Canonical form makes equality exact,
//! which the test pipeline relies on (`f_d = 1` checks, piece products,
//! report determinism).

mod disc;
mod gcmd;
mod intpoly;
mod jacobi;
mod modpoly;
mod modulus;

pub use disc::discriminant;
pub use gcmd::{gcmd, GcmdOutcome};
pub use intpoly::IntPoly;
pub use jacobi::jacobi;
pub use modpoly::{ModPoly, NonzeroRemainder};
pub use modulus::{InvalidModulus, Modulus};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Inverse of `a` modulo `n`, or the offending `gcd(a, n) > 1`.
///
/// The error value is exactly what the Euclidean gcmd loop needs: a
/// nontrivial divisor of `n` whenever `0 < a < n`.
pub fn invert(a: &BigUint, n: &BigUint) -> Result<BigUint, BigUint> {
    if a.is_zero() {
        return Err(n.clone());
    }
    let e = BigInt::from(a.clone()).extended_gcd(&BigInt::from(n.clone()));
    if e.gcd.is_one() {
        let n_int = BigInt::from(n.clone());
        let x = e.x.mod_floor(&n_int);
        Ok(x.to_biguint().expect("reduced residue is non-negative"))
    } else {
        Err(e.gcd.to_biguint().expect("gcd of positives is positive"))
    }
}

/// Reduce a signed integer into `[0, n)`.
pub fn reduce_int(a: &BigInt, n: &BigUint) -> BigUint {
    let n_int = BigInt::from(n.clone());
    let r = a.mod_floor(&n_int);
    debug_assert!(!r.is_negative());
    r.to_biguint().expect("mod_floor by positive is non-negative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn invert_finds_inverses_and_factors() {
        assert_eq!(invert(&u(3), &u(10)), Ok(u(7)));
        assert_eq!(invert(&u(12), &u(15)), Err(u(3)));
        assert_eq!(invert(&u(0), &u(15)), Err(u(15)));
    }

    #[test]
    fn reduce_int_handles_negatives() {
        use num_bigint::BigInt;
        assert_eq!(reduce_int(&BigInt::from(-1), &u(323)), u(322));
        assert_eq!(reduce_int(&BigInt::from(-559616_i64), &u(89)), u(16));
        assert_eq!(reduce_int(&BigInt::from(7), &u(5)), u(2));
    }
}
