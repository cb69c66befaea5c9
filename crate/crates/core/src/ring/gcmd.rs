use num_bigint::BigUint;
use num_traits::One;

use super::{invert, ModPoly};

/// Result of the Euclidean algorithm over `Z/nZ[x]`.
///
/// Over a composite modulus the greatest common monic divisor need not
/// exist; when the algorithm runs into a remainder whose leading coefficient
/// is not invertible, that coefficient shares a nontrivial factor with `n`,
/// which is a compositeness proof and is returned instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GcmdOutcome {
    /// The monic generator of the ideal `(g1, g2)`.
    Gcmd(ModPoly),
    /// A divisor `d` of `n` with `1 < d < n`, found when a leading
    /// coefficient was not invertible.
    FactorFound(BigUint),
    /// Kept for completeness of the outcome vocabulary; the Euclidean
    /// algorithm itself always produces one of the other two variants.
    NotExist,
}

/// Greatest common monic divisor of `g1` and `g2` over their shared odd
/// modulus, by the Euclidean remainder chain.
///
/// Each division step inverts the divisor's leading coefficient; when the
/// inversion fails the gcd of that coefficient with `n` is a nontrivial
/// factor (coefficients are canonical, so the gcd can never be `n`
/// itself). The final nonzero remainder is scaled monic the same way.
///
/// Panics if both inputs are zero.
pub fn gcmd(g1: &ModPoly, g2: &ModPoly) -> GcmdOutcome {
    assert_eq!(g1.modulus(), g2.modulus(), "mixed moduli in gcmd");
    assert!(!(g1.is_zero() && g2.is_zero()), "gcmd(0, 0) is undefined");
    let n = g1.modulus().value().clone();

    let (mut a, mut b) = if g1.coeffs().len() >= g2.coeffs().len() {
        (g1.clone(), g2.clone())
    } else {
        (g2.clone(), g1.clone())
    };
    while !b.is_zero() {
        let r = match a.divrem(&b) {
            Ok((_, r)) => r,
            Err(d) => {
                debug_assert!(d > BigUint::one() && d < n && (&n % &d).bits() == 0);
                return GcmdOutcome::FactorFound(d);
            }
        };
        a = b;
        b = r;
    }
    let lead = a.leading().expect("last nonzero remainder exists");
    match invert(lead, &n) {
        Ok(inv) => GcmdOutcome::Gcmd(a.scale(&inv)),
        Err(d) => {
            debug_assert!(d > BigUint::one() && d < n);
            GcmdOutcome::FactorFound(d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Modulus;

    fn m(n: u64) -> Modulus {
        Modulus::from_u64(n).unwrap()
    }

    #[test]
    fn quartic_example_linear_piece() {
        // gcmd(59x^3+51x^2+20x+86, x^4+12x+1) = x + 78 over Z/89Z
        let n = m(89);
        let g1 = ModPoly::from_i64_coeffs(&n, &[86, 20, 51, 59]);
        let g2 = ModPoly::from_i64_coeffs(&n, &[1, 12, 0, 0, 1]);
        assert_eq!(
            gcmd(&g1, &g2),
            GcmdOutcome::Gcmd(ModPoly::from_i64_coeffs(&n, &[78, 1]))
        );
    }

    #[test]
    fn gcmd_of_self_is_monic_scaling() {
        let n = m(91);
        let g = ModPoly::from_i64_coeffs(&n, &[5, 0, 3]);
        // leading coefficient 3 is invertible mod 91 (3 * 61 = 183 = 2*91 + 1)
        match gcmd(&g, &g) {
            GcmdOutcome::Gcmd(h) => {
                assert!(h.is_monic());
                assert_eq!(h, g.scale(&BigUint::from(61u32)));
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn noninvertible_remainder_yields_factor() {
        // gcmd(x+11, x+14) over Z/15Z: first remainder is the constant
        // -3 = 12, gcd(12, 15) = 3 divides 15.
        let n = m(15);
        let g1 = ModPoly::from_i64_coeffs(&n, &[11, 1]);
        let g2 = ModPoly::from_i64_coeffs(&n, &[14, 1]);
        assert_eq!(gcmd(&g1, &g2), GcmdOutcome::FactorFound(BigUint::from(3u32)));
    }

    #[test]
    fn zero_argument_returns_other_monic() {
        let n = m(89);
        let f = ModPoly::from_i64_coeffs(&n, &[8, 32, 11, 1]);
        assert_eq!(gcmd(&ModPoly::zero(&n), &f), GcmdOutcome::Gcmd(f.clone()));
        assert_eq!(gcmd(&f, &ModPoly::zero(&n)), GcmdOutcome::Gcmd(f));
    }
}
