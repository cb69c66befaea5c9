use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{invert, reduce_int, IntPoly, Modulus};

/// A canonical polynomial over `Z/nZ`.
///
/// Coefficient `k` holds the coefficient of `x^k`, every coefficient lies in
/// `[0, n)`, and the highest-index coefficient is nonzero (the zero
/// polynomial is the empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    modulus: Modulus,
    coeffs: Vec<BigUint>,
}

/// Exact division was asked for but the remainder was nonzero — an internal
/// contract violation by the caller, not a property of the input number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonzeroRemainder {
    pub remainder: ModPoly,
}

impl fmt::Display for NonzeroRemainder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exact division left nonzero remainder {}", self.remainder)
    }
}

impl std::error::Error for NonzeroRemainder {}

impl ModPoly {
    /// Canonicalize signed coefficients: reduce into `[0, n)`, strip leading
    /// zeros.
    pub fn from_int_coeffs(m: &Modulus, coeffs: &[BigInt]) -> Self {
        let reduced = coeffs.iter().map(|c| reduce_int(c, m.value())).collect();
        Self::from_uint_coeffs(m, reduced)
    }

    pub fn from_uint_coeffs(m: &Modulus, coeffs: Vec<BigUint>) -> Self {
        let mut coeffs: Vec<BigUint> = coeffs.into_iter().map(|c| c % m.value()).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let p = ModPoly { modulus: m.clone(), coeffs };
        p.debug_assert_canonical();
        p
    }

    pub fn from_i64_coeffs(m: &Modulus, coeffs: &[i64]) -> Self {
        let coeffs: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_int_coeffs(m, &coeffs)
    }

    /// Reduction of an integer polynomial mod `n`.
    pub fn from_int_poly(m: &Modulus, f: &IntPoly) -> Self {
        Self::from_int_coeffs(m, f.coeffs())
    }

    pub fn zero(m: &Modulus) -> Self {
        ModPoly { modulus: m.clone(), coeffs: Vec::new() }
    }

    pub fn one(m: &Modulus) -> Self {
        Self::constant(m, BigUint::one())
    }

    pub fn constant(m: &Modulus, c: BigUint) -> Self {
        Self::from_uint_coeffs(m, vec![c])
    }

    /// The monomial `x`.
    pub fn x(m: &Modulus) -> Self {
        Self::from_uint_coeffs(m, vec![BigUint::zero(), BigUint::one()])
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigUint> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    fn debug_assert_canonical(&self) {
        debug_assert!(self.coeffs.iter().all(|c| c < self.modulus.value()));
        debug_assert!(!self.coeffs.last().is_some_and(Zero::is_zero));
    }

    fn assert_same_modulus(&self, other: &ModPoly) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in polynomial arithmetic"
        );
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        self.assert_same_modulus(other);
        let n = self.modulus.value();
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push((self.coeff(k) + other.coeff(k)) % n);
        }
        ModPoly::from_uint_coeffs(&self.modulus, out)
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        self.assert_same_modulus(other);
        let n = self.modulus.value();
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push((self.coeff(k) + n - other.coeff(k)) % n);
        }
        ModPoly::from_uint_coeffs(&self.modulus, out)
    }

    /// Plain product in `Z/nZ[x]` (no reduction by a modulus polynomial).
    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        self.assert_same_modulus(other);
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(&self.modulus);
        }
        let n = self.modulus.value();
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        for c in &mut out {
            *c %= n;
        }
        ModPoly::from_uint_coeffs(&self.modulus, out)
    }

    pub fn scale(&self, c: &BigUint) -> ModPoly {
        let n = self.modulus.value();
        let c = c % n;
        let out = self.coeffs.iter().map(|a| a * &c % n).collect();
        ModPoly::from_uint_coeffs(&self.modulus, out)
    }

    /// Remainder of `self` by a monic divisor of degree >= 0.
    ///
    /// Reduction by a monic constant (necessarily `1`) collapses the whole
    /// ring, so everything reduces to zero.
    pub fn rem_monic(&self, f: &ModPoly) -> ModPoly {
        self.divrem_monic(f).1
    }

    pub fn divrem_monic(&self, f: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(f.is_monic(), "divisor must be monic");
        self.divrem_with_inverse(f, &BigUint::one())
            .expect("monic division cannot fail")
    }

    /// Schoolbook division where `inv_lead` is the inverse of the divisor's
    /// leading coefficient. Fails only if the caller supplied a wrong
    /// inverse.
    fn divrem_with_inverse(
        &self,
        f: &ModPoly,
        inv_lead: &BigUint,
    ) -> Option<(ModPoly, ModPoly)> {
        self.assert_same_modulus(f);
        let d = f.degree()?;
        let n = self.modulus.value().clone();
        if d == 0 {
            // Quotient ring mod (n, c) for invertible c is trivial.
            let q = self.scale(inv_lead);
            return Some((q, ModPoly::zero(&self.modulus)));
        }
        if self.coeffs.len() < f.coeffs.len() {
            return Some((ModPoly::zero(&self.modulus), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - d;
        let mut quot = vec![BigUint::zero(); qlen];
        for shift in (0..qlen).rev() {
            let lead = rem[shift + d].clone() % &n;
            if lead.is_zero() {
                continue;
            }
            let c = lead * inv_lead % &n;
            for (k, fc) in f.coeffs.iter().enumerate().take(d) {
                let t = fc * &c % &n;
                let slot = &mut rem[shift + k];
                *slot = (&*slot + &n - t) % &n;
            }
            rem[shift + d] = BigUint::zero();
            quot[shift] = c;
        }
        rem.truncate(d);
        Some((
            ModPoly::from_uint_coeffs(&self.modulus, quot),
            ModPoly::from_uint_coeffs(&self.modulus, rem),
        ))
    }

    /// General division; fails with a nontrivial divisor of `n` when the
    /// divisor's leading coefficient is not invertible.
    pub(crate) fn divrem(&self, f: &ModPoly) -> Result<(ModPoly, ModPoly), BigUint> {
        let lead = f.leading().expect("division by zero polynomial");
        let inv = invert(lead, self.modulus.value())?;
        Ok(self
            .divrem_with_inverse(f, &inv)
            .expect("divisor is nonzero"))
    }

    /// Product `a * b` reduced mod `(n, f)` for monic `f` of degree >= 1.
    pub fn mul_mod(&self, other: &ModPoly, f: &ModPoly) -> ModPoly {
        self.mul(other).rem_monic(f)
    }

    /// `self^e mod (n, f)` by left-to-right binary squaring; `e = 0` gives 1.
    pub fn pow_mod(&self, e: &BigUint, f: &ModPoly) -> ModPoly {
        assert!(f.is_monic(), "exponentiation modulus must be monic");
        if f.degree() == Some(0) {
            return ModPoly::zero(&self.modulus);
        }
        if e.is_zero() {
            return ModPoly::one(&self.modulus);
        }
        let base = self.rem_monic(f);
        let mut acc = base.clone();
        for j in (0..e.bits() - 1).rev() {
            acc = acc.mul_mod(&acc, f);
            if e.bit(j) {
                acc = acc.mul_mod(&base, f);
            }
        }
        acc
    }

    /// Composition `self(h) mod (n, f)` by the Horner scheme.
    pub fn compose_mod(&self, h: &ModPoly, f: &ModPoly) -> ModPoly {
        self.assert_same_modulus(h);
        if f.degree() == Some(0) {
            return ModPoly::zero(&self.modulus);
        }
        let mut acc = ModPoly::zero(&self.modulus);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_mod(h, f);
            acc = acc.add(&ModPoly::constant(&self.modulus, c.clone()));
        }
        acc
    }

    /// Quotient `self / g` for monic `g` assumed to divide `self` mod `n`.
    pub fn exact_div(&self, g: &ModPoly) -> Result<ModPoly, NonzeroRemainder> {
        assert!(g.is_monic(), "exact division requires a monic divisor");
        let (q, r) = self.divrem_monic(g);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(NonzeroRemainder { remainder: r })
        }
    }

    /// Evaluate at a point, Horner scheme.
    pub fn eval(&self, a: &BigUint) -> BigUint {
        let n = self.modulus.value();
        let a = a % n;
        let mut acc = BigUint::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc * &a + c) % n;
        }
        acc
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{c}x")?,
                _ if c.is_one() => write!(f, "x^{k}")?,
                _ => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}
