use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A polynomial with signed arbitrary-precision integer coefficients.
///
/// Coefficient `k` is the coefficient of `x^k`; leading zeros are stripped,
/// so the zero polynomial has an empty coefficient vector. Test polynomials
/// are monic, which [`IntPoly::is_monic`] checks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Build from small coefficients, ascending powers: `&[1, 12, 0, 0, 1]`
    /// is `x^4 + 12x + 1`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monic product of `x - r` over the given roots.
    pub fn from_roots(roots: &[BigInt]) -> Self {
        let mut acc = IntPoly::new(vec![BigInt::one()]);
        for r in roots {
            acc = acc.mul(&IntPoly::new(vec![-r.clone(), BigInt::one()]));
        }
        acc
    }

    pub fn from_roots_i64(roots: &[i64]) -> Self {
        let roots: Vec<BigInt> = roots.iter().map(|&r| BigInt::from(r)).collect();
        Self::from_roots(&roots)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// `f(0)`, zero for the zero polynomial.
    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn derivative(&self) -> IntPoly {
        let d: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPoly::new(d)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{}", term(c, k, true))?;
                first = false;
            } else {
                write!(f, " {}", term(c, k, false))?;
            }
        }
        Ok(())
    }
}

fn term(c: &BigInt, k: usize, leading: bool) -> String {
    use num_traits::Signed;
    let sign = if leading {
        if c.is_negative() { "-".to_string() } else { String::new() }
    } else if c.is_negative() {
        "- ".to_string()
    } else {
        "+ ".to_string()
    };
    let mag = c.abs();
    match k {
        0 => format!("{sign}{mag}"),
        _ => {
            let var = if k == 1 { "x".to_string() } else { format!("x^{k}") };
            if mag.is_one() {
                format!("{sign}{var}")
            } else {
                format!("{sign}{mag}{var}")
            }
        }
    }
}
