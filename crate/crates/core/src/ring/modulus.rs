use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

/// An odd modulus `n >= 3`, the ring parameter for every test computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    n: BigUint,
}

/// Rejected modulus: even or below 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidModulus(pub BigUint);

impl fmt::Display for InvalidModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "modulus {} is not an odd integer >= 3", self.0)
    }
}

impl std::error::Error for InvalidModulus {}

impl Modulus {
    pub fn new(n: BigUint) -> Result<Self, InvalidModulus> {
        if n.is_even() || n < BigUint::from(3u32) {
            return Err(InvalidModulus(n));
        }
        Ok(Modulus { n })
    }

    /// Convenience constructor for small moduli in tests and fixtures.
    pub fn from_u64(n: u64) -> Result<Self, InvalidModulus> {
        Self::new(BigUint::from(n))
    }

    pub fn value(&self) -> &BigUint {
        &self.n
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.n.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_and_tiny() {
        assert!(Modulus::from_u64(4).is_err());
        assert!(Modulus::from_u64(1).is_err());
        assert!(Modulus::from_u64(2).is_err());
        assert!(Modulus::from_u64(0).is_err());
        assert!(Modulus::from_u64(3).is_ok());
        assert!(Modulus::from_u64(323).is_ok());
    }
}
