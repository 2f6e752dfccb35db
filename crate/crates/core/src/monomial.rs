use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^xexp y^yexp` in two variables.
///
/// Serialized as the two-element array `[xexp, yexp]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u64; 2]", into = "[u64; 2]")]
pub struct Monomial {
    pub xexp: u64,
    pub yexp: u64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { xexp: 0, yexp: 0 };

    pub const fn new(xexp: u64, yexp: u64) -> Self {
        Monomial { xexp, yexp }
    }

    /// `self | other` in the divisibility order.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.xexp <= other.xexp && self.yexp <= other.yexp
    }

    /// Product of two monomials, failing instead of wrapping on overflow.
    #[inline]
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        Ok(Monomial {
            xexp: self.xexp.checked_add(other.xexp).ok_or(Error::Overflow)?,
            yexp: self.yexp.checked_add(other.yexp).ok_or(Error::Overflow)?,
        })
    }

    /// Raises every exponent by the factor `k`, i.e. substitutes `x -> x^k, y -> y^k`.
    pub fn scaled(&self, k: u64) -> Result<Monomial> {
        Ok(Monomial {
            xexp: self.xexp.checked_mul(k).ok_or(Error::Overflow)?,
            yexp: self.yexp.checked_mul(k).ok_or(Error::Overflow)?,
        })
    }

    /// Total degree. Saturates at `u64::MAX`.
    pub fn degree(&self) -> u64 {
        self.xexp.saturating_add(self.yexp)
    }

    /// The image under the variable swap `x <-> y`.
    pub fn swapped(&self) -> Monomial {
        Monomial::new(self.yexp, self.xexp)
    }
}

pub fn divides(u: &Monomial, v: &Monomial) -> bool {
    u.divides(v)
}

pub fn product(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    u.checked_mul(v)
}

impl From<[u64; 2]> for Monomial {
    fn from([xexp, yexp]: [u64; 2]) -> Self {
        Monomial { xexp, yexp }
    }
}

impl From<Monomial> for [u64; 2] {
    fn from(m: Monomial) -> Self {
        [m.xexp, m.yexp]
    }
}

impl From<(u64, u64)> for Monomial {
    fn from((xexp, yexp): (u64, u64)) -> Self {
        Monomial { xexp, yexp }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |f: &mut fmt::Formatter<'_>, name: char, e: u64| match e {
            0 => Ok(()),
            1 => write!(f, "{name}"),
            _ => write!(f, "{name}^{e}"),
        };
        match (self.xexp, self.yexp) {
            (0, 0) => write!(f, "1"),
            (_, 0) => var(f, 'x', self.xexp),
            (0, _) => var(f, 'y', self.yexp),
            _ => {
                var(f, 'x', self.xexp)?;
                write!(f, " ")?;
                var(f, 'y', self.yexp)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility() {
        assert!(divides(&Monomial::new(0, 0), &Monomial::new(7, 3)));
        assert!(divides(&Monomial::new(2, 1), &Monomial::new(2, 1)));
        assert!(!divides(&Monomial::new(1, 2), &Monomial::new(2, 1)));
        assert!(!divides(&Monomial::new(2, 1), &Monomial::new(1, 2)));
    }

    #[test]
    fn products() {
        let m = |x, y| Monomial::new(x, y);
        assert_eq!(product(&m(5, 0), &m(0, 5)).unwrap(), m(5, 5));
        assert_eq!(product(&m(50, 0), &m(0, 50)).unwrap(), m(50, 50));
        assert_eq!(product(&m(3, 9), &Monomial::ONE).unwrap(), m(3, 9));
    }

    #[test]
    fn overflow_is_an_error() {
        let big = Monomial::new(u64::MAX, 0);
        assert_eq!(product(&big, &Monomial::new(1, 0)), Err(Error::Overflow));
        assert_eq!(Monomial::new(0, u64::MAX).scaled(2), Err(Error::Overflow));
        assert!(product(&big, &Monomial::new(0, 1)).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(0, 0).to_string(), "1");
        assert_eq!(Monomial::new(1, 0).to_string(), "x");
        assert_eq!(Monomial::new(40, 10).to_string(), "x^40 y^10");
        assert_eq!(Monomial::new(0, 50).to_string(), "y^50");
        assert_eq!(Monomial::new(1, 1).to_string(), "x y");
    }

    #[test]
    fn serde_shape() {
        let json = serde_json::to_string(&Monomial::new(40, 10)).unwrap();
        assert_eq!(json, "[40,10]");
        let back: Monomial = serde_json::from_str("[3,4]").unwrap();
        assert_eq!(back, Monomial::new(3, 4));
    }
}
