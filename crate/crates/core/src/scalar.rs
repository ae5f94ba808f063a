//! Exact scalars and pencil parameters.
//!
//! [`Scalar`] is an arbitrary precision rational kept in lowest terms with a
//! positive denominator. Rationals travel through files as decimal strings
//! `"p/q"`, with `"/q"` omitted when `q = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn scalar_to_string(s: &Scalar) -> String {
    // BigRational's Display already omits a unit denominator.
    s.to_string()
}

pub fn scalar_from_str(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let r = Scalar::from_str(t).map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    if r.denom().is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(r)
}

/// Clears denominators of a rational vector, returning integers with the
/// same projective class.
pub fn clear_denominators(v: &[Scalar]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Divides out the content and makes the first nonzero entry positive.
/// Returns `None` for the zero vector.
pub fn canonical_ints<const N: usize>(mut v: [BigInt; N]) -> Option<[BigInt; N]> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return None;
    }
    let first_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if first_negative {
            *x = -&*x;
        }
    }
    Some(v)
}

/// A parameter on a pencil `p(λ) = u + λ v`, with `p(∞) = v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ProjParam {
    Finite(Scalar),
    Infinity,
}

impl ProjParam {
    pub fn finite(s: Scalar) -> Self {
        ProjParam::Finite(s)
    }

    pub fn from_int(n: i64) -> Self {
        ProjParam::Finite(int(n))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjParam::Infinity)
    }

    /// Builds a parameter from a homogeneous pair `num : den`.
    pub fn from_ratio(num: Scalar, den: Scalar) -> Self {
        if den.is_zero() {
            ProjParam::Infinity
        } else {
            ProjParam::Finite(num / den)
        }
    }

    /// `1/x`, with `0 ↔ ∞`.
    pub fn recip(&self) -> Self {
        match self {
            ProjParam::Infinity => ProjParam::Finite(Scalar::zero()),
            ProjParam::Finite(s) if s.is_zero() => ProjParam::Infinity,
            ProjParam::Finite(s) => ProjParam::Finite(s.recip()),
        }
    }
}

impl fmt::Display for ProjParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjParam::Finite(s) => write!(f, "{s}"),
            ProjParam::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ProjParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "INFINITY" | "∞" => Ok(ProjParam::Infinity),
            t => scalar_from_str(t).map(ProjParam::Finite),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(scalar_to_string(&ratio(6, -4)), "-3/2");
        assert_eq!(scalar_to_string(&int(7)), "7");
        assert_eq!(scalar_from_str("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(scalar_from_str("10/5").unwrap(), int(2));
        assert!(scalar_from_str("1/0").is_err());
        assert!(scalar_from_str("abc").is_err());
    }

    #[test]
    fn canonical_form() {
        let v = canonical_ints([BigInt::from(0), BigInt::from(-4), BigInt::from(6)]).unwrap();
        assert_eq!(v, [BigInt::from(0), BigInt::from(2), BigInt::from(-3)]);
        assert!(canonical_ints([BigInt::zero(), BigInt::zero()]).is_none());
        let again = canonical_ints(v.clone()).unwrap();
        assert_eq!(again, v);
    }

    #[test]
    fn param_recip() {
        assert_eq!(ProjParam::Infinity.recip(), ProjParam::from_int(0));
        assert_eq!(ProjParam::from_int(0).recip(), ProjParam::Infinity);
        assert_eq!(ProjParam::from_int(-2).recip(), ProjParam::Finite(ratio(-1, 2)));
        assert_eq!("inf".parse::<ProjParam>().unwrap(), ProjParam::Infinity);
    }

    #[test]
    fn clearing() {
        let v = clear_denominators(&[ratio(1, 2), ratio(1, 3), int(0)]);
        assert_eq!(v, vec![BigInt::from(3), BigInt::from(2), BigInt::from(0)]);
    }
}
