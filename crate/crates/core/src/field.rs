//! Coefficient fields: the rationals with exact arbitrary-precision
//! arithmetic, and prime fields F_p for p < 2^31.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Which coefficient field a polynomial lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FieldSpec {
    /// The rational numbers.
    Q,
    /// The prime field with `p` elements.
    Fp(u32),
}

impl FieldSpec {
    /// Parse a field descriptor: `q` or `fp:<prime>`.
    pub fn parse(text: &str) -> Result<FieldSpec> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Q);
        }
        if let Some(rest) = t.strip_prefix("fp:").or_else(|| t.strip_prefix("FP:")) {
            let p: u32 = rest
                .parse()
                .map_err(|_| Error::BadFieldSpec(text.to_string()))?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            return Ok(FieldSpec::Fp(p));
        }
        Err(Error::BadFieldSpec(text.to_string()))
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            FieldSpec::Q => FieldElem::Q(BigRational::zero()),
            FieldSpec::Fp(p) => FieldElem::Fp { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> FieldElem {
        match self {
            FieldSpec::Q => FieldElem::Q(BigRational::one()),
            FieldSpec::Fp(p) => FieldElem::Fp { val: 1, p: *p },
        }
    }

    pub fn from_integer(&self, n: i64) -> FieldElem {
        match self {
            FieldSpec::Q => FieldElem::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Fp(p) => {
                let p64 = *p as i64;
                FieldElem::Fp {
                    val: n.rem_euclid(p64) as u64,
                    p: *p,
                }
            }
        }
    }

    /// Build `num/den` in this field. Fails for a zero denominator, or over
    /// F_p when the denominator is divisible by p.
    pub fn from_ratio(&self, num: BigInt, den: BigInt) -> Result<FieldElem> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Q => Ok(FieldElem::Q(BigRational::new(num, den))),
            FieldSpec::Fp(p) => {
                let n = big_mod(&num, *p);
                let d = big_mod(&den, *p);
                if d == 0 {
                    return Err(Error::NotRepresentable { p: *p });
                }
                let inv = mod_inverse(d, *p).expect("nonzero residue mod a prime is invertible");
                Ok(FieldElem::Fp {
                    val: n * inv % (*p as u64),
                    p: *p,
                })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "q"),
            FieldSpec::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

/// An element of the active coefficient field. Rationals are kept in lowest
/// terms with positive denominator (BigRational maintains that); prime-field
/// residues are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Q(BigRational),
    Fp { val: u64, p: u32 },
}

impl FieldElem {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElem::Q(_) => FieldSpec::Q,
            FieldElem::Fp { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Q(r) => r.is_zero(),
            FieldElem::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Q(r) => r.is_one(),
            FieldElem::Fp { val, .. } => *val == 1,
        }
    }

    /// True for negative rationals. Prime-field residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Q(r) => r.is_negative(),
            FieldElem::Fp { .. } => false,
        }
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Q(a), FieldElem::Q(b)) => FieldElem::Q(a + b),
            (FieldElem::Fp { val: a, p }, FieldElem::Fp { val: b, p: q }) if p == q => {
                FieldElem::Fp {
                    val: (a + b) % (*p as u64),
                    p: *p,
                }
            }
            _ => panic!("field mismatch in coefficient arithmetic"),
        }
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElem {
        match self {
            FieldElem::Q(a) => FieldElem::Q(-a),
            FieldElem::Fp { val, p } => FieldElem::Fp {
                val: if *val == 0 { 0 } else { *p as u64 - val },
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Q(a), FieldElem::Q(b)) => FieldElem::Q(a * b),
            (FieldElem::Fp { val: a, p }, FieldElem::Fp { val: b, p: q }) if p == q => {
                FieldElem::Fp {
                    val: a * b % (*p as u64),
                    p: *p,
                }
            }
            _ => panic!("field mismatch in coefficient arithmetic"),
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElem::Q(a) => FieldElem::Q(a.recip()),
            FieldElem::Fp { val, p } => FieldElem::Fp {
                val: mod_inverse(*val, *p).expect("nonzero residue mod a prime is invertible"),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&other.inv()?))
    }

    /// The absolute value for rationals; identity on prime-field residues.
    pub fn abs(&self) -> FieldElem {
        match self {
            FieldElem::Q(a) => FieldElem::Q(a.abs()),
            other => other.clone(),
        }
    }

    /// Underlying rational, if over Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Q(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Q(r) => write!(f, "{r}"),
            FieldElem::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

fn big_mod(n: &BigInt, p: u32) -> u64 {
    let p_big = BigInt::from(p);
    let r = ((n % &p_big) + &p_big) % &p_big;
    r.to_u64().expect("residue fits in u64")
}

fn mod_inverse(a: u64, p: u32) -> Option<u64> {
    // Extended Euclid on (a, p).
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(p as i64) as u64)
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Q);
        assert_eq!(FieldSpec::parse("fp:7").unwrap(), FieldSpec::Fp(7));
        assert_eq!(FieldSpec::parse("fp:65537").unwrap(), FieldSpec::Fp(65537));
        assert!(matches!(FieldSpec::parse("fp:6"), Err(Error::NotPrime(6))));
        assert!(FieldSpec::parse("r").is_err());
        assert!(FieldSpec::parse("fp:").is_err());
    }

    #[test]
    fn rational_arithmetic_stays_reduced() {
        let q = FieldSpec::Q;
        let half = q.from_ratio(BigInt::from(2), BigInt::from(4)).unwrap();
        let third = q.from_ratio(BigInt::from(1), BigInt::from(3)).unwrap();
        let sum = half.add(&third);
        assert_eq!(sum, q.from_ratio(BigInt::from(5), BigInt::from(6)).unwrap());
        assert_eq!(sum.to_string(), "5/6");
        let neg = q.from_ratio(BigInt::from(1), BigInt::from(-2)).unwrap();
        assert_eq!(neg.to_string(), "-1/2");
    }

    #[test]
    fn prime_field_inverses() {
        let f7 = FieldSpec::Fp(7);
        for a in 1..7 {
            let x = f7.from_integer(a);
            assert!(x.mul(&x.inv().unwrap()).is_one());
        }
        assert!(f7.zero().inv().is_err());
        // 3/2 over F_7 is 3 * 4 = 12 = 5.
        let v = f7.from_ratio(BigInt::from(3), BigInt::from(2)).unwrap();
        assert_eq!(v, f7.from_integer(5));
        // Denominator divisible by p is not representable.
        assert!(matches!(
            f7.from_ratio(BigInt::from(1), BigInt::from(14)),
            Err(Error::NotRepresentable { p: 7 })
        ));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(2147483647));
        assert!(!is_prime(1));
        assert!(!is_prime(49));
    }
}
