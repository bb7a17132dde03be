//! Exact scalar arithmetic: integers, rationals and modular residues,
//! together with the field-of-fractions construction for entire rings.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The commutative coefficient ring every algebra is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarRing {
    Integers,
    Rationals,
    /// Residues modulo `n`, `n >= 2`.
    ModN(u64),
}

impl ScalarRing {
    /// Entire means: no zero divisors. `Z/n` is entire exactly when `n` is prime.
    pub fn entire(&self) -> bool {
        match self {
            ScalarRing::Integers | ScalarRing::Rationals => true,
            ScalarRing::ModN(n) => is_prime(*n),
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            ScalarRing::Integers => false,
            ScalarRing::Rationals => true,
            ScalarRing::ModN(n) => is_prime(*n),
        }
    }

    /// The field of fractions. An entire ring embeds into it; a ring that is
    /// already a field maps to itself.
    pub fn fraction_field(&self) -> Result<ScalarRing> {
        match self {
            ScalarRing::Integers => Ok(ScalarRing::Rationals),
            ScalarRing::Rationals => Ok(ScalarRing::Rationals),
            ScalarRing::ModN(n) if is_prime(*n) => Ok(ScalarRing::ModN(*n)),
            ScalarRing::ModN(n) => Err(Error::NotEntire(ScalarRing::ModN(*n))),
        }
    }

    /// The embedding r1 of this ring into its field of fractions.
    pub fn embed(&self, value: &Scalar) -> Result<Scalar> {
        if value.ring() != *self {
            return Err(Error::RingMismatch { left: *self, right: value.ring() });
        }
        match (&value.repr, self.fraction_field()?) {
            (Repr::Int(n), ScalarRing::Rationals) => {
                Ok(Scalar { repr: Repr::Rat(BigRational::from_integer(n.clone())) })
            }
            _ => Ok(value.clone()),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        let repr = match self {
            ScalarRing::Integers => Repr::Int(BigInt::from(v)),
            ScalarRing::Rationals => Repr::Rat(BigRational::from_integer(BigInt::from(v))),
            ScalarRing::ModN(n) => Repr::Mod { n: *n, r: reduce_i64(v, *n) },
        };
        Scalar { repr }
    }

    /// Ring selector in text form: "Z", "Q" or "Z/<n>".
    pub fn parse(src: &str) -> Result<ScalarRing> {
        match src.trim() {
            "Z" => Ok(ScalarRing::Integers),
            "Q" => Ok(ScalarRing::Rationals),
            s if s.starts_with("Z/") => {
                let n: u64 = s[2..]
                    .parse()
                    .map_err(|_| Error::InvalidSpec(format!("bad modulus in ring {s:?}")))?;
                if n < 2 {
                    return Err(Error::InvalidSpec(format!("modulus must be >= 2, got {n}")));
                }
                Ok(ScalarRing::ModN(n))
            }
            s => Err(Error::InvalidSpec(format!("unknown ring {s:?}"))),
        }
    }

    /// Scalar literal: `-?[0-9]+` in every ring, `p/q` in the rationals.
    pub fn parse_literal(&self, src: &str) -> Result<Scalar> {
        let s = src.trim();
        let bad = |m: &str| Error::InvalidSpec(format!("bad scalar literal {s:?}: {m}"));
        if let Some((num, den)) = s.split_once('/') {
            if *self != ScalarRing::Rationals {
                return Err(bad(&format!("fraction literal needs ring Q, ring is {self}")));
            }
            let n: BigInt = num.trim().parse().map_err(|_| bad("bad numerator"))?;
            let d: BigInt = den.trim().parse().map_err(|_| bad("bad denominator"))?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            return Ok(Scalar { repr: Repr::Rat(BigRational::new(n, d)) });
        }
        let n: BigInt = s.parse().map_err(|_| bad("expected an integer"))?;
        Ok(self.from_bigint(n))
    }

    pub fn from_bigint(&self, n: BigInt) -> Scalar {
        let repr = match self {
            ScalarRing::Integers => Repr::Int(n),
            ScalarRing::Rationals => Repr::Rat(BigRational::from_integer(n)),
            ScalarRing::ModN(m) => Repr::Mod { n: *m, r: reduce_bigint(&n, *m) },
        };
        Scalar { repr }
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarRing::Integers => write!(f, "Z"),
            ScalarRing::Rationals => write!(f, "Q"),
            ScalarRing::ModN(n) => write!(f, "Z/{n}"),
        }
    }
}

/// An exact ring element in canonical form: rationals gcd-reduced with
/// positive denominator, residues reduced into `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    repr: Repr,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Int(BigInt),
    Rat(BigRational),
    Mod { n: u64, r: u64 },
}

impl Scalar {
    pub fn ring(&self) -> ScalarRing {
        match &self.repr {
            Repr::Int(_) => ScalarRing::Integers,
            Repr::Rat(_) => ScalarRing::Rationals,
            Repr::Mod { n, .. } => ScalarRing::ModN(*n),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Int(n) => n.is_zero(),
            Repr::Rat(q) => q.is_zero(),
            Repr::Mod { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Int(n) => n.is_one(),
            Repr::Rat(q) => q.is_one(),
            Repr::Mod { r, .. } => *r == 1,
        }
    }

    /// True for signed rings when the canonical representative is negative.
    /// Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match &self.repr {
            Repr::Int(n) => n.is_negative(),
            Repr::Rat(q) => q.is_negative(),
            Repr::Mod { .. } => false,
        }
    }

    fn check_ring(&self, rhs: &Scalar) -> Result<()> {
        if self.ring() == rhs.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.ring(), right: rhs.ring() })
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_ring(rhs)?;
        Ok(self.add_raw(rhs))
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_ring(rhs)?;
        Ok(self.add_raw(&rhs.neg()))
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_ring(rhs)?;
        Ok(self.mul_raw(rhs))
    }

    pub fn neg(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Int(n) => Repr::Int(-n),
            Repr::Rat(q) => Repr::Rat(-q),
            Repr::Mod { n, r } => Repr::Mod { n: *n, r: if *r == 0 { 0 } else { n - r } },
        };
        Scalar { repr }
    }

    /// Multiplicative inverse. Defined only in field rings, for nonzero values.
    pub fn inv(&self) -> Result<Scalar> {
        if !self.ring().is_field() {
            return Err(Error::NotAField(self.ring()));
        }
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.ring()));
        }
        let repr = match &self.repr {
            Repr::Rat(q) => Repr::Rat(q.recip()),
            Repr::Mod { n, r } => Repr::Mod { n: *n, r: mod_inverse(*r, *n).expect("prime modulus") },
            Repr::Int(_) => unreachable!("Z is not a field"),
        };
        Ok(Scalar { repr })
    }

    pub fn abs(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Int(n) => Repr::Int(n.abs()),
            Repr::Rat(q) => Repr::Rat(q.abs()),
            Repr::Mod { n, r } => Repr::Mod { n: *n, r: *r },
        };
        Scalar { repr }
    }

    // Internal paths where the ring is already known to agree.
    pub(crate) fn add_raw(&self, rhs: &Scalar) -> Scalar {
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a + b),
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod { n, r: a }, Repr::Mod { n: m, r: b }) if n == m => {
                Repr::Mod { n: *n, r: ((*a as u128 + *b as u128) % *n as u128) as u64 }
            }
            _ => panic!("scalar ring invariant violated"),
        };
        Scalar { repr }
    }

    pub(crate) fn mul_raw(&self, rhs: &Scalar) -> Scalar {
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a * b),
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod { n, r: a }, Repr::Mod { n: m, r: b }) if n == m => {
                Repr::Mod { n: *n, r: ((*a as u128 * *b as u128) % *n as u128) as u64 }
            }
            _ => panic!("scalar ring invariant violated"),
        };
        Scalar { repr }
    }

    pub(crate) fn sub_raw(&self, rhs: &Scalar) -> Scalar {
        self.add_raw(&rhs.neg())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Int(n) => write!(f, "{n}"),
            Repr::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Mod { r, .. } => write!(f, "{r}"),
        }
    }
}

fn reduce_i64(v: i64, n: u64) -> u64 {
    let m = n as i128;
    (((v as i128 % m) + m) % m) as u64
}

fn reduce_bigint(v: &BigInt, n: u64) -> u64 {
    let m = BigInt::from(n);
    let r = ((v % &m) + &m) % &m;
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    // extended Euclid over i128
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some((((t % n as i128) + n as i128) % n as i128) as u64)
}
