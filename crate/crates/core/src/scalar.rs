//! Exact scalars: the rational field and prime fields GF(p).
//!
//! Every container in this crate is generic over [`Scalar`]. There is no
//! floating point anywhere; rationals use arbitrary-precision integers.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

/// Rational numbers backed by arbitrary-precision integers.
pub type Rational = BigRational;

/// Runtime description of a coefficient field, as written in documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Parses `"Q"` or `"GF(p)"`; composite moduli are rejected.
    pub fn parse(text: &str) -> Result<Field, ScalarError> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rational);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| ScalarError::UnknownField(t.to_string()))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| ScalarError::UnknownField(t.to_string()))?;
        Field::prime(p)
    }

    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(ScalarError::CompositeModulus(p))
        }
    }
}

impl Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("unknown field `{0}`, expected \"Q\" or \"GF(p)\"")]
    UnknownField(String),
    #[error("GF({0}) requires a prime modulus")]
    CompositeModulus(u64),
    #[error("cannot parse `{text}` as an element of {field}")]
    Parse { text: String, field: Field },
}

/// Trial-division primality test, usable in const context.
pub const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element.
///
/// The in-place operators take the right operand by reference so that
/// big rationals are not cloned on every accumulation step.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn field() -> Field;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// Parses the document form: `"num/den"` (or an integer) for Q,
    /// a decimal residue for GF(p).
    fn parse_str(text: &str) -> Result<Self, ScalarError>;

    /// A random element used by the certificate searches. For Q this is a
    /// small integer, which keeps coefficient growth in check.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut t = self.clone();
        t *= rhs;
        t
    }
}

impl Scalar for Rational {
    fn field() -> Field {
        Field::Rational
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn parse_str(text: &str) -> Result<Self, ScalarError> {
        let err = || ScalarError::Parse {
            text: text.to_string(),
            field: Field::Rational,
        };
        let t = text.trim();
        match t.split_once('/') {
            None => t
                .parse::<BigInt>()
                .map(BigRational::from_integer)
                .map_err(|_| err()),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(BigRational::new(n, d))
            }
        }
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_i64(rng.random_range(-64..=64))
    }
}

/// An element of GF(P). Using a composite `P` fails to compile:
///
/// ```compile_fail
/// use morita_core::scalar::Fp;
/// let _ = Fp::<4>::new(1);
/// ```
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const PRIME_CHECK: () = assert!(is_prime(P), "GF(p) requires a prime modulus");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::PRIME_CHECK;
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in GF(p)")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<'a, const P: u64> AddAssign<&'a Fp<P>> for Fp<P> {
    fn add_assign(&mut self, rhs: &'a Fp<P>) {
        *self = *self + *rhs;
    }
}

impl<'a, const P: u64> SubAssign<&'a Fp<P>> for Fp<P> {
    fn sub_assign(&mut self, rhs: &'a Fp<P>) {
        *self = *self - *rhs;
    }
}

impl<'a, const P: u64> MulAssign<&'a Fp<P>> for Fp<P> {
    fn mul_assign(&mut self, rhs: &'a Fp<P>) {
        *self = *self * *rhs;
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Self::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Self::new(1)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn field() -> Field {
        Field::Prime(P)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        Self::new(v.rem_euclid(P as i64) as u64)
    }

    fn parse_str(text: &str) -> Result<Self, ScalarError> {
        let v: BigInt = text.trim().parse().map_err(|_| ScalarError::Parse {
            text: text.to_string(),
            field: Field::Prime(P),
        })?;
        let p = BigInt::from(P);
        let mut r = v % &p;
        if r.is_negative() {
            r += &p;
        }
        let digits = r.to_u64_digits().1;
        Ok(Self::new(digits.first().copied().unwrap_or(0)))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::new(rng.random_range(0..P))
    }
}

pub type GF2 = Fp<2>;
pub type GF3 = Fp<3>;
pub type GF5 = Fp<5>;
pub type GF7 = Fp<7>;
