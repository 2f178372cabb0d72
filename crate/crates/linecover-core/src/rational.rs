//! Exact rational arithmetic.
//!
//! Every geometric quantity in this crate (coordinates, radii, lengths,
//! costs) is a [`Rat`]: a canonical reduced fraction. Values that fit in
//! `i64/i64` are stored inline; anything larger is promoted to a heap
//! [`BigRational`]. Binary operations on the inline form are computed in
//! `i128`, which cannot overflow, so promotion happens only when a reduced
//! result genuinely needs more than 64 bits.

use alloc::boxed::Box;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

#[derive(Clone)]
enum Repr {
    /// Reduced fraction with positive denominator.
    Small { num: i64, den: i64 },
    /// Reduced fraction that does not fit in `Small`. Invariant: never
    /// demotable, so mixed-variant values are always unequal.
    Big(Box<BigRational>),
}

/// Canonical exact rational number.
#[derive(Clone)]
pub struct Rat(Repr);

fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

fn make_small_i128(mut num: i128, mut den: i128) -> Rat {
    debug_assert!(den != 0);
    if den < 0 {
        num = -num;
        den = -den;
    }
    if num == 0 {
        return Rat(Repr::Small { num: 0, den: 1 });
    }
    let g = gcd_i128(num.abs(), den);
    num /= g;
    den /= g;
    match (i64::try_from(num), i64::try_from(den)) {
        (Ok(n), Ok(d)) => Rat(Repr::Small { num: n, den: d }),
        _ => Rat(Repr::Big(Box::new(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))),
    }
}

fn demote(big: BigRational) -> Rat {
    match (big.numer().to_i64(), big.denom().to_i64()) {
        (Some(n), Some(d)) => Rat(Repr::Small { num: n, den: d }),
        _ => Rat(Repr::Big(Box::new(big))),
    }
}

impl Rat {
    pub fn zero() -> Self {
        Rat(Repr::Small { num: 0, den: 1 })
    }

    pub fn one() -> Self {
        Rat(Repr::Small { num: 1, den: 1 })
    }

    pub fn int(n: i64) -> Self {
        Rat(Repr::Small { num: n, den: 1 })
    }

    /// `num/den` in lowest terms. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        make_small_i128(num as i128, den as i128)
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num == 0,
            Repr::Big(_) => false, // a zero would have been demoted
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num > 0,
            Repr::Big(b) => b.is_positive(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn min(self, other: Rat) -> Rat {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Rat) -> Rat {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn mul_int(&self, k: i64) -> Rat {
        match &self.0 {
            Repr::Small { num, den } => make_small_i128(*num as i128 * k as i128, *den as i128),
            Repr::Big(b) => demote(&**b * BigRational::from_integer(BigInt::from(k))),
        }
    }

    pub fn div_int(&self, k: i64) -> Rat {
        assert!(k != 0, "division by zero");
        match &self.0 {
            Repr::Small { num, den } => make_small_i128(*num as i128, *den as i128 * k as i128),
            Repr::Big(b) => demote(&**b / BigRational::from_integer(BigInt::from(k))),
        }
    }

    /// `ceil(self / rhs)` for positive operands.
    pub fn ceil_div(&self, rhs: &Rat) -> u64 {
        assert!(self.is_positive() && rhs.is_positive());
        match (&self.0, &rhs.0) {
            (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) => {
                let num = *n1 as i128 * *d2 as i128;
                let den = *d1 as i128 * *n2 as i128;
                num_integer::Integer::div_ceil(&num, &den) as u64
            }
            _ => {
                let q = self.to_big() / rhs.to_big();
                q.ceil().to_integer().to_u64().expect("ceil_div overflow")
            }
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(b) => (**b).clone(),
        }
    }

    /// Exact conversion from a finite float. `None` for NaN or infinity.
    pub fn from_f64(v: f64) -> Option<Rat> {
        BigRational::from_f64(v).map(demote)
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small { num, den } => *num as f64 / *den as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) => {
                n1 == n2 && d1 == d2
            }
            (Repr::Big(a), Repr::Big(b)) => a == b,
            // Big is never demotable, Small always fits: cross-variant values differ.
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) => {
                let lhs = *n1 as i128 * *d2 as i128;
                let rhs = *n2 as i128 * *d1 as i128;
                lhs.cmp(&rhs)
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

fn add_impl(a: &Rat, b: &Rat, sub: bool) -> Rat {
    match (&a.0, &b.0) {
        (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) => {
            let (n1, d1, n2, d2) = (*n1 as i128, *d1 as i128, *n2 as i128, *d2 as i128);
            let n2 = if sub { -n2 } else { n2 };
            if d1 == d2 {
                make_small_i128(n1 + n2, d1)
            } else {
                make_small_i128(n1 * d2 + n2 * d1, d1 * d2)
            }
        }
        _ => {
            let rhs = b.to_big();
            demote(if sub {
                a.to_big() - rhs
            } else {
                a.to_big() + rhs
            })
        }
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        add_impl(self, rhs, false)
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        add_impl(self, rhs, true)
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) => {
                make_small_i128(*n1 as i128 * *n2 as i128, *d1 as i128 * *d2 as i128)
            }
            _ => demote(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match &self.0 {
            Repr::Small { num, den } => Rat(Repr::Small {
                num: -*num,
                den: *den,
            }),
            Repr::Big(b) => Rat(Repr::Big(Box::new(-(**b).clone()))),
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        &self + &rhs
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        &self - &rhs
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den } => {
                if *den == 1 {
                    write!(f, "{num}")
                } else {
                    write!(f, "{num}/{den}")
                }
            }
            Repr::Big(b) => {
                if b.denom() == &BigInt::from(1) {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Why a string failed to parse as a rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRatError {
    Empty,
    InvalidDigit,
    ZeroDenominator,
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRatError::Empty => write!(f, "empty rational literal"),
            ParseRatError::InvalidDigit => write!(f, "invalid rational literal"),
            ParseRatError::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}
impl core::error::Error for ParseRatError {}


fn parse_bigint(s: &str) -> Result<BigInt, ParseRatError> {
    if s.is_empty() {
        return Err(ParseRatError::Empty);
    }
    BigInt::parse_bytes(s.as_bytes(), 10).ok_or(ParseRatError::InvalidDigit)
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `"p/q"`, decimal strings like `"-2.75"`, and plain integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRatError::Empty);
        }
        if let Some((num, den)) = s.split_once('/') {
            let n = parse_bigint(num.trim())?;
            let d = parse_bigint(den.trim())?;
            if d.is_zero() {
                return Err(ParseRatError::ZeroDenominator);
            }
            return Ok(demote(BigRational::new(n, d)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseRatError::InvalidDigit);
            }
            let negative = int_part.starts_with('-');
            let int_digits = int_part.strip_prefix(['-', '+']).unwrap_or(int_part);
            let int = if int_digits.is_empty() {
                BigInt::zero()
            } else {
                parse_bigint(int_digits)?
            };
            let frac = parse_bigint(frac_part)?;
            if frac.is_negative() {
                return Err(ParseRatError::InvalidDigit);
            }
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let mut num = int * &scale + frac;
            if negative {
                num = -num;
            }
            return Ok(demote(BigRational::new(num, scale)));
        }
        Ok(demote(BigRational::from_integer(parse_bigint(s)?)))
    }
}

/// Serialization-friendly string form; parses back exactly.
impl From<&Rat> for String {
    fn from(r: &Rat) -> String {
        alloc::format!("{r}")
    }
}
