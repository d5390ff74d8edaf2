use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// An element `re + i·im` of the Gaussian rationals `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussianRational::new(
            Rational::from_integer(BigInt::from(re)),
            Rational::from_integer(BigInt::from(im)),
        )
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational::new(
            Rational::new(BigInt::from(num), BigInt::from(den)),
            Rational::zero(),
        )
    }

    /// The imaginary unit, which is also the quantum parameter `q`.
    pub fn i() -> Self {
        GaussianRational::from_parts(0, 1)
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `self^e` for any integer exponent; panics on `0^e` with `e < 0`.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = GaussianRational::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_integer(n)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(n: BigInt) -> Self {
        GaussianRational::new(Rational::from_integer(n), Rational::zero())
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::new(r, Rational::zero())
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, Rational::zero());
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        if rhs.im.is_zero() {
            return GaussianRational::new(&self.re / &rhs.re, &self.im / &rhs.re);
        }
        self * &rhs.inv().expect("division by zero in Q(i)")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders as `a/b+c/d*i`, dropping a zero real or imaginary part and unit
/// denominators; `0` for zero.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}*i", fmt_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{}{}{}*i",
                    fmt_rational(&self.re),
                    sign,
                    fmt_rational(&self.im.abs())
                )
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(body) = s.strip_suffix("*i") else {
            return Ok(GaussianRational::from(parse_rational(s)?));
        };
        // split at the last sign that directly follows a digit
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| matches!(bytes[k], b'+' | b'-') && bytes[k - 1].is_ascii_digit());
        match split {
            None => Ok(GaussianRational::new(Rational::zero(), parse_rational(body)?)),
            Some(k) => {
                let re = parse_rational(&body[..k])?;
                let im_str = &body[k..];
                let im = parse_rational(im_str.strip_prefix('+').unwrap_or(im_str))?;
                Ok(GaussianRational::new(re, im))
            }
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_parts(re, im)
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, g(-1, 0));
        assert_eq!(i.pow(4), g(1, 0));
        assert_eq!(i.pow(-1), g(0, -1));
    }

    #[test]
    fn inverse_and_division() {
        let a = g(3, -4);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, GaussianRational::one());
        assert_eq!(GaussianRational::zero().inv(), None);
        assert_eq!(&g(1, 1) / &g(1, -1), g(0, 1));
    }

    #[test]
    fn conjugation_is_involutive_automorphism() {
        let a = g(2, 7);
        let b = GaussianRational::from_ratio(-1, 3) + g(0, 5);
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            (g(0, 0), "0"),
            (g(-2, 0), "-2"),
            (g(0, 1), "1*i"),
            (g(0, -3), "-3*i"),
            (g(1, -1), "1-1*i"),
            (
                GaussianRational::new(
                    Rational::new(1.into(), 2.into()),
                    Rational::new(3.into(), 4.into()),
                ),
                "1/2+3/4*i",
            ),
        ];
        for (value, text) in cases {
            assert_eq!(value.to_string(), text);
            assert_eq!(text.parse::<GaussianRational>().unwrap(), value);
        }
        assert_eq!("-1/2+-3/4*i".parse::<GaussianRational>().unwrap().im(), &Rational::new((-3).into(), 4.into()));
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("x".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn rationals_stay_reduced() {
        let r = GaussianRational::from_ratio(6, -4);
        assert_eq!(r.re().numer(), &BigInt::from(-3));
        assert_eq!(r.re().denom(), &BigInt::from(2));
    }
}
