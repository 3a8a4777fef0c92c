use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use astro_float::{BigFloat, Radix, Sign, Word};
use num_bigint::{BigInt, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{with_consts, NumericError, RM};

const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// A finite real at a fixed binary precision.
#[derive(Debug)]
pub struct BigReal {
    v: BigFloat,
    p: usize,
}

impl Clone for BigReal {
    fn clone(&self) -> Self {
        BigReal { v: self.v.clone(), p: self.p }
    }
}

impl BigReal {
    fn wrap(v: BigFloat, p: usize) -> Self {
        debug_assert!(!v.is_nan() && !v.is_inf(), "non-finite value escaped");
        BigReal { v, p }
    }

    fn checked(v: BigFloat, p: usize, what: &str) -> Result<Self, NumericError> {
        if v.is_inf() {
            Err(NumericError::Overflow(what.to_string()))
        } else if v.is_nan() {
            Err(NumericError::Domain(what.to_string()))
        } else {
            Ok(BigReal { v, p })
        }
    }

    pub fn zero(p: usize) -> Self {
        Self::wrap(BigFloat::from_word(0, p), p)
    }

    pub fn from_i64(n: i64, p: usize) -> Self {
        Self::wrap(BigFloat::from_i64(n, p), p)
    }

    pub fn from_u64(n: u64, p: usize) -> Self {
        Self::wrap(BigFloat::from_u64(n, p), p)
    }

    /// Approximate conversion, intended for bounds and test inputs.
    pub fn from_f64(f: f64, p: usize) -> Self {
        assert!(f.is_finite(), "from_f64 needs a finite input");
        Self::wrap(BigFloat::from_f64(f, p), p)
    }

    pub fn from_bigint(n: &BigInt, p: usize) -> Self {
        if n.is_zero() {
            return Self::zero(p);
        }
        let (sign, words) = n.to_u64_digits();
        let sign = if sign == BigSign::Minus { Sign::Neg } else { Sign::Pos };
        let words: Vec<Word> = words.iter().map(|&w| w as Word).collect();
        let e = (64 * words.len()) as i32;
        let mut v = BigFloat::from_words(&words, sign, e);
        v.set_precision(p.max(64), RM).expect("precision within range");
        Self::wrap(v, p)
    }

    pub fn from_rational(r: &BigRational, p: usize) -> Self {
        let n = Self::from_bigint(r.numer(), p);
        if r.denom().is_one() {
            return n;
        }
        n / Self::from_bigint(r.denom(), p)
    }

    /// Parses a plain decimal literal such as `-1.25e-3`.
    pub fn parse_decimal(s: &str, p: usize) -> Result<Self, NumericError> {
        let v = with_consts(|cc| BigFloat::parse(s, Radix::Dec, p, RM, cc));
        Self::checked(v, p, &format!("cannot parse decimal {s:?}"))
    }

    pub fn pi(p: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(p, RM)), p)
    }

    pub fn ln2(p: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.ln_2(p, RM)), p)
    }

    pub fn precision(&self) -> usize {
        self.p
    }

    /// Same value rounded or extended to precision `p`.
    pub fn with_precision(&self, p: usize) -> Self {
        let mut v = self.v.clone();
        v.set_precision(p, RM).expect("precision within range");
        Self::wrap(v, p)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.v.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.v.is_positive()
    }

    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.v.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.p)
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    /// Nearest f64; tiny or huge magnitudes saturate to 0 / ±inf.
    pub fn to_f64(&self) -> f64 {
        match self.v.as_raw_parts() {
            Some((m, _, s, e, _)) if !self.is_zero() => {
                let top = *m.last().unwrap() as f64 / 18446744073709551616.0;
                let next = if m.len() > 1 { m[m.len() - 2] as f64 / 18446744073709551616.0 / 18446744073709551616.0 } else { 0.0 };
                let mant = top + next;
                let mut out = mant;
                let mut e = e as i64;
                while e > 0 {
                    let step = e.min(1000);
                    out *= 2f64.powi(step as i32);
                    e -= step;
                }
                while e < 0 {
                    let step = (-e).min(1000);
                    out /= 2f64.powi(step as i32);
                    e += step;
                }
                if s == Sign::Neg {
                    -out
                } else {
                    out
                }
            }
            _ => 0.0,
        }
    }

    /// log10 |x| as f64; -inf for zero. Works far outside f64 range.
    pub fn log10_abs(&self) -> f64 {
        match self.v.as_raw_parts() {
            Some((m, _, _, e, _)) if !self.is_zero() => {
                let top = *m.last().unwrap() as f64 / 18446744073709551616.0;
                top.log10() + e as f64 * LOG10_2
            }
            _ => f64::NEG_INFINITY,
        }
    }

    /// Rounds toward negative infinity and returns the integer, if it fits.
    pub fn floor_i64(&self) -> Option<i64> {
        let f = BigReal::wrap(self.v.floor(), self.p).to_f64();
        (f.abs() < 9.0e15).then_some(f as i64)
    }

    pub fn recip(&self) -> Result<Self, NumericError> {
        if self.is_zero() {
            return Err(NumericError::Domain("reciprocal of zero".into()));
        }
        Ok(Self::wrap(self.v.reciprocal(self.p, RM), self.p))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumericError> {
        if rhs.is_zero() {
            return Err(NumericError::Domain("division by zero".into()));
        }
        let p = self.p.max(rhs.p);
        Ok(Self::wrap(self.v.div(&rhs.v, p, RM), p))
    }

    pub fn mul_i64(&self, n: i64) -> Self {
        self * &Self::from_i64(n, self.p)
    }

    pub fn div_i64(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero");
        self / &Self::from_i64(n, self.p)
    }

    pub fn sqr(&self) -> Self {
        self * self
    }

    pub fn powi(&self, n: u64) -> Self {
        if n == 0 {
            return Self::from_i64(1, self.p);
        }
        Self::wrap(self.v.powi(n as usize, self.p, RM), self.p)
    }

    pub fn powi_signed(&self, n: i64) -> Result<Self, NumericError> {
        if n >= 0 {
            Ok(self.powi(n as u64))
        } else {
            self.powi(n.unsigned_abs()).recip()
        }
    }

    pub fn sqrt(&self) -> Result<Self, NumericError> {
        if self.is_negative() {
            return Err(NumericError::Domain("sqrt of a negative number".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        Self::checked(self.v.sqrt(self.p, RM), self.p, "sqrt")
    }

    pub fn exp(&self) -> Result<Self, NumericError> {
        let v = with_consts(|cc| self.v.exp(self.p, RM, cc));
        Self::checked(v, self.p, "exp overflow")
    }

    pub fn ln(&self) -> Result<Self, NumericError> {
        if !self.is_positive() {
            return Err(NumericError::Domain("log of a non-positive number".into()));
        }
        let v = with_consts(|cc| self.v.ln(self.p, RM, cc));
        Self::checked(v, self.p, "log")
    }

    /// x^q for exact rational q; negative bases only with odd denominators.
    pub fn pow_rational(&self, q: &BigRational) -> Result<Self, NumericError> {
        if q.is_integer() {
            let n = q.to_integer().to_i64().ok_or_else(|| NumericError::Overflow("integer exponent too large".into()))?;
            return self.powi_signed(n);
        }
        if self.is_zero() {
            return if q.is_positive() {
                Ok(self.clone())
            } else {
                Err(NumericError::Domain("zero to a negative power".into()))
            };
        }
        let qr = Self::from_rational(q, self.p);
        if self.is_positive() {
            return (&qr * &self.ln()?).exp();
        }
        if (q.denom() % 2u32).is_zero() {
            return Err(NumericError::Domain("even root of a negative number".into()));
        }
        let mag = (&qr * &self.abs().ln()?).exp()?;
        Ok(if (q.numer() % 2u32).is_zero() { mag } else { -mag })
    }

    pub fn sin(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.sin(self.p, RM, cc)), self.p)
    }

    pub fn cos(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.cos(self.p, RM, cc)), self.p)
    }

    pub fn tan(&self) -> Result<Self, NumericError> {
        let c = self.cos();
        if c.is_zero() {
            return Err(NumericError::Domain("tan at a pole".into()));
        }
        self.sin().checked_div(&c)
    }

    pub fn cot(&self) -> Result<Self, NumericError> {
        let s = self.sin();
        if s.is_zero() {
            return Err(NumericError::Domain("cot at a pole".into()));
        }
        self.cos().checked_div(&s)
    }

    pub fn atan(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.atan(self.p, RM, cc)), self.p)
    }

    /// Angle of the point (x, y) = (self, y) in (-pi, pi].
    pub fn atan2(y: &Self, x: &Self) -> Result<Self, NumericError> {
        let p = x.p.max(y.p);
        if x.is_zero() {
            if y.is_zero() {
                return Err(NumericError::Domain("atan2(0, 0)".into()));
            }
            let h = Self::pi(p).div_i64(2);
            return Ok(if y.is_negative() { -h } else { h });
        }
        let a = (y / x).atan();
        if x.is_positive() {
            Ok(a)
        } else if y.is_negative() {
            Ok(a - Self::pi(p))
        } else {
            Ok(a + Self::pi(p))
        }
    }

    /// Beyond this |x| the factor e^{-2|x|} is below the working ulp scale.
    fn hyperbolic_cutoff(&self) -> f64 {
        (self.p as f64 * LOG10_2) * std::f64::consts::LN_10 / 2.0
    }

    pub fn sinh(&self) -> Result<Self, NumericError> {
        let v = with_consts(|cc| self.v.sinh(self.p, RM, cc));
        Self::checked(v, self.p, "sinh overflow")
    }

    pub fn cosh(&self) -> Result<Self, NumericError> {
        let v = with_consts(|cc| self.v.cosh(self.p, RM, cc));
        Self::checked(v, self.p, "cosh overflow")
    }

    /// For |x| past the cutoff, returns ±1 with committed error 2e^{-2|x|} < 2 ulp.
    pub fn tanh(&self) -> Self {
        if self.to_f64().abs() > self.hyperbolic_cutoff() {
            return Self::from_i64(self.signum() as i64, self.p);
        }
        Self::wrap(with_consts(|cc| self.v.tanh(self.p, RM, cc)), self.p)
    }

    pub fn coth(&self) -> Result<Self, NumericError> {
        if self.is_zero() {
            return Err(NumericError::Domain("coth(0)".into()));
        }
        if self.to_f64().abs() > self.hyperbolic_cutoff() {
            return Ok(Self::from_i64(self.signum() as i64, self.p));
        }
        self.tanh().recip()
    }

    /// Short-circuits to 0 once 2e^{-|x|} is below the working ulp scale.
    pub fn sech(&self) -> Result<Self, NumericError> {
        if self.to_f64().abs() > 2.0 * self.hyperbolic_cutoff() + 1.0 {
            return Ok(Self::zero(self.p));
        }
        self.cosh()?.recip()
    }

    pub fn csch(&self) -> Result<Self, NumericError> {
        if self.is_zero() {
            return Err(NumericError::Domain("csch(0)".into()));
        }
        if self.to_f64().abs() > 2.0 * self.hyperbolic_cutoff() + 1.0 {
            return Ok(Self::zero(self.p));
        }
        self.sinh()?.recip()
    }

    /// Scientific rendering with `digits` significant digits, e.g. `1.25e-3`.
    pub fn to_sci_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let s = with_consts(|cc| self.v.format(Radix::Dec, RM, cc)).expect("finite value formats");
        let (mant, exp) = split_sci(&s).expect("astro-float scientific format");
        let neg = mant.starts_with('-');
        let mut ds: Vec<u8> = mant.bytes().filter(|b| b.is_ascii_digit()).map(|b| b - b'0').collect();
        // leading zeros can appear for values produced by exact subtraction
        let mut exp = exp;
        while ds.len() > 1 && ds[0] == 0 {
            ds.remove(0);
            exp -= 1;
        }
        let (mut out, carry) = round_digits(&ds, digits);
        if carry {
            out.insert(0, 1);
            out.truncate(digits);
            exp += 1;
        }
        let mut r = String::new();
        if neg {
            r.push('-');
        }
        r.push((b'0' + out[0]) as char);
        if out.len() > 1 {
            r.push('.');
            for d in &out[1..] {
                r.push((b'0' + d) as char);
            }
        }
        r.push('e');
        r.push_str(&exp.to_string());
        r
    }
}

fn split_sci(s: &str) -> Option<(String, i64)> {
    let (m, e) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    Some((m.to_string(), e))
}

fn round_digits(ds: &[u8], n: usize) -> (Vec<u8>, bool) {
    if ds.len() <= n {
        let mut v = ds.to_vec();
        v.resize(n, 0);
        return (v, false);
    }
    let mut v = ds[..n].to_vec();
    if ds[n] >= 5 {
        let mut i = n;
        loop {
            if i == 0 {
                return (v, true);
            }
            i -= 1;
            if v[i] == 9 {
                v[i] = 0;
            } else {
                v[i] += 1;
                break;
            }
        }
    }
    (v, false)
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(((self.p as f64) * LOG10_2) as usize);
        f.write_str(&self.to_sci_string(digits))
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &BigReal) -> BigReal {
                let p = self.p.max(rhs.p);
                BigReal::wrap(self.v.$inner(&rhs.v, p, RM), p)
            }
        }
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &BigReal) -> BigReal {
                (&self).$m(rhs)
            }
        }
        impl $tr<BigReal> for &BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl Div<&BigReal> for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        self.checked_div(rhs).expect("division by zero")
    }
}
impl Div<BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: BigReal) -> BigReal {
        &self / &rhs
    }
}
impl Div<&BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        &self / rhs
    }
}
impl Div<BigReal> for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: BigReal) -> BigReal {
        self / &rhs
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        let mut v = self.v;
        v.inv_sign();
        BigReal { v, p: self.p }
    }
}
impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -self.clone()
    }
}

impl AddAssign<&BigReal> for BigReal {
    fn add_assign(&mut self, rhs: &BigReal) {
        *self = &*self + rhs;
    }
}
impl AddAssign<BigReal> for BigReal {
    fn add_assign(&mut self, rhs: BigReal) {
        *self = &*self + &rhs;
    }
}
impl SubAssign<&BigReal> for BigReal {
    fn sub_assign(&mut self, rhs: &BigReal) {
        *self = &*self - rhs;
    }
}
impl SubAssign<BigReal> for BigReal {
    fn sub_assign(&mut self, rhs: BigReal) {
        *self = &*self - &rhs;
    }
}
impl MulAssign<&BigReal> for BigReal {
    fn mul_assign(&mut self, rhs: &BigReal) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for BigReal {
    fn sum<I: Iterator<Item = BigReal>>(mut iter: I) -> BigReal {
        let first = iter.next().expect("sum of an empty iterator needs a precision; use fold");
        iter.fold(first, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::make_context;

    #[test]
    fn bigint_roundtrip() {
        let p = 256;
        let n: BigInt = "-123456789012345678901234567890123".parse().unwrap();
        let x = BigReal::from_bigint(&n, p);
        assert_eq!(x.to_sci_string(33), "-1.23456789012345678901234567890123e32");
    }

    #[test]
    fn rational_and_f64() {
        let p = 128;
        let r = BigRational::new(1.into(), 3.into());
        let x = BigReal::from_rational(&r, p);
        assert!((x.to_f64() - 1.0 / 3.0).abs() < 1e-16);
        assert!((x.log10_abs() - (1.0f64 / 3.0).log10()).abs() < 1e-12);
        assert_eq!(BigReal::from_f64(-2.5e-300, p).to_f64(), -2.5e-300);
    }

    #[test]
    fn rounding_carries() {
        let x = BigReal::parse_decimal("9.9996", 128).unwrap();
        assert_eq!(x.to_sci_string(4), "1.000e1");
        assert_eq!(BigReal::parse_decimal("-0.00125", 128).unwrap().to_sci_string(2), "-1.3e-3");
    }

    #[test]
    fn floor_values() {
        let p = 128;
        assert_eq!(BigReal::parse_decimal("12.7", p).unwrap().floor_i64(), Some(12));
        assert_eq!(BigReal::parse_decimal("-0.5", p).unwrap().floor_i64(), Some(-1));
        assert_eq!(BigReal::parse_decimal("0.5", p).unwrap().floor_i64(), Some(0));
        assert_eq!(BigReal::from_i64(-3, p).floor_i64(), Some(-3));
    }

    #[test]
    fn domain_errors() {
        let ctx = make_context(20).unwrap();
        assert!(matches!(ctx.zero().csch(), Err(NumericError::Domain(_))));
        assert!(matches!(ctx.zero().coth(), Err(NumericError::Domain(_))));
        assert!(ctx.int(-1).ln().is_err());
        assert!(ctx.int(-4).sqrt().is_err());
        assert!(ctx.zero().cot().is_err());
    }

    #[test]
    fn coth_tanh_reciprocal() {
        let ctx = make_context(40).unwrap();
        let x = ctx.ratio(17, 10);
        let prod = x.coth().unwrap() * x.tanh();
        assert!((prod - ctx.one()).abs() < ctx.epsilon().mul_i64(4));
    }

    #[test]
    fn sinh_pi_against_wider_oracle() {
        let ctx = make_context(50).unwrap();
        let wide = make_context(80).unwrap();
        let s = ctx.pi().sinh().unwrap();
        let pi = wide.pi();
        let oracle = (pi.exp().unwrap() - (-pi).exp().unwrap()).div_i64(2);
        assert_eq!(s.to_sci_string(50), oracle.to_sci_string(50));
    }

    #[test]
    fn large_argument_short_circuit() {
        let ctx = make_context(30).unwrap();
        let big = ctx.int(500);
        assert_eq!(big.tanh(), ctx.one());
        assert_eq!((-&big).coth().unwrap(), -ctx.one());
        assert!(ctx.int(5000).csch().unwrap().is_zero());
    }

    #[test]
    fn rational_powers() {
        let ctx = make_context(30).unwrap();
        let q = BigRational::new(1.into(), 3.into());
        let c = ctx.int(-27).pow_rational(&q).unwrap();
        assert!((c + ctx.int(3)).abs() < ctx.epsilon().mul_i64(10));
        let half = BigRational::new(1.into(), 2.into());
        assert!(ctx.int(-4).pow_rational(&half).is_err());
        let r = ctx.int(2).pow_rational(&half).unwrap();
        assert!((r - ctx.int(2).sqrt().unwrap()).abs() < ctx.epsilon().mul_i64(10));
    }
}
