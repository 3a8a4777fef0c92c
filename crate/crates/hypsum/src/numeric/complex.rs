use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;

use super::{BigReal, NumericError};

#[derive(Debug, Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigReal) -> Self {
        let im = BigReal::zero(re.precision());
        BigComplex { re, im }
    }

    /// The imaginary unit times `im`.
    pub fn imag(im: BigReal) -> Self {
        let re = BigReal::zero(im.precision());
        BigComplex { re, im }
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), -&self.im)
    }

    /// Multiplication by i.
    pub fn mul_i(&self) -> Self {
        BigComplex::new(-&self.im, self.re.clone())
    }

    pub fn scale(&self, k: &BigReal) -> Self {
        BigComplex::new(&self.re * k, &self.im * k)
    }

    pub fn norm_sqr(&self) -> BigReal {
        self.re.sqr() + self.im.sqr()
    }

    pub fn abs(&self) -> BigReal {
        self.norm_sqr().sqrt().expect("norm is non-negative")
    }

    pub fn arg(&self) -> Result<BigReal, NumericError> {
        BigReal::atan2(&self.im, &self.re)
    }

    pub fn recip(&self) -> Result<Self, NumericError> {
        let d = self.norm_sqr();
        if d.is_zero() {
            return Err(NumericError::Domain("reciprocal of complex zero".into()));
        }
        Ok(BigComplex::new(&self.re / &d, -(&self.im / &d)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumericError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn sqr(&self) -> Self {
        self * self
    }

    pub fn exp(&self) -> Result<Self, NumericError> {
        let m = self.re.exp()?;
        Ok(BigComplex::new(&m * &self.im.cos(), &m * &self.im.sin()))
    }

    /// Principal branch.
    pub fn ln(&self) -> Result<Self, NumericError> {
        if self.is_zero() {
            return Err(NumericError::Domain("log of complex zero".into()));
        }
        let half = BigReal::from_i64(1, self.precision()).div_i64(2);
        Ok(BigComplex::new(&half * &self.norm_sqr().ln()?, self.arg()?))
    }

    /// Principal branch.
    pub fn sqrt(&self) -> Result<Self, NumericError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let half = BigReal::from_i64(1, self.precision()).div_i64(2);
        let l = self.ln()?;
        BigComplex::new(&l.re * &half, &l.im * &half).exp()
    }

    pub fn pow_rational(&self, q: &BigRational) -> Result<Self, NumericError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let qr = BigReal::from_rational(q, self.precision());
        let l = self.ln()?;
        BigComplex::new(&l.re * &qr, &l.im * &qr).exp()
    }

    pub fn sin(&self) -> Result<Self, NumericError> {
        Ok(BigComplex::new(&self.re.sin() * &self.im.cosh()?, &self.re.cos() * &self.im.sinh()?))
    }

    pub fn cos(&self) -> Result<Self, NumericError> {
        Ok(BigComplex::new(&self.re.cos() * &self.im.cosh()?, -(&self.re.sin() * &self.im.sinh()?)))
    }

    pub fn sinh(&self) -> Result<Self, NumericError> {
        Ok(BigComplex::new(&self.re.sinh()? * &self.im.cos(), &self.re.cosh()? * &self.im.sin()))
    }

    pub fn cosh(&self) -> Result<Self, NumericError> {
        Ok(BigComplex::new(&self.re.cosh()? * &self.im.cos(), &self.re.sinh()? * &self.im.sin()))
    }

    fn nonzero(self, what: &str) -> Result<Self, NumericError> {
        if self.is_zero() {
            Err(NumericError::Domain(format!("{what} at a pole")))
        } else {
            Ok(self)
        }
    }

    pub fn tan(&self) -> Result<Self, NumericError> {
        self.sin()?.checked_div(&self.cos()?.nonzero("tan")?)
    }

    pub fn cot(&self) -> Result<Self, NumericError> {
        self.cos()?.checked_div(&self.sin()?.nonzero("cot")?)
    }

    pub fn tanh(&self) -> Result<Self, NumericError> {
        self.sinh()?.checked_div(&self.cosh()?.nonzero("tanh")?)
    }

    pub fn coth(&self) -> Result<Self, NumericError> {
        self.cosh()?.checked_div(&self.sinh()?.nonzero("coth")?)
    }

    pub fn sech(&self) -> Result<Self, NumericError> {
        self.cosh()?.nonzero("sech")?.recip()
    }

    pub fn csch(&self) -> Result<Self, NumericError> {
        self.sinh()?.nonzero("csch")?.recip()
    }

    /// atan z = (i/2)(log(1 - iz) - log(1 + iz)).
    pub fn atan(&self) -> Result<Self, NumericError> {
        let one = BigComplex::from_real(BigReal::from_i64(1, self.precision()));
        let iz = self.mul_i();
        let d = (&one - &iz).ln()? - (&one + &iz).ln()?;
        let half = BigReal::from_i64(1, self.precision()).div_i64(2);
        Ok(d.mul_i().scale(&half))
    }
}

impl Add<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        self.checked_div(rhs).expect("complex division by zero")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: BigComplex) -> BigComplex {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: &BigComplex) -> BigComplex {
                (&self).$m(rhs)
            }
        }
        impl $tr<BigComplex> for &BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: BigComplex) -> BigComplex {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-self.re, -self.im)
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -self.clone()
    }
}
