//! Arbitrary-precision reals and complexes on top of `astro-float`.
//!
//! A [`PrecisionContext`] fixes a decimal digit budget plus guard digits; every
//! value created from it carries the matching binary precision.

mod complex;
mod real;

pub use complex::BigComplex;
pub use real::BigReal;

use std::cell::RefCell;

use astro_float::{Consts, RoundingMode};
use thiserror::Error;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

pub const DEFAULT_GUARD: u32 = 20;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("usage error: {0}")]
    Usage(String),
}

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

pub(crate) fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
}

/// Context with the default guard; `digits` must be at least 1.
pub fn make_context(digits: i64) -> Result<PrecisionContext, NumericError> {
    PrecisionContext::with_guard(digits, DEFAULT_GUARD as i64)
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<Self, NumericError> {
        make_context(digits as i64)
    }

    pub fn with_guard(digits: i64, guard: i64) -> Result<Self, NumericError> {
        if digits < 1 {
            return Err(NumericError::Usage(format!("digits must be positive, got {digits}")));
        }
        if guard < 1 {
            return Err(NumericError::Usage(format!("guard must be positive, got {guard}")));
        }
        if digits > 100_000 {
            return Err(NumericError::Usage(format!("digits {digits} exceeds the supported maximum 100000")));
        }
        Ok(PrecisionContext { digits: digits as u32, guard: guard as u32 })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Binary precision backing the working digits, with a few spare bits.
    pub fn bits(&self) -> usize {
        (self.working_digits() as f64 * LOG2_10).ceil() as usize + 8
    }

    /// Same digit budget, `extra` more guard digits.
    pub fn widened(&self, extra: u32) -> Self {
        PrecisionContext { digits: self.digits, guard: self.guard + extra }
    }

    /// Absolute target used by truncation rules: 10^-(digits + guard/2).
    pub fn truncation_log10(&self) -> f64 {
        -(self.digits as f64 + self.guard as f64 / 2.0)
    }

    pub fn zero(&self) -> BigReal {
        BigReal::zero(self.bits())
    }

    pub fn one(&self) -> BigReal {
        BigReal::from_i64(1, self.bits())
    }

    pub fn int(&self, n: i64) -> BigReal {
        BigReal::from_i64(n, self.bits())
    }

    pub fn ratio(&self, p: i64, q: i64) -> BigReal {
        self.int(p) / self.int(q)
    }

    pub fn rational(&self, r: &num_rational::BigRational) -> BigReal {
        BigReal::from_rational(r, self.bits())
    }

    pub fn pi(&self) -> BigReal {
        BigReal::pi(self.bits())
    }

    pub fn ln2(&self) -> BigReal {
        BigReal::ln2(self.bits())
    }

    /// 10^e at working precision.
    pub fn pow10(&self, e: i64) -> BigReal {
        let ten = self.int(10);
        if e >= 0 {
            ten.powi(e as u64)
        } else {
            ten.powi((-e) as u64).recip().expect("10^k is nonzero")
        }
    }

    /// Working-precision ulp scale, 10^-(digits+guard).
    pub fn epsilon(&self) -> BigReal {
        self.pow10(-(self.working_digits() as i64))
    }
}
