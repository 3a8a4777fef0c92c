//! zeta at odd integers from the two-scale exponential series at alpha = beta = pi.

use num_traits::Zero;

use super::build::sgn;
use crate::exact::{bernoulli, factorial, Rational};
use crate::numeric::{BigReal, NumericError, PrecisionContext};
use crate::series::{sum_hyper, Kernel};

#[derive(Debug, Clone)]
pub enum RamanujanOutcome {
    Value(BigReal),
    /// The two brackets cancel identically at alpha = beta, so zeta(m)
    /// drops out.
    Degenerate,
}

/// Right side sum_{j=0}^k (-1)^{j-1} B_{2j} B_{2k-2j}/((2j)!(2k-2j)!) as the
/// coefficient of pi^k at t = 1.
fn bernoulli_side(k: u32) -> Rational {
    (0..=k)
        .map(|j| {
            let a = 2 * j as u64;
            let b = 2 * (k - j) as u64;
            -sgn(j) * bernoulli(a) * bernoulli(b) / Rational::from_integer(factorial(a) * factorial(b))
        })
        .fold(Rational::zero(), |s, t| s + t)
}

/// For odd m = 2k-1 >= 3: zeta(m) = R (4 pi)^{k-1} - 2 sum 1/(n^m (e^{2 pi n} - 1))
/// when k is even. Odd k is degenerate.
pub fn ramanujan_zeta_odd(m: u32, ctx: &PrecisionContext) -> Result<RamanujanOutcome, NumericError> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(NumericError::Usage(format!("zeta-odd needs an odd m >= 3, got {m}")));
    }
    let k = m.div_ceil(2);
    if k % 2 == 1 {
        return Ok(RamanujanOutcome::Degenerate);
    }
    let pi = ctx.pi();
    let s = sum_hyper(&[crate::series::HyperSum::power(Kernel::InvExpm1, pi.mul_i64(2), m)], ctx)?;
    let r = ctx.rational(&bernoulli_side(k)) * pi.powi(k as u64);
    Ok(RamanujanOutcome::Value(r * pi.mul_i64(4).powi(k as u64 - 1) - s.mul_i64(2)))
}
