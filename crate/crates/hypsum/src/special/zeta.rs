use crate::exact::{bernoulli, factorial};
use crate::numeric::{BigReal, NumericError, PrecisionContext};
use crate::series::alternating::{cvz_terms, sum_alternating};

/// zeta(s) for integer s >= 2 by Euler-Maclaurin.
///
/// With N head terms, the tail is N^{1-s}/(s-1) + N^{-s}/2 plus the Bernoulli
/// corrections T_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}. For real s
/// the remainder after T_M is bounded by |T_{M+1}|, which is the stopping rule.
pub fn zeta_numeric(s: i64, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    if s < 2 {
        return Err(NumericError::Usage(format!("zeta_numeric needs s >= 2, got {s}")));
    }
    let target = -(ctx.working_digits() as f64) - 2.0;
    let mut n_head = (ctx.working_digits() as i64 / 2).max(10);
    loop {
        if let Some(v) = euler_maclaurin(s, n_head, target, ctx)? {
            return Ok(v);
        }
        n_head *= 2;
    }
}

fn euler_maclaurin(s: i64, n: i64, target: f64, ctx: &PrecisionContext) -> Result<Option<BigReal>, NumericError> {
    let mut head = ctx.zero();
    for k in 1..n {
        head += ctx.int(k).powi(s as u64).recip()?;
    }
    let big_n = ctx.int(n);
    let n_pow_s = big_n.powi(s as u64);
    let inv_n_s = n_pow_s.recip()?;
    let mut total = head + (&big_n * &inv_n_s).div_i64(s - 1) + inv_n_s.div_i64(2);
    let inv_n2 = big_n.sqr().recip()?;
    // rising = s(s+1)...(s+2j-2), npow = N^{-s-2j+1}
    let mut rising = ctx.int(s);
    let mut npow = &inv_n_s / &big_n;
    let mut prev = f64::INFINITY;
    for j in 1.. {
        let b = bernoulli(2 * j as u64);
        let coeff = ctx.rational(&(b / crate::exact::Rational::from_integer(factorial(2 * j as u64))));
        let term = &coeff * &rising * &npow;
        let size = term.log10_abs();
        if size < target {
            return Ok(Some(total));
        }
        if size > prev {
            return Ok(None);
        }
        prev = size;
        total += term;
        rising = rising * ctx.int(s + 2 * j - 1) * ctx.int(s + 2 * j);
        npow = &npow * &inv_n2;
    }
    unreachable!()
}

/// Independent route: zeta(s) = zetabar(s) / (1 - 2^{1-s}), zetabar by
/// CVZ acceleration (1/(k+1)^s is a moment sequence).
pub fn zeta_alternating(s: i64, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    if s < 2 {
        return Err(NumericError::Usage(format!("zeta_alternating needs s >= 2, got {s}")));
    }
    let n = cvz_terms(ctx, 0.0);
    let zbar = sum_alternating(ctx, n, |k| ctx.int(k as i64 + 1).powi(s as u64).recip())?;
    let factor = ctx.one() - ctx.int(2).powi(s as u64 - 1).recip()?;
    zbar.checked_div(&factor)
}

/// Catalan's constant from sum (-1)^k/(2k+1)^2 with CVZ acceleration;
/// 1/(2k+1)^2 = int_0^1 x^k (-ln x)/(4 sqrt x) dx, so the moment bound applies.
pub fn catalan(ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let n = cvz_terms(ctx, 0.0);
    sum_alternating(ctx, n, |k| ctx.int(2 * k as i64 + 1).sqr().recip())
}

/// Second route: G = (pi/8) log(2 + sqrt 3) + (3/8) sum_{n>=0} (n!)^2/((2n)! (2n+1)^2).
pub fn catalan_ramanujan(ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let target = -(ctx.working_digits() as f64) - 2.0;
    let mut ratio = ctx.one();
    let mut sum = ctx.zero();
    for n in 0i64.. {
        if n > 0 {
            ratio = (&ratio * &ctx.int(n)) / ctx.int(2 * (2 * n - 1));
        }
        let term = &ratio / &ctx.int(2 * n + 1).sqr();
        if term.log10_abs() < target {
            break;
        }
        sum += term;
    }
    let log_term = (ctx.int(3).sqrt()? + ctx.int(2)).ln()?;
    Ok((ctx.pi() * log_term).div_i64(8) + sum.mul_i64(3).div_i64(8))
}
