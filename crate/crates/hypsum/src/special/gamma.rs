use crate::exact::{bernoulli, Rational};
use crate::numeric::{BigComplex, BigReal, NumericError, PrecisionContext};

/// Euler's constant by the Brent-McMillan Bessel-function ratio (their B1).
///
/// With n such that pi e^{-4n} is below the target, U/V - log n converges to
/// gamma where V = sum (n^k/k!)^2 and U = sum (n^k/k!)^2 (H_k - log n).
pub fn euler_gamma(ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let w = ctx.widened(5);
    let n = (((ctx.working_digits() as f64 + 3.0) * std::f64::consts::LN_10) / 4.0).ceil() as i64 + 1;
    let n2 = w.int(n * n);
    let mut a = -w.int(n).ln()?;
    let mut b = w.one();
    let mut u = a.clone();
    let mut v = b.clone();
    let eps_log = -(w.working_digits() as f64) - 5.0;
    let mut k = 1i64;
    loop {
        b = (&b * &n2) / w.int(k * k);
        a = (((&a * &n2) / w.int(k)) + &b) / w.int(k);
        u += &a;
        v += &b;
        if k as f64 > 3.6 * n as f64 && a.log10_abs() - v.log10_abs() < eps_log && b.log10_abs() - v.log10_abs() < eps_log {
            break;
        }
        k += 1;
    }
    Ok(u.checked_div(&v)?.with_precision(ctx.bits()))
}

/// Gamma on the positive reals: shift x up to z = x + K, Stirling series for
/// log Gamma(z), then divide by the rising product x(x+1)...(x+K-1).
///
/// For real z > 0 the Stirling remainder after the B_{2M} term is bounded by
/// |B_{2M+2}| / ((2M+2)(2M+1) z^{2M+1}).
pub fn gamma_real(x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    if !x.is_positive() {
        return Err(NumericError::Domain("gamma_real needs x > 0".into()));
    }
    let w = ctx.widened(10);
    let x = x.with_precision(w.bits());
    let threshold = (w.working_digits() as f64 / 2.0).max(10.0);
    let mut z = x.clone();
    let mut rising = w.one();
    while z.to_f64() < threshold {
        rising = &rising * &z;
        z = &z + &w.one();
    }
    let lg = log_gamma_stirling(&z, &w)?;
    Ok((lg.exp()? / rising).with_precision(ctx.bits()))
}

fn log_gamma_stirling(z: &BigReal, w: &PrecisionContext) -> Result<BigReal, NumericError> {
    let half = w.ratio(1, 2);
    let two_pi = w.pi().mul_i64(2);
    let mut acc = (z - &half) * z.ln()? - z + two_pi.ln()? * &half;
    let inv_z = z.recip()?;
    let inv_z2 = inv_z.sqr();
    let mut zpow = inv_z.clone();
    let target = -(w.working_digits() as f64) - 2.0;
    for j in 1u64.. {
        let c = bernoulli(2 * j) / Rational::from_integer(((2 * j) * (2 * j - 1)).into());
        let term = w.rational(&c) * &zpow;
        if term.log10_abs() < target {
            break;
        }
        acc += term;
        zpow = &zpow * &inv_z2;
        if j > 10_000 {
            return Err(NumericError::Overflow("Stirling series did not reach the target".into()));
        }
    }
    Ok(acc)
}

/// Non-positive integers on the real axis.
fn is_pole(z: &BigComplex) -> bool {
    if !z.im.is_zero() || z.re.is_positive() {
        return false;
    }
    match z.re.floor_i64() {
        Some(f) => z.re == BigReal::from_i64(f, z.re.precision()),
        None => false,
    }
}

/// Digamma on the complex plane off the poles.
///
/// Upward recurrence psi(z) = psi(z+1) - 1/z moves Re z past
/// T = max(10, working/2); the asymptotic series
/// log z - 1/(2z) - sum B_{2n}/(2n z^{2n}) is then summed until the first
/// omitted term, inflated by 2^{n+1} for |arg z| < pi/2, is below target.
pub fn digamma_complex(z: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex, NumericError> {
    if is_pole(z) {
        return Err(NumericError::Domain("digamma pole at a non-positive integer".into()));
    }
    let w = ctx.widened(5);
    let p = w.bits();
    let mut z = BigComplex::new(z.re.with_precision(p), z.im.with_precision(p));
    let threshold = (w.working_digits() as f64 / 2.0).max(10.0);
    let one = BigComplex::from_real(w.one());
    let mut shift = BigComplex::from_real(w.zero());
    let target = -(w.working_digits() as f64) - 2.0;
    loop {
        while z.re.to_f64() < threshold {
            shift = &shift + &z.recip()?;
            z = &z + &one;
        }
        if let Some(v) = digamma_asymptotic(&z, &w, target)? {
            let out = &v - &shift;
            return Ok(BigComplex::new(out.re.with_precision(ctx.bits()), out.im.with_precision(ctx.bits())));
        }
        for _ in 0..10 {
            shift = &shift + &z.recip()?;
            z = &z + &one;
        }
    }
}

fn digamma_asymptotic(z: &BigComplex, w: &PrecisionContext, target: f64) -> Result<Option<BigComplex>, NumericError> {
    let half = BigComplex::from_real(w.ratio(1, 2));
    let inv_z = z.recip()?;
    let mut acc = &z.ln()? - &(&half * &inv_z);
    let inv_z2 = inv_z.sqr();
    let mut zpow = inv_z2.clone();
    let mut prev = f64::INFINITY;
    for n in 1u64.. {
        let c = w.rational(&(bernoulli(2 * n) / Rational::from_integer((2 * n).into())));
        let term = zpow.scale(&c);
        let size = term.abs().log10_abs() + (n as f64 + 1.0) * 2f64.log10();
        if size < target {
            return Ok(Some(acc));
        }
        if size > prev {
            return Ok(None);
        }
        prev = size;
        acc = &acc - &term;
        zpow = &zpow * &inv_z2;
    }
    unreachable!()
}
