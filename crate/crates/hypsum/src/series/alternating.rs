//! Cohen-Villegas-Zagier acceleration for sum_{k>=0} (-1)^k a_k.
//!
//! For a_k a moment sequence (a_k = int_0^1 t^k dmu, mu >= 0) the error after
//! n terms is at most 2 a_0 / (3 + sqrt 8)^n.

use crate::numeric::{BigReal, NumericError, PrecisionContext};

/// log10(3 + sqrt 8)
const CVZ_RATE: f64 = 0.765_551_1;

/// Terms needed to push the moment-sequence bound below 10^-(working digits + 2),
/// for a_0 of magnitude 10^{a0_log10}.
pub fn cvz_terms(ctx: &PrecisionContext, a0_log10: f64) -> usize {
    let target = ctx.working_digits() as f64 + 2.0 + a0_log10.max(0.0) + 2f64.log10();
    (target / CVZ_RATE).ceil() as usize + 1
}

/// Error bound 2|a_0|/(3+sqrt 8)^n, as log10.
pub fn cvz_bound_log10(a0_log10: f64, n: usize) -> f64 {
    2f64.log10() + a0_log10 - CVZ_RATE * n as f64
}

/// sum_{k>=0} (-1)^k a(k) with `n` accelerated terms.
pub fn sum_alternating<F>(ctx: &PrecisionContext, n: usize, mut a: F) -> Result<BigReal, NumericError>
where
    F: FnMut(u64) -> Result<BigReal, NumericError>,
{
    if n == 0 {
        return Ok(ctx.zero());
    }
    let root = ctx.int(8).sqrt()? + ctx.int(3);
    let dn = root.powi(n as u64);
    let d = (&dn + &dn.recip()?).div_i64(2);
    let mut b = ctx.int(-1);
    let mut c = -&d;
    let mut s = ctx.zero();
    let n = n as i64;
    for k in 0..n {
        c = &b - &c;
        s += &c * &a(k as u64)?;
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        b = (&b * &ctx.int(2 * (k + n) * (k - n))) / ctx.int((2 * k + 1) * (k + 1));
    }
    s.checked_div(&d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_harmonic_is_log2() {
        let ctx = PrecisionContext::new(40).unwrap();
        let n = cvz_terms(&ctx, 0.0);
        let s = sum_alternating(&ctx, n, |k| ctx.int(k as i64 + 1).recip()).unwrap();
        assert!((s - ctx.ln2()).abs() < ctx.epsilon().mul_i64(100));
    }

    #[test]
    fn leibniz_series() {
        let ctx = PrecisionContext::new(30).unwrap();
        let n = cvz_terms(&ctx, 0.0);
        let s = sum_alternating(&ctx, n, |k| ctx.int(2 * k as i64 + 1).recip()).unwrap();
        assert!((s.mul_i64(4) - ctx.pi()).abs() < ctx.epsilon().mul_i64(100));
    }
}
