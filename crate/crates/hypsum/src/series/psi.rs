//! Single series left after summing the inner index of the harmonic-number
//! double sums in closed form:
//!
//!   sum_{m>=1} k^2/(m(m^2 + k^2)) = gamma + Re psi(1 + ik).
//!
//! Signs here follow (-1)^n, the form the double sums are written in.

use crate::numeric::{BigComplex, BigReal, NumericError, PrecisionContext};
use crate::special::{constant, digamma_complex, ConstId};

use super::alternating::{cvz_terms, sum_alternating};
use super::harmonic::harmonic;
use super::hyper::{Kernel, Sign};
use super::{sum_exponential, SeriesSpec};

/// gamma + Re psi(1 + ik).
pub fn psi_inner_reduced(k: u64, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let z = BigComplex::new(ctx.one(), ctx.int(k as i64));
    Ok(digamma_complex(&z, ctx)?.re + constant(ConstId::EulerGamma, ctx)?)
}

// gamma + Re psi(1+in) <= 2 + ln n <= 2 e^{n-1}, which costs one unit of rate.
fn bound_ln(c: f64) -> f64 {
    (4.0 * std::f64::consts::PI / -(-2.0 * std::f64::consts::PI).exp_m1()).ln() - c
}

/// sum_n (-1)^n pi coth(n pi) (gamma + Re psi(1+in)) / n^p.
pub fn psi_coth_alternating(p: u32, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    if p == 0 {
        return Err(NumericError::Usage("psi series needs p >= 1".into()));
    }
    let pi = ctx.pi();
    let bits = ctx.bits();
    let weight = |n: u64| -> Result<BigReal, NumericError> {
        Ok(psi_inner_reduced(n, ctx)? * &pi / BigReal::from_u64(n, bits).powi(p as u64))
    };
    // coth = 1 + (coth - 1); the constant part alternates with slow decay
    let a0 = weight(1)?.log10_abs();
    let flat = -sum_alternating(ctx, cvz_terms(ctx, a0), |j| weight(j + 1))?;
    let spec = SeriesSpec::exponential(
        |n| {
            let d = Kernel::Coth.decaying(&(&pi * &BigReal::from_u64(n, bits)))?;
            let s = if n % 2 == 0 { 1 } else { -1 };
            Ok((weight(n)? * d).mul_i64(s))
        },
        2.0 * std::f64::consts::PI - 1.0,
        bound_ln(1.0),
        1,
    );
    Ok(flat + sum_exponential(&spec, ctx)?)
}

/// sum_n (-1)^n pi (gamma + Re psi(1+in)) / (n^p sinh(n pi)).
pub fn psi_sinh_alternating(p: u32, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let pi = ctx.pi();
    let bits = ctx.bits();
    let spec = SeriesSpec::exponential(
        |n| {
            let nn = BigReal::from_u64(n, bits);
            let v = psi_inner_reduced(n, ctx)? * &pi * Kernel::Csch.decaying(&(&pi * &nn))? / nn.powi(p as u64);
            Ok(if n % 2 == 0 { v } else { -v })
        },
        std::f64::consts::PI - 1.0,
        bound_ln(1.0),
        1,
    );
    sum_exponential(&spec, ctx)
}

/// sum_n sign(n) pi H_n / (n^p sinh(n pi)), with `Sign::Alternating` meaning
/// (-1)^{n-1} as elsewhere in the family.
pub fn harmonic_sinh(p: u32, sign: Sign, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let pi = ctx.pi();
    let bits = ctx.bits();
    // H_n <= n <= e^{n-1}
    let ln_a = (2.0 * std::f64::consts::PI / -(-2.0 * std::f64::consts::PI).exp_m1()).ln() - 1.0;
    let spec = SeriesSpec::exponential(
        |n| {
            let nn = BigReal::from_u64(n, bits);
            let h = harmonic(n, 1).map_err(|e| NumericError::Usage(e.to_string()))?;
            let v = ctx.rational(&h) * &pi * Kernel::Csch.decaying(&(&pi * &nn))? / nn.powi(p as u64);
            Ok(if sign == Sign::Alternating && n % 2 == 0 { -v } else { v })
        },
        std::f64::consts::PI - 1.0,
        ln_a,
        1,
    );
    sum_exponential(&spec, ctx)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoublePsiShape {
    /// sum_{n,k} k pi coth(k pi) (-1)^k / (n (n^2 + k^2))
    CothAlternating,
    /// sum_{n,k} (-1)^n pi n / (k (k^2 + n^2) sinh(n pi))
    SinhWeighted,
}

pub fn sum_double_psi_reduced(shape: DoublePsiShape, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    match shape {
        DoublePsiShape::CothAlternating => psi_coth_alternating(1, ctx),
        DoublePsiShape::SinhWeighted => psi_sinh_alternating(1, ctx),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inner_brute(k: u64, ctx: &PrecisionContext) -> BigReal {
        // sum_m k^2/(m(m^2+k^2)) = sum_m (1/m - m/(m^2+k^2)); the tail after M
        // is k^2/(2M^2) - k^2/(2M^3) + O(M^-4), so add the two leading terms
        let m_max = 100_000u64;
        let k2 = ctx.int((k * k) as i64);
        let mut s = ctx.zero();
        for m in 1..=m_max {
            let mm = ctx.int(m as i64);
            s += &k2 / (&mm * (mm.sqr() + &k2));
        }
        let big = ctx.int(m_max as i64);
        s + &k2 / big.sqr().mul_i64(2) - &k2 / big.powi(3).mul_i64(2)
    }

    #[test]
    fn inner_reduction_matches_brute_force() {
        let ctx = PrecisionContext::new(20).unwrap();
        for k in [1u64, 2] {
            let d = (psi_inner_reduced(k, &ctx).unwrap() - inner_brute(k, &ctx)).abs();
            assert!(d < ctx.pow10(-16), "k = {k}");
        }
    }

    /// Direct double loop at low precision, inner sum truncated with its
    /// k^2/(2M^2) tail, outer sum accelerated by averaging partial sums.
    fn direct_coth() -> f64 {
        let pi = std::f64::consts::PI;
        let terms: Vec<f64> = (1..=40u64)
            .map(|k| {
                let kf = k as f64;
                let m_max = 200_000u64;
                let mut inner = 0.0;
                for m in (1..=m_max).rev() {
                    let mf = m as f64;
                    inner += 1.0 / (mf * (mf * mf + kf * kf));
                }
                inner += 1.0 / (2.0 * (m_max as f64).powi(2));
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * kf * pi / (pi * kf).tanh() * inner
            })
            .collect();
        // repeated averaging of consecutive partial sums (Euler transform)
        let mut partial: Vec<f64> = terms
            .iter()
            .scan(0.0, |s, t| {
                *s += t;
                Some(*s)
            })
            .collect();
        for _ in 0..20 {
            partial = partial.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        }
        *partial.last().unwrap()
    }

    #[test]
    fn double_sum_matches_direct_loop() {
        let ctx = PrecisionContext::new(30).unwrap();
        let v = sum_double_psi_reduced(DoublePsiShape::CothAlternating, &ctx).unwrap().to_f64();
        let oracle = direct_coth();
        assert!((v - oracle).abs() < 1e-9, "{v} vs {oracle}");
    }

    #[test]
    fn sinh_shape_matches_direct_loop() {
        let ctx = PrecisionContext::new(30).unwrap();
        let v = sum_double_psi_reduced(DoublePsiShape::SinhWeighted, &ctx).unwrap().to_f64();
        let pi = std::f64::consts::PI;
        let mut oracle = 0.0;
        for n in 1..=30u64 {
            let nf = n as f64;
            let mut inner = 0.0;
            for k in (1..=200_000u64).rev() {
                let kf = k as f64;
                inner += nf / (kf * (kf * kf + nf * nf));
            }
            inner += nf / (2.0 * 200_000f64.powi(2));
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            oracle += sign * pi * inner / (nf * pi).sinh();
        }
        assert!((v - oracle).abs() < 1e-10, "{v} vs {oracle}");
    }

    #[test]
    fn harmonic_sinh_first_terms() {
        let ctx = PrecisionContext::new(20).unwrap();
        let v = harmonic_sinh(1, Sign::Plain, &ctx).unwrap().to_f64();
        let pi = std::f64::consts::PI;
        let mut h = 0.0;
        let mut want = 0.0;
        for n in 1..=30 {
            h += 1.0 / n as f64;
            want += pi * h / (n as f64 * (pi * n as f64).sinh());
        }
        assert!((v - want).abs() < 1e-13);
    }
}
