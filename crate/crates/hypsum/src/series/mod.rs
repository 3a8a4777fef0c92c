//! Certified summation: exponentially decaying series with explicit tail
//! models, alternating polynomial series, infinite products, harmonic numbers
//! and the hyperbolic-kernel family evaluator the catalog is written in.

pub mod alternating;
mod harmonic;
mod hyper;
mod partial;
mod product;
mod psi;

pub use harmonic::harmonic;
pub use hyper::{dirichlet_beta, sum_hyper, HyperSum, Index, Kernel, RationalWeight, Sign, Weight};
pub use partial::{rational_sum, PartialFractions};
pub use product::{infinite_product, log_product, ProductSpec};
pub use psi::{harmonic_sinh, psi_coth_alternating, psi_inner_reduced, psi_sinh_alternating, sum_double_psi_reduced, DoublePsiShape};

use crate::numeric::{BigReal, NumericError, PrecisionContext};

pub type TermFn<'a> = Box<dyn Fn(u64) -> Result<BigReal, NumericError> + Send + Sync + 'a>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailModel {
    /// |term(n)| <= e^{ln_constant} e^{-rate n} for every n >= from.
    Exponential { rate: f64, ln_constant: f64, from: u64 },
    /// Signs alternate and |term(n)| decays like n^{-exponent}; summed by CVZ.
    AlternatingPolynomial { exponent: f64 },
}

pub struct SeriesSpec<'a> {
    pub term: TermFn<'a>,
    pub tail: TailModel,
    pub start: u64,
}

impl<'a> SeriesSpec<'a> {
    pub fn exponential<F>(term: F, rate: f64, ln_constant: f64, from: u64) -> Self
    where
        F: Fn(u64) -> Result<BigReal, NumericError> + Send + Sync + 'a,
    {
        SeriesSpec { term: Box::new(term), tail: TailModel::Exponential { rate, ln_constant, from }, start: 1 }
    }

    pub fn alternating<F>(term: F, exponent: f64) -> Self
    where
        F: Fn(u64) -> Result<BigReal, NumericError> + Send + Sync + 'a,
    {
        SeriesSpec { term: Box::new(term), tail: TailModel::AlternatingPolynomial { exponent }, start: 1 }
    }

    /// Modelled bound on |term(n)| as log10, when the model is exponential.
    pub fn bound_log10(&self, n: u64) -> Option<f64> {
        match self.tail {
            TailModel::Exponential { rate, ln_constant, .. } => Some((ln_constant - rate * n as f64) / std::f64::consts::LN_10),
            TailModel::AlternatingPolynomial { .. } => None,
        }
    }
}

/// First index N whose exponential tail sum_{n>=N} A e^{-cn} = A e^{-cN}/(1-e^{-c})
/// is below 10^-(digits + guard/2).
pub fn truncation_point(spec: &SeriesSpec<'_>, ctx: &PrecisionContext) -> Result<u64, NumericError> {
    let TailModel::Exponential { rate, ln_constant, from } = spec.tail else {
        return Err(NumericError::Usage("truncation point needs an exponential tail model".into()));
    };
    if rate.is_nan() || rate <= 0.0 || !rate.is_finite() {
        return Err(NumericError::Usage(format!("decay rate must be positive, got {rate}")));
    }
    let target = ctx.truncation_log10() * std::f64::consts::LN_10;
    let geometric = -(-(-rate).exp_m1()).ln();
    let needed = ((ln_constant + geometric - target) / rate).ceil();
    let n = if needed.is_finite() && needed > 0.0 { needed as u64 } else { 0 };
    Ok(n.max(from).max(spec.start))
}

/// sum_{start <= n < end} term(n), plain accumulation.
pub fn partial_sum(spec: &SeriesSpec<'_>, ctx: &PrecisionContext, end: u64) -> Result<BigReal, NumericError> {
    let mut acc = ctx.zero();
    for n in spec.start..end {
        acc += (spec.term)(n)?;
    }
    Ok(acc)
}

pub fn sum_exponential(spec: &SeriesSpec<'_>, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let n = truncation_point(spec, ctx)?;
    let sum = partial_sum(spec, ctx, n)?;
    if audit::enabled() {
        audit::record(spec, ctx, n, &sum)?;
    }
    Ok(sum)
}

/// Opt-in self-checks on every exponential sum: the tail model against
/// sampled terms, and stability of the value when N is doubled.
pub mod audit {
    use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

    use super::{partial_sum, tail_model_holds, SeriesSpec};
    use crate::numeric::{BigReal, NumericError, PrecisionContext};

    static ON: AtomicBool = AtomicBool::new(false);
    static CHECKED: AtomicU64 = AtomicU64::new(0);
    static TAIL_BAD: AtomicU64 = AtomicU64::new(0);
    static DOUBLING_BAD: AtomicU64 = AtomicU64::new(0);

    #[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
    pub struct Counts {
        pub checked: u64,
        pub tail_violations: u64,
        pub doubling_violations: u64,
    }

    /// Process-wide switch; resets the counters when turned on.
    pub fn set(on: bool) {
        if on {
            for c in [&CHECKED, &TAIL_BAD, &DOUBLING_BAD] {
                c.store(0, Ordering::SeqCst);
            }
        }
        ON.store(on, Ordering::SeqCst);
    }

    pub fn enabled() -> bool {
        ON.load(Ordering::Relaxed)
    }

    pub fn counts() -> Counts {
        Counts {
            checked: CHECKED.load(Ordering::SeqCst),
            tail_violations: TAIL_BAD.load(Ordering::SeqCst),
            doubling_violations: DOUBLING_BAD.load(Ordering::SeqCst),
        }
    }

    pub(super) fn record(spec: &SeriesSpec<'_>, ctx: &PrecisionContext, n: u64, sum: &BigReal) -> Result<(), NumericError> {
        CHECKED.fetch_add(1, Ordering::SeqCst);
        if !tail_model_holds(spec)? {
            TAIL_BAD.fetch_add(1, Ordering::SeqCst);
        }
        let extra = partial_sum(&SeriesSpec { term: Box::new(|k| (spec.term)(k)), tail: spec.tail, start: n }, ctx, 2 * n.max(1))?;
        let scale = sum.log10_abs().max(0.0);
        if !extra.is_zero() && extra.log10_abs() - scale > -(ctx.digits() as f64) {
            DOUBLING_BAD.fetch_add(1, Ordering::SeqCst);
        }
        Ok(())
    }
}

/// Alternating series with polynomial decay, through CVZ acceleration.
pub fn sum_alternating_spec(spec: &SeriesSpec<'_>, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let a0 = (spec.term)(spec.start)?;
    let terms = alternating::cvz_terms(ctx, a0.log10_abs());
    let start = spec.start;
    alternating::sum_alternating(ctx, terms, |k| {
        let t = (spec.term)(start + k)?;
        Ok(if k % 2 == 0 { t } else { -t })
    })
}

/// Sums any spec by its tail model.
pub fn sum_series(spec: &SeriesSpec<'_>, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    match spec.tail {
        TailModel::Exponential { .. } => sum_exponential(spec, ctx),
        TailModel::AlternatingPolynomial { .. } => sum_alternating_spec(spec, ctx),
    }
}

/// Sum over the odd integers: `spec.term` receives m = 2n-1 while the tail
/// model is stated in n.
pub fn sum_half_odd(spec: &SeriesSpec<'_>, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let mapped = SeriesSpec { term: Box::new(|n| (spec.term)(2 * n - 1)), tail: spec.tail, start: spec.start };
    sum_series(&mapped, ctx)
}

/// Checks the modelled bound against sampled terms at N0, 2N0 and 4N0.
/// Terms that have underflowed to zero pass trivially.
pub fn tail_model_holds(spec: &SeriesSpec<'_>) -> Result<bool, NumericError> {
    let TailModel::Exponential { from, .. } = spec.tail else {
        return Ok(true);
    };
    let n0 = from.max(spec.start).max(1);
    for n in [n0, 2 * n0, 4 * n0] {
        let t = (spec.term)(n)?;
        let bound = spec.bound_log10(n).unwrap_or(f64::INFINITY);
        if t.log10_abs() > bound + 1e-9 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi_coth_cubed(ctx: &PrecisionContext) -> SeriesSpec<'_> {
        // |pi coth(pi n)/n^3| <= pi coth(pi) e^{0 n}; not decaying, so use the
        // split form: pi (coth - 1)/n^3 <= 2 pi e^{-2 pi n}/(1 - e^{-2 pi})
        let pi = ctx.pi();
        let lnc = (2.0 * std::f64::consts::PI / (-(-2.0 * std::f64::consts::PI).exp_m1())).ln();
        SeriesSpec::exponential(
            move |n| {
                let x = &pi * &BigReal::from_u64(n, pi.precision());
                Ok((x.coth()? - BigReal::from_i64(1, pi.precision())) * &pi / BigReal::from_u64(n * n * n, pi.precision()))
            },
            2.0 * std::f64::consts::PI,
            lnc,
            1,
        )
    }

    #[test]
    fn coth_cubed_golden() {
        let ctx = PrecisionContext::new(50).unwrap();
        let spec = pi_coth_cubed(&ctx);
        assert!(tail_model_holds(&spec).unwrap());
        let s = sum_exponential(&spec, &ctx).unwrap() + ctx.pi() * crate::special::zeta_numeric(3, &ctx).unwrap();
        let want = ctx.pi().powi(4).mul_i64(7).div_i64(180);
        assert!((s - want).abs() < ctx.pow10(-50));
    }

    #[test]
    fn zero_series() {
        let ctx = PrecisionContext::new(20).unwrap();
        let spec = SeriesSpec::exponential(|_| Ok(BigReal::zero(64)), 1.0, 0.0, 1);
        assert!(sum_exponential(&spec, &ctx).unwrap().is_zero());
    }

    #[test]
    fn nonpositive_rate_is_usage_error() {
        let ctx = PrecisionContext::new(20).unwrap();
        let spec = SeriesSpec::exponential(|_| Ok(BigReal::zero(64)), 0.0, 0.0, 1);
        assert!(matches!(sum_exponential(&spec, &ctx), Err(NumericError::Usage(_))));
    }

    #[test]
    fn log2_over_eight_on_odd_index() {
        // 1/(m sinh(pi m)) over odd m; |.| <= 2 e^{-pi m}/(1-e^{-2pi}), m = 2n-1
        let ctx = PrecisionContext::new(50).unwrap();
        let pi = ctx.pi();
        let p = ctx.bits();
        let c = std::f64::consts::PI;
        let lnc = (2.0 / (-(-2.0 * c).exp_m1())).ln() + c;
        let spec = SeriesSpec::exponential(
            move |m| {
                let mm = BigReal::from_u64(m, p);
                (&mm * (&pi * &mm).sinh()?).recip()
            },
            2.0 * c,
            lnc,
            1,
        );
        let s = sum_half_odd(&spec, &ctx).unwrap();
        assert!((s - ctx.ln2().div_i64(8)).abs() < ctx.pow10(-50));
    }

    #[test]
    fn doubling_the_cutoff_changes_nothing() {
        let ctx = PrecisionContext::new(40).unwrap();
        let spec = pi_coth_cubed(&ctx);
        let n = truncation_point(&spec, &ctx).unwrap();
        let a = partial_sum(&spec, &ctx, n).unwrap();
        let b = partial_sum(&spec, &ctx, 2 * n).unwrap();
        assert!((a - b).abs() < ctx.pow10(-(40 + 5)));
    }
}
