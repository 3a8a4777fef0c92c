use crate::numeric::{BigReal, NumericError, PrecisionContext};

use super::TermFn;

/// prod_{n>=1} factor(n) with |factor(n) - 1| <= e^{-rate n + shift}.
pub struct ProductSpec<'a> {
    pub factor: TermFn<'a>,
    pub rate: f64,
    pub shift: f64,
}

impl<'a> ProductSpec<'a> {
    /// Factors 1 + sign e^{-(slope n - offset)}, e.g. 1 - e^{-pi(4n-2)} is
    /// sign -1, slope 4 pi, offset 2 pi.
    pub fn exp_family(sign: i32, slope: BigReal, offset: BigReal) -> Self {
        let rate = slope.to_f64();
        let shift = offset.to_f64();
        let p = slope.precision();
        ProductSpec {
            factor: Box::new(move |n| {
                let u = (&offset - &slope * &BigReal::from_u64(n, p)).exp()?;
                let one = BigReal::from_i64(1, p);
                Ok(if sign < 0 { one - u } else { one + u })
            }),
            rate,
            shift,
        }
    }

    fn cutoff(&self, ctx: &PrecisionContext) -> Result<u64, NumericError> {
        if self.rate.is_nan() || self.rate <= 0.0 || !self.rate.is_finite() {
            return Err(NumericError::Usage(format!("product decay rate must be positive, got {}", self.rate)));
        }
        // log tail: sum_{n>N} |log(1+u_n)| <= 2 e^{-c(N+1)+d}/(1-e^{-c}) once u_n <= 1/2
        let c = self.rate;
        let target = ctx.truncation_log10() * std::f64::consts::LN_10;
        let geometric = -(-(-c).exp_m1()).ln();
        let from_bound = ((2f64.ln() + self.shift + geometric - target) / c - 1.0).ceil();
        let from_half = ((self.shift + 2f64.ln()) / c).ceil();
        Ok(from_bound.max(from_half).max(1.0) as u64)
    }
}

/// sum_{n>=1} log factor(n), truncated by the log-tail bound.
pub fn log_product(spec: &ProductSpec<'_>, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let n = spec.cutoff(ctx)?;
    let mut acc = ctx.zero();
    for k in 1..=n {
        let f = (spec.factor)(k)?;
        if !f.is_positive() {
            return Err(NumericError::Domain(format!("product factor at n = {k} is not positive")));
        }
        acc += f.ln()?;
    }
    Ok(acc)
}

pub fn infinite_product(spec: &ProductSpec<'_>, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    log_product(spec, ctx)?.exp()
}
