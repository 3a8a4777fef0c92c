//! The hyperbolic family sum_{n>=1} coef * sign(n) * w(m) * K(c m), with m = n
//! or m = 2n - 1.
//!
//! Kernels that tend to 1 are split as K = 1 + (K - 1). The constant part is a
//! zeta-type series or a rational function summed in closed form; the
//! remainder decays like e^{-kappa c m} and gets an exponential tail model.

use crate::numeric::{BigComplex, BigReal, NumericError, PrecisionContext};
use crate::special::{catalan, constant, ConstId};

use super::alternating::{cvz_terms, sum_alternating};
use super::partial::{rational_sum, PartialFractions};
use super::{sum_exponential, SeriesSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    Coth,
    Tanh,
    Csch,
    Sech,
    /// coth^2
    Coth2,
    /// 1/sinh^2
    Csch2,
    /// cosh/sinh^2
    CoshCsch2,
    /// 1/(e^x - 1)
    InvExpm1,
    /// 1/(e^x + 1)
    InvExpp1,
}

impl Kernel {
    fn limit_is_one(self) -> bool {
        matches!(self, Kernel::Coth | Kernel::Tanh | Kernel::Coth2)
    }

    /// (kappa, B) with |K(x) - limit| <= B e^{-kappa x} for x >= c.
    fn decay(self, c: f64) -> (f64, f64) {
        let g2 = -(-2.0 * c).exp_m1();
        match self {
            Kernel::Coth => (2.0, 2.0 / g2),
            Kernel::Tanh => (2.0, 2.0),
            Kernel::Csch => (1.0, 2.0 / g2),
            Kernel::Sech => (1.0, 2.0),
            Kernel::Coth2 | Kernel::Csch2 => (2.0, 4.0 / (g2 * g2)),
            Kernel::CoshCsch2 => (1.0, 2.0 / (g2 * c.tanh())),
            Kernel::InvExpm1 => (1.0, 1.0 / -(-c).exp_m1()),
            Kernel::InvExpp1 => (1.0, 1.0),
        }
    }

    /// K(x) minus its limit at infinity, from u = e^{-x} to avoid overflow.
    pub fn decaying(self, x: &BigReal) -> Result<BigReal, NumericError> {
        let p = x.precision();
        let one = BigReal::from_i64(1, p);
        let u = (-x).exp()?;
        let u2 = u.sqr();
        Ok(match self {
            Kernel::Coth => u2.mul_i64(2).checked_div(&(&one - &u2))?,
            Kernel::Tanh => -(u2.mul_i64(2).checked_div(&(&one + &u2))?),
            Kernel::Csch => u.mul_i64(2).checked_div(&(&one - &u2))?,
            Kernel::Sech => u.mul_i64(2).checked_div(&(&one + &u2))?,
            Kernel::Coth2 | Kernel::Csch2 => u2.mul_i64(4).checked_div(&(&one - &u2).sqr())?,
            Kernel::CoshCsch2 => (u.mul_i64(2) * (&one + &u2)).checked_div(&(&one - &u2).sqr())?,
            Kernel::InvExpm1 => u.checked_div(&(&one - &u))?,
            Kernel::InvExpp1 => u.checked_div(&(&one + &u))?,
        })
    }

    pub fn eval(self, x: &BigReal) -> Result<BigReal, NumericError> {
        let d = self.decaying(x)?;
        Ok(if self.limit_is_one() { d + BigReal::from_i64(1, x.precision()) } else { d })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Index {
    All,
    Odd,
}

impl Index {
    fn m(self, n: u64) -> u64 {
        match self {
            Index::All => n,
            Index::Odd => 2 * n - 1,
        }
    }

    fn slope_offset(self) -> (f64, f64) {
        match self {
            Index::All => (1.0, 0.0),
            Index::Odd => (2.0, -1.0),
        }
    }
}

/// `Alternating` is (-1)^{n-1}; write (-1)^n as a coefficient of -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plain,
    Alternating,
}

/// scale * m^exponent / prod (m - pole).
#[derive(Debug, Clone)]
pub struct RationalWeight {
    pub scale: BigReal,
    pub exponent: u32,
    pub poles: Vec<BigComplex>,
}

impl RationalWeight {
    fn eval(&self, m: &BigReal) -> Result<BigReal, NumericError> {
        let mc = BigComplex::from_real(m.clone());
        let mut den = BigComplex::from_real(BigReal::from_i64(1, m.precision()));
        for q in &self.poles {
            den = &den * &(&mc - q);
        }
        let num = m.powi(self.exponent as u64) * &self.scale;
        Ok(BigComplex::from_real(num).checked_div(&den)?.re)
    }

    /// (log A, m0): |w(m)| <= A for all m >= m0.
    fn bound(&self) -> (f64, u64) {
        let r = self.poles.iter().map(|q| q.abs().to_f64()).fold(0.0, f64::max);
        let d = self.poles.len() as i32;
        let m0 = (2.0 * r).floor() as u64 + 1;
        (self.scale.abs().to_f64().ln() + d as f64 * 2f64.ln(), m0)
    }
}

#[derive(Debug, Clone)]
pub enum Weight {
    /// 1/m^s
    Power(u32),
    Rational(RationalWeight),
}

#[derive(Debug, Clone)]
pub struct HyperSum {
    pub coef: BigReal,
    pub kernel: Kernel,
    pub arg: BigReal,
    pub index: Index,
    pub sign: Sign,
    pub weight: Weight,
}

impl HyperSum {
    /// sum K(arg n)/n^s, plain, coefficient 1.
    pub fn power(kernel: Kernel, arg: BigReal, s: u32) -> Self {
        let p = arg.precision();
        HyperSum { coef: BigReal::from_i64(1, p), kernel, arg, index: Index::All, sign: Sign::Plain, weight: Weight::Power(s) }
    }

    pub fn rational(kernel: Kernel, arg: BigReal, w: RationalWeight) -> Self {
        let p = arg.precision();
        HyperSum { coef: BigReal::from_i64(1, p), kernel, arg, index: Index::All, sign: Sign::Plain, weight: Weight::Rational(w) }
    }

    pub fn odd(mut self) -> Self {
        self.index = Index::Odd;
        self
    }

    /// Multiplies by (-1)^{n-1}.
    pub fn alternating(mut self) -> Self {
        self.sign = Sign::Alternating;
        self
    }

    pub fn times(mut self, k: &BigReal) -> Self {
        self.coef = &self.coef * k;
        self
    }

    fn weight_at(&self, m: u64, p: usize) -> Result<BigReal, NumericError> {
        let mm = BigReal::from_u64(m, p);
        match &self.weight {
            Weight::Power(s) => mm.powi(*s as u64).recip(),
            Weight::Rational(w) => w.eval(&mm),
        }
    }

    /// One term of the full (unsplit) series.
    pub fn term(&self, n: u64) -> Result<BigReal, NumericError> {
        let p = self.arg.precision();
        let m = self.index.m(n);
        let k = self.kernel.eval(&(&self.arg * &BigReal::from_u64(m, p)))?;
        let s = if self.sign == Sign::Alternating && n.is_multiple_of(2) { -1 } else { 1 };
        Ok((&self.coef * &self.weight_at(m, p)? * &k).mul_i64(s))
    }

    /// The exponentially decaying part as a spec with its tail model.
    pub fn decaying_spec(&self) -> Result<SeriesSpec<'_>, NumericError> {
        let c = self.arg.to_f64();
        if c.is_nan() || c <= 0.0 {
            return Err(NumericError::Usage("hyperbolic argument must be positive".into()));
        }
        let (kappa, b) = self.kernel.decay(c);
        let (slope, offset) = self.index.slope_offset();
        let (lnw, n0) = match &self.weight {
            Weight::Power(_) => (0.0, 1),
            Weight::Rational(w) => {
                let (lnw, m0) = w.bound();
                (lnw, match self.index {
                    Index::All => m0,
                    Index::Odd => m0.div_ceil(2) + 1,
                })
            }
        };
        let lnc = self.coef.abs().to_f64().ln() + lnw + b.ln() - kappa * c * offset;
        let p = self.arg.precision();
        Ok(SeriesSpec::exponential(
            move |n| {
                let m = self.index.m(n);
                let d = self.kernel.decaying(&(&self.arg * &BigReal::from_u64(m, p)))?;
                let s = if self.sign == Sign::Alternating && n % 2 == 0 { -1 } else { 1 };
                Ok((&self.coef * &self.weight_at(m, p)? * &d).mul_i64(s))
            },
            kappa * c * slope,
            lnc,
            n0,
        ))
    }
}

/// sum_{m} sign * m^{-s} over the index set, for the constant part.
fn power_constant(s: u32, index: Index, sign: Sign, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let zeta = |s: u32| constant(ConstId::Zeta(s), ctx);
    let divergent = || Err(NumericError::Usage(format!("constant part sum 1/m^{s} diverges")));
    match (index, sign) {
        (Index::All, Sign::Plain) if s >= 2 => zeta(s),
        (Index::All, Sign::Alternating) if s == 1 => Ok(ctx.ln2()),
        (Index::All, Sign::Alternating) if s >= 2 => Ok(zeta(s)? * (ctx.one() - ctx.int(2).powi(s as u64 - 1).recip()?)),
        (Index::Odd, Sign::Plain) if s >= 2 => Ok(zeta(s)? * (ctx.one() - ctx.int(2).powi(s as u64).recip()?)),
        (Index::Odd, Sign::Alternating) if s >= 1 => dirichlet_beta(s, ctx),
        _ => divergent(),
    }
}

/// beta(s) = sum_{k>=0} (-1)^k/(2k+1)^s.
pub fn dirichlet_beta(s: u32, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    match s {
        0 => Err(NumericError::Usage("beta(0) is not a convergent series".into())),
        1 => Ok(ctx.pi().div_i64(4)),
        2 => catalan(ctx),
        _ => sum_alternating(ctx, cvz_terms(ctx, 0.0), |k| ctx.int(2 * k as i64 + 1).powi(s as u64).recip()),
    }
}

/// Sum of several family members; rational constant parts that share an
/// index set and sign are merged before the digamma evaluation, so pairs whose
/// 1/n parts cancel only jointly are still summable.
pub fn sum_hyper(terms: &[HyperSum], ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let mut acc = ctx.zero();
    let mut buckets: Vec<((Index, Sign), PartialFractions)> = Vec::new();
    for t in terms {
        acc += sum_exponential(&t.decaying_spec()?, ctx)?;
        if !t.kernel.limit_is_one() {
            continue;
        }
        match &t.weight {
            Weight::Power(s) => acc += &t.coef * &power_constant(*s, t.index, t.sign, ctx)?,
            Weight::Rational(w) => {
                let pf = PartialFractions::from_poles(&w.scale, w.exponent, &w.poles)?.scaled(&t.coef);
                let key = (t.index, t.sign);
                match buckets.iter_mut().find(|(k, _)| *k == key) {
                    Some((_, b)) => b.extend(pf),
                    None => buckets.push((key, pf)),
                }
            }
        }
    }
    for ((index, sign), pf) in &buckets {
        acc += rational_sum(pf, *index, *sign, ctx)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::tail_model_holds;

    fn close(a: BigReal, b: BigReal, e: i64, ctx: &PrecisionContext) {
        let d = (&a - &b).abs();
        assert!(d < ctx.pow10(e), "{a} vs {b}");
    }

    #[test]
    fn golden_values() {
        let ctx = PrecisionContext::new(50).unwrap();
        let pi = ctx.pi();
        let s = sum_hyper(&[HyperSum::power(Kernel::Coth, pi.clone(), 3).times(&pi)], &ctx).unwrap();
        close(s, pi.powi(4).mul_i64(7).div_i64(180), -50, &ctx);
        let s = sum_hyper(&[HyperSum::power(Kernel::Csch, pi.clone(), 3).alternating().times(&pi)], &ctx).unwrap();
        close(s, pi.powi(4).div_i64(360), -50, &ctx);
        let s = sum_hyper(&[HyperSum::power(Kernel::Tanh, pi.div_i64(2), 3).odd().times(&pi)], &ctx).unwrap();
        close(s, pi.powi(4).div_i64(32), -50, &ctx);
        let s = sum_hyper(&[HyperSum::power(Kernel::Sech, pi.div_i64(2), 1).odd().alternating()], &ctx).unwrap();
        close(s, pi.div_i64(8), -50, &ctx);
    }

    #[test]
    fn unsplit_terms_agree_with_split_sum() {
        // direct summation of the full alternating coth series at low precision
        let ctx = PrecisionContext::new(12).unwrap();
        let h = HyperSum::power(Kernel::Coth, ctx.pi(), 4).alternating();
        let direct: BigReal = (1..4000u64).map(|n| h.term(n).unwrap()).sum();
        let s = sum_hyper(&[h], &ctx).unwrap();
        close(s, direct, -12, &ctx);
    }

    #[test]
    fn log_series_with_alternating_coth() {
        // sum coth(pi n)(-1)^{n-1}/n = log2/4 + pi/6
        let ctx = PrecisionContext::new(40).unwrap();
        let s = sum_hyper(&[HyperSum::power(Kernel::Coth, ctx.pi(), 1).alternating()], &ctx).unwrap();
        close(s, ctx.ln2().div_i64(4) + ctx.pi().div_i64(6), -40, &ctx);
    }

    #[test]
    fn berndt_pair_with_rational_weight() {
        // sum n coth(pi n)/(n^4 - a^4) = (1/a^2 - pi^2 cot(pi a) coth(pi a))/(4 a^2 pi)
        let ctx = PrecisionContext::new(40).unwrap();
        let a = ctx.ratio(1, 3);
        let poles = vec![
            BigComplex::from_real(a.clone()),
            BigComplex::from_real(-&a),
            BigComplex::imag(a.clone()),
            BigComplex::imag(-&a),
        ];
        let w = RationalWeight { scale: ctx.one(), exponent: 1, poles };
        let h = HyperSum::rational(Kernel::Coth, ctx.pi(), w);
        assert!(tail_model_holds(&h.decaying_spec().unwrap()).unwrap());
        let s = sum_hyper(&[h], &ctx).unwrap();
        let pa = ctx.pi() * &a;
        let want = (a.sqr().recip().unwrap() - ctx.pi().sqr() * pa.cot().unwrap() * pa.coth().unwrap()) / (a.sqr().mul_i64(4) * ctx.pi());
        close(s, want, -40, &ctx);
    }

    #[test]
    fn kernels_match_direct_functions() {
        let ctx = PrecisionContext::new(30).unwrap();
        let x = ctx.ratio(17, 10);
        close(Kernel::Coth.eval(&x).unwrap(), x.coth().unwrap(), -30, &ctx);
        close(Kernel::Tanh.eval(&x).unwrap(), x.tanh(), -30, &ctx);
        close(Kernel::Csch.eval(&x).unwrap(), x.csch().unwrap(), -30, &ctx);
        close(Kernel::Sech.eval(&x).unwrap(), x.sech().unwrap(), -30, &ctx);
        close(Kernel::Coth2.eval(&x).unwrap(), x.coth().unwrap().sqr(), -30, &ctx);
        close(Kernel::Csch2.eval(&x).unwrap(), x.csch().unwrap().sqr(), -30, &ctx);
        close(Kernel::CoshCsch2.eval(&x).unwrap(), x.cosh().unwrap() * x.csch().unwrap().sqr(), -30, &ctx);
        close(Kernel::InvExpm1.eval(&x).unwrap(), (x.exp().unwrap() - ctx.one()).recip().unwrap(), -30, &ctx);
        close(Kernel::InvExpp1.eval(&x).unwrap(), (x.exp().unwrap() + ctx.one()).recip().unwrap(), -30, &ctx);
    }

    #[test]
    fn divergent_constant_part_is_usage_error() {
        let ctx = PrecisionContext::new(20).unwrap();
        let r = sum_hyper(&[HyperSum::power(Kernel::Coth, ctx.pi(), 1)], &ctx);
        assert!(matches!(r, Err(NumericError::Usage(_))));
    }

    #[test]
    fn beta_values() {
        let ctx = PrecisionContext::new(30).unwrap();
        close(dirichlet_beta(3, &ctx).unwrap(), ctx.pi().powi(3).div_i64(32), -30, &ctx);
    }
}
