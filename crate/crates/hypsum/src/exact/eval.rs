use num_traits::One;

use super::{Atom, ClosedForm, Monomial};
use crate::numeric::{BigReal, NumericError, PrecisionContext};
use crate::special::{constant, ConstId};

impl Atom {
    /// Numeric value of the atom at working precision.
    pub fn eval(&self, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
        match self {
            Atom::Pi => Ok(ctx.pi()),
            Atom::Two => Ok(ctx.int(2)),
            Atom::LogTwo => Ok(ctx.ln2()),
            Atom::Catalan => constant(ConstId::Catalan, ctx),
            Atom::EulerGamma => constant(ConstId::EulerGamma, ctx),
            Atom::ZetaOdd(m) => constant(ConstId::Zeta(*m), ctx),
            Atom::GammaThreeQuarters => constant(ConstId::GammaThreeQuarters, ctx),
            Atom::ExpPi(q) => (ctx.pi() * ctx.rational(q)).exp(),
            Atom::ExpPiSqrt2(q) => (ctx.pi() * ctx.int(2).sqrt()? * ctx.rational(q)).exp(),
        }
    }
}

impl Monomial {
    pub fn eval(&self, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
        let mut acc = ctx.one();
        for (a, e) in self.factors() {
            let v = a.eval(ctx)?;
            acc *= &if e.is_one() { v } else { v.pow_rational(e)? };
        }
        Ok(acc)
    }
}

impl ClosedForm {
    /// Numeric value: each monomial at working precision, then the rational sum.
    pub fn eval(&self, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
        let mut acc = ctx.zero();
        for (m, c) in self.terms() {
            acc += m.eval(ctx)? * ctx.rational(c);
        }
        Ok(acc)
    }
}

/// Free-function form of [`ClosedForm::eval`].
pub fn closedform_eval(cf: &ClosedForm, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    cf.eval(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn values() {
        let ctx = PrecisionContext::new(30).unwrap();
        let a: ClosedForm = "7/180*pi^4".parse().unwrap();
        let oracle = PrecisionContext::new(60).unwrap().pi().powi(4).mul_i64(7).div_i64(180);
        assert_eq!(a.eval(&ctx).unwrap().to_sci_string(30), oracle.to_sci_string(30));
        assert!(ClosedForm::zero().eval(&ctx).unwrap().is_zero());
        let b: ClosedForm = "1/4*log2 + 1/6*pi".parse().unwrap();
        assert!(b.eval(&ctx).unwrap().to_sci_string(4).starts_with("6.969"));
    }

    #[test]
    fn exponentials() {
        let ctx = PrecisionContext::new(30).unwrap();
        let e = ClosedForm::exp_pi(rat(1, 12)).eval(&ctx).unwrap();
        let direct = (ctx.pi().div_i64(12)).exp().unwrap();
        assert!((e - direct).abs() < ctx.pow10(-30));
    }
}
