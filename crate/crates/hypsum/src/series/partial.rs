//! Closed evaluation of rational-function series through digamma.
//!
//! For simple poles, sum_{n>=1} sum_j r_j/(n - q_j) = -sum_j r_j psi(1 - q_j)
//! whenever sum_j r_j = 0, and
//! sum_{n>=1} (-1)^{n-1}/(n - q) = (psi(1 - q/2) - psi((1 - q)/2))/2.

use crate::numeric::{BigComplex, BigReal, NumericError, PrecisionContext};
use crate::special::digamma_complex;

use super::hyper::{Index, Sign};

/// sum_j r_j/(m - q_j) in the summation variable m.
#[derive(Clone, Debug, Default)]
pub struct PartialFractions {
    pub terms: Vec<(BigComplex, BigComplex)>,
}

impl PartialFractions {
    /// scale * m^e / prod_j (m - q_j), simple poles, e < number of poles.
    pub fn from_poles(scale: &BigReal, exponent: u32, poles: &[BigComplex]) -> Result<Self, NumericError> {
        if exponent as usize >= poles.len() {
            return Err(NumericError::Usage("rational weight must be a proper fraction".into()));
        }
        let mut terms = Vec::with_capacity(poles.len());
        for (j, q) in poles.iter().enumerate() {
            let mut num = BigComplex::from_real(scale.clone());
            for _ in 0..exponent {
                num = &num * q;
            }
            let mut den = BigComplex::from_real(BigReal::from_i64(1, scale.precision()));
            for (i, qi) in poles.iter().enumerate() {
                if i != j {
                    den = &den * &(q - qi);
                }
            }
            if den.is_zero() {
                return Err(NumericError::Domain("rational weight has a repeated pole".into()));
            }
            terms.push((num.checked_div(&den)?, q.clone()));
        }
        Ok(PartialFractions { terms })
    }

    pub fn scaled(&self, k: &BigReal) -> Self {
        PartialFractions { terms: self.terms.iter().map(|(r, q)| (r.scale(k), q.clone())).collect() }
    }

    pub fn extend(&mut self, other: PartialFractions) {
        self.terms.extend(other.terms);
    }

    /// Rewrites poles from the variable m = 2n - 1 (or m = n) into n.
    fn in_n(&self, index: Index, p: usize) -> Vec<(BigComplex, BigComplex)> {
        match index {
            Index::All => self.terms.clone(),
            Index::Odd => {
                let half = BigReal::from_i64(1, p).div_i64(2);
                let one = BigComplex::from_real(BigReal::from_i64(1, p));
                self.terms.iter().map(|(r, q)| (r.scale(&half), (q + &one).scale(&half))).collect()
            }
        }
    }
}

/// sum over n >= 1 of sign(n) * sum_j r_j/(m(n) - q_j), real part.
pub fn rational_sum(pf: &PartialFractions, index: Index, sign: Sign, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    if pf.terms.is_empty() {
        return Ok(ctx.zero());
    }
    let p = ctx.bits();
    let terms = pf.in_n(index, p);
    let one = BigComplex::from_real(ctx.one());
    let half = ctx.ratio(1, 2);
    let mut acc = BigComplex::from_real(ctx.zero());
    match sign {
        Sign::Plain => {
            let total = terms.iter().fold(BigComplex::from_real(ctx.zero()), |a, (r, _)| &a + r);
            let size = terms.iter().map(|(r, _)| r.abs().log10_abs()).fold(f64::NEG_INFINITY, f64::max);
            if total.abs().log10_abs() > size - ctx.working_digits() as f64 + 5.0 {
                return Err(NumericError::Usage("rational part decays like 1/n and diverges".into()));
            }
            for (r, q) in &terms {
                acc = &acc - &(r * &digamma_complex(&(&one - q), ctx)?);
            }
        }
        Sign::Alternating => {
            for (r, q) in &terms {
                let a = digamma_complex(&(&one - &q.scale(&half)), ctx)?;
                let b = digamma_complex(&(&one - q).scale(&half), ctx)?;
                acc = &acc + &(r * &(&a - &b)).scale(&half);
            }
        }
    }
    Ok(acc.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn telescoping_one_over_n_n_plus_one() {
        // 1/(n(n+1)) sums to 1
        let ctx = PrecisionContext::new(30).unwrap();
        let poles = [BigComplex::from_real(ctx.zero()), BigComplex::from_real(ctx.int(-1))];
        let pf = PartialFractions::from_poles(&ctx.one(), 0, &poles).unwrap();
        let s = rational_sum(&pf, Index::All, Sign::Plain, &ctx).unwrap();
        assert!((s - ctx.one()).abs() < ctx.pow10(-30));
    }

    #[test]
    fn alternating_odd_reciprocals() {
        // sum (-1)^{n-1}/(2n-1) = pi/4, single pole at 0 in m
        let ctx = PrecisionContext::new(30).unwrap();
        let pf = PartialFractions::from_poles(&ctx.one(), 0, &[BigComplex::from_real(ctx.zero())]).unwrap();
        let s = rational_sum(&pf, Index::Odd, Sign::Alternating, &ctx).unwrap();
        assert!((s - ctx.pi().div_i64(4)).abs() < ctx.pow10(-30));
    }

    #[test]
    fn complex_poles_give_coth_sum() {
        // sum 1/(n^2 + 1) = (pi coth pi - 1)/2, poles +-i
        let ctx = PrecisionContext::new(30).unwrap();
        let poles = [BigComplex::imag(ctx.one()), BigComplex::imag(ctx.int(-1))];
        let pf = PartialFractions::from_poles(&ctx.one(), 0, &poles).unwrap();
        let s = rational_sum(&pf, Index::All, Sign::Plain, &ctx).unwrap();
        let want = (ctx.pi() * ctx.pi().coth().unwrap() - ctx.one()).div_i64(2);
        assert!((s - want).abs() < ctx.pow10(-30));
    }

    #[test]
    fn divergent_part_is_rejected() {
        let ctx = PrecisionContext::new(20).unwrap();
        let pf = PartialFractions::from_poles(&ctx.one(), 0, &[BigComplex::from_real(ctx.ratio(1, 2))]).unwrap();
        assert!(rational_sum(&pf, Index::All, Sign::Plain, &ctx).is_err());
    }
}
