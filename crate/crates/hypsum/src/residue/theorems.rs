//! The five two-scale theorems: each pairs a trigonometric kernel in x with a
//! hyperbolic one in y over the base 1/z^p. Summing all residues to zero, the
//! poles off the origin produce the series side, scaled by a family factor c,
//! so the closed side is -Res_0 / c.

use num_traits::Signed;

use super::{product_residue, Biv, KernelKind};
use crate::exact::{
    bernoulli, euler_number, factorial, int, pow2, zeta_even_coefficient, ClosedForm, ExactError, Rational,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// cot(pi x z) coth(pi y z)
    CotCoth,
    /// csc(pi x z) csch(pi y z)
    CscCsch,
    /// cot(pi x z) csch(pi y z)
    CotCsch,
    /// tan(pi x z) tanh(pi y z)
    TanTanh,
    /// sec(pi x z) sech(pi y z)
    SecSech,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [Theorem::CotCoth, Theorem::CscCsch, Theorem::CotCsch, Theorem::TanTanh, Theorem::SecSech];

    /// Accepts "2.1" or "thm2.1".
    pub fn parse(s: &str) -> Option<Theorem> {
        let t = s.trim().trim_start_matches("thm");
        Theorem::ALL.into_iter().find(|th| th.number() == t)
    }

    pub fn number(self) -> &'static str {
        match self {
            Theorem::CotCoth => "2.1",
            Theorem::CscCsch => "2.2",
            Theorem::CotCsch => "2.3",
            Theorem::TanTanh => "2.4",
            Theorem::SecSech => "2.5",
        }
    }

    pub fn id(self) -> String {
        format!("thm{}", self.number())
    }

    pub fn min_k(self) -> u32 {
        match self {
            Theorem::CotCoth | Theorem::TanTanh => 2,
            Theorem::CscCsch | Theorem::CotCsch => 1,
            Theorem::SecSech => 0,
        }
    }

    fn kernels(self) -> (KernelKind, KernelKind) {
        use KernelKind::*;
        match self {
            Theorem::CotCoth => (Cot, Coth),
            Theorem::CscCsch => (Csc, Csch),
            Theorem::CotCsch => (Cot, Csch),
            Theorem::TanTanh => (Tan, Tanh),
            Theorem::SecSech => (Sec, Sech),
        }
    }

    fn pole_order(self, k: u32) -> i32 {
        match self {
            Theorem::SecSech => 2 * k as i32 + 1,
            _ => 2 * k as i32 - 1,
        }
    }

    /// -1/c as (rational, x-shift, y-shift).
    //
    // At z = +-n/x the cot kernel has residue 1/x, and the two signs add for
    // odd p: 2 x^{p-1} pi K(pi n y/x)/n^p. Against the printed normalisation
    // x^{2k-1} y this gives c = 2/(xy); csc flips the sign through (-1)^n
    // folded into the alternating series. tan and sec have their poles at the
    // half-odd points (2n-1)/(2x), which brings in the powers of two.
    fn neg_inverse_factor(self, k: u32) -> (Rational, i32, i32) {
        match self {
            Theorem::CotCoth | Theorem::CotCsch => (Rational::new((-1).into(), 2.into()), 1, 1),
            Theorem::CscCsch => (Rational::new(1.into(), 2.into()), 1, 1),
            Theorem::TanTanh => (pow2(-2 * k as i64), 1, 1),
            Theorem::SecSech => (pow2(-2 * k as i64 - 2), 0, 0),
        }
    }

    fn check_k(self, k: u32) -> Result<(), ExactError> {
        if k < self.min_k() {
            return Err(ExactError::Usage(format!("{} needs k >= {}, got {k}", self.id(), self.min_k())));
        }
        Ok(())
    }
}

/// Closed side of the theorem at k, derived from the residue at the origin.
pub fn derive_identity(th: Theorem, k: u32) -> Result<Biv, ExactError> {
    th.check_k(k)?;
    let (k1, k2) = th.kernels();
    let res = product_residue(k1, k2, th.pole_order(k))?;
    let (r, a, b) = th.neg_inverse_factor(k);
    Ok(res.scale(&r).shift(a, b))
}

fn zeta_cf(k: u32) -> ClosedForm {
    ClosedForm::pi_pow(2 * k as i64).scale(&zeta_even_coefficient(k as u64))
}

fn zetabar_cf(k: u32) -> ClosedForm {
    zeta_cf(k).scale(&(int(1) - pow2(1 - 2 * k as i64)))
}

fn sgn(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// Right-hand side as printed, built directly from its zeta, Bernoulli and
/// Euler coefficients.
pub fn theorem_rhs(th: Theorem, k: u32) -> Result<Biv, ExactError> {
    th.check_k(k)?;
    let kk = 2 * k as i32;
    let mut out = Biv::zero();
    let conv = |f: &dyn Fn(u32, u32) -> ClosedForm, lo: u32| -> Biv {
        let mut b = Biv::zero();
        for k1 in lo..=k.saturating_sub(lo) {
            let k2 = k - k1;
            if k2 < lo {
                continue;
            }
            b.add_term(2 * k1 as i32, 2 * k2 as i32, f(k1, k2));
        }
        b
    };
    match th {
        Theorem::CotCoth => {
            out.add_term(kk, 0, zeta_cf(k));
            out.add_term(0, kk, zeta_cf(k).scale(&sgn(k)));
            out = out.add(&conv(&|a, b| (&zeta_cf(a) * &zeta_cf(b)).scale(&(int(-2) * sgn(b))), 1));
        }
        Theorem::CscCsch => {
            out.add_term(kk, 0, zetabar_cf(k));
            out.add_term(0, kk, zetabar_cf(k).scale(&sgn(k)));
            out = out.add(&conv(&|a, b| (&zetabar_cf(a) * &zetabar_cf(b)).scale(&(int(2) * sgn(b))), 1));
        }
        Theorem::CotCsch => {
            out.add_term(kk, 0, zeta_cf(k));
            out.add_term(0, kk, zetabar_cf(k).scale(&-sgn(k)));
            out = out.add(&conv(&|a, b| (&zeta_cf(a) * &zetabar_cf(b)).scale(&(int(2) * sgn(b))), 1));
        }
        Theorem::TanTanh => {
            let c = |n: u32| -> Rational {
                (pow2(2 * n as i64) - int(1)) / Rational::from_integer(factorial(2 * n as u64))
            };
            out = conv(
                &|a, b| {
                    let r = c(a) * c(b) * bernoulli(2 * a as u64).abs() * bernoulli(2 * b as u64);
                    ClosedForm::pi_pow(kk as i64).scale(&r)
                },
                1,
            );
        }
        Theorem::SecSech => {
            out = conv(
                &|a, b| {
                    let r = Rational::from_integer(euler_number(2 * a as u64).abs() * euler_number(2 * b as u64))
                        / Rational::from_integer(factorial(2 * a as u64) * factorial(2 * b as u64));
                    ClosedForm::pi_pow(kk as i64 + 2).scale(&(r * pow2(-(kk as i64) - 2)))
                },
                0,
            );
        }
    }
    Ok(out)
}

/// Compares the cot-coth residue at p = 2k-1 with the bracket read literally
/// from its displayed case split (single sums over 2k = p+1, double over
/// 2k1 + 2k2 = p+1).
pub fn literal_bracket_agrees(k: u32) -> Result<bool, ExactError> {
    if k < 1 {
        return Err(ExactError::Usage("k must be positive".into()));
    }
    let p = 2 * k as i32 - 1;
    let direct = product_residue(KernelKind::Cot, KernelKind::Coth, p)?;
    let mut lit = Biv::zero();
    if (p + 1) % 2 == 0 {
        let h = ((p + 1) / 2) as u32;
        lit.add_term(0, 2 * h as i32, zeta_cf(h).scale(&(int(-2) * sgn(h))));
        lit.add_term(2 * h as i32, 0, zeta_cf(h).scale(&int(-2)));
        for k1 in 1..h {
            let k2 = h - k1;
            lit.add_term(2 * k1 as i32, 2 * k2 as i32, (&zeta_cf(k1) * &zeta_cf(k2)).scale(&(int(4) * sgn(k2))));
        }
    }
    Ok(direct == lit.shift(-1, -1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn derived_equals_printed_for_small_k() {
        for th in Theorem::ALL {
            for k in th.min_k()..=6 {
                assert_eq!(derive_identity(th, k).unwrap(), theorem_rhs(th, k).unwrap(), "{} k = {k}", th.id());
            }
        }
    }

    #[test]
    fn cot_coth_at_two() {
        // x^4 zeta(4) + y^4 zeta(4) + 2 zeta(2)^2 x^2 y^2
        let d = derive_identity(Theorem::CotCoth, 2).unwrap();
        let mut want = Biv::zero();
        want.add_term(4, 0, ClosedForm::pi_pow(4).scale(&rat(1, 90)));
        want.add_term(0, 4, ClosedForm::pi_pow(4).scale(&rat(1, 90)));
        want.add_term(2, 2, ClosedForm::pi_pow(4).scale(&rat(1, 18)));
        assert_eq!(d, want);
    }

    #[test]
    fn tan_tanh_at_two() {
        let d = derive_identity(Theorem::TanTanh, 2).unwrap();
        assert_eq!(d, Biv::monomial(2, 2, ClosedForm::pi_pow(4).scale(&rat(1, 16))));
    }

    #[test]
    fn sec_sech_at_zero() {
        let d = derive_identity(Theorem::SecSech, 0).unwrap();
        assert_eq!(d, Biv::constant(ClosedForm::pi_pow(2).scale(&rat(1, 4))));
    }

    #[test]
    fn out_of_range_k() {
        assert!(derive_identity(Theorem::CotCoth, 1).is_err());
        assert!(derive_identity(Theorem::CscCsch, 0).is_err());
    }

    #[test]
    fn homogeneous_of_degree_two_k() {
        for th in Theorem::ALL {
            for k in th.min_k()..=6 {
                for (&(i, j), _) in derive_identity(th, k).unwrap().terms() {
                    assert_eq!(i + j, 2 * k as i32, "{} k = {k}", th.id());
                }
            }
        }
    }

    #[test]
    fn literal_reading_agrees() {
        for k in 1..=6 {
            assert!(literal_bracket_agrees(k).unwrap());
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!(Theorem::parse("2.3"), Some(Theorem::CotCsch));
        assert_eq!(Theorem::parse("thm2.5"), Some(Theorem::SecSech));
        assert_eq!(Theorem::parse("2.6"), None);
    }
}
