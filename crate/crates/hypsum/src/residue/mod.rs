//! Exact Laurent expansions at z = 0 of kernel products, and the residue
//! there. Coefficients are polynomials in two formal scales x, y (negative
//! powers allowed) with closed-form constants.

mod theorems;

pub use theorems::{derive_identity, literal_bracket_agrees, theorem_rhs, Theorem};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::exact::{bernoulli, euler_number, factorial, int, pow2, zeta_even_coefficient, ClosedForm, ExactError, Rational};

/// sum c_{ij} x^i y^j.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Biv(BTreeMap<(i32, i32), ClosedForm>);

impl Biv {
    pub fn zero() -> Self {
        Biv(BTreeMap::new())
    }

    pub fn monomial(i: i32, j: i32, c: ClosedForm) -> Self {
        let mut b = Biv::zero();
        b.add_term(i, j, c);
        b
    }

    pub fn constant(c: ClosedForm) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn add_term(&mut self, i: i32, j: i32, c: ClosedForm) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry((i, j)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &ClosedForm)> {
        self.0.iter()
    }

    pub fn add(&self, o: &Biv) -> Biv {
        let mut out = self.clone();
        for (&(i, j), c) in &o.0 {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Biv) -> Biv {
        let mut out = Biv::zero();
        for (&(i, j), a) in &self.0 {
            for (&(k, l), b) in &o.0 {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Biv {
        let mut out = Biv::zero();
        for (&(i, j), c) in &self.0 {
            out.add_term(i, j, c.scale(r));
        }
        out
    }

    pub fn scale_cf(&self, k: &ClosedForm) -> Biv {
        let mut out = Biv::zero();
        for (&(i, j), c) in &self.0 {
            out.add_term(i, j, c * k);
        }
        out
    }

    /// Multiplies by x^a y^b.
    pub fn shift(&self, a: i32, b: i32) -> Biv {
        Biv(self.0.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())).collect())
    }

    /// Instantiates the scales; x and y must be nonzero when a negative power occurs.
    pub fn at(&self, x: &Rational, y: &Rational) -> Result<ClosedForm, ExactError> {
        let mut out = ClosedForm::zero();
        for (&(i, j), c) in &self.0 {
            out += c.scale(&(rpow(x, i)? * rpow(y, j)?));
        }
        Ok(out)
    }
}

fn rpow(r: &Rational, e: i32) -> Result<Rational, ExactError> {
    if e < 0 && r == &int(0) {
        return Err(ExactError::Usage("scale must be nonzero".into()));
    }
    let base = if e < 0 { r.recip() } else { r.clone() };
    Ok((0..e.unsigned_abs()).fold(int(1), |acc, _| acc * &base))
}

impl fmt::Display for Biv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (n, (&(i, j), c)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (v, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Truncated Laurent series in z: coefficient of z^{min_exp + i} is coeffs[i].
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentSeries {
    pub min_exp: i32,
    pub coeffs: Vec<Biv>,
}

impl LaurentSeries {
    /// Highest exponent that is known exactly.
    pub fn max_exp(&self) -> i32 {
        self.min_exp + self.coeffs.len() as i32 - 1
    }

    pub fn coefficient(&self, e: i32) -> Result<&Biv, ExactError> {
        if e < self.min_exp || e > self.max_exp() {
            return Err(ExactError::Usage(format!(
                "z^{e} lies outside the stored window [{}, {}]",
                self.min_exp,
                self.max_exp()
            )));
        }
        Ok(&self.coeffs[(e - self.min_exp) as usize])
    }

    /// Truncated product; the result is exact up to the smaller of the two
    /// operand-limited exponents.
    pub fn multiply(&self, o: &LaurentSeries) -> LaurentSeries {
        let min = self.min_exp + o.min_exp;
        let max = (self.max_exp() + o.min_exp).min(o.max_exp() + self.min_exp);
        let len = (max - min + 1).max(0) as usize;
        let mut coeffs = vec![Biv::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j < len && !a.is_zero() && !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        LaurentSeries { min_exp: min, coeffs }
    }

    /// Divides by z^p.
    pub fn scale_power(&self, p: i32) -> LaurentSeries {
        LaurentSeries { min_exp: self.min_exp - p, coeffs: self.coeffs.clone() }
    }

    pub fn residue_at_zero(&self) -> Result<Biv, ExactError> {
        self.coefficient(-1).cloned()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    Cot,
    Csc,
    Coth,
    Csch,
    Tan,
    Tanh,
    Sec,
    Sech,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

fn scaled_power(var: Var, e: i32) -> (i32, i32) {
    match var {
        Var::X => (e, 0),
        Var::Y => (0, e),
    }
}

fn pi_term(var: Var, e: i32, coef: Rational, pi_exp: i64) -> Biv {
    let (i, j) = scaled_power(var, e);
    Biv::monomial(i, j, ClosedForm::pi_pow(pi_exp).scale(&coef))
}

fn alt(k: u64) -> Rational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// pi * kernel(pi s z) at z = 0, exact through z^{order}, with s the formal
/// scale `var`.
pub fn expand_at_zero(kind: KernelKind, var: Var, order: i32) -> LaurentSeries {
    use KernelKind::*;
    let min_exp = match kind {
        Cot | Csc | Coth | Csch => -1,
        _ => 0,
    };
    let len = (order - min_exp + 1).max(0) as usize;
    let mut coeffs = vec![Biv::zero(); len];
    let mut put = |e: i32, b: Biv| {
        if e >= min_exp && e <= order {
            coeffs[(e - min_exp) as usize] = b;
        }
    };
    match kind {
        Cot | Csc | Coth | Csch => {
            put(-1, pi_term(var, -1, int(1), 0));
            // 1/u -+ 2 sum c_k zeta(2k) u^{2k-1}
            for k in 1u64.. {
                let e = 2 * k as i32 - 1;
                if e > order {
                    break;
                }
                let z = zeta_even_coefficient(k);
                let zbar = &z * (int(1) - pow2(1 - 2 * k as i64));
                let c = match kind {
                    Cot => -int(2) * z,
                    Csc => int(2) * zbar,
                    Coth => -int(2) * alt(k) * z,
                    _ => int(2) * alt(k) * zbar,
                };
                put(e, pi_term(var, e, c, 2 * k as i64));
            }
        }
        Tan | Tanh => {
            // tan t = sum 2^{2n}(2^{2n}-1)|B_2n|/(2n)! t^{2n-1}; tanh uses B_2n
            for n in 1u64.. {
                let e = 2 * n as i32 - 1;
                if e > order {
                    break;
                }
                let b = bernoulli(2 * n);
                let b = if kind == Tan { b.abs() } else { b };
                let c = pow2(2 * n as i64) * (pow2(2 * n as i64) - int(1)) * b / Rational::from_integer(factorial(2 * n));
                put(e, pi_term(var, e, c, 2 * n as i64));
            }
        }
        Sec | Sech => {
            for n in 0u64.. {
                let e = 2 * n as i32;
                if e > order {
                    break;
                }
                let en: BigInt = euler_number(2 * n);
                let en = if kind == Sec { en.abs() } else { en };
                let c = Rational::from_integer(en) / Rational::from_integer(factorial(2 * n));
                put(e, pi_term(var, e, c, 2 * n as i64 + 1));
            }
        }
    }
    LaurentSeries { min_exp, coeffs }
}

/// Res at 0 of (pi K1(pi x z))(pi K2(pi y z)) / z^p.
pub fn product_residue(k1: KernelKind, k2: KernelKind, p: i32) -> Result<Biv, ExactError> {
    let order = p + 3;
    let f = expand_at_zero(k1, Var::X, order).multiply(&expand_at_zero(k2, Var::Y, order));
    f.scale_power(p).residue_at_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::numeric::PrecisionContext;

    #[test]
    fn cot_expansion_coefficients() {
        let s = expand_at_zero(KernelKind::Cot, Var::X, 4);
        assert_eq!(s.coefficient(-1).unwrap(), &Biv::monomial(-1, 0, ClosedForm::one()));
        // -2 zeta(2) x = -(pi^2/3) x
        assert_eq!(s.coefficient(1).unwrap(), &Biv::monomial(1, 0, ClosedForm::pi_pow(2).scale(&rat(-1, 3))));
        assert!(s.coefficient(2).unwrap().is_zero());
    }

    #[test]
    fn csch_and_sech_low_terms() {
        // pi csch(pi y z): z^1 coefficient -2 zetabar(2) y = -(pi^2/6) y
        let s = expand_at_zero(KernelKind::Csch, Var::Y, 4);
        assert_eq!(s.coefficient(1).unwrap(), &Biv::monomial(0, 1, ClosedForm::pi_pow(2).scale(&rat(-1, 6))));
        // pi sech(pi y z) = pi - pi^3 y^2 z^2/2 + ...
        let s = expand_at_zero(KernelKind::Sech, Var::Y, 2);
        assert_eq!(s.coefficient(0).unwrap(), &Biv::constant(ClosedForm::pi_pow(1)));
        assert_eq!(s.coefficient(2).unwrap(), &Biv::monomial(0, 2, ClosedForm::pi_pow(3).scale(&rat(-1, 2))));
    }

    #[test]
    fn reciprocal_squares() {
        let a = LaurentSeries { min_exp: -1, coeffs: vec![Biv::constant(ClosedForm::one())] };
        let b = a.multiply(&a);
        assert_eq!(b.min_exp, -2);
        assert_eq!(b.coeffs.len(), 1);
        assert_eq!(a.residue_at_zero().unwrap(), Biv::constant(ClosedForm::one()));
        assert!(b.residue_at_zero().is_err());
    }

    #[test]
    fn shift_moves_residue_slot() {
        let f = expand_at_zero(KernelKind::Cot, Var::X, 6).multiply(&expand_at_zero(KernelKind::Coth, Var::Y, 6));
        let bracket = f.coefficient(2).unwrap().clone();
        assert_eq!(f.scale_power(3).residue_at_zero().unwrap(), bracket);
    }

    #[test]
    fn cot_series_matches_numeric_value() {
        let ctx = PrecisionContext::new(30).unwrap();
        let s = expand_at_zero(KernelKind::Cot, Var::X, 8);
        let z = ctx.ratio(1, 100);
        let mut acc = ctx.zero();
        for (i, c) in s.coeffs.iter().enumerate() {
            let v = c.at(&int(1), &int(1)).unwrap().eval(&ctx).unwrap();
            acc += v * z.powi_signed(s.min_exp as i64 + i as i64).unwrap();
        }
        let pz = ctx.pi() * &z;
        let want = ctx.pi() * pz.cot().unwrap();
        // first omitted term is -2 zeta(10) z^9 ~ 2e-18
        assert!((acc - want).abs() < ctx.pow10(-17));
    }

    #[test]
    fn odd_slots_vanish_for_even_brackets() {
        for (k1, k2) in [(KernelKind::Cot, KernelKind::Coth), (KernelKind::Tan, KernelKind::Tanh)] {
            let f = expand_at_zero(k1, Var::X, 10).multiply(&expand_at_zero(k2, Var::Y, 10));
            for e in f.min_exp..=f.max_exp() {
                if e.rem_euclid(2) == 1 {
                    assert!(f.coefficient(e).unwrap().is_zero(), "z^{e}");
                }
            }
        }
    }
}
