use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{fmt_rational, int, pow2, Rational};

/// The closed set of constants a closed form may mention.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Pi,
    Two,
    LogTwo,
    Catalan,
    EulerGamma,
    /// zeta(m) for odd m >= 3.
    ZetaOdd(u32),
    GammaThreeQuarters,
    /// e^{pi q}
    ExpPi(Rational),
    /// e^{pi sqrt(2) q}
    ExpPiSqrt2(Rational),
}

/// Product of atoms with rational exponents, kept canonical:
/// no zero exponents, at most one exponential atom of each kind (exponent 1),
/// and powers of two reduced to a fractional exponent in (0, 1).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<Atom, Rational>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Atom, &Rational)> {
        self.0.iter()
    }

    pub fn exponent(&self, atom: &Atom) -> Rational {
        self.0.get(atom).cloned().unwrap_or_else(Rational::zero)
    }

    /// Canonical monomial of a raw factor list, plus the rational it sheds.
    pub fn canonical<I: IntoIterator<Item = (Atom, Rational)>>(factors: I) -> (Rational, Monomial) {
        let mut raw: BTreeMap<Atom, Rational> = BTreeMap::new();
        let mut exp_pi = Rational::zero();
        let mut exp_pi_sqrt2 = Rational::zero();
        for (a, e) in factors {
            match a {
                Atom::ExpPi(q) => exp_pi += q * e,
                Atom::ExpPiSqrt2(q) => exp_pi_sqrt2 += q * e,
                a => *raw.entry(a).or_insert_with(Rational::zero) += e,
            }
        }
        let mut coef = int(1);
        if let Some(e) = raw.remove(&Atom::Two) {
            let whole = e.floor();
            coef = pow2(whole.to_integer().try_into().expect("power of two exponent fits i64"));
            let frac = e - whole;
            if !frac.is_zero() {
                raw.insert(Atom::Two, frac);
            }
        }
        raw.retain(|_, e| !e.is_zero());
        if !exp_pi.is_zero() {
            raw.insert(Atom::ExpPi(exp_pi), int(1));
        }
        if !exp_pi_sqrt2.is_zero() {
            raw.insert(Atom::ExpPiSqrt2(exp_pi_sqrt2), int(1));
        }
        (coef, Monomial(raw))
    }

    pub fn mul(&self, other: &Monomial) -> (Rational, Monomial) {
        Self::canonical(self.0.iter().chain(other.0.iter()).map(|(a, e)| (a.clone(), e.clone())))
    }

    pub fn pow(&self, n: &Rational) -> (Rational, Monomial) {
        Self::canonical(self.0.iter().map(|(a, e)| (a.clone(), e * n)))
    }

    /// True when the only atom is pi.
    pub fn is_pi_power(&self) -> bool {
        self.0.keys().all(|a| *a == Atom::Pi)
    }
}

/// Finite Q-linear combination of monomials; equality is structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedForm {
    terms: BTreeMap<Monomial, Rational>,
}

impl ClosedForm {
    pub fn zero() -> Self {
        ClosedForm { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::rational(int(1))
    }

    pub fn rational(r: Rational) -> Self {
        let mut cf = Self::zero();
        cf.push(Monomial::one(), r);
        cf
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(int(n))
    }

    pub fn atom(a: Atom) -> Self {
        Self::term(int(1), [(a, int(1))])
    }

    pub fn pi_pow(n: i64) -> Self {
        Self::term(int(1), [(Atom::Pi, int(n))])
    }

    pub fn zeta_odd(m: u32) -> Self {
        assert!(m >= 3 && m % 2 == 1, "zeta_odd needs odd m >= 3");
        Self::atom(Atom::ZetaOdd(m))
    }

    pub fn exp_pi(q: Rational) -> Self {
        Self::atom(Atom::ExpPi(q))
    }

    /// coef * product of atom^exponent, canonicalised.
    pub fn term<I: IntoIterator<Item = (Atom, Rational)>>(coef: Rational, factors: I) -> Self {
        let (c, m) = Monomial::canonical(factors);
        let mut cf = Self::zero();
        cf.push(m, coef * c);
        cf
    }

    fn push(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(r) when the form is a plain rational.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Coefficient of a given monomial (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        ClosedForm { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Re-canonicalises every monomial; a no-op on values built through the API.
    pub fn canonical(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (k, m) = Monomial::canonical(m.0.iter().map(|(a, e)| (a.clone(), e.clone())));
            out.push(m, c * k);
        }
        out
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.terms.keys().flat_map(|m| m.0.keys())
    }

    pub fn only_pi(&self) -> bool {
        self.terms.keys().all(Monomial::is_pi_power)
    }
}

impl Add<&ClosedForm> for &ClosedForm {
    type Output = ClosedForm;
    fn add(self, rhs: &ClosedForm) -> ClosedForm {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.push(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &ClosedForm {
    type Output = ClosedForm;
    fn neg(self) -> ClosedForm {
        self.scale(&int(-1))
    }
}

impl Neg for ClosedForm {
    type Output = ClosedForm;
    fn neg(self) -> ClosedForm {
        self.scale(&int(-1))
    }
}

impl Sub<&ClosedForm> for &ClosedForm {
    type Output = ClosedForm;
    fn sub(self, rhs: &ClosedForm) -> ClosedForm {
        self + &(-rhs)
    }
}

impl Mul<&ClosedForm> for &ClosedForm {
    type Output = ClosedForm;
    fn mul(self, rhs: &ClosedForm) -> ClosedForm {
        let mut out = ClosedForm::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let (k, m) = ma.mul(mb);
                out.push(m, ca * cb * k);
            }
        }
        out
    }
}

macro_rules! owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ClosedForm> for ClosedForm {
            type Output = ClosedForm;
            fn $m(self, rhs: ClosedForm) -> ClosedForm {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ClosedForm> for ClosedForm {
            type Output = ClosedForm;
            fn $m(self, rhs: &ClosedForm) -> ClosedForm {
                (&self).$m(rhs)
            }
        }
        impl $tr<ClosedForm> for &ClosedForm {
            type Output = ClosedForm;
            fn $m(self, rhs: ClosedForm) -> ClosedForm {
                self.$m(&rhs)
            }
        }
    };
}

owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);

impl AddAssign<&ClosedForm> for ClosedForm {
    fn add_assign(&mut self, rhs: &ClosedForm) {
        for (m, c) in &rhs.terms {
            self.push(m.clone(), c.clone());
        }
    }
}

impl AddAssign<ClosedForm> for ClosedForm {
    fn add_assign(&mut self, rhs: ClosedForm) {
        *self += &rhs;
    }
}

impl std::iter::Sum for ClosedForm {
    fn sum<I: Iterator<Item = ClosedForm>>(iter: I) -> ClosedForm {
        iter.fold(ClosedForm::zero(), |a, b| a + b)
    }
}

impl From<Rational> for ClosedForm {
    fn from(r: Rational) -> Self {
        ClosedForm::rational(r)
    }
}

fn fmt_exponent(e: &Rational) -> String {
    if e.is_integer() && e.is_positive() {
        e.numer().to_string()
    } else {
        format!("({})", fmt_rational(e))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Pi => f.write_str("pi"),
            Atom::Two => f.write_str("2"),
            Atom::LogTwo => f.write_str("log2"),
            Atom::Catalan => f.write_str("catalan"),
            Atom::EulerGamma => f.write_str("euler_gamma"),
            Atom::ZetaOdd(m) => write!(f, "zeta({m})"),
            Atom::GammaThreeQuarters => f.write_str("gamma(3/4)"),
            Atom::ExpPi(q) => write!(f, "exp({}*pi)", fmt_rational(q)),
            Atom::ExpPiSqrt2(q) => write!(f, "exp({}*pi*sqrt2)", fmt_rational(q)),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, e) in &self.0 {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e.is_one() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}^{}", fmt_exponent(e))?;
            }
        }
        Ok(())
    }
}

/// Canonical text, e.g. `7/180*pi^4` or `1/6*pi + 1/4*log2`; `0` when empty.
impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// Bare exponent check used by the parser for `2^e` factors.
pub(crate) fn two_power(e: Rational) -> (Rational, Monomial) {
    Monomial::canonical([(Atom::Two, e)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn additive_inverse_is_empty() {
        let a = ClosedForm::pi_pow(4).scale(&rat(7, 180)) + ClosedForm::atom(Atom::LogTwo);
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn monomial_product() {
        let z2 = ClosedForm::pi_pow(2).scale(&rat(1, 6));
        assert_eq!(&z2 * &z2, ClosedForm::pi_pow(4).scale(&rat(1, 36)));
    }

    #[test]
    fn exponentials_merge() {
        let e = ClosedForm::exp_pi(rat(1, 12));
        assert_eq!(&e * &e, ClosedForm::exp_pi(rat(1, 6)));
        let inv = ClosedForm::exp_pi(rat(-1, 12));
        assert_eq!(&e * &inv, ClosedForm::one());
    }

    #[test]
    fn powers_of_two_fold() {
        let a = ClosedForm::term(int(1), [(Atom::Two, rat(9, 4))]);
        let b = ClosedForm::term(int(4), [(Atom::Two, rat(1, 4))]);
        assert_eq!(a, b);
        let c = ClosedForm::term(int(3), [(Atom::Two, rat(-1, 2))]);
        assert_eq!(c.to_string(), "3/2*2^(1/2)");
    }

    #[test]
    fn rendering() {
        assert_eq!(ClosedForm::pi_pow(4).scale(&rat(7, 180)).to_string(), "7/180*pi^4");
        let mixed = ClosedForm::atom(Atom::LogTwo).scale(&rat(1, 4)) + ClosedForm::atom(Atom::Pi).scale(&rat(1, 6));
        assert_eq!(mixed.to_string(), "1/6*pi + 1/4*log2");
        assert_eq!(ClosedForm::zero().to_string(), "0");
        let neg = ClosedForm::integer(-2) - ClosedForm::pi_pow(-1);
        assert_eq!(neg.to_string(), "-2 - pi^(-1)");
    }
}
