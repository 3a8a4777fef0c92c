//! Small constructors shared by the section tables.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::{Constraint, Evaluation, Identity, ParamKind, ParamSpec, Params, Variant};
use crate::exact::{int, pow2, zeta_even_coefficient, ClosedForm, Rational};
use crate::numeric::{BigComplex, BigReal, NumericError, PrecisionContext};
use crate::series::{HyperSum, Kernel, RationalWeight};

pub(crate) const PRINTED: &str = "printed";

impl Identity {
    pub(crate) fn new(id: &'static str, section: &'static str, anchor: &'static str) -> Self {
        Identity { id, section, anchor, params: vec![], constraints: vec![], defaults: vec![], variants: vec![] }
    }

    pub(crate) fn rational(mut self, name: &'static str) -> Self {
        self.params.push(ParamSpec { name, kind: ParamKind::Rational });
        self
    }

    pub(crate) fn integer(mut self, name: &'static str, min: i64) -> Self {
        self.params.push(ParamSpec { name, kind: ParamKind::Integer(min) });
        self
    }

    pub(crate) fn require(mut self, text: &'static str, holds: fn(&Params) -> bool) -> Self {
        self.constraints.push(Constraint { text, holds });
        self
    }

    pub(crate) fn defaults(mut self, sets: Vec<Params>) -> Self {
        self.defaults = sets;
        self
    }

    pub(crate) fn printed<F>(self, f: F) -> Self
    where
        F: Fn(&Params, &PrecisionContext) -> Result<Evaluation, NumericError> + Send + Sync + 'static,
    {
        self.variant(PRINTED, "as displayed", f)
    }

    pub(crate) fn variant<F>(mut self, label: &'static str, rationale: &'static str, f: F) -> Self
    where
        F: Fn(&Params, &PrecisionContext) -> Result<Evaluation, NumericError> + Send + Sync + 'static,
    {
        self.variants.push(Variant { label, rationale, eval: Box::new(f) });
        self
    }

    /// No parameters: a single empty default.
    pub(crate) fn fixed(mut self) -> Self {
        self.defaults = vec![Params::new()];
        self
    }
}

pub(crate) fn params(pairs: &[(&str, Rational)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Cartesian product of per-name value lists.
pub(crate) fn grid(axes: &[(&str, Vec<Rational>)]) -> Vec<Params> {
    let mut out = vec![Params::new()];
    for (name, values) in axes {
        out = out
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.insert(name.to_string(), v.clone());
                    q
                })
            })
            .collect();
    }
    out
}

pub(crate) fn ints(r: std::ops::RangeInclusive<i64>) -> Vec<Rational> {
    r.map(int).collect()
}

pub(crate) fn q(p: &Params, name: &str) -> Rational {
    p.get(name).cloned().unwrap_or_else(|| panic!("parameter `{name}` resolved before evaluation"))
}

pub(crate) fn k(p: &Params, name: &str) -> u32 {
    q(p, name).to_integer().to_u32().expect("integer parameter in range")
}

pub(crate) fn positive(p: &Params, names: &[&str]) -> bool {
    names.iter().all(|n| p.get(*n).is_some_and(|v| v.is_positive()))
}

pub(crate) fn non_integer(r: &Rational) -> bool {
    !r.is_integer()
}

/// r is not of the form (2j+1)/2.
pub(crate) fn not_half_odd(r: &Rational) -> bool {
    let t = r * int(2);
    !(t.is_integer() && t.to_integer().is_odd())
}

pub(crate) fn sgn(n: u32) -> Rational {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

pub(crate) fn sgn_i(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// zeta(s) for s >= 2 as a closed form.
pub(crate) fn zeta(s: u32) -> ClosedForm {
    if s.is_multiple_of(2) {
        ClosedForm::pi_pow(s as i64).scale(&zeta_even_coefficient(s as u64 / 2))
    } else {
        ClosedForm::zeta_odd(s)
    }
}

/// (1 - 2^{1-s}) zeta(s), s >= 2.
pub(crate) fn zetabar(s: u32) -> ClosedForm {
    zeta(s).scale(&(Rational::one() - pow2(1 - s as i64)))
}

/// Compositions of `total` into `parts` positive parts, in lexicographic order.
pub(crate) fn compositions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub(crate) fn r(ctx: &PrecisionContext, v: &Rational) -> BigReal {
    ctx.rational(v)
}

/// pi * v
pub(crate) fn pi_times(ctx: &PrecisionContext, v: &Rational) -> BigReal {
    ctx.pi() * ctx.rational(v)
}

pub(crate) fn real_poles(v: &[BigReal]) -> Vec<BigComplex> {
    v.iter().map(|x| BigComplex::from_real(x.clone())).collect()
}

/// Poles at +-x.
pub(crate) fn pm(x: &BigReal) -> Vec<BigComplex> {
    real_poles(&[x.clone(), -x])
}

/// Poles at +-ix.
pub(crate) fn pm_i(x: &BigReal) -> Vec<BigComplex> {
    let z = BigReal::zero(x.precision());
    vec![BigComplex::new(z.clone(), x.clone()), BigComplex::new(z, -x)]
}

pub(crate) fn with_zero(mut poles: Vec<BigComplex>, ctx: &PrecisionContext) -> Vec<BigComplex> {
    poles.insert(0, BigComplex::from_real(ctx.zero()));
    poles
}

pub(crate) fn weight(scale: BigReal, exponent: u32, poles: Vec<BigComplex>) -> RationalWeight {
    RationalWeight { scale, exponent, poles }
}

pub(crate) fn power(kernel: Kernel, arg: BigReal, s: u32) -> HyperSum {
    HyperSum::power(kernel, arg, s)
}

pub(crate) fn rational(kernel: Kernel, arg: BigReal, w: RationalWeight) -> HyperSum {
    HyperSum::rational(kernel, arg, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(4, 3).len(), 3);
        assert!(compositions(1, 2).is_empty());
    }

    #[test]
    fn half_odd() {
        assert!(!not_half_odd(&rat(3, 2)));
        assert!(not_half_odd(&rat(1, 1)));
        assert!(not_half_odd(&rat(1, 3)));
    }

    #[test]
    fn grid_shape() {
        let g = grid(&[("x", vec![int(1), int(2)]), ("k", ints(1..=3))]);
        assert_eq!(g.len(), 6);
    }
}
