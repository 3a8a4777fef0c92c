use super::build::*;
use super::{Evaluation, Identity, Params};
use crate::exact::{int, rat, Atom, ClosedForm, Rational};
use crate::numeric::{BigReal, NumericError, PrecisionContext};
use crate::series::{infinite_product, log_product, sum_hyper, Kernel, ProductSpec};
use crate::special::{constant, ConstId};

/// 1 + sign e^{-(slope n - offset)} with slope and offset in units of pi
/// (times sqrt 2 when `root2`).
#[derive(Clone, Copy)]
struct Family {
    sign: i32,
    slope: i64,
    offset: i64,
    root2: bool,
}

impl Family {
    fn spec(self, ctx: &PrecisionContext) -> Result<ProductSpec<'static>, NumericError> {
        let unit = if self.root2 { ctx.pi() * ctx.int(2).sqrt()? } else { ctx.pi() };
        Ok(ProductSpec::exp_family(self.sign, unit.mul_i64(self.slope), unit.mul_i64(self.offset)))
    }
}

fn product_entry(id: &'static str, anchor: &'static str, f: Family, closed: fn() -> ClosedForm) -> Identity {
    Identity::new(id, "6", anchor).fixed().printed(move |_, ctx| {
        let lhs = infinite_product(&f.spec(ctx)?, ctx)?;
        Evaluation::closed(lhs, closed(), ctx)
    })
}

fn two(e: Rational) -> (Atom, Rational) {
    (Atom::Two, e)
}

fn products() -> Vec<Identity> {
    let fam = |sign, slope, offset| Family { sign, slope, offset, root2: false };
    vec![
        product_entry(
            "eq6.prod.sqrt2-plus",
            "prod (1 + e^(-sqrt(2) pi n)) = 2^(-1/4) e^(pi/(12 sqrt 2))",
            Family { sign: 1, slope: 1, offset: 0, root2: true },
            || ClosedForm::term(int(1), [two(rat(-1, 4)), (Atom::ExpPiSqrt2(rat(1, 24)), int(1))]),
        ),
        product_entry(
            "eq6.prod.odd-plus",
            "prod (1 + e^(-pi(2n-1))) = 2^(1/4) e^(-pi/24)",
            fam(1, 2, 1),
            || ClosedForm::term(int(1), [two(rat(1, 4)), (Atom::ExpPi(rat(-1, 24)), int(1))]),
        ),
        product_entry(
            "eq6.prod.pi-plus",
            "prod (1 + e^(-pi n)) = 2^(-1/8) e^(pi/24)",
            fam(1, 1, 0),
            || ClosedForm::term(int(1), [two(rat(-1, 8)), (Atom::ExpPi(rat(1, 24)), int(1))]),
        ),
        product_entry(
            "eq6.prod.2pi-plus",
            "prod (1 + e^(-2 pi n)) = 2^(-3/8) e^(pi/12)",
            fam(1, 2, 0),
            || ClosedForm::term(int(1), [two(rat(-3, 8)), (Atom::ExpPi(rat(1, 12)), int(1))]),
        ),
        product_entry(
            "eq6.prod.2pi-minus",
            "prod (1 - e^(-2 pi n)) = pi^(1/4) e^(pi/12)/(sqrt 2 Gamma(3/4))",
            fam(-1, 2, 0),
            || {
                ClosedForm::term(
                    int(1),
                    [
                        (Atom::Pi, rat(1, 4)),
                        (Atom::ExpPi(rat(1, 12)), int(1)),
                        two(rat(-1, 2)),
                        (Atom::GammaThreeQuarters, int(-1)),
                    ],
                )
            },
        ),
        product_entry(
            "eq6.prod.pi-minus",
            "prod (1 - e^(-pi n)) = pi^(1/4) e^(pi/24)/(2^(3/8) Gamma(3/4))",
            fam(-1, 1, 0),
            || {
                ClosedForm::term(
                    int(1),
                    [
                        (Atom::Pi, rat(1, 4)),
                        (Atom::ExpPi(rat(1, 24)), int(1)),
                        two(rat(-3, 8)),
                        (Atom::GammaThreeQuarters, int(-1)),
                    ],
                )
            },
        ),
        product_entry(
            "eq6.prod.4pi-minus",
            "prod (1 - e^(-4 pi n)) = pi^(1/4) e^(pi/6)/(2^(7/8) Gamma(3/4))",
            fam(-1, 4, 0),
            || {
                ClosedForm::term(
                    int(1),
                    [
                        (Atom::Pi, rat(1, 4)),
                        (Atom::ExpPi(rat(1, 6)), int(1)),
                        two(rat(-7, 8)),
                        (Atom::GammaThreeQuarters, int(-1)),
                    ],
                )
            },
        ),
        product_entry(
            "eq6.prod.4n2-minus",
            "prod (1 - e^(-pi(4n-2))) = 2^(3/8) e^(-pi/12)",
            fam(-1, 4, 2),
            || ClosedForm::term(int(1), [two(rat(3, 8)), (Atom::ExpPi(rat(-1, 12)), int(1))]),
        ),
        product_entry(
            "eq6.prod.odd-minus",
            "prod (1 - e^(-pi(2n-1))) = 2^(1/8) e^(-pi/24)",
            fam(-1, 2, 1),
            || ClosedForm::term(int(1), [two(rat(1, 8)), (Atom::ExpPi(rat(-1, 24)), int(1))]),
        ),
    ]
}

/// log prod (1 + sign e^{-(slope n - offset)}) for real slope and offset.
fn log_family(sign: i32, slope: BigReal, offset: BigReal, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    log_product(&ProductSpec::exp_family(sign, slope, offset), ctx)
}

fn x_defaults() -> Vec<Params> {
    vec![params(&[("x", rat(1, 2))]), params(&[("x", int(1))]), params(&[("x", int(2))])]
}

fn relations() -> Vec<Identity> {
    let x_entry = |id, anchor| {
        Identity::new(id, "6", anchor).rational("x").require("x > 0", |p| positive(p, &["x"])).defaults(x_defaults())
    };
    vec![
        x_entry("eq6.1", "P(x)/P(1/x) = e^((pi/12)(x - 1/x)) x^(-1/2), P(x) = prod (1 - e^(-2 pi n x))")
            .defaults(vec![params(&[("x", int(2))]), params(&[("x", rat(1, 3))]), params(&[("x", rat(3, 2))])])
            .printed(|p, ctx| {
                let x = q(p, "x");
                let pi2 = ctx.pi().mul_i64(2);
                let zero = ctx.zero();
                let lp = log_family(-1, &pi2 * r(ctx, &x), zero.clone(), ctx)?;
                let lq = log_family(-1, &pi2 * r(ctx, &x.recip()), zero, ctx)?;
                let lhs = (lp - lq).exp()?;
                let e = ctx.pi() * r(ctx, &((&x - x.recip()) / int(12)));
                let rhs = e.exp()? * r(ctx, &x).sqrt()?.recip()?;
                Ok(Evaluation::numeric(lhs, rhs))
            }),
        x_entry("eq6.rel-coth", "sum coth(pi n x)(-1)^(n-1)/n = log 2 + 2 log prod (1 + e^(-2 pi n x))").printed(
            |p, ctx| {
                let xr = r(ctx, &q(p, "x"));
                let pix = ctx.pi() * &xr;
                let lhs = sum_hyper(&[power(Kernel::Coth, pix.clone(), 1).alternating()], ctx)?;
                let rhs = ctx.ln2() + log_family(1, pix.mul_i64(2), ctx.zero(), ctx)?.mul_i64(2);
                Ok(Evaluation::numeric(lhs, rhs))
            },
        ),
        x_entry(
            "eq6.rel-tanh",
            "sum tanh(pi n x)(-1)^(n-1)/n = log 2 + 2 log prod (1 + e^(-4 pi n x))/(1 + e^(-2 pi (2n-1) x))",
        )
        .printed(|p, ctx| {
            let xr = r(ctx, &q(p, "x"));
            let pix = ctx.pi() * &xr;
            let lhs = sum_hyper(&[power(Kernel::Tanh, pix.clone(), 1).alternating()], ctx)?;
            let num = log_family(1, pix.mul_i64(4), ctx.zero(), ctx)?;
            let den = log_family(1, pix.mul_i64(4), pix.mul_i64(2), ctx)?;
            Ok(Evaluation::numeric(lhs, ctx.ln2() + (num - den).mul_i64(2)))
        }),
        Identity::new("eq6.berndt", "6", "sum 1/(n(e^(2 pi n) - 1)) = (1/4) log(4/pi) - pi/12 + log Gamma(3/4)")
            .fixed()
            .printed(|_, ctx| {
                let pi = ctx.pi();
                let lhs = sum_hyper(&[power(Kernel::InvExpm1, pi.mul_i64(2), 1)], ctx)?;
                let rhs = (ctx.int(4) / &pi).ln()?.div_i64(4) - pi.div_i64(12)
                    + constant(ConstId::GammaThreeQuarters, ctx)?.ln()?;
                Ok(Evaluation::numeric(lhs, rhs))
            }),
    ]
}

/// a log 2 + b pi (times 1/sqrt 2 when `root2`).
fn log_pi(a: Rational, b: Rational, root2: bool) -> ClosedForm {
    let pi = if root2 {
        ClosedForm::term(b, [(Atom::Pi, int(1)), two(rat(-1, 2))])
    } else {
        ClosedForm::pi_pow(1).scale(&b)
    };
    ClosedForm::atom(Atom::LogTwo).scale(&a) + pi
}

fn log_entry(
    id: &'static str,
    anchor: &'static str,
    lhs: fn(&PrecisionContext) -> Result<BigReal, NumericError>,
    rhs: fn() -> ClosedForm,
) -> Identity {
    Identity::new(id, "6", anchor).fixed().printed(move |_, ctx| Evaluation::closed(lhs(ctx)?, rhs(), ctx))
}

fn sqrt2(ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    ctx.int(2).sqrt()
}

fn log_series() -> Vec<Identity> {
    vec![
        log_entry(
            "eq6.log.coth-half",
            "sum coth(pi n/2)(-1)^(n-1)/n = (3/4) log 2 + pi/12",
            |ctx| sum_hyper(&[power(Kernel::Coth, ctx.pi().div_i64(2), 1).alternating()], ctx),
            || log_pi(rat(3, 4), rat(1, 12), false),
        ),
        log_entry(
            "eq6.log.coth-pi",
            "sum coth(pi n)(-1)^(n-1)/n = (1/4) log 2 + pi/6",
            |ctx| sum_hyper(&[power(Kernel::Coth, ctx.pi(), 1).alternating()], ctx),
            || log_pi(rat(1, 4), rat(1, 6), false),
        ),
        log_entry(
            "eq6.log.coth-sqrt2",
            "sum coth(pi n/sqrt 2)(-1)^(n-1)/n = (1/2) log 2 + pi/(6 sqrt 2)",
            |ctx| sum_hyper(&[power(Kernel::Coth, ctx.pi() / sqrt2(ctx)?, 1).alternating()], ctx),
            || log_pi(rat(1, 2), rat(1, 6), true),
        ),
        log_entry(
            "eq6.log.tanh-half",
            "sum tanh(pi n/2)(-1)^(n-1)/n = pi/4 - (1/4) log 2",
            |ctx| sum_hyper(&[power(Kernel::Tanh, ctx.pi().div_i64(2), 1).alternating()], ctx),
            || log_pi(rat(-1, 4), rat(1, 4), false),
        ),
        log_entry(
            "eq6.log.sinh-pi",
            "sum 1/(n sinh(pi n)) = pi/12 - (1/4) log 2",
            |ctx| sum_hyper(&[power(Kernel::Csch, ctx.pi(), 1)], ctx),
            || log_pi(rat(-1, 4), rat(1, 12), false),
        ),
        log_entry(
            "eq6.log.sinh-2pi",
            "sum 1/(n sinh(2 pi n)) = pi/6 - (3/4) log 2",
            |ctx| sum_hyper(&[power(Kernel::Csch, ctx.pi().mul_i64(2), 1)], ctx),
            || log_pi(rat(-3, 4), rat(1, 6), false),
        ),
        log_entry(
            "eq6.log.sinh-sqrt2",
            "sum 1/(n sinh(sqrt(2) pi n)) = pi/(6 sqrt 2) - (1/2) log 2",
            |ctx| sum_hyper(&[power(Kernel::Csch, ctx.pi() * sqrt2(ctx)?, 1)], ctx),
            || log_pi(rat(-1, 2), rat(1, 6), true),
        ),
        log_entry(
            "eq6.log.sinh-odd",
            "sum 1/((2n-1) sinh((2n-1) pi)) = (1/8) log 2",
            |ctx| sum_hyper(&[power(Kernel::Csch, ctx.pi(), 1).odd()], ctx),
            || log_pi(rat(1, 8), int(0), false),
        ),
    ]
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = products();
    v.extend(relations());
    v.extend(log_series());
    v
}
