use super::build::*;
use super::{Evaluation, Identity, Params};
use crate::exact::{int, rat, Rational};
use crate::numeric::{BigReal, NumericError, PrecisionContext};
use crate::series::{sum_hyper, Kernel};

pub(super) fn entries() -> Vec<Identity> {
    let mut v = vec![eq32()];
    v.extend(partial_fractions());
    v.extend(berndt());
    v.extend(two_scale());
    v
}

fn axy_defaults() -> Vec<Params> {
    [(rat(1, 3), int(1), int(1)), (rat(2, 5), int(1), int(2)), (rat(3, 7), rat(3, 2), int(1))]
        .into_iter()
        .map(|(a, x, y)| params(&[("a", a), ("x", x), ("y", y)]))
        .collect()
}

fn wt_defaults() -> Vec<Params> {
    [(rat(1, 3), int(1)), (rat(1, 2), int(2)), (int(2), rat(2, 3))]
        .into_iter()
        .map(|(w, t)| params(&[("t", t), ("w", w)]))
        .collect()
}

/// (a, x, y) as reals.
fn axy(p: &Params, ctx: &PrecisionContext) -> (Rational, Rational, Rational, BigReal, BigReal, BigReal) {
    let (a, x, y) = (q(p, "a"), q(p, "x"), q(p, "y"));
    let (ar, xr, yr) = (r(ctx, &a), r(ctx, &x), r(ctx, &y));
    (a, x, y, ar, xr, yr)
}

/// alpha, beta, w and the two pole radii sqrt(w/alpha), sqrt(w/beta).
struct Wt {
    w: BigReal,
    alpha: BigReal,
    beta: BigReal,
    ra: BigReal,
    rb: BigReal,
}

fn wt(p: &Params, ctx: &PrecisionContext) -> Result<Wt, NumericError> {
    let (w, t) = (q(p, "w"), q(p, "t"));
    let alpha = pi_times(ctx, &t);
    let beta = pi_times(ctx, &t.recip());
    let w = r(ctx, &w);
    let ra = (&w / &alpha).sqrt()?;
    let rb = (&w / &beta).sqrt()?;
    Ok(Wt { w, alpha, beta, ra, rb })
}

fn eq32() -> Identity {
    Identity::new(
        "eq3.2",
        "3",
        "(pi/2) cot(sqrt(w alpha)) coth(sqrt(w beta)) = 1/(2w) + log(beta/alpha)/2 + sum {n alpha coth(n alpha)/(w + n^2 alpha) + n beta coth(n beta)/(w - n^2 beta)}",
    )
    .rational("t")
    .rational("w")
    .require("t > 0 and w > 0", |p| positive(p, &["t", "w"]))
    .defaults(wt_defaults())
    .printed(|p, ctx| {
        let v = wt(p, ctx)?;
        let lhs = ctx.pi().div_i64(2) * (&v.w * &v.alpha).sqrt()?.cot()? * (&v.w * &v.beta).sqrt()?.coth()?;
        let s = sum_hyper(
            &[
                rational(Kernel::Coth, v.alpha.clone(), weight(ctx.one(), 1, pm_i(&v.ra))),
                rational(Kernel::Coth, v.beta.clone(), weight(-ctx.one(), 1, pm(&v.rb))),
            ],
            ctx,
        )?;
        // log(beta/alpha)/2 = -log t
        let rhs = (v.w.mul_i64(2)).recip()? - r(ctx, &q(p, "t")).ln()? + s;
        Ok(Evaluation::numeric(lhs, rhs))
    })
}

fn partial_fractions() -> Vec<Identity> {
    fn eq33(p: &Params, ctx: &PrecisionContext, plus: bool) -> Result<Evaluation, NumericError> {
        let (x, y) = (q(p, "x"), q(p, "y"));
        let (xr, yr) = (r(ctx, &x), r(ctx, &y));
        let pi = ctx.pi();
        let lhs = pi.sqr() * &xr * &yr * (&pi * &xr).cot()? * (&pi * &yr).coth()?;
        let ypoles = if plus { pm_i(&yr) } else { pm(&yr) };
        let s = sum_hyper(
            &[
                rational(Kernel::Coth, pi_times(ctx, &(&y / &x)), weight(xr.sqr(), 0, with_zero(pm(&xr), ctx))),
                rational(Kernel::Coth, pi_times(ctx, &(&x / &y)), weight(yr.sqr(), 0, with_zero(ypoles, ctx))),
            ],
            ctx,
        )?;
        let rhs = ctx.one() + zeta(2).eval(ctx)? * r(ctx, &(int(2) * (&y * &y - &x * &x)))
            - pi.mul_i64(2) * &xr * &yr * s;
        Ok(Evaluation::numeric(lhs, rhs))
    }
    fn eq35(p: &Params, ctx: &PrecisionContext, plus: bool) -> Result<Evaluation, NumericError> {
        let (a, x, y, ar, xr, yr) = axy(p, ctx);
        let pi = ctx.pi();
        let lhs = pi.sqr() * &xr * &yr * (&pi * &xr * &ar).cot()? * (&pi * &yr * &ar).coth()?;
        let (ax, ay) = (&ar * &xr, &ar * &yr);
        let ypoles = if plus { pm_i(&ay) } else { pm(&ay) };
        let s = sum_hyper(
            &[
                rational(Kernel::Coth, pi_times(ctx, &(&y / &x)), weight(ax.sqr(), 0, with_zero(pm(&ax), ctx))),
                rational(Kernel::Coth, pi_times(ctx, &(&x / &y)), weight(ay.sqr(), 0, with_zero(ypoles, ctx))),
            ],
            ctx,
        )?;
        let rhs = r(ctx, &(&a * &a).recip()) + zeta(2).eval(ctx)? * r(ctx, &(int(2) * (&y * &y - &x * &x)))
            - pi.mul_i64(2) * &xr * &yr * s;
        Ok(Evaluation::numeric(lhs, rhs))
    }
    fn base(p: &Params, ctx: &PrecisionContext) -> BigReal {
        let (a, x, y) = (q(p, "a"), q(p, "x"), q(p, "y"));
        r(ctx, &(&a * &a * &x * &y).recip())
    }
    fn eq37(p: &Params, ctx: &PrecisionContext, inner_pi: bool) -> Result<Evaluation, NumericError> {
        let (_, x, y, ar, xr, yr) = axy(p, ctx);
        let pi = ctx.pi();
        let lhs = pi.sqr() * (&pi * &xr * &ar).cot()? / (&pi * &yr * &ar).sinh()?;
        let scale = if inner_pi { pi.clone() } else { ctx.one() };
        let s = sum_hyper(
            &[
                rational(Kernel::Coth, pi_times(ctx, &(&x / &y)), weight(scale, 1, pm_i(&(&ar * &yr)))).alternating().times(&-ctx.one()),
                rational(Kernel::Csch, pi_times(ctx, &(&y / &x)), weight(ctx.one(), 1, pm(&(&ar * &xr)))).times(&-ctx.one()),
            ],
            ctx,
        )?;
        Ok(Evaluation::numeric(lhs, base(p, ctx) + pi.mul_i64(2) * s))
    }
    let x_not_int: fn(&Params) -> bool = |p| non_integer(&(q(p, "x") * q(p, "a")));
    let y_not_int: fn(&Params) -> bool = |p| non_integer(&(q(p, "y") * q(p, "a")));
    let x_not_half: fn(&Params) -> bool = |p| not_half_odd(&(q(p, "x") * q(p, "a")));
    let axy_entry = |id, anchor| {
        Identity::new(id, "3", anchor)
            .rational("a")
            .rational("x")
            .rational("y")
            .require("a > 0, x > 0 and y > 0", |p| positive(p, &["a", "x", "y"]))
            .defaults(axy_defaults())
    };
    vec![
        Identity::new(
            "eq3.3",
            "3",
            "pi^2 xy cot(pi x) coth(pi y) = 1 + 2 zeta(2)(y^2 - x^2) - 2 pi xy sum {x^2 coth(pi n y/x)/(n(n^2 - x^2)) + y^2 coth(pi n x/y)/(n(n^2 - y^2))}",
        )
        .rational("x")
        .rational("y")
        .require("x > 0 and y > 0", |p| positive(p, &["x", "y"]))
        .require("x not an integer", |p| non_integer(&q(p, "x")))
        .require("y not an integer", |p| non_integer(&q(p, "y")))
        .defaults(vec![
            params(&[("x", rat(1, 3)), ("y", rat(1, 2))]),
            params(&[("x", rat(2, 5)), ("y", rat(3, 7))]),
            params(&[("x", rat(1, 3)), ("y", rat(1, 4))]),
        ])
        .printed(|p, ctx| eq33(p, ctx, false))
        .variant(
            "second denominator n(n^2 + y^2)",
            "the coth(pi y) poles sit on the imaginary axis, at n = +-iy",
            |p, ctx| eq33(p, ctx, true),
        ),
        axy_entry(
            "eq3.5",
            "pi^2 xy cot(pi x a) coth(pi y a) = 1/a^2 + 2 zeta(2)(y^2 - x^2) - 2 pi xy sum {a^2 x^2 coth(pi n y/x)/(n(n^2 - a^2 x^2)) + a^2 y^2 coth(pi n x/y)/(n(n^2 - a^2 y^2))}",
        )
        .require("x a not an integer", x_not_int)
        .require("y a not an integer", y_not_int)
        .printed(|p, ctx| eq35(p, ctx, false))
        .variant(
            "second denominator n(n^2 + a^2 y^2)",
            "the coth(pi y a) poles sit on the imaginary axis",
            |p, ctx| eq35(p, ctx, true),
        ),
        axy_entry(
            "eq3.6",
            "pi^2/(sin(pi x a) sinh(pi y a)) = 1/(a^2 xy) + 2 pi sum {n (-1)^n/((n^2 + a^2 y^2) sinh(pi n x/y)) - n (-1)^n/((n^2 - a^2 x^2) sinh(pi n y/x))}",
        )
        .require("x a not an integer", x_not_int)
        .printed(|p, ctx| {
            let (_, x, y, ar, xr, yr) = axy(p, ctx);
            let pi = ctx.pi();
            let lhs = pi.sqr() / ((&pi * &xr * &ar).sin() * (&pi * &yr * &ar).sinh()?);
            let s = sum_hyper(
                &[
                    rational(Kernel::Csch, pi_times(ctx, &(&x / &y)), weight(ctx.one(), 1, pm_i(&(&ar * &yr)))).alternating().times(&-ctx.one()),
                    rational(Kernel::Csch, pi_times(ctx, &(&y / &x)), weight(ctx.one(), 1, pm(&(&ar * &xr)))).alternating(),
                ],
                ctx,
            )?;
            Ok(Evaluation::numeric(lhs, base(p, ctx) + pi.mul_i64(2) * s))
        }),
        axy_entry(
            "eq3.7",
            "pi^2 cot(pi x a)/sinh(pi y a) = 1/(a^2 xy) + 2 pi sum {pi n coth(pi n x/y)(-1)^n/(n^2 + a^2 y^2) - n/((n^2 - a^2 x^2) sinh(pi n y/x))}",
        )
        .require("x a not an integer", x_not_int)
        .printed(|p, ctx| eq37(p, ctx, true))
        .variant(
            "inner factor n coth instead of pi n coth",
            "the 2 pi prefactor already carries the pi from the residues of cot",
            |p, ctx| eq37(p, ctx, false),
        ),
        axy_entry(
            "eq3.8",
            "pi^2 tan(pi x a) tanh(pi y a)/(16 a^2) = sum {pi x^2 tanh((2n-1) pi y/(2x))/((2n-1)((2n-1)^2 - (2xa)^2)) + pi y^2 tanh((2n-1) pi x/(2y))/((2n-1)((2n-1)^2 + (2ya)^2))}",
        )
        .require("x a not of the form (2j+1)/2", x_not_half)
        .printed(|p, ctx| {
            let (a, x, y, ar, xr, yr) = axy(p, ctx);
            let pi = ctx.pi();
            let lhs = pi.sqr() * (&pi * &xr * &ar).tan()? * (&pi * &yr * &ar).tanh() / r(ctx, &(int(16) * &a * &a));
            let (tx, ty) = ((&ar * &xr).mul_i64(2), (&ar * &yr).mul_i64(2));
            let rhs = sum_hyper(
                &[
                    rational(Kernel::Tanh, pi_times(ctx, &(&y / &x / int(2))), weight(&pi * xr.sqr(), 0, with_zero(pm(&tx), ctx))).odd(),
                    rational(Kernel::Tanh, pi_times(ctx, &(&x / &y / int(2))), weight(&pi * yr.sqr(), 0, with_zero(pm_i(&ty), ctx))).odd(),
                ],
                ctx,
            )?;
            Ok(Evaluation::numeric(lhs, rhs))
        }),
        axy_entry(
            "eq3.9",
            "pi^2/(16 a^2 cos(pi x a) cosh(pi y a)) = pi^2/(16 a^2) + sum pi y^2 (-1)^n/((2n-1)((2n-1)^2 + (2ya)^2) cosh((2n-1) pi x/(2y))) - sum pi x^2 (-1)^n/((2n-1)((2n-1)^2 - (2xa)^2) cosh((2n-1) pi y/(2x)))",
        )
        .require("x a not of the form (2j+1)/2", x_not_half)
        .printed(|p, ctx| {
            let (a, x, y, ar, xr, yr) = axy(p, ctx);
            let pi = ctx.pi();
            let c = pi.sqr() / r(ctx, &(int(16) * &a * &a));
            let lhs = &c / ((&pi * &xr * &ar).cos() * (&pi * &yr * &ar).cosh()?);
            let (tx, ty) = ((&ar * &xr).mul_i64(2), (&ar * &yr).mul_i64(2));
            let s = sum_hyper(
                &[
                    rational(Kernel::Sech, pi_times(ctx, &(&x / &y / int(2))), weight(&pi * yr.sqr(), 0, with_zero(pm_i(&ty), ctx)))
                        .odd()
                        .alternating()
                        .times(&-ctx.one()),
                    rational(Kernel::Sech, pi_times(ctx, &(&y / &x / int(2))), weight(&pi * xr.sqr(), 0, with_zero(pm(&tx), ctx)))
                        .odd()
                        .alternating(),
                ],
                ctx,
            )?;
            Ok(Evaluation::numeric(lhs, c + s))
        }),
    ]
}

fn berndt() -> Vec<Identity> {
    fn setup(p: &Params, ctx: &PrecisionContext) -> (BigReal, BigReal, Vec<crate::numeric::BigComplex>) {
        let a = r(ctx, &q(p, "a"));
        let mut poles = pm(&a);
        poles.extend(pm_i(&a));
        // 1/(4 a^2 pi)
        let pre = (a.sqr().mul_i64(4) * ctx.pi()).recip().expect("a > 0");
        (a, pre, poles)
    }
    let entry = |id, anchor| {
        Identity::new(id, "3", anchor)
            .rational("a")
            .require("a > 0", |p| positive(p, &["a"]))
            .require("a not an integer", |p| non_integer(&q(p, "a")))
            .defaults(vec![params(&[("a", rat(1, 3))]), params(&[("a", rat(1, 2))]), params(&[("a", rat(2, 5))])])
    };
    vec![
        entry(
            "eq3.berndt-sinh",
            "sum n (-1)^n/((n^4 - a^4) sinh(pi n)) = (1/(4 a^2 pi)) (1/a^2 - pi^2/(sin(pi a) sinh(pi a)))",
        )
        .printed(|p, ctx| {
            let (a, pre, poles) = setup(p, ctx);
            let pi = ctx.pi();
            let lhs = sum_hyper(
                &[rational(Kernel::Csch, pi.clone(), weight(ctx.one(), 1, poles)).alternating().times(&-ctx.one())],
                ctx,
            )?;
            let rhs = pre * (a.sqr().recip()? - pi.sqr() / ((&pi * &a).sin() * (&pi * &a).sinh()?));
            Ok(Evaluation::numeric(lhs, rhs))
        }),
        entry(
            "eq3.berndt-coth",
            "sum n coth(pi n)/(n^4 - a^4) = (1/(4 a^2 pi)) (1/a^2 - pi^2 cot(pi a) coth(pi a))",
        )
        .printed(|p, ctx| {
            let (a, pre, poles) = setup(p, ctx);
            let pi = ctx.pi();
            let lhs = sum_hyper(&[rational(Kernel::Coth, pi.clone(), weight(ctx.one(), 1, poles))], ctx)?;
            let rhs = pre * (a.sqr().recip()? - pi.sqr() * (&pi * &a).cot()? * (&pi * &a).coth()?);
            Ok(Evaluation::numeric(lhs, rhs))
        }),
    ]
}

fn two_scale() -> Vec<Identity> {
    fn eq310(p: &Params, ctx: &PrecisionContext, alpha_numerator: bool) -> Result<Evaluation, NumericError> {
        let v = wt(p, ctx)?;
        let lhs = ctx.pi() / ((&v.w * &v.alpha).sqrt()?.sin() * (&v.w * &v.beta).sqrt()?.sinh()?).mul_i64(2);
        let scale = if alpha_numerator { ctx.one() } else { v.alpha.recip()? };
        let s = sum_hyper(
            &[
                rational(Kernel::Csch, v.beta.clone(), weight(-ctx.one(), 1, pm(&v.rb))).alternating().times(&-ctx.one()),
                rational(Kernel::Csch, v.alpha.clone(), weight(scale, 1, pm_i(&v.ra))).alternating().times(&-ctx.one()),
            ],
            ctx,
        )?;
        Ok(Evaluation::numeric(lhs, v.w.mul_i64(2).recip()? + s))
    }
    let entry = |id, anchor| {
        Identity::new(id, "3", anchor)
            .rational("t")
            .rational("w")
            .require("t > 0 and w > 0", |p| positive(p, &["t", "w"]))
            .defaults(wt_defaults())
    };
    vec![
        entry(
            "eq3.10",
            "pi/(2 sin(sqrt(w alpha)) sinh(sqrt(w beta))) = 1/(2w) + sum {beta n (-1)^n/((w - beta n^2) sinh(beta n)) + n (-1)^n/((w + alpha n^2) sinh(alpha n))}",
        )
        .printed(|p, ctx| eq310(p, ctx, false))
        .variant(
            "second numerator alpha n (-1)^n",
            "the two families are symmetric under alpha <-> beta, w -> -w",
            |p, ctx| eq310(p, ctx, true),
        ),
        entry(
            "eq3.11",
            "pi cot(sqrt(w alpha))/(2 sinh(sqrt(w beta))) = 1/(2w) + sum {beta n/((w - beta n^2) sinh(beta n)) + alpha n coth(alpha n)(-1)^n/(w + alpha n^2)}",
        )
        .printed(|p, ctx| {
            let v = wt(p, ctx)?;
            let lhs = ctx.pi() * (&v.w * &v.alpha).sqrt()?.cot()? / (&v.w * &v.beta).sqrt()?.sinh()?.mul_i64(2);
            let s = sum_hyper(
                &[
                    rational(Kernel::Csch, v.beta.clone(), weight(-ctx.one(), 1, pm(&v.rb))),
                    rational(Kernel::Coth, v.alpha.clone(), weight(ctx.one(), 1, pm_i(&v.ra))).alternating().times(&-ctx.one()),
                ],
                ctx,
            )?;
            Ok(Evaluation::numeric(lhs, v.w.mul_i64(2).recip()? + s))
        }),
        entry(
            "eq3.12",
            "pi tan(sqrt(w alpha)) tanh(sqrt(w beta))/(16 w) = sum {tanh((2n-1) beta/2)/((2n-1)(beta (2n-1)^2 - 4w)) + tanh((2n-1) alpha/2)/((2n-1)(alpha (2n-1)^2 + 4w))}",
        )
        .printed(|p, ctx| {
            let v = wt(p, ctx)?;
            let lhs = ctx.pi() * (&v.w * &v.alpha).sqrt()?.tan()? * (&v.w * &v.beta).sqrt()?.tanh() / v.w.mul_i64(16);
            let rhs = sum_hyper(
                &[
                    rational(Kernel::Tanh, v.beta.div_i64(2), weight(v.beta.recip()?, 0, with_zero(pm(&v.rb.mul_i64(2)), ctx))).odd(),
                    rational(Kernel::Tanh, v.alpha.div_i64(2), weight(v.alpha.recip()?, 0, with_zero(pm_i(&v.ra.mul_i64(2)), ctx))).odd(),
                ],
                ctx,
            )?;
            Ok(Evaluation::numeric(lhs, rhs))
        }),
        entry(
            "eq3.13",
            "pi/(16 w cos(sqrt(w alpha)) cosh(sqrt(w beta))) = pi/(16w) + sum (-1)^n/((2n-1)(4w - beta (2n-1)^2) cosh((2n-1) beta/2)) + sum (-1)^n/((2n-1)(4w + alpha (2n-1)^2) cosh((2n-1) alpha/2))",
        )
        .printed(|p, ctx| {
            let v = wt(p, ctx)?;
            let c = ctx.pi() / v.w.mul_i64(16);
            let lhs = &c / ((&v.w * &v.alpha).sqrt()?.cos() * (&v.w * &v.beta).sqrt()?.cosh()?);
            let s = sum_hyper(
                &[
                    rational(Kernel::Sech, v.beta.div_i64(2), weight(-v.beta.recip()?, 0, with_zero(pm(&v.rb.mul_i64(2)), ctx)))
                        .odd()
                        .alternating()
                        .times(&-ctx.one()),
                    rational(Kernel::Sech, v.alpha.div_i64(2), weight(v.alpha.recip()?, 0, with_zero(pm_i(&v.ra.mul_i64(2)), ctx)))
                        .odd()
                        .alternating()
                        .times(&-ctx.one()),
                ],
                ctx,
            )?;
            Ok(Evaluation::numeric(lhs, c + s))
        }),
    ]
}
