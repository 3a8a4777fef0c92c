use num_traits::{One, Signed};

use super::build::*;
use super::{Evaluation, Identity, Params};
use crate::exact::{bernoulli, euler_number, factorial, int, pow2, rat, ClosedForm, Rational};
use crate::numeric::{BigReal, NumericError, PrecisionContext};
use crate::residue::{theorem_rhs, Theorem};
use crate::series::{sum_hyper, Kernel};

type Eval = fn(&Params, &PrecisionContext) -> Result<Evaluation, NumericError>;

pub(super) fn entries() -> Vec<Identity> {
    let mut v = theorems();
    v.extend(corollaries());
    v.extend(ramanujan_pair());
    v.extend(examples());
    v
}

fn xy_defaults() -> Vec<(Rational, Rational)> {
    vec![(int(1), int(1)), (int(1), int(2)), (rat(3, 2), int(1))]
}

fn exact_err(e: crate::exact::ExactError) -> NumericError {
    NumericError::Usage(e.to_string())
}

/// Series side of a two-scale theorem.
pub(crate) fn theorem_lhs(
    th: Theorem,
    k: u32,
    x: &Rational,
    y: &Rational,
    ctx: &PrecisionContext,
) -> Result<BigReal, NumericError> {
    let pi = ctx.pi();
    let (xr, yr) = (r(ctx, x), r(ctx, y));
    let s = (2 * k).saturating_sub(1); // sec-sech uses its own powers
    let a = &pi * xr.powi(s as u64) * &yr;
    let b = (&pi * yr.powi(s as u64) * &xr).mul_i64(sgn_i(k));
    let yx = pi_times(ctx, &(y / x));
    let xy = pi_times(ctx, &(x / y));
    let terms = match th {
        Theorem::CotCoth => vec![power(Kernel::Coth, yx, s).times(&a), power(Kernel::Coth, xy, s).times(&b)],
        Theorem::CscCsch => vec![
            power(Kernel::Csch, yx, s).alternating().times(&a),
            power(Kernel::Csch, xy, s).alternating().times(&b),
        ],
        Theorem::CotCsch => {
            vec![power(Kernel::Csch, yx, s).times(&a), power(Kernel::Coth, xy, s).alternating().times(&-b)]
        }
        Theorem::TanTanh => vec![
            power(Kernel::Tanh, yx.div_i64(2), s).odd().times(&a),
            power(Kernel::Tanh, xy.div_i64(2), s).odd().times(&b),
        ],
        Theorem::SecSech => {
            let a = &pi * xr.powi(2 * k as u64);
            let b = (&pi * yr.powi(2 * k as u64)).mul_i64(sgn_i(k));
            vec![
                power(Kernel::Sech, yx.div_i64(2), 2 * k + 1).odd().alternating().times(&a),
                power(Kernel::Sech, xy.div_i64(2), 2 * k + 1).odd().alternating().times(&b),
            ]
        }
    };
    sum_hyper(&terms, ctx)
}

fn theorems() -> Vec<Identity> {
    let anchors = [
        "x^(2k-1) y sum pi coth(pi n y/x)/n^(2k-1) + (-1)^k y^(2k-1) x sum pi coth(pi n x/y)/n^(2k-1) = x^(2k) zeta(2k) + (-1)^k y^(2k) zeta(2k) - 2 sum_{k1+k2=k} (-1)^k2 zeta(2k1) zeta(2k2) x^(2k1) y^(2k2)",
        "x^(2k-1) y sum pi (-1)^(n-1)/(n^(2k-1) sinh(pi n y/x)) + (-1)^k y^(2k-1) x sum pi (-1)^(n-1)/(n^(2k-1) sinh(pi n x/y)) = x^(2k) zetabar(2k) + (-1)^k y^(2k) zetabar(2k) + 2 sum_{k1+k2=k} (-1)^k2 zetabar(2k1) zetabar(2k2) x^(2k1) y^(2k2)",
        "x^(2k-1) y sum pi/(n^(2k-1) sinh(pi n y/x)) + (-1)^k y^(2k-1) x sum pi coth(pi n x/y) (-1)^n/n^(2k-1) = x^(2k) zeta(2k) - (-1)^k y^(2k) zetabar(2k) + 2 sum_{k1+k2=k} (-1)^k2 zeta(2k1) zetabar(2k2) x^(2k1) y^(2k2)",
        "x^(2k-1) y sum pi tanh((2n-1) pi y/(2x))/(2n-1)^(2k-1) + (-1)^k y^(2k-1) x sum pi tanh((2n-1) pi x/(2y))/(2n-1)^(2k-1) = sum_{k1+k2=k} (2^(2k1)-1)(2^(2k2)-1) |B(2k1)| B(2k2)/((2k1)!(2k2)!) x^(2k1) y^(2k2) pi^(2k)",
        "x^(2k) sum pi (-1)^(n-1)/((2n-1)^(2k+1) cosh((2n-1) pi y/(2x))) + (-1)^k y^(2k) sum pi (-1)^(n-1)/((2n-1)^(2k+1) cosh((2n-1) pi x/(2y))) = sum_{k1+k2=k, ki>=0} |E(2k1)| E(2k2)/((2k1)!(2k2)!) x^(2k1) y^(2k2) (pi/2)^(2k+2)",
    ];
    Theorem::ALL
        .into_iter()
        .zip(anchors)
        .map(|(th, anchor)| {
            let id: &'static str = match th {
                Theorem::CotCoth => "thm2.1",
                Theorem::CscCsch => "thm2.2",
                Theorem::CotCsch => "thm2.3",
                Theorem::TanTanh => "thm2.4",
                Theorem::SecSech => "thm2.5",
            };
            let mut defaults = Vec::new();
            for kk in th.min_k()..=4 {
                for (x, y) in xy_defaults() {
                    defaults.push(params(&[("k", int(kk as i64)), ("x", x), ("y", y)]));
                }
            }
            Identity::new(id, "2", anchor)
                .integer("k", th.min_k() as i64)
                .rational("x")
                .rational("y")
                .require("x > 0 and y > 0", |p| positive(p, &["x", "y"]))
                .defaults(defaults)
                .printed(move |p, ctx| {
                    let (kk, x, y) = (k(p, "k"), q(p, "x"), q(p, "y"));
                    let lhs = theorem_lhs(th, kk, &x, &y, ctx)?;
                    let rhs = theorem_rhs(th, kk).map_err(exact_err)?.at(&x, &y).map_err(exact_err)?;
                    Evaluation::closed(lhs, rhs, ctx)
                })
        })
        .collect()
}

/// alpha^a beta^b with alpha = pi t, beta = pi/t.
fn ab(a: i64, b: i64, t: &Rational) -> ClosedForm {
    ClosedForm::pi_pow(a + b).scale(&t.pow((a - b) as i32))
}

fn ab_num(a: i64, b: i64, t: &Rational, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    ab(a, b, t).eval(ctx)
}

fn tanh_coef(n: u32) -> Rational {
    (pow2(2 * n as i64) - int(1)) / Rational::from_integer(factorial(2 * n as u64))
}

fn euler_coef(a: u32, b: u32) -> Rational {
    Rational::from_integer(euler_number(2 * a as u64) * euler_number(2 * b as u64))
        / Rational::from_integer(factorial(2 * a as u64) * factorial(2 * b as u64))
}

fn cor_defaults(min_k: i64) -> Vec<Params> {
    grid(&[("k", ints(min_k.max(1)..=(min_k.max(1) + 2))), ("t", vec![int(1), int(2), rat(2, 3)])])
}

fn corollary(id: &'static str, anchor: &'static str, min_k: i64, f: Eval) -> Identity {
    Identity::new(id, "2", anchor)
        .integer("k", min_k)
        .rational("t")
        .require("t > 0", |p| positive(p, &["t"]))
        .defaults(cor_defaults(min_k))
        .printed(f)
}

fn corollaries() -> Vec<Identity> {
    fn setup(p: &Params, ctx: &PrecisionContext) -> (u32, Rational, BigReal, BigReal) {
        let t = q(p, "t");
        (k(p, "k"), t.clone(), pi_times(ctx, &t), pi_times(ctx, &t.recip()))
    }
    // alpha beta^k and (-1)^k alpha^k beta
    fn coefs(kk: u32, t: &Rational, ctx: &PrecisionContext) -> Result<(BigReal, BigReal), NumericError> {
        let k = kk as i64;
        Ok((ab_num(1, k, t, ctx)?, ab_num(k, 1, t, ctx)?.mul_i64(sgn_i(kk))))
    }
    fn conv(kk: u32, t: &Rational, f: impl Fn(u32, u32) -> ClosedForm) -> ClosedForm {
        compositions(kk, 2).into_iter().map(|c| f(c[0], c[1]) * ab(c[1] as i64, c[0] as i64, t)).sum()
    }
    let cor26: Eval = |p, ctx| {
        let (kk, t, a, b) = setup(p, ctx);
        let (c1, c2) = coefs(kk, &t, ctx)?;
        let s = 2 * kk - 1;
        let lhs = sum_hyper(&[power(Kernel::Coth, a, s).times(&c1), power(Kernel::Coth, b, s).times(&c2)], ctx)?;
        let k = kk as i64;
        let rhs = (ab(0, k, &t) + ab(k, 0, &t).scale(&sgn(kk))) * zeta(2 * kk)
            + conv(kk, &t, |k1, k2| (zeta(2 * k1) * zeta(2 * k2)).scale(&(int(-2) * sgn(k2))));
        Evaluation::closed(lhs, rhs, ctx)
    };
    let cor27: Eval = |p, ctx| {
        let (kk, t, a, b) = setup(p, ctx);
        let (c1, c2) = coefs(kk, &t, ctx)?;
        let s = 2 * kk - 1;
        let lhs = sum_hyper(
            &[power(Kernel::Csch, a, s).alternating().times(&c1), power(Kernel::Csch, b, s).alternating().times(&c2)],
            ctx,
        )?;
        let k = kk as i64;
        let rhs = (ab(0, k, &t) + ab(k, 0, &t).scale(&sgn(kk))) * zetabar(2 * kk)
            + conv(kk, &t, |k1, k2| (zetabar(2 * k1) * zetabar(2 * k2)).scale(&(int(2) * sgn(k2))));
        Evaluation::closed(lhs, rhs, ctx)
    };
    let cor28: Eval = |p, ctx| {
        let (kk, t, a, b) = setup(p, ctx);
        let (c1, c2) = coefs(kk, &t, ctx)?;
        let s = 2 * kk - 1;
        let lhs = sum_hyper(
            &[power(Kernel::Csch, a, s).times(&c1), power(Kernel::Coth, b, s).alternating().times(&-c2)],
            ctx,
        )?;
        let k = kk as i64;
        let factor = -sgn(kk) * (Rational::one() - pow2(1 - 2 * k));
        let rhs = (ab(0, k, &t) + ab(k, 0, &t).scale(&factor)) * zeta(2 * kk)
            + conv(kk, &t, |k1, k2| (zeta(2 * k1) * zetabar(2 * k2)).scale(&(int(2) * sgn(k2))));
        Evaluation::closed(lhs, rhs, ctx)
    };
    let cor29: Eval = |p, ctx| {
        let (kk, t, a, b) = setup(p, ctx);
        let (c1, c2) = coefs(kk, &t, ctx)?;
        let s = 2 * kk - 1;
        let lhs = sum_hyper(
            &[
                power(Kernel::Tanh, a.div_i64(2), s).odd().times(&c1),
                power(Kernel::Tanh, b.div_i64(2), s).odd().times(&c2),
            ],
            ctx,
        )?;
        let rhs = conv(kk, &t, |k1, k2| {
            let c = tanh_coef(k1) * tanh_coef(k2) * bernoulli(2 * k1 as u64).abs() * bernoulli(2 * k2 as u64);
            ClosedForm::pi_pow(2 * kk as i64).scale(&c)
        });
        Evaluation::closed(lhs, rhs, ctx)
    };
    fn cor210(p: &Params, ctx: &PrecisionContext, extra_pi: i64) -> Result<Evaluation, NumericError> {
        let (kk, t, a, b) = setup(p, ctx);
        let k = kk as i64;
        let c1 = ab_num(0, k, &t, ctx)?;
        let c2 = ab_num(k, 0, &t, ctx)?.mul_i64(sgn_i(kk));
        let s = 2 * kk + 1;
        let lhs = sum_hyper(
            &[
                power(Kernel::Sech, a.div_i64(2), s).odd().alternating().times(&c1),
                power(Kernel::Sech, b.div_i64(2), s).odd().alternating().times(&c2),
            ],
            ctx,
        )?;
        let mut rhs = ClosedForm::zero();
        for k1 in 0..=kk {
            let k2 = kk - k1;
            let c = euler_coef(k1, k2).abs() * sgn(k2) * pow2(-(2 * k + 2));
            rhs += ClosedForm::pi_pow(2 * k + 2 + extra_pi).scale(&c) * ab(k2 as i64, k1 as i64, &t);
        }
        Evaluation::closed(lhs, rhs, ctx)
    }
    vec![
        corollary(
            "cor2.6",
            "alpha beta^k sum coth(n alpha)/n^(2k-1) + (-1)^k alpha^k beta sum coth(n beta)/n^(2k-1) = (beta^k + (-1)^k alpha^k) zeta(2k) - 2 sum_{k1+k2=k} (-1)^k2 alpha^k2 beta^k1 zeta(2k1) zeta(2k2), alpha beta = pi^2",
            2,
            cor26,
        ),
        corollary(
            "cor2.7",
            "alpha beta^k sum (-1)^(n-1)/(n^(2k-1) sinh(n alpha)) + (-1)^k alpha^k beta sum (-1)^(n-1)/(n^(2k-1) sinh(n beta)) = (beta^k + (-1)^k alpha^k) zetabar(2k) + 2 sum_{k1+k2=k} (-1)^k2 alpha^k2 beta^k1 zetabar(2k1) zetabar(2k2)",
            1,
            cor27,
        ),
        corollary(
            "cor2.8",
            "alpha beta^k sum 1/(n^(2k-1) sinh(n alpha)) + (-1)^k alpha^k beta sum coth(n beta) (-1)^n/n^(2k-1) = (beta^k - (-1)^k (1-2^(1-2k)) alpha^k) zeta(2k) + 2 sum_{k1+k2=k} (-1)^k2 alpha^k2 beta^k1 zeta(2k1) zetabar(2k2)",
            1,
            cor28,
        ),
        corollary(
            "cor2.9",
            "alpha beta^k sum tanh((2n-1) alpha/2)/(2n-1)^(2k-1) + (-1)^k alpha^k beta sum tanh((2n-1) beta/2)/(2n-1)^(2k-1) = sum_{k1+k2=k} (2^(2k1)-1)(2^(2k2)-1) |B(2k1)| B(2k2)/((2k1)!(2k2)!) alpha^k2 beta^k1 pi^(2k)",
            2,
            cor29,
        ),
        corollary(
            "cor2.10",
            "beta^k sum (-1)^(n-1)/((2n-1)^(2k+1) cosh((2n-1) alpha/2)) + (-1)^k alpha^k sum (-1)^(n-1)/((2n-1)^(2k+1) cosh((2n-1) beta/2)) = sum_{k1+k2=k} |E(2k1)| E(2k2)/((2k1)!(2k2)!) alpha^k2 beta^k1 (pi/2)^(2k+2)",
            0,
            |p, ctx| cor210(p, ctx, 0),
        )
        .defaults(grid(&[("k", ints(0..=2)), ("t", vec![int(1), int(2), rat(2, 3)])]))
        .variant(
            "right side divided by pi",
            "the series carry no factor pi, unlike the two-scale form they are scaled from",
            |p, ctx| cor210(p, ctx, -1),
        ),
    ]
}

fn ramanujan_pair() -> Vec<Identity> {
    fn eq219(p: &Params, ctx: &PrecisionContext, swap: bool) -> Result<Evaluation, NumericError> {
        let (kk, t) = (k(p, "k"), q(p, "t"));
        let (a, b) = (pi_times(ctx, &t), pi_times(ctx, &t.recip()));
        let s = 2 * kk - 1;
        let half_zeta = zeta(s).eval(ctx)?.div_i64(2);
        let (first, second) = if swap { (&b, &a) } else { (&a, &b) };
        let br1 = &half_zeta + sum_hyper(&[power(Kernel::InvExpm1, first.mul_i64(2), s)], ctx)?;
        let br2 = &half_zeta + sum_hyper(&[power(Kernel::InvExpm1, second.mul_i64(2), s)], ctx)?;
        let e = -(kk as i64 - 1);
        let lhs = b.mul_i64(4).powi_signed(e)? * br1 - a.mul_i64(-4).powi_signed(e)? * br2;
        let mut rhs = ClosedForm::zero();
        for j in 0..=kk {
            let (x, y) = (2 * j as u64, 2 * (kk - j) as u64);
            let c = -sgn(j) * bernoulli(x) * bernoulli(y) / Rational::from_integer(factorial(x) * factorial(y));
            rhs += ab(j as i64, (kk - j) as i64, &t).scale(&c);
        }
        Evaluation::closed(lhs, rhs, ctx)
    }
    fn eq220(p: &Params, ctx: &PrecisionContext, weighted: bool) -> Result<Evaluation, NumericError> {
        let (kk, t) = (k(p, "k"), q(p, "t"));
        let (a, b) = (pi_times(ctx, &t), pi_times(ctx, &t.recip()));
        let s = 2 * kk - 1;
        let eta = zeta(s).eval(ctx)? * ctx.rational(&(Rational::one() - pow2(-(s as i64))));
        let w = if weighted { s } else { 0 };
        let bracket = |x: &BigReal| -> Result<BigReal, NumericError> {
            Ok(&eta - sum_hyper(&[power(Kernel::InvExpp1, x.clone(), w).odd()], ctx)?.mul_i64(2))
        };
        let e = -(kk as i64 - 1);
        let lhs = a.powi_signed(e)? * bracket(&a)? - (-&b).powi_signed(e)? * bracket(&b)?;
        let rhs: ClosedForm = compositions(kk, 2)
            .into_iter()
            .map(|c| {
                let (k1, k2) = (c[0], c[1]);
                let r = tanh_coef(k1) * tanh_coef(k2) * bernoulli(2 * k1 as u64).abs() * bernoulli(2 * k2 as u64);
                ab(k2 as i64, k1 as i64, &t).scale(&r)
            })
            .sum();
        Evaluation::closed(lhs, rhs, ctx)
    }
    let defaults = grid(&[("k", ints(2..=4)), ("t", vec![int(1), int(2), rat(2, 3)])]);
    vec![
        Identity::new(
            "eq2.19",
            "2",
            "(4 beta)^-(k-1) {zeta(2k-1)/2 + sum 1/(n^(2k-1)(e^(2n alpha)-1))} - (-4 alpha)^-(k-1) {zeta(2k-1)/2 + sum 1/(n^(2k-1)(e^(2n beta)-1))} = sum_{j=0..k} (-1)^(j-1) B(2j) B(2k-2j)/((2j)!(2k-2j)!) alpha^j beta^(k-j)",
        )
        .integer("k", 2)
        .rational("t")
        .require("t > 0", |p| positive(p, &["t"]))
        .defaults(defaults.clone())
        .printed(|p, ctx| eq219(p, ctx, false))
        .variant(
            "exponentials swapped",
            "each bracket must carry the exponential in the scale of its own prefactor",
            |p, ctx| eq219(p, ctx, true),
        ),
        Identity::new(
            "eq2.20",
            "2",
            "alpha^-(k-1) {eta(2k-1) - 2 sum 1/(e^((2n-1) alpha)+1)} - (-beta)^-(k-1) {eta(2k-1) - 2 sum 1/(e^((2n-1) beta)+1)} = sum_{k1+k2=k} (2^(2k1)-1)(2^(2k2)-1) |B(2k1)| B(2k2)/((2k1)!(2k2)!) alpha^k2 beta^k1",
        )
        .integer("k", 2)
        .rational("t")
        .require("t > 0", |p| positive(p, &["t"]))
        .defaults(defaults)
        .printed(|p, ctx| eq220(p, ctx, false))
        .variant(
            "weight (2n-1)^-(2k-1) inside the sums",
            "eta(2k-1) pairs with a series weighted like its own terms",
            |p, ctx| eq220(p, ctx, true),
        ),
    ]
}

fn conv_zeta(total: u32, f: impl Fn(u32, u32) -> ClosedForm) -> ClosedForm {
    compositions(total, 2).into_iter().map(|c| f(c[0], c[1])).sum()
}

fn fixed_closed(id: &'static str, anchor: &'static str, lhs: Eval) -> Identity {
    Identity::new(id, "2", anchor).fixed().printed(lhs)
}

fn examples() -> Vec<Identity> {
    let k_defaults = |lo: i64| grid(&[("k", ints(lo..=lo + 2))]);
    let xy = |pairs: &[(i64, i64, i64, i64)]| -> Vec<Params> {
        pairs.iter().map(|&(a, b, c, d)| params(&[("x", rat(a, b)), ("y", rat(c, d))])).collect()
    };
    vec![
        fixed_closed("ex2.3.coth-cubed", "sum pi coth(pi n)/n^3 = 7 pi^4/180", |_, ctx| {
            let lhs = sum_hyper(&[power(Kernel::Coth, ctx.pi(), 3).times(&ctx.pi())], ctx)?;
            Evaluation::closed(lhs, ClosedForm::pi_pow(4).scale(&rat(7, 180)), ctx)
        }),
        fixed_closed("ex2.3.sinh-cubed", "sum pi (-1)^(n-1)/(n^3 sinh(pi n)) = pi^4/360", |_, ctx| {
            let lhs = sum_hyper(&[power(Kernel::Csch, ctx.pi(), 3).alternating().times(&ctx.pi())], ctx)?;
            Evaluation::closed(lhs, ClosedForm::pi_pow(4).scale(&rat(1, 360)), ctx)
        }),
        fixed_closed("ex2.3.tanh-cubed", "sum pi tanh((2n-1) pi/2)/(2n-1)^3 = pi^4/32", |_, ctx| {
            let lhs = sum_hyper(&[power(Kernel::Tanh, ctx.pi().div_i64(2), 3).odd().times(&ctx.pi())], ctx)?;
            Evaluation::closed(lhs, ClosedForm::pi_pow(4).scale(&rat(1, 32)), ctx)
        }),
        fixed_closed("ex2.3.cosh-pi8", "sum (-1)^(n-1)/((2n-1) cosh((2n-1) pi/2)) = pi/8", |_, ctx| {
            let lhs = sum_hyper(&[power(Kernel::Sech, ctx.pi().div_i64(2), 1).odd().alternating()], ctx)?;
            Evaluation::closed(lhs, ClosedForm::pi_pow(1).scale(&rat(1, 8)), ctx)
        }),
        Identity::new(
            "ex2.3.coth-4k",
            "2",
            "sum pi coth(pi n)/n^(4k-1) = zeta(4k) - sum_{k1+k2=2k} (-1)^k2 zeta(2k1) zeta(2k2)",
        )
        .integer("k", 1)
        .defaults(k_defaults(1))
        .printed(|p, ctx| {
            let kk = k(p, "k");
            let lhs = sum_hyper(&[power(Kernel::Coth, ctx.pi(), 4 * kk - 1).times(&ctx.pi())], ctx)?;
            let rhs = zeta(4 * kk) + conv_zeta(2 * kk, |a, b| (zeta(2 * a) * zeta(2 * b)).scale(&-sgn(b)));
            Evaluation::closed(lhs, rhs, ctx)
        }),
        Identity::new(
            "ex2.3.sinh-4k",
            "2",
            "sum pi (-1)^(n-1)/(n^(4k-1) sinh(pi n)) = zetabar(4k) + sum_{k1+k2=2k} (-1)^k2 zetabar(2k1) zetabar(2k2)",
        )
        .integer("k", 1)
        .defaults(k_defaults(1))
        .printed(|p, ctx| {
            let kk = k(p, "k");
            let lhs = sum_hyper(&[power(Kernel::Csch, ctx.pi(), 4 * kk - 1).alternating().times(&ctx.pi())], ctx)?;
            let rhs = zetabar(4 * kk) + conv_zeta(2 * kk, |a, b| (zetabar(2 * a) * zetabar(2 * b)).scale(&sgn(b)));
            Evaluation::closed(lhs, rhs, ctx)
        }),
        Identity::new(
            "ex2.3.tanh-4k",
            "2",
            "sum pi tanh((2n-1) pi/2)/(2n-1)^(4k-1) = sum_{k1+k2=2k} (2^(2k1)-1)(2^(2k2)-1) |B(2k1)| B(2k2)/(2 (2k1)! (2k2)!) pi^(4k)",
        )
        .integer("k", 1)
        .defaults(k_defaults(1))
        .printed(|p, ctx| {
            let kk = k(p, "k");
            let lhs =
                sum_hyper(&[power(Kernel::Tanh, ctx.pi().div_i64(2), 4 * kk - 1).odd().times(&ctx.pi())], ctx)?;
            let rhs = conv_zeta(2 * kk, |a, b| {
                let c = tanh_coef(a) * tanh_coef(b) * bernoulli(2 * a as u64).abs() * bernoulli(2 * b as u64) / int(2);
                ClosedForm::pi_pow(4 * kk as i64).scale(&c)
            });
            Evaluation::closed(lhs, rhs, ctx)
        }),
        Identity::new(
            "ex2.3.cosh-4k",
            "2",
            "sum pi (-1)^(n-1)/((2n-1)^(4k+1) cosh((2n-1) pi/2)) = sum_{k1+k2=2k, ki>=0} |E(2k1)| E(2k2)/(2 (2k1)! (2k2)!) (pi/2)^(4k+2)",
        )
        .integer("k", 0)
        .defaults(k_defaults(0))
        .printed(|p, ctx| {
            let kk = k(p, "k");
            let lhs = sum_hyper(
                &[power(Kernel::Sech, ctx.pi().div_i64(2), 4 * kk + 1).odd().alternating().times(&ctx.pi())],
                ctx,
            )?;
            let mut rhs = ClosedForm::zero();
            for a in 0..=2 * kk {
                let b = 2 * kk - a;
                let c = euler_coef(a, b).abs() * sgn(b) / int(2) * pow2(-(4 * kk as i64 + 2));
                rhs += ClosedForm::pi_pow(4 * kk as i64 + 2).scale(&c);
            }
            Evaluation::closed(lhs, rhs, ctx)
        }),
        Identity::new(
            "ex2.3.mixed-k",
            "2",
            "sum pi/(n^(2k-1) sinh(pi n)) + (-1)^k sum pi coth(pi n) (-1)^n/n^(2k-1) = zeta(2k) - (-1)^k zetabar(2k) + 2 sum_{k1+k2=k} (-1)^k2 zeta(2k1) zetabar(2k2)",
        )
        .integer("k", 1)
        .defaults(k_defaults(1))
        .printed(|p, ctx| {
            let kk = k(p, "k");
            let pi = ctx.pi();
            let s = 2 * kk - 1;
            let lhs = sum_hyper(
                &[
                    power(Kernel::Csch, pi.clone(), s).times(&pi),
                    power(Kernel::Coth, pi.clone(), s).alternating().times(&pi.mul_i64(-sgn_i(kk))),
                ],
                ctx,
            )?;
            let rhs = zeta(2 * kk) + zetabar(2 * kk).scale(&-sgn(kk))
                + conv_zeta(kk, |a, b| (zeta(2 * a) * zetabar(2 * b)).scale(&(int(2) * sgn(b))));
            Evaluation::closed(lhs, rhs, ctx)
        }),
        {
            fn mixed(p: &Params, ctx: &PrecisionContext, corrected: bool) -> Result<Evaluation, NumericError> {
                let (x, y) = (q(p, "x"), q(p, "y"));
                let pi = ctx.pi();
                let lhs = sum_hyper(
                    &[
                        power(Kernel::Csch, pi_times(ctx, &(&y / &x)), 1).times(&pi),
                        power(Kernel::Coth, pi_times(ctx, &(&x / &y)), 1).alternating().times(&pi),
                    ],
                    ctx,
                )?;
                let c = if corrected {
                    (int(2) * &x * &x + &y * &y) / (int(2) * &x * &y)
                } else {
                    (int(2) * &x + &y) / int(2)
                };
                Evaluation::closed(lhs, zeta(2).scale(&c), ctx)
            }
            Identity::new(
                "ex2.3.mixed-xy",
                "2",
                "sum pi/(n sinh(pi n y/x)) - sum pi coth(pi n x/y) (-1)^n/n = zeta(2)(2x+y)/2",
            )
            .rational("x")
            .rational("y")
            .require("x > 0 and y > 0", |p| positive(p, &["x", "y"]))
            .defaults(xy(&[(1, 1, 1, 1), (1, 1, 2, 1), (3, 2, 1, 1)]))
            .printed(|p, ctx| mixed(p, ctx, false))
            .variant(
                "right side zeta(2)(2x^2+y^2)/(2xy)",
                "the two-scale identity at k = 1 divided by xy; the printed side is not homogeneous of degree 0",
                |p, ctx| mixed(p, ctx, true),
            )
        },
        Identity::new(
            "ex2.3.cosh-pair",
            "2",
            "sum (-1)^(n-1) {1/((2n-1) cosh((2n-1) pi y/(2x))) + 1/((2n-1) cosh((2n-1) pi x/(2y)))} = pi/4",
        )
        .rational("x")
        .rational("y")
        .require("x > 0 and y > 0", |p| positive(p, &["x", "y"]))
        .defaults(xy(&[(1, 1, 1, 1), (1, 1, 2, 1), (3, 2, 1, 1)]))
        .printed(|p, ctx| {
            let (x, y) = (q(p, "x"), q(p, "y"));
            let lhs = sum_hyper(
                &[
                    power(Kernel::Sech, pi_times(ctx, &(&y / &x / int(2))), 1).odd().alternating(),
                    power(Kernel::Sech, pi_times(ctx, &(&x / &y / int(2))), 1).odd().alternating(),
                ],
                ctx,
            )?;
            Evaluation::closed(lhs, ClosedForm::pi_pow(1).scale(&rat(1, 4)), ctx)
        }),
        Identity::new(
            "ex2.3.tanh-xy",
            "2",
            "x^2 sum pi tanh((2n-1) pi y/(2x))/(2n-1)^3 + y^2 sum pi tanh((2n-1) pi x/(2y))/(2n-1)^3 = pi^4 xy/16",
        )
        .rational("x")
        .rational("y")
        .require("x > 0 and y > 0", |p| positive(p, &["x", "y"]))
        .defaults(xy(&[(1, 1, 1, 1), (1, 1, 2, 1), (3, 2, 1, 1)]))
        .printed(|p, ctx| {
            let (x, y) = (q(p, "x"), q(p, "y"));
            let pi = ctx.pi();
            let lhs = sum_hyper(
                &[
                    power(Kernel::Tanh, pi_times(ctx, &(&y / &x / int(2))), 3).odd().times(&(&pi * r(ctx, &(&x * &x)))),
                    power(Kernel::Tanh, pi_times(ctx, &(&x / &y / int(2))), 3).odd().times(&(&pi * r(ctx, &(&y * &y)))),
                ],
                ctx,
            )?;
            Evaluation::closed(lhs, ClosedForm::pi_pow(4).scale(&(&x * &y / int(16))), ctx)
        }),
        Identity::new(
            "ex2.3.cosh-xy",
            "2",
            "x^2 sum pi (-1)^(n-1)/((2n-1)^3 cosh((2n-1) pi y/(2x))) - y^2 sum pi (-1)^(n-1)/((2n-1)^3 cosh((2n-1) pi x/(2y))) = pi^4 (x^2-y^2)/32",
        )
        .rational("x")
        .rational("y")
        .require("x > 0 and y > 0", |p| positive(p, &["x", "y"]))
        .defaults(xy(&[(1, 1, 1, 1), (1, 1, 2, 1), (3, 2, 1, 1)]))
        .printed(|p, ctx| {
            let (x, y) = (q(p, "x"), q(p, "y"));
            let pi = ctx.pi();
            let lhs = sum_hyper(
                &[
                    power(Kernel::Sech, pi_times(ctx, &(&y / &x / int(2))), 3)
                        .odd()
                        .alternating()
                        .times(&(&pi * r(ctx, &(&x * &x)))),
                    power(Kernel::Sech, pi_times(ctx, &(&x / &y / int(2))), 3)
                        .odd()
                        .alternating()
                        .times(&-(&pi * r(ctx, &(&y * &y)))),
                ],
                ctx,
            )?;
            Evaluation::closed(lhs, ClosedForm::pi_pow(4).scale(&((&x * &x - &y * &y) / int(32))), ctx)
        }),
    ]
}
