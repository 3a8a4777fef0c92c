use num_traits::One;

use super::build::*;
use super::{Evaluation, Identity, Params};
use crate::exact::{int, pow2, rat, ClosedForm, Rational};
use crate::numeric::{BigReal, NumericError, PrecisionContext};
use crate::series::{
    harmonic_sinh, psi_coth_alternating, psi_sinh_alternating, sum_double_psi_reduced, sum_hyper, DoublePsiShape,
    HyperSum, Kernel, Sign,
};

fn eta(s: u32) -> Rational {
    Rational::one() - pow2(1 - s as i64)
}

/// Solutions of 2 n1 + c n2 + ... = total in positive integers for the given
/// coefficients.
fn solutions(coefs: &[u32], total: u32) -> Vec<Vec<u32>> {
    let Some((&c, rest)) = coefs.split_first() else {
        return if total == 0 { vec![vec![]] } else { vec![] };
    };
    let mut out = Vec::new();
    let mut n = 1;
    while c * n <= total {
        for mut tail in solutions(rest, total - c * n) {
            tail.insert(0, n);
            out.push(tail);
        }
        n += 1;
    }
    out
}

fn live(terms: Vec<(i64, HyperSum)>, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let v: Vec<HyperSum> = terms.into_iter().filter(|(c, _)| *c != 0).map(|(c, h)| h.times(&ctx.int(c))).collect();
    sum_hyper(&v, ctx)
}

fn thm51(p: &Params, ctx: &PrecisionContext) -> Result<Evaluation, NumericError> {
    let pp = k(p, "p");
    let pi = ctx.pi();
    let pi2 = pi.sqr();
    let even = pp.is_multiple_of(2);
    let mut lhs = live(
        vec![
            (-(pp as i64 - sgn_i(pp)), power(Kernel::Csch, pi.clone(), pp + 1).times(&pi)),
            (-1, power(Kernel::CoshCsch2, pi.clone(), pp).times(&pi2)),
        ],
        ctx,
    )?;
    if even {
        let s = sgn_i(pp / 2);
        lhs += live(
            vec![
                (s, power(Kernel::Coth, pi.clone(), pp + 1).alternating().times(&pi)),
                (s, power(Kernel::Coth2, pi.clone(), pp).alternating().times(&pi2)),
            ],
            ctx,
        )?;
    } else {
        lhs += harmonic_sinh(pp, Sign::Plain, ctx)?.mul_i64(2);
        lhs += psi_coth_alternating(pp, ctx)?.mul_i64(2 * sgn_i(pp.div_ceil(2)));
    }
    let both = if even { int(2) } else { int(0) };
    let c = zeta(pp + 2).scale(&(&both * eta(pp + 2) * -sgn(pp / 2) - int(2) - sgn(pp)))
        + solutions(&[2, 2], pp + 2)
            .into_iter()
            .map(|n| (zeta(2 * n[0]) * zeta(2 * n[1])).scale(&(int(-2) * &both * eta(2 * n[0]) * sgn(n[0]))))
            .sum::<ClosedForm>()
        + solutions(&[2, 1], pp + 1)
            .into_iter()
            .map(|n| (zeta(2 * n[0]) * zeta(n[1] + 1)).scale(&(int(2) * (int(1) - eta(2 * n[0]) * sgn(n[0])))))
            .sum::<ClosedForm>()
        + solutions(&[2, 2, 1], pp + 1)
            .into_iter()
            .map(|n| {
                (zeta(2 * n[0]) * zeta(2 * n[1]) * zeta(n[2] + 1)).scale(&(int(4) * eta(2 * n[0]) * sgn(n[0])))
            })
            .sum::<ClosedForm>();
    Evaluation::closed(lhs, -c, ctx)
}

fn thm52(p: &Params, ctx: &PrecisionContext, triple: &[u32]) -> Result<Evaluation, NumericError> {
    let pp = k(p, "p");
    let pi = ctx.pi();
    let pi2 = pi.sqr();
    let even = pp.is_multiple_of(2);
    // (-1)^n = -(-1)^{n-1}
    let mut lhs = live(
        vec![
            (pp as i64 - sgn_i(pp), power(Kernel::Csch, pi.clone(), pp + 1).alternating().times(&pi)),
            (1, power(Kernel::CoshCsch2, pi.clone(), pp).alternating().times(&pi2)),
        ],
        ctx,
    )?;
    if even {
        let s = sgn_i(pp / 2);
        lhs += live(
            vec![
                (s, power(Kernel::Csch, pi.clone(), pp + 1).alternating().times(&pi)),
                (s, power(Kernel::CoshCsch2, pi.clone(), pp).alternating().times(&pi2)),
            ],
            ctx,
        )?;
    } else {
        lhs -= harmonic_sinh(pp, Sign::Alternating, ctx)?.mul_i64(2);
        lhs += psi_sinh_alternating(pp, ctx)?.mul_i64(2 * sgn_i(pp.div_ceil(2)));
    }
    let both = if even { int(2) } else { int(0) };
    let c = zeta(pp + 2).scale(&(eta(pp + 2) * &both * (int(1) - sgn(pp / 2)) - int(1)))
        + solutions(&[2, 1], pp + 1)
            .into_iter()
            .map(|n| (zetabar(2 * n[0]) * zeta(n[1] + 1)).scale(&(int(-2) * (int(1) + sgn(n[0])))))
            .sum::<ClosedForm>()
        + solutions(&[2, 2], pp + 2)
            .into_iter()
            .map(|n| (zetabar(2 * n[0]) * zetabar(2 * n[1])).scale(&(int(2) * &both * sgn(n[1]))))
            .sum::<ClosedForm>()
        + solutions(triple, pp + 1)
            .into_iter()
            .map(|n| (zetabar(2 * n[0]) * zetabar(2 * n[1]) * zeta(n[2] + 1)).scale(&(int(-4) * sgn(n[1]))))
            .sum::<ClosedForm>();
    Evaluation::closed(lhs, -c, ctx)
}

fn p_entry(id: &'static str, anchor: &'static str) -> Identity {
    Identity::new(id, "5", anchor).integer("p", 1).defaults(grid(&[("p", ints(1..=5))]))
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        p_entry(
            "thm5.1",
            "(1 + (-1)^(p+1)) sum pi H_n/(n^p sinh(pi n)) - (p + (-1)^(p+1)) sum pi/(n^(p+1) sinh(pi n)) - sum pi^2 cosh(pi n)/(n^p sinh^2(pi n)) + sum (-1)^n pi coth(pi n) i^(p+1) (psi(ni) + (-1)^(p+1) psi(-ni) + (1 + (-1)^(p+1)) gamma)/n^p + zeta(p+2){(1 + (-1)^p)(1 - 2^(-p-1))(-1)^([p/2]+1) - 2 - (-1)^p} - 2(1 + (-1)^p) sum_{2n1+2n2=p+2} (1 - 2^(1-2n1))(-1)^n1 zeta(2n1) zeta(2n2) + 2 sum_{2n1+n2=p+1} (1 - (1 - 2^(1-2n1))(-1)^n1) zeta(2n1) zeta(n2+1) + 4 sum_{2n1+2n2+n3=p+1} (1 - 2^(1-2n1))(-1)^n1 zeta(2n1) zeta(2n2) zeta(n3+1) = 0",
        )
        .printed(thm51),
        p_entry(
            "thm5.2",
            "(1 + (-1)^(p+1)) sum pi H_n (-1)^n/(n^p sinh(pi n)) - (p + (-1)^(p+1)) sum pi (-1)^n/(n^(p+1) sinh(pi n)) - sum pi^2 cosh(pi n)(-1)^n/(n^p sinh^2(pi n)) + sum (-1)^n pi i^(p+1) (psi(ni) + (-1)^(p+1) psi(-ni) + (1 + (-1)^(p+1)) gamma)/(n^p sinh(pi n)) + zeta(p+2){(1 - 2^(-p-1))(1 + (-1)^p)(1 + (-1)^([p/2]+1)) - 1} - 2 sum_{2n1+n2=p+1} (1 + (-1)^n1) zetabar(2n1) zeta(n2+1) + 2(1 + (-1)^p) sum_{2n1+2n2=p+2} (-1)^n2 zetabar(2n1) zetabar(2n2) - 4 sum_{2n1+2n2+2n3=p+1} (-1)^n2 zetabar(2n1) zetabar(2n2) zeta(n3+1) = 0",
        )
        .printed(|p, ctx| thm52(p, ctx, &[2, 2, 2]))
        .variant(
            "triple constraint 2n1 + 2n2 + n3 = p+1",
            "zeta(n3+1) runs over all integers n3, matching the double sum over 2n1 + n2",
            |p, ctx| thm52(p, ctx, &[2, 2, 1]),
        ),
        Identity::new(
            "thm5.1.p1",
            "5",
            "sum pi H_n/(n sinh(pi n)) = zeta(3)/2 + pi sum 1/(n^2 sinh(pi n)) + (pi^2/2) sum cosh(pi n)/(n sinh^2(pi n)) + sum_{n,k} k pi coth(k pi)(-1)^k/(n(n^2 + k^2))",
        )
        .fixed()
        .printed(|_, ctx| {
            let pi = ctx.pi();
            let lhs = harmonic_sinh(1, Sign::Plain, ctx)?;
            let s = sum_hyper(
                &[
                    power(Kernel::Csch, pi.clone(), 2).times(&pi),
                    power(Kernel::CoshCsch2, pi.clone(), 1).times(&pi.sqr().div_i64(2)),
                ],
                ctx,
            )?;
            let d = sum_double_psi_reduced(DoublePsiShape::CothAlternating, ctx)?;
            let rhs = zeta(3).scale(&rat(1, 2)).eval(ctx)? + s + d;
            Ok(Evaluation::numeric(lhs, rhs))
        }),
        Identity::new(
            "thm5.1.p2",
            "5",
            "sum pi/(n^3 sinh(pi n)) + sum pi^2 cosh(pi n)/(n^2 sinh^2(pi n)) - sum pi coth(pi n)(-1)^n/n^3 - sum pi^2 coth^2(pi n)(-1)^n/n^2 = (45/4) zeta(4)",
        )
        .fixed()
        .printed(|_, ctx| {
            let pi = ctx.pi();
            let pi2 = pi.sqr();
            let lhs = sum_hyper(
                &[
                    power(Kernel::Csch, pi.clone(), 3).times(&pi),
                    power(Kernel::CoshCsch2, pi.clone(), 2).times(&pi2),
                    power(Kernel::Coth, pi.clone(), 3).alternating().times(&pi),
                    power(Kernel::Coth2, pi.clone(), 2).alternating().times(&pi2),
                ],
                ctx,
            )?;
            Evaluation::closed(lhs, zeta(4).scale(&rat(45, 4)), ctx)
        }),
        Identity::new(
            "thm5.2.p1",
            "5",
            "sum pi H_n (-1)^n/(n sinh(pi n)) = zeta(3)/2 + sum pi (-1)^n/(n^2 sinh(pi n)) + (1/2) sum pi^2 cosh(pi n)(-1)^n/(n sinh^2(pi n)) + sum_{n,k} (-1)^n pi n/(k(k^2 + n^2) sinh(n pi))",
        )
        .fixed()
        .printed(|_, ctx| {
            let pi = ctx.pi();
            let lhs = -harmonic_sinh(1, Sign::Alternating, ctx)?;
            let s = sum_hyper(
                &[
                    power(Kernel::Csch, pi.clone(), 2).alternating().times(&-&pi),
                    power(Kernel::CoshCsch2, pi.clone(), 1).alternating().times(&-(pi.sqr().div_i64(2))),
                ],
                ctx,
            )?;
            let d = sum_double_psi_reduced(DoublePsiShape::SinhWeighted, ctx)?;
            let rhs = zeta(3).scale(&rat(1, 2)).eval(ctx)? + s + d;
            Ok(Evaluation::numeric(lhs, rhs))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solution_sets() {
        assert_eq!(solutions(&[2, 1], 4), vec![vec![1, 2]]);
        assert_eq!(solutions(&[2, 2], 4), vec![vec![1, 1]]);
        assert_eq!(solutions(&[2, 2, 1], 6), vec![vec![1, 1, 2]]);
        assert!(solutions(&[2, 2, 2], 5).is_empty());
    }
}
