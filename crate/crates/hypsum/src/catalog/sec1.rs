use super::build::*;
use super::{Evaluation, Identity};
use crate::exact::rat;
use crate::series::{sum_hyper, Kernel};

pub(super) fn entries() -> Vec<Identity> {
    let sinh2 = |half: i64| {
        move |_: &super::Params, ctx: &crate::numeric::PrecisionContext| {
            let pi = ctx.pi();
            let pi2 = pi.sqr();
            // (-1)^n = -(-1)^{n-1}
            let lhs = sum_hyper(
                &[
                    power(Kernel::Csch2, pi.clone(), 0).alternating().times(&-&pi2),
                    power(Kernel::CoshCsch2, pi.clone(), 0).times(&pi2),
                ],
                ctx,
            )?;
            Evaluation::closed(lhs, zeta(2).scale(&rat(half, 2)), ctx)
        }
    };
    vec![Identity::new(
        "intro.sinh2",
        "1",
        "sum pi^2 (-1)^n/sinh^2(pi n) + sum pi^2 cosh(pi n)/sinh^2(pi n) + zeta(2)/2 = 0",
    )
    .fixed()
    .printed(sinh2(-1))
    .variant("constant -zeta(2)/2", "the two series sum to +zeta(2)/2; the constant enters with a minus sign", sinh2(1))]
}
