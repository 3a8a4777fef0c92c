//! Infinite products of the form prod (1 +- e^(-(a n - b))).

use hypsum::exact::{rat, Atom, ClosedForm};
use hypsum::numeric::make_context;
use hypsum::series::{infinite_product, ProductSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = make_context(40)?;
    let pi = ctx.pi();

    let p = infinite_product(&ProductSpec::exp_family(-1, pi.mul_i64(2), ctx.zero()), &ctx)?;
    let closed = ClosedForm::term(
        rat(1, 1),
        [
            (Atom::Pi, rat(1, 4)),
            (Atom::ExpPi(rat(1, 12)), rat(1, 1)),
            (Atom::Two, rat(-1, 2)),
            (Atom::GammaThreeQuarters, rat(-1, 1)),
        ],
    );
    println!("prod (1 - e^(-2 pi n)) = {:.40}", p);
    println!("{closed} -> residual 1e{:.0}", (&p - closed.eval(&ctx)?).abs().log10_abs());

    let q = infinite_product(&ProductSpec::exp_family(1, pi.mul_i64(2), pi.clone()), &ctx)?;
    let closed = ClosedForm::term(rat(1, 1), [(Atom::Two, rat(1, 4)), (Atom::ExpPi(rat(-1, 24)), rat(1, 1))]);
    println!("prod (1 + e^(-pi(2n-1))) residual 1e{:.0}", (q - closed.eval(&ctx)?).abs().log10_abs());
    Ok(())
}
