//! Named constants, each checked against a second method.

use hypsum::numeric::{make_context, BigComplex};
use hypsum::special::{catalan, catalan_ramanujan, constant, digamma_complex, zeta_alternating, zeta_numeric, ConstId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = make_context(60)?;
    for name in ["catalan", "gamma", "gamma34", "zeta3", "zeta5"] {
        let id = ConstId::parse(name).expect("known name");
        println!("{name:>8} = {:.60}", constant(id, &ctx)?);
    }

    let g = catalan(&ctx)? - catalan_ramanujan(&ctx)?;
    println!("catalan, two series: difference 1e{:.0}", g.abs().log10_abs());

    // Euler-Maclaurin against the accelerated alternating series
    let d = zeta_alternating(3, &ctx)? - zeta_numeric(3, &ctx)?;
    println!("zeta(3), two routes: difference 1e{:.0}", d.abs().log10_abs());

    // psi(s) - psi(-s) = -1/s - pi cot(pi s) at s = 0.3 + 0.4i
    let s = BigComplex::new(ctx.ratio(3, 10), ctx.ratio(2, 5));
    let neg = BigComplex::new(-&s.re, -&s.im);
    let lhs = digamma_complex(&s, &ctx)? - digamma_complex(&neg, &ctx)?;
    let pi = BigComplex::from_real(ctx.pi());
    let rhs = -(s.recip()? + pi.clone() * (pi * s).cot()?);
    println!("digamma reflection: |lhs - rhs| ~ 1e{:.0}", (lhs - rhs).abs().log10_abs());
    Ok(())
}
