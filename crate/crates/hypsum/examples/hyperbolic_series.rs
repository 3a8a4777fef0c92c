//! Summing hyperbolic series with rigorous truncation.

use hypsum::numeric::make_context;
use hypsum::series::{sum_hyper, HyperSum, Kernel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = make_context(50)?;
    let pi = ctx.pi();

    // sum pi coth(pi n)/n^3 = 7 pi^4/180
    let lhs = sum_hyper(&[HyperSum::power(Kernel::Coth, pi.clone(), 3).times(&pi)], &ctx)?;
    let rhs = pi.powi(4).mul_i64(7).div_i64(180);
    println!("coth: {:.50}\n      residual 1e{:.0}", lhs, (&lhs - &rhs).abs().log10_abs());

    // sum 1/((2n-1) sinh((2n-1) pi)) = log(2)/8
    let lhs = sum_hyper(&[HyperSum::power(Kernel::Csch, pi.clone(), 1).odd()], &ctx)?;
    println!("csch: residual 1e{:.0}", (lhs - ctx.ln2().div_i64(8)).abs().log10_abs());

    // coth -> 1 at infinity, so sum coth(pi n)(-1)^(n-1)/n needs the split
    let lhs = sum_hyper(&[HyperSum::power(Kernel::Coth, pi.clone(), 1).alternating()], &ctx)?;
    let rhs = ctx.ln2().div_i64(4) + pi.div_i64(6);
    println!("alternating coth: residual 1e{:.0}", (lhs - rhs).abs().log10_abs());
    Ok(())
}
