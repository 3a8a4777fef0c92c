//! Working precision, guard digits and basic transcendental calls.

use hypsum::numeric::make_context;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for digits in [20, 50, 100] {
        let ctx = make_context(digits)?;
        let pi = ctx.pi();
        // sin(pi) is zero up to the working precision
        let s = pi.sin();
        println!(
            "{digits:>3} digits (working {}): pi = {:.*}  |sin(pi)| ~ 1e{:.0}",
            ctx.working_digits(),
            digits as usize,
            pi,
            s.abs().log10_abs()
        );
    }

    let ctx = make_context(40)?;
    let x = ctx.ratio(3, 7);
    let back = x.exp()?.ln()?;
    println!("ln(exp(3/7)) - 3/7 = {:.3}", back - x);
    Ok(())
}
