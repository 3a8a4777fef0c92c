//! zeta(2k-1) through the self-dual point of the cot-coth family.

use hypsum::catalog::{ramanujan_zeta_odd, RamanujanOutcome};
use hypsum::numeric::make_context;
use hypsum::special::zeta_numeric;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = make_context(40)?;
    for m in [3, 5, 7, 11] {
        match ramanujan_zeta_odd(m, &ctx)? {
            RamanujanOutcome::Value(v) => {
                let d = (&v - zeta_numeric(m as i64, &ctx)?).abs();
                println!("zeta({m}) = {:.40}  (Euler-Maclaurin agrees to 1e{:.0})", v, d.log10_abs());
            }
            RamanujanOutcome::Degenerate => println!("zeta({m}): degenerate at alpha = beta = pi"),
        }
    }
    Ok(())
}
