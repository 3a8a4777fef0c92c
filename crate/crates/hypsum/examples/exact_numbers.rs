//! Exact rationals, Bernoulli and Euler numbers, closed forms.

use hypsum::exact::{bernoulli, euler_number, fmt_rational, parse_rational, zeta_even_exact, Atom, ClosedForm};
use hypsum::numeric::make_context;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [2, 4, 12, 30] {
        println!("B_{n} = {}", fmt_rational(&bernoulli(n)));
    }
    println!("E_10 = {}", euler_number(10));

    // zeta(4) = pi^4/90, built exactly
    let z4 = zeta_even_exact(4)?;
    println!("zeta(4) = {z4}");

    let g = ClosedForm::atom(Atom::Catalan);
    let mixed = z4.scale(&parse_rational("19/2")?) + g * ClosedForm::pi_pow(2).scale(&parse_rational("2/3")?);
    let ctx = make_context(30)?;
    println!("{mixed} = {:.30}", mixed.eval(&ctx)?);

    assert!(parse_rational("0.5").is_err());
    Ok(())
}
