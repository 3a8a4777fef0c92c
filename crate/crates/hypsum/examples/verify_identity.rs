//! Verifying a single catalog entry, including one with a misprint.

use std::collections::BTreeMap;

use hypsum::catalog::{lookup, verify};
use hypsum::exact::rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut params = BTreeMap::new();
    params.insert("k".to_string(), rat(3, 1));
    params.insert("x".to_string(), rat(1, 1));
    params.insert("y".to_string(), rat(2, 1));
    let r = verify("thm2.1", &params, 50)?;
    println!("{} [{}]: {} residual 1e{}", r.id, r.params_string(), r.status, r.residual_log10().unwrap_or(0));

    let entry = lookup("eq3.7")?;
    let r = verify("eq3.7", &BTreeMap::new(), 40)?;
    println!("{}: {}", entry.id, entry.anchor);
    for o in &r.outcomes {
        println!("  {:<12} residual {}e{}", o.label, o.residual.mantissa, o.residual.log10);
    }
    println!("  -> {} using {:?}", r.status, entry.variants[r.variant].rationale);
    Ok(())
}
