//! Transcendental constants and functions beyond the closed-form atoms:
//! zeta at integers, Catalan's G, Euler's gamma, real Gamma, complex digamma.

mod gamma;
mod zeta;

pub use gamma::{digamma_complex, euler_gamma, gamma_real};
pub use zeta::{catalan, catalan_ramanujan, zeta_alternating, zeta_numeric};

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::numeric::{BigReal, NumericError, PrecisionContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstId {
    Pi,
    Log2,
    Catalan,
    EulerGamma,
    Zeta(u32),
    GammaThreeQuarters,
    Sqrt2,
}

impl ConstId {
    /// Names accepted by the `const` subcommand.
    pub fn parse(name: &str) -> Option<ConstId> {
        let n = name.trim().to_ascii_lowercase();
        match n.as_str() {
            "pi" => Some(ConstId::Pi),
            "log2" | "ln2" => Some(ConstId::Log2),
            "catalan" | "g" => Some(ConstId::Catalan),
            "gamma" | "euler_gamma" | "euler-gamma" => Some(ConstId::EulerGamma),
            "gamma34" | "gamma(3/4)" => Some(ConstId::GammaThreeQuarters),
            "sqrt2" => Some(ConstId::Sqrt2),
            _ => {
                let m: u32 = n.strip_prefix("zeta")?.trim_matches(|c| c == '(' || c == ')').parse().ok()?;
                (m >= 2).then_some(ConstId::Zeta(m))
            }
        }
    }

    pub fn names() -> &'static [&'static str] {
        &["pi", "log2", "catalan", "gamma", "gamma34", "sqrt2", "zeta2", "zeta3", "zeta5", "zeta7"]
    }

    fn compute(self, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
        match self {
            ConstId::Pi => Ok(ctx.pi()),
            ConstId::Log2 => Ok(ctx.ln2()),
            ConstId::Catalan => catalan(ctx),
            ConstId::EulerGamma => euler_gamma(ctx),
            ConstId::Zeta(s) => zeta_numeric(s as i64, ctx),
            ConstId::GammaThreeQuarters => gamma_real(&ctx.ratio(3, 4), ctx),
            ConstId::Sqrt2 => ctx.int(2).sqrt(),
        }
    }
}

type Table = Mutex<HashMap<(ConstId, u32, u32), BigReal>>;

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoised constant at the context's precision.
pub fn constant(id: ConstId, ctx: &PrecisionContext) -> Result<BigReal, NumericError> {
    let key = (id, ctx.digits(), ctx.guard());
    if let Some(v) = table().lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(v.clone());
    }
    let v = id.compute(ctx)?;
    table().lock().unwrap_or_else(|e| e.into_inner()).insert(key, v.clone());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        assert_eq!(ConstId::parse("zeta3"), Some(ConstId::Zeta(3)));
        assert_eq!(ConstId::parse("zeta(5)"), Some(ConstId::Zeta(5)));
        assert_eq!(ConstId::parse("Catalan"), Some(ConstId::Catalan));
        assert_eq!(ConstId::parse("zeta1"), None);
        assert_eq!(ConstId::parse("nope"), None);
        for n in ConstId::names() {
            assert!(ConstId::parse(n).is_some(), "{n}");
        }
    }

    #[test]
    fn memo_reproducible() {
        let ctx = PrecisionContext::new(30).unwrap();
        let a = constant(ConstId::Catalan, &ctx).unwrap();
        let b = constant(ConstId::Catalan, &ctx).unwrap();
        assert_eq!(a.to_sci_string(30), b.to_sci_string(30));
        assert_eq!(a.to_sci_string(30), catalan(&ctx).unwrap().to_sci_string(30));
    }
}
