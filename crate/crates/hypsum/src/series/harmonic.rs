use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::exact::{ExactError, Rational};

type Cache = Mutex<HashMap<u32, Vec<Rational>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// H_n^{(p)} = sum_{k=1}^n 1/k^p, exact and memoised per order p.
pub fn harmonic(n: u64, p: u32) -> Result<Rational, ExactError> {
    if n == 0 || p == 0 {
        return Err(ExactError::Usage(format!("harmonic needs n >= 1 and p >= 1, got n = {n}, p = {p}")));
    }
    let mut guard = cache().lock().unwrap_or_else(|e| e.into_inner());
    let row = guard.entry(p).or_insert_with(|| vec![Rational::from_integer(0.into())]);
    while (row.len() as u64) <= n {
        let k = row.len() as u64;
        let next = row.last().unwrap() + Rational::new(1.into(), BigInt::from(k).pow(p));
        row.push(next);
    }
    Ok(row[n as usize].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn small_values() {
        assert_eq!(harmonic(1, 1).unwrap(), int(1));
        assert_eq!(harmonic(3, 1).unwrap(), rat(11, 6));
        assert_eq!(harmonic(2, 2).unwrap(), rat(5, 4));
        assert!(harmonic(0, 1).is_err());
        assert!(harmonic(3, 0).is_err());
    }
}
