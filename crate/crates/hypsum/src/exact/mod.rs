//! Exact rationals, Bernoulli and Euler numbers, and the symbolic constant
//! algebra every closed-form side is written in.

mod closed_form;
mod eval;
pub use eval::closedform_eval;
mod parse;

pub use closed_form::{Atom, ClosedForm, Monomial};
pub use parse::ParseError;

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("usage error: {0}")]
    Usage(String),
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// 2^e as an exact rational, for any sign of `e`.
pub fn pow2(e: i64) -> Rational {
    let m = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(m)
    } else {
        Rational::new(BigInt::one(), m)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for j in 0..k {
        c = c * (n - j) / (j + 1);
    }
    c
}

/// Parses `p`, `-p` or `p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Usage(format!("malformed rational {s:?}; expected p or p/q"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let ok = |t: &str| {
        let t = t.strip_prefix(['-', '+']).unwrap_or(t);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(n) || !ok(d) || d.starts_with(['-', '+']) {
        return Err(bad());
    }
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ExactError::Usage(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// `p/q` rendering, `p` when integral.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![int(1), rat(-1, 2)]))
}

/// B_n with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
pub fn bernoulli(n: u64) -> Rational {
    let mut cache = bernoulli_cache().lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() as u64 <= n {
        let m = cache.len() as u64;
        if m % 2 == 1 {
            cache.push(Rational::zero());
            continue;
        }
        let mut row = BigInt::one();
        let mut acc = Rational::zero();
        for j in 0..m {
            if j >= 2 && j % 2 == 1 {
                row = row * (m + 1 - j) / (j + 1);
                continue;
            }
            acc += &cache[j as usize] * Rational::from_integer(row.clone());
            row = row * (m + 1 - j) / (j + 1);
        }
        cache.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    cache[n as usize].clone()
}

fn euler_cache() -> &'static Mutex<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// Euler numbers E_n (E_0 = 1, E_2 = -1, E_4 = 5); odd indices vanish.
pub fn euler_number(n: u64) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let half = n / 2;
    let mut cache = euler_cache().lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() as u64 <= half {
        let m = cache.len() as u64;
        let s: BigInt = (0..m).map(|j| binomial(2 * m, 2 * j) * &cache[j as usize]).sum();
        cache.push(-s);
    }
    cache[half as usize].clone()
}

fn check_even(two_k: i64) -> Result<i64, ExactError> {
    if two_k < 2 || two_k.is_odd() {
        return Err(ExactError::Usage(format!("argument must be a positive even integer, got {two_k}")));
    }
    Ok(two_k / 2)
}

/// Rational c with zeta(2k) = c * pi^{2k}.
pub fn zeta_even_coefficient(k: u64) -> Rational {
    let b = bernoulli(2 * k);
    let sign = if k % 2 == 1 { int(1) } else { int(-1) };
    sign * b * pow2(2 * k as i64) / Rational::from_integer(factorial(2 * k) * 2)
}

/// Euler's evaluation of zeta(2k) as a rational multiple of pi^{2k}.
pub fn zeta_even_exact(two_k: i64) -> Result<ClosedForm, ExactError> {
    let k = check_even(two_k)? as u64;
    Ok(ClosedForm::pi_pow(2 * k as i64).scale(&zeta_even_coefficient(k)))
}

/// Alternating zeta (1 - 2^{1-2k}) zeta(2k).
pub fn zetabar_even_exact(two_k: i64) -> Result<ClosedForm, ExactError> {
    let k = check_even(two_k)?;
    Ok(zeta_even_exact(two_k)?.scale(&(int(1) - pow2(1 - 2 * k))))
}

/// Odd-integer zeta (1 - 2^{-2k}) zeta(2k).
pub fn eta_like_exact(two_k: i64) -> Result<ClosedForm, ExactError> {
    let k = check_even(two_k)?;
    Ok(zeta_even_exact(two_k)?.scale(&(int(1) - pow2(-2 * k))))
}

pub fn is_odd_positive(r: &Rational) -> bool {
    r.is_integer() && r.is_positive() && r.numer().is_odd()
}
