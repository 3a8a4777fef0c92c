//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria 5 and 6 each contain a literal sub-claim that cannot hold (a pole
//! of cot, and a false Catalan evaluation). Those lines print FAIL; the
//! attainable parts are still checked and break the run if they regress.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use hypsum::catalog::{self, ramanujan_zeta_odd, RamanujanOutcome, Status};
use hypsum::exact::{bernoulli, binomial, euler_number, int, rat, Rational};
use hypsum::numeric::{make_context, BigComplex, BigReal};
use hypsum::residue::{derive_identity, theorem_rhs, Theorem};
use hypsum::series::audit;
use hypsum::special::{digamma_complex, zeta_alternating, zeta_numeric};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{rngs::StdRng, Rng, SeedableRng};

/// Literal sub-claims known to be unattainable.
const LEDGERED: [u32; 2] = [5, 6];

type Check = Result<(bool, String), String>;
type Criterion = (u32, &'static str, fn() -> Check);

fn params(p: &[(&str, Rational)]) -> BTreeMap<String, Rational> {
    p.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn verify(id: &str, p: &[(&str, Rational)], digits: u32) -> Result<catalog::VerificationResult, String> {
    catalog::verify(id, &params(p), digits).map_err(|e| format!("{id}: {e}"))
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_23() -> Check {
    let mut worst = Duration::ZERO;
    let mut top = i64::MIN;
    for id in ["ex2.3.coth-cubed", "ex2.3.sinh-cubed", "ex2.3.tanh-cubed", "ex2.3.cosh-pi8"] {
        let t = Instant::now();
        let r = verify(id, &[], 50)?;
        worst = worst.max(t.elapsed());
        let l = r.residual_log10().ok_or(format!("{id}: no residual"))?;
        require(r.status == Status::Pass && r.variant == 0 && l < -45, || format!("{id}: {} at 1e{l}", r.status))?;
        top = top.max(l);
    }
    Ok((worst < Duration::from_secs(1), format!("four values, worst residual 1e{top}, slowest {worst:.2?}")))
}

fn theorems_at_defaults() -> Check {
    let t = Instant::now();
    let mut n = 0;
    let mut top = i64::MIN;
    for th in Theorem::ALL {
        let id = th.id();
        for d in &catalog::lookup(&id).map_err(|e| e.to_string())?.defaults {
            let r = catalog::verify(&id, d, 40).map_err(|e| e.to_string())?;
            let l = r.residual_log10().unwrap_or(0);
            require(r.status == Status::Pass && l < -35, || format!("{id} [{}]: {} 1e{l}", r.params_string(), r.status))?;
            top = top.max(l);
            n += 1;
        }
    }
    let el = t.elapsed();
    Ok((el < Duration::from_secs(30), format!("{n} cases, worst residual 1e{top}, {el:.2?}")))
}

fn residue_engine() -> Check {
    let mut n = 0;
    for th in Theorem::ALL {
        for k in th.min_k()..=6 {
            let d = derive_identity(th, k).map_err(|e| e.to_string())?;
            let c = theorem_rhs(th, k).map_err(|e| e.to_string())?;
            require(d == c, || format!("{} k={k}: derived {d} vs catalog {c}", th.id()))?;
            n += 1;
        }
    }
    Ok((true, format!("{n} (theorem, k) pairs structurally equal")))
}

fn ramanujan_route() -> Check {
    let ctx = make_context(40).map_err(|e| e.to_string())?;
    let mut out = vec![];
    for m in [3, 7] {
        let RamanujanOutcome::Value(v) = ramanujan_zeta_odd(m, &ctx).map_err(|e| e.to_string())? else {
            return Err(format!("zeta({m}) degenerate"));
        };
        let d = (v - zeta_numeric(m as i64, &ctx).map_err(|e| e.to_string())?).abs();
        let l = if d.is_zero() { f64::NEG_INFINITY } else { d.log10_abs() };
        require(l < -40.0, || format!("zeta({m}) off by 1e{l:.0}"))?;
        out.push(format!("zeta({m}) 1e{l:.0}"));
    }
    Ok((true, format!("agrees with Euler-Maclaurin: {}", out.join(", "))))
}

fn partial_fractions() -> Check {
    let points = [(rat(1, 3), int(1), int(1)), (rat(12, 25), int(1), int(1))];
    let mut top = i64::MIN;
    for id in ["eq3.5", "eq3.6", "eq3.7", "eq3.8", "eq3.9"] {
        for (a, x, y) in &points {
            let r = verify(id, &[("a", a.clone()), ("x", x.clone()), ("y", y.clone())], 40)?;
            let l = r.residual_log10().unwrap_or(0);
            require(r.status.is_success() && l < -35, || format!("{id} [{}]: {} 1e{l}", r.params_string(), r.status))?;
            top = top.max(l);
        }
    }
    // the decomposition itself, at admissible points
    for (x, y) in [(rat(1, 3), rat(1, 2)), (rat(2, 5), rat(3, 7))] {
        let r = verify("eq3.3", &[("x", x), ("y", y)], 40)?;
        require(r.status.is_success(), || format!("eq3.3 [{}]: {}", r.params_string(), r.status))?;
    }
    let literal = catalog::verify("eq3.3", &params(&[("x", int(1)), ("y", int(1))]), 40);
    let rejected = matches!(&literal, Err(e) if e.is_usage());
    require(rejected, || "eq3.3 at (1,1) was not rejected".into())?;
    Ok((
        false,
        format!(
            "eq3.5-3.9 pass at a=1/3 and a=12/25 (worst 1e{top}); eq3.3 at (x,y)=(1,1) sits on a pole of cot(pi x) and is rejected, so that sub-claim cannot be reproduced"
        ),
    ))
}

fn section_four() -> Check {
    let results = catalog::verify_all(40, Some("4"), None).map_err(|e| e.to_string())?;
    let bad: Vec<_> = results.iter().filter(|r| !r.status.is_success()).map(|r| r.id.clone()).collect();
    require(bad.is_empty(), || format!("not resolved: {bad:?}"))?;
    let coth2 = verify("eq4.catalan-coth2", &[], 40)?;
    require(coth2.status == Status::Pass, || format!("catalan-coth2 {}", coth2.status))?;
    let sinh2 = verify("eq4.catalan-sinh2", &[], 40)?;
    let printed = &sinh2.outcomes[0].residual;
    require(sinh2.status == Status::ErratumResolved, || format!("catalan-sinh2 {}", sinh2.status))?;
    Ok((
        false,
        format!(
            "{} runs, none unresolved; 19/2 zeta(4) + 4 zeta(2) G holds; (2/3)G - (11/30)zeta(2) is off by {}e{} and only holds without the pi^2 factor",
            results.len(),
            printed.mantissa,
            printed.log10
        ),
    ))
}

fn complement(s: &BigComplex, ctx: &hypsum::numeric::PrecisionContext) -> Result<f64, String> {
    let e = |e: hypsum::numeric::NumericError| e.to_string();
    let neg = BigComplex::new(-&s.re, -&s.im);
    let lhs = digamma_complex(s, ctx).map_err(e)? - digamma_complex(&neg, ctx).map_err(e)?;
    let pi = BigComplex::from_real(ctx.pi());
    let rhs = -(s.recip().map_err(e)? + pi.clone() * (pi * s.clone()).cot().map_err(e)?);
    let scale = rhs.abs().log10_abs().max(0.0);
    let d = (lhs - rhs).abs();
    Ok(if d.is_zero() { f64::NEG_INFINITY } else { d.log10_abs() - scale })
}

fn digamma_and_section_five() -> Check {
    let ctx = make_context(40).map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut worst = f64::NEG_INFINITY;
    for i in 0..10 {
        let re = loop {
            let p: i64 = rng.gen_range(-2900..2900);
            if p % 1000 != 0 {
                break p;
            }
        };
        let im: i64 = if i < 5 { 0 } else { rng.gen_range(100..2900) };
        let s = BigComplex::new(ctx.ratio(re, 1000), ctx.ratio(im, 1000));
        let l = complement(&s, &ctx)?;
        require(l < -40.0, || format!("psi complement at {re}/1000 + {im}/1000 i: 1e{l:.0}"))?;
        worst = worst.max(l);
    }
    let mut ids = vec![];
    for (id, p) in [
        ("thm5.1.p1", vec![]),
        ("thm5.1.p2", vec![]),
        ("thm5.2.p1", vec![]),
        ("thm5.1", vec![("p", int(1))]),
        ("thm5.1", vec![("p", int(2))]),
        ("thm5.2", vec![("p", int(1))]),
        ("thm5.2", vec![("p", int(2))]),
    ] {
        let r = verify(id, &p, 30)?;
        require(r.status.is_success(), || format!("{id} [{}]: {}", r.params_string(), r.status))?;
        ids.push(format!("{id}{}", if p.is_empty() { String::new() } else { format!("[{}]", r.params_string()) }));
    }
    Ok((true, format!("complement formula at 10 points (worst 1e{worst:.0}); {} at 30 digits", ids.join(" "))))
}

fn section_six() -> Check {
    let entries = catalog::list(Some("6"));
    let (mut prods, mut logs) = (0, 0);
    for e in entries.iter().filter(|e| e.id.starts_with("eq6.prod.") || e.id.starts_with("eq6.log.")) {
        let r = verify(e.id, &[], 40)?;
        require(r.status == Status::Pass, || format!("{}: {}", e.id, r.status))?;
        if e.id.starts_with("eq6.prod.") {
            prods += 1;
        } else {
            logs += 1;
        }
    }
    require(prods >= 8 && logs >= 8, || format!("only {prods} products and {logs} log series"))?;
    Ok((true, format!("{prods} products and {logs} log series pass at 40 digits")))
}

fn property_suites() -> Check {
    for m in 1..=60u64 {
        let s: Rational = (0..=m).map(|j| Rational::from_integer(binomial(m + 1, j)) * bernoulli(j)).sum();
        require(s.is_zero(), || format!("Bernoulli recurrence at m={m}"))?;
    }
    for n in 1..=15u64 {
        let s: BigInt = (0..=n).map(|k| binomial(2 * n, 2 * k) * euler_number(2 * k)).sum();
        require(s.is_zero(), || format!("Euler recurrence at 2n={}", 2 * n))?;
    }
    let ctx = make_context(40).map_err(|e| e.to_string())?;
    for s in (3..=15).step_by(2) {
        let d: BigReal = zeta_numeric(s, &ctx).map_err(|e| e.to_string())? - zeta_alternating(s, &ctx).map_err(|e| e.to_string())?;
        require(d.is_zero() || d.log10_abs() < -40.0, || format!("zeta({s}) methods differ by 1e{:.0}", d.log10_abs()))?;
    }
    audit::set(true);
    let run = catalog::verify_all(30, None, None);
    audit::set(false);
    let c = audit::counts();
    let results = run.map_err(|e| e.to_string())?;
    require(results.iter().all(|r| r.status.is_success()), || "catalog regressed under audit".into())?;
    require(c.checked > 0 && c.tail_violations == 0 && c.doubling_violations == 0, || format!("{c:?}"))?;
    Ok((
        true,
        format!(
            "Bernoulli to 60, Euler to 30, dual zeta(3..15), {} series audited with no tail or doubling violations",
            c.checked
        ),
    ))
}

fn cli(args: &[&str]) -> Result<(i32, Duration), String> {
    let t = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hypsum")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), t.elapsed()))
}

fn errata_ledger() -> Check {
    let expect = [
        ("intro.sinh2", Status::ErratumResolved),
        ("eq3.7", Status::ErratumResolved),
        ("eq4.1", Status::ErratumResolved),
        ("eq4.5", Status::Pass),
    ];
    let mut notes = vec![];
    for (id, want) in expect {
        let r = verify(id, &[], 40)?;
        require(r.status == want, || format!("{id}: {} (expected {want})", r.status))?;
        let entry = catalog::lookup(id).map_err(|e| e.to_string())?;
        notes.push(format!("{id} {} via {:?}", r.status, entry.variants[r.variant].label));
    }
    let path = std::env::temp_dir().join(format!("hypsum-acceptance-{}.json", std::process::id()));
    let (code, _) = cli(&["verify-all", "--digits", "40", "--report", path.to_str().unwrap()])?;
    let _ = std::fs::remove_file(&path);
    require(code == 0, || format!("verify-all --digits 40 exited {code}"))?;
    Ok((true, format!("{}; verify-all --digits 40 exits 0", notes.join(", "))))
}

fn full_run_time() -> Check {
    let path = std::env::temp_dir().join(format!("hypsum-acceptance-50-{}.json", std::process::id()));
    let (code, el) = cli(&["verify-all", "--digits", "50", "--report", path.to_str().unwrap()])?;
    let _ = std::fs::remove_file(&path);
    require(code == 0, || format!("exit {code}"))?;
    Ok((el < Duration::from_secs(120), format!("verify-all --digits 50 took {el:.2?}")))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "golden values at 50 digits", golden_23),
        (2, "two-scale theorems at defaults", theorems_at_defaults),
        (3, "residue engine equals catalog", residue_engine),
        (4, "zeta(odd) through the self-dual point", ramanujan_route),
        (5, "partial fraction decompositions", partial_fractions),
        (6, "convolution suite and Catalan evaluations", section_four),
        (7, "digamma complement and harmonic sums", digamma_and_section_five),
        (8, "products and log series", section_six),
        (9, "property suites", property_suites),
        (10, "errata classified", errata_ledger),
        (11, "full run time", full_run_time),
    ];
    let mut unexpected = vec![];
    for (n, name, f) in criteria {
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let (pass, detail) = match outcome {
            Ok((pass, d)) => {
                if !pass && !LEDGERED.contains(&n) {
                    unexpected.push(n);
                }
                (pass, d)
            }
            Err(d) => {
                unexpected.push(n);
                (false, d)
            }
        };
        println!("criterion {n:>2} {}: {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    }
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
