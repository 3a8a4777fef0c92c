//! Registry of identities. Every entry keeps the printed form as variant 0 and
//! any corrected readings after it; verification classifies the outcome from
//! the residuals of those variants.

mod build;
mod ramanujan;
mod sec1;
mod sec2;
mod sec3;
mod sec4;
mod sec5;
mod sec6;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{fmt_rational, ClosedForm, Rational};
use crate::numeric::{make_context, BigReal, NumericError, PrecisionContext};

pub use ramanujan::{ramanujan_zeta_odd, RamanujanOutcome};

pub type Params = BTreeMap<String, Rational>;

pub type EvalFn = Box<dyn Fn(&Params, &PrecisionContext) -> Result<Evaluation, NumericError> + Send + Sync>;

/// Residual above which a failing printed form counts as a misprint rather
/// than a precision shortfall.
pub const ERRATUM_THRESHOLD_LOG10: i64 = -10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Rational,
    /// Integer not below the bound.
    Integer(i64),
}

#[derive(Debug, Clone)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
}

pub struct Constraint {
    pub text: &'static str,
    pub holds: fn(&Params) -> bool,
}

/// Both sides at working precision; `closed` is the exact right side when
/// it is expressible in the closed-form atoms.
pub struct Evaluation {
    pub lhs: BigReal,
    pub rhs: BigReal,
    pub closed: Option<ClosedForm>,
}

impl Evaluation {
    pub fn numeric(lhs: BigReal, rhs: BigReal) -> Self {
        Evaluation { lhs, rhs, closed: None }
    }

    pub fn closed(lhs: BigReal, cf: ClosedForm, ctx: &PrecisionContext) -> Result<Self, NumericError> {
        let rhs = cf.eval(ctx)?;
        Ok(Evaluation { lhs, rhs, closed: Some(cf) })
    }
}

pub struct Variant {
    pub label: &'static str,
    pub rationale: &'static str,
    pub eval: EvalFn,
}

pub struct Identity {
    pub id: &'static str,
    pub section: &'static str,
    /// ASCII rendering of the displayed formula.
    pub anchor: &'static str,
    pub params: Vec<ParamSpec>,
    pub constraints: Vec<Constraint>,
    pub defaults: Vec<Params>,
    pub variants: Vec<Variant>,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity").field("id", &self.id).field("section", &self.section).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    ErratumResolved,
    Unresolved,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ErratumResolved => "ERRATUM_RESOLVED",
            Status::Unresolved => "UNRESOLVED",
        }
    }

    pub fn is_success(self) -> bool {
        matches!(self, Status::Pass | Status::ErratumResolved)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown identity `{id}`{}", .suggestion.as_ref().map(|s| format!(" (did you mean `{s}`?)")).unwrap_or_default())]
    UnknownId { id: String, suggestion: Option<String> },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

impl CatalogError {
    pub fn is_usage(&self) -> bool {
        match self {
            CatalogError::UnknownId { .. } | CatalogError::Usage(_) => true,
            CatalogError::Numeric(e) => matches!(e, NumericError::Usage(_)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Residual {
    pub value: BigReal,
    /// floor(log10 |value|); the resolution floor of the context when zero.
    pub log10: i64,
    /// Leading digits of |value| / 10^log10.
    pub mantissa: String,
}

impl Residual {
    fn new(value: BigReal, ctx: &PrecisionContext) -> Self {
        if value.is_zero() {
            let floor = -(ctx.working_digits() as i64);
            return Residual { value, log10: floor, mantissa: "0.00".into() };
        }
        let s = value.abs().to_sci_string(3);
        // "d.dde-N"
        let (m, e) = s.split_once(['e', 'E']).unwrap_or((&s, "0"));
        let log10 = e.parse::<i64>().unwrap_or_else(|_| value.log10_abs().floor() as i64);
        Residual { value, log10, mantissa: m.to_string() }
    }

    pub fn passes(&self, digits: u32) -> bool {
        self.value.is_zero() || self.log10 < -(digits as i64 - 5)
    }
}

#[derive(Debug, Clone)]
pub struct VariantOutcome {
    pub index: usize,
    pub label: &'static str,
    pub lhs: BigReal,
    pub rhs: BigReal,
    pub closed: Option<ClosedForm>,
    pub residual: Residual,
}

#[derive(Debug, Clone)]
pub struct VerificationResult {
    pub id: String,
    pub params: Params,
    pub digits: u32,
    pub status: Status,
    /// Variant the status refers to: the passing one, or the printed form.
    pub variant: usize,
    pub outcomes: Vec<VariantOutcome>,
    pub seconds: f64,
    pub error: Option<String>,
}

impl VerificationResult {
    pub fn chosen(&self) -> Option<&VariantOutcome> {
        self.outcomes.iter().find(|o| o.index == self.variant)
    }

    pub fn residual_log10(&self) -> Option<i64> {
        self.chosen().map(|o| o.residual.log10)
    }

    pub fn params_string(&self) -> String {
        format_params(&self.params)
    }
}

pub fn format_params(p: &Params) -> String {
    p.iter().map(|(k, v)| format!("{k}={}", fmt_rational(v))).collect::<Vec<_>>().join(",")
}

static CATALOG: OnceLock<Vec<Identity>> = OnceLock::new();

/// All identities in section order.
pub fn catalog() -> &'static [Identity] {
    CATALOG.get_or_init(|| {
        let mut v = Vec::new();
        v.extend(sec1::entries());
        v.extend(sec2::entries());
        v.extend(sec3::entries());
        v.extend(sec4::entries());
        v.extend(sec5::entries());
        v.extend(sec6::entries());
        v
    })
}

/// Normalises "2", "s2", "sec2" and "§2" to the bare section label.
pub fn normalize_section(s: &str) -> String {
    let t = s.trim();
    let t = t.strip_prefix('§').unwrap_or(t);
    let t = t.strip_prefix("sec").or_else(|| t.strip_prefix('s')).unwrap_or(t);
    if t.eq_ignore_ascii_case("intro") {
        "1".into()
    } else {
        t.to_string()
    }
}

pub fn list(section: Option<&str>) -> Vec<&'static Identity> {
    let want = section.map(normalize_section);
    catalog().iter().filter(|e| want.as_deref().is_none_or(|w| e.section == w)).collect()
}

pub fn suggest(id: &str) -> Option<String> {
    catalog()
        .iter()
        .map(|e| (strsim::normalized_levenshtein(id, e.id), e.id))
        .filter(|(s, _)| *s > 0.3)
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .map(|(_, id)| id.to_string())
}

pub fn lookup(id: &str) -> Result<&'static Identity, CatalogError> {
    catalog()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| CatalogError::UnknownId { id: id.to_string(), suggestion: suggest(id) })
}

impl Identity {
    /// First default merged with the overrides, then checked.
    pub fn resolve_params(&self, overrides: &Params) -> Result<Params, CatalogError> {
        for k in overrides.keys() {
            if !self.params.iter().any(|p| p.name == k) {
                let names: Vec<_> = self.params.iter().map(|p| p.name).collect();
                return Err(CatalogError::Usage(format!(
                    "{} has no parameter `{k}` (parameters: {})",
                    self.id,
                    if names.is_empty() { "none".to_string() } else { names.join(", ") }
                )));
            }
        }
        let mut p = self.defaults.first().cloned().unwrap_or_default();
        p.extend(overrides.iter().map(|(k, v)| (k.clone(), v.clone())));
        self.check(&p)?;
        Ok(p)
    }

    pub fn check(&self, p: &Params) -> Result<(), CatalogError> {
        for spec in &self.params {
            let v = p
                .get(spec.name)
                .ok_or_else(|| CatalogError::Usage(format!("{}: missing parameter `{}`", self.id, spec.name)))?;
            if let ParamKind::Integer(min) = spec.kind {
                if !v.is_integer() || v < &Rational::from_integer(min.into()) {
                    return Err(CatalogError::Usage(format!(
                        "{}: `{}` must be an integer >= {min}, got {}",
                        self.id,
                        spec.name,
                        fmt_rational(v)
                    )));
                }
            }
        }
        for c in &self.constraints {
            if !(c.holds)(p) {
                return Err(CatalogError::Usage(format!("{}: constraint violated: {}", self.id, c.text)));
            }
        }
        Ok(())
    }

    fn run_variant(&self, i: usize, p: &Params, ctx: &PrecisionContext) -> Result<VariantOutcome, NumericError> {
        let v = &self.variants[i];
        let e = (v.eval)(p, ctx)?;
        let residual = Residual::new(&e.lhs - &e.rhs, ctx);
        Ok(VariantOutcome { index: i, label: v.label, lhs: e.lhs, rhs: e.rhs, closed: e.closed, residual })
    }

    /// Evaluates the printed form and, if it fails, the variants in order
    /// until one passes.
    pub fn verify_with(&self, p: &Params, ctx: &PrecisionContext) -> Result<VerificationResult, CatalogError> {
        self.check(p)?;
        let start = Instant::now();
        let digits = ctx.digits();
        let mut outcomes = Vec::new();
        let mut error = None;
        let printed = match self.run_variant(0, p, ctx) {
            Ok(o) => Some(o),
            Err(e @ NumericError::Usage(_)) => return Err(e.into()),
            Err(e) => {
                error = Some(format!("printed: {e}"));
                None
            }
        };
        let printed_passes = printed.as_ref().is_some_and(|o| o.residual.passes(digits));
        let printed_log10 = printed.as_ref().map(|o| o.residual.log10);
        outcomes.extend(printed);
        let mut status = Status::Pass;
        let mut chosen = 0;
        if !printed_passes {
            let mut found = None;
            for i in 1..self.variants.len() {
                match self.run_variant(i, p, ctx) {
                    Ok(o) => {
                        let ok = o.residual.passes(digits);
                        outcomes.push(o);
                        if ok {
                            found = Some(i);
                            break;
                        }
                    }
                    Err(e) => error = Some(format!("{}: {e}", self.variants[i].label)),
                }
            }
            let misprint = printed_log10.is_none_or(|l| l > ERRATUM_THRESHOLD_LOG10);
            status = match found {
                Some(i) if misprint => {
                    chosen = i;
                    Status::ErratumResolved
                }
                Some(_) => Status::Fail,
                None if self.variants.len() > 1 => Status::Unresolved,
                None => Status::Fail,
            };
        }
        Ok(VerificationResult {
            id: self.id.to_string(),
            params: p.clone(),
            digits,
            status,
            variant: chosen,
            outcomes,
            seconds: start.elapsed().as_secs_f64(),
            error,
        })
    }
}

pub fn verify(id: &str, overrides: &Params, digits: u32) -> Result<VerificationResult, CatalogError> {
    let e = lookup(id)?;
    let p = e.resolve_params(overrides)?;
    let ctx = make_context(digits as i64)?;
    e.verify_with(&p, &ctx)
}

/// Every default parameter set of every entry (optionally one section),
/// in catalog order regardless of scheduling. Failures are recorded, never
/// propagated.
pub fn verify_all(digits: u32, section: Option<&str>, jobs: Option<usize>) -> Result<Vec<VerificationResult>, CatalogError> {
    let ctx = make_context(digits as i64)?;
    let work: Vec<(&Identity, &Params)> =
        list(section).into_iter().flat_map(|e| e.defaults.iter().map(move |p| (e, p))).collect();
    let run = || -> Vec<VerificationResult> {
        work.par_iter()
            .map(|(e, p)| {
                e.verify_with(p, &ctx).unwrap_or_else(|err| VerificationResult {
                    id: e.id.to_string(),
                    params: (*p).clone(),
                    digits,
                    status: Status::Fail,
                    variant: 0,
                    outcomes: Vec::new(),
                    seconds: 0.0,
                    error: Some(err.to_string()),
                })
            })
            .collect()
    };
    match jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| CatalogError::Usage(format!("thread pool: {e}")))?;
            Ok(pool.install(run))
        }
        None => Ok(run()),
    }
}
