use std::collections::BTreeMap;

use hypsum::catalog::{self, Status};
use hypsum::exact::{bernoulli, fmt_rational, parse_rational, rat, Atom, ClosedForm, Rational};
use hypsum::numeric::make_context;
use hypsum::report::{Report, Row};
use hypsum::residue::{derive_identity, Theorem};
use hypsum::series::{sum_hyper, tail_model_holds, HyperSum, Kernel};
use num_traits::Signed;
use proptest::prelude::*;

const KERNELS: [Kernel; 9] = [
    Kernel::Coth,
    Kernel::Tanh,
    Kernel::Csch,
    Kernel::Sech,
    Kernel::Coth2,
    Kernel::Csch2,
    Kernel::CoshCsch2,
    Kernel::InvExpm1,
    Kernel::InvExpp1,
];

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(p, q)| rat(p, q))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..40, 1i64..12).prop_map(|(p, q)| rat(p, q))
}

fn closed_form() -> impl Strategy<Value = ClosedForm> {
    prop::collection::vec((small_rational(), 0i64..5, prop::bool::ANY), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, e, g)| {
                let m = ClosedForm::pi_pow(e).scale(&c);
                if g {
                    m * ClosedForm::atom(Atom::Catalan)
                } else {
                    m
                }
            })
            .sum()
    })
}

fn theorem() -> impl Strategy<Value = Theorem> {
    prop::sample::select(Theorem::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_text_round_trip(r in small_rational()) {
        prop_assert_eq!(parse_rational(&fmt_rational(&r)).unwrap(), r);
    }

    #[test]
    fn decimals_are_rejected(a in 0u32..1000, b in 0u32..1000) {
        let text = format!("{a}.{b}");
        prop_assert!(parse_rational(&text).is_err());
    }

    #[test]
    fn closed_form_ring_laws(a in closed_form(), b in closed_form(), c in closed_form()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn eval_is_additive(a in closed_form(), b in closed_form()) {
        let ctx = make_context(30).unwrap();
        let lhs = (&a + &b).eval(&ctx).unwrap();
        let rhs = a.eval(&ctx).unwrap() + b.eval(&ctx).unwrap();
        let d = (lhs - rhs).abs();
        prop_assert!(d.is_zero() || d.log10_abs() < -28.0);
    }

    #[test]
    fn bernoulli_signs_alternate(n in 1u64..40) {
        let b = bernoulli(2 * n);
        prop_assert_eq!(b.is_positive(), n % 2 == 1);
        prop_assert!(bernoulli(2 * n + 1) == rat(0, 1));
    }

    #[test]
    fn theorem_rhs_is_homogeneous(th in theorem(), dk in 0u32..4, x in positive_rational(), y in positive_rational(), l in positive_rational()) {
        let k = th.min_k() + dk;
        let f = derive_identity(th, k).unwrap();
        let scaled = f.at(&(&l * &x), &(&l * &y)).unwrap();
        // every monomial is x^(2 k1) y^(2 k2) with k1 + k2 = k
        let factor = (0..2 * k).fold(rat(1, 1), |acc, _| acc * &l);
        prop_assert_eq!(scaled, f.at(&x, &y).unwrap().scale(&factor));
    }

    #[test]
    fn tail_models_are_honest(i in 0usize..9, p in 1i64..30, q in 1i64..8, s in 0u32..6, odd in prop::bool::ANY) {
        let ctx = make_context(30).unwrap();
        let mut h = HyperSum::power(KERNELS[i], ctx.pi() * ctx.ratio(p, q), s);
        if odd {
            h = h.odd();
        }
        prop_assert!(tail_model_holds(&h.decaying_spec().unwrap()).unwrap());
    }

    #[test]
    fn more_precision_changes_nothing(i in 0usize..9, p in 1i64..30, q in 1i64..8, s in 1u32..6, alt in prop::bool::ANY) {
        let at = |digits| {
            let ctx = make_context(digits).unwrap();
            let mut h = HyperSum::power(KERNELS[i], ctx.pi() * ctx.ratio(p, q), s + 1);
            if alt {
                h = h.alternating();
            }
            sum_hyper(&[h], &ctx).unwrap()
        };
        let d = (at(25) - at(45)).abs();
        prop_assert!(d.is_zero() || d.log10_abs() < -24.0, "difference 1e{}", d.log10_abs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn theorems_hold_off_the_defaults(th in theorem(), dk in 0u32..3, x in positive_rational(), y in positive_rational()) {
        // keep the ratio moderate so the slower of the two series stays short
        prop_assume!(x.clone() / &y < rat(6, 1) && y.clone() / &x < rat(6, 1));
        let mut p = BTreeMap::new();
        p.insert("k".to_string(), rat((th.min_k() + dk) as i64, 1));
        p.insert("x".to_string(), x);
        p.insert("y".to_string(), y);
        let r = catalog::verify(&th.id(), &p, 30).unwrap();
        prop_assert_eq!(r.status, Status::Pass, "{} [{}]", r.id, r.params_string());
    }

    #[test]
    fn report_json_round_trips(rows in prop::collection::vec((0usize..3, -90i64..0, 0u32..1000, 0u32..5000), 0..6)) {
        let results = rows
            .into_iter()
            .map(|(v, l, m, ms)| Row {
                id: "eq4.2".into(),
                variant: v,
                params: "k=2".into(),
                status: if v == 0 { "PASS" } else { "ERRATUM_RESOLVED" }.into(),
                residual_log10: Some(l),
                residual_mantissa: Some(format!("{}.{:02}", 1 + m / 112, m % 100)),
                seconds: ms as f64 / 1000.0,
            })
            .collect();
        let r = Report { version: "1".into(), digits: 50, started: "a".into(), finished: "b".into(), results };
        prop_assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}
