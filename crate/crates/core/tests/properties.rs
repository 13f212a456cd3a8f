mod common;

use num_rational::BigRational;
use num_traits::FromPrimitive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ratgenus::certify::{h_of_r, CertInterval, Dyadic, Round};
use ratgenus::dsl::parse;
use ratgenus::eval::eval_spec;
use ratgenus::graph::ParallelFamily;
use ratgenus::spec::KnotSpec;
use ratgenus::torus_bundle::{fiber_curve_genus, UnimodularMatrix};
use ratgenus::value::{rat, GenusValue, Rational};

const PREC: u32 = 96;

fn point(x: f64) -> CertInterval {
    let r = BigRational::from_f64(x).unwrap();
    CertInterval::point(Dyadic::from_rational(&r, 200, Round::Down), PREC)
}

fn near(iv: &CertInterval, v: f64) -> bool {
    let tol = 1e-12 * v.abs().max(1.0);
    let v = BigRational::from_f64(v).unwrap();
    iv.contains_within(&v, &BigRational::from_f64(tol).unwrap())
}

fn h_f64(r: f64) -> f64 {
    3.3957 * r.tanh() / (2.0 * r).cosh()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn enclosures_agree_with_f64(x in -8.0f64..8.0) {
        let iv = point(x);
        prop_assert!(near(&iv.exp(), x.exp()));
        prop_assert!(near(&iv.sinh(), x.sinh()));
        prop_assert!(near(&iv.cosh(), x.cosh()));
        prop_assert!(near(&iv.tanh(), x.tanh()));
        prop_assert!(near(&point(x.abs()).sqrt(), x.abs().sqrt()));
    }

    #[test]
    fn tube_function_agrees_with_f64(r in 0.0f64..3.0) {
        prop_assert!(near(&h_of_r(&point(r)), h_f64(r)));
    }

    #[test]
    fn operations_contain_every_point(a in -4.0f64..4.0, w in 0.0f64..0.5, t in 0.0f64..1.0) {
        let lo = BigRational::from_f64(a).unwrap();
        let hi = BigRational::from_f64(a + w).unwrap();
        let x = BigRational::from_f64(a + t * w).unwrap();
        let iv = CertInterval::new(Dyadic::from_rational(&lo, 200, Round::Down), Dyadic::from_rational(&hi, 200, Round::Up), PREC);
        let px = CertInterval::point(Dyadic::from_rational(&x, 200, Round::Down), PREC);
        for (wide, narrow) in [(iv.exp(), px.exp()), (iv.tanh(), px.tanh()), (iv.cosh(), px.cosh()), (iv.square(), px.square())] {
            prop_assert!(wide.lo() <= narrow.lo() && narrow.hi() <= wide.hi());
        }
    }

    #[test]
    fn refine_is_a_subset(a in 0i64..40, b in 0i64..40, c in 0i64..40, d in 0i64..40) {
        let (l1, h1) = (rat(a.min(b) as i128, 12), rat(a.max(b) as i128, 12));
        let (l2, h2) = (rat(c.min(d) as i128, 12), rat(c.max(d) as i128, 12));
        let x = GenusValue::between(l1, h1);
        let y = GenusValue::between(l2, h2);
        match x.refine(&y) {
            Ok(z) => {
                prop_assert!(z.is_subset_of(&x) && z.is_subset_of(&y));
            }
            Err(_) => prop_assert!(h1 < l2 || h2 < l1),
        }
    }

    #[test]
    fn surgery_scales_by_slope(g in 1u32..40, m in 1u64..200) {
        let v = eval_spec(&KnotSpec::surgery(KnotSpec::seed(g, false), m, 1)).unwrap().value;
        prop_assert_eq!(v.exact_value(), Some((Rational::from_integer(g as i128) - rat(1, 2)) / Rational::from_integer(m as i128)));
    }

    #[test]
    fn bundle_genus_is_conjugation_invariant(p in 1i64..60, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = common::random_matrix(&mut rng, 8);
        let a = UnimodularMatrix::parabolic(p);
        prop_assert_eq!(fiber_curve_genus(&a.conjugate_by(&b)).unwrap(), fiber_curve_genus(&a).unwrap());
    }

    #[test]
    fn coherent_families_have_odd_index(half in 1u32..10, k in 0u32..20, start in 0u32..20) {
        let n = 2 * half;
        let f = ParallelFamily { n, k: k % n, start: start % n, size: n };
        if f.parity_admissible() {
            prop_assert_eq!(f.k % 2, 1);
        }
    }
}

#[test]
fn random_files_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let f = common::random_file(&mut rng);
        let text = f.to_string();
        let back = parse(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(common::kinds(&back), common::kinds(&f), "{text}");
        assert_eq!(back.to_string(), text);
    }
}

#[test]
fn printed_specs_parse_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let e = common::random_expr(&mut rng, 5, &[]);
        let src = format!("knot x = {e}\n");
        let f = parse(&src).unwrap();
        let ratgenus::dsl::StmtKind::Knot { expr, .. } = &f.statements[0].kind else { panic!() };
        assert_eq!(expr, &e);
        if let Ok(spec) = e.resolve(&|_| None) {
            assert_eq!(spec.to_string(), e.to_string());
        }
    }
}
