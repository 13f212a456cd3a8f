//! Acceptance criteria 1-12, one line each. Runs without the test harness.

mod common;

use std::process::{Command, ExitCode};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ratgenus::calculus::{connect_sum_genus, horizontal_euler, SeifertHorizontalData};
use ratgenus::certify::interval::{parse_decimal, to_big};
use ratgenus::certify::{
    cusp_chain_bound, maximize_h, min_core_length, wrapping_genus_lower, CertInterval, CuspData, DEFAULT_PRECISION,
};
use ratgenus::certify::tube::wrapping_product;
use ratgenus::classify::{consistency_check, generate_sweep};
use ratgenus::dsl::parse;
use ratgenus::eval::eval_spec;
use ratgenus::graph::{edge_bound_sweep, extended_s_cycle_sweep, pair_count_sweep, s_cycle_sweep, SweepRecord};
use ratgenus::spec::KnotSpec;
use ratgenus::torus_bundle::{
    case_h_formula, case_h_matrix, fiber_curve_genus, horizontal_solution, small_trace_gap, UnimodularMatrix,
};
use ratgenus::value::{int, rat, GenusValue, KnotOrder, Rational, TrivialityStatus::*};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn dec(s: &str) -> CertInterval {
    CertInterval::from_decimal(s, DEFAULT_PRECISION)
}

fn big(s: &str) -> num_rational::BigRational {
    parse_decimal(s).unwrap()
}

fn unimodular_box(r: i64) -> Vec<UnimodularMatrix> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                for d in -r..=r {
                    if a * d - b * c == 1 && !(a == 1 && b == 0 && c == 0 && d == 1) {
                        out.push(UnimodularMatrix::new(a, b, c, d).unwrap());
                    }
                }
            }
        }
    }
    out
}

fn c1() -> Check {
    let r = eval_spec(&KnotSpec::surgery(KnotSpec::seed(5, false), 19, 1)).map_err(|e| e.to_string())?;
    ensure(r.value == GenusValue::exact(rat(9, 38)), format!("value {}", r.value))?;
    ensure(r.order == KnotOrder::Finite(19), format!("order {}", r.order))?;
    Ok("surgery(s3knot(genus=5), 19/1) = 9/38, order 19".into())
}

fn c2() -> Check {
    let z = GenusValue::zero();
    let half = GenusValue::exact(rat(1, 2));
    let sum = |a: &GenusValue, ta, b: &GenusValue, tb| connect_sum_genus(a, ta, b, tb).map_err(|e| e.to_string());
    ensure(sum(&z, PTrivial(2), &z, PTrivial(2))?.0 == z, "2-trivial + 2-trivial")?;
    ensure(sum(&half, NotPTrivial, &z, PTrivial(2))?.0 == GenusValue::exact(rat(3, 4)), "1/2 + 2-trivial")?;
    ensure(sum(&half, NotPTrivial, &half, NotPTrivial)?.0 == GenusValue::exact(rat(3, 2)), "1/2 + 1/2")?;
    for p in 1..20 {
        ensure(sum(&z, PTrivial(p), &z, PTrivial(1))? == (z.clone(), PTrivial(p)), format!("p = {p} with a ball"))?;
    }
    Ok("0, 3/4, 3/2; p-triviality carried through a trivial summand".into())
}

fn c3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in 1..=100i64 {
        let a = UnimodularMatrix::parabolic(p);
        let want = GenusValue::exact(rat(1, 2 * p as i128));
        ensure(fiber_curve_genus(&a).map_err(|e| e.to_string())? == want, format!("p = {p}"))?;
        for _ in 0..500 {
            let b = common::random_matrix(&mut rng, 6);
            let c = a.conjugate_by(&b);
            ensure(fiber_curve_genus(&c).map_err(|e| e.to_string())? == want, format!("p = {p} conjugated {c}"))?;
        }
    }
    for beta in -50..=50 {
        let a = UnimodularMatrix::new(-1, beta, 0, -1).unwrap();
        ensure(fiber_curve_genus(&a).map_err(|e| e.to_string())?.is_zero(), format!("[-1 {beta}; 0 -1]"))?;
    }
    let mut h = 0;
    for base in unimodular_box(4) {
        for n in -50..=50 {
            let m = case_h_matrix(&base, n);
            if m.trace() == 2 || m.is_identity() {
                continue;
            }
            h += 1;
            let v = fiber_curve_genus(&m).map_err(|e| e.to_string())?;
            ensure(v.exact_value() == Some(case_h_formula(&base, n)), format!("case H {base} n = {n}"))?;
        }
    }
    ensure(h >= 10_000, format!("only {h} case H matrices"))?;
    let mut gap = 0;
    for a in unimodular_box(20) {
        if a.trace() == -2 || a.trace().abs() <= 1 {
            gap += 1;
            ensure(small_trace_gap(&a).map_err(|e| e.to_string())?, format!("{a} lands in (0, 1/8)"))?;
        }
    }
    Ok(format!("1/2p for p <= 100 under 50000 conjugations; {h} case H matrices; {gap} small-trace matrices"))
}

fn c4() -> Check {
    let mut n = 0;
    for a in unimodular_box(20) {
        if a.trace() == 2 || a.gamma == 0 {
            continue;
        }
        n += 1;
        let h = horizontal_solution(&a).map_err(|e| e.to_string())?;
        let g = fiber_curve_genus(&a).map_err(|e| e.to_string())?;
        ensure(h.seifert_bound() == g.exact_value(), format!("{a}: {:?} vs {g}", h.seifert_bound()))?;
    }
    Ok(format!("m/2|l| equals the genus on {n} matrices"))
}

fn c5() -> Check {
    let m = maximize_h(DEFAULT_PRECISION).map_err(|e| e.to_string())?;
    ensure(m.h_star.width() <= big("1e-4") && m.h_star.contains_within(&big("1.019675"), &big("1e-4")), "h_star")?;
    ensure(m.r_star.width() <= big("2e-3") && m.r_star.contains_within(&big("0.531"), &big("2e-3")), "R_star")?;
    let l = min_core_length(DEFAULT_PRECISION).map_err(|e| e.to_string())?;
    ensure(l.width() <= big("1e-5") && l.contains_within(&big("0.162286"), &big("1e-5")), "core length")?;
    Ok(format!(
        "h_star [{:.9}, {:.9}], R_star [{:.7}, {:.7}], core [{:.9}, {:.9}]",
        m.h_star.lo().to_f64(),
        m.h_star.hi().to_f64(),
        m.r_star.lo().to_f64(),
        m.r_star.hi().to_f64(),
        l.lo().to_f64(),
        l.hi().to_f64()
    ))
}

fn c6() -> Check {
    let p = wrapping_product(&dec("0.162286"), &dec("0.531"));
    ensure(p.is_subset_of(&big("0.0313"), &big("0.0314")), "product outside [0.0313, 0.0314]")?;
    let g = wrapping_genus_lower(&dec("0.162286"), &dec("0.531"));
    ensure(g.certainly_greater(&to_big(&rat(1, 402))), "not above 1/402")?;
    Ok(format!("product {:.9}, /4pi {:.10} > 1/402", p.mid_f64(), g.lo().to_f64()))
}

fn c7() -> Check {
    let d = CuspData::from_normalized(dec("3.35"), dec("7.515"), 1).map_err(|e| e.to_string())?;
    let b = cusp_chain_bound(&d);
    ensure(b.contains_within(&big("0.0203"), &big("5e-5")), "not near 0.0203")?;
    ensure(b.certainly_greater(&to_big(&rat(1, 50))), "not above 1/50")?;
    Ok(format!("sqrt(3.35)/(12*7.515) = {:.10} > 1/50", b.lo().to_f64()))
}

fn records(name: &str, rs: &[SweepRecord]) -> Result<(), String> {
    match rs.iter().find(|r| !r.passed()) {
        Some(r) => Err(format!("{name}: {} {} {:?}", r.lemma, r.parameters, r.witness)),
        None => Ok(()),
    }
}

fn c8() -> Check {
    let rs = edge_bound_sweep(200, 12);
    records("edge bounds", &rs)?;
    Ok(format!("{} cap patterns exact for even n in 4..=200", rs.len()))
}

fn c9() -> Check {
    let pc = pair_count_sweep(12, 3);
    records("pair counts", &pc)?;
    let s = s_cycle_sweep(16);
    records("S-cycle", &s)?;
    let x = extended_s_cycle_sweep(16);
    records("extended S-cycle", &x)?;
    Ok(format!("{} pair-count cases; S-cycle and extended thresholds sharp for n <= 16", pc.len()))
}

fn c10() -> Check {
    let mut equal = Vec::new();
    let mut count = 0;
    let mut stack: Vec<Vec<u32>> = vec![vec![]];
    let mut lists = Vec::new();
    while let Some(l) = stack.pop() {
        lists.push(l.clone());
        if l.len() < 4 {
            let from = *l.last().unwrap_or(&2);
            for q in from..=10 {
                let mut n = l.clone();
                n.push(q);
                stack.push(n);
            }
        }
    }
    for chi_base in -4..=1i64 {
        for mults in &lists {
            for degree in 1..=12u32 {
                let d = SeifertHorizontalData { chi_base, multiplicities: mults.clone(), degree };
                let chi = horizontal_euler(&d).map_err(|e| e.to_string())?;
                if chi < int(0) {
                    count += 1;
                    let bound = -Rational::from_integer(degree as i128) / int(6);
                    ensure(chi <= bound, format!("{d:?}"))?;
                    if chi == bound {
                        equal.push((chi_base, mults.clone()));
                    }
                }
            }
        }
    }
    equal.sort();
    equal.dedup();
    ensure(equal == vec![(1, vec![2, 3])], format!("equality at {equal:?}"))?;
    Ok(format!("{count} negative cases; equality only at base chi 1, cone points (2,3)"))
}

fn c11() -> Check {
    let entries = generate_sweep(100, 50, 50).map_err(|e| e.to_string())?;
    for e in &entries {
        let r = consistency_check(e, rat(1, 402));
        ensure(r.pass, format!("case {} {}: {:?}", e.case_id, e.spec, r.diagnostics))?;
    }
    let mut bad = entries.iter().find(|e| e.exact).cloned().ok_or("no exact entry")?;
    bad.expected = GenusValue::exact(bad.expected.lo() + rat(1, 7));
    let r = consistency_check(&bad, rat(1, 402));
    ensure(!r.pass && r.diagnostics.iter().any(|d| d.contains("value mismatch")), "corrupted entry passed")?;
    Ok(format!("{} entries consistent; corrupted entry rejected", entries.len()))
}

fn c12() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..1000 {
        let f = common::random_file(&mut rng);
        let text = f.to_string();
        let back = parse(&text).map_err(|e| format!("{e} in\n{text}"))?;
        ensure(back == f, format!("round trip changed\n{text}"))?;
    }
    let good = Command::new(common::bin()).arg(common::spec_path("examples.rg")).output().map_err(|e| e.to_string())?;
    ensure(good.status.code() == Some(0), "examples.rg did not exit 0")?;
    let bad =
        Command::new(common::bin()).arg(common::spec_path("wrong_assertion.rg")).output().map_err(|e| e.to_string())?;
    let out = String::from_utf8_lossy(&bad.stdout);
    ensure(bad.status.code() == Some(1), "wrong_assertion.rg did not exit 1")?;
    ensure(out.contains("line 4: FAIL"), "failure does not name line 4")?;
    Ok("1000 round trips; examples exit 0; wrong assertion exits 1 at line 4".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("pretzel surgery value", c1),
        ("connect-sum table", c2),
        ("torus-bundle fibers", c3),
        ("horizontal-solution sharpness", c4),
        ("tube function maximum", c5),
        ("wrapping inequality chain", c6),
        ("cusp inequality chain", c7),
        ("reduced edge bounds", c8),
        ("parallel-family lemmas", c9),
        ("horizontal Euler extremality", c10),
        ("catalog closure", c11),
        ("command line", c12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
