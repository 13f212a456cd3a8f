//! Families of knots with small rational genus, A through H, as checkable entries.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{admissible, classify, effective_threshold, ManifoldClass, StructuralForm};
use crate::calculus::{cable_upper_case_d, connect_sum_genus, genus_from_seifert};
use crate::error::{Error, Result};
use crate::eval::eval_spec;
use crate::spec::KnotSpec;
use crate::torus_bundle::{case_h_formula, case_h_matrix, UnimodularMatrix};
use crate::value::{int, rat, GenusValue, Rational, TrivialityStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseParams {
    /// Core of `m/n` surgery on a hyperbolic knot of the given genus.
    A { genus: u32, m: u64, n: i64 },
    /// Core of `m/n` surgery on the `(u, v)` torus knot with `|m - nuv| = 1`.
    B { u: i64, v: i64, m: u64, n: i64 },
    /// As in B with `|m - nuv| > 1`.
    C { u: i64, v: i64, m: u64, n: i64 },
    /// `(p, q)`-cable of the core of `-kq^2/b` surgery on a hyperbolic knot.
    D { genus: u32, p: i64, q: i64, k: u64 },
    /// As in D over the `(u, v)` torus knot.
    E { u: i64, v: i64, p: i64, q: i64, k: u64 },
    /// Core of `m` surgery on a connected sum of knots of genera `g1`, `g2`.
    F { g1: u32, g2: u32, m: u64 },
    /// Fiber of the torus bundle with monodromy `[[1, p], [0, 1]]`.
    G { p: i64 },
    /// Fiber curve for monodromy `[[1, n], [0, 1]] * base`.
    H { base: UnimodularMatrix, n: i64 },
}

impl CaseParams {
    pub fn case_id(&self) -> CaseId {
        match self {
            CaseParams::A { .. } => CaseId::A,
            CaseParams::B { .. } => CaseId::B,
            CaseParams::C { .. } => CaseId::C,
            CaseParams::D { .. } => CaseId::D,
            CaseParams::E { .. } => CaseId::E,
            CaseParams::F { .. } => CaseId::F,
            CaseParams::G { .. } => CaseId::G,
            CaseParams::H { .. } => CaseId::H,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub case_id: CaseId,
    pub spec: KnotSpec,
    pub expected: GenusValue,
    /// `expected` is the exact value rather than a bound containing it.
    pub exact: bool,
    pub claimed_form: StructuralForm,
    pub manifold: ManifoldClass,
}

fn violated(msg: String) -> Error {
    Error::ParameterConstraintViolated(msg)
}

fn eta_of_genus(g: u32) -> Rational {
    genus_from_seifert(g).exact_value().expect("seed genus is exact")
}

fn torus_knot_eta(u: i64, v: i64) -> Rational {
    rat(((u - 1) * (v - 1) - 1) as i128, 2)
}

fn check_torus_knot(u: i64, v: i64) -> Result<()> {
    if u < 2 || v < 2 || u.gcd(&v) != 1 {
        return Err(violated(format!("torus knot ({u},{v}) needs coprime u, v > 1")));
    }
    Ok(())
}

fn check_slope(m: u64, n: i64) -> Result<()> {
    if m == 0 || (m as i64).gcd(&n) != 1 {
        return Err(violated(format!("slope {m}/{n} needs m > 0 coprime to n")));
    }
    Ok(())
}

/// `b` with `a kq^2 - b(1 + kpq) = 1` for some `a`.
fn cable_slope_b(p: i64, q: i64, k: u64) -> Result<i64> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(violated(format!("cable ({p},{q}) needs coprime p, q > 1")));
    }
    if k == 0 {
        return Err(violated("k must be positive".into()));
    }
    let kq2 = k as i128 * (q * q) as i128;
    let c = 1 + k as i128 * (p * q) as i128;
    let g = kq2.extended_gcd(&c);
    debug_assert_eq!(g.gcd, 1);
    let b = -g.y;
    debug_assert_eq!(g.x * kq2 - b * c, 1);
    Ok(b as i64)
}

fn cable_entry(
    base: KnotSpec,
    eta0: Rational,
    p: i64,
    q: i64,
    k: u64,
    b: i64,
) -> (KnotSpec, GenusValue) {
    let m = k * (q * q) as u64;
    let spec = KnotSpec::cable(KnotSpec::surgery(base, m, -b), p, q);
    (spec, cable_upper_case_d(eta0, q as u64, k))
}

pub fn generate_case(params: CaseParams) -> Result<CatalogEntry> {
    use StructuralForm::*;
    let case_id = params.case_id();
    let exact = |spec, value: Rational, form, manifold| CatalogEntry {
        case_id,
        spec,
        expected: GenusValue::exact(value),
        exact: true,
        claimed_form: form,
        manifold,
    };
    match params {
        CaseParams::A { genus, m, n } => {
            if genus == 0 {
                return Err(violated("a hyperbolic knot has positive genus".into()));
            }
            check_slope(m, n)?;
            let spec = KnotSpec::surgery(KnotSpec::seed(genus, true), m, n);
            Ok(exact(spec, eta_of_genus(genus) / int(m as i128), MargulisCoreCable, ManifoldClass::Hyperbolic))
        }
        CaseParams::B { u, v, m, n } | CaseParams::C { u, v, m, n } => {
            check_torus_knot(u, v)?;
            check_slope(m, n)?;
            let d = (m as i64 - n * u * v).unsigned_abs();
            let spec = KnotSpec::surgery(KnotSpec::TorusKnot { u, v }, m, n);
            let value = torus_knot_eta(u, v) / int(m as i128);
            match (case_id, d) {
                (CaseId::B, 1) => {
                    let q = (n as i128 * (v * v) as i128).rem_euclid(m as i128) as u64;
                    Ok(exact(spec, value, HeegaardTorusCurve, ManifoldClass::LensSpace { p: m, q }))
                }
                (CaseId::C, d) if d > 1 => Ok(exact(spec, value, ExceptionalFiberCable, ManifoldClass::SmallSFS)),
                _ => Err(violated(format!("|m - nuv| = {d} does not fit case {case_id}"))),
            }
        }
        CaseParams::D { genus, p, q, k } => {
            if genus == 0 {
                return Err(violated("a hyperbolic knot has positive genus".into()));
            }
            let b = cable_slope_b(p, q, k)?;
            let (spec, expected) = cable_entry(KnotSpec::seed(genus, true), eta_of_genus(genus), p, q, k, b);
            Ok(CatalogEntry {
                case_id,
                spec,
                expected,
                exact: false,
                claimed_form: MargulisCoreCable,
                manifold: ManifoldClass::Hyperbolic,
            })
        }
        CaseParams::E { u, v, p, q, k } => {
            check_torus_knot(u, v)?;
            let b0 = cable_slope_b(p, q, k)?;
            let kq2 = k as i64 * q * q;
            // b is fixed only modulo kq^2; pick a representative with multiplicity > 1.
            let b = (0..4)
                .map(|t| b0 + t * kq2)
                .find(|b| (kq2 + b * u * v).abs() > 1)
                .ok_or_else(|| violated(format!("|kq^2 + buv| <= 1 for every b near {b0}")))?;
            let (spec, expected) = cable_entry(KnotSpec::TorusKnot { u, v }, torus_knot_eta(u, v), p, q, k, b);
            Ok(CatalogEntry {
                case_id,
                spec,
                expected,
                exact: false,
                claimed_form: ExceptionalFiberCable,
                manifold: ManifoldClass::SmallSFS,
            })
        }
        CaseParams::F { g1, g2, m } => {
            if g1 == 0 || g2 == 0 || m == 0 {
                return Err(violated("summands must be non-trivial and m positive".into()));
            }
            let sum = KnotSpec::connect_sum(KnotSpec::seed(g1, true), KnotSpec::seed(g2, true));
            let (eta, _) = connect_sum_genus(
                &genus_from_seifert(g1),
                TrivialityStatus::NotPTrivial,
                &genus_from_seifert(g2),
                TrivialityStatus::NotPTrivial,
            )?;
            let value = eta.exact_value().expect("exact summands") / int(m as i128);
            Ok(exact(KnotSpec::surgery(sum, m, 1), value, JSJBoundaryCurve, ManifoldClass::Toroidal))
        }
        CaseParams::G { p } => {
            if p < 1 {
                return Err(violated("p must be positive".into()));
            }
            let a = UnimodularMatrix::parabolic(p);
            Ok(exact(KnotSpec::TorusBundleFiber(a), rat(1, 2 * p as i128), OrdinaryFiber, ManifoldClass::TorusBundle(a)))
        }
        CaseParams::H { base, n } => {
            if base.gamma == 0 {
                return Err(violated("base matrix needs gamma != 0".into()));
            }
            let a = case_h_matrix(&base, n);
            if a.trace().abs() <= 2 {
                return Err(violated(format!("monodromy {a} has |trace| <= 2, not Anosov")));
            }
            Ok(exact(
                KnotSpec::TorusBundleFiber(a),
                case_h_formula(&base, n),
                AnosovFiberCurve,
                ManifoldClass::TorusBundle(a),
            ))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub pass: bool,
    pub diagnostics: Vec<String>,
}

/// Passes when the evaluator agrees with the entry (equality for exact entries,
/// containment for bounds) and, if the expected value is below the class
/// threshold, the claimed form is one the classifier allows.
///
/// `threshold` applies to the hyperbolic, Seifert-fibered, toroidal and
/// torus-bundle classes; reducible and lens classes use their own.
pub fn consistency_check(e: &CatalogEntry, threshold: Rational) -> ConsistencyReport {
    let mut diagnostics = Vec::new();
    match eval_spec(&e.spec) {
        Ok(r) => {
            let agrees = if e.exact { r.value == e.expected } else { r.value.is_subset_of(&e.expected) };
            if !agrees {
                let rel = if e.exact { "!=" } else { "not within" };
                diagnostics.push(format!("value mismatch: evaluated {} {rel} expected {}", r.value, e.expected));
            }
        }
        Err(err) => diagnostics.push(format!("evaluation failed: {err}")),
    }
    if !admissible(&e.manifold, e.claimed_form) {
        diagnostics.push(format!("{:?} cannot occur in {}", e.claimed_form, e.manifold));
    }
    let t = effective_threshold(&e.manifold, threshold);
    if e.expected.certainly_less(t) {
        let c = classify(&e.manifold, &e.expected, t);
        if !c.forms.contains(&e.claimed_form) {
            diagnostics.push(format!("{:?} is not among the forms allowed below {t}", e.claimed_form));
        }
    }
    ConsistencyReport { pass: diagnostics.is_empty(), diagnostics }
}

/// Parameter grid for the catalog sweep: slopes with `m <= max_m`, cable
/// parameters `k <= max_k`, torus-bundle twists `|n| <= max_n`.
pub fn sweep_params(max_m: u64, max_k: u64, max_n: i64) -> Vec<CaseParams> {
    let mut out = Vec::new();
    let torus = [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7)];
    let cables = [(2, 3), (3, 2), (3, 4), (5, 2), (2, 5)];
    for m in 1..=max_m {
        for n in [-3i64, -2, -1, 1, 2, 3] {
            if (m as i64).gcd(&n) != 1 {
                continue;
            }
            for genus in 1..=3 {
                out.push(CaseParams::A { genus, m, n });
            }
            for (u, v) in torus {
                let d = (m as i64 - n * u * v).abs();
                if d == 1 {
                    out.push(CaseParams::B { u, v, m, n });
                } else if d > 1 {
                    out.push(CaseParams::C { u, v, m, n });
                }
            }
        }
        for (g1, g2) in [(1, 1), (1, 2), (2, 3)] {
            out.push(CaseParams::F { g1, g2, m });
        }
        out.push(CaseParams::G { p: m as i64 });
    }
    for k in 1..=max_k {
        for (p, q) in cables {
            for genus in 1..=2 {
                out.push(CaseParams::D { genus, p, q, k });
            }
            for (u, v) in [(2, 3), (2, 5)] {
                out.push(CaseParams::E { u, v, p, q, k });
            }
        }
    }
    let bases = [
        UnimodularMatrix { alpha: 2, beta: 1, gamma: 1, delta: 1 },
        UnimodularMatrix { alpha: 1, beta: 1, gamma: 1, delta: 2 },
        UnimodularMatrix { alpha: 0, beta: -1, gamma: 1, delta: 3 },
        UnimodularMatrix { alpha: 3, beta: 2, gamma: 4, delta: 3 },
        UnimodularMatrix { alpha: -1, beta: 0, gamma: 2, delta: -1 },
    ];
    for base in bases {
        for n in -max_n..=max_n {
            if case_h_matrix(&base, n).trace().abs() > 2 {
                out.push(CaseParams::H { base, n });
            }
        }
    }
    out
}

/// Every entry of the parameter grid.
pub fn generate_sweep(max_m: u64, max_k: u64, max_n: i64) -> Result<Vec<CatalogEntry>> {
    sweep_params(max_m, max_k, max_n).into_par_iter().map(generate_case).collect()
}

/// Entries as line-delimited JSON.
pub fn to_jsonl(entries: &[CatalogEntry]) -> String {
    let mut s = String::new();
    for e in entries {
        s.push_str(&serde_json::to_string(e).expect("catalog entries serialize"));
        s.push('\n');
    }
    s
}

pub fn from_jsonl(text: &str) -> serde_json::Result<Vec<CatalogEntry>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(serde_json::from_str).collect()
}
