//! What a knot of small rational genus must look like, by manifold class.

pub mod catalog;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::eval_spec;
use crate::spec::KnotSpec;
use crate::torus_bundle::UnimodularMatrix;
use crate::value::{rat, GenusValue, Rational, TrivialityStatus};

pub use catalog::{consistency_check, generate_case, generate_sweep, CaseId, CaseParams, CatalogEntry, ConsistencyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ManifoldClass {
    Reducible,
    LensSpace { p: u64, q: u64 },
    Hyperbolic,
    /// Atoroidal Seifert fiber space over the sphere with three exceptional fibers.
    SmallSFS,
    Toroidal,
    TorusBundle(UnimodularMatrix),
}

impl fmt::Display for ManifoldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldClass::Reducible => f.write_str("reducible"),
            ManifoldClass::LensSpace { p, q } => write!(f, "L({p},{q})"),
            ManifoldClass::Hyperbolic => f.write_str("hyperbolic"),
            ManifoldClass::SmallSFS => f.write_str("small Seifert fibered"),
            ManifoldClass::Toroidal => f.write_str("toroidal"),
            ManifoldClass::TorusBundle(a) => write!(f, "torus bundle {a}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StructuralForm {
    Trivial,
    HeegaardTorusCurve,
    /// Curve on a Klein bottle in `L(4k, 2k-1)`.
    KleinBottleCurveL4k,
    MargulisCoreCable,
    ExceptionalFiberCable,
    /// Fiber of a prism manifold over an `RP^2` orbifold.
    PrismRP2Fiber,
    JSJBoundaryCurve,
    OrdinaryFiber,
    MoebiusBundleFiber,
    AnosovFiberCurve,
    IrreducibleSummand,
    RP3RP3Sum,
}

impl StructuralForm {
    pub const ALL: [StructuralForm; 12] = [
        StructuralForm::Trivial,
        StructuralForm::HeegaardTorusCurve,
        StructuralForm::KleinBottleCurveL4k,
        StructuralForm::MargulisCoreCable,
        StructuralForm::ExceptionalFiberCable,
        StructuralForm::PrismRP2Fiber,
        StructuralForm::JSJBoundaryCurve,
        StructuralForm::OrdinaryFiber,
        StructuralForm::MoebiusBundleFiber,
        StructuralForm::AnosovFiberCurve,
        StructuralForm::IrreducibleSummand,
        StructuralForm::RP3RP3Sum,
    ];
}

/// Below this the toroidal list applies to knots disjoint from the hyperbolic pieces.
pub fn toroidal_disjoint_threshold() -> Rational {
    rat(1, 24)
}

/// The default threshold for each class.
pub fn class_threshold(mc: &ManifoldClass) -> Rational {
    match mc {
        ManifoldClass::Reducible => rat(1, 12),
        ManifoldClass::LensSpace { .. } => rat(1, 24),
        _ => rat(1, 402),
    }
}

/// The threshold used for `mc` when the caller configures the hyperbolic-type
/// threshold (`1/402` by default, `1/50` allowed).
pub fn effective_threshold(mc: &ManifoldClass, configured: Rational) -> Rational {
    match mc {
        ManifoldClass::Reducible | ManifoldClass::LensSpace { .. } => class_threshold(mc),
        _ => configured,
    }
}

fn klein_bottle_lens(p: u64, q: u64) -> bool {
    if p == 0 || !p.is_multiple_of(4) {
        return false;
    }
    let k = p / 4;
    let r = q % p;
    let t = (2 * k - 1) % p;
    r == t || (r + t).is_multiple_of(p)
}

const TOROIDAL_FORMS: [StructuralForm; 7] = [
    StructuralForm::Trivial,
    StructuralForm::MargulisCoreCable,
    StructuralForm::JSJBoundaryCurve,
    StructuralForm::OrdinaryFiber,
    StructuralForm::ExceptionalFiberCable,
    StructuralForm::MoebiusBundleFiber,
    StructuralForm::AnosovFiberCurve,
];

/// Forms a knot of genus below the class threshold may take.
pub fn alternatives(mc: &ManifoldClass) -> Vec<StructuralForm> {
    use StructuralForm::*;
    match mc {
        ManifoldClass::Reducible => vec![IrreducibleSummand, RP3RP3Sum],
        ManifoldClass::LensSpace { p, q } => {
            let mut v = vec![HeegaardTorusCurve];
            if klein_bottle_lens(*p, *q) {
                v.push(KleinBottleCurveL4k);
            }
            v
        }
        ManifoldClass::Hyperbolic => vec![Trivial, MargulisCoreCable],
        ManifoldClass::SmallSFS => vec![Trivial, ExceptionalFiberCable, PrismRP2Fiber],
        ManifoldClass::Toroidal => TOROIDAL_FORMS.to_vec(),
        ManifoldClass::TorusBundle(a) => TOROIDAL_FORMS
            .iter()
            .copied()
            .filter(|f| *f != AnosovFiberCurve || a.trace().abs() > 2)
            .collect(),
    }
}

/// Whether `form` can occur at all in `mc`.
pub fn admissible(mc: &ManifoldClass, form: StructuralForm) -> bool {
    alternatives(mc).contains(&form)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub forms: BTreeSet<StructuralForm>,
    /// The value straddles the threshold.
    pub indeterminate: bool,
}

/// No constraint when `v >= threshold`; the class's list when `v < threshold`;
/// the list flagged indeterminate when `v` straddles it.
pub fn classify(mc: &ManifoldClass, v: &GenusValue, threshold: Rational) -> Classification {
    if v.certainly_at_least(threshold) {
        return Classification { forms: BTreeSet::new(), indeterminate: false };
    }
    let forms = alternatives(mc).into_iter().collect();
    Classification { forms, indeterminate: !v.certainly_less(threshold) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VanishingCase {
    BoundsDisk,
    /// Core of a genus one Heegaard splitting.
    LensCore,
    /// Fiber of a Seifert fibration whose base orbifold is a Moebius band.
    MoebiusSeifertFiber,
}

/// The ways a knot of rational genus zero can arise, narrowed by what is known about `k`.
pub fn vanishing_classify(k: &KnotSpec) -> Result<BTreeSet<VanishingCase>> {
    let r = eval_spec(k)?;
    if !r.value.is_zero() {
        return Err(Error::NonzeroGenus(r.value.to_string()));
    }
    use VanishingCase::*;
    Ok(match r.triviality {
        TrivialityStatus::PTrivial(1) => [BoundsDisk].into(),
        TrivialityStatus::PTrivial(_) => [LensCore].into(),
        TrivialityStatus::NotPTrivial => [MoebiusSeifertFiber].into(),
        TrivialityStatus::Unknown => [BoundsDisk, LensCore, MoebiusSeifertFiber].into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::int;
    use StructuralForm::*;

    fn set(v: &[StructuralForm]) -> BTreeSet<StructuralForm> {
        v.iter().copied().collect()
    }

    #[test]
    fn classify_examples() {
        let c = classify(&ManifoldClass::Hyperbolic, &GenusValue::exact(rat(1, 500)), rat(1, 402));
        assert_eq!(c.forms, set(&[Trivial, MargulisCoreCable]));
        assert!(!c.indeterminate);
        let lens = ManifoldClass::LensSpace { p: 8, q: 3 };
        let c = classify(&lens, &GenusValue::exact(rat(1, 30)), rat(1, 24));
        assert_eq!(c.forms, set(&[HeegaardTorusCurve, KleinBottleCurveL4k]));
        let c = classify(&ManifoldClass::Reducible, &GenusValue::at_least(rat(1, 12)), rat(1, 12));
        assert!(c.forms.is_empty());
        let c = classify(&ManifoldClass::SmallSFS, &GenusValue::zero(), rat(1, 402));
        assert!(c.forms.is_superset(&set(&[PrismRP2Fiber, ExceptionalFiberCable, Trivial])));
        let c = classify(&ManifoldClass::Hyperbolic, &GenusValue::between(int(0), int(1)), rat(1, 402));
        assert!(c.indeterminate);
    }

    #[test]
    fn klein_bottle_lens_spaces() {
        assert!(klein_bottle_lens(4, 1));
        assert!(klein_bottle_lens(4, 3));
        assert!(klein_bottle_lens(8, 3));
        assert!(klein_bottle_lens(8, 5));
        assert!(!klein_bottle_lens(8, 1));
        assert!(!klein_bottle_lens(6, 1));
        assert!(!admissible(&ManifoldClass::LensSpace { p: 7, q: 2 }, KleinBottleCurveL4k));
    }

    #[test]
    fn thresholds_by_class() {
        assert_eq!(class_threshold(&ManifoldClass::Reducible), rat(1, 12));
        assert_eq!(class_threshold(&ManifoldClass::LensSpace { p: 5, q: 1 }), rat(1, 24));
        for mc in [ManifoldClass::Hyperbolic, ManifoldClass::SmallSFS, ManifoldClass::Toroidal] {
            assert_eq!(class_threshold(&mc), rat(1, 402));
            assert_eq!(effective_threshold(&mc, rat(1, 50)), rat(1, 50));
        }
        assert_eq!(effective_threshold(&ManifoldClass::Reducible, rat(1, 50)), rat(1, 12));
    }

    #[test]
    fn admissibility_is_total_and_anosov_needs_large_trace() {
        let classes = [
            ManifoldClass::Reducible,
            ManifoldClass::LensSpace { p: 4, q: 1 },
            ManifoldClass::Hyperbolic,
            ManifoldClass::SmallSFS,
            ManifoldClass::Toroidal,
            ManifoldClass::TorusBundle(UnimodularMatrix::parabolic(3)),
        ];
        for mc in &classes {
            let allowed = StructuralForm::ALL.iter().filter(|f| admissible(mc, **f)).count();
            assert!(allowed >= 2, "{mc}");
        }
        let nil = ManifoldClass::TorusBundle(UnimodularMatrix::parabolic(3));
        assert!(!admissible(&nil, AnosovFiberCurve));
        let sol = ManifoldClass::TorusBundle(UnimodularMatrix::new(2, 1, 1, 1).unwrap());
        assert!(admissible(&sol, AnosovFiberCurve));
    }

    #[test]
    fn classify_is_monotone() {
        let mc = ManifoldClass::Toroidal;
        let t = rat(1, 402);
        let values = [
            GenusValue::exact(rat(1, 1000)),
            GenusValue::between(rat(1, 1000), rat(1, 100)),
            GenusValue::at_least(rat(1, 1000)),
            GenusValue::exact(rat(1, 10)),
            GenusValue::at_least(rat(1, 10)),
        ];
        for a in &values {
            for b in &values {
                if a.is_subset_of(b) {
                    assert!(classify(&mc, a, t).forms.is_subset(&classify(&mc, b, t).forms));
                }
            }
        }
    }

    #[test]
    fn vanishing_examples() {
        use VanishingCase::*;
        assert_eq!(vanishing_classify(&KnotSpec::Unknot).unwrap(), [BoundsDisk].into());
        assert_eq!(vanishing_classify(&KnotSpec::surgery(KnotSpec::Unknot, 5, 2)).unwrap(), [LensCore].into());
        let rp = KnotSpec::surgery(KnotSpec::Unknot, 2, 1);
        let sum = KnotSpec::connect_sum(rp.clone(), rp);
        assert_eq!(vanishing_classify(&sum).unwrap(), [MoebiusSeifertFiber].into());
        assert!(matches!(vanishing_classify(&KnotSpec::seed(1, false)), Err(Error::NonzeroGenus(_))));
    }
}
