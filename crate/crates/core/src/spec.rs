//! Knot constructions.
//!
//! [`KnotSpec`] prints in the same syntax the DSL parser reads, so a spec can
//! be written out and read back unchanged.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::torus_bundle::UnimodularMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    S3,
    /// Some other integral homology sphere.
    HomologySphere,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KnotSpec {
    Unknot,
    /// A knot of known Seifert genus in a homology sphere.
    Seed { genus: u32, ambient: Ambient, hyperbolic: bool },
    /// The `(u, v)` torus knot in the 3-sphere.
    TorusKnot { u: i64, v: i64 },
    /// Core of `m/n` surgery, `m > 0`.
    Surgery { base: Box<KnotSpec>, m: u64, n: i64 },
    ConnectSum(Box<KnotSpec>, Box<KnotSpec>),
    /// `(p, q)`-cable; `q` is the winding number.
    Cable { base: Box<KnotSpec>, p: i64, q: i64 },
    Satellite { base: Box<KnotSpec>, winding: u64 },
    /// Curve in a torus-bundle fiber representing the first basis vector.
    TorusBundleFiber(UnimodularMatrix),
}

impl KnotSpec {
    pub fn seed(genus: u32, hyperbolic: bool) -> Self {
        KnotSpec::Seed { genus, ambient: Ambient::S3, hyperbolic }
    }

    pub fn surgery(base: KnotSpec, m: u64, n: i64) -> Self {
        KnotSpec::Surgery { base: Box::new(base), m, n }
    }

    pub fn connect_sum(a: KnotSpec, b: KnotSpec) -> Self {
        KnotSpec::ConnectSum(Box::new(a), Box::new(b))
    }

    pub fn cable(base: KnotSpec, p: i64, q: i64) -> Self {
        KnotSpec::Cable { base: Box::new(base), p, q }
    }

    pub fn satellite(base: KnotSpec, winding: u64) -> Self {
        KnotSpec::Satellite { base: Box::new(base), winding }
    }

    /// Whether the knot lives in an integral homology sphere.
    pub fn in_homology_sphere(&self) -> bool {
        match self {
            KnotSpec::Unknot | KnotSpec::Seed { .. } | KnotSpec::TorusKnot { .. } => true,
            KnotSpec::ConnectSum(a, b) => a.in_homology_sphere() && b.in_homology_sphere(),
            _ => false,
        }
    }

    /// Checks the structural invariants of every node.
    pub fn validate(&self) -> Result<()> {
        match self {
            KnotSpec::Unknot | KnotSpec::Seed { .. } => Ok(()),
            KnotSpec::TorusKnot { u, v } => {
                if *u < 2 || *v < 2 || u.gcd(v) != 1 {
                    return Err(Error::InvalidSpec(format!(
                        "torus knot ({u},{v}) needs coprime u, v > 1"
                    )));
                }
                Ok(())
            }
            KnotSpec::Surgery { base, m, n } => {
                if *m == 0 || (*m as i64).gcd(n) != 1 {
                    return Err(Error::InvalidSpec(format!(
                        "surgery slope {m}/{n} needs m > 0 coprime to n"
                    )));
                }
                base.validate()
            }
            KnotSpec::ConnectSum(a, b) => {
                a.validate()?;
                b.validate()
            }
            KnotSpec::Cable { base, p, q } => {
                if *q < 1 || p.gcd(q) != 1 {
                    return Err(Error::InvalidSpec(format!(
                        "cable ({p},{q}) needs q >= 1 and gcd(p,q) = 1"
                    )));
                }
                base.validate()
            }
            KnotSpec::Satellite { base, winding } => {
                if *winding == 0 {
                    return Err(Error::InvalidSpec("satellite winding must be positive".into()));
                }
                base.validate()
            }
            KnotSpec::TorusBundleFiber(a) => {
                if a.det() != 1 {
                    return Err(Error::NotUnimodular(a.det()));
                }
                if a.is_identity() {
                    return Err(Error::IdentityMonodromy);
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Unknot => f.write_str("unknot"),
            KnotSpec::Seed { genus, hyperbolic, .. } => {
                write!(f, "s3knot(genus={genus}")?;
                if *hyperbolic {
                    f.write_str(", hyperbolic")?;
                }
                f.write_str(")")
            }
            KnotSpec::TorusKnot { u, v } => write!(f, "torusknot({u}, {v})"),
            KnotSpec::Surgery { base, m, n } => write!(f, "surgery({base}, {m}/{n})"),
            KnotSpec::ConnectSum(a, b) => write!(f, "connectsum({a}, {b})"),
            KnotSpec::Cable { base, p, q } => write!(f, "cable({base}, {p}, {q})"),
            KnotSpec::Satellite { base, winding } => write!(f, "satellite({base}, {winding})"),
            KnotSpec::TorusBundleFiber(a) => write!(f, "torusbundle({a})"),
        }
    }
}
